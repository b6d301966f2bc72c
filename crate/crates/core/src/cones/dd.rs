//! Integer double description: generators of `{x : A x >= 0, E x = 0}`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::exactlin::primitive_ints;

type IntVec = Vec<BigInt>;

#[derive(Clone, Debug, PartialEq, Eq)]
struct ZeroSet(Vec<u64>);

impl ZeroSet {
    fn with_capacity(bits: usize) -> Self {
        ZeroSet(vec![0; bits.div_ceil(64).max(1)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn intersection(&self, other: &ZeroSet) -> ZeroSet {
        ZeroSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_subset(&self, other: &ZeroSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

#[derive(Clone, Debug)]
struct Ray {
    v: IntVec,
    zeros: ZeroSet,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
}

/// `lhs * a - rhs * b`, made primitive.
fn combine(lhs: &BigInt, a: &[BigInt], rhs: &BigInt, b: &[BigInt]) -> IntVec {
    let mut v: IntVec = a.iter().zip(b).map(|(x, y)| lhs * x - rhs * y).collect();
    primitive_ints(&mut v);
    v
}

/// Returns `(rays, lines)` generating the cone cut out by `ineqs` (`a.x >= 0`)
/// and `eqs` (`e.x = 0`) in dimension `dim`. Rays are extreme and pairwise
/// distinct modulo the lines; neither list is canonicalized.
pub(crate) fn generators(dim: usize, ineqs: &[IntVec], eqs: &[IntVec]) -> (Vec<IntVec>, Vec<IntVec>) {
    let total = eqs.len() + ineqs.len();
    let mut lines: Vec<IntVec> = (0..dim)
        .map(|i| (0..dim).map(|j| BigInt::from((i == j) as i64)).collect())
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    let constraints = eqs.iter().map(|e| (e, true)).chain(ineqs.iter().map(|a| (a, false)));

    for (index, (a, is_eq)) in constraints.enumerate() {
        if a.iter().all(Zero::is_zero) {
            for r in rays.iter_mut() {
                r.zeros.insert(index);
            }
            continue;
        }

        if let Some(pos) = lines.iter().position(|l| !dot(a, l).is_zero()) {
            let mut pivot = lines.swap_remove(pos);
            let mut ap = dot(a, &pivot);
            if ap.is_negative() {
                pivot.iter_mut().for_each(|x| *x = -&*x);
                ap = -ap;
            }
            for l in lines.iter_mut() {
                let al = dot(a, l);
                if !al.is_zero() {
                    *l = combine(&ap, l, &al, &pivot);
                }
            }
            for r in rays.iter_mut() {
                let ar = dot(a, &r.v);
                if !ar.is_zero() {
                    r.v = combine(&ap, &r.v, &ar, &pivot);
                }
                r.zeros.insert(index);
            }
            if !is_eq {
                // The former line is tight on every earlier constraint.
                let mut zeros = ZeroSet::with_capacity(total);
                for k in 0..index {
                    zeros.insert(k);
                }
                primitive_ints(&mut pivot);
                rays.push(Ray { v: pivot, zeros });
            }
            continue;
        }

        let values: Vec<BigInt> = rays.iter().map(|r| dot(a, &r.v)).collect();
        let mut next: Vec<Ray> = Vec::new();
        let positive: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let negative: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();

        for p in &positive {
            for q in &negative {
                let common = rays[*p].zeros.intersection(&rays[*q].zeros);
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(k, r)| k == *p || k == *q || !common.is_subset(&r.zeros));
                if !adjacent {
                    continue;
                }
                let v = combine(&values[*p], &rays[*q].v, &values[*q], &rays[*p].v);
                let mut zeros = common;
                zeros.insert(index);
                next.push(Ray { v, zeros });
            }
        }
        for (i, mut r) in rays.into_iter().enumerate() {
            if values[i].is_zero() {
                r.zeros.insert(index);
                next.push(r);
            } else if values[i].is_positive() && !is_eq {
                next.push(r);
            }
        }
        rays = next;
    }

    (rays.into_iter().map(|r| r.v).collect(), lines)
}
