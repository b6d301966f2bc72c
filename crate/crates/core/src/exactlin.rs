//! Exact rational and integer linear algebra.
//!
//! Every number in the crate is a [`Rat`] (an arbitrary-precision rational in
//! lowest terms). Lattice data is carried as integer-valued [`RatVector`]s and
//! [`RatMatrix`]es; the integer algorithms here (Hermite normal form, primitive
//! representatives, quotient coordinates) convert to [`BigInt`] internally.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rat(text: &str) -> Option<Rat> {
    let text = text.trim();
    match text.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().ok()?;
            let den: BigInt = den.trim().parse().ok()?;
            if den.is_zero() {
                return None;
            }
            Some(Rat::new(num, den))
        }
        None => text.parse::<BigInt>().ok().map(Rat::from_integer),
    }
}

pub(crate) fn gcd_all<'a>(values: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    values.into_iter().fold(BigInt::zero(), |acc, v| acc.gcd(v))
}

/// A vector over the rationals with fixed dimension.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RatVector(Vec<Rat>);

impl RatVector {
    pub fn new(entries: Vec<Rat>) -> Self {
        RatVector(entries)
    }

    pub fn zeros(dim: usize) -> Self {
        RatVector(vec![Rat::zero(); dim])
    }

    pub fn unit(dim: usize, index: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[index] = Rat::one();
        v
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        RatVector(entries.iter().map(|&e| rat(e)).collect())
    }

    pub fn from_bigints(entries: &[BigInt]) -> Self {
        RatVector(entries.iter().cloned().map(Rat::from_integer).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Rat] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Rat> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rat> {
        self.0.iter()
    }

    pub fn dot(&self, other: &RatVector) -> Rat {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).fold(Rat::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn scale(&self, factor: &Rat) -> RatVector {
        RatVector(self.0.iter().map(|e| e * factor).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_integer(&self) -> bool {
        self.0.iter().all(|e| e.is_integer())
    }

    /// Integer entries, or `None` if some entry is fractional.
    pub fn to_bigints(&self) -> Option<Vec<BigInt>> {
        self.0.iter().map(|e| e.is_integer().then(|| e.to_integer())).collect()
    }

    /// Smallest positive multiple with integer entries.
    pub fn clear_denominators(&self) -> Vec<BigInt> {
        let lcm = self.0.iter().fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
        self.0
            .iter()
            .map(|e| (e * Rat::from_integer(lcm.clone())).to_integer())
            .collect()
    }

    pub fn concat(&self, tail: &[Rat]) -> RatVector {
        let mut entries = self.0.clone();
        entries.extend_from_slice(tail);
        RatVector(entries)
    }
}

impl Index<usize> for RatVector {
    type Output = Rat;
    fn index(&self, index: usize) -> &Rat {
        &self.0[index]
    }
}

impl Add for &RatVector {
    type Output = RatVector;
    fn add(self, rhs: &RatVector) -> RatVector {
        debug_assert_eq!(self.len(), rhs.len());
        RatVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RatVector {
    type Output = RatVector;
    fn sub(self, rhs: &RatVector) -> RatVector {
        debug_assert_eq!(self.len(), rhs.len());
        RatVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RatVector {
    type Output = RatVector;
    fn neg(self) -> RatVector {
        RatVector(self.0.iter().map(|a| -a).collect())
    }
}

impl FromIterator<Rat> for RatVector {
    fn from_iter<I: IntoIterator<Item = Rat>>(iter: I) -> Self {
        RatVector(iter.into_iter().collect())
    }
}

impl fmt::Display for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    /// Builds a matrix from rows; `cols` fixes the width when `rows` is empty.
    pub fn from_rows(cols: usize, rows: &[RatVector]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row.iter().cloned());
        }
        Ok(RatMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Convenience constructor for integer literals. Panics on ragged input.
    pub fn from_int_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let rows: Vec<RatVector> = rows.iter().map(|r| RatVector::from_ints(r.as_ref())).collect();
        Self::from_rows(cols, &rows).expect("ragged integer matrix")
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[RatVector]) -> Result<Self> {
        Ok(Self::from_rows(rows, columns)?.transpose())
    }

    pub(crate) fn from_bigint_rows(cols: usize, rows: &[Vec<BigInt>]) -> Self {
        let rows: Vec<RatVector> = rows.iter().map(|r| RatVector::from_bigints(r)).collect();
        Self::from_rows(cols, &rows).expect("consistent integer rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rat) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> RatVector {
        RatVector(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn row_vectors(&self) -> Vec<RatVector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn column(&self, j: usize) -> RatVector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn column_vectors(&self) -> Vec<RatVector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = RatMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * out.cols + j;
                    out.data[idx] += a * rhs.get(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &RatVector) -> Result<RatVector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.data[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .zip(v.iter())
                    .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn is_integer(&self) -> bool {
        self.data.iter().all(|e| e.is_integer())
    }

    pub(crate) fn to_bigint_rows(&self) -> Result<Vec<Vec<BigInt>>> {
        (0..self.rows)
            .map(|i| self.row(i).to_bigints().ok_or(Error::NonInteger))
            .collect()
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j) - &factor * m.get(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{x : M x = 0}`.
    pub fn kernel(&self) -> Vec<RatVector> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = RatVector::zeros(self.cols);
                v.0[f] = Rat::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v.0[p] = -r.get(row, f).clone();
                }
                v
            })
            .collect()
    }

    pub fn determinant(&self) -> Option<Rat> {
        if self.rows != self.cols {
            return None;
        }
        let mut m = self.clone();
        let mut det = Rat::one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                return Some(Rat::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det *= &pivot;
            for i in c + 1..m.rows {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c) / &pivot;
                for j in c..m.cols {
                    let v = m.get(i, j) - &factor * m.get(c, j);
                    m.set(i, j, v);
                }
            }
        }
        Some(det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn select_rows(&self, range: std::ops::Range<usize>) -> RatMatrix {
        let rows: Vec<RatVector> = range.map(|i| self.row(i)).collect();
        RatMatrix::from_rows(self.cols, &rows).expect("row width")
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{}", self.row(i))?;
        }
        write!(f, "]")
    }
}

fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    (e.gcd, e.x, e.y)
}

/// Row-style Hermite normal form on integer rows, in place. Returns the
/// unimodular transform `U` with `H = U * M`.
fn hnf_rows(h: &mut [Vec<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    let m = h.len();
    let mut u: Vec<Vec<BigInt>> = (0..m)
        .map(|i| (0..m).map(|j| BigInt::from((i == j) as i64)).collect())
        .collect();

    fn combine(rows: &mut [Vec<BigInt>], p: usize, r: usize, coeffs: [&BigInt; 4]) {
        let [x, y, z, w] = coeffs;
        for j in 0..rows[p].len() {
            let a = &rows[p][j];
            let b = &rows[r][j];
            let new_p = x * a + y * b;
            let new_r = z * a + w * b;
            rows[p][j] = new_p;
            rows[r][j] = new_r;
        }
    }

    let mut p = 0;
    for c in 0..cols {
        if p == m {
            break;
        }
        for r in p + 1..m {
            if h[r][c].is_zero() {
                continue;
            }
            let a = h[p][c].clone();
            let b = h[r][c].clone();
            let (g, x, y) = ext_gcd(&a, &b);
            let z = -(&b / &g);
            let w = &a / &g;
            combine(h, p, r, [&x, &y, &z, &w]);
            combine(&mut u, p, r, [&x, &y, &z, &w]);
        }
        if h[p][c].is_zero() {
            continue;
        }
        if h[p][c].is_negative() {
            for v in h[p].iter_mut() {
                *v = -&*v;
            }
            for v in u[p].iter_mut() {
                *v = -&*v;
            }
        }
        for r in 0..p {
            let q = h[r][c].div_floor(&h[p][c]);
            if q.is_zero() {
                continue;
            }
            let (top, rest) = h.split_at_mut(p);
            for (x, y) in top[r].iter_mut().zip(&rest[0]) {
                *x -= &q * y;
            }
            let (top, rest) = u.split_at_mut(p);
            for (x, y) in top[r].iter_mut().zip(&rest[0]) {
                *x -= &q * y;
            }
        }
        p += 1;
    }
    u
}

/// Row Hermite normal form: returns `(H, U)` with `H = U * M`, `U` unimodular,
/// `H` in row echelon form with positive pivots and entries above each pivot
/// reduced into `[0, pivot)`.
pub fn hnf(m: &RatMatrix) -> Result<(RatMatrix, RatMatrix)> {
    let mut rows = m.to_bigint_rows()?;
    let u = hnf_rows(&mut rows, m.cols());
    Ok((
        RatMatrix::from_bigint_rows(m.cols(), &rows),
        RatMatrix::from_bigint_rows(m.rows(), &u),
    ))
}

/// The shortest integer vector on the ray through `v`.
pub fn primitive(v: &RatVector) -> Result<RatVector> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let ints = v.clear_denominators();
    let g = gcd_all(&ints);
    Ok(ints.iter().map(|e| Rat::from_integer(e / &g)).collect())
}

/// Primitive representative of the line through `v`, first nonzero entry positive.
pub fn primitive_line(v: &RatVector) -> Result<RatVector> {
    let p = primitive(v)?;
    match p.iter().find(|e| !e.is_zero()) {
        Some(first) if first.is_negative() => Ok(-&p),
        _ => Ok(p),
    }
}

pub(crate) fn primitive_ints(v: &mut [BigInt]) {
    let g = gcd_all(v.iter());
    if g.is_zero() || g.is_one() {
        return;
    }
    for e in v.iter_mut() {
        *e /= &g;
    }
}

/// Some solution of `A x = b`, or `None` if the system is inconsistent.
/// Free variables are set to zero.
pub fn solve_rational(a: &RatMatrix, b: &RatVector) -> Option<RatVector> {
    if b.len() != a.rows() {
        return None;
    }
    let mut aug = RatMatrix::zeros(a.rows(), a.cols() + 1);
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, a.cols(), b[i].clone());
    }
    let (r, pivots) = aug.rref();
    if pivots.last() == Some(&a.cols()) {
        return None;
    }
    let mut x = RatVector::zeros(a.cols());
    for (row, &p) in pivots.iter().enumerate() {
        x.0[p] = r.get(row, a.cols()).clone();
    }
    Some(x)
}

/// Canonical basis of the span of `vectors`: reduced echelon rows, each scaled
/// to a primitive integer vector.
pub fn canonical_basis(dim: usize, vectors: &[RatVector]) -> Vec<RatVector> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = RatMatrix::from_rows(dim, vectors).expect("basis vectors share dimension");
    let (r, pivots) = m.rref();
    (0..pivots.len())
        .map(|i| primitive(&r.row(i)).expect("nonzero echelon row"))
        .collect()
}

/// Orthogonal projection onto the complement of a subspace.
#[derive(Clone, Debug)]
pub struct Projector {
    basis: Vec<RatVector>,
    norms: Vec<Rat>,
}

impl Projector {
    pub fn new(spanning: &[RatVector]) -> Self {
        let mut basis: Vec<RatVector> = Vec::new();
        let mut norms: Vec<Rat> = Vec::new();
        for v in spanning {
            let mut w = v.clone();
            for (b, n) in basis.iter().zip(&norms) {
                let c = w.dot(b) / n;
                if !c.is_zero() {
                    w = &w - &b.scale(&c);
                }
            }
            if !w.is_zero() {
                norms.push(w.dot(&w));
                basis.push(w);
            }
        }
        Projector { basis, norms }
    }

    pub fn is_trivial(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn project(&self, v: &RatVector) -> RatVector {
        let mut w = v.clone();
        for (b, n) in self.basis.iter().zip(&self.norms) {
            let c = v.dot(b) / n;
            if !c.is_zero() {
                w = &w - &b.scale(&c);
            }
        }
        w
    }
}

/// Lattice coordinates for the quotient by a subtorus.
///
/// `weights` is the `n x d` matrix whose columns span the cocharacter lattice
/// of the subtorus (saturated if the input was not). `alpha` is the quotient
/// map onto `Z^(n-d)`, in Hermite normal form; `section` is an integer right
/// inverse of `alpha`; `lift` is an integer right inverse of `weights^T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientCoords {
    pub weights: RatMatrix,
    pub alpha: RatMatrix,
    pub section: RatMatrix,
    pub lift: RatMatrix,
    pub warning: Option<String>,
}

/// Computes quotient coordinates for the sublattice spanned by the columns of `s`.
pub fn quotient_coords(s: &RatMatrix) -> Result<QuotientCoords> {
    let n = s.rows();
    let d = s.cols();
    if !s.is_integer() {
        return Err(Error::NonInteger);
    }
    let rank = s.rank();
    if rank != d {
        return Err(Error::RankDeficient { rank, expected: d });
    }

    let mut h = s.to_bigint_rows()?;
    let u = hnf_rows(&mut h, d);
    let index = (0..d).fold(BigInt::one(), |acc, i| acc * &h[i][i]);

    let mut kernel_rows: Vec<Vec<BigInt>> = u[d..].to_vec();
    hnf_rows(&mut kernel_rows, n);
    let alpha = RatMatrix::from_bigint_rows(n, &kernel_rows);

    // Right inverse of alpha, and a basis of ker(alpha) in Z^n.
    let mut at = alpha.transpose().to_bigint_rows()?;
    let v = hnf_rows(&mut at, n - d);
    let section = RatMatrix::from_bigint_rows(n, &v[..n - d]).transpose();

    let (weights, warning) = if index.is_one() {
        (s.clone(), None)
    } else {
        let saturated = saturate(s, &v[n - d..])?;
        let msg = format!(
            "subtorus weights span a sublattice of index {index}; using its saturation {}",
            saturated
        );
        log::warn!("{msg}");
        (saturated, Some(msg))
    };

    let mut hw = weights.to_bigint_rows()?;
    let uw = hnf_rows(&mut hw, d);
    let lift = RatMatrix::from_bigint_rows(n, &uw[..d]).transpose();

    Ok(QuotientCoords {
        weights,
        alpha,
        section,
        lift,
        warning,
    })
}

fn saturate(s: &RatMatrix, kernel_basis: &[Vec<BigInt>]) -> Result<RatMatrix> {
    let n = s.rows();
    let d = s.cols();
    if d == 1 {
        let col = primitive(&s.column(0))?;
        return RatMatrix::from_columns(n, &[col]);
    }
    let mut rows = kernel_basis.to_vec();
    hnf_rows(&mut rows, n);
    Ok(RatMatrix::from_bigint_rows(n, &rows).transpose())
}

/// gcd of the maximal minors of a full-column-rank integer matrix.
pub fn maximal_minor_gcd(m: &RatMatrix) -> Result<BigInt> {
    let mut rows = m.to_bigint_rows()?;
    hnf_rows(&mut rows, m.cols());
    let k = m.cols().min(m.rows());
    Ok((0..k).fold(BigInt::one(), |acc, i| acc * &rows[i][i]).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(v: &[i64]) -> RatVector {
        RatVector::from_ints(v)
    }

    #[test]
    fn hnf_identity_and_zero() {
        let id = RatMatrix::identity(3);
        let (h, u) = hnf(&id).unwrap();
        assert_eq!(h, id);
        assert_eq!(u, id);

        let z = RatMatrix::zeros(2, 3);
        let (h, u) = hnf(&z).unwrap();
        assert_eq!(h, z);
        assert_eq!(u, RatMatrix::identity(2));
    }

    #[test]
    fn hnf_rejects_fractions() {
        let mut m = RatMatrix::identity(2);
        m.set(0, 1, ratio(1, 2));
        assert_eq!(hnf(&m), Err(Error::NonInteger));
    }

    #[test]
    fn hnf_small_example() {
        let m = RatMatrix::from_int_rows(&[[2, 4], [1, 3]]);
        let (h, u) = hnf(&m).unwrap();
        assert_eq!(u.mul(&m).unwrap(), h);
        assert!(u.determinant().unwrap().abs().is_one());
        assert!(h.get(1, 0).is_zero());
        assert!(h.get(0, 0).is_positive() && h.get(1, 1).is_positive());
        // det(M) = 2 so the pivots multiply to 2; reduced form is unique.
        assert_eq!(h, RatMatrix::from_int_rows(&[[1, 1], [0, 2]]));
    }

    #[test]
    fn primitive_examples() {
        let v = RatVector::new(vec![ratio(3, 2), ratio(3, 2), rat(3)]);
        assert_eq!(primitive(&v).unwrap(), iv(&[1, 1, 2]));
        let v = RatVector::new(vec![ratio(3, 4), ratio(-1, 4), ratio(1, 4), ratio(1, 4)]);
        assert_eq!(primitive(&v).unwrap(), iv(&[3, -1, 1, 1]));
        assert_eq!(primitive(&iv(&[0, -2])).unwrap(), iv(&[0, -1]));
        assert_eq!(primitive(&iv(&[0, 0])), Err(Error::ZeroVector));
        assert_eq!(primitive_line(&iv(&[0, -2, 4])).unwrap(), iv(&[0, 1, -2]));
    }

    #[test]
    fn solve_examples() {
        let x = solve_rational(&RatMatrix::identity(2), &iv(&[1, 2])).unwrap();
        assert_eq!(x, iv(&[1, 2]));

        let a = RatMatrix::from_int_rows(&[[1, 1, 2]]);
        let x = solve_rational(&a, &iv(&[3])).unwrap();
        assert_eq!(a.apply(&x).unwrap(), iv(&[3]));
        assert_eq!(x, iv(&[3, 0, 0]));

        let a = RatMatrix::from_int_rows(&[[1, 0], [1, 0]]);
        assert!(solve_rational(&a, &iv(&[1, 2])).is_none());
    }

    #[test]
    fn quotient_coords_postconditions() {
        let s = RatMatrix::from_int_rows(&[[1], [1], [-1], [-1]]);
        let q = quotient_coords(&s).unwrap();
        assert!(q.warning.is_none());
        assert!(q.alpha.mul(&s).unwrap().rank() == 0);
        assert_eq!(q.alpha.mul(&q.section).unwrap(), RatMatrix::identity(3));
        assert_eq!(q.weights.transpose().mul(&q.lift).unwrap(), RatMatrix::identity(1));
        assert!(maximal_minor_gcd(&q.alpha.transpose()).unwrap().is_one());
    }

    #[test]
    fn quotient_coords_coordinate_subtorus() {
        let s = RatMatrix::from_int_rows(&[[1, 0], [0, 1], [0, 0], [0, 0]]);
        let q = quotient_coords(&s).unwrap();
        assert_eq!(q.alpha, RatMatrix::from_int_rows(&[[0, 0, 1, 0], [0, 0, 0, 1]]));
    }

    #[test]
    fn quotient_coords_saturates() {
        let s = RatMatrix::from_int_rows(&[[2], [2]]);
        let q = quotient_coords(&s).unwrap();
        assert!(q.warning.is_some());
        assert_eq!(q.weights, RatMatrix::from_int_rows(&[[1], [1]]));
        assert_eq!(q.alpha, RatMatrix::from_int_rows(&[[1, -1]]));
    }

    #[test]
    fn quotient_coords_rank_deficient() {
        let s = RatMatrix::from_int_rows(&[[1, 2], [1, 2], [0, 0]]);
        assert!(matches!(quotient_coords(&s), Err(Error::RankDeficient { .. })));
    }

    #[test]
    fn parse_rationals() {
        assert_eq!(parse_rat("3/6"), Some(ratio(1, 2)));
        assert_eq!(parse_rat("-4"), Some(rat(-4)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(parse_rat("x"), None);
    }

    #[test]
    fn projector_removes_component() {
        let p = Projector::new(&[iv(&[1, 1, -1, -1])]);
        let v = p.project(&iv(&[1, 0, 0, 0]));
        assert_eq!(primitive(&v).unwrap(), iv(&[3, -1, 1, 1]));
    }
}
