//! Rational polyhedral cones carried in both generator and inequality form.
//!
//! A [`Cone`] is always canonical: rays are primitive integer vectors taken
//! modulo the lineality space (orthogonal representatives), facet normals are
//! primitive integer vectors modulo the equations, and both bases of linear
//! subspaces are reduced echelon rows scaled to primitive integers. Structural
//! equality of two `Cone`s is therefore set equality.

mod dd;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{canonical_basis, primitive, Projector, RatMatrix, RatVector};

/// Where a point sits relative to a cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Outside,
    Boundary,
    RelativeInterior,
}

/// Direction of a linear map applied to a cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapDirection {
    Image,
    Preimage,
}

/// Input to [`dd_convert`].
#[derive(Clone, Debug)]
pub enum Description {
    Generators {
        rays: Vec<RatVector>,
        lines: Vec<RatVector>,
    },
    Inequalities {
        ineqs: Vec<RatVector>,
        eqs: Vec<RatVector>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cone {
    dim: usize,
    rays: Vec<RatVector>,
    lineality: Vec<RatVector>,
    facets: Vec<RatVector>,
    equations: Vec<RatVector>,
}

fn check_dims(dim: usize, vectors: &[RatVector]) -> Result<()> {
    match vectors.iter().find(|v| v.len() != dim) {
        Some(v) => Err(Error::DimensionMismatch {
            expected: dim,
            found: v.len(),
        }),
        None => Ok(()),
    }
}

fn to_ints(vectors: &[RatVector]) -> Vec<Vec<BigInt>> {
    vectors.iter().map(RatVector::clear_denominators).collect()
}

fn from_ints(vectors: &[Vec<BigInt>]) -> Vec<RatVector> {
    vectors.iter().map(|v| RatVector::from_bigints(v)).collect()
}

/// Canonical `(generators, subspace basis)` from raw DD output.
fn canonical_pair(dim: usize, gens: Vec<Vec<BigInt>>, lines: Vec<Vec<BigInt>>) -> (Vec<RatVector>, Vec<RatVector>) {
    let basis = canonical_basis(dim, &from_ints(&lines));
    let projector = Projector::new(&basis);
    let mut out: Vec<RatVector> = from_ints(&gens)
        .iter()
        .map(|g| projector.project(g))
        .filter(|g| !g.is_zero())
        .map(|g| primitive(&g).expect("nonzero"))
        .collect();
    out.sort();
    out.dedup();
    (out, basis)
}

/// Converts between the two descriptions of a cone.
pub fn dd_convert(dim: usize, description: Description) -> Result<Cone> {
    match description {
        Description::Generators { rays, lines } => Cone::from_generators(dim, &rays, &lines),
        Description::Inequalities { ineqs, eqs } => Cone::from_inequalities(dim, &ineqs, &eqs),
    }
}

impl Cone {
    pub fn from_generators(dim: usize, rays: &[RatVector], lines: &[RatVector]) -> Result<Cone> {
        check_dims(dim, rays)?;
        check_dims(dim, lines)?;
        let (facets, eqs) = dd::generators(dim, &to_ints(rays), &to_ints(lines));
        let (rays, lines) = dd::generators(dim, &facets, &eqs);
        Ok(Self::assemble(dim, rays, lines, facets, eqs))
    }

    pub fn from_inequalities(dim: usize, ineqs: &[RatVector], eqs: &[RatVector]) -> Result<Cone> {
        check_dims(dim, ineqs)?;
        check_dims(dim, eqs)?;
        let (rays, lines) = dd::generators(dim, &to_ints(ineqs), &to_ints(eqs));
        let (facets, eqs) = dd::generators(dim, &rays, &lines);
        Ok(Self::assemble(dim, rays, lines, facets, eqs))
    }

    fn assemble(
        dim: usize,
        rays: Vec<Vec<BigInt>>,
        lines: Vec<Vec<BigInt>>,
        facets: Vec<Vec<BigInt>>,
        eqs: Vec<Vec<BigInt>>,
    ) -> Cone {
        let (rays, lineality) = canonical_pair(dim, rays, lines);
        let (facets, equations) = canonical_pair(dim, facets, eqs);
        Cone {
            dim,
            rays,
            lineality,
            facets,
            equations,
        }
    }

    /// The cone `{0}`.
    pub fn zero(dim: usize) -> Cone {
        Cone::from_generators(dim, &[], &[]).expect("consistent dimensions")
    }

    /// The whole space.
    pub fn full(dim: usize) -> Cone {
        let lines: Vec<RatVector> = (0..dim).map(|i| RatVector::unit(dim, i)).collect();
        Cone::from_generators(dim, &[], &lines).expect("consistent dimensions")
    }

    /// The nonnegative orthant.
    pub fn orthant(dim: usize) -> Cone {
        let rays: Vec<RatVector> = (0..dim).map(|i| RatVector::unit(dim, i)).collect();
        Cone::from_generators(dim, &rays, &[]).expect("consistent dimensions")
    }

    /// Ambient dimension.
    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the linear span.
    pub fn dim(&self) -> usize {
        self.dim - self.equations.len()
    }

    pub fn rays(&self) -> &[RatVector] {
        &self.rays
    }

    pub fn lineality(&self) -> &[RatVector] {
        &self.lineality
    }

    pub fn facets(&self) -> &[RatVector] {
        &self.facets
    }

    pub fn equations(&self) -> &[RatVector] {
        &self.equations
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.equations.is_empty()
    }

    pub fn is_linear_subspace(&self) -> bool {
        self.rays.is_empty()
    }

    /// `{m : <m, c> >= 0 for all c in self}`.
    pub fn dual(&self) -> Cone {
        Cone {
            dim: self.dim,
            rays: self.facets.clone(),
            lineality: self.equations.clone(),
            facets: self.rays.clone(),
            equations: self.lineality.clone(),
        }
    }

    pub fn intersect(&self, other: &Cone) -> Result<Cone> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        if self.contains(other) {
            return Ok(other.clone());
        }
        if other.contains(self) {
            return Ok(self.clone());
        }
        let ineqs: Vec<RatVector> = self.facets.iter().chain(&other.facets).cloned().collect();
        let eqs: Vec<RatVector> = self.equations.iter().chain(&other.equations).cloned().collect();
        Cone::from_inequalities(self.dim, &ineqs, &eqs)
    }

    /// Image `M(C)` of the cone.
    pub fn image(&self, m: &RatMatrix) -> Result<Cone> {
        if m.cols() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: m.cols(),
                found: self.dim,
            });
        }
        let rays: Vec<RatVector> = self.rays.iter().map(|r| m.apply(r)).collect::<Result<_>>()?;
        let lines: Vec<RatVector> = self.lineality.iter().map(|l| m.apply(l)).collect::<Result<_>>()?;
        Cone::from_generators(m.rows(), &rays, &lines)
    }

    /// Preimage `{x : M x in C}`.
    pub fn preimage(&self, m: &RatMatrix) -> Result<Cone> {
        if m.rows() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: m.rows(),
                found: self.dim,
            });
        }
        let mt = m.transpose();
        let ineqs: Vec<RatVector> = self.facets.iter().map(|f| mt.apply(f)).collect::<Result<_>>()?;
        let eqs: Vec<RatVector> = self.equations.iter().map(|e| mt.apply(e)).collect::<Result<_>>()?;
        Cone::from_inequalities(m.cols(), &ineqs, &eqs)
    }

    pub fn map_cone(&self, m: &RatMatrix, direction: MapDirection) -> Result<Cone> {
        match direction {
            MapDirection::Image => self.image(m),
            MapDirection::Preimage => self.preimage(m),
        }
    }

    pub fn contains_point(&self, v: &RatVector) -> Result<Membership> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        if self.equations.iter().any(|e| !e.dot(v).is_zero()) {
            return Ok(Membership::Outside);
        }
        let mut boundary = false;
        for f in &self.facets {
            let value = f.dot(v);
            if value.is_negative() {
                return Ok(Membership::Outside);
            }
            boundary |= value.is_zero();
        }
        Ok(if boundary {
            Membership::Boundary
        } else {
            Membership::RelativeInterior
        })
    }

    /// Membership test that assumes matching dimensions.
    pub fn contains_vector(&self, v: &RatVector) -> bool {
        self.equations.iter().all(|e| e.dot(v).is_zero()) && self.facets.iter().all(|f| !f.dot(v).is_negative())
    }

    fn contains_line(&self, v: &RatVector) -> bool {
        self.equations.iter().all(|e| e.dot(v).is_zero()) && self.facets.iter().all(|f| f.dot(v).is_zero())
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Cone) -> bool {
        self.dim == other.dim
            && other.rays.iter().all(|r| self.contains_vector(r))
            && other.lineality.iter().all(|l| self.contains_line(l))
    }

    /// Sum of the canonical rays; lies in the relative interior.
    pub fn relint_point(&self) -> RatVector {
        self.rays.iter().fold(RatVector::zeros(self.dim), |acc, r| &acc + r)
    }

    /// Ray indices tight on each facet.
    fn facet_incidence(&self) -> Vec<BTreeSet<usize>> {
        self.facets
            .iter()
            .map(|f| {
                (0..self.rays.len())
                    .filter(|&i| f.dot(&self.rays[i]).is_zero())
                    .collect()
            })
            .collect()
    }

    fn face_from_rays(&self, indices: &BTreeSet<usize>) -> Cone {
        let rays: Vec<RatVector> = indices.iter().map(|&i| self.rays[i].clone()).collect();
        Cone::from_generators(self.dim, &rays, &self.lineality).expect("face dimensions")
    }

    /// All faces, from the minimal face (the lineality space) up to the cone itself.
    pub fn faces(&self) -> Vec<Cone> {
        let full: BTreeSet<usize> = (0..self.rays.len()).collect();
        let mut sets: BTreeSet<BTreeSet<usize>> = BTreeSet::from([full]);
        for facet in self.facet_incidence() {
            let new: Vec<BTreeSet<usize>> = sets.iter().map(|s| s.intersection(&facet).copied().collect()).collect();
            sets.extend(new);
        }
        let mut faces: Vec<Cone> = sets.iter().map(|s| self.face_from_rays(s)).collect();
        faces.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
        faces.dedup();
        faces
    }

    /// Faces of codimension one.
    pub fn facet_cones(&self) -> Vec<Cone> {
        self.facet_incidence().iter().map(|s| self.face_from_rays(s)).collect()
    }

    /// Smallest face containing `v`, which must lie in the cone.
    pub fn minimal_face_containing(&self, v: &RatVector) -> Cone {
        let tight: Vec<&RatVector> = self.facets.iter().filter(|f| f.dot(v).is_zero()).collect();
        let indices: BTreeSet<usize> = (0..self.rays.len())
            .filter(|&i| tight.iter().all(|f| f.dot(&self.rays[i]).is_zero()))
            .collect();
        self.face_from_rays(&indices)
    }

    /// Whether `self` is a face of `other`.
    pub fn is_face_of(&self, other: &Cone) -> bool {
        if !other.contains(self) {
            return false;
        }
        if !other.lineality.iter().all(|l| self.contains_line(l)) {
            return false;
        }
        let p = self.relint_point();
        let tight: Vec<&RatVector> = other.facets.iter().filter(|f| f.dot(&p).is_zero()).collect();
        other
            .rays
            .iter()
            .filter(|r| tight.iter().all(|f| f.dot(r).is_zero()))
            .all(|r| self.contains_vector(r))
    }
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cone<")?;
        for (i, r) in self.rays.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        if !self.lineality.is_empty() {
            write!(f, "; lin ")?;
            for (i, l) in self.lineality.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{l}")?;
            }
        }
        write!(f, ">")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(v: &[i64]) -> RatVector {
        RatVector::from_ints(v)
    }

    #[test]
    fn orthant_from_inequalities() {
        let c = Cone::from_inequalities(2, &[iv(&[1, 0]), iv(&[0, 1])], &[]).unwrap();
        assert_eq!(c.rays(), &[iv(&[0, 1]), iv(&[1, 0])]);
        assert!(c.is_pointed() && c.is_full_dimensional());
    }

    #[test]
    fn generators_to_normals() {
        let c = Cone::from_generators(2, &[iv(&[1, 1]), iv(&[1, -1])], &[]).unwrap();
        assert_eq!(c.facets(), &[iv(&[1, -1]), iv(&[1, 1])]);
    }

    #[test]
    fn no_inequalities_is_full_space() {
        let c = Cone::from_inequalities(2, &[], &[]).unwrap();
        assert!(c.rays().is_empty());
        assert_eq!(c.lineality(), &[iv(&[1, 0]), iv(&[0, 1])]);
        assert_eq!(c, Cone::full(2));
    }

    #[test]
    fn dual_examples() {
        assert_eq!(Cone::orthant(4).dual(), Cone::orthant(4));
        let c = Cone::from_generators(2, &[iv(&[2, 1]), iv(&[1, 2])], &[]).unwrap();
        let expected = Cone::from_generators(2, &[iv(&[2, -1]), iv(&[-1, 2])], &[]).unwrap();
        assert_eq!(c.dual(), expected);
        assert_eq!(Cone::full(3).dual(), Cone::zero(3));
    }

    #[test]
    fn intersect_examples() {
        let c = Cone::orthant(3);
        assert_eq!(c.intersect(&c).unwrap(), c);
        let pos = Cone::from_generators(1, &[iv(&[1])], &[]).unwrap();
        let neg = Cone::from_generators(1, &[iv(&[-1])], &[]).unwrap();
        assert_eq!(pos.intersect(&neg).unwrap(), Cone::zero(1));
        assert!(matches!(
            pos.intersect(&Cone::orthant(2)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn map_examples() {
        let c = Cone::orthant(3);
        assert_eq!(c.image(&RatMatrix::identity(3)).unwrap(), c);
        let beta = RatMatrix::from_int_rows(&[[1, 1, 2]]);
        assert_eq!(c.image(&beta).unwrap(), Cone::orthant(1));
        let alpha = RatMatrix::from_int_rows(&[[1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, -1]]);
        let pre = Cone::zero(3).preimage(&alpha).unwrap();
        assert!(pre.rays().is_empty());
        assert_eq!(pre.lineality(), &[iv(&[1, 1, -1, -1])]);
    }

    #[test]
    fn face_counts() {
        assert_eq!(Cone::orthant(2).faces().len(), 4);
        assert_eq!(Cone::orthant(4).faces().len(), 16);
        let line = Cone::from_generators(2, &[], &[iv(&[1, 1])]).unwrap();
        assert_eq!(line.faces(), vec![line.clone()]);
    }

    #[test]
    fn relint_and_membership() {
        let q = Cone::orthant(2);
        assert_eq!(q.relint_point(), iv(&[1, 1]));
        assert_eq!(q.contains_point(&iv(&[1, 1])).unwrap(), Membership::RelativeInterior);
        assert_eq!(q.contains_point(&iv(&[1, 0])).unwrap(), Membership::Boundary);
        assert_eq!(q.contains_point(&iv(&[-1, 0])).unwrap(), Membership::Outside);
        let ray = Cone::from_generators(3, &[iv(&[1, 1, 2])], &[]).unwrap();
        assert_eq!(ray.relint_point(), iv(&[1, 1, 2]));
        let rhos = [
            iv(&[3, -1, 1, 1]),
            iv(&[1, 1, -1, 3]),
            iv(&[-1, 3, 1, 1]),
            iv(&[1, 1, 3, -1]),
        ];
        let c = Cone::from_generators(4, &rhos, &[]).unwrap();
        let p = c.relint_point();
        assert_eq!(p, iv(&[4, 4, 4, 4]));
        assert_eq!(c.contains_point(&p).unwrap(), Membership::RelativeInterior);
    }

    #[test]
    fn redundant_generators_are_dropped() {
        let c = Cone::from_generators(2, &[iv(&[1, 0]), iv(&[2, 2]), iv(&[0, 3]), iv(&[1, 1])], &[]).unwrap();
        assert_eq!(c.rays(), &[iv(&[0, 1]), iv(&[1, 0])]);
    }

    #[test]
    fn rays_are_taken_modulo_lineality() {
        let a = Cone::from_generators(2, &[iv(&[1, 5])], &[iv(&[0, 1])]).unwrap();
        let b = Cone::from_generators(2, &[iv(&[3, -2])], &[iv(&[0, -2])]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.rays(), &[iv(&[1, 0])]);
    }

    #[test]
    fn face_test() {
        let q = Cone::orthant(3);
        let ray = Cone::from_generators(3, &[iv(&[1, 0, 0])], &[]).unwrap();
        assert!(ray.is_face_of(&q));
        let diag = Cone::from_generators(3, &[iv(&[1, 1, 0])], &[]).unwrap();
        assert!(!diag.is_face_of(&q));
        assert!(Cone::zero(3).is_face_of(&q));
        assert!(q.is_face_of(&q));
    }
}
