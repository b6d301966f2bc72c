//! Fans and quasifans: normal fans, common refinements, preimages and the
//! compatibility/properness predicates for linear maps between fans.

use std::collections::BTreeSet;
use std::fmt;

use crate::cones::{Cone, Membership};
use crate::error::{Error, Result};
use crate::exactlin::{RatMatrix, RatVector};
use crate::polyhedra::Polyhedron;

/// Which functionals the normal cone at a vertex collects.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// Functionals minimized at the vertex.
    #[default]
    Inner,
    /// Functionals maximized at the vertex.
    Outer,
}

/// A fan whose cones all contain a common linear subspace (a quasifan when
/// that subspace is nonzero). Stored through its maximal cones.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fan {
    dim: usize,
    lineality: Vec<RatVector>,
    rays: Vec<RatVector>,
    maximal: Vec<Vec<usize>>,
    cones: Vec<Cone>,
}

/// The support of a fan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Support {
    /// The support is convex and equals this cone.
    Convex(Cone),
    /// A non-convex union of these (maximal) cones.
    Union(Vec<Cone>),
}

impl Support {
    pub fn as_cone(&self) -> Option<&Cone> {
        match self {
            Support::Convex(c) => Some(c),
            Support::Union(_) => None,
        }
    }
}

fn keep_maximal(mut cones: Vec<Cone>) -> Vec<Cone> {
    cones.sort_by(|a, b| b.dim().cmp(&a.dim()).then_with(|| a.cmp(b)));
    cones.dedup();
    let mut kept: Vec<Cone> = Vec::new();
    for c in cones {
        if !kept.iter().any(|k| k.contains(&c)) {
            kept.push(c);
        }
    }
    kept
}

impl Fan {
    /// Builds a fan from a collection of cones, keeping the maximal ones and
    /// checking that any two of them meet in a common face.
    pub fn from_cones(dim: usize, cones: &[Cone]) -> Result<Fan> {
        let fan = Self::assemble(dim, cones.to_vec())?;
        fan.check_well_formed()?;
        Ok(fan)
    }

    /// The fan of all faces of `cone`.
    pub fn from_cone(cone: &Cone) -> Fan {
        Self::assemble(cone.ambient_dim(), vec![cone.clone()]).expect("single cone")
    }

    /// The fan with the single cone `{0}` (or the whole space when `full`).
    pub fn trivial(dim: usize, full: bool) -> Fan {
        Self::from_cone(&if full { Cone::full(dim) } else { Cone::zero(dim) })
    }

    /// Builds a fan from serialized parts, which must already be canonical.
    pub fn from_parts(dim: usize, lineality: &[RatVector], rays: &[RatVector], maximal: &[Vec<usize>]) -> Result<Fan> {
        let mut cones = Vec::with_capacity(maximal.len());
        for indices in maximal {
            let mut gens = Vec::with_capacity(indices.len());
            for &i in indices {
                let r = rays
                    .get(i)
                    .ok_or_else(|| Error::MalformedFan(format!("ray index {i} out of range")))?;
                gens.push(r.clone());
            }
            cones.push(Cone::from_generators(dim, &gens, lineality)?);
        }
        let fan = Self::from_cones(dim, &cones)?;
        if fan.lineality != lineality || fan.rays != rays || fan.maximal != maximal {
            return Err(Error::MalformedFan("fan data is not in canonical form".into()));
        }
        Ok(fan)
    }

    fn assemble(dim: usize, cones: Vec<Cone>) -> Result<Fan> {
        if cones.is_empty() {
            return Err(Error::MalformedFan("a fan needs at least one cone".into()));
        }
        if let Some(c) = cones.iter().find(|c| c.ambient_dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: c.ambient_dim(),
            });
        }
        let lineality = cones[0].lineality().to_vec();
        if cones.iter().any(|c| c.lineality() != lineality.as_slice()) {
            return Err(Error::MalformedFan("cones have different lineality spaces".into()));
        }
        let cones = keep_maximal(cones);
        let rays: Vec<RatVector> = cones
            .iter()
            .flat_map(|c| c.rays().iter().cloned())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut indexed: Vec<(Vec<usize>, Cone)> = cones
            .into_iter()
            .map(|c| {
                let idx = c
                    .rays()
                    .iter()
                    .map(|r| rays.binary_search(r).expect("ray collected"))
                    .collect::<BTreeSet<_>>()
                    .into_iter()
                    .collect();
                (idx, c)
            })
            .collect();
        indexed.sort();
        let (maximal, cones) = indexed.into_iter().unzip();
        Ok(Fan {
            dim,
            lineality,
            rays,
            maximal,
            cones,
        })
    }

    /// Checks that any two maximal cones intersect in a face of both.
    pub fn check_well_formed(&self) -> Result<()> {
        for (i, a) in self.cones.iter().enumerate() {
            for b in &self.cones[i + 1..] {
                let meet = a.intersect(b)?;
                if !meet.is_face_of(a) || !meet.is_face_of(b) {
                    return Err(Error::MalformedFan(format!(
                        "cones {a} and {b} do not meet in a common face"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Basis of the lineality space shared by all cones.
    pub fn lineality(&self) -> &[RatVector] {
        &self.lineality
    }

    /// Primitive rays, lexicographically sorted.
    pub fn rays(&self) -> &[RatVector] {
        &self.rays
    }

    /// Maximal cones as sorted ray-index lists, lexicographically sorted.
    pub fn maximal_cone_indices(&self) -> &[Vec<usize>] {
        &self.maximal
    }

    /// Maximal cones, in the order of [`Fan::maximal_cone_indices`].
    pub fn maximal_cones(&self) -> &[Cone] {
        &self.cones
    }

    pub fn n_maximal(&self) -> usize {
        self.cones.len()
    }

    /// Every cone of the fan, sorted by dimension.
    pub fn all_cones(&self) -> Vec<Cone> {
        let set: BTreeSet<Cone> = self.cones.iter().flat_map(Cone::faces).collect();
        let mut all: Vec<Cone> = set.into_iter().collect();
        all.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
        all
    }

    /// Dimension of the largest cone.
    pub fn dim(&self) -> usize {
        self.cones.iter().map(Cone::dim).max().unwrap_or(0)
    }

    /// Whether some cone of the fan contains `cone`.
    pub fn has_cone_containing(&self, cone: &Cone) -> bool {
        self.cones.iter().any(|c| c.contains(cone))
    }

    /// Whether `v` lies in the support.
    pub fn support_contains(&self, v: &RatVector) -> bool {
        self.cones.iter().any(|c| c.contains_vector(v))
    }

    /// The smallest cone of the fan containing `v`, if any.
    pub fn minimal_cone_containing(&self, v: &RatVector) -> Option<Cone> {
        self.cones
            .iter()
            .filter(|c| c.contains_vector(v))
            .map(|c| c.minimal_face_containing(v))
            .min_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)))
    }

    /// Exact support. Convexity is decided by checking that every facet of a
    /// maximal cone either lies on the boundary of the convex hull or is shared
    /// with another maximal cone.
    pub fn support(&self) -> Support {
        if self.cones.len() == 1 {
            return Support::Convex(self.cones[0].clone());
        }
        let hull = Cone::from_generators(self.dim, &self.rays, &self.lineality).expect("fan dimensions");
        let pure = self.cones.iter().all(|c| c.dim() == hull.dim());
        let closed = pure
            && self.cones.iter().enumerate().all(|(i, c)| {
                c.facet_cones().iter().all(|f| {
                    hull.contains_point(&f.relint_point()).expect("dimensions") == Membership::Boundary
                        || self.cones.iter().enumerate().any(|(j, d)| j != i && d.contains(f))
                })
            });
        if closed {
            Support::Convex(hull)
        } else {
            Support::Union(self.cones.clone())
        }
    }

    /// Whether `cone` is covered by the union of the cones of the fan.
    pub fn covers(&self, cone: &Cone) -> Result<bool> {
        let mut pieces = Vec::new();
        for c in &self.cones {
            let meet = c.intersect(cone)?;
            pieces.push(meet);
        }
        let restricted = Self::assemble(self.dim, pieces)?;
        Ok(restricted.support().as_cone() == Some(cone))
    }

    /// `|self| ⊆ |other|`.
    pub fn support_within(&self, other: &Fan) -> Result<bool> {
        for c in &self.cones {
            if !other.covers(c)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn supports_equal(&self, other: &Fan) -> Result<bool> {
        self.check_dim(other)?;
        if let (Support::Convex(a), Support::Convex(b)) = (self.support(), other.support()) {
            return Ok(a == b);
        }
        Ok(self.support_within(other)? && other.support_within(self)?)
    }

    /// Every cone of `self` lies in a cone of `coarse`, and the supports agree.
    pub fn is_refinement(&self, coarse: &Fan) -> Result<bool> {
        self.check_dim(coarse)?;
        if !self.cones.iter().all(|c| coarse.has_cone_containing(c)) {
            return Ok(false);
        }
        let equal = self.supports_equal(coarse)?;
        if !equal {
            log::debug!("fan cones are nested but the supports differ");
        }
        Ok(equal)
    }

    fn check_dim(&self, other: &Fan) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    /// `{c ∩ cone : c ∈ self}`.
    pub fn refine_with_cone(&self, cone: &Cone) -> Result<Fan> {
        if cone.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: cone.ambient_dim(),
            });
        }
        let pieces = self
            .cones
            .iter()
            .map(|c| c.intersect(cone))
            .collect::<Result<Vec<_>>>()?;
        Self::assemble(self.dim, pieces)
    }

    /// `{M^{-1}(c) : c ∈ self}` for a map `M` into the ambient space of the fan.
    pub fn preimage(&self, m: &RatMatrix) -> Result<Fan> {
        if m.rows() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: m.rows(),
            });
        }
        let pieces = self.cones.iter().map(|c| c.preimage(m)).collect::<Result<Vec<_>>>()?;
        Self::assemble(m.cols(), pieces)
    }

    /// Applies an invertible-on-rays relabelling: the fan with the same
    /// maximal cones written in the image coordinates.
    pub fn image(&self, m: &RatMatrix) -> Result<Fan> {
        let pieces = self.cones.iter().map(|c| c.image(m)).collect::<Result<Vec<_>>>()?;
        Self::from_cones(m.rows(), &pieces)
    }
}

impl Fan {
    /// The fan `-F`.
    pub fn negated(&self) -> Fan {
        let cones: Vec<Cone> = self
            .cones
            .iter()
            .map(|c| {
                let rays: Vec<RatVector> = c.rays().iter().map(|r| -r).collect();
                Cone::from_generators(self.dim, &rays, c.lineality()).expect("fan dimensions")
            })
            .collect();
        Self::assemble(self.dim, cones).expect("negation keeps the fan structure")
    }

    /// `self` for [`Orientation::Inner`], `-self` for [`Orientation::Outer`].
    pub fn oriented(&self, orientation: Orientation) -> Fan {
        match orientation {
            Orientation::Inner => self.clone(),
            Orientation::Outer => self.negated(),
        }
    }
}

impl fmt::Display for Fan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "fan in dimension {} with {} maximal cones",
            self.dim,
            self.cones.len()
        )?;
        for c in &self.cones {
            writeln!(f, "  {c}")?;
        }
        Ok(())
    }
}

/// Fan of normal cones of the vertices of `p`: the cone at a vertex collects
/// the functionals minimized there.
pub fn normal_fan(p: &Polyhedron) -> Result<Fan> {
    if p.is_empty() {
        return Err(Error::EmptyPolyhedron);
    }
    let dim = p.ambient_dim();
    let lines: Vec<RatVector> = p.equations().iter().map(|h| h.normal.clone()).collect();
    let cones = p
        .vertices()
        .iter()
        .map(|v| {
            let normals: Vec<RatVector> = p.tight_inequalities(v).iter().map(|h| h.normal.clone()).collect();
            Cone::from_generators(dim, &normals, &lines)
        })
        .collect::<Result<Vec<_>>>()?;
    Fan::assemble(dim, cones)
}

/// Normal fan with the given orientation.
pub fn normal_fan_oriented(p: &Polyhedron, orientation: Orientation) -> Result<Fan> {
    Ok(normal_fan(p)?.oriented(orientation))
}

/// The coarsest common refinement: maximal cones among all intersections of
/// one cone from each input fan.
pub fn common_refinement(fans: &[Fan]) -> Result<Fan> {
    let (first, rest) = fans
        .split_first()
        .ok_or_else(|| Error::MalformedFan("common refinement of no fans".into()))?;
    let mut acc = first.clone();
    for fan in rest {
        acc.check_dim(fan)?;
        let mut pieces = Vec::with_capacity(acc.cones.len() * fan.cones.len());
        for a in &acc.cones {
            for b in &fan.cones {
                pieces.push(a.intersect(b)?);
            }
        }
        acc = Fan::assemble(acc.dim, pieces)?;
    }
    Ok(acc)
}

/// `α^{-1}(F)`: the quasifan with lineality `ker α` over the fan `F`.
pub fn preimage_quasifan(fan: &Fan, alpha: &RatMatrix) -> Result<Fan> {
    if alpha.rank() != alpha.rows() {
        return Err(Error::NotSurjective);
    }
    fan.preimage(alpha)
}

pub fn refine_with_cone(fan: &Fan, sigma: &Cone) -> Result<Fan> {
    fan.refine_with_cone(sigma)
}

pub fn fans_equal(a: &Fan, b: &Fan) -> bool {
    a == b
}

pub fn is_refinement(fine: &Fan, coarse: &Fan) -> Result<bool> {
    fine.is_refinement(coarse)
}

/// Whether `M` maps every cone of `source` into some cone of `target`.
pub fn check_compatible(m: &RatMatrix, source: &Fan, target: &Fan) -> Result<bool> {
    if m.cols() != source.dim {
        return Err(Error::DimensionMismatch {
            expected: source.dim,
            found: m.cols(),
        });
    }
    if m.rows() != target.dim {
        return Err(Error::DimensionMismatch {
            expected: target.dim,
            found: m.rows(),
        });
    }
    for c in &source.cones {
        if !target.has_cone_containing(&c.image(m)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether the compatible map `M` is proper: `M^{-1}(|target|) = |source|`.
pub fn check_proper(m: &RatMatrix, source: &Fan, target: &Fan) -> Result<bool> {
    if !check_compatible(m, source, target)? {
        return Err(Error::Incompatible);
    }
    let pulled = target.preimage(m)?;
    pulled.support_within(source)
}
