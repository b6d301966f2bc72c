//! Rational polyhedra via homogenization, fibers of the character map, support
//! functions and integer hulls.
//!
//! A polyhedron `P ⊂ Q^n` is stored through the cone
//! `{(x, t) : t >= 0, (x / t) ∈ P} ⊂ Q^(n+1)` (closed up by the recession cone),
//! so that canonical cone equality gives canonical polyhedron equality.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cones::Cone;
use crate::error::{Error, Result};
use crate::exactlin::{quotient_coords, solve_rational, Rat, RatMatrix, RatVector};

/// An affine inequality `<normal, x> >= offset` (or equation, depending on context).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Halfspace {
    pub normal: RatVector,
    pub offset: Rat,
}

/// Value of a support function `h_P(m) = min <m, P>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SupportValue {
    Finite(Rat),
    NegInfinity,
}

impl SupportValue {
    pub fn finite(&self) -> Option<&Rat> {
        match self {
            SupportValue::Finite(v) => Some(v),
            SupportValue::NegInfinity => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polyhedron {
    dim: usize,
    homog: Cone,
    empty: bool,
    vertices: Vec<RatVector>,
    rays: Vec<RatVector>,
    lineality: Vec<RatVector>,
    inequalities: Vec<Halfspace>,
    equations: Vec<Halfspace>,
}

fn split_last(v: &RatVector) -> (RatVector, Rat) {
    let e = v.entries();
    let (head, last) = e.split_at(e.len() - 1);
    (RatVector::new(head.to_vec()), last[0].clone())
}

impl Polyhedron {
    pub fn empty(dim: usize) -> Polyhedron {
        Polyhedron {
            dim,
            homog: Cone::zero(dim + 1),
            empty: true,
            vertices: Vec::new(),
            rays: Vec::new(),
            lineality: Vec::new(),
            inequalities: Vec::new(),
            equations: Vec::new(),
        }
    }

    /// `conv(vertices) + cone(rays) + span(lines)`; empty when `vertices` is empty.
    pub fn from_generators(
        dim: usize,
        vertices: &[RatVector],
        rays: &[RatVector],
        lines: &[RatVector],
    ) -> Result<Polyhedron> {
        if vertices.is_empty() {
            return Ok(Self::empty(dim));
        }
        let one = [Rat::one()];
        let zero = [Rat::zero()];
        let check = |v: &RatVector| {
            if v.len() == dim {
                Ok(())
            } else {
                Err(Error::DimensionMismatch {
                    expected: dim,
                    found: v.len(),
                })
            }
        };
        let mut gens = Vec::with_capacity(vertices.len() + rays.len());
        for v in vertices {
            check(v)?;
            gens.push(v.concat(&one));
        }
        for r in rays {
            check(r)?;
            gens.push(r.concat(&zero));
        }
        let mut hlines = Vec::with_capacity(lines.len());
        for l in lines {
            check(l)?;
            hlines.push(l.concat(&zero));
        }
        Ok(Self::from_homogenization(
            dim,
            Cone::from_generators(dim + 1, &gens, &hlines)?,
        ))
    }

    /// `{x : <a, x> >= b for (a, b) in ineqs, <a, x> = b for (a, b) in eqs}`.
    pub fn from_inequalities(dim: usize, ineqs: &[Halfspace], eqs: &[Halfspace]) -> Result<Polyhedron> {
        let lift = |h: &Halfspace| {
            if h.normal.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: h.normal.len(),
                });
            }
            Ok(h.normal.concat(&[-h.offset.clone()]))
        };
        let mut hineqs: Vec<RatVector> = ineqs.iter().map(lift).collect::<Result<_>>()?;
        hineqs.push(RatVector::unit(dim + 1, dim));
        let heqs: Vec<RatVector> = eqs.iter().map(lift).collect::<Result<_>>()?;
        Ok(Self::from_homogenization(
            dim,
            Cone::from_inequalities(dim + 1, &hineqs, &heqs)?,
        ))
    }

    /// A cone viewed as a polyhedron with the single vertex 0.
    pub fn from_cone(cone: &Cone) -> Polyhedron {
        Self::from_generators(
            cone.ambient_dim(),
            &[RatVector::zeros(cone.ambient_dim())],
            cone.rays(),
            cone.lineality(),
        )
        .expect("cone dimensions")
    }

    fn from_homogenization(dim: usize, homog: Cone) -> Polyhedron {
        let mut vertices = Vec::new();
        let mut rays = Vec::new();
        for g in homog.rays() {
            let (x, t) = split_last(g);
            if t.is_zero() {
                rays.push(x);
            } else {
                vertices.push(x.scale(&t.recip()));
            }
        }
        if vertices.is_empty() {
            return Self::empty(dim);
        }
        vertices.sort();
        let lineality: Vec<RatVector> = homog.lineality().iter().map(|l| split_last(l).0).collect();

        let finite_gens: Vec<&RatVector> = homog.rays().iter().filter(|g| !g[dim].is_zero()).collect();
        let mut inequalities: Vec<Halfspace> = homog
            .facets()
            .iter()
            .filter(|f| finite_gens.iter().any(|g| f.dot(g).is_zero()))
            .map(|f| {
                let (normal, c) = split_last(f);
                Halfspace { normal, offset: -c }
            })
            .collect();
        inequalities.sort();
        let equations: Vec<Halfspace> = homog
            .equations()
            .iter()
            .map(|e| {
                let (normal, c) = split_last(e);
                Halfspace { normal, offset: -c }
            })
            .collect();

        Polyhedron {
            dim,
            homog,
            empty: false,
            vertices,
            rays,
            lineality,
            inequalities,
            equations,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.empty
    }

    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }

    /// Vertices (representatives of the minimal faces when there is lineality).
    pub fn vertices(&self) -> &[RatVector] {
        &self.vertices
    }

    pub fn rays(&self) -> &[RatVector] {
        &self.rays
    }

    pub fn lineality(&self) -> &[RatVector] {
        &self.lineality
    }

    /// Facet inequalities `<normal, x> >= offset`.
    pub fn inequalities(&self) -> &[Halfspace] {
        &self.inequalities
    }

    /// Equations `<normal, x> = offset` of the affine hull.
    pub fn equations(&self) -> &[Halfspace] {
        &self.equations
    }

    pub fn homogenization(&self) -> &Cone {
        &self.homog
    }

    /// Dimension of the affine hull; `None` when empty.
    pub fn affine_dim(&self) -> Option<usize> {
        (!self.empty).then(|| self.dim - self.equations.len())
    }

    pub fn contains(&self, x: &RatVector) -> bool {
        !self.empty
            && self.equations.iter().all(|h| h.normal.dot(x) == h.offset)
            && self.inequalities.iter().all(|h| h.normal.dot(x) >= h.offset)
    }

    /// Facet inequalities tight at `x`.
    pub fn tight_inequalities(&self, x: &RatVector) -> Vec<&Halfspace> {
        self.inequalities
            .iter()
            .filter(|h| h.normal.dot(x) == h.offset)
            .collect()
    }

    pub fn recession_cone(&self) -> Result<Cone> {
        if self.empty {
            return Err(Error::EmptyPolyhedron);
        }
        Cone::from_generators(self.dim, &self.rays, &self.lineality)
    }

    pub fn minkowski_sum(&self, other: &Polyhedron) -> Result<Polyhedron> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        if self.empty || other.empty {
            return Ok(Self::empty(self.dim));
        }
        let mut vertices = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for a in &self.vertices {
            for b in &other.vertices {
                vertices.push(a + b);
            }
        }
        vertices.sort();
        vertices.dedup();
        let rays: Vec<RatVector> = self.rays.iter().chain(&other.rays).cloned().collect();
        let lines: Vec<RatVector> = self.lineality.iter().chain(&other.lineality).cloned().collect();
        Self::from_generators(self.dim, &vertices, &rays, &lines)
    }

    /// `h_P(m) = min_{x ∈ P} <m, x>`.
    pub fn support_value(&self, m: &RatVector) -> Result<SupportValue> {
        if self.empty {
            return Err(Error::EmptyPolyhedron);
        }
        if m.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: m.len(),
            });
        }
        let bounded_below =
            self.rays.iter().all(|r| !m.dot(r).is_negative()) && self.lineality.iter().all(|l| m.dot(l).is_zero());
        if !bounded_below {
            return Ok(SupportValue::NegInfinity);
        }
        let min = self
            .vertices
            .iter()
            .map(|v| m.dot(v))
            .min()
            .expect("nonempty polyhedron has a vertex");
        Ok(SupportValue::Finite(min))
    }

    pub fn translate(&self, shift: &RatVector) -> Result<Polyhedron> {
        if self.empty {
            return Ok(self.clone());
        }
        let vertices: Vec<RatVector> = self.vertices.iter().map(|v| v + shift).collect();
        Self::from_generators(self.dim, &vertices, &self.rays, &self.lineality)
    }

    /// Image under a linear map.
    pub fn linear_image(&self, m: &RatMatrix) -> Result<Polyhedron> {
        if m.cols() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: m.cols(),
                found: self.dim,
            });
        }
        if self.empty {
            return Ok(Self::empty(m.rows()));
        }
        let map = |vs: &[RatVector]| vs.iter().map(|v| m.apply(v)).collect::<Result<Vec<_>>>();
        Self::from_generators(
            m.rows(),
            &map(&self.vertices)?,
            &map(&self.rays)?,
            &map(&self.lineality)?,
        )
    }

    /// Integer points of a bounded polyhedron, sorted lexicographically.
    pub fn lattice_points(&self) -> Result<Vec<RatVector>> {
        if self.empty {
            return Ok(Vec::new());
        }
        if !self.is_bounded() {
            return Err(Error::Unbounded);
        }
        Ok(ProjectionScan::new(self)?.points())
    }

    /// Integer points of the polyhedron inside the box `lo <= x <= hi`.
    pub fn lattice_points_in_box(&self, lo: &[BigInt], hi: &[BigInt]) -> Result<Vec<RatVector>> {
        if lo.len() != self.dim || hi.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: lo.len().max(hi.len()),
            });
        }
        if self.empty {
            return Ok(Vec::new());
        }
        let mut ineqs = self.inequalities.clone();
        for i in 0..self.dim {
            let e = RatVector::unit(self.dim, i);
            ineqs.push(Halfspace {
                normal: e.clone(),
                offset: Rat::from_integer(lo[i].clone()),
            });
            ineqs.push(Halfspace {
                normal: -&e,
                offset: -Rat::from_integer(hi[i].clone()),
            });
        }
        Self::from_inequalities(self.dim, &ineqs, &self.equations)?.lattice_points()
    }

    /// `conv(P ∩ Z^n) + rec(P)`.
    ///
    /// Every lattice point of `P` reduces, by subtracting integer multiples of
    /// the integer recession generators, to a lattice point of `P ∩ (conv(vertices) + Z)`
    /// where `Z` is the zonotope of those generators; the hull of these points
    /// plus the recession cone is the integer hull.
    pub fn integer_hull(&self) -> Result<Polyhedron> {
        if self.empty {
            return Ok(self.clone());
        }
        if self.rays.iter().chain(&self.lineality).any(|g| !g.is_integer()) {
            return Err(Error::NonInteger);
        }
        if self.has_integer_vertices() {
            return Ok(self.clone());
        }
        let mut region = Self::from_generators(self.dim, &self.vertices, &[], &[])?;
        for g in self.rays.iter().chain(&self.lineality) {
            let shifted: Vec<RatVector> = region.vertices.iter().map(|v| v + g).collect();
            let mut points = region.vertices.clone();
            points.extend(shifted);
            region = Self::from_generators(self.dim, &points, &[], &[])?;
        }
        let mut ineqs = self.inequalities.clone();
        ineqs.extend(region.inequalities.iter().cloned());
        let mut eqs = self.equations.clone();
        eqs.extend(region.equations.iter().cloned());
        let bounded = Self::from_inequalities(self.dim, &ineqs, &eqs)?;
        if bounded.empty {
            return Ok(Self::empty(self.dim));
        }
        let points: Vec<RatVector> = planar_hull_vertices(ProjectionScan::new(&bounded)?.line_ends())
            .iter()
            .map(|p| RatVector::from_bigints(p))
            .collect();
        Self::from_generators(self.dim, &points, &self.rays, &self.lineality)
    }

    /// Whether every vertex is a lattice point.
    pub fn has_integer_vertices(&self) -> bool {
        self.vertices.iter().all(RatVector::is_integer)
    }
}

/// `<a, x> >= b` (or `= b`) scaled to integer `a` and `b`.
struct IntConstraint {
    normal: Vec<BigInt>,
    offset: BigInt,
}

impl IntConstraint {
    fn new(h: &Halfspace) -> IntConstraint {
        let lcm = h
            .normal
            .iter()
            .fold(h.offset.denom().clone(), |acc, e| acc.lcm(e.denom()));
        let scale = Rat::from_integer(lcm);
        IntConstraint {
            normal: h.normal.iter().map(|e| (e * &scale).to_integer()).collect(),
            offset: (&h.offset * &scale).to_integer(),
        }
    }

    /// `b - <a, x>` over the leading coordinates `x`.
    fn rest(&self, x: &[BigInt]) -> BigInt {
        self.normal
            .iter()
            .zip(x)
            .fold(self.offset.clone(), |acc, (a, v)| acc - a * v)
    }
}

/// Lattice points of a polytope, found one coordinate at a time: the
/// projections onto the leading coordinates give, for every feasible prefix,
/// the exact interval of the next coordinate.
struct ProjectionScan {
    levels: Vec<(Vec<IntConstraint>, Vec<IntConstraint>)>,
}

impl ProjectionScan {
    fn new(p: &Polyhedron) -> Result<ProjectionScan> {
        let n = p.dim;
        let mut levels = Vec::with_capacity(n);
        for k in 1..=n {
            let proj;
            let q = if k == n {
                p
            } else {
                let vs: Vec<RatVector> = p.vertices.iter().map(|v| v.iter().take(k).cloned().collect()).collect();
                proj = Polyhedron::from_generators(k, &vs, &[], &[])?;
                &proj
            };
            levels.push((
                q.inequalities.iter().map(IntConstraint::new).collect(),
                q.equations.iter().map(IntConstraint::new).collect(),
            ));
        }
        Ok(ProjectionScan { levels })
    }

    /// Integer range of coordinate `k` over the fiber of `prefix` (length `k`).
    fn range(&self, prefix: &[BigInt]) -> Option<(BigInt, BigInt)> {
        let k = prefix.len();
        let (ineqs, eqs) = &self.levels[k];
        let mut lo: Option<BigInt> = None;
        let mut hi: Option<BigInt> = None;
        let tighten_lo = |lo: &mut Option<BigInt>, v: BigInt| {
            if lo.as_ref().is_none_or(|l| v > *l) {
                *lo = Some(v);
            }
        };
        let tighten_hi = |hi: &mut Option<BigInt>, v: BigInt| {
            if hi.as_ref().is_none_or(|h| v < *h) {
                *hi = Some(v);
            }
        };
        for c in eqs {
            // a x_k = rest
            let rest = c.rest(prefix);
            let a = &c.normal[k];
            if a.is_zero() {
                if !rest.is_zero() {
                    return None;
                }
                continue;
            }
            let (q, r) = rest.div_rem(a);
            if !r.is_zero() {
                return None;
            }
            tighten_lo(&mut lo, q.clone());
            tighten_hi(&mut hi, q);
        }
        for c in ineqs {
            // a x_k >= rest
            let rest = c.rest(prefix);
            let a = &c.normal[k];
            if a.is_zero() {
                if rest.is_positive() {
                    return None;
                }
            } else if a.is_positive() {
                tighten_lo(&mut lo, -(-rest).div_floor(a));
            } else {
                tighten_hi(&mut hi, rest.div_floor(a));
            }
        }
        let (lo, hi) = (lo.expect("bounded polytope"), hi.expect("bounded polytope"));
        (lo <= hi).then_some((lo, hi))
    }

    fn points(&self) -> Vec<RatVector> {
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(self.levels.len());
        self.descend(&mut prefix, &mut out);
        out
    }

    /// The first and last lattice point on every line parallel to the last
    /// axis; these include all vertices of the convex hull of the lattice points.
    fn line_ends(&self) -> Vec<Vec<BigInt>> {
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(self.levels.len());
        self.descend_ends(&mut prefix, &mut out);
        out
    }

    fn descend_ends(&self, prefix: &mut Vec<BigInt>, out: &mut Vec<Vec<BigInt>>) {
        let n = self.levels.len();
        if n == 0 {
            out.push(Vec::new());
            return;
        }
        let Some((lo, hi)) = self.range(prefix) else {
            return;
        };
        if prefix.len() + 1 == n {
            let same = lo == hi;
            for v in if same { vec![lo] } else { vec![lo, hi] } {
                prefix.push(v);
                out.push(prefix.clone());
                prefix.pop();
            }
            return;
        }
        let mut v = lo;
        while v <= hi {
            prefix.push(v.clone());
            self.descend_ends(prefix, out);
            prefix.pop();
            v += 1;
        }
    }

    fn descend(&self, prefix: &mut Vec<BigInt>, out: &mut Vec<RatVector>) {
        if prefix.len() == self.levels.len() {
            out.push(RatVector::from_bigints(prefix));
            return;
        }
        let Some((lo, hi)) = self.range(prefix) else {
            return;
        };
        let mut v = lo;
        while v <= hi {
            prefix.push(v.clone());
            self.descend(prefix, out);
            prefix.pop();
            v += 1;
        }
    }
}

/// Drops lex-sorted points that are not vertices of the planar convex hull
/// of the points sharing all but their last two coordinates; such points
/// are never vertices of the full convex hull.
fn planar_hull_vertices(points: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let n = points.first().map_or(0, Vec::len);
    if n < 2 {
        return points;
    }
    let mut out = Vec::with_capacity(points.len());
    let mut start = 0;
    while start < points.len() {
        let mut end = start + 1;
        while end < points.len() && points[end][..n - 2] == points[start][..n - 2] {
            end += 1;
        }
        out.extend(planar_hull(&points[start..end], n - 2).into_iter().cloned());
        start = end;
    }
    out
}

/// Strict vertices of the convex hull of lex-sorted points in the plane of
/// coordinates `k` and `k + 1`.
fn planar_hull(points: &[Vec<BigInt>], k: usize) -> Vec<&Vec<BigInt>> {
    if points.len() <= 2 {
        return points.iter().collect();
    }
    let turn = |o: &Vec<BigInt>, a: &Vec<BigInt>, b: &Vec<BigInt>| -> BigInt {
        (&a[k] - &o[k]) * (&b[k + 1] - &o[k + 1]) - (&a[k + 1] - &o[k + 1]) * (&b[k] - &o[k])
    };
    let mut hull: Vec<&Vec<BigInt>> = Vec::with_capacity(points.len() + 1);
    for pass in [points.iter().collect::<Vec<_>>(), points.iter().rev().collect()] {
        let base = hull.len();
        for p in pass {
            while hull.len() >= base + 2 && !turn(hull[hull.len() - 2], hull[hull.len() - 1], p).is_positive() {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

/// A fiber `P_χ = β^{-1}(χ) ∩ σ^∨` written in coordinates of `ker β`:
/// the ambient point of `u` is `basepoint + kernelᵀ u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fiber {
    chi: RatVector,
    basepoint: RatVector,
    kernel: RatMatrix,
    polyhedron: Polyhedron,
}

impl Fiber {
    /// `kernel` rows must form a lattice basis of `ker β ∩ Z^n`, and
    /// `basepoint` must satisfy `β(basepoint) = χ`.
    pub fn new(sigma_dual: &Cone, kernel: &RatMatrix, basepoint: RatVector, chi: RatVector) -> Result<Fiber> {
        let k = kernel.rows();
        let offset = |g: &RatVector| -> Result<(RatVector, Rat)> { Ok((kernel.apply(g)?, -g.dot(&basepoint))) };
        let ineqs: Vec<Halfspace> = sigma_dual
            .facets()
            .iter()
            .map(|g| offset(g).map(|(normal, offset)| Halfspace { normal, offset }))
            .collect::<Result<_>>()?;
        let eqs: Vec<Halfspace> = sigma_dual
            .equations()
            .iter()
            .map(|g| offset(g).map(|(normal, offset)| Halfspace { normal, offset }))
            .collect::<Result<_>>()?;
        let polyhedron = Polyhedron::from_inequalities(k, &ineqs, &eqs)?;
        Ok(Fiber {
            chi,
            basepoint,
            kernel: kernel.clone(),
            polyhedron,
        })
    }

    pub fn chi(&self) -> &RatVector {
        &self.chi
    }

    pub fn basepoint(&self) -> &RatVector {
        &self.basepoint
    }

    pub fn kernel(&self) -> &RatMatrix {
        &self.kernel
    }

    /// The fiber in kernel coordinates.
    pub fn polyhedron(&self) -> &Polyhedron {
        &self.polyhedron
    }

    pub fn is_empty(&self) -> bool {
        self.polyhedron.is_empty()
    }

    pub fn to_ambient(&self, u: &RatVector) -> RatVector {
        let shift = self.kernel.transpose().apply(u).expect("kernel coordinates");
        &self.basepoint + &shift
    }

    pub fn ambient_vertices(&self) -> Vec<RatVector> {
        let mut vs: Vec<RatVector> = self.polyhedron.vertices().iter().map(|u| self.to_ambient(u)).collect();
        vs.sort();
        vs
    }

    /// Whether lattice points of the kernel coordinates correspond to lattice
    /// points of the ambient character lattice.
    pub fn is_lattice_fiber(&self) -> bool {
        self.basepoint.is_integer()
    }

    /// `P^I_χ` in kernel coordinates.
    pub fn integer_hull(&self) -> Result<Polyhedron> {
        if !self.is_lattice_fiber() {
            return Ok(Polyhedron::empty(self.kernel.rows()));
        }
        self.polyhedron.integer_hull()
    }

    /// Lattice points of a bounded fiber, in ambient coordinates.
    pub fn ambient_lattice_points(&self) -> Result<Vec<RatVector>> {
        if !self.is_lattice_fiber() {
            return Ok(Vec::new());
        }
        let mut pts: Vec<RatVector> = self
            .polyhedron
            .lattice_points()?
            .iter()
            .map(|u| self.to_ambient(u))
            .collect();
        pts.sort();
        Ok(pts)
    }
}

/// `P_χ = β^{-1}(χ) ∩ σ^∨` in coordinates of a lattice basis of `ker β`.
pub fn fiber_polyhedron(sigma_dual: &Cone, beta: &RatMatrix, chi: &RatVector) -> Result<Fiber> {
    if beta.cols() != sigma_dual.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: sigma_dual.ambient_dim(),
            found: beta.cols(),
        });
    }
    if chi.len() != beta.rows() {
        return Err(Error::DimensionMismatch {
            expected: beta.rows(),
            found: chi.len(),
        });
    }
    let coords = quotient_coords(&beta.transpose())?;
    let k = coords.alpha.rows();
    let lifted = coords.lift.apply(chi)?;
    let basepoint = if beta.apply(&lifted)? == *chi {
        lifted
    } else {
        match solve_rational(beta, chi) {
            Some(x) => x,
            None => {
                return Ok(Fiber {
                    chi: chi.clone(),
                    basepoint: RatVector::zeros(beta.cols()),
                    kernel: coords.alpha,
                    polyhedron: Polyhedron::empty(k),
                })
            }
        }
    };
    Fiber::new(sigma_dual, &coords.alpha, basepoint, chi.clone())
}
