//! The polyhedral divisor of a torus downgrade over the toric variety of `C_Y`,
//! its evaluation at characters, and a lattice-point count check comparing
//! global sections of `⌊D(χ)⌋` with the weight space of degree `χ`.

use num_traits::Zero;

use crate::cones::Cone;
use crate::error::{Error, Result};
use crate::exactlin::{Rat, RatMatrix, RatVector};
use crate::fans::Fan;
use crate::gitfan::TorusDowngrade;
use crate::polyhedra::{Halfspace, Polyhedron, SupportValue};
use crate::quotients::chow_quotient_fan;

/// Coefficients `Δ_ρ` on the rays of a base fan, all with the same tail cone.
/// Coordinates on the cocharacters of the subtorus are taken with respect to
/// the columns of its weight matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyhedralDivisor {
    base: Fan,
    coefficients: Vec<Polyhedron>,
    tail: Cone,
    section: RatMatrix,
}

impl PolyhedralDivisor {
    pub fn base(&self) -> &Fan {
        &self.base
    }

    /// One coefficient per ray of the base fan, in ray order.
    pub fn coefficients(&self) -> &[Polyhedron] {
        &self.coefficients
    }

    pub fn tail(&self) -> &Cone {
        &self.tail
    }

    pub fn section(&self) -> &RatMatrix {
        &self.section
    }

    /// Whether every coefficient has the tail cone as recession cone.
    pub fn tails_agree(&self) -> bool {
        self.coefficients
            .iter()
            .all(|p| p.recession_cone().is_ok_and(|c| c == self.tail))
    }
}

/// A rational divisor `Σ a_ρ D_ρ` on the toric variety of the base fan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QDivisor {
    pub coefficients: Vec<Rat>,
}

impl QDivisor {
    /// Round every coefficient down.
    pub fn floor(&self) -> QDivisor {
        QDivisor {
            coefficients: self.coefficients.iter().map(Rat::floor).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }
}

fn check_section(d: &TorusDowngrade, s: &RatMatrix) -> Result<()> {
    let k = d.quotient_rank();
    if s.rows() != d.rank() || s.cols() != k {
        return Err(Error::DimensionMismatch {
            expected: d.rank(),
            found: s.rows(),
        });
    }
    if !s.is_integer() || d.alpha().mul(s)? != RatMatrix::identity(k) {
        return Err(Error::NotASection);
    }
    Ok(())
}

/// `Δ_ρ = (σ ∩ α^{-1}(v_ρ)) − s(v_ρ)` over the rays `v_ρ` of `C_Y`, for an
/// integer section `s` of `α`.
pub fn downgrade_divisor(d: &TorusDowngrade, s: &RatMatrix) -> Result<PolyhedralDivisor> {
    downgrade_divisor_over(d, &chow_quotient_fan(d)?, s)
}

/// As [`downgrade_divisor`] with a precomputed `C_Y`.
pub fn downgrade_divisor_over(d: &TorusDowngrade, base: &Fan, s: &RatMatrix) -> Result<PolyhedralDivisor> {
    check_section(d, s)?;
    let n = d.rank();
    let to_subtorus = d.lift().transpose();
    let sigma_ineqs: Vec<Halfspace> = d
        .sigma()
        .facets()
        .iter()
        .map(|f| Halfspace {
            normal: f.clone(),
            offset: Rat::zero(),
        })
        .collect();
    let alpha_rows = d.alpha().row_vectors();
    let mut coefficients = Vec::with_capacity(base.rays().len());
    for v in base.rays() {
        let eqs: Vec<Halfspace> = alpha_rows
            .iter()
            .zip(v.iter())
            .map(|(a, c)| Halfspace {
                normal: a.clone(),
                offset: c.clone(),
            })
            .collect();
        let slice = Polyhedron::from_inequalities(n, &sigma_ineqs, &eqs)?;
        let shifted = slice.translate(&-&s.apply(v)?)?;
        coefficients.push(shifted.linear_image(&to_subtorus)?);
    }
    let tail = d.sigma().preimage(d.weights())?;
    Ok(PolyhedralDivisor {
        base: base.clone(),
        coefficients,
        tail,
        section: s.clone(),
    })
}

/// `D(χ) = Σ h_{Δ_ρ}(χ) D_ρ`.
pub fn evaluate_divisor(pd: &PolyhedralDivisor, chi: &RatVector) -> Result<QDivisor> {
    let mut coefficients = Vec::with_capacity(pd.coefficients.len());
    for delta in &pd.coefficients {
        match delta.support_value(chi)? {
            SupportValue::Finite(v) => coefficients.push(v),
            SupportValue::NegInfinity => return Err(Error::NotInWeightCone(chi.to_string())),
        }
    }
    Ok(QDivisor { coefficients })
}

/// `{u : <u, v_ρ> >= -⌊a_ρ⌋}`, restricted to the orthogonal complement of the
/// lineality space of the base fan.
pub fn section_polyhedron(base: &Fan, qd: &QDivisor) -> Result<Polyhedron> {
    if qd.coefficients.len() != base.rays().len() {
        return Err(Error::DimensionMismatch {
            expected: base.rays().len(),
            found: qd.coefficients.len(),
        });
    }
    let ineqs: Vec<Halfspace> = base
        .rays()
        .iter()
        .zip(&qd.coefficients)
        .map(|(v, a)| Halfspace {
            normal: v.clone(),
            offset: -a.floor(),
        })
        .collect();
    let eqs: Vec<Halfspace> = base
        .lineality()
        .iter()
        .map(|l| Halfspace {
            normal: l.clone(),
            offset: Rat::zero(),
        })
        .collect();
    Polyhedron::from_inequalities(base.ambient_dim(), &ineqs, &eqs)
}

/// Result of [`section_count_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SectionCount {
    /// Lattice points of the section polyhedron of `⌊D(χ)⌋`.
    pub lhs: usize,
    /// Lattice points of the fiber `P_χ`.
    pub rhs: usize,
    pub equal: bool,
}

/// Compares the number of global sections of `⌊D(χ)⌋` with the number of
/// characters of the big torus in `σ^∨` restricting to `χ`.
pub fn section_count_check(d: &TorusDowngrade, pd: &PolyhedralDivisor, chi: &RatVector) -> Result<SectionCount> {
    if !chi.is_integer() {
        return Err(Error::NonInteger);
    }
    let fiber = d.fiber(chi)?;
    if fiber.is_empty() {
        return Err(Error::NotInWeightCone(chi.to_string()));
    }
    if !fiber.polyhedron().is_bounded() {
        return Err(Error::Unbounded);
    }
    let rhs = fiber.ambient_lattice_points()?.len();
    let qd = evaluate_divisor(pd, chi)?;
    let lhs = section_polyhedron(&pd.base, &qd)?.lattice_points()?.len();
    Ok(SectionCount {
        lhs,
        rhs,
        equal: lhs == rhs,
    })
}

/// The section of `α` stored in the downgrade, for use with [`downgrade_divisor`].
pub fn default_section(d: &TorusDowngrade) -> RatMatrix {
    d.section().clone()
}

/// `s + S M`: another integer section of `α` for any integer `d x (n - d)` matrix `M`.
pub fn shifted_section(d: &TorusDowngrade, s: &RatMatrix, m: &RatMatrix) -> Result<RatMatrix> {
    let shift = d.weights().mul(m)?;
    let mut out = s.clone();
    for i in 0..s.rows() {
        for j in 0..s.cols() {
            out.set(i, j, s.get(i, j) + shift.get(i, j));
        }
    }
    Ok(out)
}
