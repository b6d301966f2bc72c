//! Quotient fans of a torus downgrade: the GIT-quotient fans `N_λ`, the Chow
//! quotient fan `C_Y`, the Altmann–Hausen fan, the main-component Hilbert fan
//! `C_H0` with its universal family fan `C_U0`, and a checker for the fan-level
//! commutative diagram relating them.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::cones::Cone;
use crate::error::{Error, Result};
use crate::exactlin::{RatMatrix, RatVector};
use crate::fans::{
    check_compatible, check_proper, common_refinement, normal_fan_oriented, preimage_quasifan, Fan, Support,
};
use crate::gitfan::{git_fan, weight_cone, GitFan, TorusDowngrade};
use crate::polyhedra::Polyhedron;

/// `N_λ` without the `Q0` membership check.
fn n_fan(d: &TorusDowngrade, lambda: &Cone) -> Result<Fan> {
    let chi = lambda.relint_point();
    let fan = normal_fan_oriented(d.fiber(&chi)?.polyhedron(), d.orientation())?;
    if let Some(r) = lambda.rays().first() {
        let other = &chi + r;
        let check = normal_fan_oriented(d.fiber(&other)?.polyhedron(), d.orientation())?;
        if check != fan {
            return Err(Error::InvariantViolation(format!(
                "normal fans of fibers over {chi} and {other} differ"
            )));
        }
    }
    Ok(fan)
}

/// The fan `N_λ` of the GIT quotient for `λ ∈ Q0`, in quotient coordinates.
pub fn git_quotient_fan(d: &TorusDowngrade, lambda: &Cone) -> Result<Fan> {
    let git = git_fan(d)?;
    if !git.in_q0(lambda) {
        return Err(Error::NotInQ0);
    }
    n_fan(d, lambda)
}

fn chow_from(d: &TorusDowngrade, git: &GitFan, n_fans: &[Fan]) -> Result<Fan> {
    if n_fans.is_empty() {
        return Ok(Fan::trivial(d.quotient_rank(), false));
    }
    let refined = common_refinement(n_fans)?;
    let mut sum: Option<Polyhedron> = None;
    for lambda in &git.q0 {
        let p = d.fiber(&lambda.relint_point())?.polyhedron().clone();
        sum = Some(match sum {
            None => p,
            Some(s) => s.minkowski_sum(&p)?,
        });
    }
    let via_sum = normal_fan_oriented(&sum.expect("Q0 is nonempty"), d.orientation())?;
    if via_sum != refined {
        return Err(Error::InvariantViolation(
            "refinement of the N_λ differs from the normal fan of the Minkowski sum".into(),
        ));
    }
    Ok(refined)
}

/// `C_Y`: the coarsest common refinement of the `N_λ`, cross-checked against
/// the normal fan of the Minkowski sum of representative fibers.
pub fn chow_quotient_fan(d: &TorusDowngrade) -> Result<Fan> {
    let git = git_fan(d)?;
    let n_fans = git.q0.iter().map(|l| n_fan(d, l)).collect::<Result<Vec<_>>>()?;
    chow_from(d, &git, &n_fans)
}

/// `α^{-1}(F) ∩ σ` for a fan `F` in quotient coordinates.
pub fn lift_to_sigma(d: &TorusDowngrade, fan: &Fan) -> Result<Fan> {
    preimage_quasifan(fan, d.alpha())?.refine_with_cone(d.sigma())
}

/// The Altmann–Hausen fan `α^{-1}(C_Y) ∩ σ`.
pub fn ah_fan(d: &TorusDowngrade) -> Result<Fan> {
    lift_to_sigma(d, &chow_quotient_fan(d)?)
}

/// `C_H0` computed up to an enumeration bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertFan {
    pub fan: Fan,
    pub bound: u64,
    /// Whether the fan computed with bound `bound - 1` is the same.
    pub stabilized: bool,
    /// Number of distinct normal fans of integer hulls encountered.
    pub classes: usize,
}

fn lattice_characters(dim: usize, bound: u64) -> Vec<RatVector> {
    let b = bound as i64;
    let mut out = Vec::new();
    let mut x = vec![-b; dim];
    loop {
        out.push(RatVector::from_ints(&x));
        let mut i = dim;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if x[i] < b {
                x[i] += 1;
                x[i + 1..].iter_mut().for_each(|v| *v = -b);
                break;
            }
        }
    }
}

fn max_norm(v: &RatVector) -> BigInt {
    v.iter().map(|e| e.to_integer().abs()).max().unwrap_or_default()
}

fn hilbert_from(d: &TorusDowngrade, omega: &Cone, n_fans: &[Fan], bound: u64) -> Result<HilbertFan> {
    if bound < 1 {
        return Err(Error::InvalidBound(bound));
    }
    // Distinct integer-hull normal fans, each tagged with the smallest norm at
    // which it appears.
    let mut classes: Vec<(BigInt, Fan)> = Vec::new();
    for chi in lattice_characters(d.subtorus_rank(), bound) {
        if !omega.contains_vector(&chi) {
            continue;
        }
        let hull = d.fiber(&chi)?.integer_hull()?;
        if hull.is_empty() {
            continue;
        }
        let fan = normal_fan_oriented(&hull, d.orientation())?;
        let norm = max_norm(&chi);
        match classes.iter_mut().find(|(_, f)| *f == fan) {
            Some(entry) => {
                if norm < entry.0 {
                    entry.0 = norm;
                }
            }
            None => classes.push((norm, fan)),
        }
    }
    let refine = |limit: &BigInt| -> Result<Fan> {
        let fans: Vec<Fan> = n_fans
            .iter()
            .cloned()
            .chain(classes.iter().filter(|(n, _)| n <= limit).map(|(_, f)| f.clone()))
            .collect();
        if fans.is_empty() {
            return Ok(Fan::trivial(d.quotient_rank(), false));
        }
        common_refinement(&fans)
    };
    let fan = refine(&BigInt::from(bound))?;
    let previous = refine(&BigInt::from(bound - 1))?;
    Ok(HilbertFan {
        stabilized: previous == fan,
        fan,
        bound,
        classes: classes.len(),
    })
}

/// `C_H0`: the common refinement of the `N_λ` and of the normal fans of the
/// integer hulls `P^I_χ` for lattice `χ ∈ ω` with max-norm at most `bound`.
pub fn hilbert_main_fan(d: &TorusDowngrade, bound: u64) -> Result<HilbertFan> {
    if bound < 1 {
        return Err(Error::InvalidBound(bound));
    }
    let git = git_fan(d)?;
    let n_fans = git.q0.iter().map(|l| n_fan(d, l)).collect::<Result<Vec<_>>>()?;
    hilbert_from(d, &git.weight_cone, &n_fans, bound)
}

/// Doubles the bound, starting from `start`, until two consecutive rounds are
/// stable or `cap` is reached.
pub fn hilbert_main_fan_auto(d: &TorusDowngrade, start: u64, cap: u64) -> Result<HilbertFan> {
    if start < 1 {
        return Err(Error::InvalidBound(start));
    }
    let git = git_fan(d)?;
    let n_fans = git.q0.iter().map(|l| n_fan(d, l)).collect::<Result<Vec<_>>>()?;
    let mut bound = start.min(cap.max(1));
    let mut current = hilbert_from(d, &git.weight_cone, &n_fans, bound)?;
    let mut stable_rounds = u32::from(current.stabilized);
    while stable_rounds < 2 && bound < cap {
        bound = (bound * 2).min(cap);
        let next = hilbert_from(d, &git.weight_cone, &n_fans, bound)?;
        if next.stabilized && next.fan == current.fan {
            stable_rounds += 1;
        } else {
            stable_rounds = u32::from(next.stabilized);
        }
        current = next;
    }
    Ok(current)
}

/// `C_U0 = α^{-1}(C_H0) ∩ σ`.
pub fn universal_main_fan(d: &TorusDowngrade, bound: u64) -> Result<Fan> {
    lift_to_sigma(d, &hilbert_main_fan(d, bound)?.fan)
}

/// Whether every vertex of `P_χ` is a lattice point.
pub fn is_integer_character(d: &TorusDowngrade, chi: &RatVector) -> Result<bool> {
    if !weight_cone(d)?.contains_vector(chi) {
        return Err(Error::NotInWeightCone(chi.to_string()));
    }
    let fiber = d.fiber(chi)?;
    Ok(fiber.ambient_vertices().iter().all(RatVector::is_integer))
}

/// Every fan of the quotient pipeline for one downgrade.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientBundle {
    pub git: GitFan,
    /// `N_λ` for each `λ ∈ Q0`, in the order of `git.q0`.
    pub n_fans: Vec<Fan>,
    pub chow_fan: Fan,
    pub ah_fan: Fan,
    pub hilbert: HilbertFan,
    pub universal_fan: Fan,
}

impl QuotientBundle {
    pub fn compute(d: &TorusDowngrade, bound: u64) -> Result<QuotientBundle> {
        if bound < 1 {
            return Err(Error::InvalidBound(bound));
        }
        let git = git_fan(d)?;
        let n_fans = git.q0.iter().map(|l| n_fan(d, l)).collect::<Result<Vec<_>>>()?;
        let chow_fan = chow_from(d, &git, &n_fans)?;
        let ah_fan = lift_to_sigma(d, &chow_fan)?;
        let hilbert = hilbert_from(d, &git.weight_cone, &n_fans, bound)?;
        let universal_fan = lift_to_sigma(d, &hilbert.fan)?;
        Ok(QuotientBundle {
            git,
            n_fans,
            chow_fan,
            ah_fan,
            hilbert,
            universal_fan,
        })
    }
}

/// One line of a [`DiagramReport`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramReport {
    pub checks: Vec<CheckItem>,
    /// Whether `C_H0` and `C_Y` coincide (informational, not a check).
    pub hilbert_equals_chow: bool,
    pub hilbert_stabilized: bool,
    pub bundle: QuotientBundle,
}

impl DiagramReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Checks the fan-level consequences of the commutative square formed by the
/// Hilbert, Chow, universal and Altmann–Hausen spaces.
pub fn verify_diagram(d: &TorusDowngrade, bound: u64) -> Result<DiagramReport> {
    let bundle = QuotientBundle::compute(d, bound)?;
    let sigma_fan = Fan::from_cone(d.sigma());
    let sigma_support = Support::Convex(d.sigma().clone());
    let id_n = RatMatrix::identity(d.rank());
    let id_q = RatMatrix::identity(d.quotient_rank());
    let h = &bundle.hilbert.fan;
    let mut checks = Vec::new();
    let mut push = |name: String, passed: bool| checks.push(CheckItem { name, passed });

    push(
        "C_H0 refines C_Y with equal support".into(),
        h.is_refinement(&bundle.chow_fan)?,
    );
    push(
        "C_U0 refines C_X with equal support".into(),
        bundle.universal_fan.is_refinement(&bundle.ah_fan)?,
    );
    push(
        "support of C_X is sigma".into(),
        bundle.ah_fan.support() == sigma_support,
    );
    push(
        "support of C_U0 is sigma".into(),
        bundle.universal_fan.support() == sigma_support,
    );
    let proper =
        check_compatible(&id_n, &bundle.ah_fan, &sigma_fan)? && check_proper(&id_n, &bundle.ah_fan, &sigma_fan)?;
    push("C_X -> sigma is proper".into(), proper);
    push(
        "alpha maps C_X into C_Y".into(),
        check_compatible(d.alpha(), &bundle.ah_fan, &bundle.chow_fan)?,
    );
    push(
        "alpha maps C_U0 into C_H0".into(),
        check_compatible(d.alpha(), &bundle.universal_fan, h)?,
    );
    for (i, n) in bundle.n_fans.iter().enumerate() {
        push(
            format!("C_Y maps to N_lambda[{i}]"),
            check_compatible(&id_q, &bundle.chow_fan, n)?,
        );
    }
    Ok(DiagramReport {
        checks,
        hilbert_equals_chow: *h == bundle.chow_fan,
        hilbert_stabilized: bundle.hilbert.stabilized,
        bundle,
    })
}
