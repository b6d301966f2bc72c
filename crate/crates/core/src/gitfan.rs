//! GIT data of a subtorus acting on an affine toric variety: weight cone,
//! orbit cones, GIT cones and the GIT fan, semistable and stable faces.

use std::collections::BTreeSet;

use crate::cones::{Cone, Membership};
use crate::error::{Error, Result};
use crate::exactlin::{quotient_coords, RatMatrix, RatVector};
use crate::fans::{Fan, Orientation};
use crate::polyhedra::Fiber;

/// An affine toric variety `X_σ` together with a subtorus `T` of its big
/// torus, given by a lattice basis `S` (columns) of the cocharacters of `T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusDowngrade {
    sigma: Cone,
    sigma_dual: Cone,
    weights: RatMatrix,
    beta: RatMatrix,
    alpha: RatMatrix,
    section: RatMatrix,
    lift: RatMatrix,
    warning: Option<String>,
    orientation: Orientation,
    faces: Vec<FaceData>,
    weight_cone: Cone,
    orbit_cones: Vec<Cone>,
}

/// A face of `σ` with its dual face in `σ^∨` and the orbit cone `β(F*)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceData {
    pub face: Cone,
    pub dual_face: Cone,
    pub orbit_cone: Cone,
}

impl TorusDowngrade {
    /// `weights` is the `n x d` matrix whose columns span the subtorus; it is
    /// saturated (with a warning) when its columns span a non-saturated lattice.
    pub fn new(sigma: Cone, weights: &RatMatrix) -> Result<TorusDowngrade> {
        let n = sigma.ambient_dim();
        if weights.rows() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: weights.rows(),
            });
        }
        if !sigma.is_pointed() {
            return Err(Error::NotPointed);
        }
        if !sigma.is_full_dimensional() {
            return Err(Error::NotFullDimensional);
        }
        let coords = quotient_coords(weights)?;
        let sigma_dual = sigma.dual();
        let beta = coords.weights.transpose();
        let faces = sigma
            .faces()
            .into_iter()
            .map(|face| {
                let dual_face = Cone::from_inequalities(n, sigma.rays(), face.rays())?;
                let orbit_cone = dual_face.image(&beta)?;
                Ok(FaceData {
                    face,
                    dual_face,
                    orbit_cone,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let weight_cone = sigma_dual.image(&beta)?;
        let distinct: BTreeSet<Cone> = faces.iter().map(|f| f.orbit_cone.clone()).collect();
        let orbit_cones = sort_by_dim(distinct.into_iter().collect());
        Ok(TorusDowngrade {
            sigma,
            sigma_dual,
            weights: coords.weights,
            beta,
            alpha: coords.alpha,
            section: coords.section,
            lift: coords.lift,
            warning: coords.warning,
            orientation: Orientation::Inner,
            faces,
            weight_cone,
            orbit_cones,
        })
    }

    /// Selects the orientation of the normal fans of the fibers (inner by default).
    pub fn with_orientation(mut self, orientation: Orientation) -> TorusDowngrade {
        self.orientation = orientation;
        self
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// Rank of the big torus.
    pub fn rank(&self) -> usize {
        self.sigma.ambient_dim()
    }

    /// Rank of the subtorus.
    pub fn subtorus_rank(&self) -> usize {
        self.weights.cols()
    }

    /// Rank of the quotient torus.
    pub fn quotient_rank(&self) -> usize {
        self.alpha.rows()
    }

    pub fn sigma(&self) -> &Cone {
        &self.sigma
    }

    pub fn sigma_dual(&self) -> &Cone {
        &self.sigma_dual
    }

    /// Columns form the lattice basis of the subtorus cocharacters in use.
    pub fn weights(&self) -> &RatMatrix {
        &self.weights
    }

    /// Restriction of characters `β = Sᵀ`.
    pub fn beta(&self) -> &RatMatrix {
        &self.beta
    }

    /// Projection `α` onto the cocharacters of the quotient torus.
    pub fn alpha(&self) -> &RatMatrix {
        &self.alpha
    }

    /// An integer section of `α`.
    pub fn section(&self) -> &RatMatrix {
        &self.section
    }

    /// An integer right inverse of `β`.
    pub fn lift(&self) -> &RatMatrix {
        &self.lift
    }

    /// Saturation warning, if the input weights had to be saturated.
    pub fn warning(&self) -> Option<&str> {
        self.warning.as_deref()
    }

    fn check_character(&self, chi: &RatVector) -> Result<()> {
        if chi.len() != self.subtorus_rank() {
            return Err(Error::DimensionMismatch {
                expected: self.subtorus_rank(),
                found: chi.len(),
            });
        }
        Ok(())
    }

    /// The fiber `P_χ` in coordinates given by the rows of `α`.
    pub fn fiber(&self, chi: &RatVector) -> Result<Fiber> {
        self.check_character(chi)?;
        let basepoint = self.lift.apply(chi)?;
        Fiber::new(&self.sigma_dual, &self.alpha, basepoint, chi.clone())
    }

    /// The dual face `σ^∨ ∩ F^⊥` of a face `F` of `σ`.
    pub fn dual_face(&self, face: &Cone) -> Result<Cone> {
        Cone::from_inequalities(self.rank(), self.sigma.rays(), face.rays())
    }

    /// Every face of `σ` with its dual face and orbit cone, in the order of
    /// [`Cone::faces`].
    pub fn face_data(&self) -> &[FaceData] {
        &self.faces
    }
}

/// `ω = β(σ^∨)`.
pub fn weight_cone(d: &TorusDowngrade) -> Result<Cone> {
    Ok(d.weight_cone.clone())
}

/// Distinct orbit cones `β(F*)`, sorted by dimension.
pub fn orbit_cones(d: &TorusDowngrade) -> Result<Vec<Cone>> {
    Ok(d.orbit_cones.clone())
}

fn sort_by_dim(mut cones: Vec<Cone>) -> Vec<Cone> {
    cones.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
    cones
}

fn git_cone_from(orbits: &[Cone], chi: &RatVector) -> Result<Cone> {
    let mut acc: Option<Cone> = None;
    for w in orbits.iter().filter(|w| w.contains_vector(chi)) {
        acc = Some(match acc {
            None => w.clone(),
            Some(a) => a.intersect(w)?,
        });
    }
    acc.ok_or_else(|| Error::NotInWeightCone(chi.to_string()))
}

/// The GIT cone of `χ`: intersection of all orbit cones containing it.
pub fn git_cone(d: &TorusDowngrade, chi: &RatVector) -> Result<Cone> {
    d.check_character(chi)?;
    if !d.weight_cone.contains_vector(chi) {
        return Err(Error::NotInWeightCone(chi.to_string()));
    }
    git_cone_from(&d.orbit_cones, chi)
}

/// The GIT fan with its set `Q0` of cones meeting the relative interior of ω.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GitFan {
    pub weight_cone: Cone,
    pub orbit_cones: Vec<Cone>,
    /// Every GIT cone, sorted by dimension.
    pub cones: Vec<Cone>,
    pub fan: Fan,
    /// GIT cones meeting `relint(ω)`, sorted by dimension.
    pub q0: Vec<Cone>,
}

impl GitFan {
    pub fn in_q0(&self, lambda: &Cone) -> bool {
        self.q0.contains(lambda)
    }
}

pub fn git_fan(d: &TorusDowngrade) -> Result<GitFan> {
    let omega = d.weight_cone.clone();
    let orbits = d.orbit_cones.clone();

    // Every GIT cone is an intersection of orbit cones, so it appears in the
    // closure of the orbit cones under pairwise intersection.
    let mut closure: BTreeSet<Cone> = orbits.iter().cloned().collect();
    let mut frontier: Vec<Cone> = orbits.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for b in &orbits {
                let c = a.intersect(b)?;
                if closure.insert(c.clone()) {
                    next.push(c);
                }
            }
        }
        frontier = next;
    }

    let mut git: BTreeSet<Cone> = BTreeSet::new();
    for candidate in &closure {
        let p = candidate.relint_point();
        if omega.contains_vector(&p) {
            git.insert(git_cone_from(&orbits, &p)?);
        }
    }
    let cones = sort_by_dim(git.into_iter().collect());
    let fan = Fan::from_cones(omega.ambient_dim(), &cones)?;
    let q0 = cones
        .iter()
        .filter(|l| omega.contains_point(&l.relint_point()) == Ok(Membership::RelativeInterior))
        .cloned()
        .collect();
    Ok(GitFan {
        weight_cone: omega,
        orbit_cones: orbits,
        cones,
        fan,
        q0,
    })
}

/// Faces `F` of `σ` whose orbits are `χ`-semistable: `χ ∈ β(F*)`.
pub fn semistable_faces(d: &TorusDowngrade, chi: &RatVector) -> Result<Vec<Cone>> {
    d.check_character(chi)?;
    Ok(d.faces
        .iter()
        .filter(|f| f.orbit_cone.contains_vector(chi))
        .map(|f| f.face.clone())
        .collect())
}

/// Faces `F` of `σ` with `β(F*) ⊇ ω`.
pub fn stable_faces(d: &TorusDowngrade) -> Result<Vec<Cone>> {
    Ok(d.faces
        .iter()
        .filter(|f| f.orbit_cone.contains(&d.weight_cone))
        .map(|f| f.face.clone())
        .collect())
}
