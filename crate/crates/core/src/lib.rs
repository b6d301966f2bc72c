//! Exact computation of the quotient fans attached to a subtorus action on an
//! affine toric variety: GIT fan, GIT-quotient fans, the toric Chow quotient
//! fan, the Altmann–Hausen fan, the main-component toric Hilbert fan and its
//! universal family, together with the polyhedral divisor of the action.
//!
//! All arithmetic is exact; see [`exactlin`].

pub mod cones;
pub mod error;
pub mod exactlin;
pub mod fans;
pub mod gitfan;
pub mod pdivisor;
pub mod polyhedra;
pub mod quotients;

pub use cones::{Cone, Membership};
pub use error::{Error, Result};
pub use exactlin::{Rat, RatMatrix, RatVector};
pub use fans::{Fan, Orientation, Support};
pub use gitfan::{GitFan, TorusDowngrade};
pub use pdivisor::{PolyhedralDivisor, QDivisor};
pub use polyhedra::{Fiber, Halfspace, Polyhedron, SupportValue};
pub use quotients::{DiagramReport, HilbertFan, QuotientBundle};
