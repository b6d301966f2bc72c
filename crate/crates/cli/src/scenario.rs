//! Scenario files: an affine toric variety given by its cone and a subtorus
//! given by its weight vectors.
//!
//! ```toml
//! name = "weighted line"
//! rank = 3
//! sigma_rays = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
//! subtorus_weights = [[1, 1, 2]]
//! orientation = "outer"   # optional, default "inner"
//! ```
//!
//! `sigma_inequalities` (inner facet normals) may replace `sigma_rays`.

use quotfan::{Cone, Orientation, RatMatrix, RatVector, TorusDowngrade};
use serde::Deserialize;

use crate::{CliError, CliResult};

#[derive(Debug, Deserialize)]
#[serde(rename_all = "lowercase")]
enum OrientationKey {
    Inner,
    Outer,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioDoc {
    name: Option<String>,
    rank: usize,
    sigma_rays: Option<Vec<Vec<i64>>>,
    sigma_inequalities: Option<Vec<Vec<i64>>>,
    subtorus_weights: Vec<Vec<i64>>,
    orientation: Option<OrientationKey>,
}

/// A parsed scenario.
#[derive(Clone, Debug)]
pub struct Scenario {
    pub name: Option<String>,
    pub downgrade: TorusDowngrade,
}

impl Scenario {
    pub fn warning(&self) -> Option<&str> {
        self.downgrade.warning()
    }
}

fn vectors(rank: usize, key: &str, rows: &[Vec<i64>]) -> CliResult<Vec<RatVector>> {
    rows.iter()
        .map(|r| {
            if r.len() != rank {
                return Err(CliError::Invalid(format!(
                    "{key}: vector of length {} in rank {rank}",
                    r.len()
                )));
            }
            Ok(RatVector::from_ints(r))
        })
        .collect()
}

pub fn parse_scenario(text: &str) -> CliResult<Scenario> {
    let doc: ScenarioDoc = toml::from_str(text)?;
    let n = doc.rank;
    let sigma = match (&doc.sigma_rays, &doc.sigma_inequalities) {
        (Some(rays), None) => Cone::from_generators(n, &vectors(n, "sigma_rays", rays)?, &[])?,
        (None, Some(ineqs)) => Cone::from_inequalities(n, &vectors(n, "sigma_inequalities", ineqs)?, &[])?,
        (Some(_), Some(_)) => {
            return Err(CliError::Invalid(
                "give either sigma_rays or sigma_inequalities, not both".into(),
            ))
        }
        (None, None) => return Err(CliError::Invalid("missing sigma_rays or sigma_inequalities".into())),
    };
    let columns = vectors(n, "subtorus_weights", &doc.subtorus_weights)?;
    let weights = RatMatrix::from_columns(n, &columns)?;
    let orientation = match doc.orientation {
        Some(OrientationKey::Outer) => Orientation::Outer,
        _ => Orientation::Inner,
    };
    let downgrade = TorusDowngrade::new(sigma, &weights)?.with_orientation(orientation);
    if let Some(w) = downgrade.warning() {
        log::warn!("{w}");
    }
    Ok(Scenario {
        name: doc.name,
        downgrade,
    })
}
