//! Weibull-G lifetimes, smallest order statistics of heterogeneous series
//! systems (independent, shocked, Archimedean-copula dependent), and
//! numerical verification of the stochastic-ordering results that relate
//! them under vector majorization of the parameters.

pub mod baseline;
pub mod config;
pub mod copula;
pub mod error;
pub mod majorization;
pub mod orderlab;
pub mod presets;
pub mod systems;
pub mod theorems;
pub mod weibull_g;

use serde::Serialize;

pub use baseline::{BaselineModel, OddsFunction, SATURATION_EPS};
pub use config::{BaselineConfig, CopulaConfig, PairConfig, SystemConfig, UnitConfig};
pub use copula::ArchimedeanGenerator;
pub use error::{Error, Result};
pub use majorization::{
    cone_membership, in_cone, majorizes, r_convexity_check, random_majorization_pair,
    schur_probe, Cone, ConeMembership, ParamVector, SchurClassification,
};
pub use orderlab::{
    check_hr, check_lr, check_order, check_st, monotonicity_report, Grid, Monotonicity,
    OrderVerdict, Relation, VerdictStatus, Witness,
};
pub use systems::{Regime, SystemSpec};
pub use theorems::{certify_instance, verify_theorem, Certification, TheoremId, TheoremReport};
pub use weibull_g::WeibullGParams;

/// A yes/no check outcome that carries a witness when it fails.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoolWitness<W> {
    pub holds: bool,
    pub witness: Option<W>,
}

impl<W> BoolWitness<W> {
    pub fn holds() -> Self {
        BoolWitness {
            holds: true,
            witness: None,
        }
    }

    pub fn fails(witness: W) -> Self {
        BoolWitness {
            holds: false,
            witness: Some(witness),
        }
    }
}
