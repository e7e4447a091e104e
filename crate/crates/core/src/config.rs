//! JSON-facing configuration types. These mirror the validated runtime types
//! one-to-one so files can be written by hand, and every build goes back
//! through the constructors' validation.

use serde::{Deserialize, Serialize};

use crate::baseline::BaselineModel;
use crate::copula::ArchimedeanGenerator;
use crate::error::{Error, Result};
use crate::systems::SystemSpec;
use crate::weibull_g::WeibullGParams;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case", deny_unknown_fields)]
pub enum BaselineConfig {
    Exponential { rate: f64 },
    Weibull { rate: f64, shape: f64 },
    BurrXii { c: f64, k: f64 },
    Lomax { shape: f64 },
}

impl BaselineConfig {
    pub fn build(&self) -> Result<BaselineModel> {
        let model = match *self {
            BaselineConfig::Exponential { rate } => BaselineModel::Exponential { rate },
            BaselineConfig::Weibull { rate, shape } => BaselineModel::Weibull { rate, shape },
            BaselineConfig::BurrXii { c, k } => BaselineModel::BurrXii { c, k },
            BaselineConfig::Lomax { shape } => BaselineModel::Lomax { shape },
        };
        model.validate()?;
        Ok(model)
    }

    pub fn from_model(model: &BaselineModel) -> Self {
        match *model {
            BaselineModel::Exponential { rate } => BaselineConfig::Exponential { rate },
            BaselineModel::Weibull { rate, shape } => BaselineConfig::Weibull { rate, shape },
            BaselineModel::BurrXii { c, k } => BaselineConfig::BurrXii { c, k },
            BaselineModel::Lomax { shape } => BaselineConfig::Lomax { shape },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnitConfig {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub baseline: BaselineConfig,
}

impl UnitConfig {
    pub fn build(&self) -> Result<WeibullGParams> {
        WeibullGParams::new(self.alpha, self.beta, self.gamma, self.baseline.build()?)
    }

    pub fn from_params(p: &WeibullGParams) -> Self {
        UnitConfig {
            alpha: p.alpha(),
            beta: p.beta(),
            gamma: p.gamma(),
            baseline: BaselineConfig::from_model(p.baseline()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case", deny_unknown_fields)]
pub enum CopulaConfig {
    Independence,
    Clayton { theta: f64 },
    Gumbel { theta: f64 },
}

impl CopulaConfig {
    pub fn build(&self) -> Result<ArchimedeanGenerator> {
        let g = match *self {
            CopulaConfig::Independence => ArchimedeanGenerator::Independence,
            CopulaConfig::Clayton { theta } => ArchimedeanGenerator::Clayton { theta },
            CopulaConfig::Gumbel { theta } => ArchimedeanGenerator::Gumbel { theta },
        };
        g.validate()?;
        Ok(g)
    }

    pub fn from_generator(g: &ArchimedeanGenerator) -> Self {
        match *g {
            ArchimedeanGenerator::Independence => CopulaConfig::Independence,
            ArchimedeanGenerator::Clayton { theta } => CopulaConfig::Clayton { theta },
            ArchimedeanGenerator::Gumbel { theta } => CopulaConfig::Gumbel { theta },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemConfig {
    pub units: Vec<UnitConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shock_probs: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub copula: Option<CopulaConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outlier_split: Option<(usize, usize)>,
}

impl SystemConfig {
    pub fn build(&self) -> Result<SystemSpec> {
        let units = self
            .units
            .iter()
            .map(UnitConfig::build)
            .collect::<Result<Vec<_>>>()?;
        let mut sys = SystemSpec::new(units)?;
        if let Some(probs) = &self.shock_probs {
            sys = sys.with_shocks(probs.clone())?;
        }
        if let Some(cop) = &self.copula {
            sys = sys.with_generator(cop.build()?)?;
        }
        if let Some((n1, n2)) = self.outlier_split {
            sys = sys.with_outlier_split(n1, n2)?;
        }
        Ok(sys)
    }

    pub fn from_spec(spec: &SystemSpec) -> Self {
        SystemConfig {
            units: spec.units().iter().map(UnitConfig::from_params).collect(),
            shock_probs: spec.shock_probs().map(|p| p.to_vec()),
            copula: spec.generator().map(CopulaConfig::from_generator),
            outlier_split: spec.outlier_split(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(format!("system config: {e}")))
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("config types serialize")
    }
}

/// A pair of systems to compare; the claim under test is always
/// "smaller precedes larger" in the requested order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairConfig {
    pub smaller: SystemConfig,
    pub larger: SystemConfig,
}

impl PairConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(format!("pair config: {e}")))
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("config types serialize")
    }

    pub fn build(&self) -> Result<(SystemSpec, SystemSpec)> {
        Ok((self.smaller.build()?, self.larger.build()?))
    }
}
