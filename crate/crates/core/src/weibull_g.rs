//! The Weibull-G(alpha, beta, gamma) distribution: cdf 1 - exp(-alpha * w(gamma x)^beta)
//! where w is the odds ratio of a baseline lifetime distribution.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::baseline::{BaselineModel, OddsFunction};
use crate::error::{Error, Result};

/// Parameters of one Weibull-G unit. `alpha` and `beta` are the outer
/// Weibull scale and shape, `gamma` scales the baseline.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeibullGParams {
    alpha: f64,
    beta: f64,
    gamma: f64,
    baseline: BaselineModel,
}

impl WeibullGParams {
    pub fn new(alpha: f64, beta: f64, gamma: f64, baseline: BaselineModel) -> Result<Self> {
        for (name, value) in [("alpha", alpha), ("beta", beta), ("gamma", gamma)] {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::InvalidParameter {
                    name,
                    value,
                    reason: "must be a positive finite real",
                });
            }
        }
        baseline.validate()?;
        Ok(WeibullGParams {
            alpha,
            beta,
            gamma,
            baseline,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn baseline(&self) -> &BaselineModel {
        &self.baseline
    }

    /// The link x -> w(gamma x) of this unit.
    pub fn odds(&self) -> OddsFunction {
        // Parameters were validated at construction.
        OddsFunction::new(self.baseline, self.gamma).expect("validated parameters")
    }

    /// alpha * w(gamma x)^beta, the exponent of the survival function.
    /// Kept public so system-level code can work in log space.
    pub fn exponent(&self, x: f64) -> Result<f64> {
        let w = self.odds().value(x)?;
        Ok(self.alpha * w.powf(self.beta))
    }

    /// Cdf. Saturation of the odds means the cdf is 1 to double precision,
    /// so it clamps rather than failing.
    pub fn cdf(&self, x: f64) -> Result<f64> {
        if x <= 0.0 {
            return Ok(0.0);
        }
        match self.exponent(x) {
            Ok(a) => Ok(-(-a).exp_m1()),
            Err(Error::Saturation { .. }) => Ok(1.0),
            Err(e) => Err(e),
        }
    }

    pub fn survival(&self, x: f64) -> Result<f64> {
        Ok(1.0 - self.cdf(x)?)
    }

    /// Hazard rate alpha * beta * w(gamma x)^(beta-1) * d/dx w(gamma x).
    ///
    /// For beta < 1 the rate diverges at the origin; that is reported as an
    /// explicit +inf, never as NaN.
    pub fn hazard(&self, x: f64) -> Result<f64> {
        let ofn = self.odds();
        let w = ofn.value(x)?;
        let wd = ofn.derivative(x, 1)?;
        if w == 0.0 {
            return Ok(if self.beta > 1.0 {
                0.0
            } else if self.beta == 1.0 {
                self.alpha * wd
            } else if wd > 0.0 || x > 0.0 {
                f64::INFINITY
            } else {
                // Odds flat at the origin with beta < 1: 0 * inf resolved as +inf
                // only when approaching from inside the support.
                f64::INFINITY
            });
        }
        Ok(self.alpha * self.beta * w.powf(self.beta - 1.0) * wd)
    }

    /// Density, defined as hazard * survival so the identity is exact.
    /// Past odds saturation the survival is 0 to double precision, so the
    /// density clamps to 0 the same way the cdf clamps to 1.
    pub fn pdf(&self, x: f64) -> Result<f64> {
        let h = match self.hazard(x) {
            Ok(h) => h,
            Err(Error::Saturation { .. }) => return Ok(0.0),
            Err(e) => return Err(e),
        };
        let s = self.survival(x)?;
        if h.is_infinite() && s == 0.0 {
            return Ok(0.0);
        }
        Ok(h * s)
    }

    /// Inverse cdf through the baseline quantile:
    /// x = F^-1(t / (1 + t)) / gamma with t = (-ln(1-u) / alpha)^(1/beta).
    pub fn quantile(&self, u: f64) -> Result<f64> {
        if !(0.0..1.0).contains(&u) {
            return Err(Error::Domain(format!(
                "quantile requires u in [0, 1), got {u}"
            )));
        }
        if u == 0.0 {
            return Ok(0.0);
        }
        let t = (-(-u).ln_1p() / self.alpha).powf(1.0 / self.beta);
        let p = t / (1.0 + t);
        Ok(self.baseline.quantile(p)? / self.gamma)
    }

    /// Inverse-transform draws from a seeded ChaCha8 stream. Identical seed,
    /// identical output.
    pub fn sample(&self, seed: u64, count: usize) -> Result<Vec<f64>> {
        if count == 0 {
            return Err(Error::Domain("sample count must be >= 1".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count)
            .map(|_| self.quantile(rng.random::<f64>()))
            .collect()
    }
}
