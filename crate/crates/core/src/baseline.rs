//! Baseline lifetime distributions on (0, inf) and the odds-ratio link
//! w(x) = F(x) / (1 - F(x)) with analytic derivatives.

use crate::error::{Error, Result};

/// Cdf values closer to 1 than this are treated as saturated: the odds
/// ratio would overflow and downstream ratio checks must not divide garbage.
pub const SATURATION_EPS: f64 = 1e-12;

/// One of the four supported parametric lifetime families.
///
/// All families have support (0, inf) and closed-form cdf, density, hazard,
/// quantile and odds ratio.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BaselineModel {
    /// F(x) = 1 - exp(-rate * x)
    Exponential { rate: f64 },
    /// F(x) = 1 - exp(-rate * x^shape)
    Weibull { rate: f64, shape: f64 },
    /// Burr XII, F(x) = 1 - (1 + x^c)^(-k)
    BurrXii { c: f64, k: f64 },
    /// F(x) = 1 - (1 + x)^(-shape)
    Lomax { shape: f64 },
}

fn require_positive(name: &'static str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            reason: "must be a positive finite real",
        })
    }
}

impl BaselineModel {
    pub fn validate(&self) -> Result<()> {
        match *self {
            BaselineModel::Exponential { rate } => require_positive("rate", rate),
            BaselineModel::Weibull { rate, shape } => {
                require_positive("rate", rate)?;
                require_positive("shape", shape)
            }
            BaselineModel::BurrXii { c, k } => {
                require_positive("c", c)?;
                require_positive("k", k)
            }
            BaselineModel::Lomax { shape } => require_positive("shape", shape),
        }
    }

    /// F(x), clamped to [0, 1]. Zero for x <= 0.
    pub fn cdf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return 0.0;
        }
        let v = match *self {
            BaselineModel::Exponential { rate } => -(-rate * x).exp_m1(),
            BaselineModel::Weibull { rate, shape } => -(-rate * x.powf(shape)).exp_m1(),
            BaselineModel::BurrXii { c, k } => -(-k * x.powf(c).ln_1p()).exp_m1(),
            BaselineModel::Lomax { shape } => -(-shape * x.ln_1p()).exp_m1(),
        };
        v.clamp(0.0, 1.0)
    }

    /// Density f(x); zero outside the support.
    pub fn pdf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return 0.0;
        }
        match *self {
            BaselineModel::Exponential { rate } => rate * (-rate * x).exp(),
            BaselineModel::Weibull { rate, shape } => {
                rate * shape * x.powf(shape - 1.0) * (-rate * x.powf(shape)).exp()
            }
            BaselineModel::BurrXii { c, k } => {
                c * k * x.powf(c - 1.0) * (-(k + 1.0) * x.powf(c).ln_1p()).exp()
            }
            BaselineModel::Lomax { shape } => shape * (-(shape + 1.0) * x.ln_1p()).exp(),
        }
    }

    /// Hazard rate r(x) = f(x) / (1 - F(x)).
    pub fn hazard(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return match *self {
                BaselineModel::Exponential { rate } => rate,
                _ => self.hazard_pos(0.0),
            };
        }
        self.hazard_pos(x)
    }

    fn hazard_pos(&self, x: f64) -> f64 {
        match *self {
            BaselineModel::Exponential { rate } => rate,
            BaselineModel::Weibull { rate, shape } => rate * shape * x.powf(shape - 1.0),
            BaselineModel::BurrXii { c, k } => c * k * x.powf(c - 1.0) / (1.0 + x.powf(c)),
            BaselineModel::Lomax { shape } => shape / (1.0 + x),
        }
    }

    /// Inverse cdf in closed form. Requires u in [0, 1).
    pub fn quantile(&self, u: f64) -> Result<f64> {
        if !(0.0..1.0).contains(&u) {
            return Err(Error::Domain(format!(
                "quantile requires u in [0, 1), got {u}"
            )));
        }
        if u == 0.0 {
            return Ok(0.0);
        }
        let x = match *self {
            BaselineModel::Exponential { rate } => -(-u).ln_1p() / rate,
            BaselineModel::Weibull { rate, shape } => (-(-u).ln_1p() / rate).powf(1.0 / shape),
            BaselineModel::BurrXii { c, k } => {
                ((1.0 - u).powf(-1.0 / k) - 1.0).powf(1.0 / c)
            }
            BaselineModel::Lomax { shape } => (1.0 - u).powf(-1.0 / shape) - 1.0,
        };
        Ok(x)
    }

    /// Odds ratio F(x) / (1 - F(x)) in closed form, without saturation guard.
    fn odds_raw(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return 0.0;
        }
        match *self {
            BaselineModel::Exponential { rate } => (rate * x).exp_m1(),
            BaselineModel::Weibull { rate, shape } => (rate * x.powf(shape)).exp_m1(),
            BaselineModel::BurrXii { c, k } => (k * x.powf(c).ln_1p()).exp_m1(),
            BaselineModel::Lomax { shape } => (shape * x.ln_1p()).exp_m1(),
        }
    }

    /// d^order/dx^order of the odds ratio, analytic for every family.
    fn odds_derivative_raw(&self, x: f64, order: u8) -> f64 {
        debug_assert!((1..=3).contains(&order));
        let x = x.max(0.0);
        match *self {
            BaselineModel::Exponential { rate } => rate.powi(order as i32) * (rate * x).exp(),
            BaselineModel::Weibull { rate, shape } => {
                // w = e^s - 1 with s = rate * x^shape
                let s = rate * x.powf(shape);
                let s1 = rate * shape * x.powf(shape - 1.0);
                match order {
                    1 => s1 * s.exp(),
                    2 => {
                        let s2 = rate * shape * (shape - 1.0) * x.powf(shape - 2.0);
                        (s2 + s1 * s1) * s.exp()
                    }
                    _ => {
                        let s2 = rate * shape * (shape - 1.0) * x.powf(shape - 2.0);
                        let s3 = rate * shape * (shape - 1.0) * (shape - 2.0)
                            * x.powf(shape - 3.0);
                        (s3 + 3.0 * s1 * s2 + s1 * s1 * s1) * s.exp()
                    }
                }
            }
            BaselineModel::BurrXii { c, k } => {
                // w = u^k - 1 with u = 1 + x^c
                let u = 1.0 + x.powf(c);
                let u1 = c * x.powf(c - 1.0);
                match order {
                    1 => k * u.powf(k - 1.0) * u1,
                    2 => {
                        let u2 = c * (c - 1.0) * x.powf(c - 2.0);
                        k * ((k - 1.0) * u.powf(k - 2.0) * u1 * u1 + u.powf(k - 1.0) * u2)
                    }
                    _ => {
                        let u2 = c * (c - 1.0) * x.powf(c - 2.0);
                        let u3 = c * (c - 1.0) * (c - 2.0) * x.powf(c - 3.0);
                        k * ((k - 1.0) * (k - 2.0) * u.powf(k - 3.0) * u1 * u1 * u1
                            + 3.0 * (k - 1.0) * u.powf(k - 2.0) * u1 * u2
                            + u.powf(k - 1.0) * u3)
                    }
                }
            }
            BaselineModel::Lomax { shape } => {
                let mut coeff = 1.0;
                for i in 0..order {
                    coeff *= shape - i as f64;
                }
                coeff * (1.0 + x).powf(shape - order as f64)
            }
        }
    }
}

/// The link x -> w(gamma * x) of a scaled baseline, with derivative access.
///
/// Derivatives are taken with respect to x, so the chain-rule factor
/// gamma^order is included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OddsFunction {
    model: BaselineModel,
    gamma: f64,
}

impl OddsFunction {
    pub fn new(model: BaselineModel, gamma: f64) -> Result<Self> {
        model.validate()?;
        require_positive("gamma", gamma)?;
        Ok(OddsFunction { model, gamma })
    }

    pub fn model(&self) -> &BaselineModel {
        &self.model
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    fn check_saturation(&self, x: f64) -> Result<()> {
        if self.model.cdf(self.gamma * x) > 1.0 - SATURATION_EPS {
            Err(Error::Saturation { x })
        } else {
            Ok(())
        }
    }

    /// w(gamma * x). Errors with the offending x once the baseline cdf is
    /// numerically 1.
    pub fn value(&self, x: f64) -> Result<f64> {
        self.check_saturation(x)?;
        Ok(self.model.odds_raw(self.gamma * x))
    }

    /// d^order/dx^order of x -> w(gamma * x) for order in {1, 2, 3}.
    pub fn derivative(&self, x: f64, order: u8) -> Result<f64> {
        if !(1..=3).contains(&order) {
            return Err(Error::Domain(format!(
                "derivative order must be 1, 2 or 3, got {order}"
            )));
        }
        self.check_saturation(x)?;
        Ok(self.gamma.powi(order as i32) * self.model.odds_derivative_raw(self.gamma * x, order))
    }
}
