//! Numerical checks of stochastic orderings between two system minima:
//! usual stochastic order, hazard rate order, likelihood ratio order, plus
//! the monotonicity classifier the ratio checks are built on.
//!
//! All ratio work happens in log space. Survival functions of series systems
//! underflow long before the exponent sums lose precision, so comparisons go
//! through ln(prod p) - sum alpha_i w^beta whenever the regime allows it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::systems::{Regime, SystemSpec};

/// Comparison slack on log-scale quantities and on differences of ratios.
pub const ORDER_SLACK: f64 = 1e-9;

/// Absolute slack plus a relative term: log-survival exponents reach 1e9 and
/// beyond, where 1e-9 is below one ulp.
fn cmp_slack(a: f64, b: f64) -> f64 {
    ORDER_SLACK + 1e-12 * a.abs().max(b.abs())
}

/// Evaluation grid. Points are laid out evenly in survival-like coordinates
/// y in (0, 1) and mapped to abscissae x = -ln y, which concentrates points
/// near the origin and still reaches well into the tail.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Grid {
    ys: Vec<f64>,
}

impl Grid {
    pub fn new(y_min: f64, y_max: f64, points: usize) -> Result<Self> {
        if !(y_min > 0.0 && y_max < 1.0 && y_min < y_max) {
            return Err(Error::Config(format!(
                "grid bounds must satisfy 0 < y_min < y_max < 1, got [{y_min}, {y_max}]"
            )));
        }
        if points < 3 {
            return Err(Error::Config("grid needs at least 3 points".into()));
        }
        let step = (y_max - y_min) / (points - 1) as f64;
        // Stored from y_max down so the x = -ln y sequence increases.
        let ys = (0..points).map(|i| y_max - i as f64 * step).collect();
        Ok(Grid { ys })
    }

    /// 500 points on y in [0.01, 0.99]: x from about 0.01 to 4.6.
    pub fn default_grid() -> Grid {
        Grid::new(0.01, 0.99, 500).expect("valid default bounds")
    }

    /// Denser 2000-point grid used by the counterexample reproductions.
    pub fn reproduction() -> Grid {
        Grid::new(0.01, 0.99, 2000).expect("valid default bounds")
    }

    pub fn ys(&self) -> &[f64] {
        &self.ys
    }

    pub fn xs(&self) -> Vec<f64> {
        self.ys.iter().map(|y| -y.ln()).collect()
    }

    pub fn len(&self) -> usize {
        self.ys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ys.is_empty()
    }
}

/// The three stochastic orders under test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    St,
    Hr,
    Lr,
}

impl std::fmt::Display for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Relation::St => "st",
            Relation::Hr => "hr",
            Relation::Lr => "lr",
        })
    }
}

impl std::str::FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "st" => Ok(Relation::St),
            "hr" => Ok(Relation::Hr),
            "lr" => Ok(Relation::Lr),
            other => Err(Error::Config(format!("unknown order relation '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerdictStatus {
    Holds,
    Fails,
    Inconclusive,
}

/// Point at which a check failed, with the two quantities that were compared
/// and which channel of the check tripped.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub x: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub channel: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrderVerdict {
    pub relation: Relation,
    pub status: VerdictStatus,
    pub witness: Option<Witness>,
}

impl OrderVerdict {
    fn holds(relation: Relation) -> Self {
        OrderVerdict {
            relation,
            status: VerdictStatus::Holds,
            witness: None,
        }
    }

    fn fails(relation: Relation, witness: Witness) -> Self {
        OrderVerdict {
            relation,
            status: VerdictStatus::Fails,
            witness: Some(witness),
        }
    }

    fn inconclusive(relation: Relation, witness: Witness) -> Self {
        OrderVerdict {
            relation,
            status: VerdictStatus::Inconclusive,
            witness: Some(witness),
        }
    }

    pub fn holds_strictly(&self) -> bool {
        self.status == VerdictStatus::Holds
    }
}

/// ln of the minimum's survival. Computed from the exponent sum for the
/// independent and shocked regimes so it stays finite far past the point
/// where the survival itself underflows.
pub fn log_min_survival(sys: &SystemSpec, x: f64) -> Result<f64> {
    match sys.regime() {
        Regime::Copula => {
            let g = sys.generator().expect("copula regime");
            Ok(g.log_survival_from_exponents(&sys.unit_exponents(x)?))
        }
        _ => Ok(sys.shock_mass().ln() - sys.exponent_sum(x)?),
    }
}

/// Checks `smaller <=_st larger`: survival of `smaller` below survival of
/// `larger` everywhere on the grid.
pub fn check_st(smaller: &SystemSpec, larger: &SystemSpec, grid: &Grid) -> Result<OrderVerdict> {
    for x in grid.xs() {
        let a = log_min_survival(smaller, x)?;
        let b = log_min_survival(larger, x)?;
        // Both survivals zero: the inequality holds vacuously at this point.
        if a == f64::NEG_INFINITY {
            continue;
        }
        if a > b + cmp_slack(a, b) {
            return Ok(OrderVerdict::fails(
                Relation::St,
                Witness {
                    x,
                    lhs: a,
                    rhs: b,
                    channel: "log-survival".into(),
                },
            ));
        }
    }
    // Shocked systems also compare at the origin, where the atom sits.
    let a0 = smaller.shock_mass();
    let b0 = larger.shock_mass();
    if a0 > b0 + ORDER_SLACK {
        return Ok(OrderVerdict::fails(
            Relation::St,
            Witness {
                x: 0.0,
                lhs: a0,
                rhs: b0,
                channel: "origin-mass".into(),
            },
        ));
    }
    Ok(OrderVerdict::holds(Relation::St))
}

/// Checks `smaller <=_hr larger`: the hazard of `smaller` dominates the
/// hazard of `larger` pointwise, equivalently the survival ratio
/// larger/smaller is nondecreasing; both views are checked, plus the step
/// condition at the origin for shocked systems. Copula systems have no
/// tractable hazard here.
pub fn check_hr(smaller: &SystemSpec, larger: &SystemSpec, grid: &Grid) -> Result<OrderVerdict> {
    if smaller.regime() == Regime::Copula || larger.regime() == Regime::Copula {
        return Err(Error::UnsupportedRegime);
    }
    let a0 = smaller.shock_mass();
    let b0 = larger.shock_mass();
    if a0 > b0 + ORDER_SLACK {
        return Ok(OrderVerdict::fails(
            Relation::Hr,
            Witness {
                x: 0.0,
                lhs: a0,
                rhs: b0,
                channel: "origin-mass".into(),
            },
        ));
    }
    let xs = grid.xs();
    let mut prev_ratio = f64::NEG_INFINITY;
    for &x in &xs {
        let ha = smaller.min_hazard(x)?;
        let hb = larger.min_hazard(x)?;
        if ha + cmp_slack(ha, hb) < hb && !(ha.is_infinite() && hb.is_infinite()) {
            return Ok(OrderVerdict::fails(
                Relation::Hr,
                Witness {
                    x,
                    lhs: ha,
                    rhs: hb,
                    channel: "hazard".into(),
                },
            ));
        }
        let ratio = log_min_survival(larger, x)? - log_min_survival(smaller, x)?;
        if ratio.is_finite() {
            if ratio + cmp_slack(ratio, prev_ratio) < prev_ratio {
                return Ok(OrderVerdict::fails(
                    Relation::Hr,
                    Witness {
                        x,
                        lhs: ratio,
                        rhs: prev_ratio,
                        channel: "survival-ratio".into(),
                    },
                ));
            }
            prev_ratio = prev_ratio.max(ratio);
        }
    }
    Ok(OrderVerdict::holds(Relation::Hr))
}

/// Log of the density ratio larger/smaller along the grid; `None` entries
/// mark points where one density vanishes or is not finite.
pub fn log_density_ratio(
    smaller: &SystemSpec,
    larger: &SystemSpec,
    grid: &Grid,
) -> Result<Vec<Option<f64>>> {
    let mut out = Vec::with_capacity(grid.len());
    for x in grid.xs() {
        let ha = smaller.min_hazard(x)?;
        let hb = larger.min_hazard(x)?;
        if !(ha.is_finite() && hb.is_finite() && ha > 0.0 && hb > 0.0) {
            out.push(None);
            continue;
        }
        let v = hb.ln() - ha.ln() + log_min_survival(larger, x)?
            - log_min_survival(smaller, x)?;
        out.push(if v.is_finite() { Some(v) } else { None });
    }
    Ok(out)
}

/// Checks `smaller <=_lr larger`: the density ratio larger/smaller is
/// nondecreasing on the grid. Points with vanishing densities make the
/// verdict inconclusive rather than silently passing.
pub fn check_lr(smaller: &SystemSpec, larger: &SystemSpec, grid: &Grid) -> Result<OrderVerdict> {
    if smaller.regime() == Regime::Copula || larger.regime() == Regime::Copula {
        return Err(Error::UnsupportedRegime);
    }
    let xs = grid.xs();
    let ratios = log_density_ratio(smaller, larger, grid)?;
    if let Some(i) = ratios.iter().position(|r| r.is_none()) {
        return Ok(OrderVerdict::inconclusive(
            Relation::Lr,
            Witness {
                x: xs[i],
                lhs: f64::NAN,
                rhs: f64::NAN,
                channel: "degenerate-density".into(),
            },
        ));
    }
    for i in 1..ratios.len() {
        let prev = ratios[i - 1].expect("checked above");
        let cur = ratios[i].expect("checked above");
        if cur + cmp_slack(cur, prev) < prev {
            return Ok(OrderVerdict::fails(
                Relation::Lr,
                Witness {
                    x: xs[i],
                    lhs: cur,
                    rhs: prev,
                    channel: "log-density-ratio".into(),
                },
            ));
        }
    }
    Ok(OrderVerdict::holds(Relation::Lr))
}

pub fn check_order(
    relation: Relation,
    smaller: &SystemSpec,
    larger: &SystemSpec,
    grid: &Grid,
) -> Result<OrderVerdict> {
    match relation {
        Relation::St => check_st(smaller, larger, grid),
        Relation::Hr => check_hr(smaller, larger, grid),
        Relation::Lr => check_lr(smaller, larger, grid),
    }
}

/// Shape of a sampled function, up to the comparison slack.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Monotonicity {
    Increasing,
    Decreasing,
    Flat,
    NonMonotone { rise_at: f64, fall_at: f64 },
}

/// Classifies a sequence of values over increasing abscissae. A step counts
/// as a rise or fall only when it clears the slack, so numerical dust around
/// a constant function reads as `Flat`.
pub fn monotonicity_report(xs: &[f64], values: &[f64], slack: f64) -> Result<Monotonicity> {
    if xs.len() != values.len() {
        return Err(Error::Dimension(format!(
            "{} abscissae vs {} values",
            xs.len(),
            values.len()
        )));
    }
    if xs.len() < 2 {
        return Err(Error::Dimension("need at least two points".into()));
    }
    let mut rise_at = None;
    let mut fall_at = None;
    for i in 1..values.len() {
        let d = values[i] - values[i - 1];
        if d > slack && rise_at.is_none() {
            rise_at = Some(xs[i]);
        }
        if d < -slack && fall_at.is_none() {
            fall_at = Some(xs[i]);
        }
    }
    Ok(match (rise_at, fall_at) {
        (Some(r), Some(f)) => Monotonicity::NonMonotone {
            rise_at: r,
            fall_at: f,
        },
        (Some(_), None) => Monotonicity::Increasing,
        (None, Some(_)) => Monotonicity::Decreasing,
        (None, None) => Monotonicity::Flat,
    })
}
