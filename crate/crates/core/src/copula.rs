//! Archimedean generators and the structural checks used by the copula
//! comparison theorems: super-additivity, log-convexity, d-monotonicity.
//!
//! All checks are grid falsifiers with documented tolerances: the hypotheses
//! they probe are analytic, the artifact certifies them numerically on the
//! domains actually used.

use crate::error::{Error, Result};
use crate::majorization::divided_difference;
use crate::BoolWitness;

/// An Archimedean generator psi with inverse phi.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ArchimedeanGenerator {
    /// psi(t) = exp(-t), the independence copula.
    Independence,
    /// psi(t) = (1 + theta t)^(-1/theta), theta > 0.
    Clayton { theta: f64 },
    /// psi(t) = exp(-t^(1/theta)), theta >= 1.
    Gumbel { theta: f64 },
}

impl ArchimedeanGenerator {
    pub fn validate(&self) -> Result<()> {
        match *self {
            ArchimedeanGenerator::Independence => Ok(()),
            ArchimedeanGenerator::Clayton { theta } => {
                if theta.is_finite() && theta > 0.0 {
                    Ok(())
                } else {
                    Err(Error::InvalidParameter {
                        name: "theta",
                        value: theta,
                        reason: "Clayton requires theta > 0",
                    })
                }
            }
            ArchimedeanGenerator::Gumbel { theta } => {
                if theta.is_finite() && theta >= 1.0 {
                    Ok(())
                } else {
                    Err(Error::InvalidParameter {
                        name: "theta",
                        value: theta,
                        reason: "Gumbel requires theta >= 1",
                    })
                }
            }
        }
    }

    pub fn name(&self) -> String {
        match *self {
            ArchimedeanGenerator::Independence => "independence".into(),
            ArchimedeanGenerator::Clayton { theta } => format!("clayton(theta={theta})"),
            ArchimedeanGenerator::Gumbel { theta } => format!("gumbel(theta={theta})"),
        }
    }

    /// psi(t) for t >= 0; psi(inf) = 0.
    pub fn psi(&self, t: f64) -> f64 {
        if t <= 0.0 {
            return 1.0;
        }
        match *self {
            ArchimedeanGenerator::Independence => (-t).exp(),
            ArchimedeanGenerator::Clayton { theta } => {
                if t.is_infinite() {
                    0.0
                } else {
                    (-(theta * t).ln_1p() / theta).exp()
                }
            }
            ArchimedeanGenerator::Gumbel { theta } => (-t.powf(1.0 / theta)).exp(),
        }
    }

    /// ln psi(t) in closed form, finite for every finite t. Avoids the
    /// exp/ln round trip that would drown divided differences in rounding
    /// noise.
    pub fn log_psi(&self, t: f64) -> f64 {
        if t <= 0.0 {
            return 0.0;
        }
        match *self {
            ArchimedeanGenerator::Independence => -t,
            ArchimedeanGenerator::Clayton { theta } => -(theta * t).ln_1p() / theta,
            ArchimedeanGenerator::Gumbel { theta } => -t.powf(1.0 / theta),
        }
    }

    /// ln of psi(sum_k phi(exp(-a_k))) for nonnegative exponents a_k,
    /// evaluated entirely in log space. This is the survival function of a
    /// coupled minimum whose units have survival exp(-a_k); the direct
    /// route dies as soon as one exp(-a_k) underflows, long before the
    /// result itself leaves double range.
    pub fn log_survival_from_exponents(&self, exponents: &[f64]) -> f64 {
        fn log_sum_exp(terms: &[f64]) -> f64 {
            let m = terms.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            if m == f64::INFINITY || m == f64::NEG_INFINITY {
                return m;
            }
            m + terms.iter().map(|t| (t - m).exp()).sum::<f64>().ln()
        }
        match *self {
            ArchimedeanGenerator::Independence => -exponents.iter().sum::<f64>(),
            ArchimedeanGenerator::Clayton { theta } => {
                // phi(e^-a) = (e^(theta a) - 1) / theta; work with
                // ln(theta T) = LSE_k ln(expm1(theta a_k)).
                let terms: Vec<f64> = exponents
                    .iter()
                    .filter(|&&a| a > 0.0)
                    .map(|&a| {
                        let x = theta * a;
                        if x > 30.0 {
                            x + (-(-x).exp()).ln_1p()
                        } else {
                            x.exp_m1().ln()
                        }
                    })
                    .collect();
                if terms.is_empty() {
                    return 0.0;
                }
                let lse = log_sum_exp(&terms);
                // ln S = -(1/theta) ln(1 + e^lse), a stable softplus.
                let softplus = if lse > 35.0 { lse } else { lse.exp().ln_1p() };
                -softplus / theta
            }
            ArchimedeanGenerator::Gumbel { theta } => {
                // phi(e^-a) = a^theta; ln T = LSE_k (theta ln a_k);
                // ln S = -T^(1/theta).
                let terms: Vec<f64> = exponents
                    .iter()
                    .filter(|&&a| a > 0.0)
                    .map(|&a| theta * a.ln())
                    .collect();
                if terms.is_empty() {
                    return 0.0;
                }
                -(log_sum_exp(&terms) / theta).exp()
            }
        }
    }

    /// phi = psi^-1 on (0, 1]. u <= 0 diverges and is a domain error.
    pub fn phi(&self, u: f64) -> Result<f64> {
        if u <= 0.0 || u > 1.0 {
            return Err(Error::Domain(format!(
                "phi requires u in (0, 1], got {u}"
            )));
        }
        Ok(self.phi_unchecked(u))
    }

    /// phi with u clamped into (0, 1]; u below the smallest positive double
    /// maps to +inf, which psi sends back to 0. Used on survival values that
    /// may underflow.
    pub fn phi_clamped(&self, u: f64) -> f64 {
        if u <= 0.0 {
            return f64::INFINITY;
        }
        self.phi_unchecked(u.min(1.0))
    }

    fn phi_unchecked(&self, u: f64) -> f64 {
        match *self {
            ArchimedeanGenerator::Independence => -u.ln(),
            ArchimedeanGenerator::Clayton { theta } => (u.powf(-theta) - 1.0) / theta,
            ArchimedeanGenerator::Gumbel { theta } => (-u.ln()).powf(theta),
        }
    }
}

/// 60 log-spaced points on [1e-4, 50], the default argument grid for
/// generator checks.
pub fn default_check_grid() -> Vec<f64> {
    let (lo, hi) = (1e-4f64.ln(), 50f64.ln());
    (0..60)
        .map(|i| (lo + (hi - lo) * i as f64 / 59.0).exp())
        .collect()
}

/// 400 pairs subsampled from the Cartesian product of the default grid,
/// deterministically striped so both tails are covered.
pub fn default_pair_grid() -> Vec<(f64, f64)> {
    let g = default_check_grid();
    let mut pairs = Vec::with_capacity(400);
    let mut idx = 0usize;
    while pairs.len() < 400 {
        let i = idx % g.len();
        let j = (idx * 7 + 3) % g.len();
        pairs.push((g[i], g[j]));
        idx += 1;
    }
    pairs
}

/// True iff f(x + y) >= f(x) + f(y) - 1e-9 for every sampled pair.
pub fn super_additive_check<F>(
    mut f: F,
    pairs: &[(f64, f64)],
) -> Result<BoolWitness<(f64, f64)>>
where
    F: FnMut(f64) -> Result<f64>,
{
    for &(x, y) in pairs {
        let lhs = f(x + y)?;
        let rhs = f(x)? + f(y)?;
        if lhs < rhs - 1e-9 {
            return Ok(BoolWitness::fails((x, y)));
        }
    }
    Ok(BoolWitness::holds())
}

/// True iff the second divided differences of t -> ln f(t) are >= -1e-9 on
/// the grid. Points where f underflows are excluded automatically.
pub fn log_convexity_check_fn<F>(mut f: F, grid: &[f64]) -> Result<BoolWitness<f64>>
where
    F: FnMut(f64) -> f64,
{
    let kept: Vec<(f64, f64)> = grid
        .iter()
        .map(|&t| (t, f(t)))
        .filter(|&(_, v)| v > 1e-300)
        .collect();
    if kept.len() < 3 {
        return Err(Error::Dimension(
            "log-convexity needs at least 3 grid points above underflow".into(),
        ));
    }
    for w in kept.windows(3) {
        let xs = [w[0].0, w[1].0, w[2].0];
        let ys = [w[0].1.ln(), w[1].1.ln(), w[2].1.ln()];
        if divided_difference(&xs, &ys) < -1e-9 {
            return Ok(BoolWitness::fails(xs[0]));
        }
    }
    Ok(BoolWitness::holds())
}

/// Log-convexity of a generator, using the closed-form ln psi directly so
/// the check is not limited by exp/ln rounding on tightly spaced grids.
pub fn log_convexity_check(
    g: &ArchimedeanGenerator,
    grid: &[f64],
) -> Result<BoolWitness<f64>> {
    if grid.len() < 3 {
        return Err(Error::Dimension(
            "log-convexity needs at least 3 grid points".into(),
        ));
    }
    for w in grid.windows(3) {
        let ys = [g.log_psi(w[0]), g.log_psi(w[1]), g.log_psi(w[2])];
        if divided_difference(w, &ys) < -1e-9 {
            return Ok(BoolWitness::fails(w[0]));
        }
    }
    Ok(BoolWitness::holds())
}

/// Numeric d-monotonicity probe: (-1)^k * (k-th divided difference) >= -1e-7
/// for k = 0..d-2, and the signed (d-2)-th difference sequence is
/// nonincreasing and convex. d is capped at 6 to keep finite-difference noise
/// below the tolerance.
pub fn d_monotone_check_fn<F>(mut f: F, d: usize, grid: &[f64]) -> Result<BoolWitness<f64>>
where
    F: FnMut(f64) -> f64,
{
    if d < 2 {
        return Err(Error::Domain("d-monotonicity needs d >= 2".into()));
    }
    if d > 6 {
        return Err(Error::UnsupportedOrder(d));
    }
    let m = d - 2;
    if grid.len() < m + 3 {
        return Err(Error::Dimension(format!(
            "d-monotone check needs at least {} grid points",
            m + 3
        )));
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Domain("grid must be strictly increasing".into()));
    }
    let values: Vec<f64> = grid.iter().map(|&t| f(t)).collect();
    for k in 0..=m {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        for i in 0..grid.len() - k {
            let dd = divided_difference(&grid[i..=i + k], &values[i..=i + k]);
            if sign * dd < -1e-7 {
                return Ok(BoolWitness::fails(grid[i]));
            }
        }
    }
    // Signed (d-2)-th differences at window centers must be nonincreasing and convex.
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    let mut centers = Vec::new();
    let mut signed = Vec::new();
    for i in 0..grid.len() - m {
        let window = &grid[i..=i + m];
        centers.push(window.iter().sum::<f64>() / window.len() as f64);
        signed.push(sign * divided_difference(window, &values[i..=i + m]));
    }
    for (w, c) in signed.windows(2).zip(centers.windows(2)) {
        if w[1] > w[0] + 1e-7 {
            return Ok(BoolWitness::fails(c[0]));
        }
    }
    for i in 0..signed.len().saturating_sub(2) {
        if divided_difference(&centers[i..=i + 2], &signed[i..=i + 2]) < -1e-7 {
            return Ok(BoolWitness::fails(centers[i]));
        }
    }
    Ok(BoolWitness::holds())
}

pub fn d_monotone_check(
    g: &ArchimedeanGenerator,
    d: usize,
    grid: &[f64],
) -> Result<BoolWitness<f64>> {
    d_monotone_check_fn(|t| g.psi(t), d, grid)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uniform_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
        (0..n)
            .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
            .collect()
    }

    #[test]
    fn psi_boundaries() {
        for g in [
            ArchimedeanGenerator::Independence,
            ArchimedeanGenerator::Clayton { theta: 2.0 },
            ArchimedeanGenerator::Gumbel { theta: 1.5 },
        ] {
            assert_eq!(g.psi(0.0), 1.0);
            assert!(g.psi(1e8) < 1e-3);
            assert_eq!(g.psi(f64::INFINITY), 0.0);
        }
        let ind = ArchimedeanGenerator::Independence;
        assert!((ind.psi(1.0) - (-1.0f64).exp()).abs() < 1e-15);
    }

    #[test]
    fn phi_examples_and_round_trip() {
        let cl = ArchimedeanGenerator::Clayton { theta: 1.0 };
        assert!((cl.phi(0.25).unwrap() - 3.0).abs() < 1e-12);
        for g in [
            ArchimedeanGenerator::Independence,
            ArchimedeanGenerator::Clayton { theta: 0.5 },
            ArchimedeanGenerator::Clayton { theta: 3.0 },
            ArchimedeanGenerator::Gumbel { theta: 2.0 },
        ] {
            for i in 1..40 {
                let u = i as f64 / 40.0;
                let back = g.psi(g.phi(u).unwrap());
                assert!((back - u).abs() < 1e-10, "{} at {u}", g.name());
            }
        }
        assert!(cl.phi(0.0).is_err());
        assert!(cl.phi(-0.5).is_err());
        assert!(cl.phi(1.5).is_err());
    }

    #[test]
    fn psi_strictly_decreasing() {
        for g in [
            ArchimedeanGenerator::Independence,
            ArchimedeanGenerator::Clayton { theta: 0.5 },
            ArchimedeanGenerator::Gumbel { theta: 3.0 },
        ] {
            let grid = default_check_grid();
            for w in grid.windows(2) {
                assert!(g.psi(w[1]) < g.psi(w[0]), "{}", g.name());
            }
        }
    }

    #[test]
    fn super_additive_examples() {
        let pairs = default_pair_grid();
        // Identity: boundary equality everywhere.
        assert!(super_additive_check(|x| Ok(x), &pairs).unwrap().holds);
        // (x+y)^2 - x^2 - y^2 = 2xy >= 0.
        assert!(super_additive_check(|x| Ok(x * x), &pairs).unwrap().holds);
        // sqrt fails, e.g. at (1, 1): sqrt(2) < 2.
        let out = super_additive_check(|x: f64| Ok(x.sqrt()), &[(1.0, 1.0)]).unwrap();
        assert!(!out.holds);
        assert_eq!(out.witness, Some((1.0, 1.0)));
    }

    #[test]
    fn identity_composition_is_super_additive() {
        // phi2 o psi1 with psi1 = psi2 is the identity.
        let g = ArchimedeanGenerator::Clayton { theta: 2.0 };
        let pairs = default_pair_grid();
        let out = super_additive_check(|t| Ok(g.phi_clamped(g.psi(t))), &pairs).unwrap();
        assert!(out.holds);
    }

    #[test]
    fn log_survival_matches_direct_route() {
        // In the range where the direct psi/phi route is healthy the two
        // must agree; past underflow the log route must stay finite for
        // Clayton/Gumbel and ordered below zero.
        let gens = [
            ArchimedeanGenerator::Independence,
            ArchimedeanGenerator::Clayton { theta: 0.5 },
            ArchimedeanGenerator::Clayton { theta: 2.0 },
            ArchimedeanGenerator::Gumbel { theta: 1.5 },
        ];
        for g in gens {
            for exps in [[0.3f64, 1.0], [2.0, 5.0], [1e-3, 40.0]] {
                let direct: f64 = g.psi(
                    exps.iter()
                        .map(|&a| g.phi_clamped((-a).exp()))
                        .sum::<f64>(),
                );
                let logged = g.log_survival_from_exponents(&exps);
                assert!(
                    (logged - direct.ln()).abs() < 1e-9 * direct.ln().abs().max(1.0),
                    "{}: {logged} vs {}",
                    g.name(),
                    direct.ln()
                );
            }
            assert_eq!(g.log_survival_from_exponents(&[0.0, 0.0]), 0.0);
            let deep = g.log_survival_from_exponents(&[800.0, 900.0]);
            assert!(deep.is_finite() && deep < -100.0, "{}: {deep}", g.name());
            assert_eq!(
                g.log_survival_from_exponents(&[f64::INFINITY, 1.0]),
                f64::NEG_INFINITY
            );
        }
    }

    #[test]
    fn log_convexity_examples() {
        let grid = default_check_grid();
        assert!(
            log_convexity_check(&ArchimedeanGenerator::Independence, &grid)
                .unwrap()
                .holds
        );
        assert!(
            log_convexity_check(&ArchimedeanGenerator::Clayton { theta: 2.0 }, &grid)
                .unwrap()
                .holds
        );
        assert!(
            log_convexity_check(&ArchimedeanGenerator::Gumbel { theta: 1.5 }, &grid)
                .unwrap()
                .holds
        );
        // Test double with concave log: psi(t) = exp(-t^2).
        let out = log_convexity_check_fn(|t| (-t * t).exp(), &uniform_grid(0.1, 5.0, 50))
            .unwrap();
        assert!(!out.holds);
        assert!(out.witness.is_some());
    }

    #[test]
    fn d_monotone_examples() {
        let grid = uniform_grid(0.05, 10.0, 40);
        for d in 2..=6 {
            assert!(
                d_monotone_check(&ArchimedeanGenerator::Independence, d, &grid)
                    .unwrap()
                    .holds,
                "independence d={d}"
            );
        }
        assert!(
            d_monotone_check(&ArchimedeanGenerator::Clayton { theta: 1.0 }, 3, &grid)
                .unwrap()
                .holds
        );
        // Truncated-linear test double fails at d = 4: the signed second
        // difference spikes at the kink instead of decreasing.
        let out = d_monotone_check_fn(|t| (1.0 - t).max(0.0), 4, &grid).unwrap();
        assert!(!out.holds);
        assert!(
            d_monotone_check(&ArchimedeanGenerator::Independence, 7, &grid).is_err()
        );
    }
}
