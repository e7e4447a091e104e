//! The smallest order statistic of an n-unit heterogeneous Weibull-G sample
//! in three regimes: independent units, units under random Bernoulli shocks,
//! and units coupled by an Archimedean copula.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1, Gamma};

use crate::copula::ArchimedeanGenerator;
use crate::error::{Error, Result};
use crate::weibull_g::WeibullGParams;

/// Which dependence/shock structure a system carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Independent,
    Shocked,
    Copula,
}

/// An n-unit series system of Weibull-G units sharing one baseline and one
/// beta, optionally with per-unit shock probabilities or a shared
/// Archimedean copula.
#[derive(Debug, Clone, PartialEq)]
pub struct SystemSpec {
    units: Vec<WeibullGParams>,
    shock_probs: Option<Vec<f64>>,
    generator: Option<ArchimedeanGenerator>,
    outlier_split: Option<(usize, usize)>,
}

impl SystemSpec {
    /// Builds an independent system. The units must share beta and baseline;
    /// the comparison theory holds those common.
    pub fn new(units: Vec<WeibullGParams>) -> Result<Self> {
        if units.is_empty() {
            return Err(Error::Config("a system needs at least one unit".into()));
        }
        let first = &units[0];
        for u in &units[1..] {
            if u.beta() != first.beta() {
                return Err(Error::Config(
                    "all units must share the same beta".into(),
                ));
            }
            if u.baseline() != first.baseline() {
                return Err(Error::Config(
                    "all units must share the same baseline".into(),
                ));
            }
        }
        Ok(SystemSpec {
            units,
            shock_probs: None,
            generator: None,
            outlier_split: None,
        })
    }

    /// Attaches per-unit shock probabilities p_i in (0, 1].
    pub fn with_shocks(mut self, probs: Vec<f64>) -> Result<Self> {
        if self.generator.is_some() {
            return Err(Error::Config(
                "a system cannot carry both shocks and a copula".into(),
            ));
        }
        if probs.len() != self.units.len() {
            return Err(Error::Dimension(format!(
                "{} shock probabilities for {} units",
                probs.len(),
                self.units.len()
            )));
        }
        if let Some(&bad) = probs.iter().find(|p| !(**p > 0.0 && **p <= 1.0)) {
            return Err(Error::InvalidParameter {
                name: "shock_prob",
                value: bad,
                reason: "must lie in (0, 1]",
            });
        }
        self.shock_probs = Some(probs);
        Ok(self)
    }

    /// Attaches a shared Archimedean copula generator.
    pub fn with_generator(mut self, generator: ArchimedeanGenerator) -> Result<Self> {
        if self.shock_probs.is_some() {
            return Err(Error::Config(
                "a system cannot carry both shocks and a copula".into(),
            ));
        }
        generator.validate()?;
        self.generator = Some(generator);
        Ok(self)
    }

    /// Marks a multiple-outlier structure: units 1..n1 identical and units
    /// n1+1..n identical.
    pub fn with_outlier_split(mut self, n1: usize, n2: usize) -> Result<Self> {
        if n1 == 0 || n2 == 0 || n1 + n2 != self.units.len() {
            return Err(Error::Config(format!(
                "outlier split ({n1}, {n2}) does not partition {} units",
                self.units.len()
            )));
        }
        let same = |a: &WeibullGParams, b: &WeibullGParams| a == b;
        if !self.units[..n1].windows(2).all(|w| same(&w[0], &w[1]))
            || !self.units[n1..].windows(2).all(|w| same(&w[0], &w[1]))
        {
            return Err(Error::Config(
                "outlier blocks must each contain identical units".into(),
            ));
        }
        self.outlier_split = Some((n1, n2));
        Ok(self)
    }

    pub fn units(&self) -> &[WeibullGParams] {
        &self.units
    }

    pub fn n(&self) -> usize {
        self.units.len()
    }

    pub fn beta(&self) -> f64 {
        self.units[0].beta()
    }

    pub fn baseline(&self) -> &crate::baseline::BaselineModel {
        self.units[0].baseline()
    }

    pub fn alphas(&self) -> Vec<f64> {
        self.units.iter().map(|u| u.alpha()).collect()
    }

    pub fn gammas(&self) -> Vec<f64> {
        self.units.iter().map(|u| u.gamma()).collect()
    }

    pub fn shock_probs(&self) -> Option<&[f64]> {
        self.shock_probs.as_deref()
    }

    pub fn generator(&self) -> Option<&ArchimedeanGenerator> {
        self.generator.as_ref()
    }

    pub fn outlier_split(&self) -> Option<(usize, usize)> {
        self.outlier_split
    }

    pub fn regime(&self) -> Regime {
        if self.generator.is_some() {
            Regime::Copula
        } else if self.shock_probs.is_some() {
            Regime::Shocked
        } else {
            Regime::Independent
        }
    }

    /// Product of the shock probabilities; 1 for unshocked systems.
    pub fn shock_mass(&self) -> f64 {
        self.shock_probs
            .as_ref()
            .map(|p| p.iter().product())
            .unwrap_or(1.0)
    }

    /// Mass of the atom at 0 carried by the shocked minimum.
    pub fn atom_mass(&self) -> f64 {
        1.0 - self.shock_mass()
    }

    /// Sum over units of alpha_i * w(gamma_i x)^beta, the exponent of the
    /// independent-minimum survival function. Public so order checks can
    /// compare survival ratios in log space.
    pub fn exponent_sum(&self, x: f64) -> Result<f64> {
        let mut a = 0.0;
        for u in &self.units {
            a += u.exponent(x)?;
        }
        Ok(a)
    }

    /// Per-unit survival exponents alpha_i * w(gamma_i x)^beta, with odds
    /// saturation mapped to +inf (survival 0 to double precision).
    pub fn unit_exponents(&self, x: f64) -> Result<Vec<f64>> {
        self.units
            .iter()
            .map(|u| match u.exponent(x) {
                Ok(a) => Ok(a),
                Err(Error::Saturation { .. }) => Ok(f64::INFINITY),
                Err(e) => Err(e),
            })
            .collect()
    }

    /// Survival function of the minimum at x >= 0. Past odds saturation the
    /// units' survivals are 0 to double precision, so the minimum's survival
    /// clamps to 0 rather than erroring, matching the unit cdf convention.
    pub fn min_survival(&self, x: f64) -> Result<f64> {
        match self.regime() {
            Regime::Independent | Regime::Shocked => match self.exponent_sum(x) {
                Ok(a) => Ok(self.shock_mass() * (-a).exp()),
                Err(Error::Saturation { .. }) => Ok(0.0),
                Err(e) => Err(e),
            },
            Regime::Copula => {
                let g = self.generator.as_ref().expect("copula regime");
                Ok(g.log_survival_from_exponents(&self.unit_exponents(x)?).exp())
            }
        }
    }

    /// Hazard rate of the minimum: the sum of the per-unit hazards. Not
    /// defined for the copula regime.
    pub fn min_hazard(&self, x: f64) -> Result<f64> {
        if self.regime() == Regime::Copula {
            return Err(Error::UnsupportedRegime);
        }
        let mut h = 0.0;
        for u in &self.units {
            h += u.hazard(x)?;
        }
        Ok(h)
    }

    /// Density of the (absolutely continuous part of the) minimum:
    /// hazard times survival. The shock factor prod p_i rides in the
    /// survival; the defect mass 1 - prod p_i sits in the atom at 0.
    pub fn min_pdf(&self, x: f64) -> Result<f64> {
        let h = match self.min_hazard(x) {
            Ok(h) => h,
            Err(Error::Saturation { .. }) => return Ok(0.0),
            Err(e) => return Err(e),
        };
        let s = self.min_survival(x)?;
        if h.is_infinite() && s == 0.0 {
            return Ok(0.0);
        }
        Ok(h * s)
    }

    /// Seeded draws of the minimum. In the shocked regime a unit whose
    /// Bernoulli indicator fails kills the system at time 0, so atoms appear
    /// as exact 0.0 values. Copula sampling supports the independence and
    /// Clayton generators (gamma-frailty construction).
    pub fn min_sample(&self, seed: u64, count: usize) -> Result<Vec<f64>> {
        if count == 0 {
            return Err(Error::Domain("sample count must be >= 1".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        match self.regime() {
            Regime::Independent => self.sample_independent(&mut rng, count),
            Regime::Shocked => {
                let probs = self.shock_probs.clone().expect("shocked regime");
                let mut out = Vec::with_capacity(count);
                for _ in 0..count {
                    let mut alive = true;
                    let mut min = f64::INFINITY;
                    for (u, &p) in self.units.iter().zip(&probs) {
                        if rng.random::<f64>() >= p {
                            alive = false;
                        }
                        let draw = u.quantile(rng.random::<f64>())?;
                        min = min.min(draw);
                    }
                    out.push(if alive { min } else { 0.0 });
                }
                Ok(out)
            }
            Regime::Copula => match *self.generator.as_ref().expect("copula regime") {
                ArchimedeanGenerator::Independence => self.sample_independent(&mut rng, count),
                ArchimedeanGenerator::Clayton { theta } => {
                    // Gamma-frailty: S ~ Gamma(1/theta, 1), U_i = (1 + E_i/S)^(-1/theta)
                    // with E_i iid unit exponentials; (U_1..U_n) then has the
                    // Clayton copula as its joint distribution function.
                    let frailty = Gamma::new(1.0 / theta, 1.0).map_err(|e| {
                        Error::Config(format!("frailty construction: {e}"))
                    })?;
                    let mut out = Vec::with_capacity(count);
                    for _ in 0..count {
                        let s: f64 = frailty.sample(&mut rng);
                        let mut min = f64::INFINITY;
                        for u in &self.units {
                            let e: f64 = Exp1.sample(&mut rng);
                            let ui = (1.0 + e / s).powf(-1.0 / theta);
                            // U_i is a survival value; invert through the cdf.
                            let draw = u.quantile(1.0 - ui)?;
                            min = min.min(draw);
                        }
                        out.push(min);
                    }
                    Ok(out)
                }
                ref g => Err(Error::UnsupportedGenerator(g.name())),
            },
        }
    }

    fn sample_independent(&self, rng: &mut ChaCha8Rng, count: usize) -> Result<Vec<f64>> {
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            let mut min = f64::INFINITY;
            for u in &self.units {
                let draw = u.quantile(rng.random::<f64>())?;
                min = min.min(draw);
            }
            out.push(min);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::baseline::BaselineModel;

    fn exp_unit(alpha: f64, beta: f64, gamma: f64) -> WeibullGParams {
        WeibullGParams::new(alpha, beta, gamma, BaselineModel::Exponential { rate: 1.0 })
            .unwrap()
    }

    fn two_unit() -> SystemSpec {
        SystemSpec::new(vec![exp_unit(1.0, 1.0, 1.0), exp_unit(1.0, 1.0, 1.0)]).unwrap()
    }

    #[test]
    fn single_unit_identities() {
        let u = exp_unit(1.3, 2.0, 0.9);
        let sys = SystemSpec::new(vec![u]).unwrap();
        let shocked = sys.clone().with_shocks(vec![1.0]).unwrap();
        let copula = sys
            .clone()
            .with_generator(ArchimedeanGenerator::Clayton { theta: 2.0 })
            .unwrap();
        for i in 0..60 {
            let x = i as f64 * 0.08;
            let s = u.survival(x).unwrap();
            assert!((sys.min_survival(x).unwrap() - s).abs() < 1e-15);
            assert!((shocked.min_survival(x).unwrap() - s).abs() < 1e-12);
            assert!((copula.min_survival(x).unwrap() - s).abs() < 1e-12);
            assert!(
                (sys.min_hazard(x).unwrap() - u.hazard(x).unwrap()).abs() < 1e-12
            );
        }
    }

    #[test]
    fn independent_closed_form() {
        let sys = two_unit();
        let x = std::f64::consts::LN_2;
        // 2 units, alpha = 1, w(ln 2) = 1 each: survival = e^-2.
        assert!((sys.min_survival(x).unwrap() - (-2.0f64).exp()).abs() < 1e-14);
    }

    #[test]
    fn shocked_mass_at_origin() {
        let sys = two_unit().with_shocks(vec![0.9, 0.8]).unwrap();
        assert!((sys.min_survival(0.0).unwrap() - 0.72).abs() < 1e-14);
        assert!((sys.atom_mass() - 0.28).abs() < 1e-14);
        // All p_i = 1 collapses to the independent regime exactly.
        let trivial = two_unit().with_shocks(vec![1.0, 1.0]).unwrap();
        for i in 0..40 {
            let x = i as f64 * 0.1;
            assert_eq!(
                trivial.min_survival(x).unwrap(),
                two_unit().min_survival(x).unwrap()
            );
        }
    }

    #[test]
    fn independence_generator_matches_independent() {
        let base = SystemSpec::new(vec![
            exp_unit(1.0, 2.0, 1.0),
            exp_unit(0.5, 2.0, 1.5),
            exp_unit(2.0, 2.0, 0.7),
        ])
        .unwrap();
        let cop = base
            .clone()
            .with_generator(ArchimedeanGenerator::Independence)
            .unwrap();
        for i in 0..60 {
            let x = i as f64 * 0.07;
            let a = base.min_survival(x).unwrap();
            let b = cop.min_survival(x).unwrap();
            assert!((a - b).abs() < 1e-12, "x = {x}: {a} vs {b}");
        }
    }

    #[test]
    fn survival_nonincreasing_all_regimes() {
        let base = SystemSpec::new(vec![exp_unit(1.0, 1.5, 1.0), exp_unit(0.7, 1.5, 1.3)])
            .unwrap();
        let systems = [
            base.clone(),
            base.clone().with_shocks(vec![0.9, 0.95]).unwrap(),
            base.clone()
                .with_generator(ArchimedeanGenerator::Clayton { theta: 1.5 })
                .unwrap(),
            base.clone()
                .with_generator(ArchimedeanGenerator::Gumbel { theta: 2.0 })
                .unwrap(),
        ];
        for sys in &systems {
            let mut last = f64::INFINITY;
            for i in 0..80 {
                let x = i as f64 * 0.06;
                let s = sys.min_survival(x).unwrap();
                assert!(s <= last + 1e-15);
                last = s;
            }
        }
    }

    #[test]
    fn adding_a_unit_never_raises_survival() {
        let small = SystemSpec::new(vec![exp_unit(1.0, 2.0, 1.0)]).unwrap();
        let large =
            SystemSpec::new(vec![exp_unit(1.0, 2.0, 1.0), exp_unit(0.4, 2.0, 0.8)]).unwrap();
        for i in 0..60 {
            let x = i as f64 * 0.07;
            assert!(large.min_survival(x).unwrap() <= small.min_survival(x).unwrap());
        }
    }

    #[test]
    fn hazard_additivity_and_example() {
        let a = SystemSpec::new(vec![exp_unit(1.0, 1.0, 1.0)]).unwrap();
        let b = SystemSpec::new(vec![exp_unit(2.0, 1.0, 1.0)]).unwrap();
        let both =
            SystemSpec::new(vec![exp_unit(1.0, 1.0, 1.0), exp_unit(2.0, 1.0, 1.0)]).unwrap();
        for i in 0..40 {
            let x = i as f64 * 0.08;
            let sum = a.min_hazard(x).unwrap() + b.min_hazard(x).unwrap();
            assert!((both.min_hazard(x).unwrap() - sum).abs() < 1e-12);
        }
        // At x = 0: sum of alpha_i * w'(0) = 3.
        assert!((both.min_hazard(0.0).unwrap() - 3.0).abs() < 1e-14);
    }

    #[test]
    fn copula_hazard_unsupported() {
        let sys = two_unit()
            .with_generator(ArchimedeanGenerator::Clayton { theta: 2.0 })
            .unwrap();
        assert!(matches!(
            sys.min_hazard(1.0).unwrap_err(),
            Error::UnsupportedRegime
        ));
        assert!(sys.min_pdf(1.0).is_err());
    }

    fn simpson(sys: &SystemSpec, hi: f64, n: usize) -> f64 {
        let h = hi / n as f64;
        let mut s = sys.min_pdf(0.0).unwrap() + sys.min_pdf(hi).unwrap();
        for i in 1..n {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            s += w * sys.min_pdf(i as f64 * h).unwrap();
        }
        s * h / 3.0
    }

    #[test]
    fn pdf_quadrature() {
        let sys = two_unit();
        assert!((simpson(&sys, 40.0, 40_000) - 1.0).abs() < 1e-5);
        let shocked = two_unit().with_shocks(vec![0.9, 0.8]).unwrap();
        // The continuous part carries prod p_i; the rest is the atom.
        assert!((simpson(&shocked, 40.0, 40_000) - 0.72).abs() < 1e-5);
        for i in 1..100 {
            assert!(shocked.min_pdf(i as f64 * 0.05).unwrap() >= 0.0);
        }
    }

    #[test]
    fn sampling_determinism() {
        let sys = two_unit().with_shocks(vec![0.9, 0.8]).unwrap();
        assert_eq!(
            sys.min_sample(7, 100).unwrap(),
            sys.min_sample(7, 100).unwrap()
        );
        let gum = two_unit()
            .with_generator(ArchimedeanGenerator::Gumbel { theta: 2.0 })
            .unwrap();
        assert!(matches!(
            gum.min_sample(1, 10).unwrap_err(),
            Error::UnsupportedGenerator(_)
        ));
    }

    #[test]
    fn empirical_survival_matches_analytic() {
        let sys = SystemSpec::new(vec![exp_unit(1.0, 1.0, 1.0), exp_unit(0.5, 1.0, 1.5)])
            .unwrap();
        let draws = sys.min_sample(42, 100_000).unwrap();
        for x in [0.1, 0.3, 0.6, 1.0, 1.5] {
            let emp = draws.iter().filter(|&&v| v > x).count() as f64 / draws.len() as f64;
            let ana = sys.min_survival(x).unwrap();
            assert!((emp - ana).abs() < 0.01, "x = {x}: {emp} vs {ana}");
        }
    }

    #[test]
    fn clayton_frailty_matches_analytic() {
        let units = vec![exp_unit(1.0, 1.0, 1.0), exp_unit(1.0, 1.0, 1.0)];
        let sys = SystemSpec::new(units)
            .unwrap()
            .with_generator(ArchimedeanGenerator::Clayton { theta: 2.0 })
            .unwrap();
        let draws = sys.min_sample(42, 100_000).unwrap();
        for x in [0.1, 0.3, 0.6, 1.0, 1.5] {
            let emp = draws.iter().filter(|&&v| v > x).count() as f64 / draws.len() as f64;
            let ana = sys.min_survival(x).unwrap();
            assert!((emp - ana).abs() < 0.01, "x = {x}: {emp} vs {ana}");
        }
    }

    #[test]
    fn construction_errors() {
        let mixed = vec![exp_unit(1.0, 1.0, 1.0), exp_unit(1.0, 2.0, 1.0)];
        assert!(SystemSpec::new(mixed).is_err());
        assert!(two_unit().with_shocks(vec![0.9]).is_err());
        assert!(two_unit().with_shocks(vec![0.9, 0.0]).is_err());
        assert!(two_unit()
            .with_shocks(vec![0.9, 0.9])
            .unwrap()
            .with_generator(ArchimedeanGenerator::Independence)
            .is_err());
        assert!(two_unit().with_outlier_split(2, 1).is_err());
        let split = SystemSpec::new(vec![
            exp_unit(2.0, 1.0, 1.0),
            exp_unit(1.0, 1.0, 0.5),
            exp_unit(1.0, 1.0, 0.5),
        ])
        .unwrap()
        .with_outlier_split(1, 2);
        assert!(split.is_ok());
        let bad_split = SystemSpec::new(vec![
            exp_unit(2.0, 1.0, 1.0),
            exp_unit(1.0, 1.0, 0.5),
            exp_unit(1.5, 1.0, 0.5),
        ])
        .unwrap()
        .with_outlier_split(1, 2);
        assert!(bad_split.is_err());
    }
}
