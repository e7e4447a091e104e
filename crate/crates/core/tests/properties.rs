//! Property-based invariants over randomly drawn parameters.

use proptest::prelude::*;

use wgmin_core::baseline::BaselineModel;
use wgmin_core::copula::ArchimedeanGenerator;
use wgmin_core::majorization::{in_cone, majorizes, random_majorization_pair, Cone, ParamVector};
use wgmin_core::orderlab::{check_hr, check_lr, check_st, Grid, VerdictStatus};
use wgmin_core::systems::SystemSpec;
use wgmin_core::weibull_g::WeibullGParams;

fn baseline_strategy() -> impl Strategy<Value = BaselineModel> {
    prop_oneof![
        (0.2f64..2.0).prop_map(|rate| BaselineModel::Exponential { rate }),
        ((0.02f64..0.5), (0.5f64..2.5))
            .prop_map(|(rate, shape)| BaselineModel::Weibull { rate, shape }),
        ((1.0f64..4.0), (0.2f64..1.5)).prop_map(|(c, k)| BaselineModel::BurrXii { c, k }),
        (0.5f64..4.0).prop_map(|shape| BaselineModel::Lomax { shape }),
    ]
}

fn params_strategy() -> impl Strategy<Value = WeibullGParams> {
    (
        0.2f64..3.0,
        0.4f64..4.0,
        0.3f64..2.0,
        baseline_strategy(),
    )
        .prop_map(|(a, b, g, m)| WeibullGParams::new(a, b, g, m).unwrap())
}

proptest! {
    #[test]
    fn cdf_is_a_distribution_function(p in params_strategy(), x in 0.0f64..8.0, dx in 0.0f64..2.0) {
        let v = p.cdf(x).unwrap();
        prop_assert!((0.0..=1.0).contains(&v));
        let w = p.cdf(x + dx).unwrap();
        prop_assert!(w >= v);
        prop_assert!((p.survival(x).unwrap() - (1.0 - v)).abs() < 1e-15);
    }

    #[test]
    fn pdf_nonnegative_and_matches_hazard(p in params_strategy(), x in 0.01f64..8.0) {
        let pdf = p.pdf(x).unwrap();
        prop_assert!(pdf >= 0.0);
        match p.hazard(x) {
            Ok(h) if h.is_finite() => {
                let s = p.survival(x).unwrap();
                prop_assert!((pdf - h * s).abs() <= 1e-12 * pdf.abs().max(1.0));
            }
            Ok(_) => {}
            // Past the support of the baseline odds the density is zero.
            Err(wgmin_core::Error::Saturation { .. }) => prop_assert!(pdf == 0.0),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        }
    }

    #[test]
    fn quantile_inverts_cdf(p in params_strategy(), u in 0.01f64..0.99) {
        let x = p.quantile(u).unwrap();
        prop_assert!(x >= 0.0);
        prop_assert!((p.cdf(x).unwrap() - u).abs() < 1e-7);
    }

    #[test]
    fn generated_pairs_majorize(
        entries in prop::collection::vec(0.3f64..3.0, 2..6),
        seed in 0u64..1000,
        steps in 0usize..5,
        dec in any::<bool>(),
    ) {
        let cone = if dec { Cone::Decreasing } else { Cone::Increasing };
        let base = ParamVector::new(entries).unwrap();
        let (x, y) = random_majorization_pair(seed, &base, steps, cone);
        prop_assert!(majorizes(&x, &y).unwrap());
        prop_assert!(in_cone(&x, cone) && in_cone(&y, cone));
        prop_assert!((x.sum() - y.sum()).abs() < 1e-9);
        // Majorization is reflexive and antisymmetric up to permutation.
        prop_assert!(majorizes(&x, &x).unwrap());
    }

    #[test]
    fn psi_phi_inverse(u in 0.001f64..1.0, theta_c in 0.2f64..4.0, theta_g in 1.0f64..4.0) {
        for g in [
            ArchimedeanGenerator::Independence,
            ArchimedeanGenerator::Clayton { theta: theta_c },
            ArchimedeanGenerator::Gumbel { theta: theta_g },
        ] {
            let t = g.phi(u).unwrap();
            prop_assert!(t >= 0.0);
            prop_assert!((g.psi(t) - u).abs() < 1e-8, "{}", g.name());
            prop_assert!((g.log_psi(t) - u.ln()).abs() < 1e-8 * u.ln().abs().max(1.0));
        }
    }

    #[test]
    fn every_system_satisfies_reflexive_orders(
        alphas in prop::collection::vec(0.3f64..2.0, 1..4),
        beta in 0.8f64..3.0,
    ) {
        let b = BaselineModel::Exponential { rate: 1.0 };
        let units: Vec<_> = alphas
            .iter()
            .map(|&a| WeibullGParams::new(a, beta, 1.0, b).unwrap())
            .collect();
        let sys = SystemSpec::new(units).unwrap();
        let grid = Grid::new(0.05, 0.95, 60).unwrap();
        prop_assert!(check_st(&sys, &sys, &grid).unwrap().holds_strictly());
        prop_assert!(check_hr(&sys, &sys, &grid).unwrap().holds_strictly());
        prop_assert!(check_lr(&sys, &sys, &grid).unwrap().holds_strictly());
    }

    #[test]
    fn proportional_frailty_chains_the_orders(
        alpha in 0.3f64..1.5,
        bump in 0.1f64..2.0,
        beta in 0.8f64..3.0,
    ) {
        // Same gamma, larger alpha: lr holds, hence hr and st must hold.
        let b = BaselineModel::Exponential { rate: 1.0 };
        let small = SystemSpec::new(vec![
            WeibullGParams::new(alpha + bump, beta, 1.0, b).unwrap(),
        ])
        .unwrap();
        let large =
            SystemSpec::new(vec![WeibullGParams::new(alpha, beta, 1.0, b).unwrap()]).unwrap();
        let grid = Grid::new(0.05, 0.95, 60).unwrap();
        let lr = check_lr(&small, &large, &grid).unwrap();
        prop_assert_eq!(lr.status, VerdictStatus::Holds);
        prop_assert!(check_hr(&small, &large, &grid).unwrap().holds_strictly());
        prop_assert!(check_st(&small, &large, &grid).unwrap().holds_strictly());
    }

    #[test]
    fn sampling_matches_seed(p in params_strategy(), seed in 0u64..500) {
        let a = p.sample(seed, 16).unwrap();
        let b = p.sample(seed, 16).unwrap();
        prop_assert_eq!(a, b);
    }
}
