//! The two built-in counterexample configurations.

use crate::baseline::BaselineModel;
use crate::systems::SystemSpec;
use crate::weibull_g::WeibullGParams;

fn system(alphas: &[f64], beta: f64, gammas: &[f64], baseline: BaselineModel) -> SystemSpec {
    let units = alphas
        .iter()
        .zip(gammas)
        .map(|(&a, &g)| WeibullGParams::new(a, beta, g, baseline).expect("preset parameters"))
        .collect();
    SystemSpec::new(units).expect("preset parameters")
}

/// First counterexample, outlier half: Burr(3, 0.35) baseline, beta = 5,
/// shared scales (2, 1.5, 1.5), frailties (4, 1, 1) against (3, 1.5, 1.5)
/// in multiple-outlier structure. The lr order holds here.
pub fn ce31_outlier_pair() -> (SystemSpec, SystemSpec) {
    let b = BaselineModel::BurrXii { c: 3.0, k: 0.35 };
    let gammas = [2.0, 1.5, 1.5];
    let a = system(&[4.0, 1.0, 1.0], 5.0, &gammas, b)
        .with_outlier_split(1, 2)
        .expect("preset split");
    let l = system(&[3.0, 1.5, 1.5], 5.0, &gammas, b)
        .with_outlier_split(1, 2)
        .expect("preset split");
    (a, l)
}

/// First counterexample, non-outlier half: same baseline and scales,
/// frailties (0.95, 0.3, 0.1) against (0.95, 0.25, 0.15), which majorize but
/// do not form a multiple-outlier structure.
///
/// Because the last two scales coincide, each minimum depends on the last
/// two frailties only through their sum, which is 0.4 on both sides: the two
/// minima are identically distributed and the density ratio is constant.
pub fn ce31_non_outlier_pair() -> (SystemSpec, SystemSpec) {
    let b = BaselineModel::BurrXii { c: 3.0, k: 0.35 };
    let gammas = [2.0, 1.5, 1.5];
    let a = system(&[0.95, 0.3, 0.1], 5.0, &gammas, b);
    let l = system(&[0.95, 0.25, 0.15], 5.0, &gammas, b);
    (a, l)
}

/// Second counterexample: Weibull(0.02, 2) baseline, beta = 3.4, shared
/// frailties (3, 3, 1), scales (3, 3, 1) against (2.5, 2.5, 2). The scale
/// vectors majorize, the hr order holds, but the density ratio is
/// non-monotone: no lr order.
pub fn ce32_pair() -> (SystemSpec, SystemSpec) {
    let b = BaselineModel::Weibull {
        rate: 0.02,
        shape: 2.0,
    };
    let alphas = [3.0, 3.0, 1.0];
    let a = system(&alphas, 3.4, &[3.0, 3.0, 1.0], b)
        .with_outlier_split(2, 1)
        .expect("preset split");
    let l = system(&alphas, 3.4, &[2.5, 2.5, 2.0], b)
        .with_outlier_split(2, 1)
        .expect("preset split");
    (a, l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::majorization::{majorizes, ParamVector};
    use crate::orderlab::{
        check_hr, check_lr, check_st, log_density_ratio, monotonicity_report, Grid,
        Monotonicity, VerdictStatus,
    };

    #[test]
    fn ce31_outlier_lr_holds() {
        let (a, l) = ce31_outlier_pair();
        let grid = Grid::reproduction();
        let v = check_lr(&a, &l, &grid).unwrap();
        assert_eq!(v.status, VerdictStatus::Holds);
        assert!(check_hr(&a, &l, &grid).unwrap().holds_strictly());
        assert!(check_st(&a, &l, &grid).unwrap().holds_strictly());
    }

    #[test]
    fn ce31_non_outlier_minima_coincide() {
        // The degenerate structure: both minima share the same distribution,
        // so the density ratio classifies as flat rather than non-monotone.
        let (a, l) = ce31_non_outlier_pair();
        let av = ParamVector::new(a.alphas()).unwrap();
        let lv = ParamVector::new(l.alphas()).unwrap();
        assert!(majorizes(&av, &lv).unwrap());
        let grid = Grid::reproduction();
        for x in grid.xs() {
            let ea = a.exponent_sum(x).unwrap();
            let eb = l.exponent_sum(x).unwrap();
            assert!((ea - eb).abs() <= 1e-9 * ea.abs().max(1.0), "x = {x}");
        }
        let ratios: Vec<f64> = log_density_ratio(&a, &l, &grid)
            .unwrap()
            .into_iter()
            .map(|r| r.unwrap())
            .collect();
        assert_eq!(
            monotonicity_report(&grid.xs(), &ratios, 1e-9).unwrap(),
            Monotonicity::Flat
        );
        assert!(check_lr(&a, &l, &grid).unwrap().holds_strictly());
    }

    #[test]
    fn ce32_hr_holds_lr_fails() {
        let (a, l) = ce32_pair();
        let grid = Grid::reproduction();
        assert!(check_hr(&a, &l, &grid).unwrap().holds_strictly());
        let v = check_lr(&a, &l, &grid).unwrap();
        assert_eq!(v.status, VerdictStatus::Fails);
        assert!(v.witness.is_some());
        // Non-monotone, not merely decreasing: the ratio rises then falls.
        let ratios: Vec<f64> = log_density_ratio(&a, &l, &grid)
            .unwrap()
            .into_iter()
            .map(|r| r.unwrap())
            .collect();
        assert!(matches!(
            monotonicity_report(&grid.xs(), &ratios, 1e-9).unwrap(),
            Monotonicity::NonMonotone { .. }
        ));
    }

    #[test]
    fn ce32_scale_vectors_majorize() {
        let g = ParamVector::new(vec![3.0, 3.0, 1.0]).unwrap();
        let d = ParamVector::new(vec![2.5, 2.5, 2.0]).unwrap();
        assert!(majorizes(&g, &d).unwrap());
    }
}
