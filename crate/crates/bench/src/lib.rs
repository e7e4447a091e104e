//! Fixture builders shared by the benchmarks.

use wgmin_core::baseline::BaselineModel;
use wgmin_core::copula::ArchimedeanGenerator;
use wgmin_core::systems::SystemSpec;
use wgmin_core::weibull_g::WeibullGParams;

/// A four-unit independent system with heterogeneous frailty and scale.
pub fn independent_system() -> SystemSpec {
    let b = BaselineModel::Exponential { rate: 1.0 };
    let units = (0..4)
        .map(|i| {
            WeibullGParams::new(0.5 + 0.4 * i as f64, 2.0, 0.8 + 0.1 * i as f64, b).unwrap()
        })
        .collect();
    SystemSpec::new(units).unwrap()
}

/// The same units coupled through a Clayton generator.
pub fn clayton_system() -> SystemSpec {
    independent_system()
        .with_generator(ArchimedeanGenerator::Clayton { theta: 2.0 })
        .unwrap()
}

/// A single component with a Burr baseline, the costliest quantile path.
pub fn burr_unit() -> WeibullGParams {
    WeibullGParams::new(1.5, 5.0, 2.0, BaselineModel::BurrXii { c: 3.0, k: 0.35 }).unwrap()
}
