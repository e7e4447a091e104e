//! Vector majorization, ordered-cone membership, Schur-convexity probing and
//! r-convexity checking.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::BoolWitness;

/// Absolute tolerance on the total-sum equality in [`majorizes`]. Parameter
/// vectors are user-entered decimals, exact float equality would reject them.
pub const SUM_TOLERANCE: f64 = 1e-9;

/// A vector of positive reals.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamVector {
    entries: Vec<f64>,
}

impl ParamVector {
    pub fn new(entries: Vec<f64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Dimension("parameter vector must be nonempty".into()));
        }
        if let Some(&bad) = entries.iter().find(|e| !(e.is_finite() && **e > 0.0)) {
            return Err(Error::InvalidParameter {
                name: "entry",
                value: bad,
                reason: "all entries must be positive finite reals",
            });
        }
        Ok(ParamVector { entries })
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.entries.iter().sum()
    }

    fn sorted_increasing(&self) -> Vec<f64> {
        let mut v = self.entries.clone();
        v.sort_by(f64::total_cmp);
        v
    }

    /// Re-sorts the entries into the given cone.
    pub fn into_cone(&self, cone: Cone) -> ParamVector {
        let mut v = self.sorted_increasing();
        if cone == Cone::Decreasing {
            v.reverse();
        }
        ParamVector { entries: v }
    }
}

/// Which ordered positive cone a vector belongs to: entries nonincreasing
/// (D+), nondecreasing (E+), both (constant) or neither.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConeMembership {
    Decreasing,
    Increasing,
    Both,
    Neither,
}

/// A target cone for generated vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cone {
    Decreasing,
    Increasing,
}

/// True iff x majorizes y: with entries sorted increasingly the partial sums
/// of x stay below those of y and the totals agree.
pub fn majorizes(x: &ParamVector, y: &ParamVector) -> Result<bool> {
    if x.len() != y.len() {
        return Err(Error::Dimension(format!(
            "majorization needs equal lengths, got {} and {}",
            x.len(),
            y.len()
        )));
    }
    let xs = x.sorted_increasing();
    let ys = y.sorted_increasing();
    let mut px = 0.0;
    let mut py = 0.0;
    for j in 0..xs.len() - 1 {
        px += xs[j];
        py += ys[j];
        if px > py + SUM_TOLERANCE {
            return Ok(false);
        }
    }
    px += xs[xs.len() - 1];
    py += ys[ys.len() - 1];
    Ok((px - py).abs() <= SUM_TOLERANCE)
}

/// Classifies a vector by pairwise comparison; ties count for both cones.
pub fn cone_membership(v: &ParamVector) -> ConeMembership {
    let e = v.entries();
    let dec = e.windows(2).all(|w| w[0] >= w[1]);
    let inc = e.windows(2).all(|w| w[0] <= w[1]);
    match (dec, inc) {
        (true, true) => ConeMembership::Both,
        (true, false) => ConeMembership::Decreasing,
        (false, true) => ConeMembership::Increasing,
        (false, false) => ConeMembership::Neither,
    }
}

/// True when the vector lies in the requested cone (constant vectors count).
pub fn in_cone(v: &ParamVector, cone: Cone) -> bool {
    matches!(
        (cone_membership(v), cone),
        (ConeMembership::Both, _)
            | (ConeMembership::Decreasing, Cone::Decreasing)
            | (ConeMembership::Increasing, Cone::Increasing)
    )
}

/// Robin-Hood pair generation with a caller-provided rng; see
/// [`random_majorization_pair`].
pub fn majorization_pair_with_rng<R: Rng + ?Sized>(
    rng: &mut R,
    base: &ParamVector,
    steps: usize,
    cone: Cone,
) -> (ParamVector, ParamVector) {
    let x = base.into_cone(cone);
    let mut y = x.entries.clone();
    let n = y.len();
    let mut done = 0;
    let mut guard = 0;
    while done < steps && guard < steps * 20 + 50 {
        guard += 1;
        if n < 2 {
            break;
        }
        let i = rng.random_range(0..n);
        let j = rng.random_range(0..n);
        if i == j || y[i] == y[j] {
            continue;
        }
        let (hi, lo) = if y[i] > y[j] { (i, j) } else { (j, i) };
        // Move delta from the larger entry to the smaller one without crossing.
        let delta = rng.random::<f64>() * (y[hi] - y[lo]) / 2.0;
        y[hi] -= delta;
        y[lo] += delta;
        done += 1;
    }
    let y = ParamVector { entries: y }.into_cone(cone);
    (x, y)
}

/// Returns (x, y) with `majorizes(x, y)` guaranteed: y is the result of
/// `steps` random Robin-Hood transfers on x, both re-sorted into `cone`.
pub fn random_majorization_pair(
    seed: u64,
    base: &ParamVector,
    steps: usize,
    cone: Cone,
) -> (ParamVector, ParamVector) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    majorization_pair_with_rng(&mut rng, base, steps, cone)
}

/// Outcome of a Schur-convexity probe. This is a falsifier/corroborator on
/// sampled majorization pairs, not a decision procedure: Schur-convexity over
/// a continuum is not decidable by sampling.
#[derive(Debug, Clone, PartialEq)]
pub enum SchurClassification {
    ConsistentConvex,
    ConsistentConcave,
    Constant,
    Mixed {
        convex_witness: (ParamVector, ParamVector),
        concave_witness: (ParamVector, ParamVector),
    },
}

/// Probes f against `trials` random majorization pairs of dimension `dim`
/// and classifies the sign pattern of f(x) - f(y).
pub fn schur_probe<F>(
    mut f: F,
    dim: usize,
    trials: usize,
    seed: u64,
) -> Result<SchurClassification>
where
    F: FnMut(&ParamVector) -> Result<f64>,
{
    if dim < 2 {
        return Err(Error::Dimension("schur_probe needs dim >= 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut convex_witness = None;
    let mut concave_witness = None;
    for _ in 0..trials {
        let base = ParamVector::new(
            (0..dim).map(|_| rng.random_range(0.5..4.0)).collect(),
        )?;
        let steps = rng.random_range(1..=4);
        let cone = if rng.random::<bool>() {
            Cone::Decreasing
        } else {
            Cone::Increasing
        };
        let (x, y) = majorization_pair_with_rng(&mut rng, &base, steps, cone);
        let d = f(&x)? - f(&y)?;
        if d > 1e-9 && convex_witness.is_none() {
            convex_witness = Some((x, y));
        } else if d < -1e-9 && concave_witness.is_none() {
            concave_witness = Some((x, y));
        }
    }
    Ok(match (convex_witness, concave_witness) {
        (Some(cv), Some(cc)) => SchurClassification::Mixed {
            convex_witness: cv,
            concave_witness: cc,
        },
        (Some(_), None) => SchurClassification::ConsistentConvex,
        (None, Some(_)) => SchurClassification::ConsistentConcave,
        (None, None) => SchurClassification::Constant,
    })
}

/// Newton divided difference over the full point set.
pub(crate) fn divided_difference(xs: &[f64], ys: &[f64]) -> f64 {
    debug_assert_eq!(xs.len(), ys.len());
    let mut col = ys.to_vec();
    for order in 1..xs.len() {
        for i in 0..xs.len() - order {
            col[i] = (col[i + 1] - col[i]) / (xs[i + order] - xs[i]);
        }
    }
    col[0]
}

/// True iff the r-th order divided differences of f on the grid are all above
/// -1e-9. The witness is (window start x, offending divided difference).
///
/// Divided differences have the sign of f^(r) on each window, so this works
/// on non-uniform grids such as x = -ln y.
pub fn r_convexity_check<F>(
    mut f: F,
    r: usize,
    grid: &[f64],
) -> Result<BoolWitness<(f64, f64)>>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(1..=3).contains(&r) {
        return Err(Error::Domain(format!("r must be 1, 2 or 3, got {r}")));
    }
    if grid.len() < r + 2 {
        return Err(Error::Dimension(format!(
            "grid needs at least {} points for r = {r}",
            r + 2
        )));
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Domain("grid must be strictly increasing".into()));
    }
    let values: Vec<f64> = grid.iter().map(|&x| f(x)).collect::<Result<_>>()?;
    for i in 0..grid.len() - r {
        let dd = divided_difference(&grid[i..=i + r], &values[i..=i + r]);
        if dd < -1e-9 {
            return Ok(BoolWitness::fails((grid[i], dd)));
        }
    }
    Ok(BoolWitness::holds())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pv(v: &[f64]) -> ParamVector {
        ParamVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn majorizes_examples() {
        assert!(majorizes(&pv(&[4.0, 1.0, 1.0]), &pv(&[3.0, 1.5, 1.5])).unwrap());
        assert!(majorizes(&pv(&[1.0, 1.0]), &pv(&[1.0, 1.0])).unwrap());
        assert!(!majorizes(&pv(&[1.0, 2.0]), &pv(&[2.0, 0.5])).unwrap());
        assert!(majorizes(&pv(&[1.0]), &pv(&[1.0, 2.0])).is_err());
    }

    #[test]
    fn majorizes_counterexample_vectors() {
        // The non-outlier pair: sums 1.35 on both sides.
        assert!(majorizes(
            &pv(&[0.95, 0.3, 0.1]),
            &pv(&[0.95, 0.25, 0.15])
        )
        .unwrap());
        assert!(!majorizes(
            &pv(&[0.95, 0.25, 0.15]),
            &pv(&[0.95, 0.3, 0.1])
        )
        .unwrap());
    }

    #[test]
    fn cone_examples() {
        assert_eq!(
            cone_membership(&pv(&[3.0, 1.5, 1.5])),
            ConeMembership::Decreasing
        );
        assert_eq!(cone_membership(&pv(&[1.0, 1.0, 1.0])), ConeMembership::Both);
        assert_eq!(
            cone_membership(&pv(&[1.0, 3.0, 2.0])),
            ConeMembership::Neither
        );
        assert_eq!(
            cone_membership(&pv(&[1.0, 2.0, 3.0])),
            ConeMembership::Increasing
        );
    }

    #[test]
    fn pair_generation_properties() {
        let base = pv(&[4.0, 1.0, 2.5, 0.7]);
        for seed in 0..50 {
            let (x, y) = random_majorization_pair(seed, &base, 3, Cone::Decreasing);
            assert!(majorizes(&x, &y).unwrap(), "seed {seed}");
            assert!((x.sum() - y.sum()).abs() < 1e-12);
            assert!(in_cone(&x, Cone::Decreasing));
            assert!(in_cone(&y, Cone::Decreasing));
        }
        // steps = 0 returns the base twice.
        let (x, y) = random_majorization_pair(1, &base, 0, Cone::Increasing);
        assert_eq!(x, y);
        assert!(majorizes(&x, &y).unwrap());
    }

    #[test]
    fn schur_probe_examples() {
        let sum = |v: &ParamVector| Ok(v.sum());
        assert_eq!(
            schur_probe(sum, 3, 200, 11).unwrap(),
            SchurClassification::Constant
        );
        let max = |v: &ParamVector| Ok(v.entries().iter().cloned().fold(f64::MIN, f64::max));
        assert_eq!(
            schur_probe(max, 3, 200, 11).unwrap(),
            SchurClassification::ConsistentConvex
        );
        let neg_max =
            |v: &ParamVector| Ok(-v.entries().iter().cloned().fold(f64::MIN, f64::max));
        assert_eq!(
            schur_probe(neg_max, 3, 200, 11).unwrap(),
            SchurClassification::ConsistentConcave
        );
    }

    #[test]
    fn r_convexity_examples() {
        let grid: Vec<f64> = (0..100).map(|i| 0.1 + i as f64 * 0.1).collect();
        assert!(r_convexity_check(|x| Ok(x * x), 2, &grid).unwrap().holds);
        let sqrt = r_convexity_check(|x| Ok(x.sqrt()), 2, &grid).unwrap();
        assert!(!sqrt.holds);
        assert!(sqrt.witness.is_some());
        assert!(r_convexity_check(|x| Ok(x), 1, &grid).unwrap().holds);
        assert!(r_convexity_check(|x| Ok(x), 2, &[0.0, 1.0, 2.0]).is_err());
    }

    #[test]
    fn weibull_odds_is_2_convex_on_log_grid() {
        use crate::baseline::{BaselineModel, OddsFunction};
        let w = OddsFunction::new(BaselineModel::Weibull { rate: 0.02, shape: 2.0 }, 1.0)
            .unwrap();
        let mut grid: Vec<f64> = (0..500)
            .map(|i| -(0.99 - i as f64 * 0.98 / 499.0f64).ln())
            .collect();
        grid.sort_by(f64::total_cmp);
        let out = r_convexity_check(|x| w.value(x), 2, &grid).unwrap();
        assert!(out.holds);
    }
}
