//! Monte Carlo estimators. Sample `i` draws from the ChaCha8 stream `i`
//! of the run seed, so results do not depend on the number of threads.

use super::components::meets_components;
use super::lattice::{LatticeBox, Point};
use super::wilson::{wilson_wired, LatticeForest, PartialWilson};
use super::SimError;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EstimateConfig {
    pub samples: usize,
    pub seed: u64,
}

/// Generator for sample `i` of a run.
pub fn sample_rng(seed: u64, i: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i as u64);
    rng
}

/// Applies `stat` to `samples` independent full forests, in sample order.
pub fn sample_forests<T, F>(bx: &LatticeBox, cfg: EstimateConfig, stat: F) -> Vec<T>
where
    T: Send,
    F: Fn(&LatticeForest) -> T + Sync,
{
    (0..cfg.samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = sample_rng(cfg.seed, i);
            stat(&wilson_wired(bx, &[], &mut rng))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConnectionEstimate {
    pub samples: usize,
    pub hits: usize,
    pub p: f64,
    /// 95% Wilson score interval.
    pub ci_low: f64,
    pub ci_high: f64,
}

/// Wilson score interval for `hits` successes in `n` trials.
pub fn wilson_interval(hits: usize, n: usize, z: f64) -> (f64, f64) {
    if n == 0 {
        return (0.0, 1.0);
    }
    let n = n as f64;
    let p = hits as f64 / n;
    let z2 = z * z;
    let centre = (p + z2 / (2.0 * n)) / (1.0 + z2 / n);
    let half = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / (1.0 + z2 / n);
    ((centre - half).max(0.0), (centre + half).min(1.0))
}

/// Fraction of samples in which every point of `k` lies in one component.
/// Only the branches from `k` are sampled.
pub fn estimate_connection(bx: &LatticeBox, k: &[Point], cfg: EstimateConfig) -> Result<ConnectionEstimate, SimError> {
    if cfg.samples == 0 {
        return Err(SimError::BadParameter("samples must be at least 1".into()));
    }
    if k.is_empty() {
        return Err(SimError::BadParameter("point set is empty".into()));
    }
    let sites = k.iter().map(|p| bx.index_or_err(p)).collect::<Result<Vec<_>, _>>()?;
    let hits = (0..cfg.samples)
        .into_par_iter()
        .map_init(
            || PartialWilson::new(bx.clone()),
            |pw, i| {
                let mut rng = sample_rng(cfg.seed, i);
                let labels = pw.labels(&sites, &mut rng);
                usize::from(labels.iter().all(|&l| l == labels[0]))
            },
        )
        .sum::<usize>();
    let (ci_low, ci_high) = wilson_interval(hits, cfg.samples, 1.96);
    Ok(ConnectionEstimate {
        samples: cfg.samples,
        hits,
        p: hits as f64 / cfg.samples as f64,
        ci_low,
        ci_high,
    })
}

/// Two points at graph distance `s`, centred in the box, with the
/// separation split between the first two axes (one axis when `d = 1`).
/// Splitting keeps both points further from the wired faces than an
/// axis-aligned pair.
pub fn separated_pair(bx: &LatticeBox, s: usize) -> Result<[Point; 2], SimError> {
    let s = s as i64;
    let steps: Vec<i64> = if bx.dimension() == 1 {
        vec![s]
    } else {
        vec![s - s / 2, s / 2]
    };
    let mut a = bx.center();
    let mut b = a.clone();
    for (axis, &k) in steps.iter().enumerate() {
        a[axis] -= k / 2;
        b[axis] += k - k / 2;
    }
    bx.index_or_err(&a)?;
    bx.index_or_err(&b)?;
    Ok([a, b])
}

#[derive(Clone, Debug, PartialEq)]
pub struct REstimate {
    /// Smallest `r` that met `m` components in at least one sample.
    pub threshold: usize,
    /// `(r, fraction of samples with a diameter-r set meeting m components)`.
    pub frequencies: Vec<(usize, f64)>,
    pub samples: usize,
}

/// Empirical `R(m)`: the smallest diameter of a vertex set seen to meet `m`
/// distinct components. A finite box only shows that such sets occur; the
/// estimate is one-sided.
pub fn estimate_r(bx: &LatticeBox, m: usize, r_max: usize, cfg: EstimateConfig) -> Result<REstimate, SimError> {
    if m < 2 {
        return Err(SimError::BadParameter("m must be at least 2".into()));
    }
    if cfg.samples == 0 || r_max == 0 {
        return Err(SimError::BadParameter("samples and r-max must be at least 1".into()));
    }
    // per sample, the least r <= r_max that works
    let least = sample_forests(bx, cfg, |f| (1..=r_max).find(|&r| meets_components(f, r, m)));
    let frequencies: Vec<(usize, f64)> = (1..=r_max)
        .map(|r| {
            let hits = least.iter().filter(|l| l.is_some_and(|x| x <= r)).count();
            (r, hits as f64 / cfg.samples as f64)
        })
        .collect();
    let threshold = least
        .iter()
        .flatten()
        .min()
        .copied()
        .ok_or(SimError::InconclusiveAtCap { r_max, m })?;
    Ok(REstimate {
        threshold,
        frequencies,
        samples: cfg.samples,
    })
}
