//! Seeded Gaussian-mixture generator for benchmarks and tests.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::geometry::distance;

const PLACEMENT_ATTEMPTS: usize = 1000;

/// A generated mixture: the points, the component of every point, and the
/// component means.
#[derive(Debug, Clone)]
pub struct GaussianMixture {
    pub dataset: Dataset,
    /// Ground-truth component of each point.
    pub labels: Vec<usize>,
    pub means: Vec<Vec<f64>>,
}

/// Draws `k_true` unit-variance Gaussian components with pairwise mean
/// distance at least `separation`, then deals `n` points round-robin across
/// components. Deterministic per seed.
pub fn generate_gaussian_mixture(
    n: usize,
    d: usize,
    k_true: usize,
    separation: f64,
    seed: u64,
) -> Result<GaussianMixture> {
    if k_true == 0 || n < k_true || !(separation > 0.0) {
        return Err(Error::InvalidMixture { n, k: k_true, separation });
    }
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // Hypercube wide enough to fit k_true means at the requested spacing;
    // placement shares a total attempt budget so dense packings fail loudly.
    let side = 2.0 * separation * (k_true as f64).powf(1.0 / d as f64);
    let mut means: Vec<Vec<f64>> = Vec::with_capacity(k_true);
    let mut attempts = 0usize;
    while means.len() < k_true {
        if attempts >= PLACEMENT_ATTEMPTS {
            return Err(Error::Placement {
                k: k_true,
                separation,
                attempts: PLACEMENT_ATTEMPTS,
            });
        }
        attempts += 1;
        let candidate: Vec<f64> = (0..d).map(|_| rng.random_range(0.0..side)).collect();
        if means.iter().all(|m| distance(m, &candidate) >= separation) {
            means.push(candidate);
        }
    }

    let mut coords = Vec::with_capacity(n * d);
    let mut labels = Vec::with_capacity(n);
    for i in 0..n {
        let component = i % k_true;
        let mean = &means[component];
        for j in 0..d {
            let noise: f64 = rng.sample(StandardNormal);
            coords.push(mean[j] + noise);
        }
        labels.push(component);
    }
    let dataset = Dataset::from_flat(n, d, coords)?;
    Ok(GaussianMixture { dataset, labels, means })
}
