use serde::{Deserialize, Serialize};

/// Exact per-iteration work and progress counters.
///
/// `point_centroid_dist_count` tallies every point-centroid distance actually
/// computed (cache hits are free); `centroid_centroid_dist_count` and
/// `skipped_pair_count` split the k(k-1)/2 centroid pairs into computed and
/// bound-carried ones.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IterationMetrics {
    pub iteration: usize,
    pub point_centroid_dist_count: u64,
    pub centroid_centroid_dist_count: u64,
    pub skipped_pair_count: u64,
    pub frozen_cluster_count: usize,
    pub moved_point_count: usize,
    pub sse: f64,
}

/// Per-iteration metrics for a whole run, in iteration order starting at the
/// initial assignment (iteration 0).
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct MetricsLog {
    pub iterations: Vec<IterationMetrics>,
}

impl MetricsLog {
    pub fn push(&mut self, metrics: IterationMetrics) {
        self.iterations.push(metrics);
    }

    pub fn last(&self) -> Option<&IterationMetrics> {
        self.iterations.last()
    }

    /// Total point-centroid distance computations across all iterations.
    pub fn total_point_distances(&self) -> u64 {
        self.iterations.iter().map(|m| m.point_centroid_dist_count).sum()
    }

    /// Total centroid-centroid distance computations across all iterations.
    pub fn total_centroid_distances(&self) -> u64 {
        self.iterations.iter().map(|m| m.centroid_centroid_dist_count).sum()
    }
}

/// Outcome of a single engine iteration.
#[derive(Debug, Clone, Copy)]
pub struct IterationReport {
    pub iteration: usize,
    pub moved_point_count: usize,
    pub frozen_cluster_count: usize,
    /// True iff no point changed cluster, i.e. a fixed point was reached.
    pub converged: bool,
    pub metrics: IterationMetrics,
}
