//! Mutable clustering state threaded through the engine and the Lloyd
//! reference path.
//!
//! The state is single-writer: parallel sections only read centroid
//! snapshots and caches, and every mutation is applied by the coordinator in
//! ascending index order so results do not depend on the worker count.

use rayon::prelude::*;

use crate::cluster::BallCluster;
use crate::dataset::Dataset;
use crate::geometry::{centroid_shift, squared_distance, update_centroid};
use crate::metrics::IterationMetrics;
use crate::neighbors::DistanceBoundMatrix;

/// Full clustering state: clusters, the assignment vector, the bound matrix
/// and the per-point distance caches.
#[derive(Debug, Clone)]
pub struct ClusteringState<'a> {
    pub dataset: &'a Dataset,
    pub clusters: Vec<BallCluster>,
    /// Cluster id of each point.
    pub assignment: Vec<usize>,
    /// Completed iterations; 0 right after the initial assignment.
    pub iteration: usize,
    pub bounds: DistanceBoundMatrix,
    /// Distance of each point to its own centroid.
    pub point_center_dist: Vec<f64>,
    /// Squared companion of `point_center_dist`; the comparison currency of
    /// both engines and the source of SSE values.
    pub point_center_dist_sq: Vec<f64>,
}

impl<'a> ClusteringState<'a> {
    /// State with the given initial centroids and no meaningful assignment
    /// yet; call [`ClusteringState::initial_assignment`] next.
    pub fn new(dataset: &'a Dataset, centroids: Vec<Vec<f64>>) -> Self {
        let k = centroids.len();
        let n = dataset.len();
        let clusters: Vec<BallCluster> = centroids
            .into_iter()
            .enumerate()
            .map(|(id, c)| BallCluster::new(id, c))
            .collect();
        Self {
            dataset,
            bounds: DistanceBoundMatrix::vacuous(k),
            clusters,
            assignment: vec![0; n],
            iteration: 0,
            point_center_dist: vec![0.0; n],
            point_center_dist_sq: vec![0.0; n],
        }
    }

    pub fn k(&self) -> usize {
        self.clusters.len()
    }

    /// Iteration 0: assign every point to its nearest initial centroid with a
    /// full scan, n*k distance computations. All stability flags start false.
    pub fn initial_assignment(&mut self) -> IterationMetrics {
        let n = self.dataset.len();
        let k = self.k();
        let dataset = self.dataset;
        let clusters = &self.clusters;
        let targets: Vec<(usize, f64)> = (0..n)
            .into_par_iter()
            .map(|p| nearest_full(dataset.point(p), clusters, None))
            .collect();
        for (p, (target, sq)) in targets.into_iter().enumerate() {
            self.assignment[p] = target;
            self.point_center_dist_sq[p] = sq;
            self.point_center_dist[p] = sq.sqrt();
        }
        self.rebuild_members();
        for c in self.clusters.iter_mut() {
            c.stable = false;
        }
        IterationMetrics {
            iteration: 0,
            point_centroid_dist_count: (n * k) as u64,
            centroid_centroid_dist_count: 0,
            skipped_pair_count: 0,
            frozen_cluster_count: 0,
            moved_point_count: n,
            sse: self.cached_sse(),
        }
    }

    /// Recomputes the centroid and shift of every cluster whose membership
    /// changed in the last assignment step. Unchanged clusters keep their
    /// centroid with shift 0; emptied clusters keep their previous centroid.
    pub fn refresh_centroids(&mut self) {
        let dataset = self.dataset;
        let updates: Vec<(usize, Option<Vec<f64>>)> = self
            .clusters
            .par_iter()
            .filter(|c| !c.stable)
            .map(|c| (c.id, update_centroid(&c.members, dataset).ok()))
            .collect();
        for c in self.clusters.iter_mut() {
            c.shift = 0.0;
        }
        for (id, new_centroid) in updates {
            let cluster = &mut self.clusters[id];
            match new_centroid {
                Some(centroid) => {
                    cluster.prev_centroid = std::mem::replace(&mut cluster.centroid, centroid);
                    cluster.shift = centroid_shift(&cluster.prev_centroid, &cluster.centroid);
                }
                // Empty-cluster rule: keep the previous centroid, shift 0.
                None => {
                    cluster.prev_centroid = cluster.centroid.clone();
                    cluster.radius = 0.0;
                }
            }
        }
    }

    /// Rebuilds all member lists from the assignment vector, ascending.
    pub fn rebuild_members(&mut self) {
        for c in self.clusters.iter_mut() {
            c.members.clear();
        }
        for (p, &c) in self.assignment.iter().enumerate() {
            self.clusters[c].members.push(p);
        }
    }

    /// SSE from the per-point cache, summed in ascending point order.
    pub(crate) fn cached_sse(&self) -> f64 {
        self.point_center_dist_sq.iter().sum()
    }
}

/// The k-means objective, recomputed from scratch: the sum of squared
/// distances of every point to its assigned centroid, in point order.
pub fn sse(state: &ClusteringState) -> f64 {
    let mut acc = 0.0;
    for (p, &c) in state.assignment.iter().enumerate() {
        acc += squared_distance(state.dataset.point(p), &state.clusters[c].centroid);
    }
    acc
}

/// Full argmin over all centroids with the shared tie rule: keep the current
/// cluster when it is among the minimizers, otherwise take the smallest
/// cluster id. Returns the winner and its squared distance.
pub(crate) fn nearest_full(
    point: &[f64],
    clusters: &[BallCluster],
    current: Option<usize>,
) -> (usize, f64) {
    let mut best_id = 0usize;
    let mut best_sq = f64::INFINITY;
    let mut current_sq = f64::INFINITY;
    for c in clusters {
        let sq = squared_distance(point, &c.centroid);
        if current == Some(c.id) {
            current_sq = sq;
        }
        if sq < best_sq {
            best_sq = sq;
            best_id = c.id;
        }
    }
    match current {
        Some(cur) if current_sq == best_sq => (cur, best_sq),
        _ => (best_id, best_sq),
    }
}
