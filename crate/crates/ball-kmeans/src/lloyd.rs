//! Naive full-scan k-means: the ground-truth oracle for the accelerated
//! engine.
//!
//! Every behavioral rule (tie breaking, empty clusters, accumulation order,
//! synchronous updates) is shared with the engine through common code paths,
//! so paired runs isolate exactly the acceleration logic.

use rayon::prelude::*;

use crate::dataset::Dataset;
use crate::engine::{initialize_centroids, update_stability_flags, AuditReport, RunOptions, RunResult};
use crate::error::{Error, Result};
use crate::metrics::{IterationMetrics, IterationReport, MetricsLog};
use crate::state::{nearest_full, ClusteringState};

/// One naive iteration: synchronous centroid update followed by a full
/// n*k-distance assignment scan.
pub fn lloyd_iterate(state: &mut ClusteringState) -> IterationReport {
    let t = state.iteration + 1;
    let n = state.dataset.len();
    let k = state.k();

    state.refresh_centroids();

    let dataset = state.dataset;
    let clusters = &state.clusters;
    let assignment = &state.assignment;
    let targets: Vec<(usize, f64)> = (0..n)
        .into_par_iter()
        .map(|p| nearest_full(dataset.point(p), clusters, Some(assignment[p])))
        .collect();

    let mut move_pairs = Vec::new();
    for (p, (target, sq)) in targets.into_iter().enumerate() {
        let current = state.assignment[p];
        if target != current {
            move_pairs.push((current, target));
            state.assignment[p] = target;
        }
        state.point_center_dist_sq[p] = sq;
        state.point_center_dist[p] = sq.sqrt();
    }
    state.rebuild_members();
    update_stability_flags(&mut state.clusters, &move_pairs);

    state.iteration = t;
    let metrics = IterationMetrics {
        iteration: t,
        point_centroid_dist_count: (n * k) as u64,
        centroid_centroid_dist_count: 0,
        skipped_pair_count: 0,
        frozen_cluster_count: 0,
        moved_point_count: move_pairs.len(),
        sse: state.cached_sse(),
    };
    IterationReport {
        iteration: t,
        moved_point_count: metrics.moved_point_count,
        frozen_cluster_count: 0,
        converged: metrics.moved_point_count == 0,
        metrics,
    }
}

/// Runs naive k-means with the same seeding, options and output shape as
/// [`crate::engine::run_ball`]. Freezing, bound-skipping and audit options
/// are irrelevant here and ignored.
pub fn run_lloyd(dataset: &Dataset, opts: &RunOptions) -> Result<RunResult> {
    if opts.max_iter == 0 {
        return Err(Error::InvalidMaxIter);
    }
    let start = std::time::Instant::now();
    let centroids = initialize_centroids(dataset, opts.k, opts.init, opts.seed)?;
    let mut state = ClusteringState::new(dataset, centroids);
    let metrics0 = state.initial_assignment();

    let mut log = MetricsLog::default();
    log.push(metrics0);
    let mut wall_ms = vec![start.elapsed().as_secs_f64() * 1e3];
    let mut trace = Vec::new();
    if opts.trace {
        trace.push(state.assignment.clone());
    }

    let mut iterations = 0;
    let mut converged = false;
    for _ in 0..opts.max_iter {
        let tick = std::time::Instant::now();
        let report = lloyd_iterate(&mut state);
        wall_ms.push(tick.elapsed().as_secs_f64() * 1e3);
        iterations += 1;
        log.push(report.metrics);
        if opts.trace {
            trace.push(state.assignment.clone());
        }
        if report.converged {
            converged = true;
            break;
        }
    }

    Ok(RunResult {
        assignment: state.assignment,
        centroids: state.clusters.into_iter().map(|c| c.centroid).collect(),
        metrics: log,
        iterations,
        converged,
        audit: AuditReport::default(),
        trace,
        wall_ms,
    })
}
