//! The accelerated iteration driver: seeding, centroid/radius/shift updates,
//! bound refresh, neighbor search, cluster freezing and annulus-restricted
//! reassignment.
//!
//! One call to [`iterate`] performs, in order: centroid updates for clusters
//! whose membership changed, radius and distance-cache refresh, bound-matrix
//! refresh, neighbor-list rebuild, the freeze check, restricted reassignment
//! of active-area points, atomic move application, stability-flag update and
//! metrics collection. The produced assignments match a naive full-scan
//! k-means iteration for iteration.

use rayon::prelude::*;

use crate::cluster::BallCluster;
use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::geometry::{compute_radius, distance, squared_distance};
use crate::metrics::{IterationMetrics, IterationReport, MetricsLog};
use crate::neighbors::{build_neighbor_lists, is_neighbor, DistanceBoundMatrix, NeighborLists};
use crate::partition::build_partition;
use crate::state::{nearest_full, ClusteringState};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Centroid seeding strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InitMethod {
    /// k distinct points chosen without replacement.
    RandomPoints,
    /// Squared-distance-weighted seeding (k-means++).
    KMeansPlusPlus,
}

/// Options shared by the accelerated engine and the Lloyd reference runner.
#[derive(Debug, Clone)]
pub struct RunOptions {
    pub k: usize,
    pub init: InitMethod,
    pub seed: u64,
    pub max_iter: usize,
    /// Skip whole clusters whose neighborhood is stable.
    pub freezing: bool,
    /// Carry centroid-centroid lower bounds between iterations.
    pub bound_skipping: bool,
    /// Verify every pruning decision against a full scan while running.
    pub audit: bool,
    /// Record the assignment vector after every iteration.
    pub trace: bool,
}

impl RunOptions {
    pub fn new(k: usize, seed: u64) -> Self {
        Self {
            k,
            init: InitMethod::KMeansPlusPlus,
            seed,
            max_iter: 300,
            freezing: true,
            bound_skipping: true,
            audit: false,
            trace: false,
        }
    }
}

/// Violation counters from audited runs; all zero on a correct run.
#[derive(Debug, Clone, Copy, Default)]
pub struct AuditReport {
    pub checked_points: u64,
    /// Stable-area points whose full-scan argmin left their cluster.
    pub stable_violations: u64,
    /// Annulus points whose restricted argmin differs from the full scan.
    pub annulus_violations: u64,
    /// Members of frozen clusters that a full scan would have moved.
    pub frozen_violations: u64,
    /// Carried lower bounds that exceed the true centroid distance.
    pub bound_violations: u64,
    /// Skipped centroid pairs that are in fact neighbors.
    pub skipped_pair_violations: u64,
}

impl AuditReport {
    pub fn is_clean(&self) -> bool {
        self.stable_violations == 0
            && self.annulus_violations == 0
            && self.frozen_violations == 0
            && self.bound_violations == 0
            && self.skipped_pair_violations == 0
    }
}

/// Outcome of a full clustering run.
#[derive(Debug, Clone)]
pub struct RunResult {
    pub assignment: Vec<usize>,
    pub centroids: Vec<Vec<f64>>,
    pub metrics: MetricsLog,
    /// Completed engine iterations, excluding the initial assignment.
    pub iterations: usize,
    pub converged: bool,
    pub audit: AuditReport,
    /// Assignment after each recorded iteration (only when `trace` is set).
    pub trace: Vec<Vec<usize>>,
    /// Wall time of each recorded iteration in milliseconds, aligned with
    /// `metrics.iterations`.
    pub wall_ms: Vec<f64>,
}

/// Seeds k initial centroids from the dataset. Identical seeds produce
/// identical centroids.
pub fn initialize_centroids(
    dataset: &Dataset,
    k: usize,
    method: InitMethod,
    seed: u64,
) -> Result<Vec<Vec<f64>>> {
    let n = dataset.len();
    if k == 0 || k > n {
        return Err(Error::InvalidK { k, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match method {
        InitMethod::RandomPoints => {
            let picks = rand::seq::index::sample(&mut rng, n, k);
            Ok(picks.into_iter().map(|p| dataset.point(p).to_vec()).collect())
        }
        InitMethod::KMeansPlusPlus => {
            let first = rng.random_range(0..n);
            let mut chosen = vec![false; n];
            chosen[first] = true;
            let mut centroids = vec![dataset.point(first).to_vec()];
            let mut min_sq: Vec<f64> = (0..n)
                .map(|p| squared_distance(dataset.point(p), &centroids[0]))
                .collect();
            for _ in 1..k {
                let total: f64 = min_sq.iter().sum();
                let next = if total > 0.0 {
                    let target = rng.random_range(0.0..total);
                    let mut acc = 0.0;
                    let mut pick = None;
                    let mut last_nonzero = first;
                    for (p, &w) in min_sq.iter().enumerate() {
                        if w > 0.0 {
                            last_nonzero = p;
                        }
                        acc += w;
                        if acc > target {
                            pick = Some(p);
                            break;
                        }
                    }
                    pick.unwrap_or(last_nonzero)
                } else {
                    // Every remaining point coincides with a chosen centroid;
                    // fall back to the smallest unchosen index.
                    (0..n).find(|&p| !chosen[p]).expect("k <= n leaves a point unchosen")
                };
                chosen[next] = true;
                let centroid = dataset.point(next).to_vec();
                for p in 0..n {
                    let sq = squared_distance(dataset.point(p), &centroid);
                    if sq < min_sq[p] {
                        min_sq[p] = sq;
                    }
                }
                centroids.push(centroid);
            }
            Ok(centroids)
        }
    }
}

/// A buffered reassignment decided during the scan and applied afterwards.
#[derive(Debug, Clone, Copy)]
struct Move {
    point: usize,
    from: usize,
    to: usize,
    dist_sq: f64,
}

/// Marks each cluster stable iff no point entered or left it in the step
/// that produced `moves`.
pub fn update_stability_flags(clusters: &mut [BallCluster], moves: &[(usize, usize)]) {
    let mut touched = vec![false; clusters.len()];
    for &(from, to) in moves {
        touched[from] = true;
        touched[to] = true;
    }
    for c in clusters.iter_mut() {
        c.stable = !touched[c.id];
    }
}

/// A cluster is frozen for one iteration when its own membership and the
/// membership of every current neighbor survived the last step unchanged;
/// its points provably cannot move, so it skips reassignment entirely.
pub fn should_freeze(clusters: &[BallCluster], neighbors: &NeighborLists, i: usize) -> bool {
    clusters[i].stable && neighbors.of(i).iter().all(|e| clusters[e.cluster].stable)
}

/// Argmin over the point's own cluster and the given neighbor candidates,
/// with the shared tie rule (keep current, else smallest id). The own-cluster
/// distance comes from the cache; only candidate distances are computed.
/// Returns the winner, its squared distance and the computation count.
pub(crate) fn restricted_target(
    x: &[f64],
    own_id: usize,
    own_sq: f64,
    candidates: &[crate::neighbors::NeighborEntry],
    clusters: &[BallCluster],
) -> (usize, f64, u64) {
    let mut best_id = own_id;
    let mut best_sq = own_sq;
    for entry in candidates {
        let sq = squared_distance(x, &clusters[entry.cluster].centroid);
        if sq < best_sq {
            best_sq = sq;
            best_id = entry.cluster;
        } else if sq == best_sq && best_id != own_id && entry.cluster < best_id {
            best_id = entry.cluster;
        }
    }
    (best_id, best_sq, candidates.len() as u64)
}

/// Runs one accelerated iteration; see the module docs for the step order.
pub fn iterate(
    state: &mut ClusteringState,
    opts: &RunOptions,
    audit: &mut AuditReport,
) -> Result<IterationReport> {
    let t = state.iteration + 1;
    let dataset = state.dataset;
    let mut point_dists = 0u64;

    // (1) centroids and shifts for clusters whose membership changed
    state.refresh_centroids();

    // (2) radii and the point-to-own-centroid cache for those clusters
    let radius_updates: Vec<(usize, f64, Vec<crate::geometry::MemberDistance>)> = state
        .clusters
        .par_iter()
        .filter(|c| !c.stable)
        .map(|c| {
            let (radius, dists) = compute_radius(&c.members, &c.centroid, dataset);
            (c.id, radius, dists)
        })
        .collect();
    for (id, radius, dists) in radius_updates {
        state.clusters[id].radius = radius;
        point_dists += dists.len() as u64;
        for md in dists {
            state.point_center_dist[md.point] = md.dist;
            state.point_center_dist_sq[md.point] = md.dist_sq;
        }
    }

    // (3) refresh centroid-centroid bounds
    let (cc_dists, skipped_pairs) = state.bounds.refresh(&state.clusters, opts.bound_skipping);

    // (4) neighbor lists from the refreshed matrix
    let neighbors = build_neighbor_lists(&state.clusters, &state.bounds);

    // (5) freeze check
    let frozen: Vec<bool> = (0..state.k())
        .map(|i| opts.freezing && should_freeze(&state.clusters, &neighbors, i))
        .collect();
    let frozen_count = frozen.iter().filter(|&&f| f).count();

    // (6) annulus-restricted reassignment of active-area points
    let clusters = &state.clusters;
    let cache = &state.point_center_dist;
    let cache_sq = &state.point_center_dist_sq;
    let scanned: Vec<Result<(Vec<Move>, u64)>> = (0..state.k())
        .into_par_iter()
        .map(|i| {
            let cluster = &clusters[i];
            if frozen[i] {
                return Ok((Vec::new(), 0));
            }
            let list = neighbors.of(i);
            if list.is_empty() {
                // No neighbors: the stable area is the whole ball.
                return Ok((Vec::new(), 0));
            }
            let partition = build_partition(cluster, list);
            let mut moves = Vec::new();
            let mut dists = 0u64;
            for &p in &cluster.members {
                let region = partition.locate(cache[p])?;
                if region == 0 {
                    continue;
                }
                let (target, target_sq, computed) =
                    restricted_target(dataset.point(p), i, cache_sq[p], &list[..region], clusters);
                dists += computed;
                if target != i {
                    moves.push(Move { point: p, from: i, to: target, dist_sq: target_sq });
                }
            }
            Ok((moves, dists))
        })
        .collect();

    let mut moves = Vec::new();
    for scan in scanned {
        let (batch, dists) = scan?;
        point_dists += dists;
        moves.extend(batch);
    }
    moves.sort_unstable_by_key(|m| m.point);

    if opts.audit {
        audit_iteration(state, &neighbors, &frozen, &moves, audit)?;
    }

    // (7) apply moves atomically, ascending by point index
    for m in &moves {
        state.assignment[m.point] = m.to;
        state.point_center_dist_sq[m.point] = m.dist_sq;
        state.point_center_dist[m.point] = m.dist_sq.sqrt();
    }
    state.rebuild_members();

    // (8) stability flags for the completed step
    let move_pairs: Vec<(usize, usize)> = moves.iter().map(|m| (m.from, m.to)).collect();
    update_stability_flags(&mut state.clusters, &move_pairs);

    // (9) metrics
    state.iteration = t;
    let metrics = IterationMetrics {
        iteration: t,
        point_centroid_dist_count: point_dists,
        centroid_centroid_dist_count: cc_dists,
        skipped_pair_count: skipped_pairs,
        frozen_cluster_count: frozen_count,
        moved_point_count: moves.len(),
        sse: state.cached_sse(),
    };
    Ok(IterationReport {
        iteration: t,
        moved_point_count: metrics.moved_point_count,
        frozen_cluster_count: frozen_count,
        converged: metrics.moved_point_count == 0,
        metrics,
    })
}

/// Cross-checks every pruning decision of the current iteration against a
/// full scan. Runs before moves are applied; distances computed here are not
/// counted in the metrics.
fn audit_iteration(
    state: &ClusteringState,
    neighbors: &NeighborLists,
    frozen: &[bool],
    moves: &[Move],
    audit: &mut AuditReport,
) -> Result<()> {
    let dataset = state.dataset;
    let clusters = &state.clusters;
    let mut chosen = state.assignment.clone();
    for m in moves {
        chosen[m.point] = m.to;
    }

    #[derive(Default)]
    struct Tally {
        checked: u64,
        stable: u64,
        annulus: u64,
        frozen: u64,
    }

    let tallies: Vec<Result<Tally>> = (0..state.k())
        .into_par_iter()
        .map(|i| {
            let cluster = &clusters[i];
            let partition = build_partition(cluster, neighbors.of(i));
            let mut tally = Tally::default();
            for &p in &cluster.members {
                let region = partition.locate(state.point_center_dist[p])?;
                let (global, _) = nearest_full(dataset.point(p), clusters, Some(i));
                tally.checked += 1;
                if frozen[i] {
                    if global != i {
                        tally.frozen += 1;
                    }
                } else if region == 0 {
                    if global != i {
                        tally.stable += 1;
                    }
                } else if global != chosen[p] {
                    tally.annulus += 1;
                }
            }
            Ok(tally)
        })
        .collect();
    for tally in tallies {
        let tally = tally?;
        audit.checked_points += tally.checked;
        audit.stable_violations += tally.stable;
        audit.annulus_violations += tally.annulus;
        audit.frozen_violations += tally.frozen;
    }

    for i in 0..state.k() {
        for j in (i + 1)..state.k() {
            let entry = state.bounds.get(i, j);
            if entry.exact {
                continue;
            }
            let fresh = distance(&clusters[i].centroid, &clusters[j].centroid);
            if entry.value > fresh {
                audit.bound_violations += 1;
            }
            if is_neighbor(clusters[i].radius, fresh) || is_neighbor(clusters[j].radius, fresh) {
                audit.skipped_pair_violations += 1;
            }
        }
    }
    Ok(())
}

/// Runs the accelerated algorithm to a fixed point or `max_iter`, whichever
/// comes first. Deterministic for fixed inputs.
pub fn run_ball(dataset: &Dataset, opts: &RunOptions) -> Result<RunResult> {
    if opts.max_iter == 0 {
        return Err(Error::InvalidMaxIter);
    }
    let start = std::time::Instant::now();
    let centroids = initialize_centroids(dataset, opts.k, opts.init, opts.seed)?;
    let mut state = ClusteringState::new(dataset, centroids);
    let mut metrics0 = state.initial_assignment();
    let (bounds, cc) = DistanceBoundMatrix::full_exact(&state.clusters);
    state.bounds = bounds;
    metrics0.centroid_centroid_dist_count = cc;

    let mut log = MetricsLog::default();
    log.push(metrics0);
    let mut wall_ms = vec![start.elapsed().as_secs_f64() * 1e3];
    let mut trace = Vec::new();
    if opts.trace {
        trace.push(state.assignment.clone());
    }

    let mut audit = AuditReport::default();
    let mut iterations = 0;
    let mut converged = false;
    for _ in 0..opts.max_iter {
        let tick = std::time::Instant::now();
        let report = iterate(&mut state, opts, &mut audit)?;
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
        audit,
        trace,
        wall_ms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::neighbors::NeighborEntry;
    use crate::synthetic::generate_gaussian_mixture;

    fn tiny_clumps() -> Dataset {
        Dataset::from_rows(vec![
            vec![0.0, 0.0],
            vec![1.0, 0.0],
            vec![0.5, 1.0],
            vec![20.0, 0.0],
            vec![21.0, 0.0],
            vec![20.5, 1.0],
        ])
        .unwrap()
    }

    #[test]
    fn random_points_with_k_equals_n_uses_every_point() {
        let data = tiny_clumps();
        let centroids =
            initialize_centroids(&data, 6, InitMethod::RandomPoints, 3).unwrap();
        let mut as_rows: Vec<Vec<f64>> = centroids;
        as_rows.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mut expected: Vec<Vec<f64>> = (0..6).map(|p| data.point(p).to_vec()).collect();
        expected.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(as_rows, expected);
    }

    #[test]
    fn seeding_is_deterministic() {
        let data = tiny_clumps();
        for method in [InitMethod::RandomPoints, InitMethod::KMeansPlusPlus] {
            let a = initialize_centroids(&data, 3, method, 99).unwrap();
            let b = initialize_centroids(&data, 3, method, 99).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn seeding_rejects_k_greater_than_n() {
        let data = tiny_clumps();
        assert!(matches!(
            initialize_centroids(&data, 7, InitMethod::RandomPoints, 0),
            Err(Error::InvalidK { k: 7, n: 6 })
        ));
        assert!(matches!(
            initialize_centroids(&data, 0, InitMethod::KMeansPlusPlus, 0),
            Err(Error::InvalidK { k: 0, n: 6 })
        ));
    }

    #[test]
    fn kmeans_plus_plus_covers_separated_clumps() {
        // Three well-separated clumps: squared-distance weighting should put
        // one seed in each clump for almost every seed.
        let mix = generate_gaussian_mixture(120, 2, 3, 20.0, 7).unwrap();
        let mut hits = 0;
        for seed in 0..100 {
            let centroids =
                initialize_centroids(&mix.dataset, 3, InitMethod::KMeansPlusPlus, seed).unwrap();
            let mut covered = [false; 3];
            for c in &centroids {
                let clump = (0..3)
                    .min_by(|&a, &b| {
                        crate::geometry::squared_distance(c, &mix.means[a])
                            .partial_cmp(&crate::geometry::squared_distance(c, &mix.means[b]))
                            .unwrap()
                    })
                    .unwrap();
                covered[clump] = true;
            }
            if covered.iter().all(|&c| c) {
                hits += 1;
            }
        }
        assert!(hits >= 95, "only {hits}/100 seeds covered all clumps");
    }

    #[test]
    fn restricted_target_moves_to_closer_neighbor() {
        let clusters = vec![
            BallCluster::new(0, vec![0.0, 0.0]),
            BallCluster::new(1, vec![5.0, 0.0]),
        ];
        let candidates = [NeighborEntry { cluster: 1, dist: 5.0 }];
        // Own distance 4, neighbor distance 3: move.
        let (target, sq, dists) =
            restricted_target(&[4.0, 0.0], 0, 16.0, &candidates, &clusters);
        assert_eq!((target, sq, dists), (1, 1.0, 1));
    }

    #[test]
    fn restricted_target_keeps_current_on_tie() {
        let clusters = vec![
            BallCluster::new(0, vec![0.0, 0.0]),
            BallCluster::new(1, vec![8.0, 0.0]),
        ];
        let candidates = [NeighborEntry { cluster: 1, dist: 8.0 }];
        // Equidistant: the keep-current rule wins.
        let (target, _, _) = restricted_target(&[4.0, 0.0], 0, 16.0, &candidates, &clusters);
        assert_eq!(target, 0);
    }

    #[test]
    fn restricted_target_breaks_new_ties_by_smaller_id() {
        let clusters = vec![
            BallCluster::new(0, vec![-6.0, 0.0]),
            BallCluster::new(1, vec![2.0, 2.0]),
            BallCluster::new(2, vec![2.0, -2.0]),
        ];
        // Both neighbors are at squared distance 4 from the point, closer
        // than the own cluster at 64; the smaller id must win regardless of
        // the candidate order.
        let candidates = [
            NeighborEntry { cluster: 2, dist: 2.0 },
            NeighborEntry { cluster: 1, dist: 2.0 },
        ];
        let (target, _, _) = restricted_target(&[2.0, 0.0], 0, 64.0, &candidates, &clusters);
        assert_eq!(target, 1);
    }

    #[test]
    fn stability_flags_track_moves() {
        let mut clusters: Vec<BallCluster> =
            (0..4).map(|id| BallCluster::new(id, vec![id as f64])).collect();

        update_stability_flags(&mut clusters, &[]);
        assert!(clusters.iter().all(|c| c.stable));

        update_stability_flags(&mut clusters, &[(1, 3)]);
        let flags: Vec<bool> = clusters.iter().map(|c| c.stable).collect();
        assert_eq!(flags, vec![true, false, true, false]);
    }

    #[test]
    fn freeze_requires_stable_neighborhood() {
        let data = tiny_clumps();
        let mut state = ClusteringState::new(
            &data,
            vec![vec![0.5, 0.33], vec![20.5, 0.33], vec![10.0, 0.0]],
        );
        state.initial_assignment();
        let (bounds, _) = DistanceBoundMatrix::full_exact(&state.clusters);
        state.bounds = bounds;
        // Radii so that clusters 0 and 2 are mutual neighbors, 1 isolated.
        state.clusters[0].radius = 11.0;
        state.clusters[1].radius = 0.6;
        state.clusters[2].radius = 11.0;
        let lists = build_neighbor_lists(&state.clusters, &state.bounds);
        assert!(!lists.of(0).is_empty());
        assert!(lists.of(1).is_empty());

        for c in state.clusters.iter_mut() {
            c.stable = true;
        }
        // Isolated cluster with a true flag freezes vacuously.
        assert!(should_freeze(&state.clusters, &lists, 1));
        assert!(should_freeze(&state.clusters, &lists, 0));
        // A single unstable neighbor blocks freezing.
        state.clusters[2].stable = false;
        assert!(!should_freeze(&state.clusters, &lists, 0));
        assert!(should_freeze(&state.clusters, &lists, 1));
        // And an unstable self always blocks freezing.
        state.clusters[1].stable = false;
        assert!(!should_freeze(&state.clusters, &lists, 1));
    }

    #[test]
    fn iterate_on_converged_state_is_a_fixed_point() {
        let data = tiny_clumps();
        let opts = RunOptions::new(2, 5);
        let mut state = ClusteringState::new(
            &data,
            vec![vec![0.5, 1.0 / 3.0], vec![20.5, 1.0 / 3.0]],
        );
        let m0 = state.initial_assignment();
        let (bounds, _) = DistanceBoundMatrix::full_exact(&state.clusters);
        state.bounds = bounds;
        let mut audit = AuditReport::default();

        let first = iterate(&mut state, &opts, &mut audit).unwrap();
        assert_eq!(first.moved_point_count, 0);
        assert!(first.converged);
        let second = iterate(&mut state, &opts, &mut audit).unwrap();
        assert_eq!(second.moved_point_count, 0);
        assert_eq!(second.metrics.sse, first.metrics.sse);
        assert!(second.metrics.sse <= m0.sse + 1e-9);
    }

    #[test]
    fn clump_means_converge_in_one_iteration() {
        let data = tiny_clumps();
        // Centroids seeded exactly at the clump means.
        let mean_a = crate::geometry::update_centroid(&[0, 1, 2], &data).unwrap();
        let mean_b = crate::geometry::update_centroid(&[3, 4, 5], &data).unwrap();
        let mut state = ClusteringState::new(&data, vec![mean_a, mean_b]);
        state.initial_assignment();
        let (bounds, _) = DistanceBoundMatrix::full_exact(&state.clusters);
        state.bounds = bounds;
        let mut audit = AuditReport::default();
        let report =
            iterate(&mut state, &RunOptions::new(2, 0), &mut audit).unwrap();
        assert!(report.converged);
        // Unmoved centroids mean zero shifts, so the pair is carried as a
        // bound instead of being recomputed.
        assert_eq!(report.metrics.centroid_centroid_dist_count, 0);
        assert_eq!(report.metrics.skipped_pair_count, 1);
    }

    #[test]
    fn run_with_n_equals_k_zeroes_sse() {
        let data = tiny_clumps();
        let mut opts = RunOptions::new(6, 2);
        opts.init = InitMethod::RandomPoints;
        let result = run_ball(&data, &opts).unwrap();
        assert_eq!(result.metrics.last().unwrap().sse, 0.0);
        assert!(result.iterations <= 2);
        let mut sorted = result.assignment.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), 6); // every point its own cluster
    }

    #[test]
    fn run_rejects_bad_options() {
        let data = tiny_clumps();
        let mut opts = RunOptions::new(2, 0);
        opts.max_iter = 0;
        assert!(matches!(run_ball(&data, &opts), Err(Error::InvalidMaxIter)));
        let opts = RunOptions::new(99, 0);
        assert!(matches!(run_ball(&data, &opts), Err(Error::InvalidK { .. })));
    }

    #[test]
    fn audited_mixture_run_is_clean() {
        let mix = generate_gaussian_mixture(400, 3, 5, 6.0, 21).unwrap();
        let mut opts = RunOptions::new(5, 21);
        opts.audit = true;
        let result = run_ball(&mix.dataset, &opts).unwrap();
        assert!(result.converged);
        let audit = result.audit;
        assert!(audit.checked_points > 0);
        assert!(audit.is_clean(), "{audit:?}");
    }
}
