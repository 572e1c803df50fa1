//! Centroid-centroid distance maintenance and neighbor-cluster search.
//!
//! The bound matrix keeps, per unordered centroid pair, either the exact
//! distance for the current iteration or a sound lower bound carried over
//! from earlier iterations. A pair whose stored bound already proves the
//! non-neighbor relation in both directions never gets its distance
//! recomputed; the bound just decays by the two centroid shifts.

use crate::cluster::BallCluster;
use crate::geometry::distance;

/// One entry of the bound matrix: an exact distance or a lower bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundEntry {
    pub value: f64,
    pub exact: bool,
}

/// Symmetric k x k matrix of centroid-centroid distances or lower bounds,
/// stored as the strict upper triangle. The diagonal is unused.
#[derive(Debug, Clone)]
pub struct DistanceBoundMatrix {
    k: usize,
    entries: Vec<BoundEntry>,
}

/// True when the previous-iteration distance (or a lower bound on it) proves
/// that cluster j cannot be a neighbor of cluster i this iteration, so the
/// fresh centroid-centroid distance can be skipped.
#[inline]
pub fn skip_test(prev_bound: f64, r_i: f64, delta_i: f64, delta_j: f64) -> bool {
    prev_bound >= 2.0 * r_i + delta_i + delta_j
}

/// The neighbor condition: cluster j is a neighbor of a cluster with radius
/// `r` at centroid distance `dist` iff `r > dist / 2` (strict). Compared in
/// squared form to match the assignment comparisons.
#[inline]
pub fn is_neighbor(r: f64, dist: f64) -> bool {
    r * r > 0.25 * dist * dist
}

impl DistanceBoundMatrix {
    /// Matrix of all-zero lower bounds. Zero is a sound (if useless) lower
    /// bound on any distance; real runs replace this with `full_exact` after
    /// the initial assignment.
    pub fn vacuous(k: usize) -> Self {
        let pairs = k * (k.saturating_sub(1)) / 2;
        Self { k, entries: vec![BoundEntry { value: 0.0, exact: false }; pairs] }
    }

    /// Matrix with every entry exact, computed from the current centroids.
    /// Returns the number of distances computed, k(k-1)/2.
    pub fn full_exact(clusters: &[BallCluster]) -> (Self, u64) {
        let k = clusters.len();
        let mut entries = Vec::with_capacity(k * (k - 1) / 2);
        for i in 0..k {
            for j in (i + 1)..k {
                let value = distance(&clusters[i].centroid, &clusters[j].centroid);
                entries.push(BoundEntry { value, exact: true });
            }
        }
        let computed = entries.len() as u64;
        (Self { k, entries }, computed)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.k);
        i * self.k - i * (i + 1) / 2 + (j - i - 1)
    }

    /// Entry for the unordered pair {i, j}, i != j.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> BoundEntry {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        self.entries[self.index(a, b)]
    }

    /// Re-derives every entry for the current iteration. A pair is skipped
    /// (entry becomes a decayed lower bound) only when the skip test holds in
    /// both ordered directions; otherwise the exact distance is computed.
    ///
    /// Returns (distances computed, pairs skipped). With `skipping` disabled
    /// every pair is computed exactly.
    pub fn refresh(&mut self, clusters: &[BallCluster], skipping: bool) -> (u64, u64) {
        let mut computed = 0u64;
        let mut skipped = 0u64;
        let mut idx = 0;
        for i in 0..self.k {
            for j in (i + 1)..self.k {
                let entry = &mut self.entries[idx];
                idx += 1;
                let (ci, cj) = (&clusters[i], &clusters[j]);
                let skip_both = skipping
                    && skip_test(entry.value, ci.radius, ci.shift, cj.shift)
                    && skip_test(entry.value, cj.radius, ci.shift, cj.shift);
                if skip_both {
                    *entry = BoundEntry {
                        value: (entry.value - ci.shift - cj.shift).max(0.0),
                        exact: false,
                    };
                    skipped += 1;
                } else {
                    let value = distance(&ci.centroid, &cj.centroid);
                    *entry = BoundEntry { value, exact: true };
                    computed += 1;
                }
            }
        }
        (computed, skipped)
    }
}

/// One neighbor of a cluster: its id and the exact centroid distance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NeighborEntry {
    pub cluster: usize,
    pub dist: f64,
}

/// Per-cluster neighbor lists, each sorted ascending by distance (ties by
/// smaller cluster id). The relation is asymmetric: j may appear in i's list
/// without i appearing in j's.
#[derive(Debug, Clone)]
pub struct NeighborLists {
    lists: Vec<Vec<NeighborEntry>>,
}

impl NeighborLists {
    pub fn of(&self, i: usize) -> &[NeighborEntry] {
        &self.lists[i]
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }
}

/// Builds all neighbor lists from a refreshed bound matrix.
///
/// Pairs held as lower bounds are provably non-neighbor in both directions
/// and are excluded without any distance computation; every included pair
/// carries its exact distance.
pub fn build_neighbor_lists(
    clusters: &[BallCluster],
    bounds: &DistanceBoundMatrix,
) -> NeighborLists {
    let k = clusters.len();
    let lists = (0..k)
        .map(|i| {
            let r = clusters[i].radius;
            let mut list: Vec<NeighborEntry> = (0..k)
                .filter(|&j| j != i)
                .filter_map(|j| {
                    let entry = bounds.get(i, j);
                    if entry.exact && is_neighbor(r, entry.value) {
                        Some(NeighborEntry { cluster: j, dist: entry.value })
                    } else {
                        None
                    }
                })
                .collect();
            list.sort_by(|a, b| {
                a.dist
                    .partial_cmp(&b.dist)
                    .expect("finite distances")
                    .then(a.cluster.cmp(&b.cluster))
            });
            list
        })
        .collect();
    NeighborLists { lists }
}
