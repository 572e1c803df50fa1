//! Division of a ball cluster into its stable area and ordered annulus areas.
//!
//! The stable area is the closed ball of radius half the distance to the
//! nearest neighbor centroid; its points provably keep their assignment. Each
//! annulus between consecutive half-distances restricts a point's candidate
//! set to the first-i closest neighbors.

use crate::cluster::BallCluster;
use crate::error::{Error, Result};
use crate::neighbors::NeighborEntry;

/// Region boundaries of one cluster: half-distances to its sorted neighbors,
/// capped by the cluster radius.
///
/// Region 0 is the closed stable area `[0, b_1]`; region i >= 1 is the annulus
/// `(b_i, b_{i+1}]` with the last annulus closing at the radius. Equal
/// neighbor distances produce an empty annulus between them.
#[derive(Debug, Clone)]
pub struct AnnulusPartition {
    pub cluster: usize,
    pub stable_radius: f64,
    /// Half-distance to the i-th closest neighbor, ascending (ties allowed).
    pub boundaries: Vec<f64>,
    pub radius: f64,
}

/// Builds the partition of `cluster` from its current neighbor list, which
/// must be sorted ascending by exact distance.
pub fn build_partition(cluster: &BallCluster, neighbors: &[NeighborEntry]) -> AnnulusPartition {
    let boundaries: Vec<f64> = neighbors.iter().map(|entry| 0.5 * entry.dist).collect();
    let stable_radius = boundaries.first().copied().unwrap_or(cluster.radius);
    AnnulusPartition { cluster: cluster.id, stable_radius, boundaries, radius: cluster.radius }
}

impl AnnulusPartition {
    /// Number of annulus regions (empty ones included).
    pub fn annulus_count(&self) -> usize {
        self.boundaries.len()
    }

    /// Region index of a member at distance `dist_to_centroid` from the
    /// centroid: 0 for the stable area, i for the i-th annulus.
    ///
    /// A distance beyond the radius means the radius cache is stale and is
    /// reported as an internal-consistency error.
    pub fn locate(&self, dist_to_centroid: f64) -> Result<usize> {
        if dist_to_centroid > self.radius {
            return Err(Error::StaleRadius {
                cluster: self.cluster,
                dist: dist_to_centroid,
                radius: self.radius,
            });
        }
        Ok(self.boundaries.partition_point(|&b| b < dist_to_centroid))
    }
}
