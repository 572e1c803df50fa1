//! Exact accelerated k-means.
//!
//! Describes each cluster as a ball (centroid plus enclosing radius) and uses
//! that geometry to skip distance computations that cannot change the result:
//! points compare only against neighbor clusters, points deep inside a
//! cluster are never reconsidered, centroid-centroid distances are carried as
//! lower bounds between iterations, and whole clusters with stable
//! neighborhoods sit iterations out. The assignments produced are identical,
//! iteration for iteration, to naive full-scan k-means — the naive runner
//! ships in [`lloyd`] and every run can be paired against it.
//!
//! ```
//! use ball_kmeans::{run_ball, run_lloyd, Dataset, RunOptions};
//!
//! let data = Dataset::from_rows(vec![
//!     vec![0.0, 0.0], vec![0.5, 0.1], vec![0.2, 0.4],
//!     vec![9.0, 9.0], vec![9.5, 8.8], vec![9.1, 9.3],
//! ])?;
//! let opts = RunOptions::new(2, 7);
//! let fast = run_ball(&data, &opts)?;
//! let naive = run_lloyd(&data, &opts)?;
//! assert_eq!(fast.assignment, naive.assignment);
//! # Ok::<(), ball_kmeans::Error>(())
//! ```

pub mod cluster;
pub mod dataset;
pub mod engine;
pub mod error;
pub mod geometry;
pub mod lloyd;
pub mod metrics;
pub mod neighbors;
pub mod partition;
pub mod state;
pub mod synthetic;

pub use cluster::BallCluster;
pub use dataset::Dataset;
pub use engine::{
    initialize_centroids, iterate, run_ball, should_freeze, update_stability_flags, AuditReport,
    InitMethod, RunOptions, RunResult,
};
pub use error::{Error, Result};
pub use lloyd::{lloyd_iterate, run_lloyd};
pub use metrics::{IterationMetrics, IterationReport, MetricsLog};
pub use neighbors::{
    build_neighbor_lists, is_neighbor, skip_test, BoundEntry, DistanceBoundMatrix, NeighborEntry,
    NeighborLists,
};
pub use partition::{build_partition, AnnulusPartition};
pub use state::{sse, ClusteringState};
pub use synthetic::{generate_gaussian_mixture, GaussianMixture};

// The guide chapters double as doctests so the book can never drift from the
// library; see book/ at the repository root.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            pub struct $name;
        };
    }

    chapter!(Introduction, "../../../book/src/introduction.md");
    chapter!(BallClusters, "../../../book/src/concepts/ball-clusters.md");
    chapter!(NeighborClusters, "../../../book/src/concepts/neighbor-clusters.md");
    chapter!(ClusterDivision, "../../../book/src/concepts/cluster-division.md");
    chapter!(CentroidBounds, "../../../book/src/concepts/centroid-bounds.md");
    chapter!(FrozenClusters, "../../../book/src/concepts/frozen-clusters.md");
    chapter!(ExactnessTesting, "../../../book/src/exactness-testing.md");
    chapter!(BenchmarkCli, "../../../book/src/benchmark-cli.md");
}
