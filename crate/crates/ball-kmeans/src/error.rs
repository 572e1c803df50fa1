use thiserror::Error;

/// Errors produced by this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dataset must contain at least one point")]
    EmptyDataset,
    #[error("points must have at least one coordinate")]
    ZeroDimension,
    #[error("coordinate buffer has {len} values, expected {expected} ({n} points x {d} dims)")]
    CoordinateCount { len: usize, expected: usize, n: usize, d: usize },
    #[error("point {index} has {found} coordinates, expected {expected}")]
    RaggedPoint { index: usize, found: usize, expected: usize },
    #[error("point {index} contains a non-finite coordinate")]
    NonFinite { index: usize },
    #[error("k must satisfy 1 <= k <= n, got k={k} with n={n}")]
    InvalidK { k: usize, n: usize },
    #[error("max_iter must be at least 1")]
    InvalidMaxIter,
    #[error("cannot average an empty member set")]
    EmptyMembers,
    #[error(
        "point-centroid distance {dist} exceeds cluster {cluster} radius {radius}; radius cache is stale"
    )]
    StaleRadius { cluster: usize, dist: f64, radius: f64 },
    #[error(
        "could not place {k} component means at pairwise separation {separation} after {attempts} attempts"
    )]
    Placement { k: usize, separation: f64, attempts: usize },
    #[error("mixture generator needs n >= k >= 1 and separation > 0 (n={n}, k={k}, separation={separation})")]
    InvalidMixture { n: usize, k: usize, separation: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
