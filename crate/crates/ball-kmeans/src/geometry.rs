//! Scalar and vector kernels shared by the accelerated engine and the Lloyd
//! reference path.
//!
//! Every reduction here accumulates in a fixed order (coordinates left to
//! right, points by ascending index) so that reruns and paired runs produce
//! bit-identical values regardless of worker count.

use crate::dataset::Dataset;
use crate::error::{Error, Result};

/// Squared Euclidean distance between two equal-length vectors.
///
/// Panics if the lengths differ; callers own the dimension contract.
#[inline]
pub fn squared_distance(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len(), "dimension mismatch: {} vs {}", a.len(), b.len());
    let mut acc = 0.0;
    for i in 0..a.len() {
        let diff = a[i] - b[i];
        acc += diff * diff;
    }
    acc
}

/// Euclidean distance between two equal-length vectors.
#[inline]
pub fn distance(a: &[f64], b: &[f64]) -> f64 {
    squared_distance(a, b).sqrt()
}

/// How far a centroid moved between two iterations.
#[inline]
pub fn centroid_shift(prev: &[f64], new: &[f64]) -> f64 {
    distance(prev, new)
}

/// Coordinate-wise mean of the member points, accumulated in ascending
/// point-index order.
///
/// Signals [`Error::EmptyMembers`] for an empty set; the caller applies the
/// empty-cluster rule (keep the previous centroid).
pub fn update_centroid(members: &[usize], dataset: &Dataset) -> Result<Vec<f64>> {
    if members.is_empty() {
        return Err(Error::EmptyMembers);
    }
    let d = dataset.dim();
    let mut sum = vec![0.0; d];
    for &p in members {
        let point = dataset.point(p);
        for (s, &x) in sum.iter_mut().zip(point) {
            *s += x;
        }
    }
    let inv = 1.0 / members.len() as f64;
    for s in sum.iter_mut() {
        *s *= inv;
    }
    Ok(sum)
}

/// Distance of one member point to its centroid, both squared and plain.
#[derive(Debug, Clone, Copy)]
pub struct MemberDistance {
    pub point: usize,
    pub dist: f64,
    pub dist_sq: f64,
}

/// Max member distance to the centroid plus the per-member distances that
/// refresh the point-to-own-centroid cache. Empty member sets yield radius 0
/// by the empty-cluster rule.
pub fn compute_radius(
    members: &[usize],
    centroid: &[f64],
    dataset: &Dataset,
) -> (f64, Vec<MemberDistance>) {
    let mut dists = Vec::with_capacity(members.len());
    let mut radius = 0.0f64;
    for &p in members {
        let dist_sq = squared_distance(dataset.point(p), centroid);
        let dist = dist_sq.sqrt();
        if dist > radius {
            radius = dist;
        }
        dists.push(MemberDistance { point: p, dist, dist_sq });
    }
    (radius, dists)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn dataset_from(rows: Vec<Vec<f64>>) -> Dataset {
        Dataset::from_rows(rows).unwrap()
    }

    #[test]
    fn distance_three_four_five() {
        assert_eq!(distance(&[0.0, 0.0], &[3.0, 4.0]), 5.0);
    }

    #[test]
    fn distance_identical_points_is_zero() {
        assert_eq!(distance(&[2.5, 2.5], &[2.5, 2.5]), 0.0);
        assert_eq!(distance(&[-7.0], &[-7.0]), 0.0);
    }

    #[test]
    fn distance_matches_per_coordinate_summation() {
        // Independent oracle: accumulate each squared difference separately.
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let a: Vec<f64> = (0..8).map(|_| rng.random_range(-10.0..10.0)).collect();
            let b: Vec<f64> = (0..8).map(|_| rng.random_range(-10.0..10.0)).collect();
            let mut expected = 0.0;
            for i in 0..8 {
                expected += (a[i] - b[i]) * (a[i] - b[i]);
            }
            assert_eq!(distance(&a, &b), expected.sqrt());
        }
    }

    #[test]
    #[should_panic(expected = "dimension mismatch")]
    fn distance_rejects_mismatched_dims() {
        distance(&[1.0, 2.0], &[1.0]);
    }

    #[test]
    fn centroid_of_triangle() {
        let data = dataset_from(vec![vec![0.0, 0.0], vec![2.0, 0.0], vec![1.0, 3.0]]);
        assert_eq!(update_centroid(&[0, 1, 2], &data).unwrap(), vec![1.0, 1.0]);
    }

    #[test]
    fn centroid_of_singleton() {
        let data = dataset_from(vec![vec![5.0, 5.0]]);
        assert_eq!(update_centroid(&[0], &data).unwrap(), vec![5.0, 5.0]);
    }

    #[test]
    fn centroid_of_empty_members_signals() {
        let data = dataset_from(vec![vec![0.0]]);
        assert!(matches!(update_centroid(&[], &data), Err(Error::EmptyMembers)));
    }

    #[test]
    fn centroid_close_to_reversed_order_summation() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let rows: Vec<Vec<f64>> =
            (0..100).map(|_| (0..5).map(|_| rng.random_range(-3.0..3.0)).collect()).collect();
        let data = dataset_from(rows.clone());
        let members: Vec<usize> = (0..100).collect();
        let got = update_centroid(&members, &data).unwrap();

        // Oracle: sum in descending index order instead.
        let mut sum = vec![0.0; 5];
        for p in (0..100).rev() {
            for j in 0..5 {
                sum[j] += rows[p][j];
            }
        }
        for j in 0..5 {
            let expected = sum[j] / 100.0;
            assert!((got[j] - expected).abs() <= 1e-12, "{} vs {}", got[j], expected);
        }
    }

    #[test]
    fn radius_of_triangle_cluster() {
        let data = dataset_from(vec![vec![0.0, 0.0], vec![2.0, 0.0], vec![1.0, 3.0]]);
        let (radius, dists) = compute_radius(&[0, 1, 2], &[1.0, 1.0], &data);
        assert_eq!(radius, 2.0); // farthest member is (1,3)
        assert_eq!(dists.len(), 3);
        assert_eq!(dists[2].dist, 2.0);
    }

    #[test]
    fn radius_of_singleton_is_zero() {
        let data = dataset_from(vec![vec![4.0, -1.0]]);
        let (radius, _) = compute_radius(&[0], &[4.0, -1.0], &data);
        assert_eq!(radius, 0.0);
    }

    #[test]
    fn radius_matches_per_point_max() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let rows: Vec<Vec<f64>> =
            (0..50).map(|_| (0..4).map(|_| rng.random_range(-5.0..5.0)).collect()).collect();
        let data = dataset_from(rows.clone());
        let centroid = vec![0.25, -0.5, 1.0, 0.0];
        let members: Vec<usize> = (0..50).collect();
        let (radius, _) = compute_radius(&members, &centroid, &data);

        let expected = rows
            .iter()
            .map(|r| distance(r, &centroid))
            .fold(0.0f64, f64::max);
        assert_eq!(radius, expected);
    }

    #[test]
    fn shift_is_distance_between_centroids() {
        assert_eq!(centroid_shift(&[0.0, 0.0], &[3.0, 4.0]), 5.0);
        assert_eq!(centroid_shift(&[1.0, 1.0], &[1.0, 1.0]), 0.0);
        let a = [0.3, -2.0, 7.5];
        let b = [1.1, 0.0, -4.0];
        assert_eq!(centroid_shift(&a, &b), distance(&a, &b));
    }

    proptest! {
        #[test]
        fn triangle_inequality(
            a in proptest::collection::vec(-100.0f64..100.0, 4),
            b in proptest::collection::vec(-100.0f64..100.0, 4),
            c in proptest::collection::vec(-100.0f64..100.0, 4),
        ) {
            prop_assert!(distance(&a, &c) <= distance(&a, &b) + distance(&b, &c) + 1e-9);
        }

        #[test]
        fn centroid_is_permutation_invariant(
            rows in proptest::collection::vec(
                proptest::collection::vec(-50.0f64..50.0, 3), 1..40),
            seed in 0u64..1000,
        ) {
            let n = rows.len();
            let data = Dataset::from_rows(rows.clone()).unwrap();
            let members: Vec<usize> = (0..n).collect();
            let canonical = update_centroid(&members, &data).unwrap();

            // Shuffle the accumulation order with an independent summation.
            let mut order: Vec<usize> = (0..n).collect();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for i in (1..n).rev() {
                let j = rng.random_range(0..=i);
                order.swap(i, j);
            }
            let mut sum = vec![0.0f64; 3];
            for &p in &order {
                for j in 0..3 {
                    sum[j] += rows[p][j];
                }
            }
            for j in 0..3 {
                let shuffled = sum[j] / n as f64;
                let scale = shuffled.abs().max(1.0);
                prop_assert!((canonical[j] - shuffled).abs() <= 1e-9 * scale);
            }
        }
    }
}
