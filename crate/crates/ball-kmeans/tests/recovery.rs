//! Generated mixtures must be recoverable: clustering with the true k should
//! reproduce the ground-truth labels up to a permutation of cluster ids.

use ball_kmeans::{generate_gaussian_mixture, run_ball, RunOptions};

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 1 {
        return vec![vec![0]];
    }
    let mut out = Vec::new();
    for perm in permutations(k - 1) {
        for slot in 0..k {
            let mut next = perm.clone();
            next.insert(slot, k - 1);
            out.push(next);
        }
    }
    out
}

/// Best label agreement over all cluster-id permutations.
fn best_agreement(found: &[usize], truth: &[usize], k: usize) -> f64 {
    let n = found.len();
    permutations(k)
        .into_iter()
        .map(|perm| {
            let hits = found
                .iter()
                .zip(truth)
                .filter(|&(&f, &t)| perm[f] == t)
                .count();
            hits as f64 / n as f64
        })
        .fold(0.0, f64::max)
}

#[test]
fn three_separated_components_are_recovered() {
    let mix = generate_gaussian_mixture(300, 2, 3, 10.0, 4).unwrap();
    let result = run_ball(&mix.dataset, &RunOptions::new(3, 11)).unwrap();
    assert!(result.converged);
    let agreement = best_agreement(&result.assignment, &mix.labels, 3);
    assert!(agreement >= 0.99, "agreement only {agreement}");
}

#[test]
fn recovery_holds_across_seeds() {
    let mut perfect = 0;
    for seed in 0..10u64 {
        let mix = generate_gaussian_mixture(240, 4, 4, 9.0, seed).unwrap();
        let result = run_ball(&mix.dataset, &RunOptions::new(4, seed + 500)).unwrap();
        if best_agreement(&result.assignment, &mix.labels, 4) >= 0.99 {
            perfect += 1;
        }
    }
    assert!(perfect >= 8, "only {perfect}/10 seeds recovered the components");
}
