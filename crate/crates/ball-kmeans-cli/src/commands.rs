//! The `run` command: load or generate a dataset, execute the requested
//! algorithm(s) inside a sized worker pool, and write assignments, centroids
//! and the per-iteration metrics document.

use std::fs;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use ball_kmeans::{
    generate_gaussian_mixture, run_ball, run_lloyd, Dataset, RunOptions, RunResult,
};
use serde::{Deserialize, Serialize};

use crate::config::{Algorithm, RunConfig};
use crate::error::{CliError, Result};
use crate::io::{load_dataset, write_assignments, write_centroids};

/// One line of the metrics document: the per-iteration counters plus the
/// dataset shape and wall time.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricsRecord {
    pub iteration: usize,
    pub n: usize,
    pub k: usize,
    pub point_centroid_dist_count: u64,
    pub centroid_centroid_dist_count: u64,
    pub skipped_pair_count: u64,
    pub frozen_cluster_count: usize,
    pub moved_point_count: usize,
    pub sse: f64,
    pub wall_ms: f64,
}

fn records_of(result: &RunResult, n: usize, k: usize) -> Vec<MetricsRecord> {
    result
        .metrics
        .iterations
        .iter()
        .zip(&result.wall_ms)
        .map(|(m, &wall_ms)| MetricsRecord {
            iteration: m.iteration,
            n,
            k,
            point_centroid_dist_count: m.point_centroid_dist_count,
            centroid_centroid_dist_count: m.centroid_centroid_dist_count,
            skipped_pair_count: m.skipped_pair_count,
            frozen_cluster_count: m.frozen_cluster_count,
            moved_point_count: m.moved_point_count,
            sse: m.sse,
            wall_ms,
        })
        .collect()
}

/// Writes one JSON record per line.
pub fn write_metrics(records: &[MetricsRecord], path: &Path) -> Result<()> {
    let mut writer = BufWriter::new(File::create(path)?);
    for record in records {
        serde_json::to_writer(&mut writer, record)?;
        writer.write_all(b"\n")?;
    }
    writer.flush()?;
    Ok(())
}

/// Checks that paired runs agree iteration for iteration; returns a verdict
/// string or the first divergence.
pub fn equivalence_verdict(fast: &RunResult, naive: &RunResult) -> std::result::Result<String, String> {
    if fast.iterations != naive.iterations {
        return Err(format!(
            "iteration counts differ: ball {} vs lloyd {}",
            fast.iterations, naive.iterations
        ));
    }
    for (t, (a, b)) in fast.trace.iter().zip(&naive.trace).enumerate() {
        if a != b {
            let point = a.iter().zip(b).position(|(x, y)| x != y).unwrap_or(0);
            return Err(format!("assignments differ at iteration {t}, first at point {point}"));
        }
    }
    for (i, (a, b)) in fast.centroids.iter().zip(&naive.centroids).enumerate() {
        for (x, y) in a.iter().zip(b) {
            let scale = x.abs().max(y.abs()).max(1.0);
            if (x - y).abs() > 1e-9 * scale {
                return Err(format!("centroid {i} differs beyond tolerance: {x} vs {y}"));
            }
        }
    }
    Ok(format!("EQUIVALENT over {} iterations", fast.iterations))
}

fn obtain_dataset(config: &RunConfig) -> Result<(Dataset, Option<Vec<usize>>)> {
    if let Some(path) = &config.input {
        return Ok((load_dataset(path)?, None));
    }
    let spec = config.generate.expect("validated: input or generate present");
    let mixture =
        generate_gaussian_mixture(spec.n, spec.d, spec.k_true, spec.separation, config.seed)?;
    Ok((mixture.dataset, Some(mixture.labels)))
}

/// Runs the configured clustering job and writes all outputs into
/// `config.out_dir`. In `both` mode a divergence is an error.
pub fn cmd_run(config: &RunConfig) -> Result<()> {
    config.validate()?;
    let (dataset, labels) = obtain_dataset(config)?;

    fs::create_dir_all(&config.out_dir)?;
    if let Some(labels) = &labels {
        write_assignments(labels, &config.out_dir.join("labels.txt"))?;
    }

    let mut opts = RunOptions::new(config.k, config.seed);
    opts.init = config.init;
    opts.max_iter = config.max_iter;
    opts.freezing = config.freezing;
    opts.bound_skipping = config.bound_skipping;
    opts.trace = config.algorithm == Algorithm::Both;

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot build worker pool: {e}")))?;

    let n = dataset.len();
    let k = config.k;
    match config.algorithm {
        Algorithm::Ball | Algorithm::Lloyd => {
            let result = pool.install(|| match config.algorithm {
                Algorithm::Ball => run_ball(&dataset, &opts),
                _ => run_lloyd(&dataset, &opts),
            })?;
            write_outputs(&result, n, k, &config.out_dir)?;
            print_summary(config, &result, n);
        }
        Algorithm::Both => {
            let fast = pool.install(|| run_ball(&dataset, &opts))?;
            let naive = pool.install(|| run_lloyd(&dataset, &opts))?;
            write_outputs(&fast, n, k, &config.out_dir)?;
            write_metrics(
                &records_of(&naive, n, k),
                &config.out_dir.join("metrics_lloyd.jsonl"),
            )?;
            match equivalence_verdict(&fast, &naive) {
                Ok(verdict) => {
                    println!("verdict: {verdict}");
                    print_summary(config, &fast, n);
                }
                Err(divergence) => return Err(CliError::Divergence(divergence)),
            }
        }
    }
    Ok(())
}

fn write_outputs(result: &RunResult, n: usize, k: usize, out_dir: &Path) -> Result<()> {
    write_assignments(&result.assignment, &out_dir.join("assignments.txt"))?;
    write_centroids(&result.centroids, &out_dir.join("centroids.csv"))?;
    write_metrics(&records_of(result, n, k), &out_dir.join("metrics.jsonl"))
}

fn print_summary(config: &RunConfig, result: &RunResult, n: usize) {
    let total_point = result.metrics.total_point_distances();
    let records = result.metrics.iterations.len() as u64;
    let full_scan = records * (n as u64) * (config.k as u64);
    let savings = 1.0 - total_point as f64 / full_scan as f64;
    println!(
        "{} points, k={}, {} iterations, converged={}, final SSE {:.6}",
        n,
        config.k,
        result.iterations,
        result.converged,
        result.metrics.last().map(|m| m.sse).unwrap_or(f64::NAN),
    );
    println!(
        "point distances {total_point} of {full_scan} full-scan ({savings:.3} saved), outputs in {}",
        config.out_dir.display()
    );
}
