//! The `report` command: renders a metrics document as a per-iteration table
//! with totals and the distance-computation savings against the full-scan
//! baseline.

use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use crate::commands::MetricsRecord;
use crate::error::{CliError, Result};

/// Parses a line-delimited metrics document.
pub fn read_metrics(path: &Path) -> Result<Vec<MetricsRecord>> {
    let reader = BufReader::new(File::open(path)?);
    let mut records = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let record: MetricsRecord = serde_json::from_str(&line).map_err(|e| CliError::Parse {
            path: path.to_path_buf(),
            line: idx + 1,
            msg: format!("bad metrics record: {e}"),
        })?;
        records.push(record);
    }
    if records.is_empty() {
        return Err(CliError::Format {
            path: path.to_path_buf(),
            msg: "metrics document contains no records".into(),
        });
    }
    Ok(records)
}

/// Renders the human-readable summary of a metrics document.
pub fn render_report(records: &[MetricsRecord]) -> String {
    let mut out = String::new();
    let n = records[0].n;
    let k = records[0].k;
    out.push_str(&format!("run: n={n}, k={k}, {} iterations\n\n", records.len() - 1));
    out.push_str(&format!(
        "{:>5} {:>14} {:>12} {:>9} {:>7} {:>8} {:>16} {:>9}\n",
        "iter", "point_dists", "cc_dists", "skipped", "frozen", "moved", "sse", "wall_ms"
    ));
    for r in records {
        out.push_str(&format!(
            "{:>5} {:>14} {:>12} {:>9} {:>7} {:>8} {:>16.6} {:>9.2}\n",
            r.iteration,
            r.point_centroid_dist_count,
            r.centroid_centroid_dist_count,
            r.skipped_pair_count,
            r.frozen_cluster_count,
            r.moved_point_count,
            r.sse,
            r.wall_ms,
        ));
    }

    let total_point: u64 = records.iter().map(|r| r.point_centroid_dist_count).sum();
    let total_cc: u64 = records.iter().map(|r| r.centroid_centroid_dist_count).sum();
    let total_skipped: u64 = records.iter().map(|r| r.skipped_pair_count).sum();
    let full_scan = records.len() as u64 * n as u64 * k as u64;
    let savings = 1.0 - total_point as f64 / full_scan as f64;
    let last = records.last().expect("nonempty");

    out.push_str(&format!(
        "\ntotals: {total_point} point distances, {total_cc} centroid distances, {total_skipped} pairs skipped\n"
    ));
    out.push_str(&format!(
        "point-distance savings vs full scan ({} x n x k = {full_scan}): {savings:.3}\n",
        records.len()
    ));
    let frozen: Vec<String> =
        records.iter().map(|r| r.frozen_cluster_count.to_string()).collect();
    out.push_str(&format!("frozen clusters by iteration: {}\n", frozen.join(" ")));
    out.push_str(&format!(
        "final iteration: {} moves, SSE {:.6}\n",
        last.moved_point_count, last.sse
    ));
    out
}

/// Reads a metrics document and renders the summary.
pub fn cmd_report(path: &Path) -> Result<String> {
    let records = read_metrics(path)?;
    Ok(render_report(&records))
}
