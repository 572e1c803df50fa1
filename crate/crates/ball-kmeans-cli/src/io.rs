//! Dataset files and run outputs.
//!
//! Two input formats: plain CSV (one point per line, optional header) and a
//! binary layout for large benchmarks: magic `BKM1`, then point count and
//! dimensionality as little-endian u64, then row-major little-endian f64
//! coordinates.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use ball_kmeans::Dataset;

use crate::error::{CliError, Result};

pub const BINARY_MAGIC: &[u8; 4] = b"BKM1";

/// Loads a CSV dataset. The first line is treated as a header when any of
/// its fields does not parse as a finite number. Ragged rows and non-finite
/// values are reported with their 1-based line number.
pub fn load_csv(path: &Path) -> Result<Dataset> {
    let file = File::open(path)?;
    let reader = BufReader::new(file);
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut width: Option<usize> = None;

    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let trimmed = line.trim_end_matches('\r');
        if trimmed.is_empty() {
            continue;
        }
        let parsed: std::result::Result<Vec<f64>, String> = trimmed
            .split(',')
            .map(|field| {
                let field = field.trim();
                match field.parse::<f64>() {
                    Ok(v) if v.is_finite() => Ok(v),
                    Ok(v) => Err(format!("non-finite value {v:?}")),
                    Err(_) => Err(format!("cannot parse {field:?} as a number")),
                }
            })
            .collect();
        match parsed {
            Ok(values) => {
                if let Some(w) = width {
                    if values.len() != w {
                        return Err(CliError::Parse {
                            path: path.to_path_buf(),
                            line: line_no,
                            msg: format!("row has {} fields, expected {}", values.len(), w),
                        });
                    }
                } else {
                    width = Some(values.len());
                }
                rows.push(values);
            }
            Err(msg) => {
                // Any non-numeric first line is a header.
                if idx == 0 {
                    continue;
                }
                return Err(CliError::Parse { path: path.to_path_buf(), line: line_no, msg });
            }
        }
    }

    Dataset::from_rows(rows).map_err(CliError::from)
}

fn read_u64(reader: &mut impl Read, path: &Path, what: &str) -> Result<u64> {
    let mut buf = [0u8; 8];
    reader.read_exact(&mut buf).map_err(|_| CliError::Format {
        path: path.to_path_buf(),
        msg: format!("truncated while reading {what}"),
    })?;
    Ok(u64::from_le_bytes(buf))
}

/// Loads a binary dataset; bit-exact inverse of [`write_binary`].
pub fn load_binary(path: &Path) -> Result<Dataset> {
    let file = File::open(path)?;
    let file_len = file.metadata()?.len();
    let mut reader = BufReader::new(file);

    let mut magic = [0u8; 4];
    reader.read_exact(&mut magic).map_err(|_| CliError::Format {
        path: path.to_path_buf(),
        msg: "file too short for magic bytes".into(),
    })?;
    if &magic != BINARY_MAGIC {
        return Err(CliError::Format {
            path: path.to_path_buf(),
            msg: format!("bad magic {magic:?}, expected {BINARY_MAGIC:?}"),
        });
    }
    let n = read_u64(&mut reader, path, "point count")? as usize;
    let d = read_u64(&mut reader, path, "dimensionality")? as usize;
    let values = n.checked_mul(d).ok_or_else(|| CliError::Format {
        path: path.to_path_buf(),
        msg: format!("header declares {n} x {d} values, which overflows"),
    })?;
    let expected = 20u64
        .checked_add(values as u64 * 8)
        .ok_or_else(|| CliError::Format {
            path: path.to_path_buf(),
            msg: "declared payload overflows".into(),
        })?;
    if file_len < expected {
        return Err(CliError::Format {
            path: path.to_path_buf(),
            msg: format!(
                "declared {n} x {d} points need {expected} bytes, file has {file_len}"
            ),
        });
    }

    let mut coords = Vec::with_capacity(values);
    let mut buf = [0u8; 8];
    for _ in 0..values {
        reader.read_exact(&mut buf).map_err(|_| CliError::Format {
            path: path.to_path_buf(),
            msg: "truncated coordinate payload".into(),
        })?;
        coords.push(f64::from_le_bytes(buf));
    }
    Dataset::from_flat(n, d, coords).map_err(CliError::from)
}

/// Writes the binary layout read back by [`load_binary`].
pub fn write_binary(dataset: &Dataset, path: &Path) -> Result<()> {
    let mut writer = BufWriter::new(File::create(path)?);
    writer.write_all(BINARY_MAGIC)?;
    writer.write_all(&(dataset.len() as u64).to_le_bytes())?;
    writer.write_all(&(dataset.dim() as u64).to_le_bytes())?;
    for value in dataset.coords() {
        writer.write_all(&value.to_le_bytes())?;
    }
    writer.flush()?;
    Ok(())
}

/// Loads either format, sniffing the binary magic first.
pub fn load_dataset(path: &Path) -> Result<Dataset> {
    let mut file = File::open(path)?;
    let mut magic = [0u8; 4];
    let sniffed = file.read(&mut magic)?;
    drop(file);
    if sniffed == 4 && &magic == BINARY_MAGIC {
        load_binary(path)
    } else {
        load_csv(path)
    }
}

/// One cluster id per line.
pub fn write_assignments(assignment: &[usize], path: &Path) -> Result<()> {
    let mut writer = BufWriter::new(File::create(path)?);
    for &c in assignment {
        writeln!(writer, "{c}")?;
    }
    writer.flush()?;
    Ok(())
}

/// One centroid per line, comma-separated coordinates, shortest round-trip
/// float formatting.
pub fn write_centroids(centroids: &[Vec<f64>], path: &Path) -> Result<()> {
    let mut writer = BufWriter::new(File::create(path)?);
    for centroid in centroids {
        let fields: Vec<String> = centroid.iter().map(|x| x.to_string()).collect();
        writeln!(writer, "{}", fields.join(","))?;
    }
    writer.flush()?;
    Ok(())
}
