use crate::error::{Error, Result};

/// Immutable n x d matrix of point coordinates, one row per point.
///
/// Construction validates that every coordinate is finite and that the shape
/// is consistent; all downstream code relies on those invariants.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    n: usize,
    d: usize,
    coords: Vec<f64>,
}

impl Dataset {
    /// Builds a dataset from individual rows. Rows must be nonempty, of equal
    /// length, and finite.
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::EmptyDataset);
        }
        let d = rows[0].len();
        if d == 0 {
            return Err(Error::ZeroDimension);
        }
        let n = rows.len();
        let mut coords = Vec::with_capacity(n * d);
        for (index, row) in rows.into_iter().enumerate() {
            if row.len() != d {
                return Err(Error::RaggedPoint { index, found: row.len(), expected: d });
            }
            if row.iter().any(|x| !x.is_finite()) {
                return Err(Error::NonFinite { index });
            }
            coords.extend_from_slice(&row);
        }
        Ok(Self { n, d, coords })
    }

    /// Builds a dataset from a row-major coordinate buffer.
    pub fn from_flat(n: usize, d: usize, coords: Vec<f64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyDataset);
        }
        if d == 0 {
            return Err(Error::ZeroDimension);
        }
        let expected = n.checked_mul(d).ok_or(Error::CoordinateCount {
            len: coords.len(),
            expected: usize::MAX,
            n,
            d,
        })?;
        if coords.len() != expected {
            return Err(Error::CoordinateCount { len: coords.len(), expected, n, d });
        }
        if let Some(bad) = coords.iter().position(|x| !x.is_finite()) {
            return Err(Error::NonFinite { index: bad / d });
        }
        Ok(Self { n, d, coords })
    }

    /// Number of points.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false // n >= 1 by construction
    }

    /// Dimensionality of each point.
    pub fn dim(&self) -> usize {
        self.d
    }

    /// Coordinates of point `p`.
    #[inline]
    pub fn point(&self, p: usize) -> &[f64] {
        &self.coords[p * self.d..(p + 1) * self.d]
    }

    /// The whole row-major coordinate buffer.
    pub fn coords(&self) -> &[f64] {
        &self.coords
    }
}
