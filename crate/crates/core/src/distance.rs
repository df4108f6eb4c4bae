use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational};
use crate::network::ResistanceMatrix;

/// A square symmetric matrix with zero diagonal, labeled by a cyclic order
/// `1..=n`. Entries may be negative; the metric checks report on that.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix(Matrix);

impl DistanceMatrix {
    pub fn new(m: Matrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        if m.rows() < 2 {
            return Err(Error::TooSmall(m.rows()));
        }
        if let Some((i, j)) = m.first_asymmetry() {
            return Err(Error::NotSymmetric { i: i + 1, j: j + 1 });
        }
        if let Some(i) = (0..m.rows()).find(|&i| !m[(i, i)].is_zero()) {
            return Err(Error::NonzeroDiagonal { i: i + 1 });
        }
        Ok(DistanceMatrix(m))
    }

    pub fn n(&self) -> usize {
        self.0.rows()
    }

    /// Entry for 1-based labels, with labels taken cyclically mod n.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        let n = self.n();
        &self.0[((i + n - 1) % n, (j + n - 1) % n)]
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn scale(&self, factor: &Rational) -> DistanceMatrix {
        DistanceMatrix(self.0.scale(factor))
    }

    /// Relabels so that new label `k` carries old label `order[k - 1]`.
    pub fn relabel(&self, order: &[usize]) -> DistanceMatrix {
        let idx: Vec<usize> = order.iter().map(|&v| v - 1).collect();
        DistanceMatrix(self.0.submatrix(&idx, &idx))
    }
}

impl From<ResistanceMatrix> for DistanceMatrix {
    fn from(r: ResistanceMatrix) -> Self {
        DistanceMatrix(r.into_matrix())
    }
}

impl From<&ResistanceMatrix> for DistanceMatrix {
    fn from(r: &ResistanceMatrix) -> Self {
        DistanceMatrix(r.matrix().clone())
    }
}
