use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::rational::{format_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix is not square: row {row} has {len} entries, expected {order}")]
    NotSquare {
        row: usize,
        len: usize,
        order: usize,
    },
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("row operation needs two distinct indices, got {0} twice")]
    SameIndex(usize),
    #[error("scale factor must be non-zero")]
    ZeroFactor,
}

/// Dense symmetric matrix of exact rationals, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct SymRationalMatrix {
    order: usize,
    entries: Vec<Rational>,
}

impl SymRationalMatrix {
    pub fn zeros(order: usize) -> Self {
        Self {
            order,
            entries: vec![Rational::zero(); order * order],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, MatrixError> {
        let order = rows.len();
        for (row, r) in rows.iter().enumerate() {
            if r.len() != order {
                return Err(MatrixError::NotSquare {
                    row,
                    len: r.len(),
                    order,
                });
            }
        }
        let entries: Vec<Rational> = rows.into_iter().flatten().collect();
        let m = Self { order, entries };
        for i in 0..order {
            for j in i + 1..order {
                if m.get(i, j) != m.get(j, i) {
                    return Err(MatrixError::NotSymmetric(i, j));
                }
            }
        }
        Ok(m)
    }

    pub fn diagonal(values: Vec<Rational>) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, v) in values.into_iter().enumerate() {
            m.set_sym(i, i, v);
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.order + j]
    }

    /// Sets entries `(i, j)` and `(j, i)`.
    pub fn set_sym(&mut self, i: usize, j: usize, value: Rational) {
        let n = self.order;
        self.entries[j * n + i] = value.clone();
        self.entries[i * n + j] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.order.max(1)).take(self.order)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (i + 1..self.order).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub(crate) fn check_index(&self, index: usize) -> Result<(), MatrixError> {
        if index < self.order {
            Ok(())
        } else {
            Err(MatrixError::IndexOutOfRange {
                index,
                order: self.order,
            })
        }
    }

    pub(crate) fn swap_in_place(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        let n = self.order;
        for c in 0..n {
            self.entries.swap(i * n + c, j * n + c);
        }
        for r in 0..n {
            self.entries.swap(r * n + i, r * n + j);
        }
    }

    pub(crate) fn scale_in_place(&mut self, i: usize, k: &Rational) {
        let n = self.order;
        for c in 0..n {
            self.entries[i * n + c] *= k;
        }
        for r in 0..n {
            self.entries[r * n + i] *= k;
        }
    }

    /// Row `dst` += k * row `src`, then column `dst` += k * column `src`.
    pub(crate) fn add_in_place(&mut self, src: usize, dst: usize, k: &Rational) {
        let n = self.order;
        for c in 0..n {
            let delta = &self.entries[src * n + c] * k;
            if !delta.is_zero() {
                self.entries[dst * n + c] += delta;
            }
        }
        for r in 0..n {
            let delta = &self.entries[r * n + src] * k;
            if !delta.is_zero() {
                self.entries[r * n + dst] += delta;
            }
        }
    }
}

/// One row per line, entries as reduced rationals separated by single spaces.
impl fmt::Display for SymRationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(format_rational).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymRationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymRationalMatrix({})\n{}", self.order, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn from_rows_checks_shape_and_symmetry() {
        assert!(matches!(
            SymRationalMatrix::from_rows(vec![vec![int(0), int(1)], vec![int(2), int(0)]]),
            Err(MatrixError::NotSymmetric(0, 1))
        ));
        assert!(matches!(
            SymRationalMatrix::from_rows(vec![vec![int(0)], vec![int(2), int(0)]]),
            Err(MatrixError::NotSquare { row: 0, .. })
        ));
        let m =
            SymRationalMatrix::from_rows(vec![vec![int(1), int(2)], vec![int(2), int(3)]]).unwrap();
        assert_eq!(m.to_string(), "1 2\n2 3\n");
    }

    #[test]
    fn empty_matrix_dumps_nothing() {
        assert_eq!(SymRationalMatrix::zeros(0).to_string(), "");
    }
}
