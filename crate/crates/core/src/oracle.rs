//! Exact inertia by congruence diagonalization.
//!
//! Only the three elementary congruence operations are used (simultaneous
//! row/column swap, scale, and add), so the inertia of the final diagonal
//! matrix equals the inertia of the input by Sylvester's law. Arithmetic is
//! exact over the rationals; the off-diagonal rescue below needs
//! characteristic zero.

use crate::graph::{Inertia, WeightedGraph};
use crate::matrix::{MatrixError, SymRationalMatrix};
use crate::rational::{format_rational, Rational};
use num_traits::{One, Signed, Zero};

/// An elementary congruence operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ecmo {
    Swap { i: usize, j: usize },
    Scale { i: usize, k: Rational },
    Add { src: usize, dst: usize, k: Rational },
}

impl Ecmo {
    pub fn apply(&self, m: &SymRationalMatrix) -> Result<SymRationalMatrix, MatrixError> {
        match self {
            Ecmo::Swap { i, j } => ecmo_swap(m, *i, *j),
            Ecmo::Scale { i, k } => ecmo_scale(m, *i, k),
            Ecmo::Add { src, dst, k } => ecmo_add(m, *src, *dst, k),
        }
    }
}

impl std::fmt::Display for Ecmo {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Ecmo::Swap { i, j } => write!(f, "swap {i} {j}"),
            Ecmo::Scale { i, k } => write!(f, "scale {i} {}", format_rational(k)),
            Ecmo::Add { src, dst, k } => write!(f, "add {src} {dst} {}", format_rational(k)),
        }
    }
}

/// Interchanges rows `i`, `j` and columns `i`, `j`.
pub fn ecmo_swap(
    m: &SymRationalMatrix,
    i: usize,
    j: usize,
) -> Result<SymRationalMatrix, MatrixError> {
    m.check_index(i)?;
    m.check_index(j)?;
    if i == j {
        return Err(MatrixError::SameIndex(i));
    }
    let mut out = m.clone();
    out.swap_in_place(i, j);
    Ok(out)
}

/// Multiplies row `i` and column `i` by `k != 0`.
pub fn ecmo_scale(
    m: &SymRationalMatrix,
    i: usize,
    k: &Rational,
) -> Result<SymRationalMatrix, MatrixError> {
    m.check_index(i)?;
    if k.is_zero() {
        return Err(MatrixError::ZeroFactor);
    }
    let mut out = m.clone();
    out.scale_in_place(i, k);
    Ok(out)
}

/// Adds `k` times row/column `src` to row/column `dst`.
pub fn ecmo_add(
    m: &SymRationalMatrix,
    src: usize,
    dst: usize,
    k: &Rational,
) -> Result<SymRationalMatrix, MatrixError> {
    m.check_index(src)?;
    m.check_index(dst)?;
    if src == dst {
        return Err(MatrixError::SameIndex(src));
    }
    if k.is_zero() {
        return Err(MatrixError::ZeroFactor);
    }
    let mut out = m.clone();
    out.add_in_place(src, dst, k);
    Ok(out)
}

/// Result of [`congruent_diagonalize`]: the inertia, the diagonal reached,
/// and the operations that produced it, in order.
#[derive(Debug, Clone)]
pub struct Diagonalization {
    pub inertia: Inertia,
    pub diagonal: Vec<Rational>,
    pub steps: Vec<Ecmo>,
}

impl Diagonalization {
    pub fn trace_lines(&self) -> Vec<String> {
        self.steps.iter().map(Ecmo::to_string).collect()
    }
}

/// Diagonalizes `m` by congruence and counts the signs of the diagonal.
///
/// At each stage the active block is the trailing principal submatrix from
/// `r` on. A nonzero diagonal entry with the smallest index is swapped to
/// position `r` and used to clear its row and column. When every active
/// diagonal entry is zero but some `(i, j)` with `i < j` is not, the
/// lexicographically smallest such pair gets `add(j -> i, 1)`, which puts
/// `2 m(i, j)` on the diagonal. A zero active block ends the process.
pub fn congruent_diagonalize(m: &SymRationalMatrix) -> Diagonalization {
    let n = m.order();
    let mut a = m.clone();
    let mut steps = Vec::new();
    let mut r = 0;
    while r < n {
        let pivot = (r..n).find(|&i| !a.get(i, i).is_zero());
        let pivot = match pivot {
            Some(p) => p,
            None => {
                let rescue = (r..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a.get(i, j).is_zero());
                match rescue {
                    Some((i, j)) => {
                        let one = Rational::one();
                        a.add_in_place(j, i, &one);
                        steps.push(Ecmo::Add {
                            src: j,
                            dst: i,
                            k: one,
                        });
                        i
                    }
                    None => break,
                }
            }
        };
        if pivot != r {
            a.swap_in_place(pivot, r);
            steps.push(Ecmo::Swap { i: pivot, j: r });
        }
        let d = a.get(r, r).clone();
        for j in r + 1..n {
            if a.get(j, r).is_zero() {
                continue;
            }
            let k = -(a.get(j, r) / &d);
            a.add_in_place(r, j, &k);
            steps.push(Ecmo::Add { src: r, dst: j, k });
        }
        r += 1;
    }
    let diagonal: Vec<Rational> = (0..n).map(|i| a.get(i, i).clone()).collect();
    let pos = diagonal.iter().filter(|d| d.is_positive()).count();
    let neg = diagonal.iter().filter(|d| d.is_negative()).count();
    Diagonalization {
        inertia: Inertia::from_signs(pos, neg, n),
        diagonal,
        steps,
    }
}

/// Inertia of a symmetric rational matrix.
pub fn matrix_inertia(m: &SymRationalMatrix) -> Inertia {
    congruent_diagonalize(m).inertia
}

/// Inertia of the weighted adjacency matrix; defined for every graph.
pub fn inertia_oracle(g: &WeightedGraph) -> Inertia {
    matrix_inertia(&g.adjacency_matrix())
}
