use crate::graph::{Inertia, WeightedGraph};
use crate::rational::{product, Rational};
use crate::structure::max_matching_forest;

use super::ClosedFormError;

/// Forest inertia `(q, q, n - 2q)` with `q` the matching number; weights
/// play no role.
pub fn forest_inertia(g: &WeightedGraph) -> Result<Inertia, ClosedFormError> {
    let q = max_matching_forest(g).map_err(|_| ClosedFormError::NotAcyclic)?;
    Ok(Inertia::from_signs(q, q, g.order()))
}

/// `(i+, i-)` of a path on `n` vertices.
pub fn path_signs(n: usize) -> (usize, usize) {
    (n / 2, n / 2)
}

/// True when the alternating products around an even cycle agree.
pub(crate) fn alternating_products_equal(weights: &[Rational]) -> bool {
    let odd = product(weights.iter().step_by(2));
    let even = product(weights.iter().skip(1).step_by(2));
    odd == even
}

/// Inertia of the weighted cycle with edge weights `weights` in cyclic order.
pub fn cycle_inertia(weights: &[Rational]) -> Result<Inertia, ClosedFormError> {
    let n = weights.len();
    if n < 3 {
        return Err(ClosedFormError::CycleTooShort(n));
    }
    let (pos, neg) = match n % 4 {
        0 if alternating_products_equal(weights) => (n / 2 - 1, n / 2 - 1),
        0 | 2 => (n / 2, n / 2),
        1 => (n.div_ceil(2), (n - 1) / 2),
        _ => ((n - 1) / 2, n.div_ceil(2)),
    };
    Ok(Inertia::from_signs(pos, neg, n))
}

/// `(i+, i-)` of a cycle with a pendant path of `tail` extra vertices hanging
/// from one cycle vertex.
///
/// The hanging tree is a path on `tail + 1` vertices rooted at an end, so the
/// root is matched iff `tail` is odd.
pub fn lollipop_signs(cycle: &[Rational], tail: usize) -> Result<(usize, usize), ClosedFormError> {
    let n = cycle.len();
    if tail % 2 == 1 {
        let q = tail.div_ceil(2) + (n - 1) / 2;
        Ok((q, q))
    } else {
        let c = cycle_inertia(cycle)?;
        Ok((tail / 2 + c.pos, tail / 2 + c.neg))
    }
}
