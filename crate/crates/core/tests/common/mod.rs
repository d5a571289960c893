//! Oracles that share no code with the library's algorithms: subset-search
//! matching and sign counting on the characteristic polynomial.

#![allow(dead_code)]

use num_traits::{Signed, Zero};
use weighted_inertia::graph::{Inertia, WeightedGraph};
use weighted_inertia::matrix::SymRationalMatrix;
use weighted_inertia::rational::{int, Rational};

/// Maximum matching size by exhaustive search over edges.
pub fn brute_matching(g: &WeightedGraph) -> usize {
    let edges: Vec<(usize, usize)> = g.edges().map(|(i, j, _)| (i, j)).collect();
    fn go(edges: &[(usize, usize)], used: &mut Vec<bool>) -> usize {
        match edges.split_first() {
            None => 0,
            Some((&(i, j), rest)) => {
                let skip = go(rest, used);
                if used[i] || used[j] {
                    return skip;
                }
                used[i] = true;
                used[j] = true;
                let take = 1 + go(rest, used);
                used[i] = false;
                used[j] = false;
                skip.max(take)
            }
        }
    }
    go(&edges, &mut vec![false; g.order()])
}

/// Coefficients `c[0..=n]` of `det(xI - M)`, lowest degree first, by
/// Faddeev-LeVerrier.
pub fn characteristic_polynomial(m: &SymRationalMatrix) -> Vec<Rational> {
    let n = m.order();
    let a: Vec<Vec<Rational>> = m.rows().map(|r| r.to_vec()).collect();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = int(1);
    let mut mk: Vec<Vec<Rational>> = vec![vec![Rational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = Rational::zero();
                for t in 0..n {
                    s += &a[i][t] * &mk[t][j];
                }
                if i == j {
                    s += &coeffs[n - k + 1];
                }
                next[i][j] = s;
            }
        }
        mk = next;
        let mut trace = Rational::zero();
        for i in 0..n {
            for t in 0..n {
                trace += &a[i][t] * &mk[t][i];
            }
        }
        coeffs[n - k] = -trace / int(k as i64);
    }
    coeffs
}

fn sign_changes(coeffs: impl Iterator<Item = Rational>) -> usize {
    let signs: Vec<bool> = coeffs
        .filter(|c| !c.is_zero())
        .map(|c| c.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Inertia from Descartes' rule, exact because a symmetric matrix has only
/// real eigenvalues.
pub fn descartes_inertia(m: &SymRationalMatrix) -> Inertia {
    let c = characteristic_polynomial(m);
    let zero = c.iter().take_while(|x| x.is_zero()).count();
    let pos = sign_changes(c.iter().cloned());
    let neg =
        sign_changes(
            c.iter()
                .enumerate()
                .map(|(k, x)| if k % 2 == 1 { -x.clone() } else { x.clone() }),
        );
    Inertia::new(pos, neg, zero)
}
