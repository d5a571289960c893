use crate::base::{BaseDescriptor, BaseKind};
use crate::oracle::inertia_oracle;
use crate::rational::{product, Rational};

use super::condition::{branch_condition, Branch, BranchFamily, Relation};
use super::cycle::{cycle_inertia, path_signs};
use super::{fold_front, BaseEvaluation, ClosedFormError, EvalOptions, EvalSource};

/// Path weights (hub `u` to hub `v`) of a folded theta representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldedTheta {
    pub paths: [Vec<Rational>; 3],
    pub folds: usize,
}

/// Shortens every path to at most 5 vertices by removing four interior
/// vertices at a time next to `u`. A path is left at 6 vertices when folding
/// it would create a second single-edge path (a multi-edge).
pub fn fold_theta(d: &BaseDescriptor) -> Result<FoldedTheta, ClosedFormError> {
    check_theta(d)?;
    let mut paths = [d.a.clone(), d.b.clone(), d.c.clone()];
    let mut folds = 0;
    for i in 0..3 {
        while paths[i].len() >= 5 {
            let would_be_edge = paths[i].len() == 5;
            let edge_exists = (0..3).any(|j| j != i && paths[j].len() == 1);
            if would_be_edge && edge_exists {
                break;
            }
            fold_front(&mut paths[i]);
            folds += 1;
        }
    }
    Ok(FoldedTheta { paths, folds })
}

fn check_theta(d: &BaseDescriptor) -> Result<(), ClosedFormError> {
    let bad = |why: &str| Err(ClosedFormError::NonCanonical(why.to_string()));
    if d.kind != BaseKind::Theta {
        return bad("expected a theta descriptor");
    }
    if d.a.len() + 1 != d.p || d.b.len() + 1 != d.l || d.c.len() + 1 != d.q {
        return bad("weight counts do not match (p, l, q)");
    }
    if !(d.p <= d.l && d.l <= d.q) {
        return bad("expected p <= l <= q");
    }
    if d.p < 2 || d.l < 3 {
        return bad("theta graph would have parallel edges");
    }
    Ok(())
}

fn rev(w: &[Rational]) -> Vec<Rational> {
    w.iter().rev().cloned().collect()
}

fn signs_of_cycle(w: Vec<Rational>) -> Result<(usize, usize), ClosedFormError> {
    cycle_inertia(&w).map(|i| (i.pos, i.neg))
}

fn shift((p, n): (usize, usize), k: usize) -> (usize, usize) {
    (p + k, n + k)
}

type ThetaValue = ((usize, usize), EvalSource, Option<Branch>);

/// Inertia of `theta(p, l, q)`.
pub fn theta_base_inertia(
    d: &BaseDescriptor,
    opts: EvalOptions,
) -> Result<BaseEvaluation, ClosedFormError> {
    let FoldedTheta { paths, folds } = fold_theta(d)?;
    let mut order: Vec<usize> = (0..3).collect();
    order.sort_by_key(|&i| paths[i].len());
    let sorted: Vec<&Vec<Rational>> = order.iter().map(|&i| &paths[i]).collect();
    let lens: Vec<usize> = sorted.iter().map(|w| w.len() + 1).collect();
    let representative = (lens[0], lens[1], lens[2]);
    let [a, b, c] = paths.clone();
    let rep = BaseDescriptor::theta(a, b, c).to_graph();
    let (signs, source, branch, verified) = match evaluate(&sorted, &lens)? {
        Some((signs, source, branch)) => {
            let verified = opts.verify.then(|| inertia_oracle(&rep).signs() == signs);
            (signs, source, branch, verified)
        }
        None => (
            inertia_oracle(&rep).signs(),
            EvalSource::OracleFallback,
            None,
            None,
        ),
    };
    Ok(BaseEvaluation {
        pos: signs.0 + 2 * folds,
        neg: signs.1 + 2 * folds,
        representative,
        folds,
        source,
        branch,
        verified,
    })
}

/// Picks the two paths of length `len` and the remaining one.
fn pair_of<'a>(
    sorted: &[&'a Vec<Rational>],
    len: usize,
) -> Option<(&'a [Rational], &'a [Rational], &'a [Rational])> {
    let idx: Vec<usize> = (0..3).filter(|&i| sorted[i].len() + 1 == len).collect();
    if idx.len() < 2 {
        return None;
    }
    let other = (0..3).find(|i| !idx[..2].contains(i)).expect("three paths");
    Some((sorted[idx[0]], sorted[idx[1]], sorted[other]))
}

fn evaluate(
    sorted: &[&Vec<Rational>],
    lens: &[usize],
) -> Result<Option<ThetaValue>, ClosedFormError> {
    Ok(if let Some((a, b, c)) = pair_of(sorted, 3) {
        Some(theta33(a, b, c)?)
    } else if let Some((a, b, c)) = pair_of(sorted, 4) {
        Some(theta44(a, b, c)?)
    } else if let Some((a, b, c)) = pair_of(sorted, 5) {
        Some(theta55(a, b, c)?)
    } else {
        match lens {
            [2, 6, _] => Some(theta26(sorted[0], sorted[1], sorted[2])?),
            [2, _, 6] => Some(theta26(sorted[0], sorted[2], sorted[1])?),
            [2, 3, 4] => Some(theta24(sorted[0], sorted[2], 3)),
            [2, 4, 5] => Some(theta24(sorted[0], sorted[1], 5)),
            [2, 3, 5] => Some(((3, 3), EvalSource::ThetaSmall, None)),
            [3, 4, 5] => Some(((4, 4), EvalSource::ThetaSmall, None)),
            _ => None,
        }
    })
}

/// Two 3-vertex paths `u x v` with weights `a` and `b`.
///
/// If `a1 b2 = a2 b1` the middle vertex of `b` hangs off a null vector and the
/// rest is the cycle formed by `a` and `c`; otherwise both middle vertices pair
/// up with the hubs and the `c` interior is a path.
fn theta33(a: &[Rational], b: &[Rational], c: &[Rational]) -> Result<ThetaValue, ClosedFormError> {
    if branch_condition(BranchFamily::Theta33, a, b, c).relation() == Relation::Eq {
        let mut cyc = a.to_vec();
        cyc.extend(rev(c));
        let branch = Branch::new(BranchFamily::Theta33, Relation::Eq);
        Ok((signs_of_cycle(cyc)?, EvalSource::Theta33, Some(branch)))
    } else {
        let branch = Branch::new(BranchFamily::Theta33, Relation::Gt);
        Ok((
            shift(path_signs(c.len() - 1), 2),
            EvalSource::Theta33,
            Some(branch),
        ))
    }
}

/// Two 4-vertex paths: one of them folds into the other, leaving `(1, 1)`
/// and a cycle through `a` with its last edge reweighted.
fn theta44(a: &[Rational], b: &[Rational], c: &[Rational]) -> Result<ThetaValue, ClosedFormError> {
    let last = &a[2] + &b[0] * &a[1] * &b[2] / (&a[0] * &b[1]);
    let mut cyc = vec![a[0].clone(), a[1].clone(), last];
    cyc.extend(rev(c));
    Ok((shift(signs_of_cycle(cyc)?, 1), EvalSource::Theta44, None))
}

/// Two 5-vertex paths forming an 8-cycle; the branch is that cycle's
/// alternating condition.
fn theta55(a: &[Rational], b: &[Rational], c: &[Rational]) -> Result<ThetaValue, ClosedFormError> {
    if branch_condition(BranchFamily::Theta55, a, b, c).relation() == Relation::Eq {
        let mut cyc = a.to_vec();
        cyc.extend(rev(c));
        let branch = Branch::new(BranchFamily::Theta55, Relation::Eq);
        Ok((
            shift(signs_of_cycle(cyc)?, 1),
            EvalSource::Theta55,
            Some(branch),
        ))
    } else {
        let branch = Branch::new(BranchFamily::Theta55, Relation::Gt);
        Ok((
            shift(path_signs(c.len() + 3), 2),
            EvalSource::Theta55,
            Some(branch),
        ))
    }
}

/// A hub edge `a` and a 6-vertex path `b`: the path folds onto the edge.
fn theta26(a: &[Rational], b: &[Rational], c: &[Rational]) -> Result<ThetaValue, ClosedFormError> {
    let edge = &a[0] + product([&b[0], &b[2], &b[4]]) / product([&b[1], &b[3]]);
    let mut cyc = vec![edge];
    cyc.extend(rev(c));
    Ok((shift(signs_of_cycle(cyc)?, 2), EvalSource::Theta26, None))
}

/// A hub edge `a`, a 4-vertex path `b` and a path `c` with 3 or 5 vertices;
/// the branch is the sign of `a1 b2 - b1 b3`.
fn theta24(a: &[Rational], b: &[Rational], q: usize) -> ThetaValue {
    let relation = branch_condition(BranchFamily::Theta24 { q }, a, b, &[]).relation();
    let value = match (q, relation) {
        (3, Relation::Gt) => (2, 3),
        (3, Relation::Eq) => (2, 2),
        (3, Relation::Lt) => (3, 2),
        (_, Relation::Gt) => (4, 3),
        (_, Relation::Eq) => (3, 3),
        (_, Relation::Lt) => (3, 4),
    };
    let branch = Branch::new(BranchFamily::Theta24 { q }, relation);
    (value, EvalSource::ThetaSmall, Some(branch))
}
