use crate::base::{BaseDescriptor, BaseKind};
use crate::oracle::inertia_oracle;
use crate::rational::Rational;

use super::condition::{branch_condition, Branch, BranchFamily};
use super::cycle::{lollipop_signs, path_signs};
use super::table1::{table1_condition, table1_lookup};
use super::{fold_front, BaseEvaluation, ClosedFormError, EvalOptions, EvalSource};

/// Weights of a folded infinity representative plus the number of folds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldedInfinity {
    pub a: Vec<Rational>,
    pub c: Vec<Rational>,
    pub b: Vec<Rational>,
    pub folds: usize,
}

/// Shortens each cycle to length at most 6 and the joining path to at most 5
/// vertices by removing four consecutive vertices at a time, starting at the
/// junction.
pub fn fold_infinity(d: &BaseDescriptor) -> Result<FoldedInfinity, ClosedFormError> {
    check_infinity(d)?;
    let (mut a, mut c, mut b) = (d.a.clone(), d.c.clone(), d.b.clone());
    let mut folds = 0;
    for cycle in [&mut a, &mut b] {
        while cycle.len() > 6 {
            fold_front(cycle);
            folds += 1;
        }
    }
    while c.len() >= 5 {
        fold_front(&mut c);
        folds += 1;
    }
    Ok(FoldedInfinity { a, c, b, folds })
}

fn check_infinity(d: &BaseDescriptor) -> Result<(), ClosedFormError> {
    let bad = |why: &str| Err(ClosedFormError::NonCanonical(why.to_string()));
    if d.kind != BaseKind::Infinity {
        return bad("expected an infinity descriptor");
    }
    if d.a.len() != d.p || d.b.len() != d.q || d.c.len() + 1 != d.l {
        return bad("weight counts do not match (p, l, q)");
    }
    if d.p < 3 || d.q < 3 || d.l < 1 {
        return bad("infinity cycles need at least 3 vertices");
    }
    Ok(())
}

/// Inertia of `inf(p, l, q)`.
pub fn infinity_base_inertia(
    d: &BaseDescriptor,
    opts: EvalOptions,
) -> Result<BaseEvaluation, ClosedFormError> {
    let FoldedInfinity {
        mut a,
        mut c,
        mut b,
        folds,
    } = fold_infinity(d)?;
    let swap = |a: &mut Vec<Rational>, c: &mut Vec<Rational>, b: &mut Vec<Rational>| {
        std::mem::swap(a, b);
        c.reverse();
    };
    let even_side = |w: &[Rational]| w.len() == 4 || w.len() == 6;
    if !even_side(&a) && (even_side(&b) || a.len() > b.len()) {
        swap(&mut a, &mut c, &mut b);
    }
    let representative = (a.len(), c.len() + 1, b.len());
    let (signs, source, branch) = if even_side(&a) {
        even_join(&a, &c, &b)?
    } else {
        let (p, l, q) = representative;
        let row = table1_lookup(p, l, q).ok_or_else(|| {
            ClosedFormError::NonCanonical(format!("no table row for infinity({p},{l},{q})"))
        })?;
        let relation = table1_condition(row, &a, &c, &b).map(|cond| cond.relation());
        let branch = relation.map(|r| Branch::new(BranchFamily::Table1 { p, l, q }, r));
        (row.value(relation), EvalSource::Table1, branch)
    };
    let verified = opts.verify.then(|| {
        let rep = BaseDescriptor::infinity(a.clone(), c.clone(), b.clone()).to_graph();
        inertia_oracle(&rep).signs() == signs
    });
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

type JoinValue = ((usize, usize), EvalSource, Option<Branch>);

/// `a` is a 4- or 6-cycle at the junction `u1`.
///
/// Deleting `u1` with its C4/C6 leaves the other cycle with a pendant path
/// (or a bare path when `l = 1`). A C4 whose alternating products agree keeps
/// `u1` in the remainder instead and contributes only `(1, 1)`.
fn even_join(a: &[Rational], c: &[Rational], b: &[Rational]) -> Result<JoinValue, ClosedFormError> {
    let l = c.len() + 1;
    let without_junction = || -> Result<(usize, usize), ClosedFormError> {
        if l == 1 {
            Ok(path_signs(b.len() - 1))
        } else {
            lollipop_signs(b, l - 2)
        }
    };
    if a.len() == 6 {
        let (pos, neg) = without_junction()?;
        return Ok(((pos + 3, neg + 3), EvalSource::C6Join, None));
    }
    if branch_condition(BranchFamily::C4Join, a, &[], &[]).relation() == super::Relation::Eq {
        let (pos, neg) = if l == 1 {
            let cyc = super::cycle::cycle_inertia(b)?;
            (cyc.pos, cyc.neg)
        } else {
            lollipop_signs(b, l - 1)?
        };
        let branch = Branch::new(BranchFamily::C4Join, super::Relation::Eq);
        Ok(((pos + 1, neg + 1), EvalSource::C4Join, Some(branch)))
    } else {
        let (pos, neg) = without_junction()?;
        let branch = Branch::new(BranchFamily::C4Join, super::Relation::Gt);
        Ok(((pos + 2, neg + 2), EvalSource::C4Join, Some(branch)))
    }
}
