//! Inertia of the fifteen infinity representatives `inf(p, l, q)` with
//! `p <= q` in `{3, 5}` and `l` in `1..=5`.
//!
//! With `alpha = a1 a3 / a2` (or `a1 a3 a5 / (a2 a4)` for a pentagon) and
//! `beta` the same for `b`, seven rows depend on the sign of a condition
//! `lhs - rhs`.

use crate::rational::{int, Rational};

use super::condition::{CaseCondition, Relation};

/// Shape of a row's condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Table1Condition {
    /// `4 alpha beta c2^2 c4^2 .. - c1^2 c3^2 ..`, for `p = q`.
    Symmetric,
    /// `alpha c2^2 c4^2 .. - beta c1^2 c3^2 ..`, for `p < q`.
    Skew,
}

/// `(i+, i-)` per side of the condition, or a single value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Table1Outcome {
    Fixed((usize, usize)),
    Split {
        gt: (usize, usize),
        eq: (usize, usize),
        lt: (usize, usize),
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Table1Row {
    pub p: usize,
    pub l: usize,
    pub q: usize,
    pub condition: Option<Table1Condition>,
    pub outcome: Table1Outcome,
}

impl Table1Row {
    pub fn value(&self, relation: Option<Relation>) -> (usize, usize) {
        match (self.outcome, relation) {
            (Table1Outcome::Fixed(v), _) => v,
            (Table1Outcome::Split { gt, .. }, Some(Relation::Gt)) => gt,
            (Table1Outcome::Split { eq, .. }, Some(Relation::Eq)) => eq,
            (Table1Outcome::Split { lt, .. }, Some(Relation::Lt)) => lt,
            (Table1Outcome::Split { .. }, None) => panic!("conditional row needs a relation"),
        }
    }

    /// Text of the condition, e.g. `4ab*c2^2 - c1^2*c3^2`.
    pub fn condition_text(&self) -> Option<String> {
        let cond = self.condition?;
        let m = self.l - 1;
        let even: Vec<String> = (2..=m).step_by(2).map(|i| format!("c{i}^2")).collect();
        let odd: Vec<String> = (1..=m).step_by(2).map(|i| format!("c{i}^2")).collect();
        let join = |head: &str, xs: &[String]| {
            let mut parts = vec![head.to_string()];
            parts.extend(xs.iter().cloned());
            parts.retain(|s| !s.is_empty());
            if parts.is_empty() {
                "1".to_string()
            } else {
                parts.join("*")
            }
        };
        Some(match cond {
            Table1Condition::Symmetric => format!("{} - {}", join("4ab", &even), join("", &odd)),
            Table1Condition::Skew => format!("{} - {}", join("a", &even), join("b", &odd)),
        })
    }
}

const fn fixed(p: usize, l: usize, q: usize, v: (usize, usize)) -> Table1Row {
    Table1Row {
        p,
        l,
        q,
        condition: None,
        outcome: Table1Outcome::Fixed(v),
    }
}

const fn split(
    p: usize,
    l: usize,
    q: usize,
    condition: Table1Condition,
    gt: (usize, usize),
    eq: (usize, usize),
    lt: (usize, usize),
) -> Table1Row {
    Table1Row {
        p,
        l,
        q,
        condition: Some(condition),
        outcome: Table1Outcome::Split { gt, eq, lt },
    }
}

use Table1Condition::{Skew, Symmetric};

static ROWS: [Table1Row; 15] = [
    fixed(3, 1, 3, (2, 3)),
    split(3, 2, 3, Symmetric, (2, 4), (2, 3), (3, 3)),
    fixed(3, 3, 3, (3, 4)),
    split(3, 4, 3, Symmetric, (3, 5), (3, 4), (4, 4)),
    fixed(3, 5, 3, (4, 5)),
    split(3, 1, 5, Skew, (3, 4), (3, 3), (4, 3)),
    fixed(3, 2, 5, (4, 4)),
    split(3, 3, 5, Skew, (4, 5), (4, 4), (5, 4)),
    fixed(3, 4, 5, (5, 5)),
    split(3, 5, 5, Skew, (5, 6), (5, 5), (6, 5)),
    fixed(5, 1, 5, (5, 4)),
    split(5, 2, 5, Symmetric, (6, 4), (5, 4), (5, 5)),
    fixed(5, 3, 5, (6, 5)),
    split(5, 4, 5, Symmetric, (7, 5), (6, 5), (6, 6)),
    fixed(5, 5, 5, (7, 6)),
];

pub fn table1_rows() -> &'static [Table1Row] {
    &ROWS
}

pub fn table1_lookup(p: usize, l: usize, q: usize) -> Option<&'static Table1Row> {
    ROWS.iter().find(|r| (r.p, r.l, r.q) == (p, l, q))
}

/// `a1 a3 / a2` or `a1 a3 a5 / (a2 a4)`.
fn side_ratio(w: &[Rational]) -> Rational {
    let mut num = int(1);
    let mut den = int(1);
    for (i, x) in w.iter().enumerate() {
        if i % 2 == 0 {
            num *= x;
        } else {
            den *= x;
        }
    }
    num / den
}

/// Evaluates the condition of a row on weights `a` (the `p` side), `c`
/// (from `u1` to `v1`) and `b`.
pub fn table1_condition(
    row: &Table1Row,
    a: &[Rational],
    c: &[Rational],
    b: &[Rational],
) -> Option<CaseCondition> {
    let cond = row.condition?;
    let alpha = side_ratio(a);
    let beta = side_ratio(b);
    let mut even = int(1);
    let mut odd = int(1);
    for (i, x) in c.iter().enumerate() {
        let sq = x * x;
        if i % 2 == 0 {
            odd *= sq;
        } else {
            even *= sq;
        }
    }
    Some(match cond {
        Symmetric => CaseCondition {
            lhs: int(4) * alpha * beta * even,
            rhs: odd,
        },
        Skew => CaseCondition {
            lhs: alpha * even,
            rhs: beta * odd,
        },
    })
}
