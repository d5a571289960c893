use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::rational::{product, Rational};

/// Sign of `lhs - rhs` in a case condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Gt,
    Eq,
    Lt,
}

impl Relation {
    pub const ALL: [Relation; 3] = [Relation::Gt, Relation::Eq, Relation::Lt];

    pub fn from_ordering(o: Ordering) -> Self {
        match o {
            Ordering::Greater => Relation::Gt,
            Ordering::Equal => Relation::Eq,
            Ordering::Less => Relation::Lt,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Gt => ">",
            Relation::Eq => "=",
            Relation::Lt => "<",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Gt => "gt",
            Relation::Eq => "eq",
            Relation::Lt => "lt",
        })
    }
}

/// A case condition `lhs ? rhs` with both sides evaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseCondition {
    pub lhs: Rational,
    pub rhs: Rational,
}

impl CaseCondition {
    pub fn relation(&self) -> Relation {
        Relation::from_ordering(self.lhs.cmp(&self.rhs))
    }
}

/// A representative shape whose inertia depends on a weight condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum BranchFamily {
    /// Even cycle of length `0 mod 4`: alternating products equal or not.
    /// `n` is 4, or 8 for every longer such cycle.
    Cycle {
        n: usize,
    },
    /// A conditional row of the infinity table.
    Table1 {
        p: usize,
        l: usize,
        q: usize,
    },
    /// Infinity graph with a 4-cycle at the junction.
    C4Join,
    Theta33,
    Theta55,
    /// `theta(2, 4, q)` for `q` in `{3, 5}`.
    Theta24 {
        q: usize,
    },
}

impl BranchFamily {
    /// True when the strict sides of the condition lead to one outcome.
    pub fn is_binary(self) -> bool {
        !matches!(
            self,
            BranchFamily::Table1 { .. } | BranchFamily::Theta24 { .. }
        )
    }

    /// Relations that give distinct branches; binary families use `Gt` for
    /// "not equal".
    pub fn relations(self) -> &'static [Relation] {
        if self.is_binary() {
            &[Relation::Gt, Relation::Eq]
        } else {
            &Relation::ALL
        }
    }
}

impl fmt::Display for BranchFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BranchFamily::Cycle { n } => write!(f, "cycle:{n}"),
            BranchFamily::Table1 { p, l, q } => write!(f, "table1:{p}-{l}-{q}"),
            BranchFamily::C4Join => f.write_str("c4join"),
            BranchFamily::Theta33 => f.write_str("theta33"),
            BranchFamily::Theta55 => f.write_str("theta55"),
            BranchFamily::Theta24 { q } => write!(f, "theta24x{q}"),
        }
    }
}

/// A family together with the side of its condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Branch {
    pub family: BranchFamily,
    pub relation: Relation,
}

impl Branch {
    pub fn new(family: BranchFamily, relation: Relation) -> Self {
        let relation = if family.is_binary() && relation == Relation::Lt {
            Relation::Gt
        } else {
            relation
        };
        Branch { family, relation }
    }

    /// Every branch the closed forms can take.
    pub fn all() -> Vec<Branch> {
        let mut families = vec![BranchFamily::Cycle { n: 4 }, BranchFamily::Cycle { n: 8 }];
        families.extend(
            super::table1::table1_rows()
                .iter()
                .filter(|r| r.condition.is_some())
                .map(|r| BranchFamily::Table1 {
                    p: r.p,
                    l: r.l,
                    q: r.q,
                }),
        );
        families.extend([
            BranchFamily::C4Join,
            BranchFamily::Theta33,
            BranchFamily::Theta55,
            BranchFamily::Theta24 { q: 3 },
            BranchFamily::Theta24 { q: 5 },
        ]);
        families
            .into_iter()
            .flat_map(|f| f.relations().iter().map(move |&r| Branch::new(f, r)))
            .collect()
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family.is_binary() {
            let side = if self.relation == Relation::Eq {
                "eq"
            } else {
                "ne"
            };
            write!(f, "{}:{side}", self.family)
        } else {
            write!(f, "{}:{}", self.family, self.relation)
        }
    }
}

impl std::str::FromStr for Branch {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Branch::all()
            .into_iter()
            .find(|b| b.to_string() == s)
            .ok_or_else(|| format!("unknown branch `{s}`"))
    }
}

/// Evaluates the condition of `family` on representative weights.
///
/// Roles: `Cycle` and `C4Join` read the cycle from `a`; `Table1` reads the
/// `p` side from `a`, the `q` side from `b` and the joining path from `c`;
/// `Theta33`/`Theta55` read the two equal-length paths from `a` and `b`;
/// `Theta24` reads the hub edge from `a` and the 4-vertex path from `b`.
pub fn branch_condition(
    family: BranchFamily,
    a: &[Rational],
    b: &[Rational],
    c: &[Rational],
) -> CaseCondition {
    match family {
        BranchFamily::Cycle { .. } | BranchFamily::C4Join => CaseCondition {
            lhs: product(a.iter().step_by(2)),
            rhs: product(a.iter().skip(1).step_by(2)),
        },
        BranchFamily::Table1 { p, l, q } => {
            let row = super::table1::table1_lookup(p, l, q).expect("conditional table row");
            super::table1::table1_condition(row, a, c, b).expect("conditional table row")
        }
        BranchFamily::Theta33 => CaseCondition {
            lhs: &a[0] * &b[1],
            rhs: &a[1] * &b[0],
        },
        BranchFamily::Theta55 => CaseCondition {
            lhs: product([&a[0], &b[1], &a[2], &b[3]]),
            rhs: product([&b[0], &a[1], &b[2], &a[3]]),
        },
        BranchFamily::Theta24 { .. } => CaseCondition {
            lhs: &a[0] * &b[1],
            rhs: &b[0] * &b[2],
        },
    }
}

/// Branch taken by a cycle whose length is a multiple of 4.
pub(crate) fn cycle_branch(weights: &[Rational]) -> Option<Branch> {
    let n = weights.len();
    if !n.is_multiple_of(4) {
        return None;
    }
    let family = BranchFamily::Cycle {
        n: if n == 4 { 4 } else { 8 },
    };
    let relation = branch_condition(family, weights, &[], &[]).relation();
    Some(Branch::new(family, relation))
}
