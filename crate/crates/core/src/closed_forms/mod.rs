//! Closed-form inertia of forests, cycles and the infinity/theta bases.
//!
//! Bases are first folded to small representatives (every run of four
//! degree-2 vertices removed from a cycle or path is worth `(2, 2)`), then
//! the representative is evaluated from a case table. In verify mode the
//! representative is also diagonalized exactly and the two answers compared.

mod condition;
mod cycle;
mod infinity;
mod table1;
mod theta;

use serde::Serialize;
use thiserror::Error;

pub use condition::{branch_condition, Branch, BranchFamily, CaseCondition, Relation};
pub use cycle::{cycle_inertia, forest_inertia, lollipop_signs, path_signs};
pub use infinity::{fold_infinity, infinity_base_inertia};
pub use table1::{
    table1_condition, table1_lookup, table1_rows, Table1Condition, Table1Outcome, Table1Row,
};
pub use theta::{fold_theta, theta_base_inertia};

use crate::base::{BaseDescriptor, BaseKind};
use crate::structure::StructureError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error("graph is not acyclic")]
    NotAcyclic,
    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("non-canonical descriptor: {0}")]
    NonCanonical(String),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

/// Which rule produced a base's inertia.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EvalSource {
    CycleFormula,
    Table1,
    C4Join,
    C6Join,
    Theta33,
    Theta44,
    Theta55,
    Theta26,
    ThetaSmall,
    OracleFallback,
}

/// Options for base evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvalOptions {
    /// Diagonalize every representative and compare with the closed form.
    pub verify: bool,
}

impl Default for EvalOptions {
    fn default() -> Self {
        Self {
            verify: cfg!(debug_assertions),
        }
    }
}

/// `(i+, i-)` of a base together with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseEvaluation {
    pub pos: usize,
    pub neg: usize,
    /// Representative `(p, l, q)` after folding.
    pub representative: (usize, usize, usize),
    /// `k + s + t`: number of four-vertex runs folded away.
    pub folds: usize,
    pub source: EvalSource,
    /// Condition branch taken by the representative, if it had one.
    pub branch: Option<Branch>,
    /// `Some(ok)` when verify mode compared against the exact oracle.
    pub verified: Option<bool>,
}

impl BaseEvaluation {
    pub fn signs(&self) -> (usize, usize) {
        (self.pos, self.neg)
    }
}

/// Dispatches on the descriptor kind.
pub fn base_inertia(
    d: &BaseDescriptor,
    opts: EvalOptions,
) -> Result<BaseEvaluation, ClosedFormError> {
    match d.kind {
        BaseKind::Cycle => {
            let inertia = cycle_inertia(&d.a)?;
            Ok(BaseEvaluation {
                pos: inertia.pos,
                neg: inertia.neg,
                representative: (d.p, 0, 0),
                folds: 0,
                source: EvalSource::CycleFormula,
                branch: condition::cycle_branch(&d.a),
                verified: opts
                    .verify
                    .then(|| crate::oracle::inertia_oracle(&d.to_graph()) == inertia),
            })
        }
        BaseKind::Infinity => infinity_base_inertia(d, opts),
        BaseKind::Theta => theta_base_inertia(d, opts),
    }
}

/// Folds the first five weights of a run into one: `w1 w3 w5 / (w2 w4)`.
pub(crate) fn fold_front(weights: &mut Vec<crate::rational::Rational>) {
    let folded = crate::reduction::contracted_weight(&[
        weights[0].clone(),
        weights[1].clone(),
        weights[2].clone(),
        weights[3].clone(),
        weights[4].clone(),
    ]);
    weights.splice(0..5, [folded]);
}
