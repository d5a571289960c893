//! Inertia-shifting graph rewrites with traces.
//!
//! Deleting a pendant vertex together with its neighbour lowers both `i+`
//! and `i-` by one. Replacing a path `v6 v3 v2 v1 v4 v5` whose four interior
//! vertices have degree 2 and whose weights are `a1..a5` by a single edge of
//! weight `a1 a3 a5 / (a2 a4)` lowers both by two.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::WeightedGraph;
use crate::rational::{format_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("vertex `{0}` is not in the graph")]
    UnknownVertex(String),
    #[error("vertex `{0}` is not pendant")]
    NotPendant(String),
    #[error("`{0}`-`{1}` is not an edge of the graph")]
    MissingEdge(String, String),
    #[error("interior vertex `{0}` does not have degree 2")]
    InteriorDegree(String),
    #[error("path vertices are not distinct")]
    RepeatedVertex,
    #[error("contraction would create a loop at `{0}`")]
    WouldCreateLoop(String),
    #[error("contraction would duplicate edge `{0}`-`{1}`")]
    WouldDuplicateEdge(String, String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    PendantPair,
    PathContract,
    ComponentSplit,
    TypeIDecompose,
    TypeIICut,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::PendantPair => "pendant-pair",
            Rule::PathContract => "path-contract",
            Rule::ComponentSplit => "component-split",
            Rule::TypeIDecompose => "type-i-decompose",
            Rule::TypeIICut => "type-ii-cut",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub rule: Rule,
    pub removed: Vec<String>,
    pub added: Vec<(String, String, Rational)>,
    /// Contribution to `(i+, i-)`.
    pub offset: (usize, usize),
}

/// `rule removed=[...] added=[(u,v,w)] offset=(+p,+n)`
impl fmt::Display for ReductionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let added: Vec<String> = self
            .added
            .iter()
            .map(|(u, v, w)| format!("({u},{v},{})", format_rational(w)))
            .collect();
        write!(
            f,
            "{} removed=[{}] added=[{}] offset=(+{},+{})",
            self.rule,
            self.removed.join(","),
            added.join(","),
            self.offset.0,
            self.offset.1
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
}

impl ReductionTrace {
    pub fn push(&mut self, step: ReductionStep) {
        self.steps.push(step);
    }

    pub fn extend(&mut self, other: ReductionTrace) {
        self.steps.extend(other.steps);
    }

    /// Componentwise sum of the step offsets.
    pub fn accumulated(&self) -> (usize, usize) {
        self.steps
            .iter()
            .fold((0, 0), |(p, n), s| (p + s.offset.0, n + s.offset.1))
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            writeln!(f, "{step}")?;
        }
        Ok(())
    }
}

fn lookup(g: &WeightedGraph, label: &str) -> Result<usize, ReductionError> {
    g.index_of(label)
        .ok_or_else(|| ReductionError::UnknownVertex(label.to_string()))
}

/// Removes pendant `v` and its unique neighbour.
pub fn delete_pendant_pair(
    g: &WeightedGraph,
    v: &str,
) -> Result<(WeightedGraph, ReductionStep), ReductionError> {
    let vi = lookup(g, v)?;
    if g.degree(vi) != 1 {
        return Err(ReductionError::NotPendant(v.to_string()));
    }
    let (ui, _) = g.neighbors(vi).next().expect("pendant has a neighbour");
    let step = ReductionStep {
        rule: Rule::PendantPair,
        removed: vec![v.to_string(), g.label(ui).to_string()],
        added: Vec::new(),
        offset: (1, 1),
    };
    Ok((g.without(&[vi, ui]), step))
}

/// `a1 a3 a5 / (a2 a4)` for the five weights along the path.
pub fn contracted_weight(weights: &[Rational; 5]) -> Rational {
    let [a1, a2, a3, a4, a5] = weights;
    a1 * a3 * a5 / (a2 * a4)
}

/// Replaces the path `[v6, v3, v2, v1, v4, v5]` (endpoints first and last)
/// by the edge `v6 v5`. Refuses rewrites that would leave the class of simple
/// graphs.
pub fn contract_degree2_path(
    g: &WeightedGraph,
    path: [&str; 6],
) -> Result<(WeightedGraph, ReductionStep), ReductionError> {
    let idx = path
        .iter()
        .map(|l| lookup(g, l))
        .collect::<Result<Vec<_>, _>>()?;
    let mut weights = Vec::with_capacity(5);
    for k in 0..5 {
        let w = g.weight(idx[k], idx[k + 1]).ok_or_else(|| {
            ReductionError::MissingEdge(path[k].to_string(), path[k + 1].to_string())
        })?;
        weights.push(w.clone());
    }
    for k in 1..5 {
        if g.degree(idx[k]) != 2 {
            return Err(ReductionError::InteriorDegree(path[k].to_string()));
        }
    }
    for a in 0..6 {
        for b in a + 1..6 {
            if idx[a] == idx[b] && !(a == 0 && b == 5) {
                return Err(ReductionError::RepeatedVertex);
            }
        }
    }
    let (s, t) = (idx[0], idx[5]);
    if s == t {
        return Err(ReductionError::WouldCreateLoop(path[0].to_string()));
    }
    if g.has_edge(s, t) {
        return Err(ReductionError::WouldDuplicateEdge(
            path[0].to_string(),
            path[5].to_string(),
        ));
    }
    let weights: [Rational; 5] = weights.try_into().expect("five weights");
    let new_weight = contracted_weight(&weights);
    let mut h = g.without(&idx[1..5]);
    h.add_edge(path[0], path[5], new_weight.clone())
        .expect("endpoints are distinct and non-adjacent");
    let step = ReductionStep {
        rule: Rule::PathContract,
        removed: path[1..5].iter().map(|s| s.to_string()).collect(),
        added: vec![(path[0].to_string(), path[5].to_string(), new_weight)],
        offset: (2, 2),
    };
    Ok((h, step))
}

/// First pendant vertex in vertex order.
fn find_pendant(g: &WeightedGraph) -> Option<usize> {
    (0..g.order()).find(|&i| g.degree(i) == 1)
}

/// Candidate contraction paths `[v6, x, i1, i2, i3, v5]`, scanning interior
/// start `x` in vertex order and directions by neighbour order.
fn contraction_candidates(g: &WeightedGraph) -> impl Iterator<Item = [usize; 6]> + '_ {
    (0..g.order())
        .filter(move |&x| g.degree(x) == 2)
        .flat_map(move |x| {
            let nb: Vec<usize> = g.neighbors(x).map(|(y, _)| y).collect();
            [(nb[0], nb[1]), (nb[1], nb[0])]
                .into_iter()
                .filter_map(move |(back, fwd)| {
                    let mut interior = vec![x];
                    let (mut prev, mut cur) = (x, fwd);
                    while interior.len() < 4 {
                        if g.degree(cur) != 2 || interior.contains(&cur) {
                            return None;
                        }
                        interior.push(cur);
                        let next = g.neighbors(cur).map(|(y, _)| y).find(|&y| y != prev)?;
                        prev = cur;
                        cur = next;
                    }
                    if interior.contains(&cur) || interior.contains(&back) {
                        return None;
                    }
                    Some([
                        back,
                        interior[0],
                        interior[1],
                        interior[2],
                        interior[3],
                        cur,
                    ])
                })
        })
}

/// Applies pendant-pair deletions, then path contractions, until neither
/// applies. `In(g) = In(result) + accumulated offset` on `(i+, i-)`.
pub fn reduce_to_core(g: &WeightedGraph) -> (WeightedGraph, ReductionTrace) {
    let mut current = g.clone();
    let mut trace = ReductionTrace::default();
    loop {
        if let Some(v) = find_pendant(&current) {
            let label = current.label(v).to_string();
            let (next, step) = delete_pendant_pair(&current, &label).expect("pendant vertex");
            trace.push(step);
            current = next;
            continue;
        }
        let applied = contraction_candidates(&current).find_map(|path| {
            let labels = path.map(|i| current.label(i).to_string());
            let refs: [&str; 6] = std::array::from_fn(|k| labels[k].as_str());
            contract_degree2_path(&current, refs).ok()
        });
        match applied {
            Some((next, step)) => {
                trace.push(step);
                current = next;
            }
            None => break,
        }
    }
    (current, trace)
}
