//! Structural inertia: component split, Type I/II decompositions of
//! unicyclic and bicyclic components, closed forms at the leaves.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::base::{describe_base, BaseKind};
use crate::closed_forms::{
    base_inertia, cycle_inertia, forest_inertia, BaseEvaluation, ClosedFormError, EvalOptions,
};
use crate::graph::{ComponentClass, GraphError, Inertia, WeightedGraph};
use crate::oracle::inertia_oracle;
use crate::rational::Rational;
use crate::reduction::{ReductionStep, ReductionTrace, Rule};
use crate::structure::{hanging_trees, is_mismatched, two_core, HangingTree, StructureError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("expected a connected {expected} graph")]
    WrongClass { expected: &'static str },
    #[error("vertex `{0}` is not the root of a matched hanging tree")]
    NotAMatchedRoot(String),
    #[error("malformed join: {0}")]
    MalformedJoin(String),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    ClosedForm(#[from] ClosedFormError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// How a component's inertia was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Forest,
    CycleClosedForm,
    UnicyclicTypeI,
    UnicyclicTypeII,
    BicyclicTypeI,
    BicyclicTypeII,
    OracleFallback,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Forest => "forest",
            Method::CycleClosedForm => "cycle-closed-form",
            Method::UnicyclicTypeI => "unicyclic-type-i",
            Method::UnicyclicTypeII => "unicyclic-type-ii",
            Method::BicyclicTypeI => "bicyclic-type-i",
            Method::BicyclicTypeII => "bicyclic-type-ii",
            Method::OracleFallback => "oracle-fallback",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    /// Vertex labels of the component, in graph order.
    pub vertices: Vec<String>,
    pub class: ComponentClass,
    pub method: Method,
    pub inertia: Inertia,
    /// Base descriptor (`cycle(5)`, `theta(2,3,5)`, ...) when one was evaluated.
    pub base: Option<String>,
    pub evaluation: Option<BaseEvaluation>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub inertia: Inertia,
    pub trace: ReductionTrace,
    pub components: Vec<ComponentReport>,
}

impl SolveResult {
    pub fn methods(&self) -> Vec<Method> {
        self.components.iter().map(|c| c.method).collect()
    }

    /// Base evaluations whose closed form disagreed with the oracle.
    pub fn verification_failures(&self) -> usize {
        self.components
            .iter()
            .filter_map(|c| c.evaluation.as_ref())
            .filter(|e| e.verified == Some(false))
            .count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SolveOptions {
    pub eval: EvalOptions,
}

/// Inertia of any graph: components with cyclomatic number above 2 go to
/// the oracle.
pub fn solve(g: &WeightedGraph) -> Result<SolveResult, SolveError> {
    solve_with(g, SolveOptions::default())
}

pub fn solve_with(g: &WeightedGraph, opts: SolveOptions) -> Result<SolveResult, SolveError> {
    let mut trace = ReductionTrace::default();
    let mut components = Vec::new();
    let parts = g.connected_components();
    if parts.len() > 1 {
        for part in &parts {
            trace.push(step(Rule::ComponentSplit, part.labels().to_vec(), (0, 0)));
        }
    }
    for part in parts {
        let (report, sub) = solve_component(&part, None, opts)?;
        trace.extend(sub);
        components.push(report);
    }
    let (pos, neg) = components
        .iter()
        .fold((0, 0), |(p, n), c| (p + c.inertia.pos, n + c.inertia.neg));
    Ok(SolveResult {
        inertia: Inertia::from_signs(pos, neg, g.order()),
        trace,
        components,
    })
}

/// Connected unicyclic graph.
pub fn solve_unicyclic(g: &WeightedGraph) -> Result<SolveResult, SolveError> {
    solve_connected(g, ComponentClass::Unicyclic, "unicyclic", None)
}

/// Connected bicyclic graph.
pub fn solve_bicyclic(g: &WeightedGraph) -> Result<SolveResult, SolveError> {
    solve_connected(g, ComponentClass::Bicyclic, "bicyclic", None)
}

/// Core vertices whose hanging tree is matched at the root, in graph order.
pub fn type_i_roots(g: &WeightedGraph) -> Result<Vec<String>, SolveError> {
    let core = two_core(g)?;
    Ok(hanging_trees(g, &core)?
        .into_iter()
        .filter(|t| t.matched_at_root)
        .map(|t| t.root)
        .collect())
}

/// Type I decomposition of a connected unicyclic or bicyclic graph at a
/// chosen matched root instead of the smallest one.
pub fn solve_type_i_at(g: &WeightedGraph, root: &str) -> Result<SolveResult, SolveError> {
    let class = component_class(g);
    let expected = match class {
        ComponentClass::Unicyclic => "unicyclic",
        ComponentClass::Bicyclic => "bicyclic",
        _ => {
            return Err(SolveError::WrongClass {
                expected: "unicyclic or bicyclic",
            })
        }
    };
    solve_connected(g, class, expected, Some(root))
}

fn solve_connected(
    g: &WeightedGraph,
    class: ComponentClass,
    expected: &'static str,
    root: Option<&str>,
) -> Result<SolveResult, SolveError> {
    if !g.is_connected() || component_class(g) != class {
        return Err(SolveError::WrongClass { expected });
    }
    let (report, trace) = solve_component(g, root, SolveOptions::default())?;
    Ok(SolveResult {
        inertia: report.inertia,
        trace,
        components: vec![report],
    })
}

fn component_class(g: &WeightedGraph) -> ComponentClass {
    if g.order() == 0 {
        return ComponentClass::Tree;
    }
    ComponentClass::from_counts(g.order(), g.size())
}

fn step(rule: Rule, removed: Vec<String>, offset: (usize, usize)) -> ReductionStep {
    ReductionStep {
        rule,
        removed,
        added: Vec::new(),
        offset,
    }
}

fn solve_component(
    g: &WeightedGraph,
    root: Option<&str>,
    opts: SolveOptions,
) -> Result<(ComponentReport, ReductionTrace), SolveError> {
    let class = component_class(g);
    let report = |method, inertia, base, evaluation| ComponentReport {
        vertices: g.labels().to_vec(),
        class,
        method,
        inertia,
        base,
        evaluation,
    };
    match class {
        ComponentClass::Tree => Ok((
            report(Method::Forest, forest_inertia(g)?, None, None),
            ReductionTrace::default(),
        )),
        ComponentClass::Unsupported => Ok((
            report(Method::OracleFallback, inertia_oracle(g), None, None),
            ReductionTrace::default(),
        )),
        ComponentClass::Unicyclic | ComponentClass::Bicyclic => {
            let core = two_core(g)?;
            let trees = hanging_trees(g, &core)?;
            let chosen = match root {
                Some(r) => Some(
                    trees
                        .iter()
                        .find(|t| t.root == r && t.matched_at_root)
                        .ok_or_else(|| SolveError::NotAMatchedRoot(r.to_string()))?,
                ),
                None => trees.iter().find(|t| t.matched_at_root),
            };
            match chosen {
                Some(tree) => type_i(g, tree, class, opts)
                    .map(|(inertia, method, trace)| (report(method, inertia, None, None), trace)),
                None => {
                    let (inertia, method, base, evaluation, trace) =
                        type_ii(g, &core, class, opts)?;
                    Ok((report(method, inertia, Some(base), evaluation), trace))
                }
            }
        }
    }
}

/// `In(g) = In(G{v}) + In(g - G{v})` for a root `v` matched in its tree.
fn type_i(
    g: &WeightedGraph,
    tree: &HangingTree,
    class: ComponentClass,
    opts: SolveOptions,
) -> Result<(Inertia, Method, ReductionTrace), SolveError> {
    assert!(
        !tree.is_trivial(),
        "a single-vertex hanging tree is never matched"
    );
    let tree_part = forest_inertia(&tree.tree)?;
    let mut trace = ReductionTrace::default();
    trace.push(step(
        Rule::TypeIDecompose,
        tree.tree.labels().to_vec(),
        tree_part.signs(),
    ));
    let rest = g.without_labels(tree.tree.labels())?;
    let (pos, neg, method) = if class == ComponentClass::Unicyclic {
        let r = forest_inertia(&rest)?;
        (r.pos, r.neg, Method::UnicyclicTypeI)
    } else {
        let sub = solve_with(&rest, opts)?;
        trace.extend(sub.trace);
        (sub.inertia.pos, sub.inertia.neg, Method::BicyclicTypeI)
    };
    let inertia = Inertia::from_signs(tree_part.pos + pos, tree_part.neg + neg, g.order());
    Ok((inertia, method, trace))
}

type TypeIiValue = (
    Inertia,
    Method,
    String,
    Option<BaseEvaluation>,
    ReductionTrace,
);

/// `In(g) = In(g - core) + In(core)` when every hanging root is mismatched.
fn type_ii(
    g: &WeightedGraph,
    core: &WeightedGraph,
    class: ComponentClass,
    opts: SolveOptions,
) -> Result<TypeIiValue, SolveError> {
    let forest = g.without_labels(core.labels())?;
    let forest_part = forest_inertia(&forest)?;
    let mut trace = ReductionTrace::default();
    trace.push(step(
        Rule::TypeIICut,
        forest.labels().to_vec(),
        forest_part.signs(),
    ));
    let d = describe_base(core)?;
    let (core_signs, method, evaluation) = match (class, d.kind) {
        (ComponentClass::Unicyclic, BaseKind::Cycle) => {
            let c = cycle_inertia(&d.a)?;
            let method = if forest.is_empty() {
                Method::CycleClosedForm
            } else {
                Method::UnicyclicTypeII
            };
            (c.signs(), method, None)
        }
        (ComponentClass::Bicyclic, BaseKind::Infinity | BaseKind::Theta) => {
            let e = base_inertia(&d, opts.eval)?;
            (e.signs(), Method::BicyclicTypeII, Some(e))
        }
        _ => return Err(StructureError::NotABase(d.to_string()).into()),
    };
    let inertia = Inertia::from_signs(
        forest_part.pos + core_signs.0,
        forest_part.neg + core_signs.1,
        g.order(),
    );
    Ok((inertia, method, d.to_string(), evaluation, trace))
}

/// Which additive identity applies to a tree joined to another graph at
/// one of its vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum JoinRule {
    /// `u` matched in the tree: `In = In(t) + In(rest)`.
    MatchedSplit,
    /// `u` mismatched: `In = In(t - u) + In(rest + u)`.
    MismatchedAbsorb,
}

/// The two graphs whose `(i+, i-)` add up to those of the join.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinSplit {
    pub rule: JoinRule,
    pub tree_part: WeightedGraph,
    pub rest_part: WeightedGraph,
}

/// Builds the graph obtained by joining `u` in tree `t` to the listed
/// vertices of `rest`.
pub fn join(
    t: &WeightedGraph,
    u: &str,
    rest: &WeightedGraph,
    edges: &[(String, Rational)],
) -> Result<WeightedGraph, SolveError> {
    check_join(t, u, rest, edges)?;
    let mut g = t.disjoint_union(rest)?;
    for (x, w) in edges {
        g.add_edge(u, x, w.clone())?;
    }
    Ok(g)
}

fn check_join(
    t: &WeightedGraph,
    u: &str,
    rest: &WeightedGraph,
    edges: &[(String, Rational)],
) -> Result<(), SolveError> {
    let bad = |why: String| Err(SolveError::MalformedJoin(why));
    if !t.is_tree() {
        return bad("the joined piece is not a tree".into());
    }
    if t.index_of(u).is_none() {
        return bad(format!("`{u}` is not a vertex of the tree"));
    }
    if edges.is_empty() {
        return bad("no joining edges".into());
    }
    for (x, _) in edges {
        if rest.index_of(x).is_none() {
            return bad(format!("`{x}` is not a vertex of the other graph"));
        }
    }
    if t.labels().iter().any(|l| rest.index_of(l).is_some()) {
        return bad("the two graphs share vertex labels".into());
    }
    Ok(())
}

/// Decides between the matched and mismatched joining identities and
/// returns the two pieces.
pub fn joining_decompose(
    t: &WeightedGraph,
    u: &str,
    rest: &WeightedGraph,
    edges: &[(String, Rational)],
) -> Result<JoinSplit, SolveError> {
    check_join(t, u, rest, edges)?;
    if is_mismatched(t, u)? {
        let tree_part = t.without_labels(&[u])?;
        let mut rest_part = rest.clone();
        rest_part.insert_vertex(u)?;
        for (x, w) in edges {
            rest_part.add_edge(u, x, w.clone())?;
        }
        Ok(JoinSplit {
            rule: JoinRule::MismatchedAbsorb,
            tree_part,
            rest_part,
        })
    } else {
        Ok(JoinSplit {
            rule: JoinRule::MatchedSplit,
            tree_part: t.clone(),
            rest_part: rest.clone(),
        })
    }
}
