//! Weighted simple graphs with exact positive rational edge weights.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matrix::SymRationalMatrix;
use crate::rational::{format_rational, is_positive, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge `{0}`-`{1}`")]
    DuplicateEdge(String, String),
    #[error("non-positive weight {weight} on edge `{u}`-`{v}`")]
    NonPositiveWeight {
        u: String,
        v: String,
        weight: String,
    },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
}

/// A simple undirected graph whose edges carry strictly positive rationals.
///
/// Vertices are string labels mapped to dense indices in insertion order;
/// that order is the row order of [`WeightedGraph::adjacency_matrix`].
#[derive(Clone, Default, PartialEq, Eq)]
pub struct WeightedGraph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<BTreeMap<usize, Rational>>,
}

impl fmt::Debug for WeightedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .map(|(u, v, w)| {
                format!(
                    "{}-{}:{}",
                    self.labels[u],
                    self.labels[v],
                    format_rational(w)
                )
            })
            .collect();
        f.debug_struct("WeightedGraph")
            .field("vertices", &self.labels)
            .field("edges", &edges)
            .finish()
    }
}

impl WeightedGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from labels and weighted label pairs.
    pub fn from_edges<L, I>(vertices: &[L], edges: I) -> Result<Self, GraphError>
    where
        L: AsRef<str>,
        I: IntoIterator<Item = (String, String, Rational)>,
    {
        let mut g = Self::new();
        for v in vertices {
            g.insert_vertex(v.as_ref())?;
        }
        for (u, v, w) in edges {
            g.add_edge(&u, &v, w)?;
        }
        Ok(g)
    }

    /// Adds a fresh vertex; fails if the label already exists.
    pub fn insert_vertex(&mut self, label: &str) -> Result<usize, GraphError> {
        if self.index.contains_key(label) {
            return Err(GraphError::DuplicateVertex(label.to_string()));
        }
        Ok(self.ensure_vertex(label))
    }

    /// Returns the index of `label`, appending it if absent.
    pub fn ensure_vertex(&mut self, label: &str) -> usize {
        if let Some(&i) = self.index.get(label) {
            return i;
        }
        let i = self.labels.len();
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), i);
        self.adj.push(BTreeMap::new());
        i
    }

    /// Adds an edge between two labels, creating missing vertices.
    pub fn add_edge(&mut self, u: &str, v: &str, weight: Rational) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u.to_string()));
        }
        if !is_positive(&weight) {
            return Err(GraphError::NonPositiveWeight {
                u: u.to_string(),
                v: v.to_string(),
                weight: format_rational(&weight),
            });
        }
        if let (Some(&i), Some(&j)) = (self.index.get(u), self.index.get(v)) {
            if self.adj[i].contains_key(&j) {
                return Err(GraphError::DuplicateEdge(u.to_string(), v.to_string()));
            }
        }
        let i = self.ensure_vertex(u);
        let j = self.ensure_vertex(v);
        self.adj[i].insert(j, weight.clone());
        self.adj[j].insert(i, weight);
        Ok(())
    }

    /// Adds an edge between existing vertex indices.
    pub fn add_edge_idx(&mut self, i: usize, j: usize, weight: Rational) -> Result<(), GraphError> {
        let n = self.order();
        if i >= n || j >= n {
            return Err(GraphError::UnknownVertex(format!("#{}", i.max(j))));
        }
        let (u, v) = (self.labels[i].clone(), self.labels[j].clone());
        self.add_edge(&u, &v, weight)
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(BTreeMap::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = (usize, &Rational)> + '_ {
        self.adj[i].iter().map(|(&j, w)| (j, w))
    }

    pub fn weight(&self, i: usize, j: usize) -> Option<&Rational> {
        self.adj.get(i).and_then(|m| m.get(&j))
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.weight(i, j).is_some()
    }

    /// Edges as `(i, j, w)` with `i < j`, ordered by `(i, j)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(i, m)| m.range(i + 1..).map(move |(&j, w)| (i, j, w)))
    }

    /// The weighted subgraph induced by the vertices with `keep[i] == true`,
    /// in the original relative order.
    pub fn induced(&self, keep: &[bool]) -> WeightedGraph {
        let mut g = WeightedGraph::new();
        for (i, label) in self.labels.iter().enumerate() {
            if keep[i] {
                g.ensure_vertex(label);
            }
        }
        for (i, j, w) in self.edges() {
            if keep[i] && keep[j] {
                let (a, b) = (g.index[&self.labels[i]], g.index[&self.labels[j]]);
                g.adj[a].insert(b, w.clone());
                g.adj[b].insert(a, w.clone());
            }
        }
        g
    }

    /// `G - S` for a set of vertex indices.
    pub fn without(&self, removed: &[usize]) -> WeightedGraph {
        let mut keep = vec![true; self.order()];
        for &i in removed {
            keep[i] = false;
        }
        self.induced(&keep)
    }

    /// Removes vertices by label; unknown labels are an error.
    pub fn without_labels<S: AsRef<str>>(
        &self,
        removed: &[S],
    ) -> Result<WeightedGraph, GraphError> {
        let idx = removed
            .iter()
            .map(|l| {
                self.index_of(l.as_ref())
                    .ok_or_else(|| GraphError::UnknownVertex(l.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.without(&idx))
    }

    /// Disjoint union; labels must not collide.
    pub fn disjoint_union(&self, other: &WeightedGraph) -> Result<WeightedGraph, GraphError> {
        let mut g = self.clone();
        for label in &other.labels {
            g.insert_vertex(label)?;
        }
        for (i, j, w) in other.edges() {
            g.add_edge(&other.labels[i], &other.labels[j], w.clone())?;
        }
        Ok(g)
    }

    /// Weighted adjacency matrix in vertex order.
    pub fn adjacency_matrix(&self) -> SymRationalMatrix {
        let mut m = SymRationalMatrix::zeros(self.order());
        for (i, j, w) in self.edges() {
            m.set_sym(i, j, w.clone());
        }
        m
    }

    /// Vertex index sets of the connected components, each sorted, ordered
    /// by smallest member.
    pub fn component_indices(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for (y, _) in self.neighbors(x) {
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Connected components as induced weighted subgraphs.
    pub fn connected_components(&self) -> Vec<WeightedGraph> {
        self.component_indices()
            .into_iter()
            .map(|members| {
                let mut keep = vec![false; self.order()];
                for i in members {
                    keep[i] = true;
                }
                self.induced(&keep)
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_indices().len() <= 1
    }

    pub fn is_acyclic(&self) -> bool {
        self.size() + self.component_indices().len() == self.order()
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.is_connected() && self.size() + 1 == self.order()
    }

    pub fn classify(&self) -> GraphClass {
        GraphClass::of(self)
    }
}

/// The inertia triple `(i+, i-, i0)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Inertia {
    pub pos: usize,
    pub neg: usize,
    pub zero: usize,
}

impl Inertia {
    pub const fn new(pos: usize, neg: usize, zero: usize) -> Self {
        Self { pos, neg, zero }
    }

    /// Completes `(pos, neg)` to a triple on `order` vertices.
    ///
    /// Panics if `pos + neg > order`.
    pub fn from_signs(pos: usize, neg: usize, order: usize) -> Self {
        assert!(
            pos + neg <= order,
            "inertia ({pos},{neg}) exceeds order {order}"
        );
        Self {
            pos,
            neg,
            zero: order - pos - neg,
        }
    }

    pub fn order(&self) -> usize {
        self.pos + self.neg + self.zero
    }

    pub fn signs(&self) -> (usize, usize) {
        (self.pos, self.neg)
    }
}

impl Add for Inertia {
    type Output = Inertia;

    fn add(self, rhs: Inertia) -> Inertia {
        Inertia::new(self.pos + rhs.pos, self.neg + rhs.neg, self.zero + rhs.zero)
    }
}

impl std::iter::Sum for Inertia {
    fn sum<I: Iterator<Item = Inertia>>(iter: I) -> Inertia {
        iter.fold(Inertia::default(), Add::add)
    }
}

impl fmt::Display for Inertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "i+={} i-={} i0={}", self.pos, self.neg, self.zero)
    }
}

/// Class of a single connected component by its cyclomatic number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentClass {
    Tree,
    Unicyclic,
    Bicyclic,
    Unsupported,
}

impl ComponentClass {
    /// Classifies a connected component with `n` vertices and `m` edges.
    pub fn from_counts(n: usize, m: usize) -> Self {
        match m as i64 - n as i64 {
            -1 => ComponentClass::Tree,
            0 => ComponentClass::Unicyclic,
            1 => ComponentClass::Bicyclic,
            _ => ComponentClass::Unsupported,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphKind {
    EmptyEdgeSetForest,
    Tree,
    Forest,
    Unicyclic,
    Bicyclic,
    UnicyclicForestMix,
    BicyclicMix,
    Unsupported,
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GraphKind::EmptyEdgeSetForest => "empty-edge-set-forest",
            GraphKind::Tree => "tree",
            GraphKind::Forest => "forest",
            GraphKind::Unicyclic => "unicyclic",
            GraphKind::Bicyclic => "bicyclic",
            GraphKind::UnicyclicForestMix => "unicyclic-forest-mix",
            GraphKind::BicyclicMix => "bicyclic-mix",
            GraphKind::Unsupported => "unsupported",
        };
        f.write_str(s)
    }
}

/// Whole-graph class plus the class of each component (in component order).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphClass {
    pub kind: GraphKind,
    pub components: Vec<ComponentClass>,
}

impl GraphClass {
    pub fn of(g: &WeightedGraph) -> GraphClass {
        let components: Vec<ComponentClass> = g
            .component_indices()
            .iter()
            .map(|members| {
                let m: usize = members.iter().map(|&i| g.degree(i)).sum::<usize>() / 2;
                ComponentClass::from_counts(members.len(), m)
            })
            .collect();
        let has = |c: ComponentClass| components.contains(&c);
        let kind = if has(ComponentClass::Unsupported) {
            GraphKind::Unsupported
        } else if g.size() == 0 && g.order() != 1 {
            GraphKind::EmptyEdgeSetForest
        } else if components.len() == 1 {
            match components[0] {
                ComponentClass::Tree => GraphKind::Tree,
                ComponentClass::Unicyclic => GraphKind::Unicyclic,
                ComponentClass::Bicyclic => GraphKind::Bicyclic,
                ComponentClass::Unsupported => unreachable!(),
            }
        } else if has(ComponentClass::Bicyclic) {
            GraphKind::BicyclicMix
        } else if has(ComponentClass::Unicyclic) {
            GraphKind::UnicyclicForestMix
        } else {
            GraphKind::Forest
        };
        GraphClass { kind, components }
    }

    pub fn is_acyclic(&self) -> bool {
        matches!(
            self.kind,
            GraphKind::EmptyEdgeSetForest | GraphKind::Tree | GraphKind::Forest
        )
    }
}
