//! Matchings on forests, matched/mismatched vertices, 2-core extraction and
//! hanging-tree decomposition.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::WeightedGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("graph contains a cycle")]
    NotAcyclic,
    #[error("graph is not a tree")]
    NotATree,
    #[error("vertex `{0}` is not in the graph")]
    MissingVertex(String),
    #[error("graph has an empty 2-core")]
    EmptyCore,
    #[error("2-core is neither a cycle, an infinity graph nor a theta graph: {0}")]
    NotABase(String),
}

/// Matching number of a forest by leaf-first greedy: a leaf edge always
/// belongs to some maximum matching, so take it and delete both ends.
pub fn max_matching_forest(g: &WeightedGraph) -> Result<usize, StructureError> {
    if !g.is_acyclic() {
        return Err(StructureError::NotAcyclic);
    }
    Ok(greedy_forest_matching(g, None))
}

/// Leaf-first greedy on `g` with `skip` treated as deleted.
fn greedy_forest_matching(g: &WeightedGraph, skip: Option<usize>) -> usize {
    let n = g.order();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|i| g.degree(i)).collect();
    if let Some(s) = skip {
        alive[s] = false;
        for (u, _) in g.neighbors(s) {
            degree[u] -= 1;
        }
    }
    let mut leaves: VecDeque<usize> = (0..n).filter(|&i| alive[i] && degree[i] == 1).collect();
    let mut matched = 0;
    while let Some(v) = leaves.pop_front() {
        if !alive[v] || degree[v] != 1 {
            continue;
        }
        let u = g
            .neighbors(v)
            .map(|(u, _)| u)
            .find(|&u| alive[u])
            .expect("leaf has one live neighbour");
        matched += 1;
        alive[v] = false;
        alive[u] = false;
        for (x, _) in g.neighbors(u) {
            if alive[x] {
                degree[x] -= 1;
                if degree[x] == 1 {
                    leaves.push_back(x);
                }
            }
        }
    }
    matched
}

/// True iff `v` is missed by some maximum matching of the tree `t`, i.e.
/// `q(t - v) = q(t)`. A single-vertex tree's vertex is mismatched.
pub fn is_mismatched(t: &WeightedGraph, v: &str) -> Result<bool, StructureError> {
    let i = t
        .index_of(v)
        .ok_or_else(|| StructureError::MissingVertex(v.to_string()))?;
    if !t.is_tree() {
        return Err(StructureError::NotATree);
    }
    Ok(mismatched_idx(t, i))
}

pub(crate) fn mismatched_idx(t: &WeightedGraph, i: usize) -> bool {
    greedy_forest_matching(t, Some(i)) == greedy_forest_matching(t, None)
}

/// Vertex indices of the 2-core: repeatedly strip vertices of degree <= 1.
pub fn two_core_indices(g: &WeightedGraph) -> Vec<usize> {
    let n = g.order();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|i| g.degree(i)).collect();
    let mut queue: VecDeque<usize> = (0..n).filter(|&i| degree[i] <= 1).collect();
    while let Some(v) = queue.pop_front() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for (u, _) in g.neighbors(v) {
            if alive[u] {
                degree[u] -= 1;
                if degree[u] == 1 {
                    queue.push_back(u);
                }
            }
        }
    }
    (0..n).filter(|&i| alive[i]).collect()
}

/// The 2-core as an induced weighted subgraph: the unique cycle of a
/// unicyclic graph or the base of a bicyclic one.
pub fn two_core(g: &WeightedGraph) -> Result<WeightedGraph, StructureError> {
    let core = two_core_indices(g);
    if core.is_empty() {
        return Err(StructureError::EmptyCore);
    }
    let mut keep = vec![false; g.order()];
    for i in core {
        keep[i] = true;
    }
    Ok(g.induced(&keep))
}

/// The maximal tree hanging from a core vertex, identified at `root`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HangingTree {
    pub root: String,
    pub tree: WeightedGraph,
    pub matched_at_root: bool,
}

impl HangingTree {
    pub fn is_trivial(&self) -> bool {
        self.tree.order() == 1
    }
}

/// One hanging tree per core vertex, in the vertex order of `g`.
pub fn hanging_trees(
    g: &WeightedGraph,
    core: &WeightedGraph,
) -> Result<Vec<HangingTree>, StructureError> {
    let n = g.order();
    let mut in_core = vec![false; n];
    for label in core.labels() {
        let i = g
            .index_of(label)
            .ok_or_else(|| StructureError::MissingVertex(label.clone()))?;
        in_core[i] = true;
    }
    let mut out = Vec::new();
    for root in (0..n).filter(|&i| in_core[i]) {
        let mut keep = vec![false; n];
        keep[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for (y, _) in g.neighbors(x) {
                if !keep[y] && !in_core[y] {
                    keep[y] = true;
                    queue.push_back(y);
                }
            }
        }
        let tree = g.induced(&keep);
        if !tree.is_tree() {
            return Err(StructureError::NotATree);
        }
        let root_label = g.label(root).to_string();
        let r = tree.index_of(&root_label).expect("root kept");
        let matched_at_root = !mismatched_idx(&tree, r);
        out.push(HangingTree {
            root: root_label,
            tree,
            matched_at_root,
        });
    }
    Ok(out)
}
