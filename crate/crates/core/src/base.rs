//! Canonical descriptions of cycles and bicyclic bases.
//!
//! An infinity graph `inf(p, l, q)` is a cycle `u1 u2 .. up` and a cycle
//! `v1 v2 .. vq` joined by a path `u1 w2 .. w(l-1) v1` with `l - 1` edges
//! (`l = 1` identifies `u1` with `v1`). Weights: `a[i] = w(u(i+1) u(i+2))`
//! going around from `u1`, `b` likewise from `v1`, and `c` along the path
//! from `u1` to `v1`.
//!
//! A theta graph `theta(p, l, q)` is two hubs `u`, `v` joined by three
//! internally disjoint paths with `p`, `l` and `q` vertices. `a`, `b`, `c`
//! hold the weights of those paths read from `u` to `v`.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::graph::WeightedGraph;
use crate::rational::{compare_words, format_rational, Rational};
use crate::structure::StructureError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseKind {
    Cycle,
    Infinity,
    Theta,
}

/// Canonical description of a cycle or a bicyclic base, with maps from
/// descriptor positions back to vertex labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseDescriptor {
    pub kind: BaseKind,
    pub p: usize,
    pub l: usize,
    pub q: usize,
    pub a: Vec<Rational>,
    pub b: Vec<Rational>,
    pub c: Vec<Rational>,
    /// Cycle: every vertex in order. Infinity: `u1..up`. Theta: interior of the `a` path.
    pub a_vertices: Vec<String>,
    /// Infinity: `v1..vq`. Theta: interior of the `b` path.
    pub b_vertices: Vec<String>,
    /// Infinity: `w2..w(l-1)`. Theta: interior of the `c` path.
    pub c_vertices: Vec<String>,
    /// Theta: `[u, v]`. Infinity: `[u1, v1]` (equal when `l = 1`). Cycle: empty.
    pub hubs: Vec<String>,
}

impl fmt::Display for BaseDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            BaseKind::Cycle => write!(f, "cycle({})", self.p),
            BaseKind::Infinity => write!(f, "infinity({},{},{})", self.p, self.l, self.q),
            BaseKind::Theta => write!(f, "theta({},{},{})", self.p, self.l, self.q),
        }
    }
}

impl BaseDescriptor {
    /// Builds an unlabelled cycle descriptor (vertices `c0 .. c(n-1)`).
    pub fn cycle(weights: Vec<Rational>) -> Self {
        let n = weights.len();
        BaseDescriptor {
            kind: BaseKind::Cycle,
            p: n,
            l: 0,
            q: 0,
            a: weights,
            b: Vec::new(),
            c: Vec::new(),
            a_vertices: (0..n).map(|i| format!("c{i}")).collect(),
            b_vertices: Vec::new(),
            c_vertices: Vec::new(),
            hubs: Vec::new(),
        }
    }

    /// Builds an infinity descriptor with generated labels `u*`, `v*`, `w*`.
    pub fn infinity(a: Vec<Rational>, c: Vec<Rational>, b: Vec<Rational>) -> Self {
        let (p, q, l) = (a.len(), b.len(), c.len() + 1);
        let a_vertices: Vec<String> = (1..=p).map(|i| format!("u{i}")).collect();
        let mut b_vertices: Vec<String> = (1..=q).map(|i| format!("v{i}")).collect();
        if l == 1 {
            b_vertices[0] = a_vertices[0].clone();
        }
        let c_vertices = (2..l).map(|i| format!("w{i}")).collect();
        let hubs = vec![a_vertices[0].clone(), b_vertices[0].clone()];
        BaseDescriptor {
            kind: BaseKind::Infinity,
            p,
            l,
            q,
            a,
            b,
            c,
            a_vertices,
            b_vertices,
            c_vertices,
            hubs,
        }
    }

    /// Builds a theta descriptor with hubs `u`, `v` and interiors `x*`, `y*`, `z*`.
    pub fn theta(a: Vec<Rational>, b: Vec<Rational>, c: Vec<Rational>) -> Self {
        let interior = |prefix: &str, len: usize| -> Vec<String> {
            (1..len).map(|i| format!("{prefix}{i}")).collect()
        };
        BaseDescriptor {
            kind: BaseKind::Theta,
            p: a.len() + 1,
            l: b.len() + 1,
            q: c.len() + 1,
            a_vertices: interior("x", a.len()),
            b_vertices: interior("y", b.len()),
            c_vertices: interior("z", c.len()),
            a,
            b,
            c,
            hubs: vec!["u".to_string(), "v".to_string()],
        }
    }

    pub fn order(&self) -> usize {
        match self.kind {
            BaseKind::Cycle => self.p,
            BaseKind::Infinity => self.p + self.q + self.l - 2,
            BaseKind::Theta => self.p + self.l + self.q - 4,
        }
    }

    /// Rebuilds the weighted graph described, using the vertex maps.
    pub fn to_graph(&self) -> WeightedGraph {
        let mut g = WeightedGraph::new();
        let mut edge = |u: &str, v: &str, w: &Rational| {
            g.add_edge(u, v, w.clone())
                .expect("descriptor describes a simple graph");
        };
        match self.kind {
            BaseKind::Cycle => add_cycle(&mut edge, &self.a_vertices, &self.a),
            BaseKind::Infinity => {
                add_cycle(&mut edge, &self.a_vertices, &self.a);
                add_cycle(&mut edge, &self.b_vertices, &self.b);
                let mut path = vec![self.hubs[0].clone()];
                path.extend(self.c_vertices.iter().cloned());
                path.push(self.hubs[1].clone());
                if self.l > 1 {
                    add_path(&mut edge, &path, &self.c);
                }
            }
            BaseKind::Theta => {
                for (interior, weights) in [
                    (&self.a_vertices, &self.a),
                    (&self.b_vertices, &self.b),
                    (&self.c_vertices, &self.c),
                ] {
                    let mut path = vec![self.hubs[0].clone()];
                    path.extend(interior.iter().cloned());
                    path.push(self.hubs[1].clone());
                    add_path(&mut edge, &path, weights);
                }
            }
        }
        g
    }
}

fn add_cycle(
    edge: &mut impl FnMut(&str, &str, &Rational),
    vertices: &[String],
    weights: &[Rational],
) {
    let n = vertices.len();
    for i in 0..n {
        edge(&vertices[i], &vertices[(i + 1) % n], &weights[i]);
    }
}

fn add_path(
    edge: &mut impl FnMut(&str, &str, &Rational),
    vertices: &[String],
    weights: &[Rational],
) {
    for i in 0..weights.len() {
        edge(&vertices[i], &vertices[i + 1], &weights[i]);
    }
}

/// A maximal walk through degree-2 vertices: `vertices` excludes the start
/// and ends at the first vertex whose degree is not 2 (or back at start).
struct Walk {
    vertices: Vec<usize>,
    weights: Vec<Rational>,
}

impl Walk {
    fn end(&self) -> usize {
        *self.vertices.last().expect("walks are non-empty")
    }

    fn interior(&self) -> &[usize] {
        &self.vertices[..self.vertices.len() - 1]
    }

    fn reversed_from(&self, start: usize) -> Walk {
        let mut vertices: Vec<usize> = self.interior().iter().rev().copied().collect();
        vertices.push(start);
        Walk {
            vertices,
            weights: self.weights.iter().rev().cloned().collect(),
        }
    }
}

fn walk(g: &WeightedGraph, start: usize, first: usize) -> Walk {
    let mut vertices = vec![first];
    let mut weights = vec![g.weight(start, first).expect("edge").clone()];
    let (mut prev, mut cur) = (start, first);
    while cur != start && g.degree(cur) == 2 {
        let next = g
            .neighbors(cur)
            .map(|(x, _)| x)
            .find(|&x| x != prev)
            .expect("degree-2 vertex has another neighbour");
        weights.push(g.weight(cur, next).expect("edge").clone());
        vertices.push(next);
        prev = cur;
        cur = next;
    }
    Walk { vertices, weights }
}

/// Describes the 2-core of a unicyclic or bicyclic graph canonically.
pub fn describe_base(core: &WeightedGraph) -> Result<BaseDescriptor, StructureError> {
    let n = core.order();
    let m = core.size();
    let fail = |why: &str| StructureError::NotABase(why.to_string());
    if n < 3 || !core.is_connected() {
        return Err(fail("core must be connected with at least three vertices"));
    }
    if (0..n).any(|i| core.degree(i) < 2) {
        return Err(fail("core has a vertex of degree below 2"));
    }
    if m == n {
        return Ok(describe_cycle(core));
    }
    if m != n + 1 {
        return Err(fail("cyclomatic number above 2"));
    }
    let branch: Vec<usize> = (0..n).filter(|&i| core.degree(i) > 2).collect();
    match branch.as_slice() {
        [h] if core.degree(*h) == 4 => {
            let loops = cycles_at(core, *h);
            if loops.len() != 2 {
                return Err(fail("degree-4 vertex does not carry two cycles"));
            }
            Ok(canonical_infinity(
                core,
                (*h, &loops[0]),
                (*h, &loops[1]),
                None,
            ))
        }
        [x, y] if core.degree(*x) == 3 && core.degree(*y) == 3 => {
            let walks: Vec<Walk> = core.neighbors(*x).map(|(f, _)| walk(core, *x, f)).collect();
            let loops_x: Vec<&Walk> = walks.iter().filter(|w| w.end() == *x).collect();
            if loops_x.is_empty() {
                if walks.iter().any(|w| w.end() != *y) {
                    return Err(fail("theta paths do not meet at the second hub"));
                }
                return Ok(canonical_theta(core, *x, *y, &walks));
            }
            let bridge = walks
                .iter()
                .find(|w| w.end() == *y)
                .ok_or_else(|| fail("infinity cycles are not joined"))?;
            let loops_y = cycles_at(core, *y);
            if loops_y.len() != 1 || loops_x.len() != 2 {
                return Err(fail("malformed infinity graph"));
            }
            Ok(canonical_infinity(
                core,
                (*x, loops_x[0]),
                (*y, &loops_y[0]),
                Some(bridge),
            ))
        }
        _ => Err(fail("unexpected branch vertices")),
    }
}

/// Distinct cycles through `h` made of degree-2 vertices, one walk each.
fn cycles_at(core: &WeightedGraph, h: usize) -> Vec<Walk> {
    let mut seen_first = Vec::new();
    let mut out = Vec::new();
    for (f, _) in core.neighbors(h) {
        if seen_first.contains(&f) {
            continue;
        }
        let w = walk(core, h, f);
        if w.end() == h {
            seen_first.push(f);
            if let Some(&last) = w.interior().last() {
                seen_first.push(last);
            }
            out.push(w);
        }
    }
    out
}

fn describe_cycle(core: &WeightedGraph) -> BaseDescriptor {
    let start = 0;
    let firsts: Vec<usize> = core.neighbors(start).map(|(x, _)| x).collect();
    let w = walk(core, start, firsts[0]);
    let rev = w.reversed_from(start);
    let best = if compare_words(&rev.weights, &w.weights) == Ordering::Less {
        rev
    } else {
        w
    };
    let mut vertices = vec![core.label(start).to_string()];
    vertices.extend(best.interior().iter().map(|&i| core.label(i).to_string()));
    let mut d = BaseDescriptor::cycle(best.weights);
    d.a_vertices = vertices;
    d
}

/// Orients a cycle through junction `h`: returns labels `[h, ...]` and the
/// direction with the smaller weight word.
fn orient_cycle(core: &WeightedGraph, h: usize, w: &Walk) -> (Vec<String>, Vec<Rational>) {
    let rev = w.reversed_from(h);
    let best = if compare_words(&rev.weights, &w.weights) == Ordering::Less {
        &rev
    } else {
        w
    };
    let mut labels = vec![core.label(h).to_string()];
    labels.extend(best.interior().iter().map(|&i| core.label(i).to_string()));
    (labels, best.weights.clone())
}

fn canonical_infinity(
    core: &WeightedGraph,
    first: (usize, &Walk),
    second: (usize, &Walk),
    bridge: Option<&Walk>,
) -> BaseDescriptor {
    let (va, wa) = orient_cycle(core, first.0, first.1);
    let (vb, wb) = orient_cycle(core, second.0, second.1);
    let (path_fwd, c_fwd): (Vec<String>, Vec<Rational>) = match bridge {
        Some(w) => (
            w.interior()
                .iter()
                .map(|&i| core.label(i).to_string())
                .collect(),
            w.weights.clone(),
        ),
        None => (Vec::new(), Vec::new()),
    };
    let forward = build_infinity(
        va.clone(),
        wa.clone(),
        vb.clone(),
        wb.clone(),
        path_fwd.clone(),
        c_fwd.clone(),
    );
    let backward = build_infinity(
        vb,
        wb,
        va,
        wa,
        path_fwd.into_iter().rev().collect(),
        c_fwd.into_iter().rev().collect(),
    );
    let key = |d: &BaseDescriptor| (d.p, d.q);
    let cmp = key(&forward)
        .cmp(&key(&backward))
        .then_with(|| compare_words(&forward.a, &backward.a))
        .then_with(|| compare_words(&forward.c, &backward.c))
        .then_with(|| compare_words(&forward.b, &backward.b));
    if cmp == Ordering::Greater {
        backward
    } else {
        forward
    }
}

fn build_infinity(
    a_vertices: Vec<String>,
    a: Vec<Rational>,
    b_vertices: Vec<String>,
    b: Vec<Rational>,
    c_vertices: Vec<String>,
    c: Vec<Rational>,
) -> BaseDescriptor {
    let hubs = vec![a_vertices[0].clone(), b_vertices[0].clone()];
    BaseDescriptor {
        kind: BaseKind::Infinity,
        p: a.len(),
        l: c.len() + 1,
        q: b.len(),
        a,
        b,
        c,
        a_vertices,
        b_vertices,
        c_vertices,
        hubs,
    }
}

fn canonical_theta(core: &WeightedGraph, x: usize, y: usize, walks: &[Walk]) -> BaseDescriptor {
    let labelled = |w: &Walk| -> (Vec<String>, Vec<Rational>) {
        (
            w.interior()
                .iter()
                .map(|&i| core.label(i).to_string())
                .collect(),
            w.weights.clone(),
        )
    };
    let from_x: Vec<_> = walks.iter().map(labelled).collect();
    let from_y: Vec<_> = walks
        .iter()
        .map(|w| labelled(&w.reversed_from(x)))
        .collect();
    let sort = |mut paths: Vec<(Vec<String>, Vec<Rational>)>| {
        paths.sort_by(|a, b| {
            a.1.len()
                .cmp(&b.1.len())
                .then_with(|| compare_words(&a.1, &b.1))
        });
        paths
    };
    let (px, py) = (sort(from_x), sort(from_y));
    let cmp = px
        .iter()
        .zip(&py)
        .map(|(a, b)| {
            a.1.len()
                .cmp(&b.1.len())
                .then_with(|| compare_words(&a.1, &b.1))
        })
        .find(|o| *o != Ordering::Equal)
        .unwrap_or(Ordering::Equal);
    let (paths, hubs) = if cmp == Ordering::Greater {
        (
            py,
            vec![core.label(y).to_string(), core.label(x).to_string()],
        )
    } else {
        (
            px,
            vec![core.label(x).to_string(), core.label(y).to_string()],
        )
    };
    let mut it = paths.into_iter();
    let (av, a) = it.next().expect("three paths");
    let (bv, b) = it.next().expect("three paths");
    let (cv, c) = it.next().expect("three paths");
    BaseDescriptor {
        kind: BaseKind::Theta,
        p: a.len() + 1,
        l: b.len() + 1,
        q: c.len() + 1,
        a,
        b,
        c,
        a_vertices: av,
        b_vertices: bv,
        c_vertices: cv,
        hubs,
    }
}

/// Renders weight words for diagnostics: `a=[..] b=[..] c=[..]`.
pub fn describe_weights(d: &BaseDescriptor) -> String {
    let word = |w: &[Rational]| w.iter().map(format_rational).collect::<Vec<_>>().join(",");
    format!("a=[{}] b=[{}] c=[{}]", word(&d.a), word(&d.b), word(&d.c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use crate::structure::two_core;

    fn edge_set(g: &WeightedGraph) -> Vec<(String, String, Rational)> {
        let mut out: Vec<_> = g
            .edges()
            .map(|(i, j, w)| {
                let (a, b) = (g.label(i).to_string(), g.label(j).to_string());
                if a < b {
                    (a, b, w.clone())
                } else {
                    (b, a, w.clone())
                }
            })
            .collect();
        out.sort();
        out
    }

    fn ints(ws: &[i64]) -> Vec<Rational> {
        ws.iter().map(|&w| int(w)).collect()
    }

    #[test]
    fn cycle_descriptor() {
        let g = BaseDescriptor::cycle(ints(&[4, 1, 2, 3, 5, 6])).to_graph();
        let d = describe_base(&g).unwrap();
        assert_eq!(d.kind, BaseKind::Cycle);
        assert_eq!(d.p, 6);
        assert_eq!(d.to_graph(), g.clone());
        assert_eq!(d.to_string(), "cycle(6)");
    }

    #[test]
    fn bowtie_is_infinity_3_1_3() {
        let mut g = WeightedGraph::new();
        for (u, v) in [
            ("h", "a"),
            ("a", "b"),
            ("b", "h"),
            ("h", "c"),
            ("c", "d"),
            ("d", "h"),
        ] {
            g.add_edge(u, v, int(1)).unwrap();
        }
        let d = describe_base(&g).unwrap();
        assert_eq!((d.kind, d.p, d.l, d.q), (BaseKind::Infinity, 3, 1, 3));
        assert!(d.c.is_empty());
        assert_eq!(d.hubs, ["h", "h"]);
    }

    #[test]
    fn theta_path_lengths() {
        let d = BaseDescriptor::theta(ints(&[1, 2, 3, 4]), ints(&[5]), ints(&[6, 7]));
        let g = d.to_graph();
        let got = describe_base(&g).unwrap();
        assert_eq!((got.kind, got.p, got.l, got.q), (BaseKind::Theta, 2, 3, 5));
        assert_eq!(got.to_string(), "theta(2,3,5)");
        assert_eq!(edge_set(&got.to_graph()), edge_set(&g));
    }

    #[test]
    fn infinity_orientation_puts_smaller_cycle_first() {
        let d = BaseDescriptor::infinity(ints(&[1, 2, 3, 4, 5]), ints(&[7, 8]), ints(&[9, 10, 11]));
        let got = describe_base(&d.to_graph()).unwrap();
        assert_eq!((got.p, got.l, got.q), (3, 3, 5));
        assert_eq!(got.c, ints(&[8, 7]));
        assert_eq!(got.a, ints(&[9, 10, 11]));
        assert_eq!(got.b, ints(&[1, 2, 3, 4, 5]));
    }

    #[test]
    fn pendant_tree_does_not_change_base() {
        let d = BaseDescriptor::infinity(ints(&[1, 1, 1]), ints(&[2]), ints(&[1, 1, 1]));
        let mut g = d.to_graph();
        g.add_edge("u2", "t1", int(1)).unwrap();
        g.add_edge("t1", "t2", int(1)).unwrap();
        let core = two_core(&g).unwrap();
        assert_eq!(core, d.to_graph());
        assert_eq!(describe_base(&core).unwrap().to_string(), "infinity(3,2,3)");
    }

    #[test]
    fn rejects_non_bases() {
        let mut k4 = WeightedGraph::new();
        for (u, v) in [
            ("a", "b"),
            ("a", "c"),
            ("a", "d"),
            ("b", "c"),
            ("b", "d"),
            ("c", "d"),
        ] {
            k4.add_edge(u, v, int(1)).unwrap();
        }
        assert!(describe_base(&k4).is_err());
        let mut p = WeightedGraph::new();
        p.add_edge("a", "b", int(1)).unwrap();
        assert!(describe_base(&p).is_err());
    }
}
