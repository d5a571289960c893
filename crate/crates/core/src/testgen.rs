//! Seeded generators for weighted trees, forests, unicyclic and bicyclic
//! graphs, with weight samplers that land on a chosen condition branch.
//!
//! Random weights are `k/d` with `k` in `1..=20` and `d` in `1..=10`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::base::{BaseDescriptor, BaseKind};
use crate::closed_forms::{branch_condition, Branch, BranchFamily, Relation};
use crate::graph::WeightedGraph;
use crate::rational::{int, ratio, Rational};
use crate::reduction::contracted_weight;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GenClass {
    Tree,
    Forest,
    Unicyclic,
    Bicyclic,
}

impl GenClass {
    pub fn min_order(self) -> usize {
        match self {
            GenClass::Tree | GenClass::Forest => 1,
            GenClass::Unicyclic => 3,
            GenClass::Bicyclic => 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightRegime {
    RandomRational,
    /// Random weights except one, solved for so the base lands on the branch.
    ForceEqualityBranch(Branch),
    UnitWeights,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub class: GenClass,
    pub n: usize,
    pub seed: u64,
    pub weight_regime: WeightRegime,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("a {class:?} graph needs at least {min} vertices, got {n}")]
    TooSmall {
        class: GenClass,
        n: usize,
        min: usize,
    },
    #[error("branch {branch} cannot be forced in a {class:?} graph")]
    BranchClassMismatch { branch: String, class: GenClass },
    #[error("infeasible spec: {0}")]
    Infeasible(String),
}

/// Builds the graph described by `spec`; the same spec always yields the
/// same graph.
pub fn generate(spec: GenSpec) -> Result<WeightedGraph, GenError> {
    let min = spec.class.min_order();
    if spec.n < min {
        return Err(GenError::TooSmall {
            class: spec.class,
            n: spec.n,
            min,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut w = WeightSampler {
        regime: spec.weight_regime,
    };
    let g = match (spec.class, spec.weight_regime) {
        (GenClass::Tree | GenClass::Forest, WeightRegime::ForceEqualityBranch(b)) => {
            return Err(mismatch(b, spec.class))
        }
        (GenClass::Tree, _) => random_tree(&mut rng, spec.n, &mut w),
        (GenClass::Forest, _) => random_forest(&mut rng, spec.n, &mut w),
        (GenClass::Unicyclic, WeightRegime::ForceEqualityBranch(b)) => {
            let BranchFamily::Cycle { .. } = b.family else {
                return Err(mismatch(b, spec.class));
            };
            forced_unicyclic(&mut rng, spec.n, b)?
        }
        (GenClass::Unicyclic, _) => random_unicyclic(&mut rng, spec.n, &mut w),
        (GenClass::Bicyclic, WeightRegime::ForceEqualityBranch(b)) => {
            if matches!(b.family, BranchFamily::Cycle { .. }) {
                return Err(mismatch(b, spec.class));
            }
            forced_bicyclic(&mut rng, spec.n, b)?
        }
        (GenClass::Bicyclic, _) => random_bicyclic(&mut rng, spec.n, &mut w),
    };
    Ok(relabel(&g, &mut rng))
}

fn mismatch(b: Branch, class: GenClass) -> GenError {
    GenError::BranchClassMismatch {
        branch: b.to_string(),
        class,
    }
}

/// A random weight `k/d`.
pub fn random_weight<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    ratio(rng.gen_range(1..=20), rng.gen_range(1..=10))
}

struct WeightSampler {
    regime: WeightRegime,
}

impl WeightSampler {
    fn next<R: Rng + ?Sized>(&mut self, rng: &mut R) -> Rational {
        match self.regime {
            WeightRegime::UnitWeights => int(1),
            _ => random_weight(rng),
        }
    }

    fn many<R: Rng + ?Sized>(&mut self, rng: &mut R, k: usize) -> Vec<Rational> {
        (0..k).map(|_| self.next(rng)).collect()
    }
}

/// Uniform attachment: vertex `i` hangs from a uniformly chosen earlier vertex.
fn random_tree<R: Rng + ?Sized>(rng: &mut R, n: usize, w: &mut WeightSampler) -> WeightedGraph {
    let mut g = WeightedGraph::new();
    g.ensure_vertex("t0");
    for i in 1..n {
        let j = rng.gen_range(0..i);
        g.add_edge(&format!("t{j}"), &format!("t{i}"), w.next(rng))
            .expect("fresh edge");
    }
    g
}

fn random_forest<R: Rng + ?Sized>(rng: &mut R, n: usize, w: &mut WeightSampler) -> WeightedGraph {
    let mut g = WeightedGraph::new();
    let mut left = n;
    let mut k = 0;
    while left > 0 {
        let size = rng.gen_range(1..=left);
        let t = random_tree(rng, size, w);
        let renamed = prefix(&t, &format!("f{k}_"));
        g = g.disjoint_union(&renamed).expect("distinct prefixes");
        left -= size;
        k += 1;
    }
    g
}

fn prefix(g: &WeightedGraph, p: &str) -> WeightedGraph {
    let labels: Vec<String> = g.labels().iter().map(|l| format!("{p}{l}")).collect();
    let edges = g
        .edges()
        .map(|(i, j, w)| (labels[i].clone(), labels[j].clone(), w.clone()));
    WeightedGraph::from_edges(&labels, edges).expect("relabelling keeps the graph simple")
}

/// Renames vertices to `0..n` in a random order.
fn relabel<R: Rng + ?Sized>(g: &WeightedGraph, rng: &mut R) -> WeightedGraph {
    let mut ids: Vec<usize> = (0..g.order()).collect();
    ids.shuffle(rng);
    let labels: Vec<String> = ids.iter().map(|i| i.to_string()).collect();
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&i| ids[i]);
    let sorted: Vec<String> = order.iter().map(|&i| labels[i].clone()).collect();
    let edges = g
        .edges()
        .map(|(i, j, w)| (labels[i].clone(), labels[j].clone(), w.clone()));
    WeightedGraph::from_edges(&sorted, edges).expect("relabelling keeps the graph simple")
}

/// Grows `extra` vertices onto `g`, each attached to a uniformly chosen
/// existing vertex.
fn attach_uniform<R: Rng + ?Sized>(
    rng: &mut R,
    g: &mut WeightedGraph,
    extra: usize,
    w: &mut WeightSampler,
) {
    for k in 0..extra {
        let j = rng.gen_range(0..g.order());
        let host = g.label(j).to_string();
        g.add_edge(&host, &format!("h{k}"), w.next(rng))
            .expect("fresh edge");
    }
}

/// Hangs trees of `extra` vertices in total from the vertices of `g` so that
/// every hanging tree leaves its root mismatched. Needs `extra != 1`.
///
/// Each piece is either a path `r x y`, a star `r c l1 .. lj` with `j >= 2`,
/// or a tree with a perfect matching (a corona) joined to `r` at any vertex.
fn attach_mismatched<R: Rng + ?Sized>(
    rng: &mut R,
    g: &mut WeightedGraph,
    extra: usize,
    w: &mut WeightSampler,
) {
    assert_ne!(extra, 1, "a single extra vertex always matches its root");
    let roots: Vec<String> = g.labels().to_vec();
    let mut left = extra;
    let mut next_id = 0usize;
    let mut fresh = || {
        next_id += 1;
        format!("m{next_id}")
    };
    while left > 0 {
        let size = if left <= 3 {
            left
        } else {
            let s = rng.gen_range(2..=left);
            if s == left - 1 {
                left
            } else {
                s
            }
        };
        let root = roots.choose(rng).expect("non-empty graph").clone();
        if size % 2 == 0 && rng.gen_bool(0.7) {
            let base = random_tree(rng, size / 2, w);
            let names: Vec<String> = (0..size / 2).map(|_| fresh()).collect();
            for (i, j, wt) in base.edges() {
                g.add_edge(&names[i], &names[j], wt.clone())
                    .expect("fresh edge");
            }
            let mut corona = names.clone();
            for name in &names {
                let leaf = fresh();
                g.add_edge(name, &leaf, w.next(rng)).expect("fresh edge");
                corona.push(leaf);
            }
            let at = corona.choose(rng).expect("non-empty corona");
            g.add_edge(&root, at, w.next(rng)).expect("fresh edge");
        } else if size == 2 {
            let (x, y) = (fresh(), fresh());
            g.add_edge(&root, &x, w.next(rng)).expect("fresh edge");
            g.add_edge(&x, &y, w.next(rng)).expect("fresh edge");
        } else {
            let c = fresh();
            g.add_edge(&root, &c, w.next(rng)).expect("fresh edge");
            for _ in 1..size {
                let leaf = fresh();
                g.add_edge(&c, &leaf, w.next(rng)).expect("fresh edge");
            }
        }
        left -= size;
    }
}

/// Attaches the remaining vertices either uniformly or as mismatched pieces.
fn attach_rest<R: Rng + ?Sized>(
    rng: &mut R,
    g: &mut WeightedGraph,
    extra: usize,
    w: &mut WeightSampler,
) {
    if extra != 1 && rng.gen_bool(0.5) {
        attach_mismatched(rng, g, extra, w);
    } else {
        attach_uniform(rng, g, extra, w);
    }
}

fn cycle_graph(weights: &[Rational]) -> WeightedGraph {
    BaseDescriptor::cycle(weights.to_vec()).to_graph()
}

fn random_unicyclic<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    w: &mut WeightSampler,
) -> WeightedGraph {
    let len = rng.gen_range(3..=n);
    let mut g = cycle_graph(&w.many(rng, len));
    attach_rest(rng, &mut g, n - len, w);
    g
}

fn forced_unicyclic<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    branch: Branch,
) -> Result<WeightedGraph, GenError> {
    let BranchFamily::Cycle { n: shape } = branch.family else {
        unreachable!("checked by the caller")
    };
    let lengths: Vec<usize> = if shape == 4 {
        vec![4]
    } else {
        (8..=n).step_by(4).collect()
    };
    let lengths: Vec<usize> = lengths
        .into_iter()
        .filter(|&l| l <= n && n - l != 1)
        .collect();
    let len = *lengths
        .choose(rng)
        .ok_or_else(|| GenError::Infeasible(format!("no cycle for {branch} fits {n} vertices")))?;
    let mut weights: Vec<Rational> = (0..len).map(|_| random_weight(rng)).collect();
    force_slot(&mut weights, 0, branch.relation, |ws| {
        branch_condition(branch.family, ws, &[], &[]).relation_ratio()
    });
    let mut g = cycle_graph(&weights);
    attach_mismatched(
        rng,
        &mut g,
        n - len,
        &mut WeightSampler {
            regime: WeightRegime::RandomRational,
        },
    );
    Ok(g)
}

/// Shape of a bicyclic base in role order (see [`BaseDescriptor`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseShape {
    Infinity { p: usize, l: usize, q: usize },
    Theta { p: usize, l: usize, q: usize },
}

impl BaseShape {
    pub fn order(self) -> usize {
        match self {
            BaseShape::Infinity { p, l, q } => p + l + q - 2,
            BaseShape::Theta { p, l, q } => p + l + q - 4,
        }
    }

    /// Builds the base with weights drawn by `next`.
    pub fn build(self, mut next: impl FnMut() -> Rational) -> BaseDescriptor {
        let mut many = |k: usize| (0..k).map(|_| next()).collect::<Vec<_>>();
        match self {
            BaseShape::Infinity { p, l, q } => {
                let (a, c, b) = (many(p), many(l - 1), many(q));
                BaseDescriptor::infinity(a, c, b)
            }
            BaseShape::Theta { p, l, q } => {
                let (a, b, c) = (many(p - 1), many(l - 1), many(q - 1));
                BaseDescriptor::theta(a, b, c)
            }
        }
    }
}

/// A uniformly chosen base shape with at most `max_order` vertices.
pub fn random_shape<R: Rng + ?Sized>(rng: &mut R, max_order: usize) -> Option<BaseShape> {
    if max_order < 4 {
        return None;
    }
    for _ in 0..1000 {
        let shape = if rng.gen_bool(0.5) && max_order >= 5 {
            BaseShape::Infinity {
                p: rng.gen_range(3..=max_order),
                l: rng.gen_range(1..=max_order),
                q: rng.gen_range(3..=max_order),
            }
        } else {
            let mut lens = [
                rng.gen_range(2..=max_order),
                rng.gen_range(3..=max_order),
                rng.gen_range(3..=max_order),
            ];
            lens.sort_unstable();
            BaseShape::Theta {
                p: lens[0],
                l: lens[1],
                q: lens[2],
            }
        };
        if shape.order() <= max_order {
            return Some(shape);
        }
    }
    Some(BaseShape::Theta { p: 2, l: 3, q: 3 })
}

fn random_bicyclic<R: Rng + ?Sized>(rng: &mut R, n: usize, w: &mut WeightSampler) -> WeightedGraph {
    let budget = rng.gen_range(4..=n);
    let shape = random_shape(rng, budget).expect("n >= 4");
    let mut g = shape.build(|| w.next(rng)).to_graph();
    attach_rest(rng, &mut g, n - shape.order(), w);
    g
}

/// The representative shape of a branch family; free parameters are drawn
/// from `rng`.
fn family_shape<R: Rng + ?Sized>(rng: &mut R, family: BranchFamily) -> BaseShape {
    match family {
        BranchFamily::Cycle { .. } => unreachable!("cycles are not bicyclic bases"),
        BranchFamily::Table1 { p, l, q } => BaseShape::Infinity { p, l, q },
        BranchFamily::C4Join => BaseShape::Infinity {
            p: 4,
            l: rng.gen_range(1..=5),
            q: *[3, 5, 6].choose(rng).expect("non-empty"),
        },
        BranchFamily::Theta33 => BaseShape::Theta {
            p: 3,
            l: 3,
            q: *[2, 4, 5, 6].choose(rng).expect("non-empty"),
        },
        BranchFamily::Theta55 => BaseShape::Theta {
            p: 5,
            l: 5,
            q: *[2, 3, 4, 6].choose(rng).expect("non-empty"),
        },
        BranchFamily::Theta24 { q } => BaseShape::Theta { p: 2, l: 4, q },
    }
}

fn rebuild(
    d: &BaseDescriptor,
    a: Vec<Rational>,
    b: Vec<Rational>,
    c: Vec<Rational>,
) -> BaseDescriptor {
    match d.kind {
        BaseKind::Cycle => BaseDescriptor::cycle(a),
        BaseKind::Infinity => BaseDescriptor::infinity(a, c, b),
        BaseKind::Theta => BaseDescriptor::theta(a, b, c),
    }
}

/// A representative base whose weights satisfy `branch`.
///
/// All weights are random except `a1`, which every condition contains to the
/// power `+1` or `-1`: it is solved for equality, then doubled or halved to
/// land on a strict side.
pub fn forced_representative<R: Rng + ?Sized>(rng: &mut R, branch: Branch) -> BaseDescriptor {
    if let BranchFamily::Cycle { n } = branch.family {
        let mut weights: Vec<Rational> = (0..n).map(|_| random_weight(rng)).collect();
        force_slot(&mut weights, 0, branch.relation, |ws| {
            branch_condition(branch.family, ws, &[], &[]).relation_ratio()
        });
        return BaseDescriptor::cycle(weights);
    }
    let shape = family_shape(rng, branch.family);
    let d = shape.build(|| random_weight(rng));
    let (mut a, b, c) = (d.a.clone(), d.b.clone(), d.c.clone());
    force_slot(&mut a, 0, branch.relation, |ws| {
        branch_condition(branch.family, ws, &b, &c).relation_ratio()
    });
    rebuild(&d, a, b, c)
}

trait RelationRatio {
    fn relation_ratio(&self) -> Rational;
}

impl RelationRatio for crate::closed_forms::CaseCondition {
    fn relation_ratio(&self) -> Rational {
        &self.lhs / &self.rhs
    }
}

/// Rescales `weights[slot]` so that `ratio(weights)` (a monomial of degree
/// `+1` or `-1` in that weight) compares with 1 as `relation` asks.
fn force_slot(
    weights: &mut [Rational],
    slot: usize,
    relation: Relation,
    ratio_of: impl Fn(&[Rational]) -> Rational,
) {
    let x0 = weights[slot].clone();
    let r0 = ratio_of(weights);
    weights[slot] = &x0 * int(2);
    let degree_positive = ratio_of(weights) > r0;
    let x_eq = if degree_positive {
        &x0 / &r0
    } else {
        &x0 * &r0
    };
    let two = int(2);
    weights[slot] = match (relation, degree_positive) {
        (Relation::Eq, _) => x_eq,
        (Relation::Gt, true) | (Relation::Lt, false) => &x_eq * &two,
        (Relation::Gt, false) | (Relation::Lt, true) => &x_eq / &two,
    };
}

/// Which run of a base to lengthen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Piece {
    A,
    B,
    C,
}

/// Replaces the first edge of a run (the one at the junction or hub `u`)
/// by a path of five edges whose contraction gives back the original
/// weight, adding four vertices and `(2, 2)` to the inertia.
pub fn unfold<R: Rng + ?Sized>(
    rng: &mut R,
    d: &BaseDescriptor,
    piece: Piece,
) -> Option<BaseDescriptor> {
    let (mut a, mut b, mut c) = (d.a.clone(), d.b.clone(), d.c.clone());
    let run = match piece {
        Piece::A => &mut a,
        Piece::B => &mut b,
        Piece::C => &mut c,
    };
    let w = run.first()?.clone();
    let head: Vec<Rational> = (0..4).map(|_| random_weight(rng)).collect();
    let last = &w * &head[1] * &head[3] / (&head[0] * &head[2]);
    let mut five = head;
    five.push(last);
    debug_assert_eq!(
        contracted_weight(&[
            five[0].clone(),
            five[1].clone(),
            five[2].clone(),
            five[3].clone(),
            five[4].clone()
        ]),
        w
    );
    run.splice(0..1, five);
    Some(rebuild(d, a, b, c))
}

/// Lengthens random runs of `d` by four vertices, `times` times.
pub fn unfold_randomly<R: Rng + ?Sized>(
    rng: &mut R,
    d: &BaseDescriptor,
    times: usize,
) -> BaseDescriptor {
    let mut d = d.clone();
    for _ in 0..times {
        let pieces: &[Piece] = match d.kind {
            BaseKind::Cycle => &[Piece::A],
            _ => &[Piece::A, Piece::B, Piece::C],
        };
        let usable: Vec<Piece> = pieces
            .iter()
            .copied()
            .filter(|&p| match p {
                Piece::A => !d.a.is_empty(),
                Piece::B => !d.b.is_empty(),
                Piece::C => !d.c.is_empty(),
            })
            .collect();
        let piece = *usable.choose(rng).expect("bases have a non-empty run");
        d = unfold(rng, &d, piece).expect("non-empty run");
    }
    d
}

fn forced_bicyclic<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    branch: Branch,
) -> Result<WeightedGraph, GenError> {
    for _ in 0..64 {
        let rep = forced_representative(rng, branch);
        let base = rep.order();
        let options: Vec<usize> = (0..)
            .take_while(|t| base + 4 * t <= n)
            .filter(|t| n - base - 4 * t != 1)
            .collect();
        let Some(&times) = options.choose(rng) else {
            continue;
        };
        let d = unfold_randomly(rng, &rep, times);
        let mut g = d.to_graph();
        let extra = n - d.order();
        attach_mismatched(
            rng,
            &mut g,
            extra,
            &mut WeightSampler {
                regime: WeightRegime::RandomRational,
            },
        );
        return Ok(g);
    }
    Err(GenError::Infeasible(format!(
        "branch {branch} needs a larger graph than {n} vertices"
    )))
}

/// Smallest vertex count at which `branch` can always be forced.
pub fn branch_min_order(branch: Branch) -> usize {
    match branch.family {
        BranchFamily::Cycle { n } => n,
        BranchFamily::Table1 { p, l, q } => p + l + q - 2,
        BranchFamily::C4Join => 4 + 5 + 6 - 2,
        BranchFamily::Theta33 => 3 + 3 + 6 - 4,
        BranchFamily::Theta55 => 5 + 5 + 6 - 4,
        BranchFamily::Theta24 { q } => 2 + 4 + q - 4,
    }
}

/// One witness of the infinity table: sampled weights, the tabulated value,
/// the closed-form evaluation of the canonical base and the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Witness {
    pub row: String,
    pub branch: Option<String>,
    pub condition: Option<String>,
    pub a: Vec<String>,
    pub c: Vec<String>,
    pub b: Vec<String>,
    pub table: (usize, usize),
    pub closed_form: (usize, usize),
    pub oracle: (usize, usize),
    pub matched: bool,
}

/// Samples one witness per row and condition side of the infinity table.
pub fn table1_reproduction(seed: u64) -> Vec<Table1Witness> {
    use crate::base::describe_base;
    use crate::closed_forms::{base_inertia, table1_rows, EvalOptions};
    use crate::oracle::inertia_oracle;
    use crate::rational::format_rational;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let words = |w: &[Rational]| w.iter().map(format_rational).collect::<Vec<_>>();
    let mut out = Vec::new();
    for row in table1_rows() {
        let family = BranchFamily::Table1 {
            p: row.p,
            l: row.l,
            q: row.q,
        };
        let sides: Vec<Option<Relation>> = if row.condition.is_some() {
            Relation::ALL.iter().copied().map(Some).collect()
        } else {
            vec![None]
        };
        for side in sides {
            let d = match side {
                Some(r) => forced_representative(&mut rng, Branch::new(family, r)),
                None => BaseShape::Infinity {
                    p: row.p,
                    l: row.l,
                    q: row.q,
                }
                .build(|| random_weight(&mut rng)),
            };
            let g = d.to_graph();
            let canonical = describe_base(&g).expect("infinity base");
            let closed_form = base_inertia(&canonical, EvalOptions { verify: false })
                .expect("canonical base")
                .signs();
            let oracle = inertia_oracle(&g).signs();
            let table = row.value(side);
            out.push(Table1Witness {
                row: format!("infinity({},{},{})", row.p, row.l, row.q),
                branch: side.map(|r| r.symbol().to_string()),
                condition: row.condition_text(),
                a: words(&d.a),
                c: words(&d.c),
                b: words(&d.b),
                table,
                closed_form,
                oracle,
                matched: table == closed_form && table == oracle,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::describe_base;
    use crate::closed_forms::{base_inertia, EvalOptions};
    use crate::graph::{ComponentClass, GraphKind};
    use crate::structure::{hanging_trees, two_core};

    fn spec(class: GenClass, n: usize, seed: u64, weight_regime: WeightRegime) -> GenSpec {
        GenSpec {
            class,
            n,
            seed,
            weight_regime,
        }
    }

    #[test]
    fn deterministic_in_seed() {
        for class in [
            GenClass::Tree,
            GenClass::Forest,
            GenClass::Unicyclic,
            GenClass::Bicyclic,
        ] {
            let s = spec(class, 12, 99, WeightRegime::RandomRational);
            assert_eq!(generate(s), generate(s));
        }
    }

    #[test]
    fn trivial_specs() {
        let k1 = generate(spec(GenClass::Tree, 1, 3, WeightRegime::RandomRational)).unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));
        let c3 = generate(spec(GenClass::Unicyclic, 3, 3, WeightRegime::UnitWeights)).unwrap();
        assert_eq!((c3.order(), c3.size()), (3, 3));
        assert!(matches!(
            generate(spec(GenClass::Bicyclic, 3, 0, WeightRegime::RandomRational)),
            Err(GenError::TooSmall { .. })
        ));
        let b: Branch = "theta24x5:eq".parse().unwrap();
        assert!(matches!(
            generate(spec(
                GenClass::Bicyclic,
                5,
                0,
                WeightRegime::ForceEqualityBranch(b)
            )),
            Err(GenError::Infeasible(_))
        ));
        assert!(matches!(
            generate(spec(
                GenClass::Tree,
                9,
                0,
                WeightRegime::ForceEqualityBranch(b)
            )),
            Err(GenError::BranchClassMismatch { .. })
        ));
    }

    #[test]
    fn classes_and_orders_match() {
        for seed in 0..60 {
            for (class, kind) in [
                (GenClass::Tree, GraphKind::Tree),
                (GenClass::Unicyclic, GraphKind::Unicyclic),
                (GenClass::Bicyclic, GraphKind::Bicyclic),
            ] {
                let n = 4 + (seed as usize % 12);
                let g = generate(spec(class, n, seed, WeightRegime::RandomRational)).unwrap();
                assert_eq!(g.order(), n);
                assert_eq!(g.classify().kind, kind);
            }
            let f = generate(spec(GenClass::Forest, 9, seed, WeightRegime::UnitWeights)).unwrap();
            assert!(f
                .classify()
                .components
                .iter()
                .all(|c| *c == ComponentClass::Tree));
        }
    }

    #[test]
    fn table1_reproduces() {
        let rows = table1_reproduction(1);
        assert_eq!(rows.len(), 29);
        assert!(rows.iter().all(|w| w.matched), "{rows:#?}");
    }

    #[test]
    fn forced_branches_are_taken() {
        for branch in Branch::all() {
            let class = if matches!(branch.family, BranchFamily::Cycle { .. }) {
                GenClass::Unicyclic
            } else {
                GenClass::Bicyclic
            };
            for seed in 0..4 {
                let n = branch_min_order(branch) + seed as usize * 3;
                let g = generate(spec(
                    class,
                    n,
                    seed,
                    WeightRegime::ForceEqualityBranch(branch),
                ))
                .unwrap();
                assert_eq!(g.order(), n, "{branch}");
                let core = two_core(&g).unwrap();
                let trees = hanging_trees(&g, &core).unwrap();
                assert!(trees.iter().all(|t| !t.matched_at_root), "{branch}");
                let d = describe_base(&core).unwrap();
                let e = base_inertia(&d, EvalOptions { verify: true }).unwrap();
                assert_eq!(e.branch, Some(branch), "{branch} on {d}");
                assert_eq!(e.verified, Some(true), "{branch} on {d}");
            }
        }
    }
}
