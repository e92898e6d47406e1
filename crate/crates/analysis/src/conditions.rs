//! Literal evaluation of Condition LV, the domain condition, Condition (A)
//! and Condition (A′).

use graph_core::BiSepGraph;
use rewrite_algebra::{Algebra, Letter};

/// Which branch of Condition LV holds, if any.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LvBranch {
    Lv1,
    Lv2,
}

fn meets(g: &BiSepGraph, x: usize, y: usize) -> bool {
    g.meet(x, y).is_some()
}

/// LV2(a): any two row blocks of `S` sharing a column block share two.
/// The quantifier ranges over all pairs, including `X₁ = X₂`.
fn lv2_rows(g: &BiSepGraph) -> bool {
    let s = g.s_blocks();
    s.iter().all(|&x1| {
        s.iter().all(|&x2| {
            let common = (0..g.cols().len()).filter(|&y| meets(g, x1, y) && meets(g, x2, y)).count();
            common == 0 || common >= 2
        })
    })
}

/// LV2(b): the dual statement for column blocks of `T`.
fn lv2_cols(g: &BiSepGraph) -> bool {
    let t = g.t_blocks();
    t.iter().all(|&y1| {
        t.iter().all(|&y2| {
            let common = (0..g.rows().len()).filter(|&x| meets(g, x, y1) && meets(g, x, y2)).count();
            common == 0 || common >= 2
        })
    })
}

fn lv1(g: &BiSepGraph) -> bool {
    let (s, t) = (g.s_blocks(), g.t_blocks());
    s.len() <= 1
        && t.len() <= 1
        && s.iter().all(|&x| g.row(x).edges.len() > 1)
        && t.iter().all(|&y| g.col(y).edges.len() > 1)
}

fn lv2(g: &BiSepGraph) -> bool {
    (g.s_blocks().len() > 1 || g.t_blocks().len() > 1) && lv2_rows(g) && lv2_cols(g)
}

/// The branch of Condition LV satisfied by `g`, if any.
pub fn lv_branch(g: &BiSepGraph) -> Option<LvBranch> {
    if lv1(g) {
        Some(LvBranch::Lv1)
    } else if lv2(g) {
        Some(LvBranch::Lv2)
    } else {
        None
    }
}

pub fn condition_lv(g: &BiSepGraph) -> bool {
    lv_branch(g).is_some()
}

/// The domain condition: `|S| ≤ 1` and `|T| ≤ 1`, or LV2.
pub fn domain_condition(g: &BiSepGraph) -> bool {
    (g.s_blocks().len() <= 1 && g.t_blocks().len() <= 1) || lv2(g)
}

/// The domain characterisation applied to `g`.
pub fn is_domain(g: &BiSepGraph) -> bool {
    domain_condition(g)
}

/// Witness for Condition (A): the letter `XY` whose words `(XY)(XY)*` and
/// `(XY)*(XY)` are both normal, or the edge for the branch without relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AWitness {
    /// `S = T = ∅` and the graph has the given edge.
    NoRelations { edge: usize },
    /// Branch (a) with `X ∈ S` (row index), or branch (b) with `Y ∈ T`.
    Block { row: usize, col: usize, edge: usize, from_s: bool },
}

/// Condition (A), returning a witness when it holds.
pub fn condition_a_witness(alg: &Algebra) -> Option<AWitness> {
    let g = alg.graph();
    if g.s_blocks().is_empty() && g.t_blocks().is_empty() {
        return (g.graph().edge_count() > 0).then_some(AWitness::NoRelations { edge: 0 });
    }
    let ok = |e: usize| {
        let (a, b) = (Letter::Edge(e as u32), Letter::Ghost(e as u32));
        !alg.is_forbidden(a, b) && !alg.is_forbidden(b, a)
    };
    for x in g.s_blocks() {
        for y in 0..g.cols().len() {
            if let Some(e) = g.meet(x, y).filter(|&e| ok(e)) {
                return Some(AWitness::Block { row: x, col: y, edge: e, from_s: true });
            }
        }
    }
    for y in g.t_blocks() {
        for x in 0..g.rows().len() {
            if let Some(e) = g.meet(x, y).filter(|&e| ok(e)) {
                return Some(AWitness::Block { row: x, col: y, edge: e, from_s: false });
            }
        }
    }
    None
}

pub fn condition_a(alg: &Algebra) -> bool {
    condition_a_witness(alg).is_some()
}

/// Witness for Condition (A′), naming the branch that holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum APrimeWitness {
    /// (A′1): `S = T = ∅` and the graph has the given edge.
    NoRelations { edge: usize },
    /// (A′2)(a): two row blocks of `S` with a common source, meeting a
    /// column block in free letters.
    TwoRows { rows: (usize, usize), col: usize },
    /// (A′2)(b): two column blocks of `T` with a common range.
    TwoCols { cols: (usize, usize), row: usize },
    /// (A′2)(c): `X ∈ S`, `Y ∈ D` with `s(X) = r(Y)` and a free letter.
    RowLoop { row: usize, col: usize },
    /// (A′2)(d): `Y ∈ T`, `X ∈ C` with `s(X) = r(Y)` and a free letter.
    ColLoop { row: usize, col: usize },
}

/// Condition (A′), returning a witness when it holds. A letter `XY` is
/// free when neither it nor its ghost occurs in any forbidden word.
pub fn condition_a_prime_witness(alg: &Algebra) -> Option<APrimeWitness> {
    let g = alg.graph();
    let (s, t) = (g.s_blocks(), g.t_blocks());
    if s.is_empty() && t.is_empty() {
        return (g.graph().edge_count() > 0).then_some(APrimeWitness::NoRelations { edge: 0 });
    }
    let free = |e: usize| {
        !alg.in_forbidden_word(Letter::Edge(e as u32)) && !alg.in_forbidden_word(Letter::Ghost(e as u32))
    };
    let free_meet = |x: usize, y: usize| g.meet(x, y).is_some_and(free);
    for &x1 in &s {
        for &x2 in &s {
            if x1 == x2 || g.row(x1).owner != g.row(x2).owner {
                continue;
            }
            if let Some(y) = (0..g.cols().len()).find(|&y| free_meet(x1, y) && free_meet(x2, y)) {
                return Some(APrimeWitness::TwoRows { rows: (x1, x2), col: y });
            }
        }
    }
    for &y1 in &t {
        for &y2 in &t {
            if y1 == y2 || g.col(y1).owner != g.col(y2).owner {
                continue;
            }
            if let Some(x) = (0..g.rows().len()).find(|&x| free_meet(x, y1) && free_meet(x, y2)) {
                return Some(APrimeWitness::TwoCols { cols: (y1, y2), row: x });
            }
        }
    }
    for &x in &s {
        for y in 0..g.cols().len() {
            if g.row(x).owner == g.col(y).owner && free_meet(x, y) {
                return Some(APrimeWitness::RowLoop { row: x, col: y });
            }
        }
    }
    for &y in &t {
        for x in 0..g.rows().len() {
            if g.row(x).owner == g.col(y).owner && free_meet(x, y) {
                return Some(APrimeWitness::ColLoop { row: x, col: y });
            }
        }
    }
    None
}

pub fn condition_a_prime(alg: &Algebra) -> bool {
    condition_a_prime_witness(alg).is_some()
}
