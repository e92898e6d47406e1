//! Zero divisors and the local valuation.

use graph_core::BiSepGraph;
use rewrite_algebra::{AlgElem, Algebra, GenPath, Letter};

/// Where a zero divisor came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    /// Two distinct vertices `v w = 0`.
    Vertices,
    /// Two distinct row blocks of `S` with a unique common column block.
    RowPair,
    /// Two distinct column blocks of `T` with a unique common row block.
    ColPair,
    /// A nontrivial idempotent coming from a one-element block.
    Idempotent,
    /// Found by the bounded product search over normal paths.
    Search,
}

/// A pair of nonzero elements whose product is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroDivisor {
    pub a: AlgElem,
    pub b: AlgElem,
    pub kind: WitnessKind,
}

fn letter_elem(alg: &Algebra, l: Letter) -> AlgElem {
    AlgElem::from_path(GenPath::letter(alg.graph().graph(), l))
}

fn word_elem(alg: &Algebra, letters: Vec<Letter>) -> AlgElem {
    AlgElem::from_path(GenPath::word(alg.graph().graph(), letters).expect("composable word"))
}

/// Candidate witnesses read off the structure of the graph: distinct
/// vertices, the row/column pairs with a unique connecting block, and
/// idempotents `e*e` (resp. `ff*`) coming from one-element blocks.
fn structural_candidates(alg: &Algebra) -> Vec<(AlgElem, AlgElem, WitnessKind)> {
    let g: &BiSepGraph = alg.graph();
    let mut out = Vec::new();
    if g.graph().vertex_count() > 1 {
        out.push((alg.vertex(0), alg.vertex(1), WitnessKind::Vertices));
    }
    let (s, t) = (g.s_blocks(), g.t_blocks());
    for &x in &s {
        for &x2 in &s {
            if x == x2 {
                continue;
            }
            let common: Vec<usize> =
                (0..g.cols().len()).filter(|&y| g.meet(x, y).is_some() && g.meet(x2, y).is_some()).collect();
            if let [y] = common[..] {
                let (e, f) = (g.meet(x, y).unwrap(), g.meet(x2, y).unwrap());
                out.push((
                    letter_elem(alg, Letter::Edge(e as u32)),
                    letter_elem(alg, Letter::Ghost(f as u32)),
                    WitnessKind::RowPair,
                ));
            }
        }
    }
    for &y in &t {
        for &y2 in &t {
            if y == y2 {
                continue;
            }
            let common: Vec<usize> =
                (0..g.rows().len()).filter(|&x| g.meet(x, y).is_some() && g.meet(x, y2).is_some()).collect();
            if let [x] = common[..] {
                let (e, f) = (g.meet(x, y).unwrap(), g.meet(x, y2).unwrap());
                out.push((
                    letter_elem(alg, Letter::Ghost(e as u32)),
                    letter_elem(alg, Letter::Edge(f as u32)),
                    WitnessKind::ColPair,
                ));
            }
        }
    }
    let gr = g.graph();
    for &x in &s {
        if let [e] = g.row(x).edges[..] {
            let idem = word_elem(alg, vec![Letter::Ghost(e as u32), Letter::Edge(e as u32)]);
            out.push((idem.clone(), alg.vertex(gr.tgt(e)).sub(&idem), WitnessKind::Idempotent));
        }
    }
    for &y in &t {
        if let [f] = g.col(y).edges[..] {
            let idem = word_elem(alg, vec![Letter::Edge(f as u32), Letter::Ghost(f as u32)]);
            out.push((idem.clone(), alg.vertex(gr.src(f)).sub(&idem), WitnessKind::Idempotent));
        }
    }
    out
}

/// Searches for `a, b ≠ 0` with `ab = 0`: first the structural candidates,
/// then all products `p q` of normal paths with `|p| + |q| ≤ max_len`.
/// Every returned pair is verified by multiplication, so a result is a
/// genuine zero divisor; `None` means none was found within the bound.
pub fn zero_divisor_witness(alg: &Algebra, max_len: usize) -> Option<ZeroDivisor> {
    for (a, b, kind) in structural_candidates(alg) {
        let (a, b) = (alg.nf(&a), alg.nf(&b));
        if !a.is_zero() && !b.is_zero() && alg.mul(&a, &b).is_zero() {
            return Some(ZeroDivisor { a, b, kind });
        }
    }
    let basis = alg.basis_paths(max_len);
    for p in &basis {
        for q in basis.iter().take_while(|q| p.len() + q.len() <= max_len) {
            if p.range() != q.source() {
                continue;
            }
            // A product with a normal junction is a normal path, hence nonzero.
            let junction = match (p.letters().last(), q.letters().first()) {
                (Some(&a), Some(&b)) => alg.is_forbidden(a, b),
                _ => false,
            };
            if !junction {
                continue;
            }
            let (a, b) = (AlgElem::from_path(p.clone()), AlgElem::from_path(q.clone()));
            if alg.mul(&a, &b).is_zero() {
                return Some(ZeroDivisor { a, b, kind: WitnessKind::Search });
            }
        }
    }
    None
}

/// A pair `a ∈ Rv`, `b ∈ vR` of normal paths violating `ν(ab) = ν(a) + ν(b)`,
/// searched over normal paths with `|p| + |q| ≤ max_len`.
pub fn valuation_counterexample(alg: &Algebra, max_len: usize) -> Option<(GenPath, GenPath)> {
    let basis = alg.basis_paths(max_len);
    for p in &basis {
        for q in basis.iter().take_while(|q| p.len() + q.len() <= max_len) {
            if p.range() != q.source() {
                continue;
            }
            let prod = alg.mul(&AlgElem::from_path(p.clone()), &AlgElem::from_path(q.clone()));
            if alg.valuation(&prod) != Some(p.len() + q.len()) {
                return Some((p.clone(), q.clone()));
            }
        }
    }
    None
}
