//! The rewriting system of the Cohn–Leavitt path algebra and the normal
//! form it computes.
//!
//! For each pair `X, X′ ∈ S` sharing a column block, the first such block
//! `Y` (input order) is fixed and the word `(XY)(X′Y)*` is forbidden; it
//! rewrites to `δ_{X,X′} s(X) − Σ_{Y₁≠Y} (XY₁)(X′Y₁)*`. Dually, for
//! `Y, Y′ ∈ T` sharing a row block, the first such `X` is fixed and
//! `(XY)*(XY′)` rewrites to `δ_{Y,Y′} r(Y) − Σ_{X₁≠X} (X₁Y)*(X₁Y′)`.
//! Paths avoiding every forbidden word (normal paths) form a basis, so the
//! rewriting result is a canonical normal form.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use graph_core::BiSepGraph;
use num_traits::{One, Zero};

use crate::elem::{AlgElem, Q};
use crate::path::{GenPath, Letter};

/// The fixed choice of connecting blocks that defines the forbidden words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbiddenTable {
    /// `(X, X′) ∈ S × S ↦ Y` (first column block meeting both).
    pub type1: HashMap<(usize, usize), usize>,
    /// `(Y, Y′) ∈ T × T ↦ X` (first row block meeting both).
    pub type2: HashMap<(usize, usize), usize>,
}

impl ForbiddenTable {
    pub fn new(g: &BiSepGraph) -> ForbiddenTable {
        let mut type1 = HashMap::new();
        for x in g.s_blocks() {
            for x2 in g.s_blocks() {
                let common = (0..g.cols().len()).find(|&y| g.meet(x, y).is_some() && g.meet(x2, y).is_some());
                if let Some(y) = common {
                    type1.insert((x, x2), y);
                }
            }
        }
        let mut type2 = HashMap::new();
        for y in g.t_blocks() {
            for y2 in g.t_blocks() {
                let common = (0..g.rows().len()).find(|&x| g.meet(x, y).is_some() && g.meet(x, y2).is_some());
                if let Some(x) = common {
                    type2.insert((y, y2), x);
                }
            }
        }
        ForbiddenTable { type1, type2 }
    }
}

/// One term of a rewriting right-hand side: `c · s` for a vertex, or
/// `c · a b` for a two-letter word.
#[derive(Clone, Debug)]
enum Rhs {
    Vertex(Q),
    Word(Q, Letter, Letter),
}

/// Failure of a defining relation to reduce to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationFailure {
    /// `"A1"` (row relation) or `"A2"` (column relation).
    pub kind: &'static str,
    pub first: String,
    pub second: String,
    pub residue: AlgElem,
}

const CACHE_LIMIT: usize = 1 << 18;

/// The Cohn–Leavitt path algebra of a bi-separated graph, with its
/// forbidden-word table and a memo of normal appends. The memo is an
/// implementation detail; all operations are pure.
#[derive(Debug)]
pub struct Algebra {
    g: BiSepGraph,
    table: ForbiddenTable,
    cache: Mutex<HashMap<(GenPath, Letter), AlgElem>>,
}

impl Clone for Algebra {
    fn clone(&self) -> Self {
        Algebra::new(self.g.clone())
    }
}

impl Algebra {
    pub fn new(g: BiSepGraph) -> Algebra {
        let table = ForbiddenTable::new(&g);
        Algebra { g, table, cache: Mutex::new(HashMap::new()) }
    }

    pub fn graph(&self) -> &BiSepGraph {
        &self.g
    }

    pub fn table(&self) -> &ForbiddenTable {
        &self.table
    }

    /// All letters `e`, `e*` in canonical order.
    pub fn letters(&self) -> Vec<Letter> {
        let m = self.g.graph().edge_count() as u32;
        (0..m).map(Letter::Edge).chain((0..m).map(Letter::Ghost)).collect()
    }

    pub fn vertex(&self, v: usize) -> AlgElem {
        AlgElem::from_path(GenPath::vertex(v))
    }

    /// The unit `Σ_v v`.
    pub fn one(&self) -> AlgElem {
        (0..self.g.graph().vertex_count()).map(|v| (Q::one(), GenPath::vertex(v))).collect()
    }

    pub fn edge(&self, e: usize) -> AlgElem {
        AlgElem::from_path(GenPath::letter(self.g.graph(), Letter::Edge(e as u32)))
    }

    pub fn ghost(&self, e: usize) -> AlgElem {
        AlgElem::from_path(GenPath::letter(self.g.graph(), Letter::Ghost(e as u32)))
    }

    /// True when `a b` is a forbidden word.
    pub fn is_forbidden(&self, a: Letter, b: Letter) -> bool {
        let g = &self.g;
        match (a, b) {
            (Letter::Edge(e), Letter::Ghost(f)) => {
                let (e, f) = (e as usize, f as usize);
                let (x, x2, y) = (g.row_of(e), g.row_of(f), g.col_of(e));
                g.in_s(x) && g.in_s(x2) && g.col_of(f) == y && self.table.type1.get(&(x, x2)) == Some(&y)
            }
            (Letter::Ghost(e), Letter::Edge(f)) => {
                let (e, f) = (e as usize, f as usize);
                let (y, y2, x) = (g.col_of(e), g.col_of(f), g.row_of(e));
                g.in_t(y) && g.in_t(y2) && g.row_of(f) == x && self.table.type2.get(&(y, y2)) == Some(&x)
            }
            _ => false,
        }
    }

    /// True when the letter occurs (in either position) in some forbidden word.
    pub fn in_forbidden_word(&self, x: Letter) -> bool {
        self.letters().into_iter().any(|y| self.is_forbidden(x, y) || self.is_forbidden(y, x))
    }

    /// Right-hand side of the rule for the forbidden word `a b`.
    fn rhs(&self, a: Letter, b: Letter) -> Vec<Rhs> {
        let g = &self.g;
        let mut out = Vec::new();
        match (a, b) {
            (Letter::Edge(e), Letter::Ghost(f)) => {
                let (x, x2, y) = (g.row_of(e as usize), g.row_of(f as usize), g.col_of(e as usize));
                if x == x2 {
                    out.push(Rhs::Vertex(Q::one()));
                }
                for y1 in 0..g.cols().len() {
                    if y1 == y {
                        continue;
                    }
                    if let (Some(e1), Some(f1)) = (g.meet(x, y1), g.meet(x2, y1)) {
                        out.push(Rhs::Word(-Q::one(), Letter::Edge(e1 as u32), Letter::Ghost(f1 as u32)));
                    }
                }
            }
            (Letter::Ghost(e), Letter::Edge(f)) => {
                let (y, y2, x) = (g.col_of(e as usize), g.col_of(f as usize), g.row_of(e as usize));
                if y == y2 {
                    out.push(Rhs::Vertex(Q::one()));
                }
                for x1 in 0..g.rows().len() {
                    if x1 == x {
                        continue;
                    }
                    if let (Some(e1), Some(f1)) = (g.meet(x1, y), g.meet(x1, y2)) {
                        out.push(Rhs::Word(-Q::one(), Letter::Ghost(e1 as u32), Letter::Edge(f1 as u32)));
                    }
                }
            }
            _ => unreachable!("only edge-ghost and ghost-edge words are forbidden"),
        }
        out
    }

    /// Normal form of `p · x` for a normal path `p` and a letter `x`.
    /// Since `p` is normal only the last junction can be forbidden; the
    /// rule is applied there and the recursion continues on the shorter
    /// prefix.
    fn append(&self, p: &GenPath, x: Letter) -> AlgElem {
        let gr = self.g.graph();
        if p.range() != x.source(gr) {
            return AlgElem::zero();
        }
        let Some(&a) = p.letters().last() else {
            return AlgElem::from_path(GenPath::letter(gr, x));
        };
        if !self.is_forbidden(a, x) {
            return AlgElem::from_path(p.push(gr, x));
        }
        let key = (p.clone(), x);
        if let Some(hit) = self.cache.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let prefix = p.pop(gr);
        let mut out = AlgElem::zero();
        for term in self.rhs(a, x) {
            match term {
                Rhs::Vertex(c) => out.add_term(c, prefix.clone()),
                Rhs::Word(c, a1, b1) => {
                    let partial = self.append(&prefix, a1);
                    for (path, coef) in partial.terms() {
                        out.add_scaled(&(&c * coef), &self.append(path, b1));
                    }
                }
            }
        }
        let mut cache = self.cache.lock().unwrap();
        if cache.len() > CACHE_LIMIT {
            cache.clear();
        }
        cache.insert(key, out.clone());
        out
    }

    /// Normal form of a single (arbitrary) generalized path.
    pub fn nf_path(&self, p: &GenPath) -> AlgElem {
        let mut acc = AlgElem::from_path(GenPath::vertex(p.source()));
        for &x in p.letters() {
            let mut next = AlgElem::zero();
            for (path, c) in acc.terms() {
                next.add_scaled(c, &self.append(path, x));
            }
            acc = next;
            if acc.is_zero() {
                break;
            }
        }
        acc
    }

    /// The unique normal form of `a`.
    pub fn nf(&self, a: &AlgElem) -> AlgElem {
        let mut out = AlgElem::zero();
        for (p, c) in a.terms() {
            if self.is_normal(p) {
                out.add_term(c.clone(), p.clone());
            } else {
                out.add_scaled(c, &self.nf_path(p));
            }
        }
        out
    }

    /// True when the path contains no forbidden word.
    pub fn is_normal(&self, p: &GenPath) -> bool {
        p.letters().windows(2).all(|w| !self.is_forbidden(w[0], w[1]))
    }

    /// Product in the algebra, returned in normal form.
    pub fn mul(&self, a: &AlgElem, b: &AlgElem) -> AlgElem {
        let (a, b) = (self.nf(a), self.nf(b));
        let mut out = AlgElem::zero();
        for (p, c) in a.terms() {
            for (q, d) in b.terms() {
                if p.range() != q.source() {
                    continue;
                }
                let mut acc = AlgElem::from_path(p.clone());
                for &x in q.letters() {
                    let mut next = AlgElem::zero();
                    for (path, k) in acc.terms() {
                        next.add_scaled(k, &self.append(path, x));
                    }
                    acc = next;
                }
                out.add_scaled(&(c * d), &acc);
            }
        }
        out
    }

    /// The involution, returned in normal form.
    pub fn star(&self, a: &AlgElem) -> AlgElem {
        self.nf(&a.star())
    }

    /// `ν(a)`: the maximal length of a path in the support of `nf(a)`;
    /// `None` stands for `−∞` (a = 0).
    pub fn valuation(&self, a: &AlgElem) -> Option<usize> {
        self.nf(a).support().map(|p| p.len()).max()
    }

    /// Normal paths of length at most `max_len`, in canonical order.
    pub fn basis_paths(&self, max_len: usize) -> Vec<GenPath> {
        let gr = self.g.graph();
        let mut out: Vec<GenPath> = (0..gr.vertex_count()).map(GenPath::vertex).collect();
        let mut frontier: Vec<GenPath> = self.letters().into_iter().map(|x| GenPath::letter(gr, x)).collect();
        for _ in 1..=max_len {
            let mut next = Vec::new();
            for p in &frontier {
                let last = *p.letters().last().unwrap();
                for x in self.letters() {
                    if x.source(gr) == p.range() && !self.is_forbidden(last, x) {
                        next.push(p.push(gr, x));
                    }
                }
            }
            out.append(&mut frontier);
            frontier = next;
        }
        out.sort();
        out
    }

    /// `dim V^n` for `V = span(E⁰ ∪ E¹ ∪ (E¹)*)`: the number of normal
    /// paths of length at most `n`, counted by a transfer matrix on the last
    /// letter. Saturates at `u128::MAX`.
    pub fn growth_count(&self, n: usize) -> u128 {
        let gr = self.g.graph();
        let letters = self.letters();
        let mut total = gr.vertex_count() as u128;
        if n == 0 {
            return total;
        }
        let mut cnt: Vec<u128> = vec![1; letters.len()];
        total = total.saturating_add(letters.len() as u128);
        let succ: Vec<Vec<usize>> = letters
            .iter()
            .map(|&a| {
                (0..letters.len())
                    .filter(|&j| a.range(gr) == letters[j].source(gr) && !self.is_forbidden(a, letters[j]))
                    .collect()
            })
            .collect();
        for _ in 2..=n {
            let mut next = vec![0u128; letters.len()];
            for (i, c) in cnt.iter().enumerate() {
                for &j in &succ[i] {
                    next[j] = next[j].saturating_add(*c);
                }
            }
            cnt = next;
            total = cnt.iter().fold(total, |t, c| t.saturating_add(*c));
        }
        total
    }

    /// Checks that every defining relation reduces to zero.
    pub fn check_relations(&self) -> Result<(), RelationFailure> {
        let g = &self.g;
        let gr = g.graph();
        for x in g.s_blocks() {
            for x2 in g.s_blocks() {
                let mut rel = AlgElem::zero();
                for y in 0..g.cols().len() {
                    if let (Some(e), Some(f)) = (g.meet(x, y), g.meet(x2, y)) {
                        let p = GenPath::word(gr, vec![Letter::Edge(e as u32), Letter::Ghost(f as u32)]).unwrap();
                        rel.add_term(Q::one(), p);
                    }
                }
                if x == x2 {
                    rel.add_term(-Q::one(), GenPath::vertex(g.row(x).owner));
                }
                let residue = self.nf(&rel);
                if !residue.is_zero() {
                    return Err(RelationFailure {
                        kind: "A1",
                        first: g.row(x).id.clone(),
                        second: g.row(x2).id.clone(),
                        residue,
                    });
                }
            }
        }
        for y in g.t_blocks() {
            for y2 in g.t_blocks() {
                let mut rel = AlgElem::zero();
                for x in 0..g.rows().len() {
                    if let (Some(e), Some(f)) = (g.meet(x, y), g.meet(x, y2)) {
                        let p = GenPath::word(gr, vec![Letter::Ghost(e as u32), Letter::Edge(f as u32)]).unwrap();
                        rel.add_term(Q::one(), p);
                    }
                }
                if y == y2 {
                    rel.add_term(-Q::one(), GenPath::vertex(g.col(y).owner));
                }
                let residue = self.nf(&rel);
                if !residue.is_zero() {
                    return Err(RelationFailure {
                        kind: "A2",
                        first: g.col(y).id.clone(),
                        second: g.col(y2).id.clone(),
                        residue,
                    });
                }
            }
        }
        Ok(())
    }

    /// Text form of a path: vertex id, or letters joined by `*` with ghosts
    /// written `e^*`.
    pub fn format_path(&self, p: &GenPath) -> String {
        let gr = self.g.graph();
        if p.is_vertex() {
            return gr.vertex_name(p.source()).to_string();
        }
        p.letters()
            .iter()
            .map(|l| match l {
                Letter::Edge(e) => gr.edge(*e as usize).id.clone(),
                Letter::Ghost(e) => format!("{}^*", gr.edge(*e as usize).id),
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Canonical text form, e.g. `v - 3/2*e1*e2^*`; zero prints as `0`.
    pub fn format(&self, a: &AlgElem) -> String {
        if a.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (p, c)) in a.terms().enumerate() {
            let neg = c < &Q::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            if !abs.is_one() {
                s.push_str(&format!("{abs}*"));
            }
            s.push_str(&self.format_path(p));
        }
        s
    }

    /// Splits the normal form by degree.
    pub fn degree_components(&self, a: &AlgElem) -> BTreeMap<i64, AlgElem> {
        self.nf(a).degree_components()
    }
}
