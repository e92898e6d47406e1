//! Letters of the double graph and generalized paths.

use std::cmp::Ordering;

use graph_core::Graph;

/// A non-vertex letter of the double graph `Ê`: a real edge `e` or a ghost
/// edge `e*` (indices into the edge list).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Edge(u32),
    Ghost(u32),
}

impl Letter {
    pub fn edge(self) -> usize {
        match self {
            Letter::Edge(e) | Letter::Ghost(e) => e as usize,
        }
    }

    pub fn is_ghost(self) -> bool {
        matches!(self, Letter::Ghost(_))
    }

    /// `s(e) ` for an edge, `r(e)` for a ghost.
    pub fn source(self, g: &Graph) -> usize {
        match self {
            Letter::Edge(e) => g.src(e as usize),
            Letter::Ghost(e) => g.tgt(e as usize),
        }
    }

    /// `r(e)` for an edge, `s(e)` for a ghost.
    pub fn range(self, g: &Graph) -> usize {
        match self {
            Letter::Edge(e) => g.tgt(e as usize),
            Letter::Ghost(e) => g.src(e as usize),
        }
    }

    /// The involution `e ↦ e*`, `e* ↦ e`.
    pub fn star(self) -> Letter {
        match self {
            Letter::Edge(e) => Letter::Ghost(e),
            Letter::Ghost(e) => Letter::Edge(e),
        }
    }

    /// `+1` for edges, `−1` for ghosts.
    pub fn degree(self) -> i64 {
        if self.is_ghost() {
            -1
        } else {
            1
        }
    }
}

/// A generalized path: either a vertex (no letters, `src = rng`) or a
/// nonempty composable word in `Ê`. Source and range are cached.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GenPath {
    src: u32,
    rng: u32,
    letters: Vec<Letter>,
}

impl GenPath {
    pub fn vertex(v: usize) -> GenPath {
        GenPath { src: v as u32, rng: v as u32, letters: Vec::new() }
    }

    /// Builds a word; `None` if the letters do not compose (or are empty).
    pub fn word(g: &Graph, letters: Vec<Letter>) -> Option<GenPath> {
        let first = *letters.first()?;
        for w in letters.windows(2) {
            if w[0].range(g) != w[1].source(g) {
                return None;
            }
        }
        let last = *letters.last()?;
        Some(GenPath { src: first.source(g) as u32, rng: last.range(g) as u32, letters })
    }

    /// Single letter path.
    pub fn letter(g: &Graph, x: Letter) -> GenPath {
        GenPath { src: x.source(g) as u32, rng: x.range(g) as u32, letters: vec![x] }
    }

    pub fn source(&self) -> usize {
        self.src as usize
    }

    pub fn range(&self) -> usize {
        self.rng as usize
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_vertex(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `#edges − #ghosts`.
    pub fn degree(&self) -> i64 {
        self.letters.iter().map(|l| l.degree()).sum()
    }

    /// True when `s(p) = r(p)`.
    pub fn is_closed(&self) -> bool {
        self.src == self.rng
    }

    /// Appends a letter without any normalization; caller guarantees
    /// composability.
    pub(crate) fn push(&self, g: &Graph, x: Letter) -> GenPath {
        debug_assert_eq!(self.range(), x.source(g));
        let mut letters = self.letters.clone();
        letters.push(x);
        GenPath { src: self.src, rng: x.range(g) as u32, letters }
    }

    /// Drops the last letter (the result of dropping the only letter is the
    /// source vertex).
    pub(crate) fn pop(&self, g: &Graph) -> GenPath {
        let mut letters = self.letters.clone();
        letters.pop();
        match letters.last() {
            None => GenPath::vertex(self.source()),
            Some(&l) => GenPath { src: self.src, rng: l.range(g) as u32, letters },
        }
    }

    /// The reversed word with every letter starred.
    pub fn star(&self) -> GenPath {
        GenPath {
            src: self.rng,
            rng: self.src,
            letters: self.letters.iter().rev().map(|l| l.star()).collect(),
        }
    }

    /// Subword `letters[i..j]` (nonempty) as a path.
    pub fn subword(&self, g: &Graph, i: usize, j: usize) -> GenPath {
        if i == j {
            let v = if i == 0 {
                self.source()
            } else {
                self.letters[i - 1].range(g)
            };
            return GenPath::vertex(v);
        }
        GenPath::word(g, self.letters[i..j].to_vec()).expect("subword of a path composes")
    }
}

/// The path 0-semigroup product: concatenation when `r(p) = s(q)`, where
/// vertices act as local identities; `None` stands for zero.
pub fn path_mul(p: &GenPath, q: &GenPath) -> Option<GenPath> {
    if p.range() != q.source() {
        return None;
    }
    if p.is_vertex() {
        return Some(q.clone());
    }
    if q.is_vertex() {
        return Some(p.clone());
    }
    let mut letters = p.letters.clone();
    letters.extend_from_slice(&q.letters);
    Some(GenPath { src: p.src, rng: q.rng, letters })
}

impl Ord for GenPath {
    /// Canonical monomial order: length, then degree, then letters
    /// lexicographically (edges before ghosts, by edge index), then source.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.degree().cmp(&other.degree()))
            .then_with(|| self.letters.cmp(&other.letters))
            .then_with(|| self.src.cmp(&other.src))
    }
}

impl PartialOrd for GenPath {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
