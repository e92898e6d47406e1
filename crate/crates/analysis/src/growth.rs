//! Quasi-cycles, self-connectedness and the growth dichotomy.
//!
//! A quasi-cycle is a normal closed path `p` with `p²` normal that is
//! minimal in the sense that no subword of `p²` of length `1 ≤ k < |p|` is
//! itself a closed path. It is self-connected when some normal path `o` of
//! positive length, not having `p` as a prefix, makes `p o p` normal.

use rewrite_algebra::{path_mul, Algebra, GenPath, Letter};

/// Outcome of the connector search for one quasi-cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SelfConnection {
    Found(GenPath),
    NotFoundUpTo(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiCycle {
    pub path: GenPath,
    pub self_connected: SelfConnection,
}

/// Growth classification up to explicit search bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GrowthClass {
    /// Certified by a self-connected quasi-cycle and its connector.
    Exponential { quasi_cycle: GenPath, connector: GenPath },
    /// No self-connected quasi-cycle with `|p| ≤ max_len`, `|o| ≤ conn_len`.
    NoSelfConnectedUpTo { max_len: usize, conn_len: usize },
}

impl GrowthClass {
    pub fn is_exponential(&self) -> bool {
        matches!(self, GrowthClass::Exponential { .. })
    }
}

/// True when `p` is a quasi-cycle.
pub fn is_quasi_cycle(alg: &Algebra, p: &GenPath) -> bool {
    if p.is_vertex() || !p.is_closed() || !alg.is_normal(p) {
        return false;
    }
    let Some(pp) = path_mul(p, p) else { return false };
    if !alg.is_normal(&pp) {
        return false;
    }
    let gr = alg.graph().graph();
    let n = p.len();
    (1..n).all(|k| (0..=2 * n - k).all(|i| !pp.subword(gr, i, i + k).is_closed()))
}

/// Searches a connector `o` with `1 ≤ |o| ≤ conn_len` for the quasi-cycle `p`.
pub fn find_connector(alg: &Algebra, p: &GenPath, conn_len: usize) -> Option<GenPath> {
    let gr = alg.graph().graph();
    let first = *p.letters().first()?;
    let last = *p.letters().last()?;
    let letters = alg.letters();
    // Depth-first over normal paths starting at r(p) with a normal junction
    // after p.
    let mut stack: Vec<Vec<Letter>> = letters
        .iter()
        .filter(|&&x| x.source(gr) == p.range() && !alg.is_forbidden(last, x))
        .map(|&x| vec![x])
        .collect();
    while let Some(w) = stack.pop() {
        let end = *w.last().unwrap();
        let o = GenPath::word(gr, w.clone()).expect("composable");
        let has_p_prefix = w.len() >= p.len() && w[..p.len()] == *p.letters();
        if !has_p_prefix && o.range() == p.source() && !alg.is_forbidden(end, first) {
            return Some(o);
        }
        if w.len() < conn_len {
            for &x in &letters {
                if x.source(gr) == end.range(gr) && !alg.is_forbidden(end, x) {
                    let mut nw = w.clone();
                    nw.push(x);
                    stack.push(nw);
                }
            }
        }
    }
    None
}

/// All quasi-cycles of length at most `max_len`, each with the result of a
/// connector search bounded by `conn_len`.
pub fn quasi_cycles(alg: &Algebra, max_len: usize, conn_len: usize) -> Vec<QuasiCycle> {
    alg.basis_paths(max_len)
        .into_iter()
        .filter(|p| is_quasi_cycle(alg, p))
        .map(|p| {
            let self_connected = match find_connector(alg, &p, conn_len) {
                Some(o) => SelfConnection::Found(o),
                None => SelfConnection::NotFoundUpTo(conn_len),
            };
            QuasiCycle { path: p, self_connected }
        })
        .collect()
}

pub fn growth_class(alg: &Algebra, max_len: usize, conn_len: usize) -> GrowthClass {
    for qc in quasi_cycles(alg, max_len, conn_len) {
        if let SelfConnection::Found(o) = qc.self_connected {
            return GrowthClass::Exponential { quasi_cycle: qc.path, connector: o };
        }
    }
    GrowthClass::NoSelfConnectedUpTo { max_len, conn_len }
}

/// `dim V^n` (see [`Algebra::growth_count`]).
pub fn growth_count(alg: &Algebra, n: usize) -> u128 {
    alg.growth_count(n)
}
