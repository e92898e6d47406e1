//! The H-monoid presentation and a three-valued word problem.

use std::collections::HashMap;

use exact_linalg::{kernel, to_integer_vector, QMatrix, Q};
use graph_core::{BHypergraph, LambdaClass};
use num_bigint::BigInt;
use num_traits::Zero;

/// An element of the free commutative monoid on the generators, as a dense
/// vector of multiplicities.
pub type MonoidElt = Vec<u64>;

/// A generator of the H-monoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Vertex(usize),
    /// `q_λ` for a hyperedge of class `TFin`.
    Q(usize),
    /// `p_λ` for a hyperedge of class `FinS`.
    P(usize),
}

/// Generators and defining relations of `H(Ė, Λ)` for a finite B-hypergraph.
/// Generator order: vertices, then `q_λ` (class `TFin`), then `p_λ`
/// (class `FinS`), each in hyperedge order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HMonoidPres {
    pub generators: Vec<Generator>,
    pub names: Vec<String>,
    pub relations: Vec<(MonoidElt, MonoidElt)>,
    /// Hyperedge index of each relation.
    pub relation_lambda: Vec<usize>,
    index: HashMap<Generator, usize>,
}

impl HMonoidPres {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn index(&self, g: Generator) -> Option<usize> {
        self.index.get(&g).copied()
    }

    pub fn index_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn zero(&self) -> MonoidElt {
        vec![0; self.len()]
    }

    /// The element `k · g`.
    pub fn unit(&self, g: usize, k: u64) -> MonoidElt {
        let mut x = self.zero();
        x[g] = k;
        x
    }

    /// Human-readable form, e.g. `2v + q_lam1`; zero prints as `0`.
    pub fn format(&self, x: &[u64]) -> String {
        let parts: Vec<String> = x
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(i, &k)| if k == 1 { self.names[i].clone() } else { format!("{k}{}", self.names[i]) })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

pub fn add(x: &[u64], y: &[u64]) -> MonoidElt {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

/// Builds the presentation: `𝐬(λ) = 𝐫(λ)` for `TS`, `𝐬(λ) = 𝐫(λ) + q_λ`
/// for `TFin`, and `𝐫(λ) = 𝐬(λ) + p_λ` for `FinS`.
pub fn presentation(h: &BHypergraph) -> HMonoidPres {
    let g = h.base().graph();
    let mut generators: Vec<Generator> = (0..g.vertex_count()).map(Generator::Vertex).collect();
    let mut names: Vec<String> = g.vertices().to_vec();
    for l in h.lambdas_of_class(LambdaClass::TFin) {
        generators.push(Generator::Q(l));
        names.push(format!("q_{}", h.lambda(l).id));
    }
    for l in h.lambdas_of_class(LambdaClass::FinS) {
        generators.push(Generator::P(l));
        names.push(format!("p_{}", h.lambda(l).id));
    }
    let index: HashMap<Generator, usize> = generators.iter().enumerate().map(|(i, &g)| (g, i)).collect();
    let n = generators.len();
    let pad = |v: Vec<u64>| {
        let mut v = v;
        v.resize(n, 0);
        v
    };
    let mut relations = Vec::new();
    let mut relation_lambda = Vec::new();
    for (l, lam) in h.lambdas().iter().enumerate() {
        let s = pad(h.s_counts(l));
        let r = pad(h.r_counts(l));
        let rel = match lam.class {
            LambdaClass::TS => (s, r),
            LambdaClass::TFin => {
                let mut r = r;
                r[index[&Generator::Q(l)]] += 1;
                (s, r)
            }
            LambdaClass::FinS => {
                let mut s = s;
                s[index[&Generator::P(l)]] += 1;
                (r, s)
            }
            LambdaClass::InfS | LambdaClass::TInf => unreachable!("finite B-hypergraphs have no infinite classes"),
        };
        relations.push(rel);
        relation_lambda.push(l);
    }
    HMonoidPres { generators, names, relations, relation_lambda, index }
}

/// Why two elements are known to be different.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// An integer functional vanishing on every relation (`f(l) = f(r)`)
    /// that takes different values on the two elements.
    Functional(Vec<BigInt>),
    /// The breadth-first search from this side terminated: its whole
    /// congruence class (of the given size) is known and excludes the other.
    ClosedClass { from_left: bool, size: usize },
}

impl Certificate {
    /// Re-checks a functional certificate exactly.
    pub fn verify(&self, pres: &HMonoidPres, x: &[u64], y: &[u64]) -> bool {
        match self {
            Certificate::Functional(f) => {
                let ev = |v: &[u64]| v.iter().zip(f).fold(BigInt::zero(), |acc, (&k, c)| acc + c * BigInt::from(k));
                pres.relations.iter().all(|(l, r)| ev(l) == ev(r)) && ev(x) != ev(y)
            }
            Certificate::ClosedClass { .. } => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EqResult {
    /// A rewriting chain from `x` to `y` (both endpoints included).
    Equal(Vec<MonoidElt>),
    Distinct(Certificate),
    Unknown { depth: usize },
}

impl EqResult {
    pub fn is_equal(&self) -> bool {
        matches!(self, EqResult::Equal(_))
    }

    pub fn is_distinct(&self) -> bool {
        matches!(self, EqResult::Distinct(_))
    }
}

/// Cap on the number of states one side of the search may visit.
pub const MAX_STATES: usize = 200_000;

/// A functional separating `x` and `y` on the relation lattice, if the
/// images of `x` and `y` differ in the Grothendieck group tensored with ℚ.
pub fn linear_certificate(pres: &HMonoidPres, x: &[u64], y: &[u64]) -> Option<Vec<BigInt>> {
    let n = pres.len();
    let rows: Vec<Vec<Q>> = pres
        .relations
        .iter()
        .map(|(l, r)| l.iter().zip(r).map(|(&a, &b)| Q::from_integer(BigInt::from(a) - BigInt::from(b))).collect())
        .collect();
    let m = QMatrix::from_rows(rows, n);
    let diff: Vec<Q> = x.iter().zip(y).map(|(&a, &b)| Q::from_integer(BigInt::from(a) - BigInt::from(b))).collect();
    kernel(&m).into_iter().find_map(|f| {
        let dot = f.iter().zip(&diff).fold(Q::zero(), |acc, (a, b)| acc + a * b);
        (!dot.is_zero()).then(|| to_integer_vector(&f))
    })
}

/// One rewriting step in either direction of any relation.
fn neighbours(pres: &HMonoidPres, x: &[u64]) -> Vec<MonoidElt> {
    let mut out = Vec::new();
    for (l, r) in &pres.relations {
        for (from, to) in [(l, r), (r, l)] {
            if x.iter().zip(from).all(|(a, b)| a >= b) {
                out.push(x.iter().zip(from).zip(to).map(|((a, b), c)| a - b + c).collect());
            }
        }
    }
    out
}

struct Side {
    parent: HashMap<MonoidElt, Option<MonoidElt>>,
    frontier: Vec<MonoidElt>,
    depth: usize,
}

impl Side {
    fn new(x: &[u64]) -> Side {
        let mut parent = HashMap::new();
        parent.insert(x.to_vec(), None);
        Side { parent, frontier: vec![x.to_vec()], depth: 0 }
    }

    fn expand(&mut self, pres: &HMonoidPres) {
        let mut next = Vec::new();
        for s in std::mem::take(&mut self.frontier) {
            for t in neighbours(pres, &s) {
                if !self.parent.contains_key(&t) {
                    self.parent.insert(t.clone(), Some(s.clone()));
                    next.push(t);
                }
            }
        }
        self.frontier = next;
        self.depth += 1;
    }

    fn chain(&self, end: &MonoidElt) -> Vec<MonoidElt> {
        let mut out = vec![end.clone()];
        let mut cur = end.clone();
        while let Some(Some(p)) = self.parent.get(&cur) {
            out.push(p.clone());
            cur = p.clone();
        }
        out
    }
}

/// Decides `x = y` in the H-monoid as far as possible: syntactic equality,
/// then an exact linear separation over ℚ, then a bidirectional
/// breadth-first search applying relations in both directions with at most
/// `depth` rewriting steps in total. A side whose search terminates yields
/// its complete congruence class, which decides the question either way.
pub fn monoid_equal(pres: &HMonoidPres, x: &[u64], y: &[u64], depth: usize) -> EqResult {
    if x == y {
        return EqResult::Equal(vec![x.to_vec()]);
    }
    if let Some(f) = linear_certificate(pres, x, y) {
        return EqResult::Distinct(Certificate::Functional(f));
    }
    // An element admitting no rewriting step is alone in its class (this
    // covers 0: every relation has two nonempty sides).
    if neighbours(pres, x).is_empty() {
        return EqResult::Distinct(Certificate::ClosedClass { from_left: true, size: 1 });
    }
    if neighbours(pres, y).is_empty() {
        return EqResult::Distinct(Certificate::ClosedClass { from_left: false, size: 1 });
    }
    let (mut a, mut b) = (Side::new(x), Side::new(y));
    let mut toggle = false;
    loop {
        if a.frontier.is_empty() {
            return EqResult::Distinct(Certificate::ClosedClass { from_left: true, size: a.parent.len() });
        }
        if b.frontier.is_empty() {
            return EqResult::Distinct(Certificate::ClosedClass { from_left: false, size: b.parent.len() });
        }
        if a.depth + b.depth >= depth || a.parent.len() + b.parent.len() > MAX_STATES {
            return EqResult::Unknown { depth };
        }
        toggle = !toggle;
        let grow_a = match a.frontier.len().cmp(&b.frontier.len()) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Greater => false,
            std::cmp::Ordering::Equal => toggle,
        };
        let (grown, other) = if grow_a { (&mut a, &b) } else { (&mut b, &a) };
        grown.expand(pres);
        if let Some(meet) = grown.frontier.iter().find(|s| other.parent.contains_key(*s)).cloned() {
            let (mut left, right) = (a.chain(&meet), b.chain(&meet));
            left.reverse();
            left.extend(right.into_iter().skip(1));
            return EqResult::Equal(left);
        }
    }
}

/// Checks that consecutive entries of a chain differ by one relation step.
pub fn verify_chain(pres: &HMonoidPres, chain: &[MonoidElt]) -> bool {
    chain.windows(2).all(|w| neighbours(pres, &w[0]).contains(&w[1]))
}
