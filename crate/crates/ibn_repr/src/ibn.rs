//! Coefficient matrices of a regular hypergraph and the rank criterion for
//! Invariant Basis Number, with an explicit non-IBN witness.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use exact_linalg::{integer_gauss_jordan, q, rank, QMatrix, Q};
use graph_core::{BHypergraph, LambdaClass};
use hypermonoid::{monoid_equal, presentation, EqResult, Generator, MonoidElt};

use crate::IbnError;

/// Caveat attached to every IBN decision: the rank criterion is proved
/// under a confluence hypothesis on the monoid that is not checked here.
pub const CONFLUENCE_CAVEAT: &str = "confluence of the monoid relations assumed, not verified";

/// `A[λ][v] = #{X ∈ 𝒳_λ : s(X) = v}` and `B[λ][v] = #{Y ∈ 𝒴_λ : r(Y) = v}`,
/// rows in hyperedge order, columns in vertex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffMatrices {
    pub a: Vec<Vec<u64>>,
    pub b: Vec<Vec<u64>>,
}

impl CoeffMatrices {
    /// Number of hyperedges `h`.
    pub fn h(&self) -> usize {
        self.a.len()
    }

    /// `Bᵗ − Aᵗ` as an `n × h` rational matrix.
    pub fn bt_minus_at(&self, n: usize) -> QMatrix {
        let mut m = QMatrix::zeros(n, self.h());
        for l in 0..self.h() {
            for v in 0..n {
                m.set(v, l, q(self.b[l][v] as i64 - self.a[l][v] as i64));
            }
        }
        m
    }

    /// `A − B` as an `h × n` rational matrix (the dimension-function system).
    pub fn a_minus_b(&self, n: usize) -> QMatrix {
        let mut m = QMatrix::zeros(self.h(), n);
        for l in 0..self.h() {
            for v in 0..n {
                m.set(l, v, q(self.a[l][v] as i64 - self.b[l][v] as i64));
            }
        }
        m
    }
}

/// Builds the coefficient matrices; every hyperedge must be two-sided.
pub fn coeff_matrices(h: &BHypergraph) -> Result<CoeffMatrices, IbnError> {
    if let Some(l) = h.lambdas().iter().find(|l| l.class != LambdaClass::TS) {
        return Err(IbnError::NotTwoSided { lambda: l.id.clone(), class: l.class });
    }
    let a = (0..h.lambdas().len()).map(|l| h.s_counts(l)).collect();
    let b = (0..h.lambdas().len()).map(|l| h.r_counts(l)).collect();
    Ok(CoeffMatrices { a, b })
}

/// The rank comparison behind the IBN decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IbnDecision {
    pub ibn: bool,
    pub rank: usize,
    pub rank_augmented: usize,
    pub caveat: &'static str,
}

/// `rank(Bᵗ−Aᵗ)` versus `rank([Bᵗ−Aᵗ | c])` with `c` all ones.
pub fn ibn_decision(h: &BHypergraph) -> Result<IbnDecision, IbnError> {
    let cm = coeff_matrices(h)?;
    let n = h.vertex_count();
    let m = cm.bt_minus_at(n);
    let r = rank(&m);
    let ra = rank(&m.augment(&vec![Q::one(); n]));
    Ok(IbnDecision { ibn: r < ra, rank: r, rank_augmented: ra, caveat: CONFLUENCE_CAVEAT })
}

/// True when the algebra has IBN by the rank criterion (see [`CONFLUENCE_CAVEAT`]).
pub fn has_ibn(h: &BHypergraph) -> Result<bool, IbnError> {
    Ok(ibn_decision(h)?.ibn)
}

/// Outcome of the bounded monoid search for `(m+t)·Σv = (p+t)·Σv`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Confirmation {
    /// The smallest shift `t` for which the equality was found, the
    /// confirmed pair `(m+t, p+t)` and the rewrite chain.
    Equal { shift: u64, m: u64, p: u64, chain: Vec<MonoidElt> },
    /// No shift up to `max_shift` was confirmed at this depth; `unknown`
    /// counts the shifts whose search ran out of budget.
    NotFound { max_shift: u64, depth: usize, unknown: usize },
    /// The recipe numbers do not fit machine integers.
    TooLarge,
}

/// A non-IBN witness: positive `m ≠ p` and integer multipliers `m_j` with
/// `(Bᵗ−Aᵗ)·(m_j) = (m−p)·c`, the usage counts `(k′_j, k_j)` and the
/// bounded monoid confirmation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IbnWitness {
    pub m: BigInt,
    pub p: BigInt,
    pub multipliers: Vec<BigInt>,
    /// `(k′_j, k_j)`: how often relation `j` is applied on the `p` and `m` sides.
    pub usage: Vec<(BigInt, BigInt)>,
    pub confirmation: Confirmation,
}

impl IbnWitness {
    /// Substitutes the multipliers into `(Bᵗ−Aᵗ)x = (m−p)c` and checks
    /// `m, p > 0`, `m ≠ p` and `m_j = k′_j − k_j` with `k′_j, k_j ≥ 0`.
    pub fn verify(&self, cm: &CoeffMatrices, n: usize) -> bool {
        if !self.m.is_positive() || !self.p.is_positive() || self.m == self.p {
            return false;
        }
        if self.multipliers.len() != cm.h() || self.usage.len() != cm.h() {
            return false;
        }
        let diff = &self.m - &self.p;
        let rows_ok = (0..n).all(|v| {
            let s: BigInt = (0..cm.h())
                .map(|l| BigInt::from(cm.b[l][v] as i64 - cm.a[l][v] as i64) * &self.multipliers[l])
                .sum();
            s == diff
        });
        let usage_ok = self
            .multipliers
            .iter()
            .zip(&self.usage)
            .all(|(mj, (kp, k))| !kp.is_negative() && !k.is_negative() && &(kp - k) == mj);
        rows_ok && usage_ok
    }
}

/// Default search depth: twice the largest block count of a hyperedge.
pub fn default_depth(h: &BHypergraph) -> usize {
    2 * h.lambdas().iter().map(|l| l.xs.len().max(l.ys.len())).max().unwrap_or(1)
}

/// Default shift bound: the largest `|𝒳_λ| + |𝒴_λ|`.
pub fn default_max_shift(h: &BHypergraph) -> u64 {
    h.lambdas().iter().map(|l| (l.xs.len() + l.ys.len()) as u64).max().unwrap_or(1)
}

/// [`ibn_witness_with`] at the default depth and shift bound.
pub fn ibn_witness(h: &BHypergraph) -> Result<Option<IbnWitness>, IbnError> {
    ibn_witness_with(h, default_depth(h), default_max_shift(h))
}

/// When the rank criterion fails, builds `(m, p, m_j)` from the integer
/// Gauss–Jordan form of `[Bᵗ−Aᵗ | c]`: with pivots `d_i` in columns `j_i`
/// and last entries `c_i`, `m_{j_i} = c_i·|Πd|/d_i` (other `m_j = 0`),
/// `p = max|m_j|`, `m = |Πd| + p`. Then searches the monoid for the smallest
/// shift `t ≤ max_shift` with `(m+t)·Σv = (p+t)·Σv` within `depth`.
pub fn ibn_witness_with(h: &BHypergraph, depth: usize, max_shift: u64) -> Result<Option<IbnWitness>, IbnError> {
    if has_ibn(h)? {
        return Ok(None);
    }
    let cm = coeff_matrices(h)?;
    let n = h.vertex_count();
    let hh = cm.h();
    let rows: Vec<Vec<BigInt>> = (0..n)
        .map(|v| {
            let mut r: Vec<BigInt> =
                (0..hh).map(|l| BigInt::from(cm.b[l][v] as i64 - cm.a[l][v] as i64)).collect();
            r.push(BigInt::one());
            r
        })
        .collect();
    let ech = integer_gauss_jordan(&rows, hh + 1);
    debug_assert!(!ech.pivots.contains(&hh), "consistent system has no pivot in c");
    let prod: BigInt = ech.rows.iter().zip(&ech.pivots).map(|(r, &j)| r[j].abs()).product();
    let mut multipliers = vec![BigInt::zero(); hh];
    for (r, &j) in ech.rows.iter().zip(&ech.pivots) {
        multipliers[j] = &r[hh] * &prod / &r[j];
    }
    let p = multipliers.iter().map(|x| x.abs()).max().unwrap_or_else(BigInt::zero);
    let m = &prod + &p;
    let usage = multipliers
        .iter()
        .map(|mj| if mj.is_negative() { (BigInt::zero(), -mj) } else { (mj.clone(), BigInt::zero()) })
        .collect();
    let confirmation = confirm(h, &m, &p, depth, max_shift);
    Ok(Some(IbnWitness { m, p, multipliers, usage, confirmation }))
}

fn confirm(h: &BHypergraph, m: &BigInt, p: &BigInt, depth: usize, max_shift: u64) -> Confirmation {
    let (Some(m), Some(p)) = (m.to_u64(), p.to_u64()) else { return Confirmation::TooLarge };
    let pres = presentation(h);
    let ones = |k: u64| -> MonoidElt {
        let mut x = pres.zero();
        for v in 0..h.vertex_count() {
            if let Some(i) = pres.index(Generator::Vertex(v)) {
                x[i] = k;
            }
        }
        x
    };
    let mut unknown = 0;
    for t in 0..=max_shift {
        match monoid_equal(&pres, &ones(m + t), &ones(p + t), depth) {
            EqResult::Equal(chain) => return Confirmation::Equal { shift: t, m: m + t, p: p + t, chain },
            EqResult::Unknown { .. } => unknown += 1,
            EqResult::Distinct(_) => {}
        }
    }
    Confirmation::NotFound { max_shift, depth, unknown }
}

/// Advisory `K₀ ⊗ ℚ` test on an arbitrary finite B-hypergraph: whether the
/// class `Σv` of the unit lies in the `ℚ`-span of the relation differences
/// of the H-monoid presentation (including the `q`/`p` generators).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K0Span {
    pub unit_in_span: bool,
    pub advisory: &'static str,
}

pub fn k0_span(h: &BHypergraph) -> K0Span {
    let pres = presentation(h);
    let diffs: Vec<Vec<Q>> = pres
        .relations
        .iter()
        .map(|(l, r)| l.iter().zip(r).map(|(&a, &b)| q(a as i64 - b as i64)).collect())
        .collect();
    let rel = QMatrix::from_rows(diffs, pres.len()).transpose();
    let mut unit = vec![Q::zero(); pres.len()];
    for v in 0..h.vertex_count() {
        if let Some(i) = pres.index(Generator::Vertex(v)) {
            unit[i] = Q::one();
        }
    }
    let unit_in_span = rank(&rel) == rank(&rel.augment(&unit));
    K0Span { unit_in_span, advisory: "experimental: outside the regular setting this is only a heuristic" }
}
