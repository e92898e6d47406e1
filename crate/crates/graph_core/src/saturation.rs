//! Bisaturated vertex sets, `(Σ,Θ)`-saturation, admissible triples and the
//! induced / quotient B-hypergraph constructions.
//!
//! A vertex set `V` is *bisaturated* when, for every hyperedge `λ`:
//! * `TS`: `s(λ) ⊆ V ⟺ r(λ) ⊆ V`;
//! * `TFin`: `s(λ) ⊆ V ⟹ r(λ) ⊆ V` (the relation `𝐬 = 𝐫 + q_λ`);
//! * `FinS`: `r(λ) ⊆ V ⟹ s(λ) ⊆ V` (the relation `𝐫 = 𝐬 + p_λ`).
//!
//! On regular hypergraphs (all hyperedges `TS`) only the first rule
//! applies. The one-sided rules are what makes `V ∩ E⁰` of an order ideal
//! of the H-monoid exactly a bisaturated set.

use std::collections::{BTreeSet, HashMap};

use crate::bisep::BiSepGraph;
use crate::error::GraphError;
use crate::graph::Graph;
use crate::hyper::{BHypergraph, Lambda, LambdaClass};

/// A set of vertex indices.
pub type VertexSet = BTreeSet<usize>;

/// Default cap on the number of subsets a brute-force enumeration visits.
pub const DEFAULT_MAX_SUBSETS: u128 = 1 << 20;

/// The subset-enumeration cap, overridable through `BSA_MAX_SUBSETS`.
pub fn max_subsets() -> u128 {
    std::env::var("BSA_MAX_SUBSETS")
        .ok()
        .and_then(|s| s.trim().parse::<u128>().ok())
        .unwrap_or(DEFAULT_MAX_SUBSETS)
}

/// Fails when `2^n` exceeds the enumeration cap.
pub fn subset_guard(n: usize) -> Result<(), GraphError> {
    let limit = max_subsets();
    if n >= 127 || (1u128 << n) > limit {
        return Err(GraphError::Guard { n, limit });
    }
    Ok(())
}

/// An admissible triple `(V, Σ, Θ)`: `V` bisaturated, `Σ ⊆ Λ_fin^S/V`,
/// `Θ ⊆ Λ_T^fin/V`. Hyperedges are referenced by index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissibleTriple {
    pub v: VertexSet,
    pub sigma: BTreeSet<usize>,
    pub theta: BTreeSet<usize>,
}

impl AdmissibleTriple {
    pub fn bottom() -> AdmissibleTriple {
        AdmissibleTriple { v: VertexSet::new(), sigma: BTreeSet::new(), theta: BTreeSet::new() }
    }

    pub fn top(h: &BHypergraph) -> AdmissibleTriple {
        AdmissibleTriple {
            v: (0..h.vertex_count()).collect(),
            sigma: BTreeSet::new(),
            theta: BTreeSet::new(),
        }
    }
}

/// One closure rule `A ⊆ V ⟹ B ⊆ V`.
struct Rule {
    premise: Vec<usize>,
    conclusion: Vec<usize>,
}

fn rules(h: &BHypergraph, sigma: &BTreeSet<usize>, theta: &BTreeSet<usize>) -> Vec<Rule> {
    let mut out = Vec::new();
    for (l, lam) in h.lambdas().iter().enumerate() {
        let s: Vec<usize> = h.s_set(l).into_iter().collect();
        let r: Vec<usize> = h.r_set(l).into_iter().collect();
        let (fwd, bwd) = match lam.class {
            LambdaClass::TS => (true, true),
            LambdaClass::TFin => (true, theta.contains(&l)),
            LambdaClass::FinS => (sigma.contains(&l), true),
            LambdaClass::InfS | LambdaClass::TInf => (false, false),
        };
        if fwd {
            out.push(Rule { premise: s.clone(), conclusion: r.clone() });
        }
        if bwd {
            out.push(Rule { premise: r, conclusion: s });
        }
    }
    out
}

fn close(rules: &[Rule], v: &VertexSet) -> VertexSet {
    let mut v = v.clone();
    loop {
        let mut changed = false;
        for rule in rules {
            if rule.premise.iter().all(|x| v.contains(x)) {
                for &c in &rule.conclusion {
                    changed |= v.insert(c);
                }
            }
        }
        if !changed {
            return v;
        }
    }
}

/// The least bisaturated superset of `v`.
pub fn bisaturated_closure(h: &BHypergraph, v: &VertexSet) -> VertexSet {
    close(&rules(h, &BTreeSet::new(), &BTreeSet::new()), v)
}

/// The least superset of `v` that is bisaturated and additionally satisfies
/// `s(λ) ⊆ V ⟹ r(λ) ⊆ V` for `λ ∈ Σ` and `r(λ) ⊆ V ⟹ s(λ) ⊆ V` for `λ ∈ Θ`.
pub fn sigma_theta_saturation(
    h: &BHypergraph,
    v: &VertexSet,
    sigma: &BTreeSet<usize>,
    theta: &BTreeSet<usize>,
) -> VertexSet {
    close(&rules(h, sigma, theta), v)
}

pub fn is_bisaturated(h: &BHypergraph, v: &VertexSet) -> bool {
    bisaturated_closure(h, v) == *v
}

/// All bisaturated subsets, by brute force over `2^|E⁰|` subsets (guarded).
/// Sorted by size, then lexicographically.
pub fn enumerate_bisaturated(h: &BHypergraph) -> Result<Vec<VertexSet>, GraphError> {
    let n = h.vertex_count();
    subset_guard(n)?;
    let rs = rules(h, &BTreeSet::new(), &BTreeSet::new());
    let masks: Vec<(u128, u128)> = rs
        .iter()
        .map(|r| (to_mask(&r.premise), to_mask(&r.conclusion)))
        .collect();
    let mut out = Vec::new();
    for m in 0u128..(1u128 << n) {
        if masks.iter().all(|&(p, c)| p & m != p || c & m == c) {
            out.push((0..n).filter(|&i| m >> i & 1 == 1).collect::<VertexSet>());
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

fn to_mask(v: &[usize]) -> u128 {
    v.iter().fold(0u128, |m, &i| m | 1u128 << i)
}

/// `𝒳_{λ/V}`: row blocks of `λ` whose source is outside `V`.
pub fn x_over(h: &BHypergraph, l: usize, v: &VertexSet) -> Vec<usize> {
    h.lambda(l).xs.iter().copied().filter(|&x| !v.contains(&h.base().row(x).owner)).collect()
}

/// `𝒴_{λ/V}`: column blocks of `λ` whose range is outside `V`.
pub fn y_over(h: &BHypergraph, l: usize, v: &VertexSet) -> Vec<usize> {
    h.lambda(l).ys.iter().copied().filter(|&y| !v.contains(&h.base().col(y).owner)).collect()
}

/// Membership of `λ` in `Λ/V`: for `TS` and `FinS` hyperedges `𝒳_{λ/V} ≠ ∅`,
/// for `TFin` hyperedges `𝒴_{λ/V} ≠ ∅`.
pub fn in_lambda_over(h: &BHypergraph, l: usize, v: &VertexSet) -> bool {
    match h.lambda(l).class {
        LambdaClass::TS | LambdaClass::FinS | LambdaClass::InfS => !x_over(h, l, v).is_empty(),
        LambdaClass::TFin | LambdaClass::TInf => !y_over(h, l, v).is_empty(),
    }
}

/// `Λ_fin^S/V`.
pub fn fin_s_over(h: &BHypergraph, v: &VertexSet) -> BTreeSet<usize> {
    h.lambdas_of_class(LambdaClass::FinS).into_iter().filter(|&l| in_lambda_over(h, l, v)).collect()
}

/// `Λ_T^fin/V`.
pub fn t_fin_over(h: &BHypergraph, v: &VertexSet) -> BTreeSet<usize> {
    h.lambdas_of_class(LambdaClass::TFin).into_iter().filter(|&l| in_lambda_over(h, l, v)).collect()
}

/// Hyperedges lying entirely inside `V` (`s(λ) ∪ r(λ) ⊆ V`): the ones whose
/// `q_λ` / `p_λ` generator is forced into the order ideal generated by `V`.
pub fn inside(h: &BHypergraph, l: usize, v: &VertexSet) -> bool {
    h.s_set(l).is_subset(v) && h.r_set(l).is_subset(v)
}

/// Checks admissibility of a triple.
pub fn check_triple(h: &BHypergraph, t: &AdmissibleTriple) -> Result<(), GraphError> {
    if t.v.iter().any(|&x| x >= h.vertex_count()) {
        return Err(GraphError::BadTriple("vertex out of range".into()));
    }
    if !is_bisaturated(h, &t.v) {
        return Err(GraphError::BadTriple("V is not bisaturated".into()));
    }
    let fs = fin_s_over(h, &t.v);
    if let Some(l) = t.sigma.iter().find(|l| !fs.contains(l)) {
        return Err(GraphError::BadTriple(format!("Sigma member {l} is not in the FinS/V set")));
    }
    let tf = t_fin_over(h, &t.v);
    if let Some(l) = t.theta.iter().find(|l| !tf.contains(l)) {
        return Err(GraphError::BadTriple(format!("Theta member {l} is not in the TFin/V set")));
    }
    Ok(())
}

/// Restricts `h` to the vertices outside `removed`: keeps edges with both
/// ends outside, the traces of row blocks with source outside and column
/// blocks with range outside (dropping empty traces), and hyperedges whose
/// traces are nonempty. Hyperedges in `promote` become two-sided (their
/// open side is added to `S` or `T`). Ids are preserved.
fn restrict(h: &BHypergraph, removed: &VertexSet, promote: &BTreeSet<usize>) -> BHypergraph {
    let base = h.base();
    let g = base.graph();
    let keep_v: Vec<usize> = (0..g.vertex_count()).filter(|v| !removed.contains(v)).collect();
    let keep_e: Vec<usize> = (0..g.edge_count())
        .filter(|&e| !removed.contains(&g.src(e)) && !removed.contains(&g.tgt(e)))
        .collect();
    let new_e: HashMap<usize, usize> = keep_e.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let sub = Graph::new(
        keep_v.iter().map(|&v| g.vertex_name(v).to_string()),
        keep_e.iter().map(|&e| {
            let ed = g.edge(e);
            (ed.id.clone(), g.vertex_name(ed.src).to_string(), g.vertex_name(ed.tgt).to_string())
        }),
    )
    .expect("restriction of a valid graph is valid");
    let trace = |edges: &[usize]| -> Vec<usize> { edges.iter().filter_map(|e| new_e.get(e).copied()).collect() };
    let mut rows = Vec::new();
    let mut row_map = HashMap::new();
    for (x, b) in base.rows().iter().enumerate() {
        let t = trace(&b.edges);
        if !removed.contains(&b.owner) && !t.is_empty() {
            row_map.insert(x, rows.len());
            rows.push((b.id.clone(), t));
        }
    }
    let mut cols = Vec::new();
    let mut col_map = HashMap::new();
    for (y, b) in base.cols().iter().enumerate() {
        let t = trace(&b.edges);
        if !removed.contains(&b.owner) && !t.is_empty() {
            col_map.insert(y, cols.len());
            cols.push((b.id.clone(), t));
        }
    }
    let mut s = Vec::new();
    let mut t = Vec::new();
    let mut lambdas = Vec::new();
    for (l, lam) in h.lambdas().iter().enumerate() {
        let xs: Vec<usize> = lam.xs.iter().filter_map(|x| row_map.get(x).copied()).collect();
        let ys: Vec<usize> = lam.ys.iter().filter_map(|y| col_map.get(y).copied()).collect();
        if xs.is_empty() || ys.is_empty() {
            continue;
        }
        let class = if promote.contains(&l) { LambdaClass::TS } else { lam.class };
        if class.rows_in_s() {
            s.extend(xs.iter().copied());
        }
        if class.cols_in_t() {
            t.extend(ys.iter().copied());
        }
        lambdas.push(Lambda { id: lam.id.clone(), xs, ys, class });
    }
    let bs = BiSepGraph::new(sub, rows, cols, &s, &t).expect("restricted bi-separation is valid");
    BHypergraph::new(bs, lambdas).expect("restricted B-hypergraph is valid")
}

/// The quotient B-hypergraph `H/(V,Σ,Θ)`: the restriction to `E⁰ − V` in
/// which every hyperedge of `Σ ∪ Θ` becomes two-sided.
pub fn quotient_bhypergraph(h: &BHypergraph, t: &AdmissibleTriple) -> Result<BHypergraph, GraphError> {
    check_triple(h, t)?;
    let promote: BTreeSet<usize> = t.sigma.union(&t.theta).copied().collect();
    Ok(restrict(h, &t.v, &promote))
}

/// The full sub-hypergraph hyper-induced on `w`.
pub fn full_subhypergraph(h: &BHypergraph, w: &VertexSet) -> BHypergraph {
    let removed: VertexSet = (0..h.vertex_count()).filter(|v| !w.contains(v)).collect();
    restrict(h, &removed, &BTreeSet::new())
}

/// The co-bisaturation conditions for the full sub-hypergraph on `w`: every
/// row block with source in `w` keeps an edge ending in `w`, and every
/// column block with range in `w` keeps an edge starting in `w`.
pub fn is_cobisaturated(h: &BHypergraph, w: &VertexSet) -> bool {
    let base = h.base();
    let g = base.graph();
    let inner = |e: &usize| w.contains(&g.src(*e)) && w.contains(&g.tgt(*e));
    base.rows().iter().all(|b| !w.contains(&b.owner) || b.edges.iter().any(inner))
        && base.cols().iter().all(|b| !w.contains(&b.owner) || b.edges.iter().any(inner))
}

/// All co-bisaturated full sub-hypergraphs, paired with their vertex sets,
/// by brute force over subsets (guarded).
pub fn cobisaturated_subhypergraphs(h: &BHypergraph) -> Result<Vec<(VertexSet, BHypergraph)>, GraphError> {
    let n = h.vertex_count();
    subset_guard(n)?;
    let mut out = Vec::new();
    for m in 0u128..(1u128 << n) {
        let w: VertexSet = (0..n).filter(|&i| m >> i & 1 == 1).collect();
        if is_cobisaturated(h, &w) {
            let sub = full_subhypergraph(h, &w);
            out.push((w, sub));
        }
    }
    out.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
    Ok(out)
}
