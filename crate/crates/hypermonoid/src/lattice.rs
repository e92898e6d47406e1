//! Admissible triples, their lattice operations and the order ideals they
//! describe.

use std::collections::BTreeSet;

use graph_core::saturation::*;
use graph_core::{BHypergraph, GraphError, LambdaClass};

use crate::pres::{add, Generator, HMonoidPres, MonoidElt};

pub use graph_core::saturation::{enumerate_bisaturated, AdmissibleTriple};

fn subsets(items: &[usize]) -> Vec<BTreeSet<usize>> {
    (0u64..1 << items.len())
        .map(|m| items.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &l)| l).collect())
        .collect()
}

/// Every admissible triple, ordered by `V` (size, then lexicographic), then
/// `Σ`, then `Θ`.
pub fn enumerate_admissible_triples(h: &BHypergraph) -> Result<Vec<AdmissibleTriple>, GraphError> {
    let mut out = Vec::new();
    for v in enumerate_bisaturated(h)? {
        let fs: Vec<usize> = fin_s_over(h, &v).into_iter().collect();
        let tf: Vec<usize> = t_fin_over(h, &v).into_iter().collect();
        subset_guard(fs.len() + tf.len())?;
        for sigma in subsets(&fs) {
            for theta in subsets(&tf) {
                out.push(AdmissibleTriple { v: v.clone(), sigma: sigma.clone(), theta });
            }
        }
    }
    Ok(out)
}

fn inside_of(h: &BHypergraph, class: LambdaClass, v: &VertexSet) -> BTreeSet<usize> {
    h.lambdas_of_class(class).into_iter().filter(|&l| inside(h, l, v)).collect()
}

/// `t₁ ≤ t₂`: `V₁ ⊆ V₂` and every marked hyperedge of `t₁` is marked in
/// `t₂` or lies inside `V₂`.
pub fn at_leq(h: &BHypergraph, t1: &AdmissibleTriple, t2: &AdmissibleTriple) -> bool {
    t1.v.is_subset(&t2.v)
        && t1.sigma.iter().all(|l| t2.sigma.contains(l) || inside(h, *l, &t2.v))
        && t1.theta.iter().all(|l| t2.theta.contains(l) || inside(h, *l, &t2.v))
}

/// Least upper bound: `Ṽ` is the `(Σ₁∪Σ₂, Θ₁∪Θ₂)`-saturation of `V₁ ∪ V₂`,
/// and the markers are the union minus the hyperedges now inside `Ṽ`.
pub fn at_join(h: &BHypergraph, t1: &AdmissibleTriple, t2: &AdmissibleTriple) -> Result<AdmissibleTriple, GraphError> {
    check_triple(h, t1)?;
    check_triple(h, t2)?;
    let sigma: BTreeSet<usize> = t1.sigma.union(&t2.sigma).copied().collect();
    let theta: BTreeSet<usize> = t1.theta.union(&t2.theta).copied().collect();
    let u: VertexSet = t1.v.union(&t2.v).copied().collect();
    let v = sigma_theta_saturation(h, &u, &sigma, &theta);
    let t = AdmissibleTriple {
        sigma: sigma.into_iter().filter(|&l| !inside(h, l, &v)).collect(),
        theta: theta.into_iter().filter(|&l| !inside(h, l, &v)).collect(),
        v,
    };
    debug_assert!(check_triple(h, &t).is_ok());
    Ok(t)
}

/// Greatest lower bound: `V̂ = V₁ ∩ V₂`, and a hyperedge is marked when it
/// is marked in or inside each factor and still open over `V̂`.
pub fn at_meet(h: &BHypergraph, t1: &AdmissibleTriple, t2: &AdmissibleTriple) -> Result<AdmissibleTriple, GraphError> {
    check_triple(h, t1)?;
    check_triple(h, t2)?;
    let v: VertexSet = t1.v.intersection(&t2.v).copied().collect();
    let side = |class, m1: &BTreeSet<usize>, m2: &BTreeSet<usize>, open: BTreeSet<usize>| -> BTreeSet<usize> {
        let a: BTreeSet<usize> = m1.union(&inside_of(h, class, &t1.v)).copied().collect();
        let b: BTreeSet<usize> = m2.union(&inside_of(h, class, &t2.v)).copied().collect();
        a.intersection(&b).copied().filter(|l| open.contains(l)).collect()
    };
    let sigma = side(LambdaClass::FinS, &t1.sigma, &t2.sigma, fin_s_over(h, &v));
    let theta = side(LambdaClass::TFin, &t1.theta, &t2.theta, t_fin_over(h, &v));
    Ok(AdmissibleTriple { v, sigma, theta })
}

/// Generators of the order ideal `I(t)`: the vertices of `V`, `q_λ` for
/// `λ ∈ Θ` and `p_λ` for `λ ∈ Σ`.
pub fn ideal_generators(pres: &HMonoidPres, t: &AdmissibleTriple) -> Vec<MonoidElt> {
    let mut out = Vec::new();
    for &v in &t.v {
        out.push(pres.unit(pres.index(Generator::Vertex(v)).expect("vertex generator"), 1));
    }
    for &l in &t.theta {
        out.push(pres.unit(pres.index(Generator::Q(l)).expect("q generator"), 1));
    }
    for &l in &t.sigma {
        out.push(pres.unit(pres.index(Generator::P(l)).expect("p generator"), 1));
    }
    out
}

/// Sum of a list of monoid elements.
pub fn sum(pres: &HMonoidPres, xs: &[MonoidElt]) -> MonoidElt {
    xs.iter().fold(pres.zero(), |acc, x| add(&acc, x))
}
