//! The quotient homomorphism `π : H(Ė) → H(Ė/(V,Σ,Θ))` whose kernel is the
//! order ideal of an admissible triple, the recovery of the triple from
//! that kernel, and the simplicity criterion.

use std::collections::BTreeSet;

use graph_core::saturation::*;
use graph_core::{BHypergraph, GraphError};

use crate::lattice::AdmissibleTriple;
use crate::pres::{add, monoid_equal, presentation, EqResult, Generator, HMonoidPres, MonoidElt};

/// `π` given by the images of the source generators.
#[derive(Clone, Debug)]
pub struct PiHom {
    pub source: HMonoidPres,
    pub target_graph: BHypergraph,
    pub target: HMonoidPres,
    pub images: Vec<MonoidElt>,
}

impl PiHom {
    pub fn apply(&self, x: &[u64]) -> MonoidElt {
        x.iter()
            .zip(&self.images)
            .fold(self.target.zero(), |acc, (&k, img)| add(&acc, &img.iter().map(|c| c * k).collect::<Vec<_>>()))
    }
}

/// Builds `π` for the triple `t`:
/// * `v ↦ 0` for `v ∈ V`, otherwise the same vertex of the quotient;
/// * `q_α ↦ 0` if `s(α) ⊆ V`; `↦ Σ_{X ∈ 𝒳_{α/V}} s̃(X)` if only
///   `r(α) ⊆ V`; `↦ 0` if `α ∈ Θ`; otherwise `q_α̃`;
/// * `p_β` dually (`0` if `r(β) ⊆ V`; `Σ_{Y ∈ 𝒴_{β/V}} r̃(Y)` if only
///   `s(β) ⊆ V`; `0` if `β ∈ Σ`; otherwise `p_β̃`).
pub fn pi_hom(h: &BHypergraph, t: &AdmissibleTriple) -> Result<PiHom, GraphError> {
    let target_graph = quotient_bhypergraph(h, t)?;
    let source = presentation(h);
    let target = presentation(&target_graph);
    let g = h.base().graph();
    let tg = target_graph.base().graph();
    let vertex_image = |v: usize| -> MonoidElt {
        if t.v.contains(&v) {
            target.zero()
        } else {
            let i = tg.vertex_index(g.vertex_name(v)).expect("vertex outside V survives");
            target.unit(target.index(Generator::Vertex(i)).unwrap(), 1)
        }
    };
    let sum_vertices = |vs: Vec<usize>| vs.into_iter().fold(target.zero(), |acc, v| add(&acc, &vertex_image(v)));
    let lambda_gen = |l: usize, q: bool| -> MonoidElt {
        let id = &h.lambda(l).id;
        let tl = target_graph.lambda_index(id).expect("open hyperedge survives in the quotient");
        let gen = if q { Generator::Q(tl) } else { Generator::P(tl) };
        target.unit(target.index(gen).expect("hyperedge keeps its class"), 1)
    };
    let base = h.base();
    let images = source
        .generators
        .iter()
        .map(|&gen| match gen {
            Generator::Vertex(v) => vertex_image(v),
            Generator::Q(a) => {
                if h.s_set(a).is_subset(&t.v) || t.theta.contains(&a) {
                    target.zero()
                } else if h.r_set(a).is_subset(&t.v) {
                    sum_vertices(x_over(h, a, &t.v).into_iter().map(|x| base.row(x).owner).collect())
                } else {
                    lambda_gen(a, true)
                }
            }
            Generator::P(b) => {
                if h.r_set(b).is_subset(&t.v) || t.sigma.contains(&b) {
                    target.zero()
                } else if h.s_set(b).is_subset(&t.v) {
                    sum_vertices(y_over(h, b, &t.v).into_iter().map(|y| base.col(y).owner).collect())
                } else {
                    lambda_gen(b, false)
                }
            }
        })
        .collect();
    Ok(PiHom { source, target_graph, target, images })
}

/// Failure to decide a zero test within the search depth.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Undecided {
    pub generator: String,
}

fn is_zero(pi: &PiHom, x: &[u64], depth: usize) -> Result<bool, String> {
    let y = pi.apply(x);
    match monoid_equal(&pi.target, &y, &pi.target.zero(), depth) {
        EqResult::Equal(_) => Ok(true),
        EqResult::Distinct(_) => Ok(false),
        EqResult::Unknown { .. } => Err(pi.target.format(&y)),
    }
}

/// Recovers a triple from the kernel of `π_t`: `V` is the set of vertices
/// mapped to zero, `Σ`/`Θ` the open hyperedges whose `p`/`q` generator is
/// mapped to zero. For an admissible triple this returns `t` itself.
pub fn recover_triple(h: &BHypergraph, t: &AdmissibleTriple, depth: usize) -> Result<AdmissibleTriple, Undecided> {
    let pi = pi_hom(h, t).map_err(|e| Undecided { generator: e.to_string() })?;
    let mut v = VertexSet::new();
    for x in 0..h.vertex_count() {
        let gen = pi.source.index(Generator::Vertex(x)).unwrap();
        if is_zero(&pi, &pi.source.unit(gen, 1), depth).map_err(|generator| Undecided { generator })? {
            v.insert(x);
        }
    }
    let mut sigma = BTreeSet::new();
    for l in fin_s_over(h, &v) {
        let gen = pi.source.index(Generator::P(l)).unwrap();
        if is_zero(&pi, &pi.source.unit(gen, 1), depth).map_err(|generator| Undecided { generator })? {
            sigma.insert(l);
        }
    }
    let mut theta = BTreeSet::new();
    for l in t_fin_over(h, &v) {
        let gen = pi.source.index(Generator::Q(l)).unwrap();
        if is_zero(&pi, &pi.source.unit(gen, 1), depth).map_err(|generator| Undecided { generator })? {
            theta.insert(l);
        }
    }
    Ok(AdmissibleTriple { v, sigma, theta })
}

/// The monoid is simple exactly when every row block lies in `S`, every
/// column block lies in `T`, and the only bisaturated sets are `∅` and `E⁰`.
pub fn is_monoid_simple(h: &BHypergraph) -> Result<bool, GraphError> {
    let base = h.base();
    let all_two_sided = base.s_blocks().len() == base.rows().len() && base.t_blocks().len() == base.cols().len();
    if !all_two_sided {
        return Ok(false);
    }
    let n = h.vertex_count();
    let sets = enumerate_bisaturated(h)?;
    Ok(sets.iter().all(|v| v.is_empty() || v.len() == n))
}
