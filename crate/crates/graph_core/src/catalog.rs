//! Named example graphs used by tests, benchmarks and the CLI demos.

use crate::bisep::BiSepGraph;
use crate::construct::*;
use crate::graph::Graph;
use crate::hyper::{BHypergraph, LambdaClass};

fn graph(vertices: &[&str], edges: &[(&str, &str, &str)]) -> Graph {
    Graph::new(vertices.iter().copied(), edges.iter().copied()).expect("catalog graph is valid")
}

/// One vertex `v` with loops `e1, …, en`.
pub fn rose(n: usize) -> Graph {
    let names: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
    let edges: Vec<(&str, &str, &str)> = names.iter().map(|e| (e.as_str(), "v", "v")).collect();
    graph(&["v"], &edges)
}

/// The rose with `n` petals and the Leavitt bi-separation (`S = {v}`, `T = D`).
pub fn rose_leavitt(n: usize) -> BiSepGraph {
    ck_bisep(rose(n), &[0]).unwrap()
}

/// The rose with `n` petals and the Cohn bi-separation (`S = ∅`, `T = D`).
pub fn rose_cohn(n: usize) -> BiSepGraph {
    ck_bisep(rose(n), &[]).unwrap()
}

/// The rose with one row block, singleton column blocks and `S = T = ∅`:
/// the free algebra on `e_i, e_i*`.
pub fn rose_free(n: usize) -> BiSepGraph {
    let g = rose(n);
    let rows = vec![("X1".to_string(), (0..n).collect())];
    let cols = (0..n).map(|e| (format!("Y{}", e + 1), vec![e])).collect();
    BiSepGraph::new(g, rows, cols, &[], &[]).unwrap()
}

/// The rose with singleton row and column blocks, `S = C`, `T = D`: the
/// group algebra of the free group on `n` generators.
pub fn rose_separated(n: usize) -> BiSepGraph {
    separated_bisep(rose(n), (0..n).map(|e| vec![e]).collect(), &(0..n).collect::<Vec<_>>()).unwrap()
}

/// The line graph `v1 → v2 → … → vn` (edges `e1, …, e(n−1)`) with the
/// standard bi-separation; its algebra is `M_n(K)`.
pub fn line(n: usize) -> BiSepGraph {
    let vs: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let es: Vec<(String, String, String)> =
        (1..n).map(|i| (format!("e{i}"), format!("v{i}"), format!("v{}", i + 1))).collect();
    let g = Graph::new(vs, es).unwrap();
    standard_bisep(g).unwrap()
}

/// The hypergraph `H(m, n)`: one vertex `v`, one hyperedge `x` with `m`
/// sources and `n` ranges (edges `x_i_j`). Its algebra is the Leavitt
/// algebra of type `(m, n)`.
pub fn hmn(m: usize, n: usize) -> BHypergraph {
    let src = vec!["v"; m];
    let rng = vec!["v"; n];
    hypergraph_bisep(&["v"], &[HyperEdge::new("x", &src, &rng)]).unwrap()
}

/// A single edge `u → w` with the Cohn bi-separation (`S = ∅`).
pub fn cohn_edge() -> BiSepGraph {
    ck_bisep(graph(&["u", "w"], &[("e", "u", "w")]), &[]).unwrap()
}

/// The fixture corpus: every constructor family, Leavitt/Cohn/mixed
/// relation sets, sinks, sources and edge-free graphs.
pub fn corpus() -> Vec<(&'static str, BiSepGraph)> {
    let two_cycle = graph(&["u", "w"], &[("e", "u", "w"), ("f", "w", "u")]);
    let lollipop = graph(&["u", "w"], &[("a", "u", "u"), ("b", "u", "w")]);
    let triangle = graph(&["a", "b", "c"], &[("e1", "a", "b"), ("e2", "b", "c"), ("e3", "a", "c")]);
    let mixed = graph(&["u", "w", "z"], &[("e", "u", "w"), ("f", "u", "z"), ("g", "w", "w"), ("h", "z", "u")]);
    let hyper_mixed = hypergraph_bisep(
        &["u", "w"],
        &[
            HyperEdge::new("h1", &["u", "w"], &["u"]),
            HyperEdge::new("h2", &["w"], &["u", "w"]).with_class(LambdaClass::TFin),
            HyperEdge::new("h3", &["u"], &["w", "w"]).with_class(LambdaClass::FinS),
        ],
    )
    .unwrap();
    let hyper_two = hypergraph_bisep(
        &["u", "w"],
        &[HyperEdge::new("h", &["u", "w"], &["u"]), HyperEdge::new("k", &["u"], &["w", "u"])],
    )
    .unwrap();
    vec![
        ("loop_leavitt", rose_leavitt(1)),
        ("loop_cohn", rose_cohn(1)),
        ("rose2_leavitt", rose_leavitt(2)),
        ("rose3_leavitt", rose_leavitt(3)),
        ("rose2_cohn", rose_cohn(2)),
        ("rose2_separated", rose_separated(2)),
        ("rose2_free", rose_free(2)),
        ("rose3_separated_mixed", separated_bisep(rose(3), vec![vec![0, 1], vec![2]], &[0]).unwrap()),
        ("two_cycle_leavitt", ck_leavitt(two_cycle.clone()).unwrap()),
        ("two_cycle_half", ck_bisep(two_cycle, &[0]).unwrap()),
        ("lollipop_leavitt", ck_leavitt(lollipop.clone()).unwrap()),
        ("lollipop_cohn", ck_bisep(lollipop.clone(), &[]).unwrap()),
        ("cohn_edge", cohn_edge()),
        ("line2", line(2)),
        ("line3", line(3)),
        ("line4", line(4)),
        ("triangle_standard", standard_bisep(triangle.clone()).unwrap()),
        ("triangle_trivial", trivial_bisep(triangle).unwrap()),
        ("mixed_ck", ck_bisep(mixed, &[0, 2]).unwrap()),
        ("weighted_loop2", weighted_bisep(&rose(1), &[2]).unwrap()),
        ("weighted_rose2", weighted_bisep(&rose(2), &[2, 2]).unwrap()),
        ("weighted_lollipop", weighted_bisep(&lollipop, &[2, 1]).unwrap()),
        ("h12", hmn(1, 2).base().clone()),
        ("h22", hmn(2, 2).base().clone()),
        ("h23", hmn(2, 3).base().clone()),
        ("h32", hmn(3, 2).base().clone()),
        ("hyper_two", hyper_two.base().clone()),
        ("hyper_mixed", hyper_mixed.base().clone()),
        ("point", ck_leavitt(graph(&["v"], &[])).unwrap()),
        ("two_points", ck_leavitt(graph(&["a", "b"], &[])).unwrap()),
    ]
}
