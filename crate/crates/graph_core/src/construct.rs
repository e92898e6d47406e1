//! The standard families of bi-separations: Cuntz–Krieger (and Cohn),
//! weighted, hypergraph, separated, standard and trivial.

use crate::bisep::BiSepGraph;
use crate::error::GraphError;
use crate::graph::Graph;
use crate::hyper::{BHypergraph, Lambda, LambdaClass};

fn discrete_cols(g: &Graph) -> Vec<(String, Vec<usize>)> {
    (0..g.edge_count()).map(|e| (format!("Y{}", e + 1), vec![e])).collect()
}

/// Cuntz–Krieger style bi-separation: one row block `s⁻¹(v)` per non-sink
/// `v`, singleton column blocks, `S` = the row blocks of the given
/// vertices, `T = D`. With `S = ∅` this is the Cohn algebra.
pub fn ck_bisep(g: Graph, s_vertices: &[usize]) -> Result<BiSepGraph, GraphError> {
    let mut rows = Vec::new();
    let mut owner = Vec::new();
    for v in 0..g.vertex_count() {
        let out = g.out_edges(v);
        if !out.is_empty() {
            rows.push((format!("X{}", rows.len() + 1), out));
            owner.push(v);
        }
    }
    let mut s = Vec::new();
    for &v in s_vertices {
        if v >= g.vertex_count() {
            return Err(GraphError::NoSuchVertex(v.to_string()));
        }
        match owner.iter().position(|&o| o == v) {
            Some(x) => s.push(x),
            None => return Err(GraphError::SinkInS(g.vertex_name(v).to_string())),
        }
    }
    let cols = discrete_cols(&g);
    let t: Vec<usize> = (0..cols.len()).collect();
    BiSepGraph::new(g, rows, cols, &s, &t)
}

/// The Leavitt (Cuntz–Krieger) bi-separation with `S` = every non-sink.
pub fn ck_leavitt(g: Graph) -> Result<BiSepGraph, GraphError> {
    let regular: Vec<usize> = (0..g.vertex_count()).filter(|&v| !g.is_sink(v)).collect();
    ck_bisep(g, &regular)
}

/// Weighted bi-separation: each edge `e` of weight `w(e)` becomes edges
/// `e_1, …, e_w(e)`; for each non-sink `v` with `w(v) = max w(s⁻¹(v))` the row
/// blocks are `X_v^i = {e_i : s(e) = v, w(e) ≥ i}`, `i = 1..w(v)`; each edge
/// gives the column block `Y^e = {e_1, …, e_w(e)}` owned by `r(e)`; `S = C`,
/// `T = D`.
pub fn weighted_bisep(g: &Graph, w: &[u32]) -> Result<BiSepGraph, GraphError> {
    if w.len() != g.edge_count() {
        return Err(GraphError::BadWeight("weight vector length".into()));
    }
    if let Some(e) = (0..w.len()).find(|&e| w[e] == 0) {
        return Err(GraphError::BadWeight(g.edge(e).id.clone()));
    }
    let mut edges = Vec::new();
    let mut copy_index = Vec::new(); // (original edge, copy i) per new edge
    for (e, ed) in g.edges().iter().enumerate() {
        for i in 1..=w[e] {
            edges.push((
                format!("{}_{}", ed.id, i),
                g.vertex_name(ed.src).to_string(),
                g.vertex_name(ed.tgt).to_string(),
            ));
            copy_index.push((e, i));
        }
    }
    let gw = Graph::new(g.vertices().iter().cloned(), edges)?;
    let mut rows = Vec::new();
    for v in 0..g.vertex_count() {
        let wv = g.out_edges(v).iter().map(|&e| w[e]).max().unwrap_or(0);
        for i in 1..=wv {
            let block: Vec<usize> = (0..copy_index.len())
                .filter(|&ne| g.src(copy_index[ne].0) == v && copy_index[ne].1 == i)
                .collect();
            rows.push((format!("X{}", rows.len() + 1), block));
        }
    }
    let cols: Vec<(String, Vec<usize>)> = (0..g.edge_count())
        .map(|e| {
            let block = (0..copy_index.len()).filter(|&ne| copy_index[ne].0 == e).collect();
            (format!("Y{}", e + 1), block)
        })
        .collect();
    let s: Vec<usize> = (0..rows.len()).collect();
    let t: Vec<usize> = (0..cols.len()).collect();
    BiSepGraph::new(gw, rows, cols, &s, &t)
}

/// Abstract hypergraph input: a hyperedge with an indexed family of sources
/// `(u_1, …, u_m)`, an indexed family of ranges `(w_1, …, w_n)` and a class
/// (`TS` for an ordinary hypergraph).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperEdge {
    pub id: String,
    pub sources: Vec<String>,
    pub ranges: Vec<String>,
    pub class: LambdaClass,
}

impl HyperEdge {
    pub fn new(id: &str, sources: &[&str], ranges: &[&str]) -> HyperEdge {
        HyperEdge {
            id: id.to_string(),
            sources: sources.iter().map(|s| s.to_string()).collect(),
            ranges: ranges.iter().map(|s| s.to_string()).collect(),
            class: LambdaClass::TS,
        }
    }

    pub fn with_class(mut self, class: LambdaClass) -> HyperEdge {
        self.class = class;
        self
    }
}

/// Hypergraph bi-separation: hyperedge `h` with sources `u_1..u_m` and
/// ranges `w_1..w_n` contributes edges `h_i_j : u_i → w_j`, row blocks
/// `X_h^i = {h_i_j}_j`, column blocks `Y_h^j = {h_i_j}_i` and one hyperedge
/// `λ_h` of the given class.
pub fn hypergraph_bisep(vertices: &[&str], hyperedges: &[HyperEdge]) -> Result<BHypergraph, GraphError> {
    let mut edges = Vec::new();
    for h in hyperedges {
        for (i, u) in h.sources.iter().enumerate() {
            for (j, w) in h.ranges.iter().enumerate() {
                edges.push((format!("{}_{}_{}", h.id, i + 1, j + 1), u.clone(), w.clone()));
            }
        }
    }
    let g = Graph::new(vertices.iter().map(|v| v.to_string()), edges)?;
    let mut rows = Vec::new();
    let mut cols = Vec::new();
    let mut s = Vec::new();
    let mut t = Vec::new();
    let mut lambdas = Vec::new();
    let mut base = 0;
    for h in hyperedges {
        if matches!(h.class, LambdaClass::InfS | LambdaClass::TInf) {
            return Err(GraphError::NotBHypergraph(format!("hyperedge {} has an infinite class", h.id)));
        }
        let (m, n) = (h.sources.len(), h.ranges.len());
        if m == 0 || n == 0 {
            return Err(GraphError::NotBHypergraph(format!("hyperedge {} has an empty side", h.id)));
        }
        let mut xs = Vec::new();
        for i in 0..m {
            if h.class.rows_in_s() {
                s.push(rows.len());
            }
            xs.push(rows.len());
            rows.push((format!("X{}", rows.len() + 1), (0..n).map(|j| base + i * n + j).collect()));
        }
        let mut ys = Vec::new();
        for j in 0..n {
            if h.class.cols_in_t() {
                t.push(cols.len());
            }
            ys.push(cols.len());
            cols.push((format!("Y{}", cols.len() + 1), (0..m).map(|i| base + i * n + j).collect()));
        }
        lambdas.push(Lambda { id: h.id.clone(), xs, ys, class: h.class });
        base += m * n;
    }
    let bs = BiSepGraph::new(g, rows, cols, &s, &t)?;
    BHypergraph::new(bs, lambdas)
}

/// Separated-graph bi-separation: the given row partition `C` (blocks by
/// edge index), singleton column blocks, `S` as given (row block indices)
/// and `T = D`.
pub fn separated_bisep(g: Graph, c: Vec<Vec<usize>>, s: &[usize]) -> Result<BiSepGraph, GraphError> {
    let rows: Vec<(String, Vec<usize>)> = c.into_iter().enumerate().map(|(i, b)| (format!("X{}", i + 1), b)).collect();
    let cols = discrete_cols(&g);
    let t: Vec<usize> = (0..cols.len()).collect();
    BiSepGraph::new(g, rows, cols, s, &t)
}

/// Standard bi-separation of a graph without parallel edges: `C_v = {s⁻¹(v)}`,
/// `D_v = {r⁻¹(v)}`, `S = C`, `T = D`.
pub fn standard_bisep(g: Graph) -> Result<BiSepGraph, GraphError> {
    for a in 0..g.edge_count() {
        for b in a + 1..g.edge_count() {
            if g.src(a) == g.src(b) && g.tgt(a) == g.tgt(b) {
                return Err(GraphError::NotSimple(g.edge(a).id.clone(), g.edge(b).id.clone()));
            }
        }
    }
    let mut rows = Vec::new();
    let mut cols = Vec::new();
    for v in 0..g.vertex_count() {
        let out = g.out_edges(v);
        if !out.is_empty() {
            rows.push((format!("X{}", rows.len() + 1), out));
        }
    }
    for v in 0..g.vertex_count() {
        let inn = g.in_edges(v);
        if !inn.is_empty() {
            cols.push((format!("Y{}", cols.len() + 1), inn));
        }
    }
    let s: Vec<usize> = (0..rows.len()).collect();
    let t: Vec<usize> = (0..cols.len()).collect();
    BiSepGraph::new(g, rows, cols, &s, &t)
}

/// Trivial bi-separation: singleton row and column blocks, `S = C`, `T = D`.
pub fn trivial_bisep(g: Graph) -> Result<BiSepGraph, GraphError> {
    let rows: Vec<(String, Vec<usize>)> = (0..g.edge_count()).map(|e| (format!("X{}", e + 1), vec![e])).collect();
    let cols = discrete_cols(&g);
    let s: Vec<usize> = (0..rows.len()).collect();
    let t: Vec<usize> = (0..cols.len()).collect();
    BiSepGraph::new(g, rows, cols, &s, &t)
}
