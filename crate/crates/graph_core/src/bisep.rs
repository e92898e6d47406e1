//! Bi-separated graphs `Ė = (E, C, D, S, T)`.

use std::collections::{HashMap, HashSet};

use crate::error::{GraphError, Violation};
use crate::graph::Graph;

/// A row block (`X ∈ C`, owned by its common source) or a column block
/// (`Y ∈ D`, owned by its common range). Edges are kept in input order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub id: String,
    pub owner: usize,
    pub edges: Vec<usize>,
}

/// A finite bi-separated graph. Immutable once built; every constructor
/// runs the full validator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSepGraph {
    graph: Graph,
    rows: Vec<Block>,
    cols: Vec<Block>,
    in_s: Vec<bool>,
    in_t: Vec<bool>,
    row_of: Vec<usize>,
    col_of: Vec<usize>,
    meet: HashMap<(usize, usize), usize>,
}

impl BiSepGraph {
    /// Builds a bi-separated graph from blocks given as edge-index lists.
    /// `s` and `t` are indices into `rows` and `cols`.
    pub fn new(
        graph: Graph,
        rows: Vec<(String, Vec<usize>)>,
        cols: Vec<(String, Vec<usize>)>,
        s: &[usize],
        t: &[usize],
    ) -> Result<BiSepGraph, GraphError> {
        let mut violations = Vec::new();
        let m = graph.edge_count();
        let mut check_blocks = |blocks: &[(String, Vec<usize>)], is_row: bool| -> Vec<Option<usize>> {
            let mut owner_of = vec![None; m];
            let mut seen_ids = HashSet::new();
            let mut dup_edges = HashSet::new();
            for (bi, (id, edges)) in blocks.iter().enumerate() {
                if !seen_ids.insert(id.clone()) {
                    violations.push(Violation::DuplicateBlock(id.clone()));
                }
                if edges.is_empty() {
                    violations.push(Violation::EmptyBlock(id.clone()));
                    continue;
                }
                let end = |e: usize| if is_row { graph.src(e) } else { graph.tgt(e) };
                if edges.iter().any(|&e| e >= m) {
                    violations.push(Violation::UnknownEdgeInBlock { block: id.clone(), edge: "?".into() });
                    continue;
                }
                if edges.iter().any(|&e| end(e) != end(edges[0])) {
                    violations.push(if is_row {
                        Violation::RowBlockMixedSource(id.clone())
                    } else {
                        Violation::ColBlockMixedRange(id.clone())
                    });
                }
                for &e in edges {
                    if owner_of[e].is_some() {
                        dup_edges.insert(e);
                    } else {
                        owner_of[e] = Some(bi);
                    }
                }
            }
            for e in 0..m {
                let name = graph.edge(e).id.clone();
                if dup_edges.contains(&e) {
                    violations.push(if is_row {
                        Violation::EdgeInSeveralRowBlocks(name)
                    } else {
                        Violation::EdgeInSeveralColBlocks(name)
                    });
                } else if owner_of[e].is_none() {
                    violations.push(if is_row {
                        Violation::EdgeInNoRowBlock(name)
                    } else {
                        Violation::EdgeInNoColBlock(name)
                    });
                }
            }
            owner_of
        };
        let row_of = check_blocks(&rows, true);
        let col_of = check_blocks(&cols, false);
        for &x in s {
            if x >= rows.len() {
                violations.push(Violation::UnknownSBlock(x.to_string()));
            }
        }
        for &y in t {
            if y >= cols.len() {
                violations.push(Violation::UnknownTBlock(y.to_string()));
            }
        }
        let mut meet = HashMap::new();
        let mut reported = HashSet::new();
        for e in 0..m {
            if let (Some(x), Some(y)) = (row_of[e], col_of[e]) {
                if meet.insert((x, y), e).is_some() && reported.insert((x, y)) {
                    violations.push(Violation::BlocksMeetTwice {
                        row: rows[x].0.clone(),
                        col: cols[y].0.clone(),
                    });
                }
            }
        }
        if !violations.is_empty() {
            return Err(GraphError::Invalid(violations));
        }
        let mk = |blocks: Vec<(String, Vec<usize>)>, is_row: bool| -> Vec<Block> {
            blocks
                .into_iter()
                .map(|(id, mut edges)| {
                    edges.sort_unstable();
                    let owner = if is_row { graph.src(edges[0]) } else { graph.tgt(edges[0]) };
                    Block { id, owner, edges }
                })
                .collect()
        };
        let rows = mk(rows, true);
        let cols = mk(cols, false);
        let mut in_s = vec![false; rows.len()];
        for &x in s {
            in_s[x] = true;
        }
        let mut in_t = vec![false; cols.len()];
        for &y in t {
            in_t[y] = true;
        }
        Ok(BiSepGraph {
            graph,
            rows,
            cols,
            in_s,
            in_t,
            row_of: row_of.into_iter().map(|x| x.unwrap()).collect(),
            col_of: col_of.into_iter().map(|x| x.unwrap()).collect(),
            meet,
        })
    }

    /// Same as [`BiSepGraph::new`] but with blocks, `S` and `T` given by name.
    pub fn from_named(
        graph: Graph,
        rows: Vec<(String, Vec<String>)>,
        cols: Vec<(String, Vec<String>)>,
        s: &[String],
        t: &[String],
    ) -> Result<BiSepGraph, GraphError> {
        let resolve = |blocks: Vec<(String, Vec<String>)>| -> Result<Vec<(String, Vec<usize>)>, GraphError> {
            blocks
                .into_iter()
                .map(|(id, es)| {
                    let idx = es
                        .iter()
                        .map(|e| {
                            graph.edge_index(e).ok_or_else(|| {
                                GraphError::Invalid(vec![Violation::UnknownEdgeInBlock {
                                    block: id.clone(),
                                    edge: e.clone(),
                                }])
                            })
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    Ok((id, idx))
                })
                .collect()
        };
        let rows = resolve(rows)?;
        let cols = resolve(cols)?;
        let find = |blocks: &[(String, Vec<usize>)], name: &String, row: bool| {
            blocks.iter().position(|(id, _)| id == name).ok_or_else(|| {
                GraphError::Invalid(vec![if row {
                    Violation::UnknownSBlock(name.clone())
                } else {
                    Violation::UnknownTBlock(name.clone())
                }])
            })
        };
        let s = s.iter().map(|n| find(&rows, n, true)).collect::<Result<Vec<_>, _>>()?;
        let t = t.iter().map(|n| find(&cols, n, false)).collect::<Result<Vec<_>, _>>()?;
        BiSepGraph::new(graph, rows, cols, &s, &t)
    }

    /// Re-runs the full validator on the stored parts.
    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        let rows = self.rows.iter().map(|b| (b.id.clone(), b.edges.clone())).collect();
        let cols = self.cols.iter().map(|b| (b.id.clone(), b.edges.clone())).collect();
        match BiSepGraph::new(self.graph.clone(), rows, cols, &self.s_blocks(), &self.t_blocks()) {
            Ok(_) => Ok(()),
            Err(GraphError::Invalid(v)) => Err(v),
            Err(e) => Err(vec![Violation::EmptyBlock(e.to_string())]),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rows(&self) -> &[Block] {
        &self.rows
    }

    pub fn cols(&self) -> &[Block] {
        &self.cols
    }

    pub fn row(&self, x: usize) -> &Block {
        &self.rows[x]
    }

    pub fn col(&self, y: usize) -> &Block {
        &self.cols[y]
    }

    pub fn in_s(&self, x: usize) -> bool {
        self.in_s[x]
    }

    pub fn in_t(&self, y: usize) -> bool {
        self.in_t[y]
    }

    /// Indices of the row blocks in `S`, in input order.
    pub fn s_blocks(&self) -> Vec<usize> {
        (0..self.rows.len()).filter(|&x| self.in_s[x]).collect()
    }

    /// Indices of the column blocks in `T`, in input order.
    pub fn t_blocks(&self) -> Vec<usize> {
        (0..self.cols.len()).filter(|&y| self.in_t[y]).collect()
    }

    /// The row block containing edge `e`.
    pub fn row_of(&self, e: usize) -> usize {
        self.row_of[e]
    }

    /// The column block containing edge `e`.
    pub fn col_of(&self, e: usize) -> usize {
        self.col_of[e]
    }

    /// The unique edge of `X ∩ Y`, if any.
    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        self.meet.get(&(x, y)).copied()
    }

    /// Column blocks meeting row block `x`, in column input order.
    pub fn cols_meeting(&self, x: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.rows[x].edges.iter().map(|&e| self.col_of[e]).collect();
        v.sort_unstable();
        v
    }

    /// Row blocks meeting column block `y`, in row input order.
    pub fn rows_meeting(&self, y: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.cols[y].edges.iter().map(|&e| self.row_of[e]).collect();
        v.sort_unstable();
        v
    }

    pub fn row_index(&self, id: &str) -> Option<usize> {
        self.rows.iter().position(|b| b.id == id)
    }

    pub fn col_index(&self, id: &str) -> Option<usize> {
        self.cols.iter().position(|b| b.id == id)
    }

    /// True when the underlying graph is connected (and nonempty).
    pub fn is_connected(&self) -> bool {
        self.graph.components().len() == 1
    }

    /// Splits into the bi-separated graphs induced on the connected
    /// components of the underlying graph. Blocks never straddle
    /// components because all edges of a block share an endpoint.
    pub fn connected_components(&self) -> Vec<BiSepGraph> {
        self.graph
            .components()
            .into_iter()
            .map(|comp| self.induced(&comp))
            .collect()
    }

    /// The bi-separated graph induced on a vertex set closed under the
    /// component relation (every edge with one end inside has both inside).
    fn induced(&self, verts: &[usize]) -> BiSepGraph {
        let keep: HashSet<usize> = verts.iter().copied().collect();
        let g = &self.graph;
        let edges: Vec<usize> = (0..g.edge_count()).filter(|&e| keep.contains(&g.src(e))).collect();
        let new_edge: HashMap<usize, usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let sub = Graph::new(
            verts.iter().map(|&v| g.vertex_name(v).to_string()),
            edges.iter().map(|&e| {
                let ed = g.edge(e);
                (ed.id.clone(), g.vertex_name(ed.src).to_string(), g.vertex_name(ed.tgt).to_string())
            }),
        )
        .expect("induced subgraph of a valid graph is valid");
        let pick = |blocks: &[Block], flags: &[bool]| {
            let mut out = Vec::new();
            let mut marked = Vec::new();
            for (i, b) in blocks.iter().enumerate() {
                if keep.contains(&b.owner) {
                    if flags[i] {
                        marked.push(out.len());
                    }
                    out.push((b.id.clone(), b.edges.iter().map(|e| new_edge[e]).collect::<Vec<_>>()));
                }
            }
            (out, marked)
        };
        let (rows, s) = pick(&self.rows, &self.in_s);
        let (cols, t) = pick(&self.cols, &self.in_t);
        BiSepGraph::new(sub, rows, cols, &s, &t).expect("induced bi-separation is valid")
    }

    /// Vertices `v` that own at least one row block in `S`
    /// (the vertices carrying a row relation).
    pub fn row_regular_vertices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.s_blocks().iter().map(|&x| self.rows[x].owner).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// The output of [`lambda_partition`]: the `∼_T`-classes of `S₁` paired with
/// the `∼_S`-classes of `T₁`, and the leftover blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaPartition {
    /// Each entry is `(𝒳_λ, 𝒴_λ)` as row/column block indices.
    pub classes: Vec<(Vec<usize>, Vec<usize>)>,
    /// `S₂`: blocks of `S` meeting no block of `T`.
    pub s_rest: Vec<usize>,
    /// `T₂`: blocks of `T` meeting no block of `S`.
    pub t_rest: Vec<usize>,
    /// All blocks are finite for finite graphs, so the decomposition is tame.
    pub tame: bool,
}

/// Computes the classes of `S₁ = {X ∈ S : X meets some Y ∈ T}` under the
/// equivalence generated by "meet a common `Y ∈ T`", together with the
/// matching classes of `T₁`. Each class of `S₁` meets exactly one class of
/// `T₁`, which gives the indexing bijection.
pub fn lambda_partition(g: &BiSepGraph) -> LambdaPartition {
    let nr = g.rows().len();
    let nc = g.cols().len();
    // union-find over row blocks [0, nr) and column blocks [nr, nr+nc)
    let mut parent: Vec<usize> = (0..nr + nc).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut s1 = vec![false; nr];
    let mut t1 = vec![false; nc];
    for x in g.s_blocks() {
        for y in g.cols_meeting(x) {
            if g.in_t(y) {
                s1[x] = true;
                t1[y] = true;
                let (a, b) = (find(&mut parent, x), find(&mut parent, nr + y));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut classes: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    let mut slot: HashMap<usize, usize> = HashMap::new();
    for x in 0..nr {
        if s1[x] {
            let r = find(&mut parent, x);
            let i = *slot.entry(r).or_insert_with(|| {
                classes.push((Vec::new(), Vec::new()));
                classes.len() - 1
            });
            classes[i].0.push(x);
        }
    }
    for y in 0..nc {
        if t1[y] {
            let r = find(&mut parent, nr + y);
            classes[slot[&r]].1.push(y);
        }
    }
    LambdaPartition {
        classes,
        s_rest: g.s_blocks().into_iter().filter(|&x| !s1[x]).collect(),
        t_rest: g.t_blocks().into_iter().filter(|&y| !t1[y]).collect(),
        tame: true,
    }
}
