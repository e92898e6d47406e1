//! Plain finite directed multigraphs `E = (E⁰, E¹, s, r)`.

use std::collections::HashMap;

use crate::error::GraphError;

/// An edge, stored with indices into the vertex list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub src: usize,
    pub tgt: usize,
}

/// A finite graph with ordered vertex and edge lists. Input order is
/// significant: it drives fallback naming and the forbidden-word choice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    vindex: HashMap<String, usize>,
    eindex: HashMap<String, usize>,
}

impl Graph {
    /// Builds a graph from vertex ids and `(edge id, source id, target id)`
    /// triples, rejecting duplicate ids and dangling references.
    pub fn new<V, E, S>(vertices: V, edges: E) -> Result<Graph, GraphError>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (S, S, S)>,
    {
        let mut g = Graph {
            vertices: Vec::new(),
            edges: Vec::new(),
            vindex: HashMap::new(),
            eindex: HashMap::new(),
        };
        for v in vertices {
            let v = v.into();
            if g.vindex.insert(v.clone(), g.vertices.len()).is_some() {
                return Err(GraphError::DuplicateVertex(v));
            }
            g.vertices.push(v);
        }
        for (id, src, tgt) in edges {
            let (id, src, tgt) = (id.into(), src.into(), tgt.into());
            let s = *g.vindex.get(&src).ok_or_else(|| GraphError::UnknownVertex {
                edge: id.clone(),
                vertex: src.clone(),
            })?;
            let t = *g.vindex.get(&tgt).ok_or_else(|| GraphError::UnknownVertex {
                edge: id.clone(),
                vertex: tgt.clone(),
            })?;
            if g.eindex.insert(id.clone(), g.edges.len()).is_some() {
                return Err(GraphError::DuplicateEdge(id));
            }
            g.edges.push(Edge { id, src: s, tgt: t });
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vindex.get(name).copied()
    }

    pub fn edge_index(&self, name: &str) -> Option<usize> {
        self.eindex.get(name).copied()
    }

    pub fn src(&self, e: usize) -> usize {
        self.edges[e].src
    }

    pub fn tgt(&self, e: usize) -> usize {
        self.edges[e].tgt
    }

    /// `s⁻¹(v)` in input order.
    pub fn out_edges(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len()).filter(|&e| self.edges[e].src == v).collect()
    }

    /// `r⁻¹(v)` in input order.
    pub fn in_edges(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len()).filter(|&e| self.edges[e].tgt == v).collect()
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.edges.iter().all(|e| e.src != v)
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.edges.iter().all(|e| e.tgt != v)
    }

    /// Connected components of the underlying undirected graph, each as a
    /// sorted list of vertex indices, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e.src), find(&mut parent, e.tgt));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut comps: Vec<Vec<usize>> = Vec::new();
        let mut slot: HashMap<usize, usize> = HashMap::new();
        for v in 0..n {
            let r = find(&mut parent, v);
            let i = *slot.entry(r).or_insert_with(|| {
                comps.push(Vec::new());
                comps.len() - 1
            });
            comps[i].push(v);
        }
        comps
    }
}
