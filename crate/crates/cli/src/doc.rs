//! The graph document format: JSON in, validated bi-separated graph (and
//! B-hypergraph when one exists) out, and the reverse export.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use graph_core::{ck_bisep, BHypergraph, BiSepGraph, Graph, GraphError, Lambda, LambdaClass};

use crate::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDoc {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LambdaDoc {
    #[serde(rename = "X")]
    pub x: Vec<String>,
    #[serde(rename = "Y")]
    pub y: Vec<String>,
    pub class: String,
}

/// The on-disk schema. Block maps keep their input order, which fixes the
/// block indices (and hence the forbidden-word table).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub version: u32,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeDoc>,
    #[serde(rename = "C", default, skip_serializing_if = "Option::is_none")]
    pub c: Option<IndexMap<String, Vec<String>>>,
    #[serde(rename = "D", default, skip_serializing_if = "Option::is_none")]
    pub d: Option<IndexMap<String, Vec<String>>>,
    #[serde(rename = "S", default, skip_serializing_if = "Option::is_none")]
    pub s: Option<Vec<String>>,
    #[serde(rename = "T", default, skip_serializing_if = "Option::is_none")]
    pub t: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambdas: Option<IndexMap<String, LambdaDoc>>,
}

/// A resolved document: the bi-separated graph and its B-hypergraph, or the
/// reason none exists.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub graph: BiSepGraph,
    pub hyper: Result<BHypergraph, GraphError>,
}

impl Loaded {
    pub fn from_graph(graph: BiSepGraph) -> Loaded {
        let hyper = BHypergraph::derive(graph.clone());
        Loaded { graph, hyper }
    }

    pub fn from_hyper(h: BHypergraph) -> Loaded {
        Loaded { graph: h.base().clone(), hyper: Ok(h) }
    }

    pub fn hyper(&self) -> Result<&BHypergraph, CliError> {
        self.hyper.as_ref().map_err(|e| CliError::Input(format!("no B-hypergraph structure: {e}")))
    }
}

/// Parses and validates a document. JSON errors carry line and column.
pub fn parse_graph(text: &str) -> Result<Loaded, CliError> {
    let doc: GraphDocument = serde_json::from_str(text).map_err(|e| {
        CliError::Input(format!("invalid graph document at line {}, column {}: {e}", e.line(), e.column()))
    })?;
    resolve(&doc)
}

/// Resolves a parsed document.
///
/// * `C`/`D` absent: the Cuntz–Krieger bi-separation; `S` then lists the
///   vertices whose row block carries relations (default: every non-sink)
///   and `T` must be absent (`T = D`).
/// * `C`/`D` present: `S`/`T` list block ids and default to `∅`.
/// * `lambdas` absent: hyperedges are derived from the block structure.
pub fn resolve(doc: &GraphDocument) -> Result<Loaded, CliError> {
    if doc.version != SCHEMA_VERSION {
        return Err(CliError::Input(format!("unsupported schema version {} (expected {SCHEMA_VERSION})", doc.version)));
    }
    let graph = Graph::new(doc.vertices.iter().cloned(), doc.edges.iter().map(|e| (e.id.clone(), e.src.clone(), e.tgt.clone())))?;
    let bisep = match (&doc.c, &doc.d) {
        (None, None) => {
            if doc.t.is_some() {
                return Err(CliError::Input("\"T\" requires explicit \"C\" and \"D\"".into()));
            }
            let s = match &doc.s {
                None => (0..graph.vertex_count()).filter(|&v| !graph.is_sink(v)).collect(),
                Some(names) => names
                    .iter()
                    .map(|n| graph.vertex_index(n).ok_or_else(|| GraphError::NoSuchVertex(n.clone())))
                    .collect::<Result<Vec<_>, _>>()?,
            };
            ck_bisep(graph, &s)?
        }
        (Some(c), Some(d)) => {
            let blocks = |m: &IndexMap<String, Vec<String>>| m.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
            BiSepGraph::from_named(
                graph,
                blocks(c),
                blocks(d),
                doc.s.as_deref().unwrap_or(&[]),
                doc.t.as_deref().unwrap_or(&[]),
            )?
        }
        _ => return Err(CliError::Input("\"C\" and \"D\" must be given together".into())),
    };
    let Some(lams) = &doc.lambdas else { return Ok(Loaded::from_graph(bisep)) };
    let mut lambdas = Vec::new();
    for (id, l) in lams {
        let class: LambdaClass = l.class.parse().map_err(CliError::Input)?;
        let find = |names: &[String], row: bool| -> Result<Vec<usize>, CliError> {
            names
                .iter()
                .map(|n| {
                    let idx = if row { bisep.row_index(n) } else { bisep.col_index(n) };
                    idx.ok_or_else(|| CliError::Input(format!("hyperedge {id} references unknown block {n}")))
                })
                .collect()
        };
        lambdas.push(Lambda { id: id.clone(), xs: find(&l.x, true)?, ys: find(&l.y, false)?, class });
    }
    let h = BHypergraph::new(bisep, lambdas)?;
    Ok(Loaded::from_hyper(h))
}

/// Exports a graph (with its hyperedges when given) in the explicit form
/// (`C`, `D`, `S`, `T` always present).
pub fn to_document(g: &BiSepGraph, h: Option<&BHypergraph>) -> GraphDocument {
    let gr = g.graph();
    let names = |es: &[usize]| es.iter().map(|&e| gr.edge(e).id.clone()).collect::<Vec<_>>();
    let c = g.rows().iter().map(|b| (b.id.clone(), names(&b.edges))).collect();
    let d = g.cols().iter().map(|b| (b.id.clone(), names(&b.edges))).collect();
    let lambdas = h.map(|h| {
        h.lambdas()
            .iter()
            .map(|l| {
                let doc = LambdaDoc {
                    x: l.xs.iter().map(|&x| g.row(x).id.clone()).collect(),
                    y: l.ys.iter().map(|&y| g.col(y).id.clone()).collect(),
                    class: l.class.to_string(),
                };
                (l.id.clone(), doc)
            })
            .collect()
    });
    GraphDocument {
        version: SCHEMA_VERSION,
        vertices: gr.vertices().to_vec(),
        edges: gr
            .edges()
            .iter()
            .map(|e| EdgeDoc { id: e.id.clone(), src: gr.vertex_name(e.src).into(), tgt: gr.vertex_name(e.tgt).into() })
            .collect(),
        c: Some(c),
        d: Some(d),
        s: Some(g.s_blocks().into_iter().map(|x| g.row(x).id.clone()).collect()),
        t: Some(g.t_blocks().into_iter().map(|y| g.col(y).id.clone()).collect()),
        lambdas,
    }
}
