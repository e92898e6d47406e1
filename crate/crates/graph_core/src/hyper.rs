//! B-hypergraphs: a bi-separated graph whose blocks are grouped into
//! hyperedges `λ` with block families `𝒳_λ ⊆ C`, `𝒴_λ ⊆ D` and a class tag.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::bisep::BiSepGraph;
use crate::error::{GraphError, Violation};

/// Which relations a hyperedge imposes.
///
/// * `TS`: `𝒳_λ ⊆ S`, `𝒴_λ ⊆ T` (two-sided).
/// * `FinS`: `𝒳_λ ⊆ S`, `𝒴_λ ⊆ D_fin − T`.
/// * `TFin`: `𝒳_λ ⊆ C_fin − S`, `𝒴_λ ⊆ T`.
/// * `InfS`, `TInf`: the infinite counterparts; never valid for finite graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LambdaClass {
    TS,
    FinS,
    InfS,
    TFin,
    TInf,
}

impl LambdaClass {
    /// True when the row side carries relations (`𝒳_λ ⊆ S`).
    pub fn rows_in_s(self) -> bool {
        matches!(self, LambdaClass::TS | LambdaClass::FinS | LambdaClass::InfS)
    }

    /// True when the column side carries relations (`𝒴_λ ⊆ T`).
    pub fn cols_in_t(self) -> bool {
        matches!(self, LambdaClass::TS | LambdaClass::TFin | LambdaClass::TInf)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            LambdaClass::TS => "TS",
            LambdaClass::FinS => "FinS",
            LambdaClass::InfS => "InfS",
            LambdaClass::TFin => "TFin",
            LambdaClass::TInf => "TInf",
        }
    }
}

impl fmt::Display for LambdaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LambdaClass {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "TS" => Ok(LambdaClass::TS),
            "FinS" => Ok(LambdaClass::FinS),
            "InfS" => Ok(LambdaClass::InfS),
            "TFin" => Ok(LambdaClass::TFin),
            "TInf" => Ok(LambdaClass::TInf),
            other => Err(format!("unknown hyperedge class {other}")),
        }
    }
}

/// One hyperedge: block families as indices into the base graph's row and
/// column blocks (sorted).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lambda {
    pub id: String,
    pub xs: Vec<usize>,
    pub ys: Vec<usize>,
    pub class: LambdaClass,
}

/// A validated finite B-hypergraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BHypergraph {
    base: BiSepGraph,
    lambdas: Vec<Lambda>,
    lambda_of_row: Vec<usize>,
    lambda_of_col: Vec<usize>,
}

impl BHypergraph {
    /// Validates the B-hypergraph conditions: open blocks never meet,
    /// blocks of distinct hyperedges never meet, each hyperedge is
    /// complete bipartite, and the classes partition `S`, `T`, `C − S`,
    /// `D − T` as their tags require.
    pub fn new(base: BiSepGraph, mut lambdas: Vec<Lambda>) -> Result<BHypergraph, GraphError> {
        let mut v = Vec::new();
        let nr = base.rows().len();
        let nc = base.cols().len();
        let mut lambda_of_row: Vec<Vec<usize>> = vec![Vec::new(); nr];
        let mut lambda_of_col: Vec<Vec<usize>> = vec![Vec::new(); nc];
        for (li, l) in lambdas.iter_mut().enumerate() {
            l.xs.sort_unstable();
            l.xs.dedup();
            l.ys.sort_unstable();
            l.ys.dedup();
            if matches!(l.class, LambdaClass::InfS | LambdaClass::TInf) {
                v.push(Violation::InfiniteClass(l.id.clone()));
            }
            if l.xs.is_empty() || l.ys.is_empty() {
                v.push(Violation::EmptyLambdaSide(l.id.clone()));
            }
            for &x in &l.xs {
                if x >= nr {
                    v.push(Violation::UnknownLambdaBlock { lambda: l.id.clone(), block: x.to_string() });
                    continue;
                }
                lambda_of_row[x].push(li);
                if base.in_s(x) != l.class.rows_in_s() {
                    v.push(Violation::ClassMismatch { lambda: l.id.clone(), block: base.row(x).id.clone() });
                }
            }
            for &y in &l.ys {
                if y >= nc {
                    v.push(Violation::UnknownLambdaBlock { lambda: l.id.clone(), block: y.to_string() });
                    continue;
                }
                lambda_of_col[y].push(li);
                if base.in_t(y) != l.class.cols_in_t() {
                    v.push(Violation::ClassMismatch { lambda: l.id.clone(), block: base.col(y).id.clone() });
                }
            }
            for &x in l.xs.iter().filter(|&&x| x < nr) {
                for &y in l.ys.iter().filter(|&&y| y < nc) {
                    if base.meet(x, y).is_none() {
                        v.push(Violation::LambdaNotComplete {
                            lambda: l.id.clone(),
                            row: base.row(x).id.clone(),
                            col: base.col(y).id.clone(),
                        });
                    }
                }
            }
        }
        for x in 0..nr {
            match lambda_of_row[x].len() {
                0 => v.push(Violation::BlockNotCovered(base.row(x).id.clone())),
                1 => {}
                _ => v.push(Violation::BlockCoveredTwice(base.row(x).id.clone())),
            }
        }
        for y in 0..nc {
            match lambda_of_col[y].len() {
                0 => v.push(Violation::BlockNotCovered(base.col(y).id.clone())),
                1 => {}
                _ => v.push(Violation::BlockCoveredTwice(base.col(y).id.clone())),
            }
        }
        for e in 0..base.graph().edge_count() {
            let (x, y) = (base.row_of(e), base.col_of(e));
            let (rx, cy) = (base.row(x).id.clone(), base.col(y).id.clone());
            if !base.in_s(x) && !base.in_t(y) {
                v.push(Violation::OpenBlocksMeet { row: rx.clone(), col: cy.clone() });
            }
            if lambda_of_row[x].len() == 1 && lambda_of_col[y].len() == 1 && lambda_of_row[x][0] != lambda_of_col[y][0] {
                v.push(Violation::DistinctLambdasMeet { row: rx, col: cy });
            }
        }
        if !v.is_empty() {
            return Err(GraphError::Invalid(v));
        }
        Ok(BHypergraph {
            base,
            lambdas,
            lambda_of_row: lambda_of_row.into_iter().map(|l| l[0]).collect(),
            lambda_of_col: lambda_of_col.into_iter().map(|l| l[0]).collect(),
        })
    }

    /// Derives the hyperedge structure from a bi-separated graph: the
    /// hyperedges are the connected components of the "blocks meet"
    /// relation on `C ⊔ D`, classified by membership in `S` and `T`.
    /// Fails when the graph is not a B-hypergraph (a component mixes
    /// classes, an open row block meets an open column block, or a
    /// component is not complete bipartite). Hyperedges are named
    /// `lam1, lam2, …` in the order of their first row block.
    pub fn derive(base: BiSepGraph) -> Result<BHypergraph, GraphError> {
        let nr = base.rows().len();
        let nc = base.cols().len();
        let mut comp_row = vec![usize::MAX; nr];
        let mut comp_col = vec![usize::MAX; nc];
        let mut lambdas = Vec::new();
        for x0 in 0..nr {
            if comp_row[x0] != usize::MAX {
                continue;
            }
            let c = lambdas.len();
            let (mut xs, mut ys) = (vec![x0], Vec::new());
            comp_row[x0] = c;
            let mut stack = vec![(true, x0)];
            while let Some((is_row, i)) = stack.pop() {
                if is_row {
                    for y in base.cols_meeting(i) {
                        if comp_col[y] == usize::MAX {
                            comp_col[y] = c;
                            ys.push(y);
                            stack.push((false, y));
                        }
                    }
                } else {
                    for x in base.rows_meeting(i) {
                        if comp_row[x] == usize::MAX {
                            comp_row[x] = c;
                            xs.push(x);
                            stack.push((true, x));
                        }
                    }
                }
            }
            let all_s = xs.iter().all(|&x| base.in_s(x));
            let no_s = xs.iter().all(|&x| !base.in_s(x));
            let all_t = ys.iter().all(|&y| base.in_t(y));
            let no_t = ys.iter().all(|&y| !base.in_t(y));
            let class = if all_s && all_t {
                LambdaClass::TS
            } else if all_s && no_t {
                LambdaClass::FinS
            } else if no_s && all_t {
                LambdaClass::TFin
            } else {
                return Err(GraphError::NotBHypergraph(format!(
                    "blocks connected to {} mix relation classes",
                    base.row(x0).id
                )));
            };
            lambdas.push(Lambda { id: format!("lam{}", c + 1), xs, ys, class });
        }
        match BHypergraph::new(base, lambdas) {
            Ok(h) => Ok(h),
            Err(GraphError::Invalid(v)) => Err(GraphError::NotBHypergraph(
                v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; "),
            )),
            Err(e) => Err(e),
        }
    }

    pub fn base(&self) -> &BiSepGraph {
        &self.base
    }

    pub fn lambdas(&self) -> &[Lambda] {
        &self.lambdas
    }

    pub fn lambda(&self, l: usize) -> &Lambda {
        &self.lambdas[l]
    }

    pub fn lambda_index(&self, id: &str) -> Option<usize> {
        self.lambdas.iter().position(|l| l.id == id)
    }

    pub fn lambda_of_row(&self, x: usize) -> usize {
        self.lambda_of_row[x]
    }

    pub fn lambda_of_col(&self, y: usize) -> usize {
        self.lambda_of_col[y]
    }

    pub fn vertex_count(&self) -> usize {
        self.base.graph().vertex_count()
    }

    /// `s(λ)`: the set of sources of the row blocks of `λ`.
    pub fn s_set(&self, l: usize) -> BTreeSet<usize> {
        self.lambdas[l].xs.iter().map(|&x| self.base.row(x).owner).collect()
    }

    /// `r(λ)`: the set of ranges of the column blocks of `λ`.
    pub fn r_set(&self, l: usize) -> BTreeSet<usize> {
        self.lambdas[l].ys.iter().map(|&y| self.base.col(y).owner).collect()
    }

    /// `𝐬(λ) = Σ_{X∈𝒳_λ} s(X)` as a vertex-count vector.
    pub fn s_counts(&self, l: usize) -> Vec<u64> {
        let mut v = vec![0; self.vertex_count()];
        for &x in &self.lambdas[l].xs {
            v[self.base.row(x).owner] += 1;
        }
        v
    }

    /// `𝐫(λ) = Σ_{Y∈𝒴_λ} r(Y)` as a vertex-count vector.
    pub fn r_counts(&self, l: usize) -> Vec<u64> {
        let mut v = vec![0; self.vertex_count()];
        for &y in &self.lambdas[l].ys {
            v[self.base.col(y).owner] += 1;
        }
        v
    }

    /// Hyperedge indices of a given class, in order.
    pub fn lambdas_of_class(&self, class: LambdaClass) -> Vec<usize> {
        (0..self.lambdas.len()).filter(|&l| self.lambdas[l].class == class).collect()
    }

    /// True when every hyperedge is two-sided (`S = C`, `T = D`): the
    /// "regular hypergraph" setting of the representation and IBN results.
    pub fn is_regular(&self) -> bool {
        self.lambdas.iter().all(|l| l.class == LambdaClass::TS)
    }

    /// Builds a name → index map for hyperedges.
    pub fn lambda_ids(&self) -> HashMap<String, usize> {
        self.lambdas.iter().enumerate().map(|(i, l)| (l.id.clone(), i)).collect()
    }
}
