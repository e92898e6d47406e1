//! Dimension functions and finite-dimensional quiver representations
//! satisfying the invertibility condition (H).

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use exact_linalg::{inverse, kernel, nonneg_int_solutions, nonneg_kernel_witness, rank, QMatrix, Q};
use graph_core::{cobisaturated_subhypergraphs, BHypergraph, LambdaClass, VertexSet};

use crate::ibn::coeff_matrices;
use crate::IbnError;

/// A quiver representation: a dimension per vertex and a
/// `d(s(e)) × d(r(e))` rational matrix per edge (edge order of the graph).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverRep {
    pub dims: Vec<usize>,
    pub maps: Vec<QMatrix>,
}

impl QuiverRep {
    /// The zero-dimensional representation.
    pub fn zero(h: &BHypergraph) -> QuiverRep {
        let g = h.base().graph();
        QuiverRep { dims: vec![0; g.vertex_count()], maps: vec![QMatrix::zeros(0, 0); g.edge_count()] }
    }

    /// Checks that every edge matrix has shape `d(s(e)) × d(r(e))`.
    pub fn check_shapes(&self, h: &BHypergraph) -> Result<(), IbnError> {
        let g = h.base().graph();
        if self.dims.len() != g.vertex_count() || self.maps.len() != g.edge_count() {
            return Err(IbnError::Shape("vertex or edge count does not match the graph".into()));
        }
        for (e, m) in self.maps.iter().enumerate() {
            let want = (self.dims[g.src(e)], self.dims[g.tgt(e)]);
            if (m.rows(), m.cols()) != want {
                return Err(IbnError::Shape(format!(
                    "edge {} has a {}x{} matrix, expected {}x{}",
                    g.edge(e).id,
                    m.rows(),
                    m.cols(),
                    want.0,
                    want.1
                )));
            }
        }
        Ok(())
    }
}

/// The solution space of the dimension-function system
/// `Σ_X d(s(X)) = Σ_Y d(r(Y))` for every hyperedge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionFunctions {
    /// The system matrix `A − B` (rows: hyperedges, columns: vertices).
    pub system: QMatrix,
    /// A `ℚ`-basis of its kernel.
    pub kernel: Vec<Vec<Q>>,
    /// Every nonzero nonnegative solution with entries `≤ bound`, or
    /// `None` when the search box is too large.
    pub samples: Option<Vec<Vec<u64>>>,
    /// An exact nonzero nonnegative integer solution, if one exists.
    pub witness: Option<Vec<BigInt>>,
}

pub fn dimension_functions(h: &BHypergraph, bound: u64) -> Result<DimensionFunctions, IbnError> {
    let cm = coeff_matrices(h)?;
    let system = cm.a_minus_b(h.vertex_count());
    Ok(DimensionFunctions {
        kernel: kernel(&system),
        samples: nonneg_int_solutions(&system, bound),
        witness: nonneg_kernel_witness(&system),
        system,
    })
}

/// True when `d` satisfies every hyperedge constraint.
pub fn is_dimension_function(h: &BHypergraph, d: &[u64]) -> Result<bool, IbnError> {
    let cm = coeff_matrices(h)?;
    if d.len() != h.vertex_count() {
        return Ok(false);
    }
    Ok((0..cm.h()).all(|l| {
        let lhs: u128 = cm.a[l].iter().zip(d).map(|(&a, &x)| a as u128 * x as u128).sum();
        let rhs: u128 = cm.b[l].iter().zip(d).map(|(&b, &x)| b as u128 * x as u128).sum();
        lhs == rhs
    }))
}

/// A nonzero dimension function supported on a co-bisaturated full
/// sub-hypergraph, extended by zero: the vertex set and the function.
pub fn findim_rep_witness(h: &BHypergraph) -> Result<Option<(VertexSet, Vec<u64>)>, IbnError> {
    coeff_matrices(h)?;
    for (w, sub) in cobisaturated_subhypergraphs(h)? {
        if w.is_empty() {
            continue;
        }
        let system = coeff_matrices(&sub)?.a_minus_b(sub.vertex_count());
        if let Some(d) = nonneg_kernel_witness(&system) {
            let mut full = vec![0u64; h.vertex_count()];
            for (&v, x) in w.iter().zip(&d) {
                full[v] = x.to_u64().ok_or_else(|| IbnError::Shape("dimension overflows u64".into()))?;
            }
            return Ok(Some((w, full)));
        }
    }
    Ok(None)
}

/// True when some nonzero finite-dimensional representation satisfying (H) exists.
pub fn has_nonzero_findim_rep(h: &BHypergraph) -> Result<bool, IbnError> {
    Ok(findim_rep_witness(h)?.is_some())
}

fn offsets(sizes: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut acc = 0;
    sizes
        .map(|s| {
            let o = acc;
            acc += s;
            o
        })
        .collect()
}

/// Realises a dimension function: `θ_λ` is the identity of size
/// `N_λ = Σ_X d(s(X))` and `ρ(XY)` is the `(X, Y)` block of it, blocks
/// ordered by block index.
pub fn build_representation(h: &BHypergraph, d: &[u64]) -> Result<QuiverRep, IbnError> {
    if !is_dimension_function(h, d)? {
        return Err(IbnError::NotDimensionFunction);
    }
    let base = h.base();
    let g = base.graph();
    let dims: Vec<usize> = d.iter().map(|&x| x as usize).collect();
    let mut maps: Vec<QMatrix> = (0..g.edge_count()).map(|e| QMatrix::zeros(dims[g.src(e)], dims[g.tgt(e)])).collect();
    for lam in h.lambdas() {
        let xo = offsets(lam.xs.iter().map(|&x| dims[base.row(x).owner]));
        let yo = offsets(lam.ys.iter().map(|&y| dims[base.col(y).owner]));
        for (i, &x) in lam.xs.iter().enumerate() {
            for (j, &y) in lam.ys.iter().enumerate() {
                let Some(e) = base.meet(x, y) else { continue };
                let m = &mut maps[e];
                for r in 0..m.rows() {
                    for c in 0..m.cols() {
                        if xo[i] + r == yo[j] + c {
                            m.set(r, c, Q::from_integer(1.into()));
                        }
                    }
                }
            }
        }
    }
    Ok(QuiverRep { dims, maps })
}

/// The block matrix `[ρ(λ)]`: row blocks `X ∈ 𝒳_λ`, column blocks
/// `Y ∈ 𝒴_λ`, block `(X, Y) = ρ(XY)`.
pub fn lambda_matrix(h: &BHypergraph, rep: &QuiverRep, l: usize) -> QMatrix {
    let base = h.base();
    let lam = h.lambda(l);
    let rs: Vec<usize> = lam.xs.iter().map(|&x| rep.dims[base.row(x).owner]).collect();
    let cs: Vec<usize> = lam.ys.iter().map(|&y| rep.dims[base.col(y).owner]).collect();
    let (xo, yo) = (offsets(rs.iter().copied()), offsets(cs.iter().copied()));
    let mut m = QMatrix::zeros(rs.iter().sum(), cs.iter().sum());
    for (i, &x) in lam.xs.iter().enumerate() {
        for (j, &y) in lam.ys.iter().enumerate() {
            if let Some(e) = base.meet(x, y) {
                let b = &rep.maps[e];
                for r in 0..b.rows() {
                    for c in 0..b.cols() {
                        m.set(xo[i] + r, yo[j] + c, b.get(r, c).clone());
                    }
                }
            }
        }
    }
    m
}

/// Per-hyperedge outcome of the (H) check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaCheck {
    pub lambda: String,
    pub class: LambdaClass,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub ok: bool,
    pub reason: Option<String>,
}

/// Result of [`check_condition_h`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionH {
    pub holds: bool,
    pub details: Vec<LambdaCheck>,
}

/// Checks condition (H): `[ρ(λ)]` is invertible for every two-sided `λ`.
/// A one-sided hyperedge only needs the one-sided inverse its relations
/// ask for: full row rank for `FinS` (row relations), full column rank for
/// `TFin` (column relations).
pub fn check_condition_h(h: &BHypergraph, rep: &QuiverRep) -> Result<ConditionH, IbnError> {
    rep.check_shapes(h)?;
    let mut details = Vec::new();
    for (l, lam) in h.lambdas().iter().enumerate() {
        let m = lambda_matrix(h, rep, l);
        let (rows, cols) = (m.rows(), m.cols());
        let rk = rank(&m);
        let (ok, reason) = match lam.class {
            LambdaClass::TS if rows != cols => (false, Some(format!("dimension mismatch: {rows}x{cols} is not square"))),
            LambdaClass::TS if rk < rows => (false, Some(format!("singular: rank {rk} < {rows}"))),
            LambdaClass::FinS | LambdaClass::InfS if rk < rows => {
                (false, Some(format!("no right inverse: rank {rk} < {rows} rows")))
            }
            LambdaClass::TFin | LambdaClass::TInf if rk < cols => {
                (false, Some(format!("no left inverse: rank {rk} < {cols} columns")))
            }
            _ => (true, None),
        };
        details.push(LambdaCheck { lambda: lam.id.clone(), class: lam.class, rows, cols, rank: rk, ok, reason });
    }
    Ok(ConditionH { holds: details.iter().all(|d| d.ok), details })
}

/// The ghost matrices `ρ(e*)` read off `[ρ(λ)]⁻¹` (block `(Y, X)` is
/// `ρ((XY)*)`, a `d(r(e)) × d(s(e))` matrix). `None` when some hyperedge
/// is not two-sided or its matrix is singular.
pub fn ghost_matrices(h: &BHypergraph, rep: &QuiverRep) -> Option<Vec<QMatrix>> {
    let base = h.base();
    let g = base.graph();
    let mut ghosts: Vec<QMatrix> =
        (0..g.edge_count()).map(|e| QMatrix::zeros(rep.dims[g.tgt(e)], rep.dims[g.src(e)])).collect();
    for (l, lam) in h.lambdas().iter().enumerate() {
        if lam.class != LambdaClass::TS {
            return None;
        }
        let inv = inverse(&lambda_matrix(h, rep, l))?;
        let xo = offsets(lam.xs.iter().map(|&x| rep.dims[base.row(x).owner]));
        let yo = offsets(lam.ys.iter().map(|&y| rep.dims[base.col(y).owner]));
        for (i, &x) in lam.xs.iter().enumerate() {
            for (j, &y) in lam.ys.iter().enumerate() {
                if let Some(e) = base.meet(x, y) {
                    let gm = &mut ghosts[e];
                    for r in 0..gm.rows() {
                        for c in 0..gm.cols() {
                            gm.set(r, c, inv.get(yo[j] + r, xo[i] + c).clone());
                        }
                    }
                }
            }
        }
    }
    Some(ghosts)
}

