//! Subcommand definitions and dispatch.

use std::collections::BTreeMap;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Value};

use analysis::{growth_class, growth_count, property_report, quasi_cycles, GrowthClass, SelfConnection};
use exact_linalg::{QMatrix, Q};
use graph_core::{catalog, check_triple, quotient_bhypergraph, AdmissibleTriple, BHypergraph, VertexSet};
use hypermonoid::{at_leq, enumerate_admissible_triples, is_monoid_simple, presentation};
use ibn_repr::{
    build_representation, check_condition_h, dimension_functions, findim_rep_witness, ibn_decision, ibn_witness,
    k0_span, Confirmation, QuiverRep,
};
use rewrite_algebra::{AlgElem, Algebra};

use crate::doc::{parse_graph, to_document, Loaded};
use crate::expr::parse_expr;
use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "bisep", version, about = "Computations in Cohn-Leavitt algebras of bi-separated graphs")]
pub struct Cli {
    /// Graph document (JSON).
    #[arg(long, short, global = true, conflicts_with = "fixture")]
    pub graph: Option<String>,
    /// Built-in fixture instead of a file (`--fixture list` shows the names).
    #[arg(long, global = true)]
    pub fixture: Option<String>,
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate the graph and summarise its structure.
    Validate,
    /// Normal form of an expression.
    Nf { expr: String },
    /// Normal form of a product.
    Mul { left: String, right: String },
    /// Normal paths up to a length.
    Basis {
        #[arg(long)]
        max_len: usize,
    },
    /// Structural conditions and the ring-theoretic facts they imply.
    Analyze,
    /// Quasi-cycles, self-connection and growth counts.
    Growth {
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long, default_value_t = 4)]
        conn_len: usize,
        /// Print growth counts for n = 0..=counts.
        #[arg(long, default_value_t = 8)]
        counts: usize,
    },
    /// The H-monoid presentation.
    Monoid,
    /// The lattice of admissible triples.
    AtLattice,
    /// Whether the H-monoid is simple.
    Simple,
    /// Invariant Basis Number by the rank criterion.
    Ibn(IbnArgs),
    /// Nonnegative integer dimension functions.
    Dimfun {
        #[arg(long, default_value_t = 3)]
        bound: u64,
    },
    /// Check condition (H) for a representation.
    RepCheck(RepArgs),
    /// The quotient B-hypergraph by an admissible triple.
    Quotient {
        #[arg(long)]
        triple: String,
    },
}

#[derive(Debug, Args)]
pub struct IbnArgs {
    /// Print the non-IBN witness.
    #[arg(long)]
    pub witness: bool,
    /// Also run the advisory K0 span test (works on any B-hypergraph).
    #[arg(long)]
    pub k0_span: bool,
    /// Exit with status 1 unless the answer matches (`ibn` or `no-ibn`).
    #[arg(long, value_parser = ["ibn", "no-ibn"])]
    pub expect: Option<String>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct RepArgs {
    /// Dimensions file {"v": 2, ...}; the canonical representation is built.
    #[arg(long)]
    pub dims: Option<String>,
    /// Representation file {"dims": {...}, "maps": {"e": [["1","0"], ...]}}.
    #[arg(long)]
    pub rep: Option<String>,
    /// Find a nonzero dimension function and build its representation.
    #[arg(long)]
    pub build: bool,
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the command line (including the program name) and returns the
/// exit code and output instead of printing.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Output { code, stdout: text, stderr: String::new() }
            } else {
                Output { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok((code, out)) => Output { code, stdout: out, stderr: String::new() },
        Err(e) => Output { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

/// Names accepted by `--fixture`: the corpus plus `hMN` for the hypergraph
/// `H(M, N)` with single-digit `M, N`.
pub fn fixture(name: &str) -> Result<Loaded, CliError> {
    let b = name.as_bytes();
    if b.len() == 3 && b[0] == b'h' && b[1].is_ascii_digit() && b[2].is_ascii_digit() && b[1] != b'0' && b[2] != b'0' {
        return Ok(Loaded::from_hyper(catalog::hmn((b[1] - b'0') as usize, (b[2] - b'0') as usize)));
    }
    catalog::corpus()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, g)| Loaded::from_graph(g))
        .ok_or_else(|| CliError::Input(format!("unknown fixture {name}")))
}

fn fixture_names() -> Vec<&'static str> {
    catalog::corpus().into_iter().map(|(n, _)| n).collect()
}

fn read(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {path}: {e}")))
}

fn load(cli: &Cli) -> Result<Loaded, CliError> {
    match (&cli.graph, &cli.fixture) {
        (Some(p), _) => parse_graph(&read(p)?),
        (None, Some(f)) => fixture(f),
        (None, None) => Err(CliError::Input("no graph given (use --graph FILE or --fixture NAME)".into())),
    }
}

fn render(json: bool, v: Value, text: String) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(&v).expect("JSON values serialise");
        s.push('\n');
        s
    } else {
        text
    }
}

fn elem_json(alg: &Algebra, a: &AlgElem) -> Value {
    json!({
        "expr": alg.format(a),
        "terms": a.terms().map(|(p, c)| json!({"coeff": c.to_string(), "path": alg.format_path(p)})).collect::<Vec<_>>(),
        "valuation": alg.valuation(a),
    })
}

fn execute(cli: &Cli) -> Result<(i32, String), CliError> {
    if cli.fixture.as_deref() == Some("list") {
        let names = fixture_names();
        return Ok((0, render(cli.json, json!(names), names.join("\n") + "\nhMN (1 <= M, N <= 9)\n")));
    }
    let loaded = load(cli)?;
    let j = cli.json;
    match &cli.command {
        Command::Validate => Ok((0, validate(&loaded, j))),
        Command::Nf { expr } => {
            let alg = Algebra::new(loaded.graph.clone());
            let a = parse_expr(expr, &alg)?;
            Ok((0, render(j, elem_json(&alg, &a), format!("{}\n", alg.format(&a)))))
        }
        Command::Mul { left, right } => {
            let alg = Algebra::new(loaded.graph.clone());
            let a = alg.mul(&parse_expr(left, &alg)?, &parse_expr(right, &alg)?);
            Ok((0, render(j, elem_json(&alg, &a), format!("{}\n", alg.format(&a)))))
        }
        Command::Basis { max_len } => {
            let alg = Algebra::new(loaded.graph.clone());
            let paths: Vec<String> = alg.basis_paths(*max_len).iter().map(|p| alg.format_path(p)).collect();
            let text = format!("{} normal paths of length <= {max_len}\n{}\n", paths.len(), paths.join("\n"));
            Ok((0, render(j, json!({"max_len": max_len, "count": paths.len(), "paths": paths}), text)))
        }
        Command::Analyze => {
            let alg = Algebra::new(loaded.graph.clone());
            let r = property_report(&alg);
            let mut text = String::new();
            for (name, f) in [
                ("Condition LV", &r.condition_lv),
                ("domain condition", &r.domain_condition),
                ("Condition A", &r.condition_a),
                ("Condition A'", &r.condition_a_prime),
                ("connected", &r.connected),
                ("tame", &r.tame),
            ] {
                text += &format!("{name}: {} ({})\n", yes_no(f.value), f.evidence);
            }
            for f in &r.facts {
                let status = serde_json::to_value(f.status).expect("status serialises");
                text += &format!("{}: {}", f.name, status.as_str().unwrap_or("?"));
                if let Some(t) = f.theorem {
                    text += &format!(" [{t}]");
                }
                if let Some(w) = &f.witness {
                    text += &format!(" witness {w}");
                }
                text.push('\n');
            }
            Ok((0, render(j, serde_json::to_value(&r).expect("report serialises"), text)))
        }
        Command::Growth { max_len, conn_len, counts } => Ok((0, growth(&loaded, *max_len, *conn_len, *counts, j))),
        Command::Monoid => {
            let h = loaded.hyper()?;
            let pres = presentation(h);
            let rels: Vec<String> = pres.relations.iter().map(|(l, r)| format!("{} = {}", pres.format(l), pres.format(r))).collect();
            let text = format!("generators: {}\n{}\n", pres.names.join(", "), rels.join("\n"));
            Ok((0, render(j, json!({"generators": pres.names, "relations": rels}), text)))
        }
        Command::AtLattice => {
            let h = loaded.hyper()?;
            let ats = enumerate_admissible_triples(h)?;
            let names: Vec<Value> = ats.iter().map(|t| triple_json(h, t)).collect();
            let mut order = Vec::new();
            for (a, ta) in ats.iter().enumerate() {
                for (b, tb) in ats.iter().enumerate() {
                    let covers = a != b
                        && at_leq(h, ta, tb)
                        && !ats.iter().enumerate().any(|(c, tc)| c != a && c != b && at_leq(h, ta, tc) && at_leq(h, tc, tb));
                    if covers {
                        order.push((a, b));
                    }
                }
            }
            let mut text = format!("{} admissible triples\n", ats.len());
            for (i, v) in names.iter().enumerate() {
                text += &format!("{i}: {v}\n");
            }
            for (a, b) in &order {
                text += &format!("{a} < {b}\n");
            }
            Ok((0, render(j, json!({"triples": names, "covers": order}), text)))
        }
        Command::Simple => {
            let s = is_monoid_simple(loaded.hyper()?)?;
            Ok((0, render(j, json!({"simple": s}), format!("simple: {}\n", yes_no(s)))))
        }
        Command::Ibn(args) => ibn(&loaded, args, j),
        Command::Dimfun { bound } => {
            let h = loaded.hyper()?;
            let df = dimension_functions(h, *bound)?;
            let vnames = h.base().graph().vertices();
            let kernel: Vec<Vec<String>> = df.kernel.iter().map(|v| v.iter().map(|x| x.to_string()).collect()).collect();
            let witness = df.witness.as_ref().map(|w| w.iter().map(|x| x.to_string()).collect::<Vec<_>>());
            let mut text = format!("vertices: {}\nkernel dimension: {}\n", vnames.join(", "), kernel.len());
            text += &match &witness {
                Some(w) => format!("nonzero dimension function: {}\n", w.join(" ")),
                None => "no nonzero dimension function\n".into(),
            };
            match &df.samples {
                Some(s) => {
                    text += &format!("{} solution(s) with entries <= {bound}\n", s.len());
                    for d in s {
                        text += &format!("  {}\n", d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));
                    }
                }
                None => text += "search box too large for sampling\n",
            }
            let v = json!({"vertices": vnames, "kernel": kernel, "witness": witness, "bound": bound, "samples": df.samples});
            Ok((0, render(j, v, text)))
        }
        Command::RepCheck(args) => rep_check(&loaded, args, j),
        Command::Quotient { triple } => {
            let h = loaded.hyper()?;
            let t = parse_triple(h, &read(triple)?)?;
            check_triple(h, &t)?;
            let qh = quotient_bhypergraph(h, &t)?;
            let doc = to_document(qh.base(), Some(&qh));
            let mut s = serde_json::to_string_pretty(&doc).expect("documents serialise");
            s.push('\n');
            Ok((0, s))
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn validate(loaded: &Loaded, j: bool) -> String {
    let g = &loaded.graph;
    let gr = g.graph();
    let hyper = match &loaded.hyper {
        Ok(h) => json!(h.lambdas().iter().map(|l| json!({"id": l.id, "class": l.class.to_string()})).collect::<Vec<_>>()),
        Err(e) => json!(e.to_string()),
    };
    let v = json!({
        "valid": true,
        "vertices": gr.vertex_count(),
        "edges": gr.edge_count(),
        "row_blocks": g.rows().len(),
        "col_blocks": g.cols().len(),
        "S": g.s_blocks().len(),
        "T": g.t_blocks().len(),
        "hyperedges": hyper,
    });
    let hyper_text = match &loaded.hyper {
        Ok(h) => format!("{} hyperedge(s)", h.lambdas().len()),
        Err(e) => format!("no B-hypergraph ({e})"),
    };
    let text = format!(
        "valid: {} vertices, {} edges, {} row blocks ({} in S), {} column blocks ({} in T), {}\n",
        gr.vertex_count(),
        gr.edge_count(),
        g.rows().len(),
        g.s_blocks().len(),
        g.cols().len(),
        g.t_blocks().len(),
        hyper_text
    );
    render(j, v, text)
}

fn growth(loaded: &Loaded, max_len: usize, conn_len: usize, counts: usize, j: bool) -> String {
    let alg = Algebra::new(loaded.graph.clone());
    let class = growth_class(&alg, max_len, conn_len);
    let qcs: Vec<Value> = quasi_cycles(&alg, max_len, conn_len)
        .iter()
        .map(|qc| {
            let conn = match &qc.self_connected {
                SelfConnection::Found(o) => json!(alg.format_path(o)),
                SelfConnection::NotFoundUpTo(_) => Value::Null,
            };
            json!({"path": alg.format_path(&qc.path), "connector": conn})
        })
        .collect();
    let cs: Vec<String> = (0..=counts).map(|n| growth_count(&alg, n).to_string()).collect();
    let (cls, text_cls) = match &class {
        GrowthClass::Exponential { quasi_cycle, connector } => (
            json!({"kind": "exponential", "quasi_cycle": alg.format_path(quasi_cycle), "connector": alg.format_path(connector)}),
            format!(
                "exponential: quasi-cycle {} with connector {}\n",
                alg.format_path(quasi_cycle),
                alg.format_path(connector)
            ),
        ),
        GrowthClass::NoSelfConnectedUpTo { max_len, conn_len } => (
            json!({"kind": "no_self_connected", "max_len": max_len, "conn_len": conn_len}),
            format!("no self-connected quasi-cycle with |p| <= {max_len}, |o| <= {conn_len}\n"),
        ),
    };
    let text = format!("{text_cls}quasi-cycles: {}\ngrowth counts: {}\n", qcs.len(), cs.join(" "));
    render(j, json!({"class": cls, "quasi_cycles": qcs, "counts": cs}), text)
}

fn ibn(loaded: &Loaded, args: &IbnArgs, j: bool) -> Result<(i32, String), CliError> {
    let h = loaded.hyper()?;
    let mut v = json!({});
    let mut text = String::new();
    if args.k0_span {
        let k = k0_span(h);
        v["k0_span"] = json!({"unit_in_span": k.unit_in_span, "advisory": k.advisory});
        text += &format!("K0 span (advisory): unit class {} the span of the relations\n", if k.unit_in_span { "lies in" } else { "is outside" });
    }
    let decision = match ibn_decision(h) {
        Ok(d) => d,
        Err(e) if args.k0_span && args.expect.is_none() => {
            v["ibn"] = json!(e.to_string());
            text += &format!("rank criterion not applicable: {e}\n");
            return Ok((0, render(j, v, text)));
        }
        Err(e) => return Err(e.into()),
    };
    v["ibn"] = json!(decision.ibn);
    v["rank"] = json!(decision.rank);
    v["rank_augmented"] = json!(decision.rank_augmented);
    v["caveat"] = json!(decision.caveat);
    text += &format!(
        "IBN: {} (rank {} vs augmented rank {}; {})\n",
        yes_no(decision.ibn),
        decision.rank,
        decision.rank_augmented,
        decision.caveat
    );
    if args.witness {
        if let Some(w) = ibn_witness(h)? {
            let ms: Vec<String> = w.multipliers.iter().map(|x| x.to_string()).collect();
            text += &format!("witness: m = {}, p = {}, multipliers [{}]\n", w.m, w.p, ms.join(", "));
            let conf = match &w.confirmation {
                Confirmation::Equal { shift, m, p, chain } => {
                    let pres = presentation(h);
                    text += &format!("confirmed in the monoid: {m}·Σv = {p}·Σv (shift {shift}, {} step(s))\n", chain.len() - 1);
                    json!({"equal": true, "shift": shift, "m": m, "p": p, "chain": chain.iter().map(|x| pres.format(x)).collect::<Vec<_>>()})
                }
                Confirmation::NotFound { max_shift, depth, unknown } => {
                    text += &format!("not confirmed within shift {max_shift}, depth {depth} ({unknown} undecided)\n");
                    json!({"equal": false, "max_shift": max_shift, "depth": depth, "unknown": unknown})
                }
                Confirmation::TooLarge => {
                    text += "recipe numbers too large for the monoid search\n";
                    json!({"equal": false, "too_large": true})
                }
            };
            v["witness"] = json!({
                "m": w.m.to_string(),
                "p": w.p.to_string(),
                "multipliers": ms,
                "usage": w.usage.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect::<Vec<_>>(),
                "confirmation": conf,
            });
        }
    }
    let code = match args.expect.as_deref() {
        Some("ibn") if !decision.ibn => 1,
        Some("no-ibn") if decision.ibn => 1,
        _ => 0,
    };
    Ok((code, render(j, v, text)))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TripleDoc {
    #[serde(rename = "V", default)]
    v: Vec<String>,
    #[serde(rename = "Sigma", default)]
    sigma: Vec<String>,
    #[serde(rename = "Theta", default)]
    theta: Vec<String>,
}

/// Parses a triple document `{"V": [...], "Sigma": [...], "Theta": [...]}`
/// (vertex names and hyperedge ids).
pub fn parse_triple(h: &BHypergraph, text: &str) -> Result<AdmissibleTriple, CliError> {
    let d: TripleDoc = serde_json::from_str(text)
        .map_err(|e| CliError::Input(format!("invalid triple at line {}, column {}: {e}", e.line(), e.column())))?;
    let gr = h.base().graph();
    let v: VertexSet = d
        .v
        .iter()
        .map(|n| gr.vertex_index(n).ok_or_else(|| CliError::Input(format!("unknown vertex {n}"))))
        .collect::<Result<_, _>>()?;
    let ids = h.lambda_ids();
    let lam = |ns: &[String]| {
        ns.iter()
            .map(|n| ids.get(n).copied().ok_or_else(|| CliError::Input(format!("unknown hyperedge {n}"))))
            .collect::<Result<_, _>>()
    };
    Ok(AdmissibleTriple { v, sigma: lam(&d.sigma)?, theta: lam(&d.theta)? })
}

fn triple_json(h: &BHypergraph, t: &AdmissibleTriple) -> Value {
    let gr = h.base().graph();
    json!({
        "V": t.v.iter().map(|&v| gr.vertex_name(v)).collect::<Vec<_>>(),
        "Sigma": t.sigma.iter().map(|&l| h.lambda(l).id.as_str()).collect::<Vec<_>>(),
        "Theta": t.theta.iter().map(|&l| h.lambda(l).id.as_str()).collect::<Vec<_>>(),
    })
}

fn matrix_json(m: &QMatrix) -> Value {
    json!(m.to_string_rows())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RepDoc {
    dims: BTreeMap<String, usize>,
    maps: BTreeMap<String, Vec<Vec<String>>>,
}

fn dims_vector(h: &BHypergraph, dims: &BTreeMap<String, u64>) -> Result<Vec<u64>, CliError> {
    let gr = h.base().graph();
    for n in dims.keys() {
        if gr.vertex_index(n).is_none() {
            return Err(CliError::Input(format!("unknown vertex {n}")));
        }
    }
    Ok(gr.vertices().iter().map(|n| dims.get(n).copied().unwrap_or(0)).collect())
}

fn parse_rep(h: &BHypergraph, text: &str) -> Result<QuiverRep, CliError> {
    let d: RepDoc = serde_json::from_str(text)
        .map_err(|e| CliError::Input(format!("invalid representation at line {}, column {}: {e}", e.line(), e.column())))?;
    let gr = h.base().graph();
    let dims64 = dims_vector(h, &d.dims.iter().map(|(k, v)| (k.clone(), *v as u64)).collect())?;
    let dims: Vec<usize> = dims64.iter().map(|&x| x as usize).collect();
    let mut maps = Vec::new();
    for e in 0..gr.edge_count() {
        let id = &gr.edge(e).id;
        let (r, c) = (dims[gr.src(e)], dims[gr.tgt(e)]);
        let m = match d.maps.get(id) {
            None => QMatrix::zeros(r, c),
            Some(rows) => {
                let parsed: Vec<Vec<Q>> = rows
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|s| s.trim().parse::<Q>().map_err(|_| CliError::Input(format!("edge {id}: malformed rational {s:?}"))))
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<_, _>>()?;
                if parsed.len() != r || parsed.iter().any(|row| row.len() != c) {
                    return Err(CliError::Input(format!("edge {id}: expected a {r}x{c} matrix")));
                }
                QMatrix::from_rows(parsed, c)
            }
        };
        maps.push(m);
    }
    for id in d.maps.keys() {
        if gr.edge_index(id).is_none() {
            return Err(CliError::Input(format!("unknown edge {id}")));
        }
    }
    Ok(QuiverRep { dims, maps })
}

fn rep_check(loaded: &Loaded, args: &RepArgs, j: bool) -> Result<(i32, String), CliError> {
    let h = loaded.hyper()?;
    let gr = h.base().graph();
    let rep = if let Some(path) = &args.dims {
        let dims: BTreeMap<String, u64> = serde_json::from_str(&read(path)?)
            .map_err(|e| CliError::Input(format!("invalid dimensions at line {}, column {}: {e}", e.line(), e.column())))?;
        let d = dims_vector(h, &dims)?;
        match build_representation(h, &d) {
            Ok(r) => r,
            Err(ibn_repr::IbnError::NotDimensionFunction) => {
                let v = json!({"holds": false, "reason": "not a dimension function"});
                return Ok((1, render(j, v, "condition (H): fails (the dimensions are not a dimension function)\n".into())));
            }
            Err(e) => return Err(e.into()),
        }
    } else if let Some(path) = &args.rep {
        parse_rep(h, &read(path)?)?
    } else {
        match findim_rep_witness(h)? {
            Some((_, d)) => build_representation(h, &d)?,
            None => {
                let v = json!({"holds": false, "reason": "no nonzero dimension function"});
                return Ok((1, render(j, v, "no nonzero finite-dimensional representation exists\n".into())));
            }
        }
    };
    let ch = check_condition_h(h, &rep)?;
    let details: Vec<Value> = ch
        .details
        .iter()
        .map(|d| json!({"lambda": d.lambda, "class": d.class.to_string(), "rows": d.rows, "cols": d.cols, "rank": d.rank, "ok": d.ok, "reason": d.reason}))
        .collect();
    let dims: BTreeMap<&str, usize> = gr.vertices().iter().map(|s| s.as_str()).zip(rep.dims.iter().copied()).collect();
    let maps: BTreeMap<&str, Value> = gr.edges().iter().map(|e| e.id.as_str()).zip(rep.maps.iter().map(matrix_json)).collect();
    let mut text = format!("condition (H): {}\n", if ch.holds { "holds" } else { "fails" });
    for d in &ch.details {
        text += &format!("  {} ({}): {}x{}, rank {}{}\n", d.lambda, d.class, d.rows, d.cols, d.rank, d.reason.as_ref().map_or(String::new(), |r| format!(" - {r}")));
    }
    let v = json!({"holds": ch.holds, "dims": dims, "maps": maps, "details": details});
    Ok((if ch.holds { 0 } else { 1 }, render(j, v, text)))
}
