//! Command-line surface: argument parsing, graph ingestion and report building.
//!
//! [`run`] never touches the process: it returns the exit status and both
//! output streams, so the binary is a thin wrapper and tests can call it
//! directly. Exit status is 0 on success, 1 when a verification fails (or an
//! internal identity check trips), and 2 on invalid input.

mod report;

use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

pub use report::{InputDescriptor, Report, Timing, SCHEMA};

use crate::error::{Error, Result};
use crate::graph::{
    self, detect_signed_two_eigenvalue, detect_srg, detect_two_eigenvalue, AnyGraph, Balance, Family, Graph,
    SignedTwoEigKind, SrgParameters,
};
use crate::group::{verify_exponent_theorem, verify_lorenzini, AbelianGroup, CriticalGroup, Decomposition};
use crate::linalg::{char_poly, distinct_nonzero_eigenvalue_product};
use crate::pairing::{
    self, orthogonal_subset, verify_tail_heavy, verify_tail_heavy_edges, OrthogonalSet, PairingMethod, PairingTable,
    SearchMode,
};
use crate::scan;

#[derive(Debug, Parser)]
#[command(name = "critgroup", version, about = "Critical groups, monodromy pairings and two-eigenvalue graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Greedy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Exponent,
    Lorenzini,
    TailHeavy,
}

/// Where to read the graph from.
#[derive(Debug, Clone, clap::Args)]
pub struct Source {
    /// Graph file (`n <count>` header, then one `u v` or `u v +/-` edge per line, 1-based).
    #[arg(long, value_name = "FILE", conflicts_with = "family")]
    pub input: Option<String>,
    /// Named family, e.g. `petersen`, `paley`, `complete_multipartite`.
    #[arg(long, value_name = "NAME")]
    pub family: Option<String>,
    /// Comma-separated family parameters.
    #[arg(long, value_name = "LIST", value_delimiter = ',', requires = "family")]
    pub params: Vec<u64>,
}

#[derive(Debug, Clone, clap::Args)]
pub struct Common {
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Add wall-clock timing to the report (breaks byte-identical output).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit a graph in the file format.
    Generate {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        common: Common,
    },
    /// Structure, Laplacian spectrum factorization and critical group.
    Analyze {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        common: Common,
    },
    /// Invariant factors and exponent of the critical group.
    Group {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        common: Common,
    },
    /// Monodromy pairing of edge elements: the full table, or one pair.
    Pairing {
        #[command(flatten)]
        source: Source,
        /// First edge `u,v` (1-based).
        #[arg(long, value_name = "U,V", requires = "edge2")]
        edge: Option<String>,
        /// Second edge `u,v` (1-based).
        #[arg(long, value_name = "U,V", requires = "edge")]
        edge2: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Search for a set of pairwise orthogonal edges.
    Orthogonal {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "exact")]
        mode: Mode,
        /// Do not seed the search with structural edge sets.
        #[arg(long)]
        no_hints: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Run one of the theorem checks.
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum)]
        check: Check,
        /// Search mode for `tail-heavy`.
        #[arg(long, value_enum, default_value = "exact")]
        mode: Mode,
        #[arg(long)]
        no_hints: bool,
        /// Explicit edge set for `tail-heavy`, `u,v;u,v;...` (1-based); skips the search.
        #[arg(long, value_name = "EDGES")]
        edges: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Feasible strongly regular parameters with n ≤ N and their η = nμ hits.
    Scan {
        #[arg(long, value_name = "N")]
        nmax: u64,
        /// List every feasible tuple, not only the η = nμ hits.
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        common: Common,
    },
}

/// Exit status and the two output streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl RunOutput {
    fn error(code: i32, message: String) -> Self {
        RunOutput { code, stdout: String::new(), stderr: message }
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> RunOutput
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
                RunOutput { code, stdout: text, stderr: String::new() }
            } else {
                RunOutput::error(code, text)
            };
        }
    };
    let common = match &cli.command {
        Command::Generate { common, .. }
        | Command::Analyze { common, .. }
        | Command::Group { common, .. }
        | Command::Pairing { common, .. }
        | Command::Orthogonal { common, .. }
        | Command::Verify { common, .. }
        | Command::Scan { common, .. } => common.clone(),
    };
    let start = Instant::now();
    match execute(&cli.command) {
        Ok(mut report) => {
            if common.timing {
                report.timing = Some(Timing { elapsed_ms: start.elapsed().as_millis() as u64 });
            }
            let code = if report.verdict.as_deref() == Some("fail") { 1 } else { 0 };
            let stdout = match common.format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            };
            RunOutput { code, stdout, stderr: String::new() }
        }
        Err(e) => {
            let code = if matches!(e, Error::Internal(_)) { 1 } else { 2 };
            RunOutput::error(code, format!("error: {e}\n"))
        }
    }
}

fn load(source: &Source) -> Result<(AnyGraph, InputDescriptor)> {
    match (&source.input, &source.family) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
            Ok((graph::io::parse_graph(&text)?, InputDescriptor::File { path: path.clone() }))
        }
        (None, Some(name)) => {
            let family = Family::parse(name, &source.params)?;
            Ok((
                graph::generate(&family)?,
                InputDescriptor::Family { name: name.clone(), params: source.params.clone() },
            ))
        }
        _ => Err(Error::InvalidParameters("give exactly one of --input FILE or --family NAME".into())),
    }
}

fn plain(g: AnyGraph, what: &str) -> Result<Graph> {
    g.into_plain()
        .ok_or_else(|| Error::InvalidParameters(format!("{what} is defined for unsigned graphs only")))
}

fn execute(cmd: &Command) -> Result<Report> {
    match cmd {
        Command::Generate { source, .. } => {
            let (g, input) = load(source)?;
            Ok(Report::new("generate", input, graph_json(&g)))
        }
        Command::Analyze { source, .. } => {
            let (g, input) = load(source)?;
            Ok(Report::new("analyze", input, analyze(&g)?))
        }
        Command::Group { source, .. } => {
            let (g, input) = load(source)?;
            let cg = CriticalGroup::of_any(g.as_ref())?;
            Ok(Report::new("group", input, group_json(cg.group())))
        }
        Command::Pairing { source, edge, edge2, .. } => {
            let (g, input) = load(source)?;
            let g = plain(g, "the pairing")?;
            let result = match (edge, edge2) {
                (Some(a), Some(b)) => single_pairing(&g, parse_edge(a)?, parse_edge(b)?)?,
                _ => pairing_table(&g)?,
            };
            Ok(Report::new("pairing", input, result))
        }
        Command::Orthogonal { source, mode, no_hints, .. } => {
            let (g, input) = load(source)?;
            let g = plain(g, "orthogonal search")?;
            let set = orthogonal_subset(&g, search_mode(*mode), !no_hints)?;
            Ok(Report::new("orthogonal", input, orthogonal_json(&set)))
        }
        Command::Verify { source, check, mode, no_hints, edges, .. } => {
            let (g, input) = load(source)?;
            let (result, pass) = match check {
                Check::Exponent => {
                    let r = verify_exponent_theorem(g.as_ref())?;
                    let pass = r.classification.is_expected();
                    let result = json!({
                        "check": "exponent",
                        "classification": r.classification.name(),
                        "spectral_bound": big(&r.spectral_bound),
                        "group": group_json(&r.group),
                        "exponent": big(&r.exponent),
                        "decomposition": decomposition_json(&r.decomposition),
                        "witnesses": {
                            "w_prime": r.witnesses.w_prime.map(|v| v + 1),
                            "basis_vertex": r.witnesses.basis_vertex.map(|v| v + 1),
                            "w_double_prime": r.witnesses.w_double_prime.map(|v| v + 1),
                        },
                        "target_order": big(&r.target_order),
                        "implied_order": big(&r.implied_order),
                    });
                    (result, pass)
                }
                Check::Lorenzini => {
                    let r = verify_lorenzini(g.as_ref())?;
                    let result = json!({
                        "check": "lorenzini",
                        "exponent": big(&r.exponent),
                        "eigenvalue_product": big(&r.eigenvalue_product),
                        "holds": r.holds,
                    });
                    (result, r.holds)
                }
                Check::TailHeavy => {
                    let g = plain(g, "the tail-heavy check")?;
                    let r = match edges {
                        Some(list) => verify_tail_heavy_edges(&g, &parse_edge_list(list)?)?,
                        None => verify_tail_heavy(&g, search_mode(*mode), !no_hints)?,
                    };
                    let result = json!({
                        "check": "tail-heavy",
                        "parameters": srg_json(&r.params),
                        "eta": r.eta.to_string(),
                        "orthogonal": orthogonal_json(&r.orthogonal),
                        "is_orthogonal": r.is_orthogonal,
                        "prediction": factors(&r.predicted),
                        "group": group_json(&r.group),
                        "divisible": r.divisible,
                        "generated_subgroup": factors(&r.generated),
                        "generated_consistent": r.generated_consistent,
                        "n_mu_multiplicity": r.n_mu_multiplicity,
                        "strong_pattern": r.strong_pattern,
                    });
                    (result, r.passed())
                }
            };
            let mut report = Report::new("verify", input, result);
            report.verdict = Some(if pass { "pass" } else { "fail" }.into());
            Ok(report)
        }
        Command::Scan { nmax, all, .. } => {
            let tuples = if *all { scan::enumerate_feasible(*nmax) } else { scan::scan_eta_max(*nmax) };
            let rows: Vec<Value> = tuples.iter().map(tuple_json).collect();
            let result = json!({
                "selection": if *all { "feasible" } else { "eta_equals_n_mu" },
                "count": rows.len(),
                "tuples": rows,
            });
            Ok(Report::new("scan", InputDescriptor::Scan { n_max: *nmax }, result))
        }
    }
}

fn search_mode(m: Mode) -> SearchMode {
    match m {
        Mode::Exact => SearchMode::Exact,
        Mode::Greedy => SearchMode::Greedy,
    }
}

fn parse_edge(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::InvalidParameters(format!("bad edge {s:?}; expected `u,v` with 1-based vertices"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a == 0 || b == 0 {
        return Err(bad());
    }
    Ok((a - 1, b - 1))
}

fn parse_edge_list(s: &str) -> Result<Vec<(usize, usize)>> {
    s.split(';').filter(|p| !p.trim().is_empty()).map(parse_edge).collect()
}

fn big(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

fn factors(g: &AbelianGroup) -> Value {
    Value::Array(g.factors().iter().map(big).collect())
}

fn group_json(g: &AbelianGroup) -> Value {
    json!({
        "invariant_factors": factors(g),
        "exponent": big(&g.exponent()),
        "order": big(&g.order()),
        "display": g.to_string(),
    })
}

fn edge_json(e: (usize, usize)) -> Value {
    json!([e.0 + 1, e.1 + 1])
}

fn srg_json(p: &SrgParameters) -> Value {
    json!({ "n": p.n, "k": p.k, "lambda": p.lambda, "mu": p.mu })
}

fn graph_json(g: &AnyGraph) -> Value {
    let edges: Vec<Value> = match g {
        AnyGraph::Plain(p) => p.edges().into_iter().map(edge_json).collect(),
        AnyGraph::Signed(s) => s
            .signed_edges()
            .into_iter()
            .map(|(u, v, sg)| json!([u + 1, v + 1, if sg.value() > 0 { "+" } else { "-" }]))
            .collect(),
    };
    json!({
        "n": g.underlying().n(),
        "signed": matches!(g, AnyGraph::Signed(_)),
        "edge_count": edges.len(),
        "edges": edges,
        "file": graph::io::format_graph(g),
    })
}

fn decomposition_json(d: &Decomposition) -> Value {
    json!({
        "case": d.case.name(),
        "edge": edge_json(d.edge),
        "apex": d.apex.map(|v| v + 1),
        "switching": d.switching.iter().map(|v| v + 1).collect::<Vec<_>>(),
        "coefficients": d.coefficients.iter().map(big).collect::<Vec<_>>(),
        "target": d.target.coords().iter().map(big).collect::<Vec<_>>(),
        "claimed_order": big(&d.claimed_order),
    })
}

fn method_name(m: PairingMethod) -> &'static str {
    match m {
        PairingMethod::ClosedForm => "closed_form",
        PairingMethod::General => "general",
    }
}

fn orthogonal_json(s: &OrthogonalSet) -> Value {
    json!({
        "size": s.len(),
        "edges": s.edges.iter().map(|&e| edge_json(e)).collect::<Vec<_>>(),
        "certificate": s.certificate.iter().map(|(i, j, v)| json!({
            "pair": [edge_json(s.edges[*i]), edge_json(s.edges[*j])],
            "value": v.to_string(),
        })).collect::<Vec<_>>(),
        "proven_maximum": s.proven_maximum,
        "seed_size": s.seed_size,
        "method": method_name(s.method),
    })
}

fn single_pairing(g: &Graph, e1: (usize, usize), e2: (usize, usize)) -> Result<Value> {
    for e in [e1, e2] {
        if e.0 >= g.n() || e.1 >= g.n() || !g.has_edge(e.0, e.1) {
            return Err(Error::InvalidParameters(format!("({}, {}) is not an edge", e.0 + 1, e.1 + 1)));
        }
    }
    let cg = CriticalGroup::of(g)?;
    let n = g.n();
    let v = pairing::monodromy_pairing(
        &cg,
        &crate::group::GroupElement::edge(n, e1.0, e1.1),
        &crate::group::GroupElement::edge(n, e2.0, e2.1),
    )?;
    Ok(json!({
        "edge": edge_json(e1),
        "edge2": edge_json(e2),
        "value": v.to_string(),
        "order": big(&pairing::pairing_order(&v)),
    }))
}

fn pairing_table(g: &Graph) -> Result<Value> {
    let table = PairingTable::new(g)?;
    let m = table.len();
    let rows: Vec<Value> = (0..m)
        .map(|i| Value::Array((0..m).map(|j| Value::String(table.get(i, j).to_string())).collect()))
        .collect();
    let mut out = json!({
        "method": method_name(table.method),
        "edges": table.edges.iter().map(|&e| edge_json(e)).collect::<Vec<_>>(),
        "table": rows,
    });
    if let Some(p) = pairing::closed_form_parameters(g) {
        out["parameters"] = srg_json(&p);
        out["self_pairing"] = Value::String(pairing::self_pairing(&p).to_string());
        out["eta"] = Value::String(pairing::eta(&p)?.to_string());
    }
    Ok(out)
}

fn analyze(g: &AnyGraph) -> Result<Value> {
    let laplacian = g.as_ref().laplacian();
    let poly = char_poly(&laplacian)?;
    let (zero_mult, _) = poly.strip_x_powers();
    let factorization: Vec<Value> = poly
        .square_free_factorization()
        .into_iter()
        .map(|(f, m)| json!({ "factor": f.to_string(), "multiplicity": m }))
        .collect();
    let mut eigenvalues: Vec<(BigInt, usize)> = Vec::new();
    for (f, m) in poly.square_free_factorization() {
        for r in f.integer_roots() {
            eigenvalues.push((r, m));
        }
    }
    eigenvalues.sort();
    let eigenvalues: Vec<Value> =
        eigenvalues.iter().map(|(r, m)| json!({ "value": big(r), "multiplicity": m })).collect();
    let product = distinct_nonzero_eigenvalue_product(&laplacian)?;
    let distinct = poly.square_free_part().degree().unwrap_or(0);

    let under = g.underlying();
    let connected = under.is_connected();
    let mut out = json!({
        "graph": { "n": under.n(), "edge_count": under.edge_count(), "signed": g.as_ref().is_signed(), "connected": connected },
        "laplacian_char_poly": poly.to_string(),
        "square_free_factorization": factorization,
        "distinct_eigenvalues": distinct,
        "zero_eigenvalue_multiplicity": zero_mult,
        "integer_eigenvalues": eigenvalues,
        "distinct_nonzero_eigenvalue_product": product.to_string(),
    });

    match g {
        AnyGraph::Plain(p) => {
            out["srg"] = detect_srg(p).map_or(Value::Null, |s| srg_json(&s));
            out["two_eigenvalue"] = if connected {
                detect_two_eigenvalue(p)?.map_or(Value::Null, |t| {
                    json!({
                        "n": t.n, "mu": t.mu, "mu_bar": t.mu_bar, "k1": t.k1, "k2": t.k2,
                        "theta_sum": t.theta_sum, "theta_prod": t.theta_prod, "regular": t.is_regular(),
                    })
                })
            } else {
                Value::Null
            };
        }
        AnyGraph::Signed(s) => {
            let balanced = match s.balance() {
                Balance::Balanced { switching } => {
                    out["balancing_switching"] = json!(switching.iter().map(|v| v + 1).collect::<Vec<_>>());
                    true
                }
                Balance::Unbalanced { witness_edge } => {
                    out["unbalanced_witness_edge"] = edge_json(witness_edge);
                    false
                }
            };
            out["balanced"] = Value::Bool(balanced);
            out["signed_two_eigenvalue"] = if connected && !balanced {
                detect_signed_two_eigenvalue(s)?.map_or(Value::Null, |t| {
                    let kind = match t.kind {
                        SignedTwoEigKind::Regular { k, lambda } => json!({ "regular": { "k": k, "lambda": lambda } }),
                        SignedTwoEigKind::TwoDegree { k1, k2 } => json!({ "two_degree": { "k1": k1, "k2": k2 } }),
                    };
                    json!({ "theta_sum": t.theta_sum, "theta_prod": t.theta_prod, "kind": kind })
                })
            } else {
                Value::Null
            };
        }
    }

    // A balanced signing is switching-equivalent to the all-positive one and
    // has the same critical group as the underlying graph.
    out["group"] = if !connected {
        Value::Null
    } else {
        let cg = match g {
            AnyGraph::Signed(s) if s.is_balanced() => CriticalGroup::of(s.graph())?,
            other => CriticalGroup::of_any(other.as_ref())?,
        };
        group_json(cg.group())
    };
    Ok(out)
}

fn tuple_json(t: &scan::FeasibleTuple) -> Value {
    let eigenvalues = match t.eigenvalues {
        scan::Eigenvalues::Integral { r, s } => json!({ "r": r, "s": s }),
        scan::Eigenvalues::Conference { disc } => json!({ "conference_discriminant": disc }),
    };
    json!({
        "parameters": srg_json(&t.params),
        "eigenvalues": eigenvalues,
        "multiplicities": [t.multiplicities.0, t.multiplicities.1],
        "eta": t.eta.to_string(),
        "n_mu": t.params.n_mu().to_string(),
        "eta_equals_n_mu": t.eta_equals_n_mu,
        "krein": t.krein,
        "absolute_bound": t.absolute_bound,
        "database_consistent": t.database_consistent(),
        "flagged_for_review": t.flagged_for_review(),
    })
}
