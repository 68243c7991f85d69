//! Subcommand implementations.
//!
//! Every command returns the text it would print on success, so `main`
//! and the integration tests share one code path. Failures map onto a
//! small table of exit codes:
//!
//! | code | meaning                                        |
//! |------|------------------------------------------------|
//! | 0    | success                                        |
//! | 1    | I/O or internal error                          |
//! | 2    | usage error                                    |
//! | 10   | graph file syntax error                        |
//! | 11   | semantic error / invalid graph                 |
//! | 12   | graph is not bilaterally complete              |
//! | 13   | oracle budget exceeded                         |
//! | 14   | verification or cross-check mismatch           |

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::fs;
use std::path::Path;
use std::time::Duration;

use serde_json::json;

use tripack::generator::{generate, GenSpec};
use tripack::network::build_network;
use tripack::oracle::{
    brute_max_packing, brute_min_transversal, enumerate_min_transversals, mao_cheng_min,
    uniform_transversal_min,
};
use tripack::solver::solve;
use tripack::{Error, OracleBudget, TripartiteGraph};

use crate::format::{self, ParseError, ParseErrorKind};

pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SYNTAX: i32 = 10;
pub const EXIT_INVALID: i32 = 11;
pub const EXIT_NOT_BILATERAL: i32 = 12;
pub const EXIT_BUDGET: i32 = 13;
pub const EXIT_MISMATCH: i32 = 14;

#[derive(Debug)]
pub enum CliError {
    /// Failed to read or write a file; the string names the path.
    Io(String, std::io::Error),
    /// The named input file did not parse.
    Parse(String, ParseError),
    /// The library rejected the instance or the run.
    Graph(Error),
    /// A certificate failed verification or oracles disagreed.
    Mismatch(String),
    /// The command line itself was inconsistent.
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(..) => EXIT_IO,
            CliError::Parse(_, e) => match e.kind {
                ParseErrorKind::Syntax => EXIT_SYNTAX,
                ParseErrorKind::Semantic => EXIT_INVALID,
            },
            CliError::Graph(Error::InvalidGraph(_)) => EXIT_INVALID,
            CliError::Graph(Error::NotBilaterallyComplete) => EXIT_NOT_BILATERAL,
            CliError::Graph(Error::BudgetExceeded(_)) => EXIT_BUDGET,
            CliError::Graph(_) => EXIT_IO,
            CliError::Mismatch(_) => EXIT_MISMATCH,
            CliError::Usage(_) => EXIT_USAGE,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(path, e) => write!(f, "{path}: {e}"),
            CliError::Parse(path, e) => write!(f, "{path}: {e}"),
            CliError::Graph(e) => write!(f, "{e}"),
            CliError::Mismatch(msg) => write!(f, "{msg}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Graph(e)
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Io(path.display().to_string(), e))
}

pub fn load_graph(path: &Path) -> Result<TripartiteGraph, CliError> {
    let text = read_file(path)?;
    format::parse_graph(&text).map_err(|e| CliError::Parse(path.display().to_string(), e))
}

fn join<T: fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    let mut out = String::new();
    for (i, item) in items.into_iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        write!(out, "{item}").unwrap();
    }
    out
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// `solve GRAPH [--machine] [--export-network FILE]`
pub fn solve_cmd(path: &Path, machine: bool, export: Option<&Path>) -> Result<String, CliError> {
    let g = load_graph(path)?;
    if let Some(dest) = export {
        let orientation = g.detect_orientation()?;
        let h = build_network(&orientation.apply(&g));
        write_file(dest, &h.export_arcs())?;
    }
    let cert = solve(&g)?;
    if machine {
        let doc = json!({
            "command": "solve",
            "value": cert.value,
            "transversal": cert.transversal.edges().iter().map(|e| e.to_string()).collect::<Vec<_>>(),
            "packing": cert.packing.triangles().iter().map(|t| t.to_string()).collect::<Vec<_>>(),
            "transversal_verified": cert.transversal_verified,
            "packing_verified": cert.packing_verified,
            "sizes_equal": cert.sizes_equal,
        });
        return Ok(doc.to_string());
    }
    let mut out = String::new();
    writeln!(out, "value: {}", cert.value).unwrap();
    writeln!(
        out,
        "transversal ({}): {}",
        cert.transversal.len(),
        join(cert.transversal.edges())
    )
    .unwrap();
    writeln!(
        out,
        "packing ({}): {}",
        cert.packing.len(),
        join(cert.packing.triangles())
    )
    .unwrap();
    write!(
        out,
        "verified: transversal={} packing={} sizes-equal={}",
        yes_no(cert.transversal_verified),
        yes_no(cert.packing_verified),
        yes_no(cert.sizes_equal)
    )
    .unwrap();
    Ok(out)
}

/// `verify GRAPH [--transversal FILE] [--packing FILE] [--machine]`
///
/// An invalid certificate is a [`CliError::Mismatch`], not a report line:
/// the exit code is the verdict.
pub fn verify_cmd(
    path: &Path,
    transversal: Option<&Path>,
    packing: Option<&Path>,
    machine: bool,
) -> Result<String, CliError> {
    if transversal.is_none() && packing.is_none() {
        return Err(CliError::Usage(
            "verify needs at least one of --transversal and --packing".into(),
        ));
    }
    let g = load_graph(path)?;
    let mut lines = Vec::new();
    let mut doc = BTreeMap::new();
    doc.insert("command".to_string(), json!("verify"));
    if let Some(tpath) = transversal {
        let text = read_file(tpath)?;
        let edges = format::parse_edge_list(&text)
            .map_err(|e| CliError::Parse(tpath.display().to_string(), e))?;
        let ok = g
            .is_transversal(&edges)
            .map_err(|e| CliError::Mismatch(format!("transversal invalid: {e}")))?;
        if !ok {
            return Err(CliError::Mismatch(
                "transversal does not meet every triangle".into(),
            ));
        }
        lines.push(format!("transversal: ok ({} edges)", edges.len()));
        doc.insert("transversal_ok".into(), json!(true));
        doc.insert("transversal_size".into(), json!(edges.len()));
    }
    if let Some(ppath) = packing {
        let text = read_file(ppath)?;
        let triangles = format::parse_triangle_list(&text)
            .map_err(|e| CliError::Parse(ppath.display().to_string(), e))?;
        let ok = g
            .is_packing(&triangles)
            .map_err(|e| CliError::Mismatch(format!("packing invalid: {e}")))?;
        if !ok {
            return Err(CliError::Mismatch(
                "packing triangles are not pairwise edge-disjoint".into(),
            ));
        }
        lines.push(format!("packing: ok ({} triangles)", triangles.len()));
        doc.insert("packing_ok".into(), json!(true));
        doc.insert("packing_size".into(), json!(triangles.len()));
    }
    if machine {
        Ok(json!(doc).to_string())
    } else {
        Ok(lines.join("\n"))
    }
}

#[derive(Clone, Debug)]
pub struct OracleArgs {
    pub all: bool,
    pub max_packing: bool,
    pub min_transversal: bool,
    pub uniform: bool,
    pub mao_cheng: bool,
    pub enumerate_min: bool,
    pub budget: OracleBudget,
    pub machine: bool,
}

/// `oracle GRAPH [--all | selection flags] [--enumerate-min] [--budget K=V,...] [--machine]`
///
/// Runs the requested reference algorithms (all of them by default), plus
/// the pipeline solver whenever the graph is bilaterally complete, and
/// cross-checks the results: on bilaterally complete graphs every value
/// must agree; otherwise the packing/transversal bounds must hold.
pub fn oracle_cmd(path: &Path, args: &OracleArgs) -> Result<String, CliError> {
    let g = load_graph(path)?;
    let run_all =
        args.all || !(args.max_packing || args.min_transversal || args.uniform || args.mao_cheng);
    let bilateral = g.detect_orientation().is_ok();
    let budget = &args.budget;

    let mut values: Vec<(&str, usize)> = Vec::new();
    let mut skipped: Vec<&str> = Vec::new();

    if bilateral {
        values.push(("solve", solve(&g)?.value));
    } else {
        skipped.push("solve");
    }
    let mut nu = None;
    if run_all || args.max_packing {
        let packing = brute_max_packing(&g, budget)?;
        nu = Some(packing.len());
        values.push(("brute_max_packing", packing.len()));
    }
    let mut tau = None;
    if run_all || args.min_transversal {
        let t = brute_min_transversal(&g, budget)?;
        tau = Some(t.len());
        values.push(("brute_min_transversal", t.len()));
    }
    // The two formula oracles require bilateral completeness. A blanket
    // run skips them on other graphs; an explicit request fails loudly.
    if run_all || args.uniform {
        if bilateral || !run_all {
            values.push((
                "uniform_transversal_min",
                uniform_transversal_min(&g, budget)?,
            ));
        } else {
            skipped.push("uniform_transversal_min");
        }
    }
    if run_all || args.mao_cheng {
        if bilateral || !run_all {
            values.push(("mao_cheng_min", mao_cheng_min(&g, budget)?));
        } else {
            skipped.push("mao_cheng_min");
        }
    }

    let minimum_transversals = if args.enumerate_min {
        Some(enumerate_min_transversals(&g, budget)?)
    } else {
        None
    };

    let agreement = if bilateral {
        let first = values.first().map(|&(_, v)| v);
        if values.iter().any(|&(_, v)| Some(v) != first) {
            let detail = join(values.iter().map(|(n, v)| format!("{n}={v}")));
            return Err(CliError::Mismatch(format!(
                "oracle values differ: {detail}"
            )));
        }
        match first {
            Some(v) => format!("all values equal ({v})"),
            None => "nothing to compare".to_string(),
        }
    } else {
        match (nu, tau) {
            (Some(nu), Some(tau)) if nu > tau || tau > 3 * nu => {
                return Err(CliError::Mismatch(format!(
                    "packing/transversal bounds violated: packing={nu} transversal={tau}"
                )));
            }
            (Some(nu), Some(tau)) => {
                format!("bounds hold ({nu} <= {tau} <= {})", 3 * nu)
            }
            _ => "nothing to compare".to_string(),
        }
    };

    if args.machine {
        let mut value_doc = BTreeMap::new();
        for &(name, v) in &values {
            value_doc.insert(name.to_string(), json!(v));
        }
        let mut doc = BTreeMap::new();
        doc.insert("command".to_string(), json!("oracle"));
        doc.insert("agreement".into(), json!(true));
        doc.insert("bilaterally_complete".into(), json!(bilateral));
        doc.insert("values".into(), json!(value_doc));
        doc.insert("skipped".into(), json!(skipped));
        if let Some(list) = &minimum_transversals {
            let rendered: Vec<String> = list.iter().map(|t| join(t.edges())).collect();
            doc.insert("minimum_transversals".into(), json!(rendered));
        }
        return Ok(json!(doc).to_string());
    }

    let mut out = String::new();
    for (name, v) in &values {
        writeln!(out, "{name}: {v}").unwrap();
    }
    for name in &skipped {
        writeln!(out, "{name}: skipped (graph is not bilaterally complete)").unwrap();
    }
    write!(out, "agreement: {agreement}").unwrap();
    if let Some(list) = &minimum_transversals {
        write!(out, "\nminimum transversals ({}):", list.len()).unwrap();
        for t in list {
            write!(out, "\n{}", join(t.edges())).unwrap();
        }
    }
    Ok(out)
}

/// `gen --p P --q Q --r R [--mode ...] [--seed S] [--out FILE]`
pub fn gen_cmd(spec: &GenSpec, out: Option<&Path>) -> Result<String, CliError> {
    let g = generate(spec);
    let text = format::serialize_graph(&g);
    match out {
        Some(path) => {
            write_file(path, &text)?;
            Ok(format!("wrote {}", path.display()))
        }
        None => Ok(text.trim_end().to_string()),
    }
}

/// `triangles GRAPH [--machine]`
pub fn triangles_cmd(path: &Path, machine: bool) -> Result<String, CliError> {
    let g = load_graph(path)?;
    let triangles = g.triangles();
    if machine {
        let doc = json!({
            "command": "triangles",
            "count": triangles.len(),
            "triangles": triangles.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        });
        return Ok(doc.to_string());
    }
    let mut out = format!("count: {}", triangles.len());
    for t in &triangles {
        write!(out, "\n{t}").unwrap();
    }
    Ok(out)
}

/// Parses `--budget` values: comma-separated `key=value` pairs over the
/// keys `triangles`, `bc-edges`, `bc-vertices`, and `seconds`. Unnamed
/// keys keep their defaults.
pub fn parse_budget(s: &str) -> Result<OracleBudget, CliError> {
    let mut budget = OracleBudget::default();
    for item in s.split(',') {
        let item = item.trim();
        let Some((key, value)) = item.split_once('=') else {
            return Err(CliError::Usage(format!(
                "budget item '{item}' is not of the form key=value"
            )));
        };
        let parsed: u64 = value
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("budget value '{value}' is not a number")))?;
        match key.trim() {
            "triangles" => budget.max_triangles = parsed as usize,
            "bc-edges" => budget.max_bc_edges = parsed as usize,
            "bc-vertices" => budget.max_bc_vertices = parsed as usize,
            "seconds" => budget.time_limit = Duration::from_secs(parsed),
            other => {
                return Err(CliError::Usage(format!(
                    "unknown budget key '{other}' (expected triangles, bc-edges, bc-vertices, or seconds)"
                )));
            }
        }
    }
    Ok(budget)
}
