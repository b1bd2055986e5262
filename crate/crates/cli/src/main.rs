//! Command-line surface for the token-graph library.
//!
//! Subcommands: `gen` (named graph families), `build` (token graphs from a
//! base graph), `inv` (exact invariants with witnesses), `iso` / `aut`
//! (isomorphism and automorphisms), and `verify` (the named check suites).
//!
//! Graph inputs are read from a file or standard input (`-`), auto-detected
//! by extension — `.g6` for graph6, `.el` for edge-list — with `--input-format`
//! as the override; bare or piped input defaults to graph6.  All structured
//! output is JSON on standard output; group orders print as decimal strings
//! so consumers never face 64-bit overflow.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error,
//! 3 resource budget exceeded.

use std::fmt::Display;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tokgraph::budget::{Budget, ResourceError};
use tokgraph::canon::{automorphism_group, is_isomorphic};
use tokgraph::codec::{
    dot_export, edge_list_decode, edge_list_encode, graph6_decode, graph6_encode,
};
use tokgraph::family::{generate, Family, FamilySpec};
use tokgraph::graph::Graph;
use tokgraph::harness::{run_suite, RunOptions};
use tokgraph::invariants::{
    bipartiteness, chromatic_number, clique_number, connected_components, domination_number,
    independence_number, independent_domination_number,
};
use tokgraph::token::{build_move_union, build_token_graph, build_variant, TokenGraph, VariantKind};

#[derive(Parser)]
#[command(
    name = "tokgraph",
    version,
    about = "Build token graphs, compute exact invariants, and verify the documented results"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a member of a named graph family
    Gen(GenArgs),
    /// Build a token graph from a base graph
    Build(BuildArgs),
    /// Compute exact invariants of a graph, with witnesses
    Inv(InvArgs),
    /// Decide whether two graphs are isomorphic
    Iso(IsoArgs),
    /// Compute automorphism-group generators and the exact group order
    Aut(AutArgs),
    /// Run verification suites and emit a JSON report
    Verify(VerifyArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Family name: path, cycle, complete, complete_bipartite, star,
    /// diamond, kneser, or cycle_with_bicliques
    family: String,
    /// Integer parameters of the family, e.g. `gen cycle 7` or
    /// `gen complete_bipartite 2 3`
    params: Vec<usize>,
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::G6)]
    format: OutputFormat,
    /// Output path (standard output when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BuildArgs {
    /// Base graph path, or `-` for standard input
    #[arg(default_value = "-")]
    input: String,
    /// Number of tokens per configuration
    #[arg(long)]
    k: usize,
    /// Exact number of moving tokens: build the m-move graph F_k^m
    #[arg(long, conflicts_with = "variant")]
    m: Option<usize>,
    /// Alternative construction instead of --m
    #[arg(long, value_enum)]
    variant: Option<VariantArg>,
    /// Symmetric-difference radius for the fkr and fkr-prime variants
    #[arg(long, conflicts_with = "m")]
    r: Option<usize>,
    /// Input format override
    #[arg(long, value_enum)]
    input_format: Option<InputFormat>,
    /// Output format; dot embeds the token-set labels
    #[arg(long, value_enum, default_value_t = OutputFormat::G6)]
    format: OutputFormat,
    /// Output path (standard output when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Path for the one-label-per-line token-set sidecar; defaults to
    /// `<out>.labels` when --out is given, otherwise no sidecar is written
    #[arg(long)]
    labels: Option<PathBuf>,
}

#[derive(Args)]
struct InvArgs {
    /// Graph path, or `-` for standard input
    #[arg(default_value = "-")]
    input: String,
    /// Which invariant to compute
    #[arg(long, value_enum, default_value_t = Which::All)]
    which: Which,
    /// Input format override
    #[arg(long, value_enum)]
    input_format: Option<InputFormat>,
    /// Search-node budget for the exact solvers (default: unlimited)
    #[arg(long)]
    node_limit: Option<u64>,
    /// Wall-clock budget in seconds for the exact solvers
    #[arg(long)]
    timeout: Option<u64>,
}

#[derive(Args)]
struct IsoArgs {
    /// First graph
    first: String,
    /// Second graph
    second: String,
    /// Input format override (applies to both inputs)
    #[arg(long, value_enum)]
    input_format: Option<InputFormat>,
    /// Search-node budget (default: unlimited)
    #[arg(long)]
    node_limit: Option<u64>,
    /// Wall-clock budget in seconds
    #[arg(long)]
    timeout: Option<u64>,
}

#[derive(Args)]
struct AutArgs {
    /// Graph path, or `-` for standard input
    #[arg(default_value = "-")]
    input: String,
    /// Input format override
    #[arg(long, value_enum)]
    input_format: Option<InputFormat>,
    /// Search-node budget (default: unlimited)
    #[arg(long)]
    node_limit: Option<u64>,
    /// Wall-clock budget in seconds
    #[arg(long)]
    timeout: Option<u64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// `all`, `fast`, or a comma-separated list of check names
    #[arg(long, default_value = "fast")]
    suite: String,
    /// Seed for the seeded samplers
    #[arg(long, env = "TOKGRAPH_SEED", default_value_t = 0)]
    seed: u64,
    /// Cap sampled and swept sizes at this many base vertices
    #[arg(long)]
    max_n: Option<usize>,
    /// Per-check wall-clock budget in seconds
    #[arg(long)]
    timeout: Option<u64>,
    /// Per-check search-node budget
    #[arg(long)]
    node_limit: Option<u64>,
    /// Also run checks marked slow
    #[arg(long)]
    include_slow: bool,
    /// Write the JSON report here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    G6,
    Edgelist,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    G6,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    /// |A Δ B| = 2r with a matching of edges across the difference
    Fkr,
    /// |A Δ B| = 2r with every pair across the difference an edge
    FkrPrime,
    /// Union of the m-move graphs for m = 1..k
    Union,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Components,
    Bipartite,
    Alpha,
    Omega,
    Chi,
    Gamma,
    Idom,
    All,
}

/// A user-facing failure carrying the exit code it should produce.
struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn usage(message: impl Display) -> CliError {
        CliError {
            code: 2,
            message: message.to_string(),
        }
    }
}

impl From<ResourceError> for CliError {
    fn from(e: ResourceError) -> CliError {
        CliError {
            code: 3,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> CliError {
        CliError::usage(e)
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Gen(args) => gen(args),
        Command::Build(args) => build(args),
        Command::Inv(args) => inv(args),
        Command::Iso(args) => iso(args),
        Command::Aut(args) => aut(args),
        Command::Verify(args) => verify(args),
    }
}

fn gen(args: GenArgs) -> Result<ExitCode, CliError> {
    let family: Family = args.family.parse().map_err(CliError::usage)?;
    let spec = FamilySpec {
        family,
        params: args.params,
    };
    let g = generate(&spec).map_err(CliError::usage)?;
    let text = render_graph(&g, args.format, None);
    write_text(&text, args.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn build(args: BuildArgs) -> Result<ExitCode, CliError> {
    let g = read_graph(&args.input, args.input_format)?;
    let t = build_requested(&g, &args)?;
    let labels = t.labels();
    let text = render_graph(t.graph(), args.format, Some(&labels));
    write_text(&text, args.out.as_deref())?;
    let sidecar = args
        .labels
        .clone()
        .or_else(|| args.out.as_ref().map(|p| sidecar_path(p)));
    if let Some(path) = sidecar {
        let mut body = labels.join("\n");
        body.push('\n');
        fs::write(&path, body)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn build_requested(g: &Graph, args: &BuildArgs) -> Result<TokenGraph, CliError> {
    let built = match (args.m, args.variant) {
        (Some(m), None) => build_token_graph(g, args.k, m),
        (None, Some(VariantArg::Union)) => {
            if args.r.is_some() {
                return Err(CliError::usage("--variant union does not take --r"));
            }
            build_move_union(g, args.k)
        }
        (None, Some(v)) => {
            let r = args
                .r
                .ok_or_else(|| CliError::usage("--variant fkr and fkr-prime require --r"))?;
            let kind = match v {
                VariantArg::Fkr => VariantKind::Matching,
                VariantArg::FkrPrime => VariantKind::AllEdges,
                VariantArg::Union => unreachable!("handled above"),
            };
            build_variant(g, args.k, r, kind)
        }
        (None, None) => return Err(CliError::usage("one of --m or --variant is required")),
        (Some(_), Some(_)) => unreachable!("clap rejects --m with --variant"),
    };
    built.map_err(CliError::usage)
}

fn inv(args: InvArgs) -> Result<ExitCode, CliError> {
    let g = read_graph(&args.input, args.input_format)?;
    let mut budget = make_budget(args.node_limit, args.timeout);
    let mut out = json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
    });
    let fields = out.as_object_mut().expect("literal object");
    let want = |w: Which| args.which == w || args.which == Which::All;
    if want(Which::Components) {
        let comps = connected_components(&g);
        fields.insert("components".into(), json!({"count": comps.len(), "members": comps}));
    }
    if want(Which::Bipartite) {
        let cert = bipartiteness(&g);
        fields.insert(
            "bipartite".into(),
            json!({
                "value": cert.is_bipartite(),
                "certificate": serde_json::to_value(&cert).expect("certificate serializes"),
            }),
        );
    }
    let solve = |name: &str,
                     solver: fn(&Graph, &mut Budget) -> Result<tokgraph::invariants::InvariantWitness, ResourceError>,
                     budget: &mut Budget|
     -> Result<Value, CliError> {
        let iw = solver(&g, budget)?;
        debug_assert!(iw.validate(&g).is_ok(), "{name} witness must re-validate");
        Ok(serde_json::to_value(&iw).expect("invariant witness serializes"))
    };
    if want(Which::Alpha) {
        let v = solve("alpha", independence_number, &mut budget)?;
        fields.insert("alpha".into(), v);
    }
    if want(Which::Omega) {
        let v = solve("omega", clique_number, &mut budget)?;
        fields.insert("omega".into(), v);
    }
    if want(Which::Chi) {
        let v = solve("chi", chromatic_number, &mut budget)?;
        fields.insert("chi".into(), v);
    }
    if want(Which::Gamma) {
        let v = solve("gamma", domination_number, &mut budget)?;
        fields.insert("gamma".into(), v);
    }
    if want(Which::Idom) {
        let v = solve("idom", independent_domination_number, &mut budget)?;
        fields.insert("idom".into(), v);
    }
    write_json(&out)?;
    Ok(ExitCode::SUCCESS)
}

fn iso(args: IsoArgs) -> Result<ExitCode, CliError> {
    let g = read_graph(&args.first, args.input_format)?;
    let h = read_graph(&args.second, args.input_format)?;
    let mut budget = make_budget(args.node_limit, args.timeout);
    let mapping = is_isomorphic(&g, &h, &mut budget)?;
    let out = match mapping {
        Some(p) => json!({"isomorphic": true, "mapping": p.image()}),
        None => json!({"isomorphic": false, "mapping": null}),
    };
    write_json(&out)?;
    Ok(ExitCode::SUCCESS)
}

fn aut(args: AutArgs) -> Result<ExitCode, CliError> {
    let g = read_graph(&args.input, args.input_format)?;
    let mut budget = make_budget(args.node_limit, args.timeout);
    let group = automorphism_group(&g, &mut budget)?;
    let generators: Vec<&[usize]> = group.generators.iter().map(|p| p.image()).collect();
    let out = json!({
        "order": group.order.to_string(),
        "generator_count": generators.len(),
        "generators": generators,
    });
    write_json(&out)?;
    Ok(ExitCode::SUCCESS)
}

fn verify(args: VerifyArgs) -> Result<ExitCode, CliError> {
    let opts = RunOptions {
        seed: args.seed,
        include_slow: args.include_slow,
        max_n: args.max_n,
        timeout_secs: args.timeout,
        node_limit: args.node_limit,
    };
    let report = run_suite(&args.suite, &opts).map_err(CliError::usage)?;
    for check in &report.checks {
        eprintln!("{:<28} {}", check.name, check.status.as_str());
    }
    eprintln!(
        "pass {} / fail {} / discrepancy-expected {} / skipped {}",
        report.summary.pass, report.summary.fail, report.summary.discrepancy, report.summary.skipped
    );
    let mut body = report.to_json();
    body.push('\n');
    write_text(&body, args.out.as_deref())?;
    let code = u8::try_from(report.exit_code()).expect("exit codes are 0, 1 or 3");
    Ok(ExitCode::from(code))
}

/// Read a graph from `path` (or standard input for `-`), deciding the format
/// from the override, else the file extension, else defaulting to graph6.
fn read_graph(path: &str, fmt: Option<InputFormat>) -> Result<Graph, CliError> {
    let text = if path == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        fs::read_to_string(path)
            .map_err(|e| CliError::usage(format!("cannot read {path}: {e}")))?
    };
    let fmt = fmt.unwrap_or(if path.ends_with(".el") {
        InputFormat::Edgelist
    } else {
        InputFormat::G6
    });
    match fmt {
        InputFormat::G6 => {
            let line = text
                .lines()
                .find(|l| !l.trim().is_empty())
                .ok_or_else(|| CliError::usage(format!("{path} is empty")))?;
            graph6_decode(line.trim()).map_err(CliError::usage)
        }
        InputFormat::Edgelist => edge_list_decode(&text).map_err(CliError::usage),
    }
}

fn render_graph(g: &Graph, fmt: OutputFormat, labels: Option<&[String]>) -> String {
    match fmt {
        OutputFormat::G6 => {
            let mut s = graph6_encode(g);
            s.push('\n');
            s
        }
        OutputFormat::Edgelist => edge_list_encode(g),
        OutputFormat::Dot => dot_export(g, labels),
    }
}

fn write_text(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => {
            if let Err(e) = io::stdout().write_all(text.as_bytes()) {
                // A closed pipe means the reader has seen all it wants
                // (e.g. `| head`); treat that as success, not an error.
                if e.kind() != io::ErrorKind::BrokenPipe {
                    return Err(e.into());
                }
            }
        }
    }
    Ok(())
}

/// Pretty-print a JSON document to standard output.
fn write_json(value: &Value) -> Result<(), CliError> {
    let mut body = serde_json::to_string_pretty(value).expect("documents serialize");
    body.push('\n');
    write_text(&body, None)
}

fn sidecar_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".labels");
    PathBuf::from(name)
}

fn make_budget(node_limit: Option<u64>, timeout: Option<u64>) -> Budget {
    match (node_limit, timeout) {
        (None, None) => Budget::unlimited(),
        (nodes, secs) => Budget::new(nodes.unwrap_or(u64::MAX), secs),
    }
}
