//! Batch front-end: parse inputs, dispatch subcommands, and emit canonical
//! JSON reports. Identical inputs produce byte-identical output.
//!
//! Exit codes: 0 = ok/classified, 2 = malformed input, 3 = no case matched,
//! 4 = precondition violated, 5 = enumeration bound exceeded.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use symquot::catalog::{self, CatalogError, CatalogObject};
use symquot::classifier::{self, ClassificationReport, ClassifyError, Mode};
use symquot::constructions::{self, ConstructError};
use symquot::graphs::Graph;
use symquot::json as codec;
use symquot::permgroup::{GeneratedGroup, GroupError, DEFAULT_BOUND};
use symquot::quotient::{QuotientError, SymmetricTriple};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_NO_CASE: i32 = 3;
pub const EXIT_PRECONDITION: i32 = 4;
pub const EXIT_BOUND: i32 = 5;

#[derive(Parser)]
#[command(
    name = "symquot",
    about = "Quotient-graph and block-design invariants of imprimitive symmetric graphs",
    after_help = catalog_help()
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn catalog_help() -> String {
    let mut s = String::from("Catalog keys:\n");
    for (key, what) in catalog::keys() {
        s.push_str(&format!("  {key:<14} {what}\n"));
    }
    s
}

#[derive(Subcommand)]
enum Command {
    /// Compute parameters, identities and fingerprints of a triple.
    Analyze(AnalyzeArgs),
    /// Analyze and dispatch against the admissible case list.
    Classify(ClassifyArgs),
    /// Emit a catalog object (triple, design or graph) as JSON.
    Construct(ConstructArgs),
    /// Enumerate the 3-arc orbits of a graph under a group.
    Orbits(OrbitsArgs),
    /// List the built-in catalog keys.
    Catalog,
}

#[derive(Args)]
struct InputArgs {
    /// Built-in catalog key.
    #[arg(long, conflicts_with = "input")]
    catalog: Option<String>,
    /// Path to a JSON input record.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Write the JSON report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Element-enumeration bound.
    #[arg(long, default_value_t = DEFAULT_BOUND)]
    bound: usize,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: InputArgs,
    /// The prime p = v - k; defaults to v - k of the triple.
    #[arg(long)]
    p: Option<usize>,
    /// Print a human-readable summary to standard error.
    #[arg(long)]
    summary: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long)]
    p: Option<usize>,
    /// Case list to dispatch against; defaults to the list for p.
    #[arg(long, value_parser = parse_mode)]
    mode: Option<Mode>,
    #[arg(long)]
    summary: bool,
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    match s {
        "theorem1" => Ok(Mode::Theorem1),
        "p3" => Ok(Mode::P3),
        "p5" => Ok(Mode::P5),
        other => Err(format!("unknown mode `{other}` (theorem1, p3, p5)")),
    }
}

#[derive(Args)]
struct ConstructArgs {
    /// Built-in catalog key.
    #[arg(long)]
    catalog: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OrbitsArgs {
    #[command(flatten)]
    input: InputArgs,
}

/// Runs one command line (without the program name) and returns the exit
/// code. All JSON goes to `out`, human text to `err`.
pub fn run_command(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let full = std::iter::once("symquot".to_string()).chain(argv.iter().cloned());
    let cli = match Cli::try_parse_from(full) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders --help/--version as "errors" with success status.
            let use_err = e.use_stderr();
            let target: &mut dyn Write = if use_err { err } else { out };
            let _ = write!(target, "{e}");
            return if use_err { EXIT_MALFORMED } else { EXIT_OK };
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Analyze(args) => {
            let triple = load_triple(&args.input)?;
            let p = choose_p(&triple, args.p)?;
            let report = classifier::analyze_triple(&triple, p, args.input.bound)?;
            emit(&codec::encode_report(&report), &args.input.out, out)?;
            if args.summary {
                summarize(&report, err);
            }
            Ok(if report.preconditions_ok() {
                EXIT_OK
            } else {
                EXIT_PRECONDITION
            })
        }
        Command::Classify(args) => {
            let triple = load_triple(&args.input)?;
            let p = choose_p(&triple, args.p)?;
            let report = classifier::analyze_triple(&triple, p, args.input.bound)?;
            let mode = args.mode.unwrap_or_else(|| Mode::for_prime(p));
            let report = classifier::classify(&triple, report, mode, args.input.bound)?;
            emit(&codec::encode_report(&report), &args.input.out, out)?;
            if args.summary {
                summarize(&report, err);
            }
            Ok(if !report.preconditions_ok() {
                EXIT_PRECONDITION
            } else if report.matched_case.is_some() {
                EXIT_OK
            } else {
                EXIT_NO_CASE
            })
        }
        Command::Construct(args) => {
            let object = catalog::build(&args.catalog)?;
            let value = match &object {
                CatalogObject::Triple(t) => codec::encode_triple(t),
                CatalogObject::Design { design, group } => json!({
                    "design": codec::encode_design(design),
                    "group": codec::encode_group(group),
                }),
                CatalogObject::Graph { graph, group } => json!({
                    "graph": codec::encode_graph(graph),
                    "group": codec::encode_group(group),
                }),
            };
            emit(&value, &args.out, out)?;
            Ok(EXIT_OK)
        }
        Command::Orbits(args) => {
            let (graph, group) = load_graph_with_group(&args.input)?;
            let orbits = constructions::three_arc_orbits(&graph, &group)?;
            let value = json!({
                "orbits": orbits
                    .iter()
                    .map(|o| json!({
                        "representative": o.representative.to_vec(),
                        "size": o.len(),
                        "self_paired": o.self_paired,
                    }))
                    .collect::<Vec<_>>(),
            });
            emit(&value, &args.input.out, out)?;
            Ok(EXIT_OK)
        }
        Command::Catalog => {
            for (key, what) in catalog::keys() {
                let _ = writeln!(out, "{key:<14} {what}");
            }
            Ok(EXIT_OK)
        }
    }
}

fn choose_p(triple: &SymmetricTriple, p: Option<usize>) -> Result<usize, CliError> {
    match p {
        Some(p) => Ok(p),
        None => {
            let params = triple.parameters()?;
            Ok(params.v - params.k)
        }
    }
}

fn load_triple(input: &InputArgs) -> Result<SymmetricTriple, CliError> {
    match (&input.catalog, &input.input) {
        (Some(key), None) => match catalog::build(key)? {
            CatalogObject::Triple(t) => Ok(t),
            _ => Err(CliError::NotATriple(key.clone())),
        },
        (None, Some(path)) => {
            let value = read_json(path)?;
            Ok(codec::decode_triple(&value, "triple")?)
        }
        _ => Err(CliError::NeedInput),
    }
}

fn load_graph_with_group(input: &InputArgs) -> Result<(Graph, GeneratedGroup), CliError> {
    match (&input.catalog, &input.input) {
        (Some(key), None) => match catalog::build(key)? {
            CatalogObject::Graph { graph, group } => Ok((graph, group)),
            CatalogObject::Triple(t) => Ok((t.graph().clone(), t.group().clone())),
            _ => Err(CliError::NotAGraph(key.clone())),
        },
        (None, Some(path)) => {
            let value = read_json(path)?;
            let obj = value.as_object().ok_or_else(|| {
                CliError::Schema(codec::SchemaError {
                    path: "input".into(),
                    message: "expected an object".into(),
                })
            })?;
            let graph_value = obj.get("graph").ok_or_else(|| {
                CliError::Schema(codec::SchemaError {
                    path: "input.graph".into(),
                    message: "missing field".into(),
                })
            })?;
            let group_value = obj.get("group").ok_or_else(|| {
                CliError::Schema(codec::SchemaError {
                    path: "input.group".into(),
                    message: "missing field".into(),
                })
            })?;
            let graph = codec::decode_graph(graph_value, "input.graph")?;
            let group = codec::decode_group(group_value, "input.group")?;
            Ok((graph, group))
        }
        _ => Err(CliError::NeedInput),
    }
}

fn read_json(path: &PathBuf) -> Result<Value, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn emit(value: &Value, out_path: &Option<PathBuf>, out: &mut dyn Write) -> Result<(), CliError> {
    let text = codec::to_canonical_string(value);
    match out_path {
        Some(path) => {
            fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
        }
        None => {
            let _ = out.write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn summarize(report: &ClassificationReport, err: &mut dyn Write) {
    let p = &report.parameters;
    let _ = writeln!(
        err,
        "parameters: v = {}, k = {}, r = {}, b = {}, m = {}, p = {}",
        p.v, p.k, p.r, p.b, p.m, report.p
    );
    if let Some(l) = &report.lambda {
        let _ = writeln!(err, "lambda: {:?} (lambda_bar {:?})", l.status, l.lambda_bar);
    }
    let _ = writeln!(
        err,
        "quotient 2-arc transitive: {}",
        report.quotient_two_arc_transitive
    );
    match report.matched_case {
        Some(c) => {
            let _ = writeln!(err, "matched case: ({c})");
        }
        None => {
            let _ = writeln!(err, "matched case: none");
        }
    }
    for finding in &report.findings {
        let _ = writeln!(err, "finding: {finding}");
    }
}

#[derive(Debug)]
enum CliError {
    NeedInput,
    NotATriple(String),
    NotAGraph(String),
    Io(String),
    Schema(codec::SchemaError),
    Catalog(CatalogError),
    Classify(ClassifyError),
    Quotient(QuotientError),
    Construct(ConstructError),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::NeedInput => write!(f, "provide exactly one of --catalog or --in"),
            CliError::NotATriple(k) => write!(f, "catalog key `{k}` is not a triple"),
            CliError::NotAGraph(k) => write!(f, "catalog key `{k}` is not a graph"),
            CliError::Io(m) => write!(f, "{m}"),
            CliError::Schema(e) => write!(f, "{e}"),
            CliError::Catalog(e) => write!(f, "{e}"),
            CliError::Classify(e) => write!(f, "{e}"),
            CliError::Quotient(e) => write!(f, "{e}"),
            CliError::Construct(e) => write!(f, "{e}"),
        }
    }
}

impl From<codec::SchemaError> for CliError {
    fn from(e: codec::SchemaError) -> Self {
        CliError::Schema(e)
    }
}
impl From<CatalogError> for CliError {
    fn from(e: CatalogError) -> Self {
        CliError::Catalog(e)
    }
}
impl From<ClassifyError> for CliError {
    fn from(e: ClassifyError) -> Self {
        CliError::Classify(e)
    }
}
impl From<QuotientError> for CliError {
    fn from(e: QuotientError) -> Self {
        CliError::Quotient(e)
    }
}
impl From<ConstructError> for CliError {
    fn from(e: ConstructError) -> Self {
        CliError::Construct(e)
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::NeedInput | CliError::NotATriple(_) | CliError::NotAGraph(_) => {
                EXIT_MALFORMED
            }
            CliError::Io(_) | CliError::Schema(_) => EXIT_MALFORMED,
            CliError::Catalog(e) => match e {
                CatalogError::UnknownKey(_) | CatalogError::BadParameter { .. } => EXIT_MALFORMED,
                CatalogError::Construct(c) => construct_exit(c),
                CatalogError::Group(g) => group_exit(g),
                CatalogError::Graph(_) => EXIT_PRECONDITION,
                CatalogError::Quotient(q) => quotient_exit(q),
            },
            CliError::Classify(e) => classify_exit(e),
            CliError::Quotient(q) => quotient_exit(q),
            CliError::Construct(c) => construct_exit(c),
        }
    }
}

fn group_exit(e: &GroupError) -> i32 {
    match e {
        GroupError::ExceedsBound { .. } => EXIT_BOUND,
        _ => EXIT_PRECONDITION,
    }
}

fn quotient_exit(e: &QuotientError) -> i32 {
    match e {
        QuotientError::Group(g) => group_exit(g),
        QuotientError::BadPartition { .. } => EXIT_MALFORMED,
        _ => EXIT_PRECONDITION,
    }
}

fn construct_exit(e: &ConstructError) -> i32 {
    match e {
        ConstructError::ParamOutOfRange(_) => EXIT_MALFORMED,
        ConstructError::Group(g) => group_exit(g),
        ConstructError::Quotient(q) => quotient_exit(q),
        _ => EXIT_PRECONDITION,
    }
}

fn classify_exit(e: &ClassifyError) -> i32 {
    match e {
        ClassifyError::Group(g) => group_exit(g),
        ClassifyError::Quotient(q) => quotient_exit(q),
        _ => EXIT_PRECONDITION,
    }
}
