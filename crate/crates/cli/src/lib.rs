//! The `msgraph` command line. [`run`] takes the argument vector and two
//! output streams and returns the process exit code, so it can be driven
//! in-process by tests.
//!
//! Exit codes: 0 success, 1 undefined result or non-isomorphic inputs,
//! 2 usage or input error, 3 campaign failures.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use msgraph_core::harness::{
    check_algebraic_properties, check_apply_reduction, check_composition_equivalence,
    CampaignReport,
};
use msgraph_core::io::{
    export_dot, parse_graph, parse_lexicon, parse_term, serialize_as_graph, serialize_graph,
};
use msgraph_core::{
    evaluate, find_isomorphism, parallel_compose, parallel_compose_classic, AlgebraError,
    ApplyMode, ComposeError, EnumerationBounds, Evaluation, MsGraph, SourceLabel, Symbol,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNDEFINED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAMPAIGN: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "msgraph", version, about = "Evaluate, compose and compare ms-graphs")]
struct Cli {
    /// Write the result here instead of standard output.
    #[arg(short, long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a term against a lexicon.
    Eval {
        #[arg(long, value_name = "PATH")]
        lexicon: PathBuf,
        #[arg(long, value_name = "STRING")]
        term: String,
        #[arg(long, value_enum, default_value_t = Mode::Relaxed)]
        mode: Mode,
        /// Also refuse labels that are additional root labels of the argument.
        #[arg(long)]
        strict_root: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Parallel composition of two graphs.
    Compose {
        left: PathBuf,
        right: PathBuf,
        /// Use the classic gluing, defined on s-graphs only.
        #[arg(long)]
        classic: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check two graphs for source-preserving isomorphism and print the
    /// vertex mapping.
    Iso { left: PathBuf, right: PathBuf },
    /// Run the property campaigns over enumerated and sampled graphs.
    CheckEquivalence(CampaignArgs),
    /// Export a graph in DOT.
    Dot { graph: PathBuf },
}

#[derive(Debug, Args)]
struct CampaignArgs {
    #[arg(long, default_value_t = 3)]
    max_vertices: usize,
    #[arg(long, default_value_t = 2)]
    max_edges: usize,
    /// Source labels, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "a,b,rt")]
    labels: Vec<String>,
    /// Node labels, comma separated. Unlabeled nodes only by default.
    #[arg(long, value_delimiter = ',')]
    node_labels: Vec<String>,
    #[arg(long, value_delimiter = ',', default_value = "e")]
    edge_labels: Vec<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Generated instances for the apply campaign and sampled triples for
    /// associativity.
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    #[arg(long, value_enum, default_value_t = Campaign::All)]
    campaign: Campaign,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Original,
    Relaxed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Campaign {
    Composition,
    Apply,
    Algebra,
    All,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }

    fn undefined(message: impl ToString) -> Self {
        Failure {
            code: EXIT_UNDEFINED,
            message: message.to_string(),
        }
    }
}

/// Output of a successful subcommand. A campaign with failures still has a
/// report to print, so it carries its own exit code.
struct Success {
    text: String,
    code: i32,
}

impl From<String> for Success {
    fn from(text: String) -> Self {
        Success { text, code: EXIT_OK }
    }
}

pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let result = dispatch(cli.command).and_then(|success| {
        match &cli.output {
            Some(path) => std::fs::write(path, &success.text)
                .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?,
            None => stdout
                .write_all(success.text.as_bytes())
                .map_err(Failure::usage)?,
        }
        Ok(success.code)
    });
    match result {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(stderr, "msgraph: {}", failure.message);
            failure.code
        }
    }
}

fn dispatch(command: Command) -> Result<Success, Failure> {
    match command {
        Command::Eval {
            lexicon,
            term,
            mode,
            strict_root,
            format,
        } => eval(&lexicon, &term, mode, strict_root, format).map(Success::from),
        Command::Compose {
            left,
            right,
            classic,
            format,
        } => {
            let (g, h) = (read_graph(&left)?, read_graph(&right)?);
            let out = if classic {
                parallel_compose_classic(&g, &h)
            } else {
                parallel_compose(&g, &h)
            };
            out.map(|g| render(&g, format).into()).map_err(|e| match e {
                ComposeError::NotAnSGraph { .. } | ComposeError::InvalidOperand { .. } => {
                    Failure::usage(e)
                }
                _ => Failure::undefined(e),
            })
        }
        Command::Iso { left, right } => {
            let (g, h) = (read_graph(&left)?, read_graph(&right)?);
            match find_isomorphism(&g, &h).map_err(Failure::usage)? {
                Some(mapping) => {
                    let text = serde_json::to_string_pretty(&mapping).expect("string map");
                    Ok(format!("{text}\n").into())
                }
                None => Err(Failure::undefined("not isomorphic")),
            }
        }
        Command::CheckEquivalence(args) => campaigns(&args),
        Command::Dot { graph } => Ok(export_dot(&read_graph(&graph)?).into()),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<MsGraph, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn render(g: &MsGraph, format: Format) -> String {
    match format {
        Format::Json => serialize_graph(g),
        Format::Dot => export_dot(g),
    }
}

fn eval(
    lexicon: &Path,
    term: &str,
    mode: Mode,
    strict_root: bool,
    format: Format,
) -> Result<String, Failure> {
    let lexicon =
        parse_lexicon(&read(lexicon)?).map_err(|e| Failure::usage(format!("{}: {e}", lexicon.display())))?;
    let term = parse_term(term).map_err(Failure::usage)?;
    let mode = match (mode, strict_root) {
        (Mode::Original, false) => ApplyMode::original(),
        (Mode::Original, true) => return Err(Failure::usage("--strict-root needs --mode relaxed")),
        (Mode::Relaxed, false) => ApplyMode::relaxed(),
        (Mode::Relaxed, true) => ApplyMode::relaxed_strict(),
    };
    match evaluate(&term, &lexicon, mode) {
        Ok(Evaluation::Defined(g)) => Ok(match format {
            Format::Json => serialize_as_graph(&g),
            Format::Dot => export_dot(g.graph()),
        }),
        Ok(Evaluation::Undefined(at)) => Err(Failure::undefined(at)),
        Err(e @ AlgebraError::UnknownLexeme(_)) => Err(Failure::usage(e)),
        Err(e) => Err(Failure::undefined(e)),
    }
}

fn campaigns(args: &CampaignArgs) -> Result<Success, Failure> {
    let non_empty = |v: &[String]| v.iter().all(|s| !s.is_empty());
    if !non_empty(&args.labels) || !non_empty(&args.node_labels) || !non_empty(&args.edge_labels) {
        return Err(Failure::usage("labels must be non-empty"));
    }
    let bounds = EnumerationBounds {
        max_vertices: args.max_vertices,
        max_edges: args.max_edges,
        source_labels: args.labels.iter().map(SourceLabel::new).collect(),
        node_labels: args.node_labels.iter().map(Symbol::new).collect(),
        edge_labels: args.edge_labels.iter().map(Symbol::new).collect(),
        ..EnumerationBounds::default()
    };
    let wanted = |c| args.campaign == c || args.campaign == Campaign::All;
    let mut reports: Vec<CampaignReport> = Vec::new();
    if wanted(Campaign::Composition) {
        reports.push(check_composition_equivalence(&bounds).map_err(Failure::usage)?);
    }
    if wanted(Campaign::Apply) {
        reports.push(check_apply_reduction(&bounds, args.trials, args.seed).map_err(Failure::usage)?);
    }
    if wanted(Campaign::Algebra) {
        reports.push(
            check_algebraic_properties(&bounds, args.trials, args.seed).map_err(Failure::usage)?,
        );
    }
    let code = if reports.iter().all(CampaignReport::passed) {
        EXIT_OK
    } else {
        EXIT_CAMPAIGN
    };
    let text = serde_json::to_string_pretty(&reports).expect("reports serialize");
    Ok(Success {
        text: format!("{text}\n"),
        code,
    })
}
