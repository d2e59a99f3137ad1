//! Command-line front end.
//!
//! [`run`] takes the full argument vector and returns the exit status with
//! captured output, so the binary is a thin wrapper and tests need no process.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use itertools::Itertools;

use crate::analysis::{weyl_dimension, Algebra};
use crate::emit::{render, Format, RenderOptions};
use crate::error::Error;
use crate::multiplet::{build_multiplet, classify_reductions, BuildOptions};
use crate::roots::{lambda_vector, DynkinLabels, Rank};
use crate::signature::{all_arrangements, ks_partner, signature_of, Arrangement};
use crate::verify;

#[derive(Debug, Parser)]
#[command(
    name = "multiplets",
    version,
    about = "Multiplets of elementary representations of su(n,n), sl(2n,R) and su*(2n)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Main multiplet (all labels positive).
    Main(GraphArgs),
    /// Reduced multiplet (some labels zero).
    Reduce {
        #[command(flatten)]
        graph: GraphArgs,
        /// Vanishing labels, cross-checked against the zero entries of --labels.
        #[arg(long, value_delimiter = ',')]
        zeros: Option<Vec<usize>>,
    },
    /// Conjugation classes of zero patterns with k vanishing labels.
    Classify {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        order: usize,
        /// Include classes with two adjacent vanishing labels.
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t = ListFormat::Tsv)]
        format: ListFormat,
    },
    /// Dimension of the finite-dimensional irrep with the given labels.
    Dim {
        #[arg(long)]
        n: u32,
        #[arg(long, value_delimiter = ',', required = true)]
        labels: Vec<u64>,
    },
    /// Knapp-Stein partner of a vertex given by its id "top|bottom".
    Ks {
        #[arg(long)]
        n: u32,
        #[arg(long, value_delimiter = ',', required = true)]
        labels: Vec<u64>,
        #[arg(long)]
        vertex: String,
    },
    /// Recompute every embedded fixture.
    Verify,
}

#[derive(Debug, Args)]
struct GraphArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, value_delimiter = ',', required = true)]
    labels: Vec<u64>,
    #[arg(long, value_enum, default_value_t = AlgebraArg::Su)]
    algebra: AlgebraArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<std::path::PathBuf>,
    /// Draw degenerate Knapp-Stein edges like ordinary ones.
    #[arg(long)]
    plain_ks: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AlgebraArg {
    Su,
    Sl,
    SuStar,
}

impl From<AlgebraArg> for Algebra {
    fn from(a: AlgebraArg) -> Self {
        match a {
            AlgebraArg::Su => Algebra::SuNN,
            AlgebraArg::Sl => Algebra::Sl2nR,
            AlgebraArg::SuStar => Algebra::SuStar2n,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Dot,
    Tsv,
    Latex,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Dot => Format::Dot,
            FormatArg::Tsv => Format::Tsv,
            FormatArg::Latex => Format::Latex,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ListFormat {
    Tsv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(flag: &str, msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {flag}: {msg}\n"),
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match cli.command {
        Command::Main(g) => graph_command(g, None, false),
        Command::Reduce { graph, zeros } => graph_command(graph, zeros, true),
        Command::Classify {
            n,
            order,
            all,
            format,
        } => classify(n, order, all, format),
        Command::Dim { n, labels } => dim(n, labels),
        Command::Ks { n, labels, vertex } => ks(n, labels, &vertex),
        Command::Verify => verify_all(),
    }
}

fn parse_labels(n: u32, labels: Vec<u64>) -> Result<DynkinLabels, Outcome> {
    let rank = Rank::new(n).map_err(|e| Outcome::usage("--n", e))?;
    DynkinLabels::new(rank, labels).map_err(|e| Outcome::usage("--labels", e))
}

fn graph_command(args: GraphArgs, zeros: Option<Vec<usize>>, reduced: bool) -> Outcome {
    let labels = match parse_labels(args.n, args.labels) {
        Ok(l) => l,
        Err(o) => return o,
    };
    let actual = labels.zero_set();
    match (reduced, actual.is_empty()) {
        (false, false) => return Outcome::usage("--labels", Error::NotMain(actual)),
        (true, true) => return Outcome::usage("--labels", Error::NotReduced),
        _ => {}
    }
    if let Some(mut z) = zeros {
        z.sort_unstable();
        z.dedup();
        if z != actual {
            return Outcome::usage(
                "--zeros",
                format!("{z:?} disagrees with the zero entries {actual:?} of --labels"),
            );
        }
    }
    let graph = build_multiplet(&labels, BuildOptions::default());
    let graph = match graph.for_algebra(args.algebra.into()) {
        Ok(g) => g,
        Err(e) => return Outcome::usage("--algebra", e),
    };
    let text = render(
        &graph,
        RenderOptions {
            format: args.format.into(),
            show_degenerate_ks: !args.plain_ks,
        },
    );
    emit_to(args.output, text)
}

fn emit_to(path: Option<std::path::PathBuf>, text: String) -> Outcome {
    match path {
        None => Outcome::ok(text),
        Some(p) => match std::fs::write(&p, text) {
            Ok(()) => Outcome::ok(String::new()),
            Err(e) => Outcome::usage("--output", format!("{}: {e}", p.display())),
        },
    }
}

fn classify(n: u32, order: usize, all: bool, format: ListFormat) -> Outcome {
    let rank = match Rank::new(n) {
        Ok(r) => r,
        Err(e) => return Outcome::usage("--n", e),
    };
    let classes = match classify_reductions(rank, order) {
        Ok(c) => c,
        Err(e) => return Outcome::usage("--order", e),
    };
    let shown: Vec<_> = classes
        .into_iter()
        .filter(|c| all || c.physically_relevant)
        .collect();
    let set = |z: &[usize]| z.iter().join(",");
    let mut out = String::new();
    match format {
        ListFormat::Tsv => {
            out.push_str("zeros\tconjugate\trelevant\tsize\n");
            for c in &shown {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}",
                    set(&c.zero_set),
                    set(&c.conjugate),
                    c.physically_relevant,
                    c.size
                )
                .unwrap();
            }
        }
        ListFormat::Json => {
            let rows: Vec<serde_json::Value> = shown
                .iter()
                .map(|c| {
                    serde_json::json!({
                        "zeroSet": c.zero_set,
                        "conjugate": c.conjugate,
                        "physicallyRelevant": c.physically_relevant,
                        "size": c.size,
                    })
                })
                .collect();
            out = serde_json::to_string_pretty(&rows).expect("plain data");
            out.push('\n');
        }
    }
    Outcome::ok(out)
}

fn dim(n: u32, labels: Vec<u64>) -> Outcome {
    let labels = match parse_labels(n, labels) {
        Ok(l) => l,
        Err(o) => return o,
    };
    match weyl_dimension(labels.values()) {
        Ok(d) => Outcome::ok(format!("{d}\n")),
        Err(e) => Outcome::usage("--labels", e),
    }
}

fn ks(n: u32, labels: Vec<u64>, vertex: &str) -> Outcome {
    let labels = match parse_labels(n, labels) {
        Ok(l) => l,
        Err(o) => return o,
    };
    let arr: Arrangement = match vertex.parse() {
        Ok(a) => a,
        Err(e) => return Outcome::usage("--vertex", e),
    };
    if !all_arrangements(&lambda_vector(&labels)).contains(&arr) {
        return Outcome::usage(
            "--vertex",
            format!("{vertex} is not an arrangement of Lambda+rho for these labels"),
        );
    }
    let partner = ks_partner(&arr);
    Outcome::ok(format!("{}\t{}\n", partner.id(), signature_of(&partner)))
}

fn verify_all() -> Outcome {
    let outcomes = verify::run_all();
    let mut out = String::new();
    let mut err = String::new();
    for o in &outcomes {
        writeln!(out, "{}", o.line()).unwrap();
        if !o.passed() {
            writeln!(err, "verify: fixture {} drifted: {}", o.fixture, o.line()).unwrap();
        }
    }
    Outcome {
        code: if err.is_empty() { 0 } else { 2 },
        stdout: out,
        stderr: err,
    }
}
