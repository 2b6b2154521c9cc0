//! Command-line front end.
//!
//! Exit codes: 0 success, 2 refusal (uncountable emitter), 3 parse error,
//! 4 precondition violation (including bad arguments and unreadable files).

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::error::ParseError;
use crate::graph::{Graph, VertexClass, VertexId};
use crate::io::{export_dot, parse_graph};
use crate::leavitt::{
    are_orthogonal, corner_basis, corner_span, is_idempotent, linearly_independent,
    sample_emitter_idempotents,
};
use crate::monoid::{equal_up_to_depth, EqualityVerdict, MonoidVector, StepKind};
use crate::order::PolicyRegistry;
use crate::transform::{desingularize, materialize, row_finite_equivalent, TransformReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUSED: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_PRECONDITION: i32 = 4;

#[derive(Parser)]
#[command(name = "rowfinite", version, about = "Desingularize cardinality-annotated graphs and check Leavitt path algebra facts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify every vertex and report row-finiteness.
    Classify { file: PathBuf },
    /// Add tails at every sink and countably infinite emitter.
    Desingularize(TransformArgs),
    /// Add tails at countably infinite emitters only.
    #[command(name = "rowfinite-equiv")]
    RowfiniteEquiv(TransformArgs),
    /// Print a finite window of the graph as DOT.
    Materialize {
        file: PathBuf,
        #[arg(long)]
        depth: u64,
    },
    /// Search for equality of two graph-monoid elements.
    #[command(name = "monoid-eq")]
    MonoidEq {
        file: PathBuf,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        depth: usize,
    },
    /// Count corner monomials p q* with s(p) = V, s(q) = V2.
    #[command(name = "corner-count")]
    CornerCount {
        file: PathBuf,
        #[arg(long)]
        v: String,
        #[arg(long)]
        v2: String,
        #[arg(long)]
        maxlen: usize,
        /// Bound |p| and |q| independently instead of requiring |p| = |q|.
        #[arg(long)]
        all_lengths: bool,
    },
    /// Check the edge idempotents e e* at a vertex.
    #[command(name = "idem-check")]
    IdemCheck {
        file: PathBuf,
        #[arg(long)]
        vertex: String,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args)]
struct TransformArgs {
    file: PathBuf,
    /// Edge order for emitter tails: diagonal, concat:b1,b2 or explicit:b/0,c/1.
    #[arg(long, default_value = "diagonal")]
    policy: String,
    /// Also materialize the result to this depth and summarize it.
    #[arg(long)]
    depth: Option<u64>,
    /// Write the materialization as DOT (depth defaults to 3).
    #[arg(long)]
    dot: Option<PathBuf>,
}

enum Failure {
    Parse(ParseError),
    Precondition(String),
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Precondition(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

fn load(path: &Path) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Precondition(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(Failure::Parse)
}

fn vertex(g: &Graph, name: &str) -> Result<VertexId, Failure> {
    let v = VertexId::new(name)?;
    if g.contains(&v) {
        Ok(v)
    } else {
        Err(Failure::Precondition(format!("unknown vertex `{name}`")))
    }
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PRECONDITION } else { EXIT_OK };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Parse(e)) => {
            let _ = writeln!(err, "parse error: {e}");
            EXIT_PARSE
        }
        Err(Failure::Precondition(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_PRECONDITION
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Classify { file } => classify(&load(&file)?, out),
        Command::Desingularize(args) => transform(args, true, out),
        Command::RowfiniteEquiv(args) => transform(args, false, out),
        Command::Materialize { file, depth } => {
            let g = load(&file)?;
            write!(out, "{}", export_dot(&materialize(&g, depth)?)?)?;
            Ok(EXIT_OK)
        }
        Command::MonoidEq { file, x, y, depth } => {
            let g = load(&file)?;
            let x: MonoidVector = x.parse()?;
            let y: MonoidVector = y.parse()?;
            for v in x.support().chain(y.support()) {
                vertex(&g, v.as_str())?;
            }
            match equal_up_to_depth(&g, &x, &y, depth)? {
                EqualityVerdict::Equal(cert) => {
                    writeln!(out, "equal in {} steps", cert.steps.len())?;
                    writeln!(out, "  {}", cert.start)?;
                    for s in &cert.steps {
                        let verb = match s.kind {
                            StepKind::Expand => "expand",
                            StepKind::Contract => "contract",
                        };
                        writeln!(out, "  {verb} {} => {}", s.vertex, s.result)?;
                    }
                }
                EqualityVerdict::UnknownAtDepth(d) => writeln!(out, "unknown at depth {d}")?,
            }
            Ok(EXIT_OK)
        }
        Command::CornerCount {
            file,
            v,
            v2,
            maxlen,
            all_lengths,
        } => {
            let g = load(&file)?;
            let (v, v2) = (vertex(&g, &v)?, vertex(&g, &v2)?);
            let monomials = if all_lengths {
                corner_span(&g, &v, &v2, maxlen)?
            } else {
                corner_basis(&g, &v, &v2, maxlen)?
            };
            writeln!(out, "{}", monomials.len())?;
            Ok(EXIT_OK)
        }
        Command::IdemCheck { file, vertex: w, n } => {
            let g = load(&file)?;
            let w = vertex(&g, &w)?;
            let idem = sample_emitter_idempotents(&g, &w, n)?;
            let mut idempotent = 0;
            for x in &idem {
                writeln!(out, "{x}")?;
                idempotent += usize::from(is_idempotent(&g, x)?);
            }
            let mut orthogonal = 0;
            let pairs = n * n.saturating_sub(1) / 2;
            for (i, x) in idem.iter().enumerate() {
                for y in &idem[i + 1..] {
                    orthogonal += usize::from(are_orthogonal(&g, x, y)?);
                }
            }
            writeln!(out, "idempotent {idempotent}/{n}")?;
            writeln!(out, "orthogonal pairs {orthogonal}/{pairs}")?;
            writeln!(out, "independent {}", yes_no(linearly_independent(&idem)))?;
            Ok(EXIT_OK)
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

fn classify(g: &Graph, out: &mut dyn Write) -> Outcome {
    for v in g.vertices() {
        writeln!(out, "{v} {}", g.classify_vertex(v)?)?;
    }
    let check = g.is_row_finite();
    match check.witness {
        None => writeln!(out, "row-finite yes")?,
        Some(w) => writeln!(out, "row-finite no (witness {w})")?,
    }
    if let Some(w) = g.vertices_of_class(VertexClass::UncountableEmitter).first() {
        writeln!(out, "desingularizable no (uncountable emitter {w})")?;
    } else {
        writeln!(out, "desingularizable yes")?;
    }
    Ok(EXIT_OK)
}

fn transform(args: TransformArgs, at_sinks: bool, out: &mut dyn Write) -> Outcome {
    let g = load(&args.file)?;
    let policy = PolicyRegistry::builtin().parse(&args.policy)?;
    let (f, report) = if at_sinks {
        desingularize(&g, &policy)?
    } else {
        row_finite_equivalent(&g, &policy)?
    };
    if let Some(w) = &report.refusal {
        writeln!(out, "refused: `{w}` emits uncountably many edges")?;
        return Ok(EXIT_REFUSED);
    }
    write_report(&report, out)?;
    writeln!(out, "policy {}", policy.describe())?;
    writeln!(out, "row-finite {}", yes_no(f.is_row_finite().row_finite))?;
    if let Some(depth) = args.depth {
        let m = materialize(&f, depth)?;
        let sinks = m
            .vertices()
            .filter(|v| !m.is_frontier(v) && m.classify_vertex(v).ok() == Some(VertexClass::Sink))
            .count();
        let edges: u64 = m
            .bundles()
            .filter_map(|b| b.multiplicity.finite_count())
            .sum();
        writeln!(
            out,
            "materialized depth {depth}: {} vertices, {edges} edges, {} frontier, {sinks} sinks",
            m.vertex_count(),
            m.frontier().len()
        )?;
    }
    if let Some(path) = &args.dot {
        let m = materialize(&f, args.depth.unwrap_or(3))?;
        std::fs::write(path, export_dot(&m)?)?;
    }
    Ok(EXIT_OK)
}

fn write_report(report: &TransformReport, out: &mut dyn Write) -> std::io::Result<()> {
    for (v, kind) in &report.tails_added {
        writeln!(out, "tail {v} {kind}")?;
    }
    writeln!(out, "untouched {}", report.vertices_untouched)
}
