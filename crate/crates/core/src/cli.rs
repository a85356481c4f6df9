//! The `rainbow` command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure (or an absent pattern with
//! `--require`), 2 usage error, 3 parse or I/O error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::constructions::{self, K6Variant};
use crate::ecg;
use crate::error::{invalid, Error, Result};
use crate::graph::ColoredGraph;
use crate::search::{count_rainbow_cliques, PatternQuery};
use crate::turan::turan_number;
use crate::verify::{self, parse_rational, VerificationReport};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INPUT: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "rainbow",
    version,
    about = "Rainbow cliques in edge-colored graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write one of the built-in colorings as ECG.
    Construct(ConstructArgs),
    /// Print e, c, completeness and saturation data for an ECG file.
    Analyze { file: PathBuf },
    /// Search an ECG file for a pattern.
    Find(FindArgs),
    /// Count rainbow cliques in an ECG file.
    Count {
        file: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Run one of the verifiers.
    Verify(VerifyArgs),
    /// Rainbow clique counts above the extremal threshold.
    Supersat(SupersatArgs),
    /// Print a table of Turán numbers.
    Turan {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        max_k: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ConstructKind {
    Extremal,
    Lexicographic,
    #[value(name = "k6-variant")]
    K6Variant,
    #[value(name = "counterexample-n7")]
    CounterexampleN7,
}

#[derive(Debug, Args)]
struct ConstructArgs {
    kind: ConstructKind,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// turan-pair or mono-c6
    #[arg(long)]
    which: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PatternArg {
    RainbowClique,
    RainbowBipartite,
    RainbowTuran,
    MonoCycle,
    MonoPath,
    #[value(name = "proper-c4")]
    ProperC4,
}

#[derive(Debug, Args)]
struct FindArgs {
    file: PathBuf,
    #[arg(long)]
    pattern: PatternArg,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    /// Cycle length, or number of path vertices.
    #[arg(long)]
    len: Option<usize>,
    /// Exit with status 1 when the pattern is absent.
    #[arg(long)]
    require: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(subcommand)]
    which: VerifyCommand,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    #[command(name = "triangle-n3")]
    TriangleN3,
    #[command(name = "triangle-n4")]
    TriangleN4,
    #[command(name = "triangle-n5")]
    TriangleN5,
    #[command(name = "k6-dichotomy")]
    K6Dichotomy,
    #[command(name = "k8-reduction")]
    K8Reduction,
    #[command(name = "k9-reduction")]
    K9Reduction,
    Tightness {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    #[command(name = "two-cliques")]
    TwoCliques {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
struct SupersatArgs {
    #[arg(long)]
    k: usize,
    /// Comma-separated list, or `start..end:step` (end inclusive).
    #[arg(long)]
    ns: String,
    /// Decimal (`0.1`) or fraction (`1/10`).
    #[arg(long)]
    eps: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    csv: Option<PathBuf>,
}

/// Parses `30,40,50` or `30..80:10`.
fn parse_ns(text: &str) -> Result<Vec<usize>> {
    let bad = || invalid(format!("cannot parse vertex list {text:?}"));
    if let Some((range, step)) = text.split_once(':') {
        let (lo, hi) = range.split_once("..").ok_or_else(bad)?;
        let lo: usize = lo.trim().parse().map_err(|_| bad())?;
        let hi: usize = hi.trim().parse().map_err(|_| bad())?;
        let step: usize = step.trim().parse().map_err(|_| bad())?;
        if step == 0 || lo > hi {
            return Err(bad());
        }
        return Ok((lo..=hi).step_by(step).collect());
    }
    text.split(',')
        .map(|s| s.trim().parse().map_err(|_| bad()))
        .collect()
}

fn read_graph(path: &Path) -> Result<ColoredGraph> {
    let text = fs::read_to_string(path)?;
    ecg::parse(&text)
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(path) => fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn required(value: Option<usize>, flag: &str) -> Result<usize> {
    value.ok_or_else(|| invalid(format!("--{flag} is required here")))
}

fn construct(args: &ConstructArgs, out: &mut dyn Write) -> Result<u8> {
    let g = match args.kind {
        ConstructKind::Extremal => {
            constructions::extremal(required(args.n, "n")?, required(args.k, "k")?)?
        }
        ConstructKind::Lexicographic => constructions::lexicographic(required(args.n, "n")?)?,
        ConstructKind::K6Variant => {
            let which: K6Variant = args
                .which
                .as_deref()
                .ok_or_else(|| invalid("--which is required for k6-variant"))?
                .parse()?;
            constructions::k6_variant(which)
        }
        ConstructKind::CounterexampleN7 => constructions::counterexample_n7(),
    };
    let text = ecg::write(&g);
    emit(out, args.out.as_deref(), &text)?;
    if let Some(path) = &args.out {
        let (e, c) = g.counts();
        writeln!(out, "wrote {} (n={} e={e} c={c})", path.display(), g.n())?;
    }
    Ok(EXIT_OK)
}

fn analyze(file: &Path, out: &mut dyn Write) -> Result<u8> {
    let g = read_graph(file)?;
    let (e, c) = g.counts();
    let s = g.saturation();
    let (c0, c1, c2) = s.tallies();
    writeln!(
        out,
        "e={e} c={c} e+c={} complete={}",
        e + c,
        g.is_complete()
    )?;
    writeln!(out, "c0={c0} c1={c1} c2={c2}")?;
    let ds: Vec<String> = s.degrees().iter().map(|d| d.to_string()).collect();
    writeln!(out, "n={} ds={}", g.n(), ds.join(","))?;
    Ok(EXIT_OK)
}

fn find(args: &FindArgs, out: &mut dyn Write) -> Result<u8> {
    let g = read_graph(&args.file)?;
    let query = match args.pattern {
        PatternArg::RainbowClique => PatternQuery::RainbowClique {
            k: required(args.k, "k")?,
        },
        PatternArg::RainbowBipartite => PatternQuery::RainbowBipartite {
            a: required(args.a, "a")?,
            b: required(args.b, "b")?,
        },
        PatternArg::RainbowTuran => PatternQuery::RainbowTuran {
            r: required(args.r, "r")?,
        },
        PatternArg::MonoCycle => PatternQuery::MonoCycle {
            len: required(args.len, "len")?,
        },
        PatternArg::MonoPath => PatternQuery::MonoPath {
            vertices: required(args.len, "len")?,
        },
        PatternArg::ProperC4 => PatternQuery::ProperC4,
    };
    query.validate(g.n())?;
    match query.find(&g) {
        Some(w) => {
            writeln!(out, "found {w}")?;
            for (u, v, c) in &w.edges {
                writeln!(out, "  {u} {v} {c}")?;
            }
            Ok(EXIT_OK)
        }
        None => {
            writeln!(out, "absent {query:?}")?;
            Ok(if args.require { EXIT_FAILED } else { EXIT_OK })
        }
    }
}

fn report_outcome(
    report: &VerificationReport,
    path: Option<&Path>,
    out: &mut dyn Write,
) -> Result<u8> {
    emit(out, path, &report.to_text())?;
    if path.is_some() {
        writeln!(out, "{}", report.summary_line())?;
    }
    Ok(if report.success() {
        EXIT_OK
    } else {
        EXIT_FAILED
    })
}

fn run_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<u8> {
    let report = match args.which {
        VerifyCommand::TriangleN3 => verify::verify_triangle_threshold(3)?,
        VerifyCommand::TriangleN4 => verify::verify_triangle_threshold(4)?,
        VerifyCommand::TriangleN5 => verify::verify_triangle_threshold(5)?,
        VerifyCommand::K6Dichotomy => verify::verify_k6_dichotomy(),
        VerifyCommand::K8Reduction => verify::verify_k8_reduction(),
        VerifyCommand::K9Reduction => verify::verify_k9_reduction(),
        VerifyCommand::Tightness { n, k } => verify::verify_tightness(n, k)?,
        VerifyCommand::TwoCliques { n, k, trials, seed } => {
            verify::falsify_two_cliques(k, n, trials, seed)?
        }
    };
    report_outcome(&report, args.out.as_deref(), out)
}

fn supersat(args: &SupersatArgs, out: &mut dyn Write) -> Result<u8> {
    let ns = parse_ns(&args.ns)?;
    let eps = parse_rational(&args.eps)?;
    let table = verify::supersaturation_experiment(args.k, &ns, eps, args.seed)?;
    match &args.csv {
        Some(path) => {
            table.write_csv(fs::File::create(path)?)?;
            for row in &table.rows {
                writeln!(out, "n={} ec={} count={}", row.n, row.ec, row.count)?;
            }
        }
        None => out.write_all(table.to_csv().as_bytes())?,
    }
    match table.slope {
        Some(slope) => writeln!(out, "slope={slope:.4}")?,
        None => writeln!(out, "slope=undefined")?,
    }
    Ok(EXIT_OK)
}

fn turan_table(max_n: usize, max_k: usize, out: &mut dyn Write) -> Result<u8> {
    if max_k == 0 {
        return Err(invalid("--max-k must be at least 1"));
    }
    let header: Vec<String> = (1..=max_k).map(|k| format!("k={k}")).collect();
    writeln!(out, "n\t{}", header.join("\t"))?;
    for n in 1..=max_n {
        let row = (1..=max_k)
            .map(|k| turan_number(n, k).map(|t| t.to_string()))
            .collect::<Result<Vec<_>>>()?;
        writeln!(out, "{n}\t{}", row.join("\t"))?;
    }
    Ok(EXIT_OK)
}

fn exit_code(error: &Error) -> u8 {
    match error {
        Error::Parse { .. } | Error::Io(_) => EXIT_INPUT,
        Error::Graph(_) | Error::InvalidArgument(_) | Error::Unreachable { .. } => EXIT_USAGE,
    }
}

/// Runs the tool on `args` (including the program name) and returns the
/// process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
                EXIT_USAGE
            } else {
                let _ = out.write_all(rendered.as_bytes());
                EXIT_OK
            };
        }
    };
    let result = match &cli.command {
        Command::Construct(args) => construct(args, out),
        Command::Analyze { file } => analyze(file, out),
        Command::Find(args) => find(args, out),
        Command::Count { file, k } => read_graph(file).and_then(|g| {
            writeln!(out, "count={}", count_rainbow_cliques(&g, *k))?;
            Ok(EXIT_OK)
        }),
        Command::Verify(args) => run_verify(args, out),
        Command::Supersat(args) => supersat(args, out),
        Command::Turan { max_n, max_k } => turan_table(*max_n, *max_k, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_lists() {
        assert_eq!(parse_ns("30..80:10").unwrap(), vec![30, 40, 50, 60, 70, 80]);
        assert_eq!(parse_ns("5, 7,9").unwrap(), vec![5, 7, 9]);
        assert!(parse_ns("5..3:1").is_err());
        assert!(parse_ns("1..3:0").is_err());
        assert!(parse_ns("a").is_err());
    }
}
