//! `vknot`: V1/V2 polynomials of long virtual knots from the command line.
//!
//! Exit status: 0 success, 1 input error, 2 property violation, 3 internal
//! verification failure.

use std::fs;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use vknot_core::construct::{delta_bound, realize, RealizeError};
use vknot_core::gauss::{enumerate_diagrams_capped, parse_diagram, random_diagram_with, DEFAULT_ENUMERATION_CAP};
use vknot_core::invariants::{compute_report, v_polys};
use vknot_core::laurent::parse_poly;
use vknot_core::moves::{replay, ReplayError};
use vknot_core::verify::{run_case, Suite, SuiteConfig, SuiteReport};
use vknot_core::{BigInt, DetRng, GaussDiagram, InvariantReport, LaurentPolynomial};

/// Lines handed to the worker pool at a time by `compute`.
const CHUNK: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "vknot", version, about = "Polynomial invariants of long virtual knots")]
struct Cli {
    /// Seed for every randomized command.
    #[arg(long, global = true, env = "VKNOT_SEED", default_value_t = 0)]
    seed: u64,
    /// Case count for `verify` (default 1000) and diagram count for `random` (default 10).
    #[arg(long, global = true, env = "VKNOT_COUNT")]
    count: Option<usize>,
    /// Chord cap: generated diagram size for `verify`/`random` (default 8), exhaustive size for `enumerate`.
    #[arg(long, global = true, env = "VKNOT_MAX_CHORDS")]
    max_chords: Option<usize>,
    #[arg(long, global = true, env = "VKNOT_FORMAT", value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads. Output order never depends on it.
    #[arg(long, global = true, env = "VKNOT_JOBS", default_value_t = 1)]
    jobs: usize,
    /// Recompute and confirm `realize` output.
    #[arg(long, global = true, env = "VKNOT_CHECK")]
    check: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Invariants of every diagram, one per input line.
    Compute {
        /// Inline Gauss code; may be repeated.
        #[arg(long = "code")]
        codes: Vec<String>,
        /// Files with one diagram per line; `-` reads standard input.
        files: Vec<PathBuf>,
    },
    /// Run a seeded property suite.
    Verify { suite: Suite },
    /// A diagram with V1 = F and V2 = G.
    Realize {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Δ-distance lower bound between the diagrams in two files.
    DeltaBound { a: PathBuf, b: PathBuf },
    /// Every diagram with at most `--max-chords` chords.
    Enumerate,
    /// Seeded random diagrams.
    Random,
    /// Re-run a walk transcript and check every step.
    Replay { file: PathBuf },
}

#[derive(Debug)]
enum Failure {
    Input(anyhow::Error),
    Violation(anyhow::Error),
    Internal(anyhow::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Violation(_) => 2,
            Failure::Internal(_) => 3,
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.into())
    }
}

type Outcome = Result<(), Failure>;

fn input<E: Into<anyhow::Error>>(e: E) -> Failure {
    Failure::Input(e.into())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Input(e) | Failure::Violation(e) | Failure::Internal(e) => {
                    if !e.to_string().is_empty() {
                        eprintln!("vknot: {e:#}");
                    }
                }
            }
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.max(1))
        .build()
        .map_err(|e| Failure::Internal(e.into()))?;
    let mut out = BufWriter::new(io::stdout());
    let result = pool.install(|| match &cli.command {
        Command::Compute { codes, files } => compute(cli, codes, files, &mut out),
        Command::Verify { suite } => verify(cli, *suite, &mut out),
        Command::Realize { f, g } => cmd_realize(cli, f, g, &mut out),
        Command::DeltaBound { a, b } => cmd_delta_bound(cli, a, b, &mut out),
        Command::Enumerate => enumerate(cli, &mut out),
        Command::Random => random(cli, &mut out),
        Command::Replay { file } => cmd_replay(cli, file, &mut out),
    });
    out.flush()?;
    result
}

fn report_line(format: Format, r: &InvariantReport) -> String {
    match format {
        Format::Json => serde_json::to_string(r).expect("report serializes"),
        Format::Text => format!(
            "{}\tn={}\tv1={}\tv2={}\tv21={}\tv22={}\tv1'(1)={}\tv2'(1)={}\talpha2={}\talpha3={}",
            if r.n == 0 { "-" } else { &r.gauss_code },
            r.n,
            r.v1,
            r.v2,
            r.v21,
            r.v22,
            r.v1_prime_1,
            r.v2_prime_1,
            r.alpha2,
            r.alpha3
        ),
    }
}

struct Source {
    name: String,
    reader: Box<dyn BufRead>,
}

fn open(path: &Path) -> Result<Source, Failure> {
    if path == Path::new("-") {
        return Ok(Source {
            name: "<stdin>".into(),
            reader: Box::new(BufReader::new(io::stdin())),
        });
    }
    let file = fs::File::open(path).with_context(|| format!("cannot open {}", path.display())).map_err(input)?;
    Ok(Source {
        name: path.display().to_string(),
        reader: Box::new(BufReader::new(file)),
    })
}

fn compute(cli: &Cli, codes: &[String], files: &[PathBuf], out: &mut impl Write) -> Outcome {
    let mut sources: Vec<Source> = codes
        .iter()
        .enumerate()
        .map(|(i, c)| Source {
            name: format!("--code #{}", i + 1),
            reader: Box::new(io::Cursor::new(format!("{c}\n").into_bytes())),
        })
        .collect();
    for f in files {
        sources.push(open(f)?);
    }
    if codes.is_empty() && files.is_empty() {
        sources.push(open(Path::new("-"))?);
    }
    let mut bad = 0usize;
    for source in sources {
        let mut lines = source.reader.lines().enumerate();
        loop {
            let mut chunk = Vec::with_capacity(CHUNK);
            for (i, line) in lines.by_ref() {
                let line = line.with_context(|| format!("reading {}", source.name)).map_err(input)?;
                let t = line.trim();
                if t.is_empty() {
                    eprintln!("{}:{}: warning: blank line skipped", source.name, i + 1);
                } else if !t.starts_with('#') {
                    chunk.push((i + 1, line));
                }
                if chunk.len() == CHUNK {
                    break;
                }
            }
            if chunk.is_empty() {
                break;
            }
            let results: Vec<_> = chunk
                .par_iter()
                .map(|(lineno, line)| match parse_diagram(line) {
                    Ok(d) => Ok(report_line(cli.format, &compute_report::<BigInt>(&d))),
                    Err(e) => Err(format!("{}:{}:{}: error: {}", source.name, lineno, e.column(), e)),
                })
                .collect();
            for r in results {
                match r {
                    Ok(s) => writeln!(out, "{s}")?,
                    Err(msg) => {
                        eprintln!("{msg}");
                        bad += 1;
                    }
                }
            }
        }
    }
    if bad > 0 {
        return Err(input(anyhow::anyhow!("{bad} line(s) failed to parse")));
    }
    Ok(())
}

fn verify(cli: &Cli, suite: Suite, out: &mut impl Write) -> Outcome {
    let cfg = SuiteConfig {
        cases: cli.count.unwrap_or(SuiteConfig::default().cases),
        seed: cli.seed,
        max_chords: cli.max_chords.unwrap_or(SuiteConfig::default().max_chords),
    };
    let results: Vec<_> = (0..cfg.cases).into_par_iter().map(|i| run_case(suite, &cfg, i)).collect();
    let report = SuiteReport::collect(suite, &cfg, results);
    match cli.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&report).expect("report serializes"))?,
        Format::Text => {
            writeln!(
                out,
                "{}: {} cases, {} failures, seed {}",
                report.suite,
                report.cases,
                report.failures.len(),
                report.seed
            )?;
            let cov: Vec<String> = report.coverage.iter().map(|(k, v)| format!("{k}={v}")).collect();
            if !cov.is_empty() {
                writeln!(out, "coverage {}", cov.join(" "))?;
            }
            for f in &report.failures {
                writeln!(out, "case {}: {}", f.case, f.message)?;
                if let Some(t) = &f.transcript {
                    write!(out, "{t}")?;
                }
            }
        }
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Violation(anyhow::anyhow!(
            "{}: {} of {} cases failed",
            suite,
            report.failures.len(),
            report.cases
        )))
    }
}

fn poly(text: &str, what: &str) -> Result<LaurentPolynomial, Failure> {
    parse_poly(text).map_err(|e| input(anyhow::anyhow!("{what}:{}: {}", e.column, e.message)))
}

fn cmd_realize(cli: &Cli, f: &str, g: &str, out: &mut impl Write) -> Outcome {
    let f = poly(f, "F")?;
    let g = poly(g, "G")?;
    let d = realize(&f, &g).map_err(|e| match e {
        RealizeError::Verification { .. } => Failure::Internal(e.into()),
        _ => input(e),
    })?;
    if cli.check {
        let (v1, v2) = v_polys::<BigInt>(&d);
        if v1 != f || v2 != g {
            return Err(Failure::Internal(anyhow::anyhow!("check failed: diagram has V1 = {v1}, V2 = {v2}")));
        }
        eprintln!("check: V1 = {v1}, V2 = {v2}");
    }
    match cli.format {
        Format::Json => writeln!(out, "{}", json!({ "gauss_code": d.to_code(), "n": d.n() }))?,
        Format::Text => writeln!(out, "{d}")?,
    }
    Ok(())
}

/// The single diagram in a file. The empty diagram is written `-`.
fn read_one(path: &Path) -> Result<GaussDiagram, Failure> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display())).map_err(input)?;
    let mut found = None;
    for (i, line) in text.lines().enumerate() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        if found.is_some() {
            return Err(input(anyhow::anyhow!("{}:{}: more than one diagram", path.display(), i + 1)));
        }
        let d = parse_diagram(line)
            .map_err(|e| input(anyhow::anyhow!("{}:{}:{}: {}", path.display(), i + 1, e.column(), e)))?;
        found = Some(d);
    }
    found.ok_or_else(|| input(anyhow::anyhow!("{}: no diagram", path.display())))
}

fn cmd_delta_bound(cli: &Cli, a: &Path, b: &Path, out: &mut impl Write) -> Outcome {
    let r = delta_bound::<BigInt>(&read_one(a)?, &read_one(b)?);
    match cli.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&r).expect("report serializes"))?,
        Format::Text => match &r.lower_bound {
            Some(bound) => writeln!(out, "difference {}\tlower bound {bound}", r.difference)?,
            None => writeln!(out, "difference {}\tnot Δ-equivalent", r.difference)?,
        },
    }
    Ok(())
}

fn diagram_line(format: Format, d: &GaussDiagram) -> String {
    match format {
        Format::Json => json!({ "gauss_code": d.to_code(), "n": d.n() }).to_string(),
        Format::Text => d.to_line(),
    }
}

fn enumerate(cli: &Cli, out: &mut impl Write) -> Outcome {
    let max = cli
        .max_chords
        .ok_or_else(|| input(anyhow::anyhow!("enumerate needs --max-chords")))?;
    enumerate_diagrams_capped(max, DEFAULT_ENUMERATION_CAP).map_err(input)?;
    for n in 0..=max {
        for d in enumerate_diagrams_capped(n, DEFAULT_ENUMERATION_CAP).map_err(input)? {
            writeln!(out, "{}", diagram_line(cli.format, &d))?;
        }
    }
    Ok(())
}

fn random(cli: &Cli, out: &mut impl Write) -> Outcome {
    let max = cli.max_chords.unwrap_or(8);
    let mut rng = DetRng::new(cli.seed);
    for _ in 0..cli.count.unwrap_or(10) {
        let n = rng.below(max + 1);
        let d = random_diagram_with(n, &mut rng);
        writeln!(out, "{}", diagram_line(cli.format, &d))?;
    }
    Ok(())
}

fn cmd_replay(cli: &Cli, file: &Path, out: &mut impl Write) -> Outcome {
    let text = fs::read_to_string(file).with_context(|| format!("cannot read {}", file.display())).map_err(input)?;
    let t = replay(&text).map_err(|e| {
        let e2 = anyhow::anyhow!("{}: {e}", file.display());
        match e {
            ReplayError::Mismatch { .. } => Failure::Violation(e2),
            _ => Failure::Input(e2),
        }
    })?;
    match cli.format {
        Format::Json => writeln!(
            out,
            "{}",
            json!({ "steps": t.steps.len(), "end": t.end().to_code(), "coverage": t.coverage() })
        )?,
        Format::Text => writeln!(out, "ok: {} steps, end {}", t.steps.len(), t.end().to_line())?,
    }
    Ok(())
}
