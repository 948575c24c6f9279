//! `curvelab` command-line front end: seeded curve constructions, their
//! certificates and Betti tables of user-supplied ideals.

mod input;
mod output;

use clap::{Parser, Subcommand, ValueEnum};
use curvelab::arith::{PrimeField, SeededRng, DEFAULT_CHAR};
use curvelab::constructions::{
    random_curve_genus14, random_distinct_plane_points, random_genus7_degree14_curve, random_nodal_plane_curve,
    random_space_curve_genus12_degree13, search_plane_genus11_curve, DEFAULT_ATTEMPTS,
};
use curvelab::geometry::decomposition_tally;
use curvelab::homology::resolve_ideal;
use curvelab::ring::Ring;
use curvelab::Error;
use output::{describe, with_report, Payload};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

/// Ground field for the genus-11 search.
const SEARCH_CHAR: u32 = 5;

#[derive(Parser, Debug)]
#[command(name = "curvelab", version, about = "Random curves over prime fields, certified by exact computation")]
struct Cli {
    #[command(flatten)]
    job: JobArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct JobArgs {
    /// Characteristic of the ground field (default 10007, or 5 for g11-search).
    #[arg(long = "char", global = true, env = "CURVELAB_CHAR")]
    characteristic: Option<u32>,
    /// Seed of the random stream.
    #[arg(long, global = true, env = "CURVELAB_SEED", default_value_t = 1)]
    seed: u64,
    /// Bound on random redraws for `points` and `curve g11-search`.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    attempts: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the result here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ideal of random distinct points in the plane and its Betti table.
    Points {
        #[arg(long)]
        count: usize,
    },
    /// Seeded curve constructions.
    Curve {
        #[command(subcommand)]
        kind: CurveKind,
    },
    /// Betti table of the minimal resolution of an ideal read from a file.
    Betti {
        #[arg(long)]
        input: PathBuf,
    },
    /// Factorization types of a plane curve restricted to random lines.
    Tally {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
}

#[derive(Subcommand, Debug)]
enum CurveKind {
    /// Nodal plane curve of genus at most 10.
    Plane {
        #[arg(long)]
        genus: i64,
    },
    /// Search for a plane curve of degree 10 with 19 nodes and one ordinary
    /// triple point (genus 11).
    G11Search,
    /// Smooth space curve of degree 13 and genus 12.
    G12Space,
    /// Curve of genus 14 and degree 18 in P^6.
    G14 {
        /// Verify degree, genus and smoothness and compute the Betti table.
        #[arg(long)]
        certify: bool,
    },
    /// Curve of genus 7 and degree 14 in P^7 with the N_2 verdict.
    G7d14,
}

/// Failure classes mapped to exit codes.
enum Failure {
    Usage(String),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Usage(e.to_string()),
            e => Failure::Compute(e),
        }
    }
}

fn field(job: &JobArgs, default: u32) -> Result<PrimeField, Failure> {
    let p = job.characteristic.unwrap_or(default);
    PrimeField::new(p).map_err(|e| Failure::Usage(format!("--char: {e}")))
}

fn ring(job: &JobArgs, default: u32, n: usize) -> Result<Ring, Failure> {
    Ok(Ring::new(field(job, default)?, n)?)
}

fn read_input(path: &PathBuf) -> Result<curvelab::groebner::Ideal, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    input::parse_ideal_file(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn run(cli: &Cli) -> Result<Payload, Failure> {
    let job = &cli.job;
    let rng = SeededRng::from_seed(job.seed);
    let attempts = job.attempts.map_or(DEFAULT_ATTEMPTS, |a| a as usize);
    let mut payload = match &cli.command {
        Command::Points { count } => {
            let r = ring(job, DEFAULT_CHAR, 3)?;
            let pts = random_distinct_plane_points(*count, &r, &rng, attempts)?;
            let betti = resolve_ideal(&pts)?.betti();
            describe(&pts, Some(&betti))?
        }
        Command::Curve { kind } => curve(job, kind, &rng, attempts)?,
        Command::Betti { input } => {
            let i = read_input(input)?;
            let betti = resolve_ideal(&i)?.betti();
            describe(&i, Some(&betti))?
        }
        Command::Tally { input, trials } => {
            let c = read_input(input)?;
            let tally = decomposition_tally(&c, *trials, &rng)?;
            let with_point: usize = tally.iter().filter(|(k, _)| k.contains(&1)).map(|(_, n)| n).sum();
            let mut p = Payload::new();
            p.insert("char".into(), json!(c.ring().field().p()));
            p.insert("vars".into(), json!(c.ring().nvars()));
            p.insert("trials".into(), json!(trials));
            let t: serde_json::Map<String, Value> = tally
                .iter()
                .map(|(k, n)| {
                    let key = k.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
                    (key, json!(n))
                })
                .collect();
            p.insert("tally".into(), Value::Object(t));
            p.insert("with_rational_point".into(), json!(with_point));
            p
        }
    };
    payload.entry("seed").or_insert(json!(job.seed));
    Ok(payload)
}

fn curve(job: &JobArgs, kind: &CurveKind, rng: &SeededRng, attempts: usize) -> Result<Payload, Failure> {
    Ok(match kind {
        CurveKind::Plane { genus } => {
            let c = random_nodal_plane_curve(*genus, &ring(job, DEFAULT_CHAR, 3)?, rng)?;
            let mut p = describe(&c.curve, None)?;
            // the plane model is singular; report the geometric genus
            p.insert("genus".into(), json!(c.data.g));
            p.insert("arithmetic_genus".into(), json!(curvelab::homology::genus(&c.curve)?));
            p.insert("delta".into(), json!(c.data.delta));
            p.insert("brill_noether".into(), serde_json::to_value(c.data).expect("plain data"));
            with_report(p, &c.report)
        }
        CurveKind::G11Search => {
            let r = ring(job, SEARCH_CHAR, 3)?;
            let s = search_plane_genus11_curve(&r, attempts, rng)?;
            let mut p = describe(&s.curve, None)?;
            p.insert("genus".into(), json!(11));
            p = with_report(p, &s.report);
            p.insert("attempts".into(), json!(s.attempts));
            p
        }
        CurveKind::G12Space => {
            let c = random_space_curve_genus12_degree13(&ring(job, DEFAULT_CHAR, 4)?, rng)?;
            let mut p = describe(&c.ideal, Some(&c.betti))?;
            p.insert("ext".into(), c.ext.to_json());
            p.insert(
                "hartshorne_rao".into(),
                json!({
                    "hilbert_function": c.module.hilbert_function,
                    "numerator": c.module.numerator.to_string(),
                    "betti": c.module.betti().to_json(),
                    "natural": c.module.natural,
                }),
            );
            with_report(p, &c.report)
        }
        CurveKind::G14 { certify } => {
            let c = random_curve_genus14(&ring(job, DEFAULT_CHAR, 7)?, rng, *certify)?;
            let p = describe(&c.ideal, c.betti.as_ref())?;
            match &c.report {
                Some(rep) => with_report(p, rep),
                None => p,
            }
        }
        CurveKind::G7d14 => {
            let c = random_genus7_degree14_curve(&ring(job, DEFAULT_CHAR, 3)?, rng)?;
            let mut p = describe(&c.ideal, Some(&c.betti))?;
            p.insert("n2".into(), json!(c.n2));
            with_report(p, &c.report)
        }
    })
}

fn emit(job: &JobArgs, payload: &Payload) -> std::io::Result<()> {
    let text = match job.format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(payload).expect("serializable payload")),
        Format::Text => output::render_text(payload),
    };
    match &job.output {
        Some(path) => std::fs::write(path, text),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(text.as_bytes())
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let start = Instant::now();
    let result = run(&cli);
    log::info!("finished in {:.2?}", start.elapsed());
    let (payload, code) = match result {
        Ok(p) => {
            let ok = p.get("certified").and_then(Value::as_bool).unwrap_or(true);
            (p, if ok { 0 } else { 2 })
        }
        Err(Failure::Compute(e @ (Error::NotFound { .. } | Error::RetriesExhausted { .. }))) => {
            eprintln!("curvelab: {e}");
            let (what, attempts) = match &e {
                Error::NotFound { what, attempts } | Error::RetriesExhausted { what, attempts } => (what.clone(), *attempts),
                _ => unreachable!(),
            };
            let mut p = Payload::new();
            p.insert("found".into(), json!(false));
            p.insert("what".into(), json!(what));
            p.insert("attempts".into(), json!(attempts));
            p.insert("seed".into(), json!(cli.job.seed));
            (p, 2)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("curvelab: {msg}");
            return ExitCode::from(1);
        }
        Err(Failure::Compute(e)) => {
            eprintln!("curvelab: {e}");
            return ExitCode::from(1);
        }
    };
    if let Err(e) = emit(&cli.job, &payload) {
        eprintln!("curvelab: cannot write output: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(code)
}
