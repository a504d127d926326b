use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use t3embed::job::{JobDocument, ReportMode};
use t3embed::report::{matrix_rows, report_json};
use t3embed::sampling::random_map;
use t3embed::selfcheck::{run_all, Scale, DEFAULT_SEED};
use t3embed::{build_witness, decide, SurfaceModel};

const EMBEDDABLE: u8 = 0;
const NOT_EMBEDDABLE: u8 = 1;
const INPUT_ERROR: u8 = 2;

#[derive(Parser)]
#[command(name = "t3embed", version, about = "Decide whether a surface map into the 3-torus is homotopic to an embedding")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide one job document; exit 0 if embeddable, 1 if not, 2 on bad input.
    Decide {
        /// Job file, or `-` for standard input.
        file: PathBuf,
        /// Attach a witness when the map is embeddable.
        #[arg(long)]
        witness: bool,
        /// Report detail; overrides the job's own option.
        #[arg(long, value_enum)]
        report: Option<ReportArg>,
    },
    /// Print verdicts for random maps as JSON lines.
    Sample {
        /// `o:<genus>` or `n:<genus>`.
        #[arg(long)]
        surface: String,
        #[arg(long, default_value_t = 2)]
        bound: i64,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the oracle self checks.
    Selftest {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportArg {
    Verdict,
    Full,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Decide { file, witness, report } => cmd_decide(&file, witness, report),
        Command::Sample { surface, bound, count, seed } => cmd_sample(&surface, bound, count, seed),
        Command::Selftest { seed } => Ok(cmd_selftest(seed)),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(INPUT_ERROR)
        }
    }
}

fn read_input(path: &PathBuf) -> anyhow::Result<String> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).context("reading standard input")?;
    } else {
        text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    }
    Ok(text)
}

fn cmd_decide(path: &PathBuf, witness_flag: bool, report: Option<ReportArg>) -> anyhow::Result<u8> {
    let job = JobDocument::parse(&read_input(path)?)?;
    let f = job.to_map()?;
    let mode = match report {
        Some(ReportArg::Verdict) => ReportMode::Verdict,
        Some(ReportArg::Full) => ReportMode::Full,
        None => job.options.report,
    };
    let verdict = decide(&f);
    let witness = if (witness_flag || job.options.witness) && verdict.embeddable {
        build_witness(&f)?.witness().cloned()
    } else {
        None
    };
    let doc = report_json(&f, &verdict, witness.as_ref(), mode)?;
    println!("{}", serde_json::to_string_pretty(&doc)?);
    Ok(if verdict.embeddable { EMBEDDABLE } else { NOT_EMBEDDABLE })
}

fn parse_surface(arg: &str) -> anyhow::Result<SurfaceModel> {
    let Some((kind, genus)) = arg.split_once(':') else {
        bail!("surface must look like o:<genus> or n:<genus>, got {arg:?}");
    };
    let genus: i64 = genus.parse().with_context(|| format!("genus {genus:?} is not an integer"))?;
    let kind = match kind {
        "o" => t3embed::SurfaceKind::Orientable,
        "n" => t3embed::SurfaceKind::Nonorientable,
        _ => bail!("surface kind must be o or n, got {kind:?}"),
    };
    Ok(SurfaceModel::new(kind, genus)?)
}

fn cmd_sample(arg: &str, bound: i64, count: usize, seed: u64) -> anyhow::Result<u8> {
    let surface = parse_surface(arg)?;
    if bound < 1 {
        bail!("bound must be at least 1");
    }
    if count < 1 {
        bail!("count must be at least 1");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let maps: Vec<_> = (0..count).map(|_| random_map(&mut rng, &surface, bound)).collect();
    let lines: Vec<String> = maps
        .par_iter()
        .map(|f| {
            let v = decide(f);
            json!({
                "matrix": matrix_rows(f.matrix()),
                "embeddable": v.embeddable,
                "case": v.case.as_str(),
                "failed": v.failed(),
            })
            .to_string()
        })
        .collect();
    for line in lines {
        println!("{line}");
    }
    Ok(0)
}

fn cmd_selftest(seed: u64) -> u8 {
    let results = run_all(seed, Scale::FULL);
    for r in &results {
        println!("{r}");
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    println!("{} passed, {failed} failed", results.len() - failed);
    u8::from(failed > 0)
}
