//! `spacecross` command-line tool.

mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "spacecross", version, about = "Space crossings of graph drawings")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Input JSON document.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Output path; stdout when absent.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Exact)]
    pub mode: ModeArg,
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Node-expansion budget for subdivision searches.
    #[arg(long, global = true, default_value_t = 200_000)]
    pub budget: u64,
    #[arg(long, global = true, default_value_t = 8)]
    pub subdivision: u32,
    #[arg(long, global = true)]
    pub threads: Option<u32>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeArg {
    Exact,
    Float,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count k-tuples of disjoint edges met by a common line.
    CountCrossings {
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u8).range(3..=4))]
        k: u8,
        /// Include a certified line for every crossing.
        #[arg(long)]
        witnesses: bool,
    },
    /// Count crossing pairs of a drawing in the plane z = 0.
    CountPlanar,
    /// Lift a planar straight-line drawing onto a sphere.
    LiftSphere,
    /// Standard stair drawing of the interval graph with its candidate count.
    GenStair {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        check_bounds: bool,
    },
    /// Hexagonal grid on a sphere plus one straight chord.
    GenHexgrid {
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Linking number of two polygonal cycles.
    Linking,
    /// Linking numbers of the ten triangle pairs of six points.
    ConwayGordon,
    /// A line meeting four polygonal cycles.
    #[command(name = "transversal-4cycles")]
    Transversal4cycles,
    /// Space-crossing witnesses from linked cycles on both sides of a bisection.
    WitnessPipeline,
    /// The 105 interval order types by component count.
    OrderTypes,
    /// Yao–Yao partition of a point multiset.
    YaoYao,
    /// Same-type refinement of point multisets.
    SameType,
    /// Seeded fixtures and random inputs.
    Generate {
        #[arg(long, value_enum)]
        kind: GenKind,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 20)]
        m: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Denominator bound for rational points.
        #[arg(long, default_value_t = 64)]
        den: i64,
        /// Coordinate range for integer positions.
        #[arg(long, default_value_t = 1000)]
        range: i64,
        #[arg(long, default_value_t = 2)]
        dim: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenKind {
    Points,
    Gnp,
    Gnm,
    Drawing,
    PlanarDrawing,
    Hopf,
    Stacked,
    K6s,
    Multiset,
}

fn exit_code(e: &anyhow::Error) -> (u8, &'static str) {
    match e.downcast_ref::<spacecross::Error>() {
        Some(err) if err.is_internal() => (2, err.code()),
        Some(err) => (1, err.code()),
        None => (1, "input"),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("SPACECROSSING_LOG", "warn")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let doc = json!({"error": "usage", "message": e.to_string()});
            eprintln!("{doc}");
            return ExitCode::from(1);
        }
    };
    match commands::run(&cli).and_then(|doc| emit(&cli.common, &doc)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let (code, name) = exit_code(&e);
            eprintln!("{}", json!({"error": name, "message": format!("{e:#}")}));
            ExitCode::from(code)
        }
    }
}

fn emit(common: &Common, doc: &serde_json::Value) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(doc)?;
    match &common.output {
        Some(p) => std::fs::write(p, text + "\n")?,
        None => match writeln!(std::io::stdout(), "{text}") {
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
            r => r?,
        },
    }
    Ok(())
}
