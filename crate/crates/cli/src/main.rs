//! `ulf`: generate coarse-geometry objects, run experiments and verifiers.

mod experiment;
mod generate;
mod output;
mod suite;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};

use output::{read_json, to_json, Format, Sink};
use ulf_core::coarse::{GraphJson, UlfGraph};
use ulf_core::prop_a::{smooth, ProbMeasure};

#[derive(Debug, Parser)]
#[command(name = "ulf", version, about = "Finite-scale coarse geometry toolkit")]
struct Cli {
    /// Seed for every random choice
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write artifacts into this directory instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a graph, box space or entourage as JSON
    Generate {
        #[command(subcommand)]
        kind: generate::Kind,
    },
    /// Run an experiment and emit its report
    Experiment {
        #[command(subcommand)]
        experiment: experiment::Experiment,
    },
    /// Run a verifier on objects read from files
    Verify {
        #[command(subcommand)]
        check: verify::Check,
    },
    /// Smooth a probability measure on a graph
    Smooth {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        measure: PathBuf,
        #[arg(long)]
        eps: f64,
    },
}

fn run(cli: Cli) -> Result<bool> {
    let sink = Sink { out: cli.out };
    match cli.command {
        Command::Generate { kind } => generate::run(&kind, cli.seed, &sink),
        Command::Experiment { experiment } => {
            experiment::run(experiment, cli.seed, cli.format, &sink)
        }
        Command::Verify { check } => verify::run(&check, cli.seed, cli.format, &sink),
        Command::Smooth {
            graph,
            measure,
            eps,
        } => {
            let g = UlfGraph::from_json(&read_json::<GraphJson>(&graph)?)?;
            let eta: ProbMeasure = read_json(&measure)?;
            let s = smooth(&eta, eps, &g)?;
            sink.emit("smoothed.json", &to_json(&s.measure)?)?;
            eprintln!(
                "L = {}, l1 distance {}, conditions {}",
                s.l_used,
                s.report.l1_distance,
                if s.report.passed() { "hold" } else { "fail" }
            );
            Ok(s.report.passed())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
