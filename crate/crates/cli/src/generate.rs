use anyhow::{bail, Result};
use clap::Subcommand;

use ulf_core::actions::{box_space, schreier_graph, ActionGenerators};
use ulf_core::coarse::{Entourage, UlfGraph};
use ulf_core::generators::{random_regular_graph, seeded};

use crate::output::{to_json, Sink};

#[derive(Debug, Subcommand)]
pub enum Kind {
    /// Schreier graph of Z/m acting on itself by +1 and -1
    Schreier {
        #[arg(long)]
        cyclic: usize,
    },
    /// Box space of cycles
    BoxCycles {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
    },
    /// Box space of complete graphs
    BoxComplete {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
    },
    /// Box space of seeded random regular graphs
    RandomRegular {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        valency: usize,
        #[arg(long, default_value_t = 10_000)]
        tries: usize,
    },
    /// Empty or diagonal entourage
    Entourage {
        #[arg(long, conflicts_with = "diagonal")]
        empty: Option<usize>,
        #[arg(long)]
        diagonal: Option<usize>,
    },
}

pub fn run(kind: &Kind, seed: u64, sink: &Sink) -> Result<bool> {
    let (name, json, summary) = match kind {
        Kind::Schreier { cyclic } => {
            if *cyclic < 3 {
                bail!("--cyclic needs at least 3 elements");
            }
            let g = schreier_graph(&ActionGenerators::cyclic(*cyclic))?;
            let s = format!(
                "schreier graph of Z/{cyclic}: {} vertices, {} edges",
                g.len(),
                g.edge_count()
            );
            ("schreier.json", to_json(&g.to_json())?, s)
        }
        Kind::BoxCycles { sizes } => {
            if let Some(n) = sizes.iter().find(|&&n| n < 3) {
                bail!("cycle size {n} is below 3");
            }
            let b = box_space(sizes.iter().map(|&n| UlfGraph::cycle(n)).collect())?;
            let s = format!("box space of {} cycles, {} points", sizes.len(), b.len());
            ("box_cycles.json", to_json(&b.to_json())?, s)
        }
        Kind::BoxComplete { sizes } => {
            if sizes.contains(&0) {
                bail!("complete graph size must be positive");
            }
            let b = box_space(sizes.iter().map(|&n| UlfGraph::complete(n)).collect())?;
            let s = format!(
                "box space of {} complete graphs, {} points",
                sizes.len(),
                b.len()
            );
            ("box_complete.json", to_json(&b.to_json())?, s)
        }
        Kind::RandomRegular {
            sizes,
            valency,
            tries,
        } => {
            let mut rng = seeded(seed);
            let comps = sizes
                .iter()
                .map(|&n| random_regular_graph(&mut rng, n, *valency, *tries))
                .collect::<ulf_core::Result<Vec<_>>>()?;
            let b = box_space(comps)?;
            let s = format!(
                "box space of {} random {valency}-regular graphs (seed {seed}), {} points",
                sizes.len(),
                b.len()
            );
            ("random_regular.json", to_json(&b.to_json())?, s)
        }
        Kind::Entourage { empty, diagonal } => {
            let e = match (empty, diagonal) {
                (Some(n), None) => Entourage::empty(*n),
                (None, Some(n)) => Entourage::diagonal(*n),
                _ => bail!("give one of --empty or --diagonal"),
            };
            let s = format!(
                "entourage on {} points with {} pairs",
                e.ground_size(),
                e.len()
            );
            ("entourage.json", to_json(&e.to_json())?, s)
        }
    };
    sink.emit(name, &json)?;
    eprintln!("{summary}");
    Ok(true)
}
