use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::Subcommand;

use ulf_core::actions::{edge_color_decompose, is_involution, ActionGenerators, ActionJson};
use ulf_core::coarse::{Entourage, EntourageJson, GraphJson, UlfGraph};
use ulf_core::prop_a::{smoothing_constant, verify_smoothing, ProbMeasure};
use ulf_core::rep_check::{compression_state_identity, CheckReport, HSMatrix};
use ulf_core::roe::{PropOperator, SparseOperatorJson};

use crate::output::{read_json, to_json, Format, Sink};
use crate::suite::reports_csv;

#[derive(Debug, Subcommand)]
pub enum Check {
    /// Three smoothing conditions for a measure and its smoothing
    Smoothing {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        measure: PathBuf,
        #[arg(long)]
        smoothed: PathBuf,
        #[arg(long)]
        eps: f64,
        /// Ratio constant; defaults to the one `ulf smooth` uses
        #[arg(long)]
        l: Option<f64>,
    },
    /// Involution decomposition of a symmetric relation containing the diagonal
    Coloring {
        #[arg(long)]
        entourage: PathBuf,
    },
    /// Every generator of an action is an involution
    Involution {
        #[arg(long)]
        action: PathBuf,
    },
    /// <η, aη> against the sum of ball-compressed expectations
    CompressionIdentity {
        #[arg(long)]
        eta: PathBuf,
        #[arg(long)]
        operator: PathBuf,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        radius: usize,
    },
}

pub fn run(check: &Check, seed: u64, format: Format, sink: &Sink) -> Result<bool> {
    let (name, reports, messages) = match check {
        Check::Smoothing {
            graph,
            measure,
            smoothed,
            eps,
            l,
        } => {
            let g = UlfGraph::from_json(&read_json::<GraphJson>(graph)?)?;
            let eta: ProbMeasure = read_json(measure)?;
            let out: ProbMeasure = read_json(smoothed)?;
            let l = match l {
                Some(l) => *l,
                None => smoothing_constant(g.max_degree(), eps / 3.0)?,
            };
            let r = verify_smoothing(&eta, &out, *eps, l, &g)?;
            let reports = vec![
                CheckReport::new(
                    "smoothing_l1",
                    r.l1_distance,
                    eps - r.l1_distance,
                    r.l1_ok,
                    seed,
                ),
                CheckReport::new(
                    "smoothing_ratio",
                    r.worst_edge_ratio,
                    l - r.worst_edge_ratio,
                    r.ratio_ok,
                    seed,
                ),
                CheckReport::new("smoothing_tail", 0.0, r.worst_tail_margin, r.tail_ok, seed),
            ];
            ("smoothing", reports, Vec::new())
        }
        Check::Coloring { entourage } => {
            let s = Entourage::from_json(&read_json::<EntourageJson>(entourage)?)?;
            let d = s.check_ulf();
            let invs = edge_color_decompose(&s)?;
            let mut cover = Entourage::empty(s.ground_size());
            let mut bad = Vec::new();
            for (i, g) in invs.iter().enumerate() {
                if !is_involution(g) {
                    bad.push(format!("color {i} is not an involution"));
                }
                cover = cover.union(&g.graph())?;
            }
            let limit = (2 * d).saturating_sub(1);
            let count_ok = invs.len() <= limit;
            if !count_ok {
                bad.push(format!(
                    "{} involutions exceed 2d - 1 = {limit}",
                    invs.len()
                ));
            }
            let cover_ok = cover == s;
            if !cover_ok {
                bad.push("union of graphs differs from the relation".into());
            }
            let reports = vec![
                CheckReport::new(
                    "coloring_count",
                    invs.len() as f64,
                    limit as f64 - invs.len() as f64,
                    count_ok,
                    seed,
                ),
                CheckReport::new("coloring_cover", 0.0, 0.0, cover_ok, seed),
                CheckReport::new(
                    "coloring_involutions",
                    0.0,
                    0.0,
                    invs.iter().all(is_involution),
                    seed,
                ),
            ];
            ("coloring", reports, bad)
        }
        Check::Involution { action } => {
            let gens = ActionGenerators::from_json(&read_json::<ActionJson>(action)?)?;
            let mut reports = Vec::new();
            let mut bad = Vec::new();
            for g in gens.generators() {
                let ok = is_involution(&g.map);
                if !ok {
                    bad.push(format!("generator {} is not an involution", g.name));
                }
                reports.push(CheckReport::new(
                    format!("involution:{}", g.name),
                    0.0,
                    0.0,
                    ok,
                    seed,
                ));
            }
            ("involution", reports, bad)
        }
        Check::CompressionIdentity {
            eta,
            operator,
            graph,
            radius,
        } => {
            let g = UlfGraph::from_json(&read_json::<GraphJson>(graph)?)?;
            let eta = HSMatrix::new(
                PropOperator::from_json(&read_json::<SparseOperatorJson>(eta)?)?.into_matrix(),
            )?;
            let a = PropOperator::from_json(&read_json::<SparseOperatorJson>(operator)?)?;
            if eta.dim() != g.len() || a.dim() != g.len() {
                bail!("η, a and the graph must share the ground set");
            }
            let r = compression_state_identity(&eta, &a, *radius, g.metric())?;
            let ok = r.residual <= 1e-12;
            let reports = vec![CheckReport::new(
                "compression_identity",
                r.residual,
                0.0,
                ok,
                seed,
            )];
            ("compression_identity", reports, Vec::new())
        }
    };
    match format {
        Format::Json => sink.emit(&format!("verify_{name}.json"), &to_json(&reports)?)?,
        Format::Csv => sink.emit(&format!("verify_{name}.csv"), &reports_csv(&reports))?,
    }
    for m in &messages {
        eprintln!("check failed: {m}");
    }
    Ok(reports.iter().all(|r| r.pass))
}
