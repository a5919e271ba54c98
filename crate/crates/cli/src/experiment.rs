use anyhow::{bail, Result};
use clap::{Subcommand, ValueEnum};
use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use ulf_core::actions::box_space;
use ulf_core::coarse::UlfGraph;
use ulf_core::generators::{random_regular_graph, seeded};
use ulf_core::prop_a::{ball_average_witness, witness_quality, witness_quality_on};
use ulf_core::roe::{
    block_constant_ghost, block_constant_projection, ghost_profile, operator_norm, PropOperator,
    SparseFamily, BLOCK_NORM_TOL,
};

use crate::output::{to_json, Format, Sink};
use crate::suite::{lemma_suite, reports_csv};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Complete,
    RandomRegular,
}

#[derive(Debug, Subcommand)]
pub enum Experiment {
    /// Ball-average witnesses on a box space of cycles
    AmenableBox {
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
        /// Witness radii S to sweep
        #[arg(long, value_delimiter = ',')]
        radius: Option<Vec<usize>>,
        /// Scale R of the witness quality
        #[arg(long, default_value_t = 1)]
        scale: usize,
    },
    /// Spectral gaps and ghost bounds on a box space of expander stand-ins
    ExpanderBox {
        #[arg(long, value_enum, default_value_t = Family::RandomRegular)]
        family: Family,
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
        /// Valency of the random regular components
        #[arg(long, default_value_t = 3)]
        valency: usize,
        /// Polynomial degree k of ((1 + A)/2)^k
        #[arg(long, default_value_t = 4)]
        degree: u32,
        /// Witness radius S
        #[arg(long, default_value_t = 1)]
        radius: usize,
        #[arg(long, default_value_t = 1)]
        scale: usize,
    },
    /// Seeded rep-check and smoothing checks
    LemmaSuite {
        #[arg(long, default_value_t = 50)]
        trials: u64,
    },
}

#[derive(Serialize)]
struct AmenableRow {
    radius: usize,
    eps: f64,
    predicted: Option<f64>,
    components: usize,
}

#[derive(Serialize)]
struct AmenableReport {
    experiment: &'static str,
    scale: usize,
    sizes: Vec<usize>,
    rows: Vec<AmenableRow>,
    pass: bool,
}

fn amenable_box(
    sizes: Option<Vec<usize>>,
    radius: Option<Vec<usize>>,
    scale: usize,
    format: Format,
    sink: &Sink,
) -> Result<bool> {
    let sizes = sizes.unwrap_or_else(|| (5..=101).step_by(4).collect());
    let mut radii = radius.unwrap_or_else(|| (0..=20).collect());
    radii.sort_unstable();
    radii.dedup();
    if let Some(n) = sizes.iter().find(|&&n| n < 3) {
        bail!("cycle size {n} is below 3");
    }
    let b = box_space(sizes.iter().map(|&n| UlfGraph::cycle(n)).collect())?;
    let d = b.metric();
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for &s in &radii {
        // only components whose balls are proper arcs
        let qualifying: Vec<usize> = (0..sizes.len()).filter(|&i| sizes[i] > 2 * s + 1).collect();
        if qualifying.is_empty() {
            continue;
        }
        let w = ball_average_witness(d, s);
        let mut eps: f64 = 0.0;
        for &i in &qualifying {
            let points: Vec<usize> = (b.offset(i)..b.offset(i) + sizes[i]).collect();
            eps = eps.max(witness_quality_on(&w, scale, d, &points)?);
        }
        let predicted = (scale == 1).then(|| 2.0 / (2 * s + 1) as f64);
        if let Some(p) = predicted {
            if (eps - p).abs() > 1e-12 {
                failures.push(format!("S = {s}: eps {eps} differs from {p}"));
            }
        }
        if let Some(prev) = rows.last().map(|r: &AmenableRow| r.eps) {
            if eps >= prev {
                failures.push(format!("S = {s}: eps {eps} does not decrease"));
            }
        }
        rows.push(AmenableRow {
            radius: s,
            eps,
            predicted,
            components: qualifying.len(),
        });
    }
    let pass = failures.is_empty();
    match format {
        Format::Csv => {
            let mut out = String::from("S,eps,predicted,components\n");
            for r in &rows {
                let p = r.predicted.map(|p| p.to_string()).unwrap_or_default();
                out.push_str(&format!("{},{},{},{}\n", r.radius, r.eps, p, r.components));
            }
            sink.emit("amenable_box.csv", &out)?;
        }
        Format::Json => {
            let report = AmenableReport {
                experiment: "amenable-box",
                scale,
                sizes,
                rows,
                pass,
            };
            sink.emit("amenable_box.json", &to_json(&report)?)?;
        }
    }
    report_failures(&failures);
    Ok(pass)
}

#[derive(Serialize)]
struct ComponentRow {
    component: usize,
    size: usize,
    valency: usize,
    lambda2: Option<f64>,
    spectral_gap: Option<f64>,
    ghost_bound: f64,
    ghost_error: f64,
    witness_quality: f64,
}

#[derive(Serialize)]
struct ExpanderReport {
    experiment: &'static str,
    degree: u32,
    radius: usize,
    scale: usize,
    seed: u64,
    components: Vec<ComponentRow>,
    ghost_profile: Vec<f64>,
    pass: bool,
}

#[allow(clippy::too_many_arguments)]
fn expander_box(
    family: Family,
    sizes: Option<Vec<usize>>,
    valency: usize,
    degree: u32,
    radius: usize,
    scale: usize,
    seed: u64,
    format: Format,
    sink: &Sink,
) -> Result<bool> {
    let sizes = sizes.unwrap_or_else(|| vec![16, 32, 64]);
    if sizes.contains(&0) {
        bail!("component sizes must be positive");
    }
    let comps: Vec<UlfGraph> = match family {
        Family::Complete => sizes.iter().map(|&n| UlfGraph::complete(n)).collect(),
        Family::RandomRegular => {
            let mut rng = seeded(seed);
            sizes
                .iter()
                .map(|&n| random_regular_graph(&mut rng, n, valency, 10_000))
                .collect::<ulf_core::Result<_>>()?
        }
    };
    let b = box_space(comps)?;
    let (t, bounds) = block_constant_ghost(&b, degree)?;
    let mut failures = Vec::new();
    let mut rows = Vec::new();
    for (i, comp) in b.components().iter().enumerate() {
        let m = comp.len();
        let o = b.offset(i);
        let diff = DMatrix::from_fn(m, m, |x, y| {
            t.entry(o + x, o + y) - Complex64::new(1.0 / m as f64, 0.0)
        });
        let ghost_error = operator_norm(&PropOperator::from_matrix(diff)?);
        let bound = &bounds[i];
        if ghost_error > bound.bound + 1e-9 {
            failures.push(format!(
                "component {i}: error {ghost_error} above bound {}",
                bound.bound
            ));
        }
        let w = ball_average_witness(comp.metric(), radius);
        rows.push(ComponentRow {
            component: i,
            size: m,
            valency: bound.degree,
            lambda2: bound.lambda2,
            spectral_gap: bound.lambda2.map(|l| 1.0 - l),
            ghost_bound: bound.bound,
            ghost_error,
            witness_quality: witness_quality(&w, scale, comp.metric())?,
        });
    }

    let p = block_constant_projection(&b);
    let fam = SparseFamily::from_box_space(&b);
    let profile = ghost_profile(&p, &fam.exhaustion())?;
    for (i, comp) in b.components().iter().enumerate() {
        let m = comp.len();
        let expected = 1.0 / m as f64;
        if (b.offset(i)..b.offset(i) + m).any(|k| profile.at(k) != expected) {
            failures.push(format!("ghost profile on component {i} differs from 1/{m}"));
        }
        let block = DMatrix::from_fn(m, m, |x, y| p.entry(b.offset(i) + x, b.offset(i) + y));
        let norm = operator_norm(&PropOperator::from_matrix(block)?);
        if (norm - 1.0).abs() > BLOCK_NORM_TOL {
            failures.push(format!("component {i}: projection norm {norm}"));
        }
    }

    let pass = failures.is_empty();
    match format {
        Format::Csv => {
            let mut out = String::from(
                "component,size,valency,lambda2,spectral_gap,ghost_bound,ghost_error,witness_quality\n",
            );
            for r in &rows {
                let opt = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{}\n",
                    r.component,
                    r.size,
                    r.valency,
                    opt(r.lambda2),
                    opt(r.spectral_gap),
                    r.ghost_bound,
                    r.ghost_error,
                    r.witness_quality
                ));
            }
            sink.emit("expander_box.csv", &out)?;
            sink.emit("ghost_profile.csv", &profile.to_csv())?;
        }
        Format::Json => {
            let report = ExpanderReport {
                experiment: "expander-box",
                degree,
                radius,
                scale,
                seed,
                components: rows,
                ghost_profile: profile.values().to_vec(),
                pass,
            };
            sink.emit("expander_box.json", &to_json(&report)?)?;
        }
    }
    report_failures(&failures);
    Ok(pass)
}

fn report_failures(failures: &[String]) {
    for f in failures {
        eprintln!("check failed: {f}");
    }
}

pub fn run(exp: Experiment, seed: u64, format: Format, sink: &Sink) -> Result<bool> {
    match exp {
        Experiment::AmenableBox {
            sizes,
            radius,
            scale,
        } => amenable_box(sizes, radius, scale, format, sink),
        Experiment::ExpanderBox {
            family,
            sizes,
            valency,
            degree,
            radius,
            scale,
        } => expander_box(
            family, sizes, valency, degree, radius, scale, seed, format, sink,
        ),
        Experiment::LemmaSuite { trials } => {
            let reports = lemma_suite(seed, trials)?;
            let pass = reports.iter().all(|r| r.pass);
            match format {
                Format::Csv => sink.emit("lemma_suite.csv", &reports_csv(&reports))?,
                Format::Json => sink.emit("lemma_suite.json", &to_json(&reports)?)?,
            }
            report_failures(
                &reports
                    .iter()
                    .filter(|r| !r.pass)
                    .map(|r| format!("{} (residual {}, slack {})", r.check, r.residual, r.slack))
                    .collect::<Vec<_>>(),
            );
            Ok(pass)
        }
    }
}
