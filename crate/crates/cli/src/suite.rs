use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;

use ulf_core::generators::{
    random_connected_graph, random_finite_measure, random_graph, random_permutation, seeded,
};
use ulf_core::prop_a::{smooth, ProbMeasure};
use ulf_core::rep_check::{
    compression_state_identity, fixed_point_residual, ghost_vanishing, lemma_inequalities,
    norm_reduction, truncate_to_propagation, CheckReport, HSMatrix, VecValuedMatrix,
};
use ulf_core::roe::{compress, h_gamma, PropOperator, DEFAULT_FLOOR};

/// Worst residual (max) and worst slack (min) over the trials of one check.
struct Tally {
    name: &'static str,
    residual: f64,
    slack: f64,
    pass: bool,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            residual: 0.0,
            slack: f64::INFINITY,
            pass: true,
        }
    }

    fn record(&mut self, residual: f64, slack: f64, pass: bool) {
        self.residual = self.residual.max(residual);
        self.slack = self.slack.min(slack);
        self.pass &= pass;
    }

    fn finish(self, seed: u64) -> CheckReport {
        let slack = if self.slack.is_finite() {
            self.slack
        } else {
            0.0
        };
        CheckReport::new(self.name, self.residual, slack, self.pass, seed)
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn random_matrix<R: Rng>(rng: &mut R, n: usize) -> DMatrix<Complex64> {
    DMatrix::from_fn(n, n, |_, _| {
        c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    })
}

fn random_unit_zeta<R: Rng>(rng: &mut R, n: usize, k: usize) -> VecValuedMatrix {
    let mut z = VecValuedMatrix::from_fn(n, k, |_, _, _| {
        if rng.gen_bool(0.6) {
            c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        } else {
            c(0.0, 0.0)
        }
    });
    if z.norm() == 0.0 {
        z.cell_mut(0, 0)[0] = c(1.0, 0.0);
    }
    let s = 1.0 / z.norm();
    z.scale(s);
    z
}

/// Seeded run of the rep-check and smoothing checks; trial `t` uses the
/// RNG seeded with `seed + t`.
pub fn lemma_suite(seed: u64, trials: u64) -> anyhow::Result<Vec<CheckReport>> {
    let mut norm_red = Tally::new("norm_reduction");
    let mut lemma_i = Tally::new("lemma_i");
    let mut lemma_ii = Tally::new("lemma_ii");
    let mut lemma_iii = Tally::new("lemma_iii");
    let mut compression = Tally::new("compression_identity");
    let mut vanishing = Tally::new("ghost_vanishing");
    let mut fixed = Tally::new("fixed_point");
    let mut sm_l1 = Tally::new("smoothing_l1");
    let mut sm_ratio = Tally::new("smoothing_ratio");
    let mut sm_tail = Tally::new("smoothing_tail");

    for t in 0..trials {
        let mut rng = seeded(seed.wrapping_add(t));
        let n = rng.gen_range(1..=8);
        let k = rng.gen_range(1..=3);

        let zeta = random_unit_zeta(&mut rng, n, k);
        let eta = norm_reduction(&zeta);
        let min_entry = eta
            .matrix()
            .iter()
            .map(|v| v.re)
            .fold(f64::INFINITY, f64::min);
        let nr = (eta.norm() - zeta.norm()).abs();
        norm_red.record(nr, min_entry, nr <= 1e-12 && min_entry >= 0.0);

        let h: Vec<f64> = (0..n).map(|_| rng.gen_range(0.05..20.0)).collect();
        let f: Vec<f64> = (0..n).map(|_| rng.gen_range(-3.0..3.0)).collect();
        let gamma = random_permutation(&mut rng, n);
        let r = lemma_inequalities(&zeta, &h, &gamma, &f)?;
        lemma_i.record(0.0, r.slack_i, r.slack_i >= -1e-10);
        lemma_ii.record(r.residual_ii, 0.0, r.residual_ii <= 1e-10);
        lemma_iii.record(r.residual_iii, 0.0, r.residual_iii <= 1e-10);

        let g = random_connected_graph(&mut rng, n, 3, n)?;
        let d = g.metric();
        let s = rng.gen_range(0..=3);
        let a = PropOperator::from_matrix(random_matrix(&mut rng, n))?;
        let eta_s = truncate_to_propagation(&HSMatrix::new(random_matrix(&mut rng, n))?, s, d)?;
        let ci = compression_state_identity(&eta_s, &a, s, d)?;
        compression.record(ci.residual, 0.0, ci.residual <= 1e-12);

        let centre = rng.gen_range(0..n);
        let near = d.ball(centre, 1);
        let mut am = DMatrix::zeros(n, n);
        for &u in &near {
            for &v in &near {
                am[(u, v)] = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            }
        }
        let local = PropOperator::from_matrix(am)?;
        let support = compress(&local, s, d)?.nonzero_support();
        let mut em = truncate_to_propagation(&HSMatrix::new(random_matrix(&mut rng, n))?, s, d)?
            .matrix()
            .clone();
        for &y in &support {
            em.column_mut(y).fill(c(0.0, 0.0));
        }
        let gv = ghost_vanishing(&HSMatrix::new(em)?, &local, s, d)?;
        vanishing.record(gv.value.norm(), 0.0, gv.exact_zero);

        let m = rng.gen_range(1..=30);
        let xi: Vec<f64> = (0..m).map(|_| rng.gen_range(0.01..1.0)).collect();
        let perm = random_permutation(&mut rng, m);
        let hg = h_gamma(&xi, &[(0..m).collect()], &perm, DEFAULT_FLOOR)?;
        let fp = fixed_point_residual(&xi, &hg.values, &perm)?;
        fixed.record(fp, 0.0, fp <= 1e-12);

        let gn = rng.gen_range(1..=60);
        let max_degree = rng.gen_range(1..=6);
        let graph = random_graph(&mut rng, gn, max_degree);
        let measure = ProbMeasure::new(random_finite_measure(&mut rng, gn, 6))?;
        for eps in [0.5, 0.2, 0.1] {
            let sm = smooth(&measure, eps, &graph)?;
            let rep = &sm.report;
            sm_l1.record(rep.l1_distance, eps - rep.l1_distance, rep.l1_ok);
            sm_ratio.record(
                rep.worst_edge_ratio,
                sm.l_used - rep.worst_edge_ratio,
                rep.ratio_ok,
            );
            sm_tail.record(0.0, rep.worst_tail_margin, rep.tail_ok);
        }
    }

    Ok([
        norm_red,
        lemma_i,
        lemma_ii,
        lemma_iii,
        compression,
        vanishing,
        fixed,
        sm_l1,
        sm_ratio,
        sm_tail,
    ]
    .into_iter()
    .map(|t| t.finish(seed))
    .collect())
}

pub fn reports_csv(reports: &[CheckReport]) -> String {
    let mut s = String::from("check,residual,slack,pass,seed\n");
    for r in reports {
        s.push_str(&format!(
            "{},{},{},{},{}\n",
            r.check, r.residual, r.slack, r.pass, r.seed
        ));
    }
    s
}
