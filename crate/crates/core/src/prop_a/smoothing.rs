use serde::{Deserialize, Serialize};

use super::measure::ProbMeasure;
use crate::coarse::{Dist, UlfGraph};
use crate::error::{Error, Result};

/// Default slack for the inequality checks in [`verify_smoothing`].
pub const SMOOTHING_TOL: f64 = 1e-10;

/// `L = max {1, M (1 + 1/ε)}` for max degree `M` and `0 < ε < 1`.
pub fn smoothing_constant(max_degree: usize, eps: f64) -> Result<f64> {
    check_eps(eps)?;
    Ok(f64::max(1.0, max_degree as f64 * (1.0 + 1.0 / eps)))
}

fn check_eps(eps: f64) -> Result<()> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "ε must lie in (0, 1), got {eps}"
        )));
    }
    Ok(())
}

/// `η'(x) ∝ Σ_w L^{-d(x, w)} η(w)` with `L^{-∞} = 0`, normalised to mass 1.
pub fn smooth_with_constant(eta: &ProbMeasure, l: f64, g: &UlfGraph) -> Result<ProbMeasure> {
    if eta.len() != g.len() {
        return Err(Error::DimensionMismatch {
            expected: g.len(),
            actual: eta.len(),
        });
    }
    if !(l >= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "L must be at least 1, got {l}"
        )));
    }
    let d = g.metric();
    let support = eta.support();
    let inv = 1.0 / l;
    let raw: Vec<f64> = (0..g.len())
        .map(|x| {
            support
                .iter()
                .map(|&w| match d.get(x, w) {
                    Dist::Finite(k) => inv.powi(k as i32) * eta.get(w),
                    Dist::Inf => 0.0,
                })
                .sum()
        })
        .collect();
    ProbMeasure::normalized(raw)
}

/// Output of [`smooth`].
#[derive(Debug, Clone, PartialEq)]
pub struct Smoothed {
    pub measure: ProbMeasure,
    /// Ratio constant the output satisfies along edges.
    pub l_used: f64,
    /// `ε / 3`, the internal tolerance fed to [`smoothing_constant`].
    pub eps_internal: f64,
    pub report: SmoothingReport,
}

/// Smooths `η` so that, with the caller's `ε`:
/// `‖η - η'‖₁ ≤ ε`, `L⁻¹η'(x) ≤ η'(y) ≤ Lη'(x)` on edges, and
/// `‖P_V η'‖₁ ≤ ε^{dist(V, supp η)}`.
///
/// The raw sum is built with `ε/3`: its total mass `Z` lies in
/// `[1, 1 + ε/3]`, so normalising moves it by at most `2(Z - 1) < ε` in ℓ1
/// and only shrinks the tails.
pub fn smooth(eta: &ProbMeasure, eps: f64, g: &UlfGraph) -> Result<Smoothed> {
    check_eps(eps)?;
    let eps_internal = eps / 3.0;
    let l_used = smoothing_constant(g.max_degree(), eps_internal)?;
    let measure = smooth_with_constant(eta, l_used, g)?;
    let report = verify_smoothing(eta, &measure, eps, l_used, g)?;
    Ok(Smoothed {
        measure,
        l_used,
        eps_internal,
        report,
    })
}

/// Measured quantities for the three smoothing conditions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SmoothingReport {
    pub eps: f64,
    pub l: f64,
    pub l1_distance: f64,
    /// Largest `η'(y)/η'(x)` over edges (1 when there are none).
    pub worst_edge_ratio: f64,
    /// Smallest `ε^r - ‖P_{V_r} η'‖₁` over the distance shells.
    pub worst_tail_margin: f64,
    pub l1_ok: bool,
    pub ratio_ok: bool,
    pub tail_ok: bool,
}

impl SmoothingReport {
    pub fn passed(&self) -> bool {
        self.l1_ok && self.ratio_ok && self.tail_ok
    }
}

/// Checks the three smoothing conditions with the default tolerance.
pub fn verify_smoothing(
    eta: &ProbMeasure,
    smoothed: &ProbMeasure,
    eps: f64,
    l: f64,
    g: &UlfGraph,
) -> Result<SmoothingReport> {
    verify_smoothing_with_tolerance(eta, smoothed, eps, l, g, SMOOTHING_TOL)
}

/// The tail condition is checked on the shells `V_r = {x : dist(x, supp η) ≥ r}`
/// for every finite `r` plus the shell at infinite distance (bound 0); any
/// `V` with `dist(V, supp η) = r` lies inside `V_r`, so these are the
/// extremal cases. The ratio condition uses relative slack `tol`, the ℓ1
/// and tail conditions absolute slack `tol`.
pub fn verify_smoothing_with_tolerance(
    eta: &ProbMeasure,
    smoothed: &ProbMeasure,
    eps: f64,
    l: f64,
    g: &UlfGraph,
    tol: f64,
) -> Result<SmoothingReport> {
    let n = g.len();
    for len in [eta.len(), smoothed.len()] {
        if len != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: len,
            });
        }
    }
    let l1_distance = eta.l1_distance(smoothed);

    let mut worst_edge_ratio: f64 = 1.0;
    let mut ratio_ok = true;
    for (x, y) in g.edges() {
        if x == y {
            continue;
        }
        let (a, b) = (smoothed.get(x), smoothed.get(y));
        for (p, q) in [(a, b), (b, a)] {
            if q > l * p * (1.0 + tol) {
                ratio_ok = false;
            }
            let r = if p > 0.0 {
                q / p
            } else if q > 0.0 {
                f64::INFINITY
            } else {
                1.0
            };
            worst_edge_ratio = worst_edge_ratio.max(r);
        }
    }

    // distance of each point to supp η
    let d = g.metric();
    let support = eta.support();
    let to_support: Vec<Dist> = (0..n)
        .map(|x| {
            support
                .iter()
                .map(|&w| d.get(x, w))
                .min()
                .unwrap_or(Dist::Inf)
        })
        .collect();
    let max_finite = to_support
        .iter()
        .filter_map(|d| d.finite())
        .max()
        .unwrap_or(0);
    let mut mass_at = vec![0.0; max_finite as usize + 1];
    let mut mass_inf = 0.0;
    for (x, dist) in to_support.iter().enumerate() {
        match *dist {
            Dist::Finite(r) => mass_at[r as usize] += smoothed.get(x),
            Dist::Inf => mass_inf += smoothed.get(x),
        }
    }
    let mut worst_tail_margin = -mass_inf;
    let mut tail = mass_inf;
    for r in (1..=max_finite as usize).rev() {
        tail += mass_at[r];
        worst_tail_margin = worst_tail_margin.min(eps.powi(r as i32) - tail);
    }
    // r = 0 is the whole space: mass 1 against bound 1
    worst_tail_margin = worst_tail_margin.min(1.0 - smoothed.weights().iter().sum::<f64>());

    Ok(SmoothingReport {
        eps,
        l,
        l1_distance,
        worst_edge_ratio,
        worst_tail_margin,
        l1_ok: l1_distance <= eps + tol,
        ratio_ok,
        tail_ok: worst_tail_margin >= -tol,
    })
}
