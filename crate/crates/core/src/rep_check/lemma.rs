use serde::{Deserialize, Serialize};

use super::hs::{norm_reduction, HSMatrix, VecValuedMatrix};
use crate::actions::PartialTranslation;
use crate::error::{Error, Result};

/// Tolerance on `‖ζ‖ = 1` for [`lemma_inequalities`].
pub const UNIT_TOL: f64 = 1e-10;

/// `(hγ) Ω γ⁻¹`, that is `(x, y) ↦ h(x) Ω(γ⁻¹x, γ⁻¹y)`.
pub fn twisted_conjugate(
    omega: &HSMatrix,
    h: &[f64],
    gamma: &PartialTranslation,
) -> Result<HSMatrix> {
    let n = omega.dim();
    let inv = total_inverse(gamma, n)?;
    check_len(h.len(), n)?;
    let m = nalgebra::DMatrix::from_fn(n, n, |x, y| omega.entry(inv[x], inv[y]) * h[x]);
    HSMatrix::new(m)
}

/// Same action on a vector-valued matrix: `K`-vectors move along permuted cells.
pub fn twisted_conjugate_vec(
    zeta: &VecValuedMatrix,
    h: &[f64],
    gamma: &PartialTranslation,
) -> Result<VecValuedMatrix> {
    let n = zeta.dim();
    let inv = total_inverse(gamma, n)?;
    check_len(h.len(), n)?;
    Ok(VecValuedMatrix::from_fn(n, zeta.aux_dim(), |x, y, c| {
        zeta.cell(inv[x], inv[y])[c] * h[x]
    }))
}

fn check_len(actual: usize, expected: usize) -> Result<()> {
    if actual != expected {
        return Err(Error::DimensionMismatch { expected, actual });
    }
    Ok(())
}

fn total_inverse(gamma: &PartialTranslation, n: usize) -> Result<Vec<usize>> {
    check_len(gamma.ground_size(), n)?;
    if !gamma.is_total() {
        return Err(Error::NotBijective {
            name: "γ".to_string(),
        });
    }
    let inv = gamma.inverse();
    Ok((0..n)
        .map(|x| inv.apply(x).expect("total bijection"))
        .collect())
}

/// Measured sides of the three relations checked by [`lemma_inequalities`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LemmaReport {
    /// `⟨η, hγ·η·γ⁻¹⟩`
    pub lhs_i: f64,
    /// `|⟨ζ, hγ·ζ·γ⁻¹⟩|`
    pub rhs_i: f64,
    pub slack_i: f64,
    /// `‖hγ·η·γ⁻¹‖²`
    pub norm_sq_eta: f64,
    /// `‖hγ·ζ·γ⁻¹‖²`
    pub norm_sq_zeta: f64,
    pub residual_ii: f64,
    /// `⟨η, fη⟩`
    pub f_eta: f64,
    /// `⟨ζ, fζ⟩`
    pub f_zeta: f64,
    pub residual_iii: f64,
}

impl LemmaReport {
    pub fn passed(&self, tol: f64) -> bool {
        self.slack_i >= -tol && self.residual_ii <= tol && self.residual_iii <= tol
    }
}

/// With `η = norm_reduction(ζ)` evaluates
/// (i) `⟨η, hγ·η·γ⁻¹⟩ ≥ |⟨ζ, hγ·ζ·γ⁻¹⟩|`,
/// (ii) `‖hγ·η·γ⁻¹‖² = ‖hγ·ζ·γ⁻¹‖²`,
/// (iii) `⟨η, fη⟩ = ⟨ζ, fζ⟩` for diagonal `f` acting on rows.
pub fn lemma_inequalities(
    zeta: &VecValuedMatrix,
    h: &[f64],
    gamma: &PartialTranslation,
    f: &[f64],
) -> Result<LemmaReport> {
    let n = zeta.dim();
    check_len(f.len(), n)?;
    check_len(h.len(), n)?;
    if let Some(x) = h.iter().position(|&v| !(v > 0.0) || !v.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "h({x}) = {} is not positive",
            h[x]
        )));
    }
    let norm = zeta.norm();
    if (norm - 1.0).abs() > UNIT_TOL {
        return Err(Error::InvalidParameter(format!(
            "ζ has norm {norm}, expected 1"
        )));
    }

    let eta = norm_reduction(zeta);
    let moved_eta = twisted_conjugate(&eta, h, gamma)?;
    let moved_zeta = twisted_conjugate_vec(zeta, h, gamma)?;

    let lhs_i = eta.inner(&moved_eta)?.re;
    let rhs_i = zeta.inner(&moved_zeta)?.norm();
    let norm_sq_eta = moved_eta.norm().powi(2);
    let norm_sq_zeta = moved_zeta.norm().powi(2);

    let (mut f_eta, mut f_zeta) = (0.0, 0.0);
    for (x, &fx) in f.iter().enumerate() {
        for y in 0..n {
            f_eta += fx * eta.entry(x, y).norm_sqr();
            f_zeta += fx * zeta.cell(x, y).iter().map(|v| v.norm_sqr()).sum::<f64>();
        }
    }

    Ok(LemmaReport {
        lhs_i,
        rhs_i,
        slack_i: lhs_i - rhs_i,
        norm_sq_eta,
        norm_sq_zeta,
        residual_ii: (norm_sq_eta - norm_sq_zeta).abs(),
        f_eta,
        f_zeta,
        residual_iii: (f_eta - f_zeta).abs(),
    })
}

/// `max |(hγ·diag(ξ)·γ⁻¹ - diag(ξ))(x, y)|`.
pub fn fixed_point_residual(xi: &[f64], h: &[f64], gamma: &PartialTranslation) -> Result<f64> {
    let xi_mat = super::hs::diag_embed_real(xi);
    let moved = twisted_conjugate(&xi_mat, h, gamma)?;
    Ok(moved
        .matrix()
        .iter()
        .zip(xi_mat.matrix().iter())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max))
}
