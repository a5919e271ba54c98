use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::hs::HSMatrix;
use crate::coarse::ExtendedMetric;
use crate::error::{Error, Result};
use crate::roe::{compress, PropOperator};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompressionIdentityReport {
    pub radius: usize,
    /// `⟨η, aη⟩`
    pub lhs: Complex64,
    /// `Σ_y ⟨ω^y, Φ_S(a)_y ω^y⟩`
    pub rhs: Complex64,
    pub residual: f64,
}

fn check_propagation(eta: &HSMatrix, radius: usize, d: &ExtendedMetric) -> Result<()> {
    let p = eta.propagation(d)?;
    if !p.within(radius) {
        return Err(Error::PropagationExceeded {
            actual: p.to_string(),
            allowed: radius,
        });
    }
    Ok(())
}

fn hs_expectation(eta: &HSMatrix, a: &PropOperator) -> Result<Complex64> {
    if a.dim() != eta.dim() {
        return Err(Error::DimensionMismatch {
            expected: eta.dim(),
            actual: a.dim(),
        });
    }
    let a_eta = HSMatrix::new(a.matrix() * eta.matrix())?;
    eta.inner(&a_eta)
}

/// Compares `⟨η, aη⟩_HS` with the sum over columns `y` of
/// `⟨ω^y, Φ_S(a)_y ω^y⟩`, `ω^y` being column `y` of `η` restricted to
/// `Ball(y, S)`. Requires `prop(η) ≤ S`.
pub fn compression_state_identity(
    eta: &HSMatrix,
    a: &PropOperator,
    radius: usize,
    d: &ExtendedMetric,
) -> Result<CompressionIdentityReport> {
    check_propagation(eta, radius, d)?;
    let lhs = hs_expectation(eta, a)?;
    let phi = compress(a, radius, d)?;
    let mut rhs = Complex64::new(0.0, 0.0);
    for y in 0..eta.dim() {
        let ball = phi.ball(y);
        let block = phi.block(y);
        let omega: Vec<Complex64> = ball.iter().map(|&x| eta.entry(x, y)).collect();
        for (i, wi) in omega.iter().enumerate() {
            for (j, wj) in omega.iter().enumerate() {
                rhs += wi.conj() * block[(i, j)] * wj;
            }
        }
    }
    Ok(CompressionIdentityReport {
        radius,
        lhs,
        rhs,
        residual: (lhs - rhs).norm(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GhostVanishingReport {
    /// Points `y` with `Φ_S(a)_y ≠ 0`.
    pub block_support: Vec<usize>,
    pub value: Complex64,
    pub exact_zero: bool,
}

/// For `η` with `prop(η) ≤ S` whose nonzero columns avoid the points where
/// `Φ_S(a)` is nonzero, evaluates `⟨η, aη⟩` directly and reports whether it
/// is exactly zero.
pub fn ghost_vanishing(
    eta: &HSMatrix,
    a: &PropOperator,
    radius: usize,
    d: &ExtendedMetric,
) -> Result<GhostVanishingReport> {
    check_propagation(eta, radius, d)?;
    let phi = compress(a, radius, d)?;
    let block_support = phi.nonzero_support();
    let zero = Complex64::new(0.0, 0.0);
    for &y in &block_support {
        if (0..eta.dim()).any(|x| eta.entry(x, y) != zero) {
            return Err(Error::InvalidParameter(format!(
                "column {y} of η meets the support of Φ_S(a)"
            )));
        }
    }
    let value = hs_expectation(eta, a)?;
    Ok(GhostVanishingReport {
        block_support,
        value,
        exact_zero: value == zero,
    })
}

/// Zeroes the entries of `m` at distance more than `S`.
pub fn truncate_to_propagation(
    m: &HSMatrix,
    radius: usize,
    d: &ExtendedMetric,
) -> Result<HSMatrix> {
    let n = m.dim();
    if d.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: d.len(),
        });
    }
    HSMatrix::new(nalgebra::DMatrix::from_fn(n, n, |x, y| {
        if d.get(x, y).within(radius) {
            m.entry(x, y)
        } else {
            Complex64::new(0.0, 0.0)
        }
    }))
}
