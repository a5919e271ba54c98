use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;

use super::operator::PropOperator;
use crate::error::{Error, Result};

/// Above this dimension the operator norm falls back to power iteration.
pub const DENSE_NORM_LIMIT: usize = 512;

const HERMITIAN_TOL: f64 = 1e-9;
const GAP_TOL: f64 = 1e-8;
const DEGENERATE_RESIDUAL_TOL: f64 = 1e-6;

/// Eigen-decomposition of a Hermitian matrix with eigenvalues sorted in
/// decreasing order; eigenvector `i` is column `i`.
pub fn hermitian_eigen(m: &DMatrix<Complex64>) -> (Vec<f64>, DMatrix<Complex64>) {
    let n = m.nrows();
    if n == 0 {
        return (Vec::new(), DMatrix::zeros(0, 0));
    }
    let eig = SymmetricEigen::new(m.clone());
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = DMatrix::from_fn(n, n, |r, c| eig.eigenvectors[(r, order[c])]);
    (values, vectors)
}

/// Largest singular value. Full SVD up to [`DENSE_NORM_LIMIT`], power
/// iteration on `a*a` from a fixed start vector above it.
pub fn operator_norm(a: &PropOperator) -> f64 {
    let n = a.dim();
    if n == 0 {
        return 0.0;
    }
    if n <= DENSE_NORM_LIMIT {
        let sv = a.matrix().singular_values();
        return sv.iter().fold(0.0, |acc: f64, &s| acc.max(s));
    }
    power_norm(a.matrix(), 1e-13, 20_000)
}

fn power_norm(m: &DMatrix<Complex64>, tol: f64, max_iter: usize) -> f64 {
    let n = m.nrows();
    // deterministic start with no special symmetry
    let mut v = DVector::from_fn(n, |i, _| {
        Complex64::new(1.0 + (i as f64 * 0.618_033_988_7).fract(), 0.0)
    });
    let norm = v.norm();
    if norm == 0.0 {
        return 0.0;
    }
    v /= Complex64::new(norm, 0.0);
    let adj = m.adjoint();
    let mut estimate = 0.0;
    for _ in 0..max_iter {
        let w = &adj * (m * &v);
        let wn = w.norm();
        if wn == 0.0 {
            return 0.0;
        }
        let next = wn.sqrt();
        v = w / Complex64::new(wn, 0.0);
        if (next - estimate).abs() <= tol * next.max(1.0) {
            return next;
        }
        estimate = next;
    }
    estimate
}

/// Result of [`nonneg_top_eigenvector`].
#[derive(Debug, Clone, PartialEq)]
pub struct TopEigenvector {
    /// Unit vector with nonnegative real entries.
    pub vector: Vec<f64>,
    pub eigenvalue: f64,
    /// Distance from the top eigenvalue to the next one (∞ in dimension 1).
    pub gap: f64,
    /// Diagonal unitary `u` such that `u t u*` has `vector` as top eigenvector.
    pub phases: Vec<Complex64>,
    /// `‖(u t u*) ξ - ξ‖₂`.
    pub residual: f64,
    /// `‖(u t u*) ξ - λ ξ‖₂`.
    pub eigen_residual: f64,
    pub degenerate: bool,
}

impl TopEigenvector {
    /// `u t u*` for the stored phases.
    pub fn conjugate(&self, t: &PropOperator) -> PropOperator {
        conjugate_by_phases(t, &self.phases)
    }
}

pub(crate) fn conjugate_by_phases(t: &PropOperator, phases: &[Complex64]) -> PropOperator {
    let n = t.dim();
    let m = DMatrix::from_fn(n, n, |i, j| phases[i] * t.entry(i, j) * phases[j].conj());
    PropOperator::from_matrix(m).expect("square")
}

fn residuals(t: &PropOperator, phases: &[Complex64], xi: &[f64], lambda: f64) -> (f64, f64) {
    let conj = conjugate_by_phases(t, phases);
    let v = DVector::from_iterator(xi.len(), xi.iter().map(|&x| Complex64::new(x, 0.0)));
    let tv = conj.matrix() * &v;
    let res = (&tv - &v).norm();
    let eig = (&tv - &v * Complex64::new(lambda, 0.0)).norm();
    (res, eig)
}

/// Top eigenvector of a positive semidefinite `t`, made entrywise
/// nonnegative by conjugating `t` with a diagonal unitary.
///
/// When the top eigenvalue is separated by less than `1e-8` the entrywise
/// modulus of an arbitrary top eigenvector is used instead (no conjugation);
/// if that fails to be an eigenvector within `1e-6` the call errors.
pub fn nonneg_top_eigenvector(t: &PropOperator) -> Result<TopEigenvector> {
    let n = t.dim();
    if n == 0 {
        return Err(Error::InvalidParameter("empty operator".into()));
    }
    let defect = t.hermitian_defect();
    if defect > HERMITIAN_TOL {
        return Err(Error::NotHermitian {
            index: 0,
            asymmetry: defect,
        });
    }
    let (values, vectors) = hermitian_eigen(t.matrix());
    let lambda = values[0];
    let gap = if n > 1 {
        values[0] - values[1]
    } else {
        f64::INFINITY
    };
    let top: Vec<Complex64> = (0..n).map(|i| vectors[(i, 0)]).collect();
    let xi: Vec<f64> = top.iter().map(|v| v.norm()).collect();

    if gap < GAP_TOL {
        let phases = vec![Complex64::new(1.0, 0.0); n];
        let (residual, eigen_residual) = residuals(t, &phases, &xi, lambda);
        if eigen_residual > DEGENERATE_RESIDUAL_TOL {
            return Err(Error::DegenerateEigenspace {
                gap,
                residual: eigen_residual,
            });
        }
        return Ok(TopEigenvector {
            vector: xi,
            eigenvalue: lambda,
            gap,
            phases,
            residual,
            eigen_residual,
            degenerate: true,
        });
    }

    // fix the global phase on the first entry of (near) maximal modulus
    let max = xi.iter().cloned().fold(0.0, f64::max);
    let pivot = xi.iter().position(|&m| m >= max - 1e-12).unwrap_or(0);
    let global = top[pivot] / top[pivot].norm();
    let phases: Vec<Complex64> = top
        .iter()
        .map(|&v| {
            let v = v * global.conj();
            if v.norm() > 1e-14 {
                (v / v.norm()).conj()
            } else {
                Complex64::new(1.0, 0.0)
            }
        })
        .collect();
    let (residual, eigen_residual) = residuals(t, &phases, &xi, lambda);
    Ok(TopEigenvector {
        vector: xi,
        eigenvalue: lambda,
        gap,
        phases,
        residual,
        eigen_residual,
        degenerate: false,
    })
}
