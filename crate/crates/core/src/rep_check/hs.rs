use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::coarse::{Dist, ExtendedMetric};
use crate::error::{Error, Result};
use crate::roe::{propagation, PropOperator};

/// Matrix on `X × X` seen as a vector of the Hilbert-Schmidt space,
/// `⟨A, B⟩ = Σ conj(A(x, y)) B(x, y)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HSMatrix {
    m: DMatrix<Complex64>,
}

impl HSMatrix {
    pub fn new(m: DMatrix<Complex64>) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(Error::DimensionMismatch {
                expected: m.nrows(),
                actual: m.ncols(),
            });
        }
        Ok(HSMatrix { m })
    }

    pub fn from_real(m: &DMatrix<f64>) -> Result<Self> {
        Self::new(m.map(|v| Complex64::new(v, 0.0)))
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.m
    }

    pub fn entry(&self, x: usize, y: usize) -> Complex64 {
        self.m[(x, y)]
    }

    pub fn inner(&self, other: &HSMatrix) -> Result<Complex64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: other.dim(),
            });
        }
        Ok(self
            .m
            .iter()
            .zip(other.m.iter())
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    pub fn norm(&self) -> f64 {
        self.m.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Propagation of the support pattern with respect to `d`.
    pub fn propagation(&self, d: &ExtendedMetric) -> Result<Dist> {
        propagation(&PropOperator::from_matrix(self.m.clone())?, d)
    }

    /// The matrix as an operator on `ℓ₂X`.
    pub fn as_operator(&self) -> PropOperator {
        PropOperator::from_matrix(self.m.clone()).expect("square")
    }
}

/// Matrix whose `(x, y)` entry is a vector in an auxiliary space `K = ℂᵏ`.
#[derive(Debug, Clone, PartialEq)]
pub struct VecValuedMatrix {
    n: usize,
    k: usize,
    data: Vec<Complex64>,
}

impl VecValuedMatrix {
    /// `data` is laid out cell by cell in row-major order, `k` values per cell.
    pub fn new(n: usize, k: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != n * n * k {
            return Err(Error::DimensionMismatch {
                expected: n * n * k,
                actual: data.len(),
            });
        }
        Ok(VecValuedMatrix { n, k, data })
    }

    pub fn zeros(n: usize, k: usize) -> Self {
        VecValuedMatrix {
            n,
            k,
            data: vec![Complex64::new(0.0, 0.0); n * n * k],
        }
    }

    pub fn from_fn(
        n: usize,
        k: usize,
        mut f: impl FnMut(usize, usize, usize) -> Complex64,
    ) -> Self {
        let mut data = Vec::with_capacity(n * n * k);
        for x in 0..n {
            for y in 0..n {
                for c in 0..k {
                    data.push(f(x, y, c));
                }
            }
        }
        VecValuedMatrix { n, k, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn aux_dim(&self) -> usize {
        self.k
    }

    pub fn cell(&self, x: usize, y: usize) -> &[Complex64] {
        let start = (x * self.n + y) * self.k;
        &self.data[start..start + self.k]
    }

    pub fn cell_mut(&mut self, x: usize, y: usize) -> &mut [Complex64] {
        let start = (x * self.n + y) * self.k;
        &mut self.data[start..start + self.k]
    }

    /// `(Σ_{x,y} ‖ζ(x, y)‖²_K)^{1/2}`.
    pub fn norm(&self) -> f64 {
        self.data.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn scale(&mut self, s: f64) {
        for v in &mut self.data {
            *v *= s;
        }
    }

    pub fn inner(&self, other: &VecValuedMatrix) -> Result<Complex64> {
        if self.n != other.n || self.k != other.k {
            return Err(Error::DimensionMismatch {
                expected: self.data.len(),
                actual: other.data.len(),
            });
        }
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Largest `d(x, y)` over cells with a nonzero vector.
    pub fn propagation(&self, d: &ExtendedMetric) -> Result<Dist> {
        if d.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                actual: d.len(),
            });
        }
        let mut p = Dist::ZERO;
        for x in 0..self.n {
            for y in 0..self.n {
                if self
                    .cell(x, y)
                    .iter()
                    .any(|v| *v != Complex64::new(0.0, 0.0))
                {
                    p = p.max(d.get(x, y));
                }
            }
        }
        Ok(p)
    }
}

/// `π'(a ⊗ b) Ω = a Ω b`.
pub fn left_right_apply(a: &PropOperator, b: &PropOperator, omega: &HSMatrix) -> Result<HSMatrix> {
    let n = omega.dim();
    for dim in [a.dim(), b.dim()] {
        if dim != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: dim,
            });
        }
    }
    HSMatrix::new(a.matrix() * omega.matrix() * b.matrix())
}

/// `diag(ξ)`.
pub fn diag_embed(xi: &[Complex64]) -> HSMatrix {
    let n = xi.len();
    let mut m = DMatrix::zeros(n, n);
    for (i, &v) in xi.iter().enumerate() {
        m[(i, i)] = v;
    }
    HSMatrix { m }
}

pub fn diag_embed_real(xi: &[f64]) -> HSMatrix {
    let v: Vec<Complex64> = xi.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    diag_embed(&v)
}

/// `η(x, y) = ‖ζ(x, y)‖_K`.
pub fn norm_reduction(zeta: &VecValuedMatrix) -> HSMatrix {
    let n = zeta.n;
    let m = DMatrix::from_fn(n, n, |x, y| {
        let s: f64 = zeta.cell(x, y).iter().map(|v| v.norm_sqr()).sum();
        Complex64::new(s.sqrt(), 0.0)
    });
    HSMatrix { m }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coarse::UlfGraph;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn identity_sandwich_is_noop() {
        let omega = HSMatrix::new(DMatrix::from_fn(3, 3, |i, j| c(i as f64, j as f64))).unwrap();
        let id = PropOperator::identity(3);
        assert_eq!(left_right_apply(&id, &id, &omega).unwrap(), omega);
    }

    #[test]
    fn diagonal_left_scales_rows() {
        let omega =
            HSMatrix::new(DMatrix::from_fn(2, 2, |i, j| c(1.0 + i as f64, j as f64))).unwrap();
        let f = PropOperator::real_diagonal(&[2.0, -1.0]);
        let out = left_right_apply(&f, &PropOperator::identity(2), &omega).unwrap();
        for j in 0..2 {
            assert_eq!(out.entry(0, j), omega.entry(0, j) * 2.0);
            assert_eq!(out.entry(1, j), -omega.entry(1, j));
        }
    }

    #[test]
    fn diag_embed_examples() {
        let e = diag_embed_real(&[0.0, 1.0, 0.0]);
        assert_eq!(e.entry(1, 1), c(1.0, 0.0));
        assert_eq!(e.norm(), 1.0);
        let u = diag_embed_real(&[0.5; 4]);
        assert!((u.norm() - 1.0).abs() < 1e-15);
        let g = UlfGraph::cycle(4);
        assert_eq!(u.propagation(g.metric()).unwrap(), Dist::ZERO);
    }

    #[test]
    fn norm_reduction_scalar_case_is_abs() {
        let z = VecValuedMatrix::from_fn(2, 1, |x, y, _| c(x as f64 - 1.0, y as f64));
        let eta = norm_reduction(&z);
        for x in 0..2 {
            for y in 0..2 {
                assert_eq!(eta.entry(x, y).re, z.cell(x, y)[0].norm());
            }
        }
    }

    #[test]
    fn norm_reduction_orthonormal_cells() {
        let mut z = VecValuedMatrix::zeros(3, 3);
        z.cell_mut(0, 1)[0] = c(1.0, 0.0);
        z.cell_mut(1, 2)[1] = c(0.0, 1.0);
        z.cell_mut(2, 2)[2] = c(-1.0, 0.0);
        let eta = norm_reduction(&z);
        let ones: Vec<_> = (0..3)
            .flat_map(|x| (0..3).map(move |y| (x, y)))
            .filter(|&(x, y)| eta.entry(x, y) == c(1.0, 0.0))
            .collect();
        assert_eq!(ones, vec![(0, 1), (1, 2), (2, 2)]);
        assert!((eta.norm() - z.norm()).abs() < 1e-15);
    }

    #[test]
    fn shape_errors() {
        assert!(VecValuedMatrix::new(2, 2, vec![c(0.0, 0.0); 7]).is_err());
        let omega = HSMatrix::new(DMatrix::zeros(2, 2)).unwrap();
        assert!(left_right_apply(
            &PropOperator::identity(3),
            &PropOperator::identity(2),
            &omega
        )
        .is_err());
    }
}
