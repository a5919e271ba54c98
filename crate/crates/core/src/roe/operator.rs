use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::coarse::{Dist, ExtendedMetric, UlfGraph};
use crate::error::{Error, Result};

/// Wire format: `{"n": int, "triplets": [[i, j, re, im], ...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SparseOperatorJson {
    pub n: usize,
    pub triplets: Vec<(usize, usize, f64, f64)>,
}

/// Complex matrix indexed by `X × X`.
#[derive(Debug, Clone, PartialEq)]
pub struct PropOperator {
    m: DMatrix<Complex64>,
}

impl PropOperator {
    pub fn from_matrix(m: DMatrix<Complex64>) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(Error::DimensionMismatch {
                expected: m.nrows(),
                actual: m.ncols(),
            });
        }
        Ok(PropOperator { m })
    }

    pub fn from_real(m: &DMatrix<f64>) -> Result<Self> {
        Self::from_matrix(m.map(|v| Complex64::new(v, 0.0)))
    }

    pub fn zeros(n: usize) -> Self {
        PropOperator {
            m: DMatrix::zeros(n, n),
        }
    }

    pub fn identity(n: usize) -> Self {
        PropOperator {
            m: DMatrix::identity(n, n),
        }
    }

    pub fn diagonal(values: &[Complex64]) -> Self {
        PropOperator {
            m: DMatrix::from_diagonal(&nalgebra::DVector::from_column_slice(values)),
        }
    }

    pub fn real_diagonal(values: &[f64]) -> Self {
        let v: Vec<Complex64> = values.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::diagonal(&v)
    }

    /// Adjacency matrix; a loop contributes a single 1 on the diagonal.
    pub fn adjacency(g: &UlfGraph) -> Self {
        let n = g.len();
        let mut m = DMatrix::zeros(n, n);
        for (u, v) in g.edges() {
            m[(u, v)] = Complex64::new(1.0, 0.0);
            m[(v, u)] = Complex64::new(1.0, 0.0);
        }
        PropOperator { m }
    }

    /// `J / n`: the orthogonal projection onto constants.
    pub fn averaging(n: usize) -> Self {
        let v = Complex64::new(1.0 / n as f64, 0.0);
        PropOperator {
            m: DMatrix::from_element(n, n, v),
        }
    }

    pub fn from_triplets(n: usize, triplets: &[(usize, usize, Complex64)]) -> Result<Self> {
        let mut m = DMatrix::zeros(n, n);
        for &(i, j, v) in triplets {
            for k in [i, j] {
                if k >= n {
                    return Err(Error::VertexOutOfRange { vertex: k, n });
                }
            }
            m[(i, j)] += v;
        }
        Ok(PropOperator { m })
    }

    pub fn from_json(j: &SparseOperatorJson) -> Result<Self> {
        let t: Vec<_> = j
            .triplets
            .iter()
            .map(|&(i, k, re, im)| (i, k, Complex64::new(re, im)))
            .collect();
        Self::from_triplets(j.n, &t)
    }

    /// Nonzero entries in row-major order.
    pub fn to_json(&self) -> SparseOperatorJson {
        let n = self.dim();
        let mut triplets = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let v = self.m[(i, j)];
                if v != Complex64::new(0.0, 0.0) {
                    triplets.push((i, j, v.re, v.im));
                }
            }
        }
        SparseOperatorJson { n, triplets }
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.m
    }

    pub fn into_matrix(self) -> DMatrix<Complex64> {
        self.m
    }

    #[inline]
    pub fn entry(&self, x: usize, y: usize) -> Complex64 {
        self.m[(x, y)]
    }

    pub fn adjoint(&self) -> PropOperator {
        PropOperator {
            m: self.m.adjoint(),
        }
    }

    pub fn mul(&self, other: &PropOperator) -> Result<PropOperator> {
        self.check_dim(other.dim())?;
        Ok(PropOperator {
            m: &self.m * &other.m,
        })
    }

    pub fn sub(&self, other: &PropOperator) -> Result<PropOperator> {
        self.check_dim(other.dim())?;
        Ok(PropOperator {
            m: &self.m - &other.m,
        })
    }

    pub fn scale(&self, s: f64) -> PropOperator {
        PropOperator {
            m: &self.m * Complex64::new(s, 0.0),
        }
    }

    pub(crate) fn check_dim(&self, n: usize) -> Result<()> {
        if self.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: n,
            });
        }
        Ok(())
    }

    /// Largest `|a(x, y) - conj(a(y, x))|`.
    pub fn hermitian_defect(&self) -> f64 {
        let n = self.dim();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                worst = worst.max((self.m[(i, j)] - self.m[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.m.iter().fold(0.0, |acc, v| acc.max(v.norm()))
    }
}

/// Least `R` such that every nonzero entry `a(x, y)` has `d(x, y) ≤ R`.
/// Zero for the zero matrix, `∞` when a nonzero entry joins points at
/// infinite distance.
pub fn propagation(a: &PropOperator, d: &ExtendedMetric) -> Result<Dist> {
    a.check_dim(d.len())?;
    let n = a.dim();
    let mut prop = Dist::ZERO;
    for x in 0..n {
        for y in 0..n {
            if a.m[(x, y)] != Complex64::new(0.0, 0.0) {
                prop = prop.max(d.get(x, y));
            }
        }
    }
    Ok(prop)
}
