use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Allowed deviation of the total mass from 1.
pub const NORMALIZATION_TOL: f64 = 1e-12;

/// Probability measure on `0..n`, stored densely.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MeasureJson", into = "MeasureJson")]
pub struct ProbMeasure {
    weights: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct MeasureJson {
    weights: Vec<f64>,
}

impl TryFrom<MeasureJson> for ProbMeasure {
    type Error = Error;

    fn try_from(j: MeasureJson) -> Result<Self> {
        ProbMeasure::new(j.weights)
    }
}

impl From<ProbMeasure> for MeasureJson {
    fn from(m: ProbMeasure) -> Self {
        MeasureJson { weights: m.weights }
    }
}

impl ProbMeasure {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if let Some(x) = weights.iter().position(|w| !(*w >= 0.0) || !w.is_finite()) {
            return Err(Error::InvalidMeasure {
                reason: format!("weight at {x} is {}", weights[x]),
            });
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > NORMALIZATION_TOL {
            return Err(Error::InvalidMeasure {
                reason: format!("total mass {total} ≠ 1"),
            });
        }
        Ok(ProbMeasure { weights })
    }

    /// Divides nonnegative weights by their sum.
    pub fn normalized(weights: Vec<f64>) -> Result<Self> {
        let total: f64 = weights.iter().sum();
        if !(total > 0.0) || !total.is_finite() {
            return Err(Error::InvalidMeasure {
                reason: format!("cannot normalise total mass {total}"),
            });
        }
        Self::new(weights.into_iter().map(|w| w / total).collect())
    }

    pub fn dirac(n: usize, x: usize) -> Self {
        let mut w = vec![0.0; n];
        w[x] = 1.0;
        ProbMeasure { weights: w }
    }

    /// Uniform on the given (distinct) points.
    pub fn uniform_on(n: usize, points: &[usize]) -> Result<Self> {
        let mut w = vec![0.0; n];
        for &p in points {
            if p >= n {
                return Err(Error::VertexOutOfRange { vertex: p, n });
            }
            w[p] = 1.0;
        }
        Self::normalized(w)
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn get(&self, x: usize) -> f64 {
        self.weights[x]
    }

    /// `{x : weight(x) > 0}`.
    pub fn support(&self) -> Vec<usize> {
        (0..self.weights.len())
            .filter(|&x| self.weights[x] > 0.0)
            .collect()
    }

    pub fn l1_distance(&self, other: &ProbMeasure) -> f64 {
        self.weights
            .iter()
            .zip(&other.weights)
            .map(|(a, b)| (a - b).abs())
            .sum()
    }
}
