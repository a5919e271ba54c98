use super::measure::NORMALIZATION_TOL;
use crate::coarse::ExtendedMetric;
use crate::error::{Error, Result};

/// Family of probability measures `ξ_x`, each supported in `Ball(x, S)`.
/// Measures are stored sparsely as `(vertex, weight)` sorted by vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    radius: usize,
    measures: Vec<Vec<(usize, f64)>>,
}

impl Witness {
    pub fn new(
        radius: usize,
        measures: Vec<Vec<(usize, f64)>>,
        d: &ExtendedMetric,
    ) -> Result<Self> {
        let n = d.len();
        if measures.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: measures.len(),
            });
        }
        let mut out = Vec::with_capacity(n);
        for (x, mut m) in measures.into_iter().enumerate() {
            m.retain(|&(_, w)| w != 0.0);
            m.sort_by_key(|&(v, _)| v);
            let mut total = 0.0;
            for (i, &(v, w)) in m.iter().enumerate() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if i > 0 && m[i - 1].0 == v {
                    return Err(Error::InvalidMeasure {
                        reason: format!("ξ_{x} lists vertex {v} twice"),
                    });
                }
                if !(w > 0.0) {
                    return Err(Error::InvalidMeasure {
                        reason: format!("ξ_{x}({v}) = {w}"),
                    });
                }
                if !d.get(x, v).within(radius) {
                    return Err(Error::InvalidMeasure {
                        reason: format!("ξ_{x} charges {v} outside Ball({x}, {radius})"),
                    });
                }
                total += w;
            }
            if (total - 1.0).abs() > NORMALIZATION_TOL {
                return Err(Error::InvalidMeasure {
                    reason: format!("ξ_{x} has mass {total}"),
                });
            }
            out.push(m);
        }
        Ok(Witness {
            radius,
            measures: out,
        })
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.measures.len()
    }

    pub fn is_empty(&self) -> bool {
        self.measures.is_empty()
    }

    pub fn measure(&self, x: usize) -> &[(usize, f64)] {
        &self.measures[x]
    }

    /// `x,support,weight` rows with a header line.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("x,support,weight\n");
        for (x, m) in self.measures.iter().enumerate() {
            for &(v, w) in m {
                s.push_str(&format!("{x},{v},{w}\n"));
            }
        }
        s
    }
}

/// `ξ_x` uniform on `Ball(x, S)`.
pub fn ball_average_witness(d: &ExtendedMetric, radius: usize) -> Witness {
    let measures = (0..d.len())
        .map(|x| {
            let ball = d.ball(x, radius);
            let w = 1.0 / ball.len() as f64;
            ball.into_iter().map(|v| (v, w)).collect()
        })
        .collect();
    Witness { radius, measures }
}

fn sparse_l1(a: &[(usize, f64)], b: &[(usize, f64)]) -> f64 {
    let (mut i, mut j) = (0, 0);
    let mut total = 0.0;
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some(&(u, wu)), Some(&(v, wv))) if u == v => {
                total += (wu - wv).abs();
                i += 1;
                j += 1;
            }
            (Some(&(u, wu)), Some(&(v, _))) if u < v => {
                total += wu;
                i += 1;
            }
            (Some(_), Some(&(_, wv))) => {
                total += wv;
                j += 1;
            }
            (Some(&(_, wu)), None) => {
                total += wu;
                i += 1;
            }
            (None, Some(&(_, wv))) => {
                total += wv;
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    total
}

/// `max {‖ξ_x - ξ_y‖₁ : d(x, y) ≤ R, x ≠ y}`, zero when no pair qualifies.
pub fn witness_quality(w: &Witness, scale: usize, d: &ExtendedMetric) -> Result<f64> {
    let all: Vec<usize> = (0..d.len()).collect();
    witness_quality_on(w, scale, d, &all)
}

/// Like [`witness_quality`], restricted to pairs with `x` in `points`.
pub fn witness_quality_on(
    w: &Witness,
    scale: usize,
    d: &ExtendedMetric,
    points: &[usize],
) -> Result<f64> {
    if w.len() != d.len() {
        return Err(Error::DimensionMismatch {
            expected: d.len(),
            actual: w.len(),
        });
    }
    let mut worst: f64 = 0.0;
    for &x in points {
        for y in d.ball(x, scale) {
            if y != x {
                worst = worst.max(sparse_l1(&w.measures[x], &w.measures[y]));
            }
        }
    }
    Ok(worst)
}
