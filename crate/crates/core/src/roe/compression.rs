use nalgebra::DMatrix;
use num_complex::Complex64;

use super::operator::PropOperator;
use crate::coarse::ExtendedMetric;
use crate::error::Result;

/// `Φ_S(a) = (P_{Ball(x,S)} a P*_{Ball(x,S)})_x`: one small block per point.
#[derive(Debug, Clone, PartialEq)]
pub struct BallCompression {
    radius: usize,
    balls: Vec<Vec<usize>>,
    blocks: Vec<DMatrix<Complex64>>,
}

impl BallCompression {
    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Sorted vertices of `Ball(x, S)`; block rows and columns follow this order.
    pub fn ball(&self, x: usize) -> &[usize] {
        &self.balls[x]
    }

    pub fn block(&self, x: usize) -> &DMatrix<Complex64> {
        &self.blocks[x]
    }

    /// Points whose block has a nonzero entry.
    pub fn nonzero_support(&self) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&x| {
                self.blocks[x]
                    .iter()
                    .any(|v| *v != Complex64::new(0.0, 0.0))
            })
            .collect()
    }

    /// `P*_{Ball(x,S)} Φ_S(a)_x P_{Ball(x,S)}` as an `n × n` matrix.
    pub fn embed(&self, x: usize) -> DMatrix<Complex64> {
        let n = self.blocks.len();
        let ball = &self.balls[x];
        let mut m = DMatrix::zeros(n, n);
        for (i, &u) in ball.iter().enumerate() {
            for (j, &v) in ball.iter().enumerate() {
                m[(u, v)] = self.blocks[x][(i, j)];
            }
        }
        m
    }
}

pub fn compress(a: &PropOperator, radius: usize, d: &ExtendedMetric) -> Result<BallCompression> {
    a.check_dim(d.len())?;
    let n = a.dim();
    let balls: Vec<Vec<usize>> = (0..n).map(|x| d.ball(x, radius)).collect();
    let blocks = balls
        .iter()
        .map(|ball| DMatrix::from_fn(ball.len(), ball.len(), |i, j| a.entry(ball[i], ball[j])))
        .collect();
    Ok(BallCompression {
        radius,
        balls,
        blocks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coarse::UlfGraph;

    #[test]
    fn radius_zero_gives_diagonal_entries() {
        let g = UlfGraph::cycle(4);
        let a = PropOperator::adjacency(&g)
            .mul(&PropOperator::adjacency(&g))
            .unwrap();
        let c = compress(&a, 0, g.metric()).unwrap();
        for x in 0..4 {
            assert_eq!(c.ball(x), &[x]);
            assert_eq!(c.block(x)[(0, 0)], a.entry(x, x));
        }
    }

    #[test]
    fn identity_blocks_are_identities() {
        let g = UlfGraph::path(5);
        let c = compress(&PropOperator::identity(5), 1, g.metric()).unwrap();
        for x in 0..5 {
            let k = c.ball(x).len();
            assert_eq!(*c.block(x), DMatrix::identity(k, k));
        }
    }

    #[test]
    fn c8_adjacency_blocks_are_path_adjacency() {
        let g = UlfGraph::cycle(8);
        let a = PropOperator::adjacency(&g);
        let c = compress(&a, 1, g.metric()).unwrap();
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        for x in 0..8 {
            // ball {x-1, x, x+1}; compare the restriction against the 3-path
            // with x in the middle, modulo the sorted order of the ball.
            let ball = c.ball(x);
            assert_eq!(ball.len(), 3);
            let b = c.block(x);
            let mut ones = 0;
            for i in 0..3 {
                for j in 0..3 {
                    let adjacent = g.has_edge(ball[i], ball[j]) && i != j;
                    assert_eq!(b[(i, j)], if adjacent { one } else { zero });
                    ones += adjacent as usize;
                }
            }
            assert_eq!(ones, 4);
        }
    }
}
