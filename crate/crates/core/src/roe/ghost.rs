use nalgebra::DMatrix;
use num_complex::Complex64;

use super::operator::PropOperator;
use super::spectral::{hermitian_eigen, operator_norm};
use crate::actions::BoxSpace;
use crate::coarse::{Dist, ExtendedMetric};
use crate::error::{Error, Result};

/// Absolute tolerance for "positive and of norm 1" block validation.
pub const BLOCK_NORM_TOL: f64 = 1e-9;

/// Decay of entry moduli along an exhaustion:
/// `g(k) = max {|a(x, y)| : x or y has exhaustion index ≥ k}`.
#[derive(Debug, Clone, PartialEq)]
pub struct GhostProfile {
    values: Vec<f64>,
}

impl GhostProfile {
    /// `g(0), …, g(n-1)`; `g(k) = 0` for `k ≥ n`.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn at(&self, k: usize) -> f64 {
        self.values.get(k).copied().unwrap_or(0.0)
    }

    /// `g(k) ≤ δ`.
    pub fn ghost_like(&self, delta: f64, k: usize) -> bool {
        self.at(k) <= delta
    }

    /// First index past which the profile stays at or below `δ`.
    pub fn threshold_index(&self, delta: f64) -> usize {
        (0..=self.values.len())
            .find(|&k| self.at(k) <= delta)
            .expect("g(n) = 0")
    }

    /// `k,value` rows with a header line.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("k,value\n");
        for (k, v) in self.values.iter().enumerate() {
            s.push_str(&format!("{k},{v}\n"));
        }
        s
    }
}

/// Profile for the exhaustion given as a vertex order (`order[i]` is the
/// `i`-th vertex). Vertices missing from `order` are appended in index order.
pub fn ghost_profile(a: &PropOperator, order: &[usize]) -> Result<GhostProfile> {
    let n = a.dim();
    let mut rank = vec![usize::MAX; n];
    let mut next = 0;
    for &v in order {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if rank[v] == usize::MAX {
            rank[v] = next;
            next += 1;
        }
    }
    for r in rank.iter_mut() {
        if *r == usize::MAX {
            *r = next;
            next += 1;
        }
    }
    // bucket each entry by the later of its two indices, then take suffix maxima
    let mut bucket = vec![0.0f64; n];
    for x in 0..n {
        for y in 0..n {
            let k = rank[x].max(rank[y]);
            bucket[k] = bucket[k].max(a.entry(x, y).norm());
        }
    }
    let mut values = vec![0.0; n];
    let mut running = 0.0f64;
    for k in (0..n).rev() {
        running = running.max(bucket[k]);
        values[k] = running;
    }
    Ok(GhostProfile { values })
}

/// Disjoint vertex blocks `V₁, …, V_k` with their pairwise distances.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseFamily {
    n: usize,
    blocks: Vec<Vec<usize>>,
    distances: Vec<Vec<Dist>>,
}

impl SparseFamily {
    pub fn new(blocks: Vec<Vec<usize>>, d: &ExtendedMetric) -> Result<Self> {
        let n = d.len();
        let mut owner: Vec<Option<usize>> = vec![None; n];
        for (i, b) in blocks.iter().enumerate() {
            for &v in b {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if let Some(first) = owner[v] {
                    return Err(Error::OverlappingBlocks {
                        first,
                        second: i,
                        vertex: v,
                    });
                }
                owner[v] = Some(i);
            }
        }
        let k = blocks.len();
        let mut distances = vec![vec![Dist::ZERO; k]; k];
        for i in 0..k {
            for j in 0..k {
                if i != j {
                    distances[i][j] = d.set_distance(&blocks[i], &blocks[j]);
                }
            }
        }
        Ok(SparseFamily {
            n,
            blocks,
            distances,
        })
    }

    pub fn from_box_space(b: &BoxSpace) -> Self {
        Self::new(b.blocks(), b.metric()).expect("box space components are disjoint")
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn distance(&self, i: usize, j: usize) -> Dist {
        self.distances[i][j]
    }

    /// Smallest distance between two different blocks (`∞` for < 2 blocks).
    pub fn min_separation(&self) -> Dist {
        let k = self.blocks.len();
        (0..k)
            .flat_map(|i| (0..k).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| self.distances[i][j])
            .min()
            .unwrap_or(Dist::Inf)
    }

    /// `dist(V_i, V_j) ≥ D` for all `i ≠ j`.
    pub fn is_sparse_at(&self, scale: u32) -> bool {
        self.min_separation() >= Dist::Finite(scale)
    }

    /// Vertex order listing the blocks in sequence, then uncovered points.
    pub fn exhaustion(&self) -> Vec<usize> {
        let mut order: Vec<usize> = self.blocks.iter().flatten().copied().collect();
        let mut seen = vec![false; self.n];
        for &v in &order {
            seen[v] = true;
        }
        order.extend((0..self.n).filter(|&v| !seen[v]));
        order
    }
}

/// Assembles `T = Σ_i P_{V_i}* T_i P_{V_i}` after checking that every block
/// is Hermitian, positive semidefinite and of operator norm 1.
pub fn sparse_diagonal(fam: &SparseFamily, blocks: &[PropOperator]) -> Result<PropOperator> {
    if blocks.len() != fam.blocks.len() {
        return Err(Error::DimensionMismatch {
            expected: fam.blocks.len(),
            actual: blocks.len(),
        });
    }
    let n = fam.n;
    let mut m = DMatrix::<Complex64>::zeros(n, n);
    for (index, (verts, t)) in fam.blocks.iter().zip(blocks).enumerate() {
        if t.dim() != verts.len() {
            return Err(Error::DimensionMismatch {
                expected: verts.len(),
                actual: t.dim(),
            });
        }
        validate_block(index, t)?;
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                m[(u, v)] = t.entry(i, j);
            }
        }
    }
    PropOperator::from_matrix(m)
}

fn validate_block(index: usize, t: &PropOperator) -> Result<()> {
    let asymmetry = t.hermitian_defect();
    if asymmetry > BLOCK_NORM_TOL {
        return Err(Error::NotHermitian { index, asymmetry });
    }
    let (values, _) = hermitian_eigen(t.matrix());
    let min_eigenvalue = values.last().copied().unwrap_or(0.0);
    if min_eigenvalue < -BLOCK_NORM_TOL {
        return Err(Error::NotPositive {
            index,
            min_eigenvalue,
        });
    }
    let norm = operator_norm(t);
    if (norm - 1.0).abs() > BLOCK_NORM_TOL {
        return Err(Error::BadNormalization { index, norm });
    }
    Ok(())
}

/// `⊕_n J_n / |V_n|` over the components of a box space.
pub fn block_constant_projection(b: &BoxSpace) -> PropOperator {
    let fam = SparseFamily::from_box_space(b);
    let blocks: Vec<PropOperator> = fam
        .blocks
        .iter()
        .map(|v| PropOperator::averaging(v.len()))
        .collect();
    sparse_diagonal(&fam, &blocks).expect("averaging projections are positive of norm 1")
}

/// Per-component report of [`block_constant_ghost`].
#[derive(Debug, Clone, PartialEq)]
pub struct ComponentBound {
    pub size: usize,
    pub degree: usize,
    /// Second-largest eigenvalue of the degree-normalised adjacency
    /// (`None` for a single vertex).
    pub lambda2: Option<f64>,
    /// `((1 + λ₂) / 2)^k`, the bound on `‖p_k(Ā) - J/|V|‖`.
    pub bound: f64,
}

/// Blockwise `p_k(Ā) = ((1 + Ā) / 2)^k` on a box space of regular
/// components, where `Ā` is the adjacency divided by the degree. On a
/// connected regular component `p_k(Ā) → J/|V|` with error
/// `((1 + λ₂)/2)^k`; the propagation is at most `k`.
///
/// An isolated vertex has `Ā = [1]`.
pub fn block_constant_ghost(b: &BoxSpace, k: u32) -> Result<(PropOperator, Vec<ComponentBound>)> {
    let n = b.len();
    let mut m = DMatrix::<Complex64>::zeros(n, n);
    let mut bounds = Vec::with_capacity(b.components().len());
    for (index, comp) in b.components().iter().enumerate() {
        let size = comp.len();
        let degrees: Vec<usize> = (0..size).map(|x| comp.degree(x)).collect();
        let (min, max) = (
            *degrees.iter().min().unwrap_or(&0),
            *degrees.iter().max().unwrap_or(&0),
        );
        if min != max {
            return Err(Error::NotRegular { index, min, max });
        }
        let degree = max;
        let normalized: DMatrix<Complex64> = if degree == 0 {
            DMatrix::identity(size, size)
        } else {
            PropOperator::adjacency(comp)
                .into_matrix()
                .map(|v| v / degree as f64)
        };
        let half = Complex64::new(0.5, 0.0);
        let step = (DMatrix::identity(size, size) + &normalized) * half;
        let mut poly = DMatrix::<Complex64>::identity(size, size);
        for _ in 0..k {
            poly = &poly * &step;
        }
        let (values, _) = hermitian_eigen(&normalized);
        let lambda2 = values.get(1).copied();
        let bound = match lambda2 {
            Some(l2) => ((1.0 + l2) / 2.0).max(0.0).powi(k as i32),
            None => 0.0,
        };
        let o = b.offset(index);
        for i in 0..size {
            for j in 0..size {
                m[(o + i, o + j)] = poly[(i, j)];
            }
        }
        bounds.push(ComponentBound {
            size,
            degree,
            lambda2,
            bound,
        });
    }
    Ok((PropOperator::from_matrix(m)?, bounds))
}
