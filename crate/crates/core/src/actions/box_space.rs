use serde::{Deserialize, Serialize};

use crate::coarse::{Dist, ExtendedMetric, GraphJson, UlfGraph};
use crate::error::{Error, Result};

/// Wire format: components plus basepoints. The ambient metric is
/// recomputed on load.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxSpaceJson {
    pub components: Vec<GraphJson>,
    pub basepoints: Vec<usize>,
}

/// Disjoint union `V₁ ⊔ V₂ ⊔ …` of finite connected graphs with an ambient
/// metric in which the components drift apart.
///
/// With basepoint `b_n = 0` and separation `f(n) = n + diam(V_n)`
/// (components numbered from 1), points in different components are at
/// distance `d_n(x, b_n) + f(n) + f(m) + d_m(b_m, y)`. Routing every cross
/// distance through the basepoints keeps the triangle inequality, and
/// `dist(V_n, V_m) ≥ f(n) + f(m) → ∞`.
#[derive(Debug, Clone)]
pub struct BoxSpace {
    components: Vec<UlfGraph>,
    basepoints: Vec<usize>,
    offsets: Vec<usize>,
    separation: Vec<u32>,
    metric: ExtendedMetric,
}

impl BoxSpace {
    pub fn new(components: Vec<UlfGraph>) -> Result<Self> {
        for (i, c) in components.iter().enumerate() {
            if c.is_empty() || !c.is_connected() {
                return Err(Error::DisconnectedComponent { index: i });
            }
        }
        let basepoints = vec![0; components.len()];
        Ok(Self::assemble(components, basepoints))
    }

    fn assemble(components: Vec<UlfGraph>, basepoints: Vec<usize>) -> Self {
        let mut offsets = Vec::with_capacity(components.len() + 1);
        let mut total = 0;
        for c in &components {
            offsets.push(total);
            total += c.len();
        }
        offsets.push(total);
        let separation: Vec<u32> = components
            .iter()
            .enumerate()
            .map(|(i, c)| (i as u32 + 1) + c.metric().finite_diameter())
            .collect();

        let mut table = vec![Dist::Inf; total * total];
        for (i, ci) in components.iter().enumerate() {
            let mi = ci.metric();
            let bi = basepoints[i];
            for (j, cj) in components.iter().enumerate() {
                let mj = cj.metric();
                let bj = basepoints[j];
                for x in 0..ci.len() {
                    let row = (offsets[i] + x) * total;
                    for y in 0..cj.len() {
                        table[row + offsets[j] + y] = if i == j {
                            mi.get(x, y)
                        } else {
                            mi.get(x, bi)
                                + Dist::Finite(separation[i] + separation[j])
                                + mj.get(bj, y)
                        };
                    }
                }
            }
        }
        BoxSpace {
            components,
            basepoints,
            offsets,
            separation,
            metric: ExtendedMetric::from_table(total, table),
        }
    }

    pub fn from_json(j: &BoxSpaceJson) -> Result<Self> {
        if j.basepoints.len() != j.components.len() {
            return Err(Error::DimensionMismatch {
                expected: j.components.len(),
                actual: j.basepoints.len(),
            });
        }
        let comps = j
            .components
            .iter()
            .map(UlfGraph::from_json)
            .collect::<Result<Vec<_>>>()?;
        for (i, c) in comps.iter().enumerate() {
            if c.is_empty() || !c.is_connected() {
                return Err(Error::DisconnectedComponent { index: i });
            }
            if j.basepoints[i] >= c.len() {
                return Err(Error::VertexOutOfRange {
                    vertex: j.basepoints[i],
                    n: c.len(),
                });
            }
        }
        Ok(Self::assemble(comps, j.basepoints.clone()))
    }

    pub fn to_json(&self) -> BoxSpaceJson {
        BoxSpaceJson {
            components: self.components.iter().map(UlfGraph::to_json).collect(),
            basepoints: self.basepoints.clone(),
        }
    }

    pub fn components(&self) -> &[UlfGraph] {
        &self.components
    }

    pub fn basepoints(&self) -> &[usize] {
        &self.basepoints
    }

    /// Total number of points.
    pub fn len(&self) -> usize {
        *self.offsets.last().unwrap_or(&0)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn metric(&self) -> &ExtendedMetric {
        &self.metric
    }

    /// `f(n)` for the component at zero-based position `index`.
    pub fn separation(&self, index: usize) -> u32 {
        self.separation[index]
    }

    /// Ambient vertex ids of each component, in component order.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        (0..self.components.len())
            .map(|i| (self.offsets[i]..self.offsets[i + 1]).collect())
            .collect()
    }

    pub fn offset(&self, index: usize) -> usize {
        self.offsets[index]
    }

    /// Component index and local vertex of an ambient vertex.
    pub fn locate(&self, v: usize) -> (usize, usize) {
        let i = self.offsets.partition_point(|&o| o <= v) - 1;
        (i, v - self.offsets[i])
    }

    /// Disjoint union of the components as one graph (no cross edges).
    pub fn union_graph(&self) -> UlfGraph {
        let edges = self.components.iter().enumerate().flat_map(|(i, c)| {
            let o = self.offsets[i];
            c.edges().map(move |(u, v)| (u + o, v + o))
        });
        UlfGraph::new(self.len(), edges).expect("shifted edges in range")
    }
}

/// Box space over the given components with basepoint 0 in each.
pub fn box_space(components: Vec<UlfGraph>) -> Result<BoxSpace> {
    BoxSpace::new(components)
}
