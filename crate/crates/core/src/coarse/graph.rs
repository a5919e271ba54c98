use std::collections::{BTreeSet, VecDeque};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::entourage::Entourage;
use super::metric::{Dist, ExtendedMetric};
use crate::error::{Error, Result};

/// Wire format: `{"n": int, "edges": [[u, v], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

/// Finite undirected graph on `0..n`, possibly disconnected, self-loops
/// allowed. The graph metric is computed on first use and cached.
#[derive(Debug)]
pub struct UlfGraph {
    n: usize,
    // unordered edges stored as (min, max)
    edges: BTreeSet<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
    metric: OnceLock<ExtendedMetric>,
}

impl Clone for UlfGraph {
    fn clone(&self) -> Self {
        let metric = OnceLock::new();
        if let Some(m) = self.metric.get() {
            let _ = metric.set(m.clone());
        }
        UlfGraph {
            n: self.n,
            edges: self.edges.clone(),
            neighbors: self.neighbors.clone(),
            metric,
        }
    }
}

impl PartialEq for UlfGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for UlfGraph {}

impl UlfGraph {
    /// Builds a graph from unordered edges; duplicates and orientation are
    /// ignored.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            set.insert((u.min(v), u.max(v)));
        }
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in &set {
            neighbors[u].push(v);
            if u != v {
                neighbors[v].push(u);
            }
        }
        for row in &mut neighbors {
            row.sort_unstable();
        }
        Ok(UlfGraph {
            n,
            edges: set,
            neighbors,
            metric: OnceLock::new(),
        })
    }

    pub fn empty(n: usize) -> Self {
        Self::new(n, []).expect("edgeless graph is always valid")
    }

    /// Cycle `C_n` (for `n ≥ 3`; `n = 1, 2` give a loop and a single edge).
    pub fn cycle(n: usize) -> Self {
        let edges = (0..n).map(|i| (i, (i + 1) % n));
        Self::new(n, edges).expect("cycle edges in range")
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("path edges in range")
    }

    /// Complete graph `K_n` without loops.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        Self::new(n, edges).expect("complete graph edges in range")
    }

    /// Undirected graph whose edge set is the symmetrization of `e`.
    pub fn from_entourage(e: &Entourage) -> Self {
        Self::new(e.ground_size(), e.pairs().iter().copied()).expect("entourage pairs in range")
    }

    pub fn from_json(j: &GraphJson) -> Result<Self> {
        Self::new(j.n, j.edges.iter().map(|&[u, v]| (u, v)))
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n,
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Sorted neighbours of `x`; `x` itself appears when it carries a loop.
    pub fn neighbors(&self, x: usize) -> &[usize] {
        &self.neighbors[x]
    }

    /// `|{y : (x, y) ∈ E}|`, a self-loop counted once.
    pub fn degree(&self, x: usize) -> usize {
        self.neighbors[x].len()
    }

    pub fn max_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// The edge relation as a symmetric entourage (ordered pairs both ways).
    pub fn edge_entourage(&self) -> Entourage {
        let pairs = self.edges.iter().flat_map(|&(u, v)| [(u, v), (v, u)]);
        Entourage::new(self.n, pairs).expect("edges in range")
    }

    pub fn metric(&self) -> &ExtendedMetric {
        self.metric.get_or_init(|| compute_metric(self))
    }

    pub fn distance(&self, x: usize, y: usize) -> Dist {
        self.metric().get(x, y)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.metric().row(0).iter().all(|d| d.is_finite())
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([s]);
            seen[s] = true;
            while let Some(x) = queue.pop_front() {
                comp.push(x);
                for &y in &self.neighbors[x] {
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Breadth-first distances from `source`.
    pub fn bfs(&self, source: usize) -> Vec<Dist> {
        let mut dist = vec![Dist::Inf; self.n];
        dist[source] = Dist::ZERO;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            let Dist::Finite(dx) = dist[x] else {
                unreachable!()
            };
            for &y in &self.neighbors[x] {
                if dist[y] == Dist::Inf {
                    dist[y] = Dist::Finite(dx + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Disjoint union; vertices of `other` are shifted by `self.len()`.
    pub fn disjoint_union(&self, other: &UlfGraph) -> UlfGraph {
        let shift = self.n;
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)));
        UlfGraph::new(self.n + other.n, edges).expect("shifted edges in range")
    }
}

fn compute_metric(g: &UlfGraph) -> ExtendedMetric {
    let table = (0..g.n).flat_map(|s| g.bfs(s)).collect();
    ExtendedMetric::from_table(g.n, table)
}

/// All-pairs graph distances, `∞` across components.
pub fn graph_metric(g: &UlfGraph) -> ExtendedMetric {
    g.metric().clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_distance() {
        let g = UlfGraph::path(3);
        assert_eq!(graph_metric(&g).get(0, 2), Dist::Finite(2));
    }

    #[test]
    fn isolated_vertices_are_infinitely_far() {
        let g = UlfGraph::empty(2);
        assert_eq!(graph_metric(&g).get(0, 1), Dist::Inf);
        assert!(!g.is_connected());
    }

    #[test]
    fn cycle_distance_matches_bfs() {
        let g = UlfGraph::cycle(5);
        let m = graph_metric(&g);
        assert_eq!(m.get(0, 3), Dist::Finite(2));
        // every vertex is at distance ≤ 2 in C5
        for x in 0..5 {
            for y in 0..5 {
                let expect = (x as i64 - y as i64)
                    .rem_euclid(5)
                    .min((y as i64 - x as i64).rem_euclid(5));
                assert_eq!(m.get(x, y), Dist::Finite(expect as u32));
            }
        }
        m.check_axioms().unwrap();
    }

    #[test]
    fn empty_graph_has_empty_table() {
        let g = UlfGraph::empty(0);
        assert!(graph_metric(&g).is_empty());
        assert_eq!(g.max_degree(), 0);
    }

    #[test]
    fn self_loops_count_once() {
        let g = UlfGraph::new(2, [(0, 0), (0, 1), (0, 0)]).unwrap();
        assert_eq!(g.degree(0), 2);
        assert_eq!(g.degree(1), 1);
        assert_eq!(g.distance(0, 0), Dist::ZERO);
        assert_eq!(g.distance(0, 1), Dist::Finite(1));
    }

    #[test]
    fn rejects_out_of_range_edges() {
        assert_eq!(
            UlfGraph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn json_round_trip() {
        let g = UlfGraph::cycle(4);
        let s = serde_json::to_string(&g.to_json()).unwrap();
        assert_eq!(s, r#"{"n":4,"edges":[[0,1],[0,3],[1,2],[2,3]]}"#);
        let back = UlfGraph::from_json(&serde_json::from_str(&s).unwrap()).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn components_are_listed_by_smallest_vertex() {
        let g = UlfGraph::new(5, [(3, 4), (0, 2)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 2], vec![1], vec![3, 4]]);
    }
}
