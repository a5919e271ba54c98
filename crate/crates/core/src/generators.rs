//! Seeded random instances. Every generator takes an explicit RNG; build
//! one from a seed with [`seeded`].

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::actions::PartialTranslation;
use crate::coarse::{Entourage, UlfGraph};
use crate::error::{Error, Result};

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Simple graph on `n` vertices with every degree at most `max_degree`.
/// Edges are proposed uniformly and kept while both endpoints have room.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, max_degree: usize) -> UlfGraph {
    let mut degree = vec![0usize; n];
    let mut edges = BTreeSet::new();
    if n >= 2 {
        let attempts = n * max_degree;
        for _ in 0..attempts {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            let e = (u.min(v), u.max(v));
            if u == v || edges.contains(&e) || degree[u] >= max_degree || degree[v] >= max_degree {
                continue;
            }
            degree[u] += 1;
            degree[v] += 1;
            edges.insert(e);
        }
    }
    UlfGraph::new(n, edges).expect("vertices in range")
}

/// Connected simple graph: a random spanning tree with degrees at most
/// `max_degree` (at least 2), plus up to `extra` random edges respecting the same bound.
pub fn random_connected_graph<R: Rng>(
    rng: &mut R,
    n: usize,
    max_degree: usize,
    extra: usize,
) -> Result<UlfGraph> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "a connected graph needs a vertex".into(),
        ));
    }
    if max_degree < 2 && n > 2 {
        return Err(Error::InvalidParameter(format!(
            "degree bound {max_degree} cannot connect {n} vertices"
        )));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut degree = vec![0usize; n];
    let mut edges = BTreeSet::new();
    for i in 1..n {
        let v = order[i];
        let open: Vec<usize> = order[..i]
            .iter()
            .copied()
            .filter(|&u| degree[u] < max_degree)
            .collect();
        let u = *open.choose(rng).expect("a tree vertex with spare degree");
        degree[u] += 1;
        degree[v] += 1;
        edges.insert((u.min(v), u.max(v)));
    }
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        let e = (u.min(v), u.max(v));
        if u != v && !edges.contains(&e) && degree[u] < max_degree && degree[v] < max_degree {
            degree[u] += 1;
            degree[v] += 1;
            edges.insert(e);
        }
    }
    UlfGraph::new(n, edges)
}

/// Connected simple `d`-regular graph on `n` vertices from the pairing
/// model. Pairings with loops or repeated edges, and disconnected results,
/// are rejected; gives up after `max_tries` pairings.
pub fn random_regular_graph<R: Rng>(
    rng: &mut R,
    n: usize,
    d: usize,
    max_tries: usize,
) -> Result<UlfGraph> {
    if d >= n || !(n * d).is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "no simple {d}-regular graph on {n} vertices"
        )));
    }
    if d == 0 {
        return if n == 1 {
            Ok(UlfGraph::empty(1))
        } else {
            Err(Error::InvalidParameter(format!(
                "0-regular graph on {n} vertices is disconnected"
            )))
        };
    }
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    'attempt: for _ in 0..max_tries {
        points.shuffle(rng);
        let mut edges = BTreeSet::new();
        for pair in points.chunks(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || !edges.insert((u.min(v), u.max(v))) {
                continue 'attempt;
            }
        }
        let g = UlfGraph::new(n, edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::Construction(format!(
        "no connected simple {d}-regular graph on {n} vertices after {max_tries} pairings"
    )))
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> PartialTranslation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    PartialTranslation::from_permutation(&images).expect("a shuffle is a bijection")
}

/// Each point joins the domain with probability `density`; images are
/// drawn without repetition.
pub fn random_partial_injection<R: Rng>(rng: &mut R, n: usize, density: f64) -> PartialTranslation {
    let mut targets: Vec<usize> = (0..n).collect();
    targets.shuffle(rng);
    let mut next = targets.into_iter();
    let map = (0..n)
        .map(|_| {
            if rng.gen_bool(density.clamp(0.0, 1.0)) {
                next.next()
            } else {
                None
            }
        })
        .collect();
    PartialTranslation::new(map).expect("distinct images")
}

/// Symmetric relation containing `Δ` with every row of size at most
/// `max_degree` (the diagonal counts).
pub fn random_symmetric_relation<R: Rng>(
    rng: &mut R,
    n: usize,
    max_degree: usize,
) -> Result<Entourage> {
    if max_degree == 0 && n > 0 {
        return Err(Error::InvalidParameter("Δ alone needs degree 1".into()));
    }
    let off = random_graph(rng, n, max_degree.saturating_sub(1));
    let pairs = (0..n)
        .map(|x| (x, x))
        .chain(off.edges().flat_map(|(u, v)| [(u, v), (v, u)]));
    Entourage::new(n, pairs)
}

/// Nonnegative weights on a random nonempty subset of at most `max_support` points, summing to 1.
pub fn random_finite_measure<R: Rng>(rng: &mut R, n: usize, max_support: usize) -> Vec<f64> {
    let k = rng.gen_range(1..=max_support.clamp(1, n.max(1)));
    let mut points: Vec<usize> = (0..n).collect();
    points.shuffle(rng);
    let mut w = vec![0.0; n];
    for &p in &points[..k] {
        w[p] = rng.gen_range(0.05..1.0);
    }
    let total: f64 = w.iter().sum();
    w.iter_mut().for_each(|v| *v /= total);
    w
}
