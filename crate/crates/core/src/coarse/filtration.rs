use super::entourage::Entourage;
use super::metric::{Dist, ExtendedMetric};
use crate::error::{Error, Result};

/// Graded family `E₀ ⊆ E₁ ⊆ … ⊆ E_N` of symmetric entourages with
/// `E₀ = Δ` and `E_n ∘ E_m ⊆ E_{n+m}` for `n + m ≤ N`.
///
/// Only levels up to the truncation depth `N` are known; pairs outside
/// `E_N` are reported at distance `∞` by [`metric_from_filtration`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Filtration {
    n: usize,
    levels: Vec<Entourage>,
}

impl Filtration {
    /// Wraps explicit levels after validating every invariant.
    pub fn from_levels(n: usize, levels: Vec<Entourage>) -> Result<Self> {
        let f = Filtration { n, levels };
        f.check_invariants()?;
        Ok(f)
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    /// Truncation depth `N` (number of levels minus one).
    pub fn depth(&self) -> usize {
        self.levels.len().saturating_sub(1)
    }

    pub fn levels(&self) -> &[Entourage] {
        &self.levels
    }

    pub fn level(&self, i: usize) -> &Entourage {
        &self.levels[i]
    }

    pub fn check_invariants(&self) -> Result<()> {
        let Some(first) = self.levels.first() else {
            return Err(Error::InvalidParameter("filtration has no levels".into()));
        };
        for e in &self.levels {
            if e.ground_size() != self.n {
                return Err(Error::GroundSetMismatch {
                    left: self.n,
                    right: e.ground_size(),
                });
            }
        }
        if *first != Entourage::diagonal(self.n) {
            return Err(Error::InvalidParameter("E_0 is not the diagonal".into()));
        }
        for (i, e) in self.levels.iter().enumerate() {
            if !e.is_symmetric() {
                return Err(Error::InvalidParameter(format!("E_{i} is not symmetric")));
            }
            if i > 0 && !self.levels[i - 1].is_subset(e) {
                return Err(Error::InvalidParameter(format!("E_{} ⊄ E_{i}", i - 1)));
            }
        }
        let depth = self.depth();
        for a in 0..=depth {
            for b in 0..=depth - a {
                let comp = self.levels[a].compose(&self.levels[b])?;
                if !comp.is_subset(&self.levels[a + b]) {
                    return Err(Error::InvalidParameter(format!(
                        "E_{a} ∘ E_{b} ⊄ E_{}",
                        a + b
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Filtration generated by `gens` up to depth `N`:
/// `E₀ = Δ`, `E₁ = Δ ∪ ⋃ gens ∪ ⋃ gens⁻¹`, `E_{k+1} = E_k ∘ E₁`.
pub fn filtration_from_generators(
    n: usize,
    gens: &[Entourage],
    depth: usize,
) -> Result<Filtration> {
    let diag = Entourage::diagonal(n);
    let mut e1 = diag.clone();
    for g in gens {
        e1 = e1.union(g)?.union(&g.inverse())?;
    }
    let mut levels = vec![diag];
    if depth >= 1 {
        levels.push(e1.clone());
    }
    while levels.len() <= depth {
        let next = levels.last().unwrap().compose(&e1)?;
        levels.push(next);
    }
    Ok(Filtration { n, levels })
}

/// `d(x, y) = min {k : (x, y) ∈ E_k}`, or `∞` when the pair lies beyond
/// the truncation depth.
pub fn metric_from_filtration(f: &Filtration) -> ExtendedMetric {
    let n = f.n;
    let mut table = vec![Dist::Inf; n * n];
    for (k, level) in f.levels.iter().enumerate().rev() {
        for &(x, y) in level.pairs() {
            table[x * n + y] = Dist::Finite(k as u32);
        }
    }
    ExtendedMetric::from_table(n, table)
}
