use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Wire format: `{"n": int, "pairs": [[x, y], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntourageJson {
    pub n: usize,
    pub pairs: Vec<[usize; 2]>,
}

/// A finite relation `E ⊆ X × X` on the ground set `X = 0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Entourage {
    n: usize,
    pairs: BTreeSet<(usize, usize)>,
}

impl Entourage {
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (x, y) in pairs {
            for v in [x, y] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            set.insert((x, y));
        }
        Ok(Entourage { n, pairs: set })
    }

    pub fn empty(n: usize) -> Self {
        Entourage {
            n,
            pairs: BTreeSet::new(),
        }
    }

    /// `Δ_X`.
    pub fn diagonal(n: usize) -> Self {
        Entourage {
            n,
            pairs: (0..n).map(|x| (x, x)).collect(),
        }
    }

    /// `X × X`.
    pub fn complete(n: usize) -> Self {
        Entourage {
            n,
            pairs: (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect(),
        }
    }

    pub fn from_json(j: &EntourageJson) -> Result<Self> {
        Self::new(j.n, j.pairs.iter().map(|&[x, y]| (x, y)))
    }

    pub fn to_json(&self) -> EntourageJson {
        EntourageJson {
            n: self.n,
            pairs: self.pairs.iter().map(|&(x, y)| [x, y]).collect(),
        }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.pairs.contains(&(x, y))
    }

    pub fn is_subset(&self, other: &Entourage) -> bool {
        self.n == other.n && self.pairs.is_subset(&other.pairs)
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs.iter().all(|&(x, y)| self.contains(y, x))
    }

    fn same_ground(&self, other: &Entourage) -> Result<()> {
        if self.n != other.n {
            return Err(Error::GroundSetMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// `E ∘ F = {(x, z) : (x, y) ∈ E, (y, z) ∈ F}`.
    pub fn compose(&self, other: &Entourage) -> Result<Entourage> {
        self.same_ground(other)?;
        let mut out_of = vec![Vec::new(); self.n];
        for &(y, z) in &other.pairs {
            out_of[y].push(z);
        }
        let mut pairs = BTreeSet::new();
        for &(x, y) in &self.pairs {
            for &z in &out_of[y] {
                pairs.insert((x, z));
            }
        }
        Ok(Entourage { n: self.n, pairs })
    }

    /// `E⁻¹ = {(y, x) : (x, y) ∈ E}`.
    pub fn inverse(&self) -> Entourage {
        Entourage {
            n: self.n,
            pairs: self.pairs.iter().map(|&(x, y)| (y, x)).collect(),
        }
    }

    pub fn union(&self, other: &Entourage) -> Result<Entourage> {
        self.same_ground(other)?;
        Ok(Entourage {
            n: self.n,
            pairs: self.pairs.union(&other.pairs).copied().collect(),
        })
    }

    /// `E ∪ E⁻¹`.
    pub fn symmetrized(&self) -> Entourage {
        self.union(&self.inverse()).expect("same ground set")
    }

    /// `|E ∩ ({x} × X)|` for each `x`.
    pub fn row_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(x, _) in &self.pairs {
            deg[x] += 1;
        }
        deg
    }

    /// `|E ∩ (X × {y})|` for each `y`.
    pub fn column_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(_, y) in &self.pairs {
            deg[y] += 1;
        }
        deg
    }

    /// Largest row or column degree: the ulf bound of this entourage.
    pub fn check_ulf(&self) -> usize {
        let rows = self.row_degrees().into_iter().max().unwrap_or(0);
        let cols = self.column_degrees().into_iter().max().unwrap_or(0);
        rows.max(cols)
    }
}
