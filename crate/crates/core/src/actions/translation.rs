use crate::coarse::Entourage;
use crate::error::{Error, Result};

/// Injective partial map on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialTranslation {
    map: Vec<Option<usize>>,
}

impl PartialTranslation {
    /// `map[x]` is the image of `x`, `None` outside the domain.
    pub fn new(map: Vec<Option<usize>>) -> Result<Self> {
        let n = map.len();
        let mut preimage: Vec<Option<usize>> = vec![None; n];
        for (x, &img) in map.iter().enumerate() {
            if let Some(y) = img {
                if y >= n {
                    return Err(Error::VertexOutOfRange { vertex: y, n });
                }
                if let Some(a) = preimage[y] {
                    return Err(Error::NotInjective { a, b: x, image: y });
                }
                preimage[y] = Some(x);
            }
        }
        Ok(PartialTranslation { map })
    }

    /// Total map from a permutation given as an image list.
    pub fn from_permutation(images: &[usize]) -> Result<Self> {
        let p = Self::new(images.iter().map(|&y| Some(y)).collect())?;
        Ok(p)
    }

    pub fn identity(n: usize) -> Self {
        PartialTranslation {
            map: (0..n).map(Some).collect(),
        }
    }

    pub fn empty(n: usize) -> Self {
        PartialTranslation { map: vec![None; n] }
    }

    /// Translation `x ↦ x + shift (mod n)`.
    pub fn rotation(n: usize, shift: usize) -> Self {
        PartialTranslation {
            map: (0..n).map(|x| Some((x + shift) % n)).collect(),
        }
    }

    /// The involution exchanging `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut map: Vec<Option<usize>> = (0..n).map(Some).collect();
        map[a] = Some(b);
        map[b] = Some(a);
        PartialTranslation { map }
    }

    pub fn ground_size(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        self.map[x]
    }

    pub fn as_slice(&self) -> &[Option<usize>] {
        &self.map
    }

    pub fn domain(&self) -> Vec<usize> {
        (0..self.map.len())
            .filter(|&x| self.map[x].is_some())
            .collect()
    }

    pub fn range(&self) -> Vec<usize> {
        let mut r: Vec<usize> = self.map.iter().flatten().copied().collect();
        r.sort_unstable();
        r
    }

    pub fn is_total(&self) -> bool {
        self.map.iter().all(Option::is_some)
    }

    pub fn inverse(&self) -> PartialTranslation {
        let mut inv = vec![None; self.map.len()];
        for (x, &img) in self.map.iter().enumerate() {
            if let Some(y) = img {
                inv[y] = Some(x);
            }
        }
        PartialTranslation { map: inv }
    }

    /// `(self ∘ other)(x) = self(other(x))`, defined where both steps are.
    pub fn compose(&self, other: &PartialTranslation) -> Result<PartialTranslation> {
        if self.map.len() != other.map.len() {
            return Err(Error::GroundSetMismatch {
                left: self.map.len(),
                right: other.map.len(),
            });
        }
        let map = other
            .map
            .iter()
            .map(|img| img.and_then(|y| self.map[y]))
            .collect();
        Ok(PartialTranslation { map })
    }

    /// `graph γ = {(γx, x) : x ∈ dom γ}`.
    pub fn graph(&self) -> Entourage {
        let pairs = self
            .map
            .iter()
            .enumerate()
            .filter_map(|(x, img)| img.map(|y| (y, x)));
        Entourage::new(self.map.len(), pairs).expect("images in range")
    }
}

/// True iff `p` is total and `p ∘ p = id`.
pub fn is_involution(p: &PartialTranslation) -> bool {
    p.is_total()
        && p.map
            .iter()
            .enumerate()
            .all(|(x, img)| img.and_then(|y| p.map[y]) == Some(x))
}
