use std::fmt;
use std::ops::Add;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A distance in `{0, 1, 2, ...} ∪ {∞}`.
///
/// The derived ordering puts every finite value below [`Dist::Inf`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dist {
    Finite(u32),
    Inf,
}

impl Dist {
    pub const ZERO: Dist = Dist::Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, Dist::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Dist::Finite(d) => Some(d),
            Dist::Inf => None,
        }
    }

    /// True when the distance is at most `r`; `∞` is never within range.
    pub fn within(self, r: usize) -> bool {
        match self {
            Dist::Finite(d) => (d as usize) <= r,
            Dist::Inf => false,
        }
    }
}

impl Add for Dist {
    type Output = Dist;

    fn add(self, rhs: Dist) -> Dist {
        match (self, rhs) {
            (Dist::Finite(a), Dist::Finite(b)) => Dist::Finite(a + b),
            _ => Dist::Inf,
        }
    }
}

impl From<u32> for Dist {
    fn from(d: u32) -> Self {
        Dist::Finite(d)
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dist::Finite(d) => write!(f, "{d}"),
            Dist::Inf => f.write_str("inf"),
        }
    }
}

impl Serialize for Dist {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Dist::Finite(d) => s.serialize_u32(*d),
            Dist::Inf => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Dist {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct DistVisitor;

        impl Visitor<'_> for DistVisitor {
            type Value = Dist;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a nonnegative integer or the string \"inf\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Dist, E> {
                u32::try_from(v)
                    .map(Dist::Finite)
                    .map_err(|_| E::custom("distance too large"))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Dist, E> {
                u32::try_from(v)
                    .map(Dist::Finite)
                    .map_err(|_| E::custom("distance must be a nonnegative integer"))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Dist, E> {
                if v == "inf" {
                    Ok(Dist::Inf)
                } else {
                    Err(E::invalid_value(de::Unexpected::Str(v), &self))
                }
            }
        }

        d.deserialize_any(DistVisitor)
    }
}

/// Dense table of extended distances on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtendedMetric {
    n: usize,
    table: Vec<Dist>,
}

impl ExtendedMetric {
    /// Builds a metric from row-major values. No axioms are checked here;
    /// use [`ExtendedMetric::check_axioms`] for that.
    pub fn from_table(n: usize, table: Vec<Dist>) -> Self {
        assert_eq!(table.len(), n * n, "metric table must be n*n");
        ExtendedMetric { n, table }
    }

    pub fn from_rows(rows: Vec<Vec<Dist>>) -> Self {
        let n = rows.len();
        let table: Vec<Dist> = rows.into_iter().flatten().collect();
        Self::from_table(n, table)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> Dist {
        self.table[x * self.n + y]
    }

    pub fn row(&self, x: usize) -> &[Dist] {
        &self.table[x * self.n..(x + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<Dist>> {
        (0..self.n).map(|x| self.row(x).to_vec()).collect()
    }

    /// `Ball(x, r) = {y : d(x, y) ≤ r}` in increasing vertex order.
    pub fn ball(&self, x: usize, r: usize) -> Vec<usize> {
        self.row(x)
            .iter()
            .enumerate()
            .filter(|(_, d)| d.within(r))
            .map(|(y, _)| y)
            .collect()
    }

    /// Largest distance in the table, `∞` included. Zero for empty tables.
    pub fn diameter(&self) -> Dist {
        self.table.iter().copied().max().unwrap_or(Dist::ZERO)
    }

    /// Largest finite distance.
    pub fn finite_diameter(&self) -> u32 {
        self.table
            .iter()
            .filter_map(|d| d.finite())
            .max()
            .unwrap_or(0)
    }

    /// `min {d(x, y) : x ∈ a, y ∈ b}`; `∞` if either set is empty.
    pub fn set_distance(&self, a: &[usize], b: &[usize]) -> Dist {
        let mut best = Dist::Inf;
        for &x in a {
            for &y in b {
                best = best.min(self.get(x, y));
            }
        }
        best
    }

    /// Checks zero diagonal, symmetry and the triangle inequality, with `∞`
    /// absorbing. Returns the first violating triple as a message.
    pub fn check_axioms(&self) -> std::result::Result<(), String> {
        let n = self.n;
        for x in 0..n {
            if self.get(x, x) != Dist::ZERO {
                return Err(format!("d({x},{x}) = {} ≠ 0", self.get(x, x)));
            }
            for y in 0..n {
                if self.get(x, y) != self.get(y, x) {
                    return Err(format!("d({x},{y}) ≠ d({y},{x})"));
                }
                if x != y && self.get(x, y) == Dist::ZERO {
                    return Err(format!("d({x},{y}) = 0 for distinct points"));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                let dxy = self.get(x, y);
                for z in 0..n {
                    if self.get(x, z) > dxy + self.get(y, z) {
                        return Err(format!("triangle inequality fails at ({x},{y},{z})"));
                    }
                }
            }
        }
        Ok(())
    }
}
