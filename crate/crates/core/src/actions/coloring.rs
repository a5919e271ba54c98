use super::schreier::{ActionGenerators, NamedGenerator};
use super::translation::PartialTranslation;
use crate::coarse::Entourage;
use crate::error::{Error, Result};

/// Proper coloring of a symmetric relation, loops included: two pairs that
/// share an endpoint never share a color. `colors[i]` is the color of the
/// `i`-th unordered pair `(x, y)`, `x ≤ y`, listed in `pairs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    pub pairs: Vec<(usize, usize)>,
    pub colors: Vec<usize>,
    pub color_count: usize,
}

fn check_input(s: &Entourage) -> Result<()> {
    for &(x, y) in s.pairs() {
        if !s.contains(y, x) {
            return Err(Error::NotSymmetric { x, y });
        }
    }
    for x in 0..s.ground_size() {
        if !s.contains(x, x) {
            return Err(Error::MissingDiagonal { x });
        }
    }
    Ok(())
}

/// Greedy coloring of `s` in lexicographic order, first free color wins.
///
/// A pair `(x, y)` sees at most `d - 1` other pairs at `x` and `d - 1` at
/// `y`, so at most `2d - 1` colors are ever needed.
pub fn greedy_edge_coloring(s: &Entourage) -> Result<EdgeColoring> {
    check_input(s)?;
    let n = s.ground_size();
    let pairs: Vec<(usize, usize)> = s.pairs().iter().copied().filter(|&(x, y)| x <= y).collect();
    let mut used: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut colors = Vec::with_capacity(pairs.len());
    let mut color_count = 0;
    for &(x, y) in &pairs {
        let c = (0..)
            .find(|c| !used[x].contains(c) && !used[y].contains(c))
            .expect("unbounded search");
        used[x].push(c);
        if y != x {
            used[y].push(c);
        }
        colors.push(c);
        color_count = color_count.max(c + 1);
    }
    Ok(EdgeColoring {
        pairs,
        colors,
        color_count,
    })
}

/// Decomposes a symmetric relation containing `Δ` into total involutions
/// `γ₁, …, γ_k` with `k ≤ 2d - 1` and `⋃ graph γ_i = s`.
///
/// Each color class is a matching plus some loops; its involution swaps
/// the matched pairs and fixes everything else. Unmatched points are safe
/// to fix because `Δ ⊆ s`.
pub fn edge_color_decompose(s: &Entourage) -> Result<Vec<PartialTranslation>> {
    let coloring = greedy_edge_coloring(s)?;
    let n = s.ground_size();
    let mut maps: Vec<Vec<Option<usize>>> = vec![(0..n).map(Some).collect(); coloring.color_count];
    for (&(x, y), &c) in coloring.pairs.iter().zip(&coloring.colors) {
        maps[c][x] = Some(y);
        maps[c][y] = Some(x);
    }
    Ok(maps
        .into_iter()
        .map(|m| PartialTranslation::new(m).expect("a matching gives an involution"))
        .collect())
}

/// Realises the coarse structure generated by `gens` as a Schreier graph of
/// involutions: each generator `E` is replaced by the involutions of
/// `E ∪ E⁻¹ ∪ Δ`.
pub fn realize_as_action(n: usize, gens: &[Entourage]) -> Result<ActionGenerators> {
    let diag = Entourage::diagonal(n);
    let mut out = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let s = g.symmetrized().union(&diag)?;
        for (j, inv) in edge_color_decompose(&s)?.into_iter().enumerate() {
            out.push(NamedGenerator {
                name: format!("g{i}.c{j}"),
                map: inv,
            });
        }
    }
    ActionGenerators::new(n, out)
}

/// The 2×2 trick: a partial translation `γ` on `X` becomes a total
/// involution of `X ⊔ X` (points `0..n` are the first copy, `n..2n` the
/// second). `x ∈ dom γ` in the first copy is exchanged with `γx` in the
/// second; the remaining points of the first copy (off `dom γ`) and of the
/// second copy (off `ran γ`) are fixed.
///
/// As a permutation matrix this is `[[1 - γ*γ, γ*], [γ, 1 - γγ*]]`, with `γ`
/// the operator `e_x ↦ e_{γx}`.
pub fn two_by_two(gamma: &PartialTranslation) -> PartialTranslation {
    let n = gamma.ground_size();
    let mut map: Vec<Option<usize>> = (0..2 * n).map(Some).collect();
    for x in 0..n {
        if let Some(y) = gamma.apply(x) {
            map[x] = Some(n + y);
            map[n + y] = Some(x);
        }
    }
    PartialTranslation::new(map).expect("the 2x2 trick yields a bijection")
}
