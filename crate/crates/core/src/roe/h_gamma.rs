use crate::actions::PartialTranslation;
use crate::error::{Error, Result};

pub const DEFAULT_FLOOR: f64 = 1e-6;

/// Positive diagonal correction `h` with `h(x) ξ(γ⁻¹x) ≈ ξ(x)` on the
/// supports and `h = 1` elsewhere.
#[derive(Debug, Clone, PartialEq)]
pub struct HGamma {
    pub values: Vec<f64>,
    /// `δ · min {ξ(x) : ξ(x) > 0}`; `δ` when `ξ` vanishes.
    pub floor: f64,
    /// `max_x |h(x) ξ(γ⁻¹x) - ξ(x)|` over the supports, where `ξ(γ⁻¹x)`
    /// counts as 0 when `γ⁻¹x` is undefined or leaves the block of `x`.
    pub error: f64,
}

/// `(γξ)(x) = ξ(γ⁻¹x)` for `x ∈ ran γ`, zero elsewhere.
pub fn translate(gamma: &PartialTranslation, xi: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; xi.len()];
    for (x, img) in gamma.as_slice().iter().enumerate() {
        if let Some(y) = *img {
            out[y] = xi[x];
        }
    }
    out
}

/// Builds `h^γ` for `ξ ≥ 0` supported on the disjoint blocks `supports`.
///
/// For `x` in a block, `h(x) = max(ξ(x), floor) / max(ξ(γ⁻¹x), floor)`
/// where `ξ(γ⁻¹x)` is read inside the same block (0 otherwise). Flooring the
/// numerator as well keeps `h` strictly positive where `ξ(x) = 0`; whenever
/// both values are at least `floor` the quotient is exact.
pub fn h_gamma(
    xi: &[f64],
    supports: &[Vec<usize>],
    gamma: &PartialTranslation,
    delta: f64,
) -> Result<HGamma> {
    if !(delta > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "floor δ must be positive, got {delta}"
        )));
    }
    let n = xi.len();
    if gamma.ground_size() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: gamma.ground_size(),
        });
    }
    if let Some(x) = xi.iter().position(|&v| !(v >= 0.0)) {
        return Err(Error::InvalidParameter(format!(
            "ξ({x}) = {} is negative",
            xi[x]
        )));
    }
    let mut block_of: Vec<Option<usize>> = vec![None; n];
    for (i, b) in supports.iter().enumerate() {
        for &v in b {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if let Some(first) = block_of[v] {
                return Err(Error::OverlappingBlocks {
                    first,
                    second: i,
                    vertex: v,
                });
            }
            block_of[v] = Some(i);
        }
    }

    let min_pos = xi
        .iter()
        .copied()
        .filter(|&v| v > 0.0)
        .fold(f64::INFINITY, f64::min);
    let floor = if min_pos.is_finite() {
        delta * min_pos
    } else {
        delta
    };
    let inverse = gamma.inverse();

    let mut values = vec![1.0; n];
    let mut error: f64 = 0.0;
    for x in 0..n {
        let Some(block) = block_of[x] else { continue };
        let source = inverse
            .apply(x)
            .filter(|&y| block_of[y] == Some(block))
            .map_or(0.0, |y| xi[y]);
        let h = xi[x].max(floor) / source.max(floor);
        values[x] = h;
        error = error.max((h * source - xi[x]).abs());
    }
    Ok(HGamma {
        values,
        floor,
        error,
    })
}
