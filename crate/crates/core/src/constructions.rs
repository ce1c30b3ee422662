//! Explicit lower-bound witnesses and comparison constants.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::sumset::Basis;

/// Mrose's lower bound on `liminf n(2,k)/k^2`. Only the constant is exposed.
pub const MROSE_LOWER: f64 = 2.0 / 7.0;
/// Rohrbach's combinatorial upper bound on `limsup n(2,k)/k^2`.
pub const ROHRBACH_UPPER: f64 = 0.4992;
/// Moser's original Fourier-series upper bound.
pub const MOSER_UPPER: f64 = 0.4903;
/// Moser, Pounder and Riddell.
pub const MOSER_POUNDER_RIDDELL_UPPER: f64 = 0.4847;
/// Klotz's hybrid upper bound, the one the two-variable certificate must beat.
pub const KLOTZ_UPPER: f64 = 0.4802;

/// Rohrbach's set `{0, 1, ..., r, 2r, 3r, ..., (r-1)r}` with `r = floor(k/2)`.
///
/// It has `2r - 1 <= k` elements and `[0, r^2]` inside its sumset: any
/// `j = q r + s` with `0 <= s < r` and `q <= r - 1` splits as `q r + s`,
/// and `r^2 = r + (r-1) r`.
pub fn rohrbach_basis(k: usize) -> Result<Basis> {
    if k < 4 {
        return Err(Error::ConstructionDegenerate(k));
    }
    let r = (k / 2) as u64;
    let mut elements: Vec<u64> = (0..=r).collect();
    elements.extend((2..r).map(|q| q * r));
    Basis::new(elements)
}

/// `(r^2 + 1) / k^2` with `r = floor(k/2)`, the density guaranteed by [`rohrbach_basis`].
pub fn lower_bound_coefficient(k: usize) -> Result<Ratio<u64>> {
    if k < 4 {
        return Err(Error::ConstructionDegenerate(k));
    }
    let r = (k / 2) as u64;
    let k = k as u64;
    Ok(Ratio::new(r * r + 1, k * k))
}
