//! Certified real intervals for truncated series constants.

use serde::Serialize;

/// A certified enclosure `[lo, hi]` of a constant defined by an infinite sum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConstantInterval {
    pub lo: f64,
    pub hi: f64,
    /// Analytic bound on the discarded tail of the series.
    pub truncation_tail: f64,
    /// Budget for floating-point error in the truncated sum, folded into both ends.
    pub rounding_slack: f64,
    /// Truncation radius.
    #[serde(rename = "N")]
    pub n: u64,
}

impl ConstantInterval {
    /// Encloses a nonnegative series whose truncated sum is `partial`.
    pub fn from_partial_sum(
        partial: f64,
        truncation_tail: f64,
        rounding_slack: f64,
        n: u64,
    ) -> Self {
        Self {
            lo: partial - rounding_slack,
            hi: partial + truncation_tail + rounding_slack,
            truncation_tail,
            rounding_slack,
            n,
        }
    }

    /// A degenerate interval, for hand-supplied constants.
    pub fn exact(value: f64) -> Self {
        Self::from_bounds(value, value)
    }

    /// An interval with no provenance beyond its endpoints.
    pub fn from_bounds(lo: f64, hi: f64) -> Self {
        Self {
            lo,
            hi,
            truncation_tail: 0.0,
            rounding_slack: 0.0,
            n: 0,
        }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn is_subset_of(&self, other: &ConstantInterval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn is_valid(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite() && self.lo <= self.hi
    }
}

/// Rounds `x` up to `decimals` places. Floating error can only push the result up.
pub fn round_up(x: f64, decimals: i32) -> f64 {
    let scale = 10f64.powi(decimals);
    (x * scale).ceil() / scale
}
