//! Numerical checks of the decay envelopes and the shell-sum tail lemma.

use std::f64::consts::PI;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::coeff;
use super::sums::for_each_in_shell;
use crate::error::{Error, Result};
use crate::summation::CompensatedSum;

/// Partial tails `sum_{R=N+1}^{Rmax}` of the two lattice sums bounded by the shell lemma.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ShellReport {
    pub n: u64,
    pub rmax: u64,
    /// Tail of `1 / (r1^2 r2^2)`.
    pub product_tail: f64,
    /// `4 pi^2 / (3 N)`.
    pub product_bound: f64,
    /// Tail of `1 / (|r1 r2| (r1 - r2)^2)`, `r1 != r2`.
    pub mixed_tail: f64,
    /// `4 (pi^2/3 + 1) / N`.
    pub mixed_bound: f64,
}

impl ShellReport {
    pub fn product_ok(&self) -> bool {
        self.product_tail < self.product_bound
    }

    pub fn mixed_ok(&self) -> bool {
        self.mixed_tail < self.mixed_bound
    }

    pub fn ok(&self) -> bool {
        self.product_ok() && self.mixed_ok()
    }
}

/// Sums both lattice series over shells `N+1..=Rmax` by direct enumeration.
pub fn shell_sum_bounds_check(n: u64, rmax: u64) -> Result<ShellReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("N must be positive".into()));
    }
    if rmax <= n {
        return Err(Error::InvalidArgument(format!(
            "Rmax = {rmax} must exceed N = {n}"
        )));
    }
    let shells: Vec<(CompensatedSum, CompensatedSum)> = ((n + 1) as i64..=rmax as i64)
        .into_par_iter()
        .map(|big_r| {
            let mut product = CompensatedSum::new();
            let mut mixed = CompensatedSum::new();
            for_each_in_shell(big_r, |r1, r2| {
                let (a, b) = (r1 as f64, r2 as f64);
                product.add(1.0 / (a * a * b * b));
                if r1 != r2 {
                    let d = a - b;
                    mixed.add(1.0 / ((a * b).abs() * d * d));
                }
            });
            (product, mixed)
        })
        .collect();
    let mut product = CompensatedSum::new();
    let mut mixed = CompensatedSum::new();
    for (p, m) in &shells {
        product.merge(p);
        mixed.merge(m);
    }
    let nf = n as f64;
    Ok(ShellReport {
        n,
        rmax,
        product_tail: product.value(),
        product_bound: 4.0 * PI * PI / 3.0 / nf,
        mixed_tail: mixed.value(),
        mixed_bound: 4.0 * (PI * PI / 3.0 + 1.0) / nf,
    })
}

/// Index pattern of a coefficient, each with its own decay envelope.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    /// Exactly one index is zero.
    Axial,
    /// `r1 = r2 != 0`.
    Diagonal,
    /// Both nonzero and distinct.
    General,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl Regime {
    pub fn name(&self) -> &'static str {
        match self {
            Regime::Axial => "axial",
            Regime::Diagonal => "diagonal",
            Regime::General => "general",
        }
    }

    pub fn of(r1: i64, r2: i64) -> Option<Regime> {
        match (r1, r2) {
            (0, 0) => None,
            (0, _) | (_, 0) => Some(Regime::Axial),
            (a, b) if a == b => Some(Regime::Diagonal),
            _ => Some(Regime::General),
        }
    }

    /// Upper bound on `|phi^(r1, r2)|` for a pair in this regime.
    pub fn envelope(&self, r1: i64, r2: i64) -> f64 {
        let pi2 = PI * PI;
        match self {
            Regime::Axial => {
                let r = (r1 + r2) as f64;
                (15.0 + 8.0 * 15f64.sqrt()) / (4.0 * pi2) / (r * r)
            }
            Regime::Diagonal => {
                let r = r1 as f64;
                30.0 / pi2 / (r * r)
            }
            Regime::General => {
                let (a, b) = (r1 as f64, r2 as f64);
                let d = a - b;
                105.0 / (pi2 * pi2) / ((a * b).abs() * d * d)
                    + 420.0 / (pi2 * pi2) / (a * a * b * b)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnvelopeReport {
    pub regime: Regime,
    pub checked: usize,
    /// Largest `|phi^| / envelope` over the sample.
    pub max_ratio: f64,
    pub violations: Vec<(i64, i64)>,
}

impl EnvelopeReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `|phi^(r1, r2)| <= envelope` for every pair, all of which must lie in `regime`.
pub fn decay_envelope_check(regime: Regime, sample: &[(i64, i64)]) -> Result<EnvelopeReport> {
    if sample.is_empty() {
        return Err(Error::EmptySample);
    }
    if let Some(&(a, b)) = sample
        .iter()
        .find(|&&(a, b)| Regime::of(a, b) != Some(regime))
    {
        return Err(Error::WrongRegime(a, b, regime.name()));
    }
    let mut max_ratio: f64 = 0.0;
    let mut violations = Vec::new();
    for &(a, b) in sample {
        let ratio = coeff(a, b).norm() / regime.envelope(a, b);
        max_ratio = max_ratio.max(ratio);
        if ratio > 1.0 {
            violations.push((a, b));
        }
    }
    Ok(EnvelopeReport {
        regime,
        checked: sample.len(),
        max_ratio,
        violations,
    })
}
