//! Exact integer combinatorics of bases of order 2.
//!
//! Representation counts use unordered pairs `a1 <= a2`. The pair count `L`
//! in [`ExpSumStats`] uses ordered pairs `(a1, a2) in A x A`.

use std::collections::BTreeMap;
use std::f64::consts::TAU;
use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

/// Elements must stay below this so that pairwise sums fit in a `u64`.
pub const MAX_ELEMENT: u64 = 1 << 62;

/// A finite set of nonnegative integers, stored strictly increasing.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Basis {
    elements: Vec<u64>,
}

impl Basis {
    /// Builds a basis from a strictly increasing sequence.
    pub fn new(elements: Vec<u64>) -> Result<Self> {
        for w in elements.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::NotIncreasing {
                    prev: w[0],
                    next: w[1],
                });
            }
        }
        if let Some(&max) = elements.last() {
            if max >= MAX_ELEMENT {
                return Err(Error::ElementTooLarge(max));
            }
        }
        Ok(Self { elements })
    }

    /// Builds a basis from arbitrary input, sorting and removing duplicates.
    pub fn from_unsorted(mut elements: Vec<u64>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        Self::new(elements)
    }

    /// Parses a comma separated list such as `"0,1,3"`.
    pub fn parse(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('{').trim_end_matches('}');
        if trimmed.trim().is_empty() {
            return Ok(Self::default());
        }
        let elements = trimmed
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|e| Error::InvalidArgument(format!("bad element {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_unsorted(elements)
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    /// Cardinality `k = |A|`.
    pub fn k(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn max(&self) -> Option<u64> {
        self.elements.last().copied()
    }

    pub fn contains(&self, a: u64) -> bool {
        self.elements.binary_search(&a).is_ok()
    }

    /// The translate `A + t`. Fails if any element leaves the supported range.
    pub fn translate(&self, t: i64) -> Result<Self> {
        let shifted = self
            .elements
            .iter()
            .map(|&a| {
                let v = a as i128 + t as i128;
                if v < 0 || v >= MAX_ELEMENT as i128 {
                    Err(Error::InvalidArgument(format!(
                        "translate by {t} leaves range"
                    )))
                } else {
                    Ok(v as u64)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(shifted)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

/// Representation data of a basis relative to `n = n(2,A)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepProfile {
    /// `n(2,A)`.
    pub n: u64,
    /// `r_{2,A}(j)` over unordered pairs, for every `j` in `2A`.
    pub counts: BTreeMap<u64, u64>,
    /// `delta(j) = r(j) - 1` on `[0, n-1]`, `r(j)` elsewhere.
    pub delta: BTreeMap<u64, u64>,
    /// `Delta(1)`, the sum of all `delta(j)`.
    pub delta_total: u64,
}

impl RepProfile {
    /// Number of unordered representations of `j`, zero when `j` is not in `2A`.
    pub fn r(&self, j: u64) -> u64 {
        self.counts.get(&j).copied().unwrap_or(0)
    }

    /// `sum_{j >= n} r(j)`, the part of `Delta(1)` lying above the covered prefix.
    pub fn upper_surplus(&self) -> u64 {
        self.counts.range(self.n..).map(|(_, &c)| c).sum()
    }
}

/// Exponential-sum data for a basis at modulus `n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExpSumStats {
    pub n: u64,
    /// `|f_A(w^r)|` for `r = 1..n-1`, `w = exp(2 pi i / n)`.
    pub magnitudes: Vec<f64>,
    /// Maximum of `magnitudes`.
    pub m: f64,
    /// `M / k`.
    pub mu: f64,
    /// Number of `a` in `A` with `2a >= n`.
    pub ell: u64,
    /// Number of ordered pairs `(a1, a2)` with `a1 + a2 >= n`.
    pub pair_count_above: u64,
}

/// The sumset `2A`, sorted and deduplicated.
pub fn sumset2(a: &Basis) -> Vec<u64> {
    let e = a.elements();
    let mut out = Vec::with_capacity(e.len() * (e.len() + 1) / 2);
    for (i, &x) in e.iter().enumerate() {
        for &y in &e[i..] {
            out.push(x + y);
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Length of the prefix `[0, n-1]` contained in a sorted, deduplicated sumset.
fn covered_prefix(sums: &[u64]) -> u64 {
    sums.iter()
        .enumerate()
        .take_while(|&(i, &s)| s == i as u64)
        .count() as u64
}

/// `n(2,A)`: the largest `n` with `[0, n-1]` inside `2A`; 0 when `0` is not a sum.
pub fn n2(a: &Basis) -> u64 {
    covered_prefix(&sumset2(a))
}

/// `m(2,A)`: the longest run of consecutive integers inside `2A`.
pub fn m2(a: &Basis) -> u64 {
    let sums = sumset2(a);
    let mut best = 0u64;
    let mut run = 0u64;
    let mut prev: Option<u64> = None;
    for &s in &sums {
        run = match prev {
            Some(p) if s == p + 1 => run + 1,
            _ => 1,
        };
        best = best.max(run);
        prev = Some(s);
    }
    best
}

/// Representation counts, surplus and `n(2,A)` for a nonempty basis.
pub fn rep_profile(a: &Basis) -> Result<RepProfile> {
    if a.is_empty() {
        return Err(Error::EmptyBasis);
    }
    let e = a.elements();
    let mut counts = BTreeMap::new();
    for (i, &x) in e.iter().enumerate() {
        for &y in &e[i..] {
            *counts.entry(x + y).or_insert(0u64) += 1;
        }
    }
    let n = counts
        .keys()
        .enumerate()
        .take_while(|&(i, &j)| j == i as u64)
        .count() as u64;
    let delta: BTreeMap<u64, u64> = counts
        .iter()
        .map(|(&j, &r)| (j, if j < n { r - 1 } else { r }))
        .collect();
    let delta_total = delta.values().sum();
    Ok(RepProfile {
        n,
        counts,
        delta,
        delta_total,
    })
}

/// Evaluates `f_A(w^r) = sum_a exp(2 pi i r a / n)` with exact reduction of `r a mod n`.
pub fn exp_sum(a: &Basis, r: u64, n: u64) -> Complex64 {
    a.elements()
        .iter()
        .map(|&x| {
            let phase = ((r as u128 * x as u128) % n as u128) as f64 / n as f64;
            Complex64::from_polar(1.0, TAU * phase)
        })
        .sum()
}

/// Exponential-sum statistics at modulus `n >= 2`.
pub fn exp_sum_stats(a: &Basis, n: u64) -> Result<ExpSumStats> {
    if n < 2 {
        return Err(Error::ModulusTooSmall(n));
    }
    let magnitudes: Vec<f64> = (1..n).map(|r| exp_sum(a, r, n).norm()).collect();
    let m = magnitudes.iter().copied().fold(0.0, f64::max);
    let k = a.k();
    let mu = if k == 0 { 0.0 } else { m / k as f64 };
    let ell = a.elements().iter().filter(|&&x| 2 * x >= n).count() as u64;
    let pair_count_above = count_ordered_pairs_at_least(a.elements(), n);
    Ok(ExpSumStats {
        n,
        magnitudes,
        m,
        mu,
        ell,
        pair_count_above,
    })
}

fn count_ordered_pairs_at_least(e: &[u64], n: u64) -> u64 {
    // two pointers over the sorted elements
    let mut count = 0u64;
    let mut j = e.len();
    for &x in e {
        while j > 0 && x + e[j - 1] >= n {
            j -= 1;
        }
        count += (e.len() - j) as u64;
    }
    count
}
