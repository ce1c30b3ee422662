//! Certified truncated sums `C_axial(N)` and `C_main(N)`.
//!
//! Each coefficient contributes `|phi^(r1, r2)|` to a compensated sum and its
//! summand mass to a running magnitude. The rounding slack is
//! `terms * eps * magnitude`, folded into both ends of the interval; the
//! upper end also carries the analytic tail bound.

use rayon::prelude::*;

use super::coeffs::coeff_with_mass;
use crate::interval::ConstantInterval;
use crate::summation::MassSum;

/// `sum over r != 0 of (|phi^(r,0)| + |phi^(0,r)|) - C_axial(N) < 5 / N`.
pub fn axial_tail_bound(n: u64) -> f64 {
    5.0 / n as f64
}

/// `C_main - C_main(N) < 40 / N`.
pub fn main_tail_bound(n: u64) -> f64 {
    40.0 / n as f64
}

fn add_pair(acc: &mut MassSum, r1: i64, r2: i64) {
    let (z, mass) = coeff_with_mass(r1, r2);
    acc.add(z.norm(), mass);
}

/// Accumulates `|phi^|` over `0 < |r| <= n` on both axes, in ascending `|r|`,
/// visiting `(r,0), (-r,0), (0,r), (0,-r)` at each step.
pub fn axial_partial(n: u64) -> MassSum {
    let mut acc = MassSum::default();
    for r in 1..=n as i64 {
        add_pair(&mut acc, r, 0);
        add_pair(&mut acc, -r, 0);
        add_pair(&mut acc, 0, r);
        add_pair(&mut acc, 0, -r);
    }
    acc
}

/// Visits the shell `max(|r1|, |r2|) = R` with both indices nonzero, in a
/// fixed order: top row `r2 = R` and bottom row `r2 = -R` (each with `r1` from
/// `-R` to `R`), then left column `r1 = -R` and right column `r1 = R` (each with
/// `r2` from `-R+1` to `R-1`). A shell has `8R - 4` points.
pub fn for_each_in_shell(big_r: i64, mut visit: impl FnMut(i64, i64)) {
    for r2 in [big_r, -big_r] {
        for r1 in -big_r..=big_r {
            if r1 != 0 {
                visit(r1, r2);
            }
        }
    }
    for r1 in [-big_r, big_r] {
        for r2 in (-big_r + 1)..big_r {
            if r2 != 0 {
                visit(r1, r2);
            }
        }
    }
}

/// Sum of `|phi^|` over one shell.
pub fn shell_partial(big_r: i64) -> MassSum {
    let mut acc = MassSum::default();
    for_each_in_shell(big_r, |r1, r2| add_pair(&mut acc, r1, r2));
    acc
}

/// Sum over shells `1..=n`. Shells run in parallel; partial sums are reduced
/// in ascending order on one thread, so the result is bitwise reproducible.
pub fn main_partial(n: u64) -> MassSum {
    let shells: Vec<MassSum> = (1..=n as i64).into_par_iter().map(shell_partial).collect();
    let mut acc = MassSum::default();
    for s in &shells {
        acc.merge(s);
    }
    acc
}

/// Certified enclosure of `C_axial` from the radius-`n` truncation.
pub fn c_axial(n: u64) -> ConstantInterval {
    let n = n.max(1);
    let acc = axial_partial(n);
    ConstantInterval::from_partial_sum(
        acc.value.value(),
        axial_tail_bound(n),
        acc.rounding_slack(),
        n,
    )
}

/// Certified enclosure of `C_main` from the first `n` shells.
pub fn c_main(n: u64) -> ConstantInterval {
    let n = n.max(1);
    let acc = main_partial(n);
    ConstantInterval::from_partial_sum(
        acc.value.value(),
        main_tail_bound(n),
        acc.rounding_slack(),
        n,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fourier2d::coeff;

    #[test]
    fn shell_sizes_and_membership() {
        for big_r in 1..30i64 {
            let mut seen = Vec::new();
            for_each_in_shell(big_r, |a, b| seen.push((a, b)));
            assert_eq!(seen.len() as i64, 8 * big_r - 4);
            let mut brute = Vec::new();
            for a in -big_r..=big_r {
                for b in -big_r..=big_r {
                    if a.abs().max(b.abs()) == big_r && a != 0 && b != 0 {
                        brute.push((a, b));
                    }
                }
            }
            seen.sort();
            seen.dedup();
            assert_eq!(seen, brute);
        }
    }

    #[test]
    fn first_shell_explicit() {
        let expected =
            coeff(1, 1).norm() + coeff(-1, -1).norm() + coeff(1, -1).norm() + coeff(-1, 1).norm();
        let c = c_main(1);
        assert_eq!(shell_partial(1).terms, 4);
        assert!((c.lo + c.rounding_slack - expected).abs() < 1e-15);
        assert!((c.hi - c.lo - 40.0 - 2.0 * c.rounding_slack).abs() < 1e-12);
    }

    #[test]
    fn axial_symmetry_in_sum() {
        let acc = axial_partial(10);
        let quarter: f64 = (1..=10).map(|r| coeff(r, 0).norm()).sum();
        assert!((acc.value.value() - 4.0 * quarter).abs() < 1e-14);
        assert_eq!(acc.terms, 40);
    }

    #[test]
    fn nesting() {
        let a1 = c_axial(1);
        let a2 = c_axial(1000);
        assert!(a2.is_subset_of(&a1));
        assert!(a2.width() <= 0.005 + 2.0 * a2.rounding_slack + 1e-15);
        let m1 = c_main(20);
        let m2 = c_main(200);
        assert!(m2.is_subset_of(&m1));
    }
}
