//! Moser's one-variable Fourier-series bound.
//!
//! For a test function `phi` with `phi >= alpha1` on `[0, 1/2)` and
//! `phi >= alpha2` on `[1/2, 1)`, summing `phi(a/n)` over an extremal basis
//! gives `k alpha1 - (alpha1 - alpha2) ell <= M S` where `S` is the absolute
//! mass of the nonzero-frequency coefficients. Together with
//! `Delta(1) >= (M^2 - k)/2` and `Delta(1) >= ell^2/2`, the adversary picks
//! `lambda = ell/k` to minimise the larger of the two bounds.

use std::f64::consts::TAU;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::interval::round_up;

/// A trigonometric polynomial `sum a_r cos(2 pi r t) + sum b_r sin(2 pi r t)`
/// with its region-wise lower bounds.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TestFunction1D {
    /// `a_r` for `r = 0, 1, 2, ...`.
    pub cos: Vec<f64>,
    /// `b_r` for `r = 0, 1, 2, ...`; `b_0` is ignored.
    pub sin: Vec<f64>,
    /// Lower bound on `[0, 1/2)`.
    pub alpha1: f64,
    /// Lower bound on `[1/2, 1)`.
    pub alpha2: f64,
}

impl TestFunction1D {
    /// `phi(t) = cos(4 pi t)/2 + sin(2 pi t)`, bounded below by `1/2` and `-3/2`.
    pub fn moser() -> Self {
        Self {
            cos: vec![0.0, 0.0, 0.5],
            sin: vec![0.0, 1.0],
            alpha1: 0.5,
            alpha2: -1.5,
        }
    }

    pub fn eval(&self, t: f64) -> f64 {
        let c: f64 = self
            .cos
            .iter()
            .enumerate()
            .map(|(r, a)| a * (TAU * r as f64 * t).cos())
            .sum();
        let s: f64 = self
            .sin
            .iter()
            .enumerate()
            .skip(1)
            .map(|(r, b)| b * (TAU * r as f64 * t).sin())
            .sum();
        c + s
    }

    /// `C = sum over n | r of |a_r|`, the cosine mass aliased onto frequency 0 mod `n`.
    pub fn aliased_cos_mass(&self, n: usize) -> f64 {
        self.cos
            .iter()
            .enumerate()
            .filter(|(r, _)| n > 0 && r % n == 0)
            .map(|(_, a)| a.abs())
            .sum()
    }

    /// `S = sum_{r >= 1} (|a_r| + |b_r|)`.
    pub fn nonzero_frequency_mass(&self) -> f64 {
        let a: f64 = self.cos.iter().skip(1).map(|a| a.abs()).sum();
        let b: f64 = self.sin.iter().skip(1).map(|b| b.abs()).sum();
        a + b
    }

    /// Multiplies coefficients and bounds by `c > 0`.
    pub fn scaled(&self, c: f64) -> Self {
        Self {
            cos: self.cos.iter().map(|a| a * c).collect(),
            sin: self.sin.iter().map(|b| b * c).collect(),
            alpha1: self.alpha1 * c,
            alpha2: self.alpha2 * c,
        }
    }
}

/// Moser's function, reduced mod 1.
pub fn moser_phi(t: f64) -> f64 {
    let t = t.rem_euclid(1.0);
    0.5 * (2.0 * TAU * t).cos() + (TAU * t).sin()
}

/// The adversarial balance point of the one-variable argument.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Balance {
    /// Minimising `lambda = ell / k`.
    pub lambda: f64,
    /// `c` in `Delta(1) >= c k^2 - k/2`.
    pub c: f64,
    /// `1/2 - c`, the coefficient of `k^2` in the bound on `n`.
    pub coefficient: f64,
}

fn ternary_min(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    while hi - lo > 1e-12 {
        let m1 = lo + (hi - lo) / 3.0;
        let m2 = hi - (hi - lo) / 3.0;
        if f(m1) <= f(m2) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    0.5 * (lo + hi)
}

/// Minimises `max(lambda^2/2, ((alpha1 - (alpha1 - alpha2) lambda)_+ / S)^2 / 2)` over `[0, 1]`.
pub fn balance(f: &TestFunction1D) -> Result<Balance> {
    if f.alpha1 <= f.alpha2 {
        return Err(Error::NoSeparation {
            alpha1: f.alpha1,
            alpha2: f.alpha2,
        });
    }
    let s = f.nonzero_frequency_mass();
    if s <= 0.0 {
        return Err(Error::InvalidArgument(
            "test function has no nonzero frequencies".into(),
        ));
    }
    let gap = f.alpha1 - f.alpha2;
    let objective = |lambda: f64| {
        let analytic = ((f.alpha1 - gap * lambda).max(0.0) / s).powi(2) / 2.0;
        let combinatorial = lambda * lambda / 2.0;
        analytic.max(combinatorial)
    };
    let lambda = ternary_min(objective, 0.0, 1.0);
    let c = objective(lambda);
    Ok(Balance {
        lambda,
        c,
        coefficient: 0.5 - c,
    })
}

/// The coefficient `1/2 - c_f` of `k^2` in `n <= (1/2 - c_f) k^2 + k`.
pub fn one_var_bound(f: &TestFunction1D) -> Result<f64> {
    balance(f).map(|b| b.coefficient)
}

/// Moser's constant: `(c, coefficient)` with `c = 1/98`.
pub fn moser_constant() -> (f64, f64) {
    let b = balance(&TestFunction1D::moser()).expect("Moser's function separates");
    (b.c, b.coefficient)
}

/// The coefficient as reported: rounded up at the fourth decimal (`0.4898`).
pub fn moser_reported_coefficient() -> f64 {
    round_up(moser_constant().1, 4)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_values() {
        assert!((moser_phi(0.0) - 0.5).abs() < 1e-15);
        assert!((moser_phi(0.25) - 0.5).abs() < 1e-15);
        assert!((moser_phi(0.75) + 1.5).abs() < 1e-15);
        assert!((moser_phi(1.75) + 1.5).abs() < 1e-12);
        let f = TestFunction1D::moser();
        for i in 0..100 {
            let t = i as f64 / 100.0;
            assert!((f.eval(t) - moser_phi(t)).abs() < 1e-14);
        }
    }

    #[test]
    fn moser_bound_is_one_over_98() {
        let (c, coef) = moser_constant();
        assert!((c - 1.0 / 98.0).abs() < 1e-12);
        assert!((coef - (0.5 - 1.0 / 98.0)).abs() < 1e-12);
        assert!(coef <= 0.4898);
        assert_eq!(moser_reported_coefficient(), 0.4898);
        let b = balance(&TestFunction1D::moser()).unwrap();
        assert!((b.lambda - 1.0 / 7.0).abs() < 1e-9);
        assert_eq!(TestFunction1D::moser().aliased_cos_mass(3), 0.0);
        assert_eq!(TestFunction1D::moser().aliased_cos_mass(2), 0.5);
    }

    #[test]
    fn balance_point_by_bisection() {
        // (1 - 4 l)^2 / 18 = l^2 / 2 on [0, 1/4]
        let g = |l: f64| (1.0 - 4.0 * l).powi(2) / 18.0 - l * l / 2.0;
        let (mut lo, mut hi) = (0.0, 0.25);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if g(mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        assert!((lo - 1.0 / 7.0).abs() < 1e-12);
        // coarse grid agrees with the ternary search
        let grid_min = (0..=100_000)
            .map(|i| {
                let l = i as f64 / 100_000.0;
                ((1.0 - 4.0 * l).max(0.0).powi(2) / 18.0).max(l * l / 2.0)
            })
            .fold(f64::INFINITY, f64::min);
        assert!((grid_min - 1.0 / 98.0).abs() < 1e-5);
    }

    #[test]
    fn degenerate_and_scaled() {
        let mut f = TestFunction1D::moser();
        f.alpha1 = 0.0;
        assert!((one_var_bound(&f).unwrap() - 0.5).abs() < 1e-12);

        let base = one_var_bound(&TestFunction1D::moser()).unwrap();
        for c in [2.0, 0.3, 17.0] {
            let scaled = one_var_bound(&TestFunction1D::moser().scaled(c)).unwrap();
            assert!((scaled - base).abs() < 1e-12, "c={c}");
        }

        let mut g = TestFunction1D::moser();
        g.alpha2 = 0.5;
        assert!(matches!(one_var_bound(&g), Err(Error::NoSeparation { .. })));
    }
}
