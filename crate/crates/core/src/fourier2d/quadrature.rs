//! Direct numerical integration of Fourier coefficients, used as an oracle
//! for the closed forms.
//!
//! `phi` is a polynomial on each closed triangle, so the unit square is split
//! along `t1 + t2 = 1` and each triangle is collapsed onto the unit square:
//!
//! * lower: `t1 = u`, `t2 = (1 - u) v`, Jacobian `1 - u`;
//! * upper: `t1 = u`, `t2 = 1 - u + u v`, Jacobian `u`.
//!
//! Both are integrated with composite 4-point Gauss-Legendre over `m/4`
//! panels per axis. For fixed `(r1, r2)` the error decays at least like
//! `m^-4` (in practice like `m^-8`).

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rayon::prelude::*;

use super::TestFunction2D;
use crate::error::{Error, Result};

pub const DEFAULT_QUADRATURE_GRID: usize = 1024;
pub const MIN_QUADRATURE_GRID: usize = 256;

/// Gauss-Legendre nodes and weights on `[-1, 1]`, by Newton iteration on `P_n`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for j in 2..=n {
                let p2 = ((2 * j - 1) as f64 * x * p1 - (j - 1) as f64 * p0) / j as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        nodes[n - 1 - i] = x;
        weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

/// Composite Gauss-Legendre rule on `[0, 1]` with `m` nodes (4 per panel).
fn composite_rule(m: usize) -> Vec<(f64, f64)> {
    let (x, w) = gauss_legendre(4);
    let panels = m.div_ceil(4);
    let h = 1.0 / panels as f64;
    (0..panels)
        .flat_map(|p| {
            let a = p as f64 * h;
            x.iter()
                .zip(&w)
                .map(move |(xi, wi)| (a + 0.5 * h * (xi + 1.0), 0.5 * h * wi))
                .collect::<Vec<_>>()
        })
        .collect()
}

#[inline]
fn cis_neg(freq: i64, t: f64) -> Complex64 {
    let (s, c) = (TAU * freq as f64 * t).sin_cos();
    Complex64::new(c, -s)
}

/// `integral over [0,1)^2 of phi(t1,t2) exp(-2 pi i (r1 t1 + r2 t2))` by quadrature on an `m`-node grid.
pub fn coeff_quadrature(f: &TestFunction2D, r1: i64, r2: i64, m: usize) -> Result<Complex64> {
    if m < MIN_QUADRATURE_GRID {
        return Err(Error::GridTooSmall(m));
    }
    let rule = composite_rule(m);
    let rows: Vec<Complex64> = rule
        .par_iter()
        .map(|&(u, wu)| {
            let mut lower = Complex64::new(0.0, 0.0);
            let mut upper = Complex64::new(0.0, 0.0);
            for &(v, wv) in &rule {
                let t2 = (1.0 - u) * v;
                lower += cis_neg(r2, t2) * wv;

                let t2 = 1.0 - u + u * v;
                upper += cis_neg(r2, t2) * (wv * (1.0 + f.f(u, t2)));
            }
            cis_neg(r1, u) * (lower * (1.0 - u) + upper * u) * wu
        })
        .collect();
    // fixed-order reduction keeps the result independent of the worker count
    Ok(rows
        .into_iter()
        .fold(Complex64::new(0.0, 0.0), |a, b| a + b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fourier2d::coeff;

    #[test]
    fn legendre_rules_integrate_polynomials() {
        for n in [1, 2, 4, 8] {
            let (x, w) = gauss_legendre(n);
            assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-14);
            let deg = 2 * n - 1;
            let exact = if deg % 2 == 0 {
                2.0 / (deg + 1) as f64
            } else {
                0.0
            };
            let got: f64 = x
                .iter()
                .zip(&w)
                .map(|(xi, wi)| wi * xi.powi(deg as i32))
                .sum();
            assert!((got - exact).abs() < 1e-14, "n={n}");
            let even: f64 = x
                .iter()
                .zip(&w)
                .map(|(xi, wi)| wi * xi.powi(2 * n as i32 - 2))
                .sum();
            assert!((even - 2.0 / (2 * n - 1) as f64).abs() < 1e-14, "n={n}");
        }
    }

    #[test]
    fn zero_mean() {
        let z = coeff_quadrature(&TestFunction2D::certified(), 0, 0, 512).unwrap();
        assert!(z.norm() < 1e-10, "{z}");
    }

    #[test]
    fn matches_closed_forms() {
        let f = TestFunction2D::certified();
        for (r1, r2) in [(1, 1), (2, 0), (0, 3), (3, 5), (-2, 4)] {
            let q = coeff_quadrature(&f, r1, r2, 1024).unwrap();
            assert!(
                (q - coeff(r1, r2)).norm() < 1e-8,
                "({r1},{r2}): {q} vs {}",
                coeff(r1, r2)
            );
        }
    }

    #[test]
    fn grid_too_small() {
        assert_eq!(
            coeff_quadrature(&TestFunction2D::certified(), 1, 1, 100),
            Err(Error::GridTooSmall(100))
        );
    }

    #[test]
    fn other_instances_use_quadrature() {
        let f = TestFunction2D {
            amplitude: 20.0,
            power: 4,
        };
        assert!(!f.is_certified());
        let z = f.coefficient(1, 2);
        let q = coeff_quadrature(&f, 1, 2, DEFAULT_QUADRATURE_GRID).unwrap();
        assert_eq!(z, q);
    }
}
