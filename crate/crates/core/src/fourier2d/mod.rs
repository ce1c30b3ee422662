//! The two-variable test function
//!
//! ```text
//! phi(t1, t2) = 1                                                  if t1 + t2 < 1
//!             = 1 - c (1 - t1)(1 - t2)(1 - (2 - t1 - t2)^p)         if t1 + t2 >= 1
//! ```
//!
//! on `[0,1)^2`, with `(c, p) = (40, 6)` for the certified instance. This module
//! holds pointwise evaluation, the lower bound `alpha2` on the upper triangle,
//! the closed-form Fourier coefficients, a quadrature oracle for them, and the
//! certified truncated sums `C_axial(N)` and `C_main(N)`.

use std::io::{self, Write};

use num_complex::Complex64;
use serde::Serialize;

pub mod boundary;
pub mod coeffs;
pub mod lemmas;
pub mod quadrature;
pub mod sums;

pub use coeffs::{coeff, coeff_with_mass};
pub use lemmas::{
    decay_envelope_check, shell_sum_bounds_check, EnvelopeReport, Regime, ShellReport,
};
pub use quadrature::{coeff_quadrature, DEFAULT_QUADRATURE_GRID};
pub use sums::{c_axial, c_main};

/// The `(c, p)` family of test functions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TestFunction2D {
    /// Amplitude `c`.
    pub amplitude: f64,
    /// Boundary power `p`.
    pub power: i32,
}

impl Default for TestFunction2D {
    fn default() -> Self {
        Self::certified()
    }
}

impl TestFunction2D {
    pub const ALPHA1: f64 = 1.0;

    /// The certified instance `(40, 6)`.
    pub fn certified() -> Self {
        Self {
            amplitude: 40.0,
            power: 6,
        }
    }

    /// Closed-form coefficients exist only for `(40, 6)`; every other
    /// instance goes through quadrature and carries no certificate.
    pub fn is_certified(&self) -> bool {
        self.amplitude == 40.0 && self.power == 6
    }

    /// The upper-triangle branch minus one, as a polynomial on the whole plane.
    pub fn f(&self, t1: f64, t2: f64) -> f64 {
        -self.amplitude * (1.0 - t1) * (1.0 - t2) * (1.0 - (2.0 - t1 - t2).powi(self.power))
    }

    /// `phi(t1, t2)`, with both arguments reduced mod 1.
    pub fn phi(&self, t1: f64, t2: f64) -> f64 {
        let t1 = t1.rem_euclid(1.0);
        let t2 = t2.rem_euclid(1.0);
        if t1 + t2 < 1.0 {
            1.0
        } else {
            1.0 + self.f(t1, t2)
        }
    }

    /// Fourier coefficient: closed form for the certified instance, quadrature otherwise.
    pub fn coefficient(&self, r1: i64, r2: i64) -> Complex64 {
        if self.is_certified() {
            coeff(r1, r2)
        } else {
            coeff_quadrature(self, r1, r2, DEFAULT_QUADRATURE_GRID)
                .expect("default grid is large enough")
        }
    }
}

/// `phi` for the certified instance.
pub fn phi(t1: f64, t2: f64) -> f64 {
    TestFunction2D::certified().phi(t1, t2)
}

/// `alpha2 = 1 - 15 / 2^(5/3)`, the minimum of `phi` on the upper triangle.
///
/// On the diagonal `t1 = t2 = 1 - u` the branch is `1 - 40 u^2 (1 - 64 u^6)`,
/// minimised at `u^6 = 1/256`.
pub fn alpha2_exact() -> f64 {
    1.0 - 15.0 * 2f64.powf(-5.0 / 3.0)
}

/// Numerical minimisation of `phi` over the upper triangle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Alpha2Check {
    pub grid: usize,
    /// Minimum over the uniform grid points in the triangle.
    pub grid_min: f64,
    pub grid_argmin: (f64, f64),
    /// Minimum after local refinement from the grid argmin.
    pub refined_min: f64,
    pub refined_at: (f64, f64),
}

impl Alpha2Check {
    /// `|refined_min - alpha2_exact()|`.
    pub fn deviation(&self) -> f64 {
        (self.refined_min - alpha2_exact()).abs()
    }

    /// No sampled value may undercut the exact minimum.
    pub fn grid_consistent(&self) -> bool {
        self.grid_min >= alpha2_exact() - 1e-12
    }
}

/// Grid scan of the upper triangle followed by a local compass search.
pub fn alpha2_numeric(f: &TestFunction2D, grid: usize) -> Alpha2Check {
    use rayon::prelude::*;
    let h = 1.0 / grid as f64;
    let (grid_min, grid_argmin) = (0..grid)
        .into_par_iter()
        .map(|i| {
            let t1 = i as f64 * h;
            let mut best = (f64::INFINITY, (t1, 0.0));
            // j >= grid - i keeps t1 + t2 >= 1 in exact index arithmetic
            for j in grid.saturating_sub(i)..grid {
                let t2 = j as f64 * h;
                let v = 1.0 + f.f(t1, t2);
                if v < best.0 {
                    best = (v, (t1, t2));
                }
            }
            best
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(
            (f64::INFINITY, (0.0, 0.0)),
            |a, b| if b.0 < a.0 { b } else { a },
        );

    // compass search from the grid argmin, kept inside the closed triangle
    let value = |(a, b): (f64, f64)| 1.0 + f.f(a, b);
    let inside =
        |(a, b): (f64, f64)| (0.0..=1.0).contains(&a) && (0.0..=1.0).contains(&b) && a + b >= 1.0;
    let mut p = grid_argmin;
    let mut best = value(p);
    let mut step = h;
    while step > 1e-13 {
        let mut moved = false;
        for (da, db) in [
            (1.0, 0.0),
            (-1.0, 0.0),
            (0.0, 1.0),
            (0.0, -1.0),
            (1.0, 1.0),
            (-1.0, -1.0),
        ] {
            let q = (p.0 + da * step, p.1 + db * step);
            if inside(q) && value(q) < best {
                p = q;
                best = value(q);
                moved = true;
            }
        }
        if !moved {
            step *= 0.5;
        }
    }
    Alpha2Check {
        grid,
        grid_min,
        grid_argmin,
        refined_min: best,
        refined_at: p,
    }
}

/// Writes `phi` on the `m x m` grid `t1 = i/m, t2 = j/m` as CSV, row-major in `i`.
pub fn write_phi_grid<W: Write>(f: &TestFunction2D, m: usize, mut out: W) -> io::Result<()> {
    writeln!(out, "t1,t2,phi")?;
    for i in 0..m {
        let t1 = i as f64 / m as f64;
        for j in 0..m {
            let t2 = j as f64 / m as f64;
            writeln!(out, "{t1},{t2},{}", f.phi(t1, t2))?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_examples() {
        assert_eq!(phi(0.2, 0.3), 1.0);
        for i in 0..=100 {
            let t = i as f64 / 100.0;
            assert!((phi(1.0 - t, t) - 1.0).abs() < 1e-12);
        }
        assert!((phi(0.5, 0.5) - 1.0).abs() < 1e-15);
        let expected = 1.0 - 40.0 * 0.01 * (1.0 - 0.2f64.powi(6));
        assert!((phi(0.9, 0.9) - expected).abs() < 1e-12);
        assert!((phi(1.9, -0.1) - expected).abs() < 1e-12);
    }

    #[test]
    fn symmetric_and_vanishing_on_boundary() {
        let f = TestFunction2D::certified();
        for i in 0..50 {
            for j in 0..50 {
                let (a, b) = (i as f64 / 50.0, j as f64 / 50.0);
                assert!((f.phi(a, b) - f.phi(b, a)).abs() < 1e-12);
            }
            let t = i as f64 / 50.0;
            assert!(f.f(t, 1.0 - t).abs() < 1e-12);
            assert_eq!(f.f(1.0, t), 0.0);
            assert_eq!(f.f(t, 1.0), 0.0);
        }
    }

    #[test]
    fn alpha2_value() {
        assert!((alpha2_exact() + 3.72470).abs() < 1e-5);
        let check = alpha2_numeric(&TestFunction2D::certified(), 400);
        assert!(check.grid_min >= alpha2_exact() - 1e-12);
        assert!((check.refined_min - alpha2_exact()).abs() < 1e-9);
        let t = 1.0 - 2f64.powf(-4.0 / 3.0);
        assert!((check.refined_at.0 - t).abs() < 1e-5 && (check.refined_at.1 - t).abs() < 1e-5);
    }

    #[test]
    fn grid_dump_layout() {
        let mut buf = Vec::new();
        write_phi_grid(&TestFunction2D::certified(), 4, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "t1,t2,phi");
        assert_eq!(lines.len(), 17);
        assert_eq!(lines[1], "0,0,1");
        assert!(lines[2].starts_with("0,0.25,"));
    }
}
