//! Closed forms of the boundary traces used in the decay estimates, for the
//! certified instance `F = -40 (1-t1)(1-t2)(1 - (2-t1-t2)^6)`.
//!
//! `g_i` are traces on the anti-diagonal `t2 = 1 - t`, `h_i` on the edges
//! `t2 = 1` or `t1 = 1`. They are cross-checked against finite differences
//! of [`super::TestFunction2D::f`] in the tests.

/// `J1(t1) = integral of F(t1, t2) dt2 over [1 - t1, 1]`; its transform gives the axial coefficients.
pub fn j1(t1: f64) -> f64 {
    let u = 1.0 - t1;
    -15.0 * u + 240.0 / 7.0 * u.powi(2) - 20.0 * u.powi(3) + 5.0 / 7.0 * u.powi(9)
}

/// `(d2 F)(t, 1 - t)`.
pub fn g1(t: f64) -> f64 {
    -240.0 * t * (1.0 - t)
}

/// `(d1 d2 F)(t, 1 - t)`.
pub fn g2(t: f64) -> f64 {
    240.0 * (1.0 + 5.0 * t * (1.0 - t))
}

/// `(d1 d2 F)(t, 1)`.
pub fn h2(t: f64) -> f64 {
    -40.0 + 280.0 * (1.0 - t).powi(6)
}

/// `(d1 d2^2 F)(t, 1 - t)`.
pub fn g3(t: f64) -> f64 {
    240.0 * (-12.0 - 15.0 * t + 20.0 * t * t)
}

/// `(d1 d2^2 F)(1, t)`.
pub fn h3(t: f64) -> f64 {
    -1680.0 * (1.0 - t).powi(5)
}

/// `(d1^2 d2^2 F)(t1, t2)`.
pub fn d11_22(t1: f64, t2: f64) -> f64 {
    14400.0
        * (2.0 - t1 - t2).powi(2)
        * (5.0 + t1 * t1 + t2 * t2 - 5.0 * t1 - 5.0 * t2 + 3.0 * t1 * t2)
}

/// `(d1 d2 F)(t1, t2)` in the factored form used for the diagonal estimate.
pub fn d1_2(t1: f64, t2: f64) -> f64 {
    let w = 2.0 - t1 - t2;
    1200.0 * (1.0 - t1) * (1.0 - t2) * w.powi(4) + 280.0 * w.powi(6) - 40.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fourier2d::quadrature::gauss_legendre;
    use crate::fourier2d::TestFunction2D;

    // 8th-order central stencils: exact on polynomials of degree <= 8, and F
    // has degree 7 in each variable, so only rounding remains.
    const D1: [f64; 9] = [
        1.0 / 280.0,
        -4.0 / 105.0,
        1.0 / 5.0,
        -4.0 / 5.0,
        0.0,
        4.0 / 5.0,
        -1.0 / 5.0,
        4.0 / 105.0,
        -1.0 / 280.0,
    ];
    const D2: [f64; 9] = [
        -1.0 / 560.0,
        8.0 / 315.0,
        -1.0 / 5.0,
        8.0 / 5.0,
        -205.0 / 72.0,
        8.0 / 5.0,
        -1.0 / 5.0,
        8.0 / 315.0,
        -1.0 / 560.0,
    ];
    const H: f64 = 0.05;

    fn stencil(w: &[f64; 9], order: i32, g: impl Fn(f64) -> f64, x: f64) -> f64 {
        w.iter()
            .enumerate()
            .map(|(i, c)| c * g(x + (i as f64 - 4.0) * H))
            .sum::<f64>()
            / H.powi(order)
    }

    fn f(t1: f64, t2: f64) -> f64 {
        TestFunction2D::certified().f(t1, t2)
    }

    fn d2(t1: f64, t2: f64) -> f64 {
        stencil(&D1, 1, |y| f(t1, y), t2)
    }

    fn d12(t1: f64, t2: f64) -> f64 {
        stencil(&D1, 1, |x| d2(x, t2), t1)
    }

    fn d122(t1: f64, t2: f64) -> f64 {
        stencil(&D1, 1, |x| stencil(&D2, 2, |y| f(x, y), t2), t1)
    }

    fn d1122(t1: f64, t2: f64) -> f64 {
        stencil(&D2, 2, |x| stencil(&D2, 2, |y| f(x, y), t2), t1)
    }

    fn samples() -> impl Iterator<Item = f64> {
        (0..=40).map(|i| i as f64 / 40.0)
    }

    #[test]
    fn traces_match_finite_differences() {
        for t in samples() {
            assert!((g1(t) - d2(t, 1.0 - t)).abs() < 1e-6, "g1 at {t}");
            assert!((g2(t) - d12(t, 1.0 - t)).abs() < 1e-6, "g2 at {t}");
            assert!((h2(t) - d12(t, 1.0)).abs() < 1e-6, "h2 at {t}");
            assert!((g3(t) - d122(t, 1.0 - t)).abs() < 1e-6, "g3 at {t}");
            assert!((h3(t) - d122(1.0, t)).abs() < 1e-6, "h3 at {t}");
            for s in [0.0, 0.3, 0.75, 1.0] {
                assert!((d1_2(t, s) - d12(t, s)).abs() < 1e-6);
                assert!((d11_22(t, s) - d1122(t, s)).abs() < 1e-5);
            }
        }
    }

    #[test]
    fn j1_matches_integration() {
        let (x, w) = gauss_legendre(8);
        for i in 0..100 {
            let t1 = (i as f64 + 0.5) / 100.0;
            let (a, b) = (1.0 - t1, 1.0);
            let integral: f64 = x
                .iter()
                .zip(&w)
                .map(|(xi, wi)| wi * 0.5 * (b - a) * f(t1, 0.5 * (b - a) * xi + 0.5 * (a + b)))
                .sum();
            assert!((integral - j1(t1)).abs() < 1e-10, "t1={t1}");
        }
        assert!(j1(0.0).abs() < 1e-15);
        assert!(j1(1.0).abs() < 1e-15);
    }

    #[test]
    fn axial_decay_inputs() {
        // J1'(0) - J1'(1) = 15
        let dj = |t: f64| stencil(&D1, 1, j1, t);
        assert!(((dj(0.0) - dj(1.0)).abs() - 15.0).abs() < 1e-6);
        // the diagonal estimate uses |g1^(0)| = 40
        let (x, w) = gauss_legendre(8);
        let mean_g1: f64 = x
            .iter()
            .zip(&w)
            .map(|(xi, wi)| wi * 0.5 * g1(0.5 * xi + 0.5))
            .sum();
        assert!((mean_g1.abs() - 40.0).abs() < 1e-10);
    }
}
