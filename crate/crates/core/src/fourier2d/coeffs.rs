//! Closed-form Fourier coefficients of the certified test function.
//!
//! Convention: `phi^(r1, r2) = integral over [0,1)^2 of phi(t1,t2) exp(-2 pi i (r1 t1 + r2 t2))`.
//!
//! With `x = 1/(pi r)` and `y = 1/(pi s)`, every closed form is a polynomial
//! in `x` and `y`:
//!
//! * axis `(r, 0)` and `(0, r)`:
//!   `15/4 x^2 (1 - 6x^2 + 45x^4 - 135x^6) - i 60/7 x^3 (1 + 63/8 x^2 - 315/8 x^4 + 945/16 x^6)`
//! * diagonal `(r, r)`:
//!   `10 x^2 (1 - 21x^2 + 315/2 x^4 - 945/2 x^6) + i 55 x^3 (1 - 126/11 x^2 + 630/11 x^4 - 945/11 x^6)`
//! * general `r != s`, both nonzero: `(P(x, y) + i Q(x, y)) / (pi^2 (r - s)^2)`
//!   with the term tables [`GENERAL_RE`] and [`GENERAL_IM`].
//!
//! Every table entry, signs included, is pinned by comparison against
//! [`super::coeff_quadrature`], which agrees to about 1e-15.
//!
//! Each evaluation also returns the absolute mass of its summands, which
//! bounds the rounding error of the evaluation.

use std::f64::consts::PI;

use num_complex::Complex64;

/// `(coefficient, power of x, power of y)` for the real part of the general formula.
pub const GENERAL_RE: [(f64, usize, usize); 15] = [
    (-1575.0 / 4.0, 6, 0),
    (525.0 / 4.0, 4, 0),
    (-35.0 / 2.0, 2, 0),
    (-1575.0 / 4.0, 0, 6),
    (225.0 / 2.0, 1, 5),
    (525.0 / 4.0, 0, 4),
    (225.0 / 2.0, 2, 4),
    (225.0 / 2.0, 3, 3),
    (-75.0 / 2.0, 1, 3),
    (-35.0 / 2.0, 0, 2),
    (225.0 / 2.0, 4, 2),
    (-75.0 / 2.0, 2, 2),
    (225.0 / 2.0, 5, 1),
    (-75.0 / 2.0, 3, 1),
    (5.0, 1, 1),
];

/// Imaginary part of the general formula, same layout as [`GENERAL_RE`].
pub const GENERAL_IM: [(f64, usize, usize); 18] = [
    (-1575.0 / 4.0, 7, 0),
    (525.0 / 2.0, 5, 0),
    (-105.0 / 2.0, 3, 0),
    (-1575.0 / 4.0, 0, 7),
    (225.0 / 2.0, 1, 6),
    (525.0 / 2.0, 0, 5),
    (225.0 / 2.0, 2, 5),
    (225.0 / 2.0, 3, 4),
    (-75.0, 1, 4),
    (-105.0 / 2.0, 0, 3),
    (225.0 / 2.0, 4, 3),
    (-75.0, 2, 3),
    (225.0 / 2.0, 5, 2),
    (-75.0, 3, 2),
    (15.0, 1, 2),
    (225.0 / 2.0, 6, 1),
    (-75.0, 4, 1),
    (15.0, 2, 1),
];

#[inline]
fn powers(x: f64) -> [f64; 8] {
    let mut p = [1.0; 8];
    for i in 1..8 {
        p[i] = p[i - 1] * x;
    }
    p
}

/// Evaluates `sum c x^i y^j` and the sum of absolute summands.
#[inline]
fn eval_table(table: &[(f64, usize, usize)], xp: &[f64; 8], yp: &[f64; 8]) -> (f64, f64) {
    let mut value = 0.0;
    let mut mass = 0.0;
    for &(c, i, j) in table {
        let term = c * xp[i] * yp[j];
        value += term;
        mass += term.abs();
    }
    (value, mass)
}

/// `phi^(r, 0) = phi^(0, r)`, `r != 0`.
pub fn axial(r: i64) -> (Complex64, f64) {
    let x = 1.0 / (PI * r as f64);
    let x2 = x * x;
    let re_terms = [1.0, -6.0 * x2, 45.0 * x2 * x2, -135.0 * x2 * x2 * x2];
    let im_terms = [
        1.0,
        63.0 / 8.0 * x2,
        -315.0 / 8.0 * x2 * x2,
        945.0 / 16.0 * x2 * x2 * x2,
    ];
    let re_scale = 15.0 / 4.0 * x2;
    let im_scale = -60.0 / 7.0 * x2 * x;
    combine(re_scale, &re_terms, im_scale, &im_terms)
}

/// `phi^(r, r)`, `r != 0`.
pub fn diagonal(r: i64) -> (Complex64, f64) {
    let x = 1.0 / (PI * r as f64);
    let x2 = x * x;
    let re_terms = [
        1.0,
        -21.0 * x2,
        315.0 / 2.0 * x2 * x2,
        -945.0 / 2.0 * x2 * x2 * x2,
    ];
    let im_terms = [
        1.0,
        -126.0 / 11.0 * x2,
        630.0 / 11.0 * x2 * x2,
        -945.0 / 11.0 * x2 * x2 * x2,
    ];
    let re_scale = 10.0 * x2;
    let im_scale = 55.0 * x2 * x;
    combine(re_scale, &re_terms, im_scale, &im_terms)
}

fn combine(
    re_scale: f64,
    re_terms: &[f64; 4],
    im_scale: f64,
    im_terms: &[f64; 4],
) -> (Complex64, f64) {
    let re: f64 = re_terms.iter().sum::<f64>() * re_scale;
    let im: f64 = im_terms.iter().sum::<f64>() * im_scale;
    let mass = re_scale.abs() * re_terms.iter().map(|t| t.abs()).sum::<f64>()
        + im_scale.abs() * im_terms.iter().map(|t| t.abs()).sum::<f64>();
    (Complex64::new(re, im), mass)
}

/// `phi^(r, s)` for `r != s`, both nonzero.
pub fn general(r: i64, s: i64) -> (Complex64, f64) {
    let xp = powers(1.0 / (PI * r as f64));
    let yp = powers(1.0 / (PI * s as f64));
    let d = (r - s) as f64;
    let scale = 1.0 / (PI * PI * d * d);
    let (re, re_mass) = eval_table(&GENERAL_RE, &xp, &yp);
    let (im, im_mass) = eval_table(&GENERAL_IM, &xp, &yp);
    (
        Complex64::new(re * scale, im * scale),
        (re_mass + im_mass) * scale,
    )
}

/// Coefficient and summand mass, dispatched on the index pattern.
pub fn coeff_with_mass(r1: i64, r2: i64) -> (Complex64, f64) {
    match (r1, r2) {
        (0, 0) => (Complex64::new(0.0, 0.0), 0.0),
        (r, 0) | (0, r) => axial(r),
        (r, s) if r == s => diagonal(r),
        (r, s) => general(r, s),
    }
}

/// `phi^(r1, r2)` for the certified instance.
pub fn coeff(r1: i64, r2: i64) -> Complex64 {
    coeff_with_mass(r1, r2).0
}
