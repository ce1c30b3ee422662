//! Closed-form Fourier coefficients of the two-variable test function next to quadrature.
//!
//! `cargo run --release --example coefficients`

use finite_bases::fourier2d::{coeff, coeff_quadrature, Regime, TestFunction2D};

fn main() -> finite_bases::Result<()> {
    let f = TestFunction2D::certified();
    for (a, b) in [(1, 0), (0, -2), (1, 1), (-3, -3), (1, 2), (4, -7)] {
        let z = coeff(a, b);
        let q = coeff_quadrature(&f, a, b, 1024)?;
        let regime = Regime::of(a, b).map_or("-", |r| r.name());
        println!(
            "({a:3},{b:3}) {regime:9} {:+.12e} {:+.12e}i   |diff| = {:.1e}",
            z.re,
            z.im,
            (z - q).norm()
        );
    }
    Ok(())
}
