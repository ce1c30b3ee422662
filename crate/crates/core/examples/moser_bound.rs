//! Moser's one-variable bound and the balance point of the argument.
//!
//! `cargo run --release --example moser_bound`

use finite_bases::bound_1d::{balance, moser_phi, moser_reported_coefficient, TestFunction1D};

fn main() -> finite_bases::Result<()> {
    let f = TestFunction1D::moser();
    let lower_min = (0..500_000)
        .map(|i| moser_phi(i as f64 / 1e6))
        .fold(f64::INFINITY, f64::min);
    let upper_min = (500_000..1_000_000)
        .map(|i| moser_phi(i as f64 / 1e6))
        .fold(f64::INFINITY, f64::min);
    println!(
        "min phi on [0,1/2) = {lower_min:.6} (alpha1 = {})",
        f.alpha1
    );
    println!(
        "min phi on [1/2,1) = {upper_min:.6} (alpha2 = {})",
        f.alpha2
    );

    let b = balance(&f)?;
    println!("lambda = {:.12}  (1/7 = {:.12})", b.lambda, 1.0 / 7.0);
    println!("c      = {:.12}  (1/98 = {:.12})", b.c, 1.0 / 98.0);
    println!("n(2,k) <= {} k^2 + k", moser_reported_coefficient());
    Ok(())
}
