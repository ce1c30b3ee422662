//! Rohrbach's construction against the exact optimum.
//!
//! `cargo run --release --example rohrbach`

use finite_bases::constructions::{lower_bound_coefficient, rohrbach_basis};
use finite_bases::search::{n2k_exact, DEFAULT_NODE_BUDGET};
use finite_bases::sumset::n2;

fn main() -> finite_bases::Result<()> {
    println!(
        "{:>4} {:>6} {:>8} {:>10}",
        "k", "n2(A)", "n(2,k)", "(r^2+1)/k^2"
    );
    for k in 4..=10 {
        let a = rohrbach_basis(k)?;
        let best = n2k_exact(k, DEFAULT_NODE_BUDGET)?.n_best;
        println!(
            "{k:>4} {:>6} {best:>8} {:>10}",
            n2(&a),
            lower_bound_coefficient(k)?
        );
    }
    for k in [50, 100, 200] {
        let a = rohrbach_basis(k)?;
        let c = lower_bound_coefficient(k)?;
        println!(
            "{k:>4} {:>6} {:>8} {:>10.5}",
            n2(&a),
            "-",
            *c.numer() as f64 / *c.denom() as f64
        );
    }
    Ok(())
}
