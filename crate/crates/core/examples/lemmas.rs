//! Numerical checks of the shell-sum tail bounds and the coefficient decay envelopes.
//!
//! `cargo run --release --example lemmas`

use finite_bases::fourier2d::{decay_envelope_check, shell_sum_bounds_check, Regime};

fn main() -> finite_bases::Result<()> {
    for n in [1, 10, 100] {
        let r = shell_sum_bounds_check(n, 4000)?;
        println!(
            "N = {n:3}: product tail {:.6} < {:.6}, mixed tail {:.6} < {:.6}",
            r.product_tail, r.product_bound, r.mixed_tail, r.mixed_bound
        );
    }
    let samples = [
        (Regime::Axial, (1..=200).map(|r| (r, 0)).collect::<Vec<_>>()),
        (Regime::Diagonal, (1..=200).map(|r| (-r, -r)).collect()),
        (Regime::General, (1..=200).map(|r| (r, 1 - 2 * r)).collect()),
    ];
    for (regime, sample) in samples {
        let rep = decay_envelope_check(regime, &sample)?;
        println!(
            "{regime:9}: {} pairs, max |coeff|/envelope = {:.4}",
            rep.checked, rep.max_ratio
        );
    }
    Ok(())
}
