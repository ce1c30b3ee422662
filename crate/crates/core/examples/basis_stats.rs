//! Representation counts and exponential-sum statistics of one basis.
//!
//! `cargo run --release --example basis_stats -- 0,1,3,5,7,8`

use finite_bases::sumset::{exp_sum_stats, rep_profile, sumset2};
use finite_bases::Basis;

fn main() -> finite_bases::Result<()> {
    let arg = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "0,1,3,5,7,8".into());
    let a = Basis::parse(&arg)?;
    let p = rep_profile(&a)?;
    println!("A = {a}, k = {}, 2A = {:?}", a.k(), sumset2(&a));
    println!("n(2,A) = {}, Delta(1) = {}", p.n, p.delta_total);
    for (j, r) in &p.counts {
        println!("  r({j:2}) = {r}");
    }
    if p.n >= 2 {
        let s = exp_sum_stats(&a, p.n)?;
        println!(
            "M = {:.6}, mu = {:.6}, ell = {}, L = {}",
            s.m, s.mu, s.ell, s.pair_count_above
        );
        let k = a.k() as f64;
        println!(
            "Delta(1) = {} >= max({}, {:.4}, {})",
            p.delta_total,
            s.ell * (s.ell + 1) / 2,
            (s.m * s.m - k) / 2.0,
            s.pair_count_above as f64 / 2.0
        );
    }
    Ok(())
}
