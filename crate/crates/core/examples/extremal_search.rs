//! Exact `n(2,k)` with every extremal basis.
//!
//! `cargo run --release --example extremal_search -- 9`

use finite_bases::search::{n2k_exact, DEFAULT_NODE_BUDGET};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let kmax: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(8);
    for k in 1..=kmax {
        let r = n2k_exact(k, DEFAULT_NODE_BUDGET)?;
        let witnesses: Vec<String> = r.witnesses.iter().map(|w| w.to_string()).collect();
        println!(
            "k = {k:2}  n = {:3}  nodes = {:9}  {}{}",
            r.n_best,
            r.nodes_explored,
            witnesses.join(" "),
            if r.exhaustive { "" } else { "  (partial)" }
        );
    }
    Ok(())
}
