//! Certified enclosures of the two lattice constants at growing truncation radii.
//!
//! `cargo run --release --example constants`

use std::time::Instant;

use finite_bases::fourier2d::{c_axial, c_main};

fn main() {
    for n in [500, 5_000, 50_000] {
        let t = Instant::now();
        let c = c_axial(n);
        println!(
            "C_axial({n:6}) in [{:.8}, {:.8}]  width {:.1e}  {:.2?}",
            c.lo,
            c.hi,
            c.width(),
            t.elapsed()
        );
    }
    for n in [100, 500, 2_000, 4_000] {
        let t = Instant::now();
        let c = c_main(n);
        println!(
            "C_main({n:5})  in [{:.8}, {:.8}]  width {:.1e}  {:.2?}",
            c.lo,
            c.hi,
            c.width(),
            t.elapsed()
        );
    }
}
