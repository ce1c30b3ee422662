//! Writes the test function on a grid for plotting and reports its minimum.
//!
//! `cargo run --release --example phi_surface -- phi.csv 200`

use std::fs::File;
use std::io::BufWriter;

use finite_bases::fourier2d::{alpha2_exact, alpha2_numeric, write_phi_grid, TestFunction2D};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let path = args.next().unwrap_or_else(|| "phi.csv".into());
    let m: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(200);
    let f = TestFunction2D::certified();
    write_phi_grid(&f, m, BufWriter::new(File::create(&path)?))?;
    println!("wrote {} points to {path}", m * m);

    let check = alpha2_numeric(&f, 1000);
    println!(
        "min phi = {:.10} at ({:.6}, {:.6}); closed form {:.10}",
        check.refined_min,
        check.refined_at.0,
        check.refined_at.1,
        alpha2_exact()
    );
    Ok(())
}
