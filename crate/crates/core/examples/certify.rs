//! End-to-end two-variable certificate on both routes.
//!
//! `cargo run --release --example certify` (full scale, a few seconds per core)
//! `cargo run --release --example certify -- --fast`

use finite_bases::bound_2d::{
    certify, Route, FAST_N_AXIAL, FAST_N_MAIN, FULL_N_AXIAL, FULL_N_MAIN,
};
use finite_bases::fourier2d::{c_axial, c_main};

fn main() -> finite_bases::Result<()> {
    let fast = std::env::args().any(|a| a == "--fast");
    let (na, nm) = if fast {
        (FAST_N_AXIAL, FAST_N_MAIN)
    } else {
        (FULL_N_AXIAL, FULL_N_MAIN)
    };
    let (ax, mn) = (c_axial(na), c_main(nm));
    for route in [Route::Corner, Route::Lemma] {
        let cert = certify(&ax, &mn, route)?;
        println!(
            "{route:6}: rho >= {:.6}  =>  n(2,k) <= {} k^2 + k",
            cert.rho_lower, cert.coefficient_upper
        );
    }
    println!("{}", certify(&ax, &mn, Route::Corner)?.to_json());
    Ok(())
}
