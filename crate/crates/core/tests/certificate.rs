use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use finite_bases::bound_2d::{certify, rho_from, rho_variation_bound, xi_root, Route};
use finite_bases::interval::ConstantInterval;

fn reference() -> (ConstantInterval, ConstantInterval) {
    (
        ConstantInterval::from_bounds(2.90278, 2.90289),
        ConstantInterval::from_bounds(4.75145, 4.76146),
    )
}

#[test]
fn rho_is_decreasing() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10_000 {
        let k = rng.gen_range(3.0..50.0);
        let t = rng.gen_range(2.0..20.0);
        let dk = rng.gen_range(1e-6..1.0);
        let dt = rng.gen_range(1e-6..1.0);
        let r = rho_from(k, t).unwrap();
        assert!(rho_from(k + dk, t).unwrap() < r);
        assert!(rho_from(k, t + dt).unwrap() < r);
    }
}

#[test]
fn derivative_bounds_and_root_ceiling() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let h = 1e-6;
    for _ in 0..1000 {
        let k = rng.gen_range(3.0 + h..50.0);
        let t = rng.gen_range(2.0 + h..20.0);
        let dk = (xi_root(k + h, t) - xi_root(k - h, t)) / (2.0 * h);
        let dt = (xi_root(k, t + h) - xi_root(k, t - h)) / (2.0 * h);
        assert!(dk.abs() <= 1.0 / 36.0 + 1e-4, "({k},{t})");
        assert!(dt.abs() <= 1.0 / 12.0 + 1e-4, "({k},{t})");
        assert!(xi_root(k, t) <= 1.0 / 3.0);
    }
}

#[test]
fn variation_bound_holds() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..10_000 {
        let (k, k0) = (rng.gen_range(3.0..30.0), rng.gen_range(3.0..30.0));
        let (t, t0) = (rng.gen_range(2.0..10.0), rng.gen_range(2.0..10.0));
        let lhs = (rho_from(k, t).unwrap() - rho_from(k0, t0).unwrap()).abs();
        assert!(lhs <= rho_variation_bound(k, k0, t, t0).unwrap() + 1e-15);
    }
}

#[test]
fn routes_agree_at_reference_intervals() {
    let (ax, mn) = reference();
    let corner = certify(&ax, &mn, Route::Corner).unwrap();
    let lemma = certify(&ax, &mn, Route::Lemma).unwrap();
    assert!((corner.rho_lower - lemma.rho_lower).abs() < 2e-4);
    assert!(corner.rho_lower >= 0.0422 && lemma.rho_lower >= 0.0422);
    assert!(lemma.rho_anchor.unwrap() > 0.04240);
    assert_eq!(lemma.coefficient_upper, 0.4789);
    assert!(corner.xi.lo <= corner.xi.hi);
}

#[test]
fn json_is_stable() {
    let (ax, mn) = reference();
    let cert = certify(&ax, &mn, Route::Corner).unwrap();
    let a = cert.to_json();
    assert_eq!(a, certify(&ax, &mn, Route::Corner).unwrap().to_json());
    let keys: Vec<&str> = a
        .lines()
        .filter(|l| l.starts_with("  \""))
        .map(|l| l.trim().split('"').nth(1).unwrap())
        .collect();
    assert_eq!(
        keys,
        [
            "alpha1",
            "alpha2",
            "c_axial",
            "c_main",
            "kappa",
            "tau",
            "rho_lower",
            "coefficient_upper",
            "route"
        ]
    );
    // 17 significant digits
    assert!(a.contains("\"alpha1\": 1.0000000000000000e0"));
}
