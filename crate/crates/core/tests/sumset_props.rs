use std::collections::BTreeSet;

use proptest::prelude::*;

use finite_bases::sumset::{exp_sum_stats, m2, n2, rep_profile, sumset2};
use finite_bases::Basis;

/// Bases containing {0, 1} with k <= 12 and elements <= 200.
fn bases() -> impl Strategy<Value = Basis> {
    prop::collection::btree_set(2u64..=200, 0..=10).prop_map(|rest| {
        let mut set: BTreeSet<u64> = rest;
        set.extend([0, 1]);
        Basis::new(set.into_iter().collect()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn covered_prefix_is_maximal(a in bases()) {
        let n = n2(&a);
        let sums: BTreeSet<u64> = sumset2(&a).into_iter().collect();
        prop_assert!((0..n).all(|j| sums.contains(&j)));
        prop_assert!(!sums.contains(&n));
    }

    #[test]
    fn counting_identity(a in bases()) {
        let p = rep_profile(&a).unwrap();
        let k = a.k() as u64;
        prop_assert_eq!((k * k + k) / 2, p.n + p.delta_total);
    }

    #[test]
    fn surplus_lower_bounds(a in bases()) {
        let p = rep_profile(&a).unwrap();
        let s = exp_sum_stats(&a, p.n).unwrap();
        let delta = p.delta_total as f64;
        let k = a.k() as f64;
        prop_assert!(p.delta_total >= s.ell * (s.ell + 1) / 2);
        prop_assert!(delta >= (s.m * s.m - k) / 2.0 - 1e-9);
        prop_assert!(2 * p.delta_total >= s.pair_count_above);
    }
}

proptest! {
    #[test]
    fn m2_is_translation_invariant(a in bases(), t in 1i64..1000) {
        let shifted = a.translate(t).unwrap();
        prop_assert_eq!(m2(&shifted), m2(&a));
        // shifting away from 0 leaves 0 uncovered
        prop_assert_eq!(n2(&shifted), 0);
        prop_assert!(n2(&a) >= 3);
    }
}

#[test]
fn representation_counts_match_brute_force() {
    let a = Basis::parse("0,1,3,7,12").unwrap();
    let p = rep_profile(&a).unwrap();
    let e = a.elements();
    for j in 0..=30 {
        let mut count = 0;
        for i in 0..e.len() {
            for l in i..e.len() {
                if e[i] + e[l] == j {
                    count += 1;
                }
            }
        }
        assert_eq!(p.r(j), count, "j = {j}");
    }
}
