mod common;

use common::*;
use grundy_core::oracle::{brute_force_small_pgw, oracle_grundy, oracle_grundy_orderings, oracle_has_kij, oracle_partial_grundy};
use grundy_core::witness::verify_pgw;
use proptest::prelude::*;

proptest! {
    #[test]
    fn partial_at_least_grundy(g in arb_graph(8)) {
        prop_assert!(oracle_partial_grundy(&g).unwrap() >= oracle_grundy(&g).unwrap());
    }

    #[test]
    fn two_grundy_formulations_agree(g in arb_graph(7)) {
        prop_assert_eq!(oracle_grundy(&g).unwrap(), oracle_grundy_orderings(&g).unwrap());
    }

    #[test]
    fn small_witness_iff_partial_grundy(g in arb_graph(7)) {
        let pg = oracle_partial_grundy(&g).unwrap();
        for k in 1..=g.n() {
            let w = brute_force_small_pgw(&g, k).unwrap();
            prop_assert_eq!(w.is_some(), pg >= k);
            if let Some(w) = w {
                prop_assert!(verify_pgw(&g, &w).is_some());
                for (i, x) in w.classes.iter().enumerate() {
                    prop_assert!(x.len() <= k - i);
                }
            }
        }
    }

    #[test]
    fn c4_detection_agrees(g in arb_graph(9)) {
        prop_assert_eq!(oracle_has_kij(&g, 2, 2).unwrap(), has_c4(&g));
    }
}
