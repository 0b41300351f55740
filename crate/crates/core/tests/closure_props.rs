mod common;

use common::strategies::{ci, ideal, ideal_pair};
use common::{box_points, power_rows, rows, CiClosure, Gens, Member};
use monideal::closure::{closure_generators, closure_power, np_membership, pure_power_membership};
use monideal::formulas::alpha_limit_table;
use monideal::{IrredComponent, Monomial, MonomialIdeal, Ring};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn pure_power_tests_agree(exps in proptest::collection::vec(1..=8u32, 1..=3), a in proptest::collection::vec(0..=9u32, 3)) {
        let k = exps.len();
        let ring = Ring::indexed("x", k);
        let gens = exps.iter().enumerate().map(|(i, &e)| Monomial::pure_power(k, i, e)).collect();
        let i = MonomialIdeal::new(&ring, gens).unwrap();
        let m = Monomial::new(a[..k].to_vec());
        let comp = IrredComponent::from_ideal(&i).unwrap();
        prop_assert_eq!(np_membership(&i, &m).unwrap(), pure_power_membership(&comp, &m));
    }

    #[test]
    fn closure_contains_ideal_and_is_idempotent(i in ideal(3, 4, 3)) {
        let bar = closure_generators(&i).unwrap();
        prop_assert!(i.is_subset_of(&bar));
        prop_assert_eq!(&closure_generators(&bar).unwrap(), &bar);
        // box bound on the generators of the closure
        let max = i.max_exponents();
        for g in bar.gens() {
            prop_assert!(g.exps().iter().zip(&max).all(|(a, m)| a <= m), "{:?} escapes the box", g);
        }
    }

    #[test]
    fn product_of_closures_lies_in_closure_of_product((a, b) in ideal_pair(3, 3, 2)) {
        let lhs = closure_generators(&a).unwrap().product(&closure_generators(&b).unwrap()).unwrap();
        let rhs = closure_generators(&a.product(&b).unwrap()).unwrap();
        prop_assert!(lhs.is_subset_of(&rhs));
    }

    /// Whatever `f^k ∈ I^k` certifies for small `k` must be in the closure.
    #[test]
    fn closure_is_consistent_with_power_certificates(i in ideal(3, 3, 3), f in proptest::collection::vec(0..=4u32, 3)) {
        let k = i.ring().num_vars();
        let f = f[..k].to_vec();
        let inside = np_membership(&i, &Monomial::new(f.clone())).unwrap();
        for n in 1..=4u32 {
            let fk: Vec<u32> = f.iter().map(|&e| e * n).collect();
            if Gens(power_rows(&rows(&i), n)).contains(&fk) {
                prop_assert!(inside, "{:?}^{} lies in the {}-th power but not in the closure", f, n, n);
            }
        }
    }

    #[test]
    fn ci_closed_powers_match_direct_test(i in ci(3, 4, 3), n in 1..=2u32) {
        let bar = closure_power(&i, n).unwrap();
        let c = CiClosure { gens: rows(&i), n };
        for f in box_points(&c.saturation()) {
            prop_assert_eq!(bar.contains(&Monomial::new(f.clone())), c.contains(&f));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn alpha_is_subadditive_and_linear(i in ideal(3, 3, 3)) {
        let base = i.alpha().unwrap();
        let table = alpha_limit_table(&i, 8).unwrap();
        for row in &table {
            prop_assert!(row.alpha <= u64::from(row.n) * base);
            for s in 1..row.n {
                let (a, b) = (table[s as usize - 1].alpha, table[(row.n - s) as usize - 1].alpha);
                prop_assert!(row.alpha <= a + b);
            }
        }
    }
}
