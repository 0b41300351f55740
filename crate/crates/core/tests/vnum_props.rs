mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::strategies::{ci, ideal};
use common::{colon_prime, naive_v, power_rows, rows, var_set, CiClosure, Gens};
use monideal::closure::closure_power;
use monideal::formulas::{v_ci_power, CIIdealSpec};
use monideal::vnum::{check_witness, v_number, v_number_min};
use monideal::{Budget, Monomial, MonomialIdeal, Ring};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn search_matches_naive_box_scan(i in ideal(3, 4, 3)) {
        let report = v_number(&i).unwrap();
        let naive = naive_v(&Gens(rows(&i)), 0);
        let lib: BTreeMap<BTreeSet<usize>, u64> = report.locals.iter().map(|(p, (d, _))| (var_set(p), *d)).collect();
        prop_assert_eq!(&lib, &naive.locals);
        prop_assert_eq!(report.v, naive.v());
        prop_assert_eq!(v_number_min(&i, &Budget::unlimited()).unwrap().0, report.v);
        let sat = i.max_exponents();
        for (p, (d, w)) in &report.locals {
            prop_assert!(check_witness(&i, w.monomial(), p));
            prop_assert_eq!(w.degree(), *d);
            let found = colon_prime(&Gens(rows(&i)), w.monomial().exps(), &sat);
            prop_assert_eq!(found, Some(var_set(p)));
        }
    }

    #[test]
    fn colon_ignores_extra_variables_and_saturated_exponents(
        i in ideal(3, 3, 3),
        f in proptest::collection::vec(0..=5u32, 3),
        e in 1..=4u32,
    ) {
        let k = i.ring().num_vars();
        // a fresh variable outside the support
        let ring = Ring::indexed("x", k + 1);
        let lifted = MonomialIdeal::new(
            &ring,
            i.gens().iter().map(|g| Monomial::new([g.exps(), &[0]].concat())).collect(),
        )
        .unwrap();
        let base: Vec<u32> = [&f[..k], &[0]].concat();
        let mut extra = base.clone();
        extra[k] = e;
        prop_assert_eq!(
            lifted.colon_monomial(&Monomial::new(base.clone())).unwrap(),
            lifted.colon_monomial(&Monomial::new(extra)).unwrap()
        );
        // raising an exponent already at the box edge changes nothing
        let max = i.max_exponents();
        let at: Vec<u32> = f[..k].iter().zip(&max).map(|(&a, &m)| a.max(m)).collect();
        let above: Vec<u32> = at.iter().map(|&a| a + e).collect();
        prop_assert_eq!(
            i.colon_monomial(&Monomial::new(at)).unwrap(),
            i.colon_monomial(&Monomial::new(above)).unwrap()
        );
    }

    #[test]
    fn ci_powers_follow_the_linear_formula(i in ci(3, 4, 3), n in 1..=3u32) {
        let spec = CIIdealSpec::for_ideal(&i).unwrap();
        let formula = v_ci_power(&spec, n).unwrap();
        let expect = formula.value.unwrap();
        let pw = i.power(n).unwrap();
        let report = v_number(&pw).unwrap();
        prop_assert!(report.locals.values().all(|(d, _)| *d == expect));
        prop_assert!(check_witness(&pw, formula.witness.as_ref().unwrap(), spec.prime()));
        let naive = naive_v(&Gens(power_rows(&rows(&i), n)), 0);
        prop_assert!(naive.locals.values().all(|&d| d == expect));
    }

    #[test]
    fn closed_ci_powers_match_naive(i in ci(3, 4, 2), n in 1..=2u32) {
        let report = v_number(&closure_power(&i, n).unwrap()).unwrap();
        let naive = naive_v(&CiClosure { gens: rows(&i), n }, 0);
        prop_assert_eq!(report.v, naive.v());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    /// Exponent constraints on every witness of a closed power of a
    /// two-generator complete intersection `⟨u1, u2⟩` at `P = ⟨x_p, y_t⟩`.
    #[test]
    fn two_generator_witness_shape(i in ci(2, 5, 3).prop_filter("two generators", |i| i.num_gens() == 2), n in 1..=2u32) {
        let g = rows(&i);
        let nn = u64::from(n);
        let naive = naive_v(&CiClosure { gens: g.clone(), n }, u64::MAX);
        prop_assert!(!naive.witnesses.is_empty());
        for (f, prime) in &naive.witnesses {
            let p = *prime.iter().find(|&&v| g[0][v] > 0).unwrap();
            let t = *prime.iter().find(|&&v| g[1][v] > 0).unwrap();
            let ap = u64::from(g[0][p]);
            let e = |v: usize| u64::from(f[v]);
            // b_p = nα_p − m with 1 ≤ m ≤ nα_p
            prop_assert!(e(p) < nn * ap);
            let m = nn * ap - e(p);
            let bt = u64::from(g[1][t]);
            prop_assert_eq!(e(t), (m * bt).div_ceil(ap) - 1, "c_t at {:?}", f);
            for j in (0..f.len()).filter(|&j| j != t && g[1][j] > 0) {
                prop_assert!(e(j) * ap >= m * u64::from(g[1][j]), "c_j at {:?}", f);
            }
            let top = g[0].iter().copied().max().unwrap();
            for s in (0..f.len()).filter(|&s| s != p && g[0][s] > 0) {
                let a = u64::from(g[0][s]);
                prop_assert!(e(s) * ap > nn * a * ap - m * a, "b_i at {:?}", f);
                if g[0][p] == top {
                    prop_assert!(e(s) + m > nn * a, "strengthened b_i at {:?}", f);
                }
            }
        }
    }
}
