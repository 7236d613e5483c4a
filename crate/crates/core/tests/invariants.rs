// SPDX-License-Identifier: Apache-2.0

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use twistlab_core::hn::pi1::{involution, projection_matrix, system_word};
use twistlab_core::hn::{
    catalog_scenario, monodromy_conjugacy_filter, nugatory_analysis, verify_report, ConjugacyVerdict,
    NugatoryVerdict, CATALOG_NAMES,
};
use twistlab_core::mcg::{
    abelianization_image, intersection_pairing, is_anti_symplectic, is_symplectic, kotschick_bound, standard_form,
    transvection, twist_homology, HomologyClass, IntMatrix, SpElement, TwistWord,
};
use twistlab_core::words::{abelianize_pi1, disc_bound_test, Alphabet, Curve, CyclicWord, Letter};

fn class(genus: usize) -> impl Strategy<Value = HomologyClass> {
    prop::collection::vec(-4i64..=4, 2 * genus).prop_map(|c| HomologyClass::from_coords(&c).unwrap())
}

fn product(genus: usize, len: usize) -> impl Strategy<Value = SpElement> {
    prop::collection::vec((class(genus), -3i64..=3), 0..=len).prop_map(move |ts| {
        ts.iter()
            .fold(SpElement::identity(genus), |acc, (a, q)| acc.then_twist(a, *q))
    })
}

fn genus_and_two_classes() -> impl Strategy<Value = (usize, HomologyClass, HomologyClass)> {
    (1usize..=3).prop_flat_map(|g| (Just(g), class(g), class(g)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn twist_products_are_symplectic(g in (1usize..=3).prop_flat_map(|k| product(k, 6))) {
        prop_assert!(is_symplectic(g.matrix()));
        prop_assert!(g.compose(&g.inverse()).unwrap().is_identity());
        let j = standard_form(g.genus());
        prop_assert_eq!(&(&g.matrix().transpose() * &j) * g.matrix(), j);
    }

    #[test]
    fn twists_preserve_the_pairing((k, u, v) in genus_and_two_classes(), q in -9i64..=9, a_seed in 0usize..100) {
        let a = if a_seed % 2 == 0 { u.clone() } else { v.clone() };
        let t = transvection(&a, q);
        let before = intersection_pairing(&u, &v).unwrap();
        let after = intersection_pairing(&t.apply(&u).unwrap(), &t.apply(&v).unwrap()).unwrap();
        prop_assert_eq!(before, after);
        prop_assert_eq!(t.genus(), k);
    }

    #[test]
    fn twist_powers_add((_, a, b) in genus_and_two_classes(), p in -9i64..=9, q in -9i64..=9) {
        let lhs = transvection(&a, p).compose(&transvection(&a, q)).unwrap();
        let whole = transvection(&a, p + q);
        prop_assert_eq!(lhs.matrix(), whole.matrix());
        let stepwise = twist_homology(&a, p, &twist_homology(&a, q, &b).unwrap()).unwrap();
        prop_assert_eq!(stepwise, twist_homology(&a, p + q, &b).unwrap());
    }

    #[test]
    fn twists_act_linearly((_, a, b) in genus_and_two_classes(), c_seed in prop::collection::vec(-4i64..=4, 6), q in -9i64..=9) {
        let c = HomologyClass::from_coords(&c_seed[..2 * a.genus()]).unwrap();
        let sum = twist_homology(&a, q, &b.checked_add(&c).unwrap()).unwrap();
        let parts = twist_homology(&a, q, &b).unwrap().checked_add(&twist_homology(&a, q, &c).unwrap()).unwrap();
        prop_assert_eq!(sum, parts);
    }

    #[test]
    fn kotschick_bound_matches_formula_and_is_monotone(k in 2i64..=8, m in 1i64..=6, q in 1i64..=60) {
        let b = kotschick_bound(k, m, q).unwrap();
        let den = 18 * k - 6;
        prop_assert_eq!(&b, &BigRational::new(BigInt::from(den + q * m), BigInt::from(den)));
        prop_assert!(kotschick_bound(k, m, q + 1).unwrap() > b);
        prop_assert!(kotschick_bound(k, m + 1, q).unwrap() > b);
        prop_assert!(kotschick_bound(k + 1, m, q).unwrap() < b);
    }

    #[test]
    fn commutators_vanish_in_the_abelianization(
        k in 2i64..=4,
        u in prop::collection::vec((0usize..4, -5i64..=5), 0..6),
        v in prop::collection::vec((0usize..4, -5i64..=5), 0..6),
    ) {
        let word = |letters: &[(usize, i64)]| {
            let mut w = TwistWord::empty(k as usize);
            for (c, e) in letters {
                w.push(&format!("c{c}"), *e);
            }
            w
        };
        let (x, y) = (word(&u), word(&v));
        let comm = x.concat(&y).unwrap().concat(&x.inverse()).unwrap().concat(&y.inverse()).unwrap();
        prop_assert_eq!(abelianization_image(&comm, k, true).unwrap(), 0);
    }

    #[test]
    fn conjugates_pass_the_conjugacy_filter(g in product(2, 4), p in product(2, 4)) {
        let conj = p.compose(&g).unwrap().compose(&p.inverse()).unwrap();
        prop_assert_eq!(monodromy_conjugacy_filter(&g, &conj).unwrap(), ConjugacyVerdict::PossiblyConjugate);
    }

    #[test]
    fn crossing_changes_act_on_the_right(q1 in prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]), q2 in prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]), which in 0usize..2) {
        let s = catalog_scenario(["trefoil", "figure8"][which]).unwrap();
        let l1 = s.curve("L1").unwrap();
        let l2 = s.curve("L2").unwrap();
        let changed = s.model.apply_crossing_change(l1, q1).unwrap().apply_crossing_change(l2, q2).unwrap();
        let expected = &(s.model.model_map.matrix() * transvection(l1.homology(), -q1).matrix())
            * transvection(l2.homology(), -q2).matrix();
        prop_assert_eq!(changed.model_map.matrix(), &expected);
        let letters: Vec<_> = changed.model_word.letters().iter().rev().take(2).map(|l| (l.curve.clone(), l.exponent)).collect();
        prop_assert_eq!(letters, vec![("L2".to_string(), -q2), ("L1".to_string(), -q1)]);
    }

    #[test]
    fn nugatory_reports_reverify(which in 0usize..CATALOG_NAMES.len(), q in prop::sample::select(vec![-6i64, -4, -2, -1, 1, 2, 4, 6]), budget in 0usize..=2) {
        let s = catalog_scenario(CATALOG_NAMES[which]).unwrap();
        for c in &s.model.crossing_circles {
            let r = nugatory_analysis(&s, c.curve.name(), q, budget).unwrap();
            prop_assert!(verify_report(&s, c.curve.name(), q, &r).unwrap(), "{:?}", r);
            if let NugatoryVerdict::Unknown { budget: b } = r.verdict {
                prop_assert_eq!(b, budget);
            }
        }
    }

    #[test]
    fn disc_bound_curves_are_meridional(letters in prop::collection::vec((1usize..=2, any::<bool>(), any::<bool>()), 0..12)) {
        let w = CyclicWord::new(letters.iter().map(|&(i, b, inv)| Letter::new(&format!("{}{i}", if b { "b" } else { "a" }), inv)).collect());
        let class = abelianize_pi1(2, &w).unwrap();
        let sys = system_word(1, &w).unwrap();
        let curve = Curve::new("y", sys, Some(w), class.clone(), class.is_zero()).unwrap();
        if disc_bound_test(&Alphabet::standard(2), &curve).unwrap() {
            prop_assert!(projection_matrix(1).mul_vec(class.coords()).iter().all(Zero::is_zero));
            // the meridian Lagrangian of the genus-2 double is spanned by (1,0,0,-1) and (0,1,-1,0)
            let span = IntMatrix::from_columns(4, &[
                vec![1.into(), 0.into(), 0.into(), (-1).into()],
                vec![0.into(), 1.into(), (-1).into(), 0.into()],
                class.coords().to_vec(),
            ]).unwrap();
            prop_assert_eq!(span.rank(), 2);
        }
    }
}

#[test]
fn involution_is_an_anti_symplectic_involution() {
    for k in 1..=4 {
        let iota = involution(k);
        assert!(is_anti_symplectic(&iota));
        assert!((&iota * &iota).is_identity());
    }
}
