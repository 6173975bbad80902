use proptest::prelude::*;

use poset_intervals::flag::{ab_index, cd_index, upsilon};
use poset_intervals::ncpoly::{expand, rewrite_ab_to_cd, Alphabet, CdConvention, NcPoly, Word};
use poset_intervals::poset::{direct_product, dual, graded_interval_poset, GradedPoset};
use poset_intervals::transforms::Transforms;
use poset_intervals::corpus::random_subposets;
use poset_intervals::verify::{run, Suite};

fn ab_word() -> impl Strategy<Value = String> {
    proptest::collection::vec(prop_oneof![Just('a'), Just('b')], 0..5).prop_map(|v| v.into_iter().collect())
}

fn cd_poly() -> impl Strategy<Value = NcPoly> {
    (0usize..4, proptest::collection::vec(-3i64..4, 1..4)).prop_map(|(deg, coeffs)| {
        let words = Word::cd_words_of_degree(deg);
        let mut p = NcPoly::zero(Alphabet::Cd);
        for (w, c) in words.iter().zip(coeffs) {
            p.add_term(w.clone(), poset_intervals::ncpoly::q(c, 1));
        }
        p
    })
}

fn random_poset() -> impl Strategy<Value = GradedPoset> {
    (0u64..200).prop_map(|seed| random_subposets(seed, 1).remove(0).value)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn polynomial_json_round_trip(p in cd_poly()) {
        prop_assert_eq!(NcPoly::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn poset_json_round_trip(p in random_poset()) {
        prop_assert_eq!(GradedPoset::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn cd_expansion_round_trip(p in cd_poly()) {
        let back = rewrite_ab_to_cd(&expand(&p, CdConvention::Psi), CdConvention::Psi).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn iota_is_linear(u in ab_word(), v in ab_word()) {
        prop_assume!(u.len() == v.len());
        let mut t = Transforms::new();
        let (pu, pv) = (NcPoly::word(Alphabet::Ab, &u), NcPoly::word(Alphabet::Ab, &v));
        let sum = t.iota(&pu.try_add(&pv).unwrap()).unwrap();
        prop_assert_eq!(sum, t.iota(&pu).unwrap().try_add(&t.iota(&pv).unwrap()).unwrap());
    }

    #[test]
    fn mixing_is_symmetric(u in cd_poly(), v in cd_poly()) {
        let mut t = Transforms::new();
        prop_assert_eq!(t.mixing_cd(&u, &v).unwrap(), t.mixing_cd(&v, &u).unwrap());
    }

    #[test]
    fn random_posets_follow_the_transforms(p in random_poset()) {
        let mut t = Transforms::new();
        let ip = graded_interval_poset(&p);
        prop_assert_eq!(upsilon(&ip).unwrap(), t.iota(&upsilon(&p).unwrap()).unwrap());
        prop_assert_eq!(ab_index(&dual(&p)).unwrap(), ab_index(&p).unwrap().reverse_star());
        let b1 = poset_intervals::poset::generate(poset_intervals::poset::PosetKind::Boolean, 1).unwrap();
        let prod = direct_product(&p, &b1);
        prop_assert_eq!(
            ab_index(&prod).unwrap(),
            t.mixing_def(&ab_index(&p).unwrap(), &ab_index(&b1).unwrap()).unwrap()
        );
        if p.is_eulerian() {
            prop_assert!(ip.is_eulerian());
            prop_assert_eq!(cd_index(&ip).unwrap(), t.interval_cd(&cd_index(&p).unwrap()).unwrap());
        }
    }
}

#[test]
fn report_json_round_trip() {
    let r = run(Suite::Delannoy, 0);
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(v["summary"]["total"].as_u64().unwrap() as usize, r.cases.len());
    assert_eq!(serde_json::to_string_pretty(&v).unwrap(), r.to_json());
}
