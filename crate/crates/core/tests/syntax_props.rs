mod common;

use common::Atoms;
use num_bigint::BigUint;
use ordtruth::syntax::{
    godel_decode, godel_encode, in_language, numeral, parse_formula, parse_term, subst_numeral, term_decode, term_encode,
    Formula, LanguageId, Term,
};
use proptest::prelude::*;

const ATOMS: [Atoms; 4] = [Atoms::Arithmetic, Atoms::SimpleTruth, Atoms::IndexedTruth, Atoms::Any];

fn formula(seed: u64) -> Formula {
    let mut r = common::rng(seed);
    common::formula(&mut r, 4, 4, ATOMS[(seed % 4) as usize])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn formula_text_round_trip(seed: u64) {
        let f = formula(seed);
        let text = f.to_string();
        prop_assert_eq!(parse_formula(&text).unwrap(), f, "{}", text);
    }

    #[test]
    fn term_text_and_code_round_trip(seed: u64) {
        let t = common::term(&mut common::rng(seed), 3, 4);
        prop_assert_eq!(parse_term(&t.to_string()).unwrap(), t.clone());
        prop_assert_eq!(term_decode(&term_encode(&t)), Some(t));
    }

    #[test]
    fn godel_round_trip(seed: u64) {
        let f = formula(seed);
        prop_assert_eq!(godel_decode(&godel_encode(&f)), Some(f));
    }

    #[test]
    fn godel_codes_are_injective(s1: u64, s2: u64) {
        let (f, g) = (formula(s1), formula(s2));
        prop_assert_eq!(godel_encode(&f) == godel_encode(&g), f == g);
    }

    #[test]
    fn numeral_substitution_matches_tree_substitution(seed: u64, n in 0u64..5000) {
        let a = common::predicate(&mut common::rng(seed), 3, ATOMS[(seed % 4) as usize]);
        let out = subst_numeral(&godel_encode(&a), &BigUint::from(n)).unwrap();
        let want = a.apply(&numeral(n)).unwrap();
        prop_assert_eq!(godel_decode(&out), Some(want));
    }

    #[test]
    fn closure_is_a_sentence_and_idempotent(seed: u64) {
        let f = formula(seed);
        let c = f.universal_closure();
        prop_assert!(c.is_sentence());
        prop_assert_eq!(c.universal_closure(), c.clone());
        if f.is_sentence() {
            prop_assert_eq!(c, f);
        }
    }

    #[test]
    fn languages_nest_along_the_order(seed: u64, s1: u64, s2: u64) {
        let f = formula(seed);
        let a = common::code(&common::ordinal(&mut common::rng(s1), 2));
        let b = common::code(&common::ordinal(&mut common::rng(s2), 2));
        let (lo, hi) = if a.preceq(&b) { (a, b) } else { (b, a) };
        if in_language(&f, &LanguageId::up_to(1, lo.clone())) {
            prop_assert!(in_language(&f, &LanguageId::up_to(1, hi.clone())));
        }
        if in_language(&f, &LanguageId::up_to(1, hi)) {
            prop_assert!(in_language(&f, &LanguageId::full(1)));
        }
    }

    #[test]
    fn indexed_truth_membership_follows_the_order(s1: u64, s2: u64) {
        let mut r = common::rng(s1);
        let b = common::raw_code(&mut r);
        let a = common::code(&common::ordinal(&mut common::rng(s2), 2));
        let atom = Formula::truth(1, b.clone(), Term::var(0));
        prop_assert_eq!(in_language(&atom, &LanguageId::up_to(1, a.clone())), b.precedes(&a));
    }

    #[test]
    fn arithmetic_formulas_lie_in_every_language(seed: u64) {
        let f = common::formula(&mut common::rng(seed), 4, 4, Atoms::Arithmetic);
        for lang in ["PA", "PA/simple", "PA/upto(0)", "PA/full/full"] {
            prop_assert!(in_language(&f, &lang.parse::<LanguageId>().unwrap()));
        }
    }
}

#[test]
fn language_descriptors_round_trip() {
    for s in ["PA", "PA/simple", "PA/upto(w+1)", "PA/full", "PA/full/upto(#7)/simple"] {
        let l: LanguageId = s.parse().unwrap();
        assert_eq!(l.to_string().parse::<LanguageId>().unwrap(), l);
        assert_eq!(LanguageId::decode(&l.encode()), Some(l));
    }
}
