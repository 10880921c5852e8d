use num_bigint::BigUint;
use proptest::prelude::*;

use kal_core::bounds::{j_trivial_image_bound, kal_monoid_bound, kal_state_bound};
use kal_core::constructions::{content_dfa, star_dfa};
use kal_core::kal::kal_construct;
use kal_core::monoid::{
    green_summary, kernel_equal, monoid_to_json, parse_monoid_json, syntactic_monoid,
    syntactic_quotient, transition_monoid, DEFAULT_CAP,
};
use kal_core::schutz::{MuMap, SchutzProduct};
use kal_core::{parse_dfa, Alphabet, CompleteDfa, FiniteMonoid, Word};

fn abc() -> Alphabet {
    Alphabet::from_chars("abc").unwrap()
}

prop_compose! {
    fn dfa_strategy(max_states: usize)(n in 1..=max_states)
        (delta in proptest::collection::vec(proptest::collection::vec(0..n, 3), n),
         finals in proptest::collection::vec(any::<bool>(), n),
         initial in 0..n) -> CompleteDfa {
        let finals: Vec<usize> = (0..finals.len()).filter(|&i| finals[i]).collect();
        CompleteDfa::new(abc(), initial, &finals, delta).unwrap()
    }
}

fn word_strategy(max_len: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(0usize..3, 0..=max_len).prop_map(Word)
}

fn split_oracle(dk: &CompleteDfa, dl: &CompleteDfa, w: &Word) -> bool {
    let x = w.letters();
    (0..x.len()).any(|i| {
        x[i] == 0 && dk.accepts(&Word(x[..i].to_vec())) && dl.accepts(&Word(x[i + 1..].to_vec()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn minimize_is_idempotent_and_preserves_language(d in dfa_strategy(7)) {
        let m = d.minimize();
        prop_assert!(d.equivalent(&m).unwrap());
        let mm = m.minimize();
        prop_assert_eq!(&mm, &m);
        prop_assert!(m.state_count() <= d.state_count());
        for w in abc().words_up_to(4) {
            prop_assert_eq!(d.accepts(&w), m.accepts(&w));
        }
    }

    #[test]
    fn kal_matches_split_oracle_and_bound(dk in dfa_strategy(4), dl in dfa_strategy(4)) {
        let kal = kal_construct(&dk, &dl, 'a').unwrap();
        for w in abc().words_up_to(6) {
            prop_assert_eq!(kal.accepts(&w), split_oracle(&dk, &dl, &w));
        }
        let k = dk.minimize().state_count();
        let l = dl.minimize().state_count();
        let states = kal.minimize().state_count();
        prop_assert!(BigUint::from(states) <= kal_state_bound(k, l));
        // The raw construction is already within the bound for the inputs as given.
        prop_assert!(BigUint::from(kal.state_count()) <= kal_state_bound(dk.state_count(), dl.state_count()));
    }

    #[test]
    fn left_derivatives_compose(d in dfa_strategy(5), u in word_strategy(5), v in word_strategy(5)) {
        let uv = d.left_derivative(&u.concat(&v)).unwrap();
        let stepwise = d.left_derivative(&u).unwrap().left_derivative(&v).unwrap();
        prop_assert!(uv.equivalent(&stepwise).unwrap());
        for w in abc().words_up_to(3) {
            prop_assert_eq!(uv.accepts(&w), d.accepts(&u.concat(&v).concat(&w)));
        }
    }

    #[test]
    fn syntactic_monoid_two_routes(d in dfa_strategy(4)) {
        let synt = syntactic_monoid(&d).unwrap();
        let trans = transition_monoid(&d, DEFAULT_CAP).unwrap();
        let q = syntactic_quotient(trans.monoid(), &trans.accept_set()).unwrap();
        prop_assert_eq!(q.monoid.size(), synt.monoid().size());
        prop_assert!(q.monoid.size() <= trans.monoid().size());
        prop_assert!(kernel_equal(&q.compose(&trans.hom).unwrap(), &synt.hom).unwrap());
        prop_assert!(synt.monoid().associativity_violation().is_none());
        for w in abc().words_up_to(4) {
            prop_assert_eq!(synt.accepts(&w), d.accepts(&w));
        }
    }

    #[test]
    fn kal_syntactic_monoid_within_bound(dk in dfa_strategy(3), dl in dfa_strategy(3)) {
        let k = syntactic_monoid(&dk).unwrap();
        let l = syntactic_monoid(&dl).unwrap();
        let (m, n) = (k.monoid().size(), l.monoid().size());
        prop_assume!(m <= 3 && n <= 3);
        let kal = syntactic_monoid(&kal_construct(&dk, &dl, 'a').unwrap()).unwrap();
        prop_assert!(BigUint::from(kal.monoid().size()) <= kal_monoid_bound(m, n));
        let img = MuMap::new(&k, &l, 'a').unwrap().image(DEFAULT_CAP).unwrap();
        prop_assert!(kal.monoid().size() <= img.size());
        prop_assert!(BigUint::from(img.size()) <= SchutzProduct::new(k.monoid().clone(), l.monoid().clone()).order());
    }

    #[test]
    fn mu_is_a_homomorphism(dk in dfa_strategy(3), dl in dfa_strategy(3),
                            u in word_strategy(12), v in word_strategy(12)) {
        let k = syntactic_monoid(&dk).unwrap();
        let l = syntactic_monoid(&dl).unwrap();
        let mu = MuMap::new(&k, &l, 'a').unwrap();
        let s = mu.product();
        let lhs = s.mul(&mu.eval(&u).unwrap(), &mu.eval(&v).unwrap());
        prop_assert_eq!(lhs, mu.eval(&u.concat(&v)).unwrap());
    }

    #[test]
    fn parsed_dfa_text_round_trips(d in dfa_strategy(6)) {
        prop_assert_eq!(parse_dfa(&d.to_string()).unwrap(), d);
    }

    #[test]
    fn monoid_json_round_trips(d in dfa_strategy(3)) {
        let s = syntactic_monoid(&d).unwrap();
        let acc = s.accept_set();
        let doc = parse_monoid_json(&monoid_to_json(s.monoid(), Some(&s.hom), Some(&acc)).to_string()).unwrap();
        prop_assert_eq!(&doc.monoid, s.monoid());
        prop_assert_eq!(doc.hom.as_ref(), Some(&s.hom));
    }
}

/// J-trivial pairs from content and star languages over `{a,b,c}`.
#[test]
fn j_trivial_image_bound_holds() {
    let a = abc();
    let subsets = ["", "a", "b", "ab", "ac", "bc", "abc"];
    let mut checked = 0;
    for &b in &subsets {
        for &c in &subsets {
            for (dk, dl) in [
                (content_dfa(b, &a).unwrap(), content_dfa(c, &a).unwrap()),
                (star_dfa(b, &a).unwrap(), content_dfa(c, &a).unwrap()),
            ] {
                let k = syntactic_monoid(&dk).unwrap();
                let l = syntactic_monoid(&dl).unwrap();
                let (gk, gl) = (green_summary(k.monoid()), green_summary(l.monoid()));
                assert!(gk.j_trivial && gl.j_trivial);
                let img = MuMap::new(&k, &l, 'a').unwrap().image(DEFAULT_CAP).unwrap();
                let cap = gk.rho + gl.lambda - 1;
                assert!(img.elements.iter().all(|e| e.p12.len() <= cap), "{b} {c}");
                let bound =
                    j_trivial_image_bound(k.monoid().size(), l.monoid().size(), gk.rho, gl.lambda);
                assert!(BigUint::from(img.size()) <= bound);
                assert!(gk.rho <= k.monoid().size() && gl.lambda <= l.monoid().size());
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 98);
}

#[test]
fn enumerated_products_are_associative_monoids() {
    let t = FiniteMonoid::trivial();
    let z2 = FiniteMonoid::cyclic_group(2).unwrap();
    let z4 = FiniteMonoid::cyclic_group(4).unwrap();
    let two = FiniteMonoid::new(1, vec![vec![0, 0], vec![0, 1]]).unwrap();
    for (m, n, size) in [
        (t.clone(), t, 2),
        (z2.clone(), z2.clone(), 64),
        (two.clone(), two, 64),
        (z4, z2, 2048),
    ] {
        let (p, _) = SchutzProduct::new(m, n).enumerate().unwrap();
        assert_eq!(p.size(), size);
        assert!(p.associativity_violation().is_none());
    }
}

#[test]
fn mod_counting_witnesses_are_groups_and_content_monoids_are_not() {
    let a = abc();
    for m in 1..=4 {
        let s =
            syntactic_monoid(&kal_core::constructions::mod_count_dfa('b', m, &a).unwrap()).unwrap();
        let g = green_summary(s.monoid());
        assert!(g.is_group);
        assert_eq!(s.monoid().size(), m);
        assert_eq!((g.rho, g.lambda), (1, 1));
    }
    let s = syntactic_monoid(&content_dfa("ab", &a).unwrap()).unwrap();
    let g = green_summary(s.monoid());
    assert!(g.j_trivial && !g.is_group);
}
