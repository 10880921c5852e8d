//! Witness automata and monoids for the marked-concatenation bounds.

use crate::alphabet::Alphabet;
use crate::dfa::CompleteDfa;
use crate::error::{Error, Result};
use crate::monoid::{Elem, FiniteMonoid, MonoidHom};

fn abc() -> Alphabet {
    Alphabet::from_chars("abc").expect("static alphabet")
}

/// `k` states over `{a,b,c}`: `a` resets to `p₀`, `b` counts modulo `k`,
/// `c` loops. Initial `p₀`, final `p_{k−1}`.
pub fn prop2_k(k: usize) -> Result<CompleteDfa> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!(
            "k must be at least 2, got {k}"
        )));
    }
    let delta = (0..k).map(|i| vec![0, (i + 1) % k, i]).collect();
    CompleteDfa::new(abc(), 0, &[k - 1], delta)
}

/// `ℓ` states over `{a,b,c}`: `a` counts modulo `ℓ`, `b` loops, `c` sends
/// every state to `q₁`. Initial `q₀`, final `q_{ℓ−1}`.
pub fn prop2_l(l: usize) -> Result<CompleteDfa> {
    if l < 2 {
        return Err(Error::InvalidArgument(format!(
            "ell must be at least 2, got {l}"
        )));
    }
    let delta = (0..l).map(|j| vec![(j + 1) % l, j, 1]).collect();
    CompleteDfa::new(abc(), 0, &[l - 1], delta)
}

/// Words whose number of `letter`s is divisible by `modulus`.
pub fn mod_count_dfa(letter: char, modulus: usize, alphabet: &Alphabet) -> Result<CompleteDfa> {
    if modulus == 0 {
        return Err(Error::InvalidArgument("modulus must be at least 1".into()));
    }
    let x = alphabet.index_of(letter)?;
    let delta = (0..modulus)
        .map(|i| {
            (0..alphabet.len())
                .map(|l| if l == x { (i + 1) % modulus } else { i })
                .collect()
        })
        .collect();
    CompleteDfa::new(alphabet.clone(), 0, &[0], delta)
}

/// `B*` over `A`: a single accepting state when `B = A`, otherwise an
/// accepting loop on `B` and a sink for the other letters.
pub fn star_dfa(letters: &str, alphabet: &Alphabet) -> Result<CompleteDfa> {
    let mask = alphabet.subset_mask(letters)?;
    if mask.iter().all(|&b| b) {
        return CompleteDfa::new(alphabet.clone(), 0, &[0], vec![vec![0; alphabet.len()]]);
    }
    let row = mask.iter().map(|&b| if b { 0 } else { 1 }).collect();
    CompleteDfa::new(
        alphabet.clone(),
        0,
        &[0],
        vec![row, vec![1; alphabet.len()]],
    )
}

/// Words whose content is exactly `B`. State `s < 2^|B|` is the set of
/// letters of `B` seen so far; state `2^|B|` is the sink for letters
/// outside `B`.
pub fn content_dfa(letters: &str, alphabet: &Alphabet) -> Result<CompleteDfa> {
    let mask = alphabet.subset_mask(letters)?;
    let members: Vec<usize> = (0..alphabet.len()).filter(|&l| mask[l]).collect();
    if members.len() > 16 {
        return Err(Error::InvalidArgument(
            "content sets are limited to 16 letters".into(),
        ));
    }
    let full = (1usize << members.len()) - 1;
    let sink = full + 1;
    let delta = (0..=sink)
        .map(|s| {
            (0..alphabet.len())
                .map(|l| match members.iter().position(|&m| m == l) {
                    _ if s == sink => sink,
                    Some(bit) => s | 1 << bit,
                    None => sink,
                })
                .collect()
        })
        .collect();
    CompleteDfa::new(alphabet.clone(), 0, &[full], delta)
}

/// The free semilattice `(2^A, ∪)` with `b ↦ {b}`. Element `i` is the set
/// whose bit `j` marks letter `j`; the identity is `∅ = 0`.
pub fn sl_free_monoid(alphabet: &Alphabet) -> Result<MonoidHom> {
    let d = alphabet.len();
    if d > 12 {
        return Err(Error::InvalidArgument(
            "the free semilattice is materialized only for up to 12 letters".into(),
        ));
    }
    let n = 1usize << d;
    let table = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i | j) as Elem))
        .collect();
    let monoid = FiniteMonoid::from_flat(0, n, table);
    let images = (0..d).map(|j| 1 << j).collect();
    MonoidHom::new(monoid, alphabet.clone(), images)
}

/// The trivial variety: every word maps to the single element.
pub fn trivial_free_monoid(alphabet: &Alphabet) -> MonoidHom {
    MonoidHom::new(
        FiniteMonoid::trivial(),
        alphabet.clone(),
        vec![0; alphabet.len()],
    )
    .expect("trivial images are in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::syntactic_monoid;

    #[test]
    fn prop2_preconditions() {
        assert!(prop2_k(1).is_err());
        assert!(prop2_l(0).is_err());
    }

    #[test]
    fn prop2_k_runs() {
        let k = prop2_k(2).unwrap();
        assert!(k.accepts_str("b").unwrap());
        assert!(!k.accepts_str("ba").unwrap());
        assert!(k.accepts_str("bcbab").unwrap());
    }

    #[test]
    fn prop2_l_runs() {
        let l = prop2_l(2).unwrap();
        assert!(l.accepts_str("a").unwrap());
        assert!(!l.accepts_str("aa").unwrap());
        // c jumps to q1
        assert!(l.accepts_str("aac").unwrap());
    }

    #[test]
    fn prop2_witnesses_are_minimal() {
        for n in 2..=5 {
            assert_eq!(prop2_k(n).unwrap().minimize().state_count(), n);
            assert_eq!(prop2_l(n).unwrap().minimize().state_count(), n);
        }
    }

    #[test]
    fn mod_count() {
        let a = abc();
        assert!(mod_count_dfa('b', 2, &a)
            .unwrap()
            .accepts_str("bb")
            .unwrap());
        assert!(mod_count_dfa('c', 2, &a)
            .unwrap()
            .accepts_str("cac")
            .unwrap());
        assert!(mod_count_dfa('b', 1, &a)
            .unwrap()
            .accepts_str("abcb")
            .unwrap());
        assert_eq!(
            mod_count_dfa('d', 2, &a).unwrap_err(),
            Error::UnknownLetter('d')
        );
        let s = syntactic_monoid(&mod_count_dfa('b', 3, &a).unwrap()).unwrap();
        assert_eq!(s.monoid().size(), 3);
    }

    #[test]
    fn star() {
        let a = Alphabet::from_chars("abcd").unwrap();
        let all = star_dfa("abcd", &a).unwrap();
        assert_eq!(all.state_count(), 1);
        let b = star_dfa("ab", &a).unwrap();
        assert!(b.accepts_str("abba").unwrap());
        assert!(!b.accepts_str("abca").unwrap());
        assert!(star_dfa("abe", &a).is_err());
        let s = syntactic_monoid(&b).unwrap();
        assert_eq!(s.monoid().size(), 2);
        // letters of B map to the identity
        let e = s.monoid().identity();
        let images = s.hom.letter_images();
        assert_eq!(images[0], e);
        assert_eq!(images[1], e);
        assert_ne!(images[2], e);
        assert_ne!(images[3], e);
    }

    #[test]
    fn content() {
        let a = abc();
        let empty = content_dfa("", &a).unwrap();
        assert!(empty.accepts_str("").unwrap());
        assert!(!empty.accepts_str("a").unwrap());
        let ab = content_dfa("ab", &a).unwrap();
        assert_eq!(ab.state_count(), 5);
        assert!(ab.accepts_str("abba").unwrap());
        assert!(!ab.accepts_str("aaa").unwrap());
        assert!(!ab.accepts_str("abc").unwrap());
        assert_eq!(ab.minimize().state_count(), 5);
        assert_eq!(syntactic_monoid(&ab).unwrap().monoid().size(), 5);
    }

    #[test]
    fn semilattice() {
        let a = Alphabet::from_chars("ab").unwrap();
        let h = sl_free_monoid(&a).unwrap();
        assert_eq!(h.target().size(), 4);
        assert_eq!(h.eval_str("").unwrap(), h.target().identity());
        assert_eq!(h.eval_str("abba").unwrap(), h.eval_str("ab").unwrap());
        h.target().validate().unwrap();
    }
}
