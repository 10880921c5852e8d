//! The marked concatenation `KaL`.

use std::collections::HashMap;

use crate::dfa::{CompleteDfa, StateId};
use crate::error::{Error, Result};

/// Set of states of the right-hand automaton, one bit per state.
type StateSet = Vec<u64>;

/// Builds a complete DFA for `K·marker·L` from DFAs for `K` and `L`.
///
/// States are pairs `(p, Q)` with `p` a state of `dfa_k` and `Q` a set of
/// states of `dfa_l`; only pairs reachable from `(initial_K, ∅)` are
/// materialized, so the result has at most `k·2^ℓ` states. Reading `b`
/// moves `(p, Q)` to `(p·b, Q·b ∪ {initial_L})` when `b` is the marker and
/// `p` is final, and to `(p·b, Q·b)` otherwise. A pair is final when `Q`
/// contains a final state of `dfa_l`.
pub fn kal_construct(
    dfa_k: &CompleteDfa,
    dfa_l: &CompleteDfa,
    marker: char,
) -> Result<CompleteDfa> {
    if dfa_k.alphabet() != dfa_l.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let alphabet = dfa_k.alphabet().clone();
    let marker = alphabet.index_of(marker)?;
    let k = alphabet.len();
    let words = dfa_l.state_count().div_ceil(64);

    let mut index: HashMap<(StateId, StateSet), StateId> = HashMap::new();
    let mut states: Vec<(StateId, StateSet)> = Vec::new();
    let start = (dfa_k.initial(), vec![0u64; words]);
    index.insert(start.clone(), 0);
    states.push(start);

    let mut delta = Vec::new();
    let mut head = 0;
    while head < states.len() {
        let (p, q) = states[head].clone();
        head += 1;
        for letter in 0..k {
            let mut next = vec![0u64; words];
            for s in iter_bits(&q) {
                let t = dfa_l.step(s, letter);
                next[t / 64] |= 1 << (t % 64);
            }
            if letter == marker && dfa_k.is_final(p) {
                let t = dfa_l.initial();
                next[t / 64] |= 1 << (t % 64);
            }
            let key = (dfa_k.step(p, letter), next);
            let id = match index.get(&key) {
                Some(&id) => id,
                None => {
                    let id = states.len();
                    index.insert(key.clone(), id);
                    states.push(key);
                    id
                }
            };
            delta.push(id);
        }
    }
    let finals = states
        .iter()
        .map(|(_, q)| iter_bits(q).any(|s| dfa_l.is_final(s)))
        .collect();
    Ok(CompleteDfa::from_parts(alphabet, 0, finals, delta))
}

fn iter_bits(set: &[u64]) -> impl Iterator<Item = usize> + '_ {
    set.iter().enumerate().flat_map(|(w, &bits)| {
        (0..64)
            .filter(move |b| bits >> b & 1 == 1)
            .map(move |b| w * 64 + b)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;

    #[test]
    fn a_star_a_a_star_is_a_plus() {
        let a = Alphabet::from_chars("a").unwrap();
        let all = CompleteDfa::new(a.clone(), 0, &[0], vec![vec![0]]).unwrap();
        let kal = kal_construct(&all, &all, 'a').unwrap().minimize();
        assert_eq!(kal.state_count(), 2);
        assert!(!kal.accepts_str("").unwrap());
        assert!(kal.accepts_str("a").unwrap());
        assert!(kal.accepts_str("aaaa").unwrap());
    }

    #[test]
    fn marker_must_be_in_alphabet() {
        let a = Alphabet::from_chars("ab").unwrap();
        let all = CompleteDfa::new(a, 0, &[0], vec![vec![0, 0]]).unwrap();
        assert_eq!(
            kal_construct(&all, &all, 'z'),
            Err(Error::UnknownLetter('z'))
        );
    }

    #[test]
    fn alphabets_must_agree() {
        let ab = CompleteDfa::new(
            Alphabet::from_chars("ab").unwrap(),
            0,
            &[0],
            vec![vec![0, 0]],
        )
        .unwrap();
        let ba = CompleteDfa::new(
            Alphabet::from_chars("ba").unwrap(),
            0,
            &[0],
            vec![vec![0, 0]],
        )
        .unwrap();
        assert_eq!(kal_construct(&ab, &ba, 'a'), Err(Error::AlphabetMismatch));
    }

    #[test]
    fn empty_left_language_gives_empty_result() {
        let a = Alphabet::from_chars("ab").unwrap();
        let none = CompleteDfa::new(a.clone(), 0, &[], vec![vec![0, 0]]).unwrap();
        let all = CompleteDfa::new(a, 0, &[0], vec![vec![0, 0]]).unwrap();
        let kal = kal_construct(&none, &all, 'a').unwrap().minimize();
        assert_eq!(kal.state_count(), 1);
        assert_eq!(kal.finals().count(), 0);
    }
}
