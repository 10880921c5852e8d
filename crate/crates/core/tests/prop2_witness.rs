//! Residual counting for the state-complexity witnesses, independent of the
//! subset construction and of minimization.
//!
//! Prefixes with different rows `w ↦ [u·w ∈ KaL]` over a fixed suffix set
//! have different residuals, so the number of distinct rows is a lower
//! bound on any complete DFA for KaL. Membership is decided by trying every
//! split `u′·a·u″`. Matching the minimized construction pins both.

use std::collections::{HashSet, VecDeque};

use kal_core::constructions::{prop2_k, prop2_l};
use kal_core::kal::kal_construct;
use kal_core::{CompleteDfa, Word};

fn in_kal(dk: &CompleteDfa, dl: &CompleteDfa, w: &[usize]) -> bool {
    (0..w.len()).any(|i| {
        w[i] == 0 && dk.accepts(&Word(w[..i].to_vec())) && dl.accepts(&Word(w[i + 1..].to_vec()))
    })
}

/// Explores prefixes breadth-first, extending only those whose row is new.
fn residual_classes(k: usize, l: usize) -> usize {
    let dk = prop2_k(k).unwrap();
    let dl = prop2_l(l).unwrap();
    let suffixes = dk.alphabet().words_up_to(7);
    let row = |u: &Word| -> Vec<bool> {
        suffixes
            .iter()
            .map(|w| in_kal(&dk, &dl, &u.concat(w).0))
            .collect()
    };
    let mut seen: HashSet<Vec<bool>> = HashSet::new();
    let mut queue = VecDeque::from([Word::empty()]);
    seen.insert(row(&Word::empty()));
    while let Some(u) = queue.pop_front() {
        for letter in 0..3 {
            let mut v = u.clone();
            v.0.push(letter);
            if seen.insert(row(&v)) {
                queue.push_back(v);
            }
        }
    }
    seen.len()
}

fn minimized(k: usize, l: usize) -> usize {
    kal_construct(&prop2_k(k).unwrap(), &prop2_l(l).unwrap(), 'a')
        .unwrap()
        .minimize()
        .state_count()
}

#[test]
fn three_state_right_factor_reaches_k_times_2_to_l() {
    for (k, expected) in [(2, 16), (3, 24)] {
        assert_eq!(residual_classes(k, 3), expected, "k = {k}");
        assert_eq!(minimized(k, 3), expected, "k = {k}");
    }
}

/// With two states in L, `c` sends every state to the final state `q₁`,
/// so the witness falls short of `k·2^ℓ`.
#[test]
fn two_state_right_factor_falls_short() {
    for (k, expected) in [(2, 6), (3, 8), (4, 10)] {
        assert_eq!(residual_classes(k, 2), expected, "k = {k}");
        assert_eq!(minimized(k, 2), expected, "k = {k}");
        assert!(expected < k << 2);
    }
}
