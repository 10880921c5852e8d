//! Complete deterministic automata.
//!
//! Every [`CompleteDfa`] has a total transition function; there is no
//! implicit sink state. Minimization returns states in canonical order:
//! breadth-first from the initial state, exploring letters in alphabet order.

mod text;

use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};

use crate::alphabet::{Alphabet, Letter, Word};
use crate::error::{Error, Result};

pub use text::parse_dfa;

pub type StateId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompleteDfa {
    alphabet: Alphabet,
    state_count: usize,
    initial: StateId,
    finals: Vec<bool>,
    /// Row-major: `delta[state * |A| + letter]`.
    delta: Vec<StateId>,
}

impl CompleteDfa {
    /// Builds a DFA from a full transition table `delta[state][letter]`.
    pub fn new(
        alphabet: Alphabet,
        initial: StateId,
        finals: &[StateId],
        delta: Vec<Vec<StateId>>,
    ) -> Result<Self> {
        let state_count = delta.len();
        if state_count == 0 {
            return Err(Error::InvalidArgument(
                "a DFA needs at least one state".into(),
            ));
        }
        let check = |s: StateId| {
            if s < state_count {
                Ok(s)
            } else {
                Err(Error::StateOutOfRange {
                    state: s,
                    count: state_count,
                })
            }
        };
        check(initial)?;
        let mut final_mask = vec![false; state_count];
        for &f in finals {
            final_mask[check(f)?] = true;
        }
        let mut flat = Vec::with_capacity(state_count * alphabet.len());
        for (state, row) in delta.iter().enumerate() {
            if row.len() < alphabet.len() {
                return Err(Error::MissingTransition {
                    state,
                    letter: alphabet.symbol(row.len()),
                });
            }
            if row.len() > alphabet.len() {
                return Err(Error::InvalidArgument(format!(
                    "state {state} has {} transitions for {} letters",
                    row.len(),
                    alphabet.len()
                )));
            }
            for &t in row {
                flat.push(check(t)?);
            }
        }
        Ok(CompleteDfa {
            alphabet,
            state_count,
            initial,
            finals: final_mask,
            delta: flat,
        })
    }

    pub(crate) fn from_parts(
        alphabet: Alphabet,
        initial: StateId,
        finals: Vec<bool>,
        delta: Vec<StateId>,
    ) -> Self {
        let state_count = finals.len();
        debug_assert_eq!(delta.len(), state_count * alphabet.len());
        debug_assert!(initial < state_count);
        debug_assert!(delta.iter().all(|&t| t < state_count));
        CompleteDfa {
            alphabet,
            state_count,
            initial,
            finals,
            delta,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn is_final(&self, state: StateId) -> bool {
        self.finals[state]
    }

    pub fn finals(&self) -> impl Iterator<Item = StateId> + '_ {
        self.finals
            .iter()
            .enumerate()
            .filter_map(|(i, &f)| f.then_some(i))
    }

    #[inline]
    pub fn step(&self, state: StateId, letter: Letter) -> StateId {
        self.delta[state * self.alphabet.len() + letter]
    }

    /// Runs `word` from `state`.
    pub fn run_from(&self, state: StateId, word: &Word) -> StateId {
        word.letters()
            .iter()
            .fold(state, |s, &letter| self.step(s, letter))
    }

    pub fn run(&self, word: &Word) -> StateId {
        self.run_from(self.initial, word)
    }

    pub fn accepts(&self, word: &Word) -> bool {
        self.finals[self.run(word)]
    }

    /// Parses `s` over the DFA's alphabet and tests membership.
    pub fn accepts_str(&self, s: &str) -> Result<bool> {
        Ok(self.accepts(&self.alphabet.word(s)?))
    }

    /// The automaton for `u⁻¹L`: the same transitions, started at `initial·u`.
    pub fn left_derivative(&self, u: &Word) -> Result<CompleteDfa> {
        if let Some(&bad) = u.letters().iter().find(|&&l| l >= self.alphabet.len()) {
            return Err(Error::InvalidArgument(format!(
                "letter index {bad} outside an alphabet of {} letters",
                self.alphabet.len()
            )));
        }
        let mut d = self.clone();
        d.initial = self.run(u);
        Ok(d)
    }

    /// States reachable from the initial state, in BFS order with letters
    /// explored in alphabet order.
    fn bfs_order(&self) -> Vec<StateId> {
        let mut seen = vec![false; self.state_count];
        let mut order = vec![self.initial];
        seen[self.initial] = true;
        let mut head = 0;
        while head < order.len() {
            let s = order[head];
            head += 1;
            for letter in 0..self.alphabet.len() {
                let t = self.step(s, letter);
                if !seen[t] {
                    seen[t] = true;
                    order.push(t);
                }
            }
        }
        order
    }

    /// Minimal complete DFA of the same language, canonically numbered.
    ///
    /// Unreachable states are dropped, then the Moore partition refinement
    /// splits classes by `(class, class of each successor)` until stable.
    pub fn minimize(&self) -> CompleteDfa {
        let k = self.alphabet.len();
        let reachable = self.bfs_order();
        let mut local = vec![usize::MAX; self.state_count];
        for (i, &s) in reachable.iter().enumerate() {
            local[s] = i;
        }
        let n = reachable.len();

        let mut class: Vec<usize> = reachable.iter().map(|&s| self.finals[s] as usize).collect();
        let mut class_count = class.iter().copied().max().unwrap() + 1;
        // Renumber so a single-class start has one class, not an empty class 0.
        if class.iter().all(|&c| c == class[0]) {
            class.iter_mut().for_each(|c| *c = 0);
            class_count = 1;
        }
        loop {
            let mut signatures: HashMap<Vec<usize>, usize> = HashMap::new();
            let mut next = Vec::with_capacity(n);
            for (i, &s) in reachable.iter().enumerate() {
                let mut sig = Vec::with_capacity(k + 1);
                sig.push(class[i]);
                for letter in 0..k {
                    sig.push(class[local[self.step(s, letter)]]);
                }
                let fresh = signatures.len();
                next.push(*signatures.entry(sig).or_insert(fresh));
            }
            let count = signatures.len();
            class = next;
            if count == class_count {
                break;
            }
            class_count = count;
        }

        // Canonical numbering: BFS over classes from the initial class.
        let mut rep = vec![usize::MAX; class_count];
        for (i, &c) in class.iter().enumerate() {
            if rep[c] == usize::MAX {
                rep[c] = reachable[i];
            }
        }
        let mut number = vec![usize::MAX; class_count];
        let start = class[0];
        number[start] = 0;
        let mut order = vec![start];
        let mut head = 0;
        while head < order.len() {
            let c = order[head];
            head += 1;
            for letter in 0..k {
                let t = class[local[self.step(rep[c], letter)]];
                if number[t] == usize::MAX {
                    number[t] = order.len();
                    order.push(t);
                }
            }
        }
        let mut delta = Vec::with_capacity(class_count * k);
        let mut finals = Vec::with_capacity(class_count);
        for &c in &order {
            finals.push(self.finals[rep[c]]);
            for letter in 0..k {
                delta.push(number[class[local[self.step(rep[c], letter)]]]);
            }
        }
        CompleteDfa::from_parts(self.alphabet.clone(), 0, finals, delta)
    }

    /// Language equality by exploring reachable pairs of the product
    /// automaton; independent of [`CompleteDfa::minimize`].
    pub fn equivalent(&self, other: &CompleteDfa) -> Result<bool> {
        Ok(self.distinguishing_word(other)?.is_none())
    }

    /// A shortest word accepted by exactly one of the two automata, if any.
    pub fn distinguishing_word(&self, other: &CompleteDfa) -> Result<Option<Word>> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        let k = self.alphabet.len();
        type Pair = (StateId, StateId);
        let mut parent: HashMap<Pair, Option<(Pair, Letter)>> = HashMap::new();
        let start = (self.initial, other.initial);
        parent.insert(start, None);
        let mut queue = VecDeque::from([start]);
        while let Some(pair @ (p, q)) = queue.pop_front() {
            if self.finals[p] != other.finals[q] {
                let mut letters = Vec::new();
                let mut cur = pair;
                while let Some(Some((prev, letter))) = parent.get(&cur) {
                    letters.push(*letter);
                    cur = *prev;
                }
                letters.reverse();
                return Ok(Some(Word(letters)));
            }
            for letter in 0..k {
                let next = (self.step(p, letter), other.step(q, letter));
                if let Entry::Vacant(slot) = parent.entry(next) {
                    slot.insert(Some((pair, letter)));
                    queue.push_back(next);
                }
            }
        }
        Ok(None)
    }

    /// True when the two automata are equal up to renaming of states
    /// reachable from the initial states.
    pub fn isomorphic(&self, other: &CompleteDfa) -> bool {
        if self.alphabet != other.alphabet {
            return false;
        }
        let a = self.bfs_order();
        let b = other.bfs_order();
        if a.len() != b.len() {
            return false;
        }
        let mut map = vec![usize::MAX; self.state_count];
        for (&x, &y) in a.iter().zip(&b) {
            map[x] = y;
        }
        a.iter().all(|&s| {
            self.finals[s] == other.finals[map[s]]
                && (0..self.alphabet.len()).all(|l| map[self.step(s, l)] == other.step(map[s], l))
        })
    }
}
