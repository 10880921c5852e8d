//! Line-oriented text format for complete DFAs.
//!
//! ```text
//! # comment
//! alphabet a b c
//! states 2
//! initial 0
//! finals 1
//! trans 0 a 1
//! ...
//! ```
//!
//! Exactly one `trans` line per (state, letter) pair.

use std::fmt;

use super::{CompleteDfa, StateId};
use crate::alphabet::Alphabet;
use crate::error::{Error, Result};

/// Parses the DFA text format. Partial tables are rejected.
pub fn parse_dfa(input: &str) -> Result<CompleteDfa> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let mut header = |keyword: &str| -> Result<(usize, Vec<&str>)> {
        let (no, line) = lines
            .next()
            .ok_or_else(|| Error::parse(0, format!("missing `{keyword}` line")))?;
        let mut tokens = line.split_whitespace();
        if tokens.next() != Some(keyword) {
            return Err(Error::parse(no, format!("expected `{keyword}` line")));
        }
        Ok((no, tokens.collect()))
    };

    let (no, letters) = header("alphabet")?;
    let mut chars = Vec::with_capacity(letters.len());
    for tok in letters {
        let mut it = tok.chars();
        match (it.next(), it.next()) {
            (Some(c), None) => chars.push(c),
            _ => {
                return Err(Error::parse(
                    no,
                    format!("letter `{tok}` is not a single character"),
                ))
            }
        }
    }
    let alphabet = Alphabet::new(chars)?;

    let (no, rest) = header("states")?;
    let state_count = match rest.as_slice() {
        [n] => parse_index(no, n)?,
        _ => return Err(Error::parse(no, "`states` takes exactly one number")),
    };
    if state_count == 0 {
        return Err(Error::parse(no, "state count must be positive"));
    }
    let in_range = |no: usize, s: StateId| {
        if s < state_count {
            Ok(s)
        } else {
            Err(Error::StateOutOfRange {
                state: s,
                count: state_count,
            })
            .map_err(|e| Error::parse(no, e.to_string()))
        }
    };

    let (no, rest) = header("initial")?;
    let initial = match rest.as_slice() {
        [s] => in_range(no, parse_index(no, s)?)?,
        _ => return Err(Error::parse(no, "`initial` takes exactly one state")),
    };

    let (no, rest) = header("finals")?;
    let finals = rest
        .iter()
        .map(|s| in_range(no, parse_index(no, s)?))
        .collect::<Result<Vec<_>>>()?;

    let mut trans = Vec::new();
    for (no, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let [kw, from, letter, to] = tokens.as_slice() else {
            return Err(Error::parse(
                no,
                "expected `trans <state> <letter> <state>`",
            ));
        };
        if *kw != "trans" {
            return Err(Error::parse(no, format!("unexpected keyword `{kw}`")));
        }
        let from = in_range(no, parse_index(no, from)?)?;
        let to = in_range(no, parse_index(no, to)?)?;
        let mut it = letter.chars();
        let letter = match (it.next(), it.next()) {
            (Some(c), None) => alphabet
                .index_of(c)
                .map_err(|e| Error::parse(no, e.to_string()))?,
            _ => {
                return Err(Error::parse(
                    no,
                    format!("letter `{letter}` is not a single character"),
                ))
            }
        };
        trans.push((from, letter, to, no));
    }

    trans.sort_by_key(|&(from, letter, _, no)| (from, letter, no));
    for pair in trans.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        if (a.0, a.1) == (b.0, b.1) {
            return Err(Error::DuplicateTransition {
                state: b.0,
                letter: alphabet.symbol(b.1),
            })
            .map_err(|e| Error::parse(b.3, e.to_string()));
        }
    }
    let k = alphabet.len();
    // After deduplication, the sorted keys must be exactly 0..state_count*k.
    for (expected, &(from, letter, _, _)) in trans.iter().enumerate() {
        if from * k + letter != expected {
            return Err(Error::MissingTransition {
                state: expected / k,
                letter: alphabet.symbol(expected % k),
            });
        }
    }
    if state_count.checked_mul(k) != Some(trans.len()) {
        let next = trans.len();
        return Err(Error::MissingTransition {
            state: next / k,
            letter: alphabet.symbol(next % k),
        });
    }

    let mut mask = vec![false; state_count];
    for f in finals {
        mask[f] = true;
    }
    let delta = trans.into_iter().map(|(_, _, to, _)| to).collect();
    Ok(CompleteDfa::from_parts(alphabet, initial, mask, delta))
}

fn parse_index(line: usize, tok: &str) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| Error::parse(line, format!("`{tok}` is not a non-negative integer")))
}

impl fmt::Display for CompleteDfa {
    /// Writes the text format accepted by [`parse_dfa`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "alphabet {}", self.alphabet)?;
        writeln!(f, "states {}", self.state_count)?;
        writeln!(f, "initial {}", self.initial)?;
        write!(f, "finals")?;
        for s in self.finals() {
            write!(f, " {s}")?;
        }
        writeln!(f)?;
        for s in 0..self.state_count {
            for (l, &c) in self.alphabet.letters().iter().enumerate() {
                writeln!(f, "trans {s} {c} {}", self.step(s, l))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const PARITY: &str = "\
# b-parity
alphabet a b
states 2
initial 0
finals 0
trans 0 a 0
trans 0 b 1
trans 1 a 1
trans 1 b 0
";

    #[test]
    fn parses_and_prints() {
        let d = parse_dfa(PARITY).unwrap();
        assert_eq!(d.state_count(), 2);
        assert!(d.accepts_str("abab").unwrap());
        assert!(!d.accepts_str("ab").unwrap());
        assert_eq!(parse_dfa(&d.to_string()).unwrap(), d);
    }

    #[test]
    fn empty_finals_list_is_allowed() {
        let d = parse_dfa("alphabet a\nstates 1\ninitial 0\nfinals\ntrans 0 a 0\n").unwrap();
        assert_eq!(d.finals().count(), 0);
    }

    #[test]
    fn rejects_missing_transition() {
        let text = PARITY.replace("trans 1 a 1\n", "");
        assert_eq!(
            parse_dfa(&text),
            Err(Error::MissingTransition {
                state: 1,
                letter: 'a'
            })
        );
        let text = PARITY.replace("trans 1 b 0\n", "");
        assert_eq!(
            parse_dfa(&text),
            Err(Error::MissingTransition {
                state: 1,
                letter: 'b'
            })
        );
    }

    #[test]
    fn rejects_duplicate_transition() {
        let text = format!("{PARITY}trans 0 a 1\n");
        assert!(matches!(
            parse_dfa(&text),
            Err(Error::Parse { line: 10, .. })
        ));
    }

    #[test]
    fn rejects_out_of_range_and_unknown_letters() {
        let text = PARITY.replace("trans 0 b 1", "trans 0 b 2");
        assert!(matches!(
            parse_dfa(&text),
            Err(Error::Parse { line: 7, .. })
        ));
        let text = PARITY.replace("trans 0 b 1", "trans 0 c 1");
        assert!(matches!(
            parse_dfa(&text),
            Err(Error::Parse { line: 7, .. })
        ));
        let text = PARITY.replace("finals 0", "finals 9");
        assert!(parse_dfa(&text).is_err());
        let text = PARITY.replace("initial 0", "initial 2");
        assert!(parse_dfa(&text).is_err());
    }

    #[test]
    fn rejects_misordered_headers() {
        let text = PARITY.replace("states 2\ninitial 0", "initial 0\nstates 2");
        assert!(parse_dfa(&text).is_err());
        assert!(parse_dfa("").is_err());
    }
}
