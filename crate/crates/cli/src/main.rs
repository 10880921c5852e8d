//! `kal`: command-line front end for the KaL toolkit.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 input error,
//! 3 size limit exceeded.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use kal_core::constructions::{
    content_dfa, mod_count_dfa, prop2_k, prop2_l, sl_free_monoid, star_dfa, trivial_free_monoid,
};
use kal_core::kal::kal_construct;
use kal_core::monoid::{
    green_summary, monoid_to_json, parse_monoid_json, syntactic_monoid_capped, DEFAULT_CAP,
};
use kal_core::schutz::{schutz_element_to_json, MuMap, SchutzProduct};
use kal_core::verify::{verify_with, ExpectedValues};
use kal_core::xi::{bpol1_bound, xi_image_capped};
use kal_core::{parse_dfa, Alphabet, CompleteDfa, Error};

#[derive(Parser)]
#[command(
    name = "kal",
    version,
    about = "Marked concatenation KaL: automata and monoids"
)]
struct Cli {
    /// Maximum number of elements of any materialized monoid.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimize a DFA.
    Minimize { dfa: PathBuf },
    /// Build a DFA for K·marker·L.
    Kal {
        dfa_k: PathBuf,
        dfa_l: PathBuf,
        #[arg(long)]
        marker: char,
        #[arg(long)]
        minimize: bool,
    },
    /// Syntactic monoid of a DFA's language, as monoid JSON.
    Monoid { dfa: PathBuf },
    /// Order of M◊N, or the full product with --enumerate.
    Schutz {
        mon_m: PathBuf,
        mon_n: PathBuf,
        #[arg(long)]
        enumerate: bool,
    },
    /// Image of μ_a in the product of the two syntactic monoids.
    MuImage {
        dfa_k: PathBuf,
        dfa_l: PathBuf,
        #[arg(long)]
        marker: char,
        /// Also list each element as a matrix.
        #[arg(long)]
        elements: bool,
    },
    /// Green's-relation summary of a monoid.
    Green { monoid: PathBuf },
    /// Emit a witness automaton in the DFA text format.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Free monoid for BPol₁ of a variety, via the ξ map.
    Xi {
        #[arg(long, value_enum)]
        variety: Variety,
        #[arg(long)]
        alphabet: String,
        /// Also print the multiplication table.
        #[arg(long)]
        table: bool,
    },
    /// Recompute every tracked value and compare with the expected table.
    Verify {
        #[arg(long)]
        json: bool,
        /// Use this expected-values file instead of the built-in one.
        #[arg(long)]
        expected: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Left witness: a resets, b counts mod k, c loops.
    Prop2k {
        #[arg(long)]
        k: usize,
    },
    /// Right witness: a counts mod l, b loops, c goes to state 1.
    Prop2l {
        #[arg(long = "l", visible_alias = "ell")]
        ell: usize,
    },
    /// Words whose count of a letter is divisible by a modulus.
    Modcount {
        #[arg(long)]
        letter: char,
        #[arg(long = "mod")]
        modulus: usize,
        #[arg(long)]
        alphabet: String,
    },
    /// B* over A.
    Star {
        #[arg(long)]
        letters: String,
        #[arg(long)]
        alphabet: String,
    },
    /// Words with content exactly B.
    Content {
        #[arg(long)]
        letters: String,
        #[arg(long)]
        alphabet: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Variety {
    /// Semilattices: words are identified by their content.
    Sl,
    /// The trivial variety.
    Trivial,
}

enum Failure {
    Input(String),
    SizeLimit(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_size_limit() {
            Failure::SizeLimit(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_dfa(path: &Path) -> Result<CompleteDfa, Failure> {
    parse_dfa(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn run(cli: Cli) -> Result<String, Failure> {
    let cap = cli.cap;
    match cli.command {
        Command::Minimize { dfa } => Ok(read_dfa(&dfa)?.minimize().to_string()),
        Command::Kal {
            dfa_k,
            dfa_l,
            marker,
            minimize,
        } => {
            let d = kal_construct(&read_dfa(&dfa_k)?, &read_dfa(&dfa_l)?, marker)?;
            Ok(if minimize { d.minimize() } else { d }.to_string())
        }
        Command::Monoid { dfa } => {
            let s = syntactic_monoid_capped(&read_dfa(&dfa)?, cap)?;
            let acc = s.accept_set();
            Ok(pretty(&monoid_to_json(
                s.monoid(),
                Some(&s.hom),
                Some(&acc),
            )))
        }
        Command::Schutz {
            mon_m,
            mon_n,
            enumerate,
        } => {
            let m = parse_monoid_json(&read(&mon_m)?)?.monoid;
            let n = parse_monoid_json(&read(&mon_n)?)?.monoid;
            let product = SchutzProduct::new(m, n);
            if enumerate {
                let (whole, _) = product.enumerate_capped(cap)?;
                Ok(pretty(&monoid_to_json(&whole, None, None)))
            } else {
                Ok(pretty(&json!({
                    "m": product.left().size(),
                    "n": product.right().size(),
                    "order": product.order().to_string(),
                })))
            }
        }
        Command::MuImage {
            dfa_k,
            dfa_l,
            marker,
            elements,
        } => {
            let k = syntactic_monoid_capped(&read_dfa(&dfa_k)?, cap)?;
            let l = syntactic_monoid_capped(&read_dfa(&dfa_l)?, cap)?;
            let mu = MuMap::new(&k, &l, marker)?;
            let img = mu.image(cap)?;
            let acc = img.accept_set();
            let mut out = monoid_to_json(img.monoid(), Some(&img.hom), Some(&acc));
            if elements {
                let list: Vec<Value> = img
                    .elements
                    .iter()
                    .map(|e| schutz_element_to_json(e, mu.product()))
                    .collect();
                out["elements"] = Value::Array(list);
            }
            Ok(pretty(&out))
        }
        Command::Green { monoid } => {
            let doc = parse_monoid_json(&read(&monoid)?)?;
            let g = green_summary(&doc.monoid);
            Ok(pretty(
                &serde_json::to_value(g).expect("summary serializes"),
            ))
        }
        Command::Gen { family } => {
            let d = match family {
                Family::Prop2k { k } => prop2_k(k)?,
                Family::Prop2l { ell } => prop2_l(ell)?,
                Family::Modcount {
                    letter,
                    modulus,
                    alphabet,
                } => mod_count_dfa(letter, modulus, &Alphabet::from_chars(&alphabet)?)?,
                Family::Star { letters, alphabet } => {
                    star_dfa(&letters, &Alphabet::from_chars(&alphabet)?)?
                }
                Family::Content { letters, alphabet } => {
                    content_dfa(&letters, &Alphabet::from_chars(&alphabet)?)?
                }
            };
            Ok(d.to_string())
        }
        Command::Xi {
            variety,
            alphabet,
            table,
        } => {
            let alphabet = Alphabet::from_chars(&alphabet)?;
            let free = match variety {
                Variety::Sl => sl_free_monoid(&alphabet)?,
                Variety::Trivial => trivial_free_monoid(&alphabet),
            };
            let xi = xi_image_capped(&free, cap)?;
            let mut out = json!({
                "free_size": free.target().size(),
                "letters": alphabet.len(),
                "size": xi.size(),
                "bound": bpol1_bound(free.target().size(), alphabet.len()).to_string(),
                "diagonal_coherent": xi.elements.iter().all(|e| e.diagonal_coherent()),
            });
            if table {
                out["monoid"] = monoid_to_json(xi.monoid(), Some(&xi.hom), None);
            }
            Ok(pretty(&out))
        }
        Command::Verify { json, expected } => {
            let expected = match expected {
                Some(path) => ExpectedValues::parse(&read(&path)?)?,
                None => ExpectedValues::builtin(),
            };
            let report = verify_with(&expected);
            let text = if json {
                report.to_json()
            } else {
                report.to_text()
            };
            if report.overall {
                Ok(text)
            } else {
                emit(&text)?;
                Err(Failure::Mismatch)
            }
        }
    }
}

/// Writes `text` with exactly one trailing newline; a closed pipe is not an error.
fn emit(text: &str) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    match writeln!(out, "{}", text.trim_end_matches('\n')).and_then(|_| out.flush()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => {
            Err(Failure::Input(format!("writing output: {e}")))
        }
        _ => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli).and_then(|out| emit(&out)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::SizeLimit(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
