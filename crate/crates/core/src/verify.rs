//! Reproduction harness: recomputes every tracked quantity and compares it
//! with the values in `data/expected.json`.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::alphabet::Alphabet;
use crate::bounds::{bpol1_bound, kal_monoid_bound, kal_state_bound};
use crate::constructions::{
    content_dfa, mod_count_dfa, prop2_k, prop2_l, sl_free_monoid, star_dfa,
};
use crate::dfa::CompleteDfa;
use crate::error::{Error, Result};
use crate::kal::kal_construct;
use crate::monoid::{
    green_summary, kernel_equal, syntactic_monoid, syntactic_quotient_by, RecognizedLanguage,
};
use crate::schutz::{MuMap, SchutzProduct};
use crate::xi::xi_image;

/// The expected-values file shipped with the crate.
pub const EXPECTED_JSON: &str = include_str!("../data/expected.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    /// Computed value equals the expected value.
    Eq,
    /// Computed value is at most the expected value (integers).
    Le,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedEntry {
    pub name: String,
    pub value: String,
    pub relation: Relation,
    /// `published`, `formula` or `computed`.
    pub source: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedValues {
    pub checks: Vec<ExpectedEntry>,
}

impl ExpectedValues {
    pub fn builtin() -> Self {
        Self::parse(EXPECTED_JSON).expect("embedded expected values are well-formed")
    }

    pub fn parse(input: &str) -> Result<Self> {
        serde_json::from_str(input).map_err(|e| Error::parse(e.line(), e.to_string()))
    }

    pub fn get(&self, name: &str) -> Option<&ExpectedEntry> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Replaces the expected value of `name`; returns false if absent.
    pub fn set(&mut self, name: &str, value: impl Into<String>) -> bool {
        match self.checks.iter_mut().find(|c| c.name == name) {
            Some(entry) => {
                entry.value = value.into();
                true
            }
            None => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub relation: Relation,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
    pub overall: bool,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        let mut out = String::new();
        for c in &self.checks {
            let rel = match (c.relation, c.pass) {
                (Relation::Eq, true) => "=",
                (Relation::Eq, false) => "!=",
                (Relation::Le, true) => "<=",
                (Relation::Le, false) => "!<=",
            };
            out.push_str(&format!(
                "{} {:width$}  computed {} {rel} expected {}\n",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.computed,
                c.expected,
            ));
        }
        let failed = self.checks.iter().filter(|c| !c.pass).count();
        out.push_str(&format!(
            "{} of {} checks passed\n",
            self.checks.len() - failed,
            self.checks.len()
        ));
        out
    }
}

/// Runs every check against the shipped expected values.
pub fn verify_all() -> VerifyReport {
    verify_with(&ExpectedValues::builtin())
}

pub fn verify_with(expected: &ExpectedValues) -> VerifyReport {
    let computed = compute_all();
    let mut checks = Vec::with_capacity(computed.len());
    for (name, value) in computed {
        let entry = expected.get(&name);
        let (relation, exp) = match entry {
            Some(e) => (e.relation, e.value.clone()),
            None => (Relation::Eq, "<missing>".to_string()),
        };
        let (computed, pass) = match value {
            Ok(v) => {
                let pass = entry.is_some() && compare(relation, &v, &exp);
                (v, pass)
            }
            Err(e) => (format!("error: {e}"), false),
        };
        checks.push(CheckResult {
            name,
            relation,
            expected: exp,
            computed,
            pass,
        });
    }
    let overall = checks.iter().all(|c| c.pass);
    VerifyReport { checks, overall }
}

fn compare(relation: Relation, computed: &str, expected: &str) -> bool {
    match relation {
        Relation::Eq => computed == expected,
        Relation::Le => match (
            computed.parse::<num_bigint::BigUint>(),
            expected.parse::<num_bigint::BigUint>(),
        ) {
            (Ok(c), Ok(e)) => c <= e,
            _ => false,
        },
    }
}

type Computed = Vec<(String, Result<String>)>;

fn compute_all() -> Computed {
    let mut out: Computed = Vec::new();
    kal_state_checks(&mut out);
    mod_count_checks(&mut out);
    example1_checks(&mut out);
    example2_checks(&mut out);
    example3_checks(&mut out);
    recognition_checks(&mut out);
    out
}

fn push<T: ToString>(out: &mut Computed, name: impl Into<String>, value: Result<T>) {
    out.push((name.into(), value.map(|v| v.to_string())));
}

/// `(k, ℓ)` pairs for the state-complexity witnesses.
pub const KAL_STATE_CASES: [(usize, usize); 5] = [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)];

/// `(m, n)` moduli for the counting witnesses.
pub const MOD_COUNT_CASES: [(usize, usize); 3] = [(2, 2), (3, 2), (4, 2)];

pub fn kal_witness_states(k: usize, l: usize) -> Result<usize> {
    Ok(kal_construct(&prop2_k(k)?, &prop2_l(l)?, 'a')?
        .minimize()
        .state_count())
}

fn kal_state_checks(out: &mut Computed) {
    for (k, l) in KAL_STATE_CASES {
        push(
            out,
            format!("kal_states/k{k}_l{l}"),
            kal_witness_states(k, l),
        );
    }
    push(
        out,
        "kal_states/random_within_bound",
        random_kal_bound_holds(100, 0x4b614c).map(|(ok, _)| ok),
    );
}

/// A random complete DFA with `states` states over `alphabet`.
pub fn random_dfa<R: Rng>(rng: &mut R, alphabet: &Alphabet, states: usize) -> CompleteDfa {
    let delta = (0..states)
        .map(|_| {
            (0..alphabet.len())
                .map(|_| rng.random_range(0..states))
                .collect()
        })
        .collect();
    let finals: Vec<usize> = (0..states).filter(|_| rng.random_bool(0.5)).collect();
    CompleteDfa::new(alphabet.clone(), 0, &finals, delta).expect("random table is complete")
}

/// Over `pairs` random `(K, L)` with at most 4 states each on `{a,b,c}`,
/// counts how many minimal `KaL` automata respect `k·2^ℓ` where `k`, `ℓ`
/// are the minimal state counts of `K` and `L`. Returns `(ok, pairs)`.
pub fn random_kal_bound_holds(pairs: usize, seed: u64) -> Result<(usize, usize)> {
    let alphabet = Alphabet::from_chars("abc")?;
    let mut rng = StdRng::seed_from_u64(seed);
    let mut ok = 0;
    for _ in 0..pairs {
        let (nk, nl) = (rng.random_range(1..=4), rng.random_range(1..=4));
        let dk = random_dfa(&mut rng, &alphabet, nk);
        let dl = random_dfa(&mut rng, &alphabet, nl);
        let k = dk.minimize().state_count();
        let l = dl.minimize().state_count();
        let states = kal_construct(&dk, &dl, 'a')?.minimize().state_count();
        if num_bigint::BigUint::from(states) <= kal_state_bound(k, l) {
            ok += 1;
        }
    }
    Ok((ok, pairs))
}

/// Syntactic monoids of `|u|_b ≡ 0 (mod m)` and `|u|_c ≡ 0 (mod n)` over `{a,b,c}`.
pub fn mod_count_languages(m: usize, n: usize) -> Result<(RecognizedLanguage, RecognizedLanguage)> {
    let alphabet = Alphabet::from_chars("abc")?;
    Ok((
        syntactic_monoid(&mod_count_dfa('b', m, &alphabet)?)?,
        syntactic_monoid(&mod_count_dfa('c', n, &alphabet)?)?,
    ))
}

pub fn mod_count_kal_dfa(m: usize, n: usize) -> Result<CompleteDfa> {
    let alphabet = Alphabet::from_chars("abc")?;
    kal_construct(
        &mod_count_dfa('b', m, &alphabet)?,
        &mod_count_dfa('c', n, &alphabet)?,
        'a',
    )
}

fn mod_count_checks(out: &mut Computed) {
    for (m, n) in MOD_COUNT_CASES {
        let tag = format!("m{m}_n{n}");
        let image = mod_count_languages(m, n)
            .and_then(|(k, l)| MuMap::new(&k, &l, 'a')?.image(crate::monoid::DEFAULT_CAP));
        push(
            out,
            format!("mu_image/mod_count_{tag}"),
            image.as_ref().map(|i| i.size()).map_err(Clone::clone),
        );

        let by_dfa = mod_count_kal_dfa(m, n).and_then(|d| syntactic_monoid(&d));
        push(
            out,
            format!("kal_monoid/dfa_{tag}"),
            by_dfa
                .as_ref()
                .map(|s| s.monoid().size())
                .map_err(Clone::clone),
        );
        if (m, n) != (4, 2) {
            let quotient = image.as_ref().map_err(Clone::clone).and_then(|img| {
                let q = syntactic_quotient_by(
                    img.monoid(),
                    &img.accept_set(),
                    img.hom.letter_images(),
                )?;
                Ok((q.monoid.size(), q.compose(&img.hom)?))
            });
            push(
                out,
                format!("kal_monoid/quotient_{tag}"),
                quotient.as_ref().map(|q| q.0).map_err(Clone::clone),
            );
            let same = match (&by_dfa, &quotient) {
                (Ok(s), Ok((_, h))) => kernel_equal(&s.hom, h),
                (Err(e), _) | (_, Err(e)) => Err(e.clone()),
            };
            push(out, format!("kal_monoid/kernel_equal_{tag}"), same);
        }
        push(
            out,
            format!("kal_monoid/formula_{tag}"),
            Ok(kal_monoid_bound(m, n)),
        );
    }
}

fn example1_checks(out: &mut Computed) {
    let result = (|| -> Result<_> {
        let alphabet = Alphabet::from_chars("abcd")?;
        let k = syntactic_monoid(&star_dfa("ab", &alphabet)?)?;
        let l = syntactic_monoid(&star_dfa("ac", &alphabet)?)?;
        let order = SchutzProduct::new(k.monoid().clone(), l.monoid().clone()).order();
        let image = MuMap::new(&k, &l, 'a')?.image(crate::monoid::DEFAULT_CAP)?;
        let synt = syntactic_quotient_by(
            image.monoid(),
            &image.accept_set(),
            image.hom.letter_images(),
        )?;
        // Same language through automata: B*·a·C*.
        let direct = syntactic_monoid(&kal_construct(
            &star_dfa("ab", &alphabet)?,
            &star_dfa("ac", &alphabet)?,
            'a',
        )?)?;
        Ok((
            order,
            image.size(),
            synt.monoid.size(),
            direct.monoid().size(),
        ))
    })();
    match result {
        Ok((order, image, synt, direct)) => {
            push(out, "example1/schutz_order", Ok(order));
            push(out, "example1/mu_image", Ok(image));
            push(out, "example1/syntactic_quotient", Ok(synt));
            push(out, "example1/syntactic_dfa", Ok(direct));
        }
        Err(e) => {
            for name in [
                "example1/schutz_order",
                "example1/mu_image",
                "example1/syntactic_quotient",
                "example1/syntactic_dfa",
            ] {
                out.push((name.into(), Err(e.clone())));
            }
        }
    }
}

/// Content languages `c(u) = {a,b}` and `c(u) = {a,c}` over `{a,b,c}`.
pub fn content_languages() -> Result<(RecognizedLanguage, RecognizedLanguage)> {
    let alphabet = Alphabet::from_chars("abc")?;
    Ok((
        syntactic_monoid(&content_dfa("ab", &alphabet)?)?,
        syntactic_monoid(&content_dfa("ac", &alphabet)?)?,
    ))
}

fn example2_checks(out: &mut Computed) {
    const NAMES: [&str; 9] = [
        "example2/j_trivial",
        "example2/rho_k",
        "example2/lambda_k",
        "example2/rho_l",
        "example2/lambda_l",
        "example2/witness_p12_size",
        "example2/witness_p12_set",
        "example2/max_p12_size",
        "example2/mu_image",
    ];
    let result = (|| -> Result<Vec<String>> {
        let (k, l) = content_languages()?;
        let gk = green_summary(k.monoid());
        let gl = green_summary(l.monoid());
        let mu = MuMap::new(&k, &l, 'a')?;
        let alphabet = mu.alphabet().clone();
        let w = mu.eval(&alphabet.word("aababacacaa")?)?;
        let got = mu.product().pairs(&w);

        // Name elements by witness words: φ over B = {a,b}, ψ over C = {a,c}.
        let phi = |s: &str| k.hom.eval_str(s);
        let psi = |s: &str| l.hom.eval_str(s);
        let mut listed = vec![
            (phi("")?, psi("b")?),
            (phi("a")?, psi("b")?),
            (phi("ab")?, psi("b")?),
            (phi("ab")?, psi("ac")?),
            (phi("c")?, psi("ac")?),
            (phi("c")?, psi("a")?),
            (phi("c")?, psi("")?),
        ];
        listed.sort_unstable();
        listed.dedup();

        let image = mu.image(crate::monoid::DEFAULT_CAP)?;
        let max_p12 = image
            .elements
            .iter()
            .map(|e| e.p12.len())
            .max()
            .unwrap_or(0);
        Ok(vec![
            (gk.j_trivial && gl.j_trivial).to_string(),
            gk.rho.to_string(),
            gk.lambda.to_string(),
            gl.rho.to_string(),
            gl.lambda.to_string(),
            got.len().to_string(),
            (got == listed && listed.len() == 7).to_string(),
            max_p12.to_string(),
            image.size().to_string(),
        ])
    })();
    match result {
        Ok(values) => {
            for (name, v) in NAMES.iter().zip(values) {
                out.push((name.to_string(), Ok(v)));
            }
        }
        Err(e) => {
            for name in NAMES {
                out.push((name.into(), Err(e.clone())));
            }
        }
    }
}

fn example3_checks(out: &mut Computed) {
    let free = Alphabet::from_chars("ab").and_then(|a| sl_free_monoid(&a));
    let mu = free.as_ref().map_err(Clone::clone).and_then(|h| {
        let lang = RecognizedLanguage {
            hom: h.clone(),
            accept: vec![false; h.target().size()],
        };
        Ok(MuMap::new(&lang, &lang, 'a')?
            .image(crate::monoid::DEFAULT_CAP)?
            .size())
    });
    push(out, "example3/mu_image", mu);
    let xi = free
        .as_ref()
        .map_err(Clone::clone)
        .and_then(xi_image)
        .map(|x| (x.size(), x.elements.iter().all(|e| e.diagonal_coherent())));
    let size = xi.as_ref().map(|x| x.0).map_err(Clone::clone);
    push(out, "example3/xi_image", size.clone());
    push(out, "example3/xi_image_at_most_100", size.clone());
    push(out, "example3/xi_image_at_most_900", size);
    push(out, "example3/xi_diagonal_coherent", xi.map(|x| x.1));
    push(out, "example3/bpol1_bound_n4_d2", Ok(bpol1_bound(4, 2)));
}

/// Agreement of `μ_a` recognition with the `KaL` automaton on every word of
/// length at most 6, over all three-letter witness configurations.
pub fn recognition_agreement(max_len: usize) -> Result<bool> {
    let alphabet = Alphabet::from_chars("abc")?;
    let mut configs: Vec<(CompleteDfa, CompleteDfa)> = Vec::new();
    for (k, l) in KAL_STATE_CASES {
        configs.push((prop2_k(k)?, prop2_l(l)?));
    }
    for (m, n) in MOD_COUNT_CASES {
        configs.push((
            mod_count_dfa('b', m, &alphabet)?,
            mod_count_dfa('c', n, &alphabet)?,
        ));
    }
    configs.push((content_dfa("ab", &alphabet)?, content_dfa("ac", &alphabet)?));
    configs.push((star_dfa("ab", &alphabet)?, star_dfa("ac", &alphabet)?));
    let words = alphabet.words_up_to(max_len);
    for (dk, dl) in configs {
        let kal = kal_construct(&dk, &dl, 'a')?;
        let mu = MuMap::new(&syntactic_monoid(&dk)?, &syntactic_monoid(&dl)?, 'a')?;
        for w in &words {
            if mu.recognizes(w)? != kal.accepts(w) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn recognition_checks(out: &mut Computed) {
    push(
        out,
        "oracle/mu_recognizes_matches_kal_dfa",
        recognition_agreement(6),
    );
}
