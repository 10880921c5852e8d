//! Transition monoids of automata and syntactic quotients of monoids.

use std::collections::HashMap;

use super::{generate, Elem, FiniteMonoid, MonoidHom, RecognizedLanguage, DEFAULT_CAP};
use crate::dfa::CompleteDfa;
use crate::error::{Error, Result};

/// The monoid of state transformations induced by words on `dfa`, with the
/// letter homomorphism and the elements sending the initial state to a
/// final state.
pub fn transition_monoid(dfa: &CompleteDfa, cap: usize) -> Result<RecognizedLanguage> {
    let n = dfa.state_count();
    let k = dfa.alphabet().len();
    let identity: Vec<u32> = (0..n as u32).collect();
    let gens: Vec<Vec<u32>> = (0..k)
        .map(|l| (0..n).map(|s| dfa.step(s, l) as u32).collect())
        .collect();
    // Words act on the right: apply `f`, then `g`.
    let compose = |f: &Vec<u32>, g: &Vec<u32>| f.iter().map(|&s| g[s as usize]).collect();
    let closure = generate(identity, &gens, compose, cap)?;
    let monoid = closure.to_monoid()?;
    let images = (0..k).map(|l| closure.generator(l)).collect();
    let accept = closure
        .elements
        .iter()
        .map(|f| dfa.is_final(f[dfa.initial()] as usize))
        .collect();
    Ok(RecognizedLanguage {
        hom: MonoidHom::new(monoid, dfa.alphabet().clone(), images)?,
        accept,
    })
}

/// Syntactic monoid of the language of `dfa`, as the transition monoid of
/// its minimal automaton.
pub fn syntactic_monoid(dfa: &CompleteDfa) -> Result<RecognizedLanguage> {
    syntactic_monoid_capped(dfa, DEFAULT_CAP)
}

pub fn syntactic_monoid_capped(dfa: &CompleteDfa, cap: usize) -> Result<RecognizedLanguage> {
    transition_monoid(&dfa.minimize(), cap)
}

/// A quotient `M/≈` with its projection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub monoid: FiniteMonoid,
    /// `projection[x]` is the class of `x`.
    pub projection: Vec<Elem>,
    /// Image of the accepting set; the accepting set is a union of classes.
    pub accept: Vec<bool>,
}

impl Quotient {
    /// `projection ∘ hom`.
    pub fn compose(&self, hom: &MonoidHom) -> Result<MonoidHom> {
        if hom.target().size() != self.projection.len() {
            return Err(Error::InvalidArgument(
                "homomorphism target does not match the quotiented monoid".into(),
            ));
        }
        let images = hom
            .letter_images()
            .iter()
            .map(|&x| self.projection[x as usize])
            .collect();
        MonoidHom::new(self.monoid.clone(), hom.alphabet().clone(), images)
    }
}

/// Syntactic quotient of `m` with respect to `accept`, using every element
/// as a translation.
pub fn syntactic_quotient(m: &FiniteMonoid, accept: &[Elem]) -> Result<Quotient> {
    let all: Vec<Elem> = m.elements().collect();
    syntactic_quotient_by(m, accept, &all)
}

/// Syntactic quotient of `m` with respect to `accept`, where `generators`
/// generate `m`.
///
/// `p ≈ q` iff `xpy ∈ accept ⇔ xqy ∈ accept` for all `x, y`. The congruence
/// is the coarsest partition refining `{accept, rest}` that is stable under
/// left and right multiplication by the generators; it is found by Moore
/// refinement on both Cayley graphs. Classes are numbered by their first
/// element in `m`'s order.
pub fn syntactic_quotient_by(
    m: &FiniteMonoid,
    accept: &[Elem],
    generators: &[Elem],
) -> Result<Quotient> {
    let n = m.size();
    let mut mask = vec![false; n];
    for &x in accept.iter().chain(generators) {
        if x as usize >= n {
            return Err(Error::InvalidArgument(format!(
                "element {x} outside 0..{n}"
            )));
        }
    }
    for &x in accept {
        mask[x as usize] = true;
    }

    let mut class: Vec<u32> = renumber(mask.iter().map(|&b| b as u32));
    let mut count = distinct(&class);
    loop {
        let mut seen: HashMap<Vec<u32>, u32> = HashMap::new();
        let mut next = Vec::with_capacity(n);
        for x in m.elements() {
            let mut sig = Vec::with_capacity(1 + 2 * generators.len());
            sig.push(class[x as usize]);
            for &g in generators {
                sig.push(class[m.mul(x, g) as usize]);
                sig.push(class[m.mul(g, x) as usize]);
            }
            let fresh = seen.len() as u32;
            next.push(*seen.entry(sig).or_insert(fresh));
        }
        class = next;
        let c = seen.len();
        if c == count {
            break;
        }
        count = c;
    }

    let mut rep = Vec::with_capacity(count);
    for x in m.elements() {
        if class[x as usize] as usize == rep.len() {
            rep.push(x);
        }
    }
    debug_assert_eq!(rep.len(), count);
    let table = rep
        .iter()
        .flat_map(|&p| rep.iter().map(move |&q| (p, q)))
        .map(|(p, q)| class[m.mul(p, q) as usize])
        .collect();
    let quotient = FiniteMonoid::from_flat(class[m.identity() as usize], count, table);
    let accept = rep.iter().map(|&p| mask[p as usize]).collect();
    Ok(Quotient {
        monoid: quotient,
        projection: class,
        accept,
    })
}

/// Renumbers labels by first occurrence.
fn renumber<I: IntoIterator<Item = u32>>(labels: I) -> Vec<u32> {
    let mut map = HashMap::new();
    labels
        .into_iter()
        .map(|l| {
            let fresh = map.len() as u32;
            *map.entry(l).or_insert(fresh)
        })
        .collect()
}

fn distinct(labels: &[u32]) -> usize {
    labels.iter().copied().max().map_or(0, |m| m as usize + 1)
}
