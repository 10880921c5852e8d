//! The homomorphism `μ_a : A* → M◊N` recognizing `KaL`.

use super::{SchutzElement, SchutzProduct};
use crate::alphabet::{Alphabet, Letter, Word};
use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::monoid::{generate, Elem, FiniteMonoid, MonoidHom, RecognizedLanguage, DEFAULT_CAP};

/// `μ_a` for `K = φ⁻¹(S)` and `L = ψ⁻¹(T)`.
///
/// A letter `b` maps to `(φ(b), ψ(b), {(1, 1)})` when `b = a` and to
/// `(φ(b), ψ(b), ∅)` otherwise; words map to the product of their letters.
#[derive(Debug, Clone)]
pub struct MuMap {
    product: SchutzProduct,
    alphabet: Alphabet,
    marker: Letter,
    letters: Vec<SchutzElement>,
    /// `S × T` as a pair set.
    accept_pairs: BitSet,
}

impl MuMap {
    pub fn new(k: &RecognizedLanguage, l: &RecognizedLanguage, marker: char) -> Result<Self> {
        if k.alphabet() != l.alphabet() {
            return Err(Error::AlphabetMismatch);
        }
        let alphabet = k.alphabet().clone();
        let marker = alphabet.index_of(marker)?;
        let product = SchutzProduct::new(k.monoid().clone(), l.monoid().clone());
        let letters = (0..alphabet.len())
            .map(|b| {
                let mut p12 = product.empty_set();
                if b == marker {
                    p12.insert(product.pair_index(k.monoid().identity(), l.monoid().identity()));
                }
                SchutzElement {
                    p11: k.hom.image_of(b),
                    p22: l.hom.image_of(b),
                    p12,
                }
            })
            .collect();
        let mut accept_pairs = product.empty_set();
        for s in k.accept_set() {
            for t in l.accept_set() {
                accept_pairs.insert(product.pair_index(s, t));
            }
        }
        Ok(MuMap {
            product,
            alphabet,
            marker,
            letters,
            accept_pairs,
        })
    }

    pub fn product(&self) -> &SchutzProduct {
        &self.product
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn marker(&self) -> Letter {
        self.marker
    }

    pub fn letter_image(&self, letter: Letter) -> &SchutzElement {
        &self.letters[letter]
    }

    pub fn eval(&self, word: &Word) -> Result<SchutzElement> {
        word.letters()
            .iter()
            .try_fold(self.product.identity(), |acc, &b| {
                let img = self.letters.get(b).ok_or_else(|| {
                    Error::InvalidArgument(format!(
                        "letter index {b} outside an alphabet of {} letters",
                        self.alphabet.len()
                    ))
                })?;
                Ok(self.product.mul(&acc, img))
            })
    }

    /// Whether `p12` meets `S × T`.
    pub fn is_accepting(&self, e: &SchutzElement) -> bool {
        e.p12.intersects(&self.accept_pairs)
    }

    pub fn recognizes(&self, word: &Word) -> Result<bool> {
        Ok(self.is_accepting(&self.eval(word)?))
    }

    /// The submonoid `μ_a(A*)`, closed from the letter images without
    /// materializing `M◊N`.
    pub fn image(&self, cap: usize) -> Result<MuImage> {
        let closure = generate(
            self.product.identity(),
            &self.letters,
            |p, q| self.product.mul(p, q),
            cap,
        )?;
        let monoid = closure.to_monoid()?;
        let images = (0..self.alphabet.len())
            .map(|b| closure.generator(b))
            .collect();
        let hom = MonoidHom::new(monoid, self.alphabet.clone(), images)?;
        let accept = closure
            .elements
            .iter()
            .map(|e| self.is_accepting(e))
            .collect();
        Ok(MuImage {
            hom,
            elements: closure.elements,
            accept,
        })
    }
}

/// `μ_a(A*)` with its letter homomorphism and the elements recognizing `KaL`.
#[derive(Debug, Clone)]
pub struct MuImage {
    pub hom: MonoidHom,
    /// Matrix form of each element, indexed like the monoid.
    pub elements: Vec<SchutzElement>,
    pub accept: Vec<bool>,
}

impl MuImage {
    pub fn monoid(&self) -> &FiniteMonoid {
        self.hom.target()
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn accept_set(&self) -> Vec<Elem> {
        crate::monoid::mask_to_set(&self.accept)
    }

    pub fn language(&self) -> RecognizedLanguage {
        RecognizedLanguage {
            hom: self.hom.clone(),
            accept: self.accept.clone(),
        }
    }
}

pub fn mu_of_word(
    k: &RecognizedLanguage,
    l: &RecognizedLanguage,
    marker: char,
    word: &Word,
) -> Result<SchutzElement> {
    MuMap::new(k, l, marker)?.eval(word)
}

pub fn mu_image(k: &RecognizedLanguage, l: &RecognizedLanguage, marker: char) -> Result<MuImage> {
    MuMap::new(k, l, marker)?.image(DEFAULT_CAP)
}

pub fn mu_recognizes(
    k: &RecognizedLanguage,
    l: &RecognizedLanguage,
    marker: char,
    word: &Word,
) -> Result<bool> {
    MuMap::new(k, l, marker)?.recognizes(word)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize, alphabet: &Alphabet, counted: char) -> RecognizedLanguage {
        let images = alphabet
            .letters()
            .iter()
            .map(|&c| (c == counted) as Elem)
            .collect();
        let hom = MonoidHom::new(
            FiniteMonoid::cyclic_group(n).unwrap(),
            alphabet.clone(),
            images,
        )
        .unwrap();
        RecognizedLanguage::new(hom, &[0]).unwrap()
    }

    #[test]
    fn empty_word_maps_to_identity() {
        let a = Alphabet::from_chars("abc").unwrap();
        let (k, l) = (z(2, &a, 'b'), z(2, &a, 'c'));
        let mu = MuMap::new(&k, &l, 'a').unwrap();
        assert_eq!(mu.eval(&Word::empty()).unwrap(), mu.product().identity());
        assert!(!mu.recognizes(&Word::empty()).unwrap());
    }

    #[test]
    fn single_marker_has_unit_factorization() {
        let a = Alphabet::from_chars("abc").unwrap();
        let (k, l) = (z(2, &a, 'b'), z(2, &a, 'c'));
        let e = mu_of_word(&k, &l, 'a', &a.word("a").unwrap()).unwrap();
        let mu = MuMap::new(&k, &l, 'a').unwrap();
        assert_eq!(mu.product().pairs(&e), vec![(0, 0)]);
        assert!(mu_recognizes(&k, &l, 'a', &a.word("a").unwrap()).unwrap());
    }

    #[test]
    fn factorization_pairs_of_short_word() {
        // u = b a c a: factorizations (b, ca) and (bac, 1).
        let a = Alphabet::from_chars("abc").unwrap();
        let (k, l) = (z(2, &a, 'b'), z(3, &a, 'c'));
        let mu = MuMap::new(&k, &l, 'a').unwrap();
        let e = mu.eval(&a.word("baca").unwrap()).unwrap();
        assert_eq!((e.p11, e.p22), (1, 1));
        assert_eq!(mu.product().pairs(&e), vec![(1, 0), (1, 1)]);
    }

    #[test]
    fn marker_and_alphabet_checks() {
        let a = Alphabet::from_chars("abc").unwrap();
        let b = Alphabet::from_chars("abd").unwrap();
        assert_eq!(
            MuMap::new(&z(2, &a, 'b'), &z(2, &a, 'c'), 'x').unwrap_err(),
            Error::UnknownLetter('x')
        );
        assert_eq!(
            MuMap::new(&z(2, &a, 'b'), &z(2, &b, 'b'), 'a').unwrap_err(),
            Error::AlphabetMismatch
        );
    }
}
