//! The map `ξ : A* → (F◊F)^d`, `u ↦ (μ_{a₁}(u), …, μ_{a_d}(u))`.
//!
//! With `F` the free monoid over `A` of a locally finite variety, the image
//! of `ξ` is the free monoid over `A` in the variety generated by the
//! Boolean combinations of languages `K` and `KaL`.

use crate::error::{Error, Result};
use crate::monoid::{generate, FiniteMonoid, MonoidHom, RecognizedLanguage, DEFAULT_CAP};
use crate::schutz::{MuMap, SchutzElement, SchutzProduct};

pub use crate::bounds::bpol1_bound;

/// One `μ_{a_i}(u)` per letter `a_i`, in alphabet order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct XiElement {
    pub components: Vec<SchutzElement>,
}

impl XiElement {
    /// All components share one `p11`, one `p22`, and `p11 = p22`.
    pub fn diagonal_coherent(&self) -> bool {
        let Some(first) = self.components.first() else {
            return true;
        };
        first.p11 == first.p22
            && self
                .components
                .iter()
                .all(|c| c.p11 == first.p11 && c.p22 == first.p22)
    }
}

#[derive(Debug, Clone)]
pub struct XiImage {
    pub hom: MonoidHom,
    pub elements: Vec<XiElement>,
    pub product: SchutzProduct,
}

impl XiImage {
    pub fn monoid(&self) -> &FiniteMonoid {
        self.hom.target()
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }
}

pub fn xi_image(free: &MonoidHom) -> Result<XiImage> {
    xi_image_capped(free, DEFAULT_CAP)
}

/// Closes the letter images of `ξ` in `(F◊F)^d`, working on `d`-tuples
/// directly.
pub fn xi_image_capped(free: &MonoidHom, cap: usize) -> Result<XiImage> {
    let alphabet = free.alphabet();
    let lang = RecognizedLanguage {
        hom: free.clone(),
        accept: vec![false; free.target().size()],
    };
    let maps = alphabet
        .letters()
        .iter()
        .map(|&a| MuMap::new(&lang, &lang, a))
        .collect::<Result<Vec<_>>>()?;
    let product = maps
        .first()
        .map(|m| m.product().clone())
        .ok_or(Error::EmptyAlphabet)?;
    let identity = XiElement {
        components: vec![product.identity(); maps.len()],
    };
    let gens: Vec<XiElement> = (0..alphabet.len())
        .map(|b| XiElement {
            components: maps.iter().map(|m| m.letter_image(b).clone()).collect(),
        })
        .collect();
    let mul = |x: &XiElement, y: &XiElement| XiElement {
        components: x
            .components
            .iter()
            .zip(&y.components)
            .map(|(p, q)| product.mul(p, q))
            .collect(),
    };
    let closure = generate(identity, &gens, mul, cap)?;
    let monoid = closure.to_monoid()?;
    let images = (0..alphabet.len()).map(|b| closure.generator(b)).collect();
    let hom = MonoidHom::new(monoid, alphabet.clone(), images)?;
    Ok(XiImage {
        hom,
        elements: closure.elements,
        product,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::constructions::{sl_free_monoid, trivial_free_monoid};

    #[test]
    fn trivial_variety_one_letter() {
        let a = Alphabet::from_chars("a").unwrap();
        let xi = xi_image(&trivial_free_monoid(&a)).unwrap();
        assert_eq!(xi.size(), 2);
        assert!(xi.elements[0].components[0].p12.is_empty());
        assert!(!xi.elements[1].components[0].p12.is_empty());
    }

    #[test]
    fn semilattice_image_is_coherent_and_bounded() {
        let a = Alphabet::from_chars("ab").unwrap();
        let xi = xi_image(&sl_free_monoid(&a).unwrap()).unwrap();
        assert!(xi.elements.iter().all(XiElement::diagonal_coherent));
        assert!(xi.size() <= 100);
        xi.monoid().validate().unwrap();
    }

    #[test]
    fn cap_applies() {
        let a = Alphabet::from_chars("ab").unwrap();
        let err = xi_image_capped(&sl_free_monoid(&a).unwrap(), 5).unwrap_err();
        assert!(err.is_size_limit());
    }
}
