//! Finite monoids given by multiplication tables, homomorphisms from free
//! monoids into them, and the languages they recognize.

mod closure;
mod green;
mod json;
mod syntactic;

use std::collections::HashMap;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::alphabet::{Alphabet, Word};
use crate::error::{Error, Result};

pub use closure::{generate, Generated};
pub use green::{green_summary, GreenSummary};
pub use json::{monoid_to_json, parse_monoid_json, MonoidDocument};
pub use syntactic::{
    syntactic_monoid, syntactic_monoid_capped, syntactic_quotient, syntactic_quotient_by,
    transition_monoid, Quotient,
};

/// Element index inside a [`FiniteMonoid`].
pub type Elem = u32;

/// Default cap on the number of elements of any materialized monoid.
pub const DEFAULT_CAP: usize = 4096;

/// Monoids up to this size get an exhaustive associativity check.
pub const EXHAUSTIVE_ASSOC_LIMIT: usize = 300;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMonoid {
    size: usize,
    identity: Elem,
    /// Row-major `table[i * size + j] = i·j`.
    table: Vec<Elem>,
}

impl FiniteMonoid {
    /// Validates a multiplication table: square, in range, two-sided
    /// identity, associative.
    pub fn new(identity: usize, table: Vec<Vec<usize>>) -> Result<Self> {
        let size = table.len();
        if size == 0 {
            return Err(Error::InvalidMonoid(
                "a monoid needs at least one element".into(),
            ));
        }
        if u32::try_from(size).is_err() {
            return Err(Error::InvalidMonoid(format!("{size} elements is too many")));
        }
        if identity >= size {
            return Err(Error::InvalidMonoid(format!(
                "identity {identity} outside 0..{size}"
            )));
        }
        let mut flat = Vec::with_capacity(size * size);
        for (r, row) in table.iter().enumerate() {
            if row.len() != size {
                return Err(Error::InvalidMonoid(format!(
                    "row {r} has {} entries, expected {size}",
                    row.len()
                )));
            }
            for &x in row {
                if x >= size {
                    return Err(Error::InvalidMonoid(format!(
                        "entry {x} in row {r} outside 0..{size}"
                    )));
                }
                flat.push(x as Elem);
            }
        }
        let m = FiniteMonoid {
            size,
            identity: identity as Elem,
            table: flat,
        };
        m.validate()?;
        Ok(m)
    }

    /// Skips validation; callers construct tables from an associative
    /// operation.
    pub(crate) fn from_flat(identity: Elem, size: usize, table: Vec<Elem>) -> Self {
        debug_assert_eq!(table.len(), size * size);
        FiniteMonoid {
            size,
            identity,
            table,
        }
    }

    /// Checks the identity law and associativity.
    pub fn validate(&self) -> Result<()> {
        let e = self.identity;
        for i in 0..self.size as Elem {
            if self.mul(e, i) != i || self.mul(i, e) != i {
                return Err(Error::InvalidMonoid(format!(
                    "{e} is not a two-sided identity (fails on {i})"
                )));
            }
        }
        if let Some((i, j, k)) = self.associativity_violation() {
            return Err(Error::InvalidMonoid(format!(
                "not associative: ({i}·{j})·{k} ≠ {i}·({j}·{k})"
            )));
        }
        Ok(())
    }

    /// First triple breaking associativity: exhaustive up to
    /// [`EXHAUSTIVE_ASSOC_LIMIT`] elements, 200 000 seeded samples above.
    pub fn associativity_violation(&self) -> Option<(Elem, Elem, Elem)> {
        let n = self.size as Elem;
        let bad = |i, j, k| self.mul(self.mul(i, j), k) != self.mul(i, self.mul(j, k));
        if self.size <= EXHAUSTIVE_ASSOC_LIMIT {
            for i in 0..n {
                for j in 0..n {
                    let ij = self.mul(i, j);
                    for k in 0..n {
                        if self.mul(ij, k) != self.mul(i, self.mul(j, k)) {
                            return Some((i, j, k));
                        }
                    }
                }
            }
            None
        } else {
            let mut rng = StdRng::seed_from_u64(0x6d6f6e6f6964);
            (0..200_000)
                .map(|_| {
                    (
                        rng.random_range(0..n),
                        rng.random_range(0..n),
                        rng.random_range(0..n),
                    )
                })
                .find(|&(i, j, k)| bad(i, j, k))
        }
    }

    pub fn trivial() -> Self {
        FiniteMonoid::from_flat(0, 1, vec![0])
    }

    /// The additive group of integers modulo `n`; element `i` is the residue `i`.
    pub fn cyclic_group(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("modulus must be positive".into()));
        }
        let table = (0..n)
            .flat_map(|i| (0..n).map(move |j| ((i + j) % n) as Elem))
            .collect();
        Ok(FiniteMonoid::from_flat(0, n, table))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    #[inline]
    pub fn mul(&self, i: Elem, j: Elem) -> Elem {
        self.table[i as usize * self.size + j as usize]
    }

    pub fn row(&self, i: Elem) -> &[Elem] {
        let start = i as usize * self.size;
        &self.table[start..start + self.size]
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size as Elem
    }

    pub fn product<I: IntoIterator<Item = Elem>>(&self, items: I) -> Elem {
        items
            .into_iter()
            .fold(self.identity, |acc, x| self.mul(acc, x))
    }

    pub fn table_rows(&self) -> Vec<Vec<Elem>> {
        self.table.chunks(self.size).map(<[Elem]>::to_vec).collect()
    }
}

/// A homomorphism `A* → M`, determined by the images of the letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidHom {
    target: FiniteMonoid,
    alphabet: Alphabet,
    images: Vec<Elem>,
}

impl MonoidHom {
    pub fn new(target: FiniteMonoid, alphabet: Alphabet, images: Vec<Elem>) -> Result<Self> {
        if images.len() != alphabet.len() {
            return Err(Error::InvalidArgument(format!(
                "{} letter images for {} letters",
                images.len(),
                alphabet.len()
            )));
        }
        if let Some(&x) = images.iter().find(|&&x| x as usize >= target.size()) {
            return Err(Error::InvalidMonoid(format!(
                "letter image {x} outside 0..{}",
                target.size()
            )));
        }
        Ok(MonoidHom {
            target,
            alphabet,
            images,
        })
    }

    pub fn target(&self) -> &FiniteMonoid {
        &self.target
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn letter_images(&self) -> &[Elem] {
        &self.images
    }

    pub fn image_of(&self, letter: usize) -> Elem {
        self.images[letter]
    }

    pub fn eval(&self, word: &Word) -> Elem {
        self.target
            .product(word.letters().iter().map(|&l| self.images[l]))
    }

    pub fn eval_str(&self, s: &str) -> Result<Elem> {
        Ok(self.eval(&self.alphabet.word(s)?))
    }

    /// Elements reachable as images of words, in shortlex-first-witness order.
    pub fn image(&self) -> Vec<Elem> {
        let g = generate(
            self.target.identity(),
            &self.images,
            |&x, &y| self.target.mul(x, y),
            usize::MAX,
        )
        .expect("uncapped closure");
        g.elements
    }

    pub fn is_surjective(&self) -> bool {
        self.image().len() == self.target.size()
    }
}

/// `hom⁻¹(accept)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecognizedLanguage {
    pub hom: MonoidHom,
    /// Membership mask over the target's elements.
    pub accept: Vec<bool>,
}

impl RecognizedLanguage {
    pub fn new(hom: MonoidHom, accept: &[Elem]) -> Result<Self> {
        let mut mask = vec![false; hom.target().size()];
        for &x in accept {
            if x as usize >= mask.len() {
                return Err(Error::InvalidArgument(format!(
                    "accepting element {x} outside 0..{}",
                    mask.len()
                )));
            }
            mask[x as usize] = true;
        }
        Ok(RecognizedLanguage { hom, accept: mask })
    }

    pub fn monoid(&self) -> &FiniteMonoid {
        self.hom.target()
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.hom.alphabet()
    }

    pub fn accepts(&self, word: &Word) -> bool {
        self.accept[self.hom.eval(word) as usize]
    }

    pub fn accept_set(&self) -> Vec<Elem> {
        mask_to_set(&self.accept)
    }
}

pub(crate) fn mask_to_set(mask: &[bool]) -> Vec<Elem> {
    mask.iter()
        .enumerate()
        .filter_map(|(i, &b)| b.then_some(i as Elem))
        .collect()
}

/// Whether `h1(u) = h1(v) ⇔ h2(u) = h2(v)` for all words `u, v`.
///
/// Explores the reachable pairs `(h1(u), h2(u))` and checks that they form
/// a bijection between the two images.
pub fn kernel_equal(h1: &MonoidHom, h2: &MonoidHom) -> Result<bool> {
    if h1.alphabet() != h2.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let pairs: Vec<(Elem, Elem)> = h1
        .images
        .iter()
        .copied()
        .zip(h2.images.iter().copied())
        .collect();
    let g = generate(
        (h1.target.identity(), h2.target.identity()),
        &pairs,
        |&(a, b), &(c, d)| (h1.target.mul(a, c), h2.target.mul(b, d)),
        usize::MAX,
    )?;
    let mut forward: HashMap<Elem, Elem> = HashMap::new();
    let mut backward: HashMap<Elem, Elem> = HashMap::new();
    for &(x, y) in &g.elements {
        if *forward.entry(x).or_insert(y) != y || *backward.entry(y).or_insert(x) != x {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_invalid_tables() {
        assert!(FiniteMonoid::new(0, vec![]).is_err());
        assert!(FiniteMonoid::new(2, vec![vec![0]]).is_err());
        assert!(FiniteMonoid::new(0, vec![vec![0, 1], vec![1]]).is_err());
        // 1 is not an identity
        assert!(FiniteMonoid::new(1, vec![vec![0, 1], vec![1, 1]]).is_err());
        // left-zero semigroup with adjoined identity 2 is fine
        assert!(FiniteMonoid::new(2, vec![vec![0, 0, 0], vec![1, 1, 1], vec![0, 1, 2]]).is_ok());
        // identity ok, but (1·1)·2 vs 1·(1·2) breaks
        let t = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 2, 2]];
        assert!(matches!(
            FiniteMonoid::new(0, t),
            Err(Error::InvalidMonoid(_))
        ));
    }

    #[test]
    fn cyclic_groups_are_valid() {
        for n in 1..8 {
            FiniteMonoid::cyclic_group(n).unwrap().validate().unwrap();
        }
    }

    #[test]
    fn hom_evaluates_by_fold() {
        let a = Alphabet::from_chars("ab").unwrap();
        let h = MonoidHom::new(FiniteMonoid::cyclic_group(3).unwrap(), a, vec![0, 1]).unwrap();
        assert_eq!(h.eval_str("babb").unwrap(), 0);
        assert_eq!(h.eval_str("").unwrap(), 0);
        assert!(h.is_surjective());
        assert!(MonoidHom::new(
            FiniteMonoid::trivial(),
            Alphabet::from_chars("a").unwrap(),
            vec![1]
        )
        .is_err());
    }

    #[test]
    fn kernel_equality() {
        let a = Alphabet::from_chars("ab").unwrap();
        let z2 = MonoidHom::new(
            FiniteMonoid::cyclic_group(2).unwrap(),
            a.clone(),
            vec![0, 1],
        )
        .unwrap();
        let z3 = MonoidHom::new(
            FiniteMonoid::cyclic_group(3).unwrap(),
            a.clone(),
            vec![0, 1],
        )
        .unwrap();
        assert!(kernel_equal(&z2, &z2).unwrap());
        assert!(!kernel_equal(&z2, &z3).unwrap());
        // same kernel, different numbering: b ↦ 1 in Z2 vs b ↦ 1 in a relabelled Z2
        let z4 = MonoidHom::new(
            FiniteMonoid::cyclic_group(4).unwrap(),
            a.clone(),
            vec![0, 2],
        )
        .unwrap();
        assert!(kernel_equal(&z2, &z4).unwrap());
        let other = MonoidHom::new(
            FiniteMonoid::trivial(),
            Alphabet::from_chars("ba").unwrap(),
            vec![0, 0],
        )
        .unwrap();
        assert_eq!(kernel_equal(&z2, &other), Err(Error::AlphabetMismatch));
    }
}
