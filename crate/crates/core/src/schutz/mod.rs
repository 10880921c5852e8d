//! The Schützenberger product `M◊N` of two finite monoids.
//!
//! Elements are upper-triangular 2×2 matrices `(p11, p12, p22)` with
//! `p11 ∈ M`, `p22 ∈ N` and `p12 ⊆ M×N`. The pair `(x, y)` is stored at bit
//! `x·|N| + y` of `p12`.

mod json;
mod mu;

use num_bigint::BigUint;

use crate::bits::BitSet;
use crate::bounds::schutz_order;
use crate::error::{Error, Result};
use crate::monoid::{Elem, FiniteMonoid, DEFAULT_CAP};

pub use json::{parse_schutz_element_json, schutz_element_to_json};
pub use mu::{mu_image, mu_of_word, mu_recognizes, MuImage, MuMap};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchutzElement {
    pub p11: Elem,
    pub p22: Elem,
    pub p12: BitSet,
}

/// Multiplication context for `M◊N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchutzProduct {
    m: FiniteMonoid,
    n: FiniteMonoid,
}

impl SchutzProduct {
    pub fn new(m: FiniteMonoid, n: FiniteMonoid) -> Self {
        SchutzProduct { m, n }
    }

    pub fn left(&self) -> &FiniteMonoid {
        &self.m
    }

    pub fn right(&self) -> &FiniteMonoid {
        &self.n
    }

    fn pair_bits(&self) -> usize {
        self.m.size() * self.n.size()
    }

    pub fn pair_index(&self, x: Elem, y: Elem) -> usize {
        x as usize * self.n.size() + y as usize
    }

    pub fn pair_of(&self, bit: usize) -> (Elem, Elem) {
        ((bit / self.n.size()) as Elem, (bit % self.n.size()) as Elem)
    }

    pub fn empty_set(&self) -> BitSet {
        BitSet::new(self.pair_bits())
    }

    /// Builds and validates an element from its entries.
    pub fn element(&self, p11: Elem, p22: Elem, pairs: &[(Elem, Elem)]) -> Result<SchutzElement> {
        let (m, n) = (self.m.size() as Elem, self.n.size() as Elem);
        if p11 >= m || p22 >= n {
            return Err(Error::InvalidArgument(format!(
                "diagonal ({p11}, {p22}) outside {m}×{n}"
            )));
        }
        let mut p12 = self.empty_set();
        for &(x, y) in pairs {
            if x >= m || y >= n {
                return Err(Error::InvalidArgument(format!(
                    "pair ({x}, {y}) outside {m}×{n}"
                )));
            }
            p12.insert(self.pair_index(x, y));
        }
        Ok(SchutzElement { p11, p22, p12 })
    }

    pub fn identity(&self) -> SchutzElement {
        SchutzElement {
            p11: self.m.identity(),
            p22: self.n.identity(),
            p12: self.empty_set(),
        }
    }

    /// `(PQ)₁₂ = {(P₁₁x, y) : (x,y) ∈ Q₁₂} ∪ {(z, tQ₂₂) : (z,t) ∈ P₁₂}`.
    pub fn mul(&self, p: &SchutzElement, q: &SchutzElement) -> SchutzElement {
        let mut p12 = self.empty_set();
        for bit in q.p12.iter() {
            let (x, y) = self.pair_of(bit);
            p12.insert(self.pair_index(self.m.mul(p.p11, x), y));
        }
        for bit in p.p12.iter() {
            let (z, t) = self.pair_of(bit);
            p12.insert(self.pair_index(z, self.n.mul(t, q.p22)));
        }
        SchutzElement {
            p11: self.m.mul(p.p11, q.p11),
            p22: self.n.mul(p.p22, q.p22),
            p12,
        }
    }

    /// `|M◊N| = mn·2^{mn}`.
    pub fn order(&self) -> BigUint {
        schutz_order(self.m.size(), self.n.size())
    }

    /// The pairs of `p12`, sorted.
    pub fn pairs(&self, e: &SchutzElement) -> Vec<(Elem, Elem)> {
        e.p12.iter().map(|b| self.pair_of(b)).collect()
    }

    pub fn enumerate(&self) -> Result<(FiniteMonoid, Vec<SchutzElement>)> {
        self.enumerate_capped(DEFAULT_CAP)
    }

    /// The whole product as a monoid, numbered lexicographically by
    /// `(p11, p22, p12)` with `p12` read as the integer `Σ 2^{bit}`.
    pub fn enumerate_capped(&self, cap: usize) -> Result<(FiniteMonoid, Vec<SchutzElement>)> {
        let order = self.order();
        let size = usize::try_from(&order)
            .ok()
            .filter(|&s| s <= cap)
            .ok_or_else(|| Error::size_limit(cap, Some(order.clone())))?;
        let bits = self.pair_bits();
        let subsets = 1usize << bits;
        let mut elements = Vec::with_capacity(size);
        for p11 in self.m.elements() {
            for p22 in self.n.elements() {
                for mask in 0..subsets {
                    let p12 = BitSet::from_words(vec![mask as u64]);
                    elements.push(SchutzElement { p11, p22, p12 });
                }
            }
        }
        let index_of = |e: &SchutzElement| {
            let mask = e.p12.words()[0] as usize;
            (e.p11 as usize * self.n.size() + e.p22 as usize) * subsets + mask
        };
        let mut table = Vec::with_capacity(size * size);
        for p in &elements {
            for q in &elements {
                table.push(index_of(&self.mul(p, q)) as Elem);
            }
        }
        let identity = index_of(&self.identity()) as Elem;
        Ok((FiniteMonoid::from_flat(identity, size, table), elements))
    }
}
