//! Submonoid generation by breadth-first closure.

use std::collections::HashMap;
use std::hash::Hash;

use num_bigint::BigUint;

use super::{Elem, FiniteMonoid};
use crate::error::{Error, Result};

/// The closure of a generator list under right multiplication.
///
/// Elements are numbered in shortlex-first-witness order: the identity is
/// element 0, and each later element is first reached as `parent · gen`
/// with the parent already numbered.
#[derive(Debug, Clone)]
pub struct Generated<T> {
    pub elements: Vec<T>,
    /// `right[i * gens + g]` is the index of `elements[i] · gens[g]`.
    pub right: Vec<Elem>,
    /// `(parent, generator)` of each non-identity element.
    pub parent: Vec<Option<(Elem, u32)>>,
    pub generator_count: usize,
}

/// Closes `{identity} ∪ gens` under `mul`, failing once more than `cap`
/// elements appear.
pub fn generate<T, F>(identity: T, gens: &[T], mul: F, cap: usize) -> Result<Generated<T>>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let mut index: HashMap<T, Elem> = HashMap::new();
    let mut elements = vec![identity.clone()];
    let mut parent = vec![None];
    index.insert(identity, 0);
    let mut right = Vec::new();
    let mut head = 0;
    while head < elements.len() {
        for (g, gen) in gens.iter().enumerate() {
            let x = mul(&elements[head], gen);
            let id = match index.get(&x) {
                Some(&id) => id,
                None => {
                    if elements.len() >= cap {
                        return Err(Error::size_limit(cap, None));
                    }
                    let id = elements.len() as Elem;
                    index.insert(x.clone(), id);
                    elements.push(x);
                    parent.push(Some((head as Elem, g as u32)));
                    id
                }
            };
            right.push(id);
        }
        head += 1;
    }
    Ok(Generated {
        elements,
        right,
        parent,
        generator_count: gens.len(),
    })
}

impl<T> Generated<T> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Index of the `g`-th generator.
    pub fn generator(&self, g: usize) -> Elem {
        self.right[g]
    }

    /// Full multiplication table, derived from the right Cayley graph:
    /// `i · (p · g) = (i · p) · g`.
    pub fn to_monoid(&self) -> Result<FiniteMonoid> {
        let n = self.elements.len();
        let k = self.generator_count;
        let cells = (n as u128) * (n as u128);
        if cells > usize::MAX as u128 / 8 {
            return Err(Error::size_limit(n, Some(BigUint::from(cells))));
        }
        let mut table = vec![0 as Elem; n * n];
        for i in 0..n {
            let row = i * n;
            table[row] = i as Elem;
            for j in 1..n {
                let (p, g) = self.parent[j].expect("non-identity element has a parent");
                let ip = table[row + p as usize] as usize;
                table[row + j] = self.right[ip * k + g as usize];
            }
        }
        Ok(FiniteMonoid::from_flat(0, n, table))
    }
}
