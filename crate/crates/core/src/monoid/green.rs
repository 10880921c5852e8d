//! Green's quasiorders and chain lengths.

use serde::Serialize;

use super::{Elem, FiniteMonoid};
use crate::bits::BitSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GreenSummary {
    pub j_trivial: bool,
    pub is_group: bool,
    /// Elements in a longest strict `≤_R`-chain.
    pub rho: usize,
    /// Elements in a longest strict `≤_L`-chain.
    pub lambda: usize,
}

pub fn green_summary(m: &FiniteMonoid) -> GreenSummary {
    let right = right_ideals(m);
    let left = left_ideals(m);
    let (rho, r_trivial) = longest_chain(&right);
    let (lambda, l_trivial) = longest_chain(&left);
    GreenSummary {
        // In a finite monoid J = D = R∘L, so J-trivial iff R- and L-trivial.
        j_trivial: r_trivial && l_trivial,
        is_group: is_group(m),
        rho,
        lambda,
    }
}

/// `ideals[q] = qM`, so `p ≤_R q` iff `ideals[q]` contains `p`.
pub(crate) fn right_ideals(m: &FiniteMonoid) -> Vec<BitSet> {
    m.elements()
        .map(|q| {
            let mut s = BitSet::new(m.size());
            for &x in m.row(q) {
                s.insert(x as usize);
            }
            s
        })
        .collect()
}

/// `ideals[q] = Mq`.
pub(crate) fn left_ideals(m: &FiniteMonoid) -> Vec<BitSet> {
    let mut ideals = vec![BitSet::new(m.size()); m.size()];
    for s in m.elements() {
        for (q, &x) in m.row(s).iter().enumerate() {
            ideals[q].insert(x as usize);
        }
    }
    ideals
}

/// Longest strict chain in the quasiorder `p ≤ q ⇔ p ∈ ideals[q]`, counted
/// in elements, and whether every equivalence class is a singleton.
fn longest_chain(ideals: &[BitSet]) -> (usize, bool) {
    let n = ideals.len();
    // One representative per class; p ~ q iff their ideals coincide.
    let mut reps: Vec<usize> = Vec::new();
    let mut trivial = true;
    for q in 0..n {
        match reps.iter().find(|&&r| ideals[r] == ideals[q]) {
            Some(_) => trivial = false,
            None => reps.push(q),
        }
    }
    reps.sort_by_key(|&r| ideals[r].len());
    // Strictly smaller ideals have strictly fewer elements, so this order
    // is a linear extension of the class order.
    let mut height = vec![1usize; reps.len()];
    for i in 0..reps.len() {
        for j in 0..i {
            if height[j] + 1 > height[i]
                && ideals[reps[i]].contains(reps[j])
                && ideals[reps[j]] != ideals[reps[i]]
            {
                height[i] = height[j] + 1;
            }
        }
    }
    (height.into_iter().max().unwrap_or(0), trivial)
}

fn is_group(m: &FiniteMonoid) -> bool {
    let e = m.identity();
    m.elements().all(|x| {
        m.elements()
            .any(|y: Elem| m.mul(x, y) == e && m.mul(y, x) == e)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `p ≤_J q` straight from the definition.
    fn j_trivial_brute(m: &FiniteMonoid) -> bool {
        let n = m.size();
        let mut below = vec![vec![false; n]; n];
        for q in m.elements() {
            for s in m.elements() {
                for r in m.elements() {
                    below[q as usize][m.mul(m.mul(s, q), r) as usize] = true;
                }
            }
        }
        (0..n).all(|p| (0..n).all(|q| p == q || !(below[q][p] && below[p][q])))
    }

    fn semilattice(bits: u32) -> FiniteMonoid {
        let n = 1usize << bits;
        let t = (0..n).map(|i| (0..n).map(|j| i | j).collect()).collect();
        FiniteMonoid::new(0, t).unwrap()
    }

    #[test]
    fn trivial_monoid() {
        let g = green_summary(&FiniteMonoid::trivial());
        assert_eq!(
            (g.rho, g.lambda, g.j_trivial, g.is_group),
            (1, 1, true, true)
        );
    }

    #[test]
    fn z2_is_group_not_j_trivial() {
        let z = FiniteMonoid::cyclic_group(2).unwrap();
        let g = green_summary(&z);
        assert!(g.is_group);
        assert!(!g.j_trivial);
        assert_eq!((g.rho, g.lambda), (1, 1));
        assert!(!j_trivial_brute(&z));
    }

    #[test]
    fn semilattice_chains() {
        // (2^A, ∪) with |A| = 3: chain ∅ ⊂ {x} ⊂ {x,y} ⊂ A has 4 elements.
        let m = semilattice(3);
        let g = green_summary(&m);
        assert!(g.j_trivial && !g.is_group);
        assert_eq!((g.rho, g.lambda), (4, 4));
        assert!(j_trivial_brute(&m));
    }

    #[test]
    fn left_zero_monoid_is_not_j_trivial() {
        // x, y are left zeros: xM = {x} but Mx = My = {x, y}.
        let m = FiniteMonoid::new(2, vec![vec![0, 0, 0], vec![1, 1, 1], vec![0, 1, 2]]).unwrap();
        let g = green_summary(&m);
        assert_eq!(g.j_trivial, j_trivial_brute(&m));
        assert!(!g.j_trivial);
        assert_eq!((g.rho, g.lambda), (2, 2));
    }
}
