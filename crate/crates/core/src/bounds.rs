//! Closed-form size bounds, as exact integers.

use num_bigint::BigUint;

fn pow2(e: usize) -> BigUint {
    BigUint::from(1u8) << e
}

/// `k·2^ℓ`: states of a minimal DFA for `KaL`.
pub fn kal_state_bound(k: usize, l: usize) -> BigUint {
    BigUint::from(k) * pow2(l)
}

/// `mn·2^{mn}`: order of the Schützenberger product of monoids of orders `m`, `n`.
pub fn schutz_order(m: usize, n: usize) -> BigUint {
    let mn = m * n;
    BigUint::from(mn) * pow2(mn)
}

/// `mn(2^{mn} − 1) + 1`: syntactic monoid of `KaL`.
pub fn kal_monoid_bound(m: usize, n: usize) -> BigUint {
    let mn = m * n;
    BigUint::from(mn) * (pow2(mn) - 1u8) + 1u8
}

/// `mn·Σ_{i=0}^{ρ+λ−1} C(mn, i)`: image of `μ_a` for J-trivial `M`, `N`.
pub fn j_trivial_image_bound(m: usize, n: usize, rho: usize, lambda: usize) -> BigUint {
    let mn = m * n;
    let top = (rho + lambda).saturating_sub(1).min(mn);
    let mut sum = BigUint::from(0u8);
    let mut binom = BigUint::from(1u8);
    for i in 0..=top {
        sum += &binom;
        binom = binom * BigUint::from(mn - i) / BigUint::from(i + 1);
    }
    BigUint::from(mn) * sum
}

/// `n·2^{d·n²}`: free monoid over `d` letters for BPol₁ of a variety whose
/// free monoid over the same letters has `n` elements.
pub fn bpol1_bound(n: usize, d: usize) -> BigUint {
    BigUint::from(n) * pow2(d * n * n)
}
