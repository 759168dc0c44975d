//! Slow reference computations kept apart from the production paths they
//! check. Used by the self-test and by the test suites.

use num_traits::{One, Zero};

use crate::exact::{binomial, ExactInt};
use crate::schubert::{monomial_integral, SchubertElement};

/// `∏_{n=1}^{N} (1 - qⁿ)^(-24)` truncated at `q^N`, by multiplying out each
/// factor as `Σ_k C(k+23, 23) q^(nk)`.
pub fn euler_product_direct(n_max: usize) -> Vec<ExactInt> {
    let weights: Vec<ExactInt> = (0..=n_max as i64).map(|k| binomial(k + 23, 23)).collect();
    let mut acc = vec![ExactInt::zero(); n_max + 1];
    acc[0] = ExactInt::one();
    for part in 1..=n_max {
        let mut next = vec![ExactInt::zero(); n_max + 1];
        for (i, a) in acc.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for k in 0..=(n_max - i) / part {
                next[i + k * part] += a * &weights[k];
            }
        }
        acc = next;
    }
    acc
}

/// Every top-degree monomial `σ₁^m σ₂^n` for `d = 1..=max_d`, integrated by
/// iterated Pieri and by the closed form. Returns the first mismatch.
pub fn schubert_integral_mismatch(max_d: u32) -> Option<(u32, u32, u32)> {
    for d in 1..=max_d {
        for n in 0..=d {
            let m = 2 * (d - n);
            let ring = SchubertElement::monomial(d, m, n).integrate();
            if Some(ring) != monomial_integral(m, n, d).ok() {
                return Some((d, m, n));
            }
        }
    }
    None
}
