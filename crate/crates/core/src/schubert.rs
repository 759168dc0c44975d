//! Cohomology of the Grassmannian of codimension-2 planes in `P^(d+1)`.
//!
//! Classes are written in the two-row Schur basis `s_(a,b)` with
//! `d >= a >= b >= 0`, where `s_(1,0) = σ₁ = r₁ + r₂` and `s_(1,1) = σ₂ = r₁r₂`
//! in the Chern roots of the rank-2 quotient bundle. The top class is
//! `s_(d,d)` in complex degree `2d`.
//!
//! Multiplication is only ever by the generators σ₁ (Pieri) and σ₂ (adding a
//! full column); every class needed downstream is a polynomial in the two.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{catalan, ExactInt};

/// Two-row partition `(a, b)` with `a >= b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoxPartition {
    pub a: u32,
    pub b: u32,
}

impl BoxPartition {
    pub const EMPTY: BoxPartition = BoxPartition { a: 0, b: 0 };

    pub fn new(a: u32, b: u32) -> Self {
        BoxPartition { a, b }
    }

    /// Complex degree `a + b`.
    pub fn degree(self) -> u32 {
        self.a + self.b
    }

    pub fn fits(self, d: u32) -> bool {
        d >= self.a && self.a >= self.b
    }
}

impl fmt::Display for BoxPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s({},{})", self.a, self.b)
    }
}

/// An integer combination of Schubert classes for a fixed box `2 x d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertElement {
    d: u32,
    terms: BTreeMap<BoxPartition, ExactInt>,
}

impl SchubertElement {
    pub fn zero(d: u32) -> Self {
        SchubertElement {
            d,
            terms: BTreeMap::new(),
        }
    }

    /// The unit class `s_(0,0)`.
    pub fn one(d: u32) -> Self {
        Self::basis(d, BoxPartition::EMPTY).expect("empty partition fits every box")
    }

    pub fn basis(d: u32, p: BoxPartition) -> Result<Self> {
        let mut e = Self::zero(d);
        e.add_term(p, ExactInt::one())?;
        Ok(e)
    }

    /// `σ₁^m · σ₂^n`, built by iterating the generator operators on `s_(0,0)`.
    pub fn monomial(d: u32, m: u32, n: u32) -> Self {
        let mut e = Self::one(d);
        for _ in 0..n {
            e = e.mul_sigma2();
        }
        for _ in 0..m {
            e = e.pieri_sigma1();
        }
        e
    }

    pub fn box_size(&self) -> u32 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: BoxPartition) -> ExactInt {
        self.terms.get(&p).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (BoxPartition, &ExactInt)> {
        self.terms.iter().map(|(p, c)| (*p, c))
    }

    /// Adds `c · s_p`, rejecting partitions outside the box.
    pub fn add_term(&mut self, p: BoxPartition, c: ExactInt) -> Result<()> {
        if !p.fits(self.d) {
            return Err(Error::OutsideBox {
                a: p.a,
                b: p.b,
                d: self.d,
            });
        }
        self.accumulate(p, c);
        Ok(())
    }

    fn accumulate(&mut self, p: BoxPartition, c: ExactInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(p).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&p);
        }
    }

    /// `self + c · other`; both must live in the same box.
    pub fn add_scaled(&mut self, other: &SchubertElement, c: &ExactInt) {
        assert_eq!(self.d, other.d, "box mismatch");
        for (p, v) in &other.terms {
            self.accumulate(*p, v * c);
        }
    }

    /// Pieri rule for σ₁: `s_(a,b) ↦ s_(a+1,b) + s_(a,b+1)`, dropping shapes
    /// that leave the box.
    pub fn pieri_sigma1(&self) -> SchubertElement {
        let mut out = Self::zero(self.d);
        for (p, c) in &self.terms {
            if p.a < self.d {
                out.accumulate(BoxPartition::new(p.a + 1, p.b), c.clone());
            }
            if p.b < p.a {
                out.accumulate(BoxPartition::new(p.a, p.b + 1), c.clone());
            }
        }
        out
    }

    /// Multiplication by σ₂: `s_(a,b) ↦ s_(a+1,b+1)`.
    pub fn mul_sigma2(&self) -> SchubertElement {
        let mut out = Self::zero(self.d);
        for (p, c) in &self.terms {
            if p.a < self.d {
                out.accumulate(BoxPartition::new(p.a + 1, p.b + 1), c.clone());
            }
        }
        out
    }

    /// Degree against the fundamental class: the coefficient of `s_(d,d)`.
    pub fn integrate(&self) -> ExactInt {
        self.coefficient(BoxPartition::new(self.d, self.d))
    }
}

impl fmt::Display for SchubertElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*{p}")?;
        }
        Ok(())
    }
}

/// Closed form for `∫ σ₁^m σ₂^n` over the Grassmannian with `m + 2n = 2d`:
/// `m! / ((m/2)! (m/2 + 1)!)`, the Catalan number `C(m/2)`.
pub fn monomial_integral(m: u32, n: u32, d: u32) -> Result<ExactInt> {
    if u64::from(m) + 2 * u64::from(n) != 2 * u64::from(d) {
        return Err(Error::NotTopDegree { m, n, top: 2 * d });
    }
    assert!(
        m.is_multiple_of(2),
        "top-degree monomial with odd σ₁ exponent {m}"
    );
    Ok(catalan(u64::from(m / 2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(d: u32, a: u32, b: u32) -> SchubertElement {
        SchubertElement::basis(d, BoxPartition::new(a, b)).unwrap()
    }

    fn sum(d: u32, parts: &[(u32, u32)]) -> SchubertElement {
        let mut e = SchubertElement::zero(d);
        for &(a, b) in parts {
            e.add_term(BoxPartition::new(a, b), ExactInt::one())
                .unwrap();
        }
        e
    }

    fn iterate(
        mut e: SchubertElement,
        f: fn(&SchubertElement) -> SchubertElement,
        k: u32,
    ) -> SchubertElement {
        for _ in 0..k {
            e = f(&e);
        }
        e
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(s(1, 1, 0).pieri_sigma1(), s(1, 1, 1));
        assert_eq!(s(2, 1, 0).pieri_sigma1(), sum(2, &[(2, 0), (1, 1)]));
        assert!(s(2, 2, 2).pieri_sigma1().is_zero());
    }

    #[test]
    fn sigma2_examples() {
        assert_eq!(s(2, 0, 0).mul_sigma2(), s(2, 1, 1));
        assert_eq!(s(2, 1, 1).mul_sigma2(), s(2, 2, 2));
        assert!(s(2, 2, 0).mul_sigma2().is_zero());
    }

    #[test]
    fn integrate_examples() {
        let one = |d| SchubertElement::one(d);
        assert_eq!(
            iterate(one(1), SchubertElement::pieri_sigma1, 2).integrate(),
            ExactInt::from(1)
        );
        assert_eq!(
            iterate(one(2), SchubertElement::pieri_sigma1, 4).integrate(),
            ExactInt::from(2)
        );
        assert_eq!(
            iterate(one(3), SchubertElement::mul_sigma2, 3).integrate(),
            ExactInt::from(1)
        );
        // lower degree contributes nothing
        assert!(iterate(one(3), SchubertElement::pieri_sigma1, 5)
            .integrate()
            .is_zero());
    }

    #[test]
    fn monomial_integral_examples() {
        assert_eq!(monomial_integral(4, 0, 2).unwrap(), ExactInt::from(2));
        for d in 1..6 {
            assert_eq!(monomial_integral(0, d, d).unwrap(), ExactInt::from(1));
        }
        assert_eq!(monomial_integral(6, 0, 3).unwrap(), ExactInt::from(5));
        assert_eq!(
            monomial_integral(3, 1, 2),
            Err(Error::NotTopDegree { m: 3, n: 1, top: 4 })
        );
    }

    #[test]
    fn basis_rejects_shapes_outside_box() {
        assert!(SchubertElement::basis(2, BoxPartition::new(3, 0)).is_err());
        assert!(SchubertElement::basis(2, BoxPartition::new(1, 2)).is_err());
    }

    #[test]
    fn pieri_matches_closed_form_up_to_12() {
        for d in 1..=12u32 {
            for n in 0..=d {
                let m = 2 * d - 2 * n;
                let via_ring = SchubertElement::monomial(d, m, n).integrate();
                assert_eq!(
                    via_ring,
                    monomial_integral(m, n, d).unwrap(),
                    "d={d} m={m} n={n}"
                );
            }
        }
    }

    #[test]
    fn sigma1_power_annihilates_past_top() {
        for d in 1..=10 {
            let e = iterate(
                SchubertElement::one(d),
                SchubertElement::pieri_sigma1,
                2 * d + 1,
            );
            assert!(e.is_zero(), "d={d}");
        }
    }

    /// `(d, m, n, order)` with `m + 2n = 2d`; `true` in `order` is a σ₁ step.
    fn interleaving() -> impl Strategy<Value = (u32, u32, u32, Vec<bool>)> {
        (1u32..=8)
            .prop_flat_map(|d| (Just(d), 0..=d))
            .prop_flat_map(|(d, n)| {
                let m = 2 * d - 2 * n;
                let steps: Vec<bool> = (0..m).map(|_| true).chain((0..n).map(|_| false)).collect();
                (Just(d), Just(m), Just(n), Just(steps).prop_shuffle())
            })
    }

    proptest! {
        #[test]
        fn generator_order_is_irrelevant((d, m, n, order) in interleaving()) {
            let mut e = SchubertElement::one(d);
            for &is_sigma1 in &order {
                e = if is_sigma1 { e.pieri_sigma1() } else { e.mul_sigma2() };
            }
            prop_assert_eq!(e, SchubertElement::monomial(d, m, n));
        }

        #[test]
        fn generators_raise_degree(d in 1u32..=8, a in 0u32..=8, b in 0u32..=8) {
            prop_assume!(BoxPartition::new(a, b).fits(d));
            let e = s(d, a, b);
            for (p, _) in e.pieri_sigma1().terms() {
                prop_assert_eq!(p.degree(), a + b + 1);
            }
            for (p, _) in e.mul_sigma2().terms() {
                prop_assert_eq!(p.degree(), a + b + 2);
            }
            if a + b != 2 * d {
                prop_assert!(e.integrate().is_zero());
            }
        }
    }
}
