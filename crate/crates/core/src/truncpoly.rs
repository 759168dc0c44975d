//! Truncated graded polynomials in `s1` (degree 1) and `s2` (degree 2).
//!
//! A [`GradedBivariate`] with cap `D` keeps every monomial `s1^m s2^n` with
//! `m + 2n <= D` in a dense triangular array; products drop anything above
//! the cap. This is the arithmetic behind the total Chern class of the
//! tautological bundle restricted to the Grassmannian, with `s1 ↦ σ₁` and
//! `s2 ↦ σ₂`.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::ExactInt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedBivariate {
    cap: u32,
    // Row n holds m = 0..=cap - 2n, rows stored back to back.
    coeffs: Vec<ExactInt>,
}

fn row_offset(cap: u32, n: u32) -> usize {
    let (cap, n) = (cap as usize, n as usize);
    n * (cap + 1) - n * n.saturating_sub(1)
}

fn storage_len(cap: u32) -> usize {
    row_offset(cap, cap / 2 + 1)
}

impl GradedBivariate {
    pub fn zero(cap: u32) -> Self {
        GradedBivariate {
            cap,
            coeffs: vec![ExactInt::zero(); storage_len(cap)],
        }
    }

    pub fn one(cap: u32) -> Self {
        Self::constant(cap, ExactInt::one())
    }

    pub fn constant(cap: u32, c: ExactInt) -> Self {
        let mut p = Self::zero(cap);
        p.coeffs[0] = c;
        p
    }

    /// Builds a polynomial from `(m, n, coefficient)` triples; repeated
    /// monomials are summed.
    pub fn from_terms<I>(cap: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32, ExactInt)>,
    {
        let mut p = Self::zero(cap);
        for (m, n, c) in terms {
            let i = p.index(m, n).ok_or(Error::AboveCap { m, n, cap })?;
            p.coeffs[i] += c;
        }
        Ok(p)
    }

    /// `1 + c1·s1 + c2·s2` style shorthand for small literals.
    pub fn from_small(cap: u32, terms: &[(u32, u32, i64)]) -> Result<Self> {
        Self::from_terms(
            cap,
            terms.iter().map(|&(m, n, c)| (m, n, ExactInt::from(c))),
        )
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    fn index(&self, m: u32, n: u32) -> Option<usize> {
        let deg = u64::from(m) + 2 * u64::from(n);
        (deg <= u64::from(self.cap)).then(|| row_offset(self.cap, n) + m as usize)
    }

    /// Coefficient of `s1^m s2^n`; zero above the cap.
    pub fn coeff(&self, m: u32, n: u32) -> ExactInt {
        self.index(m, n)
            .map(|i| self.coeffs[i].clone())
            .unwrap_or_default()
    }

    fn coeff_ref(&self, m: u32, n: u32) -> &ExactInt {
        &self.coeffs[row_offset(self.cap, n) + m as usize]
    }

    /// All monomials `(m, n)` within the cap, row by row.
    fn monomials(cap: u32) -> impl Iterator<Item = (u32, u32)> {
        (0..=cap / 2).flat_map(move |n| (0..=cap - 2 * n).map(move |m| (m, n)))
    }

    /// Nonzero terms as `(m, n, coefficient)`, ordered by `(n, m)`.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &ExactInt)> {
        Self::monomials(self.cap)
            .zip(self.coeffs.iter())
            .filter(|(_, c)| !c.is_zero())
            .map(|((m, n), c)| (m, n, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_cap(&self, other: &Self) -> Result<()> {
        if self.cap == other.cap {
            Ok(())
        } else {
            Err(Error::CapMismatch(self.cap, other.cap))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_cap(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(GradedBivariate {
            cap: self.cap,
            coeffs,
        })
    }

    pub fn neg(&self) -> Self {
        GradedBivariate {
            cap: self.cap,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_cap(other)?;
        let cap = self.cap;
        let mut out = Self::zero(cap);
        for (m1, n1, a) in self.terms() {
            let used = m1 + 2 * n1;
            for n2 in 0..=(cap - used) / 2 {
                let row = row_offset(cap, n2);
                let out_row = row_offset(cap, n1 + n2) + m1 as usize;
                for m2 in 0..=(cap - used - 2 * n2) {
                    let b = &other.coeffs[row + m2 as usize];
                    if !b.is_zero() {
                        out.coeffs[out_row + m2 as usize] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self^k` by repeated squaring.
    pub fn power(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.cap);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).expect("same cap");
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).expect("same cap");
            }
        }
        acc
    }

    /// Multiplicative inverse up to the cap, for polynomials with constant
    /// term 1. Degree `k` of the inverse is solved from degrees below `k`.
    pub fn invert(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnit);
        }
        let cap = self.cap;
        let mut inv = Self::one(cap);
        for k in 1..=cap {
            for n in 0..=k / 2 {
                let m = k - 2 * n;
                let mut acc = ExactInt::zero();
                for n1 in 0..=n {
                    for m1 in 0..=m {
                        if m1 == 0 && n1 == 0 {
                            continue;
                        }
                        let p = self.coeff_ref(m1, n1);
                        if !p.is_zero() {
                            acc += p * inv.coeff_ref(m - m1, n - n1);
                        }
                    }
                }
                let i = row_offset(cap, n) + m as usize;
                inv.coeffs[i] = -acc;
            }
        }
        Ok(inv)
    }

    /// Nonzero monomials of total degree exactly `k`, ordered by `(n, m)`.
    pub fn graded_part(&self, k: u32) -> Result<Vec<(u32, u32, ExactInt)>> {
        if k > self.cap {
            return Err(Error::DegreeOutOfRange { k, cap: self.cap });
        }
        Ok((0..=k / 2)
            .map(|n| (k - 2 * n, n))
            .map(|(m, n)| (m, n, self.coeff_ref(m, n).clone()))
            .filter(|(_, _, c)| !c.is_zero())
            .collect())
    }
}

impl fmt::Display for GradedBivariate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, n, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            match m {
                0 => {}
                1 => f.write_str("*s1")?,
                _ => write!(f, "*s1^{m}")?,
            }
            match n {
                0 => {}
                1 => f.write_str("*s2")?,
                _ => write!(f, "*s2^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Total Chern class of the rank-`2d` tautological bundle on the
/// Grassmannian: `(1 - s1)^(4d+2) / (1 - s1 + s2)^(d+2)`, truncated at `2d`.
pub fn chern_total(d: u32) -> Result<GradedBivariate> {
    if d == 0 {
        return Err(Error::NonPositiveDegree(d));
    }
    let cap = 2 * d;
    let numerator =
        GradedBivariate::from_small(cap, &[(0, 0, 1), (1, 0, -1)])?.power(u64::from(4 * d + 2));
    let denominator = GradedBivariate::from_small(cap, &[(0, 0, 1), (1, 0, -1), (0, 1, 1)])?
        .power(u64::from(d + 2));
    numerator.mul(&denominator.invert()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(cap: u32, terms: &[(u32, u32, i64)]) -> GradedBivariate {
        GradedBivariate::from_small(cap, terms).unwrap()
    }

    #[test]
    fn storage_layout() {
        for cap in 0..10 {
            assert_eq!(storage_len(cap), GradedBivariate::monomials(cap).count());
        }
    }

    #[test]
    fn ring_examples() {
        let a = poly(2, &[(0, 0, 1), (1, 0, -1)]);
        let b = poly(2, &[(0, 0, 1), (1, 0, 1)]);
        assert_eq!(a.mul(&b).unwrap(), poly(2, &[(0, 0, 1), (2, 0, -1)]));

        let c = poly(1, &[(0, 0, 1), (1, 0, 1)]);
        assert_eq!(c.power(2), poly(1, &[(0, 0, 1), (1, 0, 2)]));

        let s2 = poly(3, &[(0, 1, 1)]);
        assert!(s2.mul(&s2).unwrap().is_zero());
    }

    #[test]
    fn cap_errors() {
        let a = GradedBivariate::one(2);
        let b = GradedBivariate::one(3);
        assert_eq!(a.mul(&b), Err(Error::CapMismatch(2, 3)));
        assert_eq!(a.add(&b), Err(Error::CapMismatch(2, 3)));
        assert_eq!(
            GradedBivariate::from_small(3, &[(0, 2, 1)]),
            Err(Error::AboveCap { m: 0, n: 2, cap: 3 })
        );
        assert_eq!(
            a.graded_part(3),
            Err(Error::DegreeOutOfRange { k: 3, cap: 2 })
        );
    }

    #[test]
    fn invert_examples() {
        assert_eq!(
            GradedBivariate::one(4).invert().unwrap(),
            GradedBivariate::one(4)
        );
        let geometric = poly(3, &[(0, 0, 1), (1, 0, -1)]).invert().unwrap();
        assert_eq!(
            geometric,
            poly(3, &[(0, 0, 1), (1, 0, 1), (2, 0, 1), (3, 0, 1)])
        );
        // (1 - s1 + s2)(1 + s1 + s1^2 - s2) = 1 + O(deg 3)
        let q = poly(2, &[(0, 0, 1), (1, 0, -1), (0, 1, 1)])
            .invert()
            .unwrap();
        assert_eq!(q, poly(2, &[(0, 0, 1), (1, 0, 1), (2, 0, 1), (0, 1, -1)]));
        assert_eq!(poly(2, &[(0, 0, 2)]).invert(), Err(Error::NonUnit));
    }

    #[test]
    fn chern_total_low_degrees() {
        let c1 = chern_total(1).unwrap();
        assert_eq!(c1.graded_part(0).unwrap(), vec![(0, 0, ExactInt::one())]);
        assert_eq!(c1.graded_part(1).unwrap(), vec![(1, 0, ExactInt::from(-3))]);
        // (1-s1)^6 (1 + 3s1 + 6s1^2 - 3s2 + ...): s1^2 -> 15 - 18 + 6 = 3, s2 -> -3
        assert_eq!(
            c1.graded_part(2).unwrap(),
            vec![(2, 0, ExactInt::from(3)), (0, 1, ExactInt::from(-3))]
        );
        for d in 1..6 {
            assert_eq!(chern_total(d).unwrap().coeff(0, 0), ExactInt::one());
        }
        assert_eq!(chern_total(0), Err(Error::NonPositiveDegree(0)));
    }

    #[test]
    fn graded_part_of_one() {
        assert_eq!(
            GradedBivariate::one(3).graded_part(0).unwrap(),
            vec![(0, 0, ExactInt::one())]
        );
        assert!(GradedBivariate::one(3).graded_part(2).unwrap().is_empty());
    }

    fn small_poly(cap: u32) -> impl Strategy<Value = GradedBivariate> {
        let len = storage_len(cap);
        proptest::collection::vec(-9i64..=9, len).prop_map(move |cs| GradedBivariate {
            cap,
            coeffs: cs.into_iter().map(ExactInt::from).collect(),
        })
    }

    fn unit_poly(cap: u32) -> impl Strategy<Value = GradedBivariate> {
        small_poly(cap).prop_map(|mut p| {
            p.coeffs[0] = ExactInt::one();
            p
        })
    }

    proptest! {
        #[test]
        fn inverse_is_two_sided((p, cap) in (0u32..=12).prop_flat_map(|cap| (unit_poly(cap), Just(cap)))) {
            let q = p.invert().unwrap();
            prop_assert_eq!(p.mul(&q).unwrap(), GradedBivariate::one(cap));
            prop_assert_eq!(q.mul(&p).unwrap(), GradedBivariate::one(cap));
        }

        #[test]
        fn ring_laws((a, b, c) in (0u32..=8).prop_flat_map(|cap| (small_poly(cap), small_poly(cap), small_poly(cap)))) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
        }

        #[test]
        fn power_matches_repeated_mul((p, k) in ((0u32..=6).prop_flat_map(small_poly), 0u64..6)) {
            let mut expected = GradedBivariate::one(p.cap());
            for _ in 0..k {
                expected = expected.mul(&p).unwrap();
            }
            prop_assert_eq!(p.power(k), expected);
        }
    }
}
