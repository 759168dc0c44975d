//! The flex divisor multiple `n_d`, computed four independent ways.
//!
//! * closed form `(2d+1)·C(d)²`
//! * factorial form `(2d)!(2d+1)! / (d!²(d+1)!²)`
//! * the double binomial sum obtained by expanding the top-degree integral
//! * intersection theory on the Grassmannian: `n_d = -σ₁ · c_{2d-1}` of the
//!   tautological bundle, evaluated once through the closed-form monomial
//!   integral and once inside the Schubert ring itself.

use std::sync::OnceLock;

use num_bigint::Sign;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{
    binomial, catalan, exact_div, factorial, rational_to_int, ExactInt, ExactRational,
};
use crate::schubert::{monomial_integral, SchubertElement};
use crate::truncpoly::chern_total;

fn check_degree(d: u32) -> Result<()> {
    if d == 0 {
        Err(Error::NonPositiveDegree(d))
    } else {
        Ok(())
    }
}

pub fn nd_closed(d: u32) -> Result<ExactInt> {
    check_degree(d)?;
    let c = catalan(u64::from(d));
    Ok(ExactInt::from(2 * u64::from(d) + 1) * &c * &c)
}

pub fn nd_factorial(d: u32) -> Result<ExactInt> {
    check_degree(d)?;
    let d = i64::from(d);
    let num = factorial(2 * d)? * factorial(2 * d + 1)?;
    let fd = factorial(d)?;
    let fd1 = factorial(d + 1)?;
    let den = &fd * &fd * &fd1 * &fd1;
    Ok(exact_div(&num, &den))
}

/// How the global sign of the double sum is interpreted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SignConvention {
    /// Take the sum exactly as written, `(-1)^(j+1)` included.
    AsPrinted,
    /// Multiply by the sign found by calibrating against the closed form.
    Calibrated,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleSum {
    pub raw: ExactInt,
    pub resolved: ExactInt,
}

/// Degrees used to calibrate the sign of the double sum.
const CALIBRATION_DEGREES: std::ops::RangeInclusive<u32> = 1..=5;

/// `Σ_{j=0}^{d} Σ_{ℓ=1}^{d-j} (-1)^(j+1) C(4d+2, j) C(3d-j, 2d+ℓ) C(2d+ℓ, 2ℓ-1) C(2ℓ, ℓ) / (ℓ+1)`.
pub fn double_sum_raw(d: u32) -> Result<ExactInt> {
    check_degree(d)?;
    let d = i64::from(d);
    let mut total = ExactRational::zero();
    for j in 0..=d {
        let outer = binomial(4 * d + 2, j);
        let outer = if j % 2 == 0 { -outer } else { outer };
        for l in 1..=d - j {
            let num = &outer
                * binomial(3 * d - j, 2 * d + l)
                * binomial(2 * d + l, 2 * l - 1)
                * binomial(2 * l, l);
            total += ExactRational::new(num, ExactInt::from(l + 1));
        }
    }
    Ok(rational_to_int(&total))
}

/// Global sign relating the printed double sum to `n_d`, or `None` when the
/// calibration degrees do not agree on a single sign.
pub fn double_sum_sign() -> Option<Sign> {
    static SIGN: OnceLock<Option<Sign>> = OnceLock::new();
    *SIGN.get_or_init(|| {
        let mut found = None;
        for d in CALIBRATION_DEGREES {
            let raw = double_sum_raw(d).ok()?;
            let closed = nd_closed(d).ok()?;
            let sign = if raw == closed {
                Sign::Plus
            } else if raw == -closed {
                Sign::Minus
            } else {
                return None;
            };
            match found {
                None => found = Some(sign),
                Some(s) if s != sign => return None,
                Some(_) => {}
            }
        }
        found
    })
}

pub fn nd_double_sum_with(d: u32, convention: SignConvention) -> Result<DoubleSum> {
    let raw = double_sum_raw(d)?;
    let resolved = match (convention, double_sum_sign()) {
        (SignConvention::Calibrated, Some(Sign::Minus)) => -&raw,
        _ => raw.clone(),
    };
    Ok(DoubleSum { raw, resolved })
}

pub fn nd_double_sum(d: u32) -> Result<DoubleSum> {
    nd_double_sum_with(d, SignConvention::Calibrated)
}

/// The degree-`(2d-1)` Chern class as `(m, n, coefficient)` monomials in σ₁, σ₂.
fn chern_codim_one(d: u32) -> Result<Vec<(u32, u32, ExactInt)>> {
    chern_total(d)?.graded_part(2 * d - 1)
}

pub fn nd_chern_monomial(d: u32) -> Result<ExactInt> {
    check_degree(d)?;
    let mut total = ExactInt::zero();
    for (m, n, c) in chern_codim_one(d)? {
        total += c * monomial_integral(m + 1, n, d)?;
    }
    Ok(-total)
}

pub fn nd_chern_schubert(d: u32) -> Result<ExactInt> {
    check_degree(d)?;
    let mut class = SchubertElement::zero(d);
    for (m, n, c) in chern_codim_one(d)? {
        class.add_scaled(&SchubertElement::monomial(d, m, n), &c);
    }
    Ok(-class.pieri_sigma1().integrate())
}

/// All methods evaluated at one `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlexReport {
    pub d: u32,
    pub n_closed: ExactInt,
    pub n_factorial: ExactInt,
    pub n_sum_raw: ExactInt,
    pub n_sum_resolved: ExactInt,
    pub n_chern_monomial: ExactInt,
    pub n_chern_schubert: ExactInt,
    pub agree: bool,
}

impl FlexReport {
    pub fn compute(d: u32) -> Result<Self> {
        Self::compute_with(d, SignConvention::Calibrated)
    }

    pub fn compute_with(d: u32, convention: SignConvention) -> Result<Self> {
        let sum = nd_double_sum_with(d, convention)?;
        let mut report = FlexReport {
            d,
            n_closed: nd_closed(d)?,
            n_factorial: nd_factorial(d)?,
            n_sum_raw: sum.raw,
            n_sum_resolved: sum.resolved,
            n_chern_monomial: nd_chern_monomial(d)?,
            n_chern_schubert: nd_chern_schubert(d)?,
            agree: false,
        };
        report.agree = report.recompute_agree();
        Ok(report)
    }

    /// True iff the five resolved values coincide.
    pub fn recompute_agree(&self) -> bool {
        [
            &self.n_factorial,
            &self.n_sum_resolved,
            &self.n_chern_monomial,
            &self.n_chern_schubert,
        ]
        .iter()
        .all(|v| **v == self.n_closed)
    }

    /// Agreement with the raw double sum compared in absolute value.
    pub fn agree_up_to_sum_sign(&self) -> bool {
        [
            &self.n_factorial,
            &self.n_chern_monomial,
            &self.n_chern_schubert,
        ]
        .iter()
        .all(|v| **v == self.n_closed)
            && self.n_sum_raw.abs() == self.n_closed
    }
}

/// One report per `d` in `d_lo..=d_hi`, computed in parallel and returned in order.
pub fn cross_check(d_lo: u32, d_hi: u32) -> Result<Vec<FlexReport>> {
    cross_check_with(d_lo, d_hi, SignConvention::Calibrated)
}

pub fn cross_check_with(
    d_lo: u32,
    d_hi: u32,
    convention: SignConvention,
) -> Result<Vec<FlexReport>> {
    check_degree(d_lo)?;
    (d_lo..=d_hi)
        .into_par_iter()
        .map(|d| FlexReport::compute_with(d, convention))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExampleCheck {
    pub name: &'static str,
    pub lhs: ExactInt,
    pub rhs: ExactInt,
}

impl ExampleCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Degree bookkeeping for the known low-degree cases.
///
/// * sextic double plane: `R² = B²/2 = 18 = (n₁ L)²` with `L² = 2`
/// * Fermat quartic: 48 lines once, four hyperplane sections (degree 4) twice
/// * Schur quartic: 16 lines twice, 48 lines once
///
/// Both quartic cases must total `4·n₂`, the degree of `n₂ L` when `L² = 4`.
pub fn example_check_details() -> Vec<ExampleCheck> {
    let n1 = nd_closed(1).expect("d = 1");
    let n2 = nd_closed(2).expect("d = 2");
    let sextic_sq = ExactInt::from(6 * 6);
    vec![
        ExampleCheck {
            name: "degree-2 ramification",
            lhs: &n1 * &n1 * 2,
            rhs: exact_div(&sextic_sq, &ExactInt::from(2)),
        },
        ExampleCheck {
            name: "Fermat quartic",
            lhs: ExactInt::from(48 + 4 * (2 * 4)),
            rhs: ExactInt::from(4) * &n2,
        },
        ExampleCheck {
            name: "Schur quartic",
            lhs: ExactInt::from(16 * 2 + 48),
            rhs: ExactInt::from(4) * &n2,
        },
    ]
}

pub fn example_checks() -> bool {
    example_check_details().iter().all(ExampleCheck::holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::truncpoly::GradedBivariate;

    const TABLE: [u64; 9] = [
        3, 20, 175, 1764, 19404, 226512, 2760615, 34763300, 449141836,
    ];

    fn int(v: i64) -> ExactInt {
        ExactInt::from(v)
    }

    #[test]
    fn closed_and_factorial_examples() {
        assert_eq!(nd_closed(1).unwrap(), int(3));
        assert_eq!(nd_closed(2).unwrap(), int(20));
        assert_eq!(nd_closed(9).unwrap(), int(449141836));
        assert_eq!(nd_factorial(1).unwrap(), int(3));
        assert_eq!(nd_factorial(4).unwrap(), int(1764));
        assert_eq!(nd_factorial(7).unwrap(), int(2760615));
        assert_eq!(nd_closed(0), Err(Error::NonPositiveDegree(0)));
    }

    #[test]
    fn double_sum_examples() {
        // d = 1: only j = 0, l = 1 survives: -C(6,0) C(3,3) C(3,1) C(2,1) / 2
        let hand = -(binomial(6, 0) * binomial(3, 3) * binomial(3, 1) * binomial(2, 1)) / 2;
        assert_eq!(hand, int(-3));
        let s1 = nd_double_sum(1).unwrap();
        assert_eq!(s1.raw, int(-3));
        assert_eq!(s1.resolved, int(3));
        assert_eq!(nd_double_sum(3).unwrap().resolved, int(175));
        assert_eq!(double_sum_sign(), Some(Sign::Minus));
        assert_eq!(
            nd_double_sum_with(2, SignConvention::AsPrinted)
                .unwrap()
                .resolved,
            int(-20)
        );
    }

    #[test]
    fn chern_examples() {
        // -(-3) * ∫σ₁² on the d = 1 box
        assert_eq!(-int(-3) * monomial_integral(2, 0, 1).unwrap(), int(3));
        assert_eq!(nd_chern_monomial(1).unwrap(), int(3));
        assert_eq!(nd_chern_monomial(2).unwrap(), int(20));
        assert_eq!(nd_chern_monomial(5).unwrap(), int(19404));
        assert_eq!(nd_chern_schubert(1).unwrap(), int(3));
        assert_eq!(nd_chern_schubert(2).unwrap(), int(20));
        assert_eq!(nd_chern_schubert(6).unwrap(), int(226512));
    }

    #[test]
    fn table_values() {
        let reports = cross_check(1, 9).unwrap();
        for (r, &expected) in reports.iter().zip(TABLE.iter()) {
            let e = ExactInt::from(expected);
            assert!(r.agree, "d = {}", r.d);
            assert_eq!(r.n_closed, e);
            assert_eq!(r.n_sum_raw, -e);
        }
        let single = cross_check(1, 1).unwrap();
        assert_eq!(single.len(), 1);
        assert!(single[0].agree);
    }

    #[test]
    fn d10_agrees_with_closed_form() {
        let r = FlexReport::compute(10).unwrap();
        assert!(r.agree);
        assert_eq!(r.n_closed, int(21) * catalan(10) * catalan(10));
    }

    #[test]
    fn unresolved_sign_disagrees() {
        let r = FlexReport::compute_with(3, SignConvention::AsPrinted).unwrap();
        assert!(!r.agree);
        assert!(r.agree_up_to_sum_sign());
    }

    #[test]
    fn examples_hold() {
        let details = example_check_details();
        assert!(details.iter().all(ExampleCheck::holds), "{details:?}");
        assert_eq!(details[0].lhs, int(18));
        assert_eq!(details[1].lhs, int(48 + 32));
        assert_eq!(details[2].lhs, int(32 + 48));
        assert!(example_checks());
    }

    #[test]
    fn positivity_and_parity() {
        for d in 1..=40u32 {
            let n = nd_closed(d).unwrap();
            assert!(n.is_positive());
            let c = catalan(u64::from(d));
            let direct = ExactInt::from(2 * d + 1) * &c * &c;
            assert_eq!(n.bit(0), direct.bit(0));
        }
    }

    /// The top-degree part of `σ₁ (1+σ₁)^(4d+2) / (1+σ₁+σ₂)^(d+2)` equals
    /// `-σ₁ c_{2d-1}`, since `s1 ↦ -s1` negates the odd-degree Chern class.
    #[test]
    fn minus_signs_cancel() {
        for d in 1..=20u32 {
            let cap = 2 * d;
            let num = GradedBivariate::from_small(cap, &[(0, 0, 1), (1, 0, 1)])
                .unwrap()
                .power(u64::from(4 * d + 2));
            let den = GradedBivariate::from_small(cap, &[(0, 0, 1), (1, 0, 1), (0, 1, 1)])
                .unwrap()
                .power(u64::from(d + 2));
            let s1 = GradedBivariate::from_small(cap, &[(1, 0, 1)]).unwrap();
            let positive = s1.mul(&num.mul(&den.invert().unwrap()).unwrap()).unwrap();
            let mut top = ExactInt::zero();
            for (m, n, c) in positive.graded_part(cap).unwrap() {
                top += c * monomial_integral(m, n, d).unwrap();
            }
            assert_eq!(top, nd_chern_monomial(d).unwrap(), "d = {d}");
        }
    }

    #[test]
    fn five_way_agreement_to_40() {
        for r in cross_check(1, 40).unwrap() {
            assert!(r.agree, "d = {}", r.d);
            assert_eq!(r.n_sum_raw.abs(), r.n_closed);
        }
    }
}
