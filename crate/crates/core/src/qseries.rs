//! Integer q-series for `∏_{n≥1} (1 - qⁿ)^(-24)` and the comparison of
//! the flex multiple against the rational-curve (Yau–Zaslow) multiple.

use std::f64::consts::{LN_2, PI};

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::ExactInt;
use crate::flexdeg::nd_closed;

/// Dense coefficient list `a(0..=N)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSeries {
    coeffs: Vec<ExactInt>,
}

impl IntSeries {
    pub fn from_coeffs(coeffs: Vec<ExactInt>) -> Self {
        IntSeries { coeffs }
    }

    pub fn coeffs(&self) -> &[ExactInt] {
        &self.coeffs
    }

    /// Highest stored exponent.
    pub fn precision(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn get(&self, index: usize) -> Result<&ExactInt> {
        self.coeffs.get(index).ok_or(Error::SeriesTooShort {
            index,
            len: self.coeffs.len(),
        })
    }
}

/// `σ₁(k)` for `k = 0..=n`, by sieve (`σ₁(0)` is unused and left 0).
fn divisor_sums(n: usize) -> Vec<u64> {
    let mut sigma = vec![0u64; n + 1];
    for k in 1..=n {
        for multiple in (k..=n).step_by(k) {
            sigma[multiple] += k as u64;
        }
    }
    sigma
}

/// Coefficients of `∏ (1 - qⁿ)^(-24)` through `q^N`, via the logarithmic
/// derivative recurrence `n·a(n) = 24·Σ_{k=1}^{n} σ₁(k)·a(n-k)`.
pub fn euler_power_neg24(n_max: usize) -> IntSeries {
    let sigma = divisor_sums(n_max);
    let mut a: Vec<ExactInt> = Vec::with_capacity(n_max + 1);
    a.push(ExactInt::one());
    for n in 1..=n_max {
        let mut acc = ExactInt::zero();
        for k in 1..=n {
            acc += &a[n - k] * sigma[k];
        }
        acc *= 24u32;
        let (q, r) = num_integer::Integer::div_rem(&acc, &ExactInt::from(n));
        assert!(r.is_zero(), "recurrence left a remainder at n = {n}");
        a.push(q);
    }
    IntSeries { coeffs: a }
}

/// `[q^(d+1)] ∏ (1 - qⁿ)^(-24)`.
pub fn yz_multiple(d: u32) -> Result<ExactInt> {
    if d == 0 {
        return Err(Error::NonPositiveDegree(d));
    }
    let series = euler_power_neg24(d as usize + 1);
    series.get(d as usize + 1).cloned()
}

fn yz_from(series: &IntSeries, d: u32) -> Result<&ExactInt> {
    if d == 0 {
        return Err(Error::NonPositiveDegree(d));
    }
    series.get(d as usize + 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossoverRow {
    pub d: u32,
    #[serde(serialize_with = "crate::render::as_decimal")]
    pub n_d: ExactInt,
    #[serde(serialize_with = "crate::render::as_decimal")]
    pub yz_d: ExactInt,
    pub flex_larger: bool,
}

/// The switch point stated in the literature: flex overtakes between 8 and 9,
/// i.e. the first flex-dominant degree is 9.
pub const REMARK_FIRST_FLEX_DOMINANT: u32 = 9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Crossover {
    pub max_d: u32,
    pub rows: Vec<CrossoverRow>,
    /// Smallest `d` with `n_d > [q^(d+1)]`.
    pub first_flex_dominant: Option<u32>,
    /// Flex stays ahead for every `d` from the crossover through `max_d`.
    pub permanent: bool,
    /// Same comparison against `[q^d]` instead of `[q^(d+1)]`.
    pub first_flex_dominant_q_d: Option<u32>,
    /// First `d` at which the asymptotic model for `n_d` exceeds the model
    /// for the Yau–Zaslow multiple.
    pub first_model_flex_dominant: Option<u32>,
}

impl Crossover {
    pub fn agrees_with_remark(&self) -> bool {
        self.first_flex_dominant == Some(REMARK_FIRST_FLEX_DOMINANT)
    }
}

pub fn crossover(max_d: u32) -> Result<Crossover> {
    if max_d == 0 {
        return Err(Error::NonPositiveDegree(max_d));
    }
    let series = euler_power_neg24(max_d as usize + 1);
    let rows = (1..=max_d)
        .into_par_iter()
        .map(|d| {
            let n_d = nd_closed(d)?;
            let yz_d = yz_from(&series, d)?.clone();
            let flex_larger = n_d > yz_d;
            Ok(CrossoverRow {
                d,
                n_d,
                yz_d,
                flex_larger,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let first_flex_dominant = rows.iter().find(|r| r.flex_larger).map(|r| r.d);
    let permanent = match first_flex_dominant {
        Some(first) => rows.iter().filter(|r| r.d >= first).all(|r| r.flex_larger),
        None => true,
    };
    let first_flex_dominant_q_d = rows
        .iter()
        .find(|r| series.coeffs[r.d as usize] < r.n_d)
        .map(|r| r.d);
    let first_model_flex_dominant = (1..=max_d).find(|&d| flex_model_log(d) > yz_model_log(d));

    Ok(Crossover {
        max_d,
        rows,
        first_flex_dominant,
        permanent,
        first_flex_dominant_q_d,
        first_model_flex_dominant,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AsymReport {
    pub d: u32,
    pub log_exact: f64,
    pub log_model: f64,
    pub log_ratio: f64,
}

impl AsymReport {
    fn new(d: u32, log_exact: f64, log_model: f64) -> Self {
        AsymReport {
            d,
            log_exact,
            log_model,
            log_ratio: log_exact - log_model,
        }
    }

    pub fn relative_error(&self) -> f64 {
        self.log_ratio.abs() / self.log_exact
    }
}

/// Natural log of a positive integer of any size.
///
/// The top 64 bits become the `f64` mantissa and the discarded bit count is
/// added back as a multiple of `ln 2`, so nothing overflows.
pub fn ln_exact(x: &ExactInt) -> f64 {
    assert!(x.is_positive(), "logarithm of non-positive integer");
    let bits = x.bits();
    let shift = bits.saturating_sub(64);
    let top: ExactInt = x >> shift;
    let mantissa = u64::try_from(&top).expect("at most 64 bits remain") as f64;
    mantissa.ln() + shift as f64 * LN_2
}

/// `ln(2^(4d+1) / (π d²))`.
pub fn flex_model_log(d: u32) -> f64 {
    let d = f64::from(d);
    (4.0 * d + 1.0) * LN_2 - PI.ln() - 2.0 * d.ln()
}

/// `ln(e^(4π√d) / (√2 d^(27/4)))`.
pub fn yz_model_log(d: u32) -> f64 {
    let d = f64::from(d);
    4.0 * PI * d.sqrt() - 0.5 * LN_2 - 6.75 * d.ln()
}

pub fn asym_flex(d: u32) -> Result<AsymReport> {
    let exact = nd_closed(d)?;
    Ok(AsymReport::new(d, ln_exact(&exact), flex_model_log(d)))
}

pub fn asym_yz_with(series: &IntSeries, d: u32) -> Result<AsymReport> {
    let exact = yz_from(series, d)?;
    Ok(AsymReport::new(d, ln_exact(exact), yz_model_log(d)))
}

pub fn asym_yz(d: u32) -> Result<AsymReport> {
    if d == 0 {
        return Err(Error::NonPositiveDegree(d));
    }
    asym_yz_with(&euler_power_neg24(d as usize + 1), d)
}
