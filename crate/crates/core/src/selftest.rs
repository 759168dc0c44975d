//! Built-in consistency checks run by the `selftest` subcommand.

use serde::Serialize;

use crate::flexdeg::{cross_check_with, example_checks, SignConvention};
use crate::oracle::{euler_product_direct, schubert_integral_mismatch};
use crate::qseries::euler_power_neg24;

pub const AGREEMENT_MAX_D: u32 = 25;
pub const SCHUBERT_MAX_D: u32 = 10;
pub const SERIES_N: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn outcome(name: &'static str, failure: Option<String>) -> CheckOutcome {
    CheckOutcome {
        name,
        passed: failure.is_none(),
        detail: failure.unwrap_or_default(),
    }
}

pub fn run(convention: SignConvention) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    match cross_check_with(1, AGREEMENT_MAX_D, convention) {
        Ok(reports) => {
            let sum_bad = reports.iter().find(|r| r.n_sum_resolved != r.n_closed);
            out.push(outcome(
                "double-sum",
                sum_bad.map(|r| {
                    format!(
                        "d={}: resolved {} vs closed {}",
                        r.d, r.n_sum_resolved, r.n_closed
                    )
                }),
            ));
            let bad = reports.iter().find(|r| !r.agree);
            out.push(outcome(
                "five-way agreement",
                bad.map(|r| format!("methods disagree at d={}", r.d)),
            ));
        }
        Err(e) => out.push(outcome("five-way agreement", Some(e.to_string()))),
    }
    out.push(outcome(
        "schubert integral oracle",
        schubert_integral_mismatch(SCHUBERT_MAX_D).map(|(d, m, n)| format!("d={d} m={m} n={n}")),
    ));
    let series = euler_power_neg24(SERIES_N);
    let direct = euler_product_direct(SERIES_N);
    let first_diff = series
        .coeffs()
        .iter()
        .zip(&direct)
        .position(|(a, b)| a != b);
    out.push(outcome(
        "q-series oracle",
        first_diff.map(|n| format!("coefficient {n} differs")),
    ));
    out.push(outcome(
        "example bookkeeping",
        (!example_checks()).then(|| "bookkeeping mismatch".to_string()),
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn passes_on_calibrated_sign() {
        let results = run(SignConvention::Calibrated);
        assert!(results.iter().all(|c| c.passed), "{results:?}");
    }

    #[test]
    fn printed_sign_fails_double_sum() {
        let results = run(SignConvention::AsPrinted);
        let failing: Vec<_> = results
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name)
            .collect();
        assert!(failing.contains(&"double-sum"), "{failing:?}");
    }
}
