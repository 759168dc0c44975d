//! Exact computation of the flex divisor multiple `n_d = (2d+1)·C(d)²` of a
//! degree-`2d` K3 surface, cross-validated by four independent methods and
//! compared against the Yau–Zaslow rational-curve multiple.

pub mod cli;
pub mod error;
pub mod exact;
pub mod flexdeg;
pub mod oracle;
pub mod qseries;
pub mod render;
pub mod schubert;
pub mod selftest;
pub mod truncpoly;

pub use error::{Error, Result};
pub use exact::{binomial, catalan, factorial, ExactInt, ExactRational};
pub use flexdeg::{
    cross_check, example_checks, nd_chern_monomial, nd_chern_schubert, nd_closed, nd_double_sum,
    nd_factorial, FlexReport,
};
pub use qseries::{
    asym_flex, asym_yz, crossover, euler_power_neg24, yz_multiple, AsymReport, IntSeries,
};
pub use render::OutputFormat;
pub use schubert::{monomial_integral, BoxPartition, SchubertElement};
pub use truncpoly::{chern_total, GradedBivariate};
