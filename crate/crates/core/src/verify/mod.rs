//! Verification suites and their reports.

mod properties;
mod report;
mod suites;

pub use properties::{random_homogeneous, random_monomial, random_poly, verify_properties};
pub use report::{natural_cmp, CheckRecord, Report, Summary};
pub use suites::{
    run_all, verify_asymptotics, verify_even_dims, verify_lemma, verify_odd_vanishing,
    with_threads, RunConfig, EXPANSION_CHECK_MAX_LEGS, SPAN_CHECK_MAX_LEGS,
};
