use jd3_core::coverage::{self, Op};
use jd3_core::verify::{run_all, RunConfig};

#[test]
fn suites_touch_every_operation() {
    coverage::reset();
    assert_eq!(coverage::untouched().len(), Op::ALL.len());
    let cfg = RunConfig {
        max_odd_legs: 11,
        max_even_legs: 4,
        max_lemma_d: 1,
        max_asym_d: 1,
        ..RunConfig::default()
    };
    let report = run_all(&cfg).unwrap();
    assert!(report.all_passed(), "{}", report.to_text());
    let missing: Vec<&str> = coverage::untouched().iter().map(|op| op.label()).collect();
    assert!(missing.is_empty(), "never exercised: {missing:?}");
}
