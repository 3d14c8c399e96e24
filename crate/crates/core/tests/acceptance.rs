//! One line per acceptance criterion. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use cylkit::suites::{
    cylindric_inputs, cylindric_shift, default_types, dual_pieri, example2, example2_intermediates,
    grassmannianize_bounds, nilcoxeter_suite, oracle_agreement, oracle_inputs, phi_bijection, positivity_support,
    NilCoxeterConfig, OracleConfig, SuiteReport,
};

fn main() -> ExitCode {
    let inputs = oracle_inputs(&OracleConfig::default());
    let types = default_types();
    let criteria: Vec<(&str, Box<dyn Fn() -> SuiteReport + '_>)> = vec![
        ("golden table", Box::new(example2)),
        ("worked example intermediates", Box::new(example2_intermediates)),
        ("oracle equivalence", Box::new(|| oracle_agreement(&inputs))),
        ("positivity and support", Box::new(|| positivity_support(&inputs))),
        ("shift, toric and LR", Box::new(|| cylindric_shift(&types, 9))),
        ("dual Pieri identity", Box::new(|| dual_pieri(&[2, 3, 4, 5], 6))),
        ("nilCoxeter suite", Box::new(|| nilcoxeter_suite(&NilCoxeterConfig::default()))),
        (
            "completion bounds",
            Box::new(|| {
                let mut all = inputs.clone();
                all.extend(cylindric_inputs(&types, 9));
                grassmannianize_bounds(&all)
            }),
        ),
        ("phi bijection", Box::new(|| phi_bijection(&types, 9, 7, 4))),
    ];
    let mut failures = 0;
    for (i, (label, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let report = run();
        let status = if report.passed() { "PASS" } else { "FAIL" };
        println!(
            "criterion {}: {status} {label} [{} checks, {} failed, {:.2?}]",
            i + 1,
            report.checked,
            report.failed,
            start.elapsed()
        );
        if !report.passed() {
            failures += 1;
            for c in &report.counterexamples {
                println!("    counterexample: {c}");
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
