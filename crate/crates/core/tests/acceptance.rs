use spinq::verify::{run_suite, SuiteReport};
use std::process::ExitCode;
use std::time::Instant;

const CRITERIA: [(&str, &str); 10] = [
    ("qfunctions", "Q-functions agree across recursion, Pfaffian and tableaux"),
    ("cauchy", "orthogonality and Cauchy identities"),
    ("spinkostka", "spin Kostka polynomials"),
    ("kostka", "Kostka polynomials against independent oracles"),
    ("specialize", "graded multiplicities and specializations"),
    ("seminormal", "seminormal modules"),
    ("characters", "spin characters"),
    ("sergeev", "super dimension identity"),
    ("bijection", "weights and skew shifted tableaux"),
    ("counting", "partition counts and split classes"),
];

fn main() -> ExitCode {
    let verbose = std::env::var_os("SPINQ_VERBOSE").is_some();
    let mut all_ok = true;
    for (i, (suite, what)) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let report: Result<SuiteReport, _> = run_suite(suite);
        let secs = start.elapsed().as_secs_f64();
        match report {
            Ok(r) => {
                let ok = r.passed();
                all_ok &= ok;
                println!("{} criterion {}: {what} ({} checks, {secs:.1}s)", if ok { "PASS" } else { "FAIL" }, i + 1, r.checks.len());
                for c in r.checks.iter().filter(|c| verbose || !c.passed) {
                    println!("    {} {}: {}", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail);
                }
            }
            Err(e) => {
                all_ok = false;
                println!("FAIL criterion {}: {what} (error: {e})", i + 1);
            }
        }
    }
    if all_ok { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
