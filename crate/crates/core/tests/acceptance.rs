//! The ten acceptance criteria, one line each. Runs without the libtest
//! harness so the lines always reach the output.

use std::process::ExitCode;
use std::time::Instant;

use stabclass::identities::circuit_identities;
use stabclass::suites::{
    canonical_2q_bijection, catalog_fidelity, composition_law, enumeration_agreement, lattice_integrity,
    named_classifications, stabilizer9_checks, synthesis_round_trip, universal_construction_checks, Check,
};
use stabclass::Error;

/// Random pairs for the composition law.
const COMPOSITION_PAIRS: usize = 1000;
/// Random tableaux for the universal construction.
const UNIVERSAL_SAMPLES: usize = 500;
/// Random generator words per class for synthesis.
const SYNTHESIS_PER_CLASS: usize = 200;
const SEED: u64 = 2024;

fn main() -> ExitCode {
    let criteria: Vec<(&str, fn() -> Result<Vec<Check>, Error>)> = vec![
        ("catalog fidelity", catalog_fidelity),
        ("composition law", || composition_law(COMPOSITION_PAIRS, SEED)),
        ("lattice integrity", || Ok(lattice_integrity())),
        ("classification of named gates", named_classifications),
        ("enumeration", enumeration_agreement),
        ("universal construction", || universal_construction_checks(UNIVERSAL_SAMPLES, SEED)),
        ("circuit identities", circuit_identities),
        ("synthesis round trip", || synthesis_round_trip(SYNTHESIS_PER_CLASS, SEED)),
        ("two-qubit canonical form", canonical_2q_bijection),
        ("nine-qubit stabilizer state", stabilizer9_checks),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = match f() {
            Ok(checks) => {
                let bad: Vec<&str> = checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
                let detail = if bad.is_empty() { format!("{} checks", checks.len()) } else { format!("failing: {bad:?}") };
                (bad.is_empty(), detail)
            }
            Err(e) => (false, format!("error: {e}")),
        };
        failed += !ok as usize;
        println!(
            "acceptance {:>2} {} {name} ({detail}, {:.1}s)",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
