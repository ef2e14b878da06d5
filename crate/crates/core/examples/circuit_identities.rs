// Gate identities behind the lattice, checked on dense unitaries.

use stabclass::identities::{circuit_identities, stabilizer9};

pub fn run_example() -> (usize, usize) {
    let checks = circuit_identities().unwrap();
    let failed: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
    for c in &failed {
        println!("FAIL {}", c.name);
    }
    println!("{} of {} identities hold", checks.len() - failed.len(), checks.len());
    let s9 = stabilizer9().unwrap();
    println!("nine-qubit state: commuting {}, rank {}, invariant {}", s9.commuting, s9.rank, s9.invariant);
    (checks.len() - failed.len(), checks.len())
}

fn main() {
    run_example();
}
