// Conjugate a SWAP by a gate and read the result back as a T_2k core
// wrapped in CNOT and single-qubit layers.

use stabclass::synthesis::{decompose_universal, universal_construction};
use stabclass::Gate;

pub fn run_example() -> usize {
    let g = "T4".parse::<Gate>().unwrap().tableau().unwrap();
    let u = universal_construction(&g);
    let d = decompose_universal(&u).unwrap();
    println!("core T{} on {:?}", 2 * d.k, d.core);
    print!("{}", d.circuit());
    assert_eq!(d.circuit().tableau().unwrap(), u);
    d.k
}

fn main() {
    run_example();
}
