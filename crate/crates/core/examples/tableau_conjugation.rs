// Conjugating Pauli strings through a tableau, and composing tableaux.

use stabclass::{Gate, PauliString, Tableau};

pub fn run_example() -> Vec<(String, String)> {
    let cnot = Gate::CNOT.tableau().unwrap();
    println!("CNOT tableau:\n{cnot}");
    let mut images = Vec::new();
    for s in ["XI", "IX", "ZI", "IZ", "YY"] {
        let p: PauliString = s.parse().unwrap();
        let q = cnot.conjugate(&p).unwrap();
        println!("{p} -> {q}");
        images.push((p.to_string(), q.to_string()));
    }

    // S applied twice is Z; compose applies its receiver first.
    let s = Gate::one("S").tableau().unwrap();
    let z: Tableau = s.compose(&s).unwrap();
    assert_eq!(z, Gate::one("Z").tableau().unwrap());
    println!("S then S:\n{z}");
    images
}

fn main() {
    run_example();
}
