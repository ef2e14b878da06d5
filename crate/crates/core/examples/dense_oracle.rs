// Cross-checking the exact tableau arithmetic against dense unitaries.

use stabclass::dense::{tableau_from_unitary, unitary_of_circuit, verify_identity};
use stabclass::{Circuit, Gate, Pauli};

pub fn run_example() -> bool {
    let c = Circuit::new(3)
        .with(Gate::one("H"), &[0])
        .with(Gate::CNOT, &[1, 0])
        .with(Gate::one("GAMMA_PPP"), &[2])
        .with(Gate::C(Pauli::Y, Pauli::Z), &[2, 1]);
    let exact = c.tableau().unwrap();
    let read_back = tableau_from_unitary(&unitary_of_circuit(&c).unwrap()).unwrap();
    println!("circuit:\n{c}exact and dense tableaux agree: {}", exact == read_back);

    // H sandwiching CZ on the target is a CNOT.
    let lhs = Circuit::new(2).with(Gate::one("H"), &[1]).with(Gate::C(Pauli::Z, Pauli::Z), &[0, 1]).with(Gate::one("H"), &[1]);
    let rhs = Circuit::new(2).with(Gate::C(Pauli::Z, Pauli::X), &[0, 1]);
    let same = verify_identity(&lhs, &rhs).unwrap();
    println!("H CZ H = C(Z,X): {same}");
    exact == read_back && same
}

fn main() {
    run_example();
}
