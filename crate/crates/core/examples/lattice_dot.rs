// Export the class lattice as a Graphviz digraph.
//
// `cargo run --example lattice_dot | dot -Tsvg > lattice.svg`

use stabclass::lattice::lattice;

pub fn run_example() -> String {
    let dot = lattice().to_dot();
    print!("{dot}");
    dot
}

fn main() {
    run_example();
}
