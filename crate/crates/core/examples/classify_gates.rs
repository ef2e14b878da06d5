// Which class does a set of gates generate?

use stabclass::lattice::lattice;
use stabclass::Gate;

pub fn run_example() -> Vec<(String, String)> {
    let sets: [&[&str]; 6] = [
        &["CNOT", "H", "S"],
        &["CNOT"],
        &["CSIGN", "S"],
        &["T4"],
        &["T4", "GAMMA_PPP"],
        &["SWAP", "X"],
    ];
    let l = lattice();
    let mut out = Vec::new();
    for set in sets {
        let ts: Vec<_> = set.iter().map(|g| g.parse::<Gate>().unwrap().tableau().unwrap()).collect();
        let class = l.classify_set(&ts).unwrap();
        println!("{:<20} {}", set.join(" "), class.name);
        out.push((set.join(" "), class.name.to_string()));
    }
    out
}

fn main() {
    run_example();
}
