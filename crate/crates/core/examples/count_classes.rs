// Class sizes by closed formula, checked against a generator closure for
// the small cases.

use num_bigint::BigUint;
use stabclass::enumeration::{brute_count, count};
use stabclass::lattice::lattice;

pub fn run_example() -> Vec<(String, Vec<BigUint>)> {
    let l = lattice();
    let mut rows = Vec::new();
    for name in ["ALL", "T4+P+Gamma", "C(Z,Z)+P+RZ", "C(X,X)+P", "T4+P", "BOT"] {
        let c = l.by_name(name).unwrap();
        let counts: Vec<BigUint> = (1..=4).map(|n| count(c, n)).collect();
        let shown: Vec<String> = counts.iter().map(|k| k.to_string()).collect();
        println!("{name:<14} {}", shown.join("  "));
        assert_eq!(brute_count(c, 2, 100_000).unwrap(), counts[1]);
        rows.push((name.to_string(), counts));
    }
    rows
}

fn main() {
    run_example();
}
