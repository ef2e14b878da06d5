// The 16-element ring behind tableau entries: units, the star involution
// and the twelve subrings.

use stabclass::{RingElem, Subring};

pub fn run_example() -> Vec<(&'static str, usize)> {
    let units: Vec<RingElem> = RingElem::all().filter(|e| e.is_invertible()).collect();
    println!("units: {}", units.iter().map(|u| u.to_string()).collect::<Vec<_>>().join(" "));
    for u in &units {
        println!("  {u}  star {}  inverse {}", u.star(), u.inverse().unwrap());
    }
    let sizes: Vec<(&'static str, usize)> = Subring::ALL.iter().map(|s| (s.name(), s.elements().len())).collect();
    for (name, k) in &sizes {
        println!("{name:>10}: {k} elements");
    }
    sizes
}

fn main() {
    run_example();
}
