// Synthesize a circuit for a random gate using only its class's generators.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stabclass::lattice::lattice;
use stabclass::synthesis::{synthesis_alphabet, synthesize, SynthesisResult};

pub fn run_example() -> SynthesisResult {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let class = lattice().by_name("T4+P+RY").unwrap();
    // Short words often fall into a smaller class; draw until one doesn't.
    let t = loop {
        let t = class.random_word(4, 20, &mut rng).tableau().unwrap();
        if lattice().classify(&t).unwrap().id == class.id {
            break t;
        }
    };
    let r = synthesize(&t).unwrap();
    let alphabet: Vec<String> = synthesis_alphabet(r.class).iter().map(|g| g.to_string()).collect();
    println!("class {} (alphabet {}), {} ancillas", r.class.name, alphabet.join(" "), r.ancillas);
    print!("{}", r.circuit);
    assert_eq!(r.tableau().unwrap(), t);
    r
}

fn main() {
    run_example();
}
