// Every two-qubit gate as an optional SWAP, an optional generalized CNOT,
// and a layer of single-qubit gates.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stabclass::suites::random_tableau;
use stabclass::synthesis::{canonical_2q, count_canonical_2q};

pub fn run_example() -> usize {
    let distinct = count_canonical_2q();
    println!("distinct canonical forms: {distinct}");
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..3 {
        let (_, t) = random_tableau(2, &mut rng).unwrap();
        let c = canonical_2q(&t).unwrap();
        assert_eq!(c.tableau().unwrap(), t);
        println!("---\n{c}");
    }
    distinct
}

fn main() {
    run_example();
}
