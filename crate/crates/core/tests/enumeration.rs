use num_bigint::BigUint;
use stabclass::enumeration::{brute_count, brute_elements, count};
use stabclass::lattice::lattice;

const CAP: u64 = 1_000_000;

#[test]
fn formula_matches_closure_small_widths() {
    let l = lattice();
    let mut checked = 0;
    for c in l.classes() {
        for n in 1..=3 {
            let want = count(c, n);
            if want > BigUint::from(CAP) {
                assert_eq!(n, 3, "{} at n={n}", c.name);
                continue;
            }
            let got = brute_count(c, n, CAP).unwrap();
            assert_eq!(got, want, "{} at n={n}", c.name);
            checked += 1;
        }
    }
    assert!(checked >= 57 * 2 + 50, "only {checked} pairs checked");
}

#[test]
fn closure_members_stay_in_class() {
    let l = lattice();
    for c in l.classes() {
        for t in brute_elements(c, 2, CAP).unwrap() {
            assert!(l.le(l.classify(&t).unwrap().id, c.id), "{}", c.name);
        }
    }
}

/// Inclusion and exclusion over the classes just below ALL, using the
/// fact that two classes intersect in their meet.
fn proper_union(n: usize) -> BigUint {
    let l = lattice();
    let top = l.top().id;
    let coatoms: Vec<usize> = l.covers().iter().filter(|&&(_, b)| b == top).map(|&(a, _)| a).collect();
    let mut plus = BigUint::from(0u32);
    let mut minus = BigUint::from(0u32);
    for subset in 1u32..(1 << coatoms.len()) {
        let mut acc = top;
        for (i, &c) in coatoms.iter().enumerate() {
            if subset >> i & 1 == 1 {
                acc = l.meet(acc, c).unwrap().id;
            }
        }
        let k = count(l.get(acc), n);
        if subset.count_ones() % 2 == 1 {
            plus += k;
        } else {
            minus += k;
        }
    }
    plus - minus
}

#[test]
fn generic_two_qubit_gates_are_universal() {
    let l = lattice();
    let all = brute_elements(l.top(), 2, CAP).unwrap();
    assert_eq!(all.len(), 11520);
    let universal = all.iter().filter(|t| l.classify(t).unwrap().id == l.top().id).count();
    assert_eq!(BigUint::from(universal), BigUint::from(11520u32) - proper_union(2));
}
