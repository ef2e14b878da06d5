use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use stabclass::dense::{frobenius_distance, pauli_string_matrix, tableau_from_unitary, unitary_of_circuit};
use stabclass::invariants::satisfies_subring;
use stabclass::lattice::lattice;
use stabclass::suites::random_tableau;
use stabclass::synthesis::{canonical_2q, extract_generators};
use stabclass::tableau::matrix_mul;
use stabclass::{Circuit, Gate, Pauli, PauliString, Subring, Tableau};

const TOL: f64 = 1e-9;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random word over all gates, with its circuit.
fn word(n: usize, seed: u64) -> (Circuit, Tableau) {
    random_tableau(n, &mut rng(seed)).unwrap()
}

/// A random member of lattice class `class`.
fn member(class: usize, n: usize, seed: u64) -> Tableau {
    let c = lattice().get(class % lattice().len());
    c.random_word(n, 4 * n + 4, &mut rng(seed)).tableau().unwrap()
}

fn pauli(n: usize, letters: &[u8], phase: u8) -> PauliString {
    let ls: Vec<Pauli> = letters[..n].iter().map(|&k| [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z][k as usize]).collect();
    PauliString::from_letters(&ls, phase)
}

fn letters() -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..4, 6)
}

fn shuffle(n: usize, seed: u64) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(&mut rng(seed));
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn composition_is_a_homomorphism(n in 1usize..=4, s1: u64, s2: u64, ls in letters(), ph in 0u8..4) {
        let (_, a) = word(n, s1);
        let (_, b) = word(n, s2);
        let p = pauli(n, &ls, ph);
        let ab = a.compose(&b).unwrap();
        prop_assert_eq!(ab.conjugate(&p).unwrap(), b.conjugate(&a.conjugate(&p).unwrap()).unwrap());
        prop_assert_eq!(ab.matrix(), matrix_mul(n, &a.matrix(), &b.matrix()));
    }

    #[test]
    fn operations_preserve_unitarity(n in 1usize..=3, s1: u64, s2: u64, sp: u64) {
        let (_, a) = word(n, s1);
        let (_, b) = word(n, s2);
        prop_assert!(a.compose(&b).unwrap().is_unitary());
        prop_assert!(a.tensor(&b).is_unitary());
        prop_assert!(a.permute(&shuffle(n, sp)).unwrap().is_unitary());
        prop_assert!(a.inverse().is_unitary());
    }

    #[test]
    fn inverse_cancels(n in 1usize..=4, seed: u64) {
        let (_, t) = word(n, seed);
        prop_assert!(t.compose(&t.inverse()).unwrap().is_identity());
        prop_assert!(t.inverse().compose(&t).unwrap().is_identity());
        prop_assert_eq!(t.inverse().inverse(), t);
    }

    #[test]
    fn tensor_factorizes(s1: u64, s2: u64, ls in letters(), ph in 0u8..4) {
        let (_, a) = word(2, s1);
        let (_, b) = word(1, s2);
        let p = pauli(2, &ls, 0);
        let q = pauli(1, &ls[2..], ph);
        let want = a.conjugate(&p).unwrap().tensor(&b.conjugate(&q).unwrap());
        prop_assert_eq!(a.tensor(&b).conjugate(&p.tensor(&q)).unwrap(), want);
    }

    #[test]
    fn permutation_matches_swap_network(n in 2usize..=4, seed: u64, sp: u64) {
        let (_, t) = word(n, seed);
        let perm = shuffle(n, sp);
        let mut inv = vec![0; n];
        for (q, &p) in perm.iter().enumerate() {
            inv[p] = q;
        }
        prop_assert_eq!(t.permute(&perm).unwrap().permute(&inv).unwrap(), t.clone());
        // Conjugating by the relabelling, built from SWAP gates.
        let mut net = Circuit::new(n);
        let mut cur: Vec<usize> = (0..n).collect();
        for q in 0..n {
            let at = cur.iter().position(|&x| perm[x] == q).unwrap();
            if at != q {
                net.push(Gate::Swap, &[q, at]).unwrap();
                cur.swap(q, at);
            }
        }
        let s = net.tableau().unwrap();
        prop_assert_eq!(t.permute(&perm).unwrap(), s.inverse().compose(&t).unwrap().compose(&s).unwrap());
    }

    #[test]
    fn text_round_trip(n in 1usize..=4, seed: u64) {
        let (c, t) = word(n, seed);
        prop_assert_eq!(t.to_string().parse::<Tableau>().unwrap(), t.clone());
        let again: Circuit = Circuit::parse_with_width(&c.to_string(), Some(n)).unwrap();
        prop_assert_eq!(again.tableau().unwrap(), t);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn conjugation_matches_dense(n in 1usize..=3, seed: u64, ls in letters(), ph in 0u8..4) {
        let (c, t) = word(n, seed);
        let u = unitary_of_circuit(&c).unwrap();
        let p = pauli(n, &ls, ph);
        let lhs = u.mul(&pauli_string_matrix(&p)).mul(&u.adjoint());
        let rhs = pauli_string_matrix(&t.conjugate(&p).unwrap());
        prop_assert!(frobenius_distance(&lhs, &rhs) < TOL);
    }

    #[test]
    fn dense_round_trip(n in 1usize..=4, seed: u64) {
        let (c, t) = word(n, seed);
        prop_assert_eq!(tableau_from_unitary(&unitary_of_circuit(&c).unwrap()).unwrap(), t);
    }

    #[test]
    fn pauli_product_matches_dense(n in 1usize..=5, a in prop::collection::vec(0u8..4, 6), b in letters(), pa in 0u8..4, pb in 0u8..4) {
        let x = pauli(n, &a, pa);
        let y = pauli(n, &b, pb);
        let prod = pauli_string_matrix(&x).mul(&pauli_string_matrix(&y));
        prop_assert!(frobenius_distance(&prod, &pauli_string_matrix(&x.mul(&y).unwrap())) < TOL);
        let swapped = pauli_string_matrix(&y).mul(&pauli_string_matrix(&x));
        let commute = frobenius_distance(&prod, &swapped) < TOL;
        prop_assert_eq!(x.commutes(&y).unwrap(), commute);
    }

    #[test]
    fn flag_classifier_agrees(class in 0usize..57, n in 1usize..=4, seed: u64) {
        let l = lattice();
        let t = member(class, n, seed);
        prop_assert_eq!(l.classify_by_flags(&t).id, l.classify(&t).unwrap().id);
        prop_assert!(l.le(l.classify(&t).unwrap().id, class));
    }

    #[test]
    fn classify_is_monotone(c1 in 0usize..57, c2 in 0usize..57, n in 1usize..=3, s1: u64, s2: u64, sp: u64) {
        let l = lattice();
        let a = member(c1, n, s1);
        let b = member(c2, n, s2);
        let ka = l.classify(&a).unwrap().id;
        let kb = l.classify(&b).unwrap().id;
        let j = l.join(ka, kb).unwrap().id;
        prop_assert!(l.le(l.classify(&a.compose(&b).unwrap()).unwrap().id, j));
        prop_assert!(l.le(l.classify(&a.tensor(&b)).unwrap().id, j));
        prop_assert_eq!(l.classify(&a.permute(&shuffle(n, sp)).unwrap()).unwrap().id, ka);
    }

    #[test]
    fn subrings_survive_composition(class in 0usize..57, n in 1usize..=3, s1: u64, s2: u64) {
        let a = member(class, n, s1);
        let b = member(class, n, s2);
        for s in Subring::ALL {
            if satisfies_subring(&a, s) && satisfies_subring(&b, s) {
                prop_assert!(satisfies_subring(&a.compose(&b).unwrap(), s), "{:?}", s);
                prop_assert!(satisfies_subring(&a.tensor(&b), s), "{:?}", s);
                prop_assert!(satisfies_subring(&a.inverse(), s), "{:?}", s);
            }
        }
    }

    #[test]
    fn extracted_generators_stay_below(class in 0usize..57, n in 1usize..=4, seed: u64) {
        let l = lattice();
        let t = member(class, n, seed);
        let k = l.classify(&t).unwrap().id;
        for row in 0..n {
            let gens: Vec<Tableau> = extract_generators(&t, row).unwrap().into_iter().map(|g| g.tableau().unwrap()).collect();
            if !gens.is_empty() {
                prop_assert!(l.le(l.classify_set(&gens).unwrap().id, k));
            }
        }
    }

    #[test]
    fn projection_keeps_class(c1 in 0usize..57, c2 in 0usize..57, s1: u64, s2: u64, sp: u64) {
        let l = lattice();
        let a = member(c1, 2, s1);
        let b = member(c2, 2, s2);
        let perm = shuffle(4, sp);
        let t = a.tensor(&b).permute(&perm).unwrap();
        let h = t.project_ancilla(&[perm[0], perm[1]]).unwrap();
        prop_assert_eq!(&h, &a);
        prop_assert!(l.le(l.classify(&h).unwrap().id, l.classify(&t).unwrap().id));
        for kept in [[0usize, 1], [0, 2], [1, 3], [2, 3]] {
            if let Ok(h) = t.project_ancilla(&kept) {
                prop_assert!(l.le(l.classify(&h).unwrap().id, l.classify(&t).unwrap().id));
            }
        }
    }

    #[test]
    fn canonical_form_round_trip(seed: u64) {
        let (_, t) = word(2, seed);
        prop_assert_eq!(canonical_2q(&t).unwrap().tableau().unwrap(), t);
    }
}

#[test]
fn pauli_products_exhaustive() {
    for n in 1..=2usize {
        let total = 4usize.pow(n as u32);
        for i in 0..total * 4 {
            for j in 0..total {
                let digits = |mut v: usize| -> Vec<u8> {
                    (0..6).map(|_| { let d = (v % 4) as u8; v /= 4; d }).collect()
                };
                let x = pauli(n, &digits(i % total), (i / total) as u8);
                let y = pauli(n, &digits(j), 0);
                let prod = pauli_string_matrix(&x).mul(&pauli_string_matrix(&y));
                assert!(frobenius_distance(&prod, &pauli_string_matrix(&x.mul(&y).unwrap())) < TOL, "{x} * {y}");
            }
        }
    }
}

#[test]
fn gcnot_swap_symmetry() {
    let swap = Gate::Swap.tableau().unwrap();
    for p in [Pauli::X, Pauli::Y, Pauli::Z] {
        for q in [Pauli::X, Pauli::Y, Pauli::Z] {
            let pq = Gate::C(p, q).tableau().unwrap();
            let qp = Gate::C(q, p).tableau().unwrap();
            assert_eq!(pq, swap.compose(&qp).unwrap().compose(&swap).unwrap());
        }
    }
}
