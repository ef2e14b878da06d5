//! Each runnable example, compiled in and checked.

macro_rules! example {
    ($m:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $m {
            include!($file);
        }
    };
}

example!(ring_algebra, "../examples/ring_algebra.rs");
example!(tableau_conjugation, "../examples/tableau_conjugation.rs");
example!(dense_oracle, "../examples/dense_oracle.rs");
example!(classify_gates, "../examples/classify_gates.rs");
example!(lattice_dot, "../examples/lattice_dot.rs");
example!(synthesize_circuit, "../examples/synthesize_circuit.rs");
example!(canonical_two_qubit, "../examples/canonical_two_qubit.rs");
example!(count_classes, "../examples/count_classes.rs");
example!(circuit_identities, "../examples/circuit_identities.rs");
example!(universal_construction, "../examples/universal_construction.rs");

#[test]
fn ring_subring_sizes() {
    let sizes = ring_algebra::run_example();
    assert_eq!(sizes.len(), 12);
    assert_eq!(sizes.iter().map(|&(_, k)| k).max(), Some(16));
    assert_eq!(sizes.iter().map(|&(_, k)| k).min(), Some(2));
}

#[test]
fn cnot_images() {
    let images = tableau_conjugation::run_example();
    assert!(images.contains(&("+IX".to_string(), "+XX".to_string())));
    assert!(images.contains(&("+YY".to_string(), "-ZX".to_string())));
}

#[test]
fn dense_agrees() {
    assert!(dense_oracle::run_example());
}

#[test]
fn classified_sets() {
    let got = classify_gates::run_example();
    let names: Vec<&str> = got.iter().map(|(_, c)| c.as_str()).collect();
    assert_eq!(names, ["ALL", "C(X,Z)+P", "C(Z,Z)+RZ", "T4+P", "T4+P+Gamma", "X"]);
}

#[test]
fn dot_has_every_class() {
    let dot = lattice_dot::run_example();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("[label=").count(), 57);
}

#[test]
fn synthesized_over_class_alphabet() {
    let r = synthesize_circuit::run_example();
    let alphabet = stabclass::synthesis::synthesis_alphabet(r.class);
    assert!(r.circuit.gates().all(|g| alphabet.contains(&g)));
}

#[test]
fn canonical_count() {
    assert_eq!(canonical_two_qubit::run_example(), 11520);
}

#[test]
fn class_counts() {
    let rows = count_classes::run_example();
    assert_eq!(rows[0].1[2].to_string(), "92897280");
    assert_eq!(rows[5].1.iter().map(|k| k.to_string()).collect::<Vec<_>>(), ["1", "2", "6", "24"]);
}

#[test]
fn identities_hold() {
    let (passed, total) = circuit_identities::run_example();
    assert_eq!(passed, total);
}

#[test]
fn t4_universal_core() {
    assert_eq!(universal_construction::run_example(), 2);
}
