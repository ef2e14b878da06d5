//! Self-checks run by `verify` and by the acceptance tests. Each returns
//! named pass/fail results instead of panicking.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use crate::identities::Check;

use crate::catalog::Gate;
use crate::circuit::Circuit;
use crate::dense::{
    equal_up_to_global_phase, match_pauli, pauli_string_matrix, tableau_from_unitary, unitary_of_circuit,
    unitary_of_gate,
};
use crate::enumeration::{brute_count, count, three_qubit_egalitarian};
use crate::error::Error;
use crate::identities;
use crate::lattice::lattice;
use crate::pauli::PauliString;
use crate::ring::Pauli;
use crate::synthesis::{
    canonical_2q, canonical_forms_2q, decompose_universal, rank_one_update, synthesize, universal_construction,
    universal_vector,
};
use crate::tableau::{matrix_mul, Tableau};

/// Closure sizes above this are not brute-forced.
pub const BRUTE_CAP: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Identities,
    Enumeration,
    Lattice,
    Oracle,
    Stabilizer9,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Identities, Suite::Enumeration, Suite::Lattice, Suite::Oracle, Suite::Stabilizer9];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Enumeration => "enumeration",
            Suite::Lattice => "lattice",
            Suite::Oracle => "oracle",
            Suite::Stabilizer9 => "stabilizer9",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite, Error> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

pub fn run(s: Suite) -> Result<Vec<Check>, Error> {
    match s {
        Suite::Identities => identities::circuit_identities(),
        Suite::Enumeration => enumeration_agreement(),
        Suite::Lattice => {
            let mut v = lattice_integrity();
            v.extend(named_classifications()?);
            Ok(v)
        }
        Suite::Oracle => {
            let mut v = catalog_fidelity()?;
            v.extend(composition_law(1000, 1)?);
            v.push(synthesis_dense_agreement(5, 2)?);
            Ok(v)
        }
        Suite::Stabilizer9 => stabilizer9_checks(),
    }
}

fn pass(name: impl Into<String>, passed: bool) -> Check {
    Check { name: name.into(), passed }
}

/// Random gate of width `n`: a long word over the ALL generators.
pub fn random_tableau<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<(Circuit, Tableau), Error> {
    let c = lattice().top().random_word(n, 8 * n + 8, rng);
    let t = c.tableau()?;
    Ok((c, t))
}

pub fn random_pauli<R: Rng + ?Sized>(n: usize, rng: &mut R) -> PauliString {
    let letters: Vec<Pauli> = (0..n).map(|_| [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z][rng.gen_range(0..4)]).collect();
    PauliString::from_letters(&letters, if rng.gen() { 2 } else { 0 })
}

/// Every catalog gate's dense matrix reads back to its tableau.
pub fn catalog_fidelity() -> Result<Vec<Check>, Error> {
    Gate::catalog()
        .into_iter()
        .map(|g| Ok(pass(format!("catalog {g}"), tableau_from_unitary(&unitary_of_gate(g)?)? == g.tableau()?)))
        .collect()
}

/// `M(a then b) = M(a) M(b)` and conjugation by the composite agrees with
/// the dense oracle, over random pairs with n <= 4.
pub fn composition_law(pairs: usize, seed: u64) -> Result<Vec<Check>, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut matrices, mut conj) = (0, 0);
    for _ in 0..pairs {
        let n = rng.gen_range(1..=4);
        let (ca, ta) = random_tableau(n, &mut rng)?;
        let (cb, tb) = random_tableau(n, &mut rng)?;
        let ab = ta.compose(&tb)?;
        matrices += (ab.matrix() == matrix_mul(n, &ta.matrix(), &tb.matrix())) as usize;
        let mut c = ca.clone();
        c.extend(&cb)?;
        let u = unitary_of_circuit(&c)?;
        let p = random_pauli(n, &mut rng);
        let image = u.mul(&pauli_string_matrix(&p)).mul(&u.adjoint());
        conj += (match_pauli(&image) == Some(ab.conjugate(&p)?)) as usize;
    }
    Ok(vec![
        pass(format!("matrix of composite, {matrices}/{pairs}"), matrices == pairs),
        pass(format!("conjugation by composite vs dense, {conj}/{pairs}"), conj == pairs),
    ])
}

/// Class counts and, for each covering pair `B < C`, that B's generators
/// lie in C and some generator of C lies outside B.
pub fn lattice_integrity() -> Vec<Check> {
    let l = lattice();
    let degenerate = l.classes().iter().filter(|c| c.is_degenerate()).count();
    let mut out = vec![pass("57 classes", l.len() == 57), pass("30 degenerate", degenerate == 30)];
    let tab = |g: &Gate| g.tableau().expect("catalog");
    let mut bad = Vec::new();
    for &(b, c) in l.covers() {
        let (lo, hi) = (l.get(b), l.get(c));
        let up = lo.generators.iter().all(|g| hi.contains(&tab(g)));
        let strict = hi.generators.iter().any(|g| !lo.contains(&tab(g)));
        if !(up && strict) {
            bad.push(format!("{} < {}", lo.name, hi.name));
        }
    }
    out.push(pass(format!("covering edges witnessed ({} edges, failing: {bad:?})", l.covers().len()), bad.is_empty()));
    out
}

/// Named gates land in their expected classes.
pub fn named_classifications() -> Result<Vec<Check>, Error> {
    let l = lattice();
    let mut cases: Vec<(String, Tableau, String)> = vec![
        ("CXZ".into(), Gate::CNOT.tableau()?, "C(X,Z)+P".into()),
        ("CZZ".into(), Gate::C(Pauli::Z, Pauli::Z).tableau()?, "C(Z,Z)+Z".into()),
        ("T4".into(), Gate::T4.tableau()?, "T4+P".into()),
        ("three-qubit egalitarian".into(), three_qubit_egalitarian(), "T4+P+Gamma".into()),
    ];
    for s in ["PPP", "PMM", "MPM", "MMP"] {
        let g = Gate::one(&format!("GAMMA_{s}"));
        let node = format!("Gamma_{}", s.replace('P', "+").replace('M', "-"));
        cases.push((g.to_string(), g.tableau()?, node));
    }
    cases
        .into_iter()
        .map(|(name, t, want)| {
            let got = &l.classify(&t)?.name;
            Ok(pass(format!("{name} -> {got} (want {want})"), *got == want))
        })
        .collect()
}

/// Formula against closure at n = 1, 2, and n = 3 under the cap, plus the
/// tabulated values.
pub fn enumeration_agreement() -> Result<Vec<Check>, Error> {
    let l = lattice();
    let mut out = Vec::new();
    let (mut agree, mut total) = (0, 0);
    let mut bad = Vec::new();
    for c in l.classes() {
        for n in 1..=3 {
            let want = count(c, n);
            if n == 3 && want > BigUint::from(BRUTE_CAP) {
                continue;
            }
            total += 1;
            if brute_count(c, n, BRUTE_CAP)? == want {
                agree += 1;
            } else {
                bad.push(format!("{} n={n}", c.name));
            }
        }
    }
    out.push(pass(format!("count = brute_count on {agree}/{total} (class, n) pairs {bad:?}"), agree == total));
    for (name, n, v) in
        [("ALL", 1, 24u64), ("ALL", 2, 11520), ("T4+P+Gamma", 3, 41472), ("P+Gamma", 3, 10368), ("T4+P", 3, 384), ("P", 3, 384)]
    {
        let got = count(l.by_name(name)?, n);
        out.push(pass(format!("|{name}| at n={n} = {got} (want {v})"), got == BigUint::from(v)));
    }
    Ok(out)
}

/// The universal construction's matrix is `I + w w*` and its decomposition
/// rebuilds it.
pub fn universal_construction_checks(samples: usize, seed: u64) -> Result<Vec<Check>, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut rank_one, mut round_trip) = (0, 0);
    for _ in 0..samples {
        let n = rng.gen_range(1..=4);
        let (_, t) = random_tableau(n, &mut rng)?;
        let u = universal_construction(&t);
        rank_one += (u.matrix() == rank_one_update(&universal_vector(&t))) as usize;
        round_trip += (decompose_universal(&u)?.circuit().tableau()? == u) as usize;
    }
    Ok(vec![
        pass(format!("universal construction is I + w w*, {rank_one}/{samples}"), rank_one == samples),
        pass(format!("decomposition round trip, {round_trip}/{samples}"), round_trip == samples),
    ])
}

/// Synthesis of random generator words: same tableau back, and only
/// generators of the word's own class, or SWAP, emitted.
pub fn synthesis_round_trip(per_class: usize, seed: u64) -> Result<Vec<Check>, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut exact, mut alphabet, mut total) = (0, 0, 0);
    let mut off = HashSet::new();
    for class in lattice().classes() {
        for i in 0..per_class {
            let n = 1 + i % 4;
            let t = class.random_word(n, 12, &mut rng).tableau()?;
            let r = synthesize(&t)?;
            total += 1;
            exact += (r.tableau()? == t) as usize;
            let ok = r.circuit.gates().all(|g| g == Gate::Swap || r.class.generators.contains(&g));
            alphabet += ok as usize;
            if !ok {
                off.insert(r.class.name.clone());
            }
        }
    }
    Ok(vec![
        pass(format!("synthesis reproduces the tableau, {exact}/{total}"), exact == total),
        pass(format!("synthesis stays in generators + SWAP, {alphabet}/{total} {off:?}"), alphabet == total),
    ])
}

/// Synthesized circuits have the input's unitary up to global phase.
pub fn synthesis_dense_agreement(per_class: usize, seed: u64) -> Result<Check, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut ok, mut total) = (0, 0);
    for class in lattice().classes() {
        for i in 0..per_class {
            let n = 1 + i % 4;
            let word = class.random_word(n, 12, &mut rng);
            let r = synthesize(&word.tableau()?)?;
            let width = r.circuit.width();
            let padded = word.remap(width, &(0..n).collect::<Vec<_>>())?;
            total += 1;
            ok += equal_up_to_global_phase(&unitary_of_circuit(&padded)?, &unitary_of_circuit(&r.circuit)?) as usize;
        }
    }
    Ok(pass(format!("synthesized circuits match the dense unitary, {ok}/{total}"), ok == total))
}

/// Every two-qubit Clifford has exactly one canonical form.
pub fn canonical_2q_bijection() -> Result<Vec<Check>, Error> {
    let forms = canonical_forms_2q();
    let mut keys = HashSet::new();
    let mut inverse_ok = 0;
    for f in &forms {
        let t = f.tableau()?;
        keys.insert(t.key());
        inverse_ok += (canonical_2q(&t)? == *f) as usize;
    }
    Ok(vec![
        pass(format!("{} forms with {} distinct tableaux", forms.len(), keys.len()), forms.len() == 11520 && keys.len() == 11520),
        pass(format!("canonical_2q inverts the enumeration, {inverse_ok}/{}", forms.len()), inverse_ok == forms.len()),
    ])
}

pub fn stabilizer9_checks() -> Result<Vec<Check>, Error> {
    let r = identities::stabilizer9()?;
    Ok(vec![
        pass("nine-qubit generators pairwise commute", r.commuting),
        pass(format!("nine-qubit generators have rank {} (want 9)", r.rank), r.rank == 9),
        pass("Hadamard then qubit cycle preserves the group", r.invariant),
    ])
}
