//! Circuit identities checked on the dense oracle, and the nine-qubit
//! stabilizer state that fixes a single Hadamard up to a qubit cycle.

use crate::catalog::{Gate, OneQubit};
use crate::circuit::Circuit;
use crate::dense::{
    self, equal_up_to_global_phase, kron_state, reduce_ancilla, states, unitary_of_circuit, unitary_of_one,
    verify_identity, C,
};
use crate::error::Error;
use crate::pauli::PauliString;
use crate::ring::Pauli;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

const LETTERS: [Pauli; 3] = [Pauli::X, Pauli::Y, Pauli::Z];

/// Ordered triples `(P, Q, R)` of distinct letters.
pub fn triples() -> Vec<(Pauli, Pauli, Pauli)> {
    let mut out = Vec::new();
    for p in LETTERS {
        for q in LETTERS {
            if q != p {
                out.push((p, q, third(p, q)));
            }
        }
    }
    out
}

fn third(p: Pauli, q: Pauli) -> Pauli {
    LETTERS.into_iter().find(|&l| l != p && l != q).expect("two distinct letters")
}

/// X -> Y -> Z -> X.
fn cyclic(p: Pauli, q: Pauli) -> bool {
    matches!((p, q), (Pauli::X, Pauli::Y) | (Pauli::Y, Pauli::Z) | (Pauli::Z, Pauli::X))
}

/// The single-qubit gate with `g p g^dag = q` and `g q g^dag = r`, signs included.
pub fn gamma_for(p: Pauli, q: Pauli) -> OneQubit {
    let r = third(p, q);
    let want = |a: Pauli, b: Pauli, g: &OneQubit| {
        g.tableau().conjugate(&PauliString::single(1, 0, a)).expect("width 1") == PauliString::single(1, 0, b)
    };
    OneQubit::all().find(|g| want(p, q, g) && want(q, r, g)).expect("a Clifford exists")
}

/// `R_P`, or `R_P^dag` when `dagger`.
pub fn rotation(p: Pauli, dagger: bool) -> OneQubit {
    let name = format!("R{}{}", p.letter(), if dagger { "dag" } else { "" });
    OneQubit::from_name(&name).expect("rotation name")
}

pub fn theta(p: Pauli, q: Pauli) -> OneQubit {
    let (a, b) = if (p as u8) < (q as u8) { (p, q) } else { (q, p) };
    OneQubit::from_name(&format!("THETA_{}p{}", a.letter(), b.letter())).expect("theta name")
}

fn circuit(n: usize, ops: &[(Gate, &[usize])]) -> Circuit {
    ops.iter().fold(Circuit::new(n), |c, (g, q)| c.with(*g, q))
}

fn check(name: String, r: Result<bool, Error>) -> Result<Check, Error> {
    Ok(Check { name, passed: r? })
}

fn label(p: Pauli, q: Pauli, r: Pauli) -> String {
    format!("[{},{},{}]", p.letter(), q.letter(), r.letter())
}

/// The five rules for merging two generalized CNOTs on the same pair. The
/// rotation in the first and fourth rules follows the orientation of Gamma.
pub fn coalescing_rules() -> Result<Vec<Check>, Error> {
    use Gate::{One, Swap, C as Cg};
    let mut out = Vec::new();
    // First rule: any control letter, any ordered pair (Q, R).
    for p in LETTERS {
        for (q, r, s) in triples() {
            let lhs = circuit(2, &[(Cg(p, r), &[0, 1]), (Cg(p, q), &[0, 1])]);
            let rot = rotation(p, !cyclic(q, r));
            let rhs = circuit(2, &[(One(rot), &[0]), (Cg(p, s), &[0, 1])]);
            out.push(check(format!("C(P,R) C(P,Q) = R_P C(P,RQ) P={} {}", p.letter(), label(q, r, s)), verify_identity(&lhs, &rhs))?);
        }
    }
    for (p, q, r) in triples() {
        let g = gamma_for(p, q);
        let lhs = circuit(2, &[(Cg(p, p), &[0, 1]), (Cg(q, r), &[0, 1])]);
        let rhs = circuit(2, &[(Swap, &[0, 1]), (One(g), &[0]), (One(g.inverse()), &[1]), (Cg(p, p), &[0, 1])]);
        out.push(check(format!("C(P,P) C(Q,R) = SWAP Gamma C(P,P) {}", label(p, q, r)), verify_identity(&lhs, &rhs))?);

        let th = theta(p, q);
        let lhs = circuit(2, &[(Cg(p, p), &[0, 1]), (Cg(q, q), &[0, 1])]);
        let rhs = circuit(2, &[(Swap, &[0, 1]), (One(th), &[0]), (One(th), &[1]), (Cg(p, p), &[0, 1])]);
        out.push(check(format!("C(P,P) C(Q,Q) = SWAP theta C(P,P) {}", label(p, q, r)), verify_identity(&lhs, &rhs))?);

        let rot = rotation(q, !cyclic(p, q));
        let lhs = circuit(2, &[(Cg(p, q), &[0, 1]), (Cg(q, r), &[0, 1])]);
        let rhs =
            circuit(2, &[(Swap, &[0, 1]), (One(rot), &[0]), (One(rot.inverse()), &[1]), (Cg(p, q), &[0, 1])]);
        out.push(check(format!("C(P,Q) C(Q,R) = SWAP R_Q C(P,Q) {}", label(p, q, r)), verify_identity(&lhs, &rhs))?);

        let lhs = circuit(2, &[(Cg(p, q), &[0, 1]), (Cg(q, p), &[0, 1])]);
        let rhs = circuit(2, &[(Swap, &[0, 1]), (Cg(p, q), &[0, 1])]);
        out.push(check(format!("C(P,Q) C(Q,P) = SWAP C(P,Q) {}", label(p, q, r)), verify_identity(&lhs, &rhs))?);
    }
    Ok(out)
}

/// Run `c` with the ancilla qubits (all but `kept`) in `psi` and compare the
/// induced gate on `kept` with `want`.
fn induces(c: &Circuit, kept: &[usize], psi: &[C], want: &dense::DenseUnitary) -> Result<bool, Error> {
    let u = unitary_of_circuit(c)?;
    Ok(reduce_ancilla(&u, kept, psi).is_some_and(|v| equal_up_to_global_phase(&v, want)))
}

/// The four ways pairs of generalized CNOTs yield single-qubit gates, for
/// `Gamma P Gamma^dag = Q`, `Gamma Q Gamma^dag = R`.
pub fn coalescing_lemma() -> Result<Vec<Check>, Error> {
    use Gate::{One, Swap, C as Cg};
    let mut out = Vec::new();
    for (p, q, r) in triples() {
        let tag = label(p, q, r);
        // C(P,R) then C(P,Q) leaves R_P on the control once the target holds
        // the +1 eigenstate of P.
        let c = circuit(2, &[(Cg(p, r), &[0, 1]), (Cg(p, q), &[0, 1])]);
        let want = unitary_of_one(rotation(p, !cyclic(q, r)));
        out.push(check(format!("C(P,Q), C(P,R) give R_P {tag}"), induces(&c, &[0], &states::eigen_plus(p), &want))?);

        let c = circuit(2, &[(Cg(p, r), &[0, 1]), (Cg(p, p), &[0, 1])]);
        let want = unitary_of_one(rotation(p, !cyclic(p, r)));
        out.push(check(
            format!("C(P,P), C(P,R) give R_P {tag}"),
            induces(&c, &[0], &states::eigen_plus(q), &want),
        )?);

        let g = gamma_for(p, q);
        let lhs = circuit(2, &[(Cg(p, p), &[0, 1]), (Cg(q, r), &[0, 1]), (Cg(p, p), &[0, 1])]);
        let rhs = circuit(2, &[(Swap, &[0, 1]), (One(g), &[0]), (One(g.inverse()), &[1])]);
        out.push(check(format!("C(P,P), C(Q,R) give Gamma {tag}"), verify_identity(&lhs, &rhs))?);

        let th = theta(p, q);
        let lhs = circuit(2, &[(Cg(p, p), &[0, 1]), (Cg(q, q), &[0, 1]), (Cg(p, p), &[0, 1])]);
        let rhs = circuit(2, &[(Swap, &[0, 1]), (One(th), &[0]), (One(th), &[1])]);
        out.push(check(format!("C(P,P), C(Q,Q) give theta_P+Q {tag}"), verify_identity(&lhs, &rhs))?);
    }
    Ok(out)
}

/// T4 with a Bell-type pair and a swap acts as Z or X on the last qubit.
pub fn pauli_extraction() -> Result<Vec<Check>, Error> {
    let c = circuit(4, &[(Gate::T4, &[0, 1, 2, 3]), (Gate::Swap, &[2, 3])]);
    let one = C::new(1.0, 0.0);
    let z_anc = kron_state(&[states::pair(0, 3, -one), states::ket(&[0])]);
    let x_anc = kron_state(&[states::pair(1, 2, one), states::plus()]);
    Ok(vec![
        check("T4 extracts Z".into(), induces(&c, &[3], &z_anc, &dense::pauli_matrix(Pauli::Z)))?,
        check("T4 extracts X".into(), induces(&c, &[3], &x_anc, &dense::pauli_matrix(Pauli::X)))?,
    ])
}

/// T4 and C(Z,Z) give R_Z from the ancilla `(|00> + i|11>)/sqrt 2 (x) |0>`.
pub fn rz_from_t4_czz() -> Result<Check, Error> {
    let c = circuit(4, &[(Gate::T4, &[0, 1, 2, 3]), (Gate::C(Pauli::Z, Pauli::Z), &[1, 2]), (Gate::Swap, &[2, 3])]);
    let anc = kron_state(&[states::pair(0, 3, C::new(0.0, 1.0)), states::ket(&[0])]);
    let want = unitary_of_one(OneQubit::from_name("RZ").expect("RZ"));
    check("T4 and C(Z,Z) give R_Z".into(), induces(&c, &[3], &anc, &want))
}

/// T4, R_Z^dag on one wire, T4, R_Z on the other three equals a triangle of C(Z,Z).
pub fn czz_from_t4_rz() -> Result<Check, Error> {
    let rz = Gate::one("RZ");
    let lhs = circuit(
        4,
        &[
            (Gate::T4, &[0, 1, 2, 3]),
            (Gate::one("RZdag"), &[0]),
            (Gate::T4, &[0, 1, 2, 3]),
            (rz, &[1]),
            (rz, &[2]),
            (rz, &[3]),
        ],
    );
    let czz = Gate::C(Pauli::Z, Pauli::Z);
    let rhs = circuit(4, &[(czz, &[1, 2]), (czz, &[1, 3]), (czz, &[2, 3])]);
    check("T4 and R_Z give a C(Z,Z) layer".into(), verify_identity(&lhs, &rhs))
}

/// `g^{(x)4} T4 g^{(x)4} = T4` for the Hadamard and for R_Z.
pub fn t4_conjugations() -> Result<Vec<Check>, Error> {
    ["THETA_XpZ", "RZ"]
        .iter()
        .map(|name| {
            let g = Gate::one(name);
            let mut c = Circuit::new(4);
            for q in 0..4 {
                c.push(g, &[q])?;
            }
            c.push(Gate::T4, &[0, 1, 2, 3])?;
            for q in 0..4 {
                c.push(g, &[q])?;
            }
            let t4 = circuit(4, &[(Gate::T4, &[0, 1, 2, 3])]);
            check(format!("{name}^4 T4 {name}^4 = T4"), verify_identity(&c, &t4))
        })
        .collect()
}

/// Every identity above.
pub fn circuit_identities() -> Result<Vec<Check>, Error> {
    let mut out = coalescing_rules()?;
    out.extend(coalescing_lemma()?);
    out.extend(pauli_extraction()?);
    out.push(rz_from_t4_czz()?);
    out.push(czz_from_t4_rz()?);
    out.extend(t4_conjugations()?);
    Ok(out)
}

/// Generators of the nine-qubit state; the first letter is qubit 1.
pub const STABILIZER9: [&str; 12] = [
    "XXZXZIIII",
    "ZIXZXZIII",
    "XIIXZXZII",
    "ZIIIXZXZI",
    "XIIIIXZXZ",
    "ZZIIIIXZX",
    "XXZIIIIXZ",
    "ZZXZIIIIX",
    "YYIIIYIII",
    "-YIYIIIYII",
    "YIIYIIIYI",
    "-YIIIYIIIY",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stabilizer9 {
    pub commuting: bool,
    pub rank: usize,
    /// Each generator's image under the Hadamard on qubit 1 followed by the
    /// cycle of qubits 2..9 is in the group, sign included.
    pub invariant: bool,
}

impl Stabilizer9 {
    pub fn passed(&self) -> bool {
        self.commuting && self.rank == 9 && self.invariant
    }
}

fn symplectic_bits(s: &PauliString) -> u32 {
    (0..s.width()).fold(0, |acc, q| acc | (s.x_bit(q) as u32) << q | (s.z_bit(q) as u32) << (16 + q))
}

/// Row-reduced basis: (pivot bit, vector, generator subset).
fn reduce_basis(gens: &[PauliString]) -> Vec<(u32, u32, u32)> {
    let mut basis: Vec<(u32, u32, u32)> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let (mut v, mut combo) = (symplectic_bits(g), 1u32 << i);
        for &(piv, bv, bc) in &basis {
            if v & piv != 0 {
                v ^= bv;
                combo ^= bc;
            }
        }
        if v != 0 {
            let piv = 1 << v.trailing_zeros();
            for b in basis.iter_mut() {
                if b.1 & piv != 0 {
                    b.1 ^= v;
                    b.2 ^= combo;
                }
            }
            basis.push((piv, v, combo));
        }
    }
    basis
}

/// Whether `s`, sign included, is a product of `gens`.
fn in_group(gens: &[PauliString], basis: &[(u32, u32, u32)], s: &PauliString) -> Result<bool, Error> {
    let (mut v, mut combo) = (symplectic_bits(s), 0u32);
    for &(piv, bv, bc) in basis {
        if v & piv != 0 {
            v ^= bv;
            combo ^= bc;
        }
    }
    if v != 0 {
        return Ok(false);
    }
    let mut acc = PauliString::identity(s.width());
    for (i, g) in gens.iter().enumerate() {
        if combo >> i & 1 == 1 {
            acc = acc.mul(g)?;
        }
    }
    Ok(acc == *s)
}

pub fn stabilizer9() -> Result<Stabilizer9, Error> {
    let gens = STABILIZER9.iter().map(|s| s.parse::<PauliString>()).collect::<Result<Vec<_>, _>>()?;
    let mut commuting = true;
    for a in &gens {
        for b in &gens {
            commuting &= a.commutes(b)?;
        }
    }
    let basis = reduce_basis(&gens);
    let mut c = Circuit::new(9).with(Gate::one("THETA_XpZ"), &[0]);
    for q in 1..8 {
        c.push(Gate::Swap, &[q, q + 1])?;
    }
    let t = c.tableau()?;
    let mut invariant = true;
    for g in &gens {
        invariant &= in_group(&gens, &basis, &t.conjugate(g)?)?;
    }
    Ok(Stabilizer9 { commuting, rank: basis.len(), invariant })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_orientation() {
        assert_eq!(gamma_for(Pauli::X, Pauli::Y).name(), "GAMMA_PPP");
        assert_eq!(gamma_for(Pauli::Y, Pauli::X), gamma_for(Pauli::X, Pauli::Y).inverse());
        assert_eq!(triples().len(), 6);
    }

    #[test]
    fn nine_qubit_state() {
        let r = stabilizer9().unwrap();
        assert!(r.commuting);
        assert_eq!(r.rank, 9);
        assert!(r.invariant);
    }

    #[test]
    fn wrong_orientation_fails() {
        let c = circuit(2, &[(Gate::C(Pauli::X, Pauli::Z), &[0, 1]), (Gate::C(Pauli::X, Pauli::Y), &[0, 1])]);
        let rhs = |dag| circuit(2, &[(Gate::One(rotation(Pauli::X, dag)), &[0]), (Gate::C(Pauli::X, Pauli::X), &[0, 1])]);
        assert!(verify_identity(&c, &rhs(false)).unwrap());
        assert!(!verify_identity(&c, &rhs(true)).unwrap());
    }
}
