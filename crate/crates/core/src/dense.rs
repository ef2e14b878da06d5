//! Dense unitary oracle for small widths.
//!
//! Basis index bits are big-endian: qubit 0 is the most significant bit.
//! Gate matrices here come from their algebraic definitions, never from
//! tableaux, so they can be used to check the exact algebra.

use num_complex::Complex64;

use crate::catalog::{Gate, OneQubit};
use crate::circuit::Circuit;
use crate::error::Error;
use crate::pauli::PauliString;
use crate::ring::Pauli;
use crate::tableau::Tableau;

pub const MAX_WIDTH: usize = 6;
pub const UNITARY_TOL: f64 = 1e-9;
pub const MATCH_TOL: f64 = 1e-6;

pub type C = Complex64;

const ZERO: C = C::new(0.0, 0.0);
const ONE: C = C::new(1.0, 0.0);
const I: C = C::new(0.0, 1.0);

#[derive(Clone, Debug, PartialEq)]
pub struct DenseUnitary {
    n: usize,
    data: Vec<C>,
}

impl DenseUnitary {
    pub fn identity(n: usize) -> DenseUnitary {
        let d = 1 << n;
        let mut data = vec![ZERO; d * d];
        for i in 0..d {
            data[i * d + i] = ONE;
        }
        DenseUnitary { n, data }
    }

    /// Row-major `2^n x 2^n` entries.
    pub fn from_rows(n: usize, data: Vec<C>) -> DenseUnitary {
        assert_eq!(data.len(), 1 << (2 * n), "dimension mismatch");
        DenseUnitary { n, data }
    }

    pub fn width(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        1 << self.n
    }

    pub fn get(&self, r: usize, c: usize) -> C {
        self.data[r * self.dim() + c]
    }

    pub fn data(&self) -> &[C] {
        &self.data
    }

    pub fn mul(&self, other: &DenseUnitary) -> DenseUnitary {
        assert_eq!(self.n, other.n);
        let d = self.dim();
        let mut out = vec![ZERO; d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.data[i * d + k];
                if a == ZERO {
                    continue;
                }
                for j in 0..d {
                    out[i * d + j] += a * other.data[k * d + j];
                }
            }
        }
        DenseUnitary { n: self.n, data: out }
    }

    pub fn adjoint(&self) -> DenseUnitary {
        let d = self.dim();
        let mut out = vec![ZERO; d * d];
        for i in 0..d {
            for j in 0..d {
                out[j * d + i] = self.data[i * d + j].conj();
            }
        }
        DenseUnitary { n: self.n, data: out }
    }

    pub fn scale(&self, s: C) -> DenseUnitary {
        DenseUnitary { n: self.n, data: self.data.iter().map(|&x| x * s).collect() }
    }

    pub fn kron(&self, other: &DenseUnitary) -> DenseUnitary {
        let (da, db) = (self.dim(), other.dim());
        let d = da * db;
        let mut out = vec![ZERO; d * d];
        for i in 0..da {
            for j in 0..da {
                let a = self.data[i * da + j];
                for k in 0..db {
                    for l in 0..db {
                        out[(i * db + k) * d + j * db + l] = a * other.data[k * db + l];
                    }
                }
            }
        }
        DenseUnitary { n: self.n + other.n, data: out }
    }

    pub fn is_unitary(&self) -> bool {
        let p = self.mul(&self.adjoint());
        frobenius_distance(&p, &DenseUnitary::identity(self.n)) < UNITARY_TOL
    }

    pub fn apply(&self, state: &[C]) -> Vec<C> {
        let d = self.dim();
        assert_eq!(state.len(), d);
        (0..d).map(|i| (0..d).map(|j| self.data[i * d + j] * state[j]).sum()).collect()
    }

    /// Left-multiply by a `k`-qubit gate `g` acting on `qubits`.
    fn apply_gate_left(&mut self, g: &DenseUnitary, qubits: &[usize]) {
        let n = self.n;
        let d = self.dim();
        let k = qubits.len();
        let gd = 1 << k;
        let shifts: Vec<usize> = qubits.iter().map(|&q| n - 1 - q).collect();
        let mask: usize = shifts.iter().map(|s| 1 << s).sum();
        let spread = |sub: usize| -> usize {
            let mut out = 0;
            for (b, s) in shifts.iter().enumerate() {
                if sub >> (k - 1 - b) & 1 == 1 {
                    out |= 1 << s;
                }
            }
            out
        };
        let offsets: Vec<usize> = (0..gd).map(spread).collect();
        let mut buf = vec![ZERO; gd];
        for col in 0..d {
            for base in (0..d).filter(|r| r & mask == 0) {
                for (s, &o) in offsets.iter().enumerate() {
                    buf[s] = self.data[(base | o) * d + col];
                }
                for (r, &o) in offsets.iter().enumerate() {
                    let mut acc = ZERO;
                    for (s, &v) in buf.iter().enumerate() {
                        acc += g.data[r * gd + s] * v;
                    }
                    self.data[(base | o) * d + col] = acc;
                }
            }
        }
    }
}

pub fn frobenius_distance(a: &DenseUnitary, b: &DenseUnitary) -> f64 {
    a.data.iter().zip(&b.data).map(|(x, y)| (x - y).norm_sqr()).sum::<f64>().sqrt()
}

fn mat1(e: [C; 4]) -> DenseUnitary {
    DenseUnitary { n: 1, data: e.to_vec() }
}

pub fn pauli_matrix(p: Pauli) -> DenseUnitary {
    match p {
        Pauli::I => mat1([ONE, ZERO, ZERO, ONE]),
        Pauli::X => mat1([ZERO, ONE, ONE, ZERO]),
        Pauli::Y => mat1([ZERO, -I, I, ZERO]),
        Pauli::Z => mat1([ONE, ZERO, ZERO, -ONE]),
    }
}

fn lin(terms: &[(C, Pauli)]) -> DenseUnitary {
    let mut out = vec![ZERO; 4];
    for (c, p) in terms {
        for (o, v) in out.iter_mut().zip(pauli_matrix(*p).data) {
            *o += c * v;
        }
    }
    mat1([out[0], out[1], out[2], out[3]])
}

/// Matrix of a signed Pauli string.
pub fn pauli_string_matrix(s: &PauliString) -> DenseUnitary {
    let mut m = DenseUnitary::identity(0);
    for q in 0..s.width() {
        m = m.kron(&pauli_matrix(s.get(q)));
    }
    m.scale(I.powu(s.phase() as u32))
}

fn one_qubit_unitary(name: &str) -> DenseUnitary {
    use Pauli::*;
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let h = C::new(0.5, 0.0);
    let rot = |p: Pauli, sign: f64| lin(&[(C::new(r, 0.0), I), (C::new(0.0, -sign * r), p)]);
    let theta = |p: Pauli, q: Pauli, sign: f64| lin(&[(C::new(r, 0.0), p), (C::new(sign * r, 0.0), q)]);
    if let Some(signs) = name.strip_prefix("GAMMA_") {
        // Gamma_{s1 s2 s3} = (I - i s1 X - i s2 Y - i s3 Z) / 2
        let s: Vec<f64> = signs.chars().map(|c| if c == 'P' { 1.0 } else { -1.0 }).collect();
        return lin(&[
            (h, I),
            (C::new(0.0, -0.5 * s[0]), X),
            (C::new(0.0, -0.5 * s[1]), Y),
            (C::new(0.0, -0.5 * s[2]), Z),
        ]);
    }
    match name {
        "ID" => pauli_matrix(I),
        "X" => pauli_matrix(X),
        "Y" => pauli_matrix(Y),
        "Z" => pauli_matrix(Z),
        "RX" => rot(X, 1.0),
        "RY" => rot(Y, 1.0),
        "RZ" => rot(Z, 1.0),
        "RXdag" => rot(X, -1.0),
        "RYdag" => rot(Y, -1.0),
        "RZdag" => rot(Z, -1.0),
        "THETA_XpY" => theta(X, Y, 1.0),
        "THETA_XmY" => theta(X, Y, -1.0),
        "THETA_XpZ" => theta(X, Z, 1.0),
        "THETA_XmZ" => theta(X, Z, -1.0),
        "THETA_YpZ" => theta(Y, Z, 1.0),
        "THETA_YmZ" => theta(Y, Z, -1.0),
        _ => unreachable!("unknown single-qubit name {name}"),
    }
}

/// Dense matrix of a catalog gate, from its algebraic definition.
pub fn unitary_of_gate(g: Gate) -> Result<DenseUnitary, Error> {
    if g.arity() > MAX_WIDTH {
        return Err(Error::WidthTooLarge(g.arity()));
    }
    Ok(match g {
        Gate::One(o) => one_qubit_unitary(o.name()),
        Gate::C(p, q) => {
            // (II + P⊗I + I⊗Q - P⊗Q) / 2
            let (pi, iq) = (pauli_matrix(p).kron(&pauli_matrix(Pauli::I)), pauli_matrix(Pauli::I).kron(&pauli_matrix(q)));
            let pq = pauli_matrix(p).kron(&pauli_matrix(q));
            let id = DenseUnitary::identity(2);
            let data = (0..16)
                .map(|k| (id.data[k] + pi.data[k] + iq.data[k] - pq.data[k]) * 0.5)
                .collect();
            DenseUnitary { n: 2, data }
        }
        Gate::Swap => permutation_unitary(2, |x| ((x & 1) << 1) | (x >> 1)),
        Gate::T(m) => {
            if m < 2 || m % 2 != 0 {
                return Err(Error::OddArity(m));
            }
            let all = (1 << m) - 1;
            permutation_unitary(m, move |x| if x.count_ones() % 2 == 1 { x ^ all } else { x })
        }
    })
}

/// Unitary `|x> -> |f(x)>`.
pub fn permutation_unitary(n: usize, f: impl Fn(usize) -> usize) -> DenseUnitary {
    let d = 1 << n;
    let mut data = vec![ZERO; d * d];
    for x in 0..d {
        data[f(x) * d + x] = ONE;
    }
    DenseUnitary { n, data }
}

pub fn unitary_of_circuit(c: &Circuit) -> Result<DenseUnitary, Error> {
    if c.width() > MAX_WIDTH {
        return Err(Error::WidthTooLarge(c.width()));
    }
    let mut u = DenseUnitary::identity(c.width());
    for op in c.ops() {
        let g = unitary_of_gate(op.gate)?;
        u.apply_gate_left(&g, &op.qubits);
    }
    Ok(u)
}

/// Read off the tableau of a Clifford unitary by matching each `U p U^dag`
/// against signed Pauli strings.
pub fn tableau_from_unitary(u: &DenseUnitary) -> Result<Tableau, Error> {
    let n = u.width();
    if n > MAX_WIDTH {
        return Err(Error::WidthTooLarge(n));
    }
    if !u.is_unitary() {
        return Err(Error::NotClifford);
    }
    let ud = u.adjoint();
    let mut rows = Vec::with_capacity(2 * n);
    for q in 0..n {
        for p in [Pauli::X, Pauli::Z] {
            let a = u.mul(&pauli_string_matrix(&PauliString::single(n, q, p))).mul(&ud);
            rows.push(match_pauli(&a).ok_or(Error::NotClifford)?);
        }
    }
    Tableau::from_rows(rows).map_err(|_| Error::NotClifford)
}

/// Find `s` with `a = s` entrywise within `MATCH_TOL`, `s` a real-signed Pauli string.
pub fn match_pauli(a: &DenseUnitary) -> Option<PauliString> {
    let n = a.width();
    let d = a.dim();
    // A Pauli string has a single nonzero per column; column 0 fixes the x bits.
    let r = (0..d).find(|&r| a.get(r, 0).norm() > 0.5)?;
    for zbits in 0..d {
        let mut letters = Vec::with_capacity(n);
        for q in 0..n {
            let shift = n - 1 - q;
            letters.push(Pauli::from_bits(r >> shift & 1 == 1, zbits >> shift & 1 == 1));
        }
        for phase in [0u8, 2] {
            let s = PauliString::from_letters(&letters, phase);
            let m = pauli_string_matrix(&s);
            if a.data.iter().zip(&m.data).all(|(x, y)| (x - y).norm() < MATCH_TOL) {
                return Some(s);
            }
        }
    }
    None
}

/// `v = e^{i phi} u` within `UNITARY_TOL`, with the phase fixed by the first
/// nonzero entry of `u`.
pub fn equal_up_to_global_phase(u: &DenseUnitary, v: &DenseUnitary) -> bool {
    if u.n != v.n {
        return false;
    }
    let Some(k) = u.data.iter().position(|x| x.norm() > UNITARY_TOL) else {
        return v.data.iter().all(|x| x.norm() < UNITARY_TOL);
    };
    let ph = v.data[k] / u.data[k];
    if (ph.norm() - 1.0).abs() > UNITARY_TOL {
        return false;
    }
    frobenius_distance(&u.scale(ph), v) < UNITARY_TOL
}

pub fn verify_identity(c1: &Circuit, c2: &Circuit) -> Result<bool, Error> {
    if c1.width() != c2.width() {
        return Err(Error::WidthMismatch(c1.width(), c2.width()));
    }
    Ok(equal_up_to_global_phase(&unitary_of_circuit(c1)?, &unitary_of_circuit(c2)?))
}

/// Single-qubit unitary of a named gate, convenience for `OneQubit`.
pub fn unitary_of_one(g: OneQubit) -> DenseUnitary {
    one_qubit_unitary(g.name())
}

/// Product state vector of the given factors (first factor on the leading qubits).
pub fn kron_state(parts: &[Vec<C>]) -> Vec<C> {
    let mut out = vec![ONE];
    for p in parts {
        let mut next = Vec::with_capacity(out.len() * p.len());
        for &a in &out {
            for &b in p {
                next.push(a * b);
            }
        }
        out = next;
    }
    out
}

/// Common small states.
pub mod states {
    use super::*;

    pub fn ket(bits: &[u8]) -> Vec<C> {
        let n = bits.len();
        let mut v = vec![ZERO; 1 << n];
        let idx = bits.iter().fold(0usize, |acc, &b| acc << 1 | b as usize);
        v[idx] = ONE;
        v
    }

    pub fn plus() -> Vec<C> {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        vec![C::new(r, 0.0), C::new(r, 0.0)]
    }

    /// `(|a> + c |b>) / sqrt 2` on two qubits for basis labels `a`, `b`.
    pub fn pair(a: usize, b: usize, c: C) -> Vec<C> {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let mut v = vec![ZERO; 4];
        v[a] += C::new(r, 0.0);
        v[b] += c * r;
        v
    }

    /// The +1 eigenstate of a Pauli letter.
    pub fn eigen_plus(p: Pauli) -> Vec<C> {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        match p {
            Pauli::I | Pauli::Z => vec![ONE, ZERO],
            Pauli::X => vec![C::new(r, 0.0), C::new(r, 0.0)],
            Pauli::Y => vec![C::new(r, 0.0), C::new(0.0, r)],
        }
    }
}

/// Ancilla rule with explicit ancilla state: if `u` maps `|phi> ⊗ |psi>` to
/// `(V|phi>) ⊗ |psi>` for every `phi`, return `V`. The ancilla occupies the
/// qubits not in `kept`; `kept` lists the data qubits in order.
pub fn reduce_ancilla(u: &DenseUnitary, kept: &[usize], psi: &[C]) -> Option<DenseUnitary> {
    let n = u.width();
    let anc: Vec<usize> = (0..n).filter(|q| !kept.contains(q)).collect();
    let k = kept.len();
    if psi.len() != 1 << anc.len() {
        return None;
    }
    let embed = |data: usize, ancilla: usize| -> usize {
        let mut idx = 0;
        for (b, &q) in kept.iter().enumerate() {
            if data >> (k - 1 - b) & 1 == 1 {
                idx |= 1 << (n - 1 - q);
            }
        }
        for (b, &q) in anc.iter().enumerate() {
            if ancilla >> (anc.len() - 1 - b) & 1 == 1 {
                idx |= 1 << (n - 1 - q);
            }
        }
        idx
    };
    let dk = 1 << k;
    let mut v = vec![ZERO; dk * dk];
    for b in 0..dk {
        let mut input = vec![ZERO; u.dim()];
        for (a, &amp) in psi.iter().enumerate() {
            input[embed(b, a)] = amp;
        }
        let out = u.apply(&input);
        // <a ⊗ psi| out>
        for a in 0..dk {
            v[a * dk + b] = psi.iter().enumerate().map(|(s, &amp)| amp.conj() * out[embed(a, s)]).sum();
        }
        let mut expect = vec![ZERO; u.dim()];
        for a in 0..dk {
            for (s, &amp) in psi.iter().enumerate() {
                expect[embed(a, s)] += v[a * dk + b] * amp;
            }
        }
        let err: f64 = out.iter().zip(&expect).map(|(x, y)| (x - y).norm_sqr()).sum();
        if err.sqrt() > UNITARY_TOL {
            return None;
        }
    }
    Some(DenseUnitary { n: k, data: v })
}
