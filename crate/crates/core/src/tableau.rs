//! Clifford tableaux: an n x n matrix over R plus 2n phase bits.
//!
//! Internally a tableau is its list of 2n signed basis images, rows ordered
//! X1, Z1, X2, Z2, ... Row `2i` is the image of X on qubit `i` and row `2i+1`
//! the image of Z, each a sign times Hermitian letters. The ring entry
//! `M(i,j)` collects the (x,z) bits of those two rows at qubit `j`, and the
//! phase bit of a row is its sign.
//!
//! `compose(a, b)` applies `a` first, so `M(compose(a,b)) = M(a) * M(b)`.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::pauli::PauliString;
use crate::ring::{Pauli, RingElem};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tableau {
    n: usize,
    rows: Vec<PauliString>,
}

impl Tableau {
    pub fn identity(n: usize) -> Tableau {
        let rows = (0..2 * n)
            .map(|j| PauliString::single(n, j / 2, if j % 2 == 0 { Pauli::X } else { Pauli::Z }))
            .collect();
        Tableau { n, rows }
    }

    /// Build from the ring matrix (row-major, `n*n` entries) and `2n` phase bits.
    /// Fails with `NotUnitary` if `M M* != I`.
    pub fn from_matrix(n: usize, m: &[RingElem], phases: &[bool]) -> Result<Tableau, Error> {
        let t = Tableau::from_matrix_unchecked(n, m, phases)?;
        if !t.is_unitary() {
            return Err(Error::NotUnitary);
        }
        Ok(t)
    }

    /// Same as `from_matrix` without the unitarity check.
    pub fn from_matrix_unchecked(n: usize, m: &[RingElem], phases: &[bool]) -> Result<Tableau, Error> {
        if m.len() != n * n || phases.len() != 2 * n {
            return Err(Error::MalformedInput(format!(
                "expected {} entries and {} phases, got {} and {}",
                n * n,
                2 * n,
                m.len(),
                phases.len()
            )));
        }
        let mut rows = Vec::with_capacity(2 * n);
        for i in 0..n {
            for half in 0..2 {
                let mut s = PauliString::identity(n);
                for j in 0..n {
                    let e = m[i * n + j];
                    let (x, z) = if half == 0 { (e.a(), e.b()) } else { (e.c(), e.d()) };
                    s.set(j, Pauli::from_bits(x == 1, z == 1));
                }
                s.set_phase(if phases[2 * i + half] { 2 } else { 0 });
                rows.push(s);
            }
        }
        Ok(Tableau { n, rows })
    }

    /// Build from the 2n signed images of X1, Z1, X2, ... Each must have a real phase.
    pub fn from_rows(rows: Vec<PauliString>) -> Result<Tableau, Error> {
        if rows.len() % 2 != 0 {
            return Err(Error::MalformedInput("odd number of rows".into()));
        }
        let n = rows.len() / 2;
        for r in &rows {
            if r.width() != n {
                return Err(Error::WidthMismatch(r.width(), n));
            }
            if r.phase() % 2 == 1 {
                return Err(Error::MalformedInput(format!("row {r} has an imaginary phase")));
            }
        }
        let t = Tableau { n, rows };
        if !t.is_unitary() {
            return Err(Error::NotUnitary);
        }
        Ok(t)
    }

    pub fn width(&self) -> usize {
        self.n
    }

    /// Ring entry at block (i, j), 0-based.
    pub fn m(&self, i: usize, j: usize) -> RingElem {
        let (rx, rz) = (&self.rows[2 * i], &self.rows[2 * i + 1]);
        RingElem::new(
            rx.x_bit(j) as u8,
            rx.z_bit(j) as u8,
            rz.x_bit(j) as u8,
            rz.z_bit(j) as u8,
        )
    }

    /// Row-major ring matrix.
    pub fn matrix(&self) -> Vec<RingElem> {
        let mut out = Vec::with_capacity(self.n * self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.push(self.m(i, j));
            }
        }
        out
    }

    /// Phase bit of binary row `j` (0-based, `j < 2n`).
    pub fn phase(&self, j: usize) -> bool {
        self.rows[j].phase() == 2
    }

    pub fn phases(&self) -> Vec<bool> {
        (0..2 * self.n).map(|j| self.phase(j)).collect()
    }

    /// Signed image of basis element `j`.
    pub fn row(&self, j: usize) -> &PauliString {
        &self.rows[j]
    }

    pub fn rows(&self) -> &[PauliString] {
        &self.rows
    }

    pub fn is_identity(&self) -> bool {
        *self == Tableau::identity(self.n)
    }

    /// The unitarity condition `M M* = I`, with `(M*)_{ij} = star(M_{ji})`.
    pub fn is_unitary(&self) -> bool {
        matrix_is_unitary(self.n, &self.matrix())
    }

    /// Image of `s` under conjugation by the gate.
    pub fn conjugate(&self, s: &PauliString) -> Result<PauliString, Error> {
        if s.width() != self.n {
            return Err(Error::WidthMismatch(s.width(), self.n));
        }
        Ok(self.conjugate_unchecked(s))
    }

    fn conjugate_unchecked(&self, s: &PauliString) -> PauliString {
        // s = i^{k + |x&z|} prod_q X_q^{x_q} Z_q^{z_q}
        let mut acc = PauliString::identity(self.n);
        let mut k = s.phase() as u32;
        for q in 0..self.n {
            let (x, z) = (s.x_bit(q), s.z_bit(q));
            if x && z {
                k += 1;
            }
            if x {
                acc.mul_assign(&self.rows[2 * q]);
            }
            if z {
                acc.mul_assign(&self.rows[2 * q + 1]);
            }
        }
        acc.set_phase(((acc.phase() as u32 + k) % 4) as u8);
        acc
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Tableau) -> Result<Tableau, Error> {
        if self.n != other.n {
            return Err(Error::WidthMismatch(self.n, other.n));
        }
        let rows = self.rows.iter().map(|r| other.conjugate_unchecked(r)).collect();
        Ok(Tableau { n: self.n, rows })
    }

    /// Block-diagonal direct sum: `self` on the first qubits, `other` after.
    pub fn tensor(&self, other: &Tableau) -> Tableau {
        let left = PauliString::identity(other.n);
        let right = PauliString::identity(self.n);
        let mut rows: Vec<PauliString> = self.rows.iter().map(|r| r.tensor(&left)).collect();
        rows.extend(other.rows.iter().map(|r| right.tensor(r)));
        Tableau { n: self.n + other.n, rows }
    }

    /// Relabel qubits: qubit `q` moves to `perm[q]` (0-based). Equals
    /// conjugating by the corresponding SWAP network.
    pub fn permute(&self, perm: &[usize]) -> Result<Tableau, Error> {
        check_perm(perm, self.n)?;
        let mut rows = vec![PauliString::identity(self.n); 2 * self.n];
        for q in 0..self.n {
            for h in 0..2 {
                let old = &self.rows[2 * q + h];
                let mut s = PauliString::identity(self.n);
                for j in 0..self.n {
                    s.set(perm[j], old.get(j));
                }
                s.set_phase(old.phase());
                rows[2 * perm[q] + h] = s;
            }
        }
        Ok(Tableau { n: self.n, rows })
    }

    /// Embed a gate acting on `qubits` (0-based, distinct) into width `n`.
    pub fn embed(&self, n: usize, qubits: &[usize]) -> Result<Tableau, Error> {
        if qubits.len() != self.n {
            return Err(Error::WidthMismatch(qubits.len(), self.n));
        }
        let mut seen = vec![false; n];
        for &q in qubits {
            if q >= n || seen[q] {
                return Err(Error::InvalidPermutation);
            }
            seen[q] = true;
        }
        let wide = self.tensor(&Tableau::identity(n - self.n));
        let mut perm: Vec<usize> = qubits.to_vec();
        perm.extend((0..n).filter(|q| !seen[*q]));
        wide.permute(&perm)
    }

    pub fn inverse(&self) -> Tableau {
        // U^dag p_j U = c^{-1} prod_k p_k^{N_jk} where N = M^{-1} = M* and
        // prod_k (U p_k U^dag)^{N_jk} = c p_j.
        let n = self.n;
        let m = self.matrix();
        let mut rows = Vec::with_capacity(2 * n);
        for i in 0..n {
            for h in 0..2 {
                let mut basis = PauliString::identity(n);
                let mut image = PauliString::identity(n);
                for k in 0..n {
                    let e = m[k * n + i].star();
                    // row h of (M*)_{ik} = star(M_{ki})
                    let (x, z) = if h == 0 { (e.a(), e.b()) } else { (e.c(), e.d()) };
                    if x == 1 {
                        basis.mul_assign(&PauliString::single(n, k, Pauli::X));
                        image.mul_assign(&self.rows[2 * k]);
                    }
                    if z == 1 {
                        basis.mul_assign(&PauliString::single(n, k, Pauli::Z));
                        image.mul_assign(&self.rows[2 * k + 1]);
                    }
                }
                // image = c * p_j with p_j the Hermitian basis letter
                let c = image.phase();
                basis.set_phase((basis.phase() + 4 - c) % 4);
                rows.push(basis);
            }
        }
        Tableau { n, rows }
    }

    /// Strict ancilla rule: keep the qubits in `kept` (0-based, in the order
    /// given), discard the rest.
    pub fn project_ancilla(&self, kept: &[usize]) -> Result<Tableau, Error> {
        let mut seen = vec![false; self.n];
        for &q in kept {
            if q >= self.n || seen[q] {
                return Err(Error::InvalidPermutation);
            }
            seen[q] = true;
        }
        let k = kept.len();
        let mut sub = Vec::with_capacity(k * k);
        for &i in kept {
            for &j in kept {
                sub.push(self.m(i, j));
            }
        }
        if !matrix_is_unitary(k, &sub) {
            return Err(Error::NonUnitarySubmatrix);
        }
        let mut phases = Vec::with_capacity(2 * k);
        for &i in kept {
            for h in 0..2 {
                let r = &self.rows[2 * i + h];
                if (0..self.n).any(|q| !seen[q] && r.get(q) != Pauli::I) {
                    return Err(Error::PhaseUndetermined(2 * i + h));
                }
                phases.push(r.phase() == 2);
            }
        }
        Tableau::from_matrix(k, &sub, &phases)
    }

    /// Packed key for small widths: `2n` rows of `2n` bits plus a sign bit.
    /// Requires `n <= 5`.
    pub fn key(&self) -> u128 {
        assert!(self.n <= 5, "key supports n <= 5");
        let mut key = 0u128;
        for r in &self.rows {
            for q in 0..self.n {
                key = (key << 2) | ((r.x_bit(q) as u128) << 1) | r.z_bit(q) as u128;
            }
            key = (key << 1) | (r.phase() == 2) as u128;
        }
        key
    }

    pub fn from_key(n: usize, mut key: u128) -> Tableau {
        let mut rows = vec![PauliString::identity(n); 2 * n];
        for j in (0..2 * n).rev() {
            let mut s = PauliString::identity(n);
            s.set_phase(if key & 1 == 1 { 2 } else { 0 });
            key >>= 1;
            for q in (0..n).rev() {
                s.set(q, Pauli::from_bits(key & 2 != 0, key & 1 != 0));
                key >>= 2;
            }
            rows[j] = s;
        }
        Tableau { n, rows }
    }
}

pub(crate) fn check_perm(perm: &[usize], n: usize) -> Result<(), Error> {
    if perm.len() != n {
        return Err(Error::InvalidPermutation);
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::InvalidPermutation);
        }
        seen[p] = true;
    }
    Ok(())
}

/// `M M* = I` for a row-major `n x n` ring matrix.
pub fn matrix_is_unitary(n: usize, m: &[RingElem]) -> bool {
    for i in 0..n {
        for j in 0..n {
            let mut acc = RingElem::ZERO;
            for k in 0..n {
                acc = acc + m[i * n + k] * m[j * n + k].star();
            }
            let want = if i == j { RingElem::ONE } else { RingElem::ZERO };
            if acc != want {
                return false;
            }
        }
    }
    true
}

/// Row-major product of ring matrices.
pub fn matrix_mul(n: usize, a: &[RingElem], b: &[RingElem]) -> Vec<RingElem> {
    let mut out = vec![RingElem::ZERO; n * n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = RingElem::ZERO;
            for k in 0..n {
                acc = acc + a[i * n + k] * b[k * n + j];
            }
            out[i * n + j] = acc;
        }
    }
    out
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.n)?;
        for r in &self.rows {
            let mut bits = Vec::with_capacity(2 * self.n);
            for q in 0..self.n {
                bits.push(if r.x_bit(q) { "1" } else { "0" });
                bits.push(if r.z_bit(q) { "1" } else { "0" });
            }
            writeln!(f, "{} | {}", bits.join(" "), if r.phase() == 2 { 1 } else { 0 })?;
        }
        Ok(())
    }
}

impl FromStr for Tableau {
    type Err = Error;

    fn from_str(text: &str) -> Result<Tableau, Error> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
        let n: usize = header
            .strip_prefix("n=")
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad header {header:?}")))?;
        let body: Vec<&str> = lines.collect();
        if body.len() != 2 * n {
            return Err(Error::Parse(format!("expected {} rows, got {}", 2 * n, body.len())));
        }
        let mut rows = Vec::with_capacity(2 * n);
        for (j, line) in body.iter().enumerate() {
            let (lhs, rhs) = line
                .split_once('|')
                .ok_or_else(|| Error::Parse(format!("row {} has no phase separator", j + 1)))?;
            let bits = lhs
                .split_whitespace()
                .map(parse_bit)
                .collect::<Result<Vec<_>, _>>()?;
            if bits.len() != 2 * n {
                return Err(Error::Parse(format!("row {} has {} bits, expected {}", j + 1, bits.len(), 2 * n)));
            }
            let phase: Vec<bool> = rhs.split_whitespace().map(parse_bit).collect::<Result<_, _>>()?;
            if phase.len() != 1 {
                return Err(Error::Parse(format!("row {} needs exactly one phase bit", j + 1)));
            }
            let mut s = PauliString::identity(n);
            for q in 0..n {
                s.set(q, Pauli::from_bits(bits[2 * q], bits[2 * q + 1]));
            }
            s.set_phase(if phase[0] { 2 } else { 0 });
            rows.push(s);
        }
        Tableau::from_rows(rows)
    }
}

fn parse_bit(tok: &str) -> Result<bool, Error> {
    match tok {
        "0" => Ok(false),
        "1" => Ok(true),
        _ => Err(Error::Parse(format!("non-binary symbol {tok:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x_gate() -> Tableau {
        "n=1\n1 0 | 0\n0 1 | 1\n".parse().unwrap()
    }

    #[test]
    fn parse_x() {
        let t = x_gate();
        assert_eq!(t.m(0, 0), RingElem::ONE);
        assert_eq!(t.phases(), vec![false, true]);
        assert_eq!(t.to_string().parse::<Tableau>().unwrap(), t);
    }

    #[test]
    fn parse_errors() {
        assert!("m=1\n1 0 | 0\n0 1 | 0".parse::<Tableau>().is_err());
        assert!("n=1\n1 0 | 0".parse::<Tableau>().is_err());
        assert!("n=1\n1 2 | 0\n0 1 | 0".parse::<Tableau>().is_err());
        assert!("n=1\n1 0 | 0\n1 0 | 0".parse::<Tableau>().is_err());
        assert!("n=1\n0 0 | 0\n0 0 | 0".parse::<Tableau>().is_err());
    }

    #[test]
    fn key_round_trip() {
        let t = x_gate().tensor(&Tableau::identity(2));
        assert_eq!(Tableau::from_key(3, t.key()), t);
    }

    #[test]
    fn identity_is_unitary() {
        for n in 0..5 {
            assert!(Tableau::identity(n).is_unitary());
        }
    }
}
