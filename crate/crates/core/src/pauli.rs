//! Signed Pauli strings with exact phase tracking.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::ring::Pauli;

/// `i^phase` times a tensor product of Hermitian letters I, X, Y, Z.
///
/// Letters are stored as packed x and z bit vectors, qubit `q` at bit `q % 64`
/// of word `q / 64`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PauliString {
    n: usize,
    x: Vec<u64>,
    z: Vec<u64>,
    phase: u8,
}

fn words(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

fn popcount_and(a: &[u64], b: &[u64]) -> u32 {
    a.iter().zip(b).map(|(p, q)| (p & q).count_ones()).sum()
}

impl PauliString {
    pub fn identity(n: usize) -> PauliString {
        PauliString { n, x: vec![0; words(n)], z: vec![0; words(n)], phase: 0 }
    }

    /// The letter `p` on qubit `q` (0-based), identity elsewhere.
    pub fn single(n: usize, q: usize, p: Pauli) -> PauliString {
        let mut s = PauliString::identity(n);
        s.set(q, p);
        s
    }

    pub fn from_letters(letters: &[Pauli], phase: u8) -> PauliString {
        let mut s = PauliString::identity(letters.len());
        for (q, &p) in letters.iter().enumerate() {
            s.set(q, p);
        }
        s.phase = phase & 3;
        s
    }

    pub fn width(&self) -> usize {
        self.n
    }

    /// Exponent `k` of the overall `i^k`.
    pub fn phase(&self) -> u8 {
        self.phase
    }

    pub fn set_phase(&mut self, k: u8) {
        self.phase = k & 3;
    }

    pub fn get(&self, q: usize) -> Pauli {
        let (w, b) = (q / 64, q % 64);
        Pauli::from_bits(self.x[w] >> b & 1 == 1, self.z[w] >> b & 1 == 1)
    }

    pub fn set(&mut self, q: usize, p: Pauli) {
        assert!(q < self.n, "qubit {q} out of range for width {}", self.n);
        let (w, b) = (q / 64, q % 64);
        self.x[w] = (self.x[w] & !(1 << b)) | ((p.x() as u64) << b);
        self.z[w] = (self.z[w] & !(1 << b)) | ((p.z() as u64) << b);
    }

    pub fn x_bit(&self, q: usize) -> bool {
        self.x[q / 64] >> (q % 64) & 1 == 1
    }

    pub fn z_bit(&self, q: usize) -> bool {
        self.z[q / 64] >> (q % 64) & 1 == 1
    }

    pub fn x_words(&self) -> &[u64] {
        &self.x
    }

    pub fn z_words(&self) -> &[u64] {
        &self.z
    }

    pub fn is_identity_letters(&self) -> bool {
        self.x.iter().chain(&self.z).all(|&w| w == 0)
    }

    pub fn weight(&self) -> usize {
        self.x.iter().zip(&self.z).map(|(a, b)| (a | b).count_ones() as usize).sum()
    }

    /// Exact product `self * other`.
    pub fn mul(&self, other: &PauliString) -> Result<PauliString, Error> {
        if self.n != other.n {
            return Err(Error::WidthMismatch(self.n, other.n));
        }
        Ok(self.mul_unchecked(other))
    }

    /// In-place right multiplication `self <- self * other`. Widths must agree.
    pub fn mul_assign(&mut self, other: &PauliString) {
        debug_assert_eq!(self.n, other.n);
        // Each letter is i^{xz} X^x Z^z; moving Z^{z1} past X^{x2} costs (-1)^{|z1 & x2|}.
        let mut e = self.phase as u32 + other.phase as u32;
        e += popcount_and(&self.x, &self.z);
        e += popcount_and(&other.x, &other.z);
        e += 2 * popcount_and(&self.z, &other.x);
        for w in 0..self.x.len() {
            self.x[w] ^= other.x[w];
            self.z[w] ^= other.z[w];
        }
        let back = popcount_and(&self.x, &self.z);
        self.phase = ((e + 4 * 64 * self.x.len() as u32 - back) % 4) as u8;
    }

    fn mul_unchecked(&self, other: &PauliString) -> PauliString {
        let mut r = self.clone();
        r.mul_assign(other);
        r
    }

    pub fn commutes(&self, other: &PauliString) -> Result<bool, Error> {
        if self.n != other.n {
            return Err(Error::WidthMismatch(self.n, other.n));
        }
        let anti = popcount_and(&self.x, &other.z) + popcount_and(&self.z, &other.x);
        Ok(anti % 2 == 0)
    }

    /// The inverse, `i^{-k}` times the same letters.
    pub fn inverse(&self) -> PauliString {
        let mut r = self.clone();
        r.phase = (4 - self.phase) % 4;
        r
    }

    /// Tensor product `self ⊗ other`, phases multiplied.
    pub fn tensor(&self, other: &PauliString) -> PauliString {
        let mut r = PauliString::identity(self.n + other.n);
        for q in 0..self.n {
            r.set(q, self.get(q));
        }
        for q in 0..other.n {
            r.set(self.n + q, other.get(q));
        }
        r.phase = (self.phase + other.phase) % 4;
        r
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = ["+", "+i", "-", "-i"][self.phase as usize];
        write!(f, "{sign}")?;
        for q in 0..self.n {
            write!(f, "{}", self.get(q).letter())?;
        }
        Ok(())
    }
}

impl FromStr for PauliString {
    type Err = Error;

    /// Accepts an optional sign prefix (`+`, `-`, `+i`, `-i`, `i`) followed by letters.
    fn from_str(s: &str) -> Result<PauliString, Error> {
        let s = s.trim();
        let (phase, rest) = if let Some(r) = s.strip_prefix("-i") {
            (3, r)
        } else if let Some(r) = s.strip_prefix("+i") {
            (1, r)
        } else if let Some(r) = s.strip_prefix('i') {
            (1, r)
        } else if let Some(r) = s.strip_prefix('-') {
            (2, r)
        } else if let Some(r) = s.strip_prefix('+') {
            (0, r)
        } else {
            (0, s)
        };
        let letters = rest
            .chars()
            .map(|c| Pauli::from_letter(c).ok_or_else(|| Error::Parse(format!("bad Pauli letter {c:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        if letters.is_empty() {
            return Err(Error::Parse("empty Pauli string".into()));
        }
        Ok(PauliString::from_letters(&letters, phase))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    #[test]
    fn products() {
        assert_eq!(p("XZ").mul(&p("ZX")).unwrap(), p("+YY"));
        assert_eq!(p("XI").mul(&p("IX")).unwrap(), p("XX"));
        assert_eq!(p("X").mul(&p("Y")).unwrap(), p("iZ"));
        assert_eq!(p("Y").mul(&p("X")).unwrap(), p("-iZ"));
        let s = p("-iXYZI");
        assert_eq!(s.mul(&s.inverse()).unwrap(), PauliString::identity(4));
        assert!(p("XI").mul(&p("X")).is_err());
    }

    #[test]
    fn commutation() {
        assert!(p("XX").commutes(&p("ZZ")).unwrap());
        assert!(!p("XI").commutes(&p("ZI")).unwrap());
        assert!(p("XYZ").commutes(&p("XYZ")).unwrap());
    }

    #[test]
    fn wide_strings() {
        let mut a = PauliString::identity(130);
        a.set(129, Pauli::X);
        a.set(3, Pauli::Z);
        let mut b = PauliString::identity(130);
        b.set(129, Pauli::Z);
        let c = a.mul(&b).unwrap();
        assert_eq!(c.get(129), Pauli::Y);
        assert_eq!(c.phase(), 3);
        assert_eq!(c.get(3), Pauli::Z);
    }

    #[test]
    fn display_round_trip() {
        for s in ["+XYZ", "-IIX", "+iY", "-iZZ"] {
            assert_eq!(p(s).to_string(), s);
        }
    }
}
