//! Named gates and their tableaux.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::pauli::PauliString;
use crate::ring::{Pauli, RingElem};
use crate::tableau::Tableau;

/// The six invertible ring elements, in the column order used for naming
/// single-qubit gates.
pub const UNITS: [RingElem; 6] = [
    RingElem::new(1, 0, 0, 1),
    RingElem::new(1, 0, 1, 1),
    RingElem::new(0, 1, 1, 0),
    RingElem::new(1, 1, 0, 1),
    RingElem::new(1, 1, 1, 0),
    RingElem::new(0, 1, 1, 1),
];

/// Single-qubit gate names indexed by `[phase bits v1 v2 as 2*v1+v2][unit column]`.
pub const ONE_QUBIT_NAMES: [[&str; 6]; 4] = [
    ["ID", "RXdag", "THETA_XpZ", "RZ", "GAMMA_PPP", "GAMMA_MMM"],
    ["X", "RX", "RYdag", "THETA_XpY", "GAMMA_MMP", "GAMMA_PMP"],
    ["Z", "THETA_YpZ", "RY", "RZdag", "GAMMA_MPM", "GAMMA_MPP"],
    ["Y", "THETA_YmZ", "THETA_XmZ", "THETA_XmY", "GAMMA_PMM", "GAMMA_PPM"],
];

/// One of the 24 single-qubit Clifford gates, as (unit column, phase bits).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct OneQubit {
    pub unit: u8,
    pub phases: u8,
}

impl OneQubit {
    pub const ID: OneQubit = OneQubit { unit: 0, phases: 0 };

    pub fn all() -> impl Iterator<Item = OneQubit> {
        (0..4u8).flat_map(|p| (0..6u8).map(move |u| OneQubit { unit: u, phases: p }))
    }

    /// Index in 0..24, phase-major.
    pub fn index(self) -> usize {
        self.phases as usize * 6 + self.unit as usize
    }

    pub fn from_index(i: usize) -> OneQubit {
        OneQubit { unit: (i % 6) as u8, phases: (i / 6) as u8 }
    }

    pub fn from_name(name: &str) -> Option<OneQubit> {
        OneQubit::all().find(|g| g.name() == name)
    }

    pub fn element(self) -> RingElem {
        UNITS[self.unit as usize]
    }

    pub fn name(self) -> &'static str {
        ONE_QUBIT_NAMES[self.phases as usize][self.unit as usize]
    }

    pub fn from_parts(e: RingElem, v1: bool, v2: bool) -> Option<OneQubit> {
        let unit = UNITS.iter().position(|&u| u == e)? as u8;
        Some(OneQubit { unit, phases: (v1 as u8) << 1 | v2 as u8 })
    }

    pub fn tableau(self) -> Tableau {
        let v1 = self.phases >> 1 & 1 == 1;
        let v2 = self.phases & 1 == 1;
        Tableau::from_matrix(1, &[self.element()], &[v1, v2]).expect("units are unitary")
    }

    pub fn from_tableau(t: &Tableau) -> Option<OneQubit> {
        if t.width() != 1 {
            return None;
        }
        OneQubit::from_parts(t.m(0, 0), t.phase(0), t.phase(1))
    }

    /// `self` then `other`.
    pub fn then(self, other: OneQubit) -> OneQubit {
        let t = self.tableau().compose(&other.tableau()).expect("same width");
        OneQubit::from_tableau(&t).expect("closed")
    }

    pub fn inverse(self) -> OneQubit {
        OneQubit::from_tableau(&self.tableau().inverse()).expect("closed")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Gate {
    One(OneQubit),
    /// Generalized CNOT C(P,Q), P on the first qubit.
    C(Pauli, Pauli),
    Swap,
    /// T_{2k}, stored by its arity 2k.
    T(usize),
}

impl Gate {
    pub const CNOT: Gate = Gate::C(Pauli::X, Pauli::Z);
    pub const T4: Gate = Gate::T(4);

    pub fn arity(self) -> usize {
        match self {
            Gate::One(_) => 1,
            Gate::C(..) | Gate::Swap => 2,
            Gate::T(m) => m,
        }
    }

    pub fn one(name: &str) -> Gate {
        match name.parse::<Gate>() {
            Ok(g @ Gate::One(_)) => g,
            _ => panic!("not a single-qubit gate name: {name}"),
        }
    }

    pub fn tableau(self) -> Result<Tableau, Error> {
        match self {
            Gate::One(g) => Ok(g.tableau()),
            Gate::C(p, q) => Ok(generalized_cnot(p, q)),
            Gate::Swap => Ok(t2k(2).expect("even")),
            Gate::T(m) => t2k(m),
        }
    }

    /// Every single-qubit and two-qubit catalog gate, plus T4.
    pub fn catalog() -> Vec<Gate> {
        let mut v: Vec<Gate> = OneQubit::all().map(Gate::One).collect();
        for p in [Pauli::X, Pauli::Y, Pauli::Z] {
            for q in [Pauli::X, Pauli::Y, Pauli::Z] {
                v.push(Gate::C(p, q));
            }
        }
        v.push(Gate::Swap);
        v.push(Gate::T(4));
        v
    }
}

/// Tableau of C(P,Q): letters commuting with P on qubit 1 are fixed, those
/// anticommuting pick up Q on qubit 2, and symmetrically. All signs are +.
pub fn generalized_cnot(p: Pauli, q: Pauli) -> Tableau {
    let basis = [Pauli::X, Pauli::Z];
    let mut rows = Vec::with_capacity(4);
    for (qubit, own, other) in [(0usize, p, q), (1, q, p)] {
        for b in basis {
            let mut letters = [Pauli::I, Pauli::I];
            letters[qubit] = b;
            let anti = own != Pauli::I && own != b;
            if anti {
                letters[1 - qubit] = other;
            }
            rows.push(PauliString::from_letters(&letters, 0));
        }
    }
    Tableau::from_rows(rows).expect("generalized CNOT is unitary")
}

/// T_{2k} on `m = 2k` qubits: identity blocks off the diagonal, zero on it.
pub fn t2k(m: usize) -> Result<Tableau, Error> {
    if m < 2 || m % 2 != 0 {
        return Err(Error::OddArity(m));
    }
    let mut entries = vec![RingElem::ONE; m * m];
    for i in 0..m {
        entries[i * m + i] = RingElem::ZERO;
    }
    Tableau::from_matrix(m, &entries, &vec![false; 2 * m])
}

/// CNOT(b, i, j) for nonzero singular `b`: the generalized CNOT whose tableau
/// on qubits (i, j) is the identity except `b*` at (i, j) and `b` at (j, i).
pub fn cnot_b(b: RingElem) -> Option<Gate> {
    if b.is_zero() || b.is_invertible() {
        return None;
    }
    let letters = [Pauli::X, Pauli::Y, Pauli::Z];
    letters
        .iter()
        .flat_map(|&p| letters.iter().map(move |&q| Gate::C(p, q)))
        .find(|g| {
            let t = g.tableau().expect("catalog");
            t.m(1, 0) == b && t.m(0, 1) == b.star()
        })
}

fn pauli_name(p: Pauli) -> char {
    p.letter()
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::One(g) => write!(f, "{}", g.name()),
            Gate::C(p, q) => write!(f, "C{}{}", pauli_name(*p), pauli_name(*q)),
            Gate::Swap => write!(f, "SWAP"),
            Gate::T(4) => write!(f, "T4"),
            Gate::T(m) => write!(f, "T2K_{m}"),
        }
    }
}

impl FromStr for Gate {
    type Err = Error;

    /// Accepts catalog names plus the aliases H, S, Sdag, I, CNOT, CSIGN, T4,
    /// GAMMA and `T2K_<arity>`.
    fn from_str(s: &str) -> Result<Gate, Error> {
        let alias = match s {
            "H" => "THETA_XpZ",
            "S" => "RZ",
            "Sdag" => "RZdag",
            "I" => "ID",
            "GAMMA" => "GAMMA_PPP",
            "CNOT" => "CXZ",
            "CSIGN" => "CZZ",
            other => other,
        };
        for g in OneQubit::all() {
            if g.name() == alias {
                return Ok(Gate::One(g));
            }
        }
        match alias {
            "SWAP" => return Ok(Gate::Swap),
            "T4" => return Ok(Gate::T(4)),
            _ => {}
        }
        if let Some(m) = alias.strip_prefix("T2K_") {
            let m: usize = m.parse().map_err(|_| Error::UnknownGate(s.into()))?;
            if m < 2 || m % 2 != 0 {
                return Err(Error::OddArity(m));
            }
            return Ok(Gate::T(m));
        }
        let b = alias.as_bytes();
        if b.len() == 3 && b[0] == b'C' {
            let p = Pauli::from_letter(b[1] as char);
            let q = Pauli::from_letter(b[2] as char);
            if let (Some(p), Some(q)) = (p, q) {
                if p != Pauli::I && q != Pauli::I {
                    return Ok(Gate::C(p, q));
                }
            }
        }
        Err(Error::UnknownGate(s.into()))
    }
}
