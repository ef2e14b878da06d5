//! Exact class sizes and a brute-force closure counter to check them.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::catalog::Gate;
use crate::error::Error;
use crate::invariants::PermInvariant;
use crate::lattice::{GateClass, Invariant, Profile};
use crate::pauli::PauliString;
use crate::ring::{Pauli, RingElem, Subring};
use crate::subgroup;
use crate::tableau::Tableau;

/// Widest register the closure counter packs.
pub const MAX_BRUTE_WIDTH: usize = 5;

fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `prod_{i=1}^{n} (2^i - 1)` times `2^{n(n-1)/2}`: invertible n x n matrices over F2.
fn gl2(n: usize) -> BigUint {
    (1..=n).fold(pow2(n * n.saturating_sub(1) / 2), |acc, i| acc * (pow2(i) - 1u32))
}

/// Orthogonal n x n matrices over F2.
pub fn orthogonal_count(n: usize) -> BigUint {
    let m = n / 2;
    let top = if n % 2 == 0 { m.saturating_sub(1) } else { m };
    (1..=top).fold(pow2(m * m), |acc, i| acc * (pow2(2 * i) - 1u32))
}

/// Unitary n x n matrices over F4.
fn unitary_f4(n: usize) -> BigUint {
    (1..=n).fold(pow2(n * n.saturating_sub(1) / 2), |acc, i| {
        if i % 2 == 0 {
            acc * (pow2(i) - 1u32)
        } else {
            acc * (pow2(i) + 1u32)
        }
    })
}

/// Symplectic 2n x 2n matrices over F2.
fn symplectic(n: usize) -> BigUint {
    (1..=n).fold(pow2(n * n), |acc, i| acc * (pow2(2 * i) - 1u32))
}

/// Number of n-qubit gates in `c`.
pub fn count(c: &GateClass, n: usize) -> BigUint {
    let pairs = n * n.saturating_sub(1) / 2;
    match c.invariant {
        Invariant::Permutation(PermInvariant { group, coupling }) => {
            let g = BigUint::from(subgroup::order(group)).pow(n as u32) * factorial(n);
            match coupling {
                None => g,
                Some(_) => g * pow2(pairs),
            }
        }
        Invariant::Subring(s) => match s {
            Subring::RXY | Subring::RXZ | Subring::RYZ => pow2(2 * n) * gl2(n),
            Subring::RX | Subring::RY | Subring::RZ => pow2(3 * n) * pow2(pairs) * gl2(n),
            Subring::Trivial => pow2(2 * n) * orthogonal_count(n),
            Subring::SelfConjX | Subring::SelfConjY | Subring::SelfConjZ => {
                pow2(3 * n) * pow2(pairs) * orthogonal_count(n)
            }
            Subring::RE => pow2(2 * n) * unitary_f4(n),
            Subring::Full => pow2(2 * n) * symplectic(n),
        },
    }
}

/// Members of `c` at width `n` that its generators cannot reach without
/// ancillas because a generator is wider than `n`.
pub fn supplementary_generators(c: &GateClass, n: usize) -> Vec<Tableau> {
    let letter = match c.invariant {
        Invariant::Subring(Subring::SelfConjX) => Some(Pauli::X),
        Invariant::Subring(Subring::SelfConjY) => Some(Pauli::Y),
        Invariant::Subring(Subring::SelfConjZ) => Some(Pauli::Z),
        _ => None,
    };
    let mut out = Vec::new();
    if let Some(p) = letter {
        if (2..4).contains(&n) {
            out.push(Gate::C(p, p).tableau().expect("catalog"));
        }
    }
    if c.invariant == Invariant::Subring(Subring::RE) && n == 3 {
        out.push(three_qubit_egalitarian());
    }
    out
}

/// The three-qubit member of T4+P+Gamma with `((0,1),(1,1))` on the
/// diagonal, I elsewhere and zero phases.
pub fn three_qubit_egalitarian() -> Tableau {
    let alpha = RingElem::new(0, 1, 1, 1);
    let m: Vec<RingElem> = (0..9).map(|k| if k % 4 == 0 { alpha } else { RingElem::ONE }).collect();
    Tableau::from_matrix(3, &m, &[false; 6]).expect("unitary")
}

/// Packed tableau: row `j` is `i^k X^x Z^z` with `x` in the low `n` bits of
/// `bits[j]` and `z` above them.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct Packed {
    n: u8,
    bits: [u16; 2 * MAX_BRUTE_WIDTH],
    k: [u8; 2 * MAX_BRUTE_WIDTH],
}

impl Packed {
    fn from_tableau(t: &Tableau) -> Packed {
        let n = t.width();
        let mut p = Packed { n: n as u8, bits: [0; 2 * MAX_BRUTE_WIDTH], k: [0; 2 * MAX_BRUTE_WIDTH] };
        for j in 0..2 * n {
            let r = t.row(j);
            let mut ny = 0;
            for q in 0..n {
                let (x, z) = (r.x_bit(q), r.z_bit(q));
                p.bits[j] |= (x as u16) << q | (z as u16) << (n + q);
                ny += (x && z) as u8;
            }
            p.k[j] = (r.phase() + ny) % 4;
        }
        p
    }

    fn to_tableau(&self) -> Tableau {
        let n = self.n as usize;
        let rows = (0..2 * n)
            .map(|j| {
                let b = self.bits[j];
                let letters: Vec<Pauli> =
                    (0..n).map(|q| Pauli::from_bits(b >> q & 1 == 1, b >> (n + q) & 1 == 1)).collect();
                let ny = letters.iter().filter(|&&l| l == Pauli::Y).count() as u8;
                PauliString::from_letters(&letters, (self.k[j] + 4 - ny % 4) % 4)
            })
            .collect();
        Tableau::from_rows(rows).expect("closure of valid tableaux")
    }

    /// `self` then `other`.
    fn then(&self, other: &Packed) -> Packed {
        let n = self.n as usize;
        let xmask = (1u16 << n) - 1;
        let mut out = *self;
        for j in 0..2 * n {
            let (mut k, mut acc) = (self.k[j], 0u16);
            let b = self.bits[j];
            for (pos, src) in (0..n).map(|q| (q, 2 * q)).chain((0..n).map(|q| (n + q, 2 * q + 1))) {
                if b >> pos & 1 == 1 {
                    let f = other.bits[src];
                    let overlap = ((acc >> n) & f & xmask).count_ones() as u8;
                    k = (k + other.k[src] + 2 * overlap) % 4;
                    acc ^= f;
                }
            }
            out.bits[j] = acc;
            out.k[j] = k;
        }
        out
    }

    fn key(&self) -> u128 {
        (0..2 * self.n as usize).fold(0u128, |acc, j| acc << 12 | (self.bits[j] as u128) << 2 | self.k[j] as u128)
    }

    fn entry_mask(&self) -> u16 {
        let n = self.n as usize;
        let mut mask = 0u16;
        for i in 0..n {
            let (xr, zr) = (self.bits[2 * i], self.bits[2 * i + 1]);
            for j in 0..n {
                let e = RingElem::new(
                    (xr >> j & 1) as u8,
                    (xr >> (n + j) & 1) as u8,
                    (zr >> j & 1) as u8,
                    (zr >> (n + j) & 1) as u8,
                );
                mask |= 1 << e.code();
            }
        }
        mask
    }
}

fn ordered_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for t in ordered_tuples(n, k - 1) {
        for q in 0..n {
            if !t.contains(&q) {
                let mut u = t.clone();
                u.push(q);
                out.push(u);
            }
        }
    }
    out
}

/// Every generator (and SWAP, and the supplementary members) embedded on
/// every ordered tuple of qubits.
fn embedded_generators(c: &GateClass, n: usize) -> Vec<Tableau> {
    let mut gens: Vec<Tableau> = Vec::new();
    let mut base: Vec<Tableau> = c.generators.iter().map(|g| g.tableau().expect("catalog")).collect();
    base.push(Gate::Swap.tableau().expect("catalog"));
    base.extend(supplementary_generators(c, n));
    for g in base {
        if g.width() > n {
            continue;
        }
        for qs in ordered_tuples(n, g.width()) {
            let e = g.embed(n, &qs).expect("distinct qubits");
            if !gens.contains(&e) {
                gens.push(e);
            }
        }
    }
    gens
}

fn closure(c: &GateClass, n: usize, cap: u64) -> Result<Vec<Packed>, Error> {
    if n > MAX_BRUTE_WIDTH {
        return Err(Error::WidthTooLarge(n));
    }
    if count(c, n) > BigUint::from(cap) {
        return Err(Error::CapExceeded(cap));
    }
    let gens: Vec<Packed> = embedded_generators(c, n).iter().map(Packed::from_tableau).collect();
    let id = Packed::from_tableau(&Tableau::identity(n));
    let mut seen: HashSet<u128> = HashSet::from([id.key()]);
    let mut all = vec![id];
    let mut head = 0;
    while head < all.len() {
        let cur = all[head];
        head += 1;
        for g in &gens {
            let next = g.then(&cur);
            if seen.insert(next.key()) {
                if all.len() as u64 >= cap {
                    return Err(Error::CapExceeded(cap));
                }
                all.push(next);
            }
        }
    }
    let subring_mask = match c.invariant {
        Invariant::Subring(s) => Some(s.mask()),
        Invariant::Permutation(_) => None,
    };
    for e in &all {
        let ok = match subring_mask {
            Some(m) => e.entry_mask() & !m == 0,
            None => c.holds(&Profile::of(&e.to_tableau())),
        };
        if !ok {
            return Err(Error::Internal(format!("closure of {} leaves its invariant", c.name)));
        }
    }
    Ok(all)
}

/// Size of the closure of `c`'s width-`n` generator embeddings. Refuses
/// when the exact count exceeds `cap`.
pub fn brute_count(c: &GateClass, n: usize, cap: u64) -> Result<BigUint, Error> {
    closure(c, n, cap).map(|v| BigUint::from(v.len()))
}

/// The elements found by `brute_count`, in discovery order.
pub fn brute_elements(c: &GateClass, n: usize, cap: u64) -> Result<Vec<Tableau>, Error> {
    closure(c, n, cap).map(|v| v.iter().map(Packed::to_tableau).collect())
}

/// `count` as a u64 when it fits.
pub fn count_u64(c: &GateClass, n: usize) -> Option<u64> {
    count(c, n).to_u64()
}
