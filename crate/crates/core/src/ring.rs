//! The ring R of 2x2 matrices over F2, its star involution and its twelve subrings.
//!
//! An element `((a,b),(c,d))` is one block of a tableau: the row `(a,b)` is the
//! (x, z) part of the image of X on one qubit, restricted to another qubit, and
//! `(c,d)` is the same for Z.

use std::fmt;

/// A 2x2 matrix over F2, packed as `a<<3 | b<<2 | c<<1 | d`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RingElem(u8);

const fn pack(a: u8, b: u8, c: u8, d: u8) -> u8 {
    (a << 3) | (b << 2) | (c << 1) | d
}

const fn mul_code(x: u8, y: u8) -> u8 {
    let (a, b, c, d) = ((x >> 3) & 1, (x >> 2) & 1, (x >> 1) & 1, x & 1);
    let (e, f, g, h) = ((y >> 3) & 1, (y >> 2) & 1, (y >> 1) & 1, y & 1);
    pack(
        (a & e) ^ (b & g),
        (a & f) ^ (b & h),
        (c & e) ^ (d & g),
        (c & f) ^ (d & h),
    )
}

const MUL_TABLE: [[u8; 16]; 16] = {
    let mut t = [[0u8; 16]; 16];
    let mut x = 0;
    while x < 16 {
        let mut y = 0;
        while y < 16 {
            t[x][y] = mul_code(x as u8, y as u8);
            y += 1;
        }
        x += 1;
    }
    t
};

const STAR_TABLE: [u8; 16] = {
    let mut t = [0u8; 16];
    let mut x = 0;
    while x < 16 {
        let v = x as u8;
        t[x] = pack(v & 1, (v >> 2) & 1, (v >> 1) & 1, (v >> 3) & 1);
        x += 1;
    }
    t
};

impl RingElem {
    pub const ZERO: RingElem = RingElem(0);
    pub const ONE: RingElem = RingElem(0b1001);

    pub const fn new(a: u8, b: u8, c: u8, d: u8) -> RingElem {
        RingElem(pack(a & 1, b & 1, c & 1, d & 1))
    }

    /// Build from the packed 4-bit code. Panics if `code >= 16`.
    pub fn from_code(code: u8) -> RingElem {
        assert!(code < 16, "ring code out of range: {code}");
        RingElem(code)
    }

    pub const fn code(self) -> u8 {
        self.0
    }

    /// All 16 elements in code order.
    pub fn all() -> impl Iterator<Item = RingElem> {
        (0..16u8).map(RingElem)
    }

    pub const fn a(self) -> u8 {
        (self.0 >> 3) & 1
    }
    pub const fn b(self) -> u8 {
        (self.0 >> 2) & 1
    }
    pub const fn c(self) -> u8 {
        (self.0 >> 1) & 1
    }
    pub const fn d(self) -> u8 {
        self.0 & 1
    }

    /// Swaps the diagonal entries.
    pub fn star(self) -> RingElem {
        RingElem(STAR_TABLE[self.0 as usize])
    }

    pub fn mul(self, other: RingElem) -> RingElem {
        RingElem(MUL_TABLE[self.0 as usize][other.0 as usize])
    }

    pub fn add(self, other: RingElem) -> RingElem {
        RingElem(self.0 ^ other.0)
    }

    pub fn det(self) -> u8 {
        (self.a() & self.d()) ^ (self.b() & self.c())
    }

    pub fn is_invertible(self) -> bool {
        self.det() == 1
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Multiplicative inverse, if any. Over F2 the inverse of an invertible
    /// element is its adjugate.
    pub fn inverse(self) -> Option<RingElem> {
        if !self.is_invertible() {
            return None;
        }
        Some(RingElem::new(self.d(), self.b(), self.c(), self.a()))
    }
}

impl std::ops::Add for RingElem {
    type Output = RingElem;
    fn add(self, rhs: RingElem) -> RingElem {
        RingElem::add(self, rhs)
    }
}

impl std::ops::Mul for RingElem {
    type Output = RingElem;
    fn mul(self, rhs: RingElem) -> RingElem {
        RingElem::mul(self, rhs)
    }
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({},{}),({},{}))", self.a(), self.b(), self.c(), self.d())
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The twelve subrings of R that appear as class invariants.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Subring {
    Full,
    RX,
    RY,
    RZ,
    RE,
    RXY,
    RXZ,
    RYZ,
    Trivial,
    SelfConjX,
    SelfConjY,
    SelfConjZ,
}

const fn in_rx(e: u8) -> bool {
    (e >> 2) & 1 == 0
}
const fn in_rz(e: u8) -> bool {
    (e >> 1) & 1 == 0
}
const fn in_ry(e: u8) -> bool {
    (e.count_ones() & 1) == 0
}
const fn in_re(e: u8) -> bool {
    let (a, b, c, d) = ((e >> 3) & 1, (e >> 2) & 1, (e >> 1) & 1, e & 1);
    c == b && d == a ^ b
}
const fn self_conj(e: u8) -> bool {
    (e >> 3) & 1 == e & 1
}

const fn mask_of(s: Subring) -> u16 {
    let mut m = 0u16;
    let mut e = 0u8;
    while e < 16 {
        let inside = match s {
            Subring::Full => true,
            Subring::RX => in_rx(e),
            Subring::RY => in_ry(e),
            Subring::RZ => in_rz(e),
            Subring::RE => in_re(e),
            Subring::RXY => in_rx(e) && in_ry(e),
            Subring::RXZ => in_rx(e) && in_rz(e),
            Subring::RYZ => in_ry(e) && in_rz(e),
            Subring::Trivial => e == 0 || e == 0b1001,
            Subring::SelfConjX => in_rx(e) && self_conj(e),
            Subring::SelfConjY => in_ry(e) && self_conj(e),
            Subring::SelfConjZ => in_rz(e) && self_conj(e),
        };
        if inside {
            m |= 1 << e;
        }
        e += 1;
    }
    m
}

impl Subring {
    pub const ALL: [Subring; 12] = [
        Subring::Full,
        Subring::RX,
        Subring::RY,
        Subring::RZ,
        Subring::RE,
        Subring::RXY,
        Subring::RXZ,
        Subring::RYZ,
        Subring::Trivial,
        Subring::SelfConjX,
        Subring::SelfConjY,
        Subring::SelfConjZ,
    ];

    /// Membership bitmask over ring codes.
    pub const fn mask(self) -> u16 {
        mask_of(self)
    }

    pub fn contains(self, e: RingElem) -> bool {
        self.mask() >> e.code() & 1 == 1
    }

    pub fn elements(self) -> Vec<RingElem> {
        RingElem::all().filter(|&e| self.contains(e)).collect()
    }

    pub fn name(self) -> &'static str {
        match self {
            Subring::Full => "R",
            Subring::RX => "R_X",
            Subring::RY => "R_Y",
            Subring::RZ => "R_Z",
            Subring::RE => "R_E",
            Subring::RXY => "R_X&R_Y",
            Subring::RXZ => "R_X&R_Z",
            Subring::RYZ => "R_Y&R_Z",
            Subring::Trivial => "trivial",
            Subring::SelfConjX => "SelfConj_X",
            Subring::SelfConjY => "SelfConj_Y",
            Subring::SelfConjZ => "SelfConj_Z",
        }
    }
}

/// A single-qubit Pauli matrix, as (x, z) bits: I=(0,0), X=(1,0), Z=(0,1), Y=(1,1).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub fn from_bits(x: bool, z: bool) -> Pauli {
        match (x, z) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (true, true) => Pauli::Y,
            (false, true) => Pauli::Z,
        }
    }

    pub fn x(self) -> bool {
        matches!(self, Pauli::X | Pauli::Y)
    }

    pub fn z(self) -> bool {
        matches!(self, Pauli::Z | Pauli::Y)
    }

    pub fn letter(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }

    pub fn from_letter(c: char) -> Option<Pauli> {
        match c {
            'I' => Some(Pauli::I),
            'X' => Some(Pauli::X),
            'Y' => Some(Pauli::Y),
            'Z' => Some(Pauli::Z),
            _ => None,
        }
    }

    /// Product `p q = i^k r`, returned as `(k, r)`.
    pub fn mul(self, other: Pauli) -> (u8, Pauli) {
        use Pauli::*;
        match (self, other) {
            (I, q) => (0, q),
            (p, I) => (0, p),
            (p, q) if p == q => (0, I),
            (X, Y) => (1, Z),
            (Y, Z) => (1, X),
            (Z, X) => (1, Y),
            (Y, X) => (3, Z),
            (Z, Y) => (3, X),
            (X, Z) => (3, Y),
            _ => unreachable!(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn oracle_mul(x: RingElem, y: RingElem) -> RingElem {
        let m = |e: RingElem| [[e.a(), e.b()], [e.c(), e.d()]];
        let (p, q) = (m(x), m(y));
        let mut r = [[0u8; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    r[i][j] ^= p[i][k] & q[k][j];
                }
            }
        }
        RingElem::new(r[0][0], r[0][1], r[1][0], r[1][1])
    }

    #[test]
    fn mul_matches_matrix_oracle() {
        for x in RingElem::all() {
            for y in RingElem::all() {
                assert_eq!(x * y, oracle_mul(x, y));
                assert_eq!((x * y).star(), y.star() * x.star());
            }
        }
    }

    #[test]
    fn star_examples() {
        assert_eq!(RingElem::new(1, 1, 0, 0).star(), RingElem::new(0, 1, 0, 1));
        assert_eq!(RingElem::ONE.star(), RingElem::ONE);
        assert_eq!(RingElem::new(1, 1, 1, 0).star(), RingElem::new(0, 1, 1, 1));
        for x in RingElem::all() {
            assert_eq!(x.star().star(), x);
            let want = if x.det() == 1 { RingElem::ONE } else { RingElem::ZERO };
            assert_eq!(x * x.star(), want);
        }
    }

    #[test]
    fn mul_examples() {
        let s = RingElem::new(1, 1, 0, 1);
        assert_eq!(s * s, RingElem::ONE);
        assert_eq!(RingElem::new(1, 1, 1, 0) * RingElem::new(0, 1, 1, 1), RingElem::ONE);
    }

    #[test]
    fn six_units() {
        assert_eq!(RingElem::all().filter(|e| e.is_invertible()).count(), 6);
        assert!(!RingElem::new(0, 0, 1, 0).is_invertible());
        for e in RingElem::all().filter(|e| e.is_invertible()) {
            assert_eq!(e * e.inverse().unwrap(), RingElem::ONE);
        }
    }

    #[test]
    fn subrings_closed() {
        for s in Subring::ALL {
            let els = s.elements();
            assert!(s.contains(RingElem::ZERO) && s.contains(RingElem::ONE));
            for &x in &els {
                for &y in &els {
                    assert!(s.contains(x + y), "{:?} not closed under add", s);
                    assert!(s.contains(x * y), "{:?} not closed under mul", s);
                }
            }
        }
    }

    #[test]
    fn subring_membership() {
        assert!(Subring::RZ.contains(RingElem::new(1, 1, 0, 1)));
        assert!(Subring::RE.contains(RingElem::new(1, 1, 1, 0)));
        assert!(!Subring::Trivial.contains(RingElem::new(0, 1, 0, 0)));
        for s in [Subring::RX, Subring::RY, Subring::RZ] {
            assert_eq!(s.mask() & Subring::RE.mask(), Subring::Trivial.mask());
        }
        assert_eq!(Subring::RX.mask() & Subring::RY.mask(), Subring::RXY.mask());
        assert_eq!(Subring::RX.elements().len(), 8);
        assert_eq!(Subring::RE.elements().len(), 4);
        assert_eq!(Subring::SelfConjZ.elements().len(), 4);
        assert_eq!(Subring::RXZ.elements().len(), 4);
    }

    #[test]
    fn pauli_products() {
        assert_eq!(Pauli::X.mul(Pauli::Y), (1, Pauli::Z));
        assert_eq!(Pauli::Y.mul(Pauli::X), (3, Pauli::Z));
        for p in [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z] {
            assert_eq!(p.mul(Pauli::I), (0, p));
            assert_eq!(Pauli::from_bits(p.x(), p.z()), p);
        }
    }
}
