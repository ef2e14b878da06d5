//! Class invariants evaluated on a tableau: subring membership and the
//! permutation invariants, plus the flag summary built from them.

use crate::catalog::OneQubit;
use crate::error::Error;
use crate::ring::{Pauli, RingElem, Subring};
use crate::subgroup::{self, Mask, Subgroup};
use crate::tableau::Tableau;

/// Bitmask over ring-element codes of the entries that occur in `t`.
pub fn entry_mask(t: &Tableau) -> u16 {
    let n = t.width();
    let mut mask = 0u16;
    for i in 0..n {
        for j in 0..n {
            mask |= 1 << t.m(i, j).code();
        }
    }
    mask
}

/// Every matrix entry lies in `s`.
pub fn satisfies_subring(t: &Tableau, s: Subring) -> bool {
    entry_mask(t) & !s.mask() == 0
}

/// The one nonzero singular entry a P-degenerate tableau may carry off the
/// permutation pattern: the coupling left by C(P,P).
pub fn coupling(p: Pauli) -> RingElem {
    match p {
        Pauli::X => RingElem::new(0, 0, 1, 0),
        Pauli::Y => RingElem::new(1, 1, 1, 1),
        Pauli::Z => RingElem::new(0, 1, 0, 0),
        Pauli::I => RingElem::ZERO,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationForm {
    /// `perm[i]` is the column holding row `i`'s invertible entry.
    pub perm: Vec<usize>,
    /// Row `i`'s invertible entry joined with the row's two phase bits.
    pub diag: Vec<OneQubit>,
    /// Distinct nonzero entries off the pattern, sorted by code.
    pub offdiag: Vec<RingElem>,
}

/// Some iff every row and column has exactly one invertible entry.
pub fn permutation_form(t: &Tableau) -> Option<PermutationForm> {
    let n = t.width();
    let mut perm = vec![usize::MAX; n];
    let mut col_used = vec![false; n];
    let mut off = 0u16;
    for i in 0..n {
        for j in 0..n {
            let e = t.m(i, j);
            if e.is_invertible() {
                if perm[i] != usize::MAX || col_used[j] {
                    return None;
                }
                perm[i] = j;
                col_used[j] = true;
            } else if !e.is_zero() {
                off |= 1 << e.code();
            }
        }
        if perm[i] == usize::MAX {
            return None;
        }
    }
    let diag = (0..n)
        .map(|i| {
            OneQubit::from_parts(t.m(i, perm[i]), t.phase(2 * i), t.phase(2 * i + 1))
                .expect("invertible entry")
        })
        .collect();
    let offdiag = (0..16u8).filter(|c| off >> c & 1 == 1).map(RingElem::from_code).collect();
    Some(PermutationForm { perm, diag, offdiag })
}

/// A supported permutation invariant: diagonal gates in `group`, other
/// entries zero or, with `coupling = Some(P)`, the C(P,P) coupling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PermInvariant {
    pub group: Mask,
    pub coupling: Option<Pauli>,
}

impl PermInvariant {
    /// Accepts `S = {0}` with any subgroup, or `S = {0, coupling(P)}` with
    /// `<P> <= G <= <P, R_P>`.
    pub fn new(group: Mask, coupling: Option<Pauli>) -> Result<PermInvariant, Error> {
        if subgroup::by_mask(group).is_none() {
            return Err(Error::Unsupported(format!("{group:#x} is not a subgroup")));
        }
        if let Some(p) = coupling {
            let (lo, hi) = letter_bounds(p)
                .ok_or_else(|| Error::Unsupported("coupling letter must be X, Y or Z".into()))?;
            if lo & !group != 0 || group & !hi != 0 {
                return Err(Error::Unsupported(format!(
                    "group {} is not between <{}> and <P,R{}>",
                    subgroup::by_mask(group).map(|s| s.name).unwrap_or("?"),
                    p.letter(),
                    p.letter()
                )));
            }
        }
        Ok(PermInvariant { group, coupling })
    }

    pub fn holds(&self, form: Option<&PermutationForm>) -> bool {
        let Some(f) = form else { return false };
        let allowed = self.coupling.map(coupling);
        f.offdiag.iter().all(|&e| Some(e) == allowed)
            && f.diag.iter().all(|&g| subgroup::contains(self.group, g))
    }
}

/// Masks of `<P>` and `<P, R_P>`.
pub fn letter_bounds(p: Pauli) -> Option<(Mask, Mask)> {
    let (lo, hi) = match p {
        Pauli::X => ("X", "P+RX"),
        Pauli::Y => ("Y", "P+RY"),
        Pauli::Z => ("Z", "P+RZ"),
        Pauli::I => return None,
    };
    Some((subgroup::by_name(lo)?.mask, subgroup::by_name(hi)?.mask))
}

pub fn satisfies_permutation_invariant(
    t: &Tableau,
    group: Mask,
    coupling: Option<Pauli>,
) -> Result<bool, Error> {
    let inv = PermInvariant::new(group, coupling)?;
    Ok(inv.holds(permutation_form(t).as_ref()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagVector {
    pub x_pres: bool,
    pub y_pres: bool,
    pub z_pres: bool,
    pub egalitarian: bool,
    pub x_orth: bool,
    pub y_orth: bool,
    pub z_orth: bool,
    pub degenerate: bool,
    pub x_deg: bool,
    pub y_deg: bool,
    pub z_deg: bool,
    /// For degenerate gates the group generated by the diagonal gates; for
    /// P-degenerate ones that group joined with P.
    pub subgroup: Option<&'static Subgroup>,
}

pub fn invariant_flags(t: &Tableau) -> FlagVector {
    let mask = entry_mask(t);
    let has = |s: Subring| mask & !s.mask() == 0;
    let form = permutation_form(t);
    let degenerate = form.as_ref().is_some_and(|f| f.offdiag.is_empty());
    let deg_in = |p: Pauli| {
        let (_, hi) = letter_bounds(p).expect("letter");
        PermInvariant { group: hi, coupling: Some(p) }.holds(form.as_ref())
    };
    let (x_deg, y_deg, z_deg) = (deg_in(Pauli::X), deg_in(Pauli::Y), deg_in(Pauli::Z));
    let subgroup = form.as_ref().and_then(|f| {
        let mut gens = f.diag.clone();
        if !degenerate {
            let p = [(x_deg, "X"), (y_deg, "Y"), (z_deg, "Z")].iter().find(|(d, _)| *d)?.1;
            gens.push(OneQubit::from_name(p).expect("Pauli name"));
        }
        Some(subgroup::subgroup_closure(&gens))
    });
    FlagVector {
        x_pres: has(Subring::RX),
        y_pres: has(Subring::RY),
        z_pres: has(Subring::RZ),
        egalitarian: has(Subring::RE),
        x_orth: has(Subring::SelfConjX),
        y_orth: has(Subring::SelfConjY),
        z_orth: has(Subring::SelfConjZ),
        degenerate,
        x_deg,
        y_deg,
        z_deg,
        subgroup,
    }
}
