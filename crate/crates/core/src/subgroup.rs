//! The 24-element single-qubit Clifford group (mod phase) and its 30 subgroups.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use crate::catalog::{Gate, OneQubit};

/// Subgroup as a bitmask over `OneQubit::index`.
pub type Mask = u32;

struct Table {
    mul: [[u8; 24]; 24],
    inv: [u8; 24],
}

fn table() -> &'static Table {
    static T: OnceLock<Table> = OnceLock::new();
    T.get_or_init(|| {
        let mut mul = [[0u8; 24]; 24];
        let mut inv = [0u8; 24];
        for a in 0..24 {
            let ga = OneQubit::from_index(a);
            for b in 0..24 {
                mul[a][b] = ga.then(OneQubit::from_index(b)).index() as u8;
            }
            inv[a] = ga.inverse().index() as u8;
        }
        Table { mul, inv }
    })
}

/// Product `a` then `b` by index.
pub fn mul(a: usize, b: usize) -> usize {
    table().mul[a][b] as usize
}

pub fn inv(a: usize) -> usize {
    table().inv[a] as usize
}

pub fn contains(mask: Mask, g: OneQubit) -> bool {
    mask >> g.index() & 1 == 1
}

pub fn order(mask: Mask) -> u32 {
    mask.count_ones()
}

pub fn elements(mask: Mask) -> Vec<OneQubit> {
    (0..24).filter(|i| mask >> i & 1 == 1).map(OneQubit::from_index).collect()
}

/// The subgroup generated by `gens`.
pub fn closure(gens: &[OneQubit]) -> Mask {
    let mut mask: Mask = 1 << OneQubit::ID.index();
    let mut frontier = vec![OneQubit::ID.index()];
    while let Some(a) = frontier.pop() {
        for g in gens {
            let c = mul(a, g.index());
            if mask >> c & 1 == 0 {
                mask |= 1 << c;
                frontier.push(c);
            }
        }
    }
    mask
}

pub fn closure_mask(gens: Mask) -> Mask {
    closure(&elements(gens))
}

pub fn is_subgroup(mask: Mask) -> bool {
    if mask & 1 << OneQubit::ID.index() == 0 {
        return false;
    }
    let els: Vec<usize> = (0..24).filter(|i| mask >> i & 1 == 1).collect();
    els.iter().all(|&a| els.iter().all(|&b| mask >> mul(a, b) & 1 == 1))
}

/// Canonical names and generators of the 30 subgroups.
const NAMED: [(&str, &[&str]); 30] = [
    ("BOT", &[]),
    ("X", &["X"]),
    ("Y", &["Y"]),
    ("Z", &["Z"]),
    ("theta_X+Y", &["THETA_XpY"]),
    ("theta_X-Y", &["THETA_XmY"]),
    ("theta_X+Z", &["THETA_XpZ"]),
    ("theta_X-Z", &["THETA_XmZ"]),
    ("theta_Y+Z", &["THETA_YpZ"]),
    ("theta_Y-Z", &["THETA_YmZ"]),
    ("Gamma_+++", &["GAMMA_PPP"]),
    ("Gamma_+--", &["GAMMA_PMM"]),
    ("Gamma_-+-", &["GAMMA_MPM"]),
    ("Gamma_--+", &["GAMMA_MMP"]),
    ("RX", &["RX"]),
    ("RY", &["RY"]),
    ("RZ", &["RZ"]),
    ("P", &["X", "Z"]),
    ("X+theta_YZ", &["X", "THETA_YpZ"]),
    ("Y+theta_XZ", &["Y", "THETA_XpZ"]),
    ("Z+theta_XY", &["Z", "THETA_XpY"]),
    ("P+RX", &["X", "Z", "RX"]),
    ("P+RY", &["X", "Z", "RY"]),
    ("P+RZ", &["X", "Z", "RZ"]),
    ("theta_+++", &["GAMMA_PPP", "THETA_YmZ"]),
    ("theta_+--", &["GAMMA_PMM", "THETA_XpZ"]),
    ("theta_-+-", &["GAMMA_MPM", "THETA_YpZ"]),
    ("theta_--+", &["GAMMA_MMP", "THETA_YpZ"]),
    ("P+Gamma", &["X", "Z", "GAMMA_PPP"]),
    ("TOP", &["THETA_XpZ", "RZ"]),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    pub name: &'static str,
    pub mask: Mask,
    /// The named generating set.
    pub gens: Vec<OneQubit>,
}

impl Subgroup {
    pub fn order(&self) -> u32 {
        order(self.mask)
    }

    pub fn contains(&self, g: OneQubit) -> bool {
        contains(self.mask, g)
    }
}

fn one(name: &str) -> OneQubit {
    match Gate::one(name) {
        Gate::One(g) => g,
        _ => unreachable!(),
    }
}

/// All subgroups, found by closing every pair of elements and then every
/// pairwise join until nothing new appears. Sorted by order, then mask.
pub fn enumerate_subgroups() -> Vec<Mask> {
    let mut found: BTreeSet<Mask> = BTreeSet::new();
    for a in 0..24 {
        for b in a..24 {
            found.insert(closure(&[OneQubit::from_index(a), OneQubit::from_index(b)]));
        }
    }
    loop {
        let cur: Vec<Mask> = found.iter().copied().collect();
        let before = found.len();
        for &a in &cur {
            for &b in &cur {
                found.insert(closure_mask(a | b));
            }
        }
        if found.len() == before {
            break;
        }
    }
    let mut v: Vec<Mask> = found.into_iter().collect();
    v.sort_by_key(|&m| (order(m), m));
    v
}

/// The 30 named subgroups in a fixed order. Panics if enumeration and names disagree.
pub fn subgroups() -> &'static [Subgroup] {
    static S: OnceLock<Vec<Subgroup>> = OnceLock::new();
    S.get_or_init(|| {
        let named: Vec<Subgroup> = NAMED
            .iter()
            .map(|(name, gens)| {
                let gens: Vec<OneQubit> = gens.iter().map(|g| one(g)).collect();
                Subgroup { name, mask: closure(&gens), gens }
            })
            .collect();
        let all = enumerate_subgroups();
        assert_eq!(all.len(), 30, "expected 30 subgroups, found {}", all.len());
        for m in &all {
            assert!(
                named.iter().filter(|s| s.mask == *m).count() == 1,
                "subgroup {m:#x} has no unique name"
            );
        }
        named
    })
}

pub fn by_name(name: &str) -> Option<&'static Subgroup> {
    subgroups().iter().find(|s| s.name == name)
}

pub fn by_mask(mask: Mask) -> Option<&'static Subgroup> {
    subgroups().iter().find(|s| s.mask == mask)
}

/// `subgroup_closure`: the named subgroup generated by `gens`.
pub fn subgroup_closure(gens: &[OneQubit]) -> &'static Subgroup {
    by_mask(closure(gens)).expect("every closure is one of the 30")
}

/// Covering pairs `(lower, upper)` of the subgroup inclusion order, by index into `subgroups()`.
pub fn hasse_edges() -> Vec<(usize, usize)> {
    let s = subgroups();
    let le = |a: usize, b: usize| s[a].mask & !s[b].mask == 0;
    let mut out = Vec::new();
    for a in 0..s.len() {
        for b in 0..s.len() {
            if a == b || !le(a, b) {
                continue;
            }
            let between = (0..s.len()).any(|c| c != a && c != b && le(a, c) && le(c, b));
            if !between {
                out.push((a, b));
            }
        }
    }
    out
}

/// Shortest words over `gens` reaching every element of their closure, by index.
pub fn shortest_words(gens: &[OneQubit]) -> Vec<Option<Vec<OneQubit>>> {
    let mut words: Vec<Option<Vec<OneQubit>>> = vec![None; 24];
    words[OneQubit::ID.index()] = Some(Vec::new());
    let mut queue = std::collections::VecDeque::from([OneQubit::ID.index()]);
    while let Some(a) = queue.pop_front() {
        for &g in gens {
            let c = mul(a, g.index());
            if words[c].is_none() {
                let mut w = words[a].clone().expect("visited");
                w.push(g);
                words[c] = Some(w);
                queue.push_back(c);
            }
        }
    }
    words
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thirty_subgroups() {
        assert_eq!(subgroups().len(), 30);
        let orders: Vec<u32> = subgroups().iter().map(|s| s.order()).collect();
        assert_eq!(orders.iter().filter(|&&o| o == 2).count(), 9);
        assert_eq!(orders.iter().filter(|&&o| o == 3).count(), 4);
        assert_eq!(orders.iter().filter(|&&o| o == 4).count(), 7);
        assert_eq!(orders.iter().filter(|&&o| o == 6).count(), 4);
        assert_eq!(orders.iter().filter(|&&o| o == 8).count(), 3);
        assert_eq!(by_name("P+Gamma").unwrap().order(), 12);
        assert_eq!(by_name("TOP").unwrap().order(), 24);
        for s in subgroups() {
            assert!(is_subgroup(s.mask));
        }
    }

    #[test]
    fn closures() {
        assert_eq!(subgroup_closure(&[]).name, "BOT");
        assert_eq!(subgroup_closure(&[one("RZ")]).name, "RZ");
        assert_eq!(subgroup_closure(&[one("THETA_XpZ"), one("RZ")]).name, "TOP");
    }

    #[test]
    fn words_cover_group() {
        let w = shortest_words(&[one("THETA_XpZ"), one("RZ")]);
        assert!(w.iter().all(|x| x.is_some()));
    }
}
