//! The 57 gate classes, their inclusion order, and classification.
//!
//! Each class carries an invariant and a generating set. The order is
//! computed rather than entered: `B <= C` iff every generator of `B`
//! satisfies the invariant of `C`. Building the lattice checks that this
//! relation is a partial order.

use std::fmt::Write as _;
use std::sync::OnceLock;

use rand::Rng;

use crate::catalog::{Gate, OneQubit};
use crate::circuit::Circuit;
use crate::error::Error;
use crate::invariants::{self, PermInvariant, PermutationForm};
use crate::ring::{Pauli, Subring};
use crate::subgroup::{self, Mask};
use crate::tableau::Tableau;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Invariant {
    Subring(Subring),
    Permutation(PermInvariant),
}

#[derive(Clone, Debug)]
pub struct GateClass {
    pub id: usize,
    pub name: String,
    pub invariant: Invariant,
    pub generators: Vec<Gate>,
}

/// What the invariants need to know about a tableau, computed once.
pub struct Profile {
    entries: u16,
    form: Option<PermutationForm>,
}

impl Profile {
    pub fn of(t: &Tableau) -> Profile {
        Profile { entries: invariants::entry_mask(t), form: invariants::permutation_form(t) }
    }
}

impl GateClass {
    pub fn is_degenerate(&self) -> bool {
        matches!(self.invariant, Invariant::Permutation(PermInvariant { coupling: None, .. }))
    }

    pub fn holds(&self, p: &Profile) -> bool {
        match self.invariant {
            Invariant::Subring(s) => p.entries & !s.mask() == 0,
            Invariant::Permutation(inv) => inv.holds(p.form.as_ref()),
        }
    }

    /// `class_contains`: evaluate the invariant.
    pub fn contains(&self, t: &Tableau) -> bool {
        self.holds(&Profile::of(t))
    }

    /// The single-qubit generators in the generating set.
    pub fn one_qubit_generators(&self) -> Vec<OneQubit> {
        self.generators
            .iter()
            .filter_map(|g| match g {
                Gate::One(o) => Some(*o),
                _ => None,
            })
            .collect()
    }

    /// The single-qubit gates in the class.
    pub fn one_qubit_group(&self) -> Mask {
        subgroup::closure(&self.one_qubit_generators())
    }

    pub fn max_arity(&self) -> usize {
        self.generators.iter().map(|g| g.arity()).max().unwrap_or(1)
    }

    /// A random word of `len` gates on `n` qubits drawn from the generators
    /// and SWAP, each on uniformly chosen distinct qubits. Generators wider
    /// than `n` are skipped.
    pub fn random_word<R: Rng + ?Sized>(&self, n: usize, len: usize, rng: &mut R) -> Circuit {
        let mut pool: Vec<Gate> = self.generators.iter().copied().filter(|g| g.arity() <= n).collect();
        if n >= 2 {
            pool.push(Gate::Swap);
        }
        let mut c = Circuit::new(n);
        if pool.is_empty() {
            return c;
        }
        for _ in 0..len {
            let g = pool[rng.gen_range(0..pool.len())];
            let qs: Vec<usize> = rand::seq::index::sample(rng, n, g.arity()).into_vec();
            c.push(g, &qs).expect("distinct qubits in range");
        }
        c
    }
}

pub struct Lattice {
    classes: Vec<GateClass>,
    le: Vec<Vec<bool>>,
    covers: Vec<(usize, usize)>,
}

fn one(name: &str) -> Gate {
    Gate::One(OneQubit::from_name(name).expect("catalog name"))
}

const LETTERS: [(Pauli, &str, &str); 3] =
    [(Pauli::X, "X", "theta_YZ"), (Pauli::Y, "Y", "theta_XZ"), (Pauli::Z, "Z", "theta_XY")];

fn build_classes() -> Vec<GateClass> {
    let mut out: Vec<(String, Invariant, Vec<Gate>)> = Vec::new();
    for s in subgroup::subgroups() {
        let inv = PermInvariant::new(s.mask, None).expect("degenerate invariant");
        out.push((s.name.to_string(), Invariant::Permutation(inv), s.gens.iter().map(|g| Gate::One(*g)).collect()));
    }
    for (p, l, theta) in LETTERS {
        for g in [l.to_string(), format!("R{l}"), "P".to_string(), format!("{l}+{theta}"), format!("P+R{l}")] {
            let s = subgroup::by_name(&g).expect("subgroup name");
            let inv = PermInvariant::new(s.mask, Some(p)).expect("P-degenerate invariant");
            let mut gens = vec![Gate::C(p, p)];
            gens.extend(s.gens.iter().map(|g| Gate::One(*g)));
            out.push((format!("C({l},{l})+{g}"), Invariant::Permutation(inv), gens));
        }
    }
    let (x, y, z) = (Pauli::X, Pauli::Y, Pauli::Z);
    let subring: [(&str, Subring, Vec<Gate>); 12] = [
        ("ALL", Subring::Full, vec![Gate::CNOT, one("THETA_XpZ"), one("RZ")]),
        ("C(Y,X)+P+RX", Subring::RX, vec![Gate::C(y, x), one("X"), one("Z"), one("RX")]),
        ("C(Z,Y)+P+RY", Subring::RY, vec![Gate::C(z, y), one("X"), one("Z"), one("RY")]),
        ("C(X,Z)+P+RZ", Subring::RZ, vec![Gate::C(x, z), one("X"), one("Z"), one("RZ")]),
        ("T4+P+Gamma", Subring::RE, vec![Gate::T4, one("X"), one("Z"), one("GAMMA_PPP")]),
        ("C(Y,X)+P", Subring::RXY, vec![Gate::C(y, x), one("X"), one("Z")]),
        ("C(X,Z)+P", Subring::RXZ, vec![Gate::C(x, z), one("X"), one("Z")]),
        ("C(Z,Y)+P", Subring::RYZ, vec![Gate::C(z, y), one("X"), one("Z")]),
        ("T4+P", Subring::Trivial, vec![Gate::T4, one("X"), one("Z")]),
        ("T4+P+RX", Subring::SelfConjX, vec![Gate::T4, one("X"), one("Z"), one("RX")]),
        ("T4+P+RY", Subring::SelfConjY, vec![Gate::T4, one("X"), one("Z"), one("RY")]),
        ("T4+P+RZ", Subring::SelfConjZ, vec![Gate::T4, one("X"), one("Z"), one("RZ")]),
    ];
    for (name, s, gens) in subring {
        out.push((name.to_string(), Invariant::Subring(s), gens));
    }
    out.into_iter()
        .enumerate()
        .map(|(id, (name, invariant, generators))| GateClass { id, name, invariant, generators })
        .collect()
}

impl Lattice {
    fn build() -> Lattice {
        let classes = build_classes();
        let k = classes.len();
        let profiles: Vec<Vec<Profile>> = classes
            .iter()
            .map(|c| c.generators.iter().map(|g| Profile::of(&g.tableau().expect("catalog"))).collect())
            .collect();
        let mut le = vec![vec![false; k]; k];
        for a in 0..k {
            for b in 0..k {
                le[a][b] = profiles[a].iter().all(|p| classes[b].holds(p));
            }
        }
        for a in 0..k {
            assert!(le[a][a], "generators of {} violate its own invariant", classes[a].name);
            for b in 0..k {
                assert!(a == b || !(le[a][b] && le[b][a]), "{} and {} coincide", classes[a].name, classes[b].name);
                for c in 0..k {
                    assert!(!(le[a][b] && le[b][c]) || le[a][c], "order is not transitive");
                }
            }
        }
        let mut covers = Vec::new();
        for a in 0..k {
            for b in 0..k {
                if a != b && le[a][b] && !(0..k).any(|c| c != a && c != b && le[a][c] && le[c][b]) {
                    covers.push((a, b));
                }
            }
        }
        Lattice { classes, le, covers }
    }

    pub fn classes(&self) -> &[GateClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn get(&self, id: usize) -> &GateClass {
        &self.classes[id]
    }

    pub fn by_name(&self, name: &str) -> Result<&GateClass, Error> {
        self.classes.iter().find(|c| c.name == name).ok_or_else(|| Error::UnknownClass(name.into()))
    }

    pub fn bottom(&self) -> &GateClass {
        self.by_name("BOT").expect("BOT")
    }

    pub fn top(&self) -> &GateClass {
        self.by_name("ALL").expect("ALL")
    }

    /// `a <= b` in the inclusion order, by id.
    pub fn le(&self, a: usize, b: usize) -> bool {
        self.le[a][b]
    }

    /// Covering pairs `(lower, upper)`.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    fn least(&self, set: &[usize]) -> Option<usize> {
        set.iter().copied().find(|&m| set.iter().all(|&c| self.le[m][c]))
    }

    fn greatest(&self, set: &[usize]) -> Option<usize> {
        set.iter().copied().find(|&m| set.iter().all(|&c| self.le[c][m]))
    }

    /// The unique minimal class whose invariant `t` satisfies.
    pub fn classify(&self, t: &Tableau) -> Result<&GateClass, Error> {
        let p = Profile::of(t);
        let sat: Vec<usize> = self.classes.iter().filter(|c| c.holds(&p)).map(|c| c.id).collect();
        self.least(&sat)
            .map(|m| &self.classes[m])
            .ok_or_else(|| Error::Internal("satisfied classes have no least element".into()))
    }

    pub fn join(&self, a: usize, b: usize) -> Result<&GateClass, Error> {
        let ub: Vec<usize> = (0..self.len()).filter(|&c| self.le[a][c] && self.le[b][c]).collect();
        self.least(&ub)
            .map(|m| &self.classes[m])
            .ok_or_else(|| Error::Internal(format!("no join of {} and {}", self.classes[a].name, self.classes[b].name)))
    }

    pub fn meet(&self, a: usize, b: usize) -> Result<&GateClass, Error> {
        let lb: Vec<usize> = (0..self.len()).filter(|&c| self.le[c][a] && self.le[c][b]).collect();
        self.greatest(&lb)
            .map(|m| &self.classes[m])
            .ok_or_else(|| Error::Internal(format!("no meet of {} and {}", self.classes[a].name, self.classes[b].name)))
    }

    /// The class generated by a set of gates: the join of their classes.
    pub fn classify_set(&self, ts: &[Tableau]) -> Result<&GateClass, Error> {
        let mut acc = self.bottom().id;
        for t in ts {
            let c = self.classify(t)?.id;
            acc = self.join(acc, c)?.id;
        }
        Ok(&self.classes[acc])
    }

    /// Indices of a smallest subset of `ts` generating the same class, at
    /// most three; the first such subset in lexicographic order.
    pub fn minimal_generators(&self, ts: &[Tableau]) -> Result<Vec<usize>, Error> {
        let ids = ts.iter().map(|t| self.classify(t).map(|c| c.id)).collect::<Result<Vec<_>, _>>()?;
        let target = self.fold_join(&ids)?;
        let n = ids.len();
        for size in 0..=n.min(3) {
            let mut idx: Vec<usize> = (0..size).collect();
            loop {
                let pick: Vec<usize> = idx.iter().map(|&i| ids[i]).collect();
                if self.fold_join(&pick)? == target {
                    return Ok(idx);
                }
                if !next_combination(&mut idx, n) {
                    break;
                }
            }
        }
        Err(Error::Internal("no generating subset of size at most three".into()))
    }

    fn fold_join(&self, ids: &[usize]) -> Result<usize, Error> {
        let mut acc = self.bottom().id;
        for &c in ids {
            acc = self.join(acc, c)?.id;
        }
        Ok(acc)
    }

    /// Classification from the flag vector alone, following the order in
    /// which the invariants nest. Agrees with `classify`.
    pub fn classify_by_flags(&self, t: &Tableau) -> &GateClass {
        let f = invariants::invariant_flags(t);
        let name: String = if f.degenerate {
            f.subgroup.expect("degenerate gates have a group").name.to_string()
        } else if f.x_deg || f.y_deg || f.z_deg {
            let l = if f.x_deg { "X" } else if f.y_deg { "Y" } else { "Z" };
            format!("C({l},{l})+{}", f.subgroup.expect("group").name)
        } else if f.x_orth && f.z_orth {
            "T4+P".into()
        } else if f.x_orth {
            "T4+P+RX".into()
        } else if f.y_orth {
            "T4+P+RY".into()
        } else if f.z_orth {
            "T4+P+RZ".into()
        } else if f.x_pres && f.z_pres {
            "C(X,Z)+P".into()
        } else if f.x_pres && f.y_pres {
            "C(Y,X)+P".into()
        } else if f.y_pres && f.z_pres {
            "C(Z,Y)+P".into()
        } else if f.x_pres {
            "C(Y,X)+P+RX".into()
        } else if f.y_pres {
            "C(Z,Y)+P+RY".into()
        } else if f.z_pres {
            "C(X,Z)+P+RZ".into()
        } else if f.egalitarian {
            "T4+P+Gamma".into()
        } else {
            "ALL".into()
        };
        self.by_name(&name).expect("flag name is a class")
    }

    /// Graphviz rendering, upper classes above lower ones. Degenerate classes
    /// are drawn dashed.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n");
        for c in &self.classes {
            let style = if c.is_degenerate() { ", style=dashed" } else { "" };
            let _ = writeln!(s, "  n{} [label=\"{}\"{}];", c.id, c.name, style);
        }
        for &(a, b) in &self.covers {
            let _ = writeln!(s, "  n{a} -> n{b};");
        }
        s.push_str("}\n");
        s
    }
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

pub fn lattice() -> &'static Lattice {
    static L: OnceLock<Lattice> = OnceLock::new();
    L.get_or_init(Lattice::build)
}
