//! Circuit synthesis: the universal construction, generator extraction,
//! per-class canonical forms, and the two-qubit canonical form.
//!
//! Eliminations work on a tableau `W` that starts as the input and is
//! right-multiplied by gates (`W <- W g`). When `W` reaches a degenerate or
//! P-degenerate remainder `R`, the input equals `R` followed by the applied
//! gates inverted in reverse order.

use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use crate::catalog::{self, Gate, OneQubit};
use crate::circuit::Circuit;
use crate::error::Error;
use crate::invariants::{self, permutation_form};
use crate::lattice::{lattice, GateClass, Invariant};
use crate::ring::{Pauli, RingElem, Subring};
use crate::subgroup;
use crate::tableau::Tableau;

/// Widest ancilla padding tried by the T4 eliminations.
pub const MAX_ANCILLAS: usize = 8;

/// The first column of `M(t)` with a leading 1: the vector `w` in
/// `I + w w*`.
pub fn universal_vector(t: &Tableau) -> Vec<RingElem> {
    let mut w = vec![RingElem::ONE];
    w.extend((0..t.width()).map(|i| t.m(i, 0)));
    w
}

/// `I + w w*` as a row-major matrix.
pub fn rank_one_update(w: &[RingElem]) -> Vec<RingElem> {
    let n = w.len();
    let mut m = vec![RingElem::ZERO; n * n];
    for i in 0..n {
        for j in 0..n {
            let id = if i == j { RingElem::ONE } else { RingElem::ZERO };
            m[i * n + j] = id + w[i] * w[j].star();
        }
    }
    m
}

/// `G` on qubits 1..=n, then SWAP(0,1), then `G^-1` on qubits 1..=n.
pub fn universal_construction(t: &Tableau) -> Tableau {
    let n = t.width();
    let shift: Vec<usize> = (1..=n).collect();
    let g = t.embed(n + 1, &shift).expect("shifted embedding");
    let s = Gate::Swap.tableau().expect("catalog").embed(n + 1, &[0, 1]).expect("two qubits");
    let gi = t.inverse().embed(n + 1, &shift).expect("shifted embedding");
    g.compose(&s).and_then(|x| x.compose(&gi)).expect("same width")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalDecomposition {
    pub width: usize,
    /// Half the number of invertible entries of `w`.
    pub k: usize,
    /// Qubits carrying the central `T_2k`, ascending, starting with 0.
    pub core: Vec<usize>,
    /// `CNOT(b)` on qubits `(0, p)`.
    pub cnots: Vec<(Gate, usize)>,
    /// The gate `G(a)` on an invertible position.
    pub gammas: Vec<(OneQubit, usize)>,
    pub paulis: Vec<(OneQubit, usize)>,
}

impl UniversalDecomposition {
    /// `L`, then the core, then `L^-1`, then the Pauli layer, where `L` is
    /// the CNOT layer followed by the `G(a)` layer.
    pub fn circuit(&self) -> Circuit {
        let mut c = Circuit::new(self.width);
        for &(g, p) in &self.cnots {
            c.push(g, &[0, p]).expect("in range");
        }
        for &(g, q) in &self.gammas {
            c.push(Gate::One(g), &[q]).expect("in range");
        }
        let core = if self.k == 1 { Gate::Swap } else { Gate::T(2 * self.k) };
        c.push(core, &self.core).expect("in range");
        for &(g, q) in self.gammas.iter().rev() {
            c.push(Gate::One(g.inverse()), &[q]).expect("in range");
        }
        for &(g, p) in self.cnots.iter().rev() {
            c.push(g, &[0, p]).expect("in range");
        }
        for &(g, q) in &self.paulis {
            c.push(Gate::One(g), &[q]).expect("in range");
        }
        c
    }
}

/// Decompose a tableau whose matrix is `I + w w*` with `w_0 = 1`.
pub fn decompose_universal(u: &Tableau) -> Result<UniversalDecomposition, Error> {
    let n = u.width();
    if n < 2 {
        return Err(Error::MalformedInput("universal form needs at least two qubits".into()));
    }
    let mut w = vec![RingElem::ONE];
    w.extend((1..n).map(|i| u.m(i, 0)));
    if u.matrix() != rank_one_update(&w) {
        return Err(Error::MalformedInput("matrix is not I + w w* with leading entry 1".into()));
    }
    let core: Vec<usize> = (0..n).filter(|&i| w[i].is_invertible()).collect();
    if core.len() % 2 != 0 {
        return Err(Error::MalformedInput("odd number of invertible entries".into()));
    }
    let cnots = (1..n)
        .filter(|&p| !w[p].is_zero() && !w[p].is_invertible())
        .map(|p| (catalog::cnot_b(w[p]).expect("singular nonzero"), p))
        .collect();
    let gammas = core[1..]
        .iter()
        .map(|&i| (OneQubit::from_parts(w[i], false, false).expect("invertible"), i))
        .filter(|(g, _)| *g != OneQubit::ID)
        .collect();
    let mut d = UniversalDecomposition { width: n, k: core.len() / 2, core, cnots, gammas, paulis: Vec::new() };
    let fix = d.circuit().tableau()?.inverse().compose(u)?;
    d.paulis = pauli_layer(&fix).ok_or_else(|| Error::MalformedInput("residual is not a Pauli layer".into()))?;
    Ok(d)
}

/// Per-qubit Paulis of a tableau with identity matrix; None otherwise.
fn pauli_layer(t: &Tableau) -> Option<Vec<(OneQubit, usize)>> {
    let n = t.width();
    if t.matrix() != Tableau::identity(n).matrix() {
        return None;
    }
    Some(
        (0..n)
            .map(|q| (OneQubit::from_parts(RingElem::ONE, t.phase(2 * q), t.phase(2 * q + 1)).expect("unit"), q))
            .filter(|(g, _)| *g != OneQubit::ID)
            .collect(),
    )
}

/// Generators read off row `row`: `G(a)` for each distinct invertible entry
/// (phases from the row), `CNOT(b)` for each distinct nonzero singular entry,
/// and `T_2k` when the row has `2k - 1 >= 3` invertible entries.
pub fn extract_generators(t: &Tableau, row: usize) -> Result<Vec<Gate>, Error> {
    let n = t.width();
    if row >= n {
        return Err(Error::MalformedInput(format!("row {row} out of range for width {n}")));
    }
    let mut out = Vec::new();
    let mut inv = 0;
    for j in 0..n {
        let e = t.m(row, j);
        let g = if e.is_invertible() {
            inv += 1;
            Gate::One(OneQubit::from_parts(e, t.phase(2 * row), t.phase(2 * row + 1)).expect("invertible"))
        } else if let Some(g) = catalog::cnot_b(e) {
            g
        } else {
            continue;
        };
        if !out.contains(&g) {
            out.push(g);
        }
    }
    if inv >= 3 {
        out.push(Gate::T(inv + 1));
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct SynthesisResult {
    pub circuit: Circuit,
    pub class: &'static GateClass,
    /// Trailing identity-initialised qubits; the circuit implements `t (x) I`.
    pub ancillas: usize,
}

impl SynthesisResult {
    /// Re-evaluate the circuit and strict-project the ancillas away.
    pub fn tableau(&self) -> Result<Tableau, Error> {
        let t = self.circuit.tableau()?;
        if self.ancillas == 0 {
            return Ok(t);
        }
        let kept: Vec<usize> = (0..t.width() - self.ancillas).collect();
        t.project_ancilla(&kept)
    }
}

/// Gates a synthesized circuit for `class` may contain.
///
/// The T4+P+R_P classes also admit C(P,P). It is only emitted for coupling
/// layers with an odd-degree qubit, which T4, Paulis and R_P cannot reach
/// without non-clean ancillas.
pub fn synthesis_alphabet(class: &GateClass) -> Vec<Gate> {
    let mut a = class.generators.clone();
    a.push(Gate::Swap);
    if let Some(p) = orthogonal_letter(class) {
        a.push(Gate::C(p, p));
    }
    a
}

/// Synthesize `t` over the generator alphabet of its class.
pub fn synthesize(t: &Tableau) -> Result<SynthesisResult, Error> {
    let class = lattice().classify(t)?;
    let (raw, ancillas) = match class.invariant {
        Invariant::Permutation(_) => (permutation_circuit(t)?, 0),
        Invariant::Subring(s) => match s {
            Subring::Full => (general_circuit(t)?, 0),
            Subring::RE => with_ancillas(t, egalitarian_circuit)?,
            Subring::RZ | Subring::RXZ => (cnot_elimination(t)?, 0),
            Subring::Trivial | Subring::SelfConjZ => with_ancillas(t, t4_elimination)?,
            Subring::RX | Subring::RXY | Subring::SelfConjX => rotated(t, Pauli::X)?,
            Subring::RY | Subring::RYZ | Subring::SelfConjY => rotated(t, Pauli::Y)?,
        },
    };
    let circuit = lower(&raw, class)?;
    let want = t.tensor(&Tableau::identity(ancillas));
    if circuit.tableau()? != want {
        return Err(Error::Internal(format!("synthesis for {} does not reproduce the input", class.name)));
    }
    Ok(SynthesisResult { circuit, class, ancillas })
}

/// Working tableau plus the gates applied on its right.
struct Work {
    t: Tableau,
    applied: Circuit,
}

impl Work {
    fn new(t: Tableau) -> Work {
        let n = t.width();
        Work { t, applied: Circuit::new(n) }
    }

    fn apply(&mut self, g: Gate, qs: &[usize]) -> Result<(), Error> {
        let e = g.tableau()?.embed(self.t.width(), qs)?;
        self.t = self.t.compose(&e)?;
        self.applied.push(g, qs)?;
        Ok(())
    }

    /// The remainder's circuit, then the applied gates undone.
    fn finish(self) -> Result<Circuit, Error> {
        let mut c = permutation_circuit(&self.t)?;
        c.extend(&self.applied.inverse()?)?;
        Ok(c)
    }
}

/// Retry an elimination on `t (x) I_a` for growing `a`.
fn with_ancillas(
    t: &Tableau,
    f: fn(&Tableau) -> Result<Option<Circuit>, Error>,
) -> Result<(Circuit, usize), Error> {
    for a in 0..=MAX_ANCILLAS {
        if let Some(c) = f(&t.tensor(&Tableau::identity(a)))? {
            return Ok((c, a));
        }
    }
    Err(Error::Internal(format!("elimination needs more than {MAX_ANCILLAS} ancillas")))
}

/// The wire permutation sending qubit `i` to `perm[i]`, as SWAPs.
fn swap_network(perm: &[usize]) -> Circuit {
    let n = perm.len();
    let mut c = Circuit::new(n);
    let mut pos: Vec<usize> = (0..n).collect();
    let mut at: Vec<usize> = (0..n).collect();
    let mut src = vec![0; n];
    for (i, &p) in perm.iter().enumerate() {
        src[p] = i;
    }
    for p in 0..n {
        let q = pos[src[p]];
        if q != p {
            c.push(Gate::Swap, &[p, q]).expect("in range");
            let (a, b) = (at[p], at[q]);
            at.swap(p, q);
            pos[a] = q;
            pos[b] = p;
        }
    }
    c
}

/// Degenerate and P-degenerate forms: single-qubit layer, C(P,P) layer,
/// then the qubit permutation.
pub fn permutation_circuit(t: &Tableau) -> Result<Circuit, Error> {
    let n = t.width();
    let f = permutation_form(t).ok_or_else(|| Error::Internal("no permutation form".into()))?;
    let mut c = Circuit::new(n);
    for (i, &g) in f.diag.iter().enumerate() {
        if g != OneQubit::ID {
            c.push(Gate::One(g), &[i])?;
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let e = t.m(i, f.perm[j]);
            if e.is_zero() {
                continue;
            }
            let p = [Pauli::X, Pauli::Y, Pauli::Z]
                .into_iter()
                .find(|&p| invariants::coupling(p) == e)
                .ok_or_else(|| Error::Internal(format!("coupling {e} is not C(P,P)")))?;
            c.push(Gate::C(p, p), &[i, j])?;
        }
    }
    c.extend(&swap_network(&f.perm))?;
    if c.tableau()? != *t {
        return Err(Error::Internal("permutation form does not round-trip".into()));
    }
    Ok(c)
}

fn d_bits(t: &Tableau, r: usize) -> Vec<usize> {
    (0..t.width()).filter(|&j| t.m(r, j).d() == 1).collect()
}

/// Z-preserving case: Gaussian elimination of the Z block with C(X,Z) and
/// SWAP on the right, leaving a Z-degenerate remainder.
fn cnot_elimination(t: &Tableau) -> Result<Circuit, Error> {
    let n = t.width();
    let mut w = Work::new(t.clone());
    for r in 0..n {
        let c = *d_bits(&w.t, r)
            .iter()
            .find(|&&c| c >= r)
            .ok_or_else(|| Error::Internal("singular Z block".into()))?;
        if c != r {
            w.apply(Gate::Swap, &[r, c])?;
        }
        for k in d_bits(&w.t, r) {
            if k != r {
                w.apply(Gate::CNOT, &[r, k])?;
            }
        }
    }
    w.finish()
}

/// Apply T4 to three columns in `ones` and one in `zeros`, returning false
/// when no zero column is available.
fn t4_step(w: &mut Work, ones: &[usize], zeros: &[usize]) -> Result<bool, Error> {
    let Some(&z) = zeros.first() else { return Ok(false) };
    let mut qs = vec![ones[0], ones[1], ones[2], z];
    qs.sort_unstable();
    w.apply(Gate::T4, &qs)?;
    Ok(true)
}

/// Z-orthogonal case: T4 steps reduce each row of the (orthogonal) Z block
/// to a single one, SWAP moves it onto the diagonal. None when a row runs
/// out of zero columns.
fn t4_elimination(t: &Tableau) -> Result<Option<Circuit>, Error> {
    let n = t.width();
    let mut w = Work::new(t.clone());
    for r in 0..n {
        loop {
            let ones = d_bits(&w.t, r);
            if ones.len() == 1 {
                break;
            }
            let zeros: Vec<usize> = (r..n).filter(|j| !ones.contains(j)).collect();
            let before = ones.len();
            if !t4_step(&mut w, &ones, &zeros)? {
                return Ok(None);
            }
            debug_assert_eq!(d_bits(&w.t, r).len() + 2, before);
        }
        let c = d_bits(&w.t, r)[0];
        if c != r {
            w.apply(Gate::Swap, &[r, c])?;
        }
    }
    w.finish().map(Some)
}

/// Egalitarian case over R_E = F4: Gamma gates scale a row's entries to I,
/// T4 steps remove pairs, SWAP places the pivot. The remainder is a Pauli
/// layer.
///
/// A row can fill every free column (the three-qubit gate with `alpha` on
/// the diagonal and I elsewhere does). Then the three leading entries are
/// scaled to `(I, I, w)` and `T4 Gamma_z T4` is applied with any fourth
/// column `z`: that product is `I + w^2 u u^T` on the three columns `u` and
/// leaves column `z` alone, taking the entries to `(0, 0, w^2)`.
fn egalitarian_circuit(t: &Tableau) -> Result<Option<Circuit>, Error> {
    let n = t.width();
    let gamma = OneQubit::from_name("GAMMA_PPP").expect("name");
    let mut w = Work::new(t.clone());
    let support = |w: &Work, r: usize| -> Vec<usize> { (r..n).filter(|&j| !w.t.m(r, j).is_zero()).collect() };
    for r in 0..n {
        loop {
            let ones = support(&w, r);
            for &j in &ones {
                let e = w.t.m(r, j);
                if e != RingElem::ONE {
                    let g = OneQubit::from_parts(e.inverse().expect("unit"), false, false).expect("unit");
                    w.apply(Gate::One(g), &[j])?;
                }
            }
            if ones.len() == 1 {
                break;
            }
            let zeros: Vec<usize> = (r..n).filter(|j| !ones.contains(j)).collect();
            if !t4_step(&mut w, &ones, &zeros)? {
                if n < 4 {
                    return Ok(None);
                }
                let u = &ones[..3];
                let z = (0..n).find(|j| !u.contains(j)).expect("four columns");
                let mut qs = vec![u[0], u[1], u[2], z];
                qs.sort_unstable();
                w.apply(Gate::One(gamma), &[u[2]])?;
                w.apply(Gate::T4, &qs)?;
                w.apply(Gate::One(gamma), &[z])?;
                w.apply(Gate::T4, &qs)?;
            }
            debug_assert_eq!(support(&w, r).len() + 2, ones.len());
        }
        let c = support(&w, r)[0];
        if c != r {
            w.apply(Gate::Swap, &[r, c])?;
        }
    }
    w.finish().map(Some)
}

/// Generic symplectic elimination for the ALL class, one qubit at a time:
/// turn the X-image into X_i, then the Z-image into Z_i.
fn general_circuit(t: &Tableau) -> Result<Circuit, Error> {
    let n = t.width();
    let h = Gate::One(OneQubit::from_name("THETA_XpZ").expect("name"));
    let s = Gate::One(OneQubit::from_name("RZ").expect("name"));
    let sx = Gate::One(OneQubit::from_name("RX").expect("name"));
    let mut w = Work::new(t.clone());
    let letter = |w: &Work, r: usize, q: usize| w.t.row(r).get(q);
    for i in 0..n {
        for q in i..n {
            match letter(&w, 2 * i, q) {
                Pauli::Z => w.apply(h, &[q])?,
                Pauli::Y => w.apply(s, &[q])?,
                _ => {}
            }
        }
        let p = (i..n)
            .find(|&q| letter(&w, 2 * i, q) == Pauli::X)
            .ok_or_else(|| Error::Internal("empty X image".into()))?;
        if p != i {
            w.apply(Gate::Swap, &[i, p])?;
        }
        for q in i + 1..n {
            if letter(&w, 2 * i, q) == Pauli::X {
                w.apply(Gate::CNOT, &[q, i])?;
            }
        }
        if letter(&w, 2 * i + 1, i) == Pauli::Y {
            w.apply(sx, &[i])?;
        }
        for q in i + 1..n {
            match letter(&w, 2 * i + 1, q) {
                Pauli::X => w.apply(h, &[q])?,
                Pauli::Y => w.apply(sx, &[q])?,
                _ => {}
            }
            if letter(&w, 2 * i + 1, q) == Pauli::Z {
                w.apply(Gate::CNOT, &[i, q])?;
            }
        }
    }
    w.finish()
}

/// X- and Y-family subring classes: rotate into the Z family with a Gamma
/// layer, synthesize there, and rotate each gate back.
fn rotated(t: &Tableau, p: Pauli) -> Result<(Circuit, usize), Error> {
    let gamma = OneQubit::from_name("GAMMA_PPP").expect("name");
    // Heisenberg picture: the layer must send Z to P and the family's second
    // preserved letter to X.
    let w = if p == Pauli::X { gamma } else { gamma.inverse() };
    let n = t.width();
    let layer = |g: OneQubit| (0..n).fold(Tableau::identity(0), |acc, _| acc.tensor(&g.tableau()));
    let inner = layer(w).compose(t)?.compose(&layer(w.inverse()))?;
    let (c, ancillas) = match invariants::entry_mask(&inner) & !Subring::RZ.mask() {
        0 if invariants::satisfies_subring(&inner, Subring::SelfConjZ) => with_ancillas(&inner, t4_elimination)?,
        0 => (cnot_elimination(&inner)?, 0),
        _ => return Err(Error::Internal("rotation did not reach the Z family".into())),
    };
    Ok((conjugate_circuit(&c, w)?, ancillas))
}

/// Each gate `g` replaced by `w^-1 g w` on its qubits, as catalog gates.
fn conjugate_circuit(c: &Circuit, w: OneQubit) -> Result<Circuit, Error> {
    let mut out = Circuit::new(c.width());
    for op in c.ops() {
        match op.gate {
            Gate::One(g) => {
                out.push(Gate::One(w.inverse().then(g).then(w)), &op.qubits)?;
            }
            g => {
                let k = g.arity();
                let lw = (0..k).fold(Tableau::identity(0), |acc, _| acc.tensor(&w.inverse().tableau()));
                let rw = (0..k).fold(Tableau::identity(0), |acc, _| acc.tensor(&w.tableau()));
                let target = lw.compose(&g.tableau()?)?.compose(&rw)?;
                let (g2, fix) = match_up_to_paulis(g, &target)?;
                out.push(g2, &op.qubits)?;
                for (pg, q) in fix {
                    out.push(Gate::One(pg), &[op.qubits[q]])?;
                }
            }
        }
    }
    Ok(out)
}

/// A gate of the same kind as `g` and a Pauli layer whose product is `target`.
fn match_up_to_paulis(g: Gate, target: &Tableau) -> Result<(Gate, Vec<(OneQubit, usize)>), Error> {
    let letters = [Pauli::X, Pauli::Y, Pauli::Z];
    let candidates: Vec<Gate> = match g {
        Gate::C(..) => letters.iter().flat_map(|&p| letters.iter().map(move |&q| Gate::C(p, q))).collect(),
        other => vec![other],
    };
    for c in candidates {
        let fix = c.tableau()?.inverse().compose(target)?;
        if let Some(layer) = pauli_layer(&fix) {
            return Ok((c, layer));
        }
    }
    Err(Error::Internal(format!("no rotated form of {g}")))
}

/// Shortest two-qubit words over a class alphabet, by tableau key.
struct TwoQubitWords {
    words: HashMap<u128, Vec<(Gate, [usize; 2])>>,
}

fn two_qubit_words(class: &GateClass) -> &'static TwoQubitWords {
    static CACHE: OnceLock<Vec<OnceLock<TwoQubitWords>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| (0..lattice().len()).map(|_| OnceLock::new()).collect());
    cache[class.id].get_or_init(|| {
        let mut steps: Vec<(Gate, [usize; 2], Tableau)> = Vec::new();
        for g in synthesis_alphabet(class) {
            let t = g.tableau().expect("catalog");
            match g.arity() {
                1 => {
                    for q in 0..2 {
                        steps.push((g, [q, q], t.embed(2, &[q]).expect("embed")));
                    }
                }
                2 => {
                    steps.push((g, [0, 1], t.clone()));
                    steps.push((g, [1, 0], t.embed(2, &[1, 0]).expect("embed")));
                }
                _ => {}
            }
        }
        let id = Tableau::identity(2);
        let mut words = HashMap::from([(id.key(), Vec::new())]);
        let mut queue = VecDeque::from([id]);
        while let Some(cur) = queue.pop_front() {
            let base = words[&cur.key()].clone();
            for (g, qs, st) in &steps {
                let next = cur.compose(st).expect("width 2");
                words.entry(next.key()).or_insert_with(|| {
                    queue.push_back(next.clone());
                    let mut w = base.clone();
                    w.push((*g, *qs));
                    w
                });
            }
        }
        TwoQubitWords { words }
    })
}

fn orthogonal_letter(class: &GateClass) -> Option<Pauli> {
    match class.invariant {
        Invariant::Subring(Subring::SelfConjX) => Some(Pauli::X),
        Invariant::Subring(Subring::SelfConjY) => Some(Pauli::Y),
        Invariant::Subring(Subring::SelfConjZ) => Some(Pauli::Z),
        _ => None,
    }
}

/// Four-qubit circuit over T4, R_P and Paulis equal to C(P,P) on the pairs
/// of qubits 1, 2, 3; qubit 0 is left alone.
pub fn triangle_gadget(p: Pauli) -> Result<Circuit, Error> {
    let rot = |dag: bool| Gate::One(OneQubit::from_name(&format!("R{}{}", p.letter(), if dag { "dag" } else { "" })).expect("rotation"));
    let all = [0, 1, 2, 3];
    let base = Circuit::new(4)
        .with(Gate::T4, &all)
        .with(rot(true), &[0])
        .with(Gate::T4, &all)
        .with(rot(false), &[1])
        .with(rot(false), &[2])
        .with(rot(false), &[3]);
    let want = Circuit::new(4).with(Gate::C(p, p), &[1, 2]).with(Gate::C(p, p), &[1, 3]).with(Gate::C(p, p), &[2, 3]);
    let want = want.tableau()?;
    let paulis = ["ID", "X", "Y", "Z"].map(|n| OneQubit::from_name(n).expect("Pauli"));
    for k in 0..256usize {
        let mut c = base.clone();
        for q in 0..4 {
            let g = paulis[k >> (2 * q) & 3];
            if g != OneQubit::ID {
                c.push(Gate::One(g), &[q])?;
            }
        }
        if c.tableau()? == want {
            return Ok(c);
        }
    }
    Err(Error::Internal(format!("no triangle gadget for C({0},{0})", p.letter())))
}

/// Replace each run of C(P,P) gates whose coupling graph has even degree at
/// every qubit by triangle gadgets. Such a graph is a sum of triangles
/// through one fixed vertex.
fn expand_couplings(c: &Circuit, p: Pauli) -> Result<Circuit, Error> {
    let n = c.width();
    if n < 4 {
        return Ok(c.clone());
    }
    let gadget = triangle_gadget(p)?;
    let ops = c.ops();
    let mut out = Circuit::new(n);
    let mut i = 0;
    while i < ops.len() {
        if ops[i].gate != Gate::C(p, p) {
            out.push(ops[i].gate, &ops[i].qubits)?;
            i += 1;
            continue;
        }
        let start = i;
        let mut adj = vec![vec![false; n]; n];
        while i < ops.len() && ops[i].gate == Gate::C(p, p) {
            let (a, b) = (ops[i].qubits[0], ops[i].qubits[1]);
            adj[a][b] ^= true;
            adj[b][a] ^= true;
            i += 1;
        }
        let even = adj.iter().all(|row| row.iter().filter(|&&e| e).count() % 2 == 0);
        if !even {
            for op in &ops[start..i] {
                out.push(op.gate, &op.qubits)?;
            }
            continue;
        }
        let Some(v) = (0..n).find(|&v| adj[v].iter().any(|&e| e)) else { continue };
        for a in 0..n {
            for b in a + 1..n {
                if a != v && b != v && adj[a][b] {
                    let spare = (0..n).find(|q| ![v, a, b].contains(q)).expect("four qubits");
                    out.extend(&gadget.remap(n, &[spare, v, a, b])?)?;
                }
            }
        }
    }
    Ok(out)
}

/// Rewrite a circuit over the class alphabet: merge single-qubit runs and
/// spell them with the class's single-qubit generators; spell two-qubit
/// gates outside the alphabet as shortest words. In the T4+P+R_P classes,
/// C(P,P) layers with even coupling graphs become T4 gadgets.
pub fn lower(c: &Circuit, class: &GateClass) -> Result<Circuit, Error> {
    let expanded;
    let c = match orthogonal_letter(class) {
        Some(p) => {
            expanded = expand_couplings(c, p)?;
            &expanded
        }
        None => c,
    };
    let n = c.width();
    let words = subgroup::shortest_words(&class.one_qubit_generators());
    let alphabet = synthesis_alphabet(class);
    let mut out = Circuit::new(n);
    let mut pending = vec![OneQubit::ID; n];
    let flush = |out: &mut Circuit, pending: &mut [OneQubit], q: usize| -> Result<(), Error> {
        let g = std::mem::replace(&mut pending[q], OneQubit::ID);
        let word = words[g.index()]
            .as_ref()
            .ok_or_else(|| Error::Internal(format!("{} is outside class {}", g.name(), class.name)))?;
        for &h in word {
            out.push(Gate::One(h), &[q])?;
        }
        Ok(())
    };
    for op in c.ops() {
        if let Gate::One(g) = op.gate {
            pending[op.qubits[0]] = pending[op.qubits[0]].then(g);
            continue;
        }
        for &q in &op.qubits {
            flush(&mut out, &mut pending, q)?;
        }
        if alphabet.contains(&op.gate) {
            out.push(op.gate, &op.qubits)?;
        } else if op.gate.arity() == 2 {
            let key = op.gate.tableau()?.key();
            let word = two_qubit_words(class)
                .words
                .get(&key)
                .ok_or_else(|| Error::Internal(format!("{} is outside class {}", op.gate, class.name)))?;
            for &(g, [a, b]) in word {
                if g.arity() == 1 {
                    out.push(g, &[op.qubits[a]])?;
                } else {
                    out.push(g, &[op.qubits[a], op.qubits[b]])?;
                }
            }
        } else {
            return Err(Error::Internal(format!("{} is outside class {}", op.gate, class.name)));
        }
    }
    for q in 0..n {
        flush(&mut out, &mut pending, q)?;
    }
    Ok(out)
}

/// `T_m` written with T4 and SWAP.
pub fn factor_t2k(m: usize) -> Result<SynthesisResult, Error> {
    synthesize(&catalog::t2k(m)?)
}

/// Cores of the two-qubit canonical form: optional SWAP, then optional C(P,Q).
fn canonical_cores() -> Vec<(bool, Option<Gate>)> {
    let letters = [Pauli::X, Pauli::Y, Pauli::Z];
    let mut v = Vec::with_capacity(20);
    for swap in [false, true] {
        v.push((swap, None));
        for p in letters {
            for q in letters {
                v.push((swap, Some(Gate::C(p, q))));
            }
        }
    }
    v
}

fn core_circuit(swap: bool, c: Option<Gate>) -> Circuit {
    let mut circ = Circuit::new(2);
    if swap {
        circ.push(Gate::Swap, &[0, 1]).expect("two qubits");
    }
    if let Some(g) = c {
        circ.push(g, &[0, 1]).expect("two qubits");
    }
    circ
}

/// Optional SWAP, optional C(P,Q), then one single-qubit gate per qubit
/// (identities omitted).
pub fn canonical_2q(t: &Tableau) -> Result<Circuit, Error> {
    if t.width() != 2 {
        return Err(Error::WidthMismatch(2, t.width()));
    }
    for (swap, c) in canonical_cores() {
        let mut circ = core_circuit(swap, c);
        let rest = circ.tableau()?.inverse().compose(t)?;
        if !rest.m(0, 1).is_zero() || !rest.m(1, 0).is_zero() {
            continue;
        }
        for q in 0..2 {
            let g = OneQubit::from_parts(rest.m(q, q), rest.phase(2 * q), rest.phase(2 * q + 1))
                .ok_or_else(|| Error::Internal("diagonal entry not invertible".into()))?;
            if g != OneQubit::ID {
                circ.push(Gate::One(g), &[q])?;
            }
        }
        return Ok(circ);
    }
    Err(Error::Internal("no canonical form".into()))
}

/// Every canonical two-qubit circuit, in enumeration order.
pub fn canonical_forms_2q() -> Vec<Circuit> {
    let mut out = Vec::with_capacity(11520);
    for (swap, c) in canonical_cores() {
        for g0 in OneQubit::all() {
            for g1 in OneQubit::all() {
                let mut circ = core_circuit(swap, c);
                for (q, g) in [(0, g0), (1, g1)] {
                    if g != OneQubit::ID {
                        circ.push(Gate::One(g), &[q]).expect("two qubits");
                    }
                }
                out.push(circ);
            }
        }
    }
    out
}

/// Number of distinct tableaux among the canonical forms.
pub fn count_canonical_2q() -> usize {
    let keys: std::collections::HashSet<u128> = canonical_forms_2q()
        .iter()
        .map(|c| c.tableau().expect("catalog").key())
        .collect();
    keys.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(name: &str) -> Tableau {
        name.parse::<Gate>().unwrap().tableau().unwrap()
    }

    #[test]
    fn universal_of_identity_is_swap() {
        assert_eq!(universal_construction(&Tableau::identity(1)), tab("SWAP"));
    }

    #[test]
    fn universal_of_t4() {
        let u = universal_construction(&tab("T4"));
        assert_eq!(u.matrix(), rank_one_update(&universal_vector(&tab("T4"))));
        let w = universal_vector(&tab("T4"));
        assert_eq!(w, vec![RingElem::ONE, RingElem::ZERO, RingElem::ONE, RingElem::ONE, RingElem::ONE]);
        let d = decompose_universal(&u).unwrap();
        assert_eq!(d.k, 2);
        assert!(d.cnots.is_empty());
        assert!(d.gammas.is_empty());
        assert_eq!(d.circuit().tableau().unwrap(), u);
    }

    #[test]
    fn swap_decomposes_to_itself() {
        let d = decompose_universal(&tab("SWAP")).unwrap();
        assert_eq!(d.k, 1);
        assert!(d.cnots.is_empty() && d.gammas.is_empty() && d.paulis.is_empty());
    }

    #[test]
    fn universal_of_cxz_has_cnot() {
        let u = universal_construction(&tab("CXZ"));
        let d = decompose_universal(&u).unwrap();
        assert_eq!(d.cnots.len(), 1);
        assert_eq!(d.circuit().tableau().unwrap(), u);
    }

    #[test]
    fn extraction_examples() {
        let g = extract_generators(&tab("CZZ"), 0).unwrap();
        assert_eq!(g, vec![Gate::One(OneQubit::ID), Gate::C(Pauli::Z, Pauli::Z)]);
        let g = extract_generators(&tab("T4"), 0).unwrap();
        assert_eq!(g, vec![Gate::One(OneQubit::ID), Gate::T4]);
        let g = extract_generators(&tab("RZ"), 0).unwrap();
        assert_eq!(g, vec![Gate::one("RZ")]);
        assert!(extract_generators(&tab("RZ"), 1).is_err());
    }

    #[test]
    fn named_syntheses() {
        for name in ["CXZ", "CZZ", "T4", "SWAP", "GAMMA_PPP", "THETA_XpZ", "CYX", "CZY", "ID"] {
            let t = tab(name);
            let r = synthesize(&t).unwrap();
            assert_eq!(r.tableau().unwrap(), t, "{name}");
        }
    }

    #[test]
    fn t6_factors() {
        let r = factor_t2k(6).unwrap();
        assert!(r.circuit.gates().all(|g| g == Gate::T4 || g == Gate::Swap || matches!(g, Gate::One(_))));
        assert_eq!(r.tableau().unwrap(), catalog::t2k(6).unwrap());
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(canonical_2q(&tab("SWAP")).unwrap(), Circuit::new(2).with(Gate::Swap, &[0, 1]));
        let cc = tab("CXZ").compose(&tab("CXZ")).unwrap();
        assert!(canonical_2q(&cc).unwrap().is_empty());
        let c = canonical_2q(&tab("CYX")).unwrap();
        assert_eq!(c, Circuit::new(2).with(Gate::C(Pauli::Y, Pauli::X), &[0, 1]));
        assert!(canonical_2q(&Tableau::identity(3)).is_err());
    }
}
