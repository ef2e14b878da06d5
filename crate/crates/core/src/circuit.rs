//! Circuits: ordered gate applications on indexed qubits.

use std::fmt;
use std::str::FromStr;

use crate::catalog::Gate;
use crate::error::Error;
use crate::tableau::Tableau;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Op {
    pub gate: Gate,
    /// 0-based qubit indices.
    pub qubits: Vec<usize>,
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Circuit {
    n: usize,
    ops: Vec<Op>,
}

impl Circuit {
    pub fn new(n: usize) -> Circuit {
        Circuit { n, ops: Vec::new() }
    }

    pub fn width(&self) -> usize {
        self.n
    }

    pub fn ops(&self) -> &[Op] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// Append `gate` on 0-based `qubits`.
    pub fn push(&mut self, gate: Gate, qubits: &[usize]) -> Result<&mut Circuit, Error> {
        check_qubits(gate, qubits, self.n)?;
        self.ops.push(Op { gate, qubits: qubits.to_vec() });
        Ok(self)
    }

    /// Builder form of `push`; panics on bad indices.
    pub fn with(mut self, gate: Gate, qubits: &[usize]) -> Circuit {
        self.push(gate, qubits).expect("valid qubits");
        self
    }

    pub fn extend(&mut self, other: &Circuit) -> Result<(), Error> {
        if other.n != self.n {
            return Err(Error::WidthMismatch(self.n, other.n));
        }
        self.ops.extend(other.ops.iter().cloned());
        Ok(())
    }

    /// The circuit with qubit `q` relabelled to `map[q]` in a width `n` register.
    pub fn remap(&self, n: usize, map: &[usize]) -> Result<Circuit, Error> {
        let mut c = Circuit::new(n);
        for op in &self.ops {
            let qs: Vec<usize> = op.qubits.iter().map(|&q| map[q]).collect();
            c.push(op.gate, &qs)?;
        }
        Ok(c)
    }

    /// Reverse order with each gate inverted.
    pub fn inverse(&self) -> Result<Circuit, Error> {
        let mut c = Circuit::new(self.n);
        for op in self.ops.iter().rev() {
            match op.gate {
                Gate::One(g) => c.push(Gate::One(g.inverse()), &op.qubits)?,
                g => c.push(g, &op.qubits)?,
            };
        }
        Ok(c)
    }

    pub fn tableau(&self) -> Result<Tableau, Error> {
        let mut t = Tableau::identity(self.n);
        for op in &self.ops {
            let g = op.gate.tableau()?.embed(self.n, &op.qubits)?;
            t = t.compose(&g)?;
        }
        Ok(t)
    }

    pub fn gates(&self) -> impl Iterator<Item = Gate> + '_ {
        self.ops.iter().map(|o| o.gate)
    }
}

fn check_qubits(gate: Gate, qubits: &[usize], n: usize) -> Result<(), Error> {
    let bad = |detail: String| Error::BadQubits { gate: gate.to_string(), detail };
    if qubits.len() != gate.arity() {
        return Err(bad(format!("expected {} qubits, got {}", gate.arity(), qubits.len())));
    }
    for (i, &q) in qubits.iter().enumerate() {
        if q >= n {
            return Err(bad(format!("qubit {} out of range for width {n}", q + 1)));
        }
        if qubits[..i].contains(&q) {
            return Err(bad(format!("qubit {} repeated", q + 1)));
        }
    }
    Ok(())
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for op in &self.ops {
            match op.gate {
                Gate::T(m) if m != 4 => write!(f, "T2K {m}")?,
                g => write!(f, "{g}")?,
            }
            for q in &op.qubits {
                write!(f, " {}", q + 1)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl Circuit {
    /// Parse the line format `<GATE> q1 [q2 ..]` (1-based). The register width
    /// is the largest index used unless `n` is given.
    pub fn parse_with_width(text: &str, n: Option<usize>) -> Result<Circuit, Error> {
        let mut parsed = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut toks = line.split_whitespace();
            let name = toks.next().expect("non-empty line");
            let nums = toks
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("line {}: bad index {t:?}", lineno + 1)))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let (gate, qs) = if name == "T2K" {
                let (&k, qs) = nums
                    .split_first()
                    .ok_or_else(|| Error::Parse(format!("line {}: T2K needs an arity", lineno + 1)))?;
                // `T2K <arity> q..` and `T2K <half> q1..q2k` are both accepted.
                let arity = if qs.len() == k { k } else if qs.len() == 2 * k { 2 * k } else { 0 };
                if arity < 2 || arity % 2 != 0 {
                    return Err(Error::Parse(format!("line {}: bad T2K arity", lineno + 1)));
                }
                (Gate::T(arity), qs.to_vec())
            } else {
                (name.parse::<Gate>()?, nums)
            };
            if qs.contains(&0) {
                return Err(Error::Parse(format!("line {}: indices are 1-based", lineno + 1)));
            }
            parsed.push((gate, qs.iter().map(|q| q - 1).collect::<Vec<_>>()));
        }
        let used = parsed.iter().flat_map(|(_, q)| q.iter().map(|x| x + 1)).max().unwrap_or(0);
        let width = n.unwrap_or(used);
        let mut c = Circuit::new(width);
        for (g, qs) in parsed {
            c.push(g, &qs)?;
        }
        Ok(c)
    }
}

impl FromStr for Circuit {
    type Err = Error;
    fn from_str(text: &str) -> Result<Circuit, Error> {
        Circuit::parse_with_width(text, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let c: Circuit = "CXZ 1 2\nH 3\nT2K 6 1 2 3 4 5 6\nT4 1 2 3 4\n".parse().unwrap();
        assert_eq!(c.width(), 6);
        assert_eq!(c.to_string().parse::<Circuit>().unwrap(), c);
        let half: Circuit = "T2K 3 1 2 3 4 5 6".parse().unwrap();
        assert_eq!(half.ops()[0].gate, Gate::T(6));
    }

    #[test]
    fn bad_indices() {
        assert!("CXZ 1 1".parse::<Circuit>().is_err());
        assert!("CXZ 0 1".parse::<Circuit>().is_err());
        assert!("H 1 2".parse::<Circuit>().is_err());
        assert!(Circuit::parse_with_width("H 3", Some(2)).is_err());
    }

    #[test]
    fn involution_cancels() {
        let c = Circuit::new(2).with(Gate::CNOT, &[0, 1]).with(Gate::CNOT, &[0, 1]);
        assert!(c.tableau().unwrap().is_identity());
        assert!(Circuit::new(3).tableau().unwrap().is_identity());
    }
}
