use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::qseries::DimVector;
use crate::quiver::Quiver;
use crate::Rational;

/// Creation modes `α^{(j)}_{−n}` as sorted `(j, n)` pairs, `n ≥ 1`.
pub type Modes = Vec<(usize, u32)>;

/// `α^{(j_1)}_{−n_1} ⋯ α^{(j_p)}_{−n_p} |β⟩`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FockMonomial {
    pub label: DimVector,
    pub modes: Modes,
}

impl FockMonomial {
    pub fn new(label: DimVector, mut modes: Modes) -> Self {
        assert!(modes.iter().all(|&(_, n)| n >= 1), "creation modes start at 1");
        modes.sort_unstable();
        FockMonomial { label, modes }
    }

    pub fn vacuum(label: DimVector) -> Self {
        FockMonomial {
            label,
            modes: Vec::new(),
        }
    }

    /// Twice the weight: `χ(β,β) + 2 Σ n`.
    pub fn twice_weight(&self, q: &Quiver) -> i64 {
        q.chi_self(&self.label) + 2 * mode_sum(&self.modes)
    }
}

pub(crate) fn mode_sum(modes: &Modes) -> i64 {
    modes.iter().map(|&(_, n)| i64::from(n)).sum()
}

/// Finite linear combination of Fock monomials sharing one lattice label.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FockVector {
    label: DimVector,
    terms: BTreeMap<Modes, Rational>,
}

impl FockVector {
    pub fn zero(label: DimVector) -> Self {
        FockVector {
            label,
            terms: BTreeMap::new(),
        }
    }

    /// The highest-weight vector `|β⟩`.
    pub fn highest(label: DimVector) -> Self {
        FockVector::monomial(FockMonomial::vacuum(label), Rational::from_integer(1.into()))
    }

    pub fn monomial(m: FockMonomial, c: Rational) -> Self {
        let mut v = FockVector::zero(m.label);
        v.add_term(m.modes, c);
        v
    }

    pub fn label(&self) -> &DimVector {
        &self.label
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Modes, &Rational)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = (FockMonomial, &Rational)> + '_ {
        self.terms.iter().map(|(m, c)| {
            (
                FockMonomial {
                    label: self.label.clone(),
                    modes: m.clone(),
                },
                c,
            )
        })
    }

    pub fn coeff(&self, modes: &Modes) -> Rational {
        self.terms.get(modes).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, mut modes: Modes, c: Rational) {
        if c.is_zero() {
            return;
        }
        modes.sort_unstable();
        let e = self.terms.entry(modes.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&modes);
        }
    }

    pub fn add_scaled(&mut self, other: &FockVector, c: &Rational) {
        assert_eq!(self.label, other.label, "adding Fock vectors with different labels");
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> FockVector {
        let mut out = FockVector::zero(self.label.clone());
        out.add_scaled(self, c);
        out
    }

    /// Twice-weights present, each with the number of monomials.
    pub fn twice_weights(&self, q: &Quiver) -> Vec<i64> {
        let base = q.chi_self(&self.label);
        let mut ws: Vec<i64> = self.terms.keys().map(|m| base + 2 * mode_sum(m)).collect();
        ws.sort_unstable();
        ws.dedup();
        ws
    }

    /// Same modes, new lattice label (the shift operator `S_α`).
    pub fn relabel(self, label: DimVector) -> FockVector {
        FockVector {
            label,
            terms: self.terms,
        }
    }

    /// Keep monomials whose twice-weight is at most `max`.
    pub fn truncate(&self, q: &Quiver, max: i64) -> FockVector {
        let base = q.chi_self(&self.label);
        FockVector {
            label: self.label.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| base + 2 * mode_sum(m) <= max)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Apply the creation operator `α^{(j)}_{−n}`.
    pub fn create(&self, j: usize, n: u32) -> FockVector {
        let mut out = FockVector::zero(self.label.clone());
        for (m, c) in &self.terms {
            let mut nm = m.clone();
            nm.push((j, n));
            out.add_term(nm, c.clone());
        }
        out
    }
}

impl fmt::Display for FockVector {
    /// `(1/2*a1_{-1}a1_{-1} + 1/2*a1_{-2})|(2)>`; vertices are 1-based.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let ops: String = m.iter().map(|(j, n)| format!("a{}_{{-{}}}", j + 1, n)).collect();
            parts.push(match (ops.is_empty(), c.is_one()) {
                (true, _) => c.to_string(),
                (false, true) => ops,
                (false, false) if *c == -Rational::one() => format!("-{ops}"),
                (false, false) => format!("{c}*{ops}"),
            });
        }
        let body = parts.join(" + ").replace("+ -", "- ");
        if parts.len() == 1 && body == "1" {
            write!(f, "|{}>", self.label)
        } else if parts.len() == 1 {
            write!(f, "{body}|{}>", self.label)
        } else {
            write!(f, "({body})|{}>", self.label)
        }
    }
}

/// Action of the annihilator `α^{(i)}_n`, `n ≥ 1`: a derivation removing one
/// mode `(j, n)` with factor `n·χ(e_i, e_j)` per occurrence.
pub fn annihilate(q: &Quiver, i: usize, n: u32, v: &FockVector) -> FockVector {
    assert!(n >= 1, "annihilators have positive mode index");
    let mut out = FockVector::zero(v.label.clone());
    for (m, c) in &v.terms {
        let mut idx = 0;
        while idx < m.len() {
            let (j, k) = m[idx];
            let mult = m[idx..].iter().take_while(|&&x| x == (j, k)).count();
            if k == n {
                let pairing = q.chi_vertices(i, j) * i64::from(n) * mult as i64;
                if pairing != 0 {
                    let mut nm = m.clone();
                    nm.remove(idx);
                    out.add_term(nm, c * Rational::from_integer(pairing.into()));
                }
            }
            idx += mult;
        }
    }
    out
}

/// All Fock monomials of `V_β` with mode sum `level` (twice-weight
/// `χ(β,β) + 2·level`), using modes of every vertex.
pub fn fock_basis(q: &Quiver, label: &DimVector, level: u32) -> Vec<FockMonomial> {
    let r = q.vertex_count();
    let mut parts: Vec<(usize, u32)> = Vec::new();
    for n in 1..=level {
        for j in 0..r {
            parts.push((j, n));
        }
    }
    fn rec(parts: &[(usize, u32)], start: usize, left: u32, cur: &mut Modes, out: &mut Vec<Modes>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for idx in start..parts.len() {
            let (j, n) = parts[idx];
            if n > left {
                break;
            }
            cur.push((j, n));
            rec(parts, idx, left - n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(&parts, 0, level, &mut Vec::new(), &mut out);
    out.into_iter().map(|m| FockMonomial::new(label.clone(), m)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(v: &[u32]) -> DimVector {
        DimVector::new(v.to_vec())
    }

    fn int(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn annihilates_highest_weight() {
        let q = Quiver::loops(2);
        let v = FockVector::highest(d(&[3]));
        assert!(annihilate(&q, 0, 1, &v).is_zero());
    }

    #[test]
    fn heisenberg_pairing() {
        let q = Quiver::complete(2, 2, 1);
        for i in 0..2 {
            for j in 0..2 {
                for n in 1..4 {
                    let v = FockVector::highest(d(&[1, 1])).create(j, n);
                    let out = annihilate(&q, i, n, &v);
                    let expected = FockVector::highest(d(&[1, 1])).scale(&int(i64::from(n) * q.chi_vertices(i, j)));
                    assert_eq!(out, expected);
                }
            }
        }
    }

    #[test]
    fn leibniz_over_repeated_modes() {
        let q = Quiver::loops(0);
        let v = FockVector::highest(d(&[0])).create(0, 1).create(0, 1);
        let out = annihilate(&q, 0, 1, &v);
        let expected = FockVector::highest(d(&[0]))
            .create(0, 1)
            .scale(&int(2 * q.chi_vertices(0, 0)));
        assert_eq!(out, expected);
    }

    #[test]
    fn display() {
        let v = FockVector::highest(d(&[1, 0]));
        assert_eq!(v.to_string(), "|(1,0)>");
        let mut w = v.create(0, 1).scale(&Rational::new(1.into(), 2.into()));
        w.add_term(vec![(1, 2)], -int(1));
        assert_eq!(w.to_string(), "(1/2*a1_{-1} - a2_{-2})|(1,0)>");
        assert_eq!(FockVector::zero(d(&[0])).to_string(), "0");
    }

    #[test]
    fn basis_sizes() {
        let q = Quiver::complete(2, 2, 1);
        // bipartitions of 3: 10
        assert_eq!(fock_basis(&q, &d(&[1, 1]), 3).len(), 10);
        assert_eq!(fock_basis(&Quiver::jordan(), &d(&[2]), 4).len(), 5);
        assert_eq!(fock_basis(&Quiver::jordan(), &d(&[2]), 0).len(), 1);
    }
}
