//! Dense-exponent multivariate polynomials over the rationals.
//!
//! Used as the expanded form behind symmetric polynomials: the shuffle
//! product and the power-sum realization work on explicit variables and are
//! then collected back into orbit sums.

use std::collections::BTreeMap;
use std::ops::{Add, Mul};

use num_traits::Zero;

use crate::Rational;

pub type Exponent = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Exponent, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Rational::from_integer(1.into()))
    }

    /// The variable `z_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Poly::zero(nvars);
        p.add_term(e, Rational::from_integer(1.into()));
        p
    }

    /// `z_b − z_a`.
    pub fn difference(nvars: usize, b: usize, a: usize) -> Self {
        let mut p = Poly::var(nvars, b);
        let mut e = vec![0; nvars];
        e[a] = 1;
        p.add_term(e, Rational::from_integer((-1).into()));
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, e: Exponent, c: Rational) {
        debug_assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Poly {
        (0..n).fold(Poly::one(self.nvars), |acc, _| &acc * self)
    }

    /// Rename variables: the variable at position `p` moves to `target[p]`.
    pub fn relabel(&self, target: &[usize]) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(relabel_exponent(e, target), c.clone());
        }
        out
    }

    /// Place this polynomial's variables at positions `target` inside a ring
    /// with `nvars` variables.
    pub fn embed(&self, nvars: usize, target: &[usize]) -> Poly {
        assert_eq!(target.len(), self.nvars);
        let mut out = Poly::zero(nvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; nvars];
            for (p, &x) in e.iter().enumerate() {
                ne[target[p]] += x;
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Exact quotient by `z_b − z_a`, or `None` if it does not divide.
    pub fn div_difference(&self, b: usize, a: usize) -> Option<Poly> {
        // Synthetic division in z_b with coefficients in the other variables.
        let mut by_power: BTreeMap<u32, Poly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let k = rest[b];
            rest[b] = 0;
            by_power
                .entry(k)
                .or_insert_with(|| Poly::zero(self.nvars))
                .add_term(rest, c.clone());
        }
        let top = match by_power.keys().next_back() {
            Some(&k) => k,
            None => return Some(Poly::zero(self.nvars)),
        };
        let za = Poly::var(self.nvars, a);
        let mut quotient = Poly::zero(self.nvars);
        let mut carry = Poly::zero(self.nvars);
        for k in (0..=top).rev() {
            let ck = by_power.remove(&k).unwrap_or_else(|| Poly::zero(self.nvars));
            // carry holds Q_k; the next coefficient is C_k + z_a Q_k
            let next = &ck + &(&za * &carry);
            if k == 0 {
                return next.is_zero().then_some(quotient);
            }
            for (e, c) in next.terms() {
                let mut ne = e.clone();
                ne[b] += k - 1;
                quotient.add_term(ne, c.clone());
            }
            carry = next;
        }
        unreachable!()
    }

    /// Total degree of the highest term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }
}

pub(crate) fn relabel_exponent(e: &[u32], target: &[usize]) -> Exponent {
    let mut ne = vec![0; e.len()];
    for (p, &x) in e.iter().enumerate() {
        ne[target[p]] = x;
    }
    ne
}

impl Add<&Poly> for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divide_vandermonde_factor() {
        // (z1 - z0)(z0^2 + 3 z1) / (z1 - z0)
        let f = &Poly::var(2, 0).pow(2) + &Poly::var(2, 1).scale(&Rational::from_integer(3.into()));
        let g = &Poly::difference(2, 1, 0) * &f;
        assert_eq!(g.div_difference(1, 0), Some(f));
        assert_eq!(Poly::var(2, 0).div_difference(1, 0), None);
        assert_eq!(Poly::zero(2).div_difference(1, 0), Some(Poly::zero(2)));
    }

    #[test]
    fn relabel_swaps() {
        let p = &Poly::var(3, 0) * &Poly::var(3, 0);
        let q = p.relabel(&[2, 0, 1]);
        assert_eq!(q, &Poly::var(3, 2) * &Poly::var(3, 2));
    }
}
