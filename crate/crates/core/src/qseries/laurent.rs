use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::Rational;

/// Exact Laurent polynomial in `t = q^{1/2}` with rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct QLaurent {
    coeffs: BTreeMap<i64, Rational>,
}

impl QLaurent {
    pub fn zero() -> Self {
        QLaurent::default()
    }

    pub fn one() -> Self {
        QLaurent::monomial(Rational::one(), 0)
    }

    /// `c · t^k`.
    pub fn monomial(c: Rational, k: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        QLaurent { coeffs }
    }

    /// `t^k`.
    pub fn t_pow(k: i64) -> Self {
        QLaurent::monomial(Rational::one(), k)
    }

    pub fn from_int(c: i64) -> Self {
        QLaurent::monomial(Rational::from_integer(c.into()), 0)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let mut p = QLaurent::zero();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_int_terms(terms: &[(i64, i64)]) -> Self {
        QLaurent::from_terms(terms.iter().map(|&(k, c)| (k, Rational::from_integer(c.into()))))
    }

    pub fn add_term(&mut self, k: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(k).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: i64) -> Rational {
        self.coeffs.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Returns `(k, c)` when the polynomial is a single term `c·t^k`.
    pub fn as_monomial(&self) -> Option<(i64, &Rational)> {
        if self.coeffs.len() == 1 {
            self.coeffs.iter().next().map(|(k, c)| (*k, c))
        } else {
            None
        }
    }

    /// The substitution `q → q^{-1}`, i.e. `t^k → t^{-k}`.
    pub fn invert_q(&self) -> Self {
        QLaurent {
            coeffs: self.coeffs.iter().map(|(k, c)| (-k, c.clone())).collect(),
        }
    }

    /// Multiply by `t^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        QLaurent {
            coeffs: self.coeffs.iter().map(|(k, c)| (k + shift, c.clone())).collect(),
        }
    }

    /// The substitution `t → t^n`.
    pub fn adams(&self, n: i64) -> Self {
        assert!(n >= 1);
        QLaurent {
            coeffs: self.coeffs.iter().map(|(k, c)| (k * n, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return QLaurent::zero();
        }
        QLaurent {
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Drop every term with exponent above `bound`.
    pub fn truncate_above(&self, bound: i64) -> Self {
        QLaurent {
            coeffs: self.coeffs.range(..=bound).map(|(k, c)| (*k, c.clone())).collect(),
        }
    }

    /// Drop every term with exponent below `bound`.
    pub fn truncate_below(&self, bound: i64) -> Self {
        QLaurent {
            coeffs: self.coeffs.range(bound..).map(|(k, c)| (*k, c.clone())).collect(),
        }
    }

    /// Value at `t = 1`.
    pub fn eval_at_one(&self) -> Rational {
        self.coeffs.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    /// Render in `q`, writing `t^k` as `q^(k/2)`.
    pub fn render_q(&self) -> String {
        render_with(self, |k| match k {
            0 => String::new(),
            2 => "q".to_string(),
            k if k % 2 == 0 => format!("q^{}", k / 2),
            k => format!("q^({k}/2)"),
        })
    }
}

fn render_with(p: &QLaurent, var: impl Fn(i64) -> String) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (k, c)) in p.terms().enumerate() {
        let negative = c.is_negative();
        let abs = c.abs();
        if idx == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let v = var(k);
        if v.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&v);
        } else {
            out.push_str(&format!("{abs}*{v}"));
        }
    }
    out
}

impl fmt::Display for QLaurent {
    /// Canonical rendering, ascending exponents: `-2*t^-1 + 3 + t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = render_with(self, |k| match k {
            0 => String::new(),
            1 => "t".to_string(),
            k => format!("t^{k}"),
        });
        f.write_str(&s)
    }
}

impl Add<&QLaurent> for &QLaurent {
    type Output = QLaurent;

    fn add(self, rhs: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Sub<&QLaurent> for &QLaurent {
    type Output = QLaurent;

    fn sub(self, rhs: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, -c.clone());
        }
        out
    }
}

impl Mul<&QLaurent> for &QLaurent {
    type Output = QLaurent;

    fn mul(self, rhs: &QLaurent) -> QLaurent {
        let mut out = QLaurent::zero();
        for (a, x) in self.terms() {
            for (b, y) in rhs.terms() {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;

    fn neg(self) -> QLaurent {
        QLaurent {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QLaurent> for QLaurent {
            type Output = QLaurent;
            fn $m(self, rhs: QLaurent) -> QLaurent {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> QLaurent {
        QLaurent::from_int_terms(terms)
    }

    #[test]
    fn exponent_cancellation() {
        assert_eq!(&QLaurent::t_pow(2) * &QLaurent::t_pow(-2), QLaurent::one());
    }

    #[test]
    fn difference_of_squares() {
        let a = p(&[(0, 1), (1, 1)]);
        let b = p(&[(0, 1), (1, -1)]);
        assert_eq!(&a * &b, p(&[(0, 1), (2, -1)]));
    }

    #[test]
    fn additive_identity() {
        let x = p(&[(-3, 2), (5, -7)]);
        assert_eq!(&QLaurent::zero() + &x, x);
    }

    #[test]
    fn invert_q_examples() {
        assert_eq!(p(&[(2, 1), (0, 3)]).invert_q(), p(&[(-2, 1), (0, 3)]));
        assert_eq!(QLaurent::zero().invert_q(), QLaurent::zero());
        let x = p(&[(-1, 4), (3, 1)]);
        assert_eq!(x.invert_q().invert_q(), x);
    }

    #[test]
    fn canonical_rendering() {
        assert_eq!(p(&[(-1, -2), (0, 3), (2, 1)]).to_string(), "-2*t^-1 + 3 + t^2");
        assert_eq!(p(&[(0, 1), (2, -1)]).to_string(), "1 - t^2");
        assert_eq!(QLaurent::zero().to_string(), "0");
        assert_eq!(p(&[(1, 1)]).to_string(), "t");
        let half = QLaurent::monomial(Rational::new(1.into(), 2.into()), 3);
        assert_eq!(half.to_string(), "1/2*t^3");
        assert_eq!(p(&[(-2, 1), (1, 2), (4, -1)]).render_q(), "q^-1 + 2*q^(1/2) - q^2");
    }

    #[test]
    fn no_stored_zeros() {
        let a = p(&[(1, 1)]);
        let z = &a - &a;
        assert!(z.is_zero());
        assert_eq!(z, QLaurent::zero());
    }
}
