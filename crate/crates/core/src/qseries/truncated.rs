//! Laurent series in `t` known only on one side of a cutoff.
//!
//! Characters such as `1/(q^{-1})_n` are infinite in one direction of `t`.
//! A [`LaurentSeries`] stores the known terms together with a [`Precision`]
//! that records where knowledge stops; arithmetic propagates that bound
//! exactly, so every coefficient a caller can read is exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::QLaurent;
use crate::Rational;

/// Where a [`LaurentSeries`] stops being known.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Precision {
    /// A genuine Laurent polynomial.
    Exact,
    /// Known for every exponent `≤ bound`; unknown terms go to `+∞`.
    UpTo(i64),
    /// Known for every exponent `≥ bound`; unknown terms go to `-∞`.
    DownTo(i64),
}

impl Precision {
    fn flip(self) -> Self {
        match self {
            Precision::Exact => Precision::Exact,
            Precision::UpTo(b) => Precision::DownTo(-b),
            Precision::DownTo(b) => Precision::UpTo(-b),
        }
    }

    fn shift(self, s: i64) -> Self {
        match self {
            Precision::Exact => Precision::Exact,
            Precision::UpTo(b) => Precision::UpTo(b + s),
            Precision::DownTo(b) => Precision::DownTo(b + s),
        }
    }

    pub fn contains(self, k: i64) -> bool {
        match self {
            Precision::Exact => true,
            Precision::UpTo(b) => k <= b,
            Precision::DownTo(b) => k >= b,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct LaurentSeries {
    poly: QLaurent,
    prec: Precision,
}

impl LaurentSeries {
    pub fn exact(poly: QLaurent) -> Self {
        LaurentSeries {
            poly,
            prec: Precision::Exact,
        }
    }

    pub fn zero() -> Self {
        LaurentSeries::exact(QLaurent::zero())
    }

    pub fn one() -> Self {
        LaurentSeries::exact(QLaurent::one())
    }

    pub fn with_precision(poly: QLaurent, prec: Precision) -> Self {
        let poly = match prec {
            Precision::Exact => poly,
            Precision::UpTo(b) => poly.truncate_above(b),
            Precision::DownTo(b) => poly.truncate_below(b),
        };
        LaurentSeries { poly, prec }
    }

    pub fn poly(&self) -> &QLaurent {
        &self.poly
    }

    pub fn into_poly(self) -> QLaurent {
        self.poly
    }

    pub fn precision(&self) -> Precision {
        self.prec
    }

    pub fn is_exact(&self) -> bool {
        self.prec == Precision::Exact
    }

    /// Exactly zero (not merely zero in the known range).
    pub fn is_exact_zero(&self) -> bool {
        self.is_exact() && self.poly.is_zero()
    }

    pub fn is_known(&self, k: i64) -> bool {
        self.prec.contains(k)
    }

    /// Coefficient of `t^k`, or `None` when `k` lies outside the known range.
    pub fn coeff(&self, k: i64) -> Option<Rational> {
        self.is_known(k).then(|| self.poly.coeff(k))
    }

    pub fn invert_q(&self) -> Self {
        LaurentSeries {
            poly: self.poly.invert_q(),
            prec: self.prec.flip(),
        }
    }

    pub fn shift(&self, s: i64) -> Self {
        LaurentSeries {
            poly: self.poly.shift(s),
            prec: self.prec.shift(s),
        }
    }

    /// `t → t^n`; the unknown tail starts `n` times further out.
    pub fn adams(&self, n: i64) -> Self {
        let prec = match self.prec {
            Precision::Exact => Precision::Exact,
            Precision::UpTo(b) => Precision::UpTo(n * (b + 1) - 1),
            Precision::DownTo(b) => Precision::DownTo(n * (b - 1) + 1),
        };
        LaurentSeries {
            poly: self.poly.adams(n),
            prec,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return LaurentSeries::zero();
        }
        LaurentSeries {
            poly: self.poly.scale(c),
            prec: self.prec,
        }
    }

    /// Lowest exponent that could carry a nonzero coefficient, in the
    /// `UpTo` orientation; `None` for the exact zero.
    fn valuation_up(&self) -> Option<i64> {
        match (self.poly.min_exp(), self.prec) {
            (Some(k), _) => Some(k),
            (None, Precision::Exact) => None,
            (None, Precision::UpTo(b)) => Some(b + 1),
            (None, Precision::DownTo(_)) => unreachable!("orientation checked by caller"),
        }
    }

    fn mul_up(&self, rhs: &LaurentSeries) -> LaurentSeries {
        let bound = |p: Precision| match p {
            Precision::UpTo(b) => Some(b),
            _ => None,
        };
        let mut limit: Option<i64> = None;
        let mut tighten = |candidate: i64| {
            limit = Some(limit.map_or(candidate, |l: i64| l.min(candidate)));
        };
        if let (Some(ba), Some(vb)) = (bound(self.prec), rhs.valuation_up()) {
            tighten(ba + vb);
        }
        if let (Some(bb), Some(va)) = (bound(rhs.prec), self.valuation_up()) {
            tighten(bb + va);
        }
        let prec = limit.map_or(Precision::Exact, Precision::UpTo);
        LaurentSeries::with_precision(&self.poly * &rhs.poly, prec)
    }
}

fn orientation(a: Precision, b: Precision) -> Precision {
    match (a, b) {
        (Precision::Exact, p) | (p, Precision::Exact) => p,
        (Precision::UpTo(_), Precision::UpTo(_)) => a,
        (Precision::DownTo(_), Precision::DownTo(_)) => a,
        _ => panic!("cannot combine series expanded in opposite directions of t"),
    }
}

impl Add<&LaurentSeries> for &LaurentSeries {
    type Output = LaurentSeries;

    fn add(self, rhs: &LaurentSeries) -> LaurentSeries {
        let prec = match (self.prec, rhs.prec) {
            (Precision::UpTo(a), Precision::UpTo(b)) => Precision::UpTo(a.min(b)),
            (Precision::DownTo(a), Precision::DownTo(b)) => Precision::DownTo(a.max(b)),
            (a, b) => orientation(a, b),
        };
        LaurentSeries::with_precision(&self.poly + &rhs.poly, prec)
    }
}

impl Sub<&LaurentSeries> for &LaurentSeries {
    type Output = LaurentSeries;

    fn sub(self, rhs: &LaurentSeries) -> LaurentSeries {
        self + &(-rhs)
    }
}

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;

    fn neg(self) -> LaurentSeries {
        LaurentSeries {
            poly: -&self.poly,
            prec: self.prec,
        }
    }
}

impl Mul<&LaurentSeries> for &LaurentSeries {
    type Output = LaurentSeries;

    fn mul(self, rhs: &LaurentSeries) -> LaurentSeries {
        match orientation(self.prec, rhs.prec) {
            Precision::DownTo(_) => self.invert_q().mul_up(&rhs.invert_q()).invert_q(),
            _ => self.mul_up(rhs),
        }
    }
}

impl From<QLaurent> for LaurentSeries {
    fn from(p: QLaurent) -> Self {
        LaurentSeries::exact(p)
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.prec {
            Precision::Exact => write!(f, "{}", self.poly),
            Precision::UpTo(b) => write!(f, "{} + O(t^{})", self.poly, b + 1),
            Precision::DownTo(b) => write!(f, "{} + O(t^{})", self.poly, b - 1),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn geometric_up(step: i64, bound: i64) -> LaurentSeries {
        // 1/(1 - t^step) known through t^bound
        let terms = (0..=bound / step).map(|m| (m * step, 1));
        let poly = QLaurent::from_int_terms(&terms.collect::<Vec<_>>());
        LaurentSeries::with_precision(poly, Precision::UpTo(bound))
    }

    #[test]
    fn truncated_times_exact() {
        let g = geometric_up(1, 5);
        let one_minus_t = LaurentSeries::exact(QLaurent::from_int_terms(&[(0, 1), (1, -1)]));
        let prod = &g * &one_minus_t;
        assert_eq!(prod.precision(), Precision::UpTo(5));
        assert_eq!(prod.poly(), &QLaurent::one());
    }

    #[test]
    fn negative_valuation_costs_precision() {
        let a = geometric_up(1, 4).shift(-2);
        let b = geometric_up(1, 4);
        let prod = &a * &b;
        assert_eq!(prod.precision(), Precision::UpTo(2));
        // (1/(1-t))^2 = Σ (n+1) t^n, shifted by -2
        for k in -2..=2 {
            assert_eq!(prod.coeff(k).unwrap(), Rational::from_integer((k + 3).into()));
        }
        assert_eq!(prod.coeff(3), None);
    }

    #[test]
    fn downward_matches_flipped_upward() {
        let a = geometric_up(2, 8).shift(3);
        let b = geometric_up(1, 6).shift(-1);
        let up = &a * &b;
        let down = &a.invert_q() * &b.invert_q();
        assert_eq!(down, up.invert_q());
    }

    #[test]
    fn adams_precision() {
        let g = geometric_up(1, 3);
        let g2 = g.adams(2);
        assert_eq!(g2.precision(), Precision::UpTo(7));
        assert_eq!(g2.coeff(6).unwrap(), Rational::from_integer(1.into()));
        assert_eq!(g2.coeff(7).unwrap(), Rational::from_integer(0.into()));
    }

    #[test]
    #[should_panic(expected = "opposite directions")]
    fn mixed_orientation_panics() {
        let a = geometric_up(1, 3);
        let _ = &a * &a.invert_q();
    }
}
