use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

use super::{DimVector, LaurentSeries, Precision, QLaurent};
use crate::error::{Error, Result};
use crate::Rational;

/// Sign of a weight twist `S_{±w}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwistSign {
    Plus,
    Minus,
}

/// Power series in `x^d`, `d ∈ ℕ^I`, truncated at total degree `dmax`, with
/// coefficients in Laurent series of `t = q^{1/2}`.
///
/// Terms with `|d| > dmax` are unknown, not zero. Absent keys with
/// `|d| ≤ dmax` are exactly zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedSeries {
    rank: usize,
    dmax: u32,
    terms: BTreeMap<DimVector, LaurentSeries>,
}

/// Dimension vectors of total degree `≤ dmax`, ordered by total degree first.
pub(crate) fn by_total_degree(rank: usize, dmax: u32) -> Vec<DimVector> {
    let mut all = DimVector::all_up_to(rank, dmax);
    all.sort_by(|a, b| a.total().cmp(&b.total()).then_with(|| a.cmp(b)));
    all
}

impl GradedSeries {
    pub fn zero(rank: usize, dmax: u32) -> Self {
        GradedSeries {
            rank,
            dmax,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize, dmax: u32) -> Self {
        let mut s = GradedSeries::zero(rank, dmax);
        s.set(DimVector::zero(rank), LaurentSeries::one());
        s
    }

    pub fn monomial(rank: usize, dmax: u32, d: DimVector, c: impl Into<LaurentSeries>) -> Self {
        let mut s = GradedSeries::zero(rank, dmax);
        s.set(d, c.into());
        s
    }

    pub fn from_terms<I>(rank: usize, dmax: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (DimVector, LaurentSeries)>,
    {
        let mut s = GradedSeries::zero(rank, dmax);
        for (d, c) in terms {
            s.add_to(d, &c);
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dmax(&self) -> u32 {
        self.dmax
    }

    /// Coefficient of `x^d`; exact zero when absent.
    pub fn coeff(&self, d: &DimVector) -> LaurentSeries {
        self.terms.get(d).cloned().unwrap_or_else(LaurentSeries::zero)
    }

    pub fn get(&self, d: &DimVector) -> Option<&LaurentSeries> {
        self.terms.get(d)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&DimVector, &LaurentSeries)> {
        self.terms.iter()
    }

    /// Replace the coefficient of `x^d`. Entries beyond `dmax` are dropped.
    pub fn set(&mut self, d: DimVector, c: LaurentSeries) {
        assert_eq!(d.len(), self.rank, "dimension vector length");
        if d.total() > self.dmax {
            return;
        }
        if c.is_exact_zero() {
            self.terms.remove(&d);
        } else {
            self.terms.insert(d, c);
        }
    }

    pub fn add_to(&mut self, d: DimVector, c: &LaurentSeries) {
        if d.total() > self.dmax {
            return;
        }
        let sum = &self.coeff(&d) + c;
        self.set(d, sum);
    }

    pub fn constant_term(&self) -> LaurentSeries {
        self.coeff(&DimVector::zero(self.rank))
    }

    /// True when every coefficient is a genuine Laurent polynomial.
    pub fn is_exact(&self) -> bool {
        self.terms.values().all(LaurentSeries::is_exact)
    }

    fn check_compatible(&self, other: &GradedSeries) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        if self.dmax != other.dmax {
            return Err(Error::TruncationMismatch {
                left: self.dmax,
                right: other.dmax,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &GradedSeries) -> Result<GradedSeries> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_to(d.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &GradedSeries) -> Result<GradedSeries> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> GradedSeries {
        self.map_coeffs(|_, c| -c)
    }

    pub fn scale(&self, c: &Rational) -> GradedSeries {
        self.map_coeffs(|_, x| x.scale(c))
    }

    /// Apply `f` to every stored coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&DimVector, &LaurentSeries) -> LaurentSeries) -> GradedSeries {
        let mut out = GradedSeries::zero(self.rank, self.dmax);
        for (d, c) in &self.terms {
            out.set(d.clone(), f(d, c));
        }
        out
    }

    /// Cauchy product over dimension vectors, truncated at `dmax`.
    pub fn mul(&self, other: &GradedSeries) -> Result<GradedSeries> {
        self.check_compatible(other)?;
        let mut acc: BTreeMap<DimVector, LaurentSeries> = BTreeMap::new();
        for (d1, c1) in &self.terms {
            for (d2, c2) in &other.terms {
                if d1.total() + d2.total() > self.dmax {
                    continue;
                }
                let prod = c1 * c2;
                let key = d1 + d2;
                let next = match acc.remove(&key) {
                    Some(prev) => &prev + &prod,
                    None => prod,
                };
                acc.insert(key, next);
            }
        }
        Ok(GradedSeries::from_terms(self.rank, self.dmax, acc))
    }

    /// Multiplicative inverse; the constant term must be a single monomial `c·t^k`.
    pub fn inverse(&self) -> Result<GradedSeries> {
        let a0 = self.constant_term();
        let (k, c) = match a0.poly().as_monomial() {
            Some((k, c)) => (k, c.clone()),
            None => return Err(Error::NonInvertibleConstant(a0.to_string())),
        };
        let inv_poly = QLaurent::monomial(c.recip(), -k);
        let inv0 = match a0.precision() {
            Precision::Exact => LaurentSeries::exact(inv_poly),
            Precision::UpTo(b) => LaurentSeries::with_precision(inv_poly, Precision::UpTo(b - 2 * k)),
            Precision::DownTo(b) => LaurentSeries::with_precision(inv_poly, Precision::DownTo(b - 2 * k)),
        };
        let zero = DimVector::zero(self.rank);
        let mut out = GradedSeries::zero(self.rank, self.dmax);
        out.set(zero.clone(), inv0.clone());
        for d in by_total_degree(self.rank, self.dmax) {
            if d.is_zero() {
                continue;
            }
            let mut sum = LaurentSeries::zero();
            for (e, ae) in &self.terms {
                if e.is_zero() {
                    continue;
                }
                if let Some(rest) = d.checked_sub(e) {
                    if let Some(b) = out.terms.get(&rest) {
                        sum = &sum + &(ae * b);
                    }
                }
            }
            out.set(d, -&(&inv0 * &sum));
        }
        Ok(out)
    }

    /// `S_{±w}`: the coefficient of `x^d` is multiplied by `t^{±w·d}`.
    pub fn twist(&self, w: &DimVector, sign: TwistSign) -> Result<GradedSeries> {
        let multiple = match sign {
            TwistSign::Plus => 1,
            TwistSign::Minus => -1,
        };
        self.twist_by(w, multiple)
    }

    /// `S_{m·w}`: the coefficient of `x^d` is multiplied by `t^{m·(w·d)}`.
    pub fn twist_by(&self, w: &DimVector, multiple: i64) -> Result<GradedSeries> {
        w.check_len(self.rank)?;
        Ok(self.map_coeffs(|d, c| c.shift(multiple * w.dot(d))))
    }

    /// Termwise `q → q^{-1}`.
    pub fn invert_q(&self) -> GradedSeries {
        self.map_coeffs(|_, c| c.invert_q())
    }

    /// Adams operation `ψ_n`: `t^k x^d → t^{nk} x^{nd}`.
    pub fn adams(&self, n: u32) -> GradedSeries {
        assert!(n >= 1);
        let mut out = GradedSeries::zero(self.rank, self.dmax);
        for (d, c) in &self.terms {
            if d.total() * n <= self.dmax {
                out.set(d.scale(n), c.adams(i64::from(n)));
            }
        }
        out
    }

    /// Same series viewed with a smaller truncation bound.
    pub fn truncated(&self, dmax: u32) -> GradedSeries {
        assert!(dmax <= self.dmax);
        GradedSeries {
            rank: self.rank,
            dmax,
            terms: self
                .terms
                .iter()
                .filter(|(d, _)| d.total() <= dmax)
                .map(|(d, c)| (d.clone(), c.clone()))
                .collect(),
        }
    }

    /// Multiply the coefficient of `x^d` by `(-1)^{parity(d)}`.
    pub fn with_parity_sign(&self, parity: impl Fn(&DimVector) -> bool) -> GradedSeries {
        let minus_one = -Rational::one();
        self.map_coeffs(|d, c| if parity(d) { c.scale(&minus_one) } else { c.clone() })
    }

    /// First coefficient where the two series disagree on a jointly known
    /// exponent, as `(d, exponent, left, right)`.
    pub fn first_disagreement(&self, other: &GradedSeries) -> Option<(DimVector, i64, Rational, Rational)> {
        let keys: std::collections::BTreeSet<&DimVector> = self.terms.keys().chain(other.terms.keys()).collect();
        for d in keys {
            if d.total() > self.dmax.min(other.dmax) {
                continue;
            }
            let a = self.coeff(d);
            let b = other.coeff(d);
            let exps: std::collections::BTreeSet<i64> =
                a.poly().terms().chain(b.poly().terms()).map(|(k, _)| k).collect();
            for k in exps {
                if let (Some(x), Some(y)) = (a.coeff(k), b.coeff(k)) {
                    if x != y {
                        return Some((d.clone(), k, x, y));
                    }
                }
            }
        }
        None
    }

    /// One line per stored coefficient, `d: coefficient`, sorted by `d`.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for GradedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, c) in &self.terms {
            writeln!(f, "{d}: {c}")?;
        }
        Ok(())
    }
}

/// True when `c` is exactly `1`.
pub(crate) fn is_exact_one(c: &LaurentSeries) -> bool {
    c.is_exact() && c.poly() == &QLaurent::one()
}

pub(crate) fn is_exact_zero(c: &LaurentSeries) -> bool {
    c.is_exact() && c.poly().is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x_pow(n: u32, dmax: u32, c: i64) -> GradedSeries {
        GradedSeries::monomial(1, dmax, DimVector::new(vec![n]), QLaurent::from_int(c))
    }

    fn sum(parts: &[GradedSeries]) -> GradedSeries {
        parts[1..].iter().fold(parts[0].clone(), |acc, p| acc.add(p).unwrap())
    }

    #[test]
    fn difference_of_squares() {
        let a = sum(&[x_pow(0, 3, 1), x_pow(1, 3, 1)]);
        let b = sum(&[x_pow(0, 3, 1), x_pow(1, 3, -1)]);
        assert_eq!(a.mul(&b).unwrap(), sum(&[x_pow(0, 3, 1), x_pow(2, 3, -1)]));
    }

    #[test]
    fn unit_and_geometric() {
        let a = sum(&[x_pow(0, 4, 2), x_pow(3, 4, -1)]);
        assert_eq!(a.mul(&GradedSeries::one(1, 4)).unwrap(), a);
        let geo = sum(&(0..=4).map(|n| x_pow(n, 4, 1)).collect::<Vec<_>>());
        let one_minus_x = sum(&[x_pow(0, 4, 1), x_pow(1, 4, -1)]);
        assert_eq!(geo.mul(&one_minus_x).unwrap(), GradedSeries::one(1, 4));
    }

    #[test]
    fn mismatched_truncation() {
        let err = x_pow(0, 3, 1).mul(&x_pow(0, 4, 1)).unwrap_err();
        assert!(matches!(err, Error::TruncationMismatch { left: 3, right: 4 }));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(GradedSeries::one(1, 3).inverse().unwrap(), GradedSeries::one(1, 3));
        let one_minus_x = sum(&[x_pow(0, 3, 1), x_pow(1, 3, -1)]);
        let geo = sum(&(0..=3).map(|n| x_pow(n, 3, 1)).collect::<Vec<_>>());
        assert_eq!(one_minus_x.inverse().unwrap(), geo);
        let t2 = GradedSeries::monomial(1, 3, DimVector::zero(1), QLaurent::t_pow(2));
        let tm2 = GradedSeries::monomial(1, 3, DimVector::zero(1), QLaurent::t_pow(-2));
        assert_eq!(t2.inverse().unwrap(), tm2);
    }

    #[test]
    fn non_invertible_constant() {
        let a = GradedSeries::monomial(1, 2, DimVector::zero(1), QLaurent::from_int_terms(&[(0, 1), (1, 1)]));
        assert!(matches!(a.inverse(), Err(Error::NonInvertibleConstant(_))));
        assert!(matches!(
            GradedSeries::zero(1, 2).inverse(),
            Err(Error::NonInvertibleConstant(_))
        ));
    }

    #[test]
    fn twists() {
        let a = sum(&[x_pow(0, 3, 1), x_pow(2, 3, 5)]);
        let w = DimVector::new(vec![1]);
        assert_eq!(a.twist(&DimVector::zero(1), TwistSign::Plus).unwrap(), a);
        let s2w = a.twist_by(&w, 2).unwrap();
        assert_eq!(
            s2w.coeff(&DimVector::new(vec![2])).poly(),
            &QLaurent::from_int_terms(&[(4, 5)])
        );
        let back = a
            .twist(&w, TwistSign::Plus)
            .unwrap()
            .twist(&w, TwistSign::Minus)
            .unwrap();
        assert_eq!(back, a);
        assert!(matches!(
            a.twist(&DimVector::zero(2), TwistSign::Plus),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn rendering_sorted_by_d() {
        let s = GradedSeries::from_terms(
            2,
            2,
            vec![
                (DimVector::new(vec![1, 0]), QLaurent::t_pow(1).into()),
                (DimVector::new(vec![0, 1]), QLaurent::from_int(-2).into()),
            ],
        );
        assert_eq!(s.render(), "(0,1): -2\n(1,0): t\n");
    }
}
