//! Plethystic exponential and logarithm on graded series.
//!
//! `Exp` is computed as `exp(Σ_{n≥1} ψ_n(f)/n)` with the Adams operations
//! `ψ_n(t^k x^d) = t^{nk} x^{nd}`; on a monomial this is exactly
//! `Exp(q^k x^d) = Σ_n q^{nk} x^{nd}`, and the formula is additive-to-
//! multiplicative by construction. `Log` inverts it degree by degree.

use num_bigint::BigInt;

use super::graded::{by_total_degree, is_exact_one, is_exact_zero};
use super::GradedSeries;
use crate::error::{Error, Result};
use crate::Rational;

/// `exp(g)` for a series without constant term.
fn exp_series(g: &GradedSeries) -> Result<GradedSeries> {
    let mut total = GradedSeries::one(g.rank(), g.dmax());
    let mut term = GradedSeries::one(g.rank(), g.dmax());
    for k in 1..=g.dmax() {
        term = term.mul(g)?.scale(&Rational::new(BigInt::from(1), BigInt::from(k)));
        total = total.add(&term)?;
    }
    Ok(total)
}

/// Plethystic exponential `Exp: (m, +) → (1 + m, ·)`.
///
/// The input must have an exactly zero constant term. Signs such as the
/// `(-1)^{χ(d,d)}` of a Poincaré series are the caller's business (see
/// [`GradedSeries::with_parity_sign`]); `Exp` itself is sign-agnostic.
pub fn pleth_exp(a: &GradedSeries) -> Result<GradedSeries> {
    let c0 = a.constant_term();
    if !is_exact_zero(&c0) {
        return Err(Error::NonzeroConstantTerm(c0.to_string()));
    }
    let mut sum = GradedSeries::zero(a.rank(), a.dmax());
    for n in 1..=a.dmax() {
        let psi = a.adams(n);
        sum = sum.add(&psi.scale(&Rational::new(BigInt::from(1), BigInt::from(n))))?;
    }
    exp_series(&sum)
}

/// Plethystic logarithm, the inverse of [`pleth_exp`].
///
/// Built by induction on `|d|`: once the logarithm is known below degree
/// `n`, its degree-`n` part is the degree-`n` part of `a` minus that of
/// `Exp` of the partial logarithm.
pub fn pleth_log(a: &GradedSeries) -> Result<GradedSeries> {
    let c0 = a.constant_term();
    if !is_exact_one(&c0) {
        return Err(Error::ConstantTermNotOne(c0.to_string()));
    }
    let rank = a.rank();
    let mut log = GradedSeries::zero(rank, a.dmax());
    let dims = by_total_degree(rank, a.dmax());
    for n in 1..=a.dmax() {
        let partial = pleth_exp(&log.truncated(n))?;
        for d in dims.iter().filter(|d| d.total() == n) {
            let c = &a.coeff(d) - &partial.coeff(d);
            log.set(d.clone(), c);
        }
    }
    Ok(log)
}

/// Degree-`n` part of a series as a fresh series.
pub fn degree_part(a: &GradedSeries, n: u32) -> GradedSeries {
    GradedSeries::from_terms(
        a.rank(),
        a.dmax(),
        a.iter()
            .filter(|(d, _)| d.total() == n)
            .map(|(d, c)| (d.clone(), c.clone())),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::{DimVector, QLaurent};

    fn x_pow(n: u32, dmax: u32, c: QLaurent) -> GradedSeries {
        GradedSeries::monomial(1, dmax, DimVector::new(vec![n]), c)
    }

    #[test]
    fn exp_of_zero_is_one() {
        assert_eq!(pleth_exp(&GradedSeries::zero(2, 3)).unwrap(), GradedSeries::one(2, 3));
    }

    #[test]
    fn exp_of_x_is_geometric() {
        let e = pleth_exp(&x_pow(1, 5, QLaurent::one())).unwrap();
        for n in 0..=5 {
            assert_eq!(e.coeff(&DimVector::new(vec![n])).poly(), &QLaurent::one());
        }
    }

    #[test]
    fn exp_of_negative_monomial_is_two_terms() {
        // Exp(-t^{-3} x) = 1 - t^{-3} x
        let e = pleth_exp(&x_pow(1, 4, QLaurent::from_int_terms(&[(-3, -1)]))).unwrap();
        let mut expected = GradedSeries::one(1, 4);
        expected.set(DimVector::new(vec![1]), QLaurent::from_int_terms(&[(-3, -1)]).into());
        assert_eq!(e, expected);
    }

    #[test]
    fn log_examples() {
        assert_eq!(pleth_log(&GradedSeries::one(1, 3)).unwrap(), GradedSeries::zero(1, 3));
        let mut geo = GradedSeries::zero(1, 4);
        for n in 0..=4 {
            geo.set(DimVector::new(vec![n]), QLaurent::one().into());
        }
        assert_eq!(pleth_log(&geo).unwrap(), x_pow(1, 4, QLaurent::one()));
    }

    #[test]
    fn constant_term_errors() {
        assert!(matches!(
            pleth_exp(&GradedSeries::one(1, 2)),
            Err(Error::NonzeroConstantTerm(_))
        ));
        assert!(matches!(
            pleth_log(&GradedSeries::zero(1, 2)),
            Err(Error::ConstantTermNotOne(_))
        ));
    }
}
