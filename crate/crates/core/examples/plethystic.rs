//! Plethystic exponential and logarithm on truncated graded series.
//!
//! ```text
//! cargo run --example plethystic
//! ```

use coha_lab::qseries::{pleth_exp, pleth_log, DimVector, GradedSeries, LaurentSeries, QLaurent};

fn main() -> coha_lab::Result<()> {
    // Exp(x) = Σ x^n: the generating function of one free boson
    let x = GradedSeries::monomial(1, 5, DimVector::new(vec![1]), LaurentSeries::one());
    println!("Exp(x):\n{}", pleth_exp(&x)?);

    // a fermion-like term: Exp(-t^{-3} x) = 1 - t^{-3} x
    let f = GradedSeries::monomial(1, 5, DimVector::new(vec![1]), QLaurent::from_int_terms(&[(-3, -1)]));
    println!("Exp(-t^-3 x):\n{}", pleth_exp(&f)?);

    // Log undoes Exp on a two-variable series
    let mut u = GradedSeries::zero(2, 3);
    u.set(DimVector::new(vec![1, 0]), QLaurent::from_int_terms(&[(1, 1)]).into());
    u.set(
        DimVector::new(vec![1, 1]),
        QLaurent::from_int_terms(&[(0, 2), (2, -1)]).into(),
    );
    let e = pleth_exp(&u)?;
    println!("Exp(u):\n{e}");
    println!("Log(Exp(u)) == u: {}", pleth_log(&e)? == u);
    Ok(())
}
