//! Exact Laurent polynomials in `t = q^{1/2}`, truncated graded series over
//! dimension vectors, and the plethystic exponential and logarithm.

mod dimvec;
mod graded;
mod laurent;
mod plethystic;
mod truncated;
mod window;

pub use dimvec::DimVector;
pub use graded::{GradedSeries, TwistSign};
pub use laurent::QLaurent;
pub use plethystic::{degree_part, pleth_exp, pleth_log};
pub use truncated::{LaurentSeries, Precision};
pub use window::WeightWindow;

use crate::error::Result;

/// Exact `+`, `·` or negation of Laurent polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LaurentOp {
    Add,
    Mul,
    Neg,
}

pub fn ql_arith(a: &QLaurent, b: &QLaurent, op: LaurentOp) -> QLaurent {
    match op {
        LaurentOp::Add => a + b,
        LaurentOp::Mul => a * b,
        LaurentOp::Neg => -a,
    }
}

pub fn ql_invert_q(a: &QLaurent) -> QLaurent {
    a.invert_q()
}

pub fn series_mul(a: &GradedSeries, b: &GradedSeries) -> Result<GradedSeries> {
    a.mul(b)
}

pub fn series_inverse(a: &GradedSeries) -> Result<GradedSeries> {
    a.inverse()
}

pub fn twist_sw(a: &GradedSeries, w: &DimVector, sign: TwistSign) -> Result<GradedSeries> {
    a.twist(w, sign)
}
