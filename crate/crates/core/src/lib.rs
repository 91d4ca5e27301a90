//! Exact computations for cohomological Hall algebras of symmetric quivers.
//!
//! The same graded dimensions are reached along three independent routes
//! and checked against each other:
//!
//! * [`coha`]: the shuffle algebra on symmetric polynomials, its character
//!   and the framed modules `M_w` as explicit quotients;
//! * [`qseries`] and [`dt`]: characters as truncated series, plethystic
//!   calculus and the refined DT invariants extracted from it;
//! * [`fock`]: the principal subalgebra of the lattice vertex algebra,
//!   realized inside Heisenberg Fock spaces.
//!
//! [`job`] wraps everything into batch commands with JSON or table output.
//! All arithmetic is over [`Rational`]; nothing is floating point.

pub mod coha;
pub mod dt;
pub mod error;
pub mod fock;
pub mod job;
pub mod linalg;
pub mod poly;
pub mod qseries;
pub mod quiver;

pub use error::{Error, Result};

pub type Rational = num_rational::BigRational;
