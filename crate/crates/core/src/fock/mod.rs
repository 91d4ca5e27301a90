//! Lattice vertex operators on Heisenberg Fock spaces.

mod dual;
mod locality;
mod space;
mod span;
mod vertex;

pub use dual::dual_to_sympoly;
pub use locality::{locality_order_check, LocalityOutcome};
pub use space::{annihilate, fock_basis, FockMonomial, FockVector, Modes};
pub use span::{framed_weight_bound, span_framed, span_principal, DimensionTable};
pub use vertex::{gamma_plus, vertex_op_coeff};
