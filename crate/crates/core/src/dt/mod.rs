//! Refined DT invariants, CoHA-module characters and quotient dimensions.

mod invariants;
mod module;
mod report;

pub use invariants::{dt_exp_form, dt_invariants, positivity_check, DtTable, PositivityOutcome, CERTIFICATION_MARGIN};
pub use module::{module_character, module_character_dt_form, module_dims, module_dims_with, ModuleCell, ModuleDims};
pub use report::{
    cross_check, cross_check_with, symmetry_identity_check, CellStatus, CrossCell, CrossCheckReport, ParkingNote,
    SymmetryOutcome,
};
