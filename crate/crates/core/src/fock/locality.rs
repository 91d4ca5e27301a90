use super::space::FockVector;
use super::vertex::vertex_op_coeff;
use crate::qseries::{DimVector, WeightWindow};
use crate::quiver::Quiver;
use crate::{Error, Result};

/// Result of checking `i(n) j(−1)|0⟩ = 0` for `n ≥ N_+(i,j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocalityOutcome {
    /// Vanishing holds for every `n` in `from..=to`, and the order is sharp.
    Ok { from: i64, to: i64 },
    /// `i(n) j(−1)|0⟩` is nonzero although `n ≥ N_+`.
    Violation { n: i64, vector: FockVector },
    /// `i(N−1) j(−1)|0⟩` vanishes, so the order `N ≥ 1` is not attained.
    NotSharp { n: i64 },
}

impl LocalityOutcome {
    pub fn is_ok(&self) -> bool {
        matches!(self, LocalityOutcome::Ok { .. })
    }
}

/// Check locality of the generators `i` and `j` at order `N_+(i,j)`.
///
/// Every `n` whose output could be nonzero on weight grounds is examined;
/// the window must contain the highest output weight involved.
pub fn locality_order_check(q: &Quiver, i: usize, j: usize, win: WeightWindow) -> Result<LocalityOutcome> {
    let r = q.vertex_count();
    let order = q.locality(i, j)?;
    let from = order.max(0);
    let target = &DimVector::unit(r, i) + &DimVector::unit(r, j);
    let bottom = q.chi_self(&target);
    let base = q.chi_vertices(i, i) + q.chi_vertices(j, j) - 2;
    // output twice-weight of i(n) is base − 2n; below `bottom` nothing survives
    let to = from.max((base - bottom).div_euclid(2)) + 1;
    let top_n = if order >= 1 { order - 1 } else { from };
    let highest = base - 2 * top_n;
    if highest > win.max_twice_weight {
        return Err(Error::WindowTooSmall {
            d: target,
            min_twice_weight: highest,
            window: win.max_twice_weight,
        });
    }
    let vac = FockVector::highest(DimVector::zero(r));
    let v = vertex_op_coeff(q, j, -1, &vac, win);
    for n in from..=to {
        let out = vertex_op_coeff(q, i, n, &v, win);
        if !out.is_zero() {
            return Ok(LocalityOutcome::Violation { n, vector: out });
        }
    }
    if order >= 1 && vertex_op_coeff(q, i, order - 1, &v, win).is_zero() {
        return Ok(LocalityOutcome::NotSharp { n: order - 1 });
    }
    Ok(LocalityOutcome::Ok { from, to })
}
