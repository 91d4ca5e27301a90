use std::collections::BTreeMap;

use num_traits::{One, Signed};

use crate::coha::coha_character;
use crate::qseries::{pleth_log, DimVector, GradedSeries, LaurentSeries, Precision, QLaurent, WeightWindow};
use crate::quiver::Quiver;
use crate::{Error, Rational, Result};

/// Known-region slack, in `t`-exponents, required past the support of
/// `Ω_d` before it counts as a Laurent polynomial (two weight steps).
pub const CERTIFICATION_MARGIN: i64 = 4;

/// Refined DT invariants `Ω_d(q)` as Laurent polynomials in `t = q^{1/2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DtTable {
    pub dmax: u32,
    pub invariants: BTreeMap<DimVector, QLaurent>,
    pub certified: BTreeMap<DimVector, bool>,
}

impl DtTable {
    pub fn get(&self, d: &DimVector) -> Option<&QLaurent> {
        self.invariants.get(d)
    }

    pub fn is_certified(&self, d: &DimVector) -> bool {
        self.certified.get(d).copied().unwrap_or(false)
    }

    pub fn all_certified(&self) -> bool {
        self.certified.values().all(|&c| c)
    }

    /// Dimension vectors whose entry could not be certified.
    pub fn uncertified(&self) -> Vec<DimVector> {
        self.certified
            .iter()
            .filter(|(_, &c)| !c)
            .map(|(d, _)| d.clone())
            .collect()
    }
}

/// `Log A_Q(x, q^{-1})`, whose `x^d` coefficient is `(−1)^{χ(d,d)} Ω_d(q^{-1})/(1 − q)`.
pub(crate) fn dt_log(q: &Quiver, dmax: u32, win: WeightWindow) -> Result<GradedSeries> {
    pleth_log(&coha_character(q, dmax, win).invert_q())
}

fn one_minus_q() -> LaurentSeries {
    LaurentSeries::exact(QLaurent::from_int_terms(&[(0, 1), (2, -1)]))
}

/// DT invariants for all `|d| ≤ dmax`.
///
/// `Ω_d` is certified when its support, and the bottom weight `χ(d,d)`,
/// sit at least [`CERTIFICATION_MARGIN`] below the edge of the known
/// region; uncertified entries hold the known part only.
pub fn dt_invariants(q: &Quiver, dmax: u32, win: WeightWindow) -> Result<DtTable> {
    let log = dt_log(q, dmax, win)?;
    let mut invariants = BTreeMap::new();
    let mut certified = BTreeMap::new();
    for d in DimVector::all_up_to(q.vertex_count(), dmax) {
        let chi = q.chi_self(&d);
        let sign = if chi.rem_euclid(2) == 1 {
            -Rational::one()
        } else {
            Rational::one()
        };
        // Ω_d(q^{-1}), known up to some bound
        let flipped = (&log.coeff(&d) * &one_minus_q()).scale(&sign);
        let ok = match flipped.precision() {
            Precision::Exact => true,
            Precision::UpTo(b) => {
                let top = flipped.poly().max_exp().unwrap_or(chi).max(chi);
                b - top >= CERTIFICATION_MARGIN
            }
            Precision::DownTo(_) => false,
        };
        let omega = flipped.into_poly().invert_q();
        invariants.insert(d.clone(), omega);
        certified.insert(d, ok);
    }
    Ok(DtTable {
        dmax,
        invariants,
        certified,
    })
}

/// Why a table fails positivity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PositivityOutcome {
    /// Every certified entry is in `ℕ[t^{±1}]` with the right parity.
    Ok { checked: usize, skipped: Vec<DimVector> },
    Counterexample {
        d: DimVector,
        exponent: i64,
        coefficient: Rational,
    },
}

impl PositivityOutcome {
    pub fn is_ok(&self) -> bool {
        matches!(self, PositivityOutcome::Ok { .. })
    }
}

/// Check non-negativity, integrality and `k ≡ χ(d,d) mod 2` on every
/// certified entry. Uncertified entries are listed as skipped.
pub fn positivity_check(q: &Quiver, tbl: &DtTable) -> PositivityOutcome {
    let mut checked = 0;
    let mut skipped = Vec::new();
    for (d, omega) in &tbl.invariants {
        if !tbl.is_certified(d) {
            skipped.push(d.clone());
            continue;
        }
        checked += 1;
        let parity = q.chi_self(d).rem_euclid(2);
        for (k, c) in omega.terms() {
            if c.is_negative() || !c.is_integer() || k.rem_euclid(2) != parity {
                return PositivityOutcome::Counterexample {
                    d: d.clone(),
                    exponent: k,
                    coefficient: c.clone(),
                };
            }
        }
    }
    PositivityOutcome::Ok { checked, skipped }
}

/// Rebuild `A_Q(x, q^{-1})` from a fully certified table via
/// `Exp(Σ (−1)^{χ(d,d)} Ω_d(q^{-1}) x^d / (1 − q))`, known up to `t^bound`.
pub fn dt_exp_form(q: &Quiver, tbl: &DtTable, bound: i64) -> Result<GradedSeries> {
    if !tbl.all_certified() {
        return Err(Error::InvalidInput(format!(
            "table has uncertified entries: {:?}",
            tbl.uncertified().iter().map(|d| d.to_string()).collect::<Vec<_>>()
        )));
    }
    let geometric = LaurentSeries::with_precision(
        QLaurent::from_terms(
            (0..)
                .map(|m| 2 * m)
                .take_while(|&e| e <= bound)
                .map(|e| (e, Rational::one())),
        ),
        Precision::UpTo(bound),
    );
    let mut arg = GradedSeries::zero(q.vertex_count(), tbl.dmax);
    for (d, omega) in &tbl.invariants {
        if d.is_zero() {
            continue;
        }
        let sign = if q.parity(d) { -Rational::one() } else { Rational::one() };
        let c = &LaurentSeries::exact(omega.invert_q().scale(&sign)) * &geometric;
        arg.set(d.clone(), c);
    }
    crate::qseries::pleth_exp(&arg)
}
