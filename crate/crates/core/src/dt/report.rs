use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::module::{module_character, module_dims_with};
use crate::coha::{coha_character, ShuffleAlgebra};
use crate::fock::span_framed;
use crate::qseries::{pleth_log, DimVector, GradedSeries, WeightWindow};
use crate::quiver::Quiver;
use crate::{Rational, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CellStatus {
    Agree,
    Mismatch,
    WindowUnsaturated,
}

/// One cohomological degree `k` of `M_{w,d}`, seen three ways.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCell {
    pub degree: i64,
    /// `dim Q_{w,d}` at twice-weight `k`.
    pub fock: Option<usize>,
    /// `dim M^k_{w,d}` from the shuffle quotient.
    pub module: Option<usize>,
    /// `(−1)^{χ(d,d)} [t^{−k}] Z(M_w)_d`, if integral.
    pub character: Option<i64>,
    pub status: CellStatus,
}

/// Comparison of a framed total dimension with the parking-function count
/// `(n+1)^{n−1}`; informational only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParkingNote {
    pub expected: u64,
    pub observed: usize,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheckReport {
    pub w: DimVector,
    pub d: DimVector,
    pub saturated: bool,
    pub cells: Vec<CrossCell>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parking: Option<ParkingNote>,
}

impl CrossCheckReport {
    pub fn all_agree(&self) -> bool {
        self.cells.iter().all(|c| c.status == CellStatus::Agree)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &CrossCell> {
        self.cells.iter().filter(|c| c.status == CellStatus::Mismatch)
    }

    /// Total dimension according to each source, when fully known.
    pub fn totals(&self) -> (Option<usize>, Option<usize>, Option<i64>) {
        let sum_usize = |f: fn(&CrossCell) -> Option<usize>| self.cells.iter().map(f).sum::<Option<usize>>();
        (
            sum_usize(|c| c.fock),
            sum_usize(|c| c.module),
            self.cells.iter().map(|c| c.character).sum(),
        )
    }

    /// The graded dimension as a polynomial in `t`, `Σ_k dim · t^{−k}`,
    /// taken from the first source that knows each cell.
    pub fn graded_dimension(&self) -> Vec<(i64, usize)> {
        self.cells
            .iter()
            .filter_map(|c| {
                let dim = c
                    .module
                    .or(c.fock)
                    .or(c.character.and_then(|x| usize::try_from(x).ok()))?;
                (dim > 0).then_some((-c.degree, dim))
            })
            .collect()
    }
}

/// Compare `Q_{w,d}` (Fock span), `M_{w,d}` (shuffle quotient over the given
/// polynomial degrees) and the module character, degree by degree. The
/// Fock span is dual to the module with twice-weight equal to `k`.
pub fn cross_check(
    q: &Quiver,
    w: &DimVector,
    d: &DimVector,
    win: WeightWindow,
    poly_degrees: RangeInclusive<i64>,
) -> Result<CrossCheckReport> {
    cross_check_with(&ShuffleAlgebra::new(q.clone()), w, d, win, poly_degrees)
}

pub fn cross_check_with(
    alg: &ShuffleAlgebra,
    w: &DimVector,
    d: &DimVector,
    win: WeightWindow,
    poly_degrees: RangeInclusive<i64>,
) -> Result<CrossCheckReport> {
    let q = alg.quiver();
    let chi = q.chi_self(d);
    let fock = span_framed(q, w, d, win)?;
    let saturated = fock.saturated.unwrap_or(false);
    let module = module_dims_with(alg, w, d, poly_degrees.clone())?;

    let mut degrees: BTreeSet<i64> = module.cells.iter().map(|c| c.degree).collect();
    degrees.extend(fock.dims.keys().copied());
    let reach = degrees.iter().map(|k| k.abs()).max().unwrap_or(0);
    let char_win = WeightWindow::new(reach + 2 * w.dot(d) + 2 * chi.abs() + 8);
    let z = module_character(q, w, d.total(), char_win)?.coeff(d);
    let sign = if q.parity(d) { -Rational::one() } else { Rational::one() };
    for (k, c) in z.poly().terms() {
        if !c.is_zero() {
            degrees.insert(-k);
        }
    }

    let cells = degrees
        .into_iter()
        .map(|k| {
            // a saturated span has nothing above the window
            let fock_dim = saturated.then(|| fock.get(k));
            let module_dim = poly_degrees.contains(&(k - chi)).then(|| module.get(d, k).unwrap_or(0));
            let character = z
                .coeff(-k)
                .map(|c| c * &sign)
                .and_then(|c| c.is_integer().then(|| c.to_integer().to_i64()).flatten());
            let known: Vec<i64> = [fock_dim.map(|x| x as i64), module_dim.map(|x| x as i64), character]
                .into_iter()
                .flatten()
                .collect();
            let status = if known.windows(2).any(|p| p[0] != p[1]) {
                CellStatus::Mismatch
            } else if known.len() == 3 {
                CellStatus::Agree
            } else {
                CellStatus::WindowUnsaturated
            };
            CrossCell {
                degree: k,
                fock: fock_dim,
                module: module_dim,
                character,
                status,
            }
        })
        .collect();

    let mut report = CrossCheckReport {
        w: w.clone(),
        d: d.clone(),
        saturated,
        cells,
        parking: None,
    };
    let n = d.len() as u32;
    if n >= 2 && d.entries().iter().all(|&x| x == 1) && w.entries().iter().all(|&x| x == 1) {
        if let (Some(observed), _, _) | (None, Some(observed), _) = report.totals() {
            let expected = u64::from(n + 1).pow(n - 1);
            report.parking = Some(ParkingNote {
                expected,
                observed,
                matches: observed as u64 == expected,
            });
        }
    }
    Ok(report)
}

/// A failed series identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymmetryOutcome {
    Ok,
    Mismatch {
        identity: &'static str,
        d: DimVector,
        exponent: i64,
        left: Rational,
        right: Rational,
    },
}

impl SymmetryOutcome {
    pub fn is_ok(&self) -> bool {
        matches!(self, SymmetryOutcome::Ok)
    }
}

/// Check `Log(A^{-1}) = −Log(A)`, `A^{-1}·A = 1` and that `q → q^{-1}`
/// commutes with `Log`, for `A = A_Q(x, q)` up to `dmax`.
pub fn symmetry_identity_check(q: &Quiver, dmax: u32, win: WeightWindow) -> Result<SymmetryOutcome> {
    let a = coha_character(q, dmax, win);
    let inv = a.inverse()?;
    let log_a = pleth_log(&a)?;
    let checks: [(&'static str, GradedSeries, GradedSeries); 3] = [
        ("Log(A^-1) = -Log(A)", pleth_log(&inv)?, log_a.neg()),
        ("A^-1 * A = 1", inv.mul(&a)?, GradedSeries::one(q.vertex_count(), dmax)),
        (
            "Log(A(q^-1)) at q -> q^-1 = Log(A)",
            pleth_log(&a.invert_q())?.invert_q(),
            log_a,
        ),
    ];
    for (identity, left, right) in checks {
        if let Some((d, exponent, l, r)) = left.first_disagreement(&right) {
            return Ok(SymmetryOutcome::Mismatch {
                identity,
                d,
                exponent,
                left: l,
                right: r,
            });
        }
    }
    Ok(SymmetryOutcome::Ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(v: &[u32]) -> DimVector {
        DimVector::new(v.to_vec())
    }

    #[test]
    fn symmetry_identities() {
        for q in [
            Quiver::jordan(),
            Quiver::loops(2),
            Quiver::loops(0),
            Quiver::complete(2, 2, 1),
        ] {
            assert!(symmetry_identity_check(&q, 3, WeightWindow::new(30)).unwrap().is_ok());
        }
        assert!(symmetry_identity_check(&Quiver::loops(0), 1, WeightWindow::new(4))
            .unwrap()
            .is_ok());
    }

    #[test]
    fn trivial_framing_is_a_point() {
        let q = Quiver::loops(2);
        let w = d(&[0]);
        for n in 0..=2 {
            let r = cross_check(&q, &w, &d(&[n]), WeightWindow::new(4), 0..=8).unwrap();
            assert!(r.all_agree(), "{r:?}");
            assert_eq!(r.totals().1, Some(usize::from(n == 0)));
        }
    }

    #[test]
    fn catalan_agreement() {
        let q = Quiver::loops(2);
        let w = d(&[1]);
        for n in 1..=3u32 {
            let dd = d(&[n]);
            let win = WeightWindow::new(crate::fock::framed_weight_bound(&q, &w, &dd));
            let r = cross_check(&q, &w, &dd, win, 0..=i64::from(2 * n * n)).unwrap();
            assert!(r.all_agree(), "{r:#?}");
        }
    }
}
