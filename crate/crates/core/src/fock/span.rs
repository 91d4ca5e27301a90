use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::space::{FockVector, Modes};
use super::vertex::apply_vertex_op;
use crate::linalg::EchelonBasis;
use crate::qseries::{DimVector, WeightWindow};
use crate::quiver::Quiver;
use crate::{Error, Rational, Result};

/// Graded dimensions of one `L`-degree, keyed by twice-weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionTable {
    pub d: DimVector,
    pub dims: BTreeMap<i64, usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub saturated: Option<bool>,
}

impl DimensionTable {
    pub fn total(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn get(&self, twice_weight: i64) -> usize {
        self.dims.get(&twice_weight).copied().unwrap_or(0)
    }
}

type Cells = BTreeMap<i64, EchelonBasis<Modes>>;

/// Spanned subspaces of every `V_β`, `β ≤ d`, cut at a window relative to
/// the bottom weight of each `β`.
struct SpanRun {
    cells: BTreeMap<DimVector, Cells>,
    saturated: bool,
}

fn row_vector(label: &DimVector, row: &BTreeMap<Modes, BigInt>) -> FockVector {
    let mut v = FockVector::zero(label.clone());
    for (m, c) in row {
        v.add_term(m.clone(), Rational::from_integer(c.clone()));
    }
    v
}

fn run(q: &Quiver, d: &DimVector, win: WeightWindow, framing: Option<&DimVector>) -> Result<SpanRun> {
    let r = q.vertex_count();
    d.check_len(r)?;
    if let Some(w) = framing {
        w.check_len(r)?;
    }
    let bottom = q.chi_self(d);
    if win.max_twice_weight < bottom {
        return Err(Error::WindowTooSmall {
            d: d.clone(),
            min_twice_weight: bottom,
            window: win.max_twice_weight,
        });
    }
    let excess = win.max_twice_weight - bottom;

    let mut betas = d.all_below();
    betas.sort_by_key(|b| (b.total(), b.clone()));

    let mut cells: BTreeMap<DimVector, Cells> = BTreeMap::new();
    let mut vac = EchelonBasis::new();
    vac.insert([(Modes::new(), Rational::from_integer(1.into()))]);
    cells.insert(DimVector::zero(r), BTreeMap::from([(0, vac)]));
    let mut saturated = true;

    for beta in betas.into_iter().skip(1) {
        let floor = q.chi_self(&beta);
        let cap = floor + excess;
        // (vertex, n, source label, source row, target twice-weight)
        let mut jobs = Vec::new();
        for i in 0..r {
            if beta[i] == 0 {
                continue;
            }
            let prev = beta.with_entry(i, beta[i] - 1);
            let (prev, prev_cells) = cells.get_key_value(&prev).expect("lower cells come first");
            for (&tw, basis) in prev_cells {
                let base = tw + q.chi_vertices(i, i) - 2;
                let n_hi = (base - floor).div_euclid(2);
                let n_window = -((cap - base).div_euclid(2));
                let n_lo = match framing {
                    Some(w) => -i64::from(w[i]),
                    None => n_window,
                };
                for n in (n_lo..=n_hi).rev() {
                    for row in basis.rows() {
                        jobs.push((i, n, prev, row, base - 2 * n));
                    }
                }
            }
        }
        let images: Vec<(i64, FockVector)> = jobs
            .par_iter()
            .map(|&(i, n, prev, row, target)| (target, apply_vertex_op(q, i, n, &row_vector(prev, row))))
            .collect();
        let mut here: Cells = BTreeMap::new();
        for (target, v) in images {
            if v.is_zero() {
                continue;
            }
            if target > cap {
                saturated = false;
                continue;
            }
            here.entry(target)
                .or_default()
                .insert(v.terms().map(|(m, c)| (m.clone(), c.clone())));
        }
        here.retain(|_, b| b.rank() > 0);
        cells.insert(beta, here);
    }
    Ok(SpanRun { cells, saturated })
}

fn table(run: &SpanRun, d: &DimVector, saturated: Option<bool>) -> DimensionTable {
    DimensionTable {
        d: d.clone(),
        dims: run.cells[d].iter().map(|(&tw, b)| (tw, b.rank())).collect(),
        saturated,
    }
}

/// Graded dimensions of the principal free vertex algebra `P_{Q,d}` up to
/// the window.
pub fn span_principal(q: &Quiver, d: &DimVector, win: WeightWindow) -> Result<DimensionTable> {
    let run = run(q, d, win, None)?;
    Ok(table(&run, d, None))
}

/// Graded dimensions of the framed subspace `Q_{w,d}`, generated from the
/// vacuum by `i(n)` with `n ≥ −w_i`. `saturated` certifies that no
/// admissible application escaped the window.
pub fn span_framed(q: &Quiver, w: &DimVector, d: &DimVector, win: WeightWindow) -> Result<DimensionTable> {
    let run = run(q, d, win, Some(w))?;
    Ok(table(&run, d, Some(run.saturated)))
}

/// Largest twice-weight `Q_{w,d}` can reach: `Σ_i d_i (χ(e_i,e_i) + 2w_i − 2)`.
pub fn framed_weight_bound(q: &Quiver, w: &DimVector, d: &DimVector) -> i64 {
    (0..q.vertex_count())
        .map(|i| i64::from(d[i]) * (q.chi_vertices(i, i) + 2 * i64::from(w[i]) - 2))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coha::free_vertex_character;

    fn d(v: &[u32]) -> DimVector {
        DimVector::new(v.to_vec())
    }

    #[test]
    fn vacuum_cell() {
        let q = Quiver::loops(2);
        let t = span_principal(&q, &d(&[0]), WeightWindow::new(6)).unwrap();
        assert_eq!(t.dims, BTreeMap::from([(0, 1)]));
    }

    #[test]
    fn single_vertex_line() {
        for q in [Quiver::jordan(), Quiver::loops(0), Quiver::loops(3)] {
            let c = q.chi_vertices(0, 0);
            let t = span_principal(&q, &d(&[1]), WeightWindow::new(c + 10)).unwrap();
            let expected: BTreeMap<i64, usize> = (0..=5).map(|m| (c + 2 * m, 1)).collect();
            assert_eq!(t.dims, expected);
        }
    }

    #[test]
    fn window_too_small() {
        let q = Quiver::loops(0);
        let err = span_principal(&q, &d(&[2]), WeightWindow::new(3)).unwrap_err();
        assert!(matches!(
            err,
            Error::WindowTooSmall {
                min_twice_weight: 4,
                ..
            }
        ));
    }

    fn check_against_character(q: &Quiver, dmax: u32, extra: i64) {
        let r = q.vertex_count();
        for dd in DimVector::all_up_to(r, dmax) {
            let bottom = q.chi_self(&dd);
            let win = WeightWindow::new(bottom + extra);
            let t = span_principal(q, &dd, win).unwrap();
            let ch = free_vertex_character(q, dmax, win);
            let coeff = ch.get(&dd).cloned().unwrap();
            let sign: i64 = if bottom % 2 == 0 { 1 } else { -1 };
            for tw in bottom..=bottom + extra {
                let expect = coeff.coeff(tw).expect("inside window") * Rational::from_integer(sign.into());
                assert_eq!(
                    Rational::from_integer((t.get(tw) as i64).into()),
                    expect,
                    "quiver {:?}, d = {dd}, twice-weight {tw}",
                    q.arrows()
                );
            }
        }
    }

    #[test]
    fn matches_free_vertex_character() {
        check_against_character(&Quiver::jordan(), 3, 10);
        check_against_character(&Quiver::loops(0), 3, 10);
        check_against_character(&Quiver::loops(2), 3, 8);
        check_against_character(&Quiver::complete(2, 0, 1), 3, 6);
    }

    #[test]
    fn framed_trivial_framing() {
        let q = Quiver::loops(2);
        let w = d(&[0]);
        let zero = span_framed(&q, &w, &d(&[0]), WeightWindow::new(0)).unwrap();
        assert_eq!(zero.total(), 1);
        for n in 1..=3 {
            let t = span_framed(&q, &w, &d(&[n]), WeightWindow::new(20)).unwrap();
            assert_eq!(t.total(), 0);
            assert_eq!(t.saturated, Some(true));
        }
    }

    #[test]
    fn catalan_numbers() {
        let q = Quiver::loops(2);
        let w = d(&[1]);
        for (n, cat) in [(1u32, 1usize), (2, 2), (3, 5)] {
            let dd = d(&[n]);
            let win = WeightWindow::new(framed_weight_bound(&q, &w, &dd));
            let t = span_framed(&q, &w, &dd, win).unwrap();
            assert_eq!(t.saturated, Some(true));
            assert_eq!(t.total(), cat, "n = {n}");
        }
    }
}
