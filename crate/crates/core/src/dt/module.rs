use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::invariants::dt_log;
use crate::coha::{coha_character, frame_ideal_generators, monomial_basis, ShuffleAlgebra, SymPoly};
use crate::linalg::EchelonBasis;
use crate::qseries::{pleth_exp, DimVector, GradedSeries, LaurentSeries, QLaurent, WeightWindow};
use crate::quiver::Quiver;
use crate::Result;

/// `Z(M_w, x, q) = A_Q(x,q) · S_{−2w} A_Q(x,q)^{-1}`.
pub fn module_character(q: &Quiver, w: &DimVector, dmax: u32, win: WeightWindow) -> Result<GradedSeries> {
    w.check_len(q.vertex_count())?;
    let a = coha_character(q, dmax, win);
    let twisted_inverse = a.inverse()?.twist_by(w, -2)?;
    a.mul(&twisted_inverse)
}

/// The same character through DT invariants:
/// `Z(M_w, x, q^{-1}) = Exp(Σ (1 − q^{w·d})/(1 − q) (−1)^{χ(d,d)} Ω_d(q^{-1}) x^d)`,
/// returned in the orientation of [`module_character`].
pub fn module_character_dt_form(q: &Quiver, w: &DimVector, dmax: u32, win: WeightWindow) -> Result<GradedSeries> {
    w.check_len(q.vertex_count())?;
    let log = dt_log(q, dmax, win)?;
    let arg = log.map_coeffs(|d, c| {
        let factor = QLaurent::from_int_terms(&[(0, 1), (2 * w.dot(d), -1)]);
        c * &LaurentSeries::exact(factor)
    });
    Ok(pleth_exp(&arg)?.invert_q())
}

/// One graded piece `M^k_{w,d}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleCell {
    pub d: DimVector,
    /// Cohomological degree `k`.
    pub degree: i64,
    /// Degree in `Λ_d`, `k − χ(d,d)`.
    pub poly_degree: i64,
    pub dim: usize,
}

/// Graded dimensions of the module `M_w`, sorted by `(d, degree)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleDims {
    pub w: DimVector,
    pub cells: Vec<ModuleCell>,
}

impl ModuleDims {
    pub fn get(&self, d: &DimVector, degree: i64) -> Option<usize> {
        self.cells
            .iter()
            .find(|c| &c.d == d && c.degree == degree)
            .map(|c| c.dim)
    }

    pub fn total(&self, d: &DimVector) -> usize {
        self.cells.iter().filter(|c| &c.d == d).map(|c| c.dim).sum()
    }
}

/// `dim Λ_d^{p} − rank` of the framing ideal at polynomial degree `p`.
fn quotient_dim(alg: &ShuffleAlgebra, w: &DimVector, d: &DimVector, p: i64) -> Result<usize> {
    let q = alg.quiver();
    let full = monomial_basis(q, d, p).len();
    if full == 0 || d.is_zero() {
        return Ok(full);
    }
    let mut span: EchelonBasis<crate::coha::OrbitKey> = EchelonBasis::new();
    let mut parts = d.all_below();
    parts.retain(|e| !e.is_zero());
    // largest frame component first: `1 * e^w Λ_d` is usually the bulk
    parts.sort_by_key(|e| std::cmp::Reverse((e.total(), e.clone())));
    for dpp in parts {
        let dp = d.checked_sub(&dpp).expect("part below d");
        let chi = q.euler_form(&dp, &dpp)?;
        let top = p + 2 * chi - 2 * w.dot(&dpp);
        let mut pp = 0;
        while pp <= top {
            let fs = monomial_basis(q, &dp, pp);
            let gs = frame_ideal_generators(q, w, &dpp, p - pp + 2 * chi);
            let pairs: Vec<(&SymPoly, &SymPoly)> = fs.iter().flat_map(|f| gs.iter().map(move |g| (f, g))).collect();
            let products: Vec<SymPoly> = pairs
                .par_iter()
                .map(|(f, g)| alg.product(f, g))
                .collect::<Result<_>>()?;
            for prod in products {
                span.insert(prod.terms().map(|(k, c)| (k.clone(), c.clone())));
                if span.rank() == full {
                    return Ok(0);
                }
            }
            pp += 2;
        }
    }
    Ok(full - span.rank())
}

/// Graded dimensions of `M_{w,d}` for every polynomial degree in
/// `poly_degrees` (odd degrees are empty and skipped).
pub fn module_dims_with(
    alg: &ShuffleAlgebra,
    w: &DimVector,
    d: &DimVector,
    poly_degrees: RangeInclusive<i64>,
) -> Result<ModuleDims> {
    let q = alg.quiver();
    w.check_len(q.vertex_count())?;
    d.check_len(q.vertex_count())?;
    let chi = q.chi_self(d);
    let mut cells = Vec::new();
    for p in poly_degrees.filter(|p| p.rem_euclid(2) == 0 && *p >= 0) {
        cells.push(ModuleCell {
            d: d.clone(),
            degree: p + chi,
            poly_degree: p,
            dim: quotient_dim(alg, w, d, p)?,
        });
    }
    Ok(ModuleDims { w: w.clone(), cells })
}

/// Graded dimensions of `M_{w,d} = H_{Q,d} / Σ_{d''>0} H_{Q,d'} * e^w_{d''} H_{Q,d''}`.
pub fn module_dims(q: &Quiver, w: &DimVector, d: &DimVector, poly_degrees: RangeInclusive<i64>) -> Result<ModuleDims> {
    module_dims_with(&ShuffleAlgebra::new(q.clone()), w, d, poly_degrees)
}
