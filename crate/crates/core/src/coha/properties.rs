use rayon::prelude::*;

use super::{monomial_basis, ShuffleAlgebra, SymPoly};
use crate::qseries::DimVector;
use crate::{Rational, Result};
use num_traits::One;

/// A failed algebra law, with the offending basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShuffleLawOutcome {
    Ok { pairs: usize, triples: usize },
    NotTwistedCommutative { f: SymPoly, g: SymPoly },
    NotAssociative { f: SymPoly, g: SymPoly, h: SymPoly },
}

impl ShuffleLawOutcome {
    pub fn is_ok(&self) -> bool {
        matches!(self, ShuffleLawOutcome::Ok { .. })
    }
}

/// Monomial basis elements of every nonzero `d` with `|d| ≤ max_total`,
/// of polynomial degree at most `max_poly_degree`.
fn basis_up_to(alg: &ShuffleAlgebra, max_total: u32, max_poly_degree: i64) -> Vec<SymPoly> {
    let q = alg.quiver();
    DimVector::all_up_to(q.vertex_count(), max_total)
        .into_iter()
        .filter(|d| !d.is_zero())
        .flat_map(|d| {
            (0..=max_poly_degree)
                .step_by(2)
                .flat_map(move |p| monomial_basis(q, &d, p))
                .collect::<Vec<_>>()
        })
        .collect()
}

/// Check `f*g = (−1)^{χ(d,e)} g*f` on pairs and `(f*g)*h = f*(g*h)` on
/// triples of basis elements whose dimension vectors sum to at most
/// `max_total`, each factor of polynomial degree at most `max_poly_degree`.
pub fn shuffle_law_check(alg: &ShuffleAlgebra, max_total: u32, max_poly_degree: i64) -> Result<ShuffleLawOutcome> {
    let q = alg.quiver();
    let basis = basis_up_to(alg, max_total, max_poly_degree);
    let pairs: Vec<(&SymPoly, &SymPoly)> = basis
        .iter()
        .flat_map(|f| basis.iter().map(move |g| (f, g)))
        .filter(|(f, g)| f.dim().total() + g.dim().total() <= max_total)
        .collect();
    let bad: Option<(SymPoly, SymPoly)> = pairs
        .par_iter()
        .map(|&(f, g)| -> Result<Option<(SymPoly, SymPoly)>> {
            let fg = alg.product(f, g)?;
            let gf = alg.product(g, f)?;
            let sign = q.euler_form(f.dim(), g.dim())?;
            let expected = if sign.rem_euclid(2) == 1 {
                gf.scale(&-Rational::one())
            } else {
                gf
            };
            Ok((fg != expected).then(|| (f.clone(), g.clone())))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .next();
    if let Some((f, g)) = bad {
        return Ok(ShuffleLawOutcome::NotTwistedCommutative { f, g });
    }

    let triples: Vec<(&SymPoly, &SymPoly, &SymPoly)> = pairs
        .iter()
        .flat_map(|&(f, g)| basis.iter().map(move |h| (f, g, h)))
        .filter(|(f, g, h)| f.dim().total() + g.dim().total() + h.dim().total() <= max_total)
        .collect();
    let bad = triples
        .par_iter()
        .map(|&(f, g, h)| -> Result<Option<(SymPoly, SymPoly, SymPoly)>> {
            let left = alg.product(&alg.product(f, g)?, h)?;
            let right = alg.product(f, &alg.product(g, h)?)?;
            Ok((left != right).then(|| (f.clone(), g.clone(), h.clone())))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .next();
    if let Some((f, g, h)) = bad {
        return Ok(ShuffleLawOutcome::NotAssociative { f, g, h });
    }
    Ok(ShuffleLawOutcome::Ok {
        pairs: pairs.len(),
        triples: triples.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;

    #[test]
    fn laws_on_small_quivers() {
        for q in [Quiver::jordan(), Quiver::loops(0), Quiver::loops(2)] {
            let alg = ShuffleAlgebra::new(q);
            let out = shuffle_law_check(&alg, 3, 4).unwrap();
            assert!(out.is_ok(), "{out:?}");
        }
    }
}
