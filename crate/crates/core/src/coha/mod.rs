//! The cohomological Hall algebra `H_Q = ⊕_d Λ_d[−χ(d,d)]` as a shuffle
//! algebra, its character, and generators of the framing ideals.

mod properties;
mod shuffle;
pub(crate) mod sympoly;

pub use properties::{shuffle_law_check, ShuffleLawOutcome};
pub use shuffle::{shuffle_product, ShuffleAlgebra};
pub use sympoly::{OrbitKey, SymPoly};

use num_traits::One;

use crate::qseries::{DimVector, GradedSeries, LaurentSeries, Precision, QLaurent, WeightWindow};
use crate::quiver::Quiver;
use crate::Rational;

/// A bidegree `(d, k)` of `H_Q`.
///
/// `k` is the cohomological degree; the underlying polynomial degree in
/// `Λ_d` is `k − χ(d,d)`, since `H_{Q,d} = Λ_d[−χ(d,d)]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CohaDegree {
    pub dim: DimVector,
    pub degree: i64,
}

impl CohaDegree {
    pub fn from_poly_degree(q: &Quiver, dim: DimVector, poly_degree: i64) -> Self {
        let degree = poly_degree + q.chi_self(&dim);
        CohaDegree { dim, degree }
    }

    pub fn poly_degree(&self, q: &Quiver) -> i64 {
        self.degree - q.chi_self(&self.dim)
    }
}

/// Partitions of `total` into at most `parts` parts, padded with zeros to
/// length `parts`, largest first part first.
fn padded_partitions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn rec(remaining: u32, max_part: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 0 {
            if remaining == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let upper = remaining.min(max_part);
        for p in (0..=upper).rev() {
            if u64::from(p) * (slots as u64) < u64::from(remaining) {
                break;
            }
            cur.push(p);
            rec(remaining - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, total, parts, &mut Vec::with_capacity(parts), &mut out);
    out
}

/// Orbit keys of `Λ_d` whose exponents sum to `half_degree`.
fn orbit_keys(d: &DimVector, half_degree: u32) -> Vec<OrbitKey> {
    fn rec(d: &DimVector, vertex: usize, remaining: u32, cur: &mut OrbitKey, out: &mut Vec<OrbitKey>) {
        if vertex == d.len() {
            if remaining == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let di = d[vertex] as usize;
        let budgets: Vec<u32> = if vertex + 1 == d.len() {
            vec![remaining]
        } else {
            (0..=remaining).rev().collect()
        };
        for here in budgets {
            if di == 0 && here > 0 {
                continue;
            }
            for block in padded_partitions(here, di) {
                cur.push(block);
                rec(d, vertex + 1, remaining - here, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(d, 0, half_degree, &mut Vec::new(), &mut out);
    out
}

/// Monomial-symmetric basis of the polynomial-degree-`poly_degree` part of
/// `Λ_d` (every variable has degree 2). Odd or negative degrees give an
/// empty list.
pub fn monomial_basis(q: &Quiver, d: &DimVector, poly_degree: i64) -> Vec<SymPoly> {
    assert_eq!(d.len(), q.vertex_count(), "dimension vector length");
    if poly_degree < 0 || poly_degree % 2 != 0 {
        return Vec::new();
    }
    orbit_keys(d, (poly_degree / 2) as u32)
        .into_iter()
        .map(|k| SymPoly::orbit(d.clone(), k))
        .collect()
}

/// Generators `e_d^w · m` of the framing ideal at `d`, for `m` running over
/// the monomial basis of degree `poly_degree − 2 w·d`.
pub fn frame_ideal_generators(q: &Quiver, w: &DimVector, d: &DimVector, poly_degree: i64) -> Vec<SymPoly> {
    monomial_basis(q, d, poly_degree - 2 * w.dot(d))
        .into_iter()
        .map(|m| m.times_frame_monomial(w))
        .collect()
}

/// `Π_i Π_{k=1}^{d_i} 1/(1 − t^{2k})`, known through `t^bound`.
fn inverse_q_pochhammer(d: &DimVector, bound: i64) -> LaurentSeries {
    let mut acc = LaurentSeries::one();
    for &di in d.entries() {
        for k in 1..=i64::from(di) {
            let step = 2 * k;
            let terms = (0..)
                .map(|m| m * step)
                .take_while(|&e| e <= bound)
                .map(|e| (e, Rational::one()));
            let geometric = LaurentSeries::with_precision(QLaurent::from_terms(terms), Precision::UpTo(bound));
            acc = &acc * &geometric;
        }
    }
    acc
}

/// `A_Q(x, q^{-1}) = Σ_d (−t)^{χ(d,d)} / (q)_d · x^d`, exact for every
/// `t`-exponent up to the window. This is also `Z(P_Q, x, q)`.
pub fn free_vertex_character(q: &Quiver, dmax: u32, window: WeightWindow) -> GradedSeries {
    let r = q.vertex_count();
    let mut out = GradedSeries::zero(r, dmax);
    for d in DimVector::all_up_to(r, dmax) {
        let chi = q.chi_self(&d);
        let inner = inverse_q_pochhammer(&d, window.max_twice_weight - chi);
        let sign = if chi.rem_euclid(2) == 1 {
            -Rational::one()
        } else {
            Rational::one()
        };
        out.set(d, inner.shift(chi).scale(&sign));
    }
    out
}

/// `A_Q(x, q) = Z(H_Q, x, q) = Σ_d (−t)^{−χ(d,d)} / (q^{-1})_d · x^d`.
///
/// Each coefficient is infinite towards negative powers of `t`; it is exact
/// for every exponent `≥ −window.max_twice_weight`.
pub fn coha_character(q: &Quiver, dmax: u32, window: WeightWindow) -> GradedSeries {
    free_vertex_character(q, dmax, window).invert_q()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(v: &[u32]) -> DimVector {
        DimVector::new(v.to_vec())
    }

    #[test]
    fn basis_examples() {
        let q = Quiver::jordan();
        assert_eq!(monomial_basis(&q, &d(&[1]), 0), vec![SymPoly::one(d(&[1]))]);
        assert_eq!(
            monomial_basis(&q, &d(&[2]), 2),
            vec![SymPoly::orbit(d(&[2]), vec![vec![1, 0]])]
        );
        assert_eq!(
            monomial_basis(&q, &d(&[2]), 4),
            vec![
                SymPoly::orbit(d(&[2]), vec![vec![2, 0]]),
                SymPoly::orbit(d(&[2]), vec![vec![1, 1]]),
            ]
        );
        assert!(monomial_basis(&q, &d(&[2]), 3).is_empty());
        assert!(monomial_basis(&q, &d(&[0]), 2).is_empty());
        assert_eq!(monomial_basis(&q, &d(&[0]), 0).len(), 1);
    }

    #[test]
    fn basis_two_vertices() {
        let q = Quiver::complete(2, 2, 1);
        // degree 2 in Λ_(1,1): x_{1,1} and x_{2,1}
        let b = monomial_basis(&q, &d(&[1, 1]), 2);
        assert_eq!(b.len(), 2);
        let b = monomial_basis(&q, &d(&[2, 1]), 4);
        // (2,0|0) (1,1|0) (1,0|1) (0,0|2)
        assert_eq!(b.len(), 4);
    }

    #[test]
    fn frame_generators() {
        let q = Quiver::loops(1);
        assert_eq!(
            frame_ideal_generators(&q, &d(&[0]), &d(&[2]), 4),
            monomial_basis(&q, &d(&[2]), 4)
        );
        assert_eq!(
            frame_ideal_generators(&q, &d(&[1]), &d(&[1]), 2),
            vec![SymPoly::orbit(d(&[1]), vec![vec![1]])]
        );
        assert_eq!(
            frame_ideal_generators(&q, &d(&[1]), &d(&[2]), 4),
            vec![SymPoly::orbit(d(&[2]), vec![vec![1, 1]])]
        );
        assert!(frame_ideal_generators(&q, &d(&[1]), &d(&[2]), 2).is_empty());
    }

    #[test]
    fn coha_degree_shift() {
        let q = Quiver::loops(2);
        let deg = CohaDegree::from_poly_degree(&q, d(&[2]), 0);
        assert_eq!(deg.degree, -4);
        assert_eq!(deg.poly_degree(&q), 0);
    }

    #[test]
    fn character_examples() {
        let win = WeightWindow::new(10);
        let jordan = coha_character(&Quiver::jordan(), 3, win);
        assert_eq!(jordan.coeff(&d(&[0])).poly(), &QLaurent::one());
        let c1 = jordan.coeff(&d(&[1]));
        assert_eq!(c1.precision(), Precision::DownTo(-10));
        for m in 0..=5 {
            assert_eq!(c1.coeff(-2 * m).unwrap(), Rational::one());
        }
        for k in (-9..0).step_by(2) {
            assert_eq!(c1.coeff(k).unwrap(), Rational::from_integer(0.into()));
        }
        assert_eq!(c1.coeff(-11), None);
    }

    #[test]
    fn character_top_weight() {
        for q in [Quiver::loops(0), Quiver::loops(2), Quiver::complete(2, 2, 1)] {
            let a = coha_character(&q, 3, WeightWindow::new(20));
            for (dim, c) in a.iter() {
                let chi = q.chi_self(dim);
                let top = c.poly().max_exp().unwrap();
                assert_eq!(top, -chi);
                let expected = if chi.rem_euclid(2) == 1 { -1 } else { 1 };
                assert_eq!(c.poly().coeff(top), Rational::from_integer(expected.into()));
            }
        }
    }

    #[test]
    fn basis_counts_match_character() {
        // dim Λ_d at polynomial degree 2m is the t^{-2m} coefficient of 1/(q^{-1})_d
        let q = Quiver::complete(2, 0, 0);
        let a = coha_character(&q, 4, WeightWindow::new(40));
        for dim in DimVector::all_up_to(2, 4) {
            let chi = q.chi_self(&dim);
            let c = a.coeff(&dim);
            for m in 0..=8 {
                let count = monomial_basis(&q, &dim, 2 * m).len() as i64;
                let k = -chi - 2 * m;
                let coeff = c.coeff(k).unwrap();
                let sign = if chi.rem_euclid(2) == 1 { -1 } else { 1 };
                assert_eq!(coeff, Rational::from_integer((sign * count).into()), "d={dim} m={m}");
            }
        }
    }
}
