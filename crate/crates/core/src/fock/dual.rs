use num_bigint::BigInt;
use num_traits::One;

use super::space::FockMonomial;
use crate::coha::sympoly::block_offsets;
use crate::coha::SymPoly;
use crate::poly::Poly;
use crate::quiver::Quiver;
use crate::Rational;

/// The symmetric polynomial paired with a Fock monomial under the power-sum
/// realization: `Π_{j,n} (p_n^{(j)})^{c} / (n^{c} c!)`.
pub fn dual_to_sympoly(q: &Quiver, m: &FockMonomial) -> SymPoly {
    let d = &m.label;
    assert_eq!(d.len(), q.vertex_count(), "label length must match the quiver");
    let nvars = d.total() as usize;
    let offsets = block_offsets(d);
    let mut poly = Poly::one(nvars);
    let mut denom = BigInt::one();
    let mut idx = 0;
    while idx < m.modes.len() {
        let (j, n) = m.modes[idx];
        let c = m.modes[idx..].iter().take_while(|&&x| x == (j, n)).count();
        let mut power_sum = Poly::zero(nvars);
        for k in 0..d[j] as usize {
            let mut e = vec![0; nvars];
            e[offsets[j] + k] = n;
            power_sum.add_term(e, Rational::one());
        }
        poly = &poly * &power_sum.pow(c as u32);
        for k in 1..=c {
            denom *= BigInt::from(n) * BigInt::from(k);
        }
        idx += c;
    }
    SymPoly::from_poly(d.clone(), &poly.scale(&Rational::new(BigInt::one(), denom)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coha::monomial_basis;
    use crate::fock::space::fock_basis;
    use crate::linalg::rank;
    use crate::qseries::DimVector;

    fn d(v: &[u32]) -> DimVector {
        DimVector::new(v.to_vec())
    }

    #[test]
    fn small_examples() {
        let q = Quiver::complete(2, 1, 1);
        let dd = d(&[2, 1]);
        assert_eq!(
            dual_to_sympoly(&q, &FockMonomial::vacuum(dd.clone())),
            SymPoly::one(dd.clone())
        );
        let p1 = dual_to_sympoly(&q, &FockMonomial::new(dd.clone(), vec![(0, 1)]));
        assert_eq!(p1, SymPoly::orbit(dd.clone(), vec![vec![1, 0], vec![0]]));
        let p2 = dual_to_sympoly(&q, &FockMonomial::new(dd.clone(), vec![(0, 2)]));
        assert_eq!(
            p2,
            SymPoly::orbit(dd.clone(), vec![vec![2, 0], vec![0]]).scale(&Rational::new(1.into(), 2.into()))
        );
        // p_1^2/2 = m_(2,0)/2 + m_(1,1)
        let p11 = dual_to_sympoly(&q, &FockMonomial::new(dd.clone(), vec![(0, 1), (0, 1)]));
        assert_eq!(p11.coeff(&vec![vec![1, 1], vec![0]]), Rational::one());
        assert_eq!(p11.coeff(&vec![vec![2, 0], vec![0]]), Rational::new(1.into(), 2.into()));
        // modes at an empty vertex give zero
        let q1 = Quiver::complete(2, 0, 1);
        assert!(dual_to_sympoly(&q1, &FockMonomial::new(d(&[1, 0]), vec![(1, 1)])).is_zero());
    }

    #[test]
    fn spans_symmetric_polynomials() {
        for (q, dd) in [
            (Quiver::jordan(), d(&[3])),
            (Quiver::complete(2, 1, 1), d(&[2, 1])),
            (Quiver::complete(2, 0, 2), d(&[2, 2])),
        ] {
            for level in 0..=5u32 {
                let monos = fock_basis(&q, &dd, level);
                let rows = monos.iter().map(|m| {
                    dual_to_sympoly(&q, m)
                        .terms()
                        .map(|(k, c)| (k.clone(), c.clone()))
                        .collect::<Vec<_>>()
                });
                let want = monomial_basis(&q, &dd, 2 * i64::from(level)).len();
                assert_eq!(rank(rows), want, "d = {dd}, level {level}");
            }
        }
    }
}
