use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use super::space::{annihilate, FockVector, Modes};
use crate::qseries::{DimVector, WeightWindow};
use crate::quiver::Quiver;
use crate::Rational;

/// `Γ⁺_{e_i}(z) v = Σ_M z^{−M} v_M`, keyed by `M`.
pub fn gamma_plus(q: &Quiver, i: usize, v: &FockVector) -> BTreeMap<u32, FockVector> {
    let label = v.label().clone();
    let mut total: BTreeMap<u32, FockVector> = BTreeMap::new();
    let mut layer: BTreeMap<u32, FockVector> = BTreeMap::new();
    if !v.is_zero() {
        layer.insert(0, v.clone());
    }
    let mut k: i64 = 0;
    while !layer.is_empty() {
        for (m, u) in &layer {
            total
                .entry(*m)
                .or_insert_with(|| FockVector::zero(label.clone()))
                .add_scaled(u, &Rational::one());
        }
        k += 1;
        // next = A(layer)/k with A = −Σ_m α_m z^{−m}/m
        let mut next: BTreeMap<u32, FockVector> = BTreeMap::new();
        for (shift, u) in &layer {
            let top = u.terms().flat_map(|(ms, _)| ms.iter().map(|&(_, n)| n)).max();
            let Some(top) = top else { continue };
            for m in 1..=top {
                let a = annihilate(q, i, m, u);
                if a.is_zero() {
                    continue;
                }
                let c = -Rational::new(BigInt::one(), BigInt::from(i64::from(m) * k));
                next.entry(shift + m)
                    .or_insert_with(|| FockVector::zero(label.clone()))
                    .add_scaled(&a, &c);
            }
        }
        next.retain(|_, u| !u.is_zero());
        layer = next;
    }
    total.retain(|_, u| !u.is_zero());
    total
}

/// Degree-`M` part of `Γ⁻_{e_i}(z) = exp(Σ α^{(i)}_{−m} z^m/m)`:
/// `Σ_{λ ⊢ M} Π_m (α_{−m}/m)^{c_m}/c_m!`, as mode lists with coefficients.
fn gamma_minus_part(i: usize, total: u32) -> Vec<(Modes, Rational)> {
    fn rec(left: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=left.min(max)).rev() {
            cur.push(p);
            rec(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut parts = Vec::new();
    rec(total, total, &mut Vec::new(), &mut parts);
    parts
        .into_iter()
        .map(|lambda| {
            let mut denom = BigInt::one();
            let mut idx = 0;
            while idx < lambda.len() {
                let p = lambda[idx];
                let c = lambda[idx..].iter().take_while(|&&x| x == p).count();
                for k in 1..=c {
                    denom *= BigInt::from(p) * BigInt::from(k);
                }
                idx += c;
            }
            let modes = lambda.iter().map(|&p| (i, p)).collect();
            (modes, Rational::new(BigInt::one(), denom))
        })
        .collect()
}

/// Coefficient of `z^{−n−1}` in `Γ_{e_i}(z) v`, with monomials above the
/// window dropped.
pub fn vertex_op_coeff(q: &Quiver, i: usize, n: i64, v: &FockVector, win: WeightWindow) -> FockVector {
    apply_vertex_op(q, i, n, v).truncate(q, win.max_twice_weight)
}

/// Untruncated `i(n) v`; the result is finite.
pub(crate) fn apply_vertex_op(q: &Quiver, i: usize, n: i64, v: &FockVector) -> FockVector {
    let beta = v.label();
    let target = beta + &DimVector::unit(q.vertex_count(), i);
    let mut out = FockVector::zero(target.clone());
    let shift = q.chi(&DimVector::unit(q.vertex_count(), i), beta);
    for (m, u) in gamma_plus(q, i, v) {
        // z-exponent so far: shift − M; Γ⁻ supplies z^{M'}
        let need = -n - 1 - shift + i64::from(m);
        if need < 0 {
            continue;
        }
        let need = need as u32;
        for (extra, c) in gamma_minus_part(i, need) {
            for (ms, val) in u.terms() {
                let mut nm = ms.clone();
                nm.extend_from_slice(&extra);
                out.add_term(nm, val * &c);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::space::fock_basis;

    fn d(v: &[u32]) -> DimVector {
        DimVector::new(v.to_vec())
    }

    fn int(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    const WIDE: WeightWindow = WeightWindow { max_twice_weight: 1000 };

    fn quivers() -> Vec<Quiver> {
        vec![
            Quiver::jordan(),
            Quiver::loops(0),
            Quiver::loops(2),
            Quiver::complete(2, 1, 1),
        ]
    }

    #[test]
    fn vacuum_axioms() {
        for q in quivers() {
            let r = q.vertex_count();
            let vac = FockVector::highest(DimVector::zero(r));
            for i in 0..r {
                let e = DimVector::unit(r, i);
                assert_eq!(vertex_op_coeff(&q, i, -1, &vac, WIDE), FockVector::highest(e.clone()));
                for n in 0..5 {
                    assert!(vertex_op_coeff(&q, i, n, &vac, WIDE).is_zero());
                }
                let expected = FockVector::highest(e).create(i, 1);
                assert_eq!(vertex_op_coeff(&q, i, -2, &vac, WIDE), expected);
            }
        }
    }

    #[test]
    fn gamma_minus_third_order() {
        // i(−4)|0⟩ = (α_{−3}/3 + α_{−2}α_{−1}/2 + α_{−1}³/6)|e_i⟩
        let q = Quiver::jordan();
        let out = vertex_op_coeff(&q, 0, -4, &FockVector::highest(d(&[0])), WIDE);
        let mut expected = FockVector::zero(d(&[1]));
        expected.add_term(vec![(0, 3)], Rational::new(1.into(), 3.into()));
        expected.add_term(vec![(0, 1), (0, 2)], Rational::new(1.into(), 2.into()));
        expected.add_term(vec![(0, 1), (0, 1), (0, 1)], Rational::new(1.into(), 6.into()));
        assert_eq!(out, expected);
    }

    /// Γ⁺ on a monomial equals `Π (α^{(j)}_{−n} − χ(e_i,e_j) z^{−n}) |β⟩`.
    #[test]
    fn gamma_plus_matches_binomial_product() {
        for q in quivers() {
            let r = q.vertex_count();
            for level in 0..=4 {
                for m in fock_basis(&q, &d(&vec![1; r]), level) {
                    for i in 0..r {
                        let v = FockVector::monomial(m.clone(), int(1));
                        let got = gamma_plus(&q, i, &v);
                        let mut expected: BTreeMap<u32, FockVector> = BTreeMap::new();
                        expected.insert(0, FockVector::highest(m.label.clone()));
                        for &(j, nn) in &m.modes {
                            let mut next: BTreeMap<u32, FockVector> = BTreeMap::new();
                            for (shift, u) in &expected {
                                next.entry(*shift)
                                    .or_insert_with(|| FockVector::zero(m.label.clone()))
                                    .add_scaled(&u.create(j, nn), &int(1));
                                next.entry(shift + nn)
                                    .or_insert_with(|| FockVector::zero(m.label.clone()))
                                    .add_scaled(u, &int(-q.chi_vertices(i, j)));
                            }
                            expected = next;
                        }
                        expected.retain(|_, u| !u.is_zero());
                        assert_eq!(got, expected, "monomial {m:?}, vertex {i}");
                    }
                }
            }
        }
    }

    #[test]
    fn weight_and_label_bookkeeping() {
        for q in quivers() {
            let r = q.vertex_count();
            let beta = d(&vec![1; r]);
            for level in 0..=3 {
                for m in fock_basis(&q, &beta, level) {
                    let tw = m.twice_weight(&q);
                    let v = FockVector::monomial(m.clone(), int(1));
                    for i in 0..r {
                        for n in -4..4 {
                            let out = vertex_op_coeff(&q, i, n, &v, WIDE);
                            assert_eq!(out.label(), &(&beta + &DimVector::unit(r, i)));
                            for (mono, _) in out.monomials() {
                                assert_eq!(mono.twice_weight(&q), tw + q.chi_vertices(i, i) - 2 * (n + 1));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn window_truncates() {
        let q = Quiver::jordan();
        let vac = FockVector::highest(d(&[0]));
        let win = WeightWindow::new(2);
        assert!(!vertex_op_coeff(&q, 0, -2, &vac, win).is_zero());
        assert!(vertex_op_coeff(&q, 0, -3, &vac, win).is_zero());
    }
}
