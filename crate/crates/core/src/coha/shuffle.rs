//! The shuffle product `f * g = Σ_{σ ∈ Sh(d,e)} σ(f g K)`.
//!
//! `f` and `g` are expanded into explicit variables, multiplied by the
//! polynomial part of the kernel, and pushed through every `(d,e)`-shuffle.
//! When a vertex has no loops the kernel has simple poles along
//! `y_{i,ℓ} = x_{i,k}`; those terms are brought over the Vandermonde
//! denominator of the vertex block, summed, and divided out exactly.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_traits::One;

use super::sympoly::{block_offsets, is_block_sorted, split_blocks, SymPoly};
use crate::error::{Error, Result};
use crate::poly::{relabel_exponent, Poly};
use crate::qseries::DimVector;
use crate::quiver::Quiver;
use crate::Rational;

/// Everything about `Sh(d,e)` that does not depend on `f` and `g`.
#[derive(Debug)]
struct ShufflePlan {
    total: DimVector,
    nvars: usize,
    x_positions: Vec<usize>,
    y_positions: Vec<usize>,
    /// Polynomial part of the kernel, in the unshuffled layout.
    kernel: Poly,
    /// For each shuffle, the new position of every variable.
    shuffles: Vec<Vec<usize>>,
    /// `Δ / σ(denominator)` per shuffle; empty when the kernel is polynomial.
    corrections: Vec<Poly>,
    /// Pairs `(b, a)`, `a < b`, making up the Vandermonde factor to divide by.
    vandermonde: Vec<(usize, usize)>,
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

impl ShufflePlan {
    fn build(q: &Quiver, d: &DimVector, e: &DimVector) -> ShufflePlan {
        let r = q.vertex_count();
        let total = d + e;
        let nvars = total.total() as usize;
        let offsets = block_offsets(&total);
        let mut x_positions = Vec::new();
        let mut y_positions = Vec::new();
        for i in 0..r {
            x_positions.extend((0..d[i] as usize).map(|k| offsets[i] + k));
        }
        for i in 0..r {
            y_positions.extend((0..e[i] as usize).map(|l| offsets[i] + d[i] as usize + l));
        }
        let x_of = |i: usize, k: usize| offsets[i] + k;
        let y_of = |j: usize, l: usize| offsets[j] + d[j] as usize + l;

        let mut kernel = Poly::one(nvars);
        for i in 0..r {
            for j in 0..r {
                let power = -q.chi_vertices(i, j);
                if power <= 0 {
                    continue;
                }
                for k in 0..d[i] as usize {
                    for l in 0..e[j] as usize {
                        let factor = Poly::difference(nvars, y_of(j, l), x_of(i, k));
                        kernel = &kernel * &factor.pow(power as u32);
                    }
                }
            }
        }

        let mut per_vertex: Vec<Vec<Vec<usize>>> = Vec::with_capacity(r);
        for i in 0..r {
            let block = (d[i] + e[i]) as usize;
            per_vertex.push(combinations(block, d[i] as usize));
        }
        let mut shuffles: Vec<Vec<usize>> = vec![vec![usize::MAX; nvars]];
        for i in 0..r {
            let block = (d[i] + e[i]) as usize;
            let mut next = Vec::new();
            for partial in &shuffles {
                for subset in &per_vertex[i] {
                    let mut map = partial.clone();
                    let complement: Vec<usize> = (0..block).filter(|p| !subset.contains(p)).collect();
                    for (k, &s) in subset.iter().enumerate() {
                        map[x_of(i, k)] = offsets[i] + s;
                    }
                    for (l, &s) in complement.iter().enumerate() {
                        map[y_of(i, l)] = offsets[i] + s;
                    }
                    next.push(map);
                }
            }
            shuffles = next;
        }

        let poles: Vec<usize> = (0..r)
            .filter(|&i| q.chi_vertices(i, i) == 1 && d[i] > 0 && e[i] > 0)
            .collect();
        let mut vandermonde = Vec::new();
        for &i in &poles {
            let block = (d[i] + e[i]) as usize;
            for a in 0..block {
                for b in (a + 1)..block {
                    vandermonde.push((offsets[i] + b, offsets[i] + a));
                }
            }
        }
        let mut corrections = Vec::new();
        if !vandermonde.is_empty() {
            for map in &shuffles {
                let is_x = |pos: usize| x_positions.iter().any(|&p| map[p] == pos);
                let mut c = Poly::one(nvars);
                for &(b, a) in &vandermonde {
                    match (is_x(a), is_x(b)) {
                        (true, false) => {}
                        (false, true) => c = c.scale(&-Rational::one()),
                        _ => c = &c * &Poly::difference(nvars, b, a),
                    }
                }
                corrections.push(c);
            }
        }

        ShufflePlan {
            total,
            nvars,
            x_positions,
            y_positions,
            kernel,
            shuffles,
            corrections,
            vandermonde,
        }
    }
}

/// Shuffle algebra of a quiver, caching the per-`(d,e)` shuffle data.
#[derive(Debug)]
pub struct ShuffleAlgebra {
    quiver: Quiver,
    plans: Mutex<HashMap<(DimVector, DimVector), Arc<ShufflePlan>>>,
}

impl ShuffleAlgebra {
    pub fn new(quiver: Quiver) -> Self {
        ShuffleAlgebra {
            quiver,
            plans: Mutex::new(HashMap::new()),
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    fn plan(&self, d: &DimVector, e: &DimVector) -> Arc<ShufflePlan> {
        let key = (d.clone(), e.clone());
        if let Some(p) = self.plans.lock().expect("plan cache poisoned").get(&key) {
            return p.clone();
        }
        let plan = Arc::new(ShufflePlan::build(&self.quiver, d, e));
        self.plans
            .lock()
            .expect("plan cache poisoned")
            .entry(key)
            .or_insert(plan)
            .clone()
    }

    /// `f * g ∈ Λ_{d+e}` for `f ∈ Λ_d`, `g ∈ Λ_e`.
    pub fn product(&self, f: &SymPoly, g: &SymPoly) -> Result<SymPoly> {
        let r = self.quiver.vertex_count();
        f.dim().check_len(r)?;
        g.dim().check_len(r)?;
        let plan = self.plan(f.dim(), g.dim());
        let fx = f.to_poly().embed(plan.nvars, &plan.x_positions);
        let gy = g.to_poly().embed(plan.nvars, &plan.y_positions);
        let integrand = &(&fx * &gy) * &plan.kernel;

        if plan.vandermonde.is_empty() {
            // Only block-sorted monomials are needed to read off orbit sums.
            let mut acc: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
            for map in &plan.shuffles {
                for (e, c) in integrand.terms() {
                    let ne = relabel_exponent(e, map);
                    if is_block_sorted(&ne, &plan.total) {
                        *acc.entry(ne).or_insert_with(|| Rational::from_integer(0.into())) += c;
                    }
                }
            }
            let mut out = SymPoly::zero(plan.total.clone());
            for (e, c) in acc {
                out.add_term(split_blocks(&e, &plan.total), c);
            }
            return Ok(out);
        }

        let mut numerator = Poly::zero(plan.nvars);
        for (map, corr) in plan.shuffles.iter().zip(&plan.corrections) {
            numerator = &numerator + &(&integrand.relabel(map) * corr);
        }
        for &(b, a) in &plan.vandermonde {
            numerator = numerator.div_difference(b, a).ok_or(Error::DenominatorNotCleared)?;
        }
        Ok(SymPoly::from_poly(plan.total.clone(), &numerator))
    }
}

/// One-off shuffle product; use [`ShuffleAlgebra`] for repeated products.
pub fn shuffle_product(q: &Quiver, f: &SymPoly, g: &SymPoly) -> Result<SymPoly> {
    ShuffleAlgebra::new(q.clone()).product(f, g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(v: &[u32]) -> DimVector {
        DimVector::new(v.to_vec())
    }

    fn int(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn jordan_one_times_one() {
        let one = SymPoly::one(d(&[1]));
        let p = shuffle_product(&Quiver::jordan(), &one, &one).unwrap();
        assert_eq!(p, SymPoly::one(d(&[2])).scale(&int(2)));
    }

    #[test]
    fn no_loop_one_times_one_vanishes() {
        let one = SymPoly::one(d(&[1]));
        let p = shuffle_product(&Quiver::loops(0), &one, &one).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn jordan_x_times_one() {
        let x = SymPoly::orbit(d(&[1]), vec![vec![1]]);
        let one = SymPoly::one(d(&[1]));
        let p = shuffle_product(&Quiver::jordan(), &x, &one).unwrap();
        assert_eq!(p, SymPoly::orbit(d(&[2]), vec![vec![1, 0]]));
    }

    #[test]
    fn no_loop_products_are_exterior() {
        // For the no-loop quiver the CoHA is an exterior algebra:
        // x^a * x^b = (x1^a x2^b - x1^b x2^a)/(x2 - x1) style divided differences.
        let q = Quiver::loops(0);
        let x = SymPoly::orbit(d(&[1]), vec![vec![1]]);
        let one = SymPoly::one(d(&[1]));
        let p = shuffle_product(&q, &x, &one).unwrap();
        // (x1 - x2)/(x2 - x1) = -1
        assert_eq!(p, SymPoly::one(d(&[2])).scale(&int(-1)));
        let back = shuffle_product(&q, &one, &x).unwrap();
        assert_eq!(back, SymPoly::one(d(&[2])));
    }

    #[test]
    fn two_loop_degree_shift() {
        // χ(1,1) = -1 adds 2 to the polynomial degree:
        // x1(x2 - x1) + x2(x1 - x2) = 2 m_(1,1) - m_(2,0)
        let x = SymPoly::orbit(d(&[1]), vec![vec![1]]);
        let one = SymPoly::one(d(&[1]));
        let p = shuffle_product(&Quiver::loops(2), &x, &one).unwrap();
        assert_eq!(p.homogeneous_degree(), Some(4));
        assert_eq!(p.coeff(&vec![vec![1, 1]]), int(2));
        assert_eq!(p.coeff(&vec![vec![2, 0]]), int(-1));
        // the anti-commutation for odd χ kills squares of degree-0 elements
        assert!(shuffle_product(&Quiver::loops(2), &one, &one).unwrap().is_zero());
    }

    #[test]
    fn length_mismatch() {
        let one = SymPoly::one(d(&[1, 0]));
        assert!(matches!(
            shuffle_product(&Quiver::jordan(), &one, &one),
            Err(Error::LengthMismatch { .. })
        ));
    }
}
