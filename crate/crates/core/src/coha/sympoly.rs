use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::poly::Poly;
use crate::qseries::DimVector;
use crate::Rational;

/// Exponents of one monomial orbit: for each vertex `i`, the `d_i` exponents
/// of `x_{i,1},…,x_{i,d_i}` in non-increasing order.
pub type OrbitKey = Vec<Vec<u32>>;

/// A `Σ_d`-symmetric polynomial in the monomial-symmetric basis.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct SymPoly {
    dim: DimVector,
    terms: BTreeMap<OrbitKey, Rational>,
}

fn canonical(mut key: OrbitKey) -> OrbitKey {
    for block in &mut key {
        block.sort_unstable_by(|a, b| b.cmp(a));
    }
    key
}

/// Variable offsets of each vertex block in the expanded layout.
pub(crate) fn block_offsets(dim: &DimVector) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(dim.len());
    let mut acc = 0;
    for &di in dim.entries() {
        offsets.push(acc);
        acc += di as usize;
    }
    offsets
}

/// All distinct orderings of a multiset.
fn distinct_permutations(items: &[u32]) -> Vec<Vec<u32>> {
    let mut sorted = items.to_vec();
    sorted.sort_unstable();
    let mut out = vec![sorted.clone()];
    // next_permutation over the sorted multiset
    loop {
        let n = sorted.len();
        if n < 2 {
            return out;
        }
        let mut i = n - 1;
        while i > 0 && sorted[i - 1] >= sorted[i] {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        let mut j = n - 1;
        while sorted[j] <= sorted[i - 1] {
            j -= 1;
        }
        sorted.swap(i - 1, j);
        sorted[i..].reverse();
        out.push(sorted.clone());
    }
}

/// True when each vertex block of the exponent vector is non-increasing.
pub(crate) fn is_block_sorted(e: &[u32], dim: &DimVector) -> bool {
    let mut start = 0;
    for &di in dim.entries() {
        let block = &e[start..start + di as usize];
        if block.windows(2).any(|w| w[0] < w[1]) {
            return false;
        }
        start += di as usize;
    }
    true
}

pub(crate) fn split_blocks(e: &[u32], dim: &DimVector) -> OrbitKey {
    let mut out = Vec::with_capacity(dim.len());
    let mut start = 0;
    for &di in dim.entries() {
        out.push(e[start..start + di as usize].to_vec());
        start += di as usize;
    }
    out
}

impl SymPoly {
    pub fn zero(dim: DimVector) -> Self {
        SymPoly {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dim: DimVector) -> Self {
        let key = dim.entries().iter().map(|&di| vec![0; di as usize]).collect();
        SymPoly::orbit(dim, key)
    }

    /// The orbit sum `m_key`. Each block must have length `d_i`.
    pub fn orbit(dim: DimVector, key: OrbitKey) -> Self {
        let mut p = SymPoly::zero(dim);
        p.add_term(key, Rational::one());
        p
    }

    pub fn dim(&self) -> &DimVector {
        &self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&OrbitKey, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &OrbitKey) -> Rational {
        self.terms
            .get(&canonical(key.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, key: OrbitKey, c: Rational) {
        assert_eq!(key.len(), self.dim.len(), "orbit key has wrong vertex count");
        for (block, &di) in key.iter().zip(self.dim.entries()) {
            assert_eq!(block.len(), di as usize, "orbit block has wrong length");
        }
        if c.is_zero() {
            return;
        }
        let key = canonical(key);
        let entry = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn scale(&self, c: &Rational) -> SymPoly {
        let mut out = SymPoly::zero(self.dim.clone());
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    pub fn add(&self, other: &SymPoly) -> SymPoly {
        assert_eq!(
            self.dim, other.dim,
            "adding symmetric polynomials of different dimension"
        );
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &SymPoly) -> SymPoly {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Polynomial degree of an orbit (each variable has degree 2).
    pub fn key_degree(key: &OrbitKey) -> i64 {
        2 * key.iter().flatten().map(|&x| i64::from(x)).sum::<i64>()
    }

    /// The common polynomial degree if the polynomial is homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut degrees = self.terms.keys().map(SymPoly::key_degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// The polynomial-degree-`degree` part.
    pub fn degree_part(&self, degree: i64) -> SymPoly {
        SymPoly {
            dim: self.dim.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| SymPoly::key_degree(k) == degree)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// Expand into explicit variables; vertex `i` occupies a block of `d_i`
    /// consecutive variables.
    pub fn to_poly(&self) -> Poly {
        let nvars = self.dim.total() as usize;
        let mut out = Poly::zero(nvars);
        for (key, c) in &self.terms {
            let per_block: Vec<Vec<Vec<u32>>> = key.iter().map(|b| distinct_permutations(b)).collect();
            let mut exps: Vec<Vec<u32>> = vec![Vec::with_capacity(nvars)];
            for options in &per_block {
                exps = exps
                    .into_iter()
                    .flat_map(|prefix| {
                        options.iter().map(move |o| {
                            let mut p = prefix.clone();
                            p.extend_from_slice(o);
                            p
                        })
                    })
                    .collect();
            }
            for e in exps {
                out.add_term(e, c.clone());
            }
        }
        out
    }

    /// Collect a `Σ_d`-symmetric polynomial back into orbit sums by reading
    /// the coefficients of block-sorted monomials.
    pub fn from_poly(dim: DimVector, p: &Poly) -> SymPoly {
        assert_eq!(p.nvars(), dim.total() as usize);
        let mut out = SymPoly::zero(dim.clone());
        for (e, c) in p.terms() {
            if is_block_sorted(e, &dim) {
                out.add_term(split_blocks(e, &dim), c.clone());
            }
        }
        out
    }

    /// Ordinary product in `Λ_d` (cup product).
    pub fn mul(&self, other: &SymPoly) -> SymPoly {
        assert_eq!(self.dim, other.dim);
        SymPoly::from_poly(self.dim.clone(), &(&self.to_poly() * &other.to_poly()))
    }

    /// Multiply by `e_d^w = Π_i Π_k x_{i,k}^{w_i}`, which shifts every
    /// exponent in block `i` by `w_i`.
    pub fn times_frame_monomial(&self, w: &DimVector) -> SymPoly {
        let mut out = SymPoly::zero(self.dim.clone());
        for (key, c) in &self.terms {
            let shifted = key
                .iter()
                .zip(w.entries())
                .map(|(b, &wi)| b.iter().map(|x| x + wi).collect())
                .collect();
            out.add_term(shifted, c.clone());
        }
        out
    }

    /// `m[(2,0);(1)]` style rendering of one orbit key.
    pub fn render_key(key: &OrbitKey) -> String {
        let blocks: Vec<String> = key
            .iter()
            .map(|b| {
                let inner: Vec<String> = b.iter().map(u32::to_string).collect();
                format!("({})", inner.join(","))
            })
            .collect();
        format!("m[{}]", blocks.join(";"))
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (key, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if abs.is_one() {
                write!(f, "{}", SymPoly::render_key(key))?;
            } else {
                write!(f, "{}*{}", abs, SymPoly::render_key(key))?;
            }
        }
        Ok(())
    }
}
