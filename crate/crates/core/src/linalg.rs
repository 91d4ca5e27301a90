//! Incremental fraction-free row echelon form over sparse integer rows.
//!
//! Rows are keyed by an ordered column type. Input rows with rational entries
//! are cleared of denominators; elimination then stays in the integers by
//! cross-multiplying with the pivot row and dividing out the content. The
//! pivot of a row is always its smallest column, so results do not depend on
//! hash order or insertion timing beyond the order rows are offered.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Rational;

pub type IntRow<K> = BTreeMap<K, BigInt>;

#[derive(Clone, Debug)]
pub struct EchelonBasis<K: Ord + Clone> {
    rows: BTreeMap<K, IntRow<K>>,
}

impl<K: Ord + Clone> Default for EchelonBasis<K> {
    fn default() -> Self {
        EchelonBasis { rows: BTreeMap::new() }
    }
}

/// Scale a rational row to a primitive integer row with positive leading entry.
pub fn integer_row<K: Ord + Clone>(row: impl IntoIterator<Item = (K, Rational)>) -> IntRow<K> {
    let mut merged: BTreeMap<K, Rational> = BTreeMap::new();
    for (k, c) in row {
        *merged.entry(k).or_insert_with(Rational::zero) += c;
    }
    merged.retain(|_, c| !c.is_zero());
    let lcm = merged.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: IntRow<K> = merged
        .into_iter()
        .map(|(k, c)| (k, (c * Rational::from_integer(lcm.clone())).to_integer()))
        .collect();
    make_primitive(ints)
}

fn make_primitive<K: Ord + Clone>(mut row: IntRow<K>) -> IntRow<K> {
    let g = row.values().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let negate = row.values().next().is_some_and(|c| c.is_negative());
    if g.is_zero() {
        return row;
    }
    for c in row.values_mut() {
        *c /= &g;
        if negate {
            *c = -&*c;
        }
    }
    row
}

impl<K: Ord + Clone> EchelonBasis<K> {
    pub fn new() -> Self {
        EchelonBasis::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Basis rows, keyed by pivot column.
    pub fn rows(&self) -> impl Iterator<Item = &IntRow<K>> {
        self.rows.values()
    }

    /// Remainder of `row` after elimination against the current pivots.
    pub fn reduce(&self, mut row: IntRow<K>) -> IntRow<K> {
        loop {
            let lead = match row.keys().next() {
                Some(k) => k.clone(),
                None => return row,
            };
            let pivot_row = match self.rows.get(&lead) {
                Some(r) => r,
                None => return row,
            };
            let a = &pivot_row[&lead];
            let b = row[&lead].clone();
            let g = a.gcd(&b);
            let (ma, mb) = (a / &g, &b / &g);
            let mut next: IntRow<K> = BTreeMap::new();
            for (k, c) in row {
                next.insert(k, c * &ma);
            }
            for (k, c) in pivot_row {
                let e = next.entry(k.clone()).or_insert_with(BigInt::zero);
                *e -= c * &mb;
            }
            next.retain(|_, c| !c.is_zero());
            row = make_primitive(next);
        }
    }

    /// Add an integer row; returns `true` when the rank grows.
    pub fn insert_int(&mut self, row: IntRow<K>) -> bool {
        let rem = self.reduce(make_primitive(row));
        match rem.keys().next().cloned() {
            Some(lead) => {
                self.rows.insert(lead, rem);
                true
            }
            None => false,
        }
    }

    /// Add a rational row; returns `true` when the rank grows.
    pub fn insert(&mut self, row: impl IntoIterator<Item = (K, Rational)>) -> bool {
        self.insert_int(integer_row(row))
    }

    pub fn contains(&self, row: impl IntoIterator<Item = (K, Rational)>) -> bool {
        self.reduce(integer_row(row)).is_empty()
    }
}

/// Rank of a family of sparse rational rows.
pub fn rank<K, R, I>(rows: I) -> usize
where
    K: Ord + Clone,
    R: IntoIterator<Item = (K, Rational)>,
    I: IntoIterator<Item = R>,
{
    let mut basis = EchelonBasis::new();
    for r in rows {
        basis.insert(r);
    }
    basis.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn dependent_rows() {
        let rows = vec![
            vec![(0, q(1, 2)), (1, q(1, 3))],
            vec![(0, q(3, 1)), (1, q(2, 1))],
            vec![(1, q(1, 1)), (2, q(-1, 1))],
        ];
        assert_eq!(rank(rows), 2);
    }

    #[test]
    fn contains_span() {
        let mut b = EchelonBasis::new();
        b.insert(vec![("a", q(1, 1)), ("b", q(1, 1))]);
        b.insert(vec![("b", q(1, 1)), ("c", q(1, 1))]);
        assert!(b.contains(vec![("a", q(2, 1)), ("b", q(1, 1)), ("c", q(-1, 1))]));
        assert!(!b.contains(vec![("c", q(1, 1))]));
    }

    /// Rank over the rationals by plain Gauss-Jordan on a dense matrix.
    fn dense_rank(mut m: Vec<Vec<Rational>>) -> usize {
        let cols = m.first().map_or(0, |r| r.len());
        let mut r = 0;
        for c in 0..cols {
            if let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) {
                m.swap(r, p);
                for i in 0..m.len() {
                    if i != r && !m[i][c].is_zero() {
                        let f = &m[i][c] / &m[r][c];
                        let pivot = m[r].clone();
                        for (x, p) in m[i].iter_mut().zip(&pivot) {
                            *x -= &f * p;
                        }
                    }
                }
                r += 1;
            }
        }
        r
    }

    proptest! {
        #[test]
        fn matches_dense_rank(entries in proptest::collection::vec(-3i64..=3, 5 * 4)) {
            let dense: Vec<Vec<Rational>> = entries
                .chunks(4)
                .map(|row| row.iter().map(|&x| q(x, 1)).collect())
                .collect();
            let sparse = dense.iter().map(|row| {
                row.iter().cloned().enumerate().collect::<Vec<_>>()
            });
            prop_assert_eq!(rank(sparse), dense_rank(dense.clone()));
        }
    }
}
