use std::fmt;
use std::ops::{Add, Index};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A dimension vector `d ∈ ℕ^I`, ordered lexicographically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimVector(Vec<u32>);

impl DimVector {
    pub fn new(entries: Vec<u32>) -> Self {
        DimVector(entries)
    }

    pub fn zero(rank: usize) -> Self {
        DimVector(vec![0; rank])
    }

    pub fn unit(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        DimVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// Total degree `|d| = Σ d_i`.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &DimVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_sub(&self, other: &DimVector) -> Option<DimVector> {
        if self.0.len() != other.0.len() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(DimVector)
    }

    pub fn scale(&self, n: u32) -> DimVector {
        DimVector(self.0.iter().map(|x| x * n).collect())
    }

    pub fn dot(&self, other: &DimVector) -> i64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| i64::from(*a) * i64::from(*b))
            .sum()
    }

    pub fn check_len(&self, rank: usize) -> Result<()> {
        if self.0.len() == rank {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: rank,
                found: self.0.len(),
            })
        }
    }

    pub fn with_entry(&self, i: usize, value: u32) -> DimVector {
        let mut v = self.0.clone();
        v[i] = value;
        DimVector(v)
    }

    /// All vectors of the given length with total degree at most `max_total`,
    /// in lexicographic order.
    pub fn all_up_to(rank: usize, max_total: u32) -> Vec<DimVector> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; rank];
        fill_up_to(&mut cur, 0, max_total, &mut out);
        out.sort();
        out
    }

    /// All vectors `e` with `0 ≤ e ≤ self` componentwise, in lexicographic order.
    pub fn all_below(&self) -> Vec<DimVector> {
        let mut out = vec![Vec::new()];
        for &bound in &self.0 {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<u32>| {
                    (0..=bound).map(move |x| {
                        let mut p = prefix.clone();
                        p.push(x);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(DimVector).collect()
    }
}

fn fill_up_to(cur: &mut Vec<u32>, pos: usize, budget: u32, out: &mut Vec<DimVector>) {
    if pos == cur.len() {
        out.push(DimVector(cur.clone()));
        return;
    }
    for x in 0..=budget {
        cur[pos] = x;
        fill_up_to(cur, pos + 1, budget - x, out);
    }
    cur[pos] = 0;
}

impl Add for &DimVector {
    type Output = DimVector;

    fn add(self, rhs: &DimVector) -> DimVector {
        assert_eq!(self.0.len(), rhs.0.len(), "dimension vectors of different length");
        DimVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Index<usize> for DimVector {
    type Output = u32;

    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl From<Vec<u32>> for DimVector {
    fn from(v: Vec<u32>) -> Self {
        DimVector(v)
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerations() {
        let all = DimVector::all_up_to(2, 2);
        assert_eq!(all.len(), 6);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        let below = DimVector::new(vec![1, 2]).all_below();
        assert_eq!(below.len(), 6);
        assert_eq!(below[0], DimVector::zero(2));
    }

    #[test]
    fn arithmetic() {
        let a = DimVector::new(vec![1, 2]);
        let b = DimVector::new(vec![0, 3]);
        assert_eq!((&a + &b).entries(), &[1, 5]);
        assert_eq!(b.checked_sub(&a), None);
        assert_eq!(a.dot(&b), 6);
        assert_eq!(a.to_string(), "(1,2)");
    }
}
