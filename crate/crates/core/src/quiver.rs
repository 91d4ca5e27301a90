//! Symmetric quivers, their Euler form and the locality function.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qseries::DimVector;

/// A symmetric quiver given by its arrow-count matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "QuiverJson", into = "QuiverJson")]
pub struct Quiver {
    arrows: Vec<Vec<u32>>,
}

/// On-disk form: `{"vertices": r, "arrows": [[...], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuiverJson {
    pub vertices: usize,
    pub arrows: Vec<Vec<u32>>,
}

impl TryFrom<QuiverJson> for Quiver {
    type Error = Error;

    fn try_from(j: QuiverJson) -> Result<Self> {
        if j.arrows.len() != j.vertices {
            return Err(Error::MalformedArrows { r: j.vertices });
        }
        Quiver::new(j.arrows)
    }
}

impl From<Quiver> for QuiverJson {
    fn from(q: Quiver) -> Self {
        QuiverJson {
            vertices: q.vertex_count(),
            arrows: q.arrows,
        }
    }
}

impl Quiver {
    /// Build and validate a quiver from its arrow matrix.
    pub fn new(arrows: Vec<Vec<u32>>) -> Result<Self> {
        let q = Quiver { arrows };
        q.validate()?;
        Ok(q)
    }

    /// One vertex with `loops` loops.
    pub fn loops(loops: u32) -> Self {
        Quiver {
            arrows: vec![vec![loops]],
        }
    }

    /// The Jordan quiver: one vertex, one loop.
    pub fn jordan() -> Self {
        Quiver::loops(1)
    }

    /// `n` vertices, `loops` loops at each vertex and `between` arrows in
    /// each direction between every pair of distinct vertices.
    pub fn complete(n: usize, loops: u32, between: u32) -> Self {
        let arrows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { loops } else { between }).collect())
            .collect();
        Quiver { arrows }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    /// Accepts iff the arrow matrix is square, non-empty and symmetric.
    pub fn validate(&self) -> Result<()> {
        let r = self.arrows.len();
        if r == 0 {
            return Err(Error::EmptyQuiver);
        }
        if self.arrows.iter().any(|row| row.len() != r) {
            return Err(Error::MalformedArrows { r });
        }
        for i in 0..r {
            for j in (i + 1)..r {
                if self.arrows[i][j] != self.arrows[j][i] {
                    return Err(Error::AsymmetricQuiver {
                        i: i + 1,
                        j: j + 1,
                        a_ij: self.arrows[i][j],
                        a_ji: self.arrows[j][i],
                    });
                }
            }
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrows(&self) -> &[Vec<u32>] {
        &self.arrows
    }

    fn check_vertex(&self, i: usize) -> Result<()> {
        if i < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                index: i,
                count: self.vertex_count(),
            })
        }
    }

    /// `χ(e_i, e_j) = δ_ij − a_ij`. Panics on an out-of-range vertex.
    pub fn chi_vertices(&self, i: usize, j: usize) -> i64 {
        i64::from(i == j) - i64::from(self.arrows[i][j])
    }

    /// Euler form `χ(d,e) = Σ_i d_i e_i − Σ_{i,j} a_ij d_i e_j`.
    pub fn euler_form(&self, d: &DimVector, e: &DimVector) -> Result<i64> {
        let r = self.vertex_count();
        d.check_len(r)?;
        e.check_len(r)?;
        Ok(self.chi(d, e))
    }

    /// Euler form without length checks, for internal use on validated data.
    pub(crate) fn chi(&self, d: &DimVector, e: &DimVector) -> i64 {
        let r = self.vertex_count();
        let mut total = 0;
        for i in 0..r {
            if d[i] == 0 {
                continue;
            }
            for j in 0..r {
                total += i64::from(d[i]) * i64::from(e[j]) * self.chi_vertices(i, j);
            }
        }
        total
    }

    /// `χ(d,d)`.
    pub fn chi_self(&self, d: &DimVector) -> i64 {
        self.chi(d, d)
    }

    /// `χ(d,d) mod 2`, the parity of the component at `d`.
    pub fn parity(&self, d: &DimVector) -> bool {
        self.chi_self(d).rem_euclid(2) == 1
    }

    /// Locality `N(i,j) = −χ(e_i,e_j)`.
    pub fn locality(&self, i: usize, j: usize) -> Result<i64> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        Ok(-self.chi_vertices(i, j))
    }

    /// Effective locality `N_+(i,j) = max(N(i,j), 0)`.
    pub fn effective_locality(&self, i: usize, j: usize) -> Result<i64> {
        Ok(self.locality(i, j)?.max(0))
    }

    pub fn dim(&self, entries: &[u32]) -> DimVector {
        assert_eq!(entries.len(), self.vertex_count());
        DimVector::new(entries.to_vec())
    }
}
