use serde::{Deserialize, Serialize};

/// Upper cutoff on twice-weights (equivalently on `t`-exponents of
/// characters of the vertex-algebra side).
///
/// A twice-weight `w` corresponds to `t^w` in `Z(P_Q, x, q)` and to
/// cohomological degree `w` on the CoHA side; truncated objects are exact
/// for every twice-weight `≤ max_twice_weight` and unknown above it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightWindow {
    pub max_twice_weight: i64,
}

impl WeightWindow {
    pub fn new(max_twice_weight: i64) -> Self {
        WeightWindow { max_twice_weight }
    }

    pub fn contains(&self, twice_weight: i64) -> bool {
        twice_weight <= self.max_twice_weight
    }
}
