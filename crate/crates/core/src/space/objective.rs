use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{contract, Result};

/// A bi-objective value vector. Both objectives are maximized.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct ObjectiveVector([f64; 2]);

/// Outcome of comparing `a` against `b` under Pareto dominance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DominanceRelation {
    Dominates,
    DominatedBy,
    Equal,
    Incomparable,
}

impl ObjectiveVector {
    pub fn new(f1: f64, f2: f64) -> Self {
        debug_assert!(f1.is_finite() && f2.is_finite(), "non-finite objective");
        Self([f1, f2])
    }

    /// Builds a vector from untrusted data, checking dimension and finiteness.
    pub fn try_from_slice(values: &[f64]) -> Result<Self> {
        match *values {
            [f1, f2] if f1.is_finite() && f2.is_finite() => Ok(Self([f1, f2])),
            [_, _] => Err(contract!("objective values must be finite, got {values:?}")),
            _ => Err(contract!(
                "expected 2 objective values, got {}",
                values.len()
            )),
        }
    }

    pub fn f1(&self) -> f64 {
        self.0[0]
    }

    pub fn f2(&self) -> f64 {
        self.0[1]
    }

    pub fn values(&self) -> [f64; 2] {
        self.0
    }

    /// Value of objective `i` (0-based).
    pub fn get(&self, i: usize) -> f64 {
        self.0[i]
    }

    pub fn dominance(&self, other: &Self) -> DominanceRelation {
        dominance(self, other)
    }

    /// `true` when `self` dominates `other`.
    pub fn dominates(&self, other: &Self) -> bool {
        dominance(self, other) == DominanceRelation::Dominates
    }

    pub fn distance(&self, other: &Self) -> f64 {
        euclidean_distance(self, other)
    }

    /// Total order on raw bit patterns, used as a hashable identity.
    pub(crate) fn bit_key(&self) -> (u64, u64) {
        (self.0[0].to_bits(), self.0[1].to_bits())
    }
}

impl TryFrom<Vec<f64>> for ObjectiveVector {
    type Error = crate::Error;

    fn try_from(v: Vec<f64>) -> Result<Self> {
        Self::try_from_slice(&v)
    }
}

impl From<ObjectiveVector> for Vec<f64> {
    fn from(v: ObjectiveVector) -> Self {
        v.0.to_vec()
    }
}

impl From<(f64, f64)> for ObjectiveVector {
    fn from((f1, f2): (f64, f64)) -> Self {
        Self::new(f1, f2)
    }
}

impl fmt::Display for ObjectiveVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match f.precision() {
            Some(p) => write!(f, "{:.p$} {:.p$}", self.0[0], self.0[1]),
            None => write!(f, "{} {}", self.0[0], self.0[1]),
        }
    }
}

/// Pareto dominance under maximization.
pub fn dominance(a: &ObjectiveVector, b: &ObjectiveVector) -> DominanceRelation {
    let mut a_better = false;
    let mut b_better = false;
    for i in 0..2 {
        if a.0[i] > b.0[i] {
            a_better = true;
        } else if a.0[i] < b.0[i] {
            b_better = true;
        }
    }
    match (a_better, b_better) {
        (false, false) => DominanceRelation::Equal,
        (true, false) => DominanceRelation::Dominates,
        (false, true) => DominanceRelation::DominatedBy,
        (true, true) => DominanceRelation::Incomparable,
    }
}

pub fn euclidean_distance(a: &ObjectiveVector, b: &ObjectiveVector) -> f64 {
    let d1 = a.0[0] - b.0[0];
    let d2 = a.0[1] - b.0[1];
    (d1 * d1 + d2 * d2).sqrt()
}

#[cfg(test)]
mod tests {
    use super::DominanceRelation::*;
    use super::*;
    use proptest::prelude::*;

    fn v(a: f64, b: f64) -> ObjectiveVector {
        ObjectiveVector::new(a, b)
    }

    #[test]
    fn dominance_examples() {
        assert_eq!(dominance(&v(2.0, 3.0), &v(1.0, 3.0)), Dominates);
        assert_eq!(dominance(&v(0.0, 4.0), &v(4.0, 0.0)), Incomparable);
        assert_eq!(dominance(&v(5.0, 5.0), &v(5.0, 5.0)), Equal);
        assert_eq!(dominance(&v(1.0, 3.0), &v(2.0, 3.0)), DominatedBy);
    }

    #[test]
    fn distance_examples() {
        assert!((euclidean_distance(&v(3.0, 7.0), &v(0.0, 10.0)) - 18f64.sqrt()).abs() < 1e-12);
        assert_eq!(euclidean_distance(&v(3.0, 7.0), &v(3.0, 7.0)), 0.0);
        assert_eq!(
            euclidean_distance(&v(12.0, 2.0), &v(10.0, 4.0)),
            8f64.sqrt()
        );
    }

    #[test]
    fn slice_construction_checks_contract() {
        assert!(ObjectiveVector::try_from_slice(&[1.0, 2.0]).is_ok());
        assert!(ObjectiveVector::try_from_slice(&[1.0]).is_err());
        assert!(ObjectiveVector::try_from_slice(&[1.0, 2.0, 3.0]).is_err());
        assert!(ObjectiveVector::try_from_slice(&[f64::NAN, 2.0]).is_err());
        assert!(serde_json::from_str::<ObjectiveVector>("[1.0]").is_err());
        let back: ObjectiveVector = serde_json::from_str("[-4, 8]").unwrap();
        assert_eq!(back, v(-4.0, 8.0));
    }

    #[test]
    fn display_prints_integers_plainly() {
        assert_eq!(v(-4.0, 8.0).to_string(), "-4 8");
        assert_eq!(v(0.5, 1.0).to_string(), "0.5 1");
        assert_eq!(format!("{:.2}", v(0.125, 2.0)), "0.12 2.00");
    }

    /// Brute force over every vector in [0..5]^2: exactly one relation per
    /// pair, antisymmetry, reflexive equality, transitivity of strict dominance.
    #[test]
    fn dominance_is_a_partial_order_on_small_grid() {
        let grid: Vec<ObjectiveVector> = (0..=5)
            .flat_map(|a| (0..=5).map(move |b| v(a as f64, b as f64)))
            .collect();
        for a in &grid {
            assert_eq!(dominance(a, a), Equal);
            for b in &grid {
                let ab = dominance(a, b);
                let ba = dominance(b, a);
                let flipped = match ab {
                    Dominates => DominatedBy,
                    DominatedBy => Dominates,
                    other => other,
                };
                assert_eq!(ba, flipped);
                for c in &grid {
                    if ab == Dominates && dominance(b, c) == Dominates {
                        assert_eq!(dominance(a, c), Dominates);
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn distance_is_a_metric(
            a in (-50.0..50.0f64, -50.0..50.0f64),
            b in (-50.0..50.0f64, -50.0..50.0f64),
            c in (-50.0..50.0f64, -50.0..50.0f64),
        ) {
            let (a, b, c) = (ObjectiveVector::from(a), ObjectiveVector::from(b), ObjectiveVector::from(c));
            let ab = euclidean_distance(&a, &b);
            prop_assert!(ab >= 0.0);
            prop_assert_eq!(ab, euclidean_distance(&b, &a));
            prop_assert!(euclidean_distance(&a, &c) <= ab + euclidean_distance(&b, &c) + 1e-9);
        }
    }
}
