//! Benchmark problems, their Pareto fronts and default reference points.

mod front;
mod nk;

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::error::{contract, Result};
use crate::space::{BitString, ObjectiveVector, RngStream};

pub use front::{enumerate_pareto_front, pareto_front_closed_form, ParetoFront, ENUMERATION_LIMIT};
pub use nk::NkInstance;

/// Which benchmark to evaluate.
#[derive(Clone, Debug, PartialEq)]
pub enum ProblemSpec {
    OneMinMax {
        n: usize,
    },
    /// Jump-style valleys of width `k` before both extremes.
    OneJumpZeroJump {
        n: usize,
        k: usize,
    },
    /// OneMinMax with `0^n` relocated to `(-n, 2n)`.
    OneMinMaxStar {
        n: usize,
    },
    NkLandscape {
        instance: Arc<NkInstance>,
    },
}

/// Position of a solution relative to the OneJumpZeroJump Pareto set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OjzjClass {
    /// `|x|_1` in `[k..n-k]`.
    InnerParetoSet,
    /// `x` is `0^n` or `1^n`.
    OuterParetoSet,
    NotParetoOptimal,
}

impl ProblemSpec {
    pub fn one_min_max(n: usize) -> Result<Self> {
        let p = Self::OneMinMax { n };
        p.validate()?;
        Ok(p)
    }

    pub fn one_jump_zero_jump(n: usize, k: usize) -> Result<Self> {
        let p = Self::OneJumpZeroJump { n, k };
        p.validate()?;
        Ok(p)
    }

    pub fn one_min_max_star(n: usize) -> Result<Self> {
        let p = Self::OneMinMaxStar { n };
        p.validate()?;
        Ok(p)
    }

    pub fn nk_landscape(instance: NkInstance) -> Self {
        Self::NkLandscape {
            instance: Arc::new(instance),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Self::OneMinMax { n } | Self::OneJumpZeroJump { n, .. } | Self::OneMinMaxStar { n } => {
                *n
            }
            Self::NkLandscape { instance } => instance.n(),
        }
    }

    /// Short identifier used in CSV output and on the command line.
    pub fn label(&self) -> &'static str {
        match self {
            Self::OneMinMax { .. } => "omm",
            Self::OneJumpZeroJump { .. } => "ojzj",
            Self::OneMinMaxStar { .. } => "ommstar",
            Self::NkLandscape { .. } => "nk",
        }
    }

    /// The `k`/`K` parameter, when the problem has one.
    pub fn param_k(&self) -> Option<usize> {
        match self {
            Self::OneJumpZeroJump { k, .. } => Some(*k),
            Self::NkLandscape { instance } => Some(instance.k()),
            _ => None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        if n == 0 {
            return Err(contract!("problem size must be >= 1"));
        }
        if let Self::OneJumpZeroJump { n, k } = *self {
            validate_jump(n, k)?;
        }
        Ok(())
    }

    pub fn evaluate(&self, x: &BitString) -> Result<ObjectiveVector> {
        if x.len() != self.n() {
            return Err(contract!(
                "solution has length {}, problem expects {}",
                x.len(),
                self.n()
            ));
        }
        Ok(self.evaluate_unchecked(x))
    }

    /// Evaluation without the length check; callers guarantee `x.len() == n`.
    pub(crate) fn evaluate_unchecked(&self, x: &BitString) -> ObjectiveVector {
        match self {
            Self::OneMinMax { n } => {
                let ones = x.count_ones();
                ObjectiveVector::new((n - ones) as f64, ones as f64)
            }
            Self::OneJumpZeroJump { n, k } => {
                let (n, k) = (*n, *k);
                let ones = x.count_ones();
                let zeros = n - ones;
                let f1 = if ones <= n - k || ones == n {
                    k + ones
                } else {
                    n - ones
                };
                let f2 = if zeros <= n - k || zeros == n {
                    k + zeros
                } else {
                    n - zeros
                };
                ObjectiveVector::new(f1 as f64, f2 as f64)
            }
            Self::OneMinMaxStar { n } => {
                let ones = x.count_ones();
                if ones == 0 {
                    ObjectiveVector::new(-(*n as f64), 2.0 * *n as f64)
                } else {
                    ObjectiveVector::new((n - ones) as f64, ones as f64)
                }
            }
            Self::NkLandscape { instance } => instance.evaluate(x),
        }
    }
}

impl fmt::Display for ProblemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::OneMinMax { n } => write!(f, "OneMinMax(n={n})"),
            Self::OneJumpZeroJump { n, k } => write!(f, "OneJumpZeroJump(n={n}, k={k})"),
            Self::OneMinMaxStar { n } => write!(f, "OneMinMax*(n={n})"),
            Self::NkLandscape { instance } => write!(
                f,
                "NK-landscape(n={}, K={}, seed={})",
                instance.n(),
                instance.k(),
                instance.seed()
            ),
        }
    }
}

fn validate_jump(n: usize, k: usize) -> Result<()> {
    if k < 2 || k > n / 4 {
        return Err(contract!(
            "OneJumpZeroJump needs k in [2..n/4], got k = {k} for n = {n}"
        ));
    }
    Ok(())
}

pub fn evaluate(problem: &ProblemSpec, x: &BitString) -> Result<ObjectiveVector> {
    problem.evaluate(x)
}

pub fn classify_ojzj(x: &BitString, n: usize, k: usize) -> Result<OjzjClass> {
    validate_jump(n, k)?;
    if x.len() != n {
        return Err(contract!("solution has length {}, expected {n}", x.len()));
    }
    let ones = x.count_ones();
    Ok(if ones == 0 || ones == n {
        OjzjClass::OuterParetoSet
    } else if (k..=n - k).contains(&ones) {
        OjzjClass::InnerParetoSet
    } else {
        OjzjClass::NotParetoOptimal
    })
}

/// The reference point used by the experiments: the all-ones image for
/// OneMinMax and OneJumpZeroJump, the relocated `0^n` image for OneMinMax*,
/// and a uniformly drawn member of the enumerated front for NK-landscapes.
pub fn default_reference_point(
    problem: &ProblemSpec,
    rng: &mut RngStream,
) -> Result<ObjectiveVector> {
    problem.validate()?;
    Ok(match problem {
        ProblemSpec::OneMinMax { n } => ObjectiveVector::new(0.0, *n as f64),
        ProblemSpec::OneJumpZeroJump { n, k } => ObjectiveVector::new((n + k) as f64, *k as f64),
        ProblemSpec::OneMinMaxStar { n } => ObjectiveVector::new(-(*n as f64), 2.0 * *n as f64),
        ProblemSpec::NkLandscape { .. } => {
            let front = enumerate_pareto_front(problem, false)?;
            let pick = rng.random_range(0..front.len());
            front.points()[pick]
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn with_ones(n: usize, ones: usize) -> BitString {
        BitString::from_bits((0..n).map(|i| i < ones).collect()).unwrap()
    }

    fn ov(a: f64, b: f64) -> ObjectiveVector {
        ObjectiveVector::new(a, b)
    }

    #[test]
    fn evaluate_examples() {
        let omm = ProblemSpec::one_min_max(10).unwrap();
        assert_eq!(omm.evaluate(&BitString::ones(10)).unwrap(), ov(0.0, 10.0));

        let ojzj = ProblemSpec::one_jump_zero_jump(12, 2).unwrap();
        assert_eq!(ojzj.evaluate(&BitString::ones(12)).unwrap(), ov(14.0, 2.0));
        assert_eq!(ojzj.evaluate(&with_ones(12, 11)).unwrap(), ov(1.0, 3.0));
        assert_eq!(ojzj.evaluate(&BitString::zeros(12)).unwrap(), ov(2.0, 14.0));

        let star = ProblemSpec::one_min_max_star(10).unwrap();
        assert_eq!(
            star.evaluate(&BitString::zeros(10)).unwrap(),
            ov(-10.0, 20.0)
        );
        assert_eq!(star.evaluate(&with_ones(10, 1)).unwrap(), ov(9.0, 1.0));
    }

    #[test]
    fn evaluate_rejects_length_mismatch() {
        let omm = ProblemSpec::one_min_max(10).unwrap();
        assert!(omm.evaluate(&BitString::ones(9)).is_err());
    }

    #[test]
    fn constant_nk_tables_give_constant_objectives() {
        for c in [0.25, 0.1, 0.7] {
            let n = 5;
            let k = 2;
            let loci = (0..2)
                .map(|_| (0..n).map(|i| vec![(i + 1) % n, (i + 2) % n]).collect())
                .collect();
            let tables = (0..2).map(|_| vec![vec![c; 1 << (k + 1)]; n]).collect();
            let inst = NkInstance::from_tables(n, k, 0, loci, tables).unwrap();
            let p = ProblemSpec::nk_landscape(inst);
            for idx in 0..32 {
                let f = p.evaluate(&BitString::from_index(n, idx)).unwrap();
                assert!((f.f1() - c).abs() < 1e-12 && (f.f2() - c).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn jump_parameter_validation() {
        assert!(ProblemSpec::one_jump_zero_jump(8, 2).is_ok());
        assert!(ProblemSpec::one_jump_zero_jump(7, 2).is_err());
        assert!(ProblemSpec::one_jump_zero_jump(12, 1).is_err());
        assert!(ProblemSpec::one_jump_zero_jump(12, 4).is_err());
        assert!(ProblemSpec::one_min_max(0).is_err());
    }

    #[test]
    fn classification_examples() {
        assert_eq!(
            classify_ojzj(&with_ones(12, 6), 12, 2).unwrap(),
            OjzjClass::InnerParetoSet
        );
        assert_eq!(
            classify_ojzj(&BitString::zeros(12), 12, 2).unwrap(),
            OjzjClass::OuterParetoSet
        );
        assert_eq!(
            classify_ojzj(&BitString::ones(12), 12, 2).unwrap(),
            OjzjClass::OuterParetoSet
        );
        assert_eq!(
            classify_ojzj(&with_ones(12, 1), 12, 2).unwrap(),
            OjzjClass::NotParetoOptimal
        );
        assert!(classify_ojzj(&with_ones(12, 1), 12, 5).is_err());
    }

    #[test]
    fn objective_sums() {
        for n in 1..=12 {
            let omm = ProblemSpec::one_min_max(n).unwrap();
            for idx in 0..(1u64 << n) {
                let f = omm.evaluate(&BitString::from_index(n, idx)).unwrap();
                assert_eq!(f.f1() + f.f2(), n as f64);
            }
        }
        for n in 8..=12 {
            for k in 2..=n / 4 {
                let p = ProblemSpec::one_jump_zero_jump(n, k).unwrap();
                for idx in 0..(1u64 << n) {
                    let x = BitString::from_index(n, idx);
                    let f = p.evaluate(&x).unwrap();
                    let optimal = classify_ojzj(&x, n, k).unwrap() != OjzjClass::NotParetoOptimal;
                    assert_eq!(f.f1() + f.f2() == (n + 2 * k) as f64, optimal, "x = {x}");
                }
            }
        }
    }

    #[test]
    fn classification_matches_dominance_against_closed_form_front() {
        for n in 8..=12 {
            for k in 2..=n / 4 {
                let p = ProblemSpec::one_jump_zero_jump(n, k).unwrap();
                let front = pareto_front_closed_form(&p).unwrap();
                for idx in 0..(1u64 << n) {
                    let x = BitString::from_index(n, idx);
                    let f = p.evaluate(&x).unwrap();
                    let dominated = front.points().iter().any(|q| q.dominates(&f));
                    let class = classify_ojzj(&x, n, k).unwrap();
                    assert_eq!(class == OjzjClass::NotParetoOptimal, dominated);
                }
            }
        }
    }

    #[test]
    fn default_reference_points() {
        let mut rng = RngStream::from_seed(0);
        let p = ProblemSpec::one_min_max(50).unwrap();
        assert_eq!(
            default_reference_point(&p, &mut rng).unwrap(),
            ov(0.0, 50.0)
        );
        let p = ProblemSpec::one_jump_zero_jump(30, 2).unwrap();
        assert_eq!(
            default_reference_point(&p, &mut rng).unwrap(),
            ov(32.0, 2.0)
        );
        let p = ProblemSpec::one_min_max_star(30).unwrap();
        assert_eq!(
            default_reference_point(&p, &mut rng).unwrap(),
            ov(-30.0, 60.0)
        );
    }

    #[test]
    fn nk_reference_point_is_on_the_enumerated_front() {
        let p = ProblemSpec::nk_landscape(NkInstance::generate(8, 3, 4).unwrap());
        let front = enumerate_pareto_front(&p, true).unwrap();
        let z = default_reference_point(&p, &mut RngStream::from_seed(1)).unwrap();
        let i = front
            .position(&z)
            .expect("reference point must be a front member");
        // Re-evaluating the witness reproduces the point bit for bit.
        let witness = front.witness(i).unwrap();
        assert_eq!(p.evaluate(witness).unwrap(), z);
    }

    #[test]
    fn nk_reference_point_respects_guard() {
        let p = ProblemSpec::nk_landscape(NkInstance::generate(26, 1, 0).unwrap());
        assert!(default_reference_point(&p, &mut RngStream::from_seed(0)).is_err());
    }
}
