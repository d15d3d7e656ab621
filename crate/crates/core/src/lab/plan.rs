use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{contract, Result};
use crate::problems::{NkInstance, ProblemSpec, ENUMERATION_LIMIT};
use crate::space::{derive_seed, mix64};

/// Master seed used when neither a flag, the environment nor a plan file
/// provides one.
pub const DEFAULT_MASTER_SEED: u64 = 0x5eed;

const MAX_N: usize = (1 << 20) - 1;
const MAX_VARIANTS: usize = 1 << 12;
const NK_DOMAIN: u64 = 0x6e6b_5f69_6e73_7400;

/// The benchmark family a plan sweeps over.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ProblemFamily {
    OneMinMax,
    OneJumpZeroJump {
        k: usize,
    },
    OneMinMaxStar,
    /// Trial `t` of size `n` runs on instance `t % instances`; every variant
    /// sees the same instances and reference points.
    NkLandscape {
        #[serde(rename = "K")]
        k: usize,
        instances: usize,
    },
}

impl ProblemFamily {
    pub fn label(&self) -> &'static str {
        match self {
            Self::OneMinMax => "omm",
            Self::OneJumpZeroJump { .. } => "ojzj",
            Self::OneMinMaxStar => "ommstar",
            Self::NkLandscape { .. } => "nk",
        }
    }

    /// The concrete problem of size `n`. NK instances are drawn from
    /// `instance_seed`; other families ignore it.
    pub fn instantiate(&self, n: usize, instance_seed: u64) -> Result<ProblemSpec> {
        match *self {
            Self::OneMinMax => ProblemSpec::one_min_max(n),
            Self::OneJumpZeroJump { k } => ProblemSpec::one_jump_zero_jump(n, k),
            Self::OneMinMaxStar => ProblemSpec::one_min_max_star(n),
            Self::NkLandscape { k, .. } => Ok(ProblemSpec::nk_landscape(NkInstance::generate(
                n,
                k,
                instance_seed,
            )?)),
        }
    }

    pub(crate) fn instances(&self) -> usize {
        match self {
            Self::NkLandscape { instances, .. } => *instances,
            _ => 1,
        }
    }
}

/// Which truncation rule a variant uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PolicyKind {
    Crowding,
    Reference,
}

impl PolicyKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Crowding => "crowding",
            Self::Reference => "reference",
        }
    }
}

/// Population size as a function of the problem size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum PopulationRule {
    Fixed {
        size: usize,
    },
    /// `scale * (n + offset)`, e.g. `4(n+1)` or `4(n-2k+3)`.
    Affine {
        scale: usize,
        offset: i64,
    },
}

impl PopulationRule {
    pub fn size_for(&self, n: usize) -> Result<usize> {
        match *self {
            Self::Fixed { size } if size >= 1 => Ok(size),
            Self::Affine { scale, offset } => {
                let base = n as i64 + offset;
                if scale == 0 || base < 1 {
                    Err(contract!(
                        "population rule {self:?} gives no individuals at n = {n}"
                    ))
                } else {
                    Ok(scale * base as usize)
                }
            }
            _ => Err(contract!("population size must be >= 1")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Variant {
    pub label: String,
    pub policy: PolicyKind,
    pub population: PopulationRule,
}

impl Variant {
    pub fn new(label: &str, policy: PolicyKind, population: PopulationRule) -> Self {
        Self {
            label: label.to_owned(),
            policy,
            population,
        }
    }
}

/// A full sweep: every `(n, variant)` cell runs `runs_per_cell` trials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExperimentPlan {
    pub name: String,
    pub family: ProblemFamily,
    pub n_values: Vec<usize>,
    pub variants: Vec<Variant>,
    pub runs_per_cell: usize,
    pub master_seed: u64,
    /// Applies to every variant; `None` runs until the target is found.
    pub max_evaluations: Option<u64>,
}

impl ExperimentPlan {
    pub fn validate(&self) -> Result<()> {
        if self.n_values.is_empty() {
            return Err(contract!("plan {:?} has no problem sizes", self.name));
        }
        if self.variants.is_empty() {
            return Err(contract!("plan {:?} has no variants", self.name));
        }
        if self.variants.len() > MAX_VARIANTS {
            return Err(contract!("at most {MAX_VARIANTS} variants per plan"));
        }
        if self.runs_per_cell == 0 || self.runs_per_cell as u64 > u32::MAX as u64 {
            return Err(contract!("runs_per_cell must lie in [1, 2^32)"));
        }
        if self.max_evaluations == Some(0) {
            return Err(contract!("evaluation cap must be positive"));
        }
        let mut labels = HashSet::new();
        for v in &self.variants {
            if !labels.insert(v.label.as_str()) {
                return Err(contract!("duplicate variant label {:?}", v.label));
            }
        }
        if let ProblemFamily::NkLandscape { instances, .. } = self.family {
            if instances == 0 {
                return Err(contract!("NK plans need at least one instance per size"));
            }
        }
        for &n in &self.n_values {
            if n == 0 || n > MAX_N {
                return Err(contract!("problem size {n} out of range"));
            }
            match self.family {
                ProblemFamily::OneJumpZeroJump { k } => {
                    ProblemSpec::OneJumpZeroJump { n, k }.validate()?
                }
                ProblemFamily::NkLandscape { k, .. } => {
                    if k >= n {
                        return Err(contract!("NK needs K < n (K = {k}, n = {n})"));
                    }
                    if n > ENUMERATION_LIMIT {
                        return Err(contract!(
                            "NK reference points need enumeration, so n <= {ENUMERATION_LIMIT}"
                        ));
                    }
                }
                _ => {}
            }
            for v in &self.variants {
                v.population.size_for(n)?;
            }
        }
        Ok(())
    }

    /// Seed of trial `trial` in cell `(n, variant)`. Injective in the
    /// triple for a fixed master seed.
    pub fn trial_seed(&self, n: usize, variant: usize, trial: usize) -> u64 {
        trial_seed(self.master_seed, n, variant, trial)
    }

    pub fn with_runs(mut self, runs: usize) -> Self {
        self.runs_per_cell = runs;
        if let ProblemFamily::NkLandscape { instances, .. } = &mut self.family {
            *instances = runs;
        }
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.master_seed = seed;
        self
    }

    pub fn with_n_values(mut self, n_values: Vec<usize>) -> Self {
        self.n_values = n_values;
        self
    }

    /// Keeps only the variants whose labels are listed, in plan order.
    pub fn with_variants(mut self, labels: &[&str]) -> Self {
        self.variants.retain(|v| labels.contains(&v.label.as_str()));
        self
    }
}

pub fn trial_seed(master: u64, n: usize, variant: usize, trial: usize) -> u64 {
    let packed = ((n as u64) << 44) | ((variant as u64) << 32) | trial as u64;
    derive_seed(master, packed)
}

/// Seed of the `instance`-th NK instance of size `n`.
pub fn nk_instance_seed(master: u64, n: usize, instance: usize) -> u64 {
    derive_seed(master ^ NK_DOMAIN, ((n as u64) << 32) | instance as u64)
}

/// Seed of the stream that samples an NK instance's reference point.
pub fn reference_seed(instance_seed: u64) -> u64 {
    mix64(instance_seed ^ NK_DOMAIN)
}

pub const OMM_LABELS: [&str; 3] = ["NSGA-II", "R-NSGA-II N=1", "R-NSGA-II N=4(n+1)"];
pub const OJZJ_LABELS: [&str; 3] = ["NSGA-II", "R-NSGA-II N=1", "R-NSGA-II N=4(n-2k+3)"];

/// The four published experiment setups: `omm`, `ojzj`, `ommstar`, `nk`.
pub fn preset_plans() -> Vec<ExperimentPlan> {
    let four_n_plus_one = PopulationRule::Affine {
        scale: 4,
        offset: 1,
    };
    let k = 2;
    let four_front = PopulationRule::Affine {
        scale: 4,
        offset: 3 - 2 * k as i64,
    };
    let one = PopulationRule::Fixed { size: 1 };
    let tens = vec![10, 20, 30, 40, 50];
    vec![
        ExperimentPlan {
            name: "omm".into(),
            family: ProblemFamily::OneMinMax,
            n_values: tens.clone(),
            variants: vec![
                Variant::new(OMM_LABELS[0], PolicyKind::Crowding, four_n_plus_one),
                Variant::new(OMM_LABELS[1], PolicyKind::Reference, one),
                Variant::new(OMM_LABELS[2], PolicyKind::Reference, four_n_plus_one),
            ],
            runs_per_cell: 1000,
            master_seed: DEFAULT_MASTER_SEED,
            max_evaluations: None,
        },
        ExperimentPlan {
            name: "ojzj".into(),
            family: ProblemFamily::OneJumpZeroJump { k },
            n_values: tens.clone(),
            variants: vec![
                Variant::new(OJZJ_LABELS[0], PolicyKind::Crowding, four_front),
                Variant::new(OJZJ_LABELS[1], PolicyKind::Reference, one),
                Variant::new(OJZJ_LABELS[2], PolicyKind::Reference, four_front),
            ],
            runs_per_cell: 1000,
            master_seed: DEFAULT_MASTER_SEED,
            max_evaluations: None,
        },
        ExperimentPlan {
            name: "ommstar".into(),
            family: ProblemFamily::OneMinMaxStar,
            n_values: tens,
            variants: vec![
                Variant::new("NSGA-II", PolicyKind::Crowding, four_n_plus_one),
                Variant::new("R-NSGA-II", PolicyKind::Reference, four_n_plus_one),
            ],
            runs_per_cell: 1000,
            master_seed: DEFAULT_MASTER_SEED,
            max_evaluations: Some(100_000),
        },
        ExperimentPlan {
            name: "nk".into(),
            family: ProblemFamily::NkLandscape {
                k: 3,
                instances: 50,
            },
            n_values: vec![5, 10, 15, 20, 25],
            variants: vec![
                Variant::new(
                    "NSGA-II",
                    PolicyKind::Crowding,
                    PopulationRule::Fixed { size: 100 },
                ),
                Variant::new(
                    "R-NSGA-II",
                    PolicyKind::Reference,
                    PopulationRule::Fixed { size: 100 },
                ),
            ],
            runs_per_cell: 50,
            master_seed: DEFAULT_MASTER_SEED,
            max_evaluations: Some(1_000_000),
        },
    ]
}

pub fn preset(name: &str) -> Option<ExperimentPlan> {
    preset_plans().into_iter().find(|p| p.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_encode_the_published_setups() {
        let omm = preset("omm").unwrap();
        assert_eq!(omm.n_values, vec![10, 20, 30, 40, 50]);
        assert_eq!(omm.variants[0].population.size_for(50).unwrap(), 204);
        assert_eq!(omm.variants[1].population.size_for(50).unwrap(), 1);
        assert_eq!(omm.runs_per_cell, 1000);
        assert_eq!(omm.max_evaluations, None);

        let ojzj = preset("ojzj").unwrap();
        assert_eq!(ojzj.family, ProblemFamily::OneJumpZeroJump { k: 2 });
        // 4(n - 2k + 3) with k = 2
        assert_eq!(
            ojzj.variants[0].population.size_for(30).unwrap(),
            4 * (30 - 4 + 3)
        );
        assert_eq!(ojzj.variants[0].policy, PolicyKind::Crowding);

        let star = preset("ommstar").unwrap();
        assert_eq!(star.max_evaluations, Some(100_000));
        for v in &star.variants {
            assert_eq!(v.population.size_for(30).unwrap(), 124);
        }

        let nk = preset("nk").unwrap();
        assert_eq!(nk.n_values, vec![5, 10, 15, 20, 25]);
        assert_eq!(
            nk.family,
            ProblemFamily::NkLandscape {
                k: 3,
                instances: 50
            }
        );
        assert_eq!(nk.max_evaluations, Some(1_000_000));
        for v in &nk.variants {
            assert_eq!(v.population.size_for(15).unwrap(), 100);
        }

        for p in preset_plans() {
            p.validate().unwrap();
        }
        assert!(preset("lotz").is_none());
    }

    #[test]
    fn seed_schedule_is_injective() {
        let mut seen = HashSet::new();
        for n in [5, 10, 15, 20, 25, 30, 40, 50] {
            for v in 0..4 {
                for t in 0..500 {
                    assert!(seen.insert(trial_seed(7, n, v, t)));
                }
            }
        }
    }

    #[test]
    fn validation_catches_bad_plans() {
        let base = preset("omm").unwrap();
        assert!(base.clone().with_runs(0).validate().is_err());
        assert!(base.clone().with_n_values(vec![]).validate().is_err());

        let mut dup = base.clone();
        dup.variants[1].label = dup.variants[0].label.clone();
        assert!(dup.validate().is_err());

        let mut ojzj = preset("ojzj").unwrap();
        ojzj.n_values = vec![6];
        assert!(ojzj.validate().is_err());

        let mut nk = preset("nk").unwrap();
        nk.n_values = vec![30];
        assert!(nk.validate().is_err());
    }

    #[test]
    fn plan_json_round_trip() {
        for p in preset_plans() {
            let json = serde_json::to_string_pretty(&p).unwrap();
            let back: ExperimentPlan = serde_json::from_str(&json).unwrap();
            assert_eq!(p, back);
        }
        let nk = serde_json::to_string(&preset("nk").unwrap()).unwrap();
        assert!(nk.contains(r#""family":{"type":"nk_landscape","K":3,"instances":50}"#));
    }
}
