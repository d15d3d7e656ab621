use rayon::prelude::*;
use serde::Serialize;

use crate::error::{contract, Result};
use crate::evolve::{run, AlgorithmConfig};
use crate::lab::plan::{nk_instance_seed, reference_seed, ExperimentPlan, PolicyKind};
use crate::problems::{default_reference_point, ProblemSpec};
use crate::space::{ObjectiveVector, RngStream};

/// Outcome of one seeded run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialRecord {
    pub problem: String,
    pub n: usize,
    /// OneJumpZeroJump's `k` or the NK epistasis `K`.
    pub k: Option<usize>,
    pub variant: String,
    pub policy: PolicyKind,
    pub pop_size: usize,
    pub seed: u64,
    /// Evaluations to the first hit, or the total spent by a capped miss.
    pub evaluations: u64,
    pub hit: bool,
    #[serde(skip)]
    pub trial: usize,
}

/// A problem instance together with the target the runs chase.
#[derive(Clone, Debug)]
pub struct Target {
    pub problem: ProblemSpec,
    pub reference_point: ObjectiveVector,
}

/// The problem and reference point used for size `n`, instance `instance`.
pub fn resolve_target(plan: &ExperimentPlan, n: usize, instance: usize) -> Result<Target> {
    let instance_seed = nk_instance_seed(plan.master_seed, n, instance);
    let problem = plan.family.instantiate(n, instance_seed)?;
    let mut rng = RngStream::from_seed(reference_seed(instance_seed));
    let reference_point = default_reference_point(&problem, &mut rng)?;
    Ok(Target {
        problem,
        reference_point,
    })
}

struct Job {
    target: usize,
    n: usize,
    variant: usize,
    trial: usize,
}

/// Runs every trial of `plan` on up to `parallelism` threads.
///
/// Records come back ordered by `(n, variant, trial)` in plan order and do
/// not depend on the degree of parallelism.
pub fn run_experiment(plan: &ExperimentPlan, parallelism: usize) -> Result<Vec<TrialRecord>> {
    plan.validate()?;
    if parallelism == 0 {
        return Err(contract!("parallelism must be >= 1"));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism)
        .build()
        .map_err(|e| contract!("cannot build thread pool: {e}"))?;

    let instances = plan.family.instances();
    let keys: Vec<(usize, usize)> = plan
        .n_values
        .iter()
        .flat_map(|&n| (0..instances).map(move |i| (n, i)))
        .collect();
    let targets: Vec<Target> = pool.install(|| {
        keys.par_iter()
            .map(|&(n, i)| resolve_target(plan, n, i))
            .collect::<Result<_>>()
    })?;

    let mut jobs =
        Vec::with_capacity(plan.n_values.len() * plan.variants.len() * plan.runs_per_cell);
    for (ni, &n) in plan.n_values.iter().enumerate() {
        for variant in 0..plan.variants.len() {
            for trial in 0..plan.runs_per_cell {
                jobs.push(Job {
                    target: ni * instances + trial % instances,
                    n,
                    variant,
                    trial,
                });
            }
        }
    }

    pool.install(|| {
        jobs.par_iter()
            .map(|job| run_job(plan, &targets[job.target], job))
            .collect()
    })
}

fn run_job(plan: &ExperimentPlan, target: &Target, job: &Job) -> Result<TrialRecord> {
    let variant = &plan.variants[job.variant];
    let pop_size = variant.population.size_for(job.n)?;
    let z = target.reference_point;
    let config = match variant.policy {
        PolicyKind::Crowding => AlgorithmConfig::nsga2(pop_size, z),
        PolicyKind::Reference => AlgorithmConfig::rnsga2(pop_size, z),
    }
    .with_max_evaluations(plan.max_evaluations);
    let seed = plan.trial_seed(job.n, job.variant, job.trial);
    let result = run(&target.problem, &config, seed)?;
    Ok(TrialRecord {
        problem: plan.family.label().to_owned(),
        n: job.n,
        k: target.problem.param_k(),
        variant: variant.label.clone(),
        policy: variant.policy,
        pop_size,
        seed,
        evaluations: result.cost(),
        hit: result.hit,
        trial: job.trial,
    })
}
