//! The NSGA-II / R-NSGA-II generation loop.
//!
//! Each generation mutates every parent exactly once (no parent selection,
//! no crossover), evaluates the `N` offspring, and keeps `N` survivors of the
//! merged population. The two algorithms differ only in their
//! [`SurvivalPolicy`].
//!
//! Evaluation accounting: the `N` initial evaluations count, and a run hits
//! its target at the first *evaluation* whose objectives equal the reference
//! point, whether or not that solution survives.

use std::collections::HashSet;
use std::io::Write;

use serde::Serialize;

use crate::error::{contract, Result};
use crate::problems::{ParetoFront, ProblemSpec};
use crate::space::{BitString, ObjectiveVector, RngStream};
use crate::survival::{survival_select, Individual, SurvivalPolicy};

#[derive(Clone, Debug, PartialEq)]
pub struct AlgorithmConfig {
    pub policy: SurvivalPolicy,
    pub population_size: usize,
    /// Per-bit flip probability; `None` means `1/n`.
    pub mutation_rate: Option<f64>,
    /// The run stops once a solution with exactly these objectives is evaluated.
    pub reference_point: ObjectiveVector,
    /// Checked at generation boundaries, so a run may overshoot by `N - 1`.
    pub max_evaluations: Option<u64>,
}

impl AlgorithmConfig {
    /// NSGA-II (crowding-distance truncation) aiming at `reference_point`.
    pub fn nsga2(population_size: usize, reference_point: ObjectiveVector) -> Self {
        Self {
            policy: SurvivalPolicy::CrowdingDistance,
            population_size,
            mutation_rate: None,
            reference_point,
            max_evaluations: None,
        }
    }

    /// R-NSGA-II: the critical front is truncated by distance to `reference_point`.
    pub fn rnsga2(population_size: usize, reference_point: ObjectiveVector) -> Self {
        Self {
            policy: SurvivalPolicy::ReferencePointDistance { z: reference_point },
            ..Self::nsga2(population_size, reference_point)
        }
    }

    pub fn with_max_evaluations(mut self, cap: Option<u64>) -> Self {
        self.max_evaluations = cap;
        self
    }

    pub fn with_mutation_rate(mut self, rate: f64) -> Self {
        self.mutation_rate = Some(rate);
        self
    }

    pub fn rate_for(&self, n: usize) -> f64 {
        self.mutation_rate.unwrap_or(1.0 / n as f64)
    }

    pub fn validate(&self, problem: &ProblemSpec) -> Result<()> {
        problem.validate()?;
        if self.population_size == 0 {
            return Err(contract!("population size must be >= 1"));
        }
        let rate = self.rate_for(problem.n());
        if !(rate > 0.0 && rate <= 1.0) {
            return Err(contract!("mutation rate must lie in (0, 1], got {rate}"));
        }
        if self.max_evaluations == Some(0) {
            return Err(contract!("evaluation cap must be positive"));
        }
        Ok(())
    }
}

/// The evolving population plus bookkeeping.
#[derive(Clone, Debug)]
pub struct RunState {
    population: Vec<Individual>,
    generation: u64,
    evaluations: u64,
    evaluations_to_hit: Option<u64>,
    next_birth: u64,
    rng: RngStream,
}

impl RunState {
    pub fn population(&self) -> &[Individual] {
        &self.population
    }

    pub fn generation(&self) -> u64 {
        self.generation
    }

    pub fn evaluations(&self) -> u64 {
        self.evaluations
    }

    pub fn hit(&self) -> bool {
        self.evaluations_to_hit.is_some()
    }

    pub fn evaluations_to_hit(&self) -> Option<u64> {
        self.evaluations_to_hit
    }

    pub fn seed(&self) -> u64 {
        self.rng.seed()
    }

    /// Smallest distance from a current population member to `z`.
    pub fn min_distance(&self, z: &ObjectiveVector) -> f64 {
        self.population
            .iter()
            .map(|i| i.objectives().distance(z))
            .fold(f64::INFINITY, f64::min)
    }

    /// Distinct objective vectors of the population that lie on `front`.
    pub fn front_points_covered(&self, front: &ParetoFront) -> HashSet<(u64, u64)> {
        self.population
            .iter()
            .map(|i| i.objectives())
            .filter(|v| front.contains(v))
            .map(|v| v.bit_key())
            .collect()
    }

    fn record(&mut self, objectives: &ObjectiveVector, z: &ObjectiveVector) {
        self.evaluations += 1;
        if self.evaluations_to_hit.is_none() && target_hit(objectives, z) {
            self.evaluations_to_hit = Some(self.evaluations);
        }
    }

    fn fresh(
        &mut self,
        problem: &ProblemSpec,
        genome: BitString,
        z: &ObjectiveVector,
    ) -> Individual {
        let objectives = problem.evaluate_unchecked(&genome);
        self.record(&objectives, z);
        let ind = Individual::from_parts(genome, objectives, self.next_birth);
        self.next_birth += 1;
        ind
    }

    /// One generation: mutate every parent once, evaluate, select survivors.
    pub fn step(&mut self, problem: &ProblemSpec, config: &AlgorithmConfig) -> Result<()> {
        let rate = config.rate_for(problem.n());
        let z = config.reference_point;
        let mut combined = Vec::with_capacity(2 * self.population.len());
        combined.append(&mut self.population);
        for p in 0..combined.len() {
            let child = combined[p].genome().mutate(rate, &mut self.rng)?;
            let child = self.fresh(problem, child, &z);
            combined.push(child);
        }
        self.population = survival_select(combined, config.population_size, &config.policy)?;
        self.generation += 1;
        Ok(())
    }
}

/// `N` uniform random individuals, all evaluated.
pub fn initialize(problem: &ProblemSpec, config: &AlgorithmConfig, seed: u64) -> Result<RunState> {
    config.validate(problem)?;
    let mut state = RunState {
        population: Vec::with_capacity(config.population_size),
        generation: 0,
        evaluations: 0,
        evaluations_to_hit: None,
        next_birth: 0,
        rng: RngStream::from_seed(seed),
    };
    let z = config.reference_point;
    for _ in 0..config.population_size {
        let genome = BitString::random(problem.n(), &mut state.rng)?;
        let ind = state.fresh(problem, genome, &z);
        state.population.push(ind);
    }
    Ok(state)
}

/// Free-function form of [`RunState::step`].
pub fn step_generation(
    state: &mut RunState,
    problem: &ProblemSpec,
    config: &AlgorithmConfig,
) -> Result<()> {
    state.step(problem, config)
}

/// Exact componentwise equality.
pub fn target_hit(objectives: &ObjectiveVector, z: &ObjectiveVector) -> bool {
    objectives == z
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RunResult {
    pub evaluations_to_hit: Option<u64>,
    pub hit: bool,
    /// Evaluations performed before the run stopped.
    pub evaluations: u64,
    pub generations: u64,
    pub seed: u64,
}

impl RunResult {
    /// Evaluations to hit, or the total spent by a run that missed.
    pub fn cost(&self) -> u64 {
        self.evaluations_to_hit.unwrap_or(self.evaluations)
    }
}

pub fn run(problem: &ProblemSpec, config: &AlgorithmConfig, seed: u64) -> Result<RunResult> {
    run_observed(problem, config, seed, |_| Ok(()))
}

/// Like [`run`], calling `observer` after initialization and after every
/// generation.
pub fn run_observed<F>(
    problem: &ProblemSpec,
    config: &AlgorithmConfig,
    seed: u64,
    mut observer: F,
) -> Result<RunResult>
where
    F: FnMut(&RunState) -> Result<()>,
{
    let mut state = initialize(problem, config, seed)?;
    observer(&state)?;
    while !state.hit()
        && config
            .max_evaluations
            .is_none_or(|cap| state.evaluations < cap)
    {
        state.step(problem, config)?;
        observer(&state)?;
    }
    Ok(RunResult {
        evaluations_to_hit: state.evaluations_to_hit,
        hit: state.hit(),
        evaluations: state.evaluations,
        generations: state.generation,
        seed,
    })
}

/// One row of the per-generation trace.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GenerationTrace {
    pub generation: u64,
    pub evaluations: u64,
    pub min_distance: f64,
    /// Empty when no front was supplied.
    pub front_points_covered: Option<usize>,
}

/// Runs while writing a CSV trace row per generation to `out`.
pub fn run_traced<W: Write>(
    problem: &ProblemSpec,
    config: &AlgorithmConfig,
    seed: u64,
    front: Option<&ParetoFront>,
    out: W,
) -> Result<RunResult> {
    let mut writer = crate::lab::csv_writer(out);
    let z = config.reference_point;
    let result = run_observed(problem, config, seed, |state| {
        writer.serialize(GenerationTrace {
            generation: state.generation(),
            evaluations: state.evaluations(),
            min_distance: state.min_distance(&z),
            front_points_covered: front.map(|f| state.front_points_covered(f).len()),
        })?;
        Ok(())
    })?;
    writer.flush()?;
    Ok(result)
}
