//! Environmental selection: fast non-dominated sorting, crowding distance,
//! reference-point distance, and truncation of the merged population.

use std::cmp::Ordering;

use crate::error::{contract, Result};
use crate::problems::ProblemSpec;
use crate::space::{BitString, DominanceRelation, ObjectiveVector};

/// A solution with its cached objectives and selection metadata.
#[derive(Clone, Debug)]
pub struct Individual {
    genome: BitString,
    objectives: ObjectiveVector,
    rank: Option<usize>,
    survival_key: Option<f64>,
    birth_index: u64,
}

impl Individual {
    /// Evaluates `genome` on `problem`.
    pub fn evaluated(problem: &ProblemSpec, genome: BitString, birth_index: u64) -> Result<Self> {
        let objectives = problem.evaluate(&genome)?;
        Ok(Self::from_parts(genome, objectives, birth_index))
    }

    /// Pairs a genome with objectives computed elsewhere. The caller is
    /// responsible for `objectives` matching the genome.
    pub fn from_parts(genome: BitString, objectives: ObjectiveVector, birth_index: u64) -> Self {
        Self {
            genome,
            objectives,
            rank: None,
            survival_key: None,
            birth_index,
        }
    }

    pub fn genome(&self) -> &BitString {
        &self.genome
    }

    pub fn objectives(&self) -> ObjectiveVector {
        self.objectives
    }

    /// 1-based front index from the last sort, if any.
    pub fn rank(&self) -> Option<usize> {
        self.rank
    }

    /// Crowding distance or reference distance assigned when this
    /// individual sat on a critical front.
    pub fn survival_key(&self) -> Option<f64> {
        self.survival_key
    }

    pub fn birth_index(&self) -> u64 {
        self.birth_index
    }
}

/// Fronts `F1, F2, ...` as indices into the sorted slice.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FrontPartition {
    pub fronts: Vec<Vec<usize>>,
}

impl FrontPartition {
    pub fn len(&self) -> usize {
        self.fronts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fronts.is_empty()
    }
}

/// How the critical front is truncated.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SurvivalPolicy {
    /// NSGA-II: larger crowding distance first.
    CrowdingDistance,
    /// R-NSGA-II: smaller Euclidean distance to `z` first.
    ReferencePointDistance { z: ObjectiveVector },
}

/// Deb et al.'s fast non-dominated sort. Sets each individual's rank.
pub fn fast_nondominated_sort(pop: &mut [Individual]) -> FrontPartition {
    let len = pop.len();
    let mut dominated: Vec<Vec<usize>> = vec![Vec::new(); len];
    let mut counts = vec![0usize; len];
    let mut current = Vec::new();

    for x in 0..len {
        for y in 0..len {
            match pop[x].objectives.dominance(&pop[y].objectives) {
                DominanceRelation::Dominates => dominated[x].push(y),
                DominanceRelation::DominatedBy => counts[x] += 1,
                _ => {}
            }
        }
        if counts[x] == 0 {
            pop[x].rank = Some(1);
            current.push(x);
        }
    }

    let mut fronts = Vec::new();
    let mut rank = 1;
    while !current.is_empty() {
        let mut next = Vec::new();
        for &x in &current {
            for &y in &dominated[x] {
                counts[y] -= 1;
                if counts[y] == 0 {
                    pop[y].rank = Some(rank + 1);
                    next.push(y);
                }
            }
        }
        rank += 1;
        fronts.push(std::mem::replace(&mut current, next));
    }
    FrontPartition { fronts }
}

/// Crowding distance of every member of `front` (indices into `pop`),
/// returned in the order of `front`.
///
/// Boundary members of each per-objective sort get `+inf`. An objective whose
/// values are all equal on the front adds nothing to interior members.
pub fn crowding_distance_assign(pop: &[Individual], front: &[usize]) -> Vec<f64> {
    let l = front.len();
    let mut dist = vec![0.0; l];
    if l == 0 {
        return dist;
    }
    let mut order: Vec<usize> = (0..l).collect();
    for obj in 0..2 {
        let value = |j: usize| pop[front[j]].objectives.get(obj);
        order.sort_by(|&a, &b| {
            value(a)
                .total_cmp(&value(b))
                .then(pop[front[a]].birth_index.cmp(&pop[front[b]].birth_index))
        });
        dist[order[0]] = f64::INFINITY;
        dist[order[l - 1]] = f64::INFINITY;
        let span = value(order[l - 1]) - value(order[0]);
        if span > 0.0 {
            for j in 1..l.saturating_sub(1) {
                dist[order[j]] += (value(order[j + 1]) - value(order[j - 1])) / span;
            }
        }
    }
    dist
}

/// Distance from each member of `front` to the reference point `z`.
pub fn reference_distances(pop: &[Individual], front: &[usize], z: &ObjectiveVector) -> Vec<f64> {
    front
        .iter()
        .map(|&i| pop[i].objectives.distance(z))
        .collect()
}

/// Picks `capacity` survivors from `combined`: whole fronts while they fit,
/// then the critical front ordered by the policy key with ties broken by
/// birth index.
pub fn survival_select(
    mut combined: Vec<Individual>,
    capacity: usize,
    policy: &SurvivalPolicy,
) -> Result<Vec<Individual>> {
    if capacity == 0 {
        return Err(contract!("population capacity must be >= 1"));
    }
    if combined.len() < capacity {
        return Err(contract!(
            "cannot select {capacity} survivors from {} individuals",
            combined.len()
        ));
    }
    let partition = fast_nondominated_sort(&mut combined);

    let mut chosen: Vec<usize> = Vec::with_capacity(capacity);
    let mut keys: Vec<(usize, f64)> = Vec::new();
    for front in &partition.fronts {
        let room = capacity - chosen.len();
        if front.len() <= room {
            chosen.extend_from_slice(front);
            if chosen.len() == capacity {
                break;
            }
            continue;
        }
        let (values, descending) = match policy {
            SurvivalPolicy::CrowdingDistance => (crowding_distance_assign(&combined, front), true),
            SurvivalPolicy::ReferencePointDistance { z } => {
                (reference_distances(&combined, front, z), false)
            }
        };
        let mut order: Vec<usize> = (0..front.len()).collect();
        order.sort_by(|&a, &b| {
            let by_key = if descending {
                values[b].total_cmp(&values[a])
            } else {
                values[a].total_cmp(&values[b])
            };
            by_key.then_with(|| {
                combined[front[a]]
                    .birth_index
                    .cmp(&combined[front[b]].birth_index)
            })
        });
        keys.extend(front.iter().zip(&values).map(|(&i, &v)| (i, v)));
        chosen.extend(order.iter().take(room).map(|&j| front[j]));
        break;
    }

    for (i, v) in keys {
        combined[i].survival_key = Some(v);
    }
    let mut slots: Vec<Option<Individual>> = combined.into_iter().map(Some).collect();
    Ok(chosen
        .into_iter()
        .map(|i| slots[i].take().expect("index chosen twice"))
        .collect())
}

/// Orders individuals by their policy preference alone; used by tests and
/// traces to find the best-placed individual.
pub fn preference_order(a: &Individual, b: &Individual, z: &ObjectiveVector) -> Ordering {
    a.objectives
        .distance(z)
        .total_cmp(&b.objectives.distance(z))
        .then(a.birth_index.cmp(&b.birth_index))
}
