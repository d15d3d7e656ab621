use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::problems::ProblemSpec;
use crate::space::{BitString, ObjectiveVector};

/// Largest `n` for which exhaustive enumeration is attempted.
pub const ENUMERATION_LIMIT: usize = 25;

/// A set of mutually non-dominated objective vectors, sorted by `f1`.
#[derive(Clone, Debug)]
pub struct ParetoFront {
    points: Vec<ObjectiveVector>,
    witnesses: Option<Vec<BitString>>,
}

impl ParetoFront {
    /// Builds a front from arbitrary points, keeping only distinct
    /// non-dominated vectors.
    pub fn from_points(points: impl IntoIterator<Item = ObjectiveVector>) -> Self {
        let mut sky = Skyline::default();
        for p in points {
            sky.offer(p, || ());
        }
        Self {
            points: sky.map.into_values().map(|(p, ())| p).collect(),
            witnesses: None,
        }
    }

    pub fn points(&self) -> &[ObjectiveVector] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Index of `p` in the front, by exact equality.
    pub fn position(&self, p: &ObjectiveVector) -> Option<usize> {
        self.points.iter().position(|q| q == p)
    }

    pub fn contains(&self, p: &ObjectiveVector) -> bool {
        self.position(p).is_some()
    }

    /// One solution attaining point `i`, when witnesses were requested.
    pub fn witness(&self, i: usize) -> Option<&BitString> {
        self.witnesses.as_ref().map(|w| &w[i])
    }

    /// Point set equality, ignoring witnesses.
    pub fn same_points(&self, other: &Self) -> bool {
        self.points == other.points
    }
}

#[derive(Clone, Copy, Debug)]
struct Key(f64);

impl PartialEq for Key {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Key {}
impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

/// Incremental 2-D non-dominated set keyed by `f1`. Along ascending `f1` the
/// stored `f2` values strictly decrease.
struct Skyline<W> {
    map: BTreeMap<Key, (ObjectiveVector, W)>,
}

impl<W> Default for Skyline<W> {
    fn default() -> Self {
        Self {
            map: BTreeMap::new(),
        }
    }
}

impl<W> Skyline<W> {
    /// Inserts `p` unless an existing point weakly dominates it; returns
    /// whether it was inserted. `witness` is only called on insertion.
    fn offer(&mut self, p: ObjectiveVector, witness: impl FnOnce() -> W) -> bool {
        // Normalizes -0.0 so that it keys identically to 0.0.
        let key = Key(p.f1() + 0.0);
        if let Some((_, (q, _))) = self.map.range(key..).next() {
            if q.f2() >= p.f2() {
                return false;
            }
        }
        while let Some((&k, (q, _))) = self.map.range(..=key).next_back() {
            if q.f2() <= p.f2() {
                self.map.remove(&k);
            } else {
                break;
            }
        }
        self.map.insert(key, (p, witness()));
        true
    }
}

/// Exact Pareto front of a synthetic problem from its known formula.
pub fn pareto_front_closed_form(problem: &ProblemSpec) -> Result<ParetoFront> {
    problem.validate()?;
    let points: Vec<ObjectiveVector> = match *problem {
        ProblemSpec::OneMinMax { n } => (0..=n)
            .map(|i| ObjectiveVector::new(i as f64, (n - i) as f64))
            .collect(),
        ProblemSpec::OneJumpZeroJump { n, k } => std::iter::once(k)
            .chain(2 * k..=n)
            .chain(std::iter::once(n + k))
            .map(|i| ObjectiveVector::new(i as f64, (n + 2 * k - i) as f64))
            .collect(),
        ProblemSpec::OneMinMaxStar { n } => {
            std::iter::once(ObjectiveVector::new(-(n as f64), 2.0 * n as f64))
                .chain((0..n).map(|i| ObjectiveVector::new(i as f64, (n - i) as f64)))
                .collect()
        }
        ProblemSpec::NkLandscape { .. } => return Err(Error::Unsupported("NK-landscape")),
    };
    Ok(ParetoFront {
        points,
        witnesses: None,
    })
}

/// Pareto front by evaluating all `2^n` solutions. With `witness`, the first
/// solution (in index order) attaining each front point is kept.
pub fn enumerate_pareto_front(problem: &ProblemSpec, witness: bool) -> Result<ParetoFront> {
    problem.validate()?;
    let n = problem.n();
    if n > ENUMERATION_LIMIT {
        return Err(Error::EnumerationGuard {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let mut x = BitString::zeros(n);
    let front = if witness {
        let mut sky = Skyline::<BitString>::default();
        for idx in 0..(1u64 << n) {
            x.load_index(idx);
            let f = problem.evaluate_unchecked(&x);
            sky.offer(f, || x.clone());
        }
        let (points, wits) = sky.map.into_values().unzip();
        ParetoFront {
            points,
            witnesses: Some(wits),
        }
    } else {
        let mut sky = Skyline::<()>::default();
        for idx in 0..(1u64 << n) {
            x.load_index(idx);
            sky.offer(problem.evaluate_unchecked(&x), || ());
        }
        ParetoFront {
            points: sky.map.into_values().map(|(p, ())| p).collect(),
            witnesses: None,
        }
    };
    Ok(front)
}
