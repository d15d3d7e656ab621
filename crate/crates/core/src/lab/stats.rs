use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, Normal};

use crate::error::{contract, Result};
use crate::lab::runner::TrialRecord;

/// Aggregate of one `(problem, n, variant)` cell.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub problem: String,
    pub n: usize,
    pub variant: String,
    pub mean_evals: f64,
    /// Sample standard deviation (divisor `runs - 1`); 0 for a single run.
    pub std_evals: f64,
    pub success_rate: f64,
    pub runs: usize,
}

/// Groups records by `(problem, n, variant)` in order of first appearance.
/// Capped misses enter the mean with the evaluations they spent.
pub fn summarize(records: &[TrialRecord]) -> Result<Vec<SummaryRow>> {
    if records.is_empty() {
        return Err(contract!("cannot summarize an empty record set"));
    }
    let mut index: HashMap<(&str, usize, &str), usize> = HashMap::new();
    let mut cells: Vec<(&TrialRecord, Vec<f64>, usize)> = Vec::new();
    for r in records {
        let key = (r.problem.as_str(), r.n, r.variant.as_str());
        let slot = *index.entry(key).or_insert_with(|| {
            cells.push((r, Vec::new(), 0));
            cells.len() - 1
        });
        cells[slot].1.push(r.evaluations as f64);
        cells[slot].2 += usize::from(r.hit);
    }
    Ok(cells
        .into_iter()
        .map(|(first, evals, hits)| {
            let runs = evals.len();
            SummaryRow {
                problem: first.problem.clone(),
                n: first.n,
                variant: first.variant.clone(),
                mean_evals: mean(&evals),
                std_evals: sample_std(&evals),
                success_rate: hits as f64 / runs as f64,
                runs,
            }
        })
        .collect())
}

pub fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

pub fn sample_std(xs: &[f64]) -> f64 {
    if xs.len() < 2 {
        return 0.0;
    }
    let m = mean(xs);
    let ss: f64 = xs.iter().map(|x| (x - m) * (x - m)).sum();
    (ss / (xs.len() - 1) as f64).sqrt()
}

pub fn median(xs: &[f64]) -> f64 {
    let mut v = xs.to_vec();
    v.sort_by(f64::total_cmp);
    let m = v.len() / 2;
    if v.len() % 2 == 1 {
        v[m]
    } else {
        (v[m - 1] + v[m]) / 2.0
    }
}

/// Which sample tends to hold the smaller values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    FirstSmaller,
    SecondSmaller,
    Neither,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StatTestResult {
    /// Mann-Whitney `U` of the first sample: pairs where it is larger,
    /// ties counting one half.
    pub statistic: f64,
    pub p_value: f64,
    pub direction: Direction,
}

/// Two-sided Mann-Whitney rank-sum test, normal approximation with tie
/// correction and no continuity correction.
pub fn rank_sum_test(a: &[f64], b: &[f64]) -> Result<StatTestResult> {
    if a.len() < 2 || b.len() < 2 {
        return Err(contract!(
            "rank-sum test needs at least 2 values per sample (got {} and {})",
            a.len(),
            b.len()
        ));
    }
    if a.iter().chain(b).any(|x| !x.is_finite()) {
        return Err(contract!("rank-sum test needs finite values"));
    }
    let (n1, n2) = (a.len() as f64, b.len() as f64);
    let mut pooled: Vec<(f64, bool)> = a
        .iter()
        .map(|&x| (x, true))
        .chain(b.iter().map(|&x| (x, false)))
        .collect();
    pooled.sort_by(|x, y| x.0.total_cmp(&y.0));

    let mut rank_sum_a = 0.0;
    let mut tie_term = 0.0;
    let mut i = 0;
    while i < pooled.len() {
        let mut j = i;
        while j + 1 < pooled.len() && pooled[j + 1].0 == pooled[i].0 {
            j += 1;
        }
        let t = (j - i + 1) as f64;
        // ranks i+1 ..= j+1 share their average
        let avg = (i + j + 2) as f64 / 2.0;
        rank_sum_a += avg * pooled[i..=j].iter().filter(|p| p.1).count() as f64;
        tie_term += t * t * t - t;
        i = j + 1;
    }

    let u = rank_sum_a - n1 * (n1 + 1.0) / 2.0;
    let mu = n1 * n2 / 2.0;
    let total = n1 + n2;
    let var = n1 * n2 / 12.0 * ((total + 1.0) - tie_term / (total * (total - 1.0)));
    let p_value = if var <= 0.0 {
        1.0
    } else {
        let z = (u - mu) / var.sqrt();
        let normal = Normal::new(0.0, 1.0).expect("standard normal");
        (2.0 * normal.cdf(-z.abs())).min(1.0)
    };
    let direction = if u < mu {
        Direction::FirstSmaller
    } else if u > mu {
        Direction::SecondSmaller
    } else {
        Direction::Neither
    };
    Ok(StatTestResult {
        statistic: u,
        p_value,
        direction,
    })
}

/// Least-squares slope of `ln(mean_evals)` against `ln(n)` for one variant.
pub fn loglog_slope(summary: &[SummaryRow], variant: &str) -> Result<f64> {
    let pts: Vec<(f64, f64)> = summary
        .iter()
        .filter(|r| r.variant == variant)
        .map(|r| (r.n as f64, r.mean_evals))
        .collect();
    let mut ns: Vec<f64> = pts.iter().map(|p| p.0).collect();
    ns.sort_by(f64::total_cmp);
    ns.dedup();
    if ns.len() < 3 {
        return Err(contract!(
            "variant {variant:?} has {} distinct sizes, need at least 3",
            ns.len()
        ));
    }
    if pts.iter().any(|p| p.1 <= 0.0) {
        return Err(contract!("log-log fit needs positive means"));
    }
    let xs: Vec<f64> = pts.iter().map(|p| p.0.ln()).collect();
    let ys: Vec<f64> = pts.iter().map(|p| p.1.ln()).collect();
    let (mx, my) = (mean(&xs), mean(&ys));
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    Ok(sxy / sxx)
}
