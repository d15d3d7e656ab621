//! Simulated runtimes checked against exact expectations computed
//! independently of the library.

use emo_lab::evolve::{run, AlgorithmConfig};
use emo_lab::lab::{mean, sample_std};
use emo_lab::problems::ProblemSpec;
use emo_lab::space::ObjectiveVector;

fn binom(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

fn pmf(n: usize, k: usize, p: f64) -> f64 {
    binom(n, k) * p.powi(k as i32) * (1.0 - p).powi((n - k) as i32)
}

/// Expected evaluations for an elitist single-individual walk on the number
/// of ones toward 1^n under standard bit mutation, counting the initial
/// evaluation.
fn exact_expected_cost(n: usize) -> f64 {
    let p = 1.0 / n as f64;
    let mut t = vec![0.0; n + 1];
    for i in (0..n).rev() {
        let mut up = vec![0.0; n + 1];
        for a in 0..=n - i {
            for b in 0..=i.min(a) {
                if a > b {
                    up[i + a - b] += pmf(n - i, a, p) * pmf(i, b, p);
                }
            }
        }
        let leave: f64 = up.iter().sum();
        let onward: f64 = (i + 1..=n).map(|j| up[j] * t[j]).sum();
        t[i] = (1.0 + onward) / leave;
    }
    1.0 + (0..=n).map(|i| pmf(n, i, 0.5) * t[i]).sum::<f64>()
}

#[test]
fn oracle_matches_small_hand_values() {
    assert_eq!(exact_expected_cost(1), 1.5);
    // n = 2, p = 1/2: from one 1-bit the walk leaves w.p. 1/4; from none, w.p. 3/4.
    let t1 = 4.0;
    let t0 = (1.0 + 0.5 * t1) / 0.75;
    assert!((exact_expected_cost(2) - (1.0 + 0.25 * t0 + 0.5 * t1)).abs() < 1e-12);
}

#[test]
fn single_individual_reference_run_matches_markov_chain() {
    for n in [8usize, 16] {
        let problem = ProblemSpec::one_min_max(n).unwrap();
        let z = ObjectiveVector::new(0.0, n as f64);
        let cfg = AlgorithmConfig::rnsga2(1, z);
        let costs: Vec<f64> = (0..3000)
            .map(|s| run(&problem, &cfg, 77_000 + s).unwrap().cost() as f64)
            .collect();
        let expected = exact_expected_cost(n);
        let se = sample_std(&costs) / (costs.len() as f64).sqrt();
        let got = mean(&costs);
        assert!(
            (got - expected).abs() < 4.0 * se,
            "n={n}: mean {got:.2}, exact {expected:.2}, se {se:.2}"
        );
    }
}

#[test]
fn capped_misses_report_generation_boundary_cost() {
    let problem = ProblemSpec::one_min_max_star(12).unwrap();
    let z = ObjectiveVector::new(-12.0, 24.0);
    let cfg = AlgorithmConfig::rnsga2(8, z).with_max_evaluations(Some(100));
    for seed in 0..20 {
        let r = run(&problem, &cfg, seed).unwrap();
        if !r.hit {
            assert_eq!(r.cost(), 104);
            assert_eq!(r.generations, 12);
        }
    }
}
