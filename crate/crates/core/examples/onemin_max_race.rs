//! NSGA-II against R-NSGA-II on OneMinMax with the target (0, n), which is
//! reached by the all-ones string.
//!
//! cargo run --release --example onemin_max_race [n]

use emo_lab::evolve::{run, AlgorithmConfig};
use emo_lab::lab::{mean, rank_sum_test};
use emo_lab::problems::ProblemSpec;
use emo_lab::space::ObjectiveVector;

fn main() -> emo_lab::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(30);
    let problem = ProblemSpec::one_min_max(n)?;
    let z = ObjectiveVector::new(0.0, n as f64);
    let big = 4 * (n + 1);
    let algorithms = [
        ("NSGA-II N=4(n+1)", AlgorithmConfig::nsga2(big, z)),
        ("R-NSGA-II N=1", AlgorithmConfig::rnsga2(1, z)),
        ("R-NSGA-II N=4(n+1)", AlgorithmConfig::rnsga2(big, z)),
    ];
    let mut samples = Vec::new();
    for (label, cfg) in &algorithms {
        let costs: Vec<f64> = (0..40)
            .map(|seed| run(&problem, cfg, seed).map(|r| r.cost() as f64))
            .collect::<emo_lab::Result<_>>()?;
        println!("{label:<20} mean evaluations {:>9.0}", mean(&costs));
        samples.push(costs);
    }
    let t = rank_sum_test(&samples[2], &samples[0])?;
    println!(
        "R-NSGA-II N=4(n+1) vs NSGA-II: U={} p={:.2e} ({:?})",
        t.statistic, t.p_value, t.direction
    );
    Ok(())
}
