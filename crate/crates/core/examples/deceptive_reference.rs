//! OneMinMax*: the target (-n, 2n) belongs to 0^n alone, while every other
//! string is closer to it the more ones it has. Distance-driven truncation
//! herds R-NSGA-II toward 1^n; NSGA-II keeps the whole front and reaches
//! 0^n from its 1-bit neighbours.
//!
//! cargo run --release --example deceptive_reference

use emo_lab::evolve::{run, AlgorithmConfig};
use emo_lab::problems::ProblemSpec;
use emo_lab::space::ObjectiveVector;

fn main() -> emo_lab::Result<()> {
    let n = 20;
    let problem = ProblemSpec::one_min_max_star(n)?;
    let z = ObjectiveVector::new(-(n as f64), 2.0 * n as f64);
    let cap = 50_000;
    for (label, cfg) in [
        ("NSGA-II", AlgorithmConfig::nsga2(4 * (n + 1), z)),
        ("R-NSGA-II", AlgorithmConfig::rnsga2(4 * (n + 1), z)),
    ] {
        let cfg = cfg.with_max_evaluations(Some(cap));
        let mut hits = 0;
        let mut spent = 0;
        for seed in 0..20 {
            let r = run(&problem, &cfg, seed)?;
            hits += r.hit as usize;
            spent += r.cost();
        }
        println!(
            "{label:<10} hit {hits}/20 within {cap} evaluations, {spent} evaluations in total"
        );
    }
    Ok(())
}
