//! Generate a bi-objective NK-landscape, save and reload it as JSON, and
//! race both algorithms toward a Pareto-optimal target.
//!
//! cargo run --release --example nk_landscape

use emo_lab::evolve::{run, AlgorithmConfig};
use emo_lab::lab::{median, reference_seed};
use emo_lab::problems::{default_reference_point, NkInstance, ProblemSpec};
use emo_lab::space::{BitString, RngStream};

fn main() -> emo_lab::Result<()> {
    let seed = 2024;
    let instance = NkInstance::generate(14, 3, seed)?;
    println!(
        "bit 0 reads loci {:?} for f1 and {:?} for f2",
        instance.loci(0, 0),
        instance.loci(1, 0)
    );
    let json = instance.to_json()?;
    let reloaded = NkInstance::from_json(&json)?;
    assert_eq!(reloaded, instance);
    println!("instance JSON: {} bytes, reload is identical", json.len());

    let problem = ProblemSpec::nk_landscape(reloaded);
    println!("f(0^n) = ({:.4})", problem.evaluate(&BitString::zeros(14))?);
    let z = default_reference_point(&problem, &mut RngStream::from_seed(reference_seed(seed)))?;
    println!("target ({:.4})", z);

    for (label, cfg) in [
        ("NSGA-II", AlgorithmConfig::nsga2(100, z)),
        ("R-NSGA-II", AlgorithmConfig::rnsga2(100, z)),
    ] {
        let cfg = cfg.with_max_evaluations(Some(200_000));
        let mut costs = Vec::new();
        let mut misses = 0;
        for s in 0..10 {
            let r = run(&problem, &cfg, s)?;
            misses += !r.hit as usize;
            costs.push(r.cost() as f64);
        }
        println!(
            "{label:<10} median evaluations {:>8.0}, capped misses {misses}/10",
            median(&costs)
        );
    }
    Ok(())
}
