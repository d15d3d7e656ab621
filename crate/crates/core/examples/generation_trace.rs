//! Per-generation progress of one R-NSGA-II run: distance to the target and
//! how many Pareto-front vectors the population holds, as CSV on stdout.
//!
//! cargo run --release --example generation_trace

use emo_lab::evolve::{run_traced, AlgorithmConfig};
use emo_lab::problems::{pareto_front_closed_form, ProblemSpec};
use emo_lab::space::ObjectiveVector;

fn main() -> emo_lab::Result<()> {
    let n = 16;
    let problem = ProblemSpec::one_min_max(n)?;
    let front = pareto_front_closed_form(&problem)?;
    let z = ObjectiveVector::new(0.0, n as f64);
    let cfg = AlgorithmConfig::rnsga2(8, z);
    let result = run_traced(&problem, &cfg, 3, Some(&front), std::io::stdout().lock())?;
    eprintln!(
        "hit={} after {} evaluations in {} generations",
        result.hit,
        result.cost(),
        result.generations
    );
    Ok(())
}
