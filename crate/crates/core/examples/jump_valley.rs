//! OneJumpZeroJump: where the valleys sit, and how fast each algorithm
//! crosses one to reach the outer point (n + k, k).
//!
//! cargo run --release --example jump_valley

use emo_lab::evolve::{run, AlgorithmConfig};
use emo_lab::lab::mean;
use emo_lab::problems::{classify_ojzj, default_reference_point, ProblemSpec};
use emo_lab::space::{BitString, RngStream};

fn main() -> emo_lab::Result<()> {
    let (n, k) = (12, 3);
    let problem = ProblemSpec::one_jump_zero_jump(n, k)?;
    println!("{problem}");
    for ones in 0..=n {
        let x = BitString::from_bits((0..n).map(|i| i < ones).collect())?;
        println!(
            "  |x|_1={ones:>2}  f=({})  {:?}",
            problem.evaluate(&x)?,
            classify_ojzj(&x, n, k)?
        );
    }

    let n = 20;
    let problem = ProblemSpec::one_jump_zero_jump(n, 2)?;
    let z = default_reference_point(&problem, &mut RngStream::from_seed(0))?;
    let big = 4 * (n - 1);
    for (label, cfg) in [
        ("NSGA-II N=4(n-2k+3)", AlgorithmConfig::nsga2(big, z)),
        ("R-NSGA-II N=1", AlgorithmConfig::rnsga2(1, z)),
    ] {
        let costs: Vec<f64> = (0..20)
            .map(|s| run(&problem, &cfg, s).map(|r| r.cost() as f64))
            .collect::<emo_lab::Result<_>>()?;
        println!(
            "n={n} z=({z}) {label:<20} mean evaluations {:.0}",
            mean(&costs)
        );
    }
    Ok(())
}
