//! Closed-form fronts next to brute-force enumeration, plus an enumerated
//! NK-landscape front with a witness bitstring per point.
//!
//! cargo run --example pareto_fronts

use emo_lab::problems::{
    enumerate_pareto_front, pareto_front_closed_form, NkInstance, ProblemSpec,
};

fn main() -> emo_lab::Result<()> {
    let problems = [
        ProblemSpec::one_min_max(6)?,
        ProblemSpec::one_jump_zero_jump(10, 2)?,
        ProblemSpec::one_min_max_star(6)?,
    ];
    for p in &problems {
        let closed = pareto_front_closed_form(p)?;
        let brute = enumerate_pareto_front(p, false)?;
        let shown: Vec<String> = closed.points().iter().map(|v| format!("({v})")).collect();
        println!(
            "{p}: {} points, enumeration agrees: {}",
            closed.len(),
            closed.same_points(&brute)
        );
        println!("  {}", shown.join(" "));
    }

    let nk = ProblemSpec::nk_landscape(NkInstance::generate(12, 3, 42)?);
    let front = enumerate_pareto_front(&nk, true)?;
    println!("{nk}: {} Pareto-optimal vectors", front.len());
    for (i, v) in front.points().iter().enumerate() {
        println!(
            "  {:.4} {:.4}  e.g. {}",
            v.f1(),
            v.f2(),
            front.witness(i).unwrap()
        );
    }
    Ok(())
}
