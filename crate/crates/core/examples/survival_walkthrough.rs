//! One round of environmental selection on a hand-built population, under
//! both survival policies.
//!
//! cargo run --example survival_walkthrough

use emo_lab::space::{BitString, ObjectiveVector};
use emo_lab::survival::{
    crowding_distance_assign, fast_nondominated_sort, reference_distances, survival_select,
    Individual, SurvivalPolicy,
};

fn population() -> Vec<Individual> {
    let points = [
        (0., 6.),
        (1., 5.),
        (3., 3.),
        (5., 1.),
        (6., 0.),
        (1., 4.),
        (2., 2.),
        (4., 1.),
        (0., 1.),
    ];
    points
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| {
            Individual::from_parts(BitString::zeros(6), ObjectiveVector::new(a, b), i as u64)
        })
        .collect()
}

fn show(label: &str, pop: &[Individual]) {
    let v: Vec<String> = pop
        .iter()
        .map(|i| format!("({})", i.objectives()))
        .collect();
    println!("{label}: {}", v.join(" "));
}

fn main() -> emo_lab::Result<()> {
    let mut pop = population();
    let fronts = fast_nondominated_sort(&mut pop);
    for (r, front) in fronts.fronts.iter().enumerate() {
        let pts: Vec<String> = front
            .iter()
            .map(|&i| format!("({})", pop[i].objectives()))
            .collect();
        println!("F{}: {}", r + 1, pts.join(" "));
    }

    let first = &fronts.fronts[0];
    let crowd = crowding_distance_assign(&pop, first);
    println!("crowding distances on F1: {crowd:?}");
    let z = ObjectiveVector::new(3., 4.);
    let dist = reference_distances(&pop, first, &z);
    println!(
        "distances to z=({z}) on F1: {:?}",
        dist.iter().map(|d| format!("{d:.3}")).collect::<Vec<_>>()
    );

    for (name, policy) in [
        ("crowding, keep 4", SurvivalPolicy::CrowdingDistance),
        (
            "reference, keep 4",
            SurvivalPolicy::ReferencePointDistance { z },
        ),
    ] {
        let kept = survival_select(population(), 4, &policy)?;
        show(name, &kept);
    }
    Ok(())
}
