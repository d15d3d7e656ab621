//! Experiment orchestration: plans, seeded parallel trials, summaries and
//! statistical comparisons.

mod io;
mod plan;
mod runner;
mod stats;

pub(crate) use io::csv_writer;
pub use io::{
    read_summary_csv, write_summary_csv, write_trials_csv, SUMMARY_HEADER, TRIALS_HEADER,
};
pub use plan::{
    nk_instance_seed, preset, preset_plans, reference_seed, trial_seed, ExperimentPlan, PolicyKind,
    PopulationRule, ProblemFamily, Variant, DEFAULT_MASTER_SEED, OJZJ_LABELS, OMM_LABELS,
};
pub use runner::{resolve_target, run_experiment, Target, TrialRecord};
pub use stats::{
    loglog_slope, mean, median, rank_sum_test, sample_std, summarize, Direction, StatTestResult,
    SummaryRow,
};

/// Evaluation counts of one `(n, variant)` cell, in trial order.
pub fn cell_costs(records: &[TrialRecord], n: usize, variant: &str) -> Vec<f64> {
    records
        .iter()
        .filter(|r| r.n == n && r.variant == variant)
        .map(|r| r.evaluations as f64)
        .collect()
}
