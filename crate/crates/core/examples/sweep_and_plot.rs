//! A reduced preset sweep through the experiment harness: trial records,
//! summary rows, a log-log slope, CSV files and an SVG chart in a scratch
//! directory.
//!
//! cargo run --release --example sweep_and_plot [out-dir]

use std::fs::File;
use std::path::PathBuf;

use emo_lab::cli::render_svg;
use emo_lab::lab::{
    loglog_slope, preset, run_experiment, summarize, write_summary_csv, write_trials_csv,
    OMM_LABELS,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out: PathBuf = std::env::args()
        .nth(1)
        .map_or_else(|| std::env::temp_dir().join("emo-lab-sweep"), PathBuf::from);
    std::fs::create_dir_all(&out)?;

    let plan = preset("omm")
        .expect("built-in")
        .with_n_values(vec![10, 20, 30])
        .with_runs(20)
        .with_seed(7);
    plan.validate()?;
    let records = run_experiment(&plan, 2)?;
    let summary = summarize(&records)?;
    for row in &summary {
        println!(
            "n={:<3} {:<20} mean {:>8.0} std {:>8.0}",
            row.n, row.variant, row.mean_evals, row.std_evals
        );
    }
    for label in OMM_LABELS {
        println!(
            "log-log slope {label}: {:.2}",
            loglog_slope(&summary, label)?
        );
    }

    write_trials_csv(File::create(out.join("trials.csv"))?, &records)?;
    write_summary_csv(File::create(out.join("summary.csv"))?, &summary)?;
    std::fs::write(out.join("omm.svg"), render_svg(&summary, true)?)?;
    println!(
        "wrote trials.csv, summary.csv and omm.svg to {}",
        out.display()
    );
    Ok(())
}
