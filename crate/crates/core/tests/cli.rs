use std::path::Path;
use std::process::{Command, Output};

fn emo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_emo-lab"))
        .args(args)
        .env_remove("EMO_LAB_SEED")
        .output()
        .expect("binary runs")
}

fn stdout_lines(out: &Output) -> Vec<String> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(String::from)
        .collect()
}

#[test]
fn oracle_prints_closed_form_fronts() {
    let omm = emo(&["oracle", "--problem", "omm", "--n", "4"]);
    assert!(omm.status.success());
    assert_eq!(stdout_lines(&omm), ["0 4", "1 3", "2 2", "3 1", "4 0"]);

    let ojzj = emo(&["oracle", "--problem", "ojzj", "--n", "8", "--k", "2"]);
    assert_eq!(
        stdout_lines(&ojzj),
        ["2 10", "4 8", "5 7", "6 6", "7 5", "8 4", "10 2"]
    );

    let star = emo(&["oracle", "--problem", "ommstar", "--n", "4"]);
    let lines = stdout_lines(&star);
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[0], "-4 8");
    assert!(String::from_utf8_lossy(&star.stderr).contains("# front size: 5"));
}

#[test]
fn oracle_enumeration_agrees_and_is_guarded() {
    let closed = emo(&["oracle", "--problem", "ojzj", "--n", "10", "--k", "3"]);
    let brute = emo(&[
        "oracle",
        "--problem",
        "ojzj",
        "--n",
        "10",
        "--k",
        "3",
        "--enumerate",
    ]);
    assert_eq!(closed.stdout, brute.stdout);

    let too_big = emo(&["oracle", "--problem", "omm", "--n", "26", "--enumerate"]);
    assert_eq!(too_big.status.code(), Some(2));
}

#[test]
fn nk_oracle_depends_only_on_seed() {
    let a = emo(&[
        "oracle",
        "--problem",
        "nk",
        "--n",
        "8",
        "--k",
        "2",
        "--seed",
        "3",
    ]);
    let b = emo(&[
        "oracle",
        "--problem",
        "nk",
        "--n",
        "8",
        "--k",
        "2",
        "--seed",
        "3",
    ]);
    assert!(a.status.success());
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(
        emo(&["oracle", "--problem", "ojzj", "--n", "8", "--k", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(emo(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(emo(&["sweep"]).status.code(), Some(2));
    assert_eq!(
        emo(&["run", "--problem", "omm", "--n", "0"]).status.code(),
        Some(2)
    );
}

#[test]
fn run_reports_json_and_writes_trace() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("trace.csv");
    let out = emo(&[
        "run",
        "--problem",
        "omm",
        "--n",
        "12",
        "--pop-size",
        "1",
        "--seed",
        "5",
        "--trace",
        trace.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["hit"], true);
    let cost = report["evaluations_to_hit"].as_u64().unwrap();

    let text = std::fs::read_to_string(&trace).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("generation,evaluations,min_distance,front_points_covered")
    );
    let rows: Vec<Vec<f64>> = lines
        .map(|l| l.split(',').map(|c| c.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows[0][1], 1.0);
    assert_eq!(rows.last().unwrap()[1] as u64, cost);
    assert_eq!(rows.last().unwrap()[2], 0.0);
    assert!(rows.windows(2).all(|w| w[1][2] <= w[0][2]));
}

#[test]
fn run_respects_the_cap() {
    let out = emo(&[
        "run",
        "--problem",
        "ommstar",
        "--n",
        "10",
        "--algorithm",
        "rnsga2",
        "--pop-size",
        "8",
        "--max-evals",
        "100",
        "--seed",
        "1",
    ]);
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["hit"], false);
    assert_eq!(report["evaluations"], 104);
}

fn sweep(dir: &Path, extra: &[&str]) -> Output {
    let mut args = vec![
        "sweep",
        "--preset",
        "ommstar",
        "--runs",
        "3",
        "--out",
        dir.to_str().unwrap(),
    ];
    args.extend_from_slice(extra);
    emo(&args)
}

#[test]
fn sweep_writes_trials_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let plan_path = dir.path().join("plan.json");
    std::fs::write(
        &plan_path,
        r#"{"name":"tiny","family":{"type":"one_min_max"},"n_values":[6,8],
            "variants":[{"label":"NSGA-II","policy":"crowding","population":{"rule":"affine","scale":4,"offset":1}},
                        {"label":"R-NSGA-II N=1","policy":"reference","population":{"rule":"fixed","size":1}}],
            "runs_per_cell":5,"master_seed":11,"max_evaluations":null}"#,
    )
    .unwrap();
    let out = emo(&[
        "sweep",
        "--plan",
        plan_path.to_str().unwrap(),
        "--parallelism",
        "2",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );

    let trials = std::fs::read_to_string(dir.path().join("trials.csv")).unwrap();
    let mut lines = trials.lines();
    assert_eq!(lines.next(), Some(emo_lab::lab::TRIALS_HEADER));
    assert_eq!(lines.count(), 2 * 2 * 5);

    let summary = std::fs::read_to_string(dir.path().join("summary.csv")).unwrap();
    assert_eq!(summary.lines().count(), 1 + 4);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), summary);
    assert!(String::from_utf8_lossy(&out.stderr).contains("# master seed: 11"));
}

#[test]
fn sweep_seed_comes_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    let by_flag = sweep(&a, &["--seed", "9"]);
    let by_env = Command::new(env!("CARGO_BIN_EXE_emo-lab"))
        .args([
            "sweep",
            "--preset",
            "ommstar",
            "--runs",
            "3",
            "--out",
            b.to_str().unwrap(),
        ])
        .env("EMO_LAB_SEED", "9")
        .output()
        .unwrap();
    assert!(by_flag.status.success() && by_env.status.success());
    assert_eq!(
        std::fs::read(a.join("trials.csv")).unwrap(),
        std::fs::read(b.join("trials.csv")).unwrap()
    );
}

#[test]
fn plot_renders_summary_and_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let summary = dir.path().join("summary.csv");
    std::fs::write(
        &summary,
        "problem,n,variant,mean_evals,std_evals,success_rate,runs\n\
         omm,10,NSGA-II,900,10,1,5\nomm,20,NSGA-II,4000,10,1,5\n\
         omm,10,R-NSGA-II N=1,80,3,1,5\nomm,20,R-NSGA-II N=1,300,3,1,5\n",
    )
    .unwrap();
    let svg = dir.path().join("plot.svg");
    let out = emo(&[
        "plot",
        summary.to_str().unwrap(),
        "--out",
        svg.to_str().unwrap(),
        "--log-y",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<svg"));
    assert_eq!(text.matches("<polyline").count(), 2);
    assert_eq!(text.matches("<circle").count(), 4);

    let missing = emo(&[
        "plot",
        "/nonexistent/summary.csv",
        "--out",
        svg.to_str().unwrap(),
    ]);
    assert_eq!(missing.status.code(), Some(3));

    let junk = dir.path().join("junk.csv");
    std::fs::write(&junk, "problem,n\nomm,ten\n").unwrap();
    let bad = emo(&[
        "plot",
        junk.to_str().unwrap(),
        "--out",
        svg.to_str().unwrap(),
    ]);
    assert_eq!(bad.status.code(), Some(2));
}
