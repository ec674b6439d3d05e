use std::fs;
use std::path::Path;

use evolab::harness::{
    emit_plot_data, load_results, run_experiment, run_experiment_with, summarize_dir, summary_csv,
    ExperimentConfig, Layout, PlotSelection,
};
use evolab::{run_trial, DistributionSpec, FunctionClass, Regime, TrialConfig};

fn small(out: &Path) -> ExperimentConfig {
    ExperimentConfig {
        classes: vec![FunctionClass::MonotoneConjunction, FunctionClass::Parity],
        dims: vec![5, 10],
        trials: Some(3),
        max_generations: 60,
        master_seed: 11,
        out: out.to_path_buf(),
        ..ExperimentConfig::default()
    }
}

#[test]
fn writes_the_documented_layout() {
    let dir = tempfile::tempdir().unwrap();
    let report = run_experiment(&small(dir.path()), 2).unwrap();
    assert_eq!(report.rows.len(), 4);
    let cell = dir.path().join("standard/parity/n10/uniform");
    for i in 0..3 {
        assert!(cell.join(format!("trial{i}.jsonl")).is_file());
        assert!(cell.join(format!("trial{i}.json")).is_file());
    }
    let summary = fs::read_to_string(dir.path().join("summary.csv")).unwrap();
    assert!(summary.starts_with(
        "regime,class,n,dist,trials,successes,success_rate,avg_generations_success,avg_bene_per_gen,avg_neut_per_gen,evolvable\n"
    ));
    assert_eq!(summary.lines().count(), 5);
}

#[test]
fn same_seed_same_bytes() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    run_experiment(&small(a.path()), 1).unwrap();
    run_experiment(&small(b.path()), 4).unwrap();
    for rel in [
        "summary.csv",
        "standard/monotone_conjunction/n5/uniform/trial2.jsonl",
    ] {
        assert_eq!(
            fs::read(a.path().join(rel)).unwrap(),
            fs::read(b.path().join(rel)).unwrap()
        );
    }
}

/// Recomputes every summary column from the JSONL trajectories alone.
#[test]
fn summary_matches_naive_recount_from_jsonl() {
    let dir = tempfile::tempdir().unwrap();
    let report = run_experiment(&small(dir.path()), 2).unwrap();
    for row in &report.rows {
        let cell = row.cell().dir(dir.path());
        let (mut gens, mut bene, mut neut, mut wins, mut win_gens) =
            (0usize, 0usize, 0usize, 0usize, 0usize);
        for i in 0..row.trials {
            let text = fs::read_to_string(cell.join(format!("trial{i}.jsonl"))).unwrap();
            let lines: Vec<serde_json::Value> = text
                .lines()
                .map(|l| serde_json::from_str(l).unwrap())
                .collect();
            gens += lines.len();
            bene += lines
                .iter()
                .map(|v| v["bene"].as_u64().unwrap() as usize)
                .sum::<usize>();
            neut += lines
                .iter()
                .map(|v| v["neut"].as_u64().unwrap() as usize)
                .sum::<usize>();
            let last = lines.last().unwrap();
            if last["val_perf"].as_f64().unwrap() > 0.95 {
                wins += 1;
                win_gens += lines.len();
            }
        }
        assert_eq!(row.successes, wins);
        assert_eq!(row.success_rate, wins as f64 / row.trials as f64);
        assert!((row.avg_bene_per_gen - bene as f64 / gens as f64).abs() < 1e-12);
        assert!((row.avg_neut_per_gen - neut as f64 / gens as f64).abs() < 1e-12);
        match row.avg_generations_success {
            Some(g) => assert!((g - win_gens as f64 / wins as f64).abs() < 1e-12),
            None => assert_eq!(wins, 0),
        }
    }
}

#[test]
fn summarize_dir_reproduces_sweep_csv() {
    let dir = tempfile::tempdir().unwrap();
    run_experiment(&small(dir.path()), 2).unwrap();
    let rows = summarize_dir(dir.path()).unwrap();
    let written = fs::read_to_string(dir.path().join("summary.csv")).unwrap();
    assert_eq!(summary_csv(&rows).unwrap(), written);
}

#[test]
fn panicking_trials_are_recorded_not_dropped() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = small(dir.path());
    let report = run_experiment_with(&cfg, 2, |tc: &TrialConfig| {
        if tc.class == FunctionClass::Parity && tc.n == 10 {
            panic!("injected");
        }
        run_trial(tc)
    })
    .unwrap();
    assert_eq!(report.errors().count(), 3);
    assert_eq!(report.rows.len(), 3);
    let err = dir
        .path()
        .join("standard/parity/n10/uniform/trial0.error.json");
    assert!(fs::read_to_string(err).unwrap().contains("injected"));
}

#[test]
fn unwritable_output_aborts_before_running() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("occupied");
    fs::write(&file, "").unwrap();
    let ran = std::sync::atomic::AtomicBool::new(false);
    let result = run_experiment_with(&small(&file.join("out")), 1, |tc: &TrialConfig| {
        ran.store(true, std::sync::atomic::Ordering::SeqCst);
        run_trial(tc)
    });
    assert!(result.is_err());
    assert!(!ran.into_inner());
}

#[test]
fn plot_layouts_from_a_sweep() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = ExperimentConfig {
        dims: vec![5, 10, 20, 30, 50],
        trials: Some(1),
        max_generations: 20,
        ..small(dir.path())
    };
    let report = run_experiment(
        &ExperimentConfig {
            classes: FunctionClass::ALL.to_vec(),
            ..cfg
        },
        1,
    )
    .unwrap();
    let results = load_results(dir.path()).unwrap();
    let sel = PlotSelection::default();

    let path =
        emit_plot_data(&report.rows, &results, Layout::SummaryGrid, sel, dir.path()).unwrap();
    assert!(path.ends_with("plots/SummaryGrid.csv"));
    assert_eq!(
        fs::read_to_string(&path).unwrap().lines().count(),
        1 + 4 * 6 * 5
    );

    let path =
        emit_plot_data(&report.rows, &results, Layout::FitnessGrid, sel, dir.path()).unwrap();
    let text = fs::read_to_string(path).unwrap();
    for line in text.lines().skip(1).filter(|l| l.starts_with("parity,")) {
        let y: f64 = line.rsplit(',').next().unwrap().parse().unwrap();
        assert!(y.abs() < 0.2, "parity curve should stay flat: {line}");
    }

    let other = PlotSelection {
        regime: Regime::NoNeutral,
        dist: DistributionSpec::Uniform,
    };
    assert!(emit_plot_data(
        &report.rows,
        &results,
        Layout::PerClassDistGrid,
        other,
        dir.path()
    )
    .is_err());
}
