//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p coinmotif-cli --test acceptance`. Public-data
//! checks run only when `COINMOTIF_TEMPERATURE` and/or `COINMOTIF_ECG` name
//! local CSV files; otherwise they print SKIP.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use coinmotif::catalog::ReportStatus;
use coinmotif::coin::{coin_cluster, CoinConfig};
use coinmotif::oracle::{
    audit_cluster, definition1_violations, generate_planted, half_sine_bump, oracle_threshold_nn, pearson,
    reference_shape, replay_insertions, PlantedSpec,
};
use coinmotif::{run_pipeline, PipelineParams, Strategy, TimeSeries};
use coinmotif_cli::bench::{bench_scaling, format_table, BenchConfig, ORACLE};
use coinmotif_cli::catalog_io::to_json;
use coinmotif_cli::ingest::{expand_inputs, read_runs};
use coinmotif_cli::run::{run, RunConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Option<Outcome> {
    Some(Outcome {
        pass,
        detail: detail.into(),
    })
}

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

/// (name, glob) of every bundled fixture set.
fn fixture_sets() -> Vec<(&'static str, String)> {
    let root = fixtures();
    vec![
        ("vehicle", format!("{}/vehicle/*.csv", root.display())),
        ("planted", format!("{}/planted/planted.csv", root.display())),
    ]
}

/// Every (fixture, sensor) pair as loaded series.
fn fixture_series() -> Vec<(String, Vec<TimeSeries>)> {
    let mut out = Vec::new();
    for (name, pattern) in fixture_sets() {
        let runs = read_runs(&expand_inputs(&[pattern]).expect("fixture files")).expect("fixture parse");
        for sensor in runs[0].sensor_columns() {
            let series = runs.iter().map(|r| r.series(&sensor).unwrap()).collect();
            out.push((format!("{name}/{sensor}"), series));
        }
    }
    out
}

fn oracle_equivalence() -> Option<Outcome> {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let matrices = 60;
    let mut mismatches = 0;
    for _ in 0..matrices {
        let n = rng.random_range(1..=500);
        let blobs: Vec<Vec<f64>> = (0..rng.random_range(1..8))
            .map(|_| (0..10).map(|_| rng.random_range(-3.0..3.0)).collect())
            .collect();
        let spread = Normal::new(0.0, rng.random_range(0.1..0.6)).unwrap();
        let pts: Vec<Vec<f64>> = (0..n)
            .map(|_| {
                let b = &blobs[rng.random_range(0..blobs.len())];
                b.iter().map(|c| c + spread.sample(&mut rng)).collect()
            })
            .collect();
        let radius = rng.random_range(0.5..2.0);
        let got = coin_cluster(&pts, &CoinConfig::new(radius, Strategy::Basic)).unwrap();
        if got.memberships() != oracle_threshold_nn(&pts, radius) {
            mismatches += 1;
        }
    }
    let secs = t.elapsed().as_secs_f64();
    outcome(
        mismatches == 0 && secs < 10.0,
        format!("{matrices} matrices (n<=500, d=10), {mismatches} mismatches, {secs:.2}s (limit 10s)"),
    )
}

fn planted_recovery() -> Option<Outcome> {
    let w = 20;
    let pattern = half_sine_bump(w, 3.0);
    let mut spec = PlantedSpec::new(pattern.clone(), 60, 50_000, 1);
    spec.levels = vec![-4.0, 4.0];
    spec.noise_sigma = 0.02 * 3.0;
    let planted = generate_planted(&spec).unwrap();
    let series = vec![planted.to_series("planted", "value").unwrap()];
    let mut pass = true;
    let mut parts = Vec::new();
    for strategy in Strategy::ALL {
        let mut params = PipelineParams::for_window(w);
        params.support = 10;
        params.strategy = strategy;
        let t = Instant::now();
        let d = run_pipeline(&series, &params).unwrap();
        let secs = t.elapsed().as_secs_f64();
        let shape = reference_shape(&pattern, params.paa_dim);
        let m = &d.preprocessed.candidates;
        let mut good: Vec<_> = d.motifs.iter().filter(|mo| pearson(&mo.centroid, &shape) > 0.95).collect();
        good.sort_by(|a, b| a.level.mean.total_cmp(&b.level.mean));
        let recovered = planted
            .injections
            .iter()
            .filter(|inj| {
                good.iter()
                    .any(|mo| mo.members.iter().any(|&i| m.entries[i].start.abs_diff(inj.start) <= w / 4))
            })
            .count();
        // Each band must hold only injections of one level.
        let separated = good.len() == 2
            && good.iter().zip([-4.0, 4.0]).all(|(mo, level)| {
                mo.members.iter().all(|&i| {
                    let s = m.entries[i].start;
                    planted
                        .injections
                        .iter()
                        .filter(|inj| inj.start.abs_diff(s) <= w / 4)
                        .all(|inj| inj.level == level)
                })
            });
        let ok = recovered * 10 >= 9 * 60 && good.len() == 2 && separated && secs < 30.0;
        pass &= ok;
        parts.push(format!(
            "{strategy}: {recovered}/60 recovered, {} pattern motifs, levels separated={separated}, {secs:.1}s",
            good.len()
        ));
    }
    outcome(pass, parts.join("; "))
}

fn scaling() -> Option<Outcome> {
    let config = BenchConfig::default();
    let rows = bench_scaling(&config, &PipelineParams::for_window(20), None).unwrap();
    print!("{}", format_table(&rows));
    let mut pass = true;
    let mut parts = Vec::new();
    for method in ["birch", "lsh", ORACLE] {
        let ratios: Vec<f64> = rows.iter().filter(|r| r.method == method).filter_map(|r| r.ratio).collect();
        let ok = if method == ORACLE {
            !ratios.is_empty() && ratios.iter().all(|&r| r >= 3.0)
        } else {
            ratios.len() >= 3 && ratios.iter().all(|&r| r <= 2.6)
        };
        pass &= ok;
        let shown: Vec<String> = ratios.iter().map(|r| format!("{r:.2}")).collect();
        parts.push(format!("{method} ratios [{}]", shown.join(", ")));
    }
    outcome(pass, format!("{} (birch/lsh <= 2.6, oracle >= 3.0)", parts.join("; ")))
}

fn audit() -> Option<Outcome> {
    let mut outliers = 0;
    let mut clusters = 0;
    let mut replay = 0;
    for (_, series) in fixture_series() {
        for strategy in Strategy::ALL {
            let mut params = PipelineParams::for_window(20);
            params.strategy = strategy;
            let d = run_pipeline(&series, &params).unwrap();
            let pts = d.preprocessed.candidates.vectors();
            clusters += d.clustering.clusters.len();
            for c in &d.clustering.clusters {
                let members: Vec<&[f64]> = c.members.iter().map(|&i| pts[i]).collect();
                outliers += audit_cluster(&members, params.radius).outlier_count;
            }
            replay += replay_insertions(&pts, &d.clustering.log, params.radius).len();
        }
    }
    outcome(
        outliers <= 2 * clusters && replay == 0,
        format!("outliers {outliers} <= 2 x {clusters} clusters; {replay} insertions farther than R on replay"),
    )
}

fn definition1() -> Option<Outcome> {
    let mut pairs = 0;
    let mut violations = 0;
    for (_, series) in fixture_series() {
        for strategy in Strategy::ALL {
            let mut params = PipelineParams::for_window(20);
            params.strategy = strategy;
            let d = run_pipeline(&series, &params).unwrap();
            let m = &d.preprocessed.candidates;
            let full = &d.preprocessed.full;
            for g in &d.trivial_removed {
                let members: Vec<(usize, usize, &[f64])> = g
                    .members
                    .iter()
                    .map(|&i| (m.entries[i].series, m.entries[i].start, m.entries[i].reduced.as_slice()))
                    .collect();
                for (k, a) in members.iter().enumerate() {
                    pairs += members[k + 1..].iter().filter(|b| b.0 == a.0).count();
                }
                violations += definition1_violations(&members, params.delta(), |s, t| {
                    (t < full.count(s)).then(|| full.vector(s, t))
                })
                .len();
            }
        }
    }
    outcome(
        violations == 0,
        format!("{pairs} same-run member pairs checked, {violations} violations (delta = 2R)"),
    )
}

fn public_data() -> Option<Outcome> {
    let cases = [("COINMOTIF_TEMPERATURE", 80, Some(2.0)), ("COINMOTIF_ECG", 20, None)];
    let mut parts = Vec::new();
    let mut pass = true;
    let mut ran = false;
    for (var, w, radius) in cases {
        let Ok(path) = std::env::var(var) else { continue };
        ran = true;
        let dir = tempfile::tempdir().unwrap();
        let mut params = PipelineParams::for_window(w);
        if let Some(r) = radius {
            params.radius = r;
        }
        let t = Instant::now();
        let result = run(&RunConfig {
            inputs: vec![path.clone()],
            sensors: Vec::new(),
            params,
            out: dir.path().to_path_buf(),
            plots: true,
        });
        let secs = t.elapsed().as_secs_f64();
        match result {
            Ok(o) => {
                let motifs: usize = o.catalog.sensors.iter().map(|s| s.motifs.len()).sum();
                let ok = secs < 5.0 && motifs > 0;
                pass &= ok;
                parts.push(format!("{path}: {motifs} motifs, {} plots, {secs:.2}s (limit 5s)", o.plot_paths.len()));
            }
            Err(e) => {
                pass = false;
                parts.push(format!("{path}: {e}"));
            }
        }
    }
    if !ran {
        return None;
    }
    outcome(pass, parts.join("; "))
}

fn determinism() -> Option<Outcome> {
    let mut pass = true;
    let mut parts = Vec::new();
    for strategy in Strategy::ALL {
        let mut params = PipelineParams::for_window(20);
        params.strategy = strategy;
        params.shuffle_seed = Some(3);
        let catalogs: Vec<String> = (0..2)
            .map(|_| {
                let dir = tempfile::tempdir().unwrap();
                let o = run(&RunConfig {
                    inputs: fixture_sets().into_iter().map(|f| f.1).take(1).collect(),
                    sensors: Vec::new(),
                    params: params.clone(),
                    out: dir.path().to_path_buf(),
                    plots: false,
                })
                .unwrap();
                to_json(&o.catalog.without_timing())
            })
            .collect();
        let same = catalogs[0] == catalogs[1];
        pass &= same;
        parts.push(format!("{strategy}: {}", if same { "identical" } else { "differs" }));
    }
    outcome(pass, format!("two runs per strategy on the vehicle extract: {}", parts.join(", ")))
}

fn stage_counts() -> Option<Outcome> {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&RunConfig {
        inputs: vec![fixture_sets()[0].1.clone()],
        sensors: Vec::new(),
        params: PipelineParams::for_window(20),
        out: dir.path().to_path_buf(),
        plots: false,
    })
    .unwrap();
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&o.catalog_path).unwrap()).unwrap();
    let keys = [
        "high_support",
        "unshifted",
        "trivial_removed",
        "unshifted_rerun",
        "level_split",
    ];
    let mut pass = true;
    let mut parts = Vec::new();
    for (report, raw) in o.catalog.sensors.iter().zip(json["sensors"].as_array().unwrap()) {
        let recorded = keys.iter().all(|k| raw["stages"][k]["subsequences"].is_u64());
        let ok = report.status == ReportStatus::Ok && recorded && report.stages.is_monotone();
        pass &= ok;
        let s = &report.stages;
        parts.push(format!(
            "{}: {}->{}->{}->{}->{} subsequences, {} motifs",
            report.sensor,
            s.high_support.subsequences,
            s.unshifted.subsequences,
            s.trivial_removed.subsequences,
            s.unshifted_rerun.subsequences,
            s.level_split.subsequences,
            report.motifs.len()
        ));
    }
    let motifs: usize = o.catalog.sensors.iter().map(|s| s.motifs.len()).sum();
    pass &= motifs >= 1;
    outcome(pass, parts.join("; "))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Option<Outcome>); 8] = [
        ("1 oracle equivalence", oracle_equivalence),
        ("2 planted-motif recovery", planted_recovery),
        ("3 near-linear scaling", scaling),
        ("4 diameter/outlier audit", audit),
        ("5 definition-1 soundness", definition1),
        ("6 public-data smoke", public_data),
        ("7 determinism", determinism),
        ("8 stage counts on vehicle extract", stage_counts),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Some(o) if o.pass => println!("PASS  {name}: {}", o.detail),
            Some(o) => {
                failed += 1;
                println!("FAIL  {name}: {}", o.detail);
            }
            None => println!("SKIP  {name}: set COINMOTIF_TEMPERATURE / COINMOTIF_ECG to local CSV files"),
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
