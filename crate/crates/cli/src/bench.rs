//! Wall-clock scaling of the pipeline over doubling series lengths.

use std::fmt::Write;
use std::time::Instant;

use coinmotif::oracle::{naive_frequent_motifs, sensor_like_series, NAIVE_MAX_LEN};
use coinmotif::{run_pipeline, PipelineParams, Strategy, TimeSeries};

use crate::error::CliError;

pub const ORACLE: &str = "oracle";

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub lengths: Vec<usize>,
    pub strategies: Vec<Strategy>,
    /// Lengths at which the exhaustive search is timed; none by default.
    pub oracle_lengths: Vec<usize>,
    /// Each timing is the median of this many runs.
    pub repeats: usize,
    /// Seed of the synthetic series.
    pub seed: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            lengths: vec![25_000, 50_000, 100_000, 200_000],
            strategies: vec![Strategy::Birch, Strategy::Lsh],
            oracle_lengths: vec![1_250, 2_500, 5_000],
            repeats: 5,
            seed: 42,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub method: String,
    pub length: usize,
    pub seconds: f64,
    /// Time relative to the previous row of the same method.
    pub ratio: Option<f64>,
}

fn median_seconds(repeats: usize, mut f: impl FnMut() -> Result<(), CliError>) -> Result<f64, CliError> {
    let mut times = Vec::with_capacity(repeats.max(1));
    for _ in 0..repeats.max(1) {
        let t = Instant::now();
        f()?;
        times.push(t.elapsed().as_secs_f64());
    }
    times.sort_by(f64::total_cmp);
    Ok(times[times.len() / 2])
}

fn with_ratios(method: &str, timings: Vec<(usize, f64)>) -> Vec<BenchRow> {
    let mut prev: Option<f64> = None;
    timings
        .into_iter()
        .map(|(length, seconds)| {
            let row = BenchRow {
                method: method.to_string(),
                length,
                seconds,
                ratio: prev.map(|p| seconds / p),
            };
            prev = Some(seconds);
            row
        })
        .collect()
}

/// Times the full pipeline per strategy and, where requested, the
/// exhaustive search. `source` replaces the synthetic series with prefixes
/// of a loaded one.
pub fn bench_scaling(config: &BenchConfig, params: &PipelineParams, source: Option<&[f64]>) -> Result<Vec<BenchRow>, CliError> {
    params.validate()?;
    let data = |n: usize| -> Result<Vec<f64>, CliError> {
        match source {
            Some(v) if v.len() < n => Err(CliError::Data(format!("input has {} samples, {n} requested", v.len()))),
            Some(v) => Ok(v[..n].to_vec()),
            None => Ok(sensor_like_series(n, config.seed)),
        }
    };
    let mut rows = Vec::new();
    for &strategy in &config.strategies {
        let mut p = params.clone();
        p.strategy = strategy;
        let mut timings = Vec::new();
        for &n in &config.lengths {
            let series = vec![TimeSeries::new("bench", "bench", data(n)?)?];
            let secs = median_seconds(config.repeats, || run_pipeline(&series, &p).map(|_| ()).map_err(CliError::from))?;
            log::info!("{strategy} n={n}: {secs:.4}s");
            timings.push((n, secs));
        }
        rows.extend(with_ratios(strategy.name(), timings));
    }
    let mut timings = Vec::new();
    for &n in config.oracle_lengths.iter().filter(|&&n| n <= NAIVE_MAX_LEN) {
        let values = data(n)?;
        let secs = median_seconds(config.repeats.min(3), || {
            naive_frequent_motifs(&values, params.window, params.radius, params.support)
                .map(|_| ())
                .map_err(CliError::from)
        })?;
        log::info!("{ORACLE} n={n}: {secs:.4}s");
        timings.push((n, secs));
    }
    rows.extend(with_ratios(ORACLE, timings));
    Ok(rows)
}

/// Tab-delimited table with a header line.
pub fn format_table(rows: &[BenchRow]) -> String {
    let mut out = String::from("method\tlength\tseconds\tratio\n");
    for r in rows {
        let ratio = r.ratio.map_or_else(|| "-".to_string(), |x| format!("{x:.3}"));
        let _ = writeln!(out, "{}\t{}\t{:.6}\t{}", r.method, r.length, r.seconds, ratio);
    }
    out
}
