//! Per-sensor orchestration: ingest, discover, check, write.

use std::collections::HashMap;
use std::fs;
use std::path::PathBuf;

use coinmotif::catalog::ReportStatus;
use coinmotif::{run_pipeline, MotifCatalog, PipelineParams, SensorReport, TimeSeries};
use rayon::prelude::*;

use crate::catalog_io::write_catalog;
use crate::error::CliError;
use crate::ingest::{expand_inputs, read_runs, RunFile};
use crate::plot::{motif_svg, plot_file_name};

pub const CATALOG_FILE: &str = "catalog.json";
pub const PLOT_DIR: &str = "plots";

#[derive(Debug, Clone)]
pub struct RunConfig {
    /// Glob patterns, one file per run.
    pub inputs: Vec<String>,
    /// Sensor columns to analyze; empty means every non-timestamp column
    /// of the first file.
    pub sensors: Vec<String>,
    pub params: PipelineParams,
    pub out: PathBuf,
    pub plots: bool,
}

#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub catalog: MotifCatalog,
    pub catalog_path: PathBuf,
    pub plot_paths: Vec<PathBuf>,
}

struct SensorResult {
    report: SensorReport,
    series: Vec<TimeSeries>,
}

fn analyze(sensor: &str, runs: &[RunFile], params: &PipelineParams) -> Result<SensorResult, CliError> {
    let series = match runs.iter().map(|r| r.series(sensor)).collect::<Result<Vec<_>, _>>() {
        Ok(s) => s,
        Err(e) => {
            log::warn!("sensor `{sensor}`: {e}");
            return Ok(SensorResult {
                report: SensorReport::failed(sensor, &e),
                series: Vec::new(),
            });
        }
    };
    let report = match run_pipeline(&series, params) {
        Ok(d) => {
            let report = d.report();
            if !report.stages.is_monotone() {
                return Err(CliError::Invariant(format!("sensor `{sensor}`: stage counts grew: {:?}", report.stages)));
            }
            report
        }
        Err(e @ coinmotif::Error::RadiusViolation { .. }) => return Err(CliError::Invariant(format!("sensor `{sensor}`: {e}"))),
        Err(e) => {
            log::warn!("sensor `{sensor}`: {e}");
            SensorReport::failed(sensor, &e)
        }
    };
    Ok(SensorResult { report, series })
}

pub fn run(config: &RunConfig) -> Result<RunOutcome, CliError> {
    config.params.validate()?;
    if config.inputs.is_empty() {
        return Err(CliError::Config("no --input given".into()));
    }
    let paths = expand_inputs(&config.inputs)?;
    let runs = read_runs(&paths)?;
    let sensors = if config.sensors.is_empty() {
        runs[0].sensor_columns()
    } else {
        config.sensors.clone()
    };
    if sensors.is_empty() {
        return Err(CliError::Data(format!("{}: no sensor columns", paths[0].display())));
    }
    log::info!("{} runs, sensors: {}", runs.len(), sensors.join(", "));

    let results: Vec<SensorResult> = sensors
        .par_iter()
        .map(|s| analyze(s, &runs, &config.params))
        .collect::<Result<_, _>>()?;

    fs::create_dir_all(&config.out).map_err(|e| CliError::Data(format!("{}: {e}", config.out.display())))?;
    let mut plot_paths = Vec::new();
    if config.plots {
        let dir = config.out.join(PLOT_DIR);
        fs::create_dir_all(&dir).map_err(|e| CliError::Data(format!("{}: {e}", dir.display())))?;
        for r in results.iter().filter(|r| r.report.status == ReportStatus::Ok) {
            let by_run: HashMap<&str, &TimeSeries> = r.series.iter().map(|s| (s.id.as_str(), s)).collect();
            for m in &r.report.motifs {
                let path = dir.join(plot_file_name(&r.report.sensor, m.id));
                fs::write(&path, motif_svg(&r.report.sensor, m, config.params.window, &by_run))
                    .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
                plot_paths.push(path);
            }
        }
    }

    let catalog = MotifCatalog::new(config.params.clone(), results.into_iter().map(|r| r.report).collect());
    let catalog_path = config.out.join(CATALOG_FILE);
    write_catalog(&catalog_path, &catalog)?;
    if catalog.sensors.iter().all(|s| s.status == ReportStatus::Failed) {
        return Err(CliError::Data(format!(
            "every sensor failed; see {}",
            catalog_path.display()
        )));
    }
    Ok(RunOutcome {
        catalog,
        catalog_path,
        plot_paths,
    })
}
