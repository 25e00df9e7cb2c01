//! End-to-end motif discovery for the series of one sensor.

use std::time::Instant;

use log::{debug, info};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::catalog::{MemberRecord, MotifRecord, ReportStatus, SensorReport, StageCounts, StageSize, StageTiming};
use crate::coin::{coin_cluster_ordered, Clustering, CoinConfig};
use crate::error::Result;
use crate::extract::{filter_support, remove_shifted, remove_trivial_within, split_levels, GroupMotif, Motif};
use crate::params::PipelineParams;
use crate::preprocess::{preprocess, Preprocessed};
use crate::series::TimeSeries;

/// Every intermediate result of a pipeline run.
#[derive(Debug, Clone)]
pub struct Discovery {
    pub sensor: String,
    pub params: PipelineParams,
    pub preprocessed: Preprocessed,
    /// Order in which candidates were presented to the clustering.
    pub order: Vec<usize>,
    pub clustering: Clustering,
    pub high_support: Vec<GroupMotif>,
    pub unshifted: Vec<GroupMotif>,
    pub trivial_removed: Vec<GroupMotif>,
    /// Group-motifs after the second shifted-cluster pass.
    pub group_motifs: Vec<GroupMotif>,
    pub motifs: Vec<Motif>,
    pub timing: StageTiming,
}

fn size(groups: &[GroupMotif]) -> StageSize {
    StageSize {
        clusters: groups.len(),
        subsequences: groups.iter().map(GroupMotif::support).sum(),
    }
}

fn elapsed_ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

impl Discovery {
    pub fn stage_counts(&self) -> StageCounts {
        let c = &self.preprocessed.counts;
        StageCounts {
            series_total: c.series_total,
            series_used: c.series_used,
            subsequences: c.generated,
            after_deviation_filter: c.after_deviation_filter,
            candidates: c.candidates,
            clusters: self.clustering.clusters.len(),
            high_support: size(&self.high_support),
            unshifted: size(&self.unshifted),
            trivial_removed: size(&self.trivial_removed),
            unshifted_rerun: size(&self.group_motifs),
            level_split: StageSize {
                clusters: self.motifs.len(),
                subsequences: self.motifs.iter().map(Motif::support).sum(),
            },
        }
    }

    pub fn report(&self) -> SensorReport {
        let matrix = &self.preprocessed.candidates;
        let motifs = self
            .motifs
            .iter()
            .enumerate()
            .map(|(id, m)| MotifRecord {
                id,
                group_motif: m.group,
                support: m.support(),
                centroid: m.centroid.clone(),
                level: m.level,
                members: m
                    .members
                    .iter()
                    .map(|&i| MemberRecord {
                        run: matrix.run_id(i).to_string(),
                        start: matrix.entries[i].start,
                        level: matrix.entries[i].level,
                    })
                    .collect(),
            })
            .collect();
        SensorReport {
            sensor: self.sensor.clone(),
            status: ReportStatus::Ok,
            error: None,
            warnings: self
                .preprocessed
                .warnings
                .iter()
                .map(|w| format!("{}: {}", w.series, w.error))
                .collect(),
            stages: self.stage_counts(),
            motifs,
            timing_ms: self.timing,
        }
    }
}

/// Runs preprocessing, clustering and extraction over `series`, which are
/// taken to be runs of the same sensor.
pub fn run_pipeline(series: &[TimeSeries], params: &PipelineParams) -> Result<Discovery> {
    let sensor = series.first().map(|s| s.sensor.clone()).unwrap_or_default();
    let start = Instant::now();

    let t = Instant::now();
    let preprocessed = preprocess(series, params)?;
    let preprocess_ms = elapsed_ms(t);
    let matrix = &preprocessed.candidates;
    debug!("{sensor}: {} candidates", matrix.len());

    let t = Instant::now();
    let mut order: Vec<usize> = (0..matrix.len()).collect();
    if let Some(seed) = params.shuffle_seed {
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    let clustering = coin_cluster_ordered(&matrix.vectors(), &order, &CoinConfig::from_params(params))?;
    let cluster_ms = elapsed_ms(t);

    let t = Instant::now();
    let high_support: Vec<GroupMotif> = filter_support(&clustering.clusters, params.support)
        .into_iter()
        .map(|c| GroupMotif::from_cluster(c, matrix))
        .collect();
    let unshifted = remove_shifted(high_support.clone(), matrix, &params.shift);
    let delta = params.delta();
    let trivial_removed: Vec<GroupMotif> = unshifted
        .iter()
        .map(|g| remove_trivial_within(g, matrix, &preprocessed.full, delta))
        .collect();
    let group_motifs = remove_shifted(trivial_removed.clone(), matrix, &params.shift);
    let motifs: Vec<Motif> = group_motifs
        .iter()
        .flat_map(|g| split_levels(g, matrix, &params.levels, params.support))
        .collect();
    let extract_ms = elapsed_ms(t);

    info!(
        "{sensor}: {} clusters, {} group-motifs, {} motifs",
        clustering.clusters.len(),
        group_motifs.len(),
        motifs.len()
    );
    let total = elapsed_ms(start);
    Ok(Discovery {
        sensor,
        params: params.clone(),
        order,
        clustering,
        high_support,
        unshifted,
        trivial_removed,
        group_motifs,
        motifs,
        timing: StageTiming {
            preprocess: preprocess_ms,
            cluster: cluster_ms,
            extract: extract_ms,
            total,
        },
        preprocessed,
    })
}

/// Runs the pipeline and summarizes it as a catalog entry.
pub fn discover_motifs(series: &[TimeSeries], params: &PipelineParams) -> Result<SensorReport> {
    run_pipeline(series, params).map(|d| d.report())
}
