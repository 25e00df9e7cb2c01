//! Reference implementations and generators used to check the pipeline.
//!
//! Nothing here shares code with the production clustering or extraction
//! modules: distances, centroids and normalization are recomputed locally.

mod audit;
mod naive;
mod nn;
mod planted;
mod synthetic;

pub use audit::{audit_cluster, definition1_violations, ClusterAudit, PairViolation};
pub use naive::{naive_frequent_motifs, NAIVE_MAX_LEN};
pub use nn::{oracle_threshold_nn, oracle_threshold_nn_ordered, replay_insertions, ReplayViolation};
pub use planted::{generate_planted, half_sine_bump, Injection, PlantedSeries, PlantedSpec};
pub use synthetic::sensor_like_series;

pub(crate) fn sq_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Pearson correlation; 0 when either side is constant.
pub fn pearson(a: &[f64], b: &[f64]) -> f64 {
    let n = a.len().min(b.len()) as f64;
    if n == 0.0 {
        return 0.0;
    }
    let ma = a.iter().sum::<f64>() / n;
    let mb = b.iter().sum::<f64>() / n;
    let (mut sab, mut saa, mut sbb) = (0.0, 0.0, 0.0);
    for (x, y) in a.iter().zip(b) {
        sab += (x - ma) * (y - mb);
        saa += (x - ma) * (x - ma);
        sbb += (y - mb) * (y - mb);
    }
    if saa == 0.0 || sbb == 0.0 {
        0.0
    } else {
        sab / (saa * sbb).sqrt()
    }
}

/// Mean of `values` over `d` near-equal segments, then shifted to zero mean.
pub fn reference_shape(values: &[f64], d: usize) -> Vec<f64> {
    let w = values.len();
    let seg: Vec<f64> = (0..d)
        .map(|i| {
            let (lo, hi) = (i * w / d, (i + 1) * w / d);
            values[lo..hi].iter().sum::<f64>() / (hi - lo) as f64
        })
        .collect();
    let m = seg.iter().sum::<f64>() / d as f64;
    seg.into_iter().map(|v| v - m).collect()
}
