//! Serializable motif catalog.
//!
//! Field order in the structs is the canonical key order of the JSON output.
//! Floats in motif records are rounded to 9 significant digits so that the
//! catalog reads back and re-serializes to identical bytes.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::extract::LevelStats;
use crate::params::PipelineParams;

pub const FORMAT: &str = "coinmotif-catalog/1";

/// Rounds to 9 significant digits. Idempotent.
pub fn round_sig9(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.8e}").parse().unwrap_or(x)
}

/// `#[serde(with = "sig9")]` for `f64` fields.
pub mod sig9 {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(super::round_sig9(*x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        f64::deserialize(d)
    }
}

/// `#[serde(with = "sig9_vec")]` for `Vec<f64>` fields.
pub mod sig9_vec {
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(xs: &[f64], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for x in xs {
            seq.serialize_element(&super::round_sig9(*x))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<f64>, D::Error> {
        Vec::<f64>::deserialize(d)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MotifCatalog {
    pub format: String,
    pub params: PipelineParams,
    pub sensors: Vec<SensorReport>,
}

impl MotifCatalog {
    pub fn new(params: PipelineParams, sensors: Vec<SensorReport>) -> Self {
        Self {
            format: FORMAT.to_string(),
            params,
            sensors,
        }
    }

    /// Copy with all timing fields zeroed, for comparing runs.
    pub fn without_timing(&self) -> Self {
        let mut c = self.clone();
        for s in &mut c.sensors {
            s.timing_ms = StageTiming::default();
        }
        c
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportStatus {
    Ok,
    Failed,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SensorReport {
    pub sensor: String,
    pub status: ReportStatus,
    pub error: Option<String>,
    /// Series skipped during preprocessing.
    pub warnings: Vec<String>,
    pub stages: StageCounts,
    pub motifs: Vec<MotifRecord>,
    pub timing_ms: StageTiming,
}

impl SensorReport {
    pub fn failed(sensor: impl Into<String>, error: impl fmt::Display) -> Self {
        Self {
            sensor: sensor.into(),
            status: ReportStatus::Failed,
            error: Some(error.to_string()),
            warnings: Vec::new(),
            stages: StageCounts::default(),
            motifs: Vec::new(),
            timing_ms: StageTiming::default(),
        }
    }
}

/// Clusters and subsequences surviving a post-clustering stage.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageSize {
    pub clusters: usize,
    pub subsequences: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageCounts {
    pub series_total: usize,
    pub series_used: usize,
    pub subsequences: usize,
    pub after_deviation_filter: usize,
    pub candidates: usize,
    pub clusters: usize,
    pub high_support: StageSize,
    pub unshifted: StageSize,
    pub trivial_removed: StageSize,
    pub unshifted_rerun: StageSize,
    /// `clusters` here counts motifs, which may exceed the group-motifs they
    /// were split from.
    pub level_split: StageSize,
}

impl StageCounts {
    /// Subsequence counts never grow from stage to stage, nor do cluster
    /// counts before level splitting.
    pub fn is_monotone(&self) -> bool {
        let pre = [self.subsequences, self.after_deviation_filter, self.candidates];
        let post = [
            self.high_support,
            self.unshifted,
            self.trivial_removed,
            self.unshifted_rerun,
            self.level_split,
        ];
        pre.windows(2).all(|p| p[0] >= p[1])
            && self.candidates >= self.high_support.subsequences
            && self.clusters >= self.high_support.clusters
            && post.windows(2).all(|p| p[0].subsequences >= p[1].subsequences)
            && post[..4].windows(2).all(|p| p[0].clusters >= p[1].clusters)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct StageTiming {
    #[serde(with = "sig9")]
    pub preprocess: f64,
    #[serde(with = "sig9")]
    pub cluster: f64,
    #[serde(with = "sig9")]
    pub extract: f64,
    #[serde(with = "sig9")]
    pub total: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MotifRecord {
    pub id: usize,
    pub group_motif: usize,
    pub support: usize,
    #[serde(with = "sig9_vec")]
    pub centroid: Vec<f64>,
    pub level: LevelStats,
    pub members: Vec<MemberRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MemberRecord {
    pub run: String,
    pub start: usize,
    #[serde(with = "sig9")]
    pub level: f64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rounding_examples() {
        assert_eq!(round_sig9(1.0 / 3.0), 0.333333333);
        assert_eq!(round_sig9(123456789012.0), 123456789000.0);
        assert_eq!(round_sig9(0.0), 0.0);
        assert_eq!(round_sig9(-2.5), -2.5);
    }

    proptest! {
        #[test]
        fn rounding_is_idempotent(x in -1e12f64..1e12) {
            let r = round_sig9(x);
            prop_assert_eq!(round_sig9(r), r);
            prop_assert!((r - x).abs() <= x.abs() * 1e-8);
        }
    }

    #[test]
    fn record_round_trip() {
        let rec = MotifRecord {
            id: 0,
            group_motif: 4,
            support: 1,
            centroid: vec![0.1 + 0.2, -1.0 / 7.0],
            level: LevelStats { mean: 2.0 / 3.0, min: 0.5, max: 0.75 },
            members: vec![MemberRecord { run: "r".into(), start: 3, level: 1.0 / 9.0 }],
        };
        let a = serde_json::to_string(&rec).unwrap();
        let back: MotifRecord = serde_json::from_str(&a).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), a);
        assert!(a.contains("0.3,") && a.contains("-0.142857143"));
    }
}
