//! Frequent motif discovery in collections of sensor time-series.
//!
//! Subsequences are z-normalized, reduced, filtered and then grouped by
//! bounded-radius (COIN) clustering, accelerated either by a CF-tree or by
//! locality-sensitive hashing. High-support clusters are deduplicated,
//! pruned of trivial matches and split by level into the final motifs.
//!
//! ```
//! use coinmotif::{discover_motifs, PipelineParams, TimeSeries};
//!
//! let values: Vec<f64> = (0..400).map(|i| (i as f64 * 0.3).sin()).collect();
//! let series = vec![TimeSeries::new("run-1", "speed", values).unwrap()];
//! let report = discover_motifs(&series, &PipelineParams::for_window(20)).unwrap();
//! assert_eq!(report.sensor, "speed");
//! ```

pub mod catalog;
pub mod coin;
pub mod distance;
mod error;
pub mod extract;
pub mod oracle;
pub mod params;
pub mod pipeline;
pub mod preprocess;
pub mod reduce;
pub mod sax;
pub mod series;

pub use catalog::{MotifCatalog, SensorReport};
pub use coin::{coin_cluster, Cluster, ClusterFeature, Clustering, CoinConfig};
pub use error::{Error, Result};
pub use params::{PipelineParams, Strategy};
pub use pipeline::{discover_motifs, run_pipeline, Discovery};
pub use preprocess::{CandidateMatrix, Subsequence};
pub use series::{znormalize, TimeSeries, ZSeries};
