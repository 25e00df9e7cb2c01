//! Pipeline configuration and the defaults derived from the window length.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sax::SaxAlphabet;

/// How the candidate cluster set is built for each incoming subsequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// Every cluster found so far.
    Basic,
    /// The single leaf reached by greedy descent of a CF-tree.
    Birch,
    /// Clusters whose centroids share a bucket-id with the point.
    Lsh,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [Strategy::Basic, Strategy::Birch, Strategy::Lsh];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Basic => "basic",
            Strategy::Birch => "birch",
            Strategy::Lsh => "lsh",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "basic" => Ok(Strategy::Basic),
            "birch" => Ok(Strategy::Birch),
            "lsh" => Ok(Strategy::Lsh),
            other => Err(Error::InvalidParams(format!("unknown strategy `{other}`"))),
        }
    }
}

/// Gaussian-projection LSH settings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LshParams {
    /// Hash functions concatenated into one bucket-id (r).
    pub hashes_per_key: usize,
    /// Number of bucket-ids per point (b).
    pub tables: usize,
    /// Quantization width; `None` means `DEFAULT_WIDTH_FACTOR * radius`.
    pub width: Option<f64>,
}

impl LshParams {
    /// Width in radius units; chosen so that points within the radius of a
    /// centroid share a bucket-id with it at least 95% of the time with r=3, b=5.
    pub const DEFAULT_WIDTH_FACTOR: f64 = 4.0;

    pub fn resolved_width(&self, radius: f64) -> f64 {
        self.width.unwrap_or(Self::DEFAULT_WIDTH_FACTOR * radius)
    }
}

impl Default for LshParams {
    fn default() -> Self {
        Self {
            hashes_per_key: 3,
            tables: 5,
            width: None,
        }
    }
}

/// Thresholds for deciding that two clusters are shifted copies.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShiftTestParams {
    /// Start-time proximity in samples; `None` means the reduced dimension.
    pub start_tolerance: Option<usize>,
    /// Minimum share of the smaller cluster that must pair up, in percent.
    pub match_percent: f64,
    /// Largest admissible standard deviation of the start differences.
    pub max_std_dev: f64,
}

impl Default for ShiftTestParams {
    fn default() -> Self {
        Self {
            start_tolerance: None,
            match_percent: 50.0,
            max_std_dev: 2.0,
        }
    }
}

/// One-dimensional DBSCAN settings for level splitting.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevelSplitParams {
    pub eps: f64,
    pub min_pts: usize,
}

impl Default for LevelSplitParams {
    fn default() -> Self {
        Self { eps: 0.5, min_pts: 2 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PipelineParams {
    /// Window length w in samples.
    pub window: usize,
    /// Coin radius R in z-score distance units.
    pub radius: f64,
    /// Minimum support s; clusters and motifs need strictly more members.
    pub support: usize,
    /// Minimum normalized deviation f of a window.
    pub min_deviation: f64,
    /// Reduced dimension d.
    pub paa_dim: usize,
    pub sax_alphabet: usize,
    pub lsh_seed: u64,
    pub strategy: Strategy,
    /// Maximum children per CF-tree node (B).
    pub branching: usize,
    pub lsh: LshParams,
    pub shift: ShiftTestParams,
    pub levels: LevelSplitParams,
    /// When set, subsequences are clustered in a seeded random order.
    pub shuffle_seed: Option<u64>,
}

/// Radius that works for w=20, scaled with the square root of the window length.
pub fn default_radius(window: usize) -> f64 {
    (window as f64 / 20.0).sqrt()
}

/// Half the window length, capped at 10.
pub fn default_paa_dim(window: usize) -> usize {
    (window / 2).clamp(1, 10)
}

impl PipelineParams {
    pub const DEFAULT_SUPPORT: usize = 2;

    pub fn for_window(window: usize) -> Self {
        Self {
            window,
            radius: default_radius(window),
            support: Self::DEFAULT_SUPPORT,
            min_deviation: 1.0,
            paa_dim: default_paa_dim(window),
            sax_alphabet: 4,
            lsh_seed: 0,
            strategy: Strategy::Birch,
            branching: 50,
            lsh: LshParams::default(),
            shift: ShiftTestParams::default(),
            levels: LevelSplitParams::default(),
            shuffle_seed: None,
        }
    }

    /// Trivial-match threshold: two subsequences are similar within 2R.
    pub fn delta(&self) -> f64 {
        2.0 * self.radius
    }

    pub fn start_tolerance(&self) -> usize {
        self.shift.start_tolerance.unwrap_or(self.paa_dim)
    }

    pub fn lsh_width(&self) -> f64 {
        self.lsh.resolved_width(self.radius)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParams(msg));
        if self.window < 2 {
            return bad(format!("window {} must be at least 2", self.window));
        }
        if self.paa_dim < 1 || self.paa_dim > self.window {
            return bad(format!("reduced dimension {} outside 1..={}", self.paa_dim, self.window));
        }
        if !(self.radius > 0.0 && self.radius.is_finite()) {
            return bad(format!("radius {} must be positive", self.radius));
        }
        if self.support < 1 {
            return bad("support must be at least 1".into());
        }
        if !(self.min_deviation >= 0.0) {
            return bad(format!("deviation threshold {} must be non-negative", self.min_deviation));
        }
        if !(2..=SaxAlphabet::MAX_SIZE).contains(&self.sax_alphabet) {
            return bad(format!("SAX alphabet {} outside 2..=26", self.sax_alphabet));
        }
        if self.branching < 2 {
            return bad(format!("branching factor {} must be at least 2", self.branching));
        }
        if self.lsh.hashes_per_key < 1 || self.lsh.tables < 1 {
            return bad("LSH needs at least one hash per key and one table".into());
        }
        if let Some(w) = self.lsh.width {
            if !(w > 0.0 && w.is_finite()) {
                return bad(format!("LSH width {w} must be positive"));
            }
        }
        if self.shift.start_tolerance == Some(0) {
            return bad("shift start tolerance must be at least 1".into());
        }
        if !(self.shift.match_percent > 0.0 && self.shift.match_percent <= 100.0) {
            return bad(format!("match percentage {} outside (0, 100]", self.shift.match_percent));
        }
        if !(self.shift.max_std_dev > 0.0) {
            return bad("shift std-dev threshold must be positive".into());
        }
        if !(self.levels.eps > 0.0) || self.levels.min_pts < 1 {
            return bad("level split needs eps > 0 and min_pts >= 1".into());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_defaults() {
        let p = PipelineParams::for_window(20);
        assert_eq!(p.radius, 1.0);
        assert_eq!(p.paa_dim, 10);
        assert_eq!(p.delta(), 2.0);
        assert_eq!(p.start_tolerance(), 10);
        assert_eq!(p.lsh_width(), 4.0);
        p.validate().unwrap();

        let p = PipelineParams::for_window(80);
        assert!((p.radius - 2.0).abs() < 1e-12);
        assert_eq!(p.paa_dim, 10);
        assert_eq!(PipelineParams::for_window(6).paa_dim, 3);
        assert_eq!(PipelineParams::for_window(2).paa_dim, 1);
    }

    #[test]
    fn rejects_bad_values() {
        let base = PipelineParams::for_window(20);
        let cases: Vec<Box<dyn Fn(&mut PipelineParams)>> = vec![
            Box::new(|p| p.window = 1),
            Box::new(|p| p.paa_dim = 21),
            Box::new(|p| p.paa_dim = 0),
            Box::new(|p| p.radius = 0.0),
            Box::new(|p| p.support = 0),
            Box::new(|p| p.min_deviation = -1.0),
            Box::new(|p| p.sax_alphabet = 1),
            Box::new(|p| p.shift.match_percent = 0.0),
        ];
        for f in cases {
            let mut p = base.clone();
            f(&mut p);
            assert!(p.validate().is_err(), "{p:?}");
        }
    }

    #[test]
    fn strategy_names_round_trip() {
        for s in Strategy::ALL {
            assert_eq!(s.name().parse::<Strategy>().unwrap(), s);
        }
        assert!("kmeans".parse::<Strategy>().is_err());
    }
}
