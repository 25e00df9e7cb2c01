//! Post-clustering stages: support filtering, shifted-cluster removal,
//! intra-cluster trivial-match removal and level splitting.

mod levels;
mod shift;
mod trivial;

pub use levels::{dbscan_1d, split_levels, LevelStats, Motif};
pub use shift::{detect_shifted_pair, diff_list, remove_shifted};
pub use trivial::remove_trivial_within;

use crate::coin::{Cluster, ClusterFeature};
use crate::preprocess::CandidateMatrix;

/// A high-support cluster during post-processing. Members are candidate
/// matrix indices sorted by (series, start).
#[derive(Debug, Clone, PartialEq)]
pub struct GroupMotif {
    pub id: usize,
    pub members: Vec<usize>,
    pub cf: ClusterFeature,
    pub centroid: Vec<f64>,
}

fn sort_by_time(members: &mut [usize], matrix: &CandidateMatrix) {
    members.sort_by_key(|&m| (matrix.entries[m].series, matrix.entries[m].start));
}

impl GroupMotif {
    /// Keeps the cluster's final CF and centroid.
    pub fn from_cluster(cluster: &Cluster, matrix: &CandidateMatrix) -> Self {
        let mut members = cluster.members.clone();
        sort_by_time(&mut members, matrix);
        Self {
            id: cluster.id,
            members,
            cf: cluster.cf.clone(),
            centroid: cluster.centroid.clone(),
        }
    }

    /// Recomputes CF and centroid from `members`.
    pub fn from_members(id: usize, mut members: Vec<usize>, matrix: &CandidateMatrix) -> Self {
        sort_by_time(&mut members, matrix);
        let cf = ClusterFeature::from_points(matrix.d, members.iter().map(|&m| matrix.entries[m].reduced.as_slice()));
        let centroid = if cf.count > 0 { cf.centroid() } else { vec![0.0; matrix.d] };
        Self {
            id,
            members,
            cf,
            centroid,
        }
    }

    pub fn support(&self) -> usize {
        self.members.len()
    }
}

/// Clusters with strictly more than `support` members.
pub fn filter_support(clusters: &[Cluster], support: usize) -> Vec<&Cluster> {
    clusters.iter().filter(|c| c.support() > support).collect()
}
