use super::{CandidateIndex, Cluster};

/// Candidate set of every live cluster, as in plain 1-NN clustering.
pub fn candidate_clusters_basic(clusters: &[Cluster]) -> Vec<usize> {
    (0..clusters.len()).collect()
}

#[derive(Debug, Default, Clone)]
pub struct BasicIndex;

impl CandidateIndex for BasicIndex {
    fn candidates(&mut self, _point: &[f64], clusters: &[Cluster], out: &mut Vec<usize>) {
        out.extend(0..clusters.len());
    }

    fn cluster_created(&mut self, _id: usize, _clusters: &[Cluster]) {}

    fn cluster_grew(&mut self, _id: usize, _point: &[f64], _clusters: &[Cluster]) {}
}
