//! Bounded-radius (COIN) clustering.
//!
//! Each point joins the nearest candidate cluster whose centroid lies
//! within the radius, otherwise it seeds a new cluster. Centroids move as
//! members arrive; outliers are not re-clustered. The candidate set comes
//! from a pluggable [`CandidateIndex`].

mod basic;
mod birch;
mod cf;
mod lsh;

pub use basic::{candidate_clusters_basic, BasicIndex};
pub use birch::CfTree;
pub use cf::ClusterFeature;
pub use lsh::LshIndex;

use crate::distance::{squared_euclidean, squared_euclidean_bounded};
use crate::error::{Error, Result};
use crate::params::{LshParams, PipelineParams, Strategy};

#[derive(Debug, Clone, PartialEq)]
pub struct Cluster {
    pub id: usize,
    pub cf: ClusterFeature,
    /// Point indices in insertion order.
    pub members: Vec<usize>,
    /// Cached `cf.linear_sum / cf.count`.
    pub centroid: Vec<f64>,
}

impl Cluster {
    pub fn new(id: usize, member: usize, point: &[f64]) -> Self {
        Self {
            id,
            cf: ClusterFeature::from_point(point),
            members: vec![member],
            centroid: point.to_vec(),
        }
    }

    pub fn support(&self) -> usize {
        self.members.len()
    }

    /// Adds `point` as a member. The point must lie within `radius` of the
    /// current centroid; returns its squared distance to that centroid.
    pub fn insert(&mut self, member: usize, point: &[f64], radius: f64) -> Result<f64> {
        let distance_sq = squared_euclidean(point, &self.centroid);
        if distance_sq > radius * radius {
            return Err(Error::RadiusViolation {
                cluster: self.id,
                distance_sq,
                radius,
            });
        }
        self.cf.add_point(point);
        self.cf.centroid_into(&mut self.centroid);
        self.members.push(member);
        Ok(distance_sq)
    }
}

/// Source of candidate clusters for an incoming point.
pub trait CandidateIndex {
    /// Appends candidate cluster ids for `point` to `out`.
    fn candidates(&mut self, point: &[f64], clusters: &[Cluster], out: &mut Vec<usize>);
    /// Called after cluster `id` has been pushed onto `clusters`.
    fn cluster_created(&mut self, id: usize, clusters: &[Cluster]);
    /// Called after `point` joined cluster `id`.
    fn cluster_grew(&mut self, id: usize, point: &[f64], clusters: &[Cluster]);
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoinConfig {
    pub radius: f64,
    pub strategy: Strategy,
    pub branching: usize,
    pub lsh: LshParams,
    pub seed: u64,
}

impl CoinConfig {
    pub fn new(radius: f64, strategy: Strategy) -> Self {
        Self {
            radius,
            strategy,
            branching: 50,
            lsh: LshParams::default(),
            seed: 0,
        }
    }

    pub fn from_params(params: &PipelineParams) -> Self {
        Self {
            radius: params.radius,
            strategy: params.strategy,
            branching: params.branching,
            lsh: params.lsh.clone(),
            seed: params.lsh_seed,
        }
    }
}

/// One step of the clustering log.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Insertion {
    pub point: usize,
    pub cluster: usize,
    /// Squared distance to the centroid at insertion time; `None` when the
    /// point seeded the cluster.
    pub distance_sq: Option<f64>,
}

#[derive(Debug, Clone, Default)]
pub struct Clustering {
    /// Clusters in creation order; `clusters[i].id == i`.
    pub clusters: Vec<Cluster>,
    pub log: Vec<Insertion>,
}

impl Clustering {
    /// Members of each cluster, in creation order.
    pub fn memberships(&self) -> Vec<Vec<usize>> {
        self.clusters.iter().map(|c| c.members.clone()).collect()
    }
}

/// Clusters `points` in index order.
pub fn coin_cluster<P: AsRef<[f64]>>(points: &[P], config: &CoinConfig) -> Result<Clustering> {
    let order: Vec<usize> = (0..points.len()).collect();
    coin_cluster_ordered(points, &order, config)
}

/// Clusters `points` visiting them in `order`. Members refer to indices of `points`.
pub fn coin_cluster_ordered<P: AsRef<[f64]>>(
    points: &[P],
    order: &[usize],
    config: &CoinConfig,
) -> Result<Clustering> {
    if !(config.radius > 0.0) {
        return Err(Error::InvalidParams(format!("radius {} must be positive", config.radius)));
    }
    let Some(first) = points.first() else {
        return Ok(Clustering::default());
    };
    let dim = first.as_ref().len();
    if dim == 0 || points.iter().any(|p| p.as_ref().len() != dim) {
        return Err(Error::InvalidParams("points must share a non-zero dimension".into()));
    }
    let mut index: Box<dyn CandidateIndex> = match config.strategy {
        Strategy::Basic => Box::new(BasicIndex),
        Strategy::Birch => Box::new(CfTree::new(dim, config.branching)),
        Strategy::Lsh => Box::new(LshIndex::new(
            dim,
            config.lsh.hashes_per_key,
            config.lsh.tables,
            config.lsh.resolved_width(config.radius),
            config.seed,
        )),
    };

    let radius_sq = config.radius * config.radius;
    let mut clusters: Vec<Cluster> = Vec::new();
    let mut log = Vec::with_capacity(order.len());
    let mut candidates = Vec::new();
    for &i in order {
        let point = points[i].as_ref();
        candidates.clear();
        index.candidates(point, &clusters, &mut candidates);

        // Nearest centroid within the radius; ties go to the lowest id.
        let mut best: Option<(usize, f64)> = None;
        let mut bound = radius_sq;
        for &c in &candidates {
            if let Some(d) = squared_euclidean_bounded(point, &clusters[c].centroid, bound) {
                let better = match best {
                    None => true,
                    Some((b, bd)) => d < bd || (d == bd && c < b),
                };
                if better {
                    best = Some((c, d));
                    bound = d;
                }
            }
        }

        match best {
            Some((c, _)) => {
                let d = clusters[c].insert(i, point, config.radius)?;
                index.cluster_grew(c, point, &clusters);
                log.push(Insertion {
                    point: i,
                    cluster: c,
                    distance_sq: Some(d),
                });
            }
            None => {
                let id = clusters.len();
                clusters.push(Cluster::new(id, i, point));
                index.cluster_created(id, &clusters);
                log.push(Insertion {
                    point: i,
                    cluster: id,
                    distance_sq: None,
                });
            }
        }
    }
    Ok(Clustering { clusters, log })
}
