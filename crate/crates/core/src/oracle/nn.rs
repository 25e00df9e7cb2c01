use super::sq_dist;
use crate::coin::Insertion;

struct RefCluster {
    sum: Vec<f64>,
    count: usize,
    centroid: Vec<f64>,
    members: Vec<usize>,
}

impl RefCluster {
    fn new(p: &[f64], member: usize) -> Self {
        Self {
            sum: p.to_vec(),
            count: 1,
            centroid: p.to_vec(),
            members: vec![member],
        }
    }

    fn add(&mut self, p: &[f64], member: usize) {
        self.count += 1;
        for j in 0..p.len() {
            self.sum[j] += p[j];
            self.centroid[j] = self.sum[j] / self.count as f64;
        }
        self.members.push(member);
    }
}

/// Exhaustive threshold nearest-centroid clustering in input order.
/// Returns the member lists of the clusters in creation order.
pub fn oracle_threshold_nn<P: AsRef<[f64]>>(points: &[P], radius: f64) -> Vec<Vec<usize>> {
    let order: Vec<usize> = (0..points.len()).collect();
    oracle_threshold_nn_ordered(points, &order, radius)
}

/// As [`oracle_threshold_nn`], presenting points in `order`.
pub fn oracle_threshold_nn_ordered<P: AsRef<[f64]>>(points: &[P], order: &[usize], radius: f64) -> Vec<Vec<usize>> {
    let r2 = radius * radius;
    let mut clusters: Vec<RefCluster> = Vec::new();
    for &i in order {
        let p = points[i].as_ref();
        let mut best: Option<usize> = None;
        let mut best_d = f64::INFINITY;
        for (c, cl) in clusters.iter().enumerate() {
            let d = sq_dist(p, &cl.centroid);
            if d <= r2 && d < best_d {
                best = Some(c);
                best_d = d;
            }
        }
        match best {
            Some(c) => clusters[c].add(p, i),
            None => clusters.push(RefCluster::new(p, i)),
        }
    }
    clusters.into_iter().map(|c| c.members).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReplayViolation {
    /// Position in the insertion log.
    pub step: usize,
    pub point: usize,
    pub cluster: usize,
    pub distance: f64,
}

/// Replays an insertion log and reports every assignment whose point lay
/// farther than `radius` from the cluster centroid at the time.
pub fn replay_insertions<P: AsRef<[f64]>>(points: &[P], log: &[Insertion], radius: f64) -> Vec<ReplayViolation> {
    let mut clusters: Vec<Option<RefCluster>> = Vec::new();
    let mut violations = Vec::new();
    for (step, ins) in log.iter().enumerate() {
        let p = points[ins.point].as_ref();
        if clusters.len() <= ins.cluster {
            clusters.resize_with(ins.cluster + 1, || None);
        }
        match &mut clusters[ins.cluster] {
            Some(c) => {
                let d = sq_dist(p, &c.centroid).sqrt();
                if d > radius || ins.distance_sq.is_none() {
                    violations.push(ReplayViolation {
                        step,
                        point: ins.point,
                        cluster: ins.cluster,
                        distance: d,
                    });
                }
                c.add(p, ins.point);
            }
            slot @ None => *slot = Some(RefCluster::new(p, ins.point)),
        }
    }
    violations
}
