use serde::{Deserialize, Serialize};

/// Clustering feature: member count, linear sum and sum of squared norms.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClusterFeature {
    pub count: usize,
    pub linear_sum: Vec<f64>,
    pub squared_sum: f64,
}

impl ClusterFeature {
    pub fn empty(dim: usize) -> Self {
        Self {
            count: 0,
            linear_sum: vec![0.0; dim],
            squared_sum: 0.0,
        }
    }

    pub fn from_point(point: &[f64]) -> Self {
        let mut cf = Self::empty(point.len());
        cf.add_point(point);
        cf
    }

    pub fn from_points<'a>(dim: usize, points: impl IntoIterator<Item = &'a [f64]>) -> Self {
        let mut cf = Self::empty(dim);
        for p in points {
            cf.add_point(p);
        }
        cf
    }

    pub fn dim(&self) -> usize {
        self.linear_sum.len()
    }

    pub fn add_point(&mut self, point: &[f64]) {
        debug_assert_eq!(point.len(), self.dim());
        self.count += 1;
        let mut sq = 0.0;
        for (s, x) in self.linear_sum.iter_mut().zip(point) {
            *s += x;
            sq += x * x;
        }
        self.squared_sum += sq;
    }

    pub fn merge(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.merge_in(other);
        out
    }

    pub fn merge_in(&mut self, other: &Self) {
        debug_assert_eq!(self.dim(), other.dim());
        self.count += other.count;
        for (s, x) in self.linear_sum.iter_mut().zip(&other.linear_sum) {
            *s += x;
        }
        self.squared_sum += other.squared_sum;
    }

    /// Writes `linear_sum / count` into `out`.
    pub fn centroid_into(&self, out: &mut [f64]) {
        debug_assert!(self.count > 0);
        let n = self.count as f64;
        for (c, s) in out.iter_mut().zip(&self.linear_sum) {
            *c = s / n;
        }
    }

    pub fn centroid(&self) -> Vec<f64> {
        let mut c = vec![0.0; self.dim()];
        self.centroid_into(&mut c);
        c
    }

    /// Squared distance from `point` to the centroid, without allocating.
    pub fn squared_distance_to_centroid(&self, point: &[f64]) -> f64 {
        let n = self.count as f64;
        point
            .iter()
            .zip(&self.linear_sum)
            .map(|(x, s)| {
                let d = x - s / n;
                d * d
            })
            .sum()
    }

    /// Root-mean-square distance of members from the centroid.
    pub fn radius(&self) -> f64 {
        let n = self.count as f64;
        let ls_sq: f64 = self.linear_sum.iter().map(|s| s * s).sum();
        (self.squared_sum / n - ls_sq / (n * n)).max(0.0).sqrt()
    }
}
