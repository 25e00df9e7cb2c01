//! Quantized Gaussian-projection LSH over cluster centroids.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::{CandidateIndex, Cluster};

/// `b` tables, each keyed by a bucket-id built from `r` hashes
/// `floor((a . x + o) / W)` with Gaussian `a` and `o` uniform in `[0, W)`.
#[derive(Debug, Clone)]
pub struct LshIndex {
    seed: u64,
    dim: usize,
    hashes_per_key: usize,
    width: f64,
    planes: Vec<f64>,
    offsets: Vec<f64>,
    tables: Vec<HashMap<u64, Vec<usize>>>,
    /// Current bucket-ids of each registered cluster, `tables` per cluster.
    registered: Vec<u64>,
    seen: Vec<u32>,
    epoch: u32,
    scratch: Vec<u64>,
}

impl LshIndex {
    pub fn new(dim: usize, hashes_per_key: usize, tables: usize, width: f64, seed: u64) -> Self {
        assert!(dim >= 1 && hashes_per_key >= 1 && tables >= 1 && width > 0.0);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n_hashes = tables * hashes_per_key;
        let planes = (0..n_hashes * dim).map(|_| rng.sample(StandardNormal)).collect();
        let offsets = (0..n_hashes).map(|_| rng.random_range(0.0..width)).collect();
        Self {
            seed,
            dim,
            hashes_per_key,
            width,
            planes,
            offsets,
            tables: vec![HashMap::new(); tables],
            registered: Vec::new(),
            seen: Vec::new(),
            epoch: 0,
            scratch: vec![0; tables],
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    pub fn table_count(&self) -> usize {
        self.tables.len()
    }

    fn bucket_ids_into(&self, point: &[f64], out: &mut [u64]) {
        debug_assert_eq!(point.len(), self.dim);
        for (t, slot) in out.iter_mut().enumerate() {
            let mut key: u64 = 0xcbf2_9ce4_8422_2325;
            for h in 0..self.hashes_per_key {
                let k = t * self.hashes_per_key + h;
                let plane = &self.planes[k * self.dim..(k + 1) * self.dim];
                let proj: f64 = plane.iter().zip(point).map(|(a, x)| a * x).sum();
                let q = ((proj + self.offsets[k]) / self.width).floor() as i64;
                key = (key ^ q as u64).wrapping_mul(0x0000_0100_0000_01b3);
            }
            *slot = key;
        }
    }

    /// The `b` bucket-ids of `point`, one per table.
    pub fn bucket_ids(&self, point: &[f64]) -> Vec<u64> {
        let mut out = vec![0; self.tables.len()];
        self.bucket_ids_into(point, &mut out);
        out
    }

    /// Registers cluster `id` under the bucket-ids of `centroid`, or moves
    /// it if it is already registered elsewhere.
    pub fn register(&mut self, id: usize, centroid: &[f64]) {
        let b = self.tables.len();
        let mut fresh = std::mem::take(&mut self.scratch);
        self.bucket_ids_into(centroid, &mut fresh);
        let known = self.registered.len() >= (id + 1) * b;
        if !known {
            self.registered.resize((id + 1) * b, 0);
            self.seen.resize(id + 1, 0);
        }
        for t in 0..b {
            let new_key = fresh[t];
            let slot = id * b + t;
            if known {
                let old_key = self.registered[slot];
                if old_key == new_key {
                    continue;
                }
                if let Some(bucket) = self.tables[t].get_mut(&old_key) {
                    if let Some(pos) = bucket.iter().position(|&c| c == id) {
                        bucket.swap_remove(pos);
                    }
                    if bucket.is_empty() {
                        self.tables[t].remove(&old_key);
                    }
                }
            }
            self.tables[t].entry(new_key).or_default().push(id);
            self.registered[slot] = new_key;
        }
        self.scratch = fresh;
    }

    /// Clusters sharing at least one bucket-id with `point`, without duplicates.
    pub fn candidates_into(&mut self, point: &[f64], out: &mut Vec<usize>) {
        let mut keys = std::mem::take(&mut self.scratch);
        self.bucket_ids_into(point, &mut keys);
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.seen.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
        for (t, key) in keys.iter().enumerate() {
            if let Some(bucket) = self.tables[t].get(key) {
                for &c in bucket {
                    if self.seen[c] != self.epoch {
                        self.seen[c] = self.epoch;
                        out.push(c);
                    }
                }
            }
        }
        self.scratch = keys;
    }

    pub fn candidates(&mut self, point: &[f64]) -> Vec<usize> {
        let mut out = Vec::new();
        self.candidates_into(point, &mut out);
        out.sort_unstable();
        out
    }
}

impl CandidateIndex for LshIndex {
    fn candidates(&mut self, point: &[f64], _clusters: &[Cluster], out: &mut Vec<usize>) {
        self.candidates_into(point, out);
    }

    fn cluster_created(&mut self, id: usize, clusters: &[Cluster]) {
        self.register(id, &clusters[id].centroid);
    }

    fn cluster_grew(&mut self, id: usize, _point: &[f64], clusters: &[Cluster]) {
        self.register(id, &clusters[id].centroid);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_under_seed() {
        let a = LshIndex::new(4, 3, 5, 2.0, 7);
        let b = LshIndex::new(4, 3, 5, 2.0, 7);
        let p = [0.3, -1.2, 0.8, 2.0];
        assert_eq!(a.bucket_ids(&p), b.bucket_ids(&p));
        assert_eq!(a.bucket_ids(&p).len(), 5);
        let c = LshIndex::new(4, 3, 5, 2.0, 8);
        assert_ne!(a.bucket_ids(&p), c.bucket_ids(&p));
    }

    #[test]
    fn identical_point_collides_everywhere() {
        let mut idx = LshIndex::new(3, 3, 5, 1.0, 1);
        idx.register(0, &[1.0, 2.0, 3.0]);
        idx.register(1, &[-40.0, 12.0, 3.0]);
        assert_eq!(idx.candidates(&[1.0, 2.0, 3.0]), vec![0]);
    }

    #[test]
    fn empty_index_has_no_candidates() {
        let mut idx = LshIndex::new(3, 3, 5, 1.0, 1);
        assert!(idx.candidates(&[0.0, 0.0, 0.0]).is_empty());
    }

    #[test]
    fn re_registration_moves_buckets() {
        let mut idx = LshIndex::new(2, 2, 4, 0.5, 3);
        idx.register(0, &[0.0, 0.0]);
        idx.register(0, &[50.0, -50.0]);
        assert!(idx.candidates(&[0.0, 0.0]).is_empty());
        assert_eq!(idx.candidates(&[50.0, -50.0]), vec![0]);
        let total: usize = idx.tables.iter().flat_map(|t| t.values()).map(Vec::len).sum();
        assert_eq!(total, 4);
    }
}
