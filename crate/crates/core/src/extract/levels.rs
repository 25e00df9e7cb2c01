use serde::{Deserialize, Serialize};

use super::GroupMotif;
use crate::catalog::sig9;
use crate::coin::ClusterFeature;
use crate::params::LevelSplitParams;
use crate::preprocess::CandidateMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LevelStats {
    #[serde(with = "sig9")]
    pub mean: f64,
    #[serde(with = "sig9")]
    pub min: f64,
    #[serde(with = "sig9")]
    pub max: f64,
}

impl LevelStats {
    pub fn of(levels: impl IntoIterator<Item = f64>) -> Self {
        let (mut n, mut sum, mut min, mut max) = (0usize, 0.0, f64::INFINITY, f64::NEG_INFINITY);
        for l in levels {
            n += 1;
            sum += l;
            min = min.min(l);
            max = max.max(l);
        }
        Self {
            mean: sum / n as f64,
            min,
            max,
        }
    }
}

/// A group-motif restricted to one level band.
#[derive(Debug, Clone, PartialEq)]
pub struct Motif {
    /// Id of the group-motif it was split from.
    pub group: usize,
    /// Candidate matrix indices sorted by (series, start).
    pub members: Vec<usize>,
    pub centroid: Vec<f64>,
    pub level: LevelStats,
}

impl Motif {
    pub fn support(&self) -> usize {
        self.members.len()
    }
}

/// DBSCAN on scalars. Returns a cluster label per value (`None` for noise);
/// labels are numbered in ascending value order. A value's neighborhood
/// includes itself, and a border value reachable from two clusters joins
/// the lower one.
pub fn dbscan_1d(values: &[f64], eps: f64, min_pts: usize) -> Vec<Option<usize>> {
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]).then(a.cmp(&b)));
    let sorted: Vec<f64> = order.iter().map(|&i| values[i]).collect();

    let mut core = vec![false; n];
    let (mut lo, mut hi) = (0, 0);
    for k in 0..n {
        while sorted[k] - sorted[lo] > eps {
            lo += 1;
        }
        while hi + 1 < n && sorted[hi + 1] - sorted[k] <= eps {
            hi += 1;
        }
        core[k] = hi + 1 - lo >= min_pts;
    }

    let mut labels = vec![None; n];
    let mut next = 0;
    let mut last_core: Option<usize> = None;
    for k in 0..n {
        if !core[k] {
            continue;
        }
        let label = match last_core {
            Some(p) if sorted[k] - sorted[p] <= eps => labels[p].unwrap(),
            _ => {
                next += 1;
                next - 1
            }
        };
        labels[k] = Some(label);
        last_core = Some(k);
    }

    let mut prev_core = vec![None; n];
    let mut seen = None;
    for k in 0..n {
        if core[k] {
            seen = Some(k);
        }
        prev_core[k] = seen;
    }
    let mut seen = None;
    for k in (0..n).rev() {
        if core[k] {
            seen = Some(k);
            continue;
        }
        let left = prev_core[k].filter(|&p| sorted[k] - sorted[p] <= eps);
        let right = seen.filter(|&p: &usize| sorted[p] - sorted[k] <= eps);
        labels[k] = left.or(right).and_then(|p| labels[p]);
    }

    let mut out = vec![None; n];
    for (k, &i) in order.iter().enumerate() {
        out[i] = labels[k];
    }
    out
}

/// Splits a group-motif by the levels of its members and keeps the bands
/// with more than `support` members.
pub fn split_levels(
    group: &GroupMotif,
    matrix: &CandidateMatrix,
    params: &LevelSplitParams,
    support: usize,
) -> Vec<Motif> {
    let levels: Vec<f64> = group.members.iter().map(|&m| matrix.entries[m].level).collect();
    let labels = dbscan_1d(&levels, params.eps, params.min_pts);
    let bands = labels.iter().flatten().max().map_or(0, |m| m + 1);
    let mut grouped: Vec<Vec<usize>> = vec![Vec::new(); bands];
    for (&m, label) in group.members.iter().zip(&labels) {
        if let Some(l) = label {
            grouped[*l].push(m);
        }
    }
    grouped
        .into_iter()
        .filter(|members| members.len() > support)
        .map(|members| {
            let cf = ClusterFeature::from_points(matrix.d, members.iter().map(|&m| matrix.entries[m].reduced.as_slice()));
            Motif {
                group: group.id,
                centroid: cf.centroid(),
                level: LevelStats::of(members.iter().map(|&m| matrix.entries[m].level)),
                members,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extract::testing::matrix;

    #[test]
    fn two_bands() {
        let labels = dbscan_1d(&[0.10, 5.00, 0.12, 5.10], 0.5, 2);
        assert_eq!(labels, vec![Some(0), Some(1), Some(0), Some(1)]);
    }

    #[test]
    fn isolated_values_are_noise() {
        assert_eq!(dbscan_1d(&[0.0, 1.0, 2.0], 0.5, 2), vec![None; 3]);
    }

    #[test]
    fn equal_values_form_one_band() {
        assert_eq!(dbscan_1d(&[3.0; 5], 0.5, 2), vec![Some(0); 5]);
    }

    #[test]
    fn chained_core_points_connect() {
        // Gaps of 0.4 chain into one band; 0.0..1.2 is one cluster with min_pts 2.
        assert_eq!(dbscan_1d(&[0.0, 0.4, 0.8, 1.2], 0.5, 2), vec![Some(0); 4]);
        // 0.7 is a border point reachable from both bands; it joins the lower.
        let l = dbscan_1d(&[0.0, 0.1, 0.2, 0.3, 0.7, 1.1, 1.2, 1.3, 1.4], 0.41, 4);
        assert_eq!(l[3], Some(0));
        assert_eq!(l[4], Some(0));
        assert_eq!(l[5], Some(1));
    }

    #[test]
    fn split_hand_example() {
        let mut m = matrix(&(0..4).map(|i| (0, i * 100, vec![0.0])).collect::<Vec<_>>());
        for (e, l) in m.entries.iter_mut().zip([0.10, 0.12, 5.00, 5.10]) {
            e.level = l;
        }
        let g = GroupMotif::from_members(7, vec![0, 1, 2, 3], &m);
        let motifs = split_levels(&g, &m, &LevelSplitParams { eps: 0.5, min_pts: 2 }, 1);
        assert_eq!(motifs.len(), 2);
        assert_eq!(motifs[0].members, vec![0, 1]);
        assert_eq!(motifs[1].members, vec![2, 3]);
        assert!((motifs[0].level.mean - 0.11).abs() < 1e-12);
        assert_eq!(motifs[1].level.min, 5.0);
        assert_eq!(motifs[1].group, 7);
        assert!(split_levels(&g, &m, &LevelSplitParams { eps: 0.5, min_pts: 2 }, 2).is_empty());
    }
}
