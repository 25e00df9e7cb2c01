use super::GroupMotif;
use crate::distance::squared_euclidean;
use crate::params::ShiftTestParams;
use crate::preprocess::CandidateMatrix;

/// Start-time differences between members of `h1` and their nearest
/// (by distance) member of `h2` that starts within the tolerance in the same
/// series. Members of `h1` without such a partner contribute nothing.
pub fn diff_list(h1: &GroupMotif, h2: &GroupMotif, matrix: &CandidateMatrix, start_tolerance: usize) -> Vec<i64> {
    let key = |m: usize| {
        let e = &matrix.entries[m];
        (e.series, e.start as i64)
    };
    let tol = start_tolerance as i64;
    let mut diffs = Vec::new();
    let mut lo = 0;
    for &a in &h1.members {
        let (series, start) = key(a);
        while lo < h2.members.len() && key(h2.members[lo]) <= (series, start - tol) {
            lo += 1;
        }
        let point = &matrix.entries[a].reduced;
        let mut best: Option<(f64, i64)> = None;
        for &b in &h2.members[lo..] {
            let (s, t) = key(b);
            if s != series || t >= start + tol {
                break;
            }
            let d = squared_euclidean(point, &matrix.entries[b].reduced);
            if best.is_none_or(|(bd, _)| d < bd) {
                best = Some((d, t));
            }
        }
        if let Some((_, t)) = best {
            diffs.push(t - start);
        }
    }
    diffs
}

fn population_std_dev(values: &[i64]) -> f64 {
    let n = values.len() as f64;
    let mean = values.iter().sum::<i64>() as f64 / n;
    (values.iter().map(|&v| (v as f64 - mean).powi(2)).sum::<f64>() / n).sqrt()
}

/// True when `h1` (the smaller cluster) looks like a time-shifted copy of `h2`.
pub fn detect_shifted_pair(h1: &GroupMotif, h2: &GroupMotif, matrix: &CandidateMatrix, params: &ShiftTestParams) -> bool {
    let tol = params.start_tolerance.unwrap_or(matrix.d);
    let diffs = diff_list(h1, h2, matrix, tol);
    if diffs.is_empty() {
        return false;
    }
    diffs.len() as f64 * 100.0 >= params.match_percent * h1.support() as f64
        && population_std_dev(&diffs) < params.max_std_dev
}

/// Drops every cluster found to be a shifted copy of a larger one.
///
/// Pairs are visited from the largest cluster down (ties by id); a dropped
/// cluster takes no further part. Survivors keep their input order.
pub fn remove_shifted(groups: Vec<GroupMotif>, matrix: &CandidateMatrix, params: &ShiftTestParams) -> Vec<GroupMotif> {
    let mut order: Vec<usize> = (0..groups.len()).collect();
    order.sort_by(|&a, &b| {
        groups[b]
            .support()
            .cmp(&groups[a].support())
            .then(groups[a].id.cmp(&groups[b].id))
    });
    let mut alive = vec![true; groups.len()];
    for (pos, &larger) in order.iter().enumerate() {
        if !alive[larger] {
            continue;
        }
        for &smaller in &order[pos + 1..] {
            if alive[smaller] && detect_shifted_pair(&groups[smaller], &groups[larger], matrix, params) {
                alive[smaller] = false;
            }
        }
    }
    groups
        .into_iter()
        .zip(alive)
        .filter_map(|(g, keep)| keep.then_some(g))
        .collect()
}
