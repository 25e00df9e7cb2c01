use super::GroupMotif;
use crate::distance::squared_euclidean;
use crate::preprocess::{CandidateMatrix, SubsequenceMatrix};

/// Whether some window of `full` starting strictly between `from` and `to`
/// lies farther than delta from `a`, from `b` and from `centroid`.
fn has_separating_window(
    full: &SubsequenceMatrix,
    series: usize,
    from: usize,
    to: usize,
    a: &[f64],
    b: &[f64],
    centroid: &[f64],
    delta_sq: f64,
) -> bool {
    (from + 1..to.min(full.count(series))).any(|t| {
        let x = full.vector(series, t);
        squared_euclidean(x, a) > delta_sq && squared_euclidean(x, b) > delta_sq && squared_euclidean(x, centroid) > delta_sq
    })
}

/// Removes members that only trivially match the previous kept member of
/// the same series. CF and centroid are recomputed from the survivors.
pub fn remove_trivial_within(
    group: &GroupMotif,
    matrix: &CandidateMatrix,
    full: &SubsequenceMatrix,
    delta: f64,
) -> GroupMotif {
    let delta_sq = delta * delta;
    let mut kept = Vec::with_capacity(group.members.len());
    let mut anchor: Option<usize> = None;
    for &m in &group.members {
        let q2 = &matrix.entries[m];
        let retain = match anchor.map(|a| &matrix.entries[a]) {
            Some(q1) if q1.series == q2.series => has_separating_window(
                full,
                q2.series,
                q1.start,
                q2.start,
                &q1.reduced,
                &q2.reduced,
                &group.centroid,
                delta_sq,
            ),
            _ => true,
        };
        if retain {
            kept.push(m);
            anchor = Some(m);
        }
    }
    GroupMotif::from_members(group.id, kept, matrix)
}
