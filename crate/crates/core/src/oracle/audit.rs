use super::sq_dist;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClusterAudit {
    pub max_pairwise: f64,
    /// Members farther than the radius from the final centroid.
    pub outlier_count: usize,
}

pub fn audit_cluster<P: AsRef<[f64]>>(members: &[P], radius: f64) -> ClusterAudit {
    let n = members.len();
    let dim = members.first().map_or(0, |m| m.as_ref().len());
    let mut centroid = vec![0.0; dim];
    for m in members {
        for (c, x) in centroid.iter_mut().zip(m.as_ref()) {
            *c += x;
        }
    }
    centroid.iter_mut().for_each(|c| *c /= n.max(1) as f64);
    let mut max_pairwise: f64 = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            max_pairwise = max_pairwise.max(sq_dist(members[i].as_ref(), members[j].as_ref()));
        }
    }
    let r2 = radius * radius;
    ClusterAudit {
        max_pairwise: max_pairwise.sqrt(),
        outlier_count: members.iter().filter(|m| sq_dist(m.as_ref(), &centroid) > r2).count(),
    }
}

/// A same-series pair of motif members breaking the motif definition.
#[derive(Debug, Clone, PartialEq)]
pub struct PairViolation {
    pub series: usize,
    pub first: usize,
    pub second: usize,
    pub distance: f64,
    /// True when the pair is within delta but no window separates it.
    pub trivial: bool,
}

/// Checks every same-series pair of members: they must lie within `delta`
/// of each other and some window starting strictly between them must lie
/// farther than `delta` from both.
///
/// `members` holds (series, start, vector); `window(series, t)` returns the
/// reduced vector of any window of the series and `None` past its end.
pub fn definition1_violations<'a, F>(
    members: &[(usize, usize, &'a [f64])],
    delta: f64,
    window: F,
) -> Vec<PairViolation>
where
    F: Fn(usize, usize) -> Option<&'a [f64]>,
{
    let d2 = delta * delta;
    let mut out = Vec::new();
    for (i, &(sa, ta, a)) in members.iter().enumerate() {
        for &(sb, tb, b) in &members[i + 1..] {
            if sa != sb {
                continue;
            }
            let (ta, tb, a, b) = if ta <= tb { (ta, tb, a, b) } else { (tb, ta, b, a) };
            let dist = sq_dist(a, b);
            let far = dist > d2;
            let separated = (ta + 1..tb)
                .map_while(|t| window(sa, t))
                .any(|x| sq_dist(x, a) > d2 && sq_dist(x, b) > d2);
            if far || !separated {
                out.push(PairViolation {
                    series: sa,
                    first: ta,
                    second: tb,
                    distance: dist.sqrt(),
                    trivial: !far,
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn audit_small() {
        let a = audit_cluster(&[vec![0.0, 0.0], vec![2.0, 0.0], vec![10.0, 0.0]], 3.0);
        assert_eq!(a.max_pairwise, 10.0);
        assert_eq!(a.outlier_count, 2);
    }

    #[test]
    fn definition_checks() {
        let windows: Vec<Vec<f64>> = vec![vec![0.0], vec![9.0], vec![0.5], vec![0.2]];
        let get = |_s: usize, t: usize| windows.get(t).map(|v| v.as_slice());
        let ok = [(0, 0, windows[0].as_slice()), (0, 2, windows[2].as_slice())];
        assert!(definition1_violations(&ok, 1.0, get).is_empty());
        let trivial = [(0, 2, windows[2].as_slice()), (0, 3, windows[3].as_slice())];
        let v = definition1_violations(&trivial, 1.0, get);
        assert_eq!(v.len(), 1);
        assert!(v[0].trivial);
        let far = [(0, 0, windows[0].as_slice()), (1, 0, windows[1].as_slice()), (0, 1, windows[1].as_slice())];
        let v = definition1_violations(&far, 1.0, get);
        assert_eq!(v.len(), 1);
        assert!(!v[0].trivial);
    }
}
