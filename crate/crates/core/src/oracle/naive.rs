use super::sq_dist;
use crate::error::{Error, Result};

/// Longest series the exhaustive search accepts.
pub const NAIVE_MAX_LEN: usize = 5000;

/// Exhaustive frequent-motif search on one series.
///
/// Windows of length `w` are taken from the z-normalized series and shifted
/// to zero mean. Two windows match when they lie within 2R and some window
/// starting strictly between them lies farther than 2R from both. Motifs are
/// grown greedily from the window with the most unused matches (ties by
/// earliest start); a candidate joins when it matches every member so far.
/// Sets with more than `support` members are returned as sorted starts.
pub fn naive_frequent_motifs(values: &[f64], w: usize, radius: f64, support: usize) -> Result<Vec<Vec<usize>>> {
    let n = values.len();
    if n > NAIVE_MAX_LEN {
        return Err(Error::TooLarge { len: n, cap: NAIVE_MAX_LEN });
    }
    if w < 2 || w > n {
        return Err(Error::InvalidParams(format!("window {w} invalid for length {n}")));
    }
    let mean = values.iter().sum::<f64>() / n as f64;
    let sd = (values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n as f64).sqrt();
    if sd == 0.0 {
        return Ok(Vec::new());
    }
    let z: Vec<f64> = values.iter().map(|v| (v - mean) / sd).collect();
    let m = n - w + 1;
    let windows: Vec<Vec<f64>> = (0..m)
        .map(|t| {
            let win = &z[t..t + w];
            let mu = win.iter().sum::<f64>() / w as f64;
            win.iter().map(|v| v - mu).collect()
        })
        .collect();
    let d2 = 4.0 * radius * radius;

    let close: Vec<Vec<usize>> = (0..m)
        .map(|i| (0..m).filter(|&j| j != i && sq_dist(&windows[i], &windows[j]) <= d2).collect())
        .collect();
    let separated = |i: usize, j: usize| {
        let (a, b) = (i.min(j), i.max(j));
        (a + 1..b).any(|t| sq_dist(&windows[t], &windows[a]) > d2 && sq_dist(&windows[t], &windows[b]) > d2)
    };
    let neighbors: Vec<Vec<usize>> = (0..m)
        .map(|i| close[i].iter().copied().filter(|&j| separated(i, j)).collect())
        .collect();
    let is_neighbor = |a: usize, b: usize| neighbors[a].binary_search(&b).is_ok();

    let mut used = vec![false; m];
    let mut motifs = Vec::new();
    loop {
        let mut seed = None;
        let mut best = 0;
        for i in (0..m).filter(|&i| !used[i]) {
            let c = neighbors[i].iter().filter(|&&j| !used[j]).count();
            if seed.is_none() || c > best {
                seed = Some(i);
                best = c;
            }
        }
        let Some(seed) = seed else { break };
        if best < support {
            break;
        }
        let mut members = vec![seed];
        for &j in &neighbors[seed] {
            if !used[j] && members.iter().all(|&k| is_neighbor(j, k)) {
                members.push(j);
            }
        }
        used[seed] = true;
        if members.len() > support {
            for &k in &members {
                used[k] = true;
                for &t in &close[k] {
                    if t.abs_diff(k) < w {
                        used[t] = true;
                    }
                }
            }
            members.sort_unstable();
            motifs.push(members);
        }
    }
    Ok(motifs)
}
