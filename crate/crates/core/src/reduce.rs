//! Piecewise aggregate approximation and level merging.

/// Half-open sample range of segment `i` when `w` samples are split into `d`
/// segments whose lengths differ by at most one.
pub fn segment_bounds(w: usize, d: usize, i: usize) -> (usize, usize) {
    (i * w / d, (i + 1) * w / d)
}

/// Mean of each of the `d` near-equal segments of `window`.
pub fn paa(window: &[f64], d: usize) -> Vec<f64> {
    let w = window.len();
    assert!(d >= 1 && d <= w, "reduced dimension {d} outside 1..={w}");
    (0..d)
        .map(|i| {
            let (lo, hi) = segment_bounds(w, d, i);
            window[lo..hi].iter().sum::<f64>() / (hi - lo) as f64
        })
        .collect()
}

/// Reduces `window` to `d` dimensions and removes its mean.
///
/// Returns the mean-shifted vector and the removed mean (the level); adding
/// the level back to every element restores the piecewise averages.
pub fn reduce_and_merge_level(window: &[f64], d: usize) -> (Vec<f64>, f64) {
    let mut reduced = paa(window, d);
    let level = reduced.iter().sum::<f64>() / d as f64;
    for v in &mut reduced {
        *v -= level;
    }
    (reduced, level)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_example() {
        assert_eq!(paa(&[1.0, 3.0, 5.0, 7.0], 2), vec![2.0, 6.0]);
        let (reduced, level) = reduce_and_merge_level(&[1.0, 3.0, 5.0, 7.0], 2);
        assert_eq!(level, 4.0);
        assert_eq!(reduced, vec![-2.0, 2.0]);
    }

    #[test]
    fn identity_on_zero_mean_full_dimension() {
        let x = [0.5, -1.5, 2.0, -1.0];
        let (reduced, level) = reduce_and_merge_level(&x, 4);
        assert_eq!(level, 0.0);
        assert_eq!(reduced, x.to_vec());
    }

    #[test]
    fn constant_window() {
        let (reduced, level) = reduce_and_merge_level(&[2.5; 4], 2);
        assert_eq!(reduced, vec![0.0, 0.0]);
        assert_eq!(level, 2.5);
    }

    #[test]
    fn uneven_segments_differ_by_at_most_one() {
        for w in 2..40 {
            for d in 1..=w {
                let lens: Vec<usize> = (0..d)
                    .map(|i| {
                        let (lo, hi) = segment_bounds(w, d, i);
                        hi - lo
                    })
                    .collect();
                assert_eq!(lens.iter().sum::<usize>(), w);
                let (mn, mx) = (lens.iter().min().unwrap(), lens.iter().max().unwrap());
                assert!(mx - mn <= 1, "w={w} d={d} {lens:?}");
            }
        }
    }
}
