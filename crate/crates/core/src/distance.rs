//! Euclidean distances on reduced vectors.

#[inline]
pub fn squared_euclidean(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = 0.0;
    for (x, y) in a.iter().zip(b) {
        let d = x - y;
        acc += d * d;
    }
    acc
}

/// Squared distance, or `None` as soon as the running sum exceeds `bound`.
///
/// Partial sums never decrease, so any pair with a full sum `<= bound` is
/// returned with exactly the value [`squared_euclidean`] computes.
#[inline]
pub fn squared_euclidean_bounded(a: &[f64], b: &[f64], bound: f64) -> Option<f64> {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = 0.0;
    for (x, y) in a.iter().zip(b) {
        let d = x - y;
        acc += d * d;
        if acc > bound {
            return None;
        }
    }
    Some(acc)
}

#[inline]
pub fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    squared_euclidean(a, b).sqrt()
}
