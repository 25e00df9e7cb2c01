//! Raw and z-normalized series, sliding windows and the deviation filter.

use crate::error::{Error, Result};

/// One run of one sensor, sampled at a uniform interval.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    pub id: String,
    pub sensor: String,
    pub values: Vec<f64>,
}

impl TimeSeries {
    pub fn new(id: impl Into<String>, sensor: impl Into<String>, values: Vec<f64>) -> Result<Self> {
        let id = id.into();
        if values.is_empty() {
            return Err(Error::EmptySeries(id));
        }
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { series: id, index });
        }
        Ok(Self {
            id,
            sensor: sensor.into(),
            values,
        })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// A series rescaled to zero mean and unit population variance.
///
/// `mean` and `std_dev` are the statistics of the source, kept so that
/// z-scores can be mapped back to sensor units.
#[derive(Debug, Clone, PartialEq)]
pub struct ZSeries {
    pub source: String,
    pub zvalues: Vec<f64>,
    pub mean: f64,
    pub std_dev: f64,
}

impl ZSeries {
    pub fn len(&self) -> usize {
        self.zvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zvalues.is_empty()
    }

    /// Maps a z-score back to the units of the source series.
    pub fn denormalize(&self, z: f64) -> f64 {
        z * self.std_dev + self.mean
    }
}

pub fn znormalize(series: &TimeSeries) -> Result<ZSeries> {
    if series.values.is_empty() {
        return Err(Error::EmptySeries(series.id.clone()));
    }
    let n = series.values.len() as f64;
    let mean = series.values.iter().sum::<f64>() / n;
    let var = series.values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
    if !(var > 0.0) {
        return Err(Error::ZeroVariance(series.id.clone()));
    }
    let std_dev = var.sqrt();
    Ok(ZSeries {
        source: series.id.clone(),
        zvalues: series.values.iter().map(|v| (v - mean) / std_dev).collect(),
        mean,
        std_dev,
    })
}

/// A length-`w` slice of a z-normalized series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RawWindow<'a> {
    pub start: usize,
    pub values: &'a [f64],
}

/// All `n - w + 1` sliding windows of `z`, in ascending start order.
pub fn generate_subsequences(z: &ZSeries, w: usize) -> Result<Vec<RawWindow<'_>>> {
    if w < 2 {
        return Err(Error::InvalidParams(format!("window length {w} must be at least 2")));
    }
    if w > z.len() {
        return Err(Error::WindowTooLong {
            series: z.source.clone(),
            len: z.len(),
            window: w,
        });
    }
    Ok(z.zvalues
        .windows(w)
        .enumerate()
        .map(|(start, values)| RawWindow { start, values })
        .collect())
}

/// Spread between the largest and smallest value.
pub fn deviation(values: &[f64]) -> f64 {
    let (lo, hi) = values
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| (lo.min(v), hi.max(v)));
    hi - lo
}

/// Keeps windows whose max-min spread is at least `min_deviation`.
pub fn filter_low_deviation(windows: Vec<RawWindow<'_>>, min_deviation: f64) -> Vec<RawWindow<'_>> {
    windows
        .into_iter()
        .filter(|w| deviation(w.values) >= min_deviation)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ts(values: Vec<f64>) -> TimeSeries {
        TimeSeries::new("run", "sensor", values).unwrap()
    }

    #[test]
    #[allow(clippy::approx_constant)]
    fn znormalize_hand_values() {
        let z = znormalize(&ts(vec![1.0, 2.0, 3.0, 4.0, 5.0])).unwrap();
        let expected = [-1.41421, -0.70711, 0.0, 0.70711, 1.41421];
        for (a, b) in z.zvalues.iter().zip(expected) {
            assert!((a - b).abs() < 1e-5, "{a} vs {b}");
        }
        assert_eq!(z.mean, 3.0);
        assert!((z.std_dev - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn znormalize_already_standard() {
        let z = znormalize(&ts(vec![-1.0, 1.0])).unwrap();
        assert_eq!(z.zvalues, vec![-1.0, 1.0]);
    }

    #[test]
    fn znormalize_constant_is_zero_variance() {
        assert_eq!(
            znormalize(&ts(vec![5.0, 5.0, 5.0])),
            Err(Error::ZeroVariance("run".into()))
        );
    }

    #[test]
    fn rejects_empty_and_non_finite() {
        assert!(matches!(TimeSeries::new("a", "s", vec![]), Err(Error::EmptySeries(_))));
        assert!(matches!(
            TimeSeries::new("a", "s", vec![1.0, f64::NAN]),
            Err(Error::NonFinite { index: 1, .. })
        ));
    }

    #[test]
    fn window_counts() {
        let z = znormalize(&ts(vec![1.0, 2.0, 3.0, 4.0, 5.0])).unwrap();
        let w = generate_subsequences(&z, 3).unwrap();
        assert_eq!(w.iter().map(|w| w.start).collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(w[1].values, &z.zvalues[1..4]);
        assert_eq!(generate_subsequences(&z, 5).unwrap().len(), 1);

        let short = znormalize(&ts(vec![1.0, 2.0, 3.0, 4.0])).unwrap();
        assert!(matches!(
            generate_subsequences(&short, 5),
            Err(Error::WindowTooLong { len: 4, window: 5, .. })
        ));
    }

    #[test]
    fn deviation_filter_rule() {
        let a = [0.0, 0.2, 0.4];
        let b = [-0.6, 0.5];
        let windows = vec![
            RawWindow { start: 0, values: &a },
            RawWindow { start: 1, values: &b },
        ];
        let kept = filter_low_deviation(windows.clone(), 1.0);
        assert_eq!(kept.len(), 1);
        assert_eq!(kept[0].start, 1);
        assert_eq!(filter_low_deviation(windows, 0.0).len(), 2);
    }
}
