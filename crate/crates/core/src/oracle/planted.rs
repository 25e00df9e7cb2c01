use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::error::{Error, Result};
use crate::series::TimeSeries;

/// Synthetic series with copies of `pattern` written over white noise.
#[derive(Debug, Clone, PartialEq)]
pub struct PlantedSpec {
    pub pattern: Vec<f64>,
    pub count: usize,
    /// Offsets added to the pattern, assigned round-robin to injections.
    pub levels: Vec<f64>,
    /// Standard deviation of the jitter added to each injected sample.
    pub noise_sigma: f64,
    /// Standard deviation of the white-noise background.
    pub background_sigma: f64,
    pub seed: u64,
    pub series_length: usize,
    /// Minimum number of background samples between two injections.
    pub min_gap: usize,
}

impl PlantedSpec {
    pub fn new(pattern: Vec<f64>, count: usize, series_length: usize, seed: u64) -> Self {
        let w = pattern.len();
        Self {
            pattern,
            count,
            levels: vec![0.0],
            noise_sigma: 0.0,
            background_sigma: 1.0,
            seed,
            series_length,
            min_gap: w,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Injection {
    pub start: usize,
    pub level: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlantedSeries {
    pub values: Vec<f64>,
    /// Sorted by start.
    pub injections: Vec<Injection>,
}

impl PlantedSeries {
    pub fn to_series(&self, id: &str, sensor: &str) -> Result<TimeSeries> {
        TimeSeries::new(id, sensor, self.values.clone())
    }
}

/// `amplitude * sin(pi * j / (w - 1))` for j in 0..w.
pub fn half_sine_bump(w: usize, amplitude: f64) -> Vec<f64> {
    (0..w)
        .map(|j| amplitude * (std::f64::consts::PI * j as f64 / (w.max(2) - 1) as f64).sin())
        .collect()
}

pub fn generate_planted(spec: &PlantedSpec) -> Result<PlantedSeries> {
    let w = spec.pattern.len();
    let n = spec.series_length;
    if w == 0 {
        return Err(Error::SpecInfeasible("empty pattern".into()));
    }
    let required = if spec.count == 0 { 0 } else { spec.count * w + (spec.count - 1) * spec.min_gap };
    if spec.count * w >= n.max(1) && spec.count > 0 || required > n {
        return Err(Error::SpecInfeasible(format!(
            "{} injections of length {} with gap {} do not fit in {} samples",
            spec.count, w, spec.min_gap, n
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let background = Normal::new(0.0, spec.background_sigma.max(0.0)).map_err(|e| Error::SpecInfeasible(e.to_string()))?;
    let jitter = Normal::new(0.0, spec.noise_sigma.max(0.0)).map_err(|e| Error::SpecInfeasible(e.to_string()))?;
    let mut values: Vec<f64> = (0..n).map(|_| background.sample(&mut rng)).collect();

    let slack = n - required;
    let mut offsets: Vec<usize> = (0..spec.count).map(|_| rng.random_range(0..=slack)).collect();
    offsets.sort_unstable();
    let levels = if spec.levels.is_empty() { vec![0.0] } else { spec.levels.clone() };
    let injections: Vec<Injection> = offsets
        .iter()
        .enumerate()
        .map(|(i, &u)| Injection {
            start: u + i * (w + spec.min_gap),
            level: levels[i % levels.len()],
        })
        .collect();
    for inj in &injections {
        for (j, p) in spec.pattern.iter().enumerate() {
            values[inj.start + j] = inj.level + p + jitter.sample(&mut rng);
        }
    }
    Ok(PlantedSeries { values, injections })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn no_injections_is_pure_noise() {
        let p = generate_planted(&PlantedSpec::new(vec![1.0; 10], 0, 500, 1)).unwrap();
        assert!(p.injections.is_empty());
        assert_eq!(p.values.len(), 500);
        let mean = p.values.iter().sum::<f64>() / 500.0;
        assert!(mean.abs() < 0.2);
    }

    #[test]
    fn exact_pattern_without_jitter() {
        let pattern = half_sine_bump(16, 3.0);
        let mut spec = PlantedSpec::new(pattern.clone(), 1, 400, 9);
        spec.levels = vec![2.0];
        let p = generate_planted(&spec).unwrap();
        let s = p.injections[0].start;
        let expected: Vec<f64> = pattern.iter().map(|v| v + 2.0).collect();
        assert_eq!(&p.values[s..s + 16], expected.as_slice());
    }

    #[test]
    fn injections_do_not_overlap() {
        let mut spec = PlantedSpec::new(vec![1.0; 20], 60, 3000, 4);
        spec.levels = vec![0.0, 5.0];
        let p = generate_planted(&spec).unwrap();
        assert_eq!(p.injections.len(), 60);
        for pair in p.injections.windows(2) {
            assert!(pair[1].start >= pair[0].start + 40);
        }
        assert_eq!(p.injections.iter().filter(|i| i.level == 5.0).count(), 30);
        assert!(p.injections.last().unwrap().start + 20 <= 3000);
    }

    #[test]
    fn infeasible_spec() {
        let spec = PlantedSpec::new(vec![1.0; 20], 10, 200, 0);
        assert!(matches!(generate_planted(&spec), Err(Error::SpecInfeasible(_))));
    }

    #[test]
    fn seeded_output_is_identical() {
        let spec = PlantedSpec::new(half_sine_bump(20, 3.0), 5, 1000, 77);
        assert_eq!(generate_planted(&spec).unwrap(), generate_planted(&spec).unwrap());
    }
}
