use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

const PERIODS: [f64; 4] = [24.0, 32.0, 48.0, 64.0];
const AMPLITUDES: [f64; 3] = [1.0, 2.0, 3.0];
const OFFSETS: [f64; 3] = [-2.0, 0.0, 2.0];
const RAMP: usize = 50;

/// Regime-switching signal resembling a slowly varying sensor: each regime
/// is a sinusoid of one of a few periods and amplitudes around one of a few
/// offsets, plus AR(1) noise. Phase is continuous across regimes and offsets
/// change along a short ramp, so the set of recurring shapes does not grow
/// with the length.
pub fn sensor_like_series(length: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let noise = Normal::new(0.0, 0.1).unwrap();
    let mut out = Vec::with_capacity(length);
    let (mut ar, mut phase, mut offset) = (0.0, 0.0, 0.0);
    while out.len() < length {
        let regime = rng.random_range(300..1200);
        let period = PERIODS[rng.random_range(0..PERIODS.len())];
        let amplitude = AMPLITUDES[rng.random_range(0..AMPLITUDES.len())];
        let target = OFFSETS[rng.random_range(0..OFFSETS.len())];
        let from = offset;
        for t in 0..regime.min(length - out.len()) {
            ar = 0.9 * ar + noise.sample(&mut rng);
            phase += std::f64::consts::TAU / period;
            offset = from + (target - from) * ((t + 1) as f64 / RAMP as f64).min(1.0);
            out.push(offset + amplitude * phase.sin() + ar);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn length_and_determinism() {
        let a = sensor_like_series(5000, 3);
        assert_eq!(a.len(), 5000);
        assert_eq!(a, sensor_like_series(5000, 3));
        assert_ne!(a, sensor_like_series(5000, 4));
        assert!(a.iter().all(|v| v.is_finite()));
    }
}
