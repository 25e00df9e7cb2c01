//! Regenerates the bundled fixtures under `fixtures/`.
//!
//! `vehicle/`: six synthetic drives sampled at 1 Hz with speed (km/h),
//! engine speed (rpm) and coolant temperature (deg C). Trips alternate
//! stops, acceleration ramps, cruising and braking, so acceleration and
//! gear-change shapes recur at several levels.
//!
//! `planted/`: white noise with a half-sine bump at two levels, plus the
//! injection starts and levels.
//!
//! Usage: cargo run -p coinmotif-cli --example make_fixtures [-- <dir>]

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use coinmotif::oracle::{generate_planted, half_sine_bump, PlantedSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

const RUNS: usize = 6;
const SAMPLES: usize = 3000;
const CRUISE: [f64; 4] = [30.0, 50.0, 80.0, 110.0];
const GEAR_TOP: [f64; 5] = [20.0, 40.0, 60.0, 85.0, f64::INFINITY];
const GEAR_RATIO: [f64; 5] = [110.0, 60.0, 40.0, 30.0, 24.0];

fn speed_profile(rng: &mut ChaCha8Rng) -> Vec<f64> {
    let jitter = Normal::new(0.0, 0.4).unwrap();
    let mut v = Vec::with_capacity(SAMPLES);
    let mut speed: f64 = 0.0;
    while v.len() < SAMPLES {
        for _ in 0..rng.random_range(20..60) {
            v.push(0.0);
        }
        let target = CRUISE[rng.random_range(0..CRUISE.len())];
        let accel = rng.random_range(2.0..3.0);
        while speed < target {
            speed = (speed + accel).min(target);
            v.push(speed);
        }
        let mut drift = 0.0;
        for _ in 0..rng.random_range(60..300) {
            drift = 0.95 * drift + jitter.sample(rng);
            v.push(speed + drift);
        }
        let brake = rng.random_range(3.0..4.0);
        while speed > 0.0 {
            speed = (speed - brake).max(0.0);
            v.push(speed);
        }
    }
    v.truncate(SAMPLES);
    v
}

fn rpm(speed: f64, noise: f64) -> f64 {
    if speed <= 0.0 {
        return 800.0 + noise;
    }
    let gear = GEAR_TOP.iter().position(|&top| speed <= top).unwrap();
    let lower = if gear == 0 { 0.0 } else { GEAR_TOP[gear - 1] };
    900.0 + (speed - lower) * GEAR_RATIO[gear] + noise
}

fn vehicle_run(seed: u64) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let speed = speed_profile(&mut rng);
    let rpm_noise = Normal::new(0.0, 25.0).unwrap();
    let temp_noise = Normal::new(0.0, 0.15).unwrap();
    let ambient = rng.random_range(10.0..25.0);
    let mut out = String::from("time,speed,rpm,coolant_temp\n");
    for (t, &s) in speed.iter().enumerate() {
        let warm = 90.0 - (90.0 - ambient) * (-(t as f64) / 300.0).exp();
        let thermostat = if warm > 85.0 { 2.5 * (t as f64 * std::f64::consts::TAU / 140.0).sin() } else { 0.0 };
        let temp = warm + thermostat + temp_noise.sample(&mut rng);
        let _ = writeln!(out, "{t},{s:.2},{:.1},{temp:.2}", rpm(s, rpm_noise.sample(&mut rng)));
    }
    out
}

fn main() {
    let root = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures")));
    let vehicle = root.join("vehicle");
    fs::create_dir_all(&vehicle).unwrap();
    for run in 0..RUNS {
        fs::write(vehicle.join(format!("run{:02}.csv", run + 1)), vehicle_run(1000 + run as u64)).unwrap();
    }

    let planted_dir = root.join("planted");
    fs::create_dir_all(&planted_dir).unwrap();
    let mut spec = PlantedSpec::new(half_sine_bump(20, 3.0), 20, 6000, 7);
    spec.levels = vec![0.0, 5.0];
    spec.noise_sigma = 0.06;
    let planted = generate_planted(&spec).unwrap();
    let mut csv = String::from("time,value\n");
    for (t, v) in planted.values.iter().enumerate() {
        let _ = writeln!(csv, "{t},{v:.6}");
    }
    fs::write(planted_dir.join("planted.csv"), csv).unwrap();
    let mut truth = String::from("start,level\n");
    for inj in &planted.injections {
        let _ = writeln!(truth, "{},{}", inj.start, inj.level);
    }
    fs::write(planted_dir.join("truth.csv"), truth).unwrap();
    println!("fixtures written to {}", root.display());
}
