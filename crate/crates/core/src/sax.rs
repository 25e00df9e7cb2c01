//! Symbolic aggregate approximation over already-reduced vectors.

use statrs::distribution::{ContinuousCDF, Normal};

/// Standard-normal equiprobable breakpoints for an alphabet of `a` symbols.
#[derive(Debug, Clone, PartialEq)]
pub struct SaxAlphabet {
    breakpoints: Vec<f64>,
}

impl SaxAlphabet {
    pub const MAX_SIZE: usize = 26;

    pub fn new(size: usize) -> Self {
        assert!(
            (2..=Self::MAX_SIZE).contains(&size),
            "alphabet size {size} outside 2..={}",
            Self::MAX_SIZE
        );
        let normal = Normal::standard();
        // Mirror the lower half so the table is exactly symmetric and the
        // median breakpoint is exactly zero for even sizes.
        let mut breakpoints = vec![0.0; size - 1];
        for i in 1..size {
            if 2 * i < size {
                let b = normal.inverse_cdf(i as f64 / size as f64);
                breakpoints[i - 1] = b;
                breakpoints[size - 1 - i] = -b;
            }
        }
        Self { breakpoints }
    }

    pub fn size(&self) -> usize {
        self.breakpoints.len() + 1
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    /// Symbol index of `v`; a value sitting on a breakpoint belongs to the upper interval.
    pub fn symbol(&self, v: f64) -> u8 {
        self.breakpoints.partition_point(|&b| b <= v) as u8
    }

    pub fn encode(&self, reduced: &[f64]) -> String {
        reduced.iter().map(|&v| (b'a' + self.symbol(v)) as char).collect()
    }
}

pub fn sax_encode(reduced: &[f64], alphabet: usize) -> String {
    SaxAlphabet::new(alphabet).encode(reduced)
}
