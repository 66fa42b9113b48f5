//! Deterministic random numbers for property suites.
//!
//! The generator is SplitMix64: state advances by the 64-bit golden-ratio
//! constant and each output is a finalizer of the state alone, so the k-th
//! draw from seed `s` is the pure function `mix(s + (k+1)·0x9E3779B97F4A7C15)`.
//! Reports produced from a seeded run are therefore byte-stable.

use alloc::vec::Vec;

use crate::float::sqrt;
use crate::linalg;

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn in_range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    pub fn next_usize(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }

    /// Uniform direction on the unit sphere by rejection from the cube.
    pub fn unit_vector(&mut self, dim: usize) -> Vec<f64> {
        loop {
            let v: Vec<f64> = (0..dim).map(|_| self.in_range(-1.0, 1.0)).collect();
            let n2 = linalg::dot(&v, &v);
            if n2 > 1e-4 && n2 <= 1.0 {
                let inv = 1.0 / sqrt(n2);
                return linalg::scale(&v, inv);
            }
        }
    }

    /// Point with coordinates uniform in `[-scale, scale]`.
    pub fn point(&mut self, dim: usize, scale: f64) -> Vec<f64> {
        (0..dim).map(|_| self.in_range(-scale, scale)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_streams() {
        let mut a = SplitMix64::new(7);
        let mut b = SplitMix64::new(7);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn unit_vectors_are_unit() {
        let mut rng = SplitMix64::new(1);
        for _ in 0..50 {
            let v = rng.unit_vector(4);
            assert!((linalg::norm(&v) - 1.0).abs() < 1e-12);
        }
    }
}
