//! Deterministic direction sets for support-function comparisons.
//!
//! Body equality is decided (as a semi-decision) by comparing support values
//! over a fixed direction set: 512 uniformly spaced angles in the plane,
//! 2048 seeded pseudo-uniform sphere directions otherwise.

use alloc::vec;
use alloc::vec::Vec;

use crate::float::{cos, sin};
use crate::rng::SplitMix64;

const SPHERE_SEED: u64 = 0x6A09_E667_F3BC_C908;

/// `n` planar unit directions at uniformly spaced angles, offset by half a
/// step so no direction lies exactly on a coordinate axis.
pub fn circle_directions(n: usize) -> Vec<Vec<f64>> {
    let step = core::f64::consts::TAU / n as f64;
    (0..n)
        .map(|k| {
            let theta = (k as f64 + 0.5) * step;
            vec![cos(theta), sin(theta)]
        })
        .collect()
}

/// `n` deterministic pseudo-uniform unit directions in dimension `dim`.
pub fn sphere_directions(dim: usize, n: usize) -> Vec<Vec<f64>> {
    let mut rng = SplitMix64::new(SPHERE_SEED ^ dim as u64);
    (0..n).map(|_| rng.unit_vector(dim)).collect()
}

/// The direction set used for body-equality checks: 512 in the plane,
/// 2048 in higher dimension.
pub fn equality_directions(dim: usize) -> Vec<Vec<f64>> {
    if dim == 2 {
        circle_directions(512)
    } else {
        sphere_directions(dim, 2048)
    }
}
