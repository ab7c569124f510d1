//! Seeded random generation: Haar rotations, Gaussian elements of `p`, and
//! per-sample substreams for parallel surveys.

use std::f64::consts::TAU;

use nalgebra::{Quaternion, UnitQuaternion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::symmat::{Rotation3, SymTraceless3};

pub type SampleRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// SplitMix64 finalizer applied to `master` and `index`; gives each sample
/// its own reproducible seed independent of evaluation order.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    let mut z = master
        .wrapping_add(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(index.wrapping_mul(0xD1B5_4A32_D192_ED03));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Haar-uniform rotation from a uniformly distributed unit quaternion
/// (Shoemake's subgroup algorithm).
pub fn random_rotation<R: Rng + ?Sized>(rng: &mut R) -> Rotation3 {
    let u1: f64 = rng.random();
    let u2: f64 = rng.random();
    let u3: f64 = rng.random();
    let a = (1.0 - u1).sqrt();
    let b = u1.sqrt();
    let q = Quaternion::new(
        b * (TAU * u3).cos(),
        a * (TAU * u2).sin(),
        a * (TAU * u2).cos(),
        b * (TAU * u3).sin(),
    );
    let r = UnitQuaternion::from_quaternion(q).to_rotation_matrix();
    Rotation3::from_matrix_unchecked(r.into_inner())
}

/// Standard Gaussian element of `p` in trace-orthonormal coordinates
/// (a K-invariant distribution).
pub fn random_traceless<R: Rng + ?Sized>(rng: &mut R) -> SymTraceless3 {
    let mut c = [0.0; 5];
    for v in c.iter_mut() {
        *v = rng.sample(StandardNormal);
    }
    SymTraceless3::from_coords(c)
}

/// Uniform point on the unit sphere in R^3.
pub fn random_unit3<R: Rng + ?Sized>(rng: &mut R) -> [f64; 3] {
    loop {
        let v: [f64; 3] = [
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
        ];
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if n > 1e-12 {
            return [v[0] / n, v[1] / n, v[2] / n];
        }
    }
}
