//! Seeded random inputs shared by the integration tests.
#![allow(dead_code)]

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use slimbasis::{BigRational, CycloElem, CycloRing};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rational(rng: &mut ChaCha8Rng) -> BigRational {
    let num: i64 = rng.gen_range(-20..=20);
    let den: i64 = rng.gen_range(1..=6);
    BigRational::new(num.into(), den.into())
}

pub fn vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<BigRational> {
    (0..n).map(|_| rational(rng)).collect()
}

/// Random element of `ring`, coefficients in the power basis.
pub fn element(rng: &mut ChaCha8Rng, ring: &Arc<CycloRing>) -> CycloElem {
    let coeffs = vector(rng, ring.degree());
    CycloElem::from_coeffs(ring, &coeffs).unwrap()
}
