//! Seeded inputs shared by the benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use slimbasis::{BigInt, BigRational};

pub fn rational_vector(seed: u64, n: usize) -> Vec<BigRational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            BigRational::new(
                BigInt::from(rng.gen_range(-1000i64..=1000)),
                BigInt::from(rng.gen_range(1i64..=97)),
            )
        })
        .collect()
}

pub fn integer_vector(seed: u64, n: usize) -> Vec<i64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| rng.gen_range(-1 << 20..1 << 20)).collect()
}
