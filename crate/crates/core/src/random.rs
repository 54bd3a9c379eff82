//! Seeded sampling of exact test elements.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::composition::{Octonion, Quaternion};
use crate::exact::{GaussianRational, Rational, VectorQ};

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small rational `n/d` with `|n| ≤ 5`, `1 ≤ d ≤ 3`.
pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(rng.gen_range(-5..=5), rng.gen_range(1..=3))
}

pub fn small_integer<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    Rational::from_int(rng.gen_range(-bound..=bound))
}

pub fn rational_vector<R: Rng>(rng: &mut R, n: usize) -> VectorQ {
    (0..n).map(|_| small_rational(rng)).collect()
}

/// Integer coordinates in `[-bound, bound]`.
pub fn integer_vector<R: Rng>(rng: &mut R, n: usize, bound: i64) -> VectorQ {
    (0..n).map(|_| small_integer(rng, bound)).collect()
}

pub fn gaussian<R: Rng>(rng: &mut R) -> GaussianRational {
    GaussianRational::new(small_rational(rng), small_rational(rng))
}

pub fn octonion<R: Rng>(rng: &mut R) -> Octonion {
    Octonion::from_coords(&rational_vector(rng, 8))
}

pub fn quaternion<R: Rng>(rng: &mut R) -> Quaternion {
    Quaternion::from_coords(&rational_vector(rng, 4))
}
