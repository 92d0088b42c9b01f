//! Shared generators for the integration tests.

#![allow(dead_code)]

use chamberwalk_core::arrangement::{build_arrangement, Arrangement};
use chamberwalk_core::exactlin::{frac, RatVec, Rational};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    frac(rng.gen_range(-12..=12), rng.gen_range(1..=5))
}

/// A random central arrangement with at most `max_h` hyperplanes in
/// dimension 2..=`max_dim`, sometimes restricted to a random subspace.
pub fn random_arrangement(rng: &mut ChaCha8Rng, max_dim: usize, max_h: usize) -> Arrangement {
    loop {
        let dim = rng.gen_range(2..=max_dim);
        let count = rng.gen_range(1..=max_h);
        let row = |rng: &mut ChaCha8Rng| -> RatVec {
            RatVec::from_ints(&(0..dim).map(|_| rng.gen_range(-2..=2)).collect::<Vec<_>>())
        };
        let rows: Vec<RatVec> = (0..count).map(|_| row(rng)).collect();
        let equalities: Vec<RatVec> = if dim >= 3 && rng.gen_bool(0.3) {
            vec![row(rng)]
        } else {
            Vec::new()
        };
        if rows.iter().chain(&equalities).any(RatVec::is_zero) {
            continue;
        }
        if let Ok(arr) = build_arrangement(&rows, &equalities, dim) {
            if !arr.is_empty() {
                return arr;
            }
        }
    }
}
