//! Shared input generation for the benchmark targets.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use twistropy::braid::{BraidLetter, BraidWord};

/// Deterministic pseudo-random braid words for reproducible benchmarks.
pub fn random_words(seed: u64, count: usize, max_len: usize) -> Vec<BraidWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let len = rng.gen_range(0..=max_len);
            BraidWord::new(
                (0..len)
                    .map(|_| BraidLetter {
                        gen: rng.gen_range(1..=2),
                        inverse: rng.gen_bool(0.5),
                    })
                    .collect(),
            )
        })
        .collect()
}
