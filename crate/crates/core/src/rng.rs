//! Seeded random streams. Every random choice derives from one user seed
//! through a named sub-stream and an index.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Rng = ChaCha8Rng;

fn fnv1a(s: &str) -> u64 {
    s.bytes()
        .fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3))
}

/// Stream `index` of the sub-stream `name` under `seed`.
pub fn stream(seed: u64, name: &str, index: u64) -> Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed ^ fnv1a(name));
    r.set_stream(index);
    r
}
