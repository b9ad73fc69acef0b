//! Deterministic RNG derivation. Every randomized search in the crate draws
//! from a ChaCha stream keyed by the user seed and a context tag, so equal
//! inputs reproduce equal reports.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// RNG keyed by `(seed, tags...)`.
pub fn derive_rng(seed: u64, tags: &[u64]) -> ChaCha12Rng {
    let mut state = splitmix(seed);
    for &t in tags {
        state = splitmix(state ^ t);
    }
    ChaCha12Rng::seed_from_u64(state)
}

/// Stable tag for a string context (ring signatures, command names).
pub fn tag(s: &str) -> u64 {
    // FNV-1a
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    for b in s.as_bytes() {
        h ^= *b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}
