//! Deterministic random streams.
//!
//! Every stream is a ChaCha8 generator (`rand_chacha` 0.9) keyed through
//! `SeedableRng::seed_from_u64`. Trials never share generator state: each one
//! receives its own 64-bit seed derived from the experiment's master seed.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A seeded, single-owner random stream.
#[derive(Clone, Debug)]
pub struct RngStream {
    seed: u64,
    inner: ChaCha8Rng,
}

impl RngStream {
    pub fn from_seed(seed: u64) -> Self {
        Self {
            seed,
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// The seed this stream was created from.
    pub fn seed(&self) -> u64 {
        self.seed
    }
}

impl RngCore for RngStream {
    fn next_u32(&mut self) -> u32 {
        self.inner.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    fn fill_bytes(&mut self, dst: &mut [u8]) {
        self.inner.fill_bytes(dst)
    }
}

/// SplitMix64 finalizer. A bijection on `u64`.
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Combines a master seed with an already-packed coordinate.
///
/// For a fixed `master` the map `packed -> seed` is injective, so distinct
/// packed coordinates never collide.
pub fn derive_seed(master: u64, packed: u64) -> u64 {
    mix64(master.wrapping_add(mix64(packed)))
}
