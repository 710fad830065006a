//! Deterministic seeded randomness.
//!
//! SplitMix64: the state is a counter advanced by a fixed odd constant and
//! each output is a bijective mix of the counter. Identical seeds give
//! identical streams on every platform, and independent child generators
//! are derived by drawing a fresh seed.

const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GAMMA);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw in `[0, bound)` by rejection sampling; `bound > 0`.
    pub fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        if bound == 1 {
            return 0;
        }
        // Reject draws from the final partial block of [0, 2^64).
        let zone = u64::MAX - (u64::MAX - bound + 1) % bound;
        loop {
            let v = self.next_u64();
            if v <= zone {
                return v % bound;
            }
        }
    }

    /// Uniform draw in the inclusive range `[lo, hi]`.
    pub fn uniform(&mut self, lo: u64, hi: u64) -> Result<u64> {
        if lo > hi {
            return Err(Error::EmptyRange);
        }
        let span = hi - lo;
        if span == u64::MAX {
            return Ok(self.next_u64());
        }
        Ok(lo + self.below(span + 1))
    }

    /// Derives an independently seeded generator.
    pub fn child(&mut self) -> Rng {
        Rng::new(self.next_u64())
    }
}
