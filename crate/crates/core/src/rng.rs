//! Seeded randomness with a fully documented draw procedure.
//!
//! The generator is xoshiro256** whose 256-bit state is filled by four
//! consecutive SplitMix64 outputs starting from the user's 64-bit seed.
//! Bounded integers use plain rejection: draw `x = next_u64()` and accept when
//! `x <= u64::MAX - (2^64 mod bound)`, returning `x mod bound`.
//! A uniform permutation of `[n]` is a Fisher–Yates shuffle of `1, 2, …, n`
//! running `i` from `n-1` down to `1` and swapping positions `i` and
//! `uniform_below(i + 1)`.
//!
//! Anything that reimplements these three steps reproduces sampled families
//! bit for bit.

use alloc::vec::Vec;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

use crate::perm::Perm;

pub struct SeededRng(Xoshiro256StarStar);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng(Xoshiro256StarStar::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform integer in `0..bound`. `bound` must be positive.
    pub fn uniform_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        let rem = (u64::MAX % bound + 1) % bound;
        let limit = u64::MAX - rem;
        loop {
            let x = self.0.next_u64();
            if x <= limit {
                return x % bound;
            }
        }
    }

    /// Uniform permutation of `[n]`.
    pub fn permutation(&mut self, n: usize) -> Perm {
        let mut word: Vec<u8> = (1..=n as u8).collect();
        for i in (1..n).rev() {
            let j = self.uniform_below(i as u64 + 1) as usize;
            word.swap(i, j);
        }
        Perm::from_word_unchecked(word)
    }
}
