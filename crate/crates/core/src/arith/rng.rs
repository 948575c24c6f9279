use super::field::PrimeField;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Deterministic random source identified by `(seed, stream)`.
///
/// The generator is ChaCha8: the 64-bit seed is expanded to a 256-bit key by
/// `SeedableRng::seed_from_u64` and `stream` selects the ChaCha stream
/// (nonce). Substreams derive their stream id from the parent stream and a
/// child index through the SplitMix64 finalizer, so a substream is a pure
/// function of `(seed, parent stream, index)`.
#[derive(Clone, Debug)]
pub struct SeededRng {
    seed: u64,
    stream: u64,
    inner: ChaCha8Rng,
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

impl SeededRng {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut inner = ChaCha8Rng::seed_from_u64(seed);
        inner.set_stream(stream);
        SeededRng {
            seed,
            stream,
            inner,
        }
    }

    pub fn from_seed(seed: u64) -> Self {
        Self::new(seed, 0)
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream(&self) -> u64 {
        self.stream
    }

    /// Independent generator for child `index`; does not advance `self`.
    pub fn substream(&self, index: u64) -> SeededRng {
        let id = splitmix64(self.stream ^ splitmix64(index.wrapping_add(1)));
        SeededRng::new(self.seed, id)
    }

    /// Uniform element of F_p.
    pub fn element(&mut self, field: &PrimeField) -> u32 {
        self.inner.gen_range(0..field.p())
    }

    /// Uniform nonzero element of F_p.
    pub fn nonzero_element(&mut self, field: &PrimeField) -> u32 {
        self.inner.gen_range(1..field.p())
    }

    /// Uniform integer in `[0, n)`.
    pub fn below(&mut self, n: usize) -> usize {
        self.inner.gen_range(0..n)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.gen()
    }
}
