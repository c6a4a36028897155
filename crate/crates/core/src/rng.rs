//! Counter-based deterministic random streams.
//!
//! Everything statistical in this crate must be reproducible from a `u64`
//! seed, and the bilateral Bernoulli shift needs a bit that is a pure
//! function of `(seed, coordinate)` so that lazily extending a state's
//! window never depends on evaluation order. A keyed splitmix64 hash gives
//! both at a cost of a few arithmetic ops per draw.

/// splitmix64 finalizer (Steele, Lea, Flood 2014).
#[inline]
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Pure hash of a (key, index) pair. Used for per-coordinate Bernoulli bits
/// and for deriving independent substream keys.
#[inline]
pub fn mix(key: u64, index: i64) -> u64 {
    splitmix64(key ^ splitmix64(index as u64))
}

/// Substream key for the `i`-th sample of a seeded experiment.
#[inline]
pub fn substream(seed: u64, i: u64) -> u64 {
    splitmix64(seed.wrapping_add(0xA076_1D64_78BD_642F).wrapping_mul(2).wrapping_add(1) ^ splitmix64(i))
}

/// Sequential generator over a substream.
#[derive(Debug, Clone)]
pub struct Stream {
    state: u64,
}

impl Stream {
    pub fn new(key: u64) -> Self {
        Stream { state: splitmix64(key) }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw in [0, 1) with 53 random mantissa bits.
    #[inline]
    pub fn uniform01(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / 9007199254740992.0)
    }

    /// Uniform draw in [-1, 1).
    #[inline]
    pub fn uniform_sym(&mut self) -> f64 {
        2.0 * self.uniform01() - 1.0
    }

    #[inline]
    pub fn bit(&mut self) -> bool {
        self.next_u64() & 1 == 1
    }

    /// Uniform integer in [0, n).
    #[inline]
    pub fn below(&mut self, n: u64) -> u64 {
        // Desk-scale n: modulo bias is ~n/2^64, irrelevant here.
        self.next_u64() % n
    }
}
