//! Minimal deterministic random number generator.
//!
//! The variational oracle must be reproducible bit for bit from a bare
//! 64-bit seed, independent of any external crate's stream evolution, so it
//! uses this self-contained SplitMix64 generator with a Box-Muller
//! transform for normal draws. The state transition is a single 64-bit add,
//! which makes the stream trivially stable across platforms and releases.

/// SplitMix64: counter-based 64-bit generator (Steele, Lea, Flood 2014).
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw in [0, 1) with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Two independent standard normal draws via Box-Muller.
    pub fn next_normal_pair(&mut self) -> (f64, f64) {
        // 1 - u in (0, 1] keeps the logarithm finite.
        let u = 1.0 - self.next_f64();
        let v = self.next_f64();
        let r = (-2.0 * u.ln()).sqrt();
        let theta = 2.0 * std::f64::consts::PI * v;
        (r * theta.cos(), r * theta.sin())
    }
}
