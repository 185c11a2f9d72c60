//! Seeded xorshift64* generator.
//!
//! Update rule, applied to the 64-bit state `s` before every output:
//!
//! ```text
//! s ^= s >> 12;  s ^= s << 25;  s ^= s >> 27;
//! output = s * 0x2545F4914F6CDD1D   (wrapping)
//! ```
//!
//! A zero seed is replaced by `0x9E3779B97F4A7C15`. `below(n)` is
//! `output % n`. Sampled sweeps draw indices into sorted basis lists with
//! `below`, so results are reproducible across implementations.

#[derive(Clone, Debug)]
pub struct XorShift64Star {
    state: u64,
}

impl XorShift64Star {
    pub fn new(seed: u64) -> Self {
        XorShift64Star {
            state: if seed == 0 {
                0x9E37_79B9_7F4A_7C15
            } else {
                seed
            },
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut s = self.state;
        s ^= s >> 12;
        s ^= s << 25;
        s ^= s >> 27;
        self.state = s;
        s.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0, "below(0)");
        (self.next_u64() % n as u64) as usize
    }
}
