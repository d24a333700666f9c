//! A tiny deterministic generator (splitmix64) so that seeded searches and
//! randomized suites produce byte-identical output across runs, platforms,
//! and dependency upgrades.

use crate::rational::{rat, Rational};

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Draw in `0..n` by modulo.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        self.next_u64() % n
    }

    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    /// A rational with numerator in `[-num_bound, num_bound]` and denominator
    /// in `[1, den_bound]`.
    pub fn rational(&mut self, num_bound: i64, den_bound: i64) -> Rational {
        let n = self.range_i64(-num_bound, num_bound);
        let d = self.range_i64(1, den_bound);
        rat(n, d)
    }

    /// A strictly positive rational with the same bounds.
    pub fn positive_rational(&mut self, num_bound: i64, den_bound: i64) -> Rational {
        let n = self.range_i64(1, num_bound.max(1));
        let d = self.range_i64(1, den_bound);
        rat(n, d)
    }

    pub fn pick<'a, T>(&mut self, slice: &'a [T]) -> &'a T {
        &slice[self.below(slice.len() as u64) as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_streams() {
        let mut a = SplitMix64::new(7);
        let mut b = SplitMix64::new(7);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
        let mut c = SplitMix64::new(8);
        assert_ne!(a.next_u64(), c.next_u64());
    }

    #[test]
    fn first_values_are_pinned() {
        // frozen so a library upgrade cannot silently change seeded output
        let mut r = SplitMix64::new(0);
        assert_eq!(r.next_u64(), 0xe220a8397b1dcdaf);
        assert_eq!(r.next_u64(), 0x6e789e6aa1b965f4);
    }
}
