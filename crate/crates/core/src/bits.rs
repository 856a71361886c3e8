//! Fixed-width bitsets backed by `[u64; N]`.

use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Bits<const N: usize>([u64; N]);

impl<const N: usize> Default for Bits<N> {
    fn default() -> Self {
        Bits([0; N])
    }
}

impl<const N: usize> Bits<N> {
    pub const WIDTH: usize = 64 * N;

    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        i < Self::WIDTH && self.0[i / 64] >> (i % 64) & 1 == 1
    }

    /// Panics when `i` is past the width.
    #[inline]
    pub fn set(&mut self, i: usize) {
        assert!(i < Self::WIDTH, "bit {i} past width {}", Self::WIDTH);
        self.0[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn clear(&mut self, i: usize) {
        if i < Self::WIDTH {
            self.0[i / 64] &= !(1 << (i % 64));
        }
    }

    /// Shift towards bit 0 by one; bit 0 is discarded.
    #[inline]
    pub fn shr1(&mut self) {
        for w in 0..N {
            let carry = if w + 1 < N { self.0[w + 1] << 63 } else { 0 };
            self.0[w] = self.0[w] >> 1 | carry;
        }
    }

    #[inline]
    pub fn or_assign(&mut self, other: &Self) {
        for w in 0..N {
            self.0[w] |= other.0[w];
        }
    }

    pub fn count_ones(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    /// Set bits among `0..n`.
    pub fn count_ones_below(&self, n: usize) -> u32 {
        let n = n.min(Self::WIDTH);
        let full = n / 64;
        let mut total: u32 = self.0[..full].iter().map(|w| w.count_ones()).sum();
        if n % 64 != 0 {
            total += (self.0[full] & ((1u64 << (n % 64)) - 1)).count_ones();
        }
        total
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..Self::WIDTH).filter(|&i| self.get(i))
    }
}

impl<const N: usize> fmt::Debug for Bits<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.ones()).finish()
    }
}
