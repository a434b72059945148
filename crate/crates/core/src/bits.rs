//! Single-word bitset helpers for element subsets (`n <= 64`).

/// Iterate the set bit positions of `word`, lowest first.
pub fn iter(word: u64) -> BitIter {
    BitIter(word)
}

/// Mask with the lowest `n` bits set.
pub fn full(n: usize) -> u64 {
    debug_assert!(n <= 64);
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Collect the set bit positions.
pub fn to_vec(word: u64) -> Vec<usize> {
    iter(word).collect()
}

/// Bitset from an iterator of positions.
pub fn from_iter<I: IntoIterator<Item = usize>>(items: I) -> u64 {
    let mut w = 0u64;
    for i in items {
        debug_assert!(i < 64);
        w |= 1u64 << i;
    }
    w
}

#[derive(Clone, Copy)]
pub struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

impl ExactSizeIterator for BitIter {
    fn len(&self) -> usize {
        self.0.count_ones() as usize
    }
}
