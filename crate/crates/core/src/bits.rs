//! Word-level helpers for the fixed-width bit rows used by `Graph` and the
//! exact search kernels.

pub(crate) const WORD_BITS: usize = 64;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

#[inline]
pub(crate) fn test(row: &[u64], i: usize) -> bool {
    (row[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
}

#[inline]
pub(crate) fn set(row: &mut [u64], i: usize) {
    row[i / WORD_BITS] |= 1u64 << (i % WORD_BITS);
}

#[inline]
pub(crate) fn clear(row: &mut [u64], i: usize) {
    row[i / WORD_BITS] &= !(1u64 << (i % WORD_BITS));
}

#[inline]
pub(crate) fn count(row: &[u64]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub(crate) fn is_zero(row: &[u64]) -> bool {
    row.iter().all(|&w| w == 0)
}

/// Number of set bits shared by two rows of equal width.
#[inline]
pub(crate) fn and_count(a: &[u64], b: &[u64]) -> usize {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| (x & y).count_ones() as usize)
        .sum()
}

/// All-ones row of width `n` bits (trailing bits zeroed).
pub(crate) fn full_row(n: usize) -> Vec<u64> {
    let words = words_for(n);
    let mut row = vec![u64::MAX; words];
    let rem = n % WORD_BITS;
    if rem != 0 {
        row[words - 1] = (1u64 << rem) - 1;
    }
    if n == 0 {
        row.clear();
    }
    row
}

/// Iterates set bit positions in increasing order.
pub(crate) fn ones(row: &[u64]) -> Ones<'_> {
    Ones {
        row,
        word_idx: 0,
        current: row.first().copied().unwrap_or(0),
    }
}

pub(crate) struct Ones<'a> {
    row: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.row.len() {
                return None;
            }
            self.current = self.row[self.word_idx];
        }
        let tz = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * WORD_BITS + tz)
    }
}
