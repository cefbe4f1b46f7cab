//! Bit-packed ±1 sequences with popcount-based correlation.
//!
//! Entries are packed into a single `u64` word, one bit per entry
//! (bit k set ⇔ entry k is −1). With `d = popcount(X ^ rot(Y, s))` counting
//! disagreements, the periodic cross-correlation is `n − 2d`. This is the
//! throughput path used by the exhaustive search; the dense
//! [`BinarySequence`] arithmetic is the reference it is tested against.

use crate::seq::{BinarySequence, Sign};

/// Maximum length a sequence can have and still fit one word.
pub const MAX_PACKED_LEN: usize = 64;

/// A ±1 sequence of length ≤ 64 packed into one machine word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PackedSequence {
    bits: u64,
    len: usize,
}

impl PackedSequence {
    /// Packs a dense sequence. Returns `None` when it does not fit.
    pub fn from_sequence(seq: &BinarySequence) -> Option<Self> {
        if seq.len() > MAX_PACKED_LEN {
            return None;
        }
        let mut bits = 0u64;
        for (k, &s) in seq.entries().iter().enumerate() {
            if s == Sign::Minus {
                bits |= 1u64 << k;
            }
        }
        Some(PackedSequence {
            bits,
            len: seq.len(),
        })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    fn mask(&self) -> u64 {
        if self.len == 64 {
            u64::MAX
        } else {
            (1u64 << self.len) - 1
        }
    }

    /// Cyclic rotation of the packed bits: bit `j` of the result is bit
    /// `(j + s) mod n` of the input, matching `BinarySequence::rotate`.
    fn rotated_bits(&self, s: usize) -> u64 {
        let n = self.len;
        let s = s % n;
        if s == 0 {
            self.bits
        } else {
            ((self.bits >> s) | (self.bits << (n - s))) & self.mask()
        }
    }

    /// Periodic cross-correlation via XOR + popcount. Panics on length mismatch.
    pub fn pcf(&self, other: &PackedSequence, s: i64) -> i64 {
        assert_eq!(self.len, other.len, "pcf requires equal lengths");
        let n = self.len;
        let shift = s.rem_euclid(n as i64) as usize;
        let disagreements = (self.bits ^ other.rotated_bits(shift)).count_ones() as i64;
        n as i64 - 2 * disagreements
    }

    /// Periodic autocorrelation at shift `s`.
    pub fn paf(&self, s: i64) -> i64 {
        self.pcf(self, s)
    }

    /// Sum of entries: `n − 2·(number of −1 entries)`.
    pub fn row_sum(&self) -> i64 {
        self.len as i64 - 2 * (self.bits & self.mask()).count_ones() as i64
    }
}
