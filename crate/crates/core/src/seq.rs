//! ±1 sequences and their periodic correlation functions.
//!
//! A [`BinarySequence`] is a fixed-length sequence over {+1, −1}. The module
//! provides the three sequence operations used by the doubling construction
//! (negation, cyclic shift, perfect-shuffle interleaving), the half-rotation
//! that turns a symmetric sequence into a palindromic one, and exact integer
//! periodic auto/cross-correlation.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A single ±1 entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// Numeric value, +1 or −1.
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' => Some(Sign::Minus),
            _ => None,
        }
    }
}

// Text order: '+' sorts before '-'. The derived enum order would compare
// discriminant values (+1 > -1), which is the opposite.
impl Ord for Sign {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let rank = |s: &Sign| match s {
            Sign::Plus => 0u8,
            Sign::Minus => 1u8,
        };
        rank(self).cmp(&rank(other))
    }
}

impl PartialOrd for Sign {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Errors from sequence construction and operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("empty sequence")]
    Empty,
    #[error("non-unit entry {value} at index {index}")]
    NonUnitEntry { index: usize, value: i64 },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("half_rotate requires odd order, got {len}")]
    EvenLength { len: usize },
    #[error("invalid character '{found}' at column {column}")]
    InvalidCharacter { column: usize, found: char },
}

/// A fixed-length sequence over {+1, −1}. Length is always ≥ 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinarySequence {
    entries: Vec<Sign>,
}

impl BinarySequence {
    pub fn new(entries: Vec<Sign>) -> Result<Self, SequenceError> {
        if entries.is_empty() {
            return Err(SequenceError::Empty);
        }
        Ok(BinarySequence { entries })
    }

    /// Builds a sequence from raw integers, rejecting anything outside {+1, −1}.
    pub fn from_values(values: &[i64]) -> Result<Self, SequenceError> {
        if values.is_empty() {
            return Err(SequenceError::Empty);
        }
        let entries = values
            .iter()
            .enumerate()
            .map(|(index, &value)| {
                Sign::from_value(value).ok_or(SequenceError::NonUnitEntry { index, value })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BinarySequence { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        // Never true: construction rejects empty sequences.
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Sign] {
        &self.entries
    }

    /// Entry at index `k` (must be in range).
    pub fn entry(&self, k: usize) -> Sign {
        self.entries[k]
    }

    fn wrap(&self, idx: i64) -> usize {
        idx.rem_euclid(self.len() as i64) as usize
    }

    /// Entrywise negation.
    pub fn negate(&self) -> Self {
        BinarySequence {
            entries: self.entries.iter().map(|s| s.flip()).collect(),
        }
    }

    /// Cyclic shift: entry `j` of the result is entry `(j + k) mod n` of `self`.
    /// Negative offsets rotate the other way.
    pub fn rotate(&self, k: i64) -> Self {
        let n = self.len();
        let shift = self.wrap(k);
        let entries = (0..n).map(|j| self.entries[(j + shift) % n]).collect();
        BinarySequence { entries }
    }

    /// Perfect shuffle of two equal-length sequences: the result has length 2n
    /// with entries of `self` at even positions and entries of `other` at odd
    /// positions.
    pub fn interleave(&self, other: &Self) -> Result<Self, SequenceError> {
        if self.len() != other.len() {
            return Err(SequenceError::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        let mut entries = Vec::with_capacity(2 * self.len());
        for (&a, &b) in self.entries.iter().zip(&other.entries) {
            entries.push(a);
            entries.push(b);
        }
        Ok(BinarySequence { entries })
    }

    /// The rotation by `(n+1)/2` of an odd-length sequence.
    ///
    /// For a symmetric input this is the unique rotation that yields a
    /// palindromic result (`y_k = y_{n-1-k}`), which is what makes the
    /// interleaved halves of a doubled quad symmetric. Preserves the PAF at
    /// every shift, like any rotation.
    pub fn half_rotate(&self) -> Result<Self, SequenceError> {
        let n = self.len();
        if n % 2 == 0 {
            return Err(SequenceError::EvenLength { len: n });
        }
        Ok(self.rotate(((n + 1) / 2) as i64))
    }

    /// True iff `x_k = x_{n-k}` for `k = 1..n-1` (the first entry is free).
    pub fn is_symmetric(&self) -> bool {
        let n = self.len();
        (1..n).all(|k| self.entries[k] == self.entries[n - k])
    }

    /// True iff `y_k = y_{n-1-k}` for all `k` (reads the same reversed).
    pub fn is_palindromic(&self) -> bool {
        let n = self.len();
        (0..n).all(|k| self.entries[k] == self.entries[n - 1 - k])
    }

    /// Sum of all entries.
    pub fn row_sum(&self) -> i64 {
        self.entries.iter().map(|s| s.value()).sum()
    }

    /// Periodic cross-correlation with `other` at shift `s`:
    /// `Σ_k x_k · y_{(k+s) mod n}`, exact.
    pub fn pcf(&self, other: &Self, s: i64) -> Result<i64, SequenceError> {
        if self.len() != other.len() {
            return Err(SequenceError::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        let n = self.len();
        let shift = self.wrap(s);
        let sum = (0..n)
            .map(|k| self.entries[k].value() * other.entries[(k + shift) % n].value())
            .sum();
        Ok(sum)
    }

    /// Periodic autocorrelation at shift `s`.
    pub fn paf(&self, s: i64) -> i64 {
        self.pcf(self, s).expect("equal lengths")
    }

    /// All PAF values for shifts `0..n`.
    pub fn paf_spectrum(&self) -> CorrelationSpectrum {
        let n = self.len();
        CorrelationSpectrum {
            values: (0..n).map(|s| self.paf(s as i64)).collect(),
        }
    }
}

impl fmt::Display for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.entries {
            f.write_str(match s {
                Sign::Plus => "+",
                Sign::Minus => "-",
            })?;
        }
        Ok(())
    }
}

impl FromStr for BinarySequence {
    type Err = SequenceError;

    /// Parses the text encoding: one '+' or '-' per entry, index 0 leftmost.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() {
            return Err(SequenceError::Empty);
        }
        let entries = s
            .chars()
            .enumerate()
            .map(|(i, c)| {
                Sign::from_char(c).ok_or(SequenceError::InvalidCharacter {
                    column: i + 1,
                    found: c,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BinarySequence { entries })
    }
}

/// Exact PAF values of a sequence, indexed by shift `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrelationSpectrum {
    values: Vec<i64>,
}

impl CorrelationSpectrum {
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value at shift `s`, taken modulo the sequence length.
    pub fn value(&self, s: i64) -> i64 {
        let n = self.values.len() as i64;
        self.values[s.rem_euclid(n) as usize]
    }
}

impl fmt::Display for CorrelationSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seq(text: &str) -> BinarySequence {
        text.parse().unwrap()
    }

    #[test]
    fn from_values_validates_entries() {
        let s = BinarySequence::from_values(&[1, -1, -1]).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.to_string(), "+--");

        assert_eq!(
            BinarySequence::from_values(&[1, 0, -1]),
            Err(SequenceError::NonUnitEntry { index: 1, value: 0 })
        );
        assert_eq!(BinarySequence::from_values(&[]), Err(SequenceError::Empty));
    }

    #[test]
    fn parse_rejects_bad_characters() {
        assert_eq!("".parse::<BinarySequence>(), Err(SequenceError::Empty));
        assert_eq!(
            "+0-".parse::<BinarySequence>(),
            Err(SequenceError::InvalidCharacter {
                column: 2,
                found: '0'
            })
        );
    }

    #[test]
    fn negate_flips_every_entry() {
        assert_eq!(seq("++-").negate(), seq("--+"));
        assert_eq!(seq("+").negate(), seq("-"));
        assert_eq!(seq("+-+").negate().negate(), seq("+-+"));
    }

    #[test]
    fn rotate_matches_cyclic_shift() {
        // rotate((a0,a1,a2), 1) = (a1,a2,a0)
        assert_eq!(seq("+--").rotate(1), seq("--+"));
        assert_eq!(seq("+--").rotate(0), seq("+--"));
        assert_eq!(seq("+--").rotate(3), seq("+--"));
        assert_eq!(seq("+--").rotate(-1), seq("-+-"));
        assert_eq!(seq("+--").rotate(-1), seq("+--").rotate(2));
    }

    #[test]
    fn interleave_is_a_perfect_shuffle() {
        assert_eq!(seq("++").interleave(&seq("--")).unwrap(), seq("+-+-"));
        let a = seq("+-");
        let b = seq("-+");
        // (a0,b0,a1,b1)
        assert_eq!(a.interleave(&b).unwrap(), seq("+--+"));
        assert!(matches!(
            seq("+").interleave(&seq("++")),
            Err(SequenceError::LengthMismatch { left: 1, right: 2 })
        ));
    }

    #[test]
    fn half_rotate_examples() {
        // The unique rotation of "+--" satisfying y_k = y_{n-1-k}.
        assert_eq!(seq("+--").half_rotate().unwrap(), seq("-+-"));
        assert_eq!(seq("+").half_rotate().unwrap(), seq("+"));
        assert!(matches!(
            seq("+-").half_rotate(),
            Err(SequenceError::EvenLength { len: 2 })
        ));
    }

    #[test]
    fn half_rotate_is_the_palindromic_rotation() {
        // For n=3 check all rotations: only the half-rotation is palindromic.
        let a = seq("+--");
        let palindromic: Vec<_> = (0..3).map(|k| a.rotate(k)).filter(|r| r.is_palindromic()).collect();
        assert_eq!(palindromic, vec![a.half_rotate().unwrap()]);
    }

    #[test]
    fn pcf_examples() {
        assert_eq!(seq("++-").pcf(&seq("+-+"), 1).unwrap(), -1);
        let x = seq("+-+-+");
        assert_eq!(x.pcf(&x, 0).unwrap(), 5);
        assert!(seq("++").pcf(&seq("+"), 0).is_err());
    }

    #[test]
    fn paf_examples() {
        assert_eq!(seq("+++").paf(1), 3);
        assert_eq!(seq("+--").paf(1), -1);
        assert_eq!(seq("+--").paf(0), 3);
    }

    #[test]
    fn paf_spectrum_examples() {
        assert_eq!(seq("+++").paf_spectrum().values(), &[3, 3, 3]);
        assert_eq!(seq("+--").paf_spectrum().values(), &[3, -1, -1]);
    }

    #[test]
    fn symmetry_and_palindromicity() {
        assert!(seq("+--").is_symmetric());
        assert!(!seq("++-").is_symmetric());
        assert!(seq("+").is_symmetric());
        assert!(seq("+-").is_symmetric());
        assert!(seq("--").is_symmetric());

        assert!(seq("-+-").is_palindromic());
        assert!(!seq("+--").is_palindromic());
    }

    #[test]
    fn row_sum_examples() {
        assert_eq!(seq("+++").row_sum(), 3);
        assert_eq!(seq("+--").row_sum(), -1);
        assert_eq!(seq("+--").negate().row_sum(), 1);
    }

    #[test]
    fn sign_text_order() {
        assert!(Sign::Plus < Sign::Minus);
        assert!(seq("+++") < seq("+--"));
        assert!(seq("+--") < seq("-++"));
    }

    fn arb_seq(max_len: usize) -> impl Strategy<Value = BinarySequence> {
        prop::collection::vec(any::<bool>(), 1..=max_len).prop_map(|bits| {
            BinarySequence::new(
                bits.iter()
                    .map(|&b| if b { Sign::Plus } else { Sign::Minus })
                    .collect(),
            )
            .unwrap()
        })
    }

    fn arb_pair(max_len: usize) -> impl Strategy<Value = (BinarySequence, BinarySequence)> {
        (1..=max_len).prop_flat_map(|n| {
            let one = prop::collection::vec(any::<bool>(), n).prop_map(|bits| {
                BinarySequence::new(
                    bits.iter()
                        .map(|&b| if b { Sign::Plus } else { Sign::Minus })
                        .collect(),
                )
                .unwrap()
            });
            (one.clone(), one)
        })
    }

    proptest! {
        #[test]
        fn prop_paf_negation_invariant((a, _) in arb_pair(32), s in -64i64..64) {
            prop_assert_eq!(a.negate().paf(s), a.paf(s));
        }

        #[test]
        fn prop_paf_rotation_invariant(a in arb_seq(32), k in -64i64..64, s in -64i64..64) {
            prop_assert_eq!(a.rotate(k).paf(s), a.paf(s));
        }

        #[test]
        fn prop_pcf_reversal((x, y) in arb_pair(32), s in 0i64..32) {
            let n = x.len() as i64;
            prop_assert_eq!(x.pcf(&y, s).unwrap(), y.pcf(&x, (n - s).rem_euclid(n)).unwrap());
        }

        #[test]
        fn prop_paf_parity(a in arb_seq(32), s in -64i64..64) {
            // PAF values have the same parity as n.
            prop_assert_eq!(a.paf(s).rem_euclid(2), (a.len() as i64).rem_euclid(2));
        }

        #[test]
        fn prop_spectrum_shift_symmetry(a in arb_seq(32)) {
            let spec = a.paf_spectrum();
            let n = a.len();
            prop_assert_eq!(spec.values()[0], n as i64);
            for s in 1..n {
                prop_assert_eq!(spec.values()[s], spec.values()[n - s]);
            }
        }

        #[test]
        fn prop_interleave_paf_identity((a, b) in arb_pair(32)) {
            let z = a.interleave(&b).unwrap();
            let n = a.len() as i64;
            for s in 0..2 * n {
                let expected = if s % 2 == 0 {
                    a.paf(s / 2) + b.paf(s / 2)
                } else {
                    a.pcf(&b, (s - 1) / 2).unwrap() + b.pcf(&a, (s + 1) / 2).unwrap()
                };
                prop_assert_eq!(z.paf(s), expected);
            }
        }

        #[test]
        fn prop_interleave_symmetric_iff_sym_and_palindromic((a, b) in arb_pair(16)) {
            let z = a.interleave(&b).unwrap();
            prop_assert_eq!(z.is_symmetric(), a.is_symmetric() && b.is_palindromic());
        }

        #[test]
        fn prop_half_rotate_palindromic_on_symmetric(a in arb_seq(16)) {
            // Mirror the free prefix to force symmetry, keep the length odd.
            let n = if a.len() % 2 == 0 { a.len() - 1 } else { a.len() };
            if n >= 1 {
                let mut entries: Vec<Sign> = a.entries()[..n].to_vec();
                for k in (n + 1) / 2..n {
                    entries[k] = entries[n - k];
                }
                let sym = BinarySequence::new(entries).unwrap();
                prop_assert!(sym.is_symmetric());
                let rotated = sym.half_rotate().unwrap();
                prop_assert!(rotated.is_palindromic());
                prop_assert_eq!(rotated.paf_spectrum(), sym.paf_spectrum());
            }
        }

        #[test]
        fn prop_text_round_trip(a in arb_seq(32)) {
            let text = a.to_string();
            prop_assert_eq!(text.parse::<BinarySequence>().unwrap(), a);
        }
    }
}
