//! Williamson quads: the four-sequence abstraction, the sequence-level
//! verification criterion, and the order-doubling construction.
//!
//! Four symmetric ±1 sequences of length `n` are Williamson sequences exactly
//! when their PAFs sum to zero at every shift `s = 1..⌊n/2⌋`. For odd `n`,
//! [`WilliamsonQuad::double`] produces a Williamson quad of order `2n` from
//! one of order `n` using only negation, rotation, and interleaving.

use std::fmt;

use thiserror::Error;

use crate::seq::{BinarySequence, SequenceError};

/// Position of a sequence within a quad.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QuadRow {
    A,
    B,
    C,
    D,
}

impl QuadRow {
    pub const ALL: [QuadRow; 4] = [QuadRow::A, QuadRow::B, QuadRow::C, QuadRow::D];

    pub fn index(self) -> usize {
        match self {
            QuadRow::A => 0,
            QuadRow::B => 1,
            QuadRow::C => 2,
            QuadRow::D => 3,
        }
    }

    pub fn label(self) -> char {
        match self {
            QuadRow::A => 'a',
            QuadRow::B => 'b',
            QuadRow::C => 'c',
            QuadRow::D => 'd',
        }
    }
}

impl fmt::Display for QuadRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuadError {
    #[error(transparent)]
    Sequence(#[from] SequenceError),
    #[error("quad sequences must have equal length: {lengths:?}")]
    UnequalLengths { lengths: [usize; 4] },
    #[error("doubling requires odd order, got {order}")]
    EvenOrder { order: usize },
    #[error("input is not a Williamson quad")]
    NotWilliamson { report: VerificationReport },
}

/// An ordered 4-tuple of equal-length ±1 sequences.
///
/// A quad is a *candidate* until [`verify`](WilliamsonQuad::verify) certifies
/// it. The order of the four sequences matters: doubling pairs the first with
/// the second and the third with the fourth.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WilliamsonQuad {
    rows: [BinarySequence; 4],
}

impl WilliamsonQuad {
    pub fn new(
        a: BinarySequence,
        b: BinarySequence,
        c: BinarySequence,
        d: BinarySequence,
    ) -> Result<Self, QuadError> {
        let lengths = [a.len(), b.len(), c.len(), d.len()];
        if lengths.iter().any(|&l| l != lengths[0]) {
            return Err(QuadError::UnequalLengths { lengths });
        }
        Ok(WilliamsonQuad {
            rows: [a, b, c, d],
        })
    }

    /// Parses four '+'/'-' strings of equal length.
    pub fn from_rows(rows: [&str; 4]) -> Result<Self, QuadError> {
        let a = rows[0].parse::<BinarySequence>()?;
        let b = rows[1].parse::<BinarySequence>()?;
        let c = rows[2].parse::<BinarySequence>()?;
        let d = rows[3].parse::<BinarySequence>()?;
        WilliamsonQuad::new(a, b, c, d)
    }

    pub fn order(&self) -> usize {
        self.rows[0].len()
    }

    pub fn rows(&self) -> &[BinarySequence; 4] {
        &self.rows
    }

    pub fn row(&self, which: QuadRow) -> &BinarySequence {
        &self.rows[which.index()]
    }

    /// Sum of the four PAFs at shift `s`.
    pub fn paf_sum(&self, s: i64) -> i64 {
        self.rows.iter().map(|r| r.paf(s)).sum()
    }

    /// Checks the Williamson criterion: every sequence symmetric and
    /// `paf_sum(s) = 0` for `s = 1..⌊n/2⌋`. All violations are reported, not
    /// just the first.
    pub fn verify(&self) -> VerificationReport {
        let n = self.order();
        let mut symmetry_failures = Vec::new();
        for which in QuadRow::ALL {
            let row = self.row(which);
            for k in 1..n {
                if row.entry(k) != row.entry(n - k) {
                    symmetry_failures.push(SymmetryFailure { row: which, index: k });
                }
            }
        }
        let mut paf_violations = Vec::new();
        for s in 1..=n / 2 {
            let sum = self.paf_sum(s as i64);
            if sum != 0 {
                paf_violations.push(PafViolation { shift: s, sum });
            }
        }

        // The half-range criterion decides the full range by PAF shift symmetry.
        #[cfg(debug_assertions)]
        {
            let full_range_zero = (1..n).all(|s| self.paf_sum(s as i64) == 0);
            debug_assert_eq!(paf_violations.is_empty(), full_range_zero);
        }

        VerificationReport {
            order: n,
            symmetry_failures,
            paf_violations,
        }
    }

    /// The order-doubling construction: from a Williamson quad `(A, B, C, D)`
    /// of odd order `n`, returns `(A⋈B′, (−A)⋈B′, C⋈D′, (−C)⋈D′)` of order
    /// `2n`, where `′` is the half-rotation and `⋈` the perfect shuffle.
    ///
    /// The input is re-verified; it cannot be applied twice in a row because
    /// the doubled order is even.
    pub fn double(&self) -> Result<WilliamsonQuad, QuadError> {
        let n = self.order();
        if n % 2 == 0 {
            return Err(QuadError::EvenOrder { order: n });
        }
        let report = self.verify();
        if !report.is_williamson() {
            return Err(QuadError::NotWilliamson { report });
        }
        let [a, b, c, d] = &self.rows;
        let b2 = b.half_rotate()?;
        let d2 = d.half_rotate()?;
        Ok(WilliamsonQuad {
            rows: [
                a.interleave(&b2)?,
                a.negate().interleave(&b2)?,
                c.interleave(&d2)?,
                c.negate().interleave(&d2)?,
            ],
        })
    }

    /// Sign-normalizes each sequence to start with '+' (negation preserves
    /// every PAF), then sorts the four sequences in text order. Idempotent;
    /// used for deduplication and reporting, never before doubling.
    pub fn normalize(&self) -> WilliamsonQuad {
        let mut rows = self.rows.clone().map(|r| {
            if r.entry(0) == crate::seq::Sign::Minus {
                r.negate()
            } else {
                r
            }
        });
        rows.sort();
        WilliamsonQuad { rows }
    }
}

impl fmt::Display for WilliamsonQuad {
    /// The quad text format: four lines of '+'/'-' strings.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

/// A symmetry violation: `row[index] != row[n - index]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymmetryFailure {
    pub row: QuadRow,
    pub index: usize,
}

/// A nonzero PAF sum at a shift where the criterion requires zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PafViolation {
    pub shift: usize,
    pub sum: i64,
}

/// Complete outcome of a quad verification. The quad is Williamson iff both
/// violation lists are empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub order: usize,
    pub symmetry_failures: Vec<SymmetryFailure>,
    pub paf_violations: Vec<PafViolation>,
}

impl VerificationReport {
    pub fn is_williamson(&self) -> bool {
        self.symmetry_failures.is_empty() && self.paf_violations.is_empty()
    }
}
