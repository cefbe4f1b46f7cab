//! Circulant expansion and Hadamard matrices.
//!
//! A Williamson quad can equivalently be checked at the matrix level: the
//! four circulant expansions must satisfy `A² + B² + C² + D² = 4n·I`. The
//! quad then assembles into a Hadamard matrix of order `4n` via a fixed 4×4
//! signed block template. All arithmetic is exact integer arithmetic.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::quad::{QuadRow, WilliamsonQuad};
use crate::seq::{BinarySequence, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix identity requires symmetric sequences ({row} is not symmetric)")]
    NotSymmetric { row: QuadRow },
    #[error("input is not a Williamson quad")]
    NotWilliamson,
    #[error("matrix rows must be '+'/'-' strings forming a square")]
    Malformed,
}

/// A dense square matrix over {+1, −1}, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareMatrix {
    order: usize,
    entries: Vec<Sign>,
}

impl SquareMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entry(&self, row: usize, col: usize) -> Sign {
        self.entries[row * self.order + col]
    }

    pub fn value(&self, row: usize, col: usize) -> i64 {
        self.entry(row, col).value()
    }

    /// Row as its '+'/'-' text encoding.
    pub fn row_text(&self, row: usize) -> String {
        (0..self.order)
            .map(|col| self.entry(row, col).to_char())
            .collect()
    }

    /// All rows in text encoding.
    pub fn rows_text(&self) -> Vec<String> {
        (0..self.order).map(|r| self.row_text(r)).collect()
    }

    /// True iff `M·Mᵀ = m·I`, i.e. the rows are pairwise orthogonal and of
    /// squared norm `m`.
    pub fn is_hadamard(&self) -> bool {
        let m = self.order;
        for i in 0..m {
            for j in i..m {
                let dot: i64 = (0..m).map(|k| self.value(i, k) * self.value(j, k)).sum();
                let expected = if i == j { m as i64 } else { 0 };
                if dot != expected {
                    return false;
                }
            }
        }
        true
    }

    /// True iff the matrix equals its transpose.
    pub fn is_symmetric(&self) -> bool {
        let m = self.order;
        (0..m).all(|i| (0..m).all(|j| self.entry(i, j) == self.entry(j, i)))
    }
}

impl fmt::Display for SquareMatrix {
    /// The matrix text format: `m` lines of '+'/'-' strings of length `m`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.order {
            writeln!(f, "{}", self.row_text(r))?;
        }
        Ok(())
    }
}

impl FromStr for SquareMatrix {
    type Err = MatrixError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let rows: Vec<&str> = s.lines().filter(|l| !l.trim().is_empty()).collect();
        let order = rows.len();
        if order == 0 {
            return Err(MatrixError::Malformed);
        }
        let mut entries = Vec::with_capacity(order * order);
        for row in rows {
            if row.chars().count() != order {
                return Err(MatrixError::Malformed);
            }
            for c in row.chars() {
                entries.push(Sign::from_char(c).ok_or(MatrixError::Malformed)?);
            }
        }
        Ok(SquareMatrix { order, entries })
    }
}

/// The circulant expansion of a sequence: row `i`, column `j` holds entry
/// `(j − i) mod n`, so row 0 is the sequence itself and every later row is
/// the previous one shifted right.
pub fn circulant(seq: &BinarySequence) -> SquareMatrix {
    let n = seq.len();
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let k = (j as i64 - i as i64).rem_euclid(n as i64) as usize;
            entries.push(seq.entry(k));
        }
    }
    SquareMatrix { order: n, entries }
}

/// Checks `A² + B² + C² + D² = 4n·I` over the circulant expansions, in exact
/// integer arithmetic. Requires every sequence symmetric so the squared form
/// applies.
pub fn matrix_identity_check(quad: &WilliamsonQuad) -> Result<bool, MatrixError> {
    for which in QuadRow::ALL {
        if !quad.row(which).is_symmetric() {
            return Err(MatrixError::NotSymmetric { row: which });
        }
    }
    let n = quad.order();
    let mut total = vec![0i64; n * n];
    for row in quad.rows() {
        let m = circulant(row);
        for i in 0..n {
            for j in 0..n {
                let dot: i64 = (0..n).map(|k| m.value(i, k) * m.value(k, j)).sum();
                total[i * n + j] += dot;
            }
        }
    }
    let ok = (0..n).all(|i| {
        (0..n).all(|j| {
            let expected = if i == j { 4 * n as i64 } else { 0 };
            total[i * n + j] == expected
        })
    });
    Ok(ok)
}

// Block template assembling four circulants into a 4n×4n matrix:
//   [  A   B   C   D ]
//   [ -B   A  -D   C ]
//   [ -C   D   A  -B ]
//   [ -D  -C   B   A ]
const BLOCK_TEMPLATE: [[(QuadRow, bool); 4]; 4] = [
    [
        (QuadRow::A, false),
        (QuadRow::B, false),
        (QuadRow::C, false),
        (QuadRow::D, false),
    ],
    [
        (QuadRow::B, true),
        (QuadRow::A, false),
        (QuadRow::D, true),
        (QuadRow::C, false),
    ],
    [
        (QuadRow::C, true),
        (QuadRow::D, false),
        (QuadRow::A, false),
        (QuadRow::B, true),
    ],
    [
        (QuadRow::D, true),
        (QuadRow::C, true),
        (QuadRow::B, false),
        (QuadRow::A, false),
    ],
];

/// Expands a verified Williamson quad into the 4n×4n Hadamard matrix given by
/// the signed block template above. Fails if the quad does not verify.
pub fn williamson_array(quad: &WilliamsonQuad) -> Result<SquareMatrix, MatrixError> {
    if !quad.verify().is_williamson() {
        return Err(MatrixError::NotWilliamson);
    }
    let n = quad.order();
    let m = 4 * n;
    let blocks: Vec<Vec<SquareMatrix>> = BLOCK_TEMPLATE
        .iter()
        .map(|row| {
            row.iter()
                .map(|&(which, negated)| {
                    let seq = if negated {
                        quad.row(which).negate()
                    } else {
                        quad.row(which).clone()
                    };
                    circulant(&seq)
                })
                .collect()
        })
        .collect();
    let mut entries = vec![Sign::Plus; m * m];
    for (bi, block_row) in blocks.iter().enumerate() {
        for (bj, block) in block_row.iter().enumerate() {
            for r in 0..n {
                for c in 0..n {
                    entries[(bi * n + r) * m + (bj * n + c)] = block.entry(r, c);
                }
            }
        }
    }
    Ok(SquareMatrix { order: m, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::enumerate_symmetric;

    fn seq(text: &str) -> BinarySequence {
        text.parse().unwrap()
    }

    fn quad(rows: [&str; 4]) -> WilliamsonQuad {
        WilliamsonQuad::from_rows(rows).unwrap()
    }

    #[test]
    fn circulant_of_plus_minus_minus() {
        let m = circulant(&seq("+--"));
        assert_eq!(m.rows_text(), vec!["+--", "-+-", "--+"]);
    }

    #[test]
    fn circulant_of_length_one() {
        let m = circulant(&seq("-"));
        assert_eq!(m.order(), 1);
        assert_eq!(m.rows_text(), vec!["-"]);
    }

    #[test]
    fn circulant_symmetric_iff_sequence_symmetric() {
        for n in (1..=8).step_by(1) {
            for bits in 0u32..1 << n {
                let entries: Vec<Sign> = (0..n)
                    .map(|k| {
                        if bits >> k & 1 == 0 {
                            Sign::Plus
                        } else {
                            Sign::Minus
                        }
                    })
                    .collect();
                let s = BinarySequence::new(entries).unwrap();
                assert_eq!(circulant(&s).is_symmetric(), s.is_symmetric());
            }
        }
    }

    #[test]
    fn circulant_of_rotation_is_row_permutation() {
        let a = seq("++--+-+");
        let base = circulant(&a);
        for k in 0..a.len() as i64 {
            let rotated = circulant(&a.rotate(k));
            let mut rows_a = base.rows_text();
            let mut rows_b = rotated.rows_text();
            rows_a.sort();
            rows_b.sort();
            assert_eq!(rows_a, rows_b);
        }
    }

    #[test]
    fn identity_check_examples() {
        assert!(matrix_identity_check(&quad(["+++", "+--", "+--", "+--"])).unwrap());
        assert!(matrix_identity_check(&quad(["+", "+", "+", "+"])).unwrap());
        assert!(!matrix_identity_check(&quad(["+++", "+++", "+++", "+++"])).unwrap());
    }

    #[test]
    fn identity_check_requires_symmetric_sequences() {
        let err = matrix_identity_check(&quad(["++-", "+--", "+--", "+--"])).unwrap_err();
        assert_eq!(err, MatrixError::NotSymmetric { row: QuadRow::A });
    }

    #[test]
    fn williamson_array_order_one() {
        let m = williamson_array(&quad(["+", "+", "+", "+"])).unwrap();
        assert_eq!(m.rows_text(), vec!["++++", "-+-+", "-++-", "--++"]);
        assert!(m.is_hadamard());
    }

    #[test]
    fn williamson_array_order_three() {
        let m = williamson_array(&quad(["+++", "+--", "+--", "+--"])).unwrap();
        assert_eq!(m.order(), 12);
        assert!(m.is_hadamard());
    }

    #[test]
    fn williamson_array_rejects_non_williamson() {
        let err = williamson_array(&quad(["+++", "+++", "+++", "+++"])).unwrap_err();
        assert_eq!(err, MatrixError::NotWilliamson);
    }

    #[test]
    fn is_hadamard_examples() {
        let order2: SquareMatrix = "++\n+-".parse().unwrap();
        assert!(order2.is_hadamard());
        let ones: SquareMatrix = "++\n++".parse().unwrap();
        assert!(!ones.is_hadamard());
    }

    #[test]
    fn matrix_text_round_trip() {
        let m = williamson_array(&quad(["+", "+", "+", "+"])).unwrap();
        let text = m.to_string();
        let parsed: SquareMatrix = text.parse().unwrap();
        assert_eq!(parsed, m);
    }

    // Definition equivalence on all 256 symmetric order-3 quads: the matrix
    // identity agrees with the sequence-level criterion.
    #[test]
    fn matrix_and_sequence_criteria_agree_order_three() {
        let seqs: Vec<BinarySequence> = enumerate_symmetric(3).unwrap().collect();
        assert_eq!(seqs.len(), 4);
        let mut checked = 0;
        for a in &seqs {
            for b in &seqs {
                for c in &seqs {
                    for d in &seqs {
                        let q = WilliamsonQuad::new(a.clone(), b.clone(), c.clone(), d.clone())
                            .unwrap();
                        assert_eq!(
                            matrix_identity_check(&q).unwrap(),
                            q.verify().is_williamson()
                        );
                        checked += 1;
                    }
                }
            }
        }
        assert_eq!(checked, 256);
    }
}
