//! Text formats shared by the CLI and the file interfaces.
//!
//! A sequence is a '+'/'-' string, index 0 leftmost. A quad is four such
//! lines of equal length. Blank lines and lines starting with `#` are
//! ignored everywhere; multiple quads are separated by a line containing
//! only `----`. Matrices are `m` lines of length-`m` strings.

use thiserror::Error;

use crate::matrix::SquareMatrix;
use crate::quad::WilliamsonQuad;
use crate::seq::{BinarySequence, SequenceError};

/// Parse failure with the 1-based source line (and column where known).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}{}: {message}", column.map(|c| format!(", column {c}")).unwrap_or_default())]
pub struct ParseError {
    pub line: usize,
    pub column: Option<usize>,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column: None,
            message: message.into(),
        }
    }

    fn from_sequence_error(line: usize, err: SequenceError) -> Self {
        let column = match err {
            SequenceError::InvalidCharacter { column, .. } => Some(column),
            _ => None,
        };
        ParseError {
            line,
            column,
            message: err.to_string(),
        }
    }
}

const QUAD_SEPARATOR: &str = "----";

fn is_comment(line: &str) -> bool {
    line.trim_start().starts_with('#')
}

/// Parses a stream of quads. Each quad is exactly four sequence lines;
/// groups with one to three lines are malformed.
pub fn parse_quads(input: &str) -> Result<Vec<WilliamsonQuad>, ParseError> {
    let mut quads = Vec::new();
    // (line number, sequence) pairs of the group being collected.
    let mut group: Vec<(usize, BinarySequence)> = Vec::new();

    let mut close_group = |group: &mut Vec<(usize, BinarySequence)>,
                           line: usize|
     -> Result<(), ParseError> {
        if group.is_empty() {
            return Ok(());
        }
        if group.len() != 4 {
            return Err(ParseError::at(
                line,
                format!("a quad needs exactly 4 sequence lines, found {}", group.len()),
            ));
        }
        let mut rows = group.drain(..);
        let (_, a) = rows.next().unwrap();
        let (_, b) = rows.next().unwrap();
        let (_, c) = rows.next().unwrap();
        let (last_line, d) = rows.next().unwrap();
        drop(rows);
        let quad = WilliamsonQuad::new(a, b, c, d)
            .map_err(|e| ParseError::at(last_line, e.to_string()))?;
        quads.push(quad);
        Ok(())
    };

    let mut last_line = 0;
    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || is_comment(line) {
            continue;
        }
        if line == QUAD_SEPARATOR {
            close_group(&mut group, line_no)?;
            continue;
        }
        if group.len() == 4 {
            return Err(ParseError::at(
                line_no,
                format!("expected '{QUAD_SEPARATOR}' between quads"),
            ));
        }
        let seq: BinarySequence = line
            .parse()
            .map_err(|e| ParseError::from_sequence_error(line_no, e))?;
        group.push((line_no, seq));
    }
    close_group(&mut group, last_line + 1)?;
    Ok(quads)
}

/// Parses one sequence per non-blank, non-comment line.
pub fn parse_sequences(input: &str) -> Result<Vec<BinarySequence>, ParseError> {
    let mut seqs = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || is_comment(line) {
            continue;
        }
        let seq: BinarySequence = line
            .parse()
            .map_err(|e| ParseError::from_sequence_error(idx + 1, e))?;
        seqs.push(seq);
    }
    Ok(seqs)
}

/// Serializes one quad as four lines.
pub fn quad_to_text(quad: &WilliamsonQuad) -> String {
    quad.to_string()
}

/// Serializes quads separated by `----` lines. Parsing this back yields the
/// same quads, and re-serializing yields identical bytes.
pub fn quads_to_text(quads: &[WilliamsonQuad]) -> String {
    let mut out = String::new();
    for (i, quad) in quads.iter().enumerate() {
        if i > 0 {
            out.push_str(QUAD_SEPARATOR);
            out.push('\n');
        }
        out.push_str(&quad_to_text(quad));
    }
    out
}

/// Serializes a matrix as `m` lines of '+'/'-' strings.
pub fn matrix_to_text(matrix: &SquareMatrix) -> String {
    matrix.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_single_quad_with_comments_and_blanks() {
        let input = "# a Williamson quad of order 3\n\n+++\n+--\n\n+--\n+--\n";
        let quads = parse_quads(input).unwrap();
        assert_eq!(quads.len(), 1);
        assert_eq!(quads[0].order(), 3);
    }

    #[test]
    fn parses_multiple_quads() {
        let input = "+\n+\n+\n+\n----\n+++\n+--\n+--\n+--\n";
        let quads = parse_quads(input).unwrap();
        assert_eq!(quads.len(), 2);
        assert_eq!(quads[0].order(), 1);
        assert_eq!(quads[1].order(), 3);
    }

    #[test]
    fn trailing_separator_is_fine() {
        let input = "+\n+\n+\n+\n----\n";
        assert_eq!(parse_quads(input).unwrap().len(), 1);
    }

    #[test]
    fn three_line_group_is_an_error() {
        let err = parse_quads("+++\n+--\n+--\n").unwrap_err();
        assert_eq!(err.line, 4);
        assert!(err.message.contains("4 sequence lines"));
    }

    #[test]
    fn five_sequence_lines_need_a_separator() {
        let err = parse_quads("+\n+\n+\n+\n+\n").unwrap_err();
        assert_eq!(err.line, 5);
        assert!(err.message.contains("between quads"));
    }

    #[test]
    fn bad_character_reports_line_and_column() {
        let err = parse_quads("+++\n+0-\n+--\n+--\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(err.column, Some(2));
        assert_eq!(err.to_string(), "line 2, column 2: invalid character '0' at column 2");
    }

    #[test]
    fn unequal_lengths_report_the_quad() {
        let err = parse_quads("+++\n+--\n+--\n+-\n").unwrap_err();
        assert_eq!(err.line, 4);
        assert!(err.message.contains("equal length"));
    }

    #[test]
    fn quad_text_round_trip() {
        let quads = vec![
            WilliamsonQuad::from_rows(["+", "+", "+", "+"]).unwrap(),
            WilliamsonQuad::from_rows(["+++", "+--", "+--", "+--"]).unwrap(),
        ];
        let text = quads_to_text(&quads);
        let reparsed = parse_quads(&text).unwrap();
        assert_eq!(reparsed, quads);
        assert_eq!(quads_to_text(&reparsed), text);
    }

    #[test]
    fn parse_sequences_reads_lines() {
        let seqs = parse_sequences("# spectra\n+--\n\n+++\n").unwrap();
        assert_eq!(seqs.len(), 2);
        let err = parse_sequences("+x-\n").unwrap_err();
        assert_eq!(err.line, 1);
        assert_eq!(err.column, Some(2));
    }
}
