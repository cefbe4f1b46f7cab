//! Machine-readable mirrors of the CLI outputs.
//!
//! Every command can emit one JSON document instead of its human-readable
//! text. The documents round-trip: parsing and re-serializing one yields
//! byte-identical output, which is what the golden-file tests rely on.

use serde::{Deserialize, Serialize};

use crate::matrix::SquareMatrix;
use crate::quad::{QuadError, VerificationReport, WilliamsonQuad};
use crate::search::SearchReport;

/// A quad as four '+'/'-' row strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadDoc {
    pub order: usize,
    pub rows: [String; 4],
}

impl From<&WilliamsonQuad> for QuadDoc {
    fn from(quad: &WilliamsonQuad) -> Self {
        let rows = quad.rows();
        QuadDoc {
            order: quad.order(),
            rows: [
                rows[0].to_string(),
                rows[1].to_string(),
                rows[2].to_string(),
                rows[3].to_string(),
            ],
        }
    }
}

impl TryFrom<&QuadDoc> for WilliamsonQuad {
    type Error = QuadError;

    fn try_from(doc: &QuadDoc) -> Result<Self, Self::Error> {
        WilliamsonQuad::from_rows([
            doc.rows[0].as_str(),
            doc.rows[1].as_str(),
            doc.rows[2].as_str(),
            doc.rows[3].as_str(),
        ])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryFailureDoc {
    pub sequence: char,
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PafViolationDoc {
    pub shift: usize,
    pub sum: i64,
}

/// Verdict for one quad, with every violation listed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadVerdictDoc {
    pub order: usize,
    pub is_williamson: bool,
    pub symmetry_failures: Vec<SymmetryFailureDoc>,
    pub paf_violations: Vec<PafViolationDoc>,
}

impl From<&VerificationReport> for QuadVerdictDoc {
    fn from(report: &VerificationReport) -> Self {
        QuadVerdictDoc {
            order: report.order,
            is_williamson: report.is_williamson(),
            symmetry_failures: report
                .symmetry_failures
                .iter()
                .map(|f| SymmetryFailureDoc {
                    sequence: f.row.label(),
                    index: f.index,
                })
                .collect(),
            paf_violations: report
                .paf_violations
                .iter()
                .map(|v| PafViolationDoc {
                    shift: v.shift,
                    sum: v.sum,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub quads: Vec<QuadVerdictDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleDoc {
    pub quads: Vec<QuadDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchDoc {
    pub order: usize,
    pub candidates_examined: u64,
    pub raw_count: u64,
    pub normalized_count: usize,
    pub elapsed_ms: u64,
    pub quads: Vec<QuadDoc>,
}

impl From<&SearchReport> for SearchDoc {
    fn from(report: &SearchReport) -> Self {
        SearchDoc {
            order: report.order,
            candidates_examined: report.candidates_examined,
            raw_count: report.raw_count,
            normalized_count: report.quads.len(),
            elapsed_ms: report.elapsed.as_millis() as u64,
            quads: report.quads.iter().map(QuadDoc::from).collect(),
        }
    }
}

/// A square ±1 matrix as row strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub order: usize,
    pub rows: Vec<String>,
}

impl From<&SquareMatrix> for MatrixDoc {
    fn from(matrix: &SquareMatrix) -> Self {
        MatrixDoc {
            order: matrix.order(),
            rows: matrix.rows_text(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HadamardDoc {
    pub matrices: Vec<MatrixDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumDoc {
    pub length: usize,
    pub values: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectraDoc {
    pub spectra: Vec<SpectrumDoc>,
}

/// Renders a document the way the CLI does: pretty JSON plus a trailing
/// newline.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("documents are serializable");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quad_doc_round_trips_through_json() {
        let quad = WilliamsonQuad::from_rows(["+++", "+--", "+--", "+--"]).unwrap();
        let doc = QuadDoc::from(&quad);
        let json = to_json(&doc);
        let reparsed: QuadDoc = serde_json::from_str(&json).unwrap();
        assert_eq!(reparsed, doc);
        assert_eq!(to_json(&reparsed), json);
        assert_eq!(WilliamsonQuad::try_from(&reparsed).unwrap(), quad);
    }

    #[test]
    fn verdict_doc_reflects_report() {
        let quad = WilliamsonQuad::from_rows(["+++", "+++", "+++", "+++"]).unwrap();
        let doc = QuadVerdictDoc::from(&quad.verify());
        assert!(!doc.is_williamson);
        assert_eq!(doc.paf_violations, vec![PafViolationDoc { shift: 1, sum: 12 }]);
    }
}
