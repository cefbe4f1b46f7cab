//! Williamson sequences: exact periodic correlation, verification, the
//! odd-order doubling construction, Hadamard-matrix expansion, and an
//! exhaustive search oracle for small odd orders.
//!
//! Four symmetric ±1 sequences of length `n` whose periodic autocorrelations
//! sum to zero at every shift `1..⌊n/2⌋` are Williamson sequences; their
//! circulant expansions satisfy `A² + B² + C² + D² = 4n·I` and assemble into
//! a Hadamard matrix of order `4n`. For odd `n`, a Williamson quad of order
//! `2n` is obtained from one of order `n` with three sequence operations:
//!
//! ```
//! use williamson::WilliamsonQuad;
//!
//! let quad = WilliamsonQuad::from_rows(["+++", "+--", "+--", "+--"]).unwrap();
//! let doubled = quad.double().unwrap();
//! assert_eq!(doubled.order(), 6);
//! assert!(doubled.verify().is_williamson());
//! // The doubled order is even, so doubling cannot be applied twice.
//! assert!(doubled.double().is_err());
//! ```
//!
//! Everything is exact integer arithmetic; there is no floating point in the
//! crate.

pub mod bits;
pub mod machine;
pub mod matrix;
pub mod quad;
pub mod search;
pub mod seq;
pub mod text;

pub use matrix::{circulant, matrix_identity_check, williamson_array, MatrixError, SquareMatrix};
pub use quad::{
    PafViolation, QuadError, QuadRow, SymmetryFailure, VerificationReport, WilliamsonQuad,
};
pub use search::{
    enumerate_symmetric, search_williamson, sum_of_squares_filter, SearchError, SearchOptions,
    SearchReport,
};
pub use seq::{BinarySequence, CorrelationSpectrum, SequenceError, Sign};
pub use text::ParseError;
