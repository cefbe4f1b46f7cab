//! C ABI over the williamson crate.
//!
//! Quads and search reports are opaque handles created and freed here;
//! strings returned to the caller are NUL-terminated and must be released
//! with [`wm_string_free`]. Every fallible call returns a [`WmStatus`] and
//! writes its result through an out pointer only on `Ok`.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use williamson::{
    search_williamson, text, williamson_array, SearchOptions, SearchReport, WilliamsonQuad,
};

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WmStatus {
    Ok = 0,
    /// A required pointer argument was NULL.
    NullArgument = 1,
    /// Input text was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Input text did not parse as a sequence or quad.
    ParseError = 3,
    /// The quad fails the Williamson verification criterion.
    NotWilliamson = 4,
    /// The operation requires an odd order.
    EvenOrder = 5,
    /// The order exceeds the configured or hard search limit.
    OrderTooLarge = 6,
    /// Mismatched sequence lengths.
    LengthMismatch = 7,
}

/// Opaque handle to a quad.
pub struct WmQuad {
    inner: WilliamsonQuad,
}

/// Opaque handle to a search report.
pub struct WmSearchReport {
    inner: SearchReport,
}

unsafe fn read_utf8<'a>(text: *const c_char) -> Result<&'a str, WmStatus> {
    if text.is_null() {
        return Err(WmStatus::NullArgument);
    }
    CStr::from_ptr(text).to_str().map_err(|_| WmStatus::InvalidUtf8)
}

fn export_string(s: String) -> *mut c_char {
    // Our text formats never contain NUL bytes.
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Parses exactly one quad (four '+'/'-' lines; `#` comments and blank lines
/// are ignored) and writes a new handle to `out`.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wm_quad_parse(text: *const c_char, out: *mut *mut WmQuad) -> WmStatus {
    if out.is_null() {
        return WmStatus::NullArgument;
    }
    let input = match read_utf8(text) {
        Ok(s) => s,
        Err(status) => return status,
    };
    match text::parse_quads(input) {
        Ok(quads) if quads.len() == 1 => {
            let handle = Box::new(WmQuad {
                inner: quads.into_iter().next().unwrap(),
            });
            *out = Box::into_raw(handle);
            WmStatus::Ok
        }
        _ => WmStatus::ParseError,
    }
}

/// Frees a quad handle. NULL is ignored.
///
/// # Safety
/// `quad` must have been returned by this library and not freed before.
#[no_mangle]
pub unsafe extern "C" fn wm_quad_free(quad: *mut WmQuad) {
    if !quad.is_null() {
        drop(Box::from_raw(quad));
    }
}

/// Order `n` of the quad's sequences; 0 on NULL.
///
/// # Safety
/// `quad` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn wm_quad_order(quad: *const WmQuad) -> u32 {
    quad.as_ref().map_or(0, |q| q.inner.order() as u32)
}

/// Runs the Williamson verification criterion; writes the verdict to
/// `is_williamson`.
///
/// # Safety
/// Both pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn wm_quad_verify(
    quad: *const WmQuad,
    is_williamson: *mut bool,
) -> WmStatus {
    let (Some(quad), false) = (quad.as_ref(), is_williamson.is_null()) else {
        return WmStatus::NullArgument;
    };
    *is_williamson = quad.inner.verify().is_williamson();
    WmStatus::Ok
}

/// Applies the odd-order doubling construction, writing a new handle of
/// order `2n` to `out`.
///
/// # Safety
/// `quad` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wm_quad_double(
    quad: *const WmQuad,
    out: *mut *mut WmQuad,
) -> WmStatus {
    let (Some(quad), false) = (quad.as_ref(), out.is_null()) else {
        return WmStatus::NullArgument;
    };
    match quad.inner.double() {
        Ok(doubled) => {
            *out = Box::into_raw(Box::new(WmQuad { inner: doubled }));
            WmStatus::Ok
        }
        Err(williamson::QuadError::EvenOrder { .. }) => WmStatus::EvenOrder,
        Err(_) => WmStatus::NotWilliamson,
    }
}

/// Writes the sign-normalized, sorted form of the quad to `out`.
///
/// # Safety
/// `quad` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wm_quad_normalize(
    quad: *const WmQuad,
    out: *mut *mut WmQuad,
) -> WmStatus {
    let (Some(quad), false) = (quad.as_ref(), out.is_null()) else {
        return WmStatus::NullArgument;
    };
    *out = Box::into_raw(Box::new(WmQuad {
        inner: quad.inner.normalize(),
    }));
    WmStatus::Ok
}

/// Renders the quad text format (four lines). Free with [`wm_string_free`];
/// NULL on NULL input.
///
/// # Safety
/// `quad` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn wm_quad_to_text(quad: *const WmQuad) -> *mut c_char {
    quad.as_ref()
        .map_or(ptr::null_mut(), |q| export_string(text::quad_to_text(&q.inner)))
}

/// Expands a verified quad into its 4n×4n Hadamard matrix and writes the
/// matrix text format to `out`.
///
/// # Safety
/// `quad` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wm_quad_hadamard_text(
    quad: *const WmQuad,
    out: *mut *mut c_char,
) -> WmStatus {
    let (Some(quad), false) = (quad.as_ref(), out.is_null()) else {
        return WmStatus::NullArgument;
    };
    match williamson_array(&quad.inner) {
        Ok(matrix) => {
            *out = export_string(text::matrix_to_text(&matrix));
            WmStatus::Ok
        }
        Err(_) => WmStatus::NotWilliamson,
    }
}

/// Frees a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must have been returned by this library and not freed before.
#[no_mangle]
pub unsafe extern "C" fn wm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Periodic autocorrelation of a '+'/'-' sequence at the given shift
/// (negative shifts allowed).
///
/// # Safety
/// `sequence` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wm_paf(
    sequence: *const c_char,
    shift: i64,
    out: *mut i64,
) -> WmStatus {
    if out.is_null() {
        return WmStatus::NullArgument;
    }
    let input = match read_utf8(sequence) {
        Ok(s) => s,
        Err(status) => return status,
    };
    match input.parse::<williamson::BinarySequence>() {
        Ok(seq) => {
            *out = seq.paf(shift);
            WmStatus::Ok
        }
        Err(_) => WmStatus::ParseError,
    }
}

/// Periodic cross-correlation of two equal-length '+'/'-' sequences.
///
/// # Safety
/// Both sequence pointers must be valid NUL-terminated strings and `out` a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wm_pcf(
    left: *const c_char,
    right: *const c_char,
    shift: i64,
    out: *mut i64,
) -> WmStatus {
    if out.is_null() {
        return WmStatus::NullArgument;
    }
    let (left, right) = match (read_utf8(left), read_utf8(right)) {
        (Ok(l), Ok(r)) => (l, r),
        (Err(status), _) | (_, Err(status)) => return status,
    };
    let left = match left.parse::<williamson::BinarySequence>() {
        Ok(seq) => seq,
        Err(_) => return WmStatus::ParseError,
    };
    let right = match right.parse::<williamson::BinarySequence>() {
        Ok(seq) => seq,
        Err(_) => return WmStatus::ParseError,
    };
    match left.pcf(&right, shift) {
        Ok(value) => {
            *out = value;
            WmStatus::Ok
        }
        Err(_) => WmStatus::LengthMismatch,
    }
}

/// Writes the full PAF spectrum of a sequence into `values` (capacity
/// `capacity` entries); `written` receives the sequence length. Fails with
/// `OrderTooLarge` when the buffer is too small.
///
/// # Safety
/// `sequence` must be a valid NUL-terminated string; `values` must point to
/// at least `capacity` writable entries; `written` must be valid.
#[no_mangle]
pub unsafe extern "C" fn wm_paf_spectrum(
    sequence: *const c_char,
    values: *mut i64,
    capacity: usize,
    written: *mut usize,
) -> WmStatus {
    if values.is_null() || written.is_null() {
        return WmStatus::NullArgument;
    }
    let input = match read_utf8(sequence) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let seq = match input.parse::<williamson::BinarySequence>() {
        Ok(seq) => seq,
        Err(_) => return WmStatus::ParseError,
    };
    let spectrum = seq.paf_spectrum();
    if spectrum.len() > capacity {
        return WmStatus::OrderTooLarge;
    }
    for (i, &v) in spectrum.values().iter().enumerate() {
        *values.add(i) = v;
    }
    *written = spectrum.len();
    WmStatus::Ok
}

/// Exhaustively searches order `n` and writes a report handle to `out`.
/// `jobs = 0` uses one shard per CPU; `prune = false` routes every tuple
/// through the dense verifier.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wm_search(
    n: u32,
    limit: u32,
    prune: bool,
    jobs: u32,
    out: *mut *mut WmSearchReport,
) -> WmStatus {
    if out.is_null() {
        return WmStatus::NullArgument;
    }
    let jobs = if jobs == 0 {
        std::thread::available_parallelism().map_or(1, |p| p.get())
    } else {
        jobs as usize
    };
    let options = SearchOptions {
        limit: limit as usize,
        prune,
        jobs,
    };
    match search_williamson(n as usize, &options) {
        Ok(report) => {
            *out = Box::into_raw(Box::new(WmSearchReport { inner: report }));
            WmStatus::Ok
        }
        Err(williamson::SearchError::EvenOrder(_)) => WmStatus::EvenOrder,
        Err(_) => WmStatus::OrderTooLarge,
    }
}

/// Frees a search report. NULL is ignored.
///
/// # Safety
/// `report` must have been returned by this library and not freed before.
#[no_mangle]
pub unsafe extern "C" fn wm_search_report_free(report: *mut WmSearchReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Ordered 4-tuples enumerated by the search; 0 on NULL.
///
/// # Safety
/// `report` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn wm_search_report_candidates(report: *const WmSearchReport) -> u64 {
    report.as_ref().map_or(0, |r| r.inner.candidates_examined)
}

/// Ordered 4-tuples that verified; 0 on NULL.
///
/// # Safety
/// `report` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn wm_search_report_raw_count(report: *const WmSearchReport) -> u64 {
    report.as_ref().map_or(0, |r| r.inner.raw_count)
}

/// Number of deduplicated normalized quads; 0 on NULL.
///
/// # Safety
/// `report` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn wm_search_report_quad_count(report: *const WmSearchReport) -> usize {
    report.as_ref().map_or(0, |r| r.inner.quads.len())
}

/// Copies normalized quad `index` out of the report as a new handle.
///
/// # Safety
/// `report` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wm_search_report_quad(
    report: *const WmSearchReport,
    index: usize,
    out: *mut *mut WmQuad,
) -> WmStatus {
    let (Some(report), false) = (report.as_ref(), out.is_null()) else {
        return WmStatus::NullArgument;
    };
    match report.inner.quads.get(index) {
        Some(quad) => {
            *out = Box::into_raw(Box::new(WmQuad { inner: quad.clone() }));
            WmStatus::Ok
        }
        None => WmStatus::OrderTooLarge,
    }
}
