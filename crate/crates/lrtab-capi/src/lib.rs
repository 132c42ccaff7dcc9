//! C ABI for the lrtab library.
//!
//! All functions are panic-safe: a caught panic reports `LRTAB_STATUS_PANIC`
//! instead of unwinding across the boundary. Handles returned by `_parse`
//! functions are owned by the caller and must be released with the matching
//! `_free` function.

use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};

use lrtab::cyclage::charge_of_tableau;
use lrtab::lr::{enumerate_lrt, RectSequence};
use lrtab::poincare::{k_poly_of_rects, DEFAULT_N_CAP};
use lrtab::shape::Partition;
use lrtab::tableau::Tableau;

/// Status codes returned by every fallible call.
#[repr(i32)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LrtabStatus {
    Ok = 0,
    NullArgument = 1,
    ParseError = 2,
    InvalidArgument = 3,
    NotLittlewoodRichardson = 4,
    BoundExceeded = 5,
    BufferTooSmall = 6,
    Panic = 7,
}

fn status_of(e: &lrtab::Error) -> LrtabStatus {
    match e {
        lrtab::Error::Parse(_) => LrtabStatus::ParseError,
        lrtab::Error::NotRLr => LrtabStatus::NotLittlewoodRichardson,
        lrtab::Error::BoundExceeded(_) => LrtabStatus::BoundExceeded,
        _ => LrtabStatus::InvalidArgument,
    }
}

/// Opaque handle to a parsed rectangle sequence.
pub struct LrtabRects {
    inner: RectSequence,
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn lrtab_status_message(status: LrtabStatus) -> *const c_char {
    let msg: &'static [u8] = match status {
        LrtabStatus::Ok => b"ok\0",
        LrtabStatus::NullArgument => b"null argument\0",
        LrtabStatus::ParseError => b"parse error\0",
        LrtabStatus::InvalidArgument => b"invalid argument\0",
        LrtabStatus::NotLittlewoodRichardson => b"input is not Littlewood-Richardson for R\0",
        LrtabStatus::BoundExceeded => b"bound exceeded\0",
        LrtabStatus::BufferTooSmall => b"buffer too small\0",
        LrtabStatus::Panic => b"internal panic\0",
    };
    msg.as_ptr().cast()
}

/// Parses a rectangle sequence from its text form, comma-separated
/// `COLSxROWS` pairs (for example `3x2,2x2,1x3`). On success stores a handle
/// in `*out`; release it with `lrtab_rects_free`.
///
/// # Safety
/// `spec` must point to a NUL-terminated string and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn lrtab_rects_parse(
    spec: *const c_char,
    out: *mut *mut LrtabRects,
) -> LrtabStatus {
    if spec.is_null() || out.is_null() {
        return LrtabStatus::NullArgument;
    }
    let text = match CStr::from_ptr(spec).to_str() {
        Ok(t) => t,
        Err(_) => return LrtabStatus::ParseError,
    };
    match catch_unwind(|| text.parse::<RectSequence>()) {
        Ok(Ok(rects)) => {
            *out = Box::into_raw(Box::new(LrtabRects { inner: rects }));
            LrtabStatus::Ok
        }
        Ok(Err(e)) => status_of(&e),
        Err(_) => LrtabStatus::Panic,
    }
}

/// Releases a handle obtained from `lrtab_rects_parse`. Accepts NULL.
///
/// # Safety
/// `rects` must be NULL or a pointer previously returned by
/// `lrtab_rects_parse` that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn lrtab_rects_free(rects: *mut LrtabRects) {
    if !rects.is_null() {
        drop(Box::from_raw(rects));
    }
}

/// Alphabet size `n` (sum of the row counts).
///
/// # Safety
/// `rects` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn lrtab_rects_alphabet(rects: *const LrtabRects) -> usize {
    if rects.is_null() {
        return 0;
    }
    (*rects).inner.n()
}

/// Total number of cells `N`.
///
/// # Safety
/// `rects` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn lrtab_rects_cells(rects: *const LrtabRects) -> u64 {
    if rects.is_null() {
        return 0;
    }
    (*rects).inner.total_cells()
}

unsafe fn read_shape(shape: *const u32, shape_len: usize) -> Option<Partition> {
    let parts = if shape_len == 0 {
        Vec::new()
    } else if shape.is_null() {
        return None;
    } else {
        std::slice::from_raw_parts(shape, shape_len).to_vec()
    };
    Partition::new(parts).ok()
}

/// Computes the coefficients of `K_{lambda;R}(q)`.
///
/// Writes the number of coefficients (degree + 1; zero for the zero
/// polynomial) to `*coeffs_len`. When `coeffs_cap` is too small nothing is
/// written to `coeffs` and the call returns `BufferTooSmall`; calling with
/// `coeffs_cap = 0` is the standard way to query the length.
///
/// # Safety
/// `rects` must be a live handle; `shape` must point to `shape_len` entries;
/// `coeffs` must have room for `coeffs_cap` values; `coeffs_len` must be valid.
#[no_mangle]
pub unsafe extern "C" fn lrtab_kpoly(
    rects: *const LrtabRects,
    shape: *const u32,
    shape_len: usize,
    coeffs: *mut i64,
    coeffs_cap: usize,
    coeffs_len: *mut usize,
) -> LrtabStatus {
    if rects.is_null() || coeffs_len.is_null() {
        return LrtabStatus::NullArgument;
    }
    let Some(lambda) = read_shape(shape, shape_len) else {
        return LrtabStatus::InvalidArgument;
    };
    let r = &(*rects).inner;
    match catch_unwind(AssertUnwindSafe(|| k_poly_of_rects(&lambda, r))) {
        Ok(Ok(poly)) => {
            let needed = poly.coeffs().len();
            *coeffs_len = needed;
            if needed > coeffs_cap {
                return LrtabStatus::BufferTooSmall;
            }
            if needed > 0 {
                std::ptr::copy_nonoverlapping(poly.coeffs().as_ptr(), coeffs, needed);
            }
            LrtabStatus::Ok
        }
        Ok(Err(e)) => status_of(&e),
        Err(_) => LrtabStatus::Panic,
    }
}

/// Number of LR tableaux of the given shape, i.e. the LR coefficient for the
/// rectangle sequence.
///
/// # Safety
/// `rects` must be a live handle; `shape` must point to `shape_len` entries;
/// `count` must be valid.
#[no_mangle]
pub unsafe extern "C" fn lrtab_lrt_count(
    rects: *const LrtabRects,
    shape: *const u32,
    shape_len: usize,
    count: *mut u64,
) -> LrtabStatus {
    if rects.is_null() || count.is_null() {
        return LrtabStatus::NullArgument;
    }
    let Some(lambda) = read_shape(shape, shape_len) else {
        return LrtabStatus::InvalidArgument;
    };
    let r = &(*rects).inner;
    match catch_unwind(AssertUnwindSafe(|| enumerate_lrt(&lambda, r).len() as u64)) {
        Ok(c) => {
            *count = c;
            LrtabStatus::Ok
        }
        Err(_) => LrtabStatus::Panic,
    }
}

/// Charge of a column-strict tableau given in the text format (one row per
/// line, space-separated entries). The tableau must be LR for the sequence.
///
/// # Safety
/// `rects` must be a live handle; `tableau_text` must be NUL-terminated;
/// `charge` must be valid.
#[no_mangle]
pub unsafe extern "C" fn lrtab_charge(
    rects: *const LrtabRects,
    tableau_text: *const c_char,
    charge: *mut u64,
) -> LrtabStatus {
    if rects.is_null() || tableau_text.is_null() || charge.is_null() {
        return LrtabStatus::NullArgument;
    }
    let text = match CStr::from_ptr(tableau_text).to_str() {
        Ok(t) => t,
        Err(_) => return LrtabStatus::ParseError,
    };
    let r = &(*rects).inner;
    let result = catch_unwind(AssertUnwindSafe(|| -> Result<u64, lrtab::Error> {
        if r.n() > DEFAULT_N_CAP {
            return Err(lrtab::Error::BoundExceeded(format!(
                "alphabet size n = {} exceeds cap {DEFAULT_N_CAP}",
                r.n()
            )));
        }
        let t = Tableau::parse_text(text)?;
        Ok(charge_of_tableau(&t, r)?.value)
    }));
    match result {
        Ok(Ok(c)) => {
            *charge = c;
            LrtabStatus::Ok
        }
        Ok(Err(e)) => status_of(&e),
        Err(_) => LrtabStatus::Panic,
    }
}
