//! C interface.
//!
//! Every function returns an [`FbStatus`]; on failure a message is kept per
//! thread and read with [`fb_last_error`]. Handles and strings handed out
//! here must be released with the matching `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use fockbasis::canonical::{decomposition_matrix, CanonicalEngine, DecompositionMatrix};
use fockbasis::combinatorics::is_split_semisimple;
use fockbasis::crystal::uglov_set;
use fockbasis::{Charge, Error, MultiPartition};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FbStatus {
    Ok = 0,
    InvalidInput = 2,
    UnsupportedRegime = 3,
    Invariant = 4,
    NullPointer = 5,
    Panic = 6,
}

impl From<&Error> for FbStatus {
    fn from(e: &Error) -> Self {
        match e.exit_code() {
            2 => FbStatus::InvalidInput,
            3 => FbStatus::UnsupportedRegime,
            _ => FbStatus::Invariant,
        }
    }
}

/// Canonical-basis engine for one `(e, l)`; caches survive between calls.
pub struct FbEngine(CanonicalEngine);

/// A computed decomposition matrix.
pub struct FbMatrix(DecompositionMatrix);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

/// Runs `f`, turning errors and panics into a status plus a stored message.
fn guarded(f: impl FnOnce() -> Result<(), (FbStatus, String)>) -> FbStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => FbStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            FbStatus::Panic
        }
    }
}

fn lib(e: Error) -> (FbStatus, String) {
    ((&e).into(), e.to_string())
}

fn null(what: &str) -> (FbStatus, String) {
    (FbStatus::NullPointer, format!("{what} is null"))
}

unsafe fn charge_from(ptr: *const i64, len: usize) -> Result<Charge, (FbStatus, String)> {
    if ptr.is_null() && len > 0 {
        return Err(null("charge"));
    }
    let v = if len == 0 { Vec::new() } else { std::slice::from_raw_parts(ptr, len).to_vec() };
    Charge::new(v).map_err(lib)
}

unsafe fn str_from<'a>(ptr: *const c_char, what: &str) -> Result<&'a str, (FbStatus, String)> {
    if ptr.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| (FbStatus::InvalidInput, format!("{what} is not UTF-8")))
}

fn into_c(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).unwrap_or_default().into_raw()
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn fb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn fb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn fb_engine_new(e: u32, l: usize, out: *mut *mut FbEngine) -> FbStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        if e < 2 || l < 1 {
            return Err((FbStatus::InvalidInput, format!("need e >= 2 and l >= 1, got e={e} l={l}")));
        }
        *out = Box::into_raw(Box::new(FbEngine(CanonicalEngine::new(e, l))));
        Ok(())
    })
}

/// # Safety
/// `engine` must come from [`fb_engine_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn fb_engine_free(engine: *mut FbEngine) {
    if !engine.is_null() {
        drop(Box::from_raw(engine));
    }
}

/// Decomposition matrix of the Uglov columns at `charge` and `rank`.
///
/// # Safety
/// `engine` must be live, `charge` must point to `charge_len` integers and
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn fb_decomposition_matrix(
    engine: *mut FbEngine,
    charge: *const i64,
    charge_len: usize,
    rank: usize,
    out: *mut *mut FbMatrix,
) -> FbStatus {
    guarded(|| {
        let eng = engine.as_mut().ok_or_else(|| null("engine"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let s = charge_from(charge, charge_len)?;
        if s.level() != eng.0.l() {
            return Err((FbStatus::InvalidInput, format!("charge {s} does not have {} entries", eng.0.l())));
        }
        let m = decomposition_matrix(&mut eng.0, &s, rank, false).map_err(lib)?;
        *out = Box::into_raw(Box::new(FbMatrix(m)));
        Ok(())
    })
}

/// # Safety
/// `m` must come from [`fb_decomposition_matrix`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn fb_matrix_free(m: *mut FbMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Number of rows, or 0 for null.
///
/// # Safety
/// `m` must be live or null.
#[no_mangle]
pub unsafe extern "C" fn fb_matrix_rows(m: *const FbMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.rows.len())
}

/// Number of columns, or 0 for null.
///
/// # Safety
/// `m` must be live or null.
#[no_mangle]
pub unsafe extern "C" fn fb_matrix_columns(m: *const FbMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.columns.len())
}

/// # Safety
/// `m` must be live and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn fb_matrix_entry(m: *const FbMatrix, row: usize, column: usize, out: *mut i64) -> FbStatus {
    guarded(|| {
        let m = m.as_ref().ok_or_else(|| null("matrix"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let v = m
            .0
            .entries
            .get(row)
            .and_then(|r| r.get(column))
            .ok_or_else(|| (FbStatus::InvalidInput, format!("({row}, {column}) is out of range")))?;
        *out = *v;
        Ok(())
    })
}

unsafe fn label_at(
    m: *const FbMatrix,
    i: usize,
    out: *mut *mut c_char,
    pick: fn(&DecompositionMatrix) -> &[MultiPartition],
) -> FbStatus {
    guarded(|| {
        let m = m.as_ref().ok_or_else(|| null("matrix"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let l = pick(&m.0)
            .get(i)
            .ok_or_else(|| (FbStatus::InvalidInput, format!("index {i} is out of range")))?;
        *out = into_c(l.to_string());
        Ok(())
    })
}

/// Text label of row `i`; free with [`fb_string_free`].
///
/// # Safety
/// `m` must be live and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn fb_matrix_row_label(m: *const FbMatrix, i: usize, out: *mut *mut c_char) -> FbStatus {
    label_at(m, i, out, |m| &m.rows)
}

/// Text label of column `j`; free with [`fb_string_free`].
///
/// # Safety
/// `m` must be live and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn fb_matrix_column_label(m: *const FbMatrix, j: usize, out: *mut *mut c_char) -> FbStatus {
    label_at(m, j, out, |m| &m.columns)
}

/// Whole matrix as JSON; free with [`fb_string_free`].
///
/// # Safety
/// `m` must be live and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn fb_matrix_json(m: *const FbMatrix, out: *mut *mut c_char) -> FbStatus {
    guarded(|| {
        let m = m.as_ref().ok_or_else(|| null("matrix"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let s = serde_json::to_string(&m.0).map_err(|e| (FbStatus::Invariant, e.to_string()))?;
        *out = into_c(s);
        Ok(())
    })
}

/// Canonical basis element `G(label, charge)` as JSON records.
///
/// # Safety
/// `engine` must be live, `label` a NUL-terminated string, `charge` must
/// point to `charge_len` integers and `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn fb_canonical_json(
    engine: *mut FbEngine,
    label: *const c_char,
    charge: *const i64,
    charge_len: usize,
    out: *mut *mut c_char,
) -> FbStatus {
    guarded(|| {
        let eng = engine.as_mut().ok_or_else(|| null("engine"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let lam: MultiPartition = str_from(label, "label")?.parse().map_err(lib)?;
        let s = charge_from(charge, charge_len)?;
        if lam.level() != eng.0.l() || s.level() != eng.0.l() {
            return Err((FbStatus::InvalidInput, format!("level mismatch with l = {}", eng.0.l())));
        }
        let g = eng.0.canonical_element(&lam, &s).map_err(lib)?;
        let text = serde_json::to_string(&g.expansion).map_err(|e| (FbStatus::Invariant, e.to_string()))?;
        *out = into_c(text);
        Ok(())
    })
}

/// Uglov multipartitions as a JSON array of labels.
///
/// # Safety
/// `charge` must point to `charge_len` integers and `out` must be valid for
/// a write.
#[no_mangle]
pub unsafe extern "C" fn fb_uglov_set_json(
    e: u32,
    charge: *const i64,
    charge_len: usize,
    rank: usize,
    out: *mut *mut c_char,
) -> FbStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        if e < 2 {
            return Err((FbStatus::InvalidInput, format!("need e >= 2, got {e}")));
        }
        let s = charge_from(charge, charge_len)?;
        let set = uglov_set(e, s.level(), &s, rank).map_err(lib)?;
        let text = serde_json::to_string(&set).map_err(|e| (FbStatus::Invariant, e.to_string()))?;
        *out = into_c(text);
        Ok(())
    })
}

/// # Safety
/// `charge` must point to `charge_len` integers and `out` must be valid for
/// a write.
#[no_mangle]
pub unsafe extern "C" fn fb_is_split_semisimple(
    e: u32,
    charge: *const i64,
    charge_len: usize,
    rank: usize,
    out: *mut bool,
) -> FbStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        if e < 2 {
            return Err((FbStatus::InvalidInput, format!("need e >= 2, got {e}")));
        }
        let s = charge_from(charge, charge_len)?;
        *out = is_split_semisimple(e, &s, rank);
        Ok(())
    })
}
