//! C ABI for the matineq verification laboratory.
//!
//! The surface uses opaque handles ([`MiInstance`], [`MiVerdict`]) plus
//! status codes; strings returned through out-parameters are owned by this
//! library and must be released with [`mi_string_free`]. A generated header
//! lands in `include/matineq.h` at build time.

use std::ffi::{c_char, c_int, CStr, CString};
use std::ptr;
use std::sync::OnceLock;

use matineq::laws::{self, LawInstance, TolerancePolicy, Verdict};

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MiStatus {
    MiOk = 0,
    MiNullPointer = 1,
    MiInvalidUtf8 = 2,
    MiUnknownLaw = 3,
    MiUnsupportedDim = 4,
    MiShapeMismatch = 5,
    MiParseError = 6,
    MiInvalidArgument = 7,
    MiInternalError = 8,
}

/// Opaque handle to a law instance.
pub struct MiInstance {
    inner: LawInstance,
}

/// Opaque handle to an evaluated verdict.
pub struct MiVerdict {
    inner: Verdict,
}

fn law_ids() -> &'static Vec<CString> {
    static IDS: OnceLock<Vec<CString>> = OnceLock::new();
    IDS.get_or_init(|| {
        laws::registry()
            .iter()
            .map(|d| CString::new(d.id).expect("law ids contain no NUL"))
            .collect()
    })
}

fn law_summaries() -> &'static Vec<CString> {
    static SUMMARIES: OnceLock<Vec<CString>> = OnceLock::new();
    SUMMARIES.get_or_init(|| {
        laws::registry()
            .iter()
            .map(|d| CString::new(d.summary).expect("summaries contain no NUL"))
            .collect()
    })
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, MiStatus> {
    if ptr.is_null() {
        return Err(MiStatus::MiNullPointer);
    }
    unsafe { CStr::from_ptr(ptr) }
        .to_str()
        .map_err(|_| MiStatus::MiInvalidUtf8)
}

fn give_string(text: String, out: *mut *mut c_char) -> MiStatus {
    if out.is_null() {
        return MiStatus::MiNullPointer;
    }
    match CString::new(text) {
        Ok(s) => {
            unsafe { *out = s.into_raw() };
            MiStatus::MiOk
        }
        Err(_) => MiStatus::MiInternalError,
    }
}

fn law_error_status(e: &laws::LawError) -> MiStatus {
    match e {
        laws::LawError::UnknownLaw(_) => MiStatus::MiUnknownLaw,
        laws::LawError::UnsupportedDim { .. } => MiStatus::MiUnsupportedDim,
        laws::LawError::ShapeMismatch(_) => MiStatus::MiShapeMismatch,
        laws::LawError::Numerics(_) => MiStatus::MiInternalError,
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn mi_version() -> *const c_char {
    static VERSION: OnceLock<CString> = OnceLock::new();
    VERSION
        .get_or_init(|| CString::new(env!("CARGO_PKG_VERSION")).expect("no NUL"))
        .as_ptr()
}

/// Number of laws in the registry.
#[no_mangle]
pub extern "C" fn mi_law_count() -> usize {
    laws::registry().len()
}

/// Law id at `index` (static storage), or NULL when out of range.
#[no_mangle]
pub extern "C" fn mi_law_id(index: usize) -> *const c_char {
    law_ids().get(index).map_or(ptr::null(), |s| s.as_ptr())
}

/// One-line description of the law at `index`, or NULL when out of range.
#[no_mangle]
pub extern "C" fn mi_law_summary(index: usize) -> *const c_char {
    law_summaries().get(index).map_or(ptr::null(), |s| s.as_ptr())
}

/// Deterministically generate a hypothesis-valid instance of a law.
///
/// # Safety
/// `law` must be a valid NUL-terminated string and `out` a valid pointer.
/// The returned handle must be released with [`mi_instance_free`].
#[no_mangle]
pub unsafe extern "C" fn mi_instance_random(
    law: *const c_char,
    dim: usize,
    seed: u64,
    out: *mut *mut MiInstance,
) -> MiStatus {
    if out.is_null() {
        return MiStatus::MiNullPointer;
    }
    let law = match unsafe { read_str(law) } {
        Ok(s) => s,
        Err(status) => return status,
    };
    match laws::random_instance(law, dim, seed) {
        Ok(inner) => {
            unsafe { *out = Box::into_raw(Box::new(MiInstance { inner })) };
            MiStatus::MiOk
        }
        Err(e) => law_error_status(&e),
    }
}

/// Parse an instance document (shape-validated against its law).
///
/// # Safety
/// `json` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mi_instance_from_json(
    json: *const c_char,
    out: *mut *mut MiInstance,
) -> MiStatus {
    if out.is_null() {
        return MiStatus::MiNullPointer;
    }
    let text = match unsafe { read_str(json) } {
        Ok(s) => s,
        Err(status) => return status,
    };
    match matineq::io::instance_from_json(text) {
        Ok(inner) => {
            unsafe { *out = Box::into_raw(Box::new(MiInstance { inner })) };
            MiStatus::MiOk
        }
        Err(matineq::io::IoError::Shape(_)) => MiStatus::MiShapeMismatch,
        Err(_) => MiStatus::MiParseError,
    }
}

/// Serialize an instance to JSON; the string must be freed with
/// [`mi_string_free`].
///
/// # Safety
/// `inst` must be a live handle from this library; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn mi_instance_to_json(
    inst: *const MiInstance,
    out: *mut *mut c_char,
) -> MiStatus {
    if inst.is_null() {
        return MiStatus::MiNullPointer;
    }
    let inst = unsafe { &*inst };
    match serde_json::to_string_pretty(&inst.inner) {
        Ok(text) => give_string(text, out),
        Err(_) => MiStatus::MiInternalError,
    }
}

/// Release an instance handle. NULL is a no-op.
///
/// # Safety
/// `inst` must be a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mi_instance_free(inst: *mut MiInstance) {
    if !inst.is_null() {
        drop(unsafe { Box::from_raw(inst) });
    }
}

/// Check an instance under the given tolerance policy.
///
/// # Safety
/// `inst` must be a live handle; `out` must be valid. The verdict handle
/// must be released with [`mi_verdict_free`].
#[no_mangle]
pub unsafe extern "C" fn mi_check(
    inst: *const MiInstance,
    rel_tol: f64,
    abs_tol: f64,
    out: *mut *mut MiVerdict,
) -> MiStatus {
    if inst.is_null() || out.is_null() {
        return MiStatus::MiNullPointer;
    }
    if rel_tol.is_nan() || rel_tol < 0.0 || abs_tol.is_nan() || abs_tol < 0.0 {
        return MiStatus::MiInvalidArgument;
    }
    let inst = unsafe { &*inst };
    let tol = TolerancePolicy {
        rel: rel_tol,
        abs: abs_tol,
    };
    match laws::check_by_id(&inst.inner.law, &inst.inner, &tol) {
        Ok(inner) => {
            unsafe { *out = Box::into_raw(Box::new(MiVerdict { inner })) };
            MiStatus::MiOk
        }
        Err(e) => law_error_status(&e),
    }
}

/// 1 when the comparison holds, 0 when it fails, -1 when the hypotheses were
/// not met (the comparison is undefined).
///
/// # Safety
/// `verdict` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn mi_verdict_holds(verdict: *const MiVerdict) -> c_int {
    if verdict.is_null() {
        return -1;
    }
    match unsafe { &*verdict }.inner.holds {
        Some(true) => 1,
        Some(false) => 0,
        None => -1,
    }
}

/// Minimum slack over the compared indices (rhs − lhs); may be infinite.
///
/// # Safety
/// `verdict` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn mi_verdict_slack(verdict: *const MiVerdict) -> f64 {
    if verdict.is_null() {
        return f64::NAN;
    }
    unsafe { &*verdict }.inner.slack
}

/// Full verdict document as JSON; free with [`mi_string_free`].
///
/// # Safety
/// `verdict` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn mi_verdict_to_json(
    verdict: *const MiVerdict,
    out: *mut *mut c_char,
) -> MiStatus {
    if verdict.is_null() {
        return MiStatus::MiNullPointer;
    }
    match serde_json::to_string_pretty(&unsafe { &*verdict }.inner) {
        Ok(text) => give_string(text, out),
        Err(_) => MiStatus::MiInternalError,
    }
}

/// Release a verdict handle. NULL is a no-op.
///
/// # Safety
/// `verdict` must be a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mi_verdict_free(verdict: *mut MiVerdict) {
    if !verdict.is_null() {
        drop(unsafe { Box::from_raw(verdict) });
    }
}

/// Run a verification batch and return the report as JSON; free the string
/// with [`mi_string_free`]. `dims` points at `n_dims` dimensions.
///
/// # Safety
/// `law` must be NUL-terminated, `dims` must reference `n_dims` readable
/// entries, and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn mi_batch_verify_json(
    law: *const c_char,
    trials: u64,
    dims: *const usize,
    n_dims: usize,
    seed: u64,
    rel_tol: f64,
    abs_tol: f64,
    out: *mut *mut c_char,
) -> MiStatus {
    if dims.is_null() || out.is_null() {
        return MiStatus::MiNullPointer;
    }
    let law = match unsafe { read_str(law) } {
        Ok(s) => s,
        Err(status) => return status,
    };
    if n_dims == 0 || trials == 0 {
        return MiStatus::MiInvalidArgument;
    }
    let dims = unsafe { std::slice::from_raw_parts(dims, n_dims) };
    let tol = TolerancePolicy {
        rel: rel_tol,
        abs: abs_tol,
    };
    match laws::batch_verify(law, trials, dims, seed, &tol) {
        Ok(report) => match serde_json::to_string_pretty(&report) {
            Ok(text) => give_string(text, out),
            Err(_) => MiStatus::MiInternalError,
        },
        Err(e) => law_error_status(&e),
    }
}

/// Release a string returned by this library. NULL is a no-op.
///
/// # Safety
/// `text` must originate from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mi_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(unsafe { CString::from_raw(text) });
    }
}
