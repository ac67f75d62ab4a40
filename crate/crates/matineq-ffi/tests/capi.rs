//! Exercises the C ABI surface the way a foreign caller would: opaque
//! handles in, status codes out, strings released through the library.

use std::ffi::{CStr, CString};
use std::ptr;

use matineq_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

#[test]
fn version_and_registry_listing() {
    let v = mi_version();
    assert!(!v.is_null());
    let text = unsafe { CStr::from_ptr(v) }.to_str().unwrap();
    assert!(!text.is_empty());

    let n = mi_law_count();
    assert_eq!(n, 38);
    for i in 0..n {
        let id = mi_law_id(i);
        assert!(!id.is_null());
        let id = unsafe { CStr::from_ptr(id) }.to_str().unwrap();
        assert!(id.starts_with("L-"), "{id}");
        let summary = mi_law_summary(i);
        assert!(!summary.is_null());
    }
    assert!(mi_law_id(n).is_null());
}

#[test]
fn random_instance_check_and_json_round_trip() {
    let law = cstr("L-KANT-VEC");
    let mut inst: *mut MiInstance = ptr::null_mut();
    let status = unsafe { mi_instance_random(law.as_ptr(), 3, 42, &mut inst) };
    assert_eq!(status, MiStatus::MiOk);
    assert!(!inst.is_null());

    let mut verdict: *mut MiVerdict = ptr::null_mut();
    let status = unsafe { mi_check(inst, 1e-9, 1e-12, &mut verdict) };
    assert_eq!(status, MiStatus::MiOk);
    assert_eq!(unsafe { mi_verdict_holds(verdict) }, 1);
    assert!(unsafe { mi_verdict_slack(verdict) } >= 0.0);

    let mut text: *mut std::ffi::c_char = ptr::null_mut();
    let status = unsafe { mi_verdict_to_json(verdict, &mut text) };
    assert_eq!(status, MiStatus::MiOk);
    let parsed: serde_json::Value =
        serde_json::from_str(unsafe { CStr::from_ptr(text) }.to_str().unwrap()).unwrap();
    assert_eq!(parsed["law"], "L-KANT-VEC");
    unsafe { mi_string_free(text) };

    // Instance JSON round trip through the C surface.
    let mut inst_json: *mut std::ffi::c_char = ptr::null_mut();
    assert_eq!(unsafe { mi_instance_to_json(inst, &mut inst_json) }, MiStatus::MiOk);
    let mut reparsed: *mut MiInstance = ptr::null_mut();
    assert_eq!(
        unsafe { mi_instance_from_json(inst_json, &mut reparsed) },
        MiStatus::MiOk
    );
    unsafe {
        mi_string_free(inst_json);
        mi_instance_free(reparsed);
        mi_verdict_free(verdict);
        mi_instance_free(inst);
    }
}

#[test]
fn batch_verify_through_the_c_surface() {
    let law = cstr("L-PINCH");
    let dims = [2usize, 3];
    let mut text: *mut std::ffi::c_char = ptr::null_mut();
    let status = unsafe {
        mi_batch_verify_json(
            law.as_ptr(),
            40,
            dims.as_ptr(),
            dims.len(),
            5,
            1e-9,
            1e-12,
            &mut text,
        )
    };
    assert_eq!(status, MiStatus::MiOk);
    let report: serde_json::Value =
        serde_json::from_str(unsafe { CStr::from_ptr(text) }.to_str().unwrap()).unwrap();
    assert_eq!(report["violations"], 0);
    assert_eq!(report["trials"], 40);
    unsafe { mi_string_free(text) };
}

#[test]
fn error_paths_return_codes_not_crashes() {
    // Unknown law.
    let law = cstr("L-NOPE");
    let mut inst: *mut MiInstance = ptr::null_mut();
    assert_eq!(
        unsafe { mi_instance_random(law.as_ptr(), 3, 1, &mut inst) },
        MiStatus::MiUnknownLaw
    );

    // Unsupported dimension.
    let law = cstr("L-HLP");
    assert_eq!(
        unsafe { mi_instance_random(law.as_ptr(), 1, 1, &mut inst) },
        MiStatus::MiUnsupportedDim
    );

    // Null pointers.
    assert_eq!(
        unsafe { mi_instance_random(ptr::null(), 3, 1, &mut inst) },
        MiStatus::MiNullPointer
    );
    assert_eq!(
        unsafe { mi_instance_random(law.as_ptr(), 3, 1, ptr::null_mut()) },
        MiStatus::MiNullPointer
    );

    // Parse failures.
    let junk = cstr("{ not json");
    assert_eq!(
        unsafe { mi_instance_from_json(junk.as_ptr(), &mut inst) },
        MiStatus::MiParseError
    );

    // Frees of NULL are no-ops.
    unsafe {
        mi_instance_free(ptr::null_mut());
        mi_verdict_free(ptr::null_mut());
        mi_string_free(ptr::null_mut());
    }
}

#[test]
fn generated_header_covers_the_surface() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/matineq.h");
    let text = std::fs::read_to_string(header).expect("cbindgen header generated at build time");
    for symbol in [
        "MATINEQ_H",
        "MiStatus",
        "MiInstance",
        "MiVerdict",
        "mi_version",
        "mi_law_count",
        "mi_law_id",
        "mi_instance_random",
        "mi_instance_from_json",
        "mi_check",
        "mi_verdict_holds",
        "mi_verdict_slack",
        "mi_batch_verify_json",
        "mi_string_free",
    ] {
        assert!(text.contains(symbol), "header is missing {symbol}");
    }
}
