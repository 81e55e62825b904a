//! C ABI for the ecdecomp library.
//!
//! Handles are opaque pointers created and freed by this library; strings
//! returned by `*_json`, `*_text` and `ecd_last_error_message` are owned by
//! the caller and must be released with [`ecd_string_free`]. Functions
//! returning [`EcdStatus`] store a message retrievable through
//! [`ecd_last_error_message`] on failure. All functions are safe to call from
//! multiple threads as long as each handle is used from one thread at a time.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Duration;

use ecdecomp::codes::{self, ConstructionKind};
use ecdecomp::families::{self, DigraphFamily};
use ecdecomp::invariants;
use ecdecomp::model::{self, Composition};
use ecdecomp::search::{self, Decomposition, SearchConfig, SearchMode, SearchStatus};

/// Result of an ecdecomp call.
#[repr(i32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EcdStatus {
    /// Success (SAT for searches).
    Ok = 0,
    /// A complete search proved no decomposition exists.
    Unsat = 1,
    /// Bad parameters, malformed input, or a failed verification.
    Invalid = 2,
    /// Time limit hit, or an invariant did not resolve.
    Timeout = 3,
    /// A required pointer was null.
    NullPointer = 4,
    /// A string argument was not valid UTF-8.
    Utf8 = 5,
    /// A panic was caught at the boundary.
    Internal = 6,
}

/// Opaque digraph family handle.
pub struct EcdFamily {
    inner: DigraphFamily,
}

/// Opaque decomposition handle.
pub struct EcdDecomposition {
    inner: Decomposition,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<String>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(msg.into()));
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

/// Last error message for this thread, or null when the previous call
/// succeeded. Free with [`ecd_string_free`].
#[no_mangle]
pub extern "C" fn ecd_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| match &*slot.borrow() {
        Some(msg) => CString::new(msg.as_str()).map_or(std::ptr::null_mut(), CString::into_raw),
        None => std::ptr::null_mut(),
    })
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be a pointer previously returned by an ecdecomp function and not
/// yet freed.
#[no_mangle]
pub unsafe extern "C" fn ecd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

fn guarded<T>(default: T, body: impl FnOnce() -> T) -> T {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(v) => v,
        Err(_) => {
            set_error("internal panic");
            default
        }
    }
}

fn to_cstring(text: String) -> *mut c_char {
    match CString::new(text) {
        Ok(c) => c.into_raw(),
        Err(_) => {
            set_error("output contained an interior NUL byte");
            std::ptr::null_mut()
        }
    }
}

unsafe fn slice_from<'a>(ptr: *const u32, len: usize) -> Option<&'a [u32]> {
    if ptr.is_null() {
        None
    } else {
        Some(std::slice::from_raw_parts(ptr, len))
    }
}

unsafe fn str_from<'a>(ptr: *const c_char) -> Result<&'a str, EcdStatus> {
    if ptr.is_null() {
        return Err(EcdStatus::NullPointer);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| EcdStatus::Utf8)
}

fn family_out(result: ecdecomp::Result<DigraphFamily>) -> *mut EcdFamily {
    match result {
        Ok(inner) => {
            clear_error();
            Box::into_raw(Box::new(EcdFamily { inner }))
        }
        Err(e) => {
            set_error(e.to_string());
            std::ptr::null_mut()
        }
    }
}

/// Build the constant-composition family of `G(w)` with its single-edge
/// companions. `parts` is the composition `[w_1, ..., w_{q-1}]`.
///
/// # Safety
/// `parts` must point to `len` readable `uint32_t`s.
#[no_mangle]
pub unsafe extern "C" fn ecd_family_g(parts: *const u32, len: usize) -> *mut EcdFamily {
    guarded(std::ptr::null_mut(), || {
        let Some(parts) = slice_from(parts, len) else {
            set_error("parts pointer is null");
            return std::ptr::null_mut();
        };
        family_out(Composition::new(parts.to_vec()).and_then(|c| families::family_g(&c)))
    })
}

/// Build the pair-colored family of `G*(w)`.
///
/// # Safety
/// `parts` must point to `len` readable `uint32_t`s.
#[no_mangle]
pub unsafe extern "C" fn ecd_family_gstar(parts: *const u32, len: usize) -> *mut EcdFamily {
    guarded(std::ptr::null_mut(), || {
        let Some(parts) = slice_from(parts, len) else {
            set_error("parts pointer is null");
            return std::ptr::null_mut();
        };
        family_out(Composition::new(parts.to_vec()).and_then(|c| families::family_gstar(&c)))
    })
}

/// Build the weight-`w` constant-weight family over alphabet size `q`.
#[no_mangle]
pub extern "C" fn ecd_family_g_cwc(q: u32, w: u32) -> *mut EcdFamily {
    guarded(std::ptr::null_mut(), || family_out(families::family_g_cwc(q, w)))
}

/// Build the pair-colored weight-`w` constant-weight family.
#[no_mangle]
pub extern "C" fn ecd_family_gstar_cwc(q: u32, w: u32) -> *mut EcdFamily {
    guarded(std::ptr::null_mut(), || family_out(families::family_gstar_cwc(q, w)))
}

/// Build the multiply-constant-weight family `H*(m, w)` with its diagonal
/// single edges.
#[no_mangle]
pub extern "C" fn ecd_family_hstar(m: u32, w: u32) -> *mut EcdFamily {
    guarded(std::ptr::null_mut(), || family_out(families::family_hstar(m, w)))
}

/// Parse a family from its JSON file representation.
///
/// # Safety
/// `json` must be a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn ecd_family_from_json(json: *const c_char) -> *mut EcdFamily {
    guarded(std::ptr::null_mut(), || {
        let text = match str_from(json) {
            Ok(t) => t,
            Err(status) => {
                set_error(format!("bad json argument: {status:?}"));
                return std::ptr::null_mut();
            }
        };
        family_out(families::read_family(text.as_bytes()))
    })
}

/// Serialize a family to its JSON file representation.
///
/// # Safety
/// `family` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn ecd_family_to_json(family: *const EcdFamily) -> *mut c_char {
    guarded(std::ptr::null_mut(), || {
        let Some(f) = family.as_ref() else {
            set_error("family handle is null");
            return std::ptr::null_mut();
        };
        let mut buf = Vec::new();
        match families::write_family(&mut buf, &f.inner) {
            Ok(()) => {
                clear_error();
                to_cstring(String::from_utf8(buf).expect("json is utf-8"))
            }
            Err(e) => {
                set_error(e.to_string());
                std::ptr::null_mut()
            }
        }
    })
}

/// Release a family handle. Null is ignored.
///
/// # Safety
/// `family` must be a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ecd_family_free(family: *mut EcdFamily) {
    if !family.is_null() {
        drop(Box::from_raw(family));
    }
}

/// Johnson-type bound for constant-composition codes. `d` selects the form:
/// `2w-2`, `2w-3` or `2w` for the composition's weight `w`.
///
/// # Safety
/// `parts` must point to `len` readable `uint32_t`s and `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn ecd_bound_ccc(
    n: u64,
    d: u32,
    parts: *const u32,
    len: usize,
    out: *mut u64,
) -> EcdStatus {
    guarded(EcdStatus::Internal, || {
        let (Some(parts), false) = (slice_from(parts, len), out.is_null()) else {
            set_error("null pointer argument");
            return EcdStatus::NullPointer;
        };
        let result = Composition::new(parts.to_vec()).and_then(|comp| {
            let w = comp.weight();
            if w >= 2 && d == 2 * w - 2 {
                ecdecomp::bounds::bound_ccc_2w2(n, &comp)
            } else if w >= 3 && d == 2 * w - 3 {
                ecdecomp::bounds::bound_ccc_2w3(n, &comp)
            } else if d == 2 * w {
                ecdecomp::bounds::base_full_distance(n, w)
            } else {
                Err(ecdecomp::Error::InvalidParameter(format!(
                    "no bound form for d = {d} at weight {w}"
                )))
            }
        });
        match result {
            Ok(v) => {
                *out = v;
                clear_error();
                EcdStatus::Ok
            }
            Err(e) => {
                set_error(e.to_string());
                EcdStatus::Invalid
            }
        }
    })
}

/// Johnson-type bound for constant-weight codes (`d` is `2w-2`, `2w-3` or
/// `2w`).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ecd_bound_cwc(q: u32, n: u64, d: u32, w: u32, out: *mut u64) -> EcdStatus {
    guarded(EcdStatus::Internal, || {
        if out.is_null() {
            set_error("out pointer is null");
            return EcdStatus::NullPointer;
        }
        let result = if w >= 2 && d == 2 * w - 2 {
            ecdecomp::bounds::bound_cwc_2w2(q, n, w)
        } else if w >= 2 && d == 2 * w - 3 {
            ecdecomp::bounds::bound_cwc_2w3(q, n, w)
        } else if d == 2 * w {
            ecdecomp::bounds::base_full_distance(n, w)
        } else {
            Err(ecdecomp::Error::InvalidParameter(format!(
                "no bound form for d = {d} at weight {w}"
            )))
        };
        match result {
            Ok(v) => {
                *out = v;
                clear_error();
                EcdStatus::Ok
            }
            Err(e) => {
                set_error(e.to_string());
                EcdStatus::Invalid
            }
        }
    })
}

/// Johnson-type bound for multiply constant-weight codes at distance
/// `2mw-2`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ecd_bound_mcwc(m: u32, n: u64, w: u32, out: *mut u64) -> EcdStatus {
    guarded(EcdStatus::Internal, || {
        if out.is_null() {
            set_error("out pointer is null");
            return EcdStatus::NullPointer;
        }
        match ecdecomp::bounds::bound_mcwc(m, n, w) {
            Ok(v) => {
                *out = v;
                clear_error();
                EcdStatus::Ok
            }
            Err(e) => {
                set_error(e.to_string());
                EcdStatus::Invalid
            }
        }
    })
}

/// Invariant report for a family as a JSON object with fields `alpha`,
/// `beta` (strings, `"unresolved"` when undecided), `admissible`, and, when
/// `n >= 0`, `congruence_alpha`/`congruence_beta`. Free with
/// [`ecd_string_free`].
///
/// # Safety
/// `family` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn ecd_invariants_json(family: *const EcdFamily, n: i64) -> *mut c_char {
    guarded(std::ptr::null_mut(), || {
        let Some(f) = family.as_ref() else {
            set_error("family handle is null");
            return std::ptr::null_mut();
        };
        let report = (|| -> ecdecomp::Result<serde_json::Value> {
            let alpha = invariants::alpha(&f.inner)?;
            let beta = invariants::beta(&f.inner)?;
            let adm = invariants::admissible(&f.inner)?;
            let alpha_s = alpha
                .result
                .value
                .as_ref()
                .map_or_else(|| "unresolved".to_string(), |x| x.to_string());
            let beta_s = beta
                .result
                .value
                .as_ref()
                .map_or_else(|| "unresolved".to_string(), |x| x.to_string());
            let mut obj = serde_json::json!({
                "family": f.inner.name,
                "alpha": alpha_s,
                "beta": beta_s,
                "admissible": adm.admissible,
            });
            if n >= 0 {
                if let (Some(a), Some(b)) = (&alpha.result.value, &beta.result.value) {
                    let cong = invariants::theorem_congruences(a, b, n as u64)?;
                    obj["congruence_alpha"] = serde_json::json!(cong.alpha_ok);
                    obj["congruence_beta"] = serde_json::json!(cong.beta_ok);
                }
            }
            Ok(obj)
        })();
        match report {
            Ok(value) => {
                clear_error();
                to_cstring(value.to_string())
            }
            Err(e) => {
                set_error(e.to_string());
                std::ptr::null_mut()
            }
        }
    })
}

/// Search for a decomposition of `K_n^(r)`. On `Ok` a decomposition handle
/// is stored in `*out`; on `Unsat`/`Timeout` `*out` is null.
/// `time_limit_ms = 0` means no limit; `threads = 0` means 1.
///
/// # Safety
/// `family` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ecd_search(
    family: *const EcdFamily,
    n: u32,
    superpure: bool,
    seed: u64,
    time_limit_ms: u64,
    threads: u32,
    out: *mut *mut EcdDecomposition,
) -> EcdStatus {
    guarded(EcdStatus::Internal, || {
        let Some(f) = family.as_ref() else {
            set_error("family handle is null");
            return EcdStatus::NullPointer;
        };
        if out.is_null() {
            set_error("out pointer is null");
            return EcdStatus::NullPointer;
        }
        *out = std::ptr::null_mut();
        let config = SearchConfig {
            superpure,
            mode: SearchMode::First,
            seed,
            time_limit: (time_limit_ms > 0).then(|| Duration::from_millis(time_limit_ms)),
            threads: threads.max(1) as usize,
        };
        match search::solve(&f.inner, n, &config) {
            Ok(report) => match report.status {
                SearchStatus::Sat => {
                    let dec = report.solutions.into_iter().next().expect("sat solution");
                    *out = Box::into_raw(Box::new(EcdDecomposition { inner: dec }));
                    clear_error();
                    EcdStatus::Ok
                }
                SearchStatus::Unsat => {
                    clear_error();
                    EcdStatus::Unsat
                }
                SearchStatus::Timeout => {
                    set_error(format!("time limit hit at depth {}", report.best_depth));
                    EcdStatus::Timeout
                }
            },
            Err(e) => {
                set_error(e.to_string());
                EcdStatus::Invalid
            }
        }
    })
}

/// Serialize a decomposition to its JSON file representation.
///
/// # Safety
/// `dec` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn ecd_decomposition_to_json(dec: *const EcdDecomposition) -> *mut c_char {
    guarded(std::ptr::null_mut(), || {
        let Some(d) = dec.as_ref() else {
            set_error("decomposition handle is null");
            return std::ptr::null_mut();
        };
        let mut buf = Vec::new();
        match search::write_decomposition(&mut buf, &d.inner) {
            Ok(()) => {
                clear_error();
                to_cstring(String::from_utf8(buf).expect("json is utf-8"))
            }
            Err(e) => {
                set_error(e.to_string());
                std::ptr::null_mut()
            }
        }
    })
}

/// Parse a decomposition from its JSON file representation.
///
/// # Safety
/// `json` must be a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn ecd_decomposition_from_json(json: *const c_char) -> *mut EcdDecomposition {
    guarded(std::ptr::null_mut(), || {
        let text = match str_from(json) {
            Ok(t) => t,
            Err(status) => {
                set_error(format!("bad json argument: {status:?}"));
                return std::ptr::null_mut();
            }
        };
        match search::read_decomposition(text.as_bytes()) {
            Ok(inner) => {
                clear_error();
                Box::into_raw(Box::new(EcdDecomposition { inner }))
            }
            Err(e) => {
                set_error(e.to_string());
                std::ptr::null_mut()
            }
        }
    })
}

/// Release a decomposition handle. Null is ignored.
///
/// # Safety
/// `dec` must be a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ecd_decomposition_free(dec: *mut EcdDecomposition) {
    if !dec.is_null() {
        drop(Box::from_raw(dec));
    }
}

/// Re-check a decomposition against its family: exact cover and, if flagged,
/// the superpure bound. Returns `Ok` or `Invalid` (message lists the first
/// violations).
///
/// # Safety
/// Both handles must be live handles from this library.
#[no_mangle]
pub unsafe extern "C" fn ecd_verify_decomposition(
    family: *const EcdFamily,
    dec: *const EcdDecomposition,
) -> EcdStatus {
    guarded(EcdStatus::Internal, || {
        let (Some(f), Some(d)) = (family.as_ref(), dec.as_ref()) else {
            set_error("null handle");
            return EcdStatus::NullPointer;
        };
        match search::verify_decomposition(&f.inner, &d.inner) {
            Ok(check) if check.ok => {
                clear_error();
                EcdStatus::Ok
            }
            Ok(check) => {
                set_error(check.violations.join("; "));
                EcdStatus::Invalid
            }
            Err(e) => {
                set_error(e.to_string());
                EcdStatus::Invalid
            }
        }
    })
}

/// Convert a decomposition into a code under the named construction kind
/// (`"ccc2w2"`, `"ccc2w3"`, `"cwc2w2"`, `"cwc2w3"` or `"mcwc"`), returned as
/// code-file text. Free with [`ecd_string_free`].
///
/// # Safety
/// `dec` must be a live handle and `kind` a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn ecd_code_from_decomposition(
    dec: *const EcdDecomposition,
    kind: *const c_char,
) -> *mut c_char {
    guarded(std::ptr::null_mut(), || {
        let Some(d) = dec.as_ref() else {
            set_error("decomposition handle is null");
            return std::ptr::null_mut();
        };
        let kind = match str_from(kind) {
            Ok(t) => t,
            Err(status) => {
                set_error(format!("bad kind argument: {status:?}"));
                return std::ptr::null_mut();
            }
        };
        let built =
            ConstructionKind::parse(kind).and_then(|k| codes::decomposition_to_code(&d.inner, k));
        match built {
            Ok(code) => {
                let mut buf = Vec::new();
                match model::write_code(&mut buf, &code) {
                    Ok(()) => {
                        clear_error();
                        to_cstring(String::from_utf8(buf).expect("code text is utf-8"))
                    }
                    Err(e) => {
                        set_error(e.to_string());
                        std::ptr::null_mut()
                    }
                }
            }
            Err(e) => {
                set_error(e.to_string());
                std::ptr::null_mut()
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn last_error() -> Option<String> {
        let ptr = ecd_last_error_message();
        if ptr.is_null() {
            return None;
        }
        let text = unsafe { CStr::from_ptr(ptr) }.to_string_lossy().into_owned();
        unsafe { ecd_string_free(ptr) };
        Some(text)
    }

    fn take_string(ptr: *mut c_char) -> String {
        assert!(!ptr.is_null(), "expected a string, error: {:?}", last_error());
        let text = unsafe { CStr::from_ptr(ptr) }.to_string_lossy().into_owned();
        unsafe { ecd_string_free(ptr) };
        text
    }

    #[test]
    fn bounds_through_the_abi() {
        let mut out = 0u64;
        let parts = [2u32, 1];
        let status = unsafe { ecd_bound_ccc(5, 4, parts.as_ptr(), 2, &mut out) };
        assert_eq!(status, EcdStatus::Ok);
        assert_eq!(out, 5);
        let status = unsafe { ecd_bound_mcwc(2, 5, 2, &mut out) };
        assert_eq!(status, EcdStatus::Ok);
        assert_eq!(out, 5);
        let status = unsafe { ecd_bound_cwc(3, 7, 4, 3, &mut out) };
        assert_eq!(status, EcdStatus::Ok);
        assert_eq!(out, 14);
        // A distance matching no bound form is invalid.
        let status = unsafe { ecd_bound_ccc(5, 7, parts.as_ptr(), 2, &mut out) };
        assert_eq!(status, EcdStatus::Invalid);
        assert!(last_error().is_some());
    }

    #[test]
    fn family_search_construct_verify_through_the_abi() {
        let parts = [2u32, 1];
        let family = unsafe { ecd_family_g(parts.as_ptr(), 2) };
        assert!(!family.is_null(), "{:?}", last_error());

        let json = take_string(unsafe { ecd_family_to_json(family) });
        assert!(json.contains("\"G[2,1]\""));
        let cjson = CString::new(json).unwrap();
        let family2 = unsafe { ecd_family_from_json(cjson.as_ptr()) };
        assert!(!family2.is_null());

        let mut dec: *mut EcdDecomposition = std::ptr::null_mut();
        let status = unsafe { ecd_search(family, 5, true, 0, 0, 1, &mut dec) };
        assert_eq!(status, EcdStatus::Ok);
        assert!(!dec.is_null());
        assert_eq!(unsafe { ecd_verify_decomposition(family, dec) }, EcdStatus::Ok);
        assert_eq!(unsafe { ecd_verify_decomposition(family2, dec) }, EcdStatus::Ok);

        let dec_json = take_string(unsafe { ecd_decomposition_to_json(dec) });
        let cdec = CString::new(dec_json).unwrap();
        let dec2 = unsafe { ecd_decomposition_from_json(cdec.as_ptr()) };
        assert!(!dec2.is_null());

        let kind = CString::new("ccc2w2").unwrap();
        let code = take_string(unsafe { ecd_code_from_decomposition(dec, kind.as_ptr()) });
        assert!(code.starts_with("q 3 n 5\n"));
        assert_eq!(code.lines().count(), 6, "header plus five codewords");

        unsafe {
            ecd_decomposition_free(dec);
            ecd_decomposition_free(dec2);
            ecd_family_free(family);
            ecd_family_free(family2);
        }
    }

    #[test]
    fn unsat_status_and_null_out() {
        let parts = [2u32, 1];
        let family = unsafe { ecd_family_g(parts.as_ptr(), 2) };
        let mut dec: *mut EcdDecomposition = std::ptr::null_mut();
        let status = unsafe { ecd_search(family, 4, true, 0, 0, 1, &mut dec) };
        assert_eq!(status, EcdStatus::Unsat);
        assert!(dec.is_null());
        unsafe { ecd_family_free(family) };
    }

    #[test]
    fn invariants_json_fields() {
        let parts = [3u32, 2];
        let family = unsafe { ecd_family_gstar(parts.as_ptr(), 2) };
        let json = take_string(unsafe { ecd_invariants_json(family, 13) });
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["alpha"], "6");
        assert_eq!(value["beta"], "6");
        assert_eq!(value["admissible"], true);
        assert_eq!(value["congruence_alpha"], true);
        assert_eq!(value["congruence_beta"], true);
        unsafe { ecd_family_free(family) };
    }

    #[test]
    fn null_pointers_are_rejected() {
        let mut out = 0u64;
        assert_eq!(
            unsafe { ecd_bound_ccc(5, 4, std::ptr::null(), 0, &mut out) },
            EcdStatus::NullPointer
        );
        assert!(unsafe { ecd_family_to_json(std::ptr::null()) }.is_null());
        let mut dec: *mut EcdDecomposition = std::ptr::null_mut();
        assert_eq!(
            unsafe { ecd_search(std::ptr::null(), 5, true, 0, 0, 1, &mut dec) },
            EcdStatus::NullPointer
        );
        unsafe {
            ecd_family_free(std::ptr::null_mut());
            ecd_decomposition_free(std::ptr::null_mut());
            ecd_string_free(std::ptr::null_mut());
        }
    }

    #[test]
    fn generated_header_exists_and_declares_the_api() {
        let header = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("include")
            .join("ecdecomp.h");
        let text = std::fs::read_to_string(&header).expect("header generated by build.rs");
        for symbol in [
            "ecd_family_g",
            "ecd_family_hstar",
            "ecd_search",
            "ecd_bound_mcwc",
            "ecd_code_from_decomposition",
            "ecd_string_free",
            "ECD_STATUS_OK",
            "ECD_STATUS_TIMEOUT",
        ] {
            assert!(text.contains(symbol), "header is missing {symbol}");
        }
        // The header must stand alone as C when a compiler is around.
        for cc in ["cc", "clang", "gcc"] {
            let probe = std::process::Command::new(cc)
                .args(["-fsyntax-only", "-x", "c"])
                .arg(&header)
                .output();
            if let Ok(out) = probe {
                assert!(
                    out.status.success(),
                    "{cc} rejected the header: {}",
                    String::from_utf8_lossy(&out.stderr)
                );
                return;
            }
        }
    }
}
