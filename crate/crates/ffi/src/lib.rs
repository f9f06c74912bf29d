//! C ABI over `relpk`.
//!
//! Contexts and nets are opaque heap handles released with their `_free`
//! function. Every fallible call returns a [`RelpkStatus`]; on failure the
//! message is kept per thread and read with [`relpk_last_error_message`].
//! Strings handed out by the library must be released with
//! [`relpk_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use relpk::cli::format::{HomographyFile, PkNetFile, ProgressionFile};
use relpk::context::Context;
use relpk::pknet::{apply_homography, verify_pknet, RelPKNet};
use relpk::Error;

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelpkStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed input: chords, words, JSON documents, unknown names.
    Parse = 3,
    /// Well-formed input that violates a structural requirement.
    Structure = 4,
    /// A net or homography failed verification.
    Verification = 5,
    BudgetExceeded = 6,
    Panic = 7,
}

impl From<&Error> for RelpkStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::ChordParse { .. }
            | Error::WordParse { .. }
            | Error::UnknownGenerator(_)
            | Error::UnknownPreset(_)
            | Error::UnknownElement(_)
            | Error::DuplicateLabel(_)
            | Error::Schema(_) => RelpkStatus::Parse,
            Error::Verification(_) => RelpkStatus::Verification,
            Error::BudgetExceeded { .. } => RelpkStatus::BudgetExceeded,
            Error::SetMismatch(_) | Error::EmptySet(_) | Error::Domain(_) | Error::Structure(_) => {
                RelpkStatus::Structure
            }
        }
    }
}

/// Opaque monoid context.
pub struct RelpkContext(Context);

/// Opaque PK-net.
pub struct RelpkNet(RelPKNet);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Failure(RelpkStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure((&e).into(), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> RelpkStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RelpkStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            RelpkStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(RelpkStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(RelpkStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn out<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| Failure(RelpkStatus::NullPointer, format!("{what} is null")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| Failure(RelpkStatus::NullPointer, format!("{what} is null")))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("no interior nul").into_raw()
}

/// Message of the last failed call on this thread, or null. Owned by the
/// library; valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn relpk_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn relpk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds one of the preset contexts (`upl`, `s`, `t`, `st`, `ti`).
///
/// # Safety
/// `name` must be a nul-terminated string; `out_ctx` must be writable.
#[no_mangle]
pub unsafe extern "C" fn relpk_context_new(name: *const c_char, out_ctx: *mut *mut RelpkContext) -> RelpkStatus {
    guard(|| {
        let slot = out(out_ctx, "out_ctx")?;
        *slot = ptr::null_mut();
        let ctx = Context::by_name(text(name, "name")?)?;
        *slot = Box::into_raw(Box::new(RelpkContext(ctx)));
        Ok(())
    })
}

/// # Safety
/// `ctx` must come from [`relpk_context_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn relpk_context_free(ctx: *mut RelpkContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Number of elements of the context's monoid.
///
/// # Safety
/// `ctx` must be a live handle; `out_size` must be writable.
#[no_mangle]
pub unsafe extern "C" fn relpk_context_size(ctx: *const RelpkContext, out_size: *mut usize) -> RelpkStatus {
    guard(|| {
        *out(out_size, "out_size")? = handle(ctx, "ctx")?.0.len();
        Ok(())
    })
}

/// Canonical words of the elements relating chord `a` to chord `b`, joined
/// by `", "`. The string is empty when no element relates them.
///
/// # Safety
/// `ctx` must be a live handle, `a` and `b` nul-terminated strings and
/// `out_words` writable.
#[no_mangle]
pub unsafe extern "C" fn relpk_context_relate(
    ctx: *const RelpkContext,
    a: *const c_char,
    b: *const c_char,
    out_words: *mut *mut c_char,
) -> RelpkStatus {
    guard(|| {
        let slot = out(out_words, "out_words")?;
        *slot = ptr::null_mut();
        let ctx = &handle(ctx, "ctx")?.0;
        let found = ctx.relate(text(a, "a")?, text(b, "b")?)?;
        let words: Vec<String> = found.into_iter().map(|e| ctx.element_name(e)).collect();
        *slot = c_string(words.join(", "));
        Ok(())
    })
}

/// Parses a PK-net document.
///
/// # Safety
/// `json` must be a nul-terminated string; `out_net` must be writable.
#[no_mangle]
pub unsafe extern "C" fn relpk_net_from_json(json: *const c_char, out_net: *mut *mut RelpkNet) -> RelpkStatus {
    guard(|| {
        let slot = out(out_net, "out_net")?;
        *slot = ptr::null_mut();
        let net = PkNetFile::parse(text(json, "json")?)?.build()?;
        *slot = Box::into_raw(Box::new(RelpkNet(net)));
        Ok(())
    })
}

/// # Safety
/// `net` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn relpk_net_free(net: *mut RelpkNet) {
    if !net.is_null() {
        drop(Box::from_raw(net));
    }
}

/// Serializes a net back to its JSON document.
///
/// # Safety
/// `net` must be a live handle; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn relpk_net_to_json(net: *const RelpkNet, out_json: *mut *mut c_char) -> RelpkStatus {
    guard(|| {
        let slot = out(out_json, "out_json")?;
        let file = PkNetFile::from_net(&handle(net, "net")?.0);
        *slot = c_string(serde_json::to_string_pretty(&file).expect("serializable"));
        Ok(())
    })
}

/// Checks every net condition. `out_passed` receives the verdict;
/// `out_report`, if not null, receives the JSON check list. A failed check
/// is not an error: the status stays `Ok`.
///
/// # Safety
/// `net` must be a live handle; `out_passed` must be writable and
/// `out_report` null or writable.
#[no_mangle]
pub unsafe extern "C" fn relpk_net_verify(
    net: *const RelpkNet,
    out_passed: *mut bool,
    out_report: *mut *mut c_char,
) -> RelpkStatus {
    guard(|| {
        let passed = out(out_passed, "out_passed")?;
        let report = verify_pknet(&handle(net, "net")?.0)?;
        *passed = report.passed();
        if let Some(slot) = out_report.as_mut() {
            *slot = c_string(serde_json::to_string_pretty(&report).expect("serializable"));
        }
        Ok(())
    })
}

/// Applies the homography described by `hom_json` and returns the image
/// net, which is verified before being handed back.
///
/// # Safety
/// `net` must be a live handle, `hom_json` a nul-terminated string and
/// `out_net` writable.
#[no_mangle]
pub unsafe extern "C" fn relpk_net_apply_homography(
    net: *const RelpkNet,
    hom_json: *const c_char,
    out_net: *mut *mut RelpkNet,
) -> RelpkStatus {
    guard(|| {
        let slot = out(out_net, "out_net")?;
        *slot = ptr::null_mut();
        let net = &handle(net, "net")?.0;
        let hom = HomographyFile::parse(text(hom_json, "hom_json")?)?.build(net)?;
        *slot = Box::into_raw(Box::new(RelpkNet(apply_homography(net, &hom)?)));
        Ok(())
    })
}

/// Analyzes a chord progression document and returns the analysis JSON.
///
/// # Safety
/// `json` must be a nul-terminated string; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn relpk_analyze_json(json: *const c_char, out_json: *mut *mut c_char) -> RelpkStatus {
    guard(|| {
        let slot = out(out_json, "out_json")?;
        *slot = ptr::null_mut();
        let result = relpk::cli::analyze(&ProgressionFile::parse(text(json, "json")?)?)?;
        *slot = c_string(serde_json::to_string_pretty(&result).expect("serializable"));
        Ok(())
    })
}
