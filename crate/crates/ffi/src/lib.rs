//! C ABI over `repdesc`.
//!
//! Objects cross the boundary as opaque handles created by `*_from_json` or
//! constructor functions and released with the matching `*_free`. Every
//! fallible function returns a [`RepdescStatus`]; on failure the message is
//! available from [`repdesc_last_error`]. Strings returned through `char **`
//! out-parameters are owned by the caller and released with
//! [`repdesc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use repdesc::brauer::{devissage, verify_certificate, DevissageCertificate};
use repdesc::cyclo::GaloisAut;
use repdesc::descent::simple_root_scan;
use repdesc::grp::{named, Group, Subgroup, DEFAULT_ORDER_BOUND};
use repdesc::harness::run_harness;
use repdesc::io;
use repdesc::rep::{char_table, realize_irreducible, MatrixRep};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepdescStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Malformed JSON or an input that fails validation.
    InvalidInput = 3,
    /// A mathematical precondition or check failed.
    MathFailure = 4,
    /// An internal error; the library caught a panic.
    Internal = 5,
}

pub struct RepdescGroup {
    inner: Group,
}

pub struct RepdescSubgroup {
    inner: Subgroup,
}

pub struct RepdescRep {
    inner: MatrixRep,
}

pub struct RepdescCertificate {
    inner: DevissageCertificate,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

struct Fail(RepdescStatus, String);

fn input(e: impl ToString) -> Fail {
    Fail(RepdescStatus::InvalidInput, e.to_string())
}

fn math(e: impl ToString) -> Fail {
    Fail(RepdescStatus::MathFailure, e.to_string())
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> RepdescStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RepdescStatus::Ok,
        Ok(Err(Fail(code, msg))) => {
            set_error(msg);
            code
        }
        Err(_) => {
            set_error("internal error");
            RepdescStatus::Internal
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(RepdescStatus::NullArgument, "null string argument".into()));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(RepdescStatus::InvalidUtf8, "argument is not UTF-8".into()))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(RepdescStatus::NullArgument, "null handle".into()))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(RepdescStatus::NullArgument, "null output pointer".into()));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(RepdescStatus::NullArgument, "null output pointer".into()));
    }
    *out = CString::new(s).map_err(|_| Fail(RepdescStatus::Internal, "interior NUL".into()))?.into_raw();
    Ok(())
}

unsafe fn put_bool(out: *mut bool, b: bool) {
    if !out.is_null() {
        *out = b;
    }
}

/// Message of the last failure on this thread, or null if none. The caller
/// owns the returned string.
#[no_mangle]
pub extern "C" fn repdesc_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |s| s.clone().into_raw()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn repdesc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ---- groups ----

/// Parse a group document (`{"degree", "generators", "name"?}`); orders above
/// `bound` are rejected, and `bound = 0` selects the default cap.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn repdesc_group_from_json(
    json: *const c_char,
    bound: usize,
    out: *mut *mut RepdescGroup,
) -> RepdescStatus {
    guard(|| {
        let v = io::parse(text(json)?).map_err(input)?;
        let bound = if bound == 0 { DEFAULT_ORDER_BOUND } else { bound };
        let g = io::group_from_json(&v, bound).map_err(input)?;
        put(out, RepdescGroup { inner: g })
    })
}

/// A built-in group by name: `S3`, `D4`, `Q8`, `A4`, `C12`, `S6`, ...
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn repdesc_group_named(name: *const c_char, out: *mut *mut RepdescGroup) -> RepdescStatus {
    guard(|| {
        let name = text(name)?;
        let g = named::by_name(name).ok_or_else(|| input(format!("unknown group {name:?}")))?;
        put(out, RepdescGroup { inner: g })
    })
}

/// # Safety
/// `g` must be a live group handle.
#[no_mangle]
pub unsafe extern "C" fn repdesc_group_order(g: *const RepdescGroup) -> usize {
    g.as_ref().map_or(0, |g| g.inner.order())
}

/// # Safety
/// `g` must be a live group handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn repdesc_group_to_json(g: *const RepdescGroup, out: *mut *mut c_char) -> RepdescStatus {
    guard(|| put_string(out, io::render(&io::group_to_json(&handle(g)?.inner))))
}

/// Character table with class representatives and sizes, as JSON.
///
/// # Safety
/// `g` must be a live group handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn repdesc_char_table_json(g: *const RepdescGroup, out: *mut *mut c_char) -> RepdescStatus {
    guard(|| {
        let g = &handle(g)?.inner;
        put_string(out, io::render(&io::char_table_to_json(g, &char_table(g))))
    })
}

/// # Safety
/// `g` must be null or a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn repdesc_group_free(g: *mut RepdescGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

// ---- subgroups ----

/// Parse `{"generators": [...]}` as a subgroup of `g`.
///
/// # Safety
/// `g` must be a live group handle, `json` a NUL-terminated string and `out`
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn repdesc_subgroup_from_json(
    g: *const RepdescGroup,
    json: *const c_char,
    out: *mut *mut RepdescSubgroup,
) -> RepdescStatus {
    guard(|| {
        let g = &handle(g)?.inner;
        let v = io::parse(text(json)?).map_err(input)?;
        let h = io::subgroup_from_json(&v, Some(g)).map_err(input)?;
        put(out, RepdescSubgroup { inner: h })
    })
}

/// # Safety
/// `h` must be a live subgroup handle.
#[no_mangle]
pub unsafe extern "C" fn repdesc_subgroup_order(h: *const RepdescSubgroup) -> usize {
    h.as_ref().map_or(0, |h| h.inner.order())
}

/// # Safety
/// `h` must be null or a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn repdesc_subgroup_free(h: *mut RepdescSubgroup) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

// ---- representations ----

/// Parse a representation of `g`; the generator images are checked.
///
/// # Safety
/// `g` must be a live group handle, `json` a NUL-terminated string and `out`
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn repdesc_rep_from_json(
    g: *const RepdescGroup,
    json: *const c_char,
    out: *mut *mut RepdescRep,
) -> RepdescStatus {
    guard(|| {
        let g = &handle(g)?.inner;
        let v = io::parse(text(json)?).map_err(input)?;
        let rho = io::rep_from_json(&v, Some(g)).map_err(input)?;
        put(out, RepdescRep { inner: rho })
    })
}

/// Explicit matrices for the `index`-th irreducible character of `g`.
///
/// # Safety
/// `g` must be a live group handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn repdesc_rep_irreducible(
    g: *const RepdescGroup,
    index: usize,
    out: *mut *mut RepdescRep,
) -> RepdescStatus {
    guard(|| {
        let g = &handle(g)?.inner;
        let table = char_table(g);
        let chi = table.get(index).ok_or_else(|| input(format!("index {index} out of range")))?;
        let rho = realize_irreducible(chi).map_err(math)?;
        put(out, RepdescRep { inner: rho })
    })
}

/// # Safety
/// `rho` must be a live representation handle.
#[no_mangle]
pub unsafe extern "C" fn repdesc_rep_rank(rho: *const RepdescRep) -> usize {
    rho.as_ref().map_or(0, |r| r.inner.rank())
}

/// # Safety
/// `rho` must be a live representation handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn repdesc_rep_to_json(rho: *const RepdescRep, out: *mut *mut c_char) -> RepdescStatus {
    guard(|| put_string(out, io::render(&io::rep_to_json(&handle(rho)?.inner))))
}

/// Per-class simple-root report as JSON; `found` (may be null) receives
/// whether any class has an eigenvalue of multiplicity one.
///
/// # Safety
/// `rho` must be a live representation handle and `out` a valid pointer;
/// `found` may be null.
#[no_mangle]
pub unsafe extern "C" fn repdesc_simple_root_scan(
    rho: *const RepdescRep,
    found: *mut bool,
    out: *mut *mut c_char,
) -> RepdescStatus {
    guard(|| {
        let scan = simple_root_scan(&handle(rho)?.inner);
        put_bool(found, scan.iter().any(|c| c.has_simple_root));
        put_string(out, io::render(&io::scan_to_json(&scan)))
    })
}

/// # Safety
/// `rho` must be null or a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn repdesc_rep_free(rho: *mut RepdescRep) {
    if !rho.is_null() {
        drop(Box::from_raw(rho));
    }
}

// ---- certificates ----

/// Dévissage certificate of `rho` relative to the normal subgroup `n`.
///
/// # Safety
/// `rho` and `n` must be live handles over the same group and `out` a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn repdesc_devissage(
    rho: *const RepdescRep,
    n: *const RepdescSubgroup,
    out: *mut *mut RepdescCertificate,
) -> RepdescStatus {
    guard(|| {
        let rho = &handle(rho)?.inner;
        let n = &handle(n)?.inner;
        let cert = devissage(rho, rho.group(), n).map_err(math)?;
        put(out, RepdescCertificate { inner: cert })
    })
}

/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn repdesc_certificate_from_json(
    json: *const c_char,
    out: *mut *mut RepdescCertificate,
) -> RepdescStatus {
    guard(|| {
        let v = io::parse(text(json)?).map_err(input)?;
        let cert = io::certificate_from_json(&v, None).map_err(input)?;
        put(out, RepdescCertificate { inner: cert })
    })
}

/// # Safety
/// `c` must be a live certificate handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn repdesc_certificate_to_json(
    c: *const RepdescCertificate,
    out: *mut *mut c_char,
) -> RepdescStatus {
    guard(|| put_string(out, io::render(&io::certificate_to_json(&handle(c)?.inner))))
}

/// Independent re-verification. `ok` (may be null) receives the verdict and
/// `report` (may be null) the JSON report; a failed check is not an error.
///
/// # Safety
/// `c` must be a live certificate handle; `ok` and `report` may be null.
#[no_mangle]
pub unsafe extern "C" fn repdesc_certificate_verify(
    c: *const RepdescCertificate,
    ok: *mut bool,
    report: *mut *mut c_char,
) -> RepdescStatus {
    guard(|| {
        let r = verify_certificate(&handle(c)?.inner);
        put_bool(ok, r.ok());
        if !report.is_null() {
            put_string(report, io::render(&io::certificate_report_to_json(&r)))?;
        }
        Ok(())
    })
}

/// # Safety
/// `c` must be null or a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn repdesc_certificate_free(c: *mut RepdescCertificate) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

// ---- harness and command line ----

/// Full harness run with the twist `ζ_modulus ↦ ζ_modulus^k`
/// (`modulus = 0` uses the conductor of `rho`). `passed` (may be null)
/// receives the overall verdict; `out` the JSON report.
///
/// # Safety
/// `rho` and `n` must be live handles over the same group and `out` a valid
/// pointer; `passed` may be null.
#[no_mangle]
pub unsafe extern "C" fn repdesc_harness(
    rho: *const RepdescRep,
    n: *const RepdescSubgroup,
    k: i64,
    modulus: u64,
    seed: u64,
    passed: *mut bool,
    out: *mut *mut c_char,
) -> RepdescStatus {
    guard(|| {
        let rho = &handle(rho)?.inner;
        let n = &handle(n)?.inner;
        let modulus = if modulus == 0 { rho.conductor().max(1) } else { modulus };
        let twist = GaloisAut::new(modulus, k).map_err(input)?;
        let report = run_harness(rho, rho.group(), n, &twist, seed).map_err(math)?;
        put_bool(passed, report.passed());
        put_string(out, io::render(&io::harness_report_to_json(&report)))
    })
}

/// Run the command line with `argv[0..argc]` (`argv[0]` is the program
/// name). `exit_code` receives the process exit code the command would
/// return and `out` its standard output.
///
/// # Safety
/// `argv` must point to `argc` NUL-terminated strings; `exit_code` and `out`
/// must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn repdesc_cli_run(
    argc: c_int,
    argv: *const *const c_char,
    exit_code: *mut c_int,
    out: *mut *mut c_char,
) -> RepdescStatus {
    guard(|| {
        if argv.is_null() || exit_code.is_null() || argc < 0 {
            return Err(Fail(RepdescStatus::NullArgument, "null argv or exit code".into()));
        }
        let args = (0..argc as usize)
            .map(|i| text(*argv.add(i)).map(str::to_string))
            .collect::<Result<Vec<_>, _>>()?;
        let result = repdesc::cli::run(&args);
        *exit_code = result.code;
        if !result.stderr.is_empty() {
            set_error(result.stderr.trim_end());
        }
        put_string(out, result.stdout)
    })
}
