//! C ABI for `gammacert`.
//!
//! Every entry point returns a [`GammacertStatus`]; results go through out
//! pointers. On a non-OK status the message is available from
//! [`gammacert_last_error_message`] until the next call on the same thread.
//! Reports and polynomials are opaque handles released with their `_free`
//! function. Strings returned by the library are released with
//! [`gammacert_string_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use libc::{c_char, size_t};

use gammacert::certify::{self, Status, VerificationReport};
use gammacert::exactpoly::{certify_positive_on_ray, RationalPolynomial};
use gammacert::functions::{self, HFunction};
use gammacert::{rational, specfun, Enclosure, Error};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammacertStatus {
    Ok = 0,
    Domain = 1,
    Inconclusive = 2,
    Overflow = 3,
    Parse = 4,
    NullPointer = 5,
    Panic = 6,
}

/// Report verdict. Values match the CLI exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammacertVerdict {
    Pass = 0,
    Fail = 1,
    Inconclusive = 3,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammacertHFunction {
    H = 0,
    H1 = 1,
    H2 = 2,
    H2p = 3,
    H2pp = 4,
    H2ppp = 5,
}

/// Closed interval `[lo, hi]` guaranteed to contain the exact value.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammacertEnclosure {
    pub lo: f64,
    pub hi: f64,
}

/// Opaque verification report.
pub struct GammacertReport(VerificationReport);

/// Opaque exact rational polynomial.
pub struct GammacertPolynomial(RationalPolynomial);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_last_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> GammacertStatus {
    match e {
        Error::Domain(_) => GammacertStatus::Domain,
        Error::InconclusivePrecision(_) => GammacertStatus::Inconclusive,
        Error::Overflow(_) => GammacertStatus::Overflow,
        Error::Parse(_) => GammacertStatus::Parse,
    }
}

/// Runs `f`, translating errors and panics into a status code.
fn guard<F>(f: F) -> GammacertStatus
where
    F: FnOnce() -> Result<(), (GammacertStatus, String)>,
{
    clear_last_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => GammacertStatus::Ok,
        Ok(Err((status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            GammacertStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (GammacertStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (GammacertStatus, String) {
    (GammacertStatus::NullPointer, format!("{what} is null"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), (GammacertStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn enclosure(e: Enclosure) -> GammacertEnclosure {
    GammacertEnclosure {
        lo: e.lo(),
        hi: e.hi(),
    }
}

unsafe fn eval_into(
    out: *mut GammacertEnclosure,
    f: impl FnOnce() -> gammacert::Result<Enclosure>,
) -> GammacertStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let v = f().map_err(lib_err)?;
        write_out(out, enclosure(v))
    })
}

/// Message for the last non-OK status on this thread, or null. The pointer
/// stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn gammacert_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// ln Γ(x) for x > 0.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gammacert_ln_gamma(
    x: f64,
    out: *mut GammacertEnclosure,
) -> GammacertStatus {
    eval_into(out, || specfun::ln_gamma(Enclosure::point(x)))
}

/// ψ⁽ᵏ⁾(x) for k in 0..=2 and x > 0.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gammacert_polygamma(
    k: u32,
    x: f64,
    out: *mut GammacertEnclosure,
) -> GammacertStatus {
    eval_into(out, || specfun::polygamma(k, Enclosure::point(x)))
}

/// F(x) for x >= 0.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gammacert_f(x: f64, out: *mut GammacertEnclosure) -> GammacertStatus {
    eval_into(out, || functions::f_ratio(x))
}

/// G(x) for x > 1; overflows close to 1.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gammacert_g(x: f64, out: *mut GammacertEnclosure) -> GammacertStatus {
    eval_into(out, || functions::g_power(x))
}

/// ln G(x) for x > 1.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gammacert_ln_g(x: f64, out: *mut GammacertEnclosure) -> GammacertStatus {
    eval_into(out, || functions::ln_g(x))
}

/// Volume of the n-dimensional unit ball, n >= 1.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gammacert_unit_ball_volume(
    n: u64,
    out: *mut GammacertEnclosure,
) -> GammacertStatus {
    eval_into(out, || functions::unit_ball_volume(n))
}

/// Unit-ball sequence term G(n/2), n >= 3.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gammacert_omega_sequence_term(
    n: u64,
    out: *mut GammacertEnclosure,
) -> GammacertStatus {
    eval_into(out, || functions::omega_sequence_term(n))
}

/// Member of the h family at x >= 1.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gammacert_h_family(
    which: GammacertHFunction,
    x: f64,
    out: *mut GammacertEnclosure,
) -> GammacertStatus {
    let which = match which {
        GammacertHFunction::H => HFunction::H,
        GammacertHFunction::H1 => HFunction::H1,
        GammacertHFunction::H2 => HFunction::H2,
        GammacertHFunction::H2p => HFunction::H2p,
        GammacertHFunction::H2pp => HFunction::H2pp,
        GammacertHFunction::H2ppp => HFunction::H2ppp,
    };
    eval_into(out, || functions::h_family(which, x))
}

unsafe fn verify_into(
    out: *mut *mut GammacertReport,
    f: impl FnOnce() -> gammacert::Result<VerificationReport>,
) -> GammacertStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let report = f().map_err(lib_err)?;
        write_out(out, Box::into_raw(Box::new(GammacertReport(report))))
    })
}

/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gammacert_verify_lemma2(
    out: *mut *mut GammacertReport,
) -> GammacertStatus {
    verify_into(out, || Ok(certify::verify_lemma2()))
}

/// Runs with the default F grid [0, 50], step 0.01.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gammacert_verify_theorem1(
    out: *mut *mut GammacertReport,
) -> GammacertStatus {
    verify_into(out, certify::verify_theorem1)
}

/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gammacert_verify_theorem2(
    n_max: u64,
    out: *mut *mut GammacertReport,
) -> GammacertStatus {
    verify_into(out, || certify::verify_theorem2(n_max))
}

/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gammacert_verify_remark1(
    n_max: u64,
    out: *mut *mut GammacertReport,
) -> GammacertStatus {
    verify_into(out, || certify::verify_remark1(n_max))
}

unsafe fn report_ref<'a>(
    r: *const GammacertReport,
) -> Result<&'a VerificationReport, (GammacertStatus, String)> {
    r.as_ref().map(|r| &r.0).ok_or_else(|| null("report"))
}

/// # Safety
/// `report` must be a live handle or null; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gammacert_report_overall(
    report: *const GammacertReport,
    out: *mut GammacertVerdict,
) -> GammacertStatus {
    guard(|| {
        let verdict = match report_ref(report)?.overall {
            Status::Pass => GammacertVerdict::Pass,
            Status::Fail => GammacertVerdict::Fail,
            Status::Inconclusive => GammacertVerdict::Inconclusive,
        };
        write_out(out, verdict)
    })
}

/// # Safety
/// `report` must be a live handle or null; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gammacert_report_step_count(
    report: *const GammacertReport,
    out: *mut size_t,
) -> GammacertStatus {
    guard(|| write_out(out, report_ref(report)?.steps.len()))
}

/// JSON rendering of the report, to be released with `gammacert_string_free`.
///
/// # Safety
/// `report` must be a live handle or null; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gammacert_report_to_json(
    report: *const GammacertReport,
    out: *mut *mut c_char,
) -> GammacertStatus {
    guard(|| {
        let json = report_ref(report)?.to_json();
        let c = CString::new(json).map_err(|e| (GammacertStatus::Parse, e.to_string()))?;
        write_out(out, c.into_raw())
    })
}

/// # Safety
/// `report` must come from a `gammacert_verify_*` call and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn gammacert_report_free(report: *mut GammacertReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn gammacert_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Polynomial from `len` integer coefficients, lowest degree first.
///
/// # Safety
/// `coeffs` must point to `len` readable values (or be null when `len` is 0);
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gammacert_polynomial_from_ints(
    coeffs: *const i64,
    len: size_t,
    out: *mut *mut GammacertPolynomial,
) -> GammacertStatus {
    guard(|| {
        let slice = if len == 0 {
            &[][..]
        } else if coeffs.is_null() {
            return Err(null("coefficient array"));
        } else {
            std::slice::from_raw_parts(coeffs, len)
        };
        let p = RationalPolynomial::from_ints(slice);
        write_out(out, Box::into_raw(Box::new(GammacertPolynomial(p))))
    })
}

/// Polynomial from `len` rational coefficient strings such as `"-3/4"`,
/// lowest degree first.
///
/// # Safety
/// `coeffs` must point to `len` NUL-terminated strings; `out` must be null or
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gammacert_polynomial_from_fractions(
    coeffs: *const *const c_char,
    len: size_t,
    out: *mut *mut GammacertPolynomial,
) -> GammacertStatus {
    guard(|| {
        if coeffs.is_null() && len > 0 {
            return Err(null("coefficient array"));
        }
        let mut items = Vec::with_capacity(len);
        for i in 0..len {
            let s = *coeffs.add(i);
            if s.is_null() {
                return Err(null("coefficient string"));
            }
            let s = CStr::from_ptr(s)
                .to_str()
                .map_err(|e| (GammacertStatus::Parse, e.to_string()))?;
            items.push(s.to_string());
        }
        let p = RationalPolynomial::from_fraction_strings(&items).map_err(lib_err)?;
        write_out(out, Box::into_raw(Box::new(GammacertPolynomial(p))))
    })
}

/// Decides positivity on `[a, inf)` with `a` given as a rational string.
/// `out_positive` receives 1 when certified and 0 otherwise.
///
/// # Safety
/// `poly` must be a live handle; `a` a NUL-terminated string; `out_positive`
/// null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gammacert_polynomial_certify_positive(
    poly: *const GammacertPolynomial,
    a: *const c_char,
    out_positive: *mut i32,
) -> GammacertStatus {
    guard(|| {
        let p = poly.as_ref().ok_or_else(|| null("polynomial"))?;
        if a.is_null() {
            return Err(null("ray start"));
        }
        let a = CStr::from_ptr(a)
            .to_str()
            .map_err(|e| (GammacertStatus::Parse, e.to_string()))?;
        let a = rational::parse(a).map_err(lib_err)?;
        let cert = certify_positive_on_ray(&p.0, &a);
        write_out(out_positive, i32::from(cert.is_positive()))
    })
}

/// Exact value at a rational point, as a `"num/den"` string to be released
/// with `gammacert_string_free`.
///
/// # Safety
/// `poly` must be a live handle; `x` a NUL-terminated string; `out` null or
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gammacert_polynomial_eval(
    poly: *const GammacertPolynomial,
    x: *const c_char,
    out: *mut *mut c_char,
) -> GammacertStatus {
    guard(|| {
        let p = poly.as_ref().ok_or_else(|| null("polynomial"))?;
        if x.is_null() {
            return Err(null("point"));
        }
        let x = CStr::from_ptr(x)
            .to_str()
            .map_err(|e| (GammacertStatus::Parse, e.to_string()))?;
        let x = rational::parse(x).map_err(lib_err)?;
        let v = rational::to_fraction_string(&p.0.eval_at(&x));
        let c = CString::new(v).expect("no interior NUL");
        write_out(out, c.into_raw())
    })
}

/// # Safety
/// `poly` must come from a `gammacert_polynomial_*` constructor and not be
/// freed twice.
#[no_mangle]
pub unsafe extern "C" fn gammacert_polynomial_free(poly: *mut GammacertPolynomial) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}
