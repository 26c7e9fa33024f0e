//! C ABI over the dioph core: opaque polynomial handles, decimal-string
//! numeric exchange, and JSON blobs for structured verdicts.
//!
//! Conventions shared by every entry point:
//!
//! * Inputs are NUL-terminated UTF-8; big integers travel as decimal
//!   strings in both directions (no precision loss at the boundary).
//! * Results come back through `out` pointers; the return value is a
//!   [`DiophStatus`]. An `out` value is written only on `DIOPH_STATUS_OK`,
//!   and is otherwise nulled/zeroed.
//! * Strings returned through `out` are owned by the caller and must be
//!   released with [`dioph_string_free`]; handles with [`dioph_poly_free`].
//! * On any non-OK status a message is stored thread-locally and can be
//!   fetched with [`dioph_last_error_message`].
//! * Panics never unwind across the boundary; they surface as
//!   `DIOPH_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, c_longlong, c_ulonglong, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_bigint::BigInt;
use serde_json::json;

use dioph::classifier::{
    classify_general_equation, classify_product_equation, ProductForm, Verdict,
};
use dioph::cli::parse::{parse_poly, parse_product_form};
use dioph::cli::report::witness_json;
use dioph::polynomial::Degree;
use dioph::search::enumerate_solutions;
use dioph::shift::find_shift_witness;
use dioph::{Error, IntPoly};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiophStatus {
    /// Success; out parameters are valid.
    Ok = 0,
    /// Input violated a mathematical precondition.
    Domain = 1,
    /// A configured work or memory bound was exceeded.
    Capacity = 2,
    /// Malformed expression or number.
    Syntax = 3,
    /// A required pointer argument was null.
    NullPointer = 4,
    /// An input string was not valid UTF-8.
    InvalidUtf8 = 5,
    /// Internal error; the library caught a panic at the boundary.
    Panic = 6,
}

/// Opaque handle to an exact integer polynomial.
pub struct DiophPoly(IntPoly);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = Some(CString::new(sanitized).expect("no interior NUL"));
    });
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn fail(e: &Error) -> DiophStatus {
    set_error(&e.to_string());
    match e {
        Error::Domain(_) => DiophStatus::Domain,
        Error::Capacity(_) => DiophStatus::Capacity,
        Error::Syntax(_) => DiophStatus::Syntax,
    }
}

fn guard(body: impl FnOnce() -> DiophStatus) -> DiophStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic at the FFI boundary");
            DiophStatus::Panic
        }
    }
}

/// Read a required C string argument.
unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, DiophStatus> {
    if p.is_null() {
        set_error(&format!("{what} must not be null"));
        return Err(DiophStatus::NullPointer);
    }
    match CStr::from_ptr(p).to_str() {
        Ok(s) => Ok(s),
        Err(_) => {
            set_error(&format!("{what} is not valid UTF-8"));
            Err(DiophStatus::InvalidUtf8)
        }
    }
}

fn read_bigint(text: &str, what: &str) -> Result<BigInt, DiophStatus> {
    match text.trim().parse::<BigInt>() {
        Ok(n) => Ok(n),
        Err(_) => {
            set_error(&format!("{what} must be a decimal integer, got '{text}'"));
            Err(DiophStatus::Syntax)
        }
    }
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> DiophStatus {
    let c = CString::new(s.replace('\0', " ")).expect("no interior NUL");
    *out = c.into_raw();
    DiophStatus::Ok
}

fn verdict_json_string(v: &Verdict) -> String {
    json!({
        "verdict": v.tag.to_string(),
        "theorem": v.theorem,
        "witness": v.witness.as_ref().map(witness_json),
        "diagnostics": v.notes,
    })
    .to_string()
}

/// Static version string of the underlying library; never freed.
#[no_mangle]
pub extern "C" fn dioph_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Fetch the thread-local message from the most recent failure. Writes null
/// when no failure has occurred on this thread. The caller frees the string.
#[no_mangle]
pub unsafe extern "C" fn dioph_last_error_message(out: *mut *mut c_char) -> DiophStatus {
    if out.is_null() {
        return DiophStatus::NullPointer;
    }
    *out = ptr::null_mut();
    LAST_ERROR.with(|slot| match &*slot.borrow() {
        Some(msg) => {
            *out = msg.clone().into_raw();
            DiophStatus::Ok
        }
        None => DiophStatus::Ok,
    })
}

/// Release a string returned by this library. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn dioph_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse a polynomial expression in the named variable (e.g. "x^2+1", "x").
#[no_mangle]
pub unsafe extern "C" fn dioph_poly_parse(
    text: *const c_char,
    var: *const c_char,
    out: *mut *mut DiophPoly,
) -> DiophStatus {
    guard(|| {
        if out.is_null() {
            set_error("out must not be null");
            return DiophStatus::NullPointer;
        }
        *out = ptr::null_mut();
        let text = match read_str(text, "text") {
            Ok(s) => s,
            Err(status) => return status,
        };
        let var = match read_str(var, "var") {
            Ok(s) => s,
            Err(status) => return status,
        };
        match parse_poly(text, var) {
            Ok(poly) => {
                clear_error();
                *out = Box::into_raw(Box::new(DiophPoly(poly)));
                DiophStatus::Ok
            }
            Err(e) => fail(&Error::Syntax(e)),
        }
    })
}

/// Release a polynomial handle. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn dioph_poly_free(p: *mut DiophPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Degree of the polynomial; the zero polynomial reports -1.
#[no_mangle]
pub unsafe extern "C" fn dioph_poly_degree(
    p: *const DiophPoly,
    out_degree: *mut c_longlong,
) -> DiophStatus {
    guard(|| {
        if p.is_null() || out_degree.is_null() {
            set_error("p and out_degree must not be null");
            return DiophStatus::NullPointer;
        }
        *out_degree = match (*p).0.degree() {
            Degree::Finite(d) => d as c_longlong,
            Degree::MinusInfinity => -1,
        };
        clear_error();
        DiophStatus::Ok
    })
}

/// Render the polynomial in the named variable. The caller frees the string.
#[no_mangle]
pub unsafe extern "C" fn dioph_poly_to_string(
    p: *const DiophPoly,
    var: *const c_char,
    out: *mut *mut c_char,
) -> DiophStatus {
    guard(|| {
        if p.is_null() || out.is_null() {
            set_error("p and out must not be null");
            return DiophStatus::NullPointer;
        }
        *out = ptr::null_mut();
        let var = match read_str(var, "var") {
            Ok(s) => s,
            Err(status) => return status,
        };
        clear_error();
        write_string(out, (*p).0.to_string_var(var))
    })
}

/// Evaluate at an integer given as a decimal string; the value comes back
/// as a decimal string the caller frees.
#[no_mangle]
pub unsafe extern "C" fn dioph_poly_eval(
    p: *const DiophPoly,
    x_decimal: *const c_char,
    out: *mut *mut c_char,
) -> DiophStatus {
    guard(|| {
        if p.is_null() || out.is_null() {
            set_error("p and out must not be null");
            return DiophStatus::NullPointer;
        }
        *out = ptr::null_mut();
        let text = match read_str(x_decimal, "x") {
            Ok(s) => s,
            Err(status) => return status,
        };
        let x = match read_bigint(text, "x") {
            Ok(n) => n,
            Err(status) => return status,
        };
        clear_error();
        write_string(out, (*p).0.eval(&x).to_string())
    })
}

/// New handle holding `p(x + c)` for integer `c` given as a decimal string.
#[no_mangle]
pub unsafe extern "C" fn dioph_poly_taylor_shift(
    p: *const DiophPoly,
    c_decimal: *const c_char,
    out: *mut *mut DiophPoly,
) -> DiophStatus {
    guard(|| {
        if p.is_null() || out.is_null() {
            set_error("p and out must not be null");
            return DiophStatus::NullPointer;
        }
        *out = ptr::null_mut();
        let text = match read_str(c_decimal, "c") {
            Ok(s) => s,
            Err(status) => return status,
        };
        let c = match read_bigint(text, "c") {
            Ok(n) => n,
            Err(status) => return status,
        };
        clear_error();
        *out = Box::into_raw(Box::new(DiophPoly((*p).0.taylor_shift(&c))));
        DiophStatus::Ok
    })
}

/// Classify `(y+q_1)...(y+q_m) = f(x)`. `shifts` uses the CLI syntax
/// ("0,1" or "(y)(y+2)"); `f` is an expression in x. The JSON object has
/// fields verdict, theorem, witness, diagnostics.
#[no_mangle]
pub unsafe extern "C" fn dioph_classify_product_json(
    shifts: *const c_char,
    f: *const c_char,
    out_json: *mut *mut c_char,
) -> DiophStatus {
    guard(|| {
        if out_json.is_null() {
            set_error("out_json must not be null");
            return DiophStatus::NullPointer;
        }
        *out_json = ptr::null_mut();
        let shifts_text = match read_str(shifts, "shifts") {
            Ok(s) => s,
            Err(status) => return status,
        };
        let f_text = match read_str(f, "f") {
            Ok(s) => s,
            Err(status) => return status,
        };
        let inner = || -> Result<Verdict, Error> {
            let pf = ProductForm::new(parse_product_form(shifts_text)?)?;
            let f = parse_poly(f_text, "x")?;
            classify_product_equation(&pf, &f)
        };
        match inner() {
            Ok(v) => {
                clear_error();
                write_string(out_json, verdict_json_string(&v))
            }
            Err(e) => fail(&e),
        }
    })
}

/// Classify `f(x) = g(y)` for expressions in x and y respectively. Same
/// JSON shape as [`dioph_classify_product_json`].
#[no_mangle]
pub unsafe extern "C" fn dioph_classify_general_json(
    f: *const c_char,
    g: *const c_char,
    out_json: *mut *mut c_char,
) -> DiophStatus {
    guard(|| {
        if out_json.is_null() {
            set_error("out_json must not be null");
            return DiophStatus::NullPointer;
        }
        *out_json = ptr::null_mut();
        let f_text = match read_str(f, "f") {
            Ok(s) => s,
            Err(status) => return status,
        };
        let g_text = match read_str(g, "g") {
            Ok(s) => s,
            Err(status) => return status,
        };
        let inner = || -> Result<Verdict, Error> {
            let f = parse_poly(f_text, "x")?;
            let g = parse_poly(g_text, "y")?;
            classify_general_equation(&f, &g)
        };
        match inner() {
            Ok(v) => {
                clear_error();
                write_string(out_json, verdict_json_string(&v))
            }
            Err(e) => fail(&e),
        }
    })
}

/// All solutions of `f(x) = g(y)` with `|x|, |y| <= bound`, as JSON
/// `{"bound", "count", "solutions": [[x, y], ...]}`.
#[no_mangle]
pub unsafe extern "C" fn dioph_enumerate_json(
    f: *const c_char,
    g: *const c_char,
    bound: c_ulonglong,
    out_json: *mut *mut c_char,
) -> DiophStatus {
    guard(|| {
        if out_json.is_null() {
            set_error("out_json must not be null");
            return DiophStatus::NullPointer;
        }
        *out_json = ptr::null_mut();
        let f_text = match read_str(f, "f") {
            Ok(s) => s,
            Err(status) => return status,
        };
        let g_text = match read_str(g, "g") {
            Ok(s) => s,
            Err(status) => return status,
        };
        let inner = || -> Result<String, Error> {
            let f = parse_poly(f_text, "x")?;
            let g = parse_poly(g_text, "y")?;
            let set = enumerate_solutions(&f, &g, bound)?;
            Ok(json!({
                "bound": set.bound(),
                "count": set.len(),
                "solutions": set
                    .solutions()
                    .iter()
                    .map(|(x, y)| json!([x, y]))
                    .collect::<Vec<_>>(),
            })
            .to_string())
        };
        match inner() {
            Ok(s) => {
                clear_error();
                write_string(out_json, s)
            }
            Err(e) => fail(&e),
        }
    })
}

/// Look for an integer c with `g(x + c) = f(x)` identically. On success
/// `*out_found` says whether one exists and `*out_c` holds its decimal
/// string (null when not found).
#[no_mangle]
pub unsafe extern "C" fn dioph_shift_witness(
    f: *const c_char,
    g: *const c_char,
    out_found: *mut bool,
    out_c: *mut *mut c_char,
) -> DiophStatus {
    guard(|| {
        if out_found.is_null() || out_c.is_null() {
            set_error("out_found and out_c must not be null");
            return DiophStatus::NullPointer;
        }
        *out_found = false;
        *out_c = ptr::null_mut();
        let f_text = match read_str(f, "f") {
            Ok(s) => s,
            Err(status) => return status,
        };
        let g_text = match read_str(g, "g") {
            Ok(s) => s,
            Err(status) => return status,
        };
        let inner = || -> Result<Option<BigInt>, Error> {
            let f = parse_poly(f_text, "x")?;
            let g = parse_poly(g_text, "y")?;
            find_shift_witness(&f, &g)
        };
        match inner() {
            Ok(Some(c)) => {
                clear_error();
                *out_found = true;
                write_string(out_c, c.to_string())
            }
            Ok(None) => {
                clear_error();
                DiophStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Product of the distinct primes dividing n, as a decimal string.
#[no_mangle]
pub unsafe extern "C" fn dioph_radical(
    n_decimal: *const c_char,
    out: *mut *mut c_char,
) -> DiophStatus {
    guard(|| {
        if out.is_null() {
            set_error("out must not be null");
            return DiophStatus::NullPointer;
        }
        *out = ptr::null_mut();
        let text = match read_str(n_decimal, "n") {
            Ok(s) => s,
            Err(status) => return status,
        };
        let n = match read_bigint(text, "n") {
            Ok(n) => n,
            Err(status) => return status,
        };
        match dioph::abc::radical(&n) {
            Ok(r) => {
                clear_error();
                write_string(out, r.to_string())
            }
            Err(e) => fail(&e),
        }
    })
}

/// Whether every prime dividing n divides it at least twice.
#[no_mangle]
pub unsafe extern "C" fn dioph_is_powerful(
    n_decimal: *const c_char,
    out: *mut bool,
) -> DiophStatus {
    guard(|| {
        if out.is_null() {
            set_error("out must not be null");
            return DiophStatus::NullPointer;
        }
        *out = false;
        let text = match read_str(n_decimal, "n") {
            Ok(s) => s,
            Err(status) => return status,
        };
        let n = match read_bigint(text, "n") {
            Ok(n) => n,
            Err(status) => return status,
        };
        match dioph::abc::is_powerful(&n) {
            Ok(answer) => {
                clear_error();
                *out = answer;
                DiophStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// abc quality `log(a+b) / log rad(ab(a+b))` for coprime positive a, b,
/// rendered with 50 fractional digits.
#[no_mangle]
pub unsafe extern "C" fn dioph_abc_quality(
    a_decimal: *const c_char,
    b_decimal: *const c_char,
    out: *mut *mut c_char,
) -> DiophStatus {
    guard(|| {
        if out.is_null() {
            set_error("out must not be null");
            return DiophStatus::NullPointer;
        }
        *out = ptr::null_mut();
        let a_text = match read_str(a_decimal, "a") {
            Ok(s) => s,
            Err(status) => return status,
        };
        let b_text = match read_str(b_decimal, "b") {
            Ok(s) => s,
            Err(status) => return status,
        };
        let a = match read_bigint(a_text, "a") {
            Ok(n) => n,
            Err(status) => return status,
        };
        let b = match read_bigint(b_text, "b") {
            Ok(n) => n,
            Err(status) => return status,
        };
        match dioph::abc::abc_quality(&a, &b) {
            Ok(q) => {
                clear_error();
                write_string(out, q.to_decimal_string())
            }
            Err(e) => fail(&e),
        }
    })
}
