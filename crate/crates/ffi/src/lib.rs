//! C ABI for the nonassociative algebra toolkit.
//!
//! Algebras are opaque handles created from the JSON file format, the
//! built-in names, or Cayley-Dickson parameters, and freed with
//! [`na_algebra_free`]. Results come back as JSON strings allocated by this
//! library and released with [`na_string_free`]. Every entry point returns a
//! status code; on failure `na_last_error_message` describes the problem for
//! the calling thread.

use nonassoc::algebra::{Algebra, Side};
use nonassoc::construct::{builtin, cayley_dickson, Builtin};
use nonassoc::element::Element;
use nonassoc::identities::SamplerConfig;
use nonassoc::io::{algebra_to_file, canonical_json, parse_algebra_file};
use nonassoc::quadratic::{self, Extraction};
use nonassoc::scalar::{Mode, Scalar};
use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Status codes returned by every entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NaStatus {
    Ok = 0,
    InvalidArgument = 1,
    ComputationFailed = 2,
    InternalError = 3,
}

/// Opaque algebra handle.
pub struct NaAlgebra {
    inner: Algebra,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let cleaned: String = msg.chars().filter(|&c| c != '\0').collect();
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(cleaned).unwrap_or_default();
    });
}

/// Message for the most recent failure on this thread. The pointer stays
/// valid until the next failing call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn na_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

fn guard<F: FnOnce() -> NaStatus>(f: F) -> NaStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            NaStatus::InternalError
        }
    }
}

/// # Safety
/// `text` must be a valid NUL-terminated string or NULL.
unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, NaStatus> {
    if text.is_null() {
        set_error("null string argument");
        return Err(NaStatus::InvalidArgument);
    }
    CStr::from_ptr(text).to_str().map_err(|_| {
        set_error("string argument is not UTF-8");
        NaStatus::InvalidArgument
    })
}

fn write_string(out: *mut *mut c_char, text: String) -> NaStatus {
    if out.is_null() {
        set_error("null output pointer");
        return NaStatus::InvalidArgument;
    }
    match CString::new(text) {
        Ok(s) => {
            unsafe { *out = s.into_raw() };
            NaStatus::Ok
        }
        Err(_) => {
            set_error("result contained an interior NUL byte");
            NaStatus::InternalError
        }
    }
}

fn write_handle(out: *mut *mut NaAlgebra, alg: Algebra) -> NaStatus {
    if out.is_null() {
        set_error("null output pointer");
        return NaStatus::InvalidArgument;
    }
    unsafe { *out = Box::into_raw(Box::new(NaAlgebra { inner: alg })) };
    NaStatus::Ok
}

/// # Safety
/// `handle` must be a live pointer from one of the constructors, or NULL.
unsafe fn read_handle<'a>(handle: *const NaAlgebra) -> Result<&'a Algebra, NaStatus> {
    if handle.is_null() {
        set_error("null algebra handle");
        return Err(NaStatus::InvalidArgument);
    }
    Ok(&(*handle).inner)
}

fn parse_mode(name: &str) -> Result<Mode, NaStatus> {
    match name {
        "rational" => Ok(Mode::Rational),
        "real" => Ok(Mode::Real),
        other => {
            set_error(&format!("unknown scalar mode {other:?}"));
            Err(NaStatus::InvalidArgument)
        }
    }
}

fn parse_coords(alg: &Algebra, text: &str) -> Result<Element, NaStatus> {
    let coords: Result<Vec<Scalar>, String> = text
        .split(',')
        .map(|c| Scalar::parse(c, alg.mode()))
        .collect();
    match coords {
        Ok(coords) if coords.len() == alg.dim() => Ok(Element::new(coords)),
        Ok(coords) => {
            set_error(&format!(
                "element has {} coordinates for dimension {}",
                coords.len(),
                alg.dim()
            ));
            Err(NaStatus::InvalidArgument)
        }
        Err(e) => {
            set_error(&e);
            Err(NaStatus::InvalidArgument)
        }
    }
}

/// Parses the JSON algebra file format into a new handle.
///
/// # Safety
/// `json` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn na_algebra_from_json(
    json: *const c_char,
    out: *mut *mut NaAlgebra,
) -> NaStatus {
    guard(|| {
        let text = match read_str(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_algebra_file(text) {
            Ok((alg, _)) => write_handle(out, alg),
            Err(e) => {
                set_error(&e.to_string());
                NaStatus::InvalidArgument
            }
        }
    })
}

/// Builds a named algebra: reals, complexes, quaternions, octonions,
/// sedenions; `scalar` is "rational" or "real".
///
/// # Safety
/// `name` and `scalar` must be valid NUL-terminated strings; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn na_algebra_builtin(
    name: *const c_char,
    scalar: *const c_char,
    out: *mut *mut NaAlgebra,
) -> NaStatus {
    guard(|| {
        let name = match read_str(name) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let mode = match read_str(scalar).and_then(|s| parse_mode(s)) {
            Ok(m) => m,
            Err(s) => return s,
        };
        let Some(which) = Builtin::parse(name) else {
            set_error(&format!("unknown builtin algebra {name:?}"));
            return NaStatus::InvalidArgument;
        };
        match builtin(which, mode) {
            Ok(alg) => write_handle(out, alg),
            Err(e) => {
                set_error(&e.to_string());
                NaStatus::ComputationFailed
            }
        }
    })
}

/// Iterated Cayley-Dickson doubling from comma-separated parameters, e.g.
/// "-1,-1,-1" for the octonions.
///
/// # Safety
/// `levels` and `scalar` must be valid NUL-terminated strings; `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn na_algebra_cayley_dickson(
    levels: *const c_char,
    scalar: *const c_char,
    out: *mut *mut NaAlgebra,
) -> NaStatus {
    guard(|| {
        let mode = match read_str(scalar).and_then(|s| parse_mode(s)) {
            Ok(m) => m,
            Err(s) => return s,
        };
        let text = match read_str(levels) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let parsed: Result<Vec<Scalar>, String> =
            text.split(',').map(|l| Scalar::parse(l, mode)).collect();
        let parsed = match parsed {
            Ok(p) => p,
            Err(e) => {
                set_error(&e);
                return NaStatus::InvalidArgument;
            }
        };
        match cayley_dickson(&parsed, mode) {
            Ok((alg, _)) => write_handle(out, alg),
            Err(e) => {
                set_error(&e.to_string());
                NaStatus::ComputationFailed
            }
        }
    })
}

/// Dimension of the algebra behind the handle; 0 for NULL.
///
/// # Safety
/// `handle` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn na_algebra_dim(handle: *const NaAlgebra) -> u32 {
    if handle.is_null() {
        return 0;
    }
    (*handle).inner.dim() as u32
}

/// Serializes the algebra back to canonical file-format JSON.
///
/// # Safety
/// `handle` must be live, `name` a valid string, `out` writable. The result
/// must be freed with [`na_string_free`].
#[no_mangle]
pub unsafe extern "C" fn na_algebra_to_json(
    handle: *const NaAlgebra,
    name: *const c_char,
    out: *mut *mut c_char,
) -> NaStatus {
    guard(|| {
        let alg = match read_handle(handle) {
            Ok(a) => a,
            Err(s) => return s,
        };
        let name = match read_str(name) {
            Ok(t) => t,
            Err(s) => return s,
        };
        write_string(out, canonical_json(&algebra_to_file(name, alg)))
    })
}

/// Product of two elements given as comma-separated coordinates; the result
/// is a JSON array of coordinate strings.
///
/// # Safety
/// Pointer arguments as in [`na_algebra_to_json`].
#[no_mangle]
pub unsafe extern "C" fn na_multiply_json(
    handle: *const NaAlgebra,
    x: *const c_char,
    y: *const c_char,
    out: *mut *mut c_char,
) -> NaStatus {
    guard(|| {
        let alg = match read_handle(handle) {
            Ok(a) => a,
            Err(s) => return s,
        };
        let (x, y) = match (
            read_str(x).and_then(|t| parse_coords(alg, t)),
            read_str(y).and_then(|t| parse_coords(alg, t)),
        ) {
            (Ok(x), Ok(y)) => (x, y),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        match alg.multiply(&x, &y) {
            Ok(product) => write_string(
                out,
                serde_json::to_string(&product).expect("elements serialize"),
            ),
            Err(e) => {
                set_error(&e.to_string());
                NaStatus::ComputationFailed
            }
        }
    })
}

/// Runs the identity taxonomy; the result is the JSON identity report.
///
/// # Safety
/// Pointer arguments as in [`na_algebra_to_json`].
#[no_mangle]
pub unsafe extern "C" fn na_check_identities_json(
    handle: *const NaAlgebra,
    max_degree: u32,
    seed: u64,
    out: *mut *mut c_char,
) -> NaStatus {
    guard(|| {
        let alg = match read_handle(handle) {
            Ok(a) => a,
            Err(s) => return s,
        };
        let sampler = SamplerConfig { seed, samples: 8 };
        match nonassoc::identities::report(alg, max_degree.max(3), sampler) {
            Ok(report) => write_string(
                out,
                serde_json::to_string(&report).expect("reports serialize"),
            ),
            Err(e) => {
                set_error(&e.to_string());
                NaStatus::ComputationFailed
            }
        }
    })
}

/// Classifies the algebra; the result is the JSON classification outcome
/// (verdict, isomorphism matrix, certificate).
///
/// # Safety
/// Pointer arguments as in [`na_algebra_to_json`].
#[no_mangle]
pub unsafe extern "C" fn na_classify_json(
    handle: *const NaAlgebra,
    out: *mut *mut c_char,
) -> NaStatus {
    guard(|| {
        let alg = match read_handle(handle) {
            Ok(a) => a,
            Err(s) => return s,
        };
        match nonassoc::classify::classify(alg) {
            Ok(outcome) => write_string(
                out,
                serde_json::to_string(&outcome).expect("outcomes serialize"),
            ),
            Err(e) => {
                set_error(&e.to_string());
                NaStatus::ComputationFailed
            }
        }
    })
}

/// Extracts the quadratic structure; the result reports the trace vector,
/// Gram matrix and property flags, or the non-quadratic witness.
///
/// # Safety
/// Pointer arguments as in [`na_algebra_to_json`].
#[no_mangle]
pub unsafe extern "C" fn na_qform_json(
    handle: *const NaAlgebra,
    out: *mut *mut c_char,
) -> NaStatus {
    guard(|| {
        let alg = match read_handle(handle) {
            Ok(a) => a,
            Err(s) => return s,
        };
        let payload = match quadratic::extract(alg) {
            Ok(Extraction::Quadratic(q)) => match quadratic::form_property_checks(alg, &q) {
                Ok(flags) => serde_json::json!({
                    "quadratic": true,
                    "trace": q.trace_vector(),
                    "gram": q.gram(),
                    "proper": flags.proper,
                    "permits_composition": flags.permits_composition,
                    "locally_field_extension": flags.locally_field_extension,
                    "positive_definite_on_unit_perp": flags.positive_definite_on_unit_perp,
                }),
                Err(e) => {
                    set_error(&e.to_string());
                    return NaStatus::ComputationFailed;
                }
            },
            Ok(Extraction::NotQuadratic { witness }) => {
                serde_json::json!({ "quadratic": false, "witness": witness })
            }
            Err(e) => {
                set_error(&e.to_string());
                return NaStatus::ComputationFailed;
            }
        };
        write_string(out, payload.to_string())
    })
}

/// Spectrum of an element: side 0 = two-sided, 1 = left, 2 = right.
///
/// # Safety
/// Pointer arguments as in [`na_algebra_to_json`].
#[no_mangle]
pub unsafe extern "C" fn na_spectrum_json(
    handle: *const NaAlgebra,
    element: *const c_char,
    side: c_int,
    out: *mut *mut c_char,
) -> NaStatus {
    guard(|| {
        let alg = match read_handle(handle) {
            Ok(a) => a,
            Err(s) => return s,
        };
        let a = match read_str(element).and_then(|t| parse_coords(alg, t)) {
            Ok(a) => a,
            Err(s) => return s,
        };
        let result = match side {
            0 => nonassoc::spectrum::spectrum_real(alg, &a),
            1 => nonassoc::spectrum::one_sided_spectrum(alg, &a, Side::Left),
            2 => nonassoc::spectrum::one_sided_spectrum(alg, &a, Side::Right),
            _ => {
                set_error("side must be 0 (two-sided), 1 (left) or 2 (right)");
                return NaStatus::InvalidArgument;
            }
        };
        match result {
            Ok(res) => write_string(
                out,
                serde_json::to_string(&res).expect("spectra serialize"),
            ),
            Err(e) => {
                set_error(&e.to_string());
                NaStatus::ComputationFailed
            }
        }
    })
}

/// Left, right and joint zero-divisor kernels of a nonzero element.
///
/// # Safety
/// Pointer arguments as in [`na_algebra_to_json`].
#[no_mangle]
pub unsafe extern "C" fn na_zero_divisor_kernels_json(
    handle: *const NaAlgebra,
    element: *const c_char,
    out: *mut *mut c_char,
) -> NaStatus {
    guard(|| {
        let alg = match read_handle(handle) {
            Ok(a) => a,
            Err(s) => return s,
        };
        let a = match read_str(element).and_then(|t| parse_coords(alg, t)) {
            Ok(a) => a,
            Err(s) => return s,
        };
        match alg.zero_divisor_kernels(&a) {
            Ok(k) => write_string(
                out,
                serde_json::json!({
                    "left": k.left,
                    "right": k.right,
                    "joint": k.joint,
                })
                .to_string(),
            ),
            Err(e) => {
                set_error(&e.to_string());
                NaStatus::ComputationFailed
            }
        }
    })
}

/// Frees a string allocated by this library. NULL is a no-op.
///
/// # Safety
/// `s` must originate from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn na_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Frees an algebra handle. NULL is a no-op.
///
/// # Safety
/// `handle` must originate from this library and not have been freed
/// already.
#[no_mangle]
pub unsafe extern "C" fn na_algebra_free(handle: *mut NaAlgebra) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    #[test]
    fn statuses_are_stable_abi_values() {
        assert_eq!(NaStatus::Ok as i32, 0);
        assert_eq!(NaStatus::InvalidArgument as i32, 1);
        assert_eq!(NaStatus::ComputationFailed as i32, 2);
        assert_eq!(NaStatus::InternalError as i32, 3);
    }

    #[test]
    fn null_arguments_are_rejected_not_crashed() {
        unsafe {
            let mut out: *mut NaAlgebra = ptr::null_mut();
            assert_eq!(
                na_algebra_from_json(ptr::null(), &mut out),
                NaStatus::InvalidArgument
            );
            assert_eq!(na_algebra_dim(ptr::null()), 0);
            na_algebra_free(ptr::null_mut());
            na_string_free(ptr::null_mut());
        }
    }
}
