//! C ABI for the picloc library.
//!
//! Every entry point returns a [`PiclocStatus`]; results come back either as
//! an opaque `PiclocReport` handle (freed with [`picloc_report_free`]) or as
//! a NUL-terminated JSON string (freed with [`picloc_string_free`]). On any
//! failure the thread-local message from [`picloc_last_error`] describes
//! what went wrong. All functions are panic-safe.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use picloc::abelian::FieldModel;
use picloc::binoid::detect_simplicial;
use picloc::error::Error;
use picloc::io::{parse_degree_box, parse_facet_file, parse_ideal_file, parse_presentation_json};
use picloc::monomial::nonreduced_report;
use picloc::picard::{
    crosscheck_simplicial, graph_fast_path, graph_graded_report, picloc_integral_binoid,
    picloc_simplicial_formula, stanley_reisner_cohomology, CohomologyReport,
};
use picloc::report::{graph_to_json, nonreduced_to_json, report_to_json, report_to_pretty};

/// Status codes returned by every entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PiclocStatus {
    Ok = 0,
    /// Mathematically invalid input (torsion, non-simplicial, …).
    DomainError = 1,
    /// Unreadable input: syntax, encoding, or schema.
    ParseError = 2,
    NullPointer = 3,
    InvalidUtf8 = 4,
    /// An internal invariant failed; the library state is still sound.
    Panic = 5,
}

/// Opaque cohomology report handle.
pub struct PiclocReport {
    inner: CohomologyReport,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let message = CString::new(message.replace('\0', " "))
        .unwrap_or_else(|_| CString::new("error message unavailable").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn status_of(err: &Error) -> PiclocStatus {
    match err.exit_code() {
        2 => PiclocStatus::ParseError,
        _ => PiclocStatus::DomainError,
    }
}

/// # Safety
/// `ptr` must be a valid NUL-terminated string or null.
unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, PiclocStatus> {
    if ptr.is_null() {
        set_error("null pointer argument".into());
        return Err(PiclocStatus::NullPointer);
    }
    CStr::from_ptr(ptr).to_str().map_err(|e| {
        set_error(format!("invalid UTF-8 in argument: {e}"));
        PiclocStatus::InvalidUtf8
    })
}

fn guard<T>(out: *mut T, body: impl FnOnce() -> Result<T, PiclocStatus>) -> PiclocStatus {
    if out.is_null() {
        set_error("null output pointer".into());
        return PiclocStatus::NullPointer;
    }
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(value)) => {
            unsafe { ptr::write(out, value) };
            PiclocStatus::Ok
        }
        Ok(Err(status)) => status,
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "internal panic".to_string());
            set_error(message);
            PiclocStatus::Panic
        }
    }
}

fn report_handle(report: CohomologyReport) -> *mut PiclocReport {
    Box::into_raw(Box::new(PiclocReport { inner: report }))
}

fn to_c_string(text: String) -> Result<*mut c_char, PiclocStatus> {
    CString::new(text).map(CString::into_raw).map_err(|_| {
        set_error("output contained an interior NUL byte".into());
        PiclocStatus::Panic
    })
}

fn fail<T>(err: Error) -> Result<T, PiclocStatus> {
    let status = status_of(&err);
    set_error(err.to_string());
    Err(status)
}

/// Combinatorial cohomology of the simplicial binoid of a facet file.
/// With `crosscheck` nonzero, runs both pipelines and verifies agreement.
///
/// # Safety
/// `facet_text` must be a valid NUL-terminated string; `out` must be a valid
/// pointer to receive the handle.
#[no_mangle]
pub unsafe extern "C" fn picloc_simplicial(
    facet_text: *const c_char,
    crosscheck: bool,
    out: *mut *mut PiclocReport,
) -> PiclocStatus {
    guard(out, || {
        let text = read_str(facet_text)?;
        let complex = parse_facet_file(text).or_else(fail)?;
        let report = if crosscheck {
            crosscheck_simplicial(&complex)
        } else {
            picloc_simplicial_formula(&complex)
        }
        .or_else(fail)?;
        Ok(report_handle(report))
    })
}

/// Unit-sheaf cohomology of the Stanley-Reisner ring of a facet file under
/// a field model (`q=<prime power> | p=<prime> | Qbar | Cstar | R | Q | symbolic`).
///
/// # Safety
/// All pointers must be valid as in [`picloc_simplicial`].
#[no_mangle]
pub unsafe extern "C" fn picloc_stanley_reisner(
    facet_text: *const c_char,
    field_spec: *const c_char,
    out: *mut *mut PiclocReport,
) -> PiclocStatus {
    guard(out, || {
        let text = read_str(facet_text)?;
        let field = read_str(field_spec)?;
        let complex = parse_facet_file(text).or_else(fail)?;
        let model = FieldModel::parse(field).or_else(fail)?;
        let report = stanley_reisner_cohomology(&complex, model).or_else(fail)?;
        Ok(report_handle(report))
    })
}

/// Cohomology of a binoid presentation given as JSON.
///
/// # Safety
/// All pointers must be valid as in [`picloc_simplicial`].
#[no_mangle]
pub unsafe extern "C" fn picloc_binoid(
    presentation_json: *const c_char,
    out: *mut *mut PiclocReport,
) -> PiclocStatus {
    guard(out, || {
        let text = read_str(presentation_json)?;
        let presentation = parse_presentation_json(text).or_else(fail)?;
        let report = if presentation.is_integral() {
            picloc_integral_binoid(&presentation)
        } else if presentation.congruences.is_empty() {
            detect_simplicial(&presentation).and_then(|k| crosscheck_simplicial(&k))
        } else {
            Err(Error::MixedPresentation)
        }
        .or_else(fail)?;
        Ok(report_handle(report))
    })
}

/// Graph fast path: JSON with the isolated count, the Picard rank, and the
/// graded rank sequence when connected.
///
/// # Safety
/// All pointers must be valid as in [`picloc_simplicial`].
#[no_mangle]
pub unsafe extern "C" fn picloc_graph(
    facet_text: *const c_char,
    json_out: *mut *mut c_char,
) -> PiclocStatus {
    guard(json_out, || {
        let text = read_str(facet_text)?;
        let complex = parse_facet_file(text).or_else(fail)?;
        let counts = graph_fast_path(&complex).or_else(fail)?;
        let graded = match graph_graded_report(&complex) {
            Ok(g) => Some(g),
            Err(Error::Disconnected) => None,
            Err(other) => return fail(other),
        };
        to_c_string(graph_to_json(&counts, graded.as_ref()))
    })
}

/// Non-reduced monomial quotient report as JSON. `box_spec` is a degree
/// window such as `-2..2` or `-1..1,0..3`.
///
/// # Safety
/// All pointers must be valid as in [`picloc_simplicial`].
#[no_mangle]
pub unsafe extern "C" fn picloc_monomial(
    ideal_text: *const c_char,
    field_spec: *const c_char,
    box_spec: *const c_char,
    json_out: *mut *mut c_char,
) -> PiclocStatus {
    guard(json_out, || {
        let text = read_str(ideal_text)?;
        let field = read_str(field_spec)?;
        let window = read_str(box_spec)?;
        let ideal = parse_ideal_file(text).or_else(fail)?;
        let model = FieldModel::parse(field).or_else(fail)?;
        let window = parse_degree_box(window, ideal.variable_count()).or_else(fail)?;
        let report = nonreduced_report(&ideal, model, &window).or_else(fail)?;
        to_c_string(nonreduced_to_json(&report).or_else(fail)?)
    })
}

/// Canonical JSON of a report; free with [`picloc_string_free`].
///
/// # Safety
/// `report` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn picloc_report_json(report: *const PiclocReport) -> *mut c_char {
    if report.is_null() {
        set_error("null report handle".into());
        return ptr::null_mut();
    }
    let report = &*report;
    match report_to_json(&report.inner) {
        Ok(text) => to_c_string(text).unwrap_or(ptr::null_mut()),
        Err(err) => {
            set_error(err.to_string());
            ptr::null_mut()
        }
    }
}

/// Aligned text table of a report; free with [`picloc_string_free`].
///
/// # Safety
/// `report` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn picloc_report_pretty(report: *const PiclocReport) -> *mut c_char {
    if report.is_null() {
        set_error("null report handle".into());
        return ptr::null_mut();
    }
    let report = &*report;
    to_c_string(report_to_pretty(&report.inner)).unwrap_or(ptr::null_mut())
}

/// Number of computed degrees in a report.
///
/// # Safety
/// `report` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn picloc_report_degree_count(report: *const PiclocReport) -> usize {
    if report.is_null() {
        return 0;
    }
    let report = &*report;
    report.inner.degrees.len()
}

/// Free rank of the combinatorial part in degree `j`, or -1 out of range.
///
/// # Safety
/// `report` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn picloc_report_free_rank(report: *const PiclocReport, j: usize) -> i64 {
    if report.is_null() {
        return -1;
    }
    let report = &*report;
    match report.inner.degrees.get(j) {
        Some(d) => d.combinatorial.free_rank() as i64,
        None => -1,
    }
}

/// Number of torsion invariant factors in degree `j`, or -1 out of range.
///
/// # Safety
/// `report` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn picloc_report_torsion_count(report: *const PiclocReport, j: usize) -> i64 {
    if report.is_null() {
        return -1;
    }
    let report = &*report;
    match report.inner.degrees.get(j) {
        Some(d) => d.combinatorial.invariant_factors().len() as i64,
        None => -1,
    }
}

/// The `idx`-th torsion invariant factor in degree `j` as a decimal string,
/// or null out of range. Free with [`picloc_string_free`].
///
/// # Safety
/// `report` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn picloc_report_torsion_factor(
    report: *const PiclocReport,
    j: usize,
    idx: usize,
) -> *mut c_char {
    if report.is_null() {
        return ptr::null_mut();
    }
    let report = &*report;
    let Some(degree) = report.inner.degrees.get(j) else {
        return ptr::null_mut();
    };
    let Some(factor) = degree.combinatorial.invariant_factors().get(idx) else {
        return ptr::null_mut();
    };
    to_c_string(factor.to_string()).unwrap_or(ptr::null_mut())
}

/// Destroys a report handle. Null is a no-op.
///
/// # Safety
/// `report` must be null or a live handle; the handle dies here.
#[no_mangle]
pub unsafe extern "C" fn picloc_report_free(report: *mut PiclocReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Frees a string returned by this library. Null is a no-op.
///
/// # Safety
/// `text` must be null or a string allocated by this library; it dies here.
#[no_mangle]
pub unsafe extern "C" fn picloc_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

/// Message for the most recent failure on this thread, or null when the last
/// call succeeded. Free with [`picloc_string_free`].
#[no_mangle]
pub extern "C" fn picloc_last_error() -> *mut c_char {
    LAST_ERROR.with(|slot| match slot.borrow().as_ref() {
        Some(message) => message.clone().into_raw(),
        None => ptr::null_mut(),
    })
}
