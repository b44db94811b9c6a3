//! C interface to `trianguloid-core`.
//!
//! Objects cross the boundary as opaque handles created from JSON text and
//! released with the matching `*_free` function. Every call returns a
//! [`TgStatus`]; on failure, [`tg_last_error`] describes the problem for
//! the calling thread. Strings returned through `char **` out-parameters
//! are owned by the caller and must be released with [`tg_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use trianguloid_core::compat::is_compatible;
use trianguloid_core::graph::BipartiteGraph;
use trianguloid_core::io;
use trianguloid_core::lattice::{points_pg, points_pg_minus, points_pg_pm};
use trianguloid_core::search::{
    enumerate_triangulations, enumerate_trianguloids, LimitPolicy, SearchOptions,
};
use trianguloid_core::tiling::{render_svg, Style};
use trianguloid_core::triangulation::{validate, Triangulation};
use trianguloid_core::trianguloid::{
    check_axioms, from_triangulation, to_triangulation, Trianguloid,
};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TgStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// Input text was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Input JSON was malformed or described an invalid object.
    ParseError = 3,
    /// An argument was outside its allowed range.
    InvalidArgument = 4,
    /// The object failed a mathematical validity check.
    Invalid = 5,
    /// An enumeration produced more results than the limit.
    LimitExceeded = 6,
    /// An internal panic was caught.
    Panic = 7,
}

/// Which polytope to count lattice points of.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TgPolytope {
    Pg = 0,
    PgMinus = 1,
    PgPm = 2,
}

/// Which search to run.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TgMethod {
    Trees = 0,
    Axioms = 1,
}

/// Opaque bipartite graph.
pub struct TgGraph(BipartiteGraph);

/// Opaque validated triangulation.
pub struct TgTriangulation(Triangulation);

/// Opaque trianguloid (or any map satisfying the entry format).
pub struct TgTrianguloid(Trianguloid);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let clean = message.replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(clean).expect("no interior nul"));
}

struct Fail(TgStatus, String);

type FfiResult = Result<(), Fail>;

/// Runs `body`, translating errors and panics into status codes.
fn guard(body: impl FnOnce() -> FfiResult) -> TgStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error("");
            TgStatus::Ok
        }
        Ok(Err(Fail(status, message))) => {
            set_error(&message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            TgStatus::Panic
        }
    }
}

fn null() -> Fail {
    Fail(TgStatus::NullPointer, "null pointer argument".into())
}

fn parse(e: impl ToString) -> Fail {
    Fail(TgStatus::ParseError, e.to_string())
}

fn invalid(e: impl ToString) -> Fail {
    Fail(TgStatus::Invalid, e.to_string())
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(TgStatus::InvalidUtf8, "input is not UTF-8".into()))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(null)
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> FfiResult {
    if out.is_null() {
        return Err(null());
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> FfiResult {
    if out.is_null() {
        return Err(null());
    }
    *out = CString::new(s).map_err(parse)?.into_raw();
    Ok(())
}

unsafe fn put_value<T>(out: *mut T, value: T) -> FfiResult {
    if out.is_null() {
        return Err(null());
    }
    *out = value;
    Ok(())
}

/// Message for the last failed call on this thread; empty after a
/// successful call. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn tg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn tg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a graph from JSON.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tg_graph_from_json(
    json: *const c_char,
    out: *mut *mut TgGraph,
) -> TgStatus {
    guard(|| {
        let g = io::read_graph(text(json)?).map_err(parse)?;
        put(out, TgGraph(g))
    })
}

/// # Safety
/// `g` must be null or a live handle from [`tg_graph_from_json`].
#[no_mangle]
pub unsafe extern "C" fn tg_graph_free(g: *mut TgGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of lattice points of the chosen polytope.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tg_graph_lattice_point_count(
    g: *const TgGraph,
    polytope: TgPolytope,
    out: *mut usize,
) -> TgStatus {
    guard(|| {
        let g = &handle(g)?.0;
        let count = match polytope {
            TgPolytope::Pg => points_pg(g).len(),
            TgPolytope::PgMinus => points_pg_minus(g).len(),
            TgPolytope::PgPm => points_pg_pm(g).len(),
        };
        put_value(out, count)
    })
}

/// Tests two forests of `g`, each given as `{"edges": [[i, j], ...]}`.
///
/// # Safety
/// `g` must be a live handle; strings nul-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tg_forests_compatible(
    g: *const TgGraph,
    forest_a: *const c_char,
    forest_b: *const c_char,
    out: *mut bool,
) -> TgStatus {
    guard(|| {
        let g = &handle(g)?.0;
        let a = io::read_subgraph(g, text(forest_a)?).map_err(parse)?;
        let b = io::read_subgraph(g, text(forest_b)?).map_err(parse)?;
        let ok =
            is_compatible(&a, &b).map_err(|e| Fail(TgStatus::InvalidArgument, e.to_string()))?;
        put_value(out, ok)
    })
}

/// Counts triangulations or trianguloids of `g`. A `limit` of zero means
/// no limit; otherwise more than `limit` results fail with
/// `LimitExceeded`. `jobs` of zero is treated as one.
///
/// # Safety
/// `g` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tg_enumerate_count(
    g: *const TgGraph,
    method: TgMethod,
    limit: usize,
    jobs: usize,
    out: *mut usize,
) -> TgStatus {
    guard(|| {
        let g = &handle(g)?.0;
        let opts = SearchOptions {
            limit: (limit > 0).then_some(limit),
            policy: LimitPolicy::Error,
            jobs: jobs.max(1),
        };
        let exceeded =
            |e: trianguloid_core::error::SearchError| Fail(TgStatus::LimitExceeded, e.to_string());
        let count = match method {
            TgMethod::Trees => enumerate_triangulations(g, &opts)
                .map_err(exceeded)?
                .items
                .len(),
            TgMethod::Axioms => enumerate_trianguloids(g, &opts)
                .map_err(exceeded)?
                .items
                .len(),
        };
        put_value(out, count)
    })
}

/// Parses and validates a triangulation. Malformed JSON gives
/// `ParseError`; a well-formed but invalid family gives `Invalid`.
///
/// # Safety
/// `json` must be nul-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tg_triangulation_from_json(
    json: *const c_char,
    out: *mut *mut TgTriangulation,
) -> TgStatus {
    guard(|| {
        let (g, trees) = io::read_triangulation(text(json)?).map_err(parse)?;
        let tau = validate(&g, trees).map_err(invalid)?;
        put(out, TgTriangulation(tau))
    })
}

/// # Safety
/// `t` must be null or a live triangulation handle.
#[no_mangle]
pub unsafe extern "C" fn tg_triangulation_free(t: *mut TgTriangulation) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Number of trees in the triangulation.
///
/// # Safety
/// `t` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tg_triangulation_len(
    t: *const TgTriangulation,
    out: *mut usize,
) -> TgStatus {
    guard(|| put_value(out, handle(t)?.0.len()))
}

/// Canonical JSON of the triangulation.
///
/// # Safety
/// `t` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tg_triangulation_to_json(
    t: *const TgTriangulation,
    out: *mut *mut c_char,
) -> TgStatus {
    guard(|| put_string(out, io::write_triangulation(&handle(t)?.0)))
}

/// Parses a trianguloid map without checking the axioms.
///
/// # Safety
/// `json` must be nul-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tg_trianguloid_from_json(
    json: *const c_char,
    out: *mut *mut TgTrianguloid,
) -> TgStatus {
    guard(|| {
        let t = io::read_trianguloid(text(json)?).map_err(parse)?;
        put(out, TgTrianguloid(t))
    })
}

/// # Safety
/// `t` must be null or a live trianguloid handle.
#[no_mangle]
pub unsafe extern "C" fn tg_trianguloid_free(t: *mut TgTrianguloid) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// The trianguloid of a triangulation.
///
/// # Safety
/// `tau` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tg_trianguloid_from_triangulation(
    tau: *const TgTriangulation,
    out: *mut *mut TgTrianguloid,
) -> TgStatus {
    guard(|| {
        let t = from_triangulation(&handle(tau)?.0);
        put(out, TgTrianguloid(t))
    })
}

/// The triangulation of a trianguloid; `Invalid` when the map is not one.
///
/// # Safety
/// `t` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tg_trianguloid_to_triangulation(
    t: *const TgTrianguloid,
    out: *mut *mut TgTriangulation,
) -> TgStatus {
    guard(|| {
        let tau = to_triangulation(&handle(t)?.0).map_err(invalid)?;
        put(out, TgTriangulation(tau))
    })
}

/// Checks the axioms. Writes whether the map is a trianguloid and, if
/// `report` is non-null, the JSON axiom report.
///
/// # Safety
/// `t` must be a live handle; `is_trianguloid` writable; `report` null or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn tg_trianguloid_check(
    t: *const TgTrianguloid,
    is_trianguloid: *mut bool,
    report: *mut *mut c_char,
) -> TgStatus {
    guard(|| {
        let r = check_axioms(&handle(t)?.0);
        put_value(is_trianguloid, r.is_trianguloid)?;
        if !report.is_null() {
            put_string(
                report,
                io::to_canonical_string(&io::axiom_report_to_json(&r)),
            )?;
        }
        Ok(())
    })
}

/// Canonical JSON of the trianguloid.
///
/// # Safety
/// `t` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tg_trianguloid_to_json(
    t: *const TgTrianguloid,
    out: *mut *mut c_char,
) -> TgStatus {
    guard(|| put_string(out, io::write_trianguloid(&handle(t)?.0)))
}

/// SVG drawing with default style; `Invalid` unless the map is a
/// trianguloid with three left vertices.
///
/// # Safety
/// `t` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tg_trianguloid_render_svg(
    t: *const TgTrianguloid,
    out: *mut *mut c_char,
) -> TgStatus {
    guard(|| {
        let svg = render_svg(&handle(t)?.0, &Style::default()).map_err(invalid)?;
        put_string(out, svg)
    })
}
