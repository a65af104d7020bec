//! C ABI over `grundy_core`.
//!
//! Graphs and results are opaque handles owned by the caller and released
//! with the matching `*_free` function. Every fallible call returns a
//! [`GrundyStatus`]; on failure [`grundy_last_error_message`] describes it.
//! Strings returned by the library are freed with [`grundy_string_free`].

use grundy_core::grundy::{solve_grundy_kij, GrundyResult as CoreGrundyResult};
use grundy_core::io::{parse_graph, Format};
use grundy_core::oracle::{oracle_grundy, oracle_partial_grundy};
use grundy_core::pgc::{solve_pgc, solve_pgc_degenerate, Answer, Mode, PgcResult};
use grundy_core::{Certificate, Error, Graph};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

/// Opaque graph handle.
pub struct GrundyGraph(Graph);

/// Opaque solver result handle.
pub struct GrundyResult {
    answer: Answer,
    coloring: Option<Vec<usize>>,
    json: String,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrundyStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    BudgetExceeded = 4,
    SizeGuard = 5,
    NotKijFree = 6,
    Precondition = 7,
    InvalidUtf8 = 8,
    BufferTooSmall = 9,
    Panic = 10,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrundyAnswer {
    Yes = 0,
    No = 1,
    NoWitnessFound = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrundyFormat {
    Dimacs = 0,
    Edgelist = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrundyMode {
    Randomized = 0,
    Deterministic = 1,
}

/// Solver settings. `trials` and `seed` apply to randomized mode, `budget`
/// to deterministic mode.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct GrundyOptions {
    pub mode: GrundyMode,
    pub trials: usize,
    pub seed: u64,
    pub budget: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> GrundyStatus {
    match e {
        Error::Parse { .. } => GrundyStatus::Parse,
        Error::BudgetExceeded { .. } => GrundyStatus::BudgetExceeded,
        Error::SizeGuard(_) => GrundyStatus::SizeGuard,
        Error::NotKijFree { .. } => GrundyStatus::NotKijFree,
        Error::Precondition(_) => GrundyStatus::Precondition,
        _ => GrundyStatus::InvalidArgument,
    }
}

/// Runs `f`, recording any error or panic.
fn guard(f: impl FnOnce() -> Result<(), (GrundyStatus, String)>) -> GrundyStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            GrundyStatus::Ok
        }
        Ok(Err((s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            GrundyStatus::Panic
        }
    }
}

fn core_err(e: Error) -> (GrundyStatus, String) {
    (status_of(&e), e.to_string())
}

fn null() -> (GrundyStatus, String) {
    (GrundyStatus::NullPointer, "null pointer argument".into())
}

unsafe fn graph_ref<'a>(g: *const GrundyGraph) -> Result<&'a Graph, (GrundyStatus, String)> {
    g.as_ref().map(|g| &g.0).ok_or_else(null)
}

unsafe fn c_str<'a>(s: *const c_char) -> Result<&'a str, (GrundyStatus, String)> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| (GrundyStatus::InvalidUtf8, "string is not valid UTF-8".into()))
}

fn mode_of(o: &GrundyOptions) -> Mode {
    match o.mode {
        GrundyMode::Randomized => Mode::Randomized { trials: o.trials, seed: o.seed },
        GrundyMode::Deterministic => Mode::Deterministic { budget: o.budget as u128 },
    }
}

fn answer_of(a: Answer) -> GrundyAnswer {
    match a {
        Answer::Yes => GrundyAnswer::Yes,
        Answer::No => GrundyAnswer::No,
        Answer::NoWitnessFound => GrundyAnswer::NoWitnessFound,
    }
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn grundy_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Builds a graph on `n` vertices from `m` edges stored as 2m 0-based ids.
///
/// # Safety
/// `edges` must point to 2m readable values (or be null when m = 0) and
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn grundy_graph_new(
    n: usize,
    edges: *const usize,
    m: usize,
    out: *mut *mut GrundyGraph,
) -> GrundyStatus {
    guard(|| {
        if out.is_null() || (edges.is_null() && m > 0) {
            return Err(null());
        }
        let flat = if m == 0 { &[][..] } else { std::slice::from_raw_parts(edges, 2 * m) };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|c| (c[0], c[1])).collect();
        let g = Graph::from_edges(n, &pairs).map_err(core_err)?;
        *out = Box::into_raw(Box::new(GrundyGraph(g)));
        Ok(())
    })
}

/// Parses DIMACS or edge-list text. `n` overrides the vertex count of an
/// edge list; pass a negative value to infer it.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn grundy_graph_parse(
    text: *const c_char,
    format: GrundyFormat,
    n: i64,
    out: *mut *mut GrundyGraph,
) -> GrundyStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let text = c_str(text)?;
        let format = match format {
            GrundyFormat::Dimacs => Format::Dimacs,
            GrundyFormat::Edgelist => Format::Edgelist,
        };
        let n = usize::try_from(n).ok();
        let g = parse_graph(text, format, n).map_err(core_err)?;
        *out = Box::into_raw(Box::new(GrundyGraph(g)));
        Ok(())
    })
}

/// # Safety
/// `g` must come from this library and not be used afterwards. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn grundy_graph_free(g: *mut GrundyGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle or null (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn grundy_graph_vertex_count(g: *const GrundyGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// # Safety
/// `g` must be a live handle or null (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn grundy_graph_edge_count(g: *const GrundyGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.m())
}

fn pgc_result(r: PgcResult) -> GrundyResult {
    GrundyResult {
        answer: r.answer,
        coloring: r.coloring.as_ref().map(|c| c.colors().to_vec()),
        json: r.to_json().to_string(),
    }
}

fn grundy_result(r: CoreGrundyResult) -> GrundyResult {
    GrundyResult {
        answer: r.answer,
        coloring: r.coloring.as_ref().map(|c| c.colors().to_vec()),
        json: r.to_json().to_string(),
    }
}

/// Decides whether the partial Grundy number is at least k. With
/// `degenerate` non-zero, degree reduction is skipped.
///
/// # Safety
/// `g` must be a live handle, `opts` readable and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn grundy_solve_pgc(
    g: *const GrundyGraph,
    k: usize,
    opts: *const GrundyOptions,
    degenerate: bool,
    out: *mut *mut GrundyResult,
) -> GrundyStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let opts = opts.as_ref().ok_or_else(null)?;
        if out.is_null() {
            return Err(null());
        }
        let mode = mode_of(opts);
        let r = if degenerate { solve_pgc_degenerate(g, k, mode) } else { solve_pgc(g, k, mode) };
        *out = Box::into_raw(Box::new(pgc_result(r.map_err(core_err)?)));
        Ok(())
    })
}

/// Decides whether the Grundy number of a K_{i,j}-free graph is at least k.
///
/// # Safety
/// `g` must be a live handle, `opts` readable and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn grundy_solve_grundy(
    g: *const GrundyGraph,
    k: usize,
    i: usize,
    j: usize,
    opts: *const GrundyOptions,
    out: *mut *mut GrundyResult,
) -> GrundyStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let opts = opts.as_ref().ok_or_else(null)?;
        if out.is_null() {
            return Err(null());
        }
        let r = solve_grundy_kij(g, k, i, j, mode_of(opts)).map_err(core_err)?;
        *out = Box::into_raw(Box::new(grundy_result(r)));
        Ok(())
    })
}

/// # Safety
/// `r` must be a live result handle; null yields `NoWitnessFound`.
#[no_mangle]
pub unsafe extern "C" fn grundy_result_answer(r: *const GrundyResult) -> GrundyAnswer {
    r.as_ref().map_or(GrundyAnswer::NoWitnessFound, |r| answer_of(r.answer))
}

/// Copies the 1-based coloring into `buf`. `*len` is always set to the
/// coloring length (0 when there is none). Returns `BufferTooSmall` if
/// `cap` is less than that length.
///
/// # Safety
/// `r` must be live, `len` writable and `buf` writable for `cap` values.
#[no_mangle]
pub unsafe extern "C" fn grundy_result_coloring(
    r: *const GrundyResult,
    buf: *mut usize,
    cap: usize,
    len: *mut usize,
) -> GrundyStatus {
    guard(|| {
        let r = r.as_ref().ok_or_else(null)?;
        if len.is_null() {
            return Err(null());
        }
        let colors = r.coloring.as_deref().unwrap_or(&[]);
        *len = colors.len();
        if colors.is_empty() {
            return Ok(());
        }
        if cap < colors.len() {
            return Err((GrundyStatus::BufferTooSmall, format!("need {} slots, got {cap}", colors.len())));
        }
        if buf.is_null() {
            return Err(null());
        }
        ptr::copy_nonoverlapping(colors.as_ptr(), buf, colors.len());
        Ok(())
    })
}

/// The result as JSON (same schema as the CLI, without timing).
///
/// # Safety
/// `r` must be live and `out` writable. Free the string with
/// [`grundy_string_free`].
#[no_mangle]
pub unsafe extern "C" fn grundy_result_json(r: *const GrundyResult, out: *mut *mut c_char) -> GrundyStatus {
    guard(|| {
        let r = r.as_ref().ok_or_else(null)?;
        if out.is_null() {
            return Err(null());
        }
        *out = CString::new(r.json.as_str()).expect("JSON has no NUL").into_raw();
        Ok(())
    })
}

/// # Safety
/// `r` must come from this library and not be used afterwards. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn grundy_result_free(r: *mut GrundyResult) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// # Safety
/// `s` must be a string returned by this library, or null.
#[no_mangle]
pub unsafe extern "C" fn grundy_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Brute-force Grundy and partial Grundy numbers (at most 10 vertices).
///
/// # Safety
/// `g` must be live; `gamma` and `partial_gamma` writable.
#[no_mangle]
pub unsafe extern "C" fn grundy_oracle(
    g: *const GrundyGraph,
    gamma: *mut usize,
    partial_gamma: *mut usize,
) -> GrundyStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if gamma.is_null() || partial_gamma.is_null() {
            return Err(null());
        }
        *gamma = oracle_grundy(g).map_err(core_err)?;
        *partial_gamma = oracle_partial_grundy(g).map_err(core_err)?;
        Ok(())
    })
}

/// Checks a certificate JSON (or a solver output holding one) against `g`.
/// Malformed certificates are reported as invalid, not as errors.
///
/// # Safety
/// `g` must be live, `json` NUL-terminated and `valid` writable.
#[no_mangle]
pub unsafe extern "C" fn grundy_verify_certificate(
    g: *const GrundyGraph,
    json: *const c_char,
    valid: *mut bool,
) -> GrundyStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let text = c_str(json)?;
        if valid.is_null() {
            return Err(null());
        }
        let mut v: serde_json::Value =
            serde_json::from_str(text).map_err(|e| (GrundyStatus::Parse, e.to_string()))?;
        if let Some(c) = v.get_mut("certificate") {
            v = c.take();
        }
        *valid = serde_json::from_value::<Certificate>(v).is_ok_and(|c| c.verify(g));
        Ok(())
    })
}
