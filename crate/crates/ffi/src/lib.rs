//! C ABI over `cyclepow`.
//!
//! Graphs, subsets and search results are opaque heap handles owned by the
//! caller and released with the matching `*_free` function. Every fallible
//! call returns a [`CpStatus`]; on failure a message is available from
//! [`cp_last_error_message`] on the same thread. Strings returned by the
//! library are released with [`cp_string_free`].

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cyclepow::{
    bound_report, build_table, builtin_table1, circulant_eigenvalue, clique_number, closed_form,
    count_maximizers, exact_max, lambda2, quadratic_form_edges, render, search,
    spectral_identity_check, turan_bound, verify_theorem_grid, Error, Format, GraphSpec, Method,
    SearchOptions, SearchResult, TableSpec, VertexSubset,
};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    OutOfDomain = 3,
    OutOfRegime = 4,
    Undefined = 5,
    BudgetExceeded = 6,
    VerificationScope = 7,
    BufferTooSmall = 8,
    Internal = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CpMethod {
    ClosedForm = 0,
    IntervalCount = 1,
    CompleteGraph = 2,
}

impl From<Method> for CpMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::ClosedForm => CpMethod::ClosedForm,
            Method::IntervalCount => CpMethod::IntervalCount,
            Method::CompleteGraph => CpMethod::CompleteGraph,
        }
    }
}

/// One row of the comparison table. `turan` is meaningful only when
/// `has_turan` is true.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CpBoundReport {
    pub n: usize,
    pub k: usize,
    pub s: usize,
    pub exact: u64,
    pub has_turan: bool,
    pub turan: u64,
    pub spectral_raw: f64,
    pub spectral_int: i64,
    pub lambda2: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CpSearchOptions {
    pub reduce_symmetry: bool,
    pub count_maximizers: bool,
    pub prune: bool,
    /// 0 uses the global worker pool.
    pub jobs: usize,
    /// 0 uses the default budget (or `CYCLEPOW_BUDGET`).
    pub budget: u64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CpGridSummary {
    pub cases: u64,
    pub closed_form_cases: u64,
    pub turan_cases: u64,
    pub violations: u64,
}

/// Opaque `C_n^s`.
pub struct CpGraph(GraphSpec);

/// Opaque vertex subset.
pub struct CpSubset(VertexSubset);

/// Opaque search outcome.
pub struct CpSearchResult(SearchResult);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> CpStatus {
    match e {
        Error::InvalidGraph { .. }
        | Error::CardinalityOutOfRange { .. }
        | Error::NotAMember { .. }
        | Error::LengthMismatch { .. }
        | Error::UnknownFormat(_)
        | Error::TableSpec(_) => CpStatus::InvalidArgument,
        Error::OutsideDomain { .. } => CpStatus::OutOfDomain,
        Error::OutOfRegime { .. } => CpStatus::OutOfRegime,
        Error::TuranUndefined { .. } => CpStatus::Undefined,
        Error::BudgetExceeded { .. } | Error::SearchTooWide { .. } => CpStatus::BudgetExceeded,
        Error::VerificationScope { .. } => CpStatus::VerificationScope,
    }
}

fn fail(e: Error) -> CpStatus {
    set_error(e.to_string());
    status_of(&e)
}

fn null_pointer(name: &str) -> CpStatus {
    set_error(format!("`{name}` is null"));
    CpStatus::NullPointer
}

/// Runs `f`, mapping panics to `CP_STATUS_INTERNAL`.
fn guard(f: impl FnOnce() -> CpStatus) -> CpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            CpStatus::Internal
        }
    }
}

macro_rules! deref {
    ($p:ident) => {
        match $p.as_ref() {
            Some(v) => v,
            None => return null_pointer(stringify!($p)),
        }
    };
}

macro_rules! out {
    ($p:ident = $v:expr) => {{
        if $p.is_null() {
            return null_pointer(stringify!($p));
        }
        *$p = $v;
    }};
}

macro_rules! try_cp {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return fail(e),
        }
    };
}

/// Message of the last failed call on this thread, or NULL. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn cp_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Static, human readable name of a status code.
#[no_mangle]
pub extern "C" fn cp_status_str(status: CpStatus) -> *const c_char {
    let s: &'static CStr = match status {
        CpStatus::Ok => c"ok",
        CpStatus::NullPointer => c"null pointer",
        CpStatus::InvalidArgument => c"invalid argument",
        CpStatus::OutOfDomain => c"outside domain: n must exceed s",
        CpStatus::OutOfRegime => c"outside closed-form regime",
        CpStatus::Undefined => c"bound undefined",
        CpStatus::BudgetExceeded => c"search budget exceeded",
        CpStatus::VerificationScope => c"outside dense verification scope",
        CpStatus::BufferTooSmall => c"buffer too small",
        CpStatus::Internal => c"internal error",
    };
    s.as_ptr()
}

#[no_mangle]
pub unsafe extern "C" fn cp_graph_new(n: usize, s: usize, out: *mut *mut CpGraph) -> CpStatus {
    guard(|| {
        let spec = try_cp!(GraphSpec::new(n, s));
        out!(out = Box::into_raw(Box::new(CpGraph(spec))));
        CpStatus::Ok
    })
}

#[no_mangle]
pub unsafe extern "C" fn cp_graph_free(graph: *mut CpGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

#[no_mangle]
pub unsafe extern "C" fn cp_graph_is_complete(graph: *const CpGraph, out: *mut bool) -> CpStatus {
    let g = deref!(graph);
    out!(out = g.0.is_complete());
    CpStatus::Ok
}

#[no_mangle]
pub unsafe extern "C" fn cp_clique_number(graph: *const CpGraph, out: *mut usize) -> CpStatus {
    let g = deref!(graph);
    out!(out = clique_number(&g.0));
    CpStatus::Ok
}

#[no_mangle]
pub unsafe extern "C" fn cp_exact_max(
    graph: *const CpGraph,
    k: usize,
    out_value: *mut u64,
    out_method: *mut CpMethod,
) -> CpStatus {
    guard(|| {
        let g = deref!(graph);
        let r = try_cp!(exact_max(&g.0, k));
        out!(out_value = r.value);
        if !out_method.is_null() {
            *out_method = r.method.into();
        }
        CpStatus::Ok
    })
}

#[no_mangle]
pub unsafe extern "C" fn cp_closed_form(graph: *const CpGraph, k: usize, out: *mut u64) -> CpStatus {
    guard(|| {
        let g = deref!(graph);
        out!(out = try_cp!(closed_form(&g.0, k)));
        CpStatus::Ok
    })
}

#[no_mangle]
pub unsafe extern "C" fn cp_turan_bound(graph: *const CpGraph, k: usize, out: *mut u64) -> CpStatus {
    guard(|| {
        let g = deref!(graph);
        out!(out = try_cp!(turan_bound(&g.0, k)));
        CpStatus::Ok
    })
}

#[no_mangle]
pub unsafe extern "C" fn cp_circulant_eigenvalue(
    graph: *const CpGraph,
    j: usize,
    out: *mut f64,
) -> CpStatus {
    let g = deref!(graph);
    out!(out = circulant_eigenvalue(&g.0, j));
    CpStatus::Ok
}

#[no_mangle]
pub unsafe extern "C" fn cp_lambda2(graph: *const CpGraph, out: *mut f64) -> CpStatus {
    guard(|| {
        let g = deref!(graph);
        out!(out = lambda2(&g.0));
        CpStatus::Ok
    })
}

#[no_mangle]
pub unsafe extern "C" fn cp_bound_report(
    graph: *const CpGraph,
    k: usize,
    out: *mut CpBoundReport,
) -> CpStatus {
    guard(|| {
        let g = deref!(graph);
        let r = try_cp!(bound_report(&g.0, k));
        out!(
            out = CpBoundReport {
                n: r.n,
                k: r.k,
                s: r.s,
                exact: r.exact,
                has_turan: r.turan.is_some(),
                turan: r.turan.unwrap_or(0),
                spectral_raw: r.spectral_raw,
                spectral_int: r.spectral_int,
                lambda2: r.lambda2,
            }
        );
        CpStatus::Ok
    })
}

/// New empty subset of `Z/nZ`.
#[no_mangle]
pub unsafe extern "C" fn cp_subset_new(n: usize, out: *mut *mut CpSubset) -> CpStatus {
    if n == 0 {
        set_error("subset needs n >= 1");
        return CpStatus::InvalidArgument;
    }
    out!(out = Box::into_raw(Box::new(CpSubset(VertexSubset::empty(n)))));
    CpStatus::Ok
}

#[no_mangle]
pub unsafe extern "C" fn cp_subset_free(subset: *mut CpSubset) {
    if !subset.is_null() {
        drop(Box::from_raw(subset));
    }
}

/// Inserts `v mod n`.
#[no_mangle]
pub unsafe extern "C" fn cp_subset_insert(subset: *mut CpSubset, v: usize) -> CpStatus {
    let Some(u) = subset.as_mut() else {
        return null_pointer("subset");
    };
    u.0.insert(v);
    CpStatus::Ok
}

#[no_mangle]
pub unsafe extern "C" fn cp_subset_contains(
    subset: *const CpSubset,
    v: usize,
    out: *mut bool,
) -> CpStatus {
    let u = deref!(subset);
    out!(out = u.0.contains(v));
    CpStatus::Ok
}

#[no_mangle]
pub unsafe extern "C" fn cp_subset_len(subset: *const CpSubset, out: *mut usize) -> CpStatus {
    let u = deref!(subset);
    out!(out = u.0.len());
    CpStatus::Ok
}

/// Writes the members in increasing order into `buf` (capacity `cap`) and the
/// member count into `out_len`. Returns `CP_STATUS_BUFFER_TOO_SMALL`, with
/// `out_len` set, when `cap` is insufficient; `buf` may be NULL to query the
/// size.
#[no_mangle]
pub unsafe extern "C" fn cp_subset_members(
    subset: *const CpSubset,
    buf: *mut usize,
    cap: usize,
    out_len: *mut usize,
) -> CpStatus {
    let u = deref!(subset);
    let len = u.0.len();
    out!(out_len = len);
    if buf.is_null() || cap < len {
        set_error(format!("need room for {len} members, have {cap}"));
        return CpStatus::BufferTooSmall;
    }
    for (i, v) in u.0.iter().enumerate() {
        *buf.add(i) = v;
    }
    CpStatus::Ok
}

#[no_mangle]
pub unsafe extern "C" fn cp_interval(
    graph: *const CpGraph,
    start: usize,
    k: usize,
    out: *mut *mut CpSubset,
) -> CpStatus {
    guard(|| {
        let g = deref!(graph);
        let u = try_cp!(g.0.interval(start, k));
        out!(out = Box::into_raw(Box::new(CpSubset(u))));
        CpStatus::Ok
    })
}

#[no_mangle]
pub unsafe extern "C" fn cp_edge_count(
    graph: *const CpGraph,
    subset: *const CpSubset,
    out: *mut u64,
) -> CpStatus {
    guard(|| {
        let g = deref!(graph);
        let u = deref!(subset);
        out!(out = try_cp!(g.0.edge_count(&u.0)));
        CpStatus::Ok
    })
}

#[no_mangle]
pub unsafe extern "C" fn cp_quadratic_form_edges(
    graph: *const CpGraph,
    subset: *const CpSubset,
    out: *mut u64,
) -> CpStatus {
    guard(|| {
        let g = deref!(graph);
        let u = deref!(subset);
        out!(out = try_cp!(quadratic_form_edges(&g.0, &u.0)));
        CpStatus::Ok
    })
}

#[no_mangle]
pub unsafe extern "C" fn cp_spectral_identity_check(
    graph: *const CpGraph,
    subset: *const CpSubset,
    out: *mut bool,
) -> CpStatus {
    guard(|| {
        let g = deref!(graph);
        let u = deref!(subset);
        out!(out = try_cp!(spectral_identity_check(&g.0, &u.0)));
        CpStatus::Ok
    })
}

/// Default search options: symmetry reduction on, everything else off.
#[no_mangle]
pub extern "C" fn cp_search_options_default() -> CpSearchOptions {
    CpSearchOptions {
        reduce_symmetry: true,
        count_maximizers: false,
        prune: false,
        jobs: 0,
        budget: 0,
    }
}

/// Exhaustive search. `options` may be NULL for the defaults.
#[no_mangle]
pub unsafe extern "C" fn cp_search(
    graph: *const CpGraph,
    k: usize,
    options: *const CpSearchOptions,
    out: *mut *mut CpSearchResult,
) -> CpStatus {
    guard(|| {
        let g = deref!(graph);
        let o = options.as_ref().copied().unwrap_or_else(|| cp_search_options_default());
        let opts = SearchOptions {
            reduce_symmetry: o.reduce_symmetry,
            count_maximizers: o.count_maximizers,
            prune: o.prune,
            jobs: (o.jobs > 0).then_some(o.jobs),
            budget: if o.budget == 0 {
                cyclepow::search::budget_from_env()
            } else {
                o.budget as u128
            },
        };
        let r = try_cp!(search(&g.0, k, &opts));
        out!(out = Box::into_raw(Box::new(CpSearchResult(r))));
        CpStatus::Ok
    })
}

#[no_mangle]
pub unsafe extern "C" fn cp_search_result_free(result: *mut CpSearchResult) {
    if !result.is_null() {
        drop(Box::from_raw(result));
    }
}

#[no_mangle]
pub unsafe extern "C" fn cp_search_result_max_edges(
    result: *const CpSearchResult,
    out: *mut u64,
) -> CpStatus {
    let r = deref!(result);
    out!(out = r.0.max_edges);
    CpStatus::Ok
}

#[no_mangle]
pub unsafe extern "C" fn cp_search_result_subsets_examined(
    result: *const CpSearchResult,
    out: *mut u64,
) -> CpStatus {
    let r = deref!(result);
    out!(out = r.0.subsets_examined);
    CpStatus::Ok
}

/// `CP_STATUS_UNDEFINED` when the count was not requested.
#[no_mangle]
pub unsafe extern "C" fn cp_search_result_maximizer_count(
    result: *const CpSearchResult,
    out: *mut u64,
) -> CpStatus {
    let r = deref!(result);
    match r.0.maximizer_count {
        Some(c) => {
            out!(out = c);
            CpStatus::Ok
        }
        None => {
            set_error("maximizer count was not requested");
            CpStatus::Undefined
        }
    }
}

/// Copy of the witness as a new subset handle.
#[no_mangle]
pub unsafe extern "C" fn cp_search_result_witness(
    result: *const CpSearchResult,
    out: *mut *mut CpSubset,
) -> CpStatus {
    let r = deref!(result);
    out!(out = Box::into_raw(Box::new(CpSubset(r.0.witness.clone()))));
    CpStatus::Ok
}

#[no_mangle]
pub unsafe extern "C" fn cp_count_maximizers(
    graph: *const CpGraph,
    k: usize,
    out: *mut u64,
) -> CpStatus {
    guard(|| {
        let g = deref!(graph);
        out!(out = try_cp!(count_maximizers(&g.0, k)));
        CpStatus::Ok
    })
}

/// Runs the full `(n, s, k)` grid up to `max_n`. A grid with violations still
/// returns `CP_STATUS_OK`; inspect `violations`.
#[no_mangle]
pub unsafe extern "C" fn cp_verify_grid(max_n: usize, out: *mut CpGridSummary) -> CpStatus {
    guard(|| {
        let r = try_cp!(verify_theorem_grid(max_n));
        out!(
            out = CpGridSummary {
                cases: r.cases,
                closed_form_cases: r.closed_form_cases,
                turan_cases: r.turan_cases,
                violations: r.violations.len() as u64,
            }
        );
        CpStatus::Ok
    })
}

/// Renders a comparison table. `spec_csv` holds the table spec text (`n`,
/// then `k,s` lines) or is NULL for the built-in table; `format` is one of
/// `plain`, `markdown`, `csv`, `json`. The result must be released with
/// [`cp_string_free`].
#[no_mangle]
pub unsafe extern "C" fn cp_table_render(
    spec_csv: *const c_char,
    format: *const c_char,
    out: *mut *mut c_char,
) -> CpStatus {
    guard(|| {
        if format.is_null() {
            return null_pointer("format");
        }
        let Ok(format) = CStr::from_ptr(format).to_str() else {
            set_error("format is not UTF-8");
            return CpStatus::InvalidArgument;
        };
        let format: Format = try_cp!(format.parse());
        let ts = if spec_csv.is_null() {
            builtin_table1()
        } else {
            let Ok(text) = CStr::from_ptr(spec_csv).to_str() else {
                set_error("table spec is not UTF-8");
                return CpStatus::InvalidArgument;
            };
            try_cp!(TableSpec::parse(text))
        };
        let rows = try_cp!(build_table(&ts));
        let text = CString::new(render(&rows, format)).expect("rendered text has no nul");
        out!(out = text.into_raw());
        CpStatus::Ok
    })
}

#[no_mangle]
pub unsafe extern "C" fn cp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
