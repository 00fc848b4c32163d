//! C ABI for the stringob library.
//!
//! Conventions:
//! - Handles (`SoGraph`, `SoReport`) are opaque; free them with the
//!   matching `so_*_free` function. Strings returned through `char **`
//!   out-parameters are NUL-terminated, allocated by this library, and
//!   must be released with `so_string_free`.
//! - Every fallible function returns an `SoStatus`; out-parameters are
//!   written only on `SO_OK`.
//! - Panics never unwind across the boundary; they surface as `SO_PANIC`.

use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::panic::{AssertUnwindSafe, catch_unwind};

use stringob::drawing::{crossing_vector, layout_moment_curve};
use stringob::graph::{Family, Graph, PairKind, generate, pair_set};
use stringob::obstruction::{ObstructionReport, build_system, decide_integer, decide_mod2};
use stringob::strings::{StringRepresentation, verify_string_representation};

/// Result codes for every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum SoStatus {
    SoOk = 0,
    SoNullArgument = 1,
    SoInvalidArgument = 2,
    SoParseError = 3,
    SoGraphError = 4,
    SoComputeError = 5,
    SoPanic = 6,
}

/// Pair-set selector: all disjoint pairs, the string pairs, or the
/// subdivided pairs.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum SoPairKind {
    SoPairsDelta = 0,
    SoPairsS = 1,
    SoPairsSd = 2,
}

/// Coefficient domain of the decision.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum SoMode {
    SoModeMod2 = 0,
    SoModeInteger = 1,
}

/// Opaque graph handle.
pub struct SoGraph {
    inner: Graph,
}

/// Opaque obstruction-report handle.
pub struct SoReport {
    inner: ObstructionReport,
}

fn guard<F: FnOnce() -> SoStatus>(f: F) -> SoStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => SoStatus::SoPanic,
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Option<&'a str> {
    if p.is_null() {
        return None;
    }
    unsafe { CStr::from_ptr(p) }.to_str().ok()
}

fn give_string(s: String, out: *mut *mut c_char) -> SoStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            SoStatus::SoOk
        }
        Err(_) => SoStatus::SoComputeError,
    }
}

/// Builds a graph from a flat edge array `[u0, v0, u1, v1, …]`.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable elements and `out` must
/// be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn so_graph_new(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut SoGraph,
) -> SoStatus {
    if out.is_null() || (edge_count > 0 && edges.is_null()) {
        return SoStatus::SoNullArgument;
    }
    guard(|| {
        let flat = if edge_count == 0 {
            &[][..]
        } else {
            unsafe { std::slice::from_raw_parts(edges, 2 * edge_count) }
        };
        let pairs: Vec<(usize, usize)> = flat.chunks(2).map(|c| (c[0], c[1])).collect();
        match Graph::new(n, &pairs) {
            Ok(g) => {
                unsafe { *out = Box::into_raw(Box::new(SoGraph { inner: g })) };
                SoStatus::SoOk
            }
            Err(_) => SoStatus::SoGraphError,
        }
    })
}

/// Parses the `{"n": …, "edges": …}` JSON format.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn so_graph_from_json(
    json: *const c_char,
    out: *mut *mut SoGraph,
) -> SoStatus {
    if out.is_null() {
        return SoStatus::SoNullArgument;
    }
    let Some(s) = (unsafe { read_str(json) }) else {
        return SoStatus::SoNullArgument;
    };
    guard(|| match Graph::from_json(s) {
        Ok(g) => {
            unsafe { *out = Box::into_raw(Box::new(SoGraph { inner: g })) };
            SoStatus::SoOk
        }
        Err(_) => SoStatus::SoParseError,
    })
}

/// Generates a named graph. Families: `"heawood"`, `"gp"` (no
/// parameters), `"c_cbar"` and `"complete"` (parameter `a`),
/// `"complete_bipartite"` (parameters `a`, `b`).
///
/// # Safety
/// `family` must be NUL-terminated; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn so_graph_generate(
    family: *const c_char,
    a: usize,
    b: usize,
    out: *mut *mut SoGraph,
) -> SoStatus {
    if out.is_null() {
        return SoStatus::SoNullArgument;
    }
    let Some(name) = (unsafe { read_str(family) }) else {
        return SoStatus::SoNullArgument;
    };
    guard(|| {
        let fam = match name {
            "heawood" => Family::Heawood,
            "gp" => Family::Gp,
            "c_cbar" => Family::CCbar(a),
            "complete" => Family::Complete(a),
            "complete_bipartite" => Family::CompleteBipartite(a, b),
            _ => return SoStatus::SoInvalidArgument,
        };
        match generate(&fam) {
            Ok(g) => {
                unsafe { *out = Box::into_raw(Box::new(SoGraph { inner: g })) };
                SoStatus::SoOk
            }
            Err(_) => SoStatus::SoGraphError,
        }
    })
}

/// Serializes the graph to its JSON format.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn so_graph_to_json(g: *const SoGraph, out: *mut *mut c_char) -> SoStatus {
    if g.is_null() || out.is_null() {
        return SoStatus::SoNullArgument;
    }
    guard(|| give_string(unsafe { &*g }.inner.to_json(), out))
}

/// # Safety
/// `g` must be a live handle (or null, which yields 0).
#[no_mangle]
pub unsafe extern "C" fn so_graph_vertex_count(g: *const SoGraph) -> usize {
    if g.is_null() {
        return 0;
    }
    unsafe { &*g }.inner.vertex_count()
}

/// # Safety
/// `g` must be a live handle (or null, which yields 0).
#[no_mangle]
pub unsafe extern "C" fn so_graph_edge_count(g: *const SoGraph) -> usize {
    if g.is_null() {
        return 0;
    }
    unsafe { &*g }.inner.edge_count()
}

/// Releases a graph handle. Null is a no-op.
///
/// # Safety
/// `g` must have come from this library and not been freed before.
#[no_mangle]
pub unsafe extern "C" fn so_graph_free(g: *mut SoGraph) {
    if !g.is_null() {
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Decides the obstruction of `g` for the selected pair set and mode.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn so_obstruction(
    g: *const SoGraph,
    pairs: SoPairKind,
    mode: SoMode,
    out: *mut *mut SoReport,
) -> SoStatus {
    if g.is_null() || out.is_null() {
        return SoStatus::SoNullArgument;
    }
    guard(|| {
        let graph = &unsafe { &*g }.inner;
        let kind = match pairs {
            SoPairKind::SoPairsDelta => PairKind::Delta,
            SoPairKind::SoPairsS => PairKind::S,
            SoPairKind::SoPairsSd => PairKind::Sd,
        };
        let ps = pair_set(graph, kind);
        let d = layout_moment_curve(ps.base());
        let Ok(o) = crossing_vector(&d, &ps) else {
            return SoStatus::SoComputeError;
        };
        let sys = build_system(&ps);
        let report = match mode {
            SoMode::SoModeMod2 => decide_mod2(&sys, &o),
            SoMode::SoModeInteger => decide_integer(&sys, &o),
        };
        match report {
            Ok(r) => {
                unsafe { *out = Box::into_raw(Box::new(SoReport { inner: r })) };
                SoStatus::SoOk
            }
            Err(_) => SoStatus::SoComputeError,
        }
    })
}

/// 1 when the obstruction vanishes, 0 otherwise (or on null).
///
/// # Safety
/// `r` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn so_report_vanishes(r: *const SoReport) -> i32 {
    if r.is_null() {
        return 0;
    }
    i32::from(unsafe { &*r }.inner.vanishes)
}

/// GF(2) rank of the finger-move system.
///
/// # Safety
/// `r` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn so_report_rank(r: *const SoReport) -> usize {
    if r.is_null() {
        return 0;
    }
    unsafe { &*r }.inner.rank
}

/// Serializes the report to its JSON schema.
///
/// # Safety
/// `r` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn so_report_to_json(r: *const SoReport, out: *mut *mut c_char) -> SoStatus {
    if r.is_null() || out.is_null() {
        return SoStatus::SoNullArgument;
    }
    guard(|| give_string(unsafe { &*r }.inner.to_json(), out))
}

/// Releases a report handle. Null is a no-op.
///
/// # Safety
/// `r` must have come from this library and not been freed before.
#[no_mangle]
pub unsafe extern "C" fn so_report_free(r: *mut SoReport) {
    if !r.is_null() {
        drop(unsafe { Box::from_raw(r) });
    }
}

/// Verifies a string representation (`{"n": …, "curves": …}`) against a
/// graph. Writes 1/0 to `valid` and a JSON array of human-readable
/// violations to `violations_json`.
///
/// # Safety
/// Both strings must be NUL-terminated; `valid` and `violations_json`
/// must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn so_strings_verify(
    graph_json: *const c_char,
    rep_json: *const c_char,
    valid: *mut i32,
    violations_json: *mut *mut c_char,
) -> SoStatus {
    if valid.is_null() || violations_json.is_null() {
        return SoStatus::SoNullArgument;
    }
    let (Some(gs), Some(rs)) = (unsafe { read_str(graph_json) }, unsafe { read_str(rep_json) })
    else {
        return SoStatus::SoNullArgument;
    };
    guard(|| {
        let Ok(g) = Graph::from_json(gs) else {
            return SoStatus::SoParseError;
        };
        let Ok(rep) = StringRepresentation::from_json(&g, rs) else {
            return SoStatus::SoParseError;
        };
        let violations = verify_string_representation(&rep);
        let list: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
        let json = serde_json::to_string(&list).expect("violations serialize");
        unsafe { *valid = i32::from(violations.is_empty()) };
        give_string(json, violations_json)
    })
}

/// Releases a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must have come from this library and not been freed before.
#[no_mangle]
pub unsafe extern "C" fn so_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn so_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr() as *const c_char
}
