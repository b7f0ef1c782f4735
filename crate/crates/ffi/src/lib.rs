//! C ABI over the `uncluttered` crate.
//!
//! Graphs live behind an opaque [`UncGraph`] handle. Every fallible call
//! returns an [`UncErrorCode`]; on failure a message is kept per thread and
//! can be read with [`unc_last_error_message`]. Strings handed out by this
//! library must be released with [`unc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use uncluttered::{
    chromatic_number_exact, classify, clique_number, color_uncluttered, decomposition_tree,
    from_graph6, is_uncluttered, to_graph6, Error, Graph,
};

/// Opaque graph handle.
pub struct UncGraph {
    inner: Graph,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UncErrorCode {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    TooLarge = 4,
    NotUncluttered = 5,
    DepthExceeded = 6,
    /// No case of the structure theorem applied; always a library bug.
    TheoremViolation = 7,
    BufferTooSmall = 8,
    Panic = 9,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn code_of(e: &Error) -> UncErrorCode {
    match e {
        Error::TooManyVertices { .. } | Error::TooLarge { .. } => UncErrorCode::TooLarge,
        Error::NotUncluttered(_) => UncErrorCode::NotUncluttered,
        Error::DepthExceeded { .. } => UncErrorCode::DepthExceeded,
        Error::TheoremViolation { .. } => UncErrorCode::TheoremViolation,
        _ => UncErrorCode::InvalidInput,
    }
}

/// Runs `f`, converting errors and panics into codes and the thread's last message.
fn guard<F>(f: F) -> UncErrorCode
where
    F: FnOnce() -> Result<(), (UncErrorCode, String)>,
{
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => UncErrorCode::Ok,
        Ok(Err((code, msg))) => {
            set_error(msg);
            code
        }
        Err(_) => {
            set_error("internal panic");
            UncErrorCode::Panic
        }
    }
}

fn lib_err(e: Error) -> (UncErrorCode, String) {
    (code_of(&e), e.to_string())
}

fn null(what: &str) -> (UncErrorCode, String) {
    (UncErrorCode::NullPointer, format!("{what} is null"))
}

unsafe fn graph_ref<'a>(g: *const UncGraph) -> Result<&'a Graph, (UncErrorCode, String)> {
    g.as_ref().map(|h| &h.inner).ok_or_else(|| null("graph"))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), (UncErrorCode, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior nul").into_raw()
}

fn boxed(g: Graph) -> *mut UncGraph {
    Box::into_raw(Box::new(UncGraph { inner: g }))
}

/// Creates an edgeless graph on `n` vertices (at most 64).
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn unc_graph_new(n: usize, out: *mut *mut UncGraph) -> UncErrorCode {
    guard(|| {
        let g = Graph::new(n).map_err(lib_err)?;
        put(out, boxed(g))
    })
}

/// Parses a nul-terminated graph6 string.
///
/// # Safety
/// `graph6` must be a valid C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn unc_graph_from_graph6(
    graph6: *const c_char,
    out: *mut *mut UncGraph,
) -> UncErrorCode {
    guard(|| {
        if graph6.is_null() {
            return Err(null("graph6"));
        }
        let s = CStr::from_ptr(graph6)
            .to_str()
            .map_err(|e| (UncErrorCode::InvalidUtf8, e.to_string()))?;
        let g = from_graph6(s.trim()).map_err(lib_err)?;
        put(out, boxed(g))
    })
}

/// Builds a graph from `m` edges stored as `2 * m` consecutive endpoints.
///
/// # Safety
/// `edges` must point to `2 * m` readable values (it may be null when `m` is 0).
#[no_mangle]
pub unsafe extern "C" fn unc_graph_from_edges(
    n: usize,
    edges: *const usize,
    m: usize,
    out: *mut *mut UncGraph,
) -> UncErrorCode {
    guard(|| {
        let flat: &[usize] = if m == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null("edges"));
        } else {
            std::slice::from_raw_parts(edges, 2 * m)
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|c| (c[0], c[1])).collect();
        let g = Graph::from_edges(n, &pairs).map_err(lib_err)?;
        put(out, boxed(g))
    })
}

/// Adds the edge `uv`. Adding an existing edge is a no-op.
///
/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn unc_graph_add_edge(g: *mut UncGraph, u: usize, v: usize) -> UncErrorCode {
    guard(|| {
        let h = g.as_mut().ok_or_else(|| null("graph"))?;
        h.inner.add_edge(u, v).map_err(lib_err)
    })
}

/// # Safety
/// `g` must be null or a handle from this library that was not freed yet.
#[no_mangle]
pub unsafe extern "C" fn unc_graph_free(g: *mut UncGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn unc_graph_order(g: *const UncGraph) -> usize {
    g.as_ref().map_or(0, |h| h.inner.order())
}

/// Number of edges, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn unc_graph_edge_count(g: *const UncGraph) -> usize {
    g.as_ref().map_or(0, |h| h.inner.edge_count())
}

/// Writes a newly allocated graph6 string to `out`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn unc_graph_to_graph6(
    g: *const UncGraph,
    out: *mut *mut c_char,
) -> UncErrorCode {
    guard(|| {
        let g = graph_ref(g)?;
        put(out, owned_string(to_graph6(g)))
    })
}

/// Sets `*out` to whether `g` has no induced fork and no induced antifork.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn unc_is_uncluttered(g: *const UncGraph, out: *mut bool) -> UncErrorCode {
    guard(|| {
        let g = graph_ref(g)?;
        put(out, is_uncluttered(g).is_none())
    })
}

/// Certificate as JSON (`{"case": ..., "payload": ...}`).
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn unc_classify_json(
    g: *const UncGraph,
    out: *mut *mut c_char,
) -> UncErrorCode {
    guard(|| {
        let g = graph_ref(g)?;
        let c = classify(g).map_err(lib_err)?;
        put(out, owned_string(c.to_json()))
    })
}

/// Decomposition tree as JSON. A `depth_limit` of 0 means twice the order.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn unc_decompose_json(
    g: *const UncGraph,
    depth_limit: usize,
    out: *mut *mut c_char,
) -> UncErrorCode {
    guard(|| {
        let g = graph_ref(g)?;
        let limit = if depth_limit == 0 {
            2 * g.order()
        } else {
            depth_limit
        };
        let t = decomposition_tree(g, limit).map_err(lib_err)?;
        put(out, owned_string(t.to_json()))
    })
}

/// Colours an uncluttered graph with at most twice its clique number.
///
/// `colors` receives one entry per vertex and must hold `capacity` values;
/// `num_colors` and `omega` may be null.
///
/// # Safety
/// `g` must be a live handle; `colors` must be writable for `capacity` values.
#[no_mangle]
pub unsafe extern "C" fn unc_color(
    g: *const UncGraph,
    colors: *mut usize,
    capacity: usize,
    num_colors: *mut usize,
    omega: *mut usize,
) -> UncErrorCode {
    guard(|| {
        let g = graph_ref(g)?;
        if capacity < g.order() {
            return Err((
                UncErrorCode::BufferTooSmall,
                format!("need room for {} colours, got {capacity}", g.order()),
            ));
        }
        if colors.is_null() && g.order() > 0 {
            return Err(null("colors"));
        }
        let c = color_uncluttered(g).map_err(lib_err)?;
        if g.order() > 0 {
            std::slice::from_raw_parts_mut(colors, g.order()).copy_from_slice(&c.colors);
        }
        if !num_colors.is_null() {
            num_colors.write(c.num_colors);
        }
        if !omega.is_null() {
            omega.write(c.omega);
        }
        Ok(())
    })
}

/// Colouring as JSON (`{"colors", "num_colors", "omega"}`).
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn unc_color_json(g: *const UncGraph, out: *mut *mut c_char) -> UncErrorCode {
    guard(|| {
        let g = graph_ref(g)?;
        let c = color_uncluttered(g).map_err(lib_err)?;
        put(out, owned_string(c.to_json()))
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn unc_clique_number(g: *const UncGraph, out: *mut usize) -> UncErrorCode {
    guard(|| {
        let g = graph_ref(g)?;
        put(out, clique_number(g))
    })
}

/// Exact chromatic number; refuses graphs above 16 vertices with `TOO_LARGE`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn unc_chromatic_number(g: *const UncGraph, out: *mut usize) -> UncErrorCode {
    guard(|| {
        let g = graph_ref(g)?;
        let chi = chromatic_number_exact(g).map_err(lib_err)?;
        put(out, chi)
    })
}

/// Message for the last failed call on this thread, or null after a success.
/// The pointer stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn unc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library that was not freed yet.
#[no_mangle]
pub unsafe extern "C" fn unc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version as a static C string.
#[no_mangle]
pub extern "C" fn unc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
