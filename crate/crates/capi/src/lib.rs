//! C ABI over the workbench. Instances travel as opaque handles, every
//! call returns a status code, and all strings crossing the boundary are
//! freed by `rw_string_free`.
//!
//! The generated header lands in `include/ramsey.h` at build time.

use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

use ramsey_core::finders::{find_in_graph, SearchError, Target};
use ramsey_core::frontier::{
    conditions_report, enumerate_verify, EnumerationOptions, FrontierError,
};
use ramsey_core::graph::MultipartiteHost;
use ramsey_core::io::{
    certificate_report, export_dot, parse_instance, serialize_instance, ParsedInstance,
};

/// Result of every ABI call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RwStatus {
    /// success
    Ok = 0,
    /// a required pointer argument was null
    NullArg = 1,
    /// a string argument was not valid UTF-8
    BadUtf8 = 2,
    /// the instance text failed to parse or validate
    Parse = 3,
    /// the generator rejected its arguments
    Construct = 4,
    /// an argument was out of range for the operation
    BadArg = 5,
    /// the operation exceeded a search or enumeration cap
    CapExceeded = 6,
    /// unexpected internal failure
    Internal = 7,
}

/// What to search for in each color class.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RwTarget {
    /// path on `size` vertices
    Path = 0,
    /// cycle on exactly `size` vertices
    Cycle = 1,
    /// cycle on at least `size` vertices
    CycleAtLeast = 2,
    /// `size` disjoint edges in one component
    ConnectedMatching = 3,
}

impl RwTarget {
    fn target(self, size: usize) -> Target {
        match self {
            RwTarget::Path => Target::Path(size),
            RwTarget::Cycle => Target::Cycle(size),
            RwTarget::CycleAtLeast => Target::CycleAtLeast(size),
            RwTarget::ConnectedMatching => Target::ConnectedMatching(size),
        }
    }
}

/// Opaque handle to a loaded instance.
pub struct RwInstance {
    inner: ParsedInstance,
}

fn guarded<F: FnOnce() -> RwStatus>(f: F) -> RwStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(RwStatus::Internal)
}

fn search_status(e: &SearchError) -> RwStatus {
    match e {
        SearchError::CapExceeded { .. } => RwStatus::CapExceeded,
        _ => RwStatus::BadArg,
    }
}

unsafe fn parts_arg<'a>(parts: *const usize, len: usize) -> Result<&'a [usize], RwStatus> {
    if len == 0 {
        Ok(&[])
    } else if parts.is_null() {
        Err(RwStatus::NullArg)
    } else {
        Ok(std::slice::from_raw_parts(parts, len))
    }
}

unsafe fn emit_string(text: String, out: *mut *mut c_char) -> RwStatus {
    match CString::new(text) {
        Ok(c) => {
            *out = c.into_raw();
            RwStatus::Ok
        }
        Err(_) => RwStatus::Internal,
    }
}

/// Parses an instance from JSON text. On success `*out` owns the handle;
/// release it with `rw_instance_free`.
#[no_mangle]
pub unsafe extern "C" fn rw_instance_parse(
    json: *const c_char,
    out: *mut *mut RwInstance,
) -> RwStatus {
    if json.is_null() || out.is_null() {
        return RwStatus::NullArg;
    }
    guarded(|| {
        let text = match CStr::from_ptr(json).to_str() {
            Ok(t) => t,
            Err(_) => return RwStatus::BadUtf8,
        };
        match parse_instance(text) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(RwInstance { inner }));
                RwStatus::Ok
            }
            Err(_) => RwStatus::Parse,
        }
    })
}

/// Builds extremal coloring `example` (1 through 7) at half-length `n`.
/// `parts` may be null with `parts_len` 0 for generators that take none.
#[no_mangle]
pub unsafe extern "C" fn rw_instance_generate(
    example: usize,
    n: usize,
    parts: *const usize,
    parts_len: usize,
    out: *mut *mut RwInstance,
) -> RwStatus {
    if out.is_null() {
        return RwStatus::NullArg;
    }
    guarded(|| {
        let parts = match parts_arg(parts, parts_len) {
            Ok(p) => p,
            Err(s) => return s,
        };
        let parts = if parts.is_empty() { None } else { Some(parts) };
        match ramsey_core::constructions::example(example, n, parts) {
            Ok(inst) => {
                *out = Box::into_raw(Box::new(RwInstance { inner: inst.into() }));
                RwStatus::Ok
            }
            Err(_) => RwStatus::Construct,
        }
    })
}

/// Releases a handle. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn rw_instance_free(inst: *mut RwInstance) {
    if !inst.is_null() {
        drop(Box::from_raw(inst));
    }
}

/// Releases a string returned by this library. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn rw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Serializes the instance to canonical JSON.
#[no_mangle]
pub unsafe extern "C" fn rw_instance_to_json(
    inst: *const RwInstance,
    out: *mut *mut c_char,
) -> RwStatus {
    if inst.is_null() || out.is_null() {
        return RwStatus::NullArg;
    }
    guarded(|| emit_string(serialize_instance(&(*inst).inner), out))
}

/// Renders the instance as DOT.
#[no_mangle]
pub unsafe extern "C" fn rw_instance_to_dot(
    inst: *const RwInstance,
    out: *mut *mut c_char,
) -> RwStatus {
    if inst.is_null() || out.is_null() {
        return RwStatus::NullArg;
    }
    guarded(|| emit_string(export_dot(&(*inst).inner), out))
}

/// Searches both color classes for a monochromatic target. `*found` is
/// 1 when either color contains it, else 0.
#[no_mangle]
pub unsafe extern "C" fn rw_instance_check(
    inst: *const RwInstance,
    target: RwTarget,
    size: usize,
    found: *mut c_int,
) -> RwStatus {
    if inst.is_null() || found.is_null() {
        return RwStatus::NullArg;
    }
    guarded(|| {
        match ramsey_core::finders::mono_search(&(*inst).inner.coloring, target.target(size)) {
            Ok(hit) => {
                *found = c_int::from(hit.is_some());
                RwStatus::Ok
            }
            Err(e) => search_status(&e),
        }
    })
}

/// Validates embedded certificates. Writes how many there are and how
/// many failed validation.
#[no_mangle]
pub unsafe extern "C" fn rw_instance_certify(
    inst: *const RwInstance,
    total: *mut usize,
    invalid: *mut usize,
) -> RwStatus {
    if inst.is_null() || total.is_null() || invalid.is_null() {
        return RwStatus::NullArg;
    }
    guarded(|| {
        let report = certificate_report(&(*inst).inner);
        *total = report.len();
        *invalid = report.iter().filter(|s| !s.valid).count();
        RwStatus::Ok
    })
}

/// Evaluates the seven threshold conditions for `n` and the part sizes.
/// `flags` must point at seven bytes; each is set to 1 (holds) or 0.
#[no_mangle]
pub unsafe extern "C" fn rw_conditions(
    n: usize,
    parts: *const usize,
    parts_len: usize,
    flags: *mut u8,
) -> RwStatus {
    if flags.is_null() {
        return RwStatus::NullArg;
    }
    guarded(|| {
        let parts = match parts_arg(parts, parts_len) {
            Ok(p) => p,
            Err(s) => return s,
        };
        match conditions_report(n, parts) {
            Ok(report) => {
                for (i, &flag) in report.flags().iter().enumerate() {
                    *flags.add(i) = u8::from(flag);
                }
                RwStatus::Ok
            }
            Err(_) => RwStatus::BadArg,
        }
    })
}

/// Exhaustively scans every coloring of the host for a monochromatic
/// target, with `threads` workers (0 means 1). Writes the number of
/// colorings covered and how many lacked the target.
#[no_mangle]
pub unsafe extern "C" fn rw_verify(
    parts: *const usize,
    parts_len: usize,
    target: RwTarget,
    size: usize,
    threads: u32,
    colorings: *mut u64,
    failures: *mut u64,
) -> RwStatus {
    if colorings.is_null() || failures.is_null() {
        return RwStatus::NullArg;
    }
    guarded(|| {
        let parts = match parts_arg(parts, parts_len) {
            Ok(p) => p,
            Err(s) => return s,
        };
        let host = match MultipartiteHost::new(parts) {
            Ok(h) => Arc::new(h),
            Err(_) => return RwStatus::BadArg,
        };
        let opts = EnumerationOptions {
            threads: threads as usize,
            ..Default::default()
        };
        match enumerate_verify(&host, target.target(size), &opts) {
            Ok(summary) => {
                *colorings = summary.colorings;
                *failures = summary.failures;
                RwStatus::Ok
            }
            Err(
                FrontierError::TooManyColorings { .. }
                | FrontierError::EdgeCountTooLarge { .. }
                | FrontierError::PermGroupTooLarge { .. },
            ) => RwStatus::CapExceeded,
            Err(FrontierError::Search(e)) => search_status(&e),
            Err(_) => RwStatus::BadArg,
        }
    })
}

/// Searches one already-validated instance's host graph directly; used
/// by callers that build plain graphs on the host without a coloring.
#[no_mangle]
pub unsafe extern "C" fn rw_instance_host_check(
    inst: *const RwInstance,
    target: RwTarget,
    size: usize,
    found: *mut c_int,
) -> RwStatus {
    if inst.is_null() || found.is_null() {
        return RwStatus::NullArg;
    }
    guarded(|| {
        let host = &(*inst).inner.host;
        let g = ramsey_core::graph::SimpleGraph::from_edges(
            host.vertex_count(),
            &host
                .edges()
                .iter()
                .map(|&(u, v)| (u as usize, v as usize))
                .collect::<Vec<_>>(),
        )
        .expect("host edges are valid");
        match find_in_graph(&g, target.target(size)) {
            Ok(hit) => {
                *found = c_int::from(hit.is_some());
                RwStatus::Ok
            }
            Err(e) => search_status(&e),
        }
    })
}
