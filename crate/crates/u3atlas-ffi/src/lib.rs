//! C ABI surface for the u3atlas engine.
//!
//! The API follows the usual opaque-handle pattern: `u3atlas_group_build`
//! (or `u3atlas_group_from_generators_json`) allocates a group handle that
//! must be released with `u3atlas_group_free`, accessors report through out
//! parameters and return a status code, and every returned string must be
//! released with `u3atlas_string_free`.  All functions are safe to call
//! from any thread; handles are immutable after construction.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use u3atlas::catalog::{self, SeriesSpec};
use u3atlas::chardeg;
use u3atlas::engine::{closure, GroupData};
use u3atlas::mat3::Mat3;

/// Status code returned by every fallible function in this API.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum U3Status {
    /// The call succeeded.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// The series spec or generator JSON could not be parsed.
    InvalidInput = 2,
    /// Group closure failed (e.g. the element cap was exceeded).
    BuildFailed = 3,
    /// A post-build computation failed.
    ComputeFailed = 4,
    /// The spec parsed but names no entry of the built-in catalog.
    NotInCatalog = 5,
    /// An internal invariant was violated (a bug; please report it).
    Internal = 6,
}

/// Opaque handle to a closed matrix group.
pub struct U3Group {
    data: GroupData,
}

/// Default element cap used by the constructors in this API.
pub const U3ATLAS_DEFAULT_ELEMENT_CAP: u64 = 100_000;

fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, U3Status> {
    if ptr.is_null() {
        return Err(U3Status::NullPointer);
    }
    unsafe { CStr::from_ptr(ptr) }
        .to_str()
        .map_err(|_| U3Status::InvalidInput)
}

fn write_string(out: *mut *mut c_char, s: String) -> U3Status {
    if out.is_null() {
        return U3Status::NullPointer;
    }
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            U3Status::Ok
        }
        Err(_) => U3Status::Internal,
    }
}

fn guarded(f: impl FnOnce() -> U3Status) -> U3Status {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => U3Status::Internal,
    }
}

/// Builds the catalog group named by `spec` (e.g. `"T(r=7,k=2,m=2)"`) and
/// stores a new handle in `*out`.  The handle must be freed with
/// `u3atlas_group_free`.
#[no_mangle]
pub extern "C" fn u3atlas_group_build(spec: *const c_char, out: *mut *mut U3Group) -> U3Status {
    guarded(|| {
        if out.is_null() {
            return U3Status::NullPointer;
        }
        let text = match read_str(spec) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let parsed: SeriesSpec = match text.parse() {
            Ok(p) => p,
            Err(_) => return U3Status::InvalidInput,
        };
        match catalog::build(&parsed) {
            Ok(data) => {
                let handle = Box::new(U3Group { data });
                unsafe { *out = Box::into_raw(handle) };
                U3Status::Ok
            }
            Err(catalog::BuildError::InvalidSpec { .. }) => U3Status::InvalidInput,
            Err(catalog::BuildError::Closure(_)) => U3Status::BuildFailed,
        }
    })
}

/// Builds the closure of explicit generators and stores a new handle in
/// `*out`.  `json` is an array of 3x3 matrices whose entries are cyclotomic
/// literals, e.g. `[[["1","0","0"],["0","E(3)","0"],["0","0","E(3)^2"]]]`.
/// `element_cap` bounds the closure size; pass 0 for the default.
#[no_mangle]
pub extern "C" fn u3atlas_group_from_generators_json(
    json: *const c_char,
    element_cap: u64,
    out: *mut *mut U3Group,
) -> U3Status {
    guarded(|| {
        if out.is_null() {
            return U3Status::NullPointer;
        }
        let text = match read_str(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let rows: Vec<Vec<Vec<String>>> = match serde_json::from_str(text) {
            Ok(r) => r,
            Err(_) => return U3Status::InvalidInput,
        };
        let mut gens = Vec::with_capacity(rows.len());
        for m in &rows {
            match Mat3::from_literal_rows(m) {
                Ok(g) => gens.push(g),
                Err(_) => return U3Status::InvalidInput,
            }
        }
        let cap = if element_cap == 0 {
            U3ATLAS_DEFAULT_ELEMENT_CAP
        } else {
            element_cap
        } as usize;
        match closure(&gens, cap) {
            Ok(data) => {
                let handle = Box::new(U3Group { data });
                unsafe { *out = Box::into_raw(handle) };
                U3Status::Ok
            }
            Err(_) => U3Status::BuildFailed,
        }
    })
}

/// Releases a group handle.  Passing null is a no-op.
#[no_mangle]
pub extern "C" fn u3atlas_group_free(group: *mut U3Group) {
    if !group.is_null() {
        drop(unsafe { Box::from_raw(group) });
    }
}

fn with_group<T>(
    group: *const U3Group,
    out: *mut T,
    f: impl FnOnce(&GroupData) -> Result<T, U3Status>,
) -> U3Status {
    guarded(|| {
        if group.is_null() || out.is_null() {
            return U3Status::NullPointer;
        }
        let g = unsafe { &*group };
        match f(&g.data) {
            Ok(v) => {
                unsafe { *out = v };
                U3Status::Ok
            }
            Err(s) => s,
        }
    })
}

/// Stores the group order in `*out`.
#[no_mangle]
pub extern "C" fn u3atlas_group_order(group: *const U3Group, out: *mut u64) -> U3Status {
    with_group(group, out, |g| Ok(g.order() as u64))
}

/// Stores 1 in `*out` if every generator has determinant 1, else 0.
#[no_mangle]
pub extern "C" fn u3atlas_group_is_su3(group: *const U3Group, out: *mut u8) -> U3Status {
    with_group(group, out, |g| Ok(u8::from(g.is_subgroup_of_su3())))
}

/// Stores the number of conjugacy classes in `*out`.
#[no_mangle]
pub extern "C" fn u3atlas_group_class_count(group: *const U3Group, out: *mut u64) -> U3Status {
    with_group(group, out, |g| Ok(g.conjugacy_classes().count() as u64))
}

/// Stores the order of the determinant image (a cyclic group) in `*out`.
#[no_mangle]
pub extern "C" fn u3atlas_group_det_image_order(
    group: *const U3Group,
    out: *mut u64,
) -> U3Status {
    with_group(group, out, |g| Ok(g.det_image_order()))
}

/// Stores the group exponent (lcm of element orders) in `*out`.
#[no_mangle]
pub extern "C" fn u3atlas_group_exponent(group: *const U3Group, out: *mut u64) -> U3Status {
    with_group(group, out, |g| Ok(g.exponent()))
}

/// Computes the irreducible character degrees and stores them in `*out` as a
/// JSON object mapping degree to multiplicity, e.g. `{"1":9,"3":6}`.  The
/// string must be freed with `u3atlas_string_free`.
#[no_mangle]
pub extern "C" fn u3atlas_group_degrees_json(
    group: *const U3Group,
    out: *mut *mut c_char,
) -> U3Status {
    guarded(|| {
        if group.is_null() {
            return U3Status::NullPointer;
        }
        let g = unsafe { &*group };
        let profile = match chardeg::character_degrees(&g.data) {
            Ok(p) => p,
            Err(_) => return U3Status::ComputeFailed,
        };
        match serde_json::to_string(profile.counts()) {
            Ok(s) => write_string(out, s),
            Err(_) => U3Status::Internal,
        }
    })
}

/// Runs the full verification for the catalog entry named by `spec` and
/// stores the report in `*out` as JSON.  `seed` feeds the randomized degree
/// computation; any seed yields the same certified profile.  The string must
/// be freed with `u3atlas_string_free`.
#[no_mangle]
pub extern "C" fn u3atlas_verify_spec(
    spec: *const c_char,
    seed: u64,
    out: *mut *mut c_char,
) -> U3Status {
    guarded(|| {
        let text = match read_str(spec) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let parsed: SeriesSpec = match text.parse() {
            Ok(p) => p,
            Err(_) => return U3Status::InvalidInput,
        };
        let entry = match catalog::enumerate(2000).into_iter().find(|e| e.spec == parsed) {
            Some(e) => e,
            None => return U3Status::NotInCatalog,
        };
        let report = catalog::verify_entry_seeded(&entry, seed);
        match serde_json::to_string(&report) {
            Ok(s) => write_string(out, s),
            Err(_) => U3Status::Internal,
        }
    })
}

/// Releases a string returned by this API.  Passing null is a no-op.
#[no_mangle]
pub extern "C" fn u3atlas_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
