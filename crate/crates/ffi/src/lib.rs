//! C ABI over `jrl-core`.
//!
//! Rings and groups cross the boundary as opaque handles owned by the caller
//! and released with the matching `*_free`. Every fallible call returns a
//! [`JrlStatus`]; on failure the message is kept per thread and can be read
//! with [`jrl_last_error_message`]. Panics are caught and reported as
//! [`JrlStatus::Panic`].

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;
use std::sync::Arc;

use jrl::builtins::{builtin_group, builtin_ring};
use jrl::textfmt::{parse_group_file, parse_ring_file};
use jrl::{classify, minimal_jordan_index, vanishes_left_normed, Error, FiniteGroup, FiniteRing, GroupRing, MinimalIndex, SpanningSet, Verdict};

/// Opaque ring handle.
pub struct JrlRing(Arc<FiniteRing>);

/// Opaque group handle.
pub struct JrlGroup(Arc<FiniteGroup>);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JrlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    BufferTooSmall = 3,
    Panic = 4,
    Shape = 10,
    NotAbelianGroup = 11,
    NotAssociative = 12,
    NoIdentity = 13,
    NotDistributive = 14,
    NoInverse = 15,
    UnknownName = 16,
    ContextMismatch = 17,
    EmptySequence = 18,
    InvalidExponent = 19,
    TooLarge = 20,
    ParseError = 21,
    Io = 22,
}

impl From<&Error> for JrlStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Shape(_) => JrlStatus::Shape,
            Error::NotAbelianGroup { .. } => JrlStatus::NotAbelianGroup,
            Error::NotAssociative(_) => JrlStatus::NotAssociative,
            Error::NoIdentity(..) => JrlStatus::NoIdentity,
            Error::NotDistributive { .. } => JrlStatus::NotDistributive,
            Error::NoInverse(_) => JrlStatus::NoInverse,
            Error::UnknownName(_) => JrlStatus::UnknownName,
            Error::ContextMismatch => JrlStatus::ContextMismatch,
            Error::EmptySequence => JrlStatus::EmptySequence,
            Error::InvalidExponent(_) => JrlStatus::InvalidExponent,
            Error::TooLarge { .. } => JrlStatus::TooLarge,
            Error::Parse { .. } => JrlStatus::ParseError,
            Error::Io(_) => JrlStatus::Io,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: String) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

struct Failure(JrlStatus);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        set_error(format!("{}: {e}", e.kind()));
        Failure(JrlStatus::from(&e))
    }
}

fn fail(status: JrlStatus, msg: &str) -> Failure {
    set_error(msg.to_string());
    Failure(status)
}

/// Runs `f`, mapping errors and panics to a status code.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> JrlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error(String::new());
            JrlStatus::Ok
        }
        Ok(Err(Failure(status))) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("panic: {msg}"));
            JrlStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(fail(JrlStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(JrlStatus::InvalidUtf8, "string argument is not UTF-8"))
}

unsafe fn read_table<'a>(p: *const usize, len: usize) -> Result<&'a [usize], Failure> {
    if p.is_null() {
        return Err(fail(JrlStatus::NullPointer, "null table argument"));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| fail(JrlStatus::NullPointer, "null handle"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(fail(JrlStatus::NullPointer, "null output pointer"));
    }
    out.write(value);
    Ok(())
}

fn table_len(order: usize) -> Result<usize, Failure> {
    order.checked_mul(order).ok_or_else(|| fail(JrlStatus::Shape, "order too large"))
}

/// Copies `s` plus a NUL into `buf`; returns the bytes required.
unsafe fn copy_c_string(s: &str, buf: *mut c_char, len: usize) -> usize {
    let needed = s.len() + 1;
    if !buf.is_null() && len > 0 {
        let n = s.len().min(len - 1);
        ptr::copy_nonoverlapping(s.as_ptr().cast::<c_char>(), buf, n);
        *buf.add(n) = 0;
    }
    needed
}

// ---- rings ----

/// Looks up a built-in ring such as `"Z4"` or `"M2(F2)"`.
#[no_mangle]
pub unsafe extern "C" fn jrl_ring_builtin(name: *const c_char, out: *mut *mut JrlRing) -> JrlStatus {
    guard(|| {
        let ring = builtin_ring(read_str(name)?)?;
        write_out(out, Box::into_raw(Box::new(JrlRing(Arc::new(ring)))))
    })
}

/// Builds and validates a ring from row-major `order * order` tables.
#[no_mangle]
pub unsafe extern "C" fn jrl_ring_from_tables(
    name: *const c_char,
    order: usize,
    add: *const usize,
    mul: *const usize,
    zero: usize,
    one: usize,
    out: *mut *mut JrlRing,
) -> JrlStatus {
    guard(|| {
        let name = read_str(name)?;
        let len = table_len(order)?;
        let ring = FiniteRing::new(name, order, read_table(add, len)?, read_table(mul, len)?, zero, one)?;
        write_out(out, Box::into_raw(Box::new(JrlRing(Arc::new(ring)))))
    })
}

/// Parses and validates a ring file.
#[no_mangle]
pub unsafe extern "C" fn jrl_ring_parse_file(path: *const c_char, out: *mut *mut JrlRing) -> JrlStatus {
    guard(|| {
        let ring = parse_ring_file(Path::new(read_str(path)?))?;
        write_out(out, Box::into_raw(Box::new(JrlRing(Arc::new(ring)))))
    })
}

/// Releases a ring handle; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn jrl_ring_free(ring: *mut JrlRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// Number of elements, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn jrl_ring_order(ring: *const JrlRing) -> usize {
    ring.as_ref().map_or(0, |r| r.0.order())
}

/// Additive order of the identity, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn jrl_ring_characteristic(ring: *const JrlRing) -> usize {
    ring.as_ref().map_or(0, |r| r.0.characteristic())
}

#[no_mangle]
pub unsafe extern "C" fn jrl_ring_is_commutative(ring: *const JrlRing) -> bool {
    ring.as_ref().is_some_and(|r| r.0.is_commutative())
}

// ---- groups ----

/// Looks up a built-in group such as `"D4"` or `"C2xQ8"`.
#[no_mangle]
pub unsafe extern "C" fn jrl_group_builtin(name: *const c_char, out: *mut *mut JrlGroup) -> JrlStatus {
    guard(|| {
        let group = builtin_group(read_str(name)?)?;
        write_out(out, Box::into_raw(Box::new(JrlGroup(Arc::new(group)))))
    })
}

/// Builds and validates a group from a row-major `order * order` table.
#[no_mangle]
pub unsafe extern "C" fn jrl_group_from_table(
    name: *const c_char,
    order: usize,
    mul: *const usize,
    identity: usize,
    out: *mut *mut JrlGroup,
) -> JrlStatus {
    guard(|| {
        let name = read_str(name)?;
        let len = table_len(order)?;
        let group = FiniteGroup::new(name, order, read_table(mul, len)?, identity)?;
        write_out(out, Box::into_raw(Box::new(JrlGroup(Arc::new(group)))))
    })
}

/// Parses and validates a group file.
#[no_mangle]
pub unsafe extern "C" fn jrl_group_parse_file(path: *const c_char, out: *mut *mut JrlGroup) -> JrlStatus {
    guard(|| {
        let group = parse_group_file(Path::new(read_str(path)?))?;
        write_out(out, Box::into_raw(Box::new(JrlGroup(Arc::new(group)))))
    })
}

/// Releases a group handle; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn jrl_group_free(group: *mut JrlGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

#[no_mangle]
pub unsafe extern "C" fn jrl_group_order(group: *const JrlGroup) -> usize {
    group.as_ref().map_or(0, |g| g.0.order())
}

#[no_mangle]
pub unsafe extern "C" fn jrl_group_is_abelian(group: *const JrlGroup) -> bool {
    group.as_ref().is_some_and(|g| g.0.is_abelian())
}

/// Order of the derived subgroup, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn jrl_group_derived_order(group: *const JrlGroup) -> usize {
    group.as_ref().map_or(0, |g| g.0.derived_subgroup().order())
}

/// Order of the centre, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn jrl_group_center_order(group: *const JrlGroup) -> usize {
    group.as_ref().map_or(0, |g| g.0.center().order())
}

// ---- classification and oracles ----

/// Structural prediction for `R[G]`.
///
/// `*index` receives 2, 3 or 4, or 0 when no clause applies (index above 4 or
/// not nilpotent). The clause tag is copied into `tag` (NUL-terminated,
/// truncated to `tag_len`); if `tag` is too small the call still sets `*index`
/// and returns `BufferTooSmall`. `tag` may be null when `tag_len` is 0.
#[no_mangle]
pub unsafe extern "C" fn jrl_classify(
    ring: *const JrlRing,
    group: *const JrlGroup,
    index: *mut u32,
    tag: *mut c_char,
    tag_len: usize,
) -> JrlStatus {
    guard(|| {
        let (r, g) = (deref(ring)?, deref(group)?);
        let result = classify(&r.0, &g.0);
        let n = match result.verdict {
            Verdict::Index(n) => n as u32,
            Verdict::NotWithinFour => 0,
        };
        write_out(index, n)?;
        if tag.is_null() && tag_len == 0 {
            return Ok(());
        }
        if copy_c_string(result.clause_tag(), tag, tag_len) > tag_len {
            return Err(fail(JrlStatus::BufferTooSmall, "tag buffer too small"));
        }
        Ok(())
    })
}

fn spanning(ring: &JrlRing, group: &JrlGroup) -> SpanningSet {
    SpanningSet::for_group_ring(&GroupRing::new(Arc::clone(&ring.0), Arc::clone(&group.0)))
}

/// Least `n` in `2..=max_n` at which every degree-`n` left-normed circle
/// product of `R[G]` vanishes; `*index` is 0 if there is none.
#[no_mangle]
pub unsafe extern "C" fn jrl_minimal_jordan_index(
    ring: *const JrlRing,
    group: *const JrlGroup,
    max_n: usize,
    index: *mut u32,
) -> JrlStatus {
    guard(|| {
        let span = spanning(deref(ring)?, deref(group)?);
        let n = match minimal_jordan_index(&span, max_n)? {
            MinimalIndex::Index(n) => n as u32,
            MinimalIndex::NotWithinBound(_) => 0,
        };
        write_out(index, n)
    })
}

/// Whether every degree-`n` left-normed circle product of `R[G]` vanishes.
#[no_mangle]
pub unsafe extern "C" fn jrl_vanishes(ring: *const JrlRing, group: *const JrlGroup, n: usize, out: *mut bool) -> JrlStatus {
    guard(|| {
        let span = spanning(deref(ring)?, deref(group)?);
        let vanishes = vanishes_left_normed(&span, n)?.is_none();
        write_out(out, vanishes)
    })
}

/// Copies the calling thread's last error message into `buf` (NUL-terminated,
/// truncated to `len`) and returns the buffer size needed for all of it. The
/// message is empty after a successful call.
#[no_mangle]
pub unsafe extern "C" fn jrl_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| copy_c_string(&e.borrow(), buf, len))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;

    fn last_error() -> String {
        let mut buf = [0 as c_char; 256];
        unsafe { jrl_last_error_message(buf.as_mut_ptr(), buf.len()) };
        unsafe { CStr::from_ptr(buf.as_ptr()) }.to_string_lossy().into_owned()
    }

    #[test]
    fn status_mapping_is_total() {
        let e = Error::Parse { line: 3, msg: "x".into() };
        assert_eq!(JrlStatus::from(&e), JrlStatus::ParseError);
        assert_eq!(JrlStatus::from(&Error::InvalidExponent(1)), JrlStatus::InvalidExponent);
    }

    #[test]
    fn unknown_builtin_sets_message() {
        let name = CString::new("Z0x").unwrap();
        let mut out = ptr::null_mut();
        let st = unsafe { jrl_ring_builtin(name.as_ptr(), &mut out) };
        assert_eq!(st, JrlStatus::UnknownName);
        assert!(out.is_null());
        assert!(last_error().starts_with("UnknownName"));
    }

    #[test]
    fn truncated_copy() {
        let mut buf = [1 as c_char; 4];
        let needed = unsafe { copy_c_string("abcdef", buf.as_mut_ptr(), buf.len()) };
        assert_eq!(needed, 7);
        assert_eq!(buf, [b'a' as c_char, b'b' as c_char, b'c' as c_char, 0]);
    }
}
