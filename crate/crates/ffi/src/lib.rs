//! C ABI over `tits-core`.
//!
//! Chamber systems cross the boundary as opaque [`TitsChamberSystem`]
//! handles; reports cross as JSON strings owned by the library. Every call
//! returns a [`TitsStatus`]; on failure [`tits_last_error`] describes the
//! most recent error on the calling thread. Pointers returned through `out`
//! parameters are released with the matching `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use tits_core::catalog;
use tits_core::chamber::ChamberSystem;
use tits_core::covers::universal_cover;
use tits_core::coxeter::CoxeterMatrix;
use tits_core::verify::{is_building_inferred, is_c3_geometry, ll_verdict};
use tits_core::Error;

/// Opaque chamber system.
pub struct TitsChamberSystem {
    inner: ChamberSystem,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TitsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    NotFound = 4,
    BudgetExceeded = 5,
    InfiniteGroup = 6,
    Disconnected = 7,
    Io = 8,
    Panic = 9,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> TitsStatus {
    match e {
        Error::UnknownCatalogEntry(_) => TitsStatus::NotFound,
        Error::BudgetExceeded { .. } | Error::CapExceeded(_) => TitsStatus::BudgetExceeded,
        Error::InfiniteGroup => TitsStatus::InfiniteGroup,
        Error::Disconnected => TitsStatus::Disconnected,
        Error::Io(_) => TitsStatus::Io,
        _ => TitsStatus::InvalidInput,
    }
}

/// Runs `f`, recording errors and converting panics.
fn guard(f: impl FnOnce() -> Result<(), (TitsStatus, String)>) -> TitsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            TitsStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            TitsStatus::Panic
        }
    }
}

type Ffi<T> = Result<T, (TitsStatus, String)>;

fn core<T>(r: tits_core::Result<T>) -> Ffi<T> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (TitsStatus, String) {
    (TitsStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Ffi<&'a str> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s).to_str().map_err(|_| (TitsStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn system<'a>(sys: *const TitsChamberSystem) -> Ffi<&'a ChamberSystem> {
    sys.as_ref().map(|s| &s.inner).ok_or_else(|| null("system"))
}

fn into_handle(sys: ChamberSystem) -> *mut TitsChamberSystem {
    Box::into_raw(Box::new(TitsChamberSystem { inner: sys }))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// Writes `value` as JSON to `out` unless `out` is null.
unsafe fn write_json<T: serde::Serialize>(value: &T, out: *mut *mut c_char) -> Ffi<()> {
    if !out.is_null() {
        let text = serde_json::to_string(value).map_err(|e| (TitsStatus::InvalidInput, e.to_string()))?;
        *out = into_c_string(text);
    }
    Ok(())
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call on the same thread.
#[no_mangle]
pub extern "C" fn tits_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn tits_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Builds a catalog entry by name.
///
/// # Safety
/// `name` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tits_catalog_build(name: *const c_char, out: *mut *mut TitsChamberSystem) -> TitsStatus {
    guard(|| {
        let name = read_str(name, "name")?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = into_handle(core(catalog::build(name))?);
        Ok(())
    })
}

/// Parses a chamber system from its JSON form.
///
/// # Safety
/// `json` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tits_system_from_json(json: *const c_char, out: *mut *mut TitsChamberSystem) -> TitsStatus {
    guard(|| {
        let json = read_str(json, "json")?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = into_handle(core(ChamberSystem::from_json_str(json))?);
        Ok(())
    })
}

/// Serializes a chamber system; free the string with [`tits_string_free`].
///
/// # Safety
/// `sys` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tits_system_to_json(sys: *const TitsChamberSystem, out: *mut *mut c_char) -> TitsStatus {
    guard(|| {
        let sys = system(sys)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = into_c_string(sys.to_json_string());
        Ok(())
    })
}

/// Number of chambers, 0 for a null handle.
///
/// # Safety
/// `sys` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn tits_system_chamber_count(sys: *const TitsChamberSystem) -> usize {
    sys.as_ref().map_or(0, |s| s.inner.len())
}

/// Rank, 0 for a null handle.
///
/// # Safety
/// `sys` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn tits_system_rank(sys: *const TitsChamberSystem) -> usize {
    sys.as_ref().map_or(0, |s| s.inner.rank())
}

/// Building check against the inferred type. `report` may be null.
///
/// # Safety
/// `sys` must be a live handle, `holds` a valid pointer, `report` null or
/// valid.
#[no_mangle]
pub unsafe extern "C" fn tits_is_building(
    sys: *const TitsChamberSystem,
    holds: *mut bool,
    report: *mut *mut c_char,
) -> TitsStatus {
    guard(|| {
        let sys = system(sys)?;
        let holds = holds.as_mut().ok_or_else(|| null("holds"))?;
        let r = core(is_building_inferred(sys))?;
        *holds = r.building;
        write_json(&r, report)
    })
}

/// Axiom (LL) for the point/line roles of a rank-3 linear diagram.
///
/// # Safety
/// As for [`tits_is_building`].
#[no_mangle]
pub unsafe extern "C" fn tits_check_ll(
    sys: *const TitsChamberSystem,
    holds: *mut bool,
    report: *mut *mut c_char,
) -> TitsStatus {
    guard(|| {
        let sys = system(sys)?;
        let holds = holds.as_mut().ok_or_else(|| null("holds"))?;
        let r = core(ll_verdict(sys))?;
        *holds = r.holds;
        write_json(&r, report)
    })
}

/// C3-geometry check.
///
/// # Safety
/// As for [`tits_is_building`].
#[no_mangle]
pub unsafe extern "C" fn tits_is_c3(
    sys: *const TitsChamberSystem,
    holds: *mut bool,
    report: *mut *mut c_char,
) -> TitsStatus {
    guard(|| {
        let sys = system(sys)?;
        let holds = holds.as_mut().ok_or_else(|| null("holds"))?;
        let r = core(is_c3_geometry(sys))?;
        *holds = r.c3;
        write_json(&r, report)
    })
}

/// Universal 2-cover glued from `base_chamber`. `cover` receives the cover
/// system and may be null; `report` receives the chamber count, fiber size,
/// deck order, regularity, truncation flag and covering map.
///
/// # Safety
/// `sys` must be a live handle; `cover` and `report` null or valid.
#[no_mangle]
pub unsafe extern "C" fn tits_universal_cover(
    sys: *const TitsChamberSystem,
    base_chamber: usize,
    max_chambers: usize,
    cover: *mut *mut TitsChamberSystem,
    report: *mut *mut c_char,
) -> TitsStatus {
    guard(|| {
        let sys = system(sys)?;
        let r = core(universal_cover(sys, base_chamber, max_chambers))?;
        let summary = serde_json::json!({
            "chambers": r.covering.cover.len(),
            "fiber_size": r.fiber_size(),
            "deck_order": r.deck.len(),
            "regular": r.regular,
            "truncated": r.truncated,
            "map": r.covering.map,
        });
        write_json(&summary, report)?;
        if !cover.is_null() {
            *cover = into_handle(r.covering.cover);
        }
        Ok(())
    })
}

/// Order of the Coxeter group of a row-major `rank × rank` matrix, `0`
/// encoding an infinite bond. Orders beyond `u64` report `BudgetExceeded`.
///
/// # Safety
/// `matrix` must point to `rank * rank` entries and `order` be valid.
#[no_mangle]
pub unsafe extern "C" fn tits_coxeter_order(matrix: *const u32, rank: usize, order: *mut u64) -> TitsStatus {
    guard(|| {
        if matrix.is_null() {
            return Err(null("matrix"));
        }
        let order = order.as_mut().ok_or_else(|| null("order"))?;
        let len = rank.checked_mul(rank).ok_or_else(|| (TitsStatus::InvalidInput, "rank too large".to_string()))?;
        let entries = std::slice::from_raw_parts(matrix, len);
        let rows: Vec<Vec<u32>> = entries.chunks(rank.max(1)).map(<[u32]>::to_vec).collect();
        let m = core(CoxeterMatrix::from_rows(&rows))?;
        let n = m.order_by_type().ok_or_else(|| (TitsStatus::InfiniteGroup, Error::InfiniteGroup.to_string()))?;
        *order = u64::try_from(n).map_err(|_| (TitsStatus::BudgetExceeded, format!("order {n} exceeds u64")))?;
        Ok(())
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `sys` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tits_system_free(sys: *mut TitsChamberSystem) {
    if !sys.is_null() {
        drop(Box::from_raw(sys));
    }
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tits_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
