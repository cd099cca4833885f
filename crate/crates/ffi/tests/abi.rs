use std::ffi::{CStr, CString};
use std::ptr;

use tits_ffi::*;

fn take_string(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { tits_string_free(s) };
    out
}

fn last_error() -> String {
    let p = tits_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

fn build(name: &str) -> *mut TitsChamberSystem {
    let name = CString::new(name).unwrap();
    let mut sys = ptr::null_mut();
    assert_eq!(unsafe { tits_catalog_build(name.as_ptr(), &mut sys) }, TitsStatus::Ok);
    sys
}

#[test]
fn catalog_round_trip_through_json() {
    let sys = build("fano-flags");
    unsafe {
        assert_eq!(tits_system_chamber_count(sys), 21);
        assert_eq!(tits_system_rank(sys), 2);
        let mut json = ptr::null_mut();
        assert_eq!(tits_system_to_json(sys, &mut json), TitsStatus::Ok);
        let text = CString::new(take_string(json)).unwrap();
        let mut back = ptr::null_mut();
        assert_eq!(tits_system_from_json(text.as_ptr(), &mut back), TitsStatus::Ok);
        assert_eq!(tits_system_chamber_count(back), 21);
        tits_system_free(back);
        tits_system_free(sys);
    }
}

#[test]
fn verdicts() {
    let n = build("neumaier-a7");
    unsafe {
        let mut holds = true;
        let mut report = ptr::null_mut();
        assert_eq!(tits_check_ll(n, &mut holds, &mut report), TitsStatus::Ok);
        assert!(!holds);
        assert!(take_string(report).contains("L013"));
        assert_eq!(tits_is_c3(n, &mut holds, ptr::null_mut()), TitsStatus::Ok);
        assert!(holds);
        assert_eq!(tits_is_building(n, &mut holds, ptr::null_mut()), TitsStatus::Ok);
        assert!(!holds);
        tits_system_free(n);
    }
}

#[test]
fn cover_of_a_quotient() {
    let q = build("singer5-quotient");
    unsafe {
        let mut cover = ptr::null_mut();
        let mut report = ptr::null_mut();
        assert_eq!(tits_universal_cover(q, 0, 10_000, &mut cover, &mut report), TitsStatus::Ok);
        let r: serde_json::Value = serde_json::from_str(&take_string(report)).unwrap();
        assert_eq!(r["chambers"], 315);
        assert_eq!(r["deck_order"], 5);
        assert_eq!(tits_system_chamber_count(cover), 315);
        tits_system_free(cover);
        tits_system_free(q);
    }
}

#[test]
fn coxeter_orders() {
    let a3 = [1u32, 3, 2, 3, 1, 3, 2, 3, 1];
    let mut order = 0u64;
    assert_eq!(unsafe { tits_coxeter_order(a3.as_ptr(), 3, &mut order) }, TitsStatus::Ok);
    assert_eq!(order, 24);
    let affine = [1u32, 3, 3, 3, 1, 3, 3, 3, 1];
    assert_eq!(unsafe { tits_coxeter_order(affine.as_ptr(), 3, &mut order) }, TitsStatus::InfiniteGroup);
    let bad = [1u32, 3, 2, 1];
    assert_eq!(unsafe { tits_coxeter_order(bad.as_ptr(), 2, &mut order) }, TitsStatus::InvalidInput);
    assert!(last_error().contains("symmetric"));
}

#[test]
fn errors_are_codes() {
    let mut sys = ptr::null_mut();
    let name = CString::new("no-such-entry").unwrap();
    unsafe {
        assert_eq!(tits_catalog_build(name.as_ptr(), &mut sys), TitsStatus::NotFound);
        assert!(last_error().contains("no-such-entry"));
        assert_eq!(tits_catalog_build(ptr::null(), &mut sys), TitsStatus::NullPointer);
        let junk = CString::new("{\"rank\": 1}").unwrap();
        assert_eq!(tits_system_from_json(junk.as_ptr(), &mut sys), TitsStatus::InvalidInput);
        let mut holds = false;
        assert_eq!(tits_is_c3(ptr::null(), &mut holds, ptr::null_mut()), TitsStatus::NullPointer);
        let fano = build("fano-flags");
        assert_eq!(tits_is_c3(fano, &mut holds, ptr::null_mut()), TitsStatus::InvalidInput);
        let ok = tits_system_rank(fano);
        assert_eq!(ok, 2);
        assert!(tits_last_error().is_null() || !last_error().is_empty());
        tits_system_free(fano);
        tits_system_free(ptr::null_mut());
        tits_string_free(ptr::null_mut());
    }
    let v = unsafe { CStr::from_ptr(tits_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}
