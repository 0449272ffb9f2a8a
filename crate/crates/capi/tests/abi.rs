//! Exercises the C ABI from Rust: handle lifecycle, status codes, and
//! output ownership.

use std::ffi::{CStr, CString};
use std::ptr;

use ramsey_capi::*;

#[test]
fn generate_check_roundtrip_over_the_abi() {
    unsafe {
        let mut inst: *mut RwInstance = ptr::null_mut();
        let status = rw_instance_generate(7, 3, ptr::null(), 0, &mut inst);
        assert_eq!(status, RwStatus::Ok);
        assert!(!inst.is_null());

        // the four-part generator has no monochromatic six-cycle
        let mut found: i32 = -1;
        assert_eq!(
            rw_instance_check(inst, RwTarget::Cycle, 6, &mut found),
            RwStatus::Ok
        );
        assert_eq!(found, 0);
        assert_eq!(
            rw_instance_check(inst, RwTarget::CycleAtLeast, 6, &mut found),
            RwStatus::Ok
        );
        assert_eq!(found, 1);

        // serialize, reparse, equal behavior
        let mut json: *mut std::ffi::c_char = ptr::null_mut();
        assert_eq!(rw_instance_to_json(inst, &mut json), RwStatus::Ok);
        let text = CStr::from_ptr(json).to_str().unwrap().to_owned();
        assert!(text.contains("\"format\": 1"));

        let c_text = CString::new(text).unwrap();
        let mut again: *mut RwInstance = ptr::null_mut();
        assert_eq!(
            rw_instance_parse(c_text.as_ptr(), &mut again),
            RwStatus::Ok
        );
        let mut found2: i32 = -1;
        assert_eq!(
            rw_instance_check(again, RwTarget::Cycle, 6, &mut found2),
            RwStatus::Ok
        );
        assert_eq!(found2, 0);

        let mut total = 0usize;
        let mut invalid = 0usize;
        assert_eq!(
            rw_instance_certify(again, &mut total, &mut invalid),
            RwStatus::Ok
        );
        assert_eq!((total, invalid), (1, 0));

        rw_string_free(json);
        rw_instance_free(inst);
        rw_instance_free(again);
    }
}

#[test]
fn status_codes_for_bad_input() {
    unsafe {
        let mut inst: *mut RwInstance = ptr::null_mut();
        assert_eq!(
            rw_instance_parse(ptr::null(), &mut inst),
            RwStatus::NullArg
        );

        let garbage = CString::new("{not json").unwrap();
        assert_eq!(
            rw_instance_parse(garbage.as_ptr(), &mut inst),
            RwStatus::Parse
        );

        // generator 9 does not exist
        assert_eq!(
            rw_instance_generate(9, 3, ptr::null(), 0, &mut inst),
            RwStatus::Construct
        );

        // host too large for enumeration masks
        let parts = [5usize, 5, 5, 5];
        let mut colorings = 0u64;
        let mut failures = 0u64;
        assert_eq!(
            rw_verify(
                parts.as_ptr(),
                parts.len(),
                RwTarget::Path,
                4,
                1,
                &mut colorings,
                &mut failures
            ),
            RwStatus::CapExceeded
        );
    }
}

#[test]
fn dot_and_conditions_over_the_abi() {
    unsafe {
        let mut inst: *mut RwInstance = ptr::null_mut();
        let parts = [4usize, 4];
        assert_eq!(
            rw_instance_generate(6, 2, ptr::null(), 0, &mut inst),
            RwStatus::Ok
        );
        let mut dot: *mut std::ffi::c_char = ptr::null_mut();
        assert_eq!(rw_instance_to_dot(inst, &mut dot), RwStatus::Ok);
        let text = CStr::from_ptr(dot).to_str().unwrap();
        assert!(text.starts_with("graph coloring {"));
        rw_string_free(dot);
        rw_instance_free(inst);

        let mut flags = [9u8; 7];
        assert_eq!(
            rw_conditions(2, parts.as_ptr(), parts.len(), flags.as_mut_ptr()),
            RwStatus::Ok
        );
        // K_{4,4} at n=2: only the third-part condition fails
        assert_eq!(flags, [1, 1, 1, 1, 1, 0, 1]);

        assert_eq!(
            rw_conditions(0, parts.as_ptr(), parts.len(), flags.as_mut_ptr()),
            RwStatus::BadArg
        );
    }
}

#[test]
fn verify_counts_over_the_abi() {
    unsafe {
        let parts = [3usize, 3];
        let mut colorings = 0u64;
        let mut failures = 0u64;
        assert_eq!(
            rw_verify(
                parts.as_ptr(),
                parts.len(),
                RwTarget::Path,
                4,
                2,
                &mut colorings,
                &mut failures
            ),
            RwStatus::Ok
        );
        assert_eq!((colorings, failures), (512, 0));

        // the host graph itself always has long paths
        let mut inst: *mut RwInstance = ptr::null_mut();
        assert_eq!(
            rw_instance_generate(6, 2, ptr::null(), 0, &mut inst),
            RwStatus::Ok
        );
        let mut found = 0;
        assert_eq!(
            rw_instance_host_check(inst, RwTarget::Path, 8, &mut found),
            RwStatus::Ok
        );
        assert_eq!(found, 1);
        rw_instance_free(inst);
    }
}
