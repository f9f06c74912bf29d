use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use relpk_ffi::*;

fn fixture(name: &str) -> CString {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures").join(name);
    CString::new(std::fs::read_to_string(p).unwrap()).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let owned = CStr::from_ptr(s).to_str().unwrap().to_owned();
    relpk_string_free(s);
    owned
}

unsafe fn last_error() -> String {
    let p = relpk_last_error_message();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_str().unwrap().to_owned()
}

#[test]
fn context_size_and_relate() {
    unsafe {
        let mut ctx = ptr::null_mut();
        assert_eq!(relpk_context_new(c"st".as_ptr(), &mut ctx), RelpkStatus::Ok);
        let mut n = 0;
        assert_eq!(relpk_context_size(ctx, &mut n), RelpkStatus::Ok);
        assert_eq!(n, 8);
        let mut words = ptr::null_mut();
        assert_eq!(relpk_context_relate(ctx, c"AM".as_ptr(), c"F#M".as_ptr(), &mut words), RelpkStatus::Ok);
        assert_eq!(take(words), "ST, ST^2");
        assert!(relpk_last_error_message().is_null());
        relpk_context_free(ctx);
    }
}

#[test]
fn errors_carry_status_and_message() {
    unsafe {
        let mut ctx = ptr::null_mut();
        assert_eq!(relpk_context_new(c"xyz".as_ptr(), &mut ctx), RelpkStatus::Parse);
        assert!(ctx.is_null());
        assert!(last_error().contains("xyz"));

        assert_eq!(relpk_context_new(ptr::null(), &mut ctx), RelpkStatus::NullPointer);
        assert_eq!(relpk_context_size(ptr::null(), &mut 0), RelpkStatus::NullPointer);

        let bad = [0xffu8, 0];
        assert_eq!(relpk_context_new(bad.as_ptr().cast(), &mut ctx), RelpkStatus::InvalidUtf8);

        relpk_context_new(c"upl".as_ptr(), &mut ctx);
        let mut words = ptr::null_mut();
        assert_eq!(relpk_context_relate(ctx, c"HM".as_ptr(), c"CM".as_ptr(), &mut words), RelpkStatus::Parse);
        assert!(words.is_null());
        relpk_context_free(ctx);
    }
}

#[test]
fn net_round_trip_and_verify() {
    unsafe {
        let mut net = ptr::null_mut();
        assert_eq!(relpk_net_from_json(fixture("seventh_net.json").as_ptr(), &mut net), RelpkStatus::Ok);
        let (mut passed, mut report) = (false, ptr::null_mut());
        assert_eq!(relpk_net_verify(net, &mut passed, &mut report), RelpkStatus::Ok);
        assert!(passed);
        let report: serde_json::Value = serde_json::from_str(&take(report)).unwrap();
        assert!(report["checks"].as_array().is_some_and(|c| !c.is_empty()));

        let mut json = ptr::null_mut();
        assert_eq!(relpk_net_to_json(net, &mut json), RelpkStatus::Ok);
        let first = take(json);
        let mut again = ptr::null_mut();
        assert_eq!(relpk_net_from_json(CString::new(first.clone()).unwrap().as_ptr(), &mut again), RelpkStatus::Ok);
        let mut json = ptr::null_mut();
        relpk_net_to_json(again, &mut json);
        assert_eq!(take(json), first);
        relpk_net_free(again);

        let mut passed = false;
        assert_eq!(relpk_net_verify(net, &mut passed, ptr::null_mut()), RelpkStatus::Ok);
        relpk_net_free(net);
    }
}

#[test]
fn schema_errors_report_a_pointer() {
    unsafe {
        let mut net = ptr::null_mut();
        assert_eq!(relpk_net_from_json(fixture("bad_schema.json").as_ptr(), &mut net), RelpkStatus::Parse);
        assert!(net.is_null());
        assert!(last_error().contains("/phi/X1/0"));
    }
}

#[test]
fn homography_moves_the_muse_cell() {
    unsafe {
        let mut net = ptr::null_mut();
        assert_eq!(relpk_net_from_json(fixture("muse_cell.json").as_ptr(), &mut net), RelpkStatus::Ok);
        let mut image = ptr::null_mut();
        let hom = fixture("muse_homography.json");
        assert_eq!(relpk_net_apply_homography(net, hom.as_ptr(), &mut image), RelpkStatus::Ok);
        let mut json = ptr::null_mut();
        relpk_net_to_json(image, &mut json);
        let doc: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
        assert_eq!(doc["phi"]["X0"], serde_json::json!([["x0", "GM"]]));
        relpk_net_free(image);
        relpk_net_free(net);
    }
}

#[test]
fn analyze_progression() {
    unsafe {
        let mut json = ptr::null_mut();
        assert_eq!(relpk_analyze_json(fixture("muse_progression.json").as_ptr(), &mut json), RelpkStatus::Ok);
        let doc: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
        let golden: serde_json::Value = serde_json::from_str(
            &std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/golden/analyze_muse.json"))
                .unwrap(),
        )
        .unwrap();
        assert_eq!(doc, golden);
    }
}

#[test]
fn free_functions_accept_null() {
    unsafe {
        relpk_string_free(ptr::null_mut());
        relpk_context_free(ptr::null_mut());
        relpk_net_free(ptr::null_mut());
    }
}

#[test]
fn header_compiles_as_c() {
    let Ok(cc) = which_cc() else { return };
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let probe = std::env::temp_dir().join(format!("relpk_probe_{}.c", std::process::id()));
    std::fs::write(
        &probe,
        "#include \"relpk.h\"\nint main(void) { RelpkContext *c = 0; size_t n = 0;\n\
         return relpk_context_new(\"upl\", &c) == RELPK_STATUS_OK && relpk_context_size(c, &n) == RELPK_STATUS_OK ? 0 : 1; }\n",
    )
    .unwrap();
    let status = Command::new(cc)
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(dir.join("include"))
        .arg(&probe)
        .status()
        .unwrap();
    std::fs::remove_file(&probe).ok();
    assert!(status.success());
}

fn which_cc() -> Result<&'static str, ()> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| Command::new(c).arg("--version").output().is_ok_and(|o| o.status.success()))
        .ok_or(())
}
