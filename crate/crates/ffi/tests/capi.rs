use std::ffi::{c_char, c_int, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use repdesc_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { repdesc_string_free(s) };
    out
}

fn last_error() -> String {
    take(repdesc_last_error())
}

#[test]
fn devissage_round_trip_through_handles() {
    let name = CString::new("S3").unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { repdesc_group_named(name.as_ptr(), &mut g) }, RepdescStatus::Ok);
    assert_eq!(unsafe { repdesc_group_order(g) }, 6);

    let mut rho = ptr::null_mut();
    assert_eq!(unsafe { repdesc_rep_irreducible(g, 2, &mut rho) }, RepdescStatus::Ok);
    assert_eq!(unsafe { repdesc_rep_rank(rho) }, 2);

    let a3 = CString::new(r#"{"generators": [[1, 2, 0]]}"#).unwrap();
    let mut n = ptr::null_mut();
    assert_eq!(unsafe { repdesc_subgroup_from_json(g, a3.as_ptr(), &mut n) }, RepdescStatus::Ok);
    assert_eq!(unsafe { repdesc_subgroup_order(n) }, 3);

    let mut cert = ptr::null_mut();
    assert_eq!(unsafe { repdesc_devissage(rho, n, &mut cert) }, RepdescStatus::Ok);
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { repdesc_certificate_to_json(cert, &mut json) }, RepdescStatus::Ok);
    let text = CString::new(take(json)).unwrap();

    let mut again = ptr::null_mut();
    assert_eq!(unsafe { repdesc_certificate_from_json(text.as_ptr(), &mut again) }, RepdescStatus::Ok);
    let mut ok = false;
    let mut report = ptr::null_mut();
    assert_eq!(unsafe { repdesc_certificate_verify(again, &mut ok, &mut report) }, RepdescStatus::Ok);
    assert!(ok, "{}", take(report));

    let mut passed = false;
    let mut hr = ptr::null_mut();
    assert_eq!(unsafe { repdesc_harness(rho, n, 2, 3, 0, &mut passed, &mut hr) }, RepdescStatus::Ok);
    assert!(passed);
    assert!(take(hr).contains("\"complete\""));

    unsafe {
        repdesc_certificate_free(cert);
        repdesc_certificate_free(again);
        repdesc_subgroup_free(n);
        repdesc_rep_free(rho);
        repdesc_group_free(g);
    }
}

#[test]
fn errors_are_reported_by_code_and_message() {
    let mut g = ptr::null_mut();
    let bad = CString::new("{\"degree\": 3").unwrap();
    assert_eq!(unsafe { repdesc_group_from_json(bad.as_ptr(), 0, &mut g) }, RepdescStatus::InvalidInput);
    assert!(last_error().contains("malformed JSON"));
    assert!(g.is_null());

    assert_eq!(unsafe { repdesc_group_from_json(ptr::null(), 0, &mut g) }, RepdescStatus::NullArgument);

    let s4 = CString::new(r#"{"degree": 4, "generators": [[1, 2, 3, 0], [1, 0, 2, 3]]}"#).unwrap();
    assert_eq!(unsafe { repdesc_group_from_json(s4.as_ptr(), 10, &mut g) }, RepdescStatus::InvalidInput);

    let name = CString::new("S3").unwrap();
    assert_eq!(unsafe { repdesc_group_named(name.as_ptr(), &mut g) }, RepdescStatus::Ok);
    let perm = CString::new(
        r#"{"rank": 3, "images": {"0": [[0,0,1],[1,0,0],[0,1,0]], "1": [[0,1,0],[1,0,0],[0,0,1]]}}"#,
    )
    .unwrap();
    let mut rho = ptr::null_mut();
    assert_eq!(unsafe { repdesc_rep_from_json(g, perm.as_ptr(), &mut rho) }, RepdescStatus::Ok);
    let triv = CString::new(r#"{"generators": []}"#).unwrap();
    let mut n = ptr::null_mut();
    assert_eq!(unsafe { repdesc_subgroup_from_json(g, triv.as_ptr(), &mut n) }, RepdescStatus::Ok);
    let mut cert = ptr::null_mut();
    assert_eq!(unsafe { repdesc_devissage(rho, n, &mut cert) }, RepdescStatus::MathFailure);
    assert!(cert.is_null());
    unsafe {
        repdesc_subgroup_free(n);
        repdesc_rep_free(rho);
        repdesc_group_free(g);
    }
}

#[test]
fn command_line_entry_point() {
    let args: Vec<CString> = ["repdesc", "chartable", "--group", "S3", "--summary"]
        .iter()
        .map(|s| CString::new(*s).unwrap())
        .collect();
    let ptrs: Vec<*const c_char> = args.iter().map(|a| a.as_ptr()).collect();
    let mut code: c_int = -1;
    let mut out = ptr::null_mut();
    let status = unsafe { repdesc_cli_run(ptrs.len() as c_int, ptrs.as_ptr(), &mut code, &mut out) };
    assert_eq!(status, RepdescStatus::Ok);
    assert_eq!(code, 0);
    assert_eq!(take(out), "chartable: 3 classes\n");

    let bad: Vec<CString> = ["repdesc", "nonsense"].iter().map(|s| CString::new(*s).unwrap()).collect();
    let ptrs: Vec<*const c_char> = bad.iter().map(|a| a.as_ptr()).collect();
    let mut out = ptr::null_mut();
    unsafe { repdesc_cli_run(ptrs.len() as c_int, ptrs.as_ptr(), &mut code, &mut out) };
    assert_eq!(code, 2);
    take(out);
}

#[test]
fn generated_header_compiles_as_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/repdesc.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for sym in ["repdesc_group_from_json", "repdesc_devissage", "repdesc_harness", "repdesc_string_free", "REPDESC_STATUS_OK"] {
        assert!(text.contains(sym), "{sym} missing from the header");
    }
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("probe.c");
    std::fs::write(
        &src,
        format!(
            "#include \"{}\"\nint main(void) {{ RepdescGroup *g = 0; return repdesc_group_named(\"S3\", &g) == REPDESC_STATUS_OK ? 0 : 1; }}\n",
            header.display()
        ),
    )
    .unwrap();
    let Ok(status) = Command::new("cc").args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only"]).arg(&src).status() else {
        eprintln!("no C compiler available; skipping the syntax check");
        return;
    };
    assert!(status.success());
}
