use std::ffi::{CStr, CString};
use std::ptr;

use trianguloid_ffi::*;

const K23: &str = r#"{"m":2,"n":3,"neighborhoods":[[1,2],[1,2],[1,2]]}"#;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(tg_last_error()) }
        .to_string_lossy()
        .into_owned()
}

fn graph(json: &str) -> *mut TgGraph {
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { tg_graph_from_json(c(json).as_ptr(), &mut g) },
        TgStatus::Ok
    );
    g
}

#[test]
fn lattice_counts_and_enumeration() {
    let g = graph(K23);
    let mut n = 0usize;
    unsafe {
        assert_eq!(
            tg_graph_lattice_point_count(g, TgPolytope::Pg, &mut n),
            TgStatus::Ok
        );
        assert_eq!(n, 4);
        assert_eq!(
            tg_graph_lattice_point_count(g, TgPolytope::PgMinus, &mut n),
            TgStatus::Ok
        );
        assert_eq!(n, 3);
        assert_eq!(
            tg_enumerate_count(g, TgMethod::Trees, 0, 2, &mut n),
            TgStatus::Ok
        );
        assert_eq!(n, 6);
        assert_eq!(
            tg_enumerate_count(g, TgMethod::Axioms, 0, 1, &mut n),
            TgStatus::Ok
        );
        assert_eq!(n, 6);
        assert_eq!(
            tg_enumerate_count(g, TgMethod::Axioms, 5, 1, &mut n),
            TgStatus::LimitExceeded
        );
        assert!(last_error().contains('5'));
        tg_graph_free(g);
    }
}

#[test]
fn compatibility() {
    let g = graph(K23);
    let mut ok = false;
    let a = c(r#"{"edges":[[1,1],[1,2],[2,2],[2,3]]}"#);
    let b = c(r#"{"edges":[[1,1],[2,1],[2,2],[2,3]]}"#);
    let crossing = c(r#"{"edges":[[1,2],[2,1]]}"#);
    let other = c(r#"{"edges":[[1,1],[2,2]]}"#);
    unsafe {
        assert_eq!(
            tg_forests_compatible(g, a.as_ptr(), b.as_ptr(), &mut ok),
            TgStatus::Ok
        );
        assert!(ok);
        assert_eq!(
            tg_forests_compatible(g, crossing.as_ptr(), other.as_ptr(), &mut ok),
            TgStatus::Ok
        );
        assert!(!ok);
        let cycle = c(r#"{"edges":[[1,1],[1,2],[2,1],[2,2]]}"#);
        assert_eq!(
            tg_forests_compatible(g, cycle.as_ptr(), b.as_ptr(), &mut ok),
            TgStatus::InvalidArgument
        );
        tg_graph_free(g);
    }
}

#[test]
fn triangulation_round_trip() {
    let text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../core/tests/data/k34_triangulation.json"
    ))
    .unwrap();
    unsafe {
        let mut tau = ptr::null_mut();
        assert_eq!(
            tg_triangulation_from_json(c(&text).as_ptr(), &mut tau),
            TgStatus::Ok
        );
        let mut len = 0;
        assert_eq!(tg_triangulation_len(tau, &mut len), TgStatus::Ok);
        assert_eq!(len, 10);
        let mut t = ptr::null_mut();
        assert_eq!(tg_trianguloid_from_triangulation(tau, &mut t), TgStatus::Ok);
        let mut is_t = false;
        let mut report = ptr::null_mut();
        assert_eq!(
            tg_trianguloid_check(t, &mut is_t, &mut report),
            TgStatus::Ok
        );
        assert!(is_t);
        assert!(CStr::from_ptr(report)
            .to_str()
            .unwrap()
            .contains("\"is_trianguloid\":true"));
        tg_string_free(report);
        let mut svg = ptr::null_mut();
        assert_eq!(tg_trianguloid_render_svg(t, &mut svg), TgStatus::Ok);
        assert!(CStr::from_ptr(svg).to_str().unwrap().starts_with("<svg"));
        tg_string_free(svg);
        let mut back = ptr::null_mut();
        assert_eq!(tg_trianguloid_to_triangulation(t, &mut back), TgStatus::Ok);
        let (mut j1, mut j2) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(tg_triangulation_to_json(tau, &mut j1), TgStatus::Ok);
        assert_eq!(tg_triangulation_to_json(back, &mut j2), TgStatus::Ok);
        assert_eq!(CStr::from_ptr(j1), CStr::from_ptr(j2));
        tg_string_free(j1);
        tg_string_free(j2);
        tg_triangulation_free(back);
        tg_trianguloid_free(t);
        tg_triangulation_free(tau);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(
            tg_graph_from_json(ptr::null(), &mut g),
            TgStatus::NullPointer
        );
        assert_eq!(
            tg_graph_from_json(c("{").as_ptr(), &mut g),
            TgStatus::ParseError
        );
        assert!(!last_error().is_empty());
        assert_eq!(
            tg_graph_from_json(c(K23).as_ptr(), ptr::null_mut()),
            TgStatus::NullPointer
        );
        let bad = [0xffu8, 0];
        assert_eq!(
            tg_graph_from_json(bad.as_ptr().cast(), &mut g),
            TgStatus::InvalidUtf8
        );
        let mut n = 0;
        assert_eq!(
            tg_graph_lattice_point_count(ptr::null(), TgPolytope::Pg, &mut n),
            TgStatus::NullPointer
        );
        let pre = std::fs::read_to_string(concat!(
            env!("CARGO_MANIFEST_DIR"),
            "/../core/tests/data/k32_pretrianguloid.json"
        ))
        .unwrap();
        let mut t = ptr::null_mut();
        assert_eq!(
            tg_trianguloid_from_json(c(&pre).as_ptr(), &mut t),
            TgStatus::Ok
        );
        let mut is_t = true;
        assert_eq!(
            tg_trianguloid_check(t, &mut is_t, ptr::null_mut()),
            TgStatus::Ok
        );
        assert!(!is_t);
        let mut tau = ptr::null_mut();
        assert_eq!(
            tg_trianguloid_to_triangulation(t, &mut tau),
            TgStatus::Invalid
        );
        assert!(tau.is_null());
        tg_trianguloid_free(t);
        tg_string_free(ptr::null_mut());
        tg_graph_free(ptr::null_mut());
    }
}
