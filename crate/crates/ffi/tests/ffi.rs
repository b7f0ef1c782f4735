use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use uncluttered_ffi::*;

fn take(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { unc_string_free(s) };
    out
}

fn last_error() -> Option<String> {
    let p = unc_last_error_message();
    (!p.is_null()).then(|| unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned())
}

fn parse(g6: &str) -> *mut UncGraph {
    let s = CString::new(g6).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { unc_graph_from_graph6(s.as_ptr(), &mut g) },
        UncErrorCode::Ok
    );
    g
}

#[test]
fn graph6_round_trip_and_counts() {
    let g = parse("Dhc");
    assert_eq!(unsafe { unc_graph_order(g) }, 5);
    assert_eq!(unsafe { unc_graph_edge_count(g) }, 5);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { unc_graph_to_graph6(g, &mut s) }, UncErrorCode::Ok);
    assert_eq!(take(s), "Dhc");
    unsafe { unc_graph_free(g) };
}

#[test]
fn edges_and_incremental_build_agree() {
    let flat = [0usize, 1, 1, 2, 2, 3, 3, 4, 4, 0];
    let mut a = ptr::null_mut();
    assert_eq!(
        unsafe { unc_graph_from_edges(5, flat.as_ptr(), 5, &mut a) },
        UncErrorCode::Ok
    );
    let mut b = ptr::null_mut();
    assert_eq!(unsafe { unc_graph_new(5, &mut b) }, UncErrorCode::Ok);
    for e in flat.chunks(2) {
        assert_eq!(
            unsafe { unc_graph_add_edge(b, e[0], e[1]) },
            UncErrorCode::Ok
        );
    }
    let (mut sa, mut sb) = (ptr::null_mut(), ptr::null_mut());
    unsafe {
        unc_graph_to_graph6(a, &mut sa);
        unc_graph_to_graph6(b, &mut sb);
    }
    assert_eq!(take(sa), take(sb));
    unsafe {
        unc_graph_free(a);
        unc_graph_free(b);
    }
}

#[test]
fn errors_carry_codes_and_messages() {
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { unc_graph_new(65, &mut g) }, UncErrorCode::TooLarge);
    assert!(g.is_null());
    assert!(last_error().unwrap().contains("64"));

    let bad = CString::new("D~").unwrap();
    assert_eq!(
        unsafe { unc_graph_from_graph6(bad.as_ptr(), &mut g) },
        UncErrorCode::InvalidInput
    );
    assert!(last_error().unwrap().contains("graph6"));

    assert_eq!(
        unsafe { unc_graph_from_graph6(ptr::null(), &mut g) },
        UncErrorCode::NullPointer
    );
    let loops = [1usize, 1];
    assert_eq!(
        unsafe { unc_graph_from_edges(3, loops.as_ptr(), 1, &mut g) },
        UncErrorCode::InvalidInput
    );

    let h = parse("Dhc");
    assert_eq!(
        unsafe { unc_graph_add_edge(h, 0, 9) },
        UncErrorCode::InvalidInput
    );
    let mut x = 0usize;
    assert_eq!(unsafe { unc_clique_number(h, &mut x) }, UncErrorCode::Ok);
    assert!(last_error().is_none(), "success clears the message");
    assert_eq!(
        unsafe { unc_clique_number(h, ptr::null_mut()) },
        UncErrorCode::NullPointer
    );
    assert_eq!(
        unsafe { unc_clique_number(ptr::null(), &mut x) },
        UncErrorCode::NullPointer
    );
    unsafe {
        unc_graph_free(h);
        unc_graph_free(ptr::null_mut());
        unc_string_free(ptr::null_mut());
    }
}

#[test]
fn classify_and_decompose_json() {
    let g = parse("Dhc");
    let mut yes = false;
    assert_eq!(unsafe { unc_is_uncluttered(g, &mut yes) }, UncErrorCode::Ok);
    assert!(yes);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { unc_classify_json(g, &mut s) }, UncErrorCode::Ok);
    let cert = take(s);
    assert!(cert.starts_with("{\"case\":"), "{cert}");
    assert_eq!(
        unsafe { unc_decompose_json(g, 0, &mut s) },
        UncErrorCode::Ok
    );
    assert!(take(s).contains("\"children\""));
    unsafe { unc_graph_free(g) };

    // fork: P4 0-1-2-3 plus 4 adjacent to 1
    let fork = [0usize, 1, 1, 2, 2, 3, 1, 4];
    let mut f = ptr::null_mut();
    unsafe { unc_graph_from_edges(5, fork.as_ptr(), 4, &mut f) };
    assert_eq!(unsafe { unc_is_uncluttered(f, &mut yes) }, UncErrorCode::Ok);
    assert!(!yes);
    assert_eq!(unsafe { unc_classify_json(f, &mut s) }, UncErrorCode::Ok);
    assert!(take(s).contains("NOT_UNCLUTTERED"));
    assert_eq!(
        unsafe { unc_decompose_json(f, 0, &mut s) },
        UncErrorCode::NotUncluttered
    );
    assert!(last_error().unwrap().contains("fork"));
    unsafe { unc_graph_free(f) };
}

#[test]
fn coloring_buffer() {
    let g = parse("Dhc");
    let mut colors = [usize::MAX; 5];
    let (mut k, mut omega) = (0, 0);
    assert_eq!(
        unsafe { unc_color(g, colors.as_mut_ptr(), 4, &mut k, &mut omega) },
        UncErrorCode::BufferTooSmall
    );
    assert_eq!(
        unsafe { unc_color(g, colors.as_mut_ptr(), 5, &mut k, &mut omega) },
        UncErrorCode::Ok
    );
    assert_eq!(omega, 2);
    assert!(k <= 2 * omega);
    for i in 0..5 {
        assert_ne!(colors[i], colors[(i + 1) % 5]);
        assert!(colors[i] < k);
    }
    let mut chi = 0;
    assert_eq!(
        unsafe { unc_chromatic_number(g, &mut chi) },
        UncErrorCode::Ok
    );
    assert_eq!(chi, 3);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { unc_color_json(g, &mut s) }, UncErrorCode::Ok);
    assert!(take(s).contains("\"num_colors\""));
    unsafe { unc_graph_free(g) };

    let mut e = ptr::null_mut();
    assert_eq!(unsafe { unc_graph_new(0, &mut e) }, UncErrorCode::Ok);
    assert_eq!(
        unsafe { unc_color(e, ptr::null_mut(), 0, ptr::null_mut(), ptr::null_mut()) },
        UncErrorCode::Ok
    );
    unsafe { unc_graph_free(e) };
}

#[test]
fn version_matches_manifest() {
    let v = unsafe { CStr::from_ptr(unc_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn errors_are_thread_local() {
    let mut g = ptr::null_mut();
    unsafe { unc_graph_new(100, &mut g) };
    std::thread::spawn(|| assert!(last_error().is_none()))
        .join()
        .unwrap();
    assert!(last_error().is_some());
}

#[test]
fn header_declares_every_export() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(dir.join("include/uncluttered.h")).unwrap();
    let src = std::fs::read_to_string(dir.join("src/lib.rs")).unwrap();
    let exported: Vec<&str> = src
        .split("extern \"C\" fn ")
        .skip(1)
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exported.len() >= 15);
    for name in exported {
        assert!(
            header.contains(&format!("{name}(")),
            "{name} missing from header"
        );
    }
    assert!(header.contains("typedef struct UncGraph UncGraph;"));
}

/// Compiles and runs the C demo against the static library when a C compiler is around.
#[test]
fn c_demo_links_and_runs() {
    let Ok(exe) = std::env::current_exe() else {
        return;
    };
    let deps = exe.parent().unwrap();
    let lib = deps.parent().unwrap().join("libuncluttered_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no static library or C compiler");
        return;
    }
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let out = std::env::temp_dir().join(format!("unc_demo_{}", std::process::id()));
    let status = Command::new("cc")
        .arg(dir.join("examples/demo.c"))
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let run = Command::new(&out).arg("Dhc").output().unwrap();
    let _ = std::fs::remove_file(&out);
    assert!(run.status.success());
    let text = String::from_utf8(run.stdout).unwrap();
    assert!(text.contains("\"case\""), "{text}");
    assert!(text.contains("colours, omega 2"), "{text}");
}
