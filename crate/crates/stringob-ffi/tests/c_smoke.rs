//! Compiles and runs a small C program against the generated header and
//! the static library, exercising the ABI the way a foreign binding would.

use std::path::PathBuf;
use std::process::Command;

const C_PROGRAM: &str = r#"
#include <assert.h>
#include <stdio.h>
#include <string.h>
#include "stringob.h"

int main(void) {
    SoGraph *g = NULL;
    assert(so_graph_generate("heawood", 0, 0, &g) == SO_OK);
    assert(so_graph_vertex_count(g) == 14);
    assert(so_graph_edge_count(g) == 21);

    SoReport *r = NULL;
    assert(so_obstruction(g, SO_PAIRS_S, SO_MODE_MOD2, &r) == SO_OK);
    assert(so_report_vanishes(r) == 0);

    char *json = NULL;
    assert(so_report_to_json(r, &json) == SO_OK);
    assert(strstr(json, "\"vanishes\":false") != NULL);
    so_string_free(json);
    so_report_free(r);
    so_graph_free(g);

    SoGraph *k5 = NULL;
    assert(so_graph_generate("complete", 5, 0, &k5) == SO_OK);
    SoReport *r2 = NULL;
    assert(so_obstruction(k5, SO_PAIRS_S, SO_MODE_MOD2, &r2) == SO_OK);
    assert(so_report_vanishes(r2) == 1);
    so_report_free(r2);
    so_graph_free(k5);

    printf("c smoke ok\n");
    return 0;
}
"#;

#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let include = manifest.join("include");
    let header = include.join("stringob.h");
    assert!(header.exists(), "cbindgen header missing at {header:?}");

    // The static library lands next to this test binary's deps directory.
    let test_exe = std::env::current_exe().expect("test exe path");
    let deps_dir = test_exe.parent().expect("deps dir");
    let lib_dir = deps_dir.parent().expect("profile dir");
    let static_lib = lib_dir.join("libstringob_ffi.a");
    assert!(static_lib.exists(), "static lib missing at {static_lib:?}");

    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".to_string());
    let tmp = std::env::temp_dir().join(format!("stringob_c_smoke_{}", std::process::id()));
    std::fs::create_dir_all(&tmp).unwrap();
    let src = tmp.join("smoke.c");
    let bin = tmp.join("smoke");
    std::fs::write(&src, C_PROGRAM).unwrap();

    let compile = Command::new(&cc)
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(static_lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&bin)
        .output()
        .expect("running the C compiler");
    assert!(
        compile.status.success(),
        "cc failed:\n{}",
        String::from_utf8_lossy(&compile.stderr)
    );

    let run = Command::new(&bin).output().expect("running the C program");
    assert!(
        run.status.success(),
        "smoke binary failed:\n{}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert!(String::from_utf8_lossy(&run.stdout).contains("c smoke ok"));

    let _ = std::fs::remove_dir_all(&tmp);
}
