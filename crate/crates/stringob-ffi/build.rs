fn main() {
    let crate_dir = std::env::var("CARGO_MANIFEST_DIR").expect("manifest dir");
    let out = std::path::Path::new(&crate_dir).join("include").join("stringob.h");
    std::fs::create_dir_all(out.parent().unwrap()).expect("include dir");
    cbindgen::generate(&crate_dir)
        .expect("cbindgen generation")
        .write_to_file(&out);
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");
}
