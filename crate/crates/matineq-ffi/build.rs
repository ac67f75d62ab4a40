fn main() {
    let crate_dir = std::env::var("CARGO_MANIFEST_DIR").unwrap();

    let bindings = cbindgen::Builder::new()
        .with_crate(&crate_dir)
        .with_language(cbindgen::Language::C)
        .with_include_guard("MATINEQ_H")
        .with_no_includes()
        .with_sys_include("stdint.h")
        .with_sys_include("stddef.h")
        .generate();

    match bindings {
        Ok(b) => {
            b.write_to_file(format!("{crate_dir}/include/matineq.h"));
        }
        Err(e) => {
            // Header generation failures must not break `cargo build` for
            // consumers without cbindgen support; surface them as warnings.
            println!("cargo:warning=cbindgen failed: {e}");
        }
    }
    println!("cargo:rerun-if-changed=src/lib.rs");
}
