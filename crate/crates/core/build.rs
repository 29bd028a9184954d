fn main() {
    let dir = std::path::Path::new("grammars/toy/src");
    cc::Build::new()
        .include(dir)
        .file(dir.join("parser.c"))
        .warnings(false)
        .compile("tree-sitter-toy");
    println!("cargo:rerun-if-changed=grammars/toy/src/parser.c");
}
