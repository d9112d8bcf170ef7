use std::path::PathBuf;

use leibniz_core::catalog::fixtures;
use leibniz_core::io::parse_input;

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

#[test]
fn files_match_catalog() {
    for f in fixtures() {
        let path = dir().join(f.file_name());
        let text = std::fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("{}: {e}; run `cargo run -p leibniz-core --example write_fixtures`", path.display()));
        assert_eq!(text, f.to_json(), "{} is stale", path.display());
        assert_eq!(parse_input(&text).unwrap(), f.input, "{}", f.name);
    }
}

#[test]
fn no_stray_files() {
    let names: Vec<String> = fixtures().iter().map(|f| f.file_name()).collect();
    for entry in std::fs::read_dir(dir()).unwrap() {
        let name = entry.unwrap().file_name().into_string().unwrap();
        assert!(names.contains(&name), "unexpected fixture {name}");
    }
}
