//! Regenerate `fixtures/*.json` from the catalog.

use std::path::PathBuf;

fn main() -> std::io::Result<()> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    std::fs::create_dir_all(&dir)?;
    for f in leibniz_core::catalog::fixtures() {
        std::fs::write(dir.join(f.file_name()), f.to_json())?;
    }
    Ok(())
}
