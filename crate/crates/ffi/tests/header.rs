//! The committed header must stay valid C (and C++). Skips quietly when no
//! C compiler is on the PATH.

use std::path::Path;
use std::process::Command;

fn syntax_check(lang: &str, header: &Path) -> Option<bool> {
    let run = Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-x", lang])
        .arg(header)
        .output();
    match run {
        Ok(out) => {
            if !out.status.success() {
                eprintln!("{}", String::from_utf8_lossy(&out.stderr));
            }
            Some(out.status.success())
        }
        Err(_) => None, // no compiler available
    }
}

#[test]
fn header_is_valid_c_and_cpp() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/dioph.h");
    assert!(header.exists(), "include/dioph.h missing");
    for lang in ["c", "c++"] {
        match syntax_check(lang, &header) {
            Some(ok) => assert!(ok, "header failed -fsyntax-only as {lang}"),
            None => {
                eprintln!("skipping {lang} syntax check: cc not found");
                return;
            }
        }
    }
}
