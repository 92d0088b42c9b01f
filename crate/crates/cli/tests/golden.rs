//! Byte-for-byte comparison with the files in `tests/golden`.
//!
//! Set `CHAMBERWALK_BLESS=1` to rewrite them after an intended change.

mod common;

use common::{run_ok, CASES};

#[test]
fn outputs_match_golden_files() {
    let bless = std::env::var_os("CHAMBERWALK_BLESS").is_some();
    let mut mismatches = Vec::new();
    for case in CASES {
        let path = case.golden_path();
        let actual = run_ok(case.args);
        if bless {
            std::fs::write(&path, &actual).expect("write golden file");
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(expected) if expected == actual => {}
            Ok(_) => mismatches.push(format!("{} differs", path.display())),
            Err(e) => mismatches.push(format!("{}: {e}", path.display())),
        }
    }
    assert!(mismatches.is_empty(), "{mismatches:#?}");
}

#[test]
fn golden_directory_has_no_strays() {
    let expected: std::collections::BTreeSet<_> = CASES.iter().map(|c| c.golden_path()).collect();
    let dir = common::manifest_dir().join("tests/golden");
    for entry in std::fs::read_dir(dir).expect("golden directory") {
        let path = entry.expect("entry").path();
        assert!(
            expected.contains(&path),
            "unused golden file {}",
            path.display()
        );
    }
}
