//! Byte-for-byte output snapshots. Each case runs with one and with four
//! worker threads; set `LICOEF_UPDATE_GOLDEN=1` to rewrite the files.

use std::path::{Path, PathBuf};
use std::process::Command;

const CASES: &[(&str, &[&str])] = &[
    (
        "compute_table",
        &["compute", "--n-max", "4", "--digits", "30"],
    ),
    (
        "compute_direct_csv",
        &[
            "compute", "--n-max", "12", "--method", "direct", "--format", "csv",
        ],
    ),
    (
        "compute_10k_json",
        &[
            "compute",
            "--zeros",
            "../core/fixtures/zeros10k.txt",
            "--n-max",
            "6",
            "--method",
            "direct",
            "--format",
            "json",
        ],
    ),
    (
        "compute_synthetic",
        &[
            "compute",
            "--synthetic",
            "2+1i,0.5+3i",
            "--n-max",
            "5",
            "--digits",
            "20",
        ],
    ),
    ("verify_all", &["verify", "--n-max", "12", "all"]),
    ("scan_table", &["scan", "--n-max", "30", "--digits", "20"]),
    (
        "scan_10k_csv",
        &[
            "scan",
            "--zeros",
            "../core/fixtures/zeros10k.txt",
            "--n-max",
            "8",
            "--format",
            "csv",
        ],
    ),
    (
        "zeros_validate_10k",
        &["zeros", "validate", "../core/fixtures/zeros10k.txt"],
    ),
    ("constants", &["constants", "--digits", "40"]),
];

fn manifest_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str], threads: &str) -> Vec<u8> {
    let cache = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_licoef"))
        .current_dir(manifest_dir())
        .args(args)
        .args(["--threads", threads])
        .env("LICOEF_CACHE_DIR", cache.path())
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out.stdout
}

fn golden_path(name: &str) -> PathBuf {
    manifest_dir()
        .join("tests/golden")
        .join(format!("{name}.txt"))
}

#[test]
fn outputs_match_golden_files() {
    let update = std::env::var_os("LICOEF_UPDATE_GOLDEN").is_some();
    for (name, args) in CASES {
        let single = run(args, "1");
        let parallel = run(args, "4");
        assert!(single == parallel, "{name}: output depends on thread count");
        let path = golden_path(name);
        if update {
            std::fs::write(&path, &single).unwrap();
            continue;
        }
        let expected = std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert!(
            single == expected,
            "{name} differs from {}:\n{}",
            path.display(),
            String::from_utf8_lossy(&single)
        );
    }
}

#[test]
fn repeated_runs_are_identical() {
    let args = CASES[0].1;
    assert_eq!(run(args, "2"), run(args, "2"));
}
