mod common;

use std::path::Path;

use origami_mv::cli::run_in;

fn run(dir: &Path, args: &[&str]) -> origami_mv::cli::Outcome {
    let mut argv = vec!["origami-mv"];
    argv.extend_from_slice(args);
    run_in(dir, argv)
}

/// Replays every golden session; `BLESS=1` rewrites them instead.
#[test]
fn golden_sessions() {
    let bless = std::env::var_os("BLESS").is_some();
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let sessions = common::golden_sessions();
    assert!(!sessions.is_empty());
    for (name, recorded) in sessions {
        let actual = common::replay(&recorded);
        if bless {
            std::fs::write(dir.join(format!("{name}.session")), &actual).unwrap();
        } else {
            assert_eq!(actual, recorded, "golden session {name} differs");
        }
    }
}

/// The README's console examples, byte for byte; `BLESS=1` rewrites them.
#[test]
fn readme_examples() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../README.md");
    let mut readme = std::fs::read_to_string(&path).unwrap();
    let blocks = common::console_blocks(&readme);
    assert!(!blocks.is_empty());
    if std::env::var_os("BLESS").is_some() {
        for block in blocks {
            readme = readme.replacen(&block, &common::replay(&block), 1);
        }
        std::fs::write(&path, readme).unwrap();
        return;
    }
    for block in blocks {
        assert_eq!(common::replay(&block), block);
    }
}

#[test]
fn exit_codes() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    assert_eq!(run(dir, &["gen", "miura", "--rows", "2", "--cols", "2", "-o", "m.cpt"]).code, 0);
    assert_eq!(run(dir, &["count", "m.cpt", "--method", "enumerate"]).code, 0);

    // usage and parse problems
    assert_eq!(run(dir, &["count"]).code, 2);
    assert_eq!(run(dir, &["count", "m.cpt", "--method", "guess"]).code, 2);
    assert_eq!(run(dir, &["count", "missing.cpt"]).code, 2);
    std::fs::write(dir.join("bad.cpt"), "CPT 1\nvertices 1\n0 0 0 B\nedges 1\n0 0 99 M\n").unwrap();
    let bad = run(dir, &["validate", "bad.cpt"]);
    assert_eq!(bad.code, 2);
    assert!(bad.stderr.contains("line 5"), "{}", bad.stderr);
    assert_eq!(run(dir, &["vertex", "45,ninety"]).code, 2);
    std::fs::write(dir.join("grid.txt"), "01\n13\n").unwrap();
    assert_eq!(run(dir, &["miura", "from-coloring", "grid.txt"]).code, 2);

    // domain errors
    assert_eq!(run(dir, &["gen", "miura", "--rows", "0", "--cols", "2"]).code, 1);
    assert_eq!(run(dir, &["gen", "miura", "--rows", "2", "--cols", "2", "--alpha", "95"]).code, 1);
    assert_eq!(run(dir, &["vertex", "60,120,60,120"]).code, 1);
    assert_eq!(run(dir, &["colorings", "--rows", "5", "--cols", "5", "--method", "brute"]).code, 1);
    assert_eq!(run(dir, &["lieb", "--max-n", "1"]).code, 1);
    std::fs::write(dir.join("grid.txt"), "01\n11\n").unwrap();
    assert_eq!(run(dir, &["miura", "from-coloring", "grid.txt"]).code, 1);
    // an unassigned Miura file has no coloring
    assert_eq!(run(dir, &["miura", "to-coloring", "m.cpt"]).code, 1);
    assert_eq!(run(dir, &["gen", "square-twist", "--rows", "3", "--cols", "3", "-o", "s.cpt"]).code, 0);
    assert_eq!(run(dir, &["count", "s.cpt", "--method", "enumerate"]).code, 1);

    let help = run(dir, &["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("linegraph"));
}

#[test]
fn output_flag_writes_files() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    let direct = run(dir, &["gen", "square-twist", "--rows", "1", "--cols", "2"]);
    let quiet = run(dir, &["gen", "square-twist", "--rows", "1", "--cols", "2", "--out", "s.cpt", "--metadata", "s.meta"]);
    assert_eq!(quiet.stdout, "");
    assert_eq!(std::fs::read_to_string(dir.join("s.cpt")).unwrap(), direct.stdout);
    let meta = std::fs::read_to_string(dir.join("s.meta")).unwrap();
    assert!(meta.starts_with("kind=square-twist\nrows=1\ncols=2\n"));
}

#[test]
fn methods_agree_when_determined() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    for (m, n) in [(1, 1), (1, 2), (2, 1)] {
        let gen = run(dir, &["gen", "square-twist", "--rows", &m.to_string(), "--cols", &n.to_string(), "-o", "s.cpt"]);
        assert_eq!(gen.code, 0);
        let a = run(dir, &["count", "s.cpt", "--method", "linegraph"]);
        let b = run(dir, &["count", "s.cpt", "--method", "enumerate"]);
        assert_eq!(a.stdout, b.stdout, "S({m},{n})");
    }
}
