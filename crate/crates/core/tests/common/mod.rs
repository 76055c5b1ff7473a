#![allow(dead_code)]

use std::path::Path;

use origami_mv::cli::run_in;

/// Runs a console session in `dir` and returns what a terminal would show:
/// each `$ ` command line followed by its standard output and error.
/// Besides `origami-mv`, the session may use `cat <file>` and
/// `printf '<text>' > <file>` (with `\n` escapes only).
pub fn transcript(dir: &Path, commands: &[&str]) -> String {
    let mut out = String::new();
    for line in commands {
        out.push_str("$ ");
        out.push_str(line);
        out.push('\n');
        if let Some(rest) = line.strip_prefix("printf '") {
            let (text, file) = rest.split_once("' > ").expect("printf '<text>' > <file>");
            std::fs::write(dir.join(file), text.replace("\\n", "\n")).expect("write session file");
            continue;
        }
        let words: Vec<&str> = line.split_whitespace().collect();
        match words.as_slice() {
            ["origami-mv", ..] => {
                let outcome = run_in(dir, &words);
                out.push_str(&outcome.stdout);
                out.push_str(&outcome.stderr);
            }
            ["cat", file] => out.push_str(&std::fs::read_to_string(dir.join(file)).expect("file to cat exists")),
            _ => panic!("unsupported command in session: {line}"),
        }
    }
    out
}

/// Splits a recorded session into its command lines.
pub fn commands(session: &str) -> Vec<&str> {
    session.lines().filter_map(|l| l.strip_prefix("$ ")).collect()
}

/// Runs a recorded session in a fresh directory.
pub fn replay(session: &str) -> String {
    let dir = tempfile::tempdir().expect("temporary directory");
    transcript(dir.path(), &commands(session))
}

/// Console blocks of a markdown document, in order.
pub fn console_blocks(markdown: &str) -> Vec<String> {
    let mut blocks = Vec::new();
    let mut current: Option<String> = None;
    for line in markdown.lines() {
        match (&mut current, line.trim_end()) {
            (None, "```console") => current = Some(String::new()),
            (Some(_), "```") => blocks.push(current.take().unwrap()),
            (Some(block), _) => {
                block.push_str(line);
                block.push('\n');
            }
            (None, _) => {}
        }
    }
    blocks
}

/// Golden sessions: `tests/golden/<name>.session` files.
pub fn golden_sessions() -> Vec<(String, String)> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut out: Vec<(String, String)> = std::fs::read_dir(&dir)
        .expect("golden directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "session"))
        .map(|p| (p.file_stem().unwrap().to_string_lossy().into_owned(), std::fs::read_to_string(&p).unwrap()))
        .collect();
    out.sort();
    out
}
