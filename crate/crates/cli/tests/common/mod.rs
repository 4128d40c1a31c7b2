#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

use configcount_cli::Hooks;

pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn samples() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("specs/samples.ccspec")
}

pub fn bad_corpus() -> Vec<PathBuf> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/corpus/bad");
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "ccspec"))
        .collect();
    files.sort();
    files
}

/// Position recorded in a corpus file's `# expect L:C` header.
pub fn expected_position(path: &Path) -> (usize, usize) {
    let text = std::fs::read_to_string(path).unwrap();
    let header = text.lines().next().unwrap();
    let (line, col) = header
        .strip_prefix("# expect ")
        .unwrap()
        .split_once(':')
        .unwrap();
    (line.parse().unwrap(), col.parse().unwrap())
}

/// Runs the real binary.
pub fn exe<S: AsRef<std::ffi::OsStr>>(args: &[S]) -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_configcount"))
        .args(args)
        .output()
        .unwrap();
    Outcome {
        code: out.status.code().expect("terminated by signal"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

/// Runs the library entry point in-process, with test hooks.
pub fn in_process<S: AsRef<str>>(args: &[S], hooks: &Hooks) -> Outcome {
    let argv: Vec<String> = std::iter::once("configcount".to_owned())
        .chain(args.iter().map(|a| a.as_ref().to_owned()))
        .collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = configcount_cli::run_with(argv, &mut out, &mut err, hooks);
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

/// Writes `source` to a fresh temporary .ccspec file.
pub fn spec_file(source: &str) -> tempfile::NamedTempFile {
    let f = tempfile::Builder::new()
        .suffix(".ccspec")
        .tempfile()
        .unwrap();
    std::fs::write(f.path(), source).unwrap();
    f
}

pub fn squares_source(name: &str, cols: u32, rows: u32, variant: &str) -> String {
    format!("problem {name} {{\n  kind: squares\n  cols: {cols}\n  rows: {rows}\n  variant: {variant}\n}}\n")
}

pub fn rings_source(name: &str, word: &str, adjacency: &str) -> String {
    format!(
        "problem {name} {{\n  kind: word-paths\n  word: \"{word}\"\n  layout: manhattan-rings\n  adjacency: {adjacency}\n}}\n"
    )
}
