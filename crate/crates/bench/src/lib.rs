//! Fixtures shared by the criterion benches.

use configcount_core::{parse_spec, ProblemSpec};

/// A word of `len` pairwise distinct symbols.
pub fn distinct_word(len: usize) -> String {
    ('a'..='z').chain('A'..='Z').take(len).collect()
}

pub fn squares_problem(cols: u32, rows: u32, variant: &str) -> ProblemSpec {
    let src = format!("problem b {{ kind: squares cols: {cols} rows: {rows} variant: {variant} }}");
    parse_spec(&src).expect("fixture parses").remove(0)
}

pub fn rings_problem(len: usize, adjacency: &str) -> ProblemSpec {
    let src = format!(
        "problem b {{ kind: word-paths word: \"{}\" layout: manhattan-rings adjacency: {adjacency} }}",
        distinct_word(len)
    );
    parse_spec(&src).expect("fixture parses").remove(0)
}
