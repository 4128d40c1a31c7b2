//! Letter grids and the ways of reading a word off them.
//!
//! A reading is a sequence of cells whose symbols spell the word, with each
//! step obeying an [`AdjacencyRule`]. The depth-first enumerator in
//! [`enumerate_word_paths`] is the reference oracle; the closed form in
//! [`count_word_paths_closed`] covers the manhattan-rings layout, where every
//! side-adjacent reading walks monotonically from the center to a corner.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use thiserror::Error;

use crate::counting::{binomial, count_move_words, MoveWord};
use crate::report::{ClassCount, ClassLabel, CountMethod, CountReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordGridError {
    #[error("manhattan-rings layout requires odd word length, got {0}")]
    EvenWordLength(usize),
    #[error("word must not be empty")]
    EmptyWord,
    #[error("closed form requires pairwise distinct symbols, {0:?} repeats")]
    RepeatedSymbol(char),
    #[error("letter grid needs at least one non-empty row")]
    EmptyGrid,
    #[error("letter grid rows must have equal length: row {row} has {found} symbols, expected {expected}")]
    RaggedRow {
        row: usize,
        found: usize,
        expected: usize,
    },
}

/// A cell of a letter grid, `y` growing upward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Cell {
    pub x: u32,
    pub y: u32,
}

impl Cell {
    pub const fn new(x: u32, y: u32) -> Self {
        Self { x, y }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// A word as a sequence of Unicode scalar values, compared exactly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<char>);

impl Word {
    pub fn new(symbols: Vec<char>) -> Self {
        Self(symbols)
    }

    pub fn symbols(&self) -> &[char] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// First symbol that occurs more than once.
    pub fn repeated_symbol(&self) -> Option<char> {
        let mut seen = std::collections::BTreeSet::new();
        self.0.iter().copied().find(|c| !seen.insert(*c))
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Self {
        Word(s.chars().collect())
    }
}

impl FromStr for Word {
    type Err = std::convert::Infallible;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(Word::from(s))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

/// A rectangle of symbols.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LetterGrid {
    cols: u32,
    rows: u32,
    // Row-major, y = 0 first.
    cells: Vec<char>,
}

impl LetterGrid {
    /// Builds a grid from rows as they read on the page: the first row is the
    /// top of the grid, i.e. `y = rows - 1`.
    pub fn from_rows<S: AsRef<str>>(rows: &[S]) -> Result<Self, WordGridError> {
        let parsed: Vec<Vec<char>> = rows.iter().map(|r| r.as_ref().chars().collect()).collect();
        let expected = parsed.first().map_or(0, Vec::len);
        if expected == 0 {
            return Err(WordGridError::EmptyGrid);
        }
        if let Some((row, r)) = parsed.iter().enumerate().find(|(_, r)| r.len() != expected) {
            return Err(WordGridError::RaggedRow {
                row,
                found: r.len(),
                expected,
            });
        }
        let cells = parsed.into_iter().rev().flatten().collect();
        Ok(Self {
            cols: expected as u32,
            rows: rows.len() as u32,
            cells,
        })
    }

    fn from_fn(cols: u32, rows: u32, f: impl Fn(Cell) -> char) -> Self {
        let cells = (0..rows)
            .flat_map(|y| (0..cols).map(move |x| Cell::new(x, y)))
            .map(f)
            .collect();
        Self { cols, rows, cells }
    }

    pub fn cols(&self) -> u32 {
        self.cols
    }

    pub fn rows(&self) -> u32 {
        self.rows
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn get(&self, c: Cell) -> Option<char> {
        if c.x < self.cols && c.y < self.rows {
            Some(self.cells[(c.y * self.cols + c.x) as usize])
        } else {
            None
        }
    }

    /// Cells in `(x, y)` order.
    pub fn cells(&self) -> impl Iterator<Item = (Cell, char)> + '_ {
        (0..self.cols)
            .flat_map(move |x| (0..self.rows).map(move |y| Cell::new(x, y)))
            .map(|c| (c, self.cells[(c.y * self.cols + c.x) as usize]))
    }

    /// Rows as they read on the page, top row first.
    pub fn page_rows(&self) -> Vec<String> {
        (0..self.rows)
            .rev()
            .map(|y| {
                let start = (y * self.cols) as usize;
                self.cells[start..start + self.cols as usize]
                    .iter()
                    .collect()
            })
            .collect()
    }

    pub fn positions_of(&self, symbol: char) -> Vec<Cell> {
        self.cells()
            .filter(|&(_, s)| s == symbol)
            .map(|(c, _)| c)
            .collect()
    }
}

/// L x L grid (L odd) whose cell at Manhattan offset `d` from the center
/// carries `word[d]`, so the center holds the first symbol and the four
/// corners hold the last.
pub fn generate_manhattan_rings(word: &Word) -> Result<LetterGrid, WordGridError> {
    let len = word.len();
    if len == 0 {
        return Err(WordGridError::EmptyWord);
    }
    if len.is_multiple_of(2) {
        return Err(WordGridError::EvenWordLength(len));
    }
    let side = len as u32;
    let center = side / 2;
    Ok(LetterGrid::from_fn(side, side, |c| {
        word.symbols()[(c.x.abs_diff(center) + c.y.abs_diff(center)) as usize]
    }))
}

/// How consecutive cells of a reading must relate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AdjacencyRule {
    /// Cells share an edge.
    Side,
    /// Cells share an edge or a corner.
    King,
    /// Any cell may follow any cell.
    Unconstrained,
}

impl AdjacencyRule {
    pub fn as_str(&self) -> &'static str {
        match self {
            AdjacencyRule::Side => "side",
            AdjacencyRule::King => "king",
            AdjacencyRule::Unconstrained => "none",
        }
    }

    pub fn allows(&self, from: Cell, to: Cell) -> bool {
        let dx = from.x.abs_diff(to.x);
        let dy = from.y.abs_diff(to.y);
        match self {
            AdjacencyRule::Side => dx + dy == 1,
            AdjacencyRule::King => dx.max(dy) == 1,
            AdjacencyRule::Unconstrained => true,
        }
    }
}

/// One concrete reading of a word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathWitness {
    pub cells: Vec<Cell>,
}

impl PathWitness {
    pub fn last(&self) -> Option<Cell> {
        self.cells.last().copied()
    }

    pub fn reversed(&self) -> PathWitness {
        PathWitness {
            cells: self.cells.iter().rev().copied().collect(),
        }
    }
}

impl fmt::Display for PathWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.cells.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

struct PathSearch<'a> {
    word: &'a [char],
    adj: AdjacencyRule,
    distinct_cells: bool,
    // Candidate cells for each word position, in (x, y) order.
    candidates: Vec<Vec<Cell>>,
    current: Vec<Cell>,
    out: Vec<PathWitness>,
}

impl PathSearch<'_> {
    fn extend(&mut self) {
        let depth = self.current.len();
        if depth == self.word.len() {
            self.out.push(PathWitness {
                cells: self.current.clone(),
            });
            return;
        }
        for i in 0..self.candidates[depth].len() {
            let next = self.candidates[depth][i];
            if let Some(&prev) = self.current.last() {
                if !self.adj.allows(prev, next) {
                    continue;
                }
            }
            if self.distinct_cells && self.current.contains(&next) {
                continue;
            }
            self.current.push(next);
            self.extend();
            self.current.pop();
        }
    }
}

/// Every reading of `word` in `g`, each once, in lexicographic order of the
/// cell sequence.
pub fn enumerate_word_paths(
    g: &LetterGrid,
    word: &Word,
    adj: AdjacencyRule,
    distinct_cells: bool,
) -> Vec<PathWitness> {
    if word.is_empty() {
        return Vec::new();
    }
    let candidates = word.symbols().iter().map(|&s| g.positions_of(s)).collect();
    let mut search = PathSearch {
        word: word.symbols(),
        adj,
        distinct_cells,
        candidates,
        current: Vec::with_capacity(word.len()),
        out: Vec::new(),
    };
    search.extend();
    search.out
}

/// Upper bound on the number of partial readings the enumerator visits,
/// saturating just above `cap`.
pub fn enumeration_cost(g: &LetterGrid, word: &Word, adj: AdjacencyRule, cap: u64) -> u64 {
    let candidates: Vec<Vec<Cell>> = word.symbols().iter().map(|&s| g.positions_of(s)).collect();
    let Some(first) = candidates.first() else {
        return 0;
    };
    let mut layer: Vec<u64> = vec![1; first.len()];
    let mut total = layer.len() as u64;
    for pair in candidates.windows(2) {
        let (prev, next) = (&pair[0], &pair[1]);
        let next_layer: Vec<u64> = next
            .iter()
            .map(|&to| {
                prev.iter()
                    .zip(&layer)
                    .filter(|(&from, _)| adj.allows(from, to))
                    .fold(0u64, |acc, (_, &n)| acc.saturating_add(n))
            })
            .collect();
        total = next_layer
            .iter()
            .fold(total, |acc, &n| acc.saturating_add(n));
        if total > cap {
            return total;
        }
        layer = next_layer;
    }
    total
}

/// Number of readings when any cell may follow any other: the product of
/// how often each word symbol occurs in the grid.
pub fn symbol_multiplicity_product(g: &LetterGrid, word: &Word) -> BigUint {
    word.symbols()
        .iter()
        .map(|&s| BigUint::from(g.positions_of(s).len()))
        .product()
}

/// The four corners of an L x L grid in `(x, y)` order, or the single
/// center cell when L = 1.
pub fn ring_corners(len: usize) -> Vec<Cell> {
    let far = len.saturating_sub(1) as u32;
    if far == 0 {
        return vec![Cell::new(0, 0)];
    }
    vec![
        Cell::new(0, 0),
        Cell::new(0, far),
        Cell::new(far, 0),
        Cell::new(far, far),
    ]
}

pub const RINGS_FORMULA: &str = "4 * (L - 1)! / (((L - 1) / 2)!)^2";

/// Side-adjacent readings of `word` on its manhattan-rings grid.
///
/// Each reading heads from the center to one corner using `(L - 1) / 2`
/// vertical and `(L - 1) / 2` horizontal moves, so every corner class has
/// `C(L - 1, (L - 1) / 2)` members.
pub fn count_word_paths_closed(word: &Word) -> Result<CountReport, WordGridError> {
    let len = word.len();
    if len == 0 {
        return Err(WordGridError::EmptyWord);
    }
    if len.is_multiple_of(2) {
        return Err(WordGridError::EvenWordLength(len));
    }
    if let Some(c) = word.repeated_symbol() {
        return Err(WordGridError::RepeatedSymbol(c));
    }
    let half = ((len - 1) / 2) as u64;
    let per_corner = count_move_words(MoveWord::new(half, half));
    debug_assert_eq!(per_corner, binomial(2 * half, half as i64));
    let classes: Vec<ClassCount> = ring_corners(len)
        .into_iter()
        .map(|c| ClassCount {
            label: ClassLabel::Terminal(c),
            count: per_corner.clone(),
        })
        .collect();
    let total = classes.iter().map(|c| &c.count).sum();
    Ok(CountReport {
        total,
        classes,
        method: CountMethod::ClosedForm {
            formula: RINGS_FORMULA.to_owned(),
        },
    })
}

/// Readings grouped by their final cell.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CornerClassReport {
    pub classes: BTreeMap<Cell, u64>,
    pub total: u64,
}

pub fn corner_class_decomposition(witnesses: &[PathWitness]) -> CornerClassReport {
    let mut report = CornerClassReport::default();
    for last in witnesses.iter().filter_map(PathWitness::last) {
        *report.classes.entry(last).or_default() += 1;
        report.total += 1;
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn open() -> Word {
        Word::from("Open!")
    }

    fn symbol_counts(g: &LetterGrid) -> BTreeMap<char, usize> {
        let mut m = BTreeMap::new();
        for (_, s) in g.cells() {
            *m.entry(s).or_default() += 1;
        }
        m
    }

    #[test]
    fn rings_layout_for_open() {
        let g = generate_manhattan_rings(&open()).unwrap();
        assert_eq!((g.cols(), g.rows()), (5, 5));
        assert_eq!(g.get(Cell::new(2, 2)), Some('O'));
        for c in ring_corners(5) {
            assert_eq!(g.get(c), Some('!'));
        }
        let counts = symbol_counts(&g);
        assert_eq!(
            counts,
            BTreeMap::from([('O', 1), ('p', 4), ('e', 8), ('n', 8), ('!', 4)])
        );
        // Ring sizes 4 * min(d, L - d).
        for (d, s) in open().symbols().iter().enumerate().skip(1) {
            assert_eq!(counts[s], 4 * d.min(5 - d));
        }
        assert_eq!(
            g.page_rows(),
            vec!["!nen!", "nepen", "epOpe", "nepen", "!nen!"]
        );
    }

    #[test]
    fn rings_small_cases() {
        let g = generate_manhattan_rings(&Word::from("X")).unwrap();
        assert_eq!(g.page_rows(), vec!["X"]);
        let g = generate_manhattan_rings(&Word::from("aba")).unwrap();
        assert_eq!(g.page_rows(), vec!["aba", "bab", "aba"]);
    }

    #[test]
    fn rings_reject_even_and_empty_words() {
        let err = generate_manhattan_rings(&Word::from("Open")).unwrap_err();
        assert_eq!(err, WordGridError::EvenWordLength(4));
        assert!(err
            .to_string()
            .starts_with("manhattan-rings layout requires odd word length"));
        assert_eq!(
            generate_manhattan_rings(&Word::default()),
            Err(WordGridError::EmptyWord)
        );
        assert_eq!(
            count_word_paths_closed(&Word::from("ab")),
            Err(WordGridError::EvenWordLength(2))
        );
    }

    #[test]
    fn from_rows_orientation_and_errors() {
        let g = LetterGrid::from_rows(&["ab", "cd"]).unwrap();
        assert_eq!(g.get(Cell::new(0, 1)), Some('a'));
        assert_eq!(g.get(Cell::new(1, 0)), Some('d'));
        assert_eq!(g.get(Cell::new(2, 0)), None);
        assert_eq!(
            LetterGrid::from_rows::<&str>(&[]),
            Err(WordGridError::EmptyGrid)
        );
        assert_eq!(LetterGrid::from_rows(&[""]), Err(WordGridError::EmptyGrid));
        assert_eq!(
            LetterGrid::from_rows(&["ab", "c"]),
            Err(WordGridError::RaggedRow {
                row: 1,
                found: 1,
                expected: 2
            })
        );
    }

    #[test]
    fn open_readings() {
        let g = generate_manhattan_rings(&open()).unwrap();
        let side = enumerate_word_paths(&g, &open(), AdjacencyRule::Side, false);
        assert_eq!(side.len(), 24);
        assert!(side.windows(2).all(|w| w[0] < w[1]));
        let single = enumerate_word_paths(&g, &Word::from("O"), AdjacencyRule::Side, false);
        assert_eq!(
            single,
            vec![PathWitness {
                cells: vec![Cell::new(2, 2)]
            }]
        );
        let free = enumerate_word_paths(&g, &open(), AdjacencyRule::Unconstrained, false);
        assert_eq!(free.len(), 4 * 8 * 8 * 4);
        assert_eq!(
            symbol_multiplicity_product(&g, &open()),
            BigUint::from(free.len())
        );
    }

    #[test]
    fn no_match_gives_no_readings() {
        let g = generate_manhattan_rings(&open()).unwrap();
        assert!(
            enumerate_word_paths(&g, &Word::from("open!"), AdjacencyRule::King, false).is_empty()
        );
        assert!(enumerate_word_paths(&g, &Word::default(), AdjacencyRule::Side, false).is_empty());
    }

    #[test]
    fn closed_form_values() {
        let r = count_word_paths_closed(&open()).unwrap();
        assert_eq!(r.total, BigUint::from(24u32));
        assert!(r.classes.iter().all(|c| c.count == BigUint::from(6u32)));
        assert_eq!(r.classes.len(), 4);
        assert_eq!(
            count_word_paths_closed(&Word::from("X")).unwrap().total,
            BigUint::from(1u32)
        );
        let abc = Word::from("abc");
        let g = generate_manhattan_rings(&abc).unwrap();
        assert_eq!(
            enumerate_word_paths(&g, &abc, AdjacencyRule::Side, false).len(),
            8
        );
        let r = count_word_paths_closed(&abc).unwrap();
        assert_eq!(r.total, BigUint::from(8u32));
        assert_eq!(r.classes[0].count, BigUint::from(2u32));
    }

    #[test]
    fn closed_form_rejects_repeated_symbols() {
        assert_eq!(
            count_word_paths_closed(&Word::from("aba")),
            Err(WordGridError::RepeatedSymbol('a'))
        );
    }

    #[test]
    fn closed_form_matches_oracle_up_to_seven() {
        for word in ["Z", "xyz", "Open!", "abcdefg", "ΩΦΨχψ"] {
            let w = Word::from(word);
            let g = generate_manhattan_rings(&w).unwrap();
            let witnesses = enumerate_word_paths(&g, &w, AdjacencyRule::Side, false);
            let closed = count_word_paths_closed(&w).unwrap();
            assert_eq!(closed.total, BigUint::from(witnesses.len()), "{word}");
            let classes = corner_class_decomposition(&witnesses);
            for c in &closed.classes {
                let ClassLabel::Terminal(cell) = c.label else {
                    unreachable!()
                };
                assert_eq!(BigUint::from(classes.classes[&cell]), c.count);
            }
        }
    }

    #[test]
    fn corner_classes() {
        let g = generate_manhattan_rings(&open()).unwrap();
        let side = enumerate_word_paths(&g, &open(), AdjacencyRule::Side, false);
        let r = corner_class_decomposition(&side);
        assert_eq!(r.total, 24);
        assert_eq!(
            r.classes.values().copied().collect::<Vec<_>>(),
            vec![6, 6, 6, 6]
        );
        assert_eq!(
            r.classes.keys().copied().collect::<Vec<_>>(),
            ring_corners(5)
        );
        let r = corner_class_decomposition(&[]);
        assert!(r.classes.is_empty());
        assert_eq!(r.total, 0);
        let free = enumerate_word_paths(&g, &open(), AdjacencyRule::Unconstrained, false);
        let r = corner_class_decomposition(&free);
        assert_eq!(
            r.classes.values().copied().collect::<Vec<_>>(),
            vec![256; 4]
        );
    }

    #[test]
    fn readings_move_away_from_center() {
        for word in ["a", "abc", "abcde", "abcdefg"] {
            let w = Word::from(word);
            let g = generate_manhattan_rings(&w).unwrap();
            let c = g.cols() / 2;
            for p in enumerate_word_paths(&g, &w, AdjacencyRule::Side, false) {
                let d: Vec<u32> = p
                    .cells
                    .iter()
                    .map(|q| q.x.abs_diff(c) + q.y.abs_diff(c))
                    .collect();
                assert!(d.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn rotation_maps_corner_classes_onto_each_other() {
        let w = Word::from("abcdefg");
        let g = generate_manhattan_rings(&w).unwrap();
        let n = g.cols() - 1;
        let all = enumerate_word_paths(&g, &w, AdjacencyRule::Side, false);
        let rotate = |p: &PathWitness| PathWitness {
            cells: p.cells.iter().map(|c| Cell::new(n - c.y, c.x)).collect(),
        };
        let mut rotated: Vec<PathWitness> = all.iter().map(rotate).collect();
        rotated.sort();
        assert_eq!(rotated, all);
    }

    #[test]
    fn distinct_cells_matters_only_for_repeats() {
        let g = LetterGrid::from_rows(&["ab", "ba"]).unwrap();
        let w = Word::from("aba");
        let loose = enumerate_word_paths(&g, &w, AdjacencyRule::Side, false);
        let strict = enumerate_word_paths(&g, &w, AdjacencyRule::Side, true);
        assert_eq!(loose.len(), 8);
        assert_eq!(strict.len(), 4);
        let g = generate_manhattan_rings(&open()).unwrap();
        assert_eq!(
            enumerate_word_paths(&g, &open(), AdjacencyRule::Side, true).len(),
            24
        );
    }

    #[test]
    fn unconstrained_readings_may_repeat_a_cell() {
        let g = LetterGrid::from_rows(&["a"]).unwrap();
        let w = Word::from("aaa");
        assert_eq!(
            enumerate_word_paths(&g, &w, AdjacencyRule::Unconstrained, false).len(),
            1
        );
        assert_eq!(
            enumerate_word_paths(&g, &w, AdjacencyRule::King, false).len(),
            0
        );
        assert_eq!(
            enumerate_word_paths(&g, &w, AdjacencyRule::Unconstrained, true).len(),
            0
        );
    }

    #[test]
    fn cost_bounds_enumeration() {
        let g = generate_manhattan_rings(&open()).unwrap();
        for adj in [
            AdjacencyRule::Side,
            AdjacencyRule::King,
            AdjacencyRule::Unconstrained,
        ] {
            let n = enumerate_word_paths(&g, &open(), adj, false).len() as u64;
            assert!(enumeration_cost(&g, &open(), adj, u64::MAX) >= n);
        }
        assert_eq!(
            enumeration_cost(&g, &open(), AdjacencyRule::Unconstrained, u64::MAX),
            1 + 4 + 32 + 256 + 1024
        );
        assert!(enumeration_cost(&g, &open(), AdjacencyRule::Unconstrained, 10) > 10);
    }

    fn grid_and_word() -> impl Strategy<Value = (LetterGrid, Word)> {
        (1usize..=5, 1usize..=5).prop_flat_map(|(cols, rows)| {
            (
                prop::collection::vec(
                    prop::collection::vec(prop::sample::select(vec!['a', 'b', 'c']), cols),
                    rows,
                ),
                prop::collection::vec(prop::sample::select(vec!['a', 'b', 'c']), 1..=5),
            )
                .prop_map(|(rows, word)| {
                    let rows: Vec<String> =
                        rows.into_iter().map(|r| r.into_iter().collect()).collect();
                    (LetterGrid::from_rows(&rows).unwrap(), Word::new(word))
                })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn reversed_word_has_reversed_readings((g, w) in grid_and_word(), distinct in any::<bool>()) {
            for adj in [AdjacencyRule::Side, AdjacencyRule::King, AdjacencyRule::Unconstrained] {
                let forward = enumerate_word_paths(&g, &w, adj, distinct);
                let mut backward: Vec<PathWitness> = enumerate_word_paths(&g, &w.reversed(), adj, distinct)
                    .iter()
                    .map(PathWitness::reversed)
                    .collect();
                backward.sort();
                prop_assert_eq!(forward, backward);
            }
        }

        #[test]
        fn looser_adjacency_admits_more_readings((g, w) in grid_and_word(), distinct in any::<bool>()) {
            let side = enumerate_word_paths(&g, &w, AdjacencyRule::Side, distinct).len();
            let king = enumerate_word_paths(&g, &w, AdjacencyRule::King, distinct).len();
            let free = enumerate_word_paths(&g, &w, AdjacencyRule::Unconstrained, distinct).len();
            prop_assert!(side <= king && king <= free);
        }

        #[test]
        fn readings_spell_the_word((g, w) in grid_and_word()) {
            for p in enumerate_word_paths(&g, &w, AdjacencyRule::King, true) {
                let spelled: Vec<char> = p.cells.iter().map(|&c| g.get(c).unwrap()).collect();
                prop_assert_eq!(spelled.as_slice(), w.symbols());
                prop_assert!(p.cells.windows(2).all(|s| AdjacencyRule::King.allows(s[0], s[1])));
                let mut cells = p.cells.clone();
                cells.sort();
                cells.dedup();
                prop_assert_eq!(cells.len(), w.len());
            }
        }
    }
}
