//! Running a [`ProblemSpec`]: building its universe, counting it by closed
//! form where one is registered, and enumerating its witnesses under a
//! work budget.

use num_bigint::BigUint;
use thiserror::Error;

use crate::geometry::{GeometryError, LatticeGrid, Square};
use crate::report::{ClassCount, ClassLabel, CountMethod, CountReport};
use crate::speclang::{Layout, ProblemKind, ProblemSpec};
use crate::squares::{self, SquareVariant, ALL_FORMULA, AXIS_FORMULA};
use crate::wordgrid::{self, corner_class_decomposition, LetterGrid, PathWitness, WordGridError};

/// Default cap on brute-force candidates.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProblemError {
    #[error("oracle budget exceeded: needs more than {budget} candidates")]
    BudgetExceeded { budget: u64 },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    WordGrid(#[from] WordGridError),
}

/// The closed forms this crate knows how to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosedFormFamily {
    AxisSquares,
    AllSquares,
    ManhattanRings,
}

impl ClosedFormFamily {
    pub const ALL: [ClosedFormFamily; 3] = [
        ClosedFormFamily::AxisSquares,
        ClosedFormFamily::AllSquares,
        ClosedFormFamily::ManhattanRings,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ClosedFormFamily::AxisSquares => "axis-squares",
            ClosedFormFamily::AllSquares => "all-squares",
            ClosedFormFamily::ManhattanRings => "manhattan-rings",
        }
    }
}

/// The closed form registered for `spec`, if any.
///
/// Word paths only have one on the manhattan-rings layout with side
/// adjacency and a word of pairwise distinct symbols.
pub fn closed_form_family(spec: &ProblemSpec) -> Option<ClosedFormFamily> {
    match &spec.kind {
        ProblemKind::Squares {
            variant: SquareVariant::Axis,
            ..
        } => Some(ClosedFormFamily::AxisSquares),
        ProblemKind::Squares {
            variant: SquareVariant::All,
            ..
        } => Some(ClosedFormFamily::AllSquares),
        ProblemKind::WordPaths {
            word,
            layout: Layout::ManhattanRings,
            adjacency: wordgrid::AdjacencyRule::Side,
            ..
        } if word.repeated_symbol().is_none() => Some(ClosedFormFamily::ManhattanRings),
        ProblemKind::WordPaths { .. } => None,
    }
}

/// Enumerated objects of a problem, in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witnesses {
    Squares(Vec<Square>),
    Paths(Vec<PathWitness>),
}

impl Witnesses {
    pub fn len(&self) -> usize {
        match self {
            Witnesses::Squares(v) => v.len(),
            Witnesses::Paths(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Class label of the witness at `index`.
    pub fn label(&self, index: usize) -> Option<ClassLabel> {
        match self {
            Witnesses::Squares(v) => v.get(index).map(|s| ClassLabel::Size(s.k())),
            Witnesses::Paths(v) => v
                .get(index)
                .and_then(PathWitness::last)
                .map(ClassLabel::Terminal),
        }
    }

    /// Class sizes in label order.
    pub fn class_counts(&self) -> Vec<ClassCount> {
        let mut counts = std::collections::BTreeMap::<ClassLabel, u64>::new();
        for i in 0..self.len() {
            if let Some(label) = self.label(i) {
                *counts.entry(label).or_default() += 1;
            }
        }
        if let Witnesses::Paths(v) = self {
            debug_assert_eq!(
                corner_class_decomposition(v).total,
                counts.values().sum::<u64>()
            );
        }
        counts
            .into_iter()
            .map(|(label, n)| ClassCount {
                label,
                count: BigUint::from(n),
            })
            .collect()
    }
}

pub fn letter_grid(spec: &ProblemSpec) -> Result<Option<LetterGrid>, ProblemError> {
    match &spec.kind {
        ProblemKind::Squares { .. } => Ok(None),
        ProblemKind::WordPaths {
            word,
            layout: Layout::ManhattanRings,
            ..
        } => Ok(Some(wordgrid::generate_manhattan_rings(word)?)),
        ProblemKind::WordPaths {
            layout: Layout::Explicit(rows),
            ..
        } => Ok(Some(LetterGrid::from_rows(rows)?)),
    }
}

pub fn lattice_grid(spec: &ProblemSpec) -> Result<Option<LatticeGrid>, ProblemError> {
    match &spec.kind {
        ProblemKind::Squares { cols, rows, .. } => Ok(Some(LatticeGrid::new(*cols, *rows)?)),
        ProblemKind::WordPaths { .. } => Ok(None),
    }
}

/// Candidates the enumerator would visit, saturating just above `budget`.
pub fn enumeration_cost(spec: &ProblemSpec, budget: u64) -> Result<u64, ProblemError> {
    match &spec.kind {
        ProblemKind::Squares { variant, .. } => {
            let grid = lattice_grid(spec)?.expect("squares problem has a lattice grid");
            Ok(squares::enumeration_cost(&grid, *variant, budget))
        }
        ProblemKind::WordPaths {
            word, adjacency, ..
        } => {
            let grid = letter_grid(spec)?.expect("word problem has a letter grid");
            let cells = grid.cell_count() as u64;
            Ok(wordgrid::enumeration_cost(&grid, word, *adjacency, budget).max(cells))
        }
    }
}

/// Runs the brute-force enumerator, refusing when it would exceed `budget`.
pub fn enumerate(spec: &ProblemSpec, budget: u64) -> Result<Witnesses, ProblemError> {
    if enumeration_cost(spec, budget)? > budget {
        return Err(ProblemError::BudgetExceeded { budget });
    }
    match &spec.kind {
        ProblemKind::Squares { variant, .. } => {
            let grid = lattice_grid(spec)?.expect("squares problem has a lattice grid");
            Ok(Witnesses::Squares(squares::enumerate_squares(
                &grid, *variant,
            )))
        }
        ProblemKind::WordPaths {
            word,
            adjacency,
            distinct_cells,
            ..
        } => {
            let grid = letter_grid(spec)?.expect("word problem has a letter grid");
            Ok(Witnesses::Paths(wordgrid::enumerate_word_paths(
                &grid,
                word,
                *adjacency,
                *distinct_cells,
            )))
        }
    }
}

/// The registered closed form, or `None` for oracle-only problems.
pub fn closed_form(spec: &ProblemSpec) -> Result<Option<CountReport>, ProblemError> {
    let report = match (&spec.kind, closed_form_family(spec)) {
        (ProblemKind::Squares { cols, rows, .. }, Some(ClosedFormFamily::AxisSquares)) => {
            squares::count_axis_squares(*cols, *rows).into_report(AXIS_FORMULA)
        }
        (ProblemKind::Squares { cols, rows, .. }, Some(ClosedFormFamily::AllSquares)) => {
            squares::count_all_squares(*cols, *rows).into_report(ALL_FORMULA)
        }
        (ProblemKind::WordPaths { word, .. }, Some(ClosedFormFamily::ManhattanRings)) => {
            wordgrid::count_word_paths_closed(word)?
        }
        _ => return Ok(None),
    };
    Ok(Some(report))
}

/// Counts by closed form when one exists, otherwise by enumeration.
pub fn count(spec: &ProblemSpec, budget: u64) -> Result<CountReport, ProblemError> {
    if let Some(report) = closed_form(spec)? {
        return Ok(report);
    }
    let witnesses = enumerate(spec, budget)?;
    Ok(CountReport {
        total: BigUint::from(witnesses.len()),
        classes: witnesses.class_counts(),
        method: CountMethod::Enumeration,
    })
}
