//! Four-step explanation traces: the objects and their universe, the
//! constraints, the class structure, and how the class counts recombine.

use num_bigint::BigUint;

use crate::problem::{self, closed_form_family, ClosedFormFamily, ProblemError};
use crate::report::ClassLabel;
use crate::speclang::{Layout, ProblemKind, ProblemSpec};
use crate::squares;
use crate::wordgrid::{self, AdjacencyRule, Cell, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    pub object: String,
    pub universe: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassDescription {
    pub label: String,
    pub parameters: Vec<(String, String)>,
}

/// One summand. When `factors` is non-empty its product is `count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub label: String,
    pub factors: Vec<BigUint>,
    pub count: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub label: String,
    pub value: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recombination {
    /// Disjoint classes summed.
    Addition { terms: Vec<Term>, total: BigUint },
    /// Independent choices multiplied.
    Product {
        factors: Vec<Factor>,
        total: BigUint,
    },
    /// No closed form; the class sizes and total come from the enumerator.
    EnumerationOnly { terms: Vec<Term>, total: BigUint },
}

impl Recombination {
    pub fn total(&self) -> &BigUint {
        match self {
            Recombination::Addition { total, .. }
            | Recombination::Product { total, .. }
            | Recombination::EnumerationOnly { total, .. } => total,
        }
    }

    pub fn rule(&self) -> &'static str {
        match self {
            Recombination::Addition { .. } => "addition",
            Recombination::Product { .. } => "product",
            Recombination::EnumerationOnly { .. } => "enumeration-only",
        }
    }

    /// Whether recombining the entries reproduces the stated total.
    pub fn is_consistent(&self) -> bool {
        let terms_ok = |terms: &[Term]| {
            terms
                .iter()
                .all(|t| t.factors.is_empty() || t.factors.iter().product::<BigUint>() == t.count)
        };
        match self {
            Recombination::Addition { terms, total }
            | Recombination::EnumerationOnly { terms, total } => {
                terms_ok(terms) && terms.iter().map(|t| &t.count).sum::<BigUint>() == *total
            }
            Recombination::Product { factors, total } => {
                factors.iter().map(|f| &f.value).product::<BigUint>() == *total
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepTrace {
    pub problem: String,
    pub kind: &'static str,
    pub configuration: Configuration,
    pub constraints: Vec<String>,
    pub classes: Vec<ClassDescription>,
    pub recombination: Recombination,
}

fn class_name(i: usize) -> String {
    format!("A_{}", i + 1)
}

fn squares_trace(spec: &ProblemSpec, cols: u32, rows: u32, axis: bool) -> StepTrace {
    let mut constraints = vec!["every vertex is a grid point".to_owned()];
    if axis {
        constraints.push("sides are parallel to the coordinate axes".to_owned());
    }
    let breakdown = squares::count_squares(
        cols,
        rows,
        if axis {
            squares::SquareVariant::Axis
        } else {
            squares::SquareVariant::All
        },
    );
    let mut classes = Vec::new();
    let mut terms = Vec::new();
    for (i, (&k, count)) in breakdown.per_k.iter().enumerate() {
        let rail_pairs = u64::from(rows - k);
        let per_pair = u64::from(cols - k);
        let mut parameters = vec![(
            if axis { "side" } else { "bounding box" }.to_owned(),
            k.to_string(),
        )];
        let mut factors = Vec::new();
        if !axis {
            parameters.push(("tilt offsets".to_owned(), k.to_string()));
            factors.push(BigUint::from(k));
        }
        parameters.push(("rail pairs".to_owned(), rail_pairs.to_string()));
        parameters.push(("per rail pair".to_owned(), per_pair.to_string()));
        factors.push(BigUint::from(rail_pairs));
        factors.push(BigUint::from(per_pair));
        classes.push(ClassDescription {
            label: class_name(i),
            parameters,
        });
        terms.push(Term {
            label: class_name(i),
            factors,
            count: count.clone(),
        });
    }
    StepTrace {
        problem: spec.name.clone(),
        kind: spec.kind.as_str(),
        configuration: Configuration {
            object: if axis {
                "axis-aligned square with vertices on grid points".to_owned()
            } else {
                "square with vertices on grid points".to_owned()
            },
            universe: format!(
                "{cols}x{rows} lattice grid ({} points)",
                u64::from(cols) * u64::from(rows)
            ),
        },
        constraints,
        classes,
        recombination: Recombination::Addition {
            terms,
            total: breakdown.total,
        },
    }
}

// Move letters from the center of a side x side grid to `corner`.
fn corner_moves(corner: Cell, side: u32) -> String {
    let half = (side / 2) as usize;
    let vertical = if corner.y == 0 { "D" } else { "U" };
    let horizontal = if corner.x == 0 { "L" } else { "R" };
    format!("{}{}", vertical.repeat(half), horizontal.repeat(half))
}

fn word_constraints(word: &Word, adjacency: AdjacencyRule, distinct_cells: bool) -> Vec<String> {
    let mut out = vec![match adjacency {
        AdjacencyRule::Side => "each cell shares a side with the previous one".to_owned(),
        AdjacencyRule::King => {
            "each cell shares a side or a corner with the previous one".to_owned()
        }
        AdjacencyRule::Unconstrained => "any cell may follow any other".to_owned(),
    }];
    out.push(format!("the symbols along the cells spell \"{word}\""));
    if distinct_cells {
        out.push("no cell is used twice".to_owned());
    }
    out
}

/// Builds the four-step trace for `spec`. Oracle-only problems are
/// enumerated within `budget`.
pub fn build_step_trace(spec: &ProblemSpec, budget: u64) -> Result<StepTrace, ProblemError> {
    let (word, layout, adjacency, distinct_cells) = match &spec.kind {
        ProblemKind::Squares {
            cols,
            rows,
            variant,
        } => {
            return Ok(squares_trace(
                spec,
                *cols,
                *rows,
                *variant == squares::SquareVariant::Axis,
            ));
        }
        ProblemKind::WordPaths {
            word,
            layout,
            adjacency,
            distinct_cells,
        } => (word, layout, *adjacency, *distinct_cells),
    };
    let grid = problem::letter_grid(spec)?.expect("word problem has a letter grid");
    let configuration = Configuration {
        object: format!("reading of \"{word}\" as a sequence of cells"),
        universe: format!(
            "{}x{} letter table ({})",
            grid.cols(),
            grid.rows(),
            match layout {
                Layout::ManhattanRings => "manhattan rings",
                Layout::Explicit(_) => "explicit rows",
            }
        ),
    };
    let constraints = word_constraints(word, adjacency, distinct_cells);

    if closed_form_family(spec) == Some(ClosedFormFamily::ManhattanRings) {
        let report = wordgrid::count_word_paths_closed(word)?;
        let classes: Vec<ClassDescription> = report
            .classes
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let ClassLabel::Terminal(cell) = c.label else {
                    unreachable!("word classes end on a cell")
                };
                ClassDescription {
                    label: class_name(i),
                    parameters: vec![
                        ("ends at".to_owned(), cell.to_string()),
                        ("moves".to_owned(), corner_moves(cell, grid.cols())),
                    ],
                }
            })
            .collect();
        let recombination = if report.classes.len() == 1 {
            Recombination::Addition {
                terms: vec![Term {
                    label: class_name(0),
                    factors: Vec::new(),
                    count: report.classes[0].count.clone(),
                }],
                total: report.total,
            }
        } else {
            let moves = corner_moves(Cell::new(grid.cols() - 1, grid.rows() - 1), grid.cols());
            Recombination::Product {
                factors: vec![
                    Factor {
                        label: "symmetric corner classes".to_owned(),
                        value: BigUint::from(report.classes.len()),
                    },
                    Factor {
                        label: format!("arrangements of {moves}"),
                        value: report.classes[0].count.clone(),
                    },
                ],
                total: report.total,
            }
        };
        return Ok(StepTrace {
            problem: spec.name.clone(),
            kind: spec.kind.as_str(),
            configuration,
            constraints,
            classes,
            recombination,
        });
    }

    let witnesses = problem::enumerate(spec, budget)?;
    let counts = witnesses.class_counts();
    let classes = counts
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let ClassLabel::Terminal(cell) = c.label else {
                unreachable!("word classes end on a cell")
            };
            ClassDescription {
                label: class_name(i),
                parameters: vec![("ends at".to_owned(), cell.to_string())],
            }
        })
        .collect();
    let terms = counts
        .iter()
        .enumerate()
        .map(|(i, c)| Term {
            label: class_name(i),
            factors: Vec::new(),
            count: c.count.clone(),
        })
        .collect();
    Ok(StepTrace {
        problem: spec.name.clone(),
        kind: spec.kind.as_str(),
        configuration,
        constraints,
        classes,
        recombination: Recombination::EnumerationOnly {
            terms,
            total: BigUint::from(witnesses.len()),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::DEFAULT_BUDGET;
    use crate::speclang::parse_spec;

    fn trace(src: &str) -> StepTrace {
        build_step_trace(&parse_spec(src).unwrap()[0], DEFAULT_BUDGET).unwrap()
    }

    fn n(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn sample_one_trace() {
        let t = trace("problem s1 { kind: squares cols: 5 rows: 5 variant: axis }");
        assert_eq!(t.constraints.len(), 2);
        assert_eq!(t.classes.len(), 4);
        assert_eq!(
            t.classes[1].parameters[1],
            ("rail pairs".to_owned(), "3".to_owned())
        );
        let Recombination::Addition { terms, total } = &t.recombination else {
            panic!()
        };
        let counts: Vec<&BigUint> = terms.iter().map(|t| &t.count).collect();
        assert_eq!(counts, vec![&n(16), &n(9), &n(4), &n(1)]);
        assert_eq!(terms[0].factors, vec![n(4), n(4)]);
        assert_eq!(*total, n(30));
        assert_eq!(t.recombination.rule(), "addition");
        assert!(t.recombination.is_consistent());
    }

    #[test]
    fn sample_two_trace() {
        let t = trace("problem s2 { kind: word-paths word: \"Open!\" layout: manhattan-rings adjacency: side }");
        assert_eq!(t.classes.len(), 4);
        assert_eq!(t.classes[3].parameters[1].1, "UURR");
        let Recombination::Product { factors, total } = &t.recombination else {
            panic!()
        };
        assert_eq!(
            factors.iter().map(|f| f.value.clone()).collect::<Vec<_>>(),
            vec![n(4), n(6)]
        );
        assert_eq!(factors[1].label, "arrangements of UURR");
        assert_eq!(*total, n(24));
        assert!(t.recombination.is_consistent());
    }

    #[test]
    fn single_symbol_trace_is_degenerate() {
        let t = trace(
            "problem x { kind: word-paths word: \"X\" layout: manhattan-rings adjacency: side }",
        );
        let Recombination::Addition { terms, total } = &t.recombination else {
            panic!()
        };
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].count, n(1));
        assert_eq!(*total, n(1));
    }

    #[test]
    fn oracle_only_trace() {
        let t = trace("problem s { kind: word-paths word: \"Open!\" layout: manhattan-rings adjacency: none }");
        assert_eq!(t.recombination.rule(), "enumeration-only");
        assert_eq!(*t.recombination.total(), n(1024));
        assert!(t.recombination.is_consistent());
    }

    #[test]
    fn tilted_trace_factors() {
        let t = trace("problem a { kind: squares cols: 5 rows: 5 variant: all }");
        let Recombination::Addition { terms, total } = &t.recombination else {
            panic!()
        };
        assert_eq!(terms[1].factors, vec![n(2), n(3), n(3)]);
        assert_eq!(*total, n(50));
    }

    #[test]
    fn traces_are_self_consistent_across_sweep() {
        for c in 1..=8 {
            for r in 1..=8 {
                for v in ["axis", "all"] {
                    let t = trace(&format!(
                        "problem p {{ kind: squares cols: {c} rows: {r} variant: {v} }}"
                    ));
                    assert!(t.recombination.is_consistent());
                }
            }
        }
        for word in ["a", "abc", "abcde", "abcdefg"] {
            for adj in ["side", "king", "none"] {
                let t = trace(&format!(
                    "problem p {{ kind: word-paths word: \"{word}\" layout: manhattan-rings adjacency: {adj} }}"
                ));
                assert!(t.recombination.is_consistent(), "{word} {adj}");
            }
        }
    }

    #[test]
    fn inconsistency_is_detected() {
        let bad = Recombination::Addition {
            terms: vec![Term {
                label: "A_1".into(),
                factors: vec![n(2), n(2)],
                count: n(5),
            }],
            total: n(5),
        };
        assert!(!bad.is_consistent());
        let bad = Recombination::Product {
            factors: vec![Factor {
                label: "x".into(),
                value: n(4),
            }],
            total: n(5),
        };
        assert!(!bad.is_consistent());
    }
}
