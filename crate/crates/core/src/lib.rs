//! Exact counting of lattice squares and grid word readings.
//!
//! Each problem family comes with a closed-form counter and an independent
//! brute-force enumerator. The [`verify`] module audits one against the
//! other, including the class decomposition the closed form is built from,
//! and [`trace`] lays that decomposition out step by step.
//!
//! ```
//! use configcount_core::squares::count_axis_squares;
//!
//! let b = count_axis_squares(5, 5);
//! assert_eq!(b.total.to_string(), "30");
//! ```

pub mod counting;
pub mod geometry;
pub mod problem;
pub mod report;
pub mod speclang;
pub mod squares;
pub mod trace;
pub mod verify;
pub mod wordgrid;

pub use geometry::{LatticeGrid, LatticePoint, Square};
pub use num_bigint::BigUint;
pub use problem::{ClosedFormFamily, ProblemError, Witnesses, DEFAULT_BUDGET};
pub use report::{ClassCount, ClassLabel, CountMethod, CountReport};
pub use speclang::{parse_spec, print_spec, Layout, ParseError, ProblemKind, ProblemSpec};
pub use squares::SquareVariant;
pub use trace::{build_step_trace, StepTrace};
pub use verify::{verify_problem, Verdict, VerifyOptions, VerifyReport};
pub use wordgrid::{AdjacencyRule, Cell, LetterGrid, PathWitness, Word};
