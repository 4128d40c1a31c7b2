//! Counting and enumerating squares on lattice grids.
//!
//! Squares of bounding-box size `k` are split into classes `A_k`. An
//! axis-aligned class is counted by sliding a pair of horizontal rails `k`
//! units apart down the grid: there are `rows - k` placements of the rails
//! and `cols - k` squares between each placement. Allowing tilt multiplies
//! each bounding box by its `k` possible offsets.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use thiserror::Error;

use crate::geometry::{square_in_grid, LatticeGrid, LatticePoint, Square};
use crate::report::{ClassCount, ClassLabel, CountMethod, CountReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SquaresError {
    #[error("no squares of this size fit: k={k} on a {cols}x{rows} grid")]
    SizeDoesNotFit { k: u32, cols: u32, rows: u32 },
}

/// Which squares a problem counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SquareVariant {
    /// Sides parallel to the coordinate axes.
    Axis,
    /// Any square whose four vertices are grid points.
    All,
}

impl SquareVariant {
    pub fn as_str(&self) -> &'static str {
        match self {
            SquareVariant::Axis => "axis",
            SquareVariant::All => "all",
        }
    }
}

/// Per-size class counts `|A_k|` and their sum.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SizeClassBreakdown {
    pub per_k: BTreeMap<u32, BigUint>,
    pub total: BigUint,
}

impl SizeClassBreakdown {
    fn from_classes(per_k: BTreeMap<u32, BigUint>) -> Self {
        let total = per_k.values().sum();
        Self { per_k, total }
    }

    pub fn into_report(self, formula: &str) -> CountReport {
        CountReport {
            total: self.total,
            classes: self
                .per_k
                .into_iter()
                .map(|(k, count)| ClassCount {
                    label: ClassLabel::Size(k),
                    count,
                })
                .collect(),
            method: CountMethod::ClosedForm {
                formula: formula.to_owned(),
            },
        }
    }
}

pub const AXIS_FORMULA: &str = "sum over k of (cols - k)(rows - k)";
pub const ALL_FORMULA: &str = "sum over k of k (cols - k)(rows - k)";

fn max_size(cols: u32, rows: u32) -> u32 {
    cols.min(rows).saturating_sub(1)
}

fn axis_class(cols: u32, rows: u32, k: u32) -> u64 {
    u64::from(cols - k) * u64::from(rows - k)
}

pub fn count_axis_squares(cols: u32, rows: u32) -> SizeClassBreakdown {
    SizeClassBreakdown::from_classes(
        (1..=max_size(cols, rows))
            .map(|k| (k, BigUint::from(axis_class(cols, rows, k))))
            .collect(),
    )
}

/// Counts every lattice square, keyed by bounding-box size (not side length).
pub fn count_all_squares(cols: u32, rows: u32) -> SizeClassBreakdown {
    SizeClassBreakdown::from_classes(
        (1..=max_size(cols, rows))
            .map(|k| (k, BigUint::from(axis_class(cols, rows, k)) * k))
            .collect(),
    )
}

pub fn count_squares(cols: u32, rows: u32, variant: SquareVariant) -> SizeClassBreakdown {
    match variant {
        SquareVariant::Axis => count_axis_squares(cols, rows),
        SquareVariant::All => count_all_squares(cols, rows),
    }
}

/// Horizontal-rail view of the axis-aligned class `A_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RailReport {
    pub k: u32,
    pub rail_pairs: u64,
    pub per_pair: u64,
    pub total: BigUint,
}

pub fn rail_decomposition(g: &LatticeGrid, k: u32) -> Result<RailReport, SquaresError> {
    if k == 0 || k > g.max_square_size() {
        return Err(SquaresError::SizeDoesNotFit {
            k,
            cols: g.cols(),
            rows: g.rows(),
        });
    }
    let rail_pairs = u64::from(g.rows() - k);
    let per_pair = u64::from(g.cols() - k);
    Ok(RailReport {
        k,
        rail_pairs,
        per_pair,
        total: BigUint::from(rail_pairs) * per_pair,
    })
}

fn push_class(g: &LatticeGrid, k: u32, a: u32, out: &mut Vec<Square>) {
    for y in 0..=i64::from(g.rows() - k - 1) {
        for x in 0..=i64::from(g.cols() - k - 1) {
            let s = Square::new(LatticePoint::new(x, y), k, a).expect("0 <= a < k");
            debug_assert!(square_in_grid(&s, g));
            out.push(s);
        }
    }
}

/// Axis-aligned squares in `(k, anchor.y, anchor.x)` order.
pub fn enumerate_axis_squares(g: &LatticeGrid) -> Vec<Square> {
    let mut out = Vec::new();
    for k in 1..=g.max_square_size() {
        push_class(g, k, 0, &mut out);
    }
    out
}

/// All lattice squares in `(k, a, anchor.y, anchor.x)` order.
pub fn enumerate_all_squares(g: &LatticeGrid) -> Vec<Square> {
    let mut out = Vec::new();
    for k in 1..=g.max_square_size() {
        for a in 0..k {
            push_class(g, k, a, &mut out);
        }
    }
    out
}

pub fn enumerate_squares(g: &LatticeGrid, variant: SquareVariant) -> Vec<Square> {
    match variant {
        SquareVariant::Axis => enumerate_axis_squares(g),
        SquareVariant::All => enumerate_all_squares(g),
    }
}

/// Number of squares the enumerator would produce, stopping early once the
/// running count passes `cap`.
pub fn enumeration_cost(g: &LatticeGrid, variant: SquareVariant, cap: u64) -> u64 {
    let mut total: u64 = 0;
    for k in 1..=g.max_square_size() {
        let orientations = match variant {
            SquareVariant::Axis => 1,
            SquareVariant::All => u64::from(k),
        };
        total =
            total.saturating_add(axis_class(g.cols(), g.rows(), k).saturating_mul(orientations));
        if total > cap {
            break;
        }
    }
    total
}

/// Square counts found by testing every 4-point subset of the grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SubsetOracleCount {
    pub axis: u64,
    pub all: u64,
}

/// Naive reference count: tries all `C(cols * rows, 4)` point subsets and
/// keeps those whose four sides are equal and whose diagonals are equal.
pub fn subset_oracle(g: &LatticeGrid) -> SubsetOracleCount {
    let points: Vec<(i64, i64)> = g.points().map(|p| (p.x, p.y)).collect();
    let n = points.len();
    let mut count = SubsetOracleCount::default();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    let quad = [points[i], points[j], points[k], points[l]];
                    if is_square(&quad) {
                        count.all += 1;
                        if is_axis_parallel(&quad) {
                            count.axis += 1;
                        }
                    }
                }
            }
        }
    }
    count
}

fn dist2(p: (i64, i64), q: (i64, i64)) -> i64 {
    (p.0 - q.0).pow(2) + (p.1 - q.1).pow(2)
}

fn is_square(quad: &[(i64, i64); 4]) -> bool {
    let mut d = [
        dist2(quad[0], quad[1]),
        dist2(quad[0], quad[2]),
        dist2(quad[0], quad[3]),
        dist2(quad[1], quad[2]),
        dist2(quad[1], quad[3]),
        dist2(quad[2], quad[3]),
    ];
    d.sort_unstable();
    d[0] > 0 && d[0] == d[3] && d[4] == d[5] && d[4] == 2 * d[0]
}

fn is_axis_parallel(quad: &[(i64, i64); 4]) -> bool {
    let mut xs: Vec<i64> = quad.iter().map(|p| p.0).collect();
    let mut ys: Vec<i64> = quad.iter().map(|p| p.1).collect();
    xs.sort_unstable();
    xs.dedup();
    ys.sort_unstable();
    ys.dedup();
    xs.len() == 2 && ys.len() == 2
}
