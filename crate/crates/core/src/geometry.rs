//! Integer point grids and canonical squares on them.
//!
//! Coordinates are 0-based with `y` growing upward. A square is encoded by
//! the bottom-left corner of its axis-aligned bounding box, the bounding-box
//! size `k` and a tilt offset `0 <= a < k`; `a == 0` is the axis-aligned case.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("grid must have at least one column and one row, got {cols}x{rows}")]
    EmptyGrid { cols: u32, rows: u32 },
    #[error("square needs k >= 1 and 0 <= a < k, got k={k} a={a}")]
    InvalidSquare { k: u32, a: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// A full rectangle of `cols * rows` lattice points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LatticeGrid {
    cols: u32,
    rows: u32,
}

impl LatticeGrid {
    pub fn new(cols: u32, rows: u32) -> Result<Self, GeometryError> {
        if cols == 0 || rows == 0 {
            return Err(GeometryError::EmptyGrid { cols, rows });
        }
        Ok(Self { cols, rows })
    }

    pub fn cols(&self) -> u32 {
        self.cols
    }

    pub fn rows(&self) -> u32 {
        self.rows
    }

    pub fn point_count(&self) -> u64 {
        u64::from(self.cols) * u64::from(self.rows)
    }

    /// Largest bounding-box size that fits, zero for a single row or column.
    pub fn max_square_size(&self) -> u32 {
        self.cols.min(self.rows) - 1
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        grid_contains(self, p)
    }

    /// Points in row-major order, bottom row first.
    pub fn points(&self) -> impl Iterator<Item = LatticePoint> + '_ {
        (0..i64::from(self.rows))
            .flat_map(move |y| (0..i64::from(self.cols)).map(move |x| LatticePoint::new(x, y)))
    }
}

pub fn grid_contains(grid: &LatticeGrid, p: LatticePoint) -> bool {
    (0..i64::from(grid.cols)).contains(&p.x) && (0..i64::from(grid.rows)).contains(&p.y)
}

/// A square with lattice vertices.
///
/// Ordering is by `(k, a, anchor.y, anchor.x)`, which is the canonical
/// enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Square {
    anchor: LatticePoint,
    k: u32,
    a: u32,
}

impl Square {
    pub fn new(anchor: LatticePoint, k: u32, a: u32) -> Result<Self, GeometryError> {
        if k == 0 || a >= k {
            return Err(GeometryError::InvalidSquare { k, a });
        }
        Ok(Self { anchor, k, a })
    }

    pub fn axis(anchor: LatticePoint, k: u32) -> Result<Self, GeometryError> {
        Self::new(anchor, k, 0)
    }

    pub fn anchor(&self) -> LatticePoint {
        self.anchor
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn is_axis_aligned(&self) -> bool {
        self.a == 0
    }

    pub fn vertices(&self) -> [LatticePoint; 4] {
        square_vertices(self)
    }

    /// `a^2 + (k - a)^2`.
    pub fn side_length_squared(&self) -> u64 {
        let a = u64::from(self.a);
        let b = u64::from(self.k - self.a);
        a * a + b * b
    }
}

impl Ord for Square {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.k, self.a, self.anchor.y, self.anchor.x).cmp(&(
            other.k,
            other.a,
            other.anchor.y,
            other.anchor.x,
        ))
    }
}

impl PartialOrd for Square {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} k={} a={}", self.anchor, self.k, self.a)
    }
}

/// Vertices in counter-clockwise order, starting on the bottom edge of the
/// bounding box.
pub fn square_vertices(s: &Square) -> [LatticePoint; 4] {
    let LatticePoint { x, y } = s.anchor;
    let k = i64::from(s.k);
    let a = i64::from(s.a);
    [
        LatticePoint::new(x + a, y),
        LatticePoint::new(x + k, y + a),
        LatticePoint::new(x + k - a, y + k),
        LatticePoint::new(x, y + k - a),
    ]
}

pub fn square_in_grid(s: &Square, g: &LatticeGrid) -> bool {
    square_vertices(s).iter().all(|&p| grid_contains(g, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    fn sq(x: i64, y: i64, k: u32, a: u32) -> Square {
        Square::new(p(x, y), k, a).unwrap()
    }

    #[test]
    fn containment() {
        let g = LatticeGrid::new(5, 5).unwrap();
        assert!(grid_contains(&g, p(0, 0)));
        assert!(!grid_contains(&g, p(5, 0)));
        assert!(grid_contains(&g, p(4, 4)));
        assert!(!grid_contains(&g, p(-1, 2)));
        assert!(!grid_contains(&g, p(2, 5)));
    }

    #[test]
    fn empty_grids_are_rejected() {
        assert_eq!(
            LatticeGrid::new(0, 3),
            Err(GeometryError::EmptyGrid { cols: 0, rows: 3 })
        );
        assert!(LatticeGrid::new(1, 1).is_ok());
    }

    #[test]
    fn invalid_squares_are_rejected() {
        assert!(Square::new(p(0, 0), 0, 0).is_err());
        assert!(Square::new(p(0, 0), 2, 2).is_err());
    }

    #[test]
    fn vertex_examples() {
        assert_eq!(
            sq(0, 0, 1, 0).vertices(),
            [p(0, 0), p(1, 0), p(1, 1), p(0, 1)]
        );
        assert_eq!(
            sq(0, 0, 2, 1).vertices(),
            [p(1, 0), p(2, 1), p(1, 2), p(0, 1)]
        );
        assert_eq!(
            sq(1, 1, 3, 0).vertices(),
            [p(1, 1), p(4, 1), p(4, 4), p(1, 4)]
        );
    }

    #[test]
    fn in_grid_examples() {
        let g5 = LatticeGrid::new(5, 5).unwrap();
        assert!(square_in_grid(&sq(0, 0, 4, 0), &g5));
        assert!(!square_in_grid(&sq(1, 0, 4, 0), &g5));
        let g3 = LatticeGrid::new(3, 3).unwrap();
        assert!(square_in_grid(&sq(0, 0, 2, 1), &g3));
    }

    #[test]
    fn sides_are_equal_and_perpendicular() {
        for k in 1..=6 {
            for a in 0..k {
                let s = sq(0, 0, k, a);
                let v = s.vertices();
                let sides: Vec<(i64, i64)> = (0..4)
                    .map(|i| (v[(i + 1) % 4].x - v[i].x, v[(i + 1) % 4].y - v[i].y))
                    .collect();
                for i in 0..4 {
                    let (dx, dy) = sides[i];
                    assert_eq!((dx * dx + dy * dy) as u64, s.side_length_squared());
                    let (ex, ey) = sides[(i + 1) % 4];
                    assert_eq!(dx * ex + dy * ey, 0);
                    let axis_parallel = dx == 0 || dy == 0;
                    assert_eq!(axis_parallel, s.is_axis_aligned(), "k={k} a={a}");
                }
            }
        }
    }

    #[test]
    fn encoding_is_injective_on_small_grids() {
        for cols in 1..=6 {
            for rows in 1..=6 {
                let g = LatticeGrid::new(cols, rows).unwrap();
                let mut seen = BTreeSet::new();
                let mut count = 0;
                for k in 1..=6u32 {
                    for a in 0..k {
                        for anchor in g.points() {
                            let s = Square::new(anchor, k, a).unwrap();
                            if square_in_grid(&s, &g) {
                                let mut vs = s.vertices();
                                vs.sort();
                                seen.insert(vs);
                                count += 1;
                            }
                        }
                    }
                }
                assert_eq!(seen.len(), count, "{cols}x{rows}");
            }
        }
    }

    #[test]
    fn canonical_order() {
        let mut v = vec![
            sq(1, 0, 2, 0),
            sq(0, 0, 2, 1),
            sq(0, 1, 1, 0),
            sq(3, 0, 1, 0),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                sq(3, 0, 1, 0),
                sq(0, 1, 1, 0),
                sq(1, 0, 2, 0),
                sq(0, 0, 2, 1)
            ]
        );
    }
}
