//! Count reports shared by every problem family.

use std::fmt;

use num_bigint::BigUint;

use crate::wordgrid::Cell;

/// What a class of witnesses is keyed by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassLabel {
    /// Squares with bounding-box size `k`.
    Size(u32),
    /// Word paths ending on this cell.
    Terminal(Cell),
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::Size(k) => write!(f, "k={k}"),
            ClassLabel::Terminal(c) => write!(f, "end={c}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCount {
    pub label: ClassLabel,
    pub count: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CountMethod {
    ClosedForm { formula: String },
    Enumeration,
}

/// A total together with the disjoint classes that make it up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub total: BigUint,
    pub classes: Vec<ClassCount>,
    pub method: CountMethod,
}

impl CountReport {
    pub fn class_sum(&self) -> BigUint {
        self.classes.iter().map(|c| &c.count).sum()
    }

    pub fn class(&self, label: ClassLabel) -> Option<&BigUint> {
        self.classes
            .iter()
            .find(|c| c.label == label)
            .map(|c| &c.count)
    }

    pub fn is_closed_form(&self) -> bool {
        matches!(self.method, CountMethod::ClosedForm { .. })
    }
}
