//! Auditing closed forms against enumeration.
//!
//! A report passes only when the closed-form total equals the number of
//! enumerated witnesses, every class agrees row by row, the classes
//! partition the enumerated universe exactly, and no witness occurs twice.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Signed;

use crate::problem::{self, closed_form_family, ClosedFormFamily, ProblemError, Witnesses};
use crate::report::{ClassLabel, CountReport};
use crate::speclang::ProblemSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionAudit {
    pub verdict: Verdict,
    pub findings: Vec<String>,
}

/// Checks that `classes` are pairwise disjoint and that, taken together,
/// they contain exactly the witnesses of `universe` with the same
/// multiplicities.
pub fn audit_partition<L, W>(classes: &BTreeMap<L, Vec<W>>, universe: &[W]) -> PartitionAudit
where
    L: Ord + fmt::Display,
    W: Ord + fmt::Display,
{
    let mut in_universe: BTreeMap<&W, usize> = BTreeMap::new();
    for w in universe {
        *in_universe.entry(w).or_default() += 1;
    }
    let mut in_classes: BTreeMap<&W, Vec<&L>> = BTreeMap::new();
    for (label, members) in classes {
        for w in members {
            in_classes.entry(w).or_default().push(label);
        }
    }
    let mut findings = Vec::new();
    let witnesses: BTreeSet<&W> = in_universe
        .keys()
        .chain(in_classes.keys())
        .copied()
        .collect();
    for w in witnesses {
        let expected = in_universe.get(w).copied().unwrap_or(0);
        let labels = in_classes.get(w).map(Vec::as_slice).unwrap_or(&[]);
        let distinct: BTreeSet<&&L> = labels.iter().collect();
        if distinct.len() > 1 {
            let names: Vec<String> = distinct.iter().map(|l| l.to_string()).collect();
            findings.push(format!(
                "witness {w} appears in classes {}",
                names.join(", ")
            ));
        } else if labels.is_empty() {
            findings.push(format!("witness {w} is missing from every class"));
        } else if expected == 0 {
            findings.push(format!(
                "witness {w} in class {} is not in the universe",
                labels[0]
            ));
        } else if labels.len() != expected {
            findings.push(format!(
                "witness {w} appears {} times in class {} but {expected} times in the universe",
                labels.len(),
                labels[0]
            ));
        }
    }
    let verdict = if findings.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    PartitionAudit { verdict, findings }
}

/// Shifts the first class of one closed form, for checking that the harness
/// notices a wrong formula. Not reachable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Perturbation {
    pub family: ClosedFormFamily,
    pub delta: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub budget: u64,
    pub perturbation: Option<Perturbation>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            budget: problem::DEFAULT_BUDGET,
            perturbation: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionRow {
    pub label: ClassLabel,
    /// `None` when the problem has no closed form.
    pub expected: Option<BigUint>,
    pub observed: BigUint,
}

impl PartitionRow {
    pub fn matches(&self) -> bool {
        self.expected.as_ref().is_none_or(|e| *e == self.observed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub problem: String,
    pub family: Option<ClosedFormFamily>,
    pub closed_form_total: Option<BigUint>,
    pub oracle_total: BigUint,
    pub verdict: Verdict,
    pub partition_audit: Vec<PartitionRow>,
    /// Number of enumerated witnesses that repeat an earlier one.
    pub distinctness_audit: usize,
    pub notes: Vec<String>,
}

fn shift(value: &BigUint, delta: i64) -> BigUint {
    let shifted = BigInt::from(value.clone()) + delta;
    if shifted.is_negative() {
        BigUint::default()
    } else {
        shifted.magnitude().clone()
    }
}

fn perturb(report: &mut CountReport, delta: i64) {
    match report.classes.first_mut() {
        Some(first) => {
            first.count = shift(&first.count, delta);
            report.total = report.class_sum();
        }
        None => report.total = shift(&report.total, delta),
    }
}

fn duplicates<T: Ord>(mut keys: Vec<T>) -> usize {
    keys.sort();
    keys.windows(2).filter(|w| w[0] == w[1]).count()
}

fn classify(witnesses: &Witnesses) -> (BTreeMap<ClassLabel, Vec<String>>, Vec<String>) {
    let universe: Vec<String> = match witnesses {
        Witnesses::Squares(v) => v.iter().map(ToString::to_string).collect(),
        Witnesses::Paths(v) => v.iter().map(ToString::to_string).collect(),
    };
    let mut classes: BTreeMap<ClassLabel, Vec<String>> = BTreeMap::new();
    for (i, w) in universe.iter().enumerate() {
        if let Some(label) = witnesses.label(i) {
            classes.entry(label).or_default().push(w.clone());
        }
    }
    (classes, universe)
}

/// Runs the closed form and the enumeration oracle for `spec` and audits
/// them against each other.
pub fn verify_problem(
    spec: &ProblemSpec,
    opts: &VerifyOptions,
) -> Result<VerifyReport, ProblemError> {
    let family = closed_form_family(spec);
    let mut closed = problem::closed_form(spec)?;
    if let (Some(report), Some(p)) = (closed.as_mut(), opts.perturbation) {
        if Some(p.family) == family {
            perturb(report, p.delta);
        }
    }
    let witnesses = problem::enumerate(spec, opts.budget)?;
    let observed = witnesses.class_counts();
    let oracle_total = BigUint::from(witnesses.len());
    let mut notes = Vec::new();

    let distinctness_audit = match &witnesses {
        Witnesses::Squares(v) => duplicates(
            v.iter()
                .map(|s| {
                    let mut vs = s.vertices();
                    vs.sort();
                    vs
                })
                .collect(),
        ),
        Witnesses::Paths(v) => duplicates(v.iter().collect()),
    };
    if distinctness_audit > 0 {
        notes.push(format!("{distinctness_audit} duplicate witnesses"));
    }

    let (classes, universe) = classify(&witnesses);
    let partition = audit_partition(&classes, &universe);
    notes.extend(partition.findings.iter().cloned());

    let mut labels: BTreeSet<ClassLabel> = observed.iter().map(|c| c.label).collect();
    if let Some(report) = &closed {
        labels.extend(report.classes.iter().map(|c| c.label));
    }
    let partition_audit: Vec<PartitionRow> = labels
        .into_iter()
        .map(|label| {
            let observed = observed
                .iter()
                .find(|c| c.label == label)
                .map(|c| c.count.clone())
                .unwrap_or_default();
            let expected = closed
                .as_ref()
                .map(|r| r.class(label).cloned().unwrap_or_default());
            PartitionRow {
                label,
                expected,
                observed,
            }
        })
        .collect();
    for row in partition_audit.iter().filter(|r| !r.matches()) {
        notes.push(format!(
            "class {}: closed form {}, oracle {}",
            row.label,
            row.expected
                .as_ref()
                .expect("rows only mismatch against a closed form"),
            row.observed
        ));
    }

    let closed_form_total = closed.map(|r| r.total);
    match &closed_form_total {
        Some(total) if *total != oracle_total => {
            notes.push(format!("total: closed form {total}, oracle {oracle_total}"));
        }
        Some(_) => {}
        None => notes.push("no closed form registered; enumeration audits only".to_owned()),
    }

    let pass = closed_form_total
        .as_ref()
        .is_none_or(|t| *t == oracle_total)
        && partition_audit.iter().all(PartitionRow::matches)
        && distinctness_audit == 0
        && partition.verdict.is_pass();
    Ok(VerifyReport {
        problem: spec.name.clone(),
        family,
        closed_form_total,
        oracle_total,
        verdict: if pass { Verdict::Pass } else { Verdict::Fail },
        partition_audit,
        distinctness_audit,
        notes,
    })
}
