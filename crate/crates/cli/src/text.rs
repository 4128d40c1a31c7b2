use std::fmt::Write as _;

use configcount_core::trace::Recombination;
use configcount_core::{
    CountMethod, CountReport, ProblemKind, ProblemSpec, StepTrace, VerifyReport, Witnesses,
};

pub(crate) fn describe(spec: &ProblemSpec) -> String {
    match &spec.kind {
        ProblemKind::Squares {
            cols,
            rows,
            variant,
        } => {
            format!(
                "{}: squares {cols}x{rows} variant={}",
                spec.name,
                variant.as_str()
            )
        }
        ProblemKind::WordPaths {
            word,
            layout,
            adjacency,
            distinct_cells,
        } => format!(
            "{}: word-paths \"{word}\" layout={} adjacency={} distinct-cells={distinct_cells}",
            spec.name,
            layout.as_str(),
            adjacency.as_str()
        ),
    }
}

pub(crate) fn count(spec: &ProblemSpec, report: &CountReport) -> String {
    let mut out = String::new();
    writeln!(out, "{}", describe(spec)).unwrap();
    match &report.method {
        CountMethod::ClosedForm { formula } => {
            writeln!(out, "method closed form: {formula}").unwrap()
        }
        CountMethod::Enumeration => writeln!(out, "method enumeration").unwrap(),
    }
    writeln!(out, "total {}", report.total).unwrap();
    for c in &report.classes {
        writeln!(out, "  {} {}", c.label, c.count).unwrap();
    }
    out
}

pub(crate) fn enumerate(witnesses: &Witnesses, shown: usize) -> String {
    let mut out = String::new();
    match witnesses {
        Witnesses::Squares(v) => v
            .iter()
            .take(shown)
            .for_each(|s| writeln!(out, "{s}").unwrap()),
        Witnesses::Paths(v) => v
            .iter()
            .take(shown)
            .for_each(|p| writeln!(out, "{p}").unwrap()),
    }
    let omitted = witnesses.len() - shown;
    if omitted > 0 {
        writeln!(out, "... {omitted} more").unwrap();
    }
    out
}

pub(crate) fn verify(report: &VerifyReport) -> String {
    let mut out = String::new();
    writeln!(out, "{}: {}", report.problem, report.verdict).unwrap();
    match &report.closed_form_total {
        Some(t) => writeln!(
            out,
            "  total: closed form {t}, oracle {}",
            report.oracle_total
        )
        .unwrap(),
        None => writeln!(
            out,
            "  total: oracle {} (no closed form)",
            report.oracle_total
        )
        .unwrap(),
    }
    writeln!(out, "  duplicates: {}", report.distinctness_audit).unwrap();
    let label_width = report
        .partition_audit
        .iter()
        .map(|r| r.label.to_string().len())
        .chain([5])
        .max()
        .unwrap();
    writeln!(
        out,
        "  {:<label_width$}  {:>12}  {:>12}",
        "class", "closed-form", "oracle"
    )
    .unwrap();
    for row in &report.partition_audit {
        let expected = row
            .expected
            .as_ref()
            .map_or("-".to_owned(), ToString::to_string);
        let mark = if row.matches() { "" } else { "  MISMATCH" };
        writeln!(
            out,
            "  {:<label_width$}  {:>12}  {:>12}{mark}",
            row.label.to_string(),
            expected,
            row.observed
        )
        .unwrap();
    }
    for note in &report.notes {
        writeln!(out, "  note: {note}").unwrap();
    }
    out
}

pub(crate) fn explain(trace: &StepTrace) -> String {
    let mut out = String::new();
    writeln!(out, "{} ({})", trace.problem, trace.kind).unwrap();
    writeln!(out, "Step i) configuration").unwrap();
    writeln!(out, "  objects: {}", trace.configuration.object).unwrap();
    writeln!(out, "  universe: {}", trace.configuration.universe).unwrap();
    writeln!(out, "Step ii) constraints").unwrap();
    for c in &trace.constraints {
        writeln!(out, "  - {c}").unwrap();
    }
    writeln!(out, "Step iii) classes").unwrap();
    if trace.classes.is_empty() {
        writeln!(out, "  (none)").unwrap();
    }
    for class in &trace.classes {
        let params: Vec<String> = class
            .parameters
            .iter()
            .map(|(k, v)| format!("{k} {v}"))
            .collect();
        writeln!(out, "  {}: {}", class.label, params.join(", ")).unwrap();
    }
    writeln!(out, "Step iv) counting").unwrap();
    match &trace.recombination {
        Recombination::Addition { terms, total } => {
            for t in terms.iter().filter(|t| !t.factors.is_empty()) {
                let factors: Vec<String> = t.factors.iter().map(ToString::to_string).collect();
                writeln!(
                    out,
                    "  |{}| = {} = {}",
                    t.label,
                    factors.join(" × "),
                    t.count
                )
                .unwrap();
            }
            writeln!(out, "  rule: addition").unwrap();
            let sum = if terms.is_empty() {
                "0".to_owned()
            } else {
                terms
                    .iter()
                    .map(|t| t.count.to_string())
                    .collect::<Vec<_>>()
                    .join(" + ")
            };
            writeln!(out, "  |A| = {sum} = {total}").unwrap();
        }
        Recombination::Product { factors, total } => {
            for f in factors {
                writeln!(out, "  {}: {}", f.label, f.value).unwrap();
            }
            writeln!(out, "  rule: product").unwrap();
            let product: Vec<String> = factors.iter().map(|f| f.value.to_string()).collect();
            writeln!(out, "  |A| = {} = {total}", product.join(" × ")).unwrap();
        }
        Recombination::EnumerationOnly { terms, total } => {
            writeln!(out, "  enumeration only, no closed form").unwrap();
            for t in terms {
                writeln!(out, "  |{}| = {}", t.label, t.count).unwrap();
            }
            writeln!(out, "  |A| = {total}").unwrap();
        }
    }
    out
}
