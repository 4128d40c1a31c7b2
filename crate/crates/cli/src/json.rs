//! JSON renderings, one compact object per problem per line. Counts are
//! decimal strings.

use configcount_core::trace::{Recombination, Term};
use configcount_core::{CountMethod, CountReport, ProblemSpec, StepTrace, VerifyReport, Witnesses};
use serde_json::{json, Value};

fn line(v: Value) -> String {
    let mut s = v.to_string();
    s.push('\n');
    s
}

pub(crate) fn count(spec: &ProblemSpec, report: &CountReport) -> String {
    let classes: Vec<Value> = report
        .classes
        .iter()
        .map(|c| json!({ "label": c.label.to_string(), "count": c.count.to_string() }))
        .collect();
    let method = match &report.method {
        CountMethod::ClosedForm { .. } => "closed-form",
        CountMethod::Enumeration => "enumeration",
    };
    line(json!({
        "problem": spec.name,
        "kind": spec.kind.as_str(),
        "method": method,
        "total": report.total.to_string(),
        "classes": classes,
    }))
}

pub(crate) fn enumerate(spec: &ProblemSpec, witnesses: &Witnesses, shown: usize) -> String {
    let items: Vec<Value> = match witnesses {
        Witnesses::Squares(v) => v
            .iter()
            .take(shown)
            .map(|s| json!({ "anchor": [s.anchor().x, s.anchor().y], "k": s.k(), "a": s.a() }))
            .collect(),
        Witnesses::Paths(v) => v
            .iter()
            .take(shown)
            .map(|p| Value::Array(p.cells.iter().map(|c| json!([c.x, c.y])).collect()))
            .collect(),
    };
    line(json!({
        "problem": spec.name,
        "kind": spec.kind.as_str(),
        "total": witnesses.len().to_string(),
        "witnesses": items,
        "omitted": (witnesses.len() - shown).to_string(),
    }))
}

pub(crate) fn verify(report: &VerifyReport) -> String {
    let classes: Vec<Value> = report
        .partition_audit
        .iter()
        .map(|r| {
            json!({
                "label": r.label.to_string(),
                "closed_form": r.expected.as_ref().map(ToString::to_string),
                "oracle": r.observed.to_string(),
            })
        })
        .collect();
    line(json!({
        "problem": report.problem,
        "verdict": report.verdict.to_string(),
        "closed_form_total": report.closed_form_total.as_ref().map(ToString::to_string),
        "oracle_total": report.oracle_total.to_string(),
        "duplicates": report.distinctness_audit.to_string(),
        "classes": classes,
        "notes": report.notes,
    }))
}

fn terms(terms: &[Term]) -> Vec<Value> {
    terms
        .iter()
        .map(|t| {
            json!({
                "label": t.label,
                "factors": t.factors.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "count": t.count.to_string(),
            })
        })
        .collect()
}

pub(crate) fn explain(trace: &StepTrace) -> String {
    let classes: Vec<Value> = trace
        .classes
        .iter()
        .map(|c| {
            let params: serde_json::Map<String, Value> = c
                .parameters
                .iter()
                .map(|(k, v)| (k.clone(), Value::String(v.clone())))
                .collect();
            json!({ "label": c.label, "parameters": params })
        })
        .collect();
    let step_iv = match &trace.recombination {
        Recombination::Addition { terms: t, total } => {
            json!({ "rule": "addition", "terms": terms(t), "total": total.to_string() })
        }
        Recombination::Product { factors, total } => {
            let factors: Vec<Value> = factors
                .iter()
                .map(|f| json!({ "label": f.label, "value": f.value.to_string() }))
                .collect();
            json!({ "rule": "product", "factors": factors, "total": total.to_string() })
        }
        Recombination::EnumerationOnly { terms: t, total } => {
            json!({ "rule": "enumeration-only", "terms": terms(t), "total": total.to_string() })
        }
    };
    line(json!({
        "problem": trace.problem,
        "kind": trace.kind,
        "step_i": { "object": trace.configuration.object, "universe": trace.configuration.universe },
        "step_ii": trace.constraints,
        "step_iii": classes,
        "step_iv": step_iv,
    }))
}
