use configcount_core::verify::Perturbation;
use configcount_core::{
    build_step_trace, problem, verify_problem, ClassLabel, ProblemError, ProblemSpec,
    VerifyOptions, Witnesses,
};

use crate::{json, svg, text, Failure, OutputFormat};

fn problem_failure(spec: &ProblemSpec, e: ProblemError) -> Failure {
    Failure::usage(format!("problem {}: {e}", spec.name))
}

/// Applies `f` to every problem, optionally one thread per problem. Results
/// keep file order and the first failure in file order wins.
pub(crate) fn map_problems<T, F>(
    specs: &[ProblemSpec],
    parallel: bool,
    f: F,
) -> Result<Vec<T>, Failure>
where
    T: Send,
    F: Fn(&ProblemSpec) -> Result<T, Failure> + Sync,
{
    if !parallel || specs.len() < 2 {
        return specs.iter().map(&f).collect();
    }
    let f = &f;
    std::thread::scope(|scope| {
        let handles: Vec<_> = specs.iter().map(|s| scope.spawn(move || f(s))).collect();
        handles
            .into_iter()
            .map(|h| {
                h.join()
                    .unwrap_or_else(|_| Err(Failure::usage("worker thread panicked")))
            })
            .collect()
    })
}

pub(crate) fn join(chunks: &[String], format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => chunks.join("\n"),
        _ => chunks.concat(),
    }
}

pub(crate) fn count(
    spec: &ProblemSpec,
    format: OutputFormat,
    budget: u64,
) -> Result<String, Failure> {
    let report = problem::count(spec, budget).map_err(|e| problem_failure(spec, e))?;
    Ok(match format {
        OutputFormat::Json => json::count(spec, &report),
        _ => text::count(spec, &report),
    })
}

pub(crate) fn enumerate(
    spec: &ProblemSpec,
    format: OutputFormat,
    budget: u64,
    limit: Option<u64>,
) -> Result<String, Failure> {
    let witnesses = problem::enumerate(spec, budget).map_err(|e| problem_failure(spec, e))?;
    let shown = limit.map_or(witnesses.len(), |l| {
        witnesses
            .len()
            .min(usize::try_from(l).unwrap_or(usize::MAX))
    });
    Ok(match format {
        OutputFormat::Json => json::enumerate(spec, &witnesses, shown),
        _ => text::enumerate(&witnesses, shown),
    })
}

pub(crate) fn verify(
    spec: &ProblemSpec,
    format: OutputFormat,
    budget: u64,
    perturbation: Option<Perturbation>,
) -> Result<(bool, String), Failure> {
    let opts = VerifyOptions {
        budget,
        perturbation,
    };
    let report = verify_problem(spec, &opts).map_err(|e| problem_failure(spec, e))?;
    let rendered = match format {
        OutputFormat::Json => json::verify(&report),
        _ => text::verify(&report),
    };
    Ok((report.verdict.is_pass(), rendered))
}

pub(crate) fn explain(
    spec: &ProblemSpec,
    format: OutputFormat,
    budget: u64,
) -> Result<String, Failure> {
    let trace = build_step_trace(spec, budget).map_err(|e| problem_failure(spec, e))?;
    Ok(match format {
        OutputFormat::Json => json::explain(&trace),
        _ => text::explain(&trace),
    })
}

/// What a rendering emphasises.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Highlight {
    /// Every square of bounding-box size `k`.
    SizeClass(u32),
    /// The witness at this index in canonical order.
    Witness(usize),
}

impl Highlight {
    pub(crate) fn parse(s: &str) -> Result<Self, Failure> {
        let bad = || {
            Failure::usage(format!(
                "invalid highlight `{s}`: expected k=N or witness=N"
            ))
        };
        if let Some(k) = s.strip_prefix("k=") {
            return k.parse().map(Highlight::SizeClass).map_err(|_| bad());
        }
        let index = s.strip_prefix("witness=").unwrap_or(s);
        index.parse().map(Highlight::Witness).map_err(|_| bad())
    }
}

pub(crate) fn render(
    spec: &ProblemSpec,
    budget: u64,
    highlight: Option<Highlight>,
    cell_size: u32,
) -> Result<String, Failure> {
    let witnesses = problem::enumerate(spec, budget).map_err(|e| problem_failure(spec, e))?;
    match highlight {
        Some(Highlight::Witness(i)) if i >= witnesses.len() => {
            return Err(Failure::usage(format!(
                "highlight witness {i} out of range: problem {} has {} witnesses",
                spec.name,
                witnesses.len()
            )));
        }
        Some(Highlight::SizeClass(k)) => {
            if !matches!(witnesses, Witnesses::Squares(_)) {
                return Err(Failure::usage(
                    "size-class highlights only apply to squares problems",
                ));
            }
            let present =
                (0..witnesses.len()).any(|i| witnesses.label(i) == Some(ClassLabel::Size(k)));
            if !present {
                return Err(Failure::usage(format!(
                    "highlight k={k} out of range: no squares of that size"
                )));
            }
        }
        _ => {}
    }
    let options = svg::RenderOptions {
        cell_size,
        highlight,
    };
    Ok(match &witnesses {
        Witnesses::Squares(squares) => {
            let grid = problem::lattice_grid(spec)
                .map_err(|e| problem_failure(spec, e))?
                .expect("squares problem has a lattice grid");
            svg::render_squares(&grid, squares, &options)
        }
        Witnesses::Paths(paths) => {
            let grid = problem::letter_grid(spec)
                .map_err(|e| problem_failure(spec, e))?
                .expect("word problem has a letter grid");
            svg::render_letters(&grid, paths, &options)
        }
    })
}
