//! Corpus runs with one verified report per instance.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::ClassProfile;
use crate::domination::{
    solve, Answer, DominationInstance, ReductionStep, SolveOptions, SolveOutcome,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::variants::{
    is_efficient, solve_connected_driver, solve_efficient, solve_roman, RomanOptions,
};
use crate::Mode;

use super::generate::{generate, grid};

/// Budget as a constant or `ceil(n/a)` / `floor(n/a)` with an offset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BudgetSpec {
    Fixed(usize),
    Ratio {
        ceil: bool,
        divisor: usize,
        offset: i64,
    },
}

impl BudgetSpec {
    /// Parses `7`, `ceil(n/3)`, `ceil(n/3)-1`, `floor(n/5)+2`.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("bad budget `{text}`"));
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if let Ok(k) = t.parse() {
            return Ok(Self::Fixed(k));
        }
        let (ceil, body) = if let Some(b) = t.strip_prefix("ceil(n/") {
            (true, b)
        } else if let Some(b) = t.strip_prefix("floor(n/") {
            (false, b)
        } else {
            return Err(bad());
        };
        let (divisor, tail) = body.split_once(')').ok_or_else(bad)?;
        let divisor: usize = divisor.parse().map_err(|_| bad())?;
        if divisor == 0 {
            return Err(bad());
        }
        let offset = if tail.is_empty() {
            0
        } else {
            tail.strip_prefix('+')
                .unwrap_or(tail)
                .parse()
                .map_err(|_| bad())?
        };
        Ok(Self::Ratio {
            ceil,
            divisor,
            offset,
        })
    }

    pub fn resolve(&self, n: usize) -> usize {
        match *self {
            Self::Fixed(k) => k,
            Self::Ratio {
                ceil,
                divisor,
                offset,
            } => {
                let base = if ceil {
                    n.div_ceil(divisor)
                } else {
                    n / divisor
                };
                (base as i64 + offset).max(0) as usize
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Solver {
    Domset,
    Connected,
    Efficient,
    Roman,
}

impl Solver {
    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "domset" => Ok(Self::Domset),
            "connected" => Ok(Self::Connected),
            "efficient" => Ok(Self::Efficient),
            "roman" => Ok(Self::Roman),
            _ => Err(Error::InvalidParameter(format!("unknown solver `{text}`"))),
        }
    }
}

/// Instances `family(n)` for every `n` in `sizes`.
#[derive(Clone, Debug)]
pub struct CorpusSpec {
    pub family: String,
    pub sizes: Vec<usize>,
    pub k: BudgetSpec,
    pub d: usize,
    pub seed: u64,
    pub solver: Solver,
}

/// Graph of the family with about `n` vertices; grids use the squarest
/// `rows × cols` with `rows * cols <= n`.
pub fn family_graph(family: &str, n: usize, seed: u64) -> Result<Graph> {
    match family {
        "star" => generate("star", &[n.saturating_sub(1)], seed),
        "grid" => {
            let rows = (1..=n).take_while(|r| r * r <= n).last().unwrap_or(1);
            Ok(grid(rows, n / rows))
        }
        "random_max_deg" => generate(family, &[n, 3], seed),
        "path" | "cycle" | "random_tree" => generate(family, &[n], seed),
        _ => Err(Error::UnknownFamily(family.to_string())),
    }
}

/// One corpus row.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub instance: String,
    pub family: String,
    pub solver: Solver,
    pub mode: Mode,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    /// `yes`, `no`, `inconclusive` or `error`.
    pub answer: String,
    pub witness: Option<Vec<usize>>,
    pub trace: Vec<ReductionStep>,
    pub max_bottleneck: usize,
    pub wall_ms: f64,
    pub error: Option<String>,
}

/// Runs a corpus in parallel; rows come back in corpus order. Every Yes
/// certificate is re-verified, and a failing one turns the row into an
/// error.
pub fn run_corpus(
    spec: &CorpusSpec,
    profile: &ClassProfile,
    opts: &SolveOptions,
) -> Vec<RunReport> {
    spec.sizes
        .par_iter()
        .enumerate()
        .map(|(i, &n)| run_one(spec, i, n, profile, opts))
        .collect()
}

fn run_one(
    spec: &CorpusSpec,
    index: usize,
    n: usize,
    profile: &ClassProfile,
    opts: &SolveOptions,
) -> RunReport {
    let k = spec.k.resolve(n);
    let seed = spec.seed.wrapping_add(index as u64);
    let mut report = RunReport {
        instance: format!("{}-{n}-{index}", spec.family),
        family: spec.family.clone(),
        solver: spec.solver,
        mode: opts.mode,
        n,
        k,
        d: spec.d,
        answer: "error".into(),
        witness: None,
        trace: Vec::new(),
        max_bottleneck: 0,
        wall_ms: 0.0,
        error: None,
    };
    let graph = match family_graph(&spec.family, n, seed) {
        Ok(g) => g,
        Err(e) => {
            report.error = Some(e.to_string());
            return report;
        }
    };
    report.n = graph.n();
    let start = Instant::now();
    let result = run_solver(spec.solver, &graph, k, spec.d, profile, opts);
    report.wall_ms = start.elapsed().as_secs_f64() * 1e3;
    match result {
        Ok((answer, trace)) => {
            report.max_bottleneck = trace.iter().map(|s| s.bottleneck.len()).max().unwrap_or(0);
            report.trace = trace;
            report.answer = answer.label().into();
            report.witness = answer.witness().cloned();
        }
        Err(e) => report.error = Some(e.to_string()),
    }
    report
}

type Run = (Answer<Vec<usize>>, Vec<ReductionStep>);

fn run_solver(
    solver: Solver,
    g: &Graph,
    k: usize,
    d: usize,
    profile: &ClassProfile,
    opts: &SolveOptions,
) -> Result<Run> {
    let inst = DominationInstance::new(g, k, d);
    let all = g.vertices();
    let unpack = |out: SolveOutcome| -> Run { (out.answer.map(VertexSet::into_vec), out.trace) };
    let (answer, trace) = match solver {
        Solver::Domset => unpack(solve(&inst, profile, opts)?),
        Solver::Connected => unpack(solve_connected_driver(&inst, profile, opts)?),
        Solver::Efficient => unpack(solve_efficient(g, k, profile, opts)?),
        Solver::Roman => {
            let ropts = RomanOptions {
                mode: opts.mode,
                ..RomanOptions::default()
            };
            let answer = solve_roman(g, k, profile, &ropts)?;
            if let Some(l) = answer.witness() {
                if !l.is_valid(g) || l.weight() > k {
                    return Err(Error::Precondition(
                        "Roman labeling failed re-verification".into(),
                    ));
                }
            }
            (
                answer.map(|l| l.labels().iter().map(|&x| x as usize).collect()),
                Vec::new(),
            )
        }
    };
    if solver != Solver::Roman {
        if let Some(x) = answer.witness() {
            let x: VertexSet = x.iter().copied().collect();
            let ok = x.len() <= k
                && g.dominates(&x, &all, d)?
                && match solver {
                    Solver::Connected => g.induces_connected(&x),
                    Solver::Efficient => x.len() == k && is_efficient(g, &x),
                    _ => true,
                };
            if !ok {
                return Err(Error::Precondition("witness failed re-verification".into()));
            }
        }
    }
    Ok((answer, trace))
}

/// CSV with columns `family,n,k,d,answer,reductions,max|S|,wall_ms`; the
/// header is written even for an empty corpus.
pub fn write_csv<W: std::io::Write>(reports: &[RunReport], out: W) -> Result<()> {
    let io = |e: csv::Error| Error::InvalidParameter(format!("csv output: {e}"));
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "family",
        "n",
        "k",
        "d",
        "answer",
        "reductions",
        "max|S|",
        "wall_ms",
    ])
    .map_err(io)?;
    for r in reports {
        w.write_record([
            r.family.clone(),
            r.n.to_string(),
            r.k.to_string(),
            r.d.to_string(),
            r.answer.clone(),
            r.trace.len().to_string(),
            r.max_bottleneck.to_string(),
            format!("{:.3}", r.wall_ms),
        ])
        .map_err(io)?;
    }
    w.flush()
        .map_err(|e| Error::InvalidParameter(format!("csv output: {e}")))?;
    Ok(())
}
