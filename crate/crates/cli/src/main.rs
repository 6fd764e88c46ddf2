//! `sparse-domset` command-line front end.
//!
//! Exit codes: 0 yes or success, 1 no, 2 inconclusive, 64 usage, 65 input.

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use sparse_domset::harness::{
    emit, generate, parse_instance, run_corpus, write_csv, BudgetSpec, CorpusSpec, Instance, Solver,
};
use sparse_domset::oracle::{brute_force_connected, brute_force_efficient, brute_force_roman};
use sparse_domset::variants::{
    solve_connected_driver, solve_d_connected_driver, solve_efficient, solve_roman, RomanOptions,
};
use sparse_domset::{
    brute_force_min_domset, brute_force_scattered, find_scattered, reduce_step,
    shallow_clique_minor, solve, Answer, ClassProfile, DominationInstance, Error, Mode,
    ScatterError, ScatterOptions, ScatteredWitness, SolveOptions, SolveOutcome, VertexSet,
};

const EXIT_YES: u8 = 0;
const EXIT_NO: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_INPUT: u8 = 65;

const GUARD_ENV: &str = "SPARSE_DOMSET_GUARD";
const DEFAULT_GUARD: usize = 16;

#[derive(Parser, Debug)]
#[command(
    name = "sparse-domset",
    version,
    about = "Distance-d domination on sparse graph classes"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Algorithm reading: `paper` or `practical`.
    #[arg(long, global = true, default_value = "practical")]
    mode: Mode,
    /// Class profile: `forest`, `planar`, `degree:<D>` or `clique:<h>`.
    #[arg(long, global = true, default_value = "planar")]
    profile: String,
    /// Seed for generators and corpora.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print a JSON envelope instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest kernel handed to the exact core (default: $SPARSE_DOMSET_GUARD, then 16).
    #[arg(long, global = true)]
    guard_core: Option<usize>,
    /// Require solutions of exactly `k` vertices.
    #[arg(long, global = true)]
    exact_k: bool,
}

/// Instance source and parameter overrides.
#[derive(Args, Debug)]
struct Input {
    /// Instance file; stdin when absent or `-`.
    file: Option<PathBuf>,
    /// Solution size, overriding the file.
    #[arg(long)]
    k: Option<usize>,
    /// Domination distance, overriding the file (default 1).
    #[arg(long)]
    d: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Distance-d dominating set of at most k vertices.
    SolveDomset(Input),
    /// Dominating set inducing a connected subgraph.
    SolveConnected(Input),
    /// Dominating set connected in the d-th power of the graph.
    SolveDconnected(Input),
    /// Efficient (perfect) dominating set of k vertices.
    SolveEfficient(Input),
    /// Roman labeling of weight at most k.
    SolveRoman(Input),
    /// Bottleneck S and an r-scattered subset of the targets.
    Scatter {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Excluded clique size; default from the profile.
        #[arg(long)]
        h: Option<usize>,
    },
    /// One kernel reduction: prints the removed target and its witness.
    Reduce(Input),
    /// Does the graph contain K_h as a depth-r minor?
    MinorCheck {
        file: Option<PathBuf>,
        #[arg(long)]
        h: usize,
        #[arg(long)]
        r: usize,
    },
    /// Exhaustive counterparts of the solvers.
    Oracle {
        /// `domset`, `connected`, `dconnected`, `efficient`, `roman` or `scattered`.
        problem: String,
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Largest bottleneck for `scattered`.
        #[arg(long, default_value_t = 2)]
        s_max: usize,
    },
    /// Generate an instance file.
    Gen {
        /// path, cycle, star, grid, random_max_deg, subdivided_clique, random_tree.
        family: String,
        params: Vec<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
    },
    /// Run a solver over a generated corpus and print one row per instance.
    Bench {
        #[arg(long)]
        family: String,
        /// Comma-separated sizes or `start..end:step` (end inclusive).
        #[arg(long)]
        sizes: String,
        /// `7`, `ceil(n/3)`, `ceil(n/3)-1`, ...
        #[arg(long)]
        k: String,
        #[arg(long, default_value_t = 1)]
        d: usize,
        #[arg(long, default_value = "domset")]
        solver: String,
    },
}

enum Failure {
    Usage(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

struct Context {
    global: Global,
    guard: usize,
    profile: ClassProfile,
}

impl Context {
    fn solve_options(&self) -> SolveOptions {
        SolveOptions {
            guard_core: self.guard,
            exact_k: self.global.exact_k,
            ..SolveOptions::default().with_mode(self.global.mode)
        }
    }

    fn scatter_options(&self) -> ScatterOptions {
        match self.global.mode {
            Mode::Paper => ScatterOptions::paper(),
            Mode::Practical => ScatterOptions::default(),
        }
    }

    fn print(&self, value: Value, text: impl FnOnce() -> String) {
        let out = if self.global.json {
            serde_json::to_string_pretty(&value).expect("JSON values serialize")
        } else {
            text()
        };
        println!("{out}");
    }
}

fn resolve_guard(flag: Option<usize>) -> Result<usize, Failure> {
    if let Some(g) = flag {
        return Ok(g);
    }
    match std::env::var(GUARD_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::Usage(format!(
                "{GUARD_ENV} must be a non-negative integer, found `{v}`"
            ))
        }),
        Err(_) => Ok(DEFAULT_GUARD),
    }
}

fn read_instance(file: &Option<PathBuf>) -> Result<Instance, Failure> {
    let text = match file {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?,
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
            s
        }
    };
    Ok(parse_instance(&text)?)
}

/// File instance with command-line overrides applied.
struct Loaded {
    inst: Instance,
    k: Option<usize>,
    d: usize,
}

impl Loaded {
    fn new(input: &Input) -> Result<Self, Failure> {
        let inst = read_instance(&input.file)?;
        let k = input.k.or(inst.k);
        let d = input.d.or(inst.d).unwrap_or(1);
        Ok(Self { inst, k, d })
    }

    fn k(&self) -> Result<usize, Failure> {
        self.k
            .ok_or_else(|| Failure::Usage("no k given (use --k or a `k` line)".into()))
    }

    fn domination(&self) -> Result<DominationInstance<'_>, Failure> {
        let inst = DominationInstance::new(&self.inst.graph, self.k()?, self.d)
            .with_targets(self.inst.target_set())
            .with_candidates(self.inst.candidate_set());
        inst.validate()?;
        Ok(inst)
    }
}

fn set_text(s: &VertexSet) -> String {
    s.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn answer_code<T>(a: &Answer<T>) -> u8 {
    match a {
        Answer::Yes(_) => EXIT_YES,
        Answer::No => EXIT_NO,
        Answer::Inconclusive { .. } => EXIT_INCONCLUSIVE,
    }
}

fn answer_text(a: &Answer<VertexSet>) -> String {
    match a {
        Answer::Yes(x) => format!("yes\nwitness {}", set_text(x)),
        Answer::No => "no".into(),
        Answer::Inconclusive { remaining, reason } => {
            format!("inconclusive ({remaining} targets left): {reason}")
        }
    }
}

fn report_outcome(ctx: &Context, out: &SolveOutcome) -> u8 {
    ctx.print(
        serde_json::to_value(out).expect("outcome serializes"),
        || {
            format!(
                "{}\nreductions {}\nkernel {}",
                answer_text(&out.answer),
                out.trace.len(),
                out.kernel.len()
            )
        },
    );
    answer_code(&out.answer)
}

fn witness_json(w: &ScatteredWitness<'_>) -> Value {
    json!({
        "bottleneck": w.bottleneck(),
        "scattered": w.scattered(),
        "radius": w.radius(),
    })
}

fn witness_text(w: &ScatteredWitness<'_>) -> String {
    format!(
        "bottleneck {}\nscattered {}",
        set_text(w.bottleneck()),
        set_text(w.scattered())
    )
}

fn run(ctx: &Context, command: &Command) -> Outcome {
    match command {
        Command::SolveDomset(input) => {
            let l = Loaded::new(input)?;
            let out = solve(&l.domination()?, &ctx.profile, &ctx.solve_options())?;
            Ok(report_outcome(ctx, &out))
        }
        Command::SolveConnected(input) => {
            let l = Loaded::new(input)?;
            let out = solve_connected_driver(&l.domination()?, &ctx.profile, &ctx.solve_options())?;
            Ok(report_outcome(ctx, &out))
        }
        Command::SolveDconnected(input) => {
            let l = Loaded::new(input)?;
            let out =
                solve_d_connected_driver(&l.domination()?, &ctx.profile, &ctx.solve_options())?;
            Ok(report_outcome(ctx, &out))
        }
        Command::SolveEfficient(input) => {
            let l = Loaded::new(input)?;
            let out = solve_efficient(&l.inst.graph, l.k()?, &ctx.profile, &ctx.solve_options())?;
            Ok(report_outcome(ctx, &out))
        }
        Command::SolveRoman(input) => {
            let l = Loaded::new(input)?;
            let opts = RomanOptions {
                mode: ctx.global.mode,
                scatter: ctx.scatter_options(),
                ..RomanOptions::default()
            };
            let answer = solve_roman(&l.inst.graph, l.k()?, &ctx.profile, &opts)?;
            ctx.print(
                serde_json::to_value(&answer).expect("answer serializes"),
                || match &answer {
                    Answer::Yes(lab) => format!(
                        "yes\nweight {}\nlabels {}",
                        lab.weight(),
                        lab.labels()
                            .iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    ),
                    Answer::No => "no".into(),
                    Answer::Inconclusive { remaining, reason } => {
                        format!("inconclusive ({remaining} left): {reason}")
                    }
                },
            );
            Ok(answer_code(&answer))
        }
        Command::Scatter { input, r, m, h } => {
            let l = Loaded::new(input)?;
            let r = r.or(l.inst.r).unwrap_or(l.d);
            let m = m
                .or(l.inst.m)
                .ok_or_else(|| Failure::Usage("no m given (use --m or an `m` line)".into()))?;
            let h = h.unwrap_or_else(|| ctx.profile.h(r));
            match find_scattered(
                &l.inst.graph,
                &l.inst.target_set(),
                r,
                m,
                h,
                &ctx.scatter_options(),
            ) {
                Ok(w) => {
                    ctx.print(
                        json!({"answer": "yes", "witness": witness_json(&w)}),
                        || format!("yes\n{}", witness_text(&w)),
                    );
                    Ok(EXIT_YES)
                }
                Err(ScatterError::Failure {
                    stage,
                    needed,
                    reason,
                }) => {
                    ctx.print(
                        json!({"answer": "no", "stage": stage, "needed": needed, "reason": reason}),
                        || format!("no: stage {stage} needs {needed}: {reason}"),
                    );
                    Ok(EXIT_NO)
                }
                Err(ScatterError::Input(e)) => Err(e.into()),
            }
        }
        Command::Reduce(input) => {
            let l = Loaded::new(input)?;
            let inst = l.domination()?;
            match reduce_step(&inst, &ctx.profile, &ctx.solve_options())? {
                Some((w, witness)) => {
                    ctx.print(
                        json!({"answer": "yes", "removed": w, "witness": witness_json(&witness)}),
                        || format!("removed {w}\n{}", witness_text(&witness)),
                    );
                    Ok(EXIT_YES)
                }
                None => {
                    ctx.print(json!({"answer": "no"}), || "no reduction applies".into());
                    Ok(EXIT_NO)
                }
            }
        }
        Command::MinorCheck { file, h, r } => {
            let inst = read_instance(file)?;
            let found = shallow_clique_minor(&inst.graph, *h, *r)?;
            ctx.print(json!({"answer": if found { "yes" } else { "no" }}), || {
                if found { "yes" } else { "no" }.into()
            });
            Ok(if found { EXIT_YES } else { EXIT_NO })
        }
        Command::Oracle {
            problem,
            input,
            r,
            m,
            s_max,
        } => oracle(ctx, problem, input, *r, *m, *s_max),
        Command::Gen {
            family,
            params,
            k,
            d,
        } => {
            let graph = generate(family, params, ctx.global.seed)?;
            let mut inst = Instance::new("ds", graph);
            inst.k = *k;
            inst.d = *d;
            print!("{}", emit(&inst));
            Ok(EXIT_YES)
        }
        Command::Bench {
            family,
            sizes,
            k,
            d,
            solver,
        } => {
            let spec = CorpusSpec {
                family: family.clone(),
                sizes: parse_sizes(sizes)?,
                k: BudgetSpec::parse(k).map_err(|e| Failure::Usage(e.to_string()))?,
                d: *d,
                seed: ctx.global.seed,
                solver: Solver::parse(solver).map_err(|e| Failure::Usage(e.to_string()))?,
            };
            let reports = run_corpus(&spec, &ctx.profile, &ctx.solve_options());
            let stdout = io::stdout();
            if ctx.global.json {
                serde_json::to_writer_pretty(stdout.lock(), &reports)
                    .map_err(|e| Failure::Input(e.to_string()))?;
                println!();
            } else {
                write_csv(&reports, stdout.lock())?;
            }
            Ok(EXIT_YES)
        }
    }
}

fn oracle(
    ctx: &Context,
    problem: &str,
    input: &Input,
    r: Option<usize>,
    m: Option<usize>,
    s_max: usize,
) -> Outcome {
    let l = Loaded::new(input)?;
    let g = &l.inst.graph;
    let targets = l.inst.target_set();
    let candidates = l.inst.candidate_set();
    let k = l.k.unwrap_or(g.n());
    let set_answer = |found: Option<VertexSet>| {
        let answer = match found {
            Some(x) => Answer::Yes(x),
            None => Answer::No,
        };
        ctx.print(
            serde_json::to_value(&answer).expect("answer serializes"),
            || answer_text(&answer),
        );
        answer_code(&answer)
    };
    match problem {
        "domset" => Ok(set_answer(brute_force_min_domset(
            g,
            &targets,
            l.d,
            k,
            &candidates,
        )?)),
        "connected" => Ok(set_answer(brute_force_connected(
            g,
            g,
            &targets,
            l.d,
            k,
            &candidates,
        )?)),
        "dconnected" => {
            let power = g.power(l.d)?;
            Ok(set_answer(brute_force_connected(
                g,
                &power,
                &targets,
                l.d,
                k,
                &candidates,
            )?))
        }
        "efficient" => Ok(set_answer(brute_force_efficient(g, l.k()?)?)),
        "roman" => {
            let best = brute_force_roman(g)?;
            let fits = l.k.is_none_or(|k| best.weight() <= k);
            ctx.print(
                json!({"answer": if fits { "yes" } else { "no" }, "weight": best.weight(), "witness": best}),
                || format!("{}\nweight {}", if fits { "yes" } else { "no" }, best.weight()),
            );
            Ok(if fits { EXIT_YES } else { EXIT_NO })
        }
        "scattered" => {
            let r = r.or(l.inst.r).unwrap_or(l.d);
            let m = m
                .or(l.inst.m)
                .ok_or_else(|| Failure::Usage("no m given (use --m or an `m` line)".into()))?;
            match brute_force_scattered(g, &targets, r, m, s_max)? {
                Some(w) => {
                    ctx.print(
                        json!({"answer": "yes", "witness": witness_json(&w)}),
                        || format!("yes\n{}", witness_text(&w)),
                    );
                    Ok(EXIT_YES)
                }
                None => {
                    ctx.print(json!({"answer": "no"}), || "no".into());
                    Ok(EXIT_NO)
                }
            }
        }
        other => Err(Failure::Usage(format!(
            "unknown oracle `{other}` (domset, connected, dconnected, efficient, roman, scattered)"
        ))),
    }
}

fn parse_sizes(text: &str) -> Result<Vec<usize>, Failure> {
    let bad = || Failure::Usage(format!("bad size list `{text}`"));
    if let Some((range, step)) = text
        .split_once(':')
        .or_else(|| text.contains("..").then_some((text, "1")))
    {
        let (a, b) = range.split_once("..").ok_or_else(bad)?;
        let (a, b, step): (usize, usize, usize) = (
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
            step.trim().parse().map_err(|_| bad())?,
        );
        if step == 0 {
            return Err(bad());
        }
        return Ok((a..=b).step_by(step).collect());
    }
    text.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse().map_err(|_| bad()))
        .collect()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_YES };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = resolve_guard(cli.global.guard_core).and_then(|guard| {
        let profile = ClassProfile::by_name(&cli.global.profile, cli.global.mode.into())
            .map_err(|e| Failure::Usage(e.to_string()))?;
        let ctx = Context {
            global: cli.global,
            guard,
            profile,
        };
        run(&ctx, &cli.command)
    });
    let _ = io::stdout().flush();
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
