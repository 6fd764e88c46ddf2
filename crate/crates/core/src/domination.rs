//! Distance-`d` domination: exact small-core solver, the distance-vector
//! reduction, and the kernel driver that alternates between them.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bounds::{BigBound, ClassProfile};
use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::graph::{Bfs, Graph, Vertex, VertexSet};
use crate::wideness::{scatter_full, ScatterError, ScatterOptions, ScatteredWitness};
use crate::Mode;

/// Targets `W` to be `d`-dominated by at most `k` vertices drawn from
/// `candidates`. With `candidates = V(G)` this is plain distance-`d`
/// domination; a proper subset gives the red-blue variant.
#[derive(Clone, Debug)]
pub struct DominationInstance<'a> {
    pub graph: &'a Graph,
    pub targets: VertexSet,
    pub k: usize,
    pub d: usize,
    pub candidates: VertexSet,
}

impl<'a> DominationInstance<'a> {
    /// All vertices are targets and candidates.
    pub fn new(graph: &'a Graph, k: usize, d: usize) -> Self {
        Self {
            graph,
            targets: graph.vertices(),
            k,
            d,
            candidates: graph.vertices(),
        }
    }

    pub fn with_targets(mut self, targets: VertexSet) -> Self {
        self.targets = targets;
        self
    }

    pub fn with_candidates(mut self, candidates: VertexSet) -> Self {
        self.candidates = candidates;
        self
    }

    pub fn validate(&self) -> Result<()> {
        self.targets.check_range(self.graph.n())?;
        self.candidates.check_range(self.graph.n())
    }

    /// `true` iff `x ⊆ candidates`, `|x| <= k` and `x` `d`-dominates the
    /// targets.
    pub fn accepts(&self, x: &VertexSet) -> bool {
        x.len() <= self.k
            && x.is_subset(&self.candidates)
            && self
                .graph
                .dominates(x, &self.targets, self.d)
                .unwrap_or(false)
    }
}

/// One coordinate of a distance vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum DistanceEntry {
    Finite(usize),
    Infinite,
}

/// Truncated distances from one vertex to each bottleneck vertex, in
/// ascending bottleneck order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DistanceVector(pub Vec<DistanceEntry>);

/// Distances in `G` from `a` to every member of `s`, `Infinite` beyond `d`.
pub fn distance_vector(g: &Graph, a: Vertex, s: &VertexSet, d: usize) -> Result<DistanceVector> {
    g.check_vertex(a)?;
    s.check_range(g.n())?;
    if s.contains(a) {
        return Err(Error::Precondition(format!(
            "vertex {a} belongs to the bottleneck"
        )));
    }
    let dist = g.bfs_distances(a, d)?;
    Ok(DistanceVector(
        s.iter()
            .map(|t| {
                dist.get(&t)
                    .map_or(DistanceEntry::Infinite, |&x| DistanceEntry::Finite(x))
            })
            .collect(),
    ))
}

/// Vectors for all of `a`, one truncated BFS per bottleneck vertex.
fn distance_vectors(
    g: &Graph,
    a: &VertexSet,
    s: &VertexSet,
    d: usize,
) -> BTreeMap<Vertex, DistanceVector> {
    let mut out: BTreeMap<Vertex, DistanceVector> = a
        .iter()
        .map(|v| (v, DistanceVector(Vec::with_capacity(s.len()))))
        .collect();
    let mut bfs = Bfs::new(g.n());
    for t in s.iter() {
        bfs.run(g, [t], d, None);
        for (&v, vec) in out.iter_mut() {
            vec.0.push(match bfs.distance(v) {
                Some(x) => DistanceEntry::Finite(x),
                None => DistanceEntry::Infinite,
            });
        }
    }
    out
}

/// `(k + 2) · (d + 1)^s`, saturating.
pub fn reduction_size(k: usize, d: usize, s: usize) -> usize {
    (d + 1)
        .checked_pow(s as u32)
        .and_then(|p| p.checked_mul(k + 2))
        .unwrap_or(usize::MAX)
}

/// Equal-vector classes of the scattered set, kept in sync as members are
/// removed.
struct VectorClasses {
    classes: BTreeMap<DistanceVector, VertexSet>,
    size: usize,
}

impl VectorClasses {
    fn new(g: &Graph, witness: &ScatteredWitness<'_>, d: usize) -> Self {
        let mut classes: BTreeMap<DistanceVector, VertexSet> = BTreeMap::new();
        for (v, vec) in distance_vectors(g, witness.scattered(), witness.bottleneck(), d) {
            classes.entry(vec).or_default().insert(v);
        }
        Self {
            classes,
            size: witness.scattered().len(),
        }
    }

    /// Lowest id of the first class (vector order) with at least `need`
    /// members.
    fn pick(&self, need: usize) -> Option<Vertex> {
        self.classes
            .values()
            .find(|c| c.len() >= need)
            .and_then(|c| c.first())
    }

    fn remove(&mut self, v: Vertex) {
        for c in self.classes.values_mut() {
            if c.remove(v) {
                self.size -= 1;
                break;
            }
        }
    }
}

fn check_witness(inst: &DominationInstance<'_>, witness: &ScatteredWitness<'_>) -> Result<()> {
    if witness.host().n() != inst.graph.n() {
        return Err(Error::Precondition(
            "witness belongs to another graph".into(),
        ));
    }
    if witness.radius() != inst.d {
        return Err(Error::Precondition(format!(
            "witness radius {} differs from d = {}",
            witness.radius(),
            inst.d
        )));
    }
    if !witness.scattered().is_subset(&inst.targets) {
        return Err(Error::Precondition("scattered set is not inside W".into()));
    }
    let need = reduction_size(inst.k, inst.d, witness.bottleneck().len());
    if witness.scattered().len() < need {
        return Err(Error::Precondition(format!(
            "scattered set has {} members, the reduction needs {need}",
            witness.scattered().len()
        )));
    }
    if !witness.is_valid() {
        return Err(Error::Precondition(
            "witness is not scattered in G - S".into(),
        ));
    }
    Ok(())
}

/// Returns `w ∈ A` such that every `X` with `|X| <= k` dominates `W` iff it
/// dominates `W \ {w}`: the lowest id of the first equal-vector class with
/// `k + 2` members.
pub fn reduce_witness(
    inst: &DominationInstance<'_>,
    witness: &ScatteredWitness<'_>,
) -> Result<Vertex> {
    inst.validate()?;
    check_witness(inst, witness)?;
    let classes = VectorClasses::new(inst.graph, witness, inst.d);
    classes
        .pick(inst.k + 2)
        .ok_or_else(|| Error::Precondition("no equal-vector class of size k + 2".into()))
}

/// Settings for [`solve_small_core`].
#[derive(Clone, Copy, Debug)]
pub struct CoreOptions {
    /// Largest `|W|` accepted.
    pub guard: usize,
    /// Pad the answer to exactly `k` vertices.
    pub exact_k: bool,
}

impl Default for CoreOptions {
    fn default() -> Self {
        Self {
            guard: DEFAULT_GUARD,
            exact_k: false,
        }
    }
}

pub const DEFAULT_GUARD: usize = 16;

/// Sorted `d`-balls restricted to `allowed`, one per target.
pub(crate) fn candidate_balls(
    g: &Graph,
    targets: &VertexSet,
    d: usize,
    allowed: &[bool],
) -> Vec<Vec<Vertex>> {
    let mut bfs = Bfs::new(g.n());
    targets
        .iter()
        .map(|w| {
            let mut ball: Vec<Vertex> = bfs
                .run(g, [w], d, None)
                .iter()
                .copied()
                .filter(|&x| allowed[x])
                .collect();
            ball.sort_unstable();
            ball
        })
        .collect()
}

pub(crate) fn intersect(a: &[Vertex], b: &[Vertex]) -> Vec<Vertex> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Depth-first walk over restricted growth strings assigning targets to at
/// most `k` blocks, keeping for each block the common candidates of its
/// members. Calls `visit` with the candidate sets of each complete
/// partition (in lexicographic order) until it returns `Some`.
pub(crate) fn walk_partitions<T>(
    balls: &[Vec<Vertex>],
    k: usize,
    visit: &mut dyn FnMut(&[Vec<Vertex>]) -> Option<T>,
) -> Option<T> {
    fn go<T>(
        balls: &[Vec<Vertex>],
        k: usize,
        next: usize,
        blocks: &mut Vec<Vec<Vertex>>,
        visit: &mut dyn FnMut(&[Vec<Vertex>]) -> Option<T>,
    ) -> Option<T> {
        if next == balls.len() {
            return visit(blocks);
        }
        let ball = &balls[next];
        for b in 0..blocks.len() {
            let common = intersect(&blocks[b], ball);
            if common.is_empty() {
                continue;
            }
            let saved = std::mem::replace(&mut blocks[b], common);
            let found = go(balls, k, next + 1, blocks, visit);
            blocks[b] = saved;
            if found.is_some() {
                return found;
            }
        }
        if blocks.len() < k && !ball.is_empty() {
            blocks.push(ball.clone());
            let found = go(balls, k, next + 1, blocks, visit);
            blocks.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
    go(balls, k, 0, &mut Vec::new(), visit)
}

/// Adds the smallest unused candidates until `x` has `k` members; `None`
/// when there are not enough candidates.
pub(crate) fn pad_to(x: VertexSet, k: usize, candidates: &VertexSet) -> Option<VertexSet> {
    let mut x = x;
    for c in candidates.iter() {
        if x.len() >= k {
            break;
        }
        x.insert(c);
    }
    (x.len() >= k).then_some(x)
}

/// Exact solver for small `W`: tries every partition of `W` into at most
/// `k` blocks and picks the lowest common candidate of each block.
pub fn solve_small_core(
    inst: &DominationInstance<'_>,
    opts: CoreOptions,
) -> Result<Option<VertexSet>> {
    inst.validate()?;
    if inst.targets.len() > opts.guard {
        return Err(Error::GuardExceeded {
            what: "small-core |W| (use the kernel driver for larger target sets)",
            size: inst.targets.len() as u128,
            limit: opts.guard as u128,
        });
    }
    let allowed = inst.candidates.to_mask(inst.graph.n());
    let balls = candidate_balls(inst.graph, &inst.targets, inst.d, &allowed);
    let found = walk_partitions(&balls, inst.k, &mut |blocks| {
        Some(blocks.iter().map(|b| b[0]).collect::<VertexSet>())
    });
    let found = match (found, opts.exact_k) {
        (Some(x), true) => pad_to(x, inst.k, &inst.candidates),
        (found, _) => found,
    };
    if let Some(x) = &found {
        if !inst.accepts(x) || (opts.exact_k && x.len() != inst.k) {
            return Err(Error::Precondition(
                "internal: small-core answer failed verification".into(),
            ));
        }
    }
    Ok(found)
}

/// Yes/no answer with an optional certificate, or an honest refusal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "answer", content = "witness", rename_all = "lowercase")]
pub enum Answer<T> {
    Yes(T),
    No,
    Inconclusive { remaining: usize, reason: String },
}

impl<T> Answer<T> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Answer::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Answer::No)
    }

    pub fn is_inconclusive(&self) -> bool {
        matches!(self, Answer::Inconclusive { .. })
    }

    pub fn witness(&self) -> Option<&T> {
        match self {
            Answer::Yes(x) => Some(x),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Answer::Yes(_) => "yes",
            Answer::No => "no",
            Answer::Inconclusive { .. } => "inconclusive",
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Answer<U> {
        match self {
            Answer::Yes(x) => Answer::Yes(f(x)),
            Answer::No => Answer::No,
            Answer::Inconclusive { remaining, reason } => {
                Answer::Inconclusive { remaining, reason }
            }
        }
    }
}

/// One kernel step: `removed` left `W`, justified by the witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    pub removed: Vertex,
    pub bottleneck: VertexSet,
    pub scattered_size: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SolveOutcome {
    #[serde(flatten)]
    pub answer: Answer<VertexSet>,
    pub trace: Vec<ReductionStep>,
    /// Targets left after the last reduction.
    pub kernel: VertexSet,
}

impl SolveOutcome {
    pub fn max_bottleneck(&self) -> usize {
        self.trace
            .iter()
            .map(|s| s.bottleneck.len())
            .max()
            .unwrap_or(0)
    }
}

/// Driver configuration.
#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub mode: Mode,
    /// Kernel size at which the small core takes over.
    pub guard_core: usize,
    /// Largest bottleneck the practical driver asks for.
    pub s_cap: usize,
    pub exact_k: bool,
    /// Node budget of the branching fallback used when no reduction
    /// applies to a large kernel.
    pub search_budget: u64,
    pub scatter: ScatterOptions,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            mode: Mode::Practical,
            guard_core: DEFAULT_GUARD,
            s_cap: 2,
            exact_k: false,
            search_budget: 2_000_000,
            scatter: ScatterOptions::default(),
        }
    }
}

impl SolveOptions {
    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self.scatter.mode = mode;
        self
    }
}

/// Exact solver used on the final kernel. Receives the reduced instance.
pub(crate) type CoreSolver<'s> =
    dyn FnMut(&DominationInstance<'_>) -> Result<Answer<VertexSet>> + 's;

/// Kernel driver: reduce `W` with verified scattered witnesses until it is
/// small, then solve exactly.
pub fn solve(
    inst: &DominationInstance<'_>,
    profile: &ClassProfile,
    opts: &SolveOptions,
) -> Result<SolveOutcome> {
    let core_opts = CoreOptions {
        guard: opts.guard_core,
        exact_k: opts.exact_k,
    };
    let budget = opts.search_budget;
    let exact_k = opts.exact_k;
    let mut core = |reduced: &DominationInstance<'_>| -> Result<Answer<VertexSet>> {
        if reduced.targets.len() <= core_opts.guard {
            return Ok(match solve_small_core(reduced, core_opts)? {
                Some(x) => Answer::Yes(x),
                None => Answer::No,
            });
        }
        branching_fallback(reduced, budget, exact_k)
    };
    let outcome = drive(inst, profile, opts, &mut core)?;
    if let Some(x) = outcome.answer.witness() {
        if !inst.accepts(x) || (opts.exact_k && x.len() != inst.k) {
            return Err(Error::Precondition(
                "internal: driver answer failed verification".into(),
            ));
        }
    }
    Ok(outcome)
}

fn branching_fallback(
    inst: &DominationInstance<'_>,
    budget: u64,
    exact_k: bool,
) -> Result<Answer<VertexSet>> {
    let mut search = DomsetSearch::new(inst, Some(budget));
    Ok(match search.run(inst.k) {
        Some(Some(x)) => {
            let x = if exact_k {
                pad_to(x, inst.k, &inst.candidates)
            } else {
                Some(x)
            };
            x.map_or(Answer::No, Answer::Yes)
        }
        Some(None) => Answer::No,
        None => Answer::Inconclusive {
            remaining: inst.targets.len(),
            reason: format!("no reduction applies and the search budget of {budget} nodes ran out"),
        },
    })
}

/// Shared kernel loop. `core` decides the reduced instance.
pub(crate) fn drive(
    inst: &DominationInstance<'_>,
    profile: &ClassProfile,
    opts: &SolveOptions,
    core: &mut CoreSolver<'_>,
) -> Result<SolveOutcome> {
    inst.validate()?;
    let g = inst.graph;
    let mut work = inst.clone();
    let mut trace = Vec::new();

    // A target without a candidate in its ball can never be dominated.
    let allowed = inst.candidates.to_mask(g.n());
    let mut bfs = Bfs::new(g.n());
    for w in inst.targets.iter() {
        if !bfs.run(g, [w], inst.d, None).iter().any(|&x| allowed[x]) {
            return Ok(SolveOutcome {
                answer: Answer::No,
                trace,
                kernel: work.targets,
            });
        }
    }

    match opts.mode {
        Mode::Practical => {
            while work.targets.len() > opts.guard_core {
                let Some(witness) = practical_witness(&work, opts) else {
                    break;
                };
                reduce_many(&mut work, &witness, opts.guard_core, &mut trace);
            }
            if work.targets.len() > opts.guard_core {
                // No reduction applies. Scattered targets certify a No.
                let packing = crate::wideness::greedy_packing(g, &work.targets, inst.d);
                if packing.len() > inst.k {
                    return Ok(SolveOutcome {
                        answer: Answer::No,
                        trace,
                        kernel: work.targets,
                    });
                }
            }
        }
        Mode::Paper => {
            let s = profile.margin(inst.d);
            let m = reduction_size(inst.k, inst.d, s);
            let threshold = profile.threshold(inst.d, m as u64);
            let h = profile.h(inst.d);
            let mut scatter = opts.scatter.clone();
            scatter.mode = Mode::Paper;
            while exceeds(&threshold, work.targets.len()) {
                let witness =
                    match crate::wideness::find_scattered(g, &work.targets, inst.d, m, h, &scatter)
                    {
                        Ok(w) => w,
                        Err(e) => {
                            return Ok(SolveOutcome {
                                answer: Answer::Inconclusive {
                                    remaining: work.targets.len(),
                                    reason: format!("|W| exceeds N = {threshold} but {e}"),
                                },
                                trace,
                                kernel: work.targets,
                            })
                        }
                    };
                match reduce_witness(&work, &witness) {
                    Ok(w) => {
                        trace.push(ReductionStep {
                            removed: w,
                            bottleneck: witness.bottleneck().clone(),
                            scattered_size: witness.scattered().len(),
                        });
                        work.targets.remove(w);
                    }
                    Err(e) => {
                        return Ok(SolveOutcome {
                            answer: Answer::Inconclusive {
                                remaining: work.targets.len(),
                                reason: e.to_string(),
                            },
                            trace,
                            kernel: work.targets,
                        })
                    }
                }
            }
            if work.targets.len() > opts.guard_core {
                return Ok(SolveOutcome {
                    answer: Answer::Inconclusive {
                        remaining: work.targets.len(),
                        reason: format!(
                            "kernel of {} targets (N = {threshold}) exceeds the core guard {}",
                            work.targets.len(),
                            opts.guard_core
                        ),
                    },
                    trace,
                    kernel: work.targets,
                });
            }
        }
    }

    let answer = core(&work)?;
    Ok(SolveOutcome {
        answer,
        trace,
        kernel: work.targets,
    })
}

fn exceeds(threshold: &BigBound, size: usize) -> bool {
    threshold.is_exceeded_by(size)
}

/// First verified witness for `s_try = 0..=s_cap`.
fn practical_witness<'g>(
    work: &DominationInstance<'g>,
    opts: &SolveOptions,
) -> Option<ScatteredWitness<'g>> {
    let mut scatter = opts.scatter.clone();
    scatter.mode = Mode::Practical;
    (0..=opts.s_cap).find_map(|s_try| {
        let m = reduction_size(work.k, work.d, s_try);
        if m > work.targets.len() {
            return None;
        }
        scatter_full(work.graph, &work.targets, work.d, m, s_try + 2, &scatter).ok()
    })
}

/// One reduction step as the driver would take it: a witness for the
/// current targets and the target it removes. `None` when no witness is
/// found or its scattered set has no large enough class.
pub fn reduce_step<'g>(
    inst: &DominationInstance<'g>,
    profile: &ClassProfile,
    opts: &SolveOptions,
) -> Result<Option<(Vertex, ScatteredWitness<'g>)>> {
    inst.validate()?;
    let witness = match opts.mode {
        Mode::Practical => practical_witness(inst, opts),
        Mode::Paper => {
            let s = profile.margin(inst.d);
            let m = reduction_size(inst.k, inst.d, s);
            let mut scatter = opts.scatter.clone();
            scatter.mode = Mode::Paper;
            match crate::wideness::find_scattered(
                inst.graph,
                &inst.targets,
                inst.d,
                m,
                profile.h(inst.d),
                &scatter,
            ) {
                Ok(w) => Some(w),
                Err(ScatterError::Input(e)) => return Err(e),
                Err(ScatterError::Failure { .. }) => None,
            }
        }
    };
    let Some(witness) = witness else {
        return Ok(None);
    };
    let classes = VectorClasses::new(inst.graph, &witness, inst.d);
    Ok(classes.pick(inst.k + 2).map(|w| (w, witness)))
}

/// Reduces repeatedly with one witness while its scattered set stays large
/// enough and the kernel is above the guard.
fn reduce_many(
    work: &mut DominationInstance<'_>,
    witness: &ScatteredWitness<'_>,
    guard: usize,
    trace: &mut Vec<ReductionStep>,
) {
    let need = reduction_size(work.k, work.d, witness.bottleneck().len());
    let mut classes = VectorClasses::new(work.graph, witness, work.d);
    while work.targets.len() > guard && classes.size >= need {
        let Some(w) = classes.pick(work.k + 2) else {
            break;
        };
        trace.push(ReductionStep {
            removed: w,
            bottleneck: witness.bottleneck().clone(),
            scattered_size: classes.size,
        });
        classes.remove(w);
        work.targets.remove(w);
    }
}

/// Default guard of [`brute_force_min_domset`] on `C(|candidates|, k_max)`.
pub const BRUTE_FORCE_BUDGET: u128 = 10_000_000_000;

/// Minimum-size `X ⊆ candidates`, `|X| <= k_max`, `d`-dominating `W`.
pub fn brute_force_min_domset(
    g: &Graph,
    targets: &VertexSet,
    d: usize,
    k_max: usize,
    candidates: &VertexSet,
) -> Result<Option<VertexSet>> {
    targets.check_range(g.n())?;
    candidates.check_range(g.n())?;
    let size = binomial(candidates.len() as u64, k_max.min(candidates.len()) as u64);
    if size > BRUTE_FORCE_BUDGET {
        return Err(Error::GuardExceeded {
            what: "brute_force_min_domset C(|candidates|, k_max)",
            size,
            limit: BRUTE_FORCE_BUDGET,
        });
    }
    let inst = DominationInstance {
        graph: g,
        targets: targets.clone(),
        k: k_max,
        d,
        candidates: candidates.clone(),
    };
    let found = DomsetSearch::new(&inst, None)
        .run(k_max)
        .expect("unbudgeted search always finishes");
    Ok(found)
}

/// Branch and bound for minimum distance-`d` domination: branch on the
/// undominated target with the fewest candidates, bound by a packing of
/// targets with pairwise disjoint candidate sets.
pub(crate) struct DomsetSearch {
    /// Candidates able to cover each target (target index → vertices).
    cover_of: Vec<Vec<Vertex>>,
    /// Targets covered by each vertex (vertex → target indices).
    covers: Vec<Vec<usize>>,
    count: Vec<u32>,
    mark: Vec<u32>,
    epoch: u32,
    nodes: u64,
    budget: Option<u64>,
}

impl DomsetSearch {
    pub(crate) fn new(inst: &DominationInstance<'_>, budget: Option<u64>) -> Self {
        let g = inst.graph;
        let allowed = inst.candidates.to_mask(g.n());
        let cover_of = candidate_balls(g, &inst.targets, inst.d, &allowed);
        let mut covers = vec![Vec::new(); g.n()];
        for (t, ball) in cover_of.iter().enumerate() {
            for &x in ball {
                covers[x].push(t);
            }
        }
        Self {
            count: vec![0; cover_of.len()],
            cover_of,
            covers,
            mark: vec![0; g.n()],
            epoch: 0,
            nodes: 0,
            budget,
        }
    }

    /// `Some(Some(x))` for a minimum solution of size `<= k`, `Some(None)`
    /// when there is none, `None` when the budget ran out.
    pub(crate) fn run(&mut self, k: usize) -> Option<Option<VertexSet>> {
        if self.cover_of.iter().any(|c| c.is_empty()) {
            return Some(None);
        }
        let mut chosen = Vec::new();
        for size in 0..=k {
            match self.search(size, &mut chosen) {
                Ok(true) => return Some(Some(chosen.into_iter().collect())),
                Ok(false) => {}
                Err(()) => return None,
            }
        }
        Some(None)
    }

    fn lower_bound(&mut self) -> usize {
        self.epoch += 1;
        let mut lb = 0;
        for t in 0..self.cover_of.len() {
            if self.count[t] == 0 && self.cover_of[t].iter().all(|&x| self.mark[x] != self.epoch) {
                for &x in &self.cover_of[t] {
                    self.mark[x] = self.epoch;
                }
                lb += 1;
            }
        }
        lb
    }

    fn search(&mut self, left: usize, chosen: &mut Vec<Vertex>) -> std::result::Result<bool, ()> {
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            return Err(());
        }
        let Some(target) = (0..self.cover_of.len())
            .filter(|&t| self.count[t] == 0)
            .min_by_key(|&t| self.cover_of[t].len())
        else {
            return Ok(true);
        };
        if left == 0 || self.lower_bound() > left {
            return Ok(false);
        }
        let mut options = self.cover_of[target].clone();
        let gain = |x: Vertex, s: &Self| s.covers[x].iter().filter(|&&t| s.count[t] == 0).count();
        options.sort_by_key(|&x| (std::cmp::Reverse(gain(x, self)), x));
        for x in options {
            for &t in &self.covers[x] {
                self.count[t] += 1;
            }
            chosen.push(x);
            let found = self.search(left - 1, chosen);
            if matches!(found, Ok(true)) {
                return found;
            }
            chosen.pop();
            for &t in &self.covers[x] {
                self.count[t] -= 1;
            }
            found?;
        }
        Ok(false)
    }
}
