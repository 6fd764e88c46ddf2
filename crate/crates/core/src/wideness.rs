//! Bottlenecks and scattered sets.
//!
//! [`find_scattered`] computes a small bottleneck `S` and a subset `A` of
//! the targets that is `r`-scattered in `G - S`. It follows the staged
//! construction `W_0 ⊇ W_1 ⊇ … ⊇ W_r`, `S_0 ⊆ S_1 ⊆ … ⊆ S_r`: at stage
//! `i` an auxiliary graph on `W_i` is built from adjacent `i`-balls, a
//! greedy independent set is extracted, hub vertices are pumped into the
//! bottleneck, and a greedy `(i+1)`-scattered subset survives.
//!
//! The brute-force counterparts ([`brute_force_scattered`],
//! [`shallow_clique_minor`]) are exhaustive and only meant for tiny graphs.

use thiserror::Error;

use crate::bounds::{BigBound, RamseyBounds};
use crate::combinatorics::{binomial, Combinations};
use crate::error::{Error, Result};
use crate::graph::{Bfs, Graph, Vertex, VertexSet};
use crate::Mode;

/// Tuning for [`find_scattered`].
#[derive(Clone, Debug)]
pub struct ScatterOptions {
    pub mode: Mode,
    /// Practical pumping: a hub is moved into the bottleneck when it lies
    /// in the balls of strictly more than `max(floor, shrink_factor * |I|)`
    /// survivors.
    pub shrink_factor: f64,
    pub floor: usize,
    /// Candidate sets up to this size are searched exactly when the staged
    /// construction falls short.
    pub exact_guard: usize,
    /// Bottleneck candidates considered by the fallback search on graphs
    /// with more than [`FULL_POOL_LIMIT`] vertices.
    pub pool_size: usize,
    /// Maximum number of bottlenecks tried by the fallback search.
    pub escalation_budget: usize,
    pub bounds: RamseyBounds,
}

/// Graphs up to this order use every vertex as a bottleneck candidate.
pub const FULL_POOL_LIMIT: usize = 32;

impl Default for ScatterOptions {
    fn default() -> Self {
        Self {
            mode: Mode::Practical,
            shrink_factor: 0.25,
            floor: 2,
            exact_guard: 24,
            pool_size: 24,
            escalation_budget: 4096,
            bounds: RamseyBounds::default(),
        }
    }
}

impl ScatterOptions {
    pub fn paper() -> Self {
        Self {
            mode: Mode::Paper,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScatterError {
    #[error("no {needed}-element scattered set at stage {stage}: {reason}")]
    Failure {
        stage: usize,
        needed: usize,
        reason: String,
    },
    #[error(transparent)]
    Input(#[from] Error),
}

/// Snapshot of the staged construction after stage `stage`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtractionState {
    pub stage: usize,
    pub bottleneck: VertexSet,
    pub survivors: VertexSet,
}

impl ExtractionState {
    /// Checks the stage invariants: `|S_i| < h - 1`, `W_i` is `i`-scattered
    /// in `G - S_i`, and the sequences are nested relative to `previous`.
    ///
    /// With `paper_faithful` it also checks that every bottleneck vertex has
    /// a neighbour in the `i`-ball (in `G - S_i`) of every survivor. The
    /// construction does not rely on this.
    pub fn check(
        &self,
        g: &Graph,
        h: usize,
        previous: Option<&ExtractionState>,
        paper_faithful: bool,
    ) -> std::result::Result<(), String> {
        if self.bottleneck.len() + 1 >= h.max(1) && !(self.bottleneck.is_empty() && h <= 1) {
            return Err(format!(
                "stage {}: bottleneck of size {} is not below h - 1 = {}",
                self.stage,
                self.bottleneck.len(),
                h.saturating_sub(1)
            ));
        }
        let blocked = self.bottleneck.to_mask(g.n());
        if !g.is_scattered_avoiding(&self.survivors, self.stage, Some(&blocked)) {
            return Err(format!("stage {}: survivors are not scattered", self.stage));
        }
        if let Some(prev) = previous {
            if !prev.bottleneck.is_subset(&self.bottleneck) {
                return Err(format!("stage {}: bottleneck shrank", self.stage));
            }
            if !self.survivors.is_subset(&prev.survivors) {
                return Err(format!("stage {}: survivors grew", self.stage));
            }
        }
        if paper_faithful {
            let mut bfs = Bfs::new(g.n());
            for u in self.survivors.iter() {
                let ball = bfs.run(g, [u], self.stage, Some(&blocked));
                for v in self.bottleneck.iter() {
                    if !ball.iter().any(|&w| g.has_edge(v, w)) {
                        return Err(format!(
                            "stage {}: bottleneck vertex {v} does not touch the ball of {u}",
                            self.stage
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A bottleneck `S` together with a set `A` that is `r`-scattered in
/// `G - S`.
#[derive(Clone, Debug)]
pub struct ScatteredWitness<'g> {
    host: &'g Graph,
    bottleneck: VertexSet,
    scattered: VertexSet,
    radius: usize,
    stages: Vec<ExtractionState>,
}

impl<'g> ScatteredWitness<'g> {
    /// Validates and wraps a witness supplied by the caller.
    pub fn new(
        host: &'g Graph,
        bottleneck: VertexSet,
        scattered: VertexSet,
        radius: usize,
    ) -> Result<Self> {
        bottleneck.check_range(host.n())?;
        scattered.check_range(host.n())?;
        let w = Self {
            host,
            bottleneck,
            scattered,
            radius,
            stages: Vec::new(),
        };
        if !w.is_valid() {
            return Err(Error::Precondition(
                "scattered set is not scattered in G - S, or meets S".into(),
            ));
        }
        Ok(w)
    }

    pub fn host(&self) -> &'g Graph {
        self.host
    }

    pub fn bottleneck(&self) -> &VertexSet {
        &self.bottleneck
    }

    pub fn scattered(&self) -> &VertexSet {
        &self.scattered
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    /// Stage snapshots recorded by [`find_scattered`]; empty for witnesses
    /// built by hand or by the fallback search.
    pub fn stages(&self) -> &[ExtractionState] {
        &self.stages
    }

    /// `S ∩ A = ∅` and `A` is scattered in the materialised `G - S`.
    pub fn is_valid(&self) -> bool {
        if !self.bottleneck.is_disjoint(&self.scattered) {
            return false;
        }
        let Ok((rest, remap)) = self.host.delete(&self.bottleneck) else {
            return false;
        };
        rest.is_scattered(&remap.forward(&self.scattered), self.radius)
            .unwrap_or(false)
    }
}

/// Finds `S` with `|S| <= h - 2` and `A ⊆ W`, `|A| = m`, `A` `r`-scattered
/// in `G - S`. Returns the first `m` members of the selection found.
pub fn find_scattered<'g>(
    g: &'g Graph,
    targets: &VertexSet,
    r: usize,
    m: usize,
    h: usize,
    opts: &ScatterOptions,
) -> std::result::Result<ScatteredWitness<'g>, ScatterError> {
    let mut w = scatter_full(g, targets, r, m, h, opts)?;
    w.scattered = w.scattered.iter().take(m).collect();
    Ok(w)
}

/// Like [`find_scattered`] but keeps the whole selection, which may be
/// larger than `m`.
pub(crate) fn scatter_full<'g>(
    g: &'g Graph,
    targets: &VertexSet,
    r: usize,
    m: usize,
    h: usize,
    opts: &ScatterOptions,
) -> std::result::Result<ScatteredWitness<'g>, ScatterError> {
    targets.check_range(g.n())?;
    if m == 0 {
        return Err(Error::InvalidParameter("find_scattered needs m >= 1".into()).into());
    }
    if h < 2 {
        return Err(Error::InvalidParameter("find_scattered needs h >= 2".into()).into());
    }
    let staged = Staged::run(g, targets, r, m, h, opts);
    let mut best = (staged.bottleneck.clone(), staged.survivors.clone());

    if opts.mode == Mode::Practical {
        let blocked = staged.bottleneck.to_mask(g.n());
        let pool = targets.difference(&staged.bottleneck);
        let direct = greedy_select(g, &pool, r, &blocked);
        if direct.len() > best.1.len() {
            best.1 = direct;
        }
        if best.1.len() < m {
            if let Some(found) = escalate(g, targets, r, m, h, opts) {
                best = found;
            }
        }
    }

    if best.1.len() < m {
        let stage = staged.failed_at.unwrap_or(r);
        let reason = match opts.mode {
            Mode::Paper => format!("only {} survivors remain", staged.survivors.len()),
            Mode::Practical => format!(
                "no bottleneck of size <= {} admits one within the search budget",
                h - 2
            ),
        };
        return Err(ScatterError::Failure {
            stage,
            needed: m,
            reason,
        });
    }

    let (bottleneck, scattered) = best;
    let witness = ScatteredWitness {
        host: g,
        bottleneck,
        scattered,
        radius: r,
        stages: staged.stages,
    };
    if witness.bottleneck.len() > h - 2
        || !witness.scattered.is_subset(targets)
        || !witness.is_valid()
    {
        return Err(ScatterError::Failure {
            stage: r,
            needed: m,
            reason: "internal: candidate witness failed verification".into(),
        });
    }
    Ok(witness)
}

struct Staged {
    bottleneck: VertexSet,
    survivors: VertexSet,
    stages: Vec<ExtractionState>,
    failed_at: Option<usize>,
}

impl Staged {
    fn run(
        g: &Graph,
        targets: &VertexSet,
        r: usize,
        m: usize,
        h: usize,
        opts: &ScatterOptions,
    ) -> Self {
        let n = g.n();
        let mut bfs = Bfs::new(n);
        let mut blocked = vec![false; n];
        let mut bottleneck = VertexSet::new();
        let mut current: Vec<Vertex> = targets.iter().collect();
        let mut stages = vec![ExtractionState {
            stage: 0,
            bottleneck: VertexSet::new(),
            survivors: targets.clone(),
        }];
        let mut owner = vec![usize::MAX; n];

        for i in 0..r {
            if current.len() < m {
                return Self::finish(bottleneck, current, stages, Some(i));
            }
            // Auxiliary graph on the survivors: adjacent i-balls.
            owner.iter_mut().for_each(|o| *o = usize::MAX);
            for (idx, &u) in current.iter().enumerate() {
                for &x in bfs.run(g, [u], i, Some(&blocked)) {
                    owner[x] = idx;
                }
            }
            let mut aux = vec![Vec::new(); current.len()];
            for x in 0..n {
                let a = owner[x];
                if a == usize::MAX {
                    continue;
                }
                for &y in g.neighbors(x) {
                    let b = owner[y];
                    if b != usize::MAX && b != a {
                        aux[a].push(b);
                    }
                }
            }
            let mut excluded = vec![false; current.len()];
            let mut members = Vec::new();
            for a in 0..current.len() {
                if !excluded[a] {
                    members.push(current[a]);
                    for &b in &aux[a] {
                        excluded[b] = true;
                    }
                }
            }

            // Pump hubs shared by many (i+1)-balls into the bottleneck.
            let mut pumped = 0;
            let mut counts = vec![0usize; n];
            while bottleneck.len() < h - 2 {
                counts.iter_mut().for_each(|c| *c = 0);
                for &v in &members {
                    for &x in bfs.run(g, [v], i + 1, Some(&blocked)) {
                        counts[x] += 1;
                    }
                }
                let Some((hub, count)) = counts
                    .iter()
                    .copied()
                    .enumerate()
                    .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
                else {
                    break;
                };
                let pump = match opts.mode {
                    Mode::Paper => {
                        let inner =
                            opts.bounds
                                .c_iter(h as u64, r - (i + 1), &BigBound::finite(m as u64));
                        let threshold = opts.bounds.b_iter(h as u64, h - 2 - pumped, &inner);
                        threshold.is_exceeded_by(count)
                    }
                    Mode::Practical => {
                        let adaptive = (members.len() as f64 * opts.shrink_factor).floor() as usize;
                        count > opts.floor.max(adaptive)
                    }
                };
                if !pump {
                    break;
                }
                members.retain(|&v| {
                    v != hub && {
                        bfs.run(g, [v], i + 1, Some(&blocked));
                        bfs.reached(hub)
                    }
                });
                blocked[hub] = true;
                bottleneck.insert(hub);
                pumped += 1;
            }

            let pool: VertexSet = members.into_iter().collect();
            current = greedy_select(g, &pool, i + 1, &blocked).into_vec();
            let state = ExtractionState {
                stage: i + 1,
                bottleneck: bottleneck.clone(),
                survivors: current.iter().copied().collect(),
            };
            debug_assert!(state.check(g, h, stages.last(), false).is_ok());
            stages.push(state);
        }
        let failed = (current.len() < m).then_some(r);
        Self::finish(bottleneck, current, stages, failed)
    }

    fn finish(
        bottleneck: VertexSet,
        current: Vec<Vertex>,
        stages: Vec<ExtractionState>,
        failed_at: Option<usize>,
    ) -> Self {
        Self {
            bottleneck,
            survivors: current.into_iter().collect(),
            stages,
            failed_at,
        }
    }
}

/// Greedy `r`-scattered subset of `targets` in `G`, ascending ids.
pub(crate) fn greedy_packing(g: &Graph, targets: &VertexSet, r: usize) -> VertexSet {
    greedy_select(g, targets, r, &vec![false; g.n()])
}

/// Greedy `r`-scattered subset of `pool` in `G - blocked`, ascending ids.
fn greedy_select(g: &Graph, pool: &VertexSet, r: usize, blocked: &[bool]) -> VertexSet {
    let mut bfs = Bfs::new(g.n());
    let mut taken = vec![false; g.n()];
    let mut out = Vec::new();
    for v in pool.iter().filter(|&v| !blocked[v]) {
        let ball = bfs.run(g, [v], r, Some(blocked));
        if ball.iter().all(|&x| !taken[x]) {
            for &x in ball {
                taken[x] = true;
            }
            out.push(v);
        }
    }
    out.into_iter().collect()
}

/// Exact search for an `r`-scattered subset of size `need` among at most 64
/// candidates, extended greedily once found.
fn exact_select(
    g: &Graph,
    pool: &VertexSet,
    r: usize,
    blocked: &[bool],
    need: usize,
) -> Option<VertexSet> {
    let cand: Vec<Vertex> = pool.iter().filter(|&v| !blocked[v]).collect();
    debug_assert!(cand.len() <= 64);
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in cand.iter().enumerate() {
        index[v] = i;
    }
    let mut bfs = Bfs::new(g.n());
    let conflicts: Vec<u64> = cand
        .iter()
        .map(|&v| {
            bfs.run(g, [v], 2 * r, Some(blocked))
                .iter()
                .filter(|&&x| index[x] != usize::MAX)
                .fold(0u64, |acc, &x| acc | 1 << index[x])
        })
        .collect();

    fn search(avail: u64, chosen: u64, conflicts: &[u64], need: u32) -> Option<u64> {
        if chosen.count_ones() >= need {
            return Some(chosen);
        }
        if chosen.count_ones() + avail.count_ones() < need {
            return None;
        }
        let v = avail.trailing_zeros() as usize;
        let bit = 1u64 << v;
        search(avail & !conflicts[v] & !bit, chosen | bit, conflicts, need)
            .or_else(|| search(avail & !bit, chosen, conflicts, need))
    }

    let all = if cand.len() == 64 {
        u64::MAX
    } else {
        (1u64 << cand.len()) - 1
    };
    let mut chosen = search(all, 0, &conflicts, need as u32)?;
    let mut free = all;
    for i in 0..cand.len() {
        if chosen >> i & 1 == 1 {
            free &= !conflicts[i];
        }
    }
    for i in 0..cand.len() {
        if free >> i & 1 == 1 {
            chosen |= 1 << i;
            free &= !conflicts[i];
        }
    }
    Some(
        (0..cand.len())
            .filter(|&i| chosen >> i & 1 == 1)
            .map(|i| cand[i])
            .collect(),
    )
}

/// Fallback for the practical mode: try bottlenecks in increasing size,
/// hubs first, selecting exactly when the candidate set is small.
fn escalate(
    g: &Graph,
    targets: &VertexSet,
    r: usize,
    m: usize,
    h: usize,
    opts: &ScatterOptions,
) -> Option<(VertexSet, VertexSet)> {
    let n = g.n();
    let pool: Vec<Vertex> = if n <= FULL_POOL_LIMIT {
        (0..n).collect()
    } else {
        let mut coverage = vec![0usize; n];
        let mut bfs = Bfs::new(n);
        for w in targets.iter() {
            for &x in bfs.run(g, [w], r, None) {
                coverage[x] += 1;
            }
        }
        let mut order: Vec<Vertex> = (0..n).collect();
        order.sort_by(|&a, &b| coverage[b].cmp(&coverage[a]).then(a.cmp(&b)));
        order.truncate(opts.pool_size);
        order
    };
    let mut budget = opts.escalation_budget;
    for size in 0..=(h - 2).min(pool.len()) {
        for combo in Combinations::new(pool.len(), size) {
            if budget == 0 {
                return None;
            }
            budget -= 1;
            let bottleneck: VertexSet = combo.iter().map(|&i| pool[i]).collect();
            let blocked = bottleneck.to_mask(n);
            let cand = targets.difference(&bottleneck);
            let chosen = if cand.len() <= opts.exact_guard.min(64) {
                exact_select(g, &cand, r, &blocked, m)
            } else {
                Some(greedy_select(g, &cand, r, &blocked))
            };
            if let Some(a) = chosen.filter(|a| a.len() >= m) {
                return Some((bottleneck, a));
            }
        }
    }
    None
}

/// Guard on the number of bottlenecks [`brute_force_scattered`] will try.
pub const BRUTE_FORCE_BOTTLENECKS: u128 = 2_000_000;

/// Exhaustive search: bottlenecks `S` with `|S| <= s_max` by increasing
/// size then lexicographically, and for each the lexicographically first
/// independent set of size `m` in `(G - S)^{2r}` restricted to `W \ S`.
pub fn brute_force_scattered<'g>(
    g: &'g Graph,
    targets: &VertexSet,
    r: usize,
    m: usize,
    s_max: usize,
) -> Result<Option<ScatteredWitness<'g>>> {
    targets.check_range(g.n())?;
    let n = g.n();
    if n > 25 && s_max > 2 {
        return Err(Error::GuardExceeded {
            what: "brute_force_scattered graph order with s_max > 2",
            size: n as u128,
            limit: 25,
        });
    }
    let total: u128 = (0..=s_max.min(n))
        .map(|s| binomial(n as u64, s as u64))
        .fold(0u128, u128::saturating_add);
    if total > BRUTE_FORCE_BOTTLENECKS {
        return Err(Error::GuardExceeded {
            what: "brute_force_scattered bottleneck count",
            size: total,
            limit: BRUTE_FORCE_BOTTLENECKS,
        });
    }
    for size in 0..=s_max.min(n) {
        for combo in Combinations::new(n, size) {
            let bottleneck: VertexSet = combo.into_iter().collect();
            let (rest, remap) = g.delete(&bottleneck)?;
            let conflict = if r == 0 {
                Graph::empty(rest.n())
            } else {
                rest.power(2 * r)?
            };
            let pool: Vec<Vertex> = remap.forward(targets).into_vec();
            let mut picked = Vec::new();
            if independent_dfs(&conflict, &pool, 0, m, &mut picked) {
                let scattered = picked.iter().map(|&v| remap.to_old(v)).collect();
                return Ok(Some(ScatteredWitness {
                    host: g,
                    bottleneck,
                    scattered,
                    radius: r,
                    stages: Vec::new(),
                }));
            }
        }
    }
    Ok(None)
}

fn independent_dfs(
    g: &Graph,
    pool: &[Vertex],
    from: usize,
    need: usize,
    picked: &mut Vec<Vertex>,
) -> bool {
    if picked.len() == need {
        return true;
    }
    if picked.len() + (pool.len() - from) < need {
        return false;
    }
    for i in from..pool.len() {
        let v = pool[i];
        if picked.iter().all(|&p| !g.has_edge(p, v)) {
            picked.push(v);
            if independent_dfs(g, pool, i + 1, need, picked) {
                return true;
            }
            picked.pop();
        }
    }
    false
}

/// Largest graph [`shallow_clique_minor`] accepts.
pub const MINOR_ORACLE_LIMIT: usize = 16;

/// `true` iff `K_h` is a minor of `G` at depth `r`: there are `h` disjoint
/// connected branch sets, each inside some `r`-ball, pairwise joined by an
/// edge. Exhaustive over vertex subsets.
pub fn shallow_clique_minor(g: &Graph, h: usize, r: usize) -> Result<bool> {
    let n = g.n();
    if n > MINOR_ORACLE_LIMIT {
        return Err(Error::GuardExceeded {
            what: "shallow_clique_minor graph order",
            size: n as u128,
            limit: MINOR_ORACLE_LIMIT as u128,
        });
    }
    if h == 0 {
        return Ok(true);
    }
    if h > n {
        return Ok(false);
    }
    let nbr: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |a, &u| a | 1 << u))
        .collect();
    let mut bfs = Bfs::new(n);
    let balls: Vec<u32> = (0..n)
        .map(|v| {
            bfs.run(g, [v], r, None)
                .iter()
                .fold(0u32, |a, &u| a | 1 << u)
        })
        .collect();

    let connected = |set: u32| -> bool {
        let start = set.trailing_zeros();
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = nbr[v] & set & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen == set
    };

    // Candidate branch sets grouped by their minimum vertex.
    let mut by_min: Vec<Vec<(u32, u32)>> = vec![Vec::new(); n];
    for set in 1u32..(1u32 << n) {
        if balls.iter().any(|&b| set & !b == 0) && connected(set) {
            let mut reach = 0u32;
            let mut rest = set;
            while rest != 0 {
                reach |= nbr[rest.trailing_zeros() as usize];
                rest &= rest - 1;
            }
            by_min[set.trailing_zeros() as usize].push((set, reach));
        }
    }

    fn search(
        by_min: &[Vec<(u32, u32)>],
        chosen: &mut Vec<(u32, u32)>,
        used: u32,
        next_min: usize,
        h: usize,
    ) -> bool {
        if chosen.len() == h {
            return true;
        }
        let n = by_min.len();
        let remaining = (next_min..n).filter(|&v| used >> v & 1 == 0).count();
        if remaining < h - chosen.len() {
            return false;
        }
        for lo in next_min..n {
            if used >> lo & 1 == 1 {
                continue;
            }
            for &(set, reach) in &by_min[lo] {
                if set & used != 0 || !chosen.iter().all(|&(s, _)| s & reach != 0) {
                    continue;
                }
                chosen.push((set, reach));
                if search(by_min, chosen, used | set, lo + 1, h) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    Ok(search(&by_min, &mut Vec::new(), 0, 0, h))
}
