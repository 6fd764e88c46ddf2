//! Connected and `d`-connected distance-`d` domination.

use crate::bounds::ClassProfile;
use crate::domination::{
    candidate_balls, drive, Answer, DominationInstance, SolveOptions, SolveOutcome,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

use super::trees::{enumerate_trees, tree_homomorphism};

/// Picks `x_i ∈ X_i` for every `i` so that the picks induce a connected
/// subgraph. The sets must be pairwise disjoint.
pub fn select_connected(g: &Graph, sets: &[VertexSet]) -> Result<Option<VertexSet>> {
    for (i, a) in sets.iter().enumerate() {
        a.check_range(g.n())?;
        if let Some(b) = sets[i + 1..].iter().find(|b| !a.is_disjoint(b)) {
            return Err(Error::Precondition(format!(
                "selection sets {a:?} and {b:?} overlap"
            )));
        }
    }
    if sets.is_empty() {
        return Ok(Some(VertexSet::new()));
    }
    let domains: Vec<Vec<Vertex>> = sets.iter().map(|s| s.as_slice().to_vec()).collect();
    for tree in enumerate_trees(sets.len())? {
        if let Some(pick) = tree_homomorphism(g, &tree, &domains) {
            let x: VertexSet = pick.into_iter().collect();
            if x.len() == sets.len() && g.induces_connected(&x) {
                return Ok(Some(x));
            }
        }
    }
    Ok(None)
}

/// Settings for the connected small-core solvers.
#[derive(Clone, Copy, Debug)]
pub struct ConnectedOptions {
    pub guard: usize,
    pub exact_k: bool,
}

impl Default for ConnectedOptions {
    fn default() -> Self {
        Self {
            guard: crate::domination::DEFAULT_GUARD,
            exact_k: false,
        }
    }
}

/// Grows `x` to `k` vertices along `adjacency`, lowest ids first.
fn pad_connected(
    x: VertexSet,
    k: usize,
    adjacency: &Graph,
    candidates: &VertexSet,
) -> Option<VertexSet> {
    let mut x = x;
    while x.len() < k {
        let next = candidates.iter().find(|&c| {
            !x.contains(c)
                && (x.is_empty() || adjacency.neighbors(c).iter().any(|&u| x.contains(u)))
        })?;
        x.insert(next);
    }
    Some(x)
}

/// `X` dominates through `inst.graph` and is connected in `adjacency`.
///
/// Grows connected candidate sets from the vertices able to cover the most
/// constrained target, branching on include/exclude of each frontier
/// vertex so that every connected set is visited once. Budgets grow from 1
/// to `k`, so the answer has minimum size.
fn connected_core(
    inst: &DominationInstance<'_>,
    adjacency: &Graph,
    opts: ConnectedOptions,
) -> Result<Option<VertexSet>> {
    inst.validate()?;
    if inst.targets.len() > opts.guard {
        return Err(Error::GuardExceeded {
            what: "connected small-core |W| (use the kernel driver for larger target sets)",
            size: inst.targets.len() as u128,
            limit: opts.guard as u128,
        });
    }
    let finish = |x: VertexSet| -> Option<VertexSet> {
        let x = if opts.exact_k {
            pad_connected(x, inst.k, adjacency, &inst.candidates)?
        } else {
            x
        };
        (inst.accepts(&x) && adjacency.induces_connected(&x)).then_some(x)
    };
    if inst.targets.is_empty() {
        return Ok(finish(VertexSet::new()));
    }
    let n = inst.graph.n();
    let allowed = inst.candidates.to_mask(n);
    let balls = candidate_balls(inst.graph, &inst.targets, inst.d, &allowed);
    if balls.iter().any(|b| b.is_empty()) {
        return Ok(None);
    }
    let mut covers = vec![Vec::new(); n];
    for (t, ball) in balls.iter().enumerate() {
        for &x in ball {
            covers[x].push(t);
        }
    }
    let root_target = (0..balls.len())
        .min_by_key(|&t| balls[t].len())
        .expect("targets are nonempty");
    let mut search = ConnectedSearch {
        adjacency,
        balls: &balls,
        covers: &covers,
        allowed: &allowed,
        count: vec![0; balls.len()],
        state: vec![State::Free; n],
        dist: vec![usize::MAX; n],
        queue: Vec::new(),
    };
    for budget in 1..=inst.k.min(inst.candidates.len()) {
        let roots = balls[root_target].clone();
        let mut banned = Vec::new();
        for &r in &roots {
            let mut chosen = Vec::new();
            let found = search.include(r, &mut chosen, &mut Vec::new(), budget);
            if found {
                if let Some(x) = finish(chosen.into_iter().collect()) {
                    for b in banned {
                        search.state[b] = State::Free;
                    }
                    return Ok(Some(x));
                }
            }
            search.state[r] = State::Banned;
            banned.push(r);
        }
        for b in banned {
            search.state[b] = State::Free;
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Free,
    Chosen,
    Frontier,
    Banned,
}

struct ConnectedSearch<'a> {
    adjacency: &'a Graph,
    balls: &'a [Vec<Vertex>],
    covers: &'a [Vec<usize>],
    allowed: &'a [bool],
    /// How many chosen vertices cover each target.
    count: Vec<u32>,
    state: Vec<State>,
    dist: Vec<usize>,
    queue: Vec<Vertex>,
}

impl ConnectedSearch<'_> {
    /// Adds `v`, recurses, and on failure undoes the change. On success the
    /// state is left as is and `chosen` holds the answer.
    fn include(
        &mut self,
        v: Vertex,
        chosen: &mut Vec<Vertex>,
        frontier: &mut Vec<Vertex>,
        budget: usize,
    ) -> bool {
        self.state[v] = State::Chosen;
        chosen.push(v);
        for &t in &self.covers[v] {
            self.count[t] += 1;
        }
        let mut added = Vec::new();
        for &u in self.adjacency.neighbors(v) {
            if self.allowed[u] && self.state[u] == State::Free {
                self.state[u] = State::Frontier;
                frontier.push(u);
                added.push(u);
            }
        }
        let found = self.grow(chosen, frontier, budget);
        if found {
            return true;
        }
        for &u in &added {
            self.state[u] = State::Free;
        }
        frontier.truncate(frontier.len() - added.len());
        for &t in &self.covers[v] {
            self.count[t] -= 1;
        }
        chosen.pop();
        self.state[v] = State::Free;
        false
    }

    fn grow(
        &mut self,
        chosen: &mut Vec<Vertex>,
        frontier: &mut Vec<Vertex>,
        budget: usize,
    ) -> bool {
        if self.count.iter().all(|&c| c > 0) {
            return true;
        }
        let left = budget - chosen.len();
        if left == 0 || frontier.is_empty() || self.lower_bound(chosen) > left {
            return false;
        }
        // Branch on the lowest frontier vertex: take it, or ban it.
        let (pos, &v) = frontier
            .iter()
            .enumerate()
            .min_by_key(|(_, &u)| u)
            .expect("nonempty");
        frontier.swap_remove(pos);
        let found = self.include(v, chosen, frontier, budget);
        if found {
            return true;
        }
        self.state[v] = State::Banned;
        let found = self.grow(chosen, frontier, budget);
        if found {
            return true;
        }
        self.state[v] = State::Frontier;
        frontier.push(v);
        let last = frontier.len() - 1;
        frontier.swap(pos, last);
        false
    }

    /// Vertices still needed: the farthest uncovered target's distance from
    /// the chosen set, walking through usable vertices.
    fn lower_bound(&mut self, chosen: &[Vertex]) -> usize {
        for &v in &self.queue {
            self.dist[v] = usize::MAX;
        }
        self.queue.clear();
        for &v in chosen {
            self.dist[v] = 0;
            self.queue.push(v);
        }
        let mut head = 0;
        while head < self.queue.len() {
            let u = self.queue[head];
            head += 1;
            for &w in self.adjacency.neighbors(u) {
                if self.dist[w] == usize::MAX && self.allowed[w] && self.state[w] != State::Banned {
                    self.dist[w] = self.dist[u] + 1;
                    self.queue.push(w);
                }
            }
        }
        let mut need = 0;
        for (t, ball) in self.balls.iter().enumerate() {
            if self.count[t] == 0 {
                let best = ball
                    .iter()
                    .map(|&x| self.dist[x])
                    .min()
                    .unwrap_or(usize::MAX);
                need = need.max(best);
            }
        }
        need
    }
}

/// Connected distance-`d` domination on a small target set.
pub fn solve_connected(
    inst: &DominationInstance<'_>,
    opts: ConnectedOptions,
) -> Result<Option<VertexSet>> {
    connected_core(inst, inst.graph, opts)
}

/// The graph in which `d`-connectivity is measured.
fn connectivity_graph(g: &Graph, d: usize) -> Result<Graph> {
    if d == 0 {
        Ok(Graph::empty(g.n()))
    } else {
        g.power(d)
    }
}

/// Distance-`d` domination by a set that is connected in `G^d`.
pub fn solve_d_connected(
    inst: &DominationInstance<'_>,
    opts: ConnectedOptions,
) -> Result<Option<VertexSet>> {
    let power = connectivity_graph(inst.graph, inst.d)?;
    connected_core(inst, &power, opts)
}

fn connected_driver(
    inst: &DominationInstance<'_>,
    profile: &ClassProfile,
    opts: &SolveOptions,
    adjacency: &Graph,
) -> Result<SolveOutcome> {
    let core_opts = ConnectedOptions {
        guard: opts.guard_core,
        exact_k: opts.exact_k,
    };
    let mut core = |reduced: &DominationInstance<'_>| -> Result<Answer<VertexSet>> {
        if reduced.targets.len() > core_opts.guard {
            return Ok(Answer::Inconclusive {
                remaining: reduced.targets.len(),
                reason: format!("kernel exceeds the core guard {}", core_opts.guard),
            });
        }
        Ok(connected_core(reduced, adjacency, core_opts)?.map_or(Answer::No, Answer::Yes))
    };
    let out = drive(inst, profile, opts, &mut core)?;
    if let Some(x) = out.answer.witness() {
        if !inst.accepts(x) || !adjacency.induces_connected(x) {
            return Err(Error::Precondition(
                "internal: connected answer failed verification".into(),
            ));
        }
    }
    Ok(out)
}

/// Kernel driver with the connected solver on the final kernel.
pub fn solve_connected_driver(
    inst: &DominationInstance<'_>,
    profile: &ClassProfile,
    opts: &SolveOptions,
) -> Result<SolveOutcome> {
    connected_driver(inst, profile, opts, inst.graph)
}

/// Kernel driver with the `d`-connected solver on the final kernel.
pub fn solve_d_connected_driver(
    inst: &DominationInstance<'_>,
    profile: &ClassProfile,
    opts: &SolveOptions,
) -> Result<SolveOutcome> {
    let power = connectivity_graph(inst.graph, inst.d)?;
    connected_driver(inst, profile, opts, &power)
}
