//! Efficient domination: exactly `k` vertices, pairwise at distance at
//! least 3, dominating every vertex.

use crate::bounds::ClassProfile;
use crate::domination::{
    candidate_balls, drive, walk_partitions, Answer, DominationInstance, SolveOptions, SolveOutcome,
};
use crate::error::{Error, Result};
use crate::graph::{Bfs, Graph, Vertex, VertexSet};

/// `true` iff the closed neighbourhoods of `x` are pairwise disjoint.
pub fn is_efficient(g: &Graph, x: &VertexSet) -> bool {
    let mut owner = vec![false; g.n()];
    for v in x.iter() {
        for u in std::iter::once(v).chain(g.neighbors(v).iter().copied()) {
            if std::mem::replace(&mut owner[u], true) {
                return false;
            }
        }
    }
    true
}

struct Picker<'a> {
    g: &'a Graph,
    bfs: Bfs,
    /// Number of chosen vertices within distance 2.
    near: Vec<u32>,
}

impl Picker<'_> {
    fn toggle(&mut self, v: Vertex, on: bool) {
        let ball: Vec<Vertex> = self.bfs.run(self.g, [v], 2, None).to_vec();
        for u in ball {
            if on {
                self.near[u] += 1;
            } else {
                self.near[u] -= 1;
            }
        }
    }

    /// One vertex per block, pairwise at distance >= 3.
    fn choose(&mut self, blocks: &[Vec<Vertex>], chosen: &mut Vec<Vertex>) -> bool {
        let Some(block) = blocks.get(chosen.len()) else {
            return true;
        };
        for &x in block {
            if self.near[x] > 0 {
                continue;
            }
            self.toggle(x, true);
            chosen.push(x);
            if self.choose(blocks, chosen) {
                return true;
            }
            chosen.pop();
            self.toggle(x, false);
        }
        false
    }

    /// Adds vertices far from every chosen one until there are `k`.
    fn pad(&mut self, chosen: &mut Vec<Vertex>, k: usize) -> bool {
        for v in 0..self.g.n() {
            if chosen.len() >= k {
                break;
            }
            if self.near[v] == 0 {
                self.toggle(v, true);
                chosen.push(v);
            }
        }
        chosen.len() == k
    }

    fn reset(&mut self, chosen: &[Vertex]) {
        for &v in chosen {
            self.toggle(v, false);
        }
    }
}

/// Small-core search: partitions of `W` into at most `k` blocks, one
/// representative per block with all representatives pairwise at distance
/// at least 3, padded to exactly `k`.
fn efficient_core(inst: &DominationInstance<'_>, guard: usize) -> Result<Option<VertexSet>> {
    if inst.targets.len() > guard {
        return Err(Error::GuardExceeded {
            what: "efficient small-core |W|",
            size: inst.targets.len() as u128,
            limit: guard as u128,
        });
    }
    let g = inst.graph;
    let allowed = inst.candidates.to_mask(g.n());
    let balls = candidate_balls(g, &inst.targets, inst.d, &allowed);
    let mut picker = Picker {
        g,
        bfs: Bfs::new(g.n()),
        near: vec![0; g.n()],
    };
    Ok(walk_partitions(&balls, inst.k, &mut |blocks| {
        let mut chosen = Vec::new();
        if !picker.choose(blocks, &mut chosen) {
            return None;
        }
        let ok = picker.pad(&mut chosen, inst.k);
        picker.reset(&chosen);
        let x: VertexSet = chosen.into_iter().collect();
        (ok && inst.accepts(&x) && is_efficient(g, &x)).then_some(x)
    }))
}

/// Efficient dominating set of size exactly `k`, via the kernel driver at
/// `d = 1`.
pub fn solve_efficient(
    g: &Graph,
    k: usize,
    profile: &ClassProfile,
    opts: &SolveOptions,
) -> Result<SolveOutcome> {
    let inst = DominationInstance::new(g, k, 1);
    let guard = opts.guard_core;
    let mut core = |reduced: &DominationInstance<'_>| -> Result<Answer<VertexSet>> {
        if reduced.targets.len() > guard {
            return Ok(Answer::Inconclusive {
                remaining: reduced.targets.len(),
                reason: format!("kernel exceeds the core guard {guard}"),
            });
        }
        Ok(efficient_core(reduced, guard)?.map_or(Answer::No, Answer::Yes))
    };
    let out = drive(&inst, profile, opts, &mut core)?;
    if let Some(x) = out.answer.witness() {
        if x.len() != k || !g.dominates(x, &g.vertices(), 1)? || !is_efficient(g, x) {
            return Err(Error::Precondition(
                "internal: efficient answer failed verification".into(),
            ));
        }
    }
    Ok(out)
}
