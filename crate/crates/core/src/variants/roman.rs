//! Roman domination by bounded-depth branching on bottleneck vertices.

use serde::Serialize;

use crate::bounds::ClassProfile;
use crate::combinatorics::{binomial, Combinations};
use crate::domination::Answer;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::wideness::{scatter_full, ScatterOptions};
use crate::Mode;

/// Labels in `{0, 1, 2}`; every 0 needs a neighbour labelled 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct RomanLabeling {
    labels: Vec<u8>,
}

impl RomanLabeling {
    pub fn new(labels: Vec<u8>) -> Result<Self> {
        if let Some(v) = labels.iter().position(|&l| l > 2) {
            return Err(Error::InvalidParameter(format!(
                "label {} at vertex {v}",
                labels[v]
            )));
        }
        Ok(Self { labels })
    }

    /// Label 2 on `twos`, 0 on their neighbours, 1 elsewhere.
    pub fn from_twos(g: &Graph, twos: &VertexSet) -> Self {
        let mut labels = vec![1u8; g.n()];
        for t in twos.iter() {
            for &u in g.neighbors(t) {
                labels[u] = 0;
            }
        }
        for t in twos.iter() {
            labels[t] = 2;
        }
        Self { labels }
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> u8 {
        self.labels[v]
    }

    pub fn weight(&self) -> usize {
        self.labels.iter().map(|&l| l as usize).sum()
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        self.labels.len() == g.n()
            && (0..g.n())
                .all(|v| self.labels[v] != 0 || g.neighbors(v).iter().any(|&u| self.labels[u] == 2))
    }
}

#[derive(Clone, Debug)]
pub struct RomanOptions {
    pub mode: Mode,
    /// Graphs up to this order go straight to the exhaustive base case.
    pub base_vertices: usize,
    /// Largest number of label-2 sets the base case may try.
    pub base_budget: u128,
    /// Largest bottleneck the practical mode asks for.
    pub s_cap: usize,
    pub scatter: ScatterOptions,
}

impl Default for RomanOptions {
    fn default() -> Self {
        Self {
            mode: Mode::Practical,
            base_vertices: 16,
            base_budget: 5_000_000,
            s_cap: 2,
            scatter: ScatterOptions::default(),
        }
    }
}

struct Roman<'a> {
    g: &'a Graph,
    profile: &'a ClassProfile,
    opts: &'a RomanOptions,
}

impl Roman<'_> {
    /// New label-2 vertices (outside `fixed`) covering the requirement set
    /// `need` within `budget`, counting 1 for every uncovered vertex.
    fn solve(
        &self,
        fixed: &VertexSet,
        need: &VertexSet,
        budget: usize,
    ) -> Result<Answer<VertexSet>> {
        if need.is_empty() {
            return Ok(Answer::Yes(VertexSet::new()));
        }
        let pool = self.g.set_ball(need, 1)?.difference(fixed);
        let count = (0..=budget / 2)
            .map(|j| binomial(pool.len() as u64, j as u64))
            .fold(0u128, u128::saturating_add);
        let affordable = count <= self.opts.base_budget;
        if affordable && self.g.n() <= self.opts.base_vertices {
            return Ok(self.base(&pool, need, budget));
        }
        // Every solution labels some bottleneck vertex 2.
        let m = 2 * budget + 1;
        let mut scatter = self.opts.scatter.clone();
        scatter.mode = self.opts.mode;
        let heights: Vec<usize> = match self.opts.mode {
            Mode::Paper => vec![self.profile.h(2)],
            Mode::Practical => (0..=self.opts.s_cap).map(|s| s + 2).collect(),
        };
        let witness = heights
            .into_iter()
            .find_map(|h| scatter_full(self.g, need, 2, m, h, &scatter).ok());
        let Some(witness) = witness else {
            return Ok(if affordable {
                self.base(&pool, need, budget)
            } else {
                Answer::Inconclusive {
                    remaining: need.len(),
                    reason: format!(
                        "no scattered witness and {count} base-case sets exceed the budget"
                    ),
                }
            });
        };
        let branches = witness.bottleneck().difference(fixed);
        if branches.is_empty() || budget < 2 {
            return Ok(Answer::No);
        }
        let mut unresolved = None;
        for s in branches.iter() {
            let mut next_fixed = fixed.clone();
            next_fixed.insert(s);
            let next_need = need.difference(&self.g.ball(s, 1)?);
            match self.solve(&next_fixed, &next_need, budget - 2)? {
                Answer::Yes(mut twos) => {
                    twos.insert(s);
                    return Ok(Answer::Yes(twos));
                }
                Answer::No => {}
                inconclusive => unresolved = Some(inconclusive),
            }
        }
        Ok(unresolved.unwrap_or(Answer::No))
    }

    fn base(&self, pool: &VertexSet, need: &VertexSet, budget: usize) -> Answer<VertexSet> {
        let pool = pool.as_slice();
        for size in 0..=(budget / 2).min(pool.len()) {
            for combo in Combinations::new(pool.len(), size) {
                let twos: VertexSet = combo.iter().map(|&i| pool[i]).collect();
                let covered = self.g.set_ball(&twos, 1).expect("pool is in range");
                if 2 * size + need.difference(&covered).len() <= budget {
                    return Answer::Yes(twos);
                }
            }
        }
        Answer::No
    }
}

/// A Roman domination function of weight at most `k`.
pub fn solve_roman(
    g: &Graph,
    k: usize,
    profile: &ClassProfile,
    opts: &RomanOptions,
) -> Result<Answer<RomanLabeling>> {
    let solver = Roman { g, profile, opts };
    let answer = solver.solve(&VertexSet::new(), &g.vertices(), k)?;
    let answer = answer.map(|twos| RomanLabeling::from_twos(g, &twos));
    if let Some(l) = answer.witness() {
        if !l.is_valid(g) || l.weight() > k {
            return Err(Error::Precondition(
                "internal: Roman labeling failed verification".into(),
            ));
        }
    }
    Ok(answer)
}
