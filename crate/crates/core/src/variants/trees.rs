//! Labeled trees and tree-shaped selections.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Largest tree order [`enumerate_trees`] accepts.
pub const TREE_GUARD: usize = 8;

/// A labeled tree on nodes `0..k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbstractTree {
    k: usize,
    edges: Vec<(usize, usize)>,
}

impl AbstractTree {
    pub fn order(&self) -> usize {
        self.k
    }

    /// The `k - 1` edges as `(min, max)` pairs, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.k];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    fn from_prufer(seq: &[usize]) -> Self {
        let k = seq.len() + 2;
        let mut degree = vec![1usize; k];
        for &x in seq {
            degree[x] += 1;
        }
        let mut edges = Vec::with_capacity(k - 1);
        for &x in seq {
            let leaf = (0..k)
                .find(|&v| degree[v] == 1)
                .expect("a leaf always exists");
            edges.push((leaf.min(x), leaf.max(x)));
            degree[leaf] = 0;
            degree[x] -= 1;
        }
        let rest: Vec<usize> = (0..k).filter(|&v| degree[v] == 1).collect();
        edges.push((rest[0], rest[1]));
        edges.sort_unstable();
        Self { k, edges }
    }
}

/// Every labeled tree on `k` nodes exactly once, in lexicographic order of
/// Prüfer sequences.
pub fn enumerate_trees(k: usize) -> Result<impl Iterator<Item = AbstractTree>> {
    if k == 0 {
        return Err(Error::InvalidParameter(
            "trees need at least one node".into(),
        ));
    }
    if k > TREE_GUARD {
        return Err(Error::GuardExceeded {
            what: "tree enumeration order",
            size: k as u128,
            limit: TREE_GUARD as u128,
        });
    }
    let len = k.saturating_sub(2);
    let total = if k <= 2 { 1 } else { k.pow(len as u32) };
    Ok((0..total).map(move |mut code| match k {
        1 => AbstractTree {
            k,
            edges: Vec::new(),
        },
        2 => AbstractTree {
            k,
            edges: vec![(0, 1)],
        },
        _ => {
            let mut seq = vec![0; len];
            for slot in seq.iter_mut().rev() {
                *slot = code % k;
                code /= k;
            }
            AbstractTree::from_prufer(&seq)
        }
    }))
}

/// Maps tree nodes to graph vertices so that tree edges become graph edges,
/// with node `i` taken from `domains[i]` (sorted). Prunes unsupported values
/// to a fixpoint and then extracts the lowest consistent choice top-down
/// from node 0. Returns one vertex per node, or `None`.
pub(crate) fn tree_homomorphism(
    g: &Graph,
    tree: &AbstractTree,
    domains: &[Vec<Vertex>],
) -> Option<Vec<Vertex>> {
    let adj = tree.adjacency();
    let mut live: Vec<Vec<Vertex>> = domains.to_vec();
    let mut mark = vec![0usize; g.n()];
    let mut tag = 0;
    loop {
        let mut changed = false;
        for i in 0..tree.k {
            for &j in &adj[i] {
                tag += 1;
                for &u in &live[j] {
                    mark[u] = tag;
                }
                let before = live[i].len();
                live[i].retain(|&v| g.neighbors(v).iter().any(|&u| mark[u] == tag));
                if live[i].is_empty() {
                    return None;
                }
                changed |= live[i].len() != before;
            }
        }
        if !changed {
            break;
        }
    }
    let mut pick = vec![usize::MAX; tree.k];
    pick[0] = live[0][0];
    let mut stack = vec![0];
    let mut seen = vec![false; tree.k];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for &j in &adj[i] {
            if seen[j] {
                continue;
            }
            seen[j] = true;
            pick[j] = *live[j].iter().find(|&&u| g.has_edge(pick[i], u))?;
            stack.push(j);
        }
    }
    Some(pick)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Spanning trees of K_k by brute force over edge subsets.
    fn count_by_edge_sets(k: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (0..k)
            .flat_map(|a| (a + 1..k).map(move |b| (a, b)))
            .collect();
        (0u32..1 << pairs.len())
            .filter(|mask| mask.count_ones() as usize == k - 1)
            .filter(|mask| {
                let edges = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e);
                let g = Graph::from_edges(k, edges).unwrap();
                g.induces_connected(&g.vertices())
            })
            .count()
    }

    #[test]
    fn cayley_counts() {
        assert_eq!(enumerate_trees(1).unwrap().count(), 1);
        assert_eq!(enumerate_trees(2).unwrap().count(), 1);
        assert_eq!(enumerate_trees(3).unwrap().count(), 3);
        assert_eq!(enumerate_trees(4).unwrap().count(), 16);
        for k in 1..=7 {
            let trees: HashSet<AbstractTree> = enumerate_trees(k).unwrap().collect();
            let expected = if k == 1 { 1 } else { k.pow(k as u32 - 2) };
            assert_eq!(trees.len(), expected, "k={k}");
            for t in &trees {
                assert_eq!(t.edges().len(), k - 1);
                let g = Graph::from_edges(k, t.edges().iter().copied()).unwrap();
                assert!(g.induces_connected(&g.vertices()));
            }
        }
        for k in 2..=5 {
            assert_eq!(count_by_edge_sets(k), enumerate_trees(k).unwrap().count());
        }
        assert!(enumerate_trees(9).is_err());
        assert!(enumerate_trees(0).is_err());
    }

    #[test]
    fn homomorphism_respects_edges() {
        // Path 0-1-2-3-4, tree 0-1-2 as a path.
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let tree = AbstractTree {
            k: 3,
            edges: vec![(0, 1), (1, 2)],
        };
        let pick = tree_homomorphism(&g, &tree, &[vec![0, 4], vec![1, 3], vec![2]]).unwrap();
        assert_eq!(pick, vec![0, 1, 2]);
        assert!(tree_homomorphism(&g, &tree, &[vec![0], vec![1], vec![4]]).is_none());
    }
}
