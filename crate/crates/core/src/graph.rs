//! Graph representation and the basic distance predicates.
//!
//! Vertices are dense ids `0..n`. Neighbour lists are kept sorted, so
//! iteration order (and therefore every greedy choice made downstream) is
//! deterministic. Graphs are immutable once built.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// A sorted, duplicate-free set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn singleton(v: Vertex) -> Self {
        Self(vec![v])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Returns `true` if `v` was not yet present.
    pub fn insert(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    /// Returns `true` if `v` was present.
    pub fn remove(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(pos) => {
                self.0.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| !other.contains(v)).collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| other.contains(v)).collect()
    }

    /// Boolean membership mask of length `n`. Ids `>= n` are ignored.
    pub fn to_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for v in self.iter().filter(|&v| v < n) {
            mask[v] = true;
        }
        mask
    }

    pub fn check_range(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(v: Vec<Vertex>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(v: [Vertex; N]) -> Self {
        v.into_iter().collect()
    }
}

impl IntoIterator for VertexSet {
    type Item = Vertex;
    type IntoIter = std::vec::IntoIter<Vertex>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = Vertex;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, Vertex>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// Simple graph with sorted adjacency lists. For directed graphs the lists
/// hold out-neighbours.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    directed: bool,
    edges: usize,
}

impl Graph {
    /// Graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Self {
        Self {
            adjacency: vec![Vec::new(); n],
            directed: false,
            edges: 0,
        }
    }

    /// Builds an undirected graph, rejecting self-loops, duplicate edges and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::build(n, edges, false)
    }

    /// Builds a directed graph from arcs `(tail, head)`.
    pub fn directed_from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::build(n, arcs, true)
    }

    fn build<I>(n: usize, edges: I, directed: bool) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        let mut count = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            if u == v {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    reason: "self-loop",
                });
            }
            adjacency[u].push(v);
            if !directed {
                adjacency[v].push(u);
            }
            count += 1;
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::InvalidEdge {
                    u,
                    v: w[0],
                    reason: "duplicate edge",
                });
            }
        }
        Ok(Self {
            adjacency,
            directed,
            edges: count,
        })
    }

    /// Trusted constructor for lists that are already sorted, symmetric and
    /// loop-free.
    pub(crate) fn from_sorted_adjacency(adjacency: Vec<Vec<Vertex>>, directed: bool) -> Self {
        let total: usize = adjacency.iter().map(Vec::len).sum();
        let edges = if directed { total } else { total / 2 };
        debug_assert!(adjacency
            .iter()
            .enumerate()
            .all(|(u, l)| l.windows(2).all(|w| w[0] < w[1]) && !l.contains(&u)));
        Self {
            adjacency,
            directed,
            edges,
        }
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Edges as `(u, v)`; undirected edges are reported once with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(move |(u, list)| {
                list.iter()
                    .copied()
                    .filter(move |&v| self.directed || u < v)
                    .map(move |v| (u, v))
            })
    }

    /// In-degree of every vertex (equals the degree for undirected graphs).
    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n()];
        for list in &self.adjacency {
            for &v in list {
                deg[v] += 1;
            }
        }
        deg
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// Exact distances from `v` to every vertex at distance at most `cap`.
    pub fn bfs_distances(&self, v: Vertex, cap: usize) -> Result<BTreeMap<Vertex, usize>> {
        self.check_vertex(v)?;
        let mut bfs = Bfs::new(self.n());
        bfs.run(self, [v], cap, None);
        Ok(bfs.visited().iter().map(|&u| (u, bfs.dist[u])).collect())
    }

    /// The closed `d`-neighbourhood of `v`.
    pub fn ball(&self, v: Vertex, d: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        let mut bfs = Bfs::new(self.n());
        Ok(bfs.run(self, [v], d, None).iter().copied().collect())
    }

    /// Union of the `d`-balls around the members of `set`.
    pub fn set_ball(&self, set: &VertexSet, d: usize) -> Result<VertexSet> {
        set.check_range(self.n())?;
        let mut bfs = Bfs::new(self.n());
        Ok(bfs.run(self, set.iter(), d, None).iter().copied().collect())
    }

    /// The induced subgraph on `V \ removed`, compacted, with the id table.
    pub fn delete(&self, removed: &VertexSet) -> Result<(Graph, Remap)> {
        removed.check_range(self.n())?;
        let mut old_to_new = vec![None; self.n()];
        let mut new_to_old = Vec::with_capacity(self.n() - removed.len());
        for v in 0..self.n() {
            if !removed.contains(v) {
                old_to_new[v] = Some(new_to_old.len());
                new_to_old.push(v);
            }
        }
        let adjacency = new_to_old
            .iter()
            .map(|&old| {
                self.adjacency[old]
                    .iter()
                    .filter_map(|&w| old_to_new[w])
                    .collect()
            })
            .collect();
        Ok((
            Graph::from_sorted_adjacency(adjacency, self.directed),
            Remap {
                old_to_new,
                new_to_old,
            },
        ))
    }

    /// The `d`-th power: `u ~ v` iff `1 <= dist(u, v) <= d`.
    pub fn power(&self, d: usize) -> Result<Graph> {
        if d == 0 {
            return Err(Error::InvalidParameter("graph power needs d >= 1".into()));
        }
        let mut bfs = Bfs::new(self.n());
        let adjacency = (0..self.n())
            .map(|v| {
                let mut list: Vec<Vertex> = bfs
                    .run(self, [v], d, None)
                    .iter()
                    .copied()
                    .filter(|&u| u != v)
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        Ok(Graph::from_sorted_adjacency(adjacency, self.directed))
    }

    /// `true` iff the `r`-balls around the members of `a` are pairwise disjoint.
    pub fn is_scattered(&self, a: &VertexSet, r: usize) -> Result<bool> {
        a.check_range(self.n())?;
        Ok(self.is_scattered_avoiding(a, r, None))
    }

    /// Scatteredness in `G - blocked` without materialising the subgraph.
    /// Members of `a` that are blocked count as violations.
    pub(crate) fn is_scattered_avoiding(
        &self,
        a: &VertexSet,
        r: usize,
        blocked: Option<&[bool]>,
    ) -> bool {
        if blocked.is_some_and(|b| a.iter().any(|v| b[v])) {
            return false;
        }
        let mut owner = vec![usize::MAX; self.n()];
        let mut bfs = Bfs::new(self.n());
        for (idx, v) in a.iter().enumerate() {
            for &u in bfs.run(self, [v], r, blocked) {
                if owner[u] != usize::MAX {
                    return false;
                }
                owner[u] = idx;
            }
        }
        true
    }

    /// `true` iff every member of `targets` lies within distance `d` of `x`.
    pub fn dominates(&self, x: &VertexSet, targets: &VertexSet, d: usize) -> Result<bool> {
        x.check_range(self.n())?;
        targets.check_range(self.n())?;
        let mut bfs = Bfs::new(self.n());
        bfs.run(self, x.iter(), d, None);
        Ok(targets.iter().all(|w| bfs.reached(w)))
    }

    /// `true` iff `set` is non-empty and induces a connected subgraph.
    pub fn induces_connected(&self, set: &VertexSet) -> bool {
        let Some(start) = set.first() else {
            return false;
        };
        let inside = set.to_mask(self.n());
        let blocked: Vec<bool> = inside.iter().map(|b| !b).collect();
        let mut bfs = Bfs::new(self.n());
        bfs.run(self, [start], usize::MAX, Some(&blocked)).len() == set.len()
    }
}

/// Id translation produced by [`Graph::delete`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Remap {
    old_to_new: Vec<Option<Vertex>>,
    new_to_old: Vec<Vertex>,
}

impl Remap {
    pub fn to_new(&self, old: Vertex) -> Option<Vertex> {
        self.old_to_new.get(old).copied().flatten()
    }

    pub fn to_old(&self, new: Vertex) -> Vertex {
        self.new_to_old[new]
    }

    /// Maps a set into the compacted graph, dropping deleted vertices.
    pub fn forward(&self, set: &VertexSet) -> VertexSet {
        set.iter().filter_map(|v| self.to_new(v)).collect()
    }

    pub fn backward(&self, set: &VertexSet) -> VertexSet {
        set.iter().map(|v| self.to_old(v)).collect()
    }
}

/// Reusable truncated breadth-first search.
#[derive(Clone, Debug)]
pub(crate) struct Bfs {
    dist: Vec<usize>,
    queue: Vec<Vertex>,
}

impl Bfs {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            dist: vec![usize::MAX; n],
            queue: Vec::new(),
        }
    }

    /// Multi-source search truncated at `cap`, never entering blocked
    /// vertices (blocked sources are skipped). Returns the visited vertices
    /// in BFS order.
    pub(crate) fn run<I>(
        &mut self,
        g: &Graph,
        sources: I,
        cap: usize,
        blocked: Option<&[bool]>,
    ) -> &[Vertex]
    where
        I: IntoIterator<Item = Vertex>,
    {
        for &v in &self.queue {
            self.dist[v] = usize::MAX;
        }
        self.queue.clear();
        let is_blocked = |v: Vertex| blocked.is_some_and(|b| b[v]);
        for s in sources {
            if self.dist[s] == usize::MAX && !is_blocked(s) {
                self.dist[s] = 0;
                self.queue.push(s);
            }
        }
        let mut head = 0;
        while head < self.queue.len() {
            let u = self.queue[head];
            head += 1;
            let du = self.dist[u];
            if du >= cap {
                continue;
            }
            for &w in g.neighbors(u) {
                if self.dist[w] == usize::MAX && !is_blocked(w) {
                    self.dist[w] = du + 1;
                    self.queue.push(w);
                }
            }
        }
        &self.queue
    }

    pub(crate) fn visited(&self) -> &[Vertex] {
        &self.queue
    }

    pub(crate) fn reached(&self, v: Vertex) -> bool {
        self.dist[v] != usize::MAX
    }

    pub(crate) fn distance(&self, v: Vertex) -> Option<usize> {
        (self.dist[v] != usize::MAX).then_some(self.dist[v])
    }
}

/// Opt-in all-pairs distance table, limited to small graphs.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub const MAX_VERTICES: usize = 1 << 12;

    pub fn new(g: &Graph) -> Result<Self> {
        let n = g.n();
        if n > Self::MAX_VERTICES {
            return Err(Error::GuardExceeded {
                what: "all-pairs distance table",
                size: n as u128,
                limit: Self::MAX_VERTICES as u128,
            });
        }
        let mut dist = vec![u32::MAX; n * n];
        let mut bfs = Bfs::new(n);
        for v in 0..n {
            bfs.run(g, [v], usize::MAX, None);
            for &u in bfs.visited() {
                dist[v * n + u] = bfs.dist[u] as u32;
            }
        }
        Ok(Self { n, dist })
    }

    /// `None` when `v` is unreachable from `u`.
    pub fn get(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let d = self.dist[u * self.n + v];
        (d != u32::MAX).then_some(d as usize)
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    /// `K_{1,m}` with centre 0.
    pub fn star(m: usize) -> Graph {
        Graph::from_edges(m + 1, (1..=m).map(|i| (0, i))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use proptest::prelude::*;

    fn set(v: &[Vertex]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn bfs_examples() {
        let p5 = path(5);
        let got = p5.bfs_distances(2, 1).unwrap();
        assert_eq!(got, BTreeMap::from([(1, 1), (2, 0), (3, 1)]));
        assert_eq!(p5.bfs_distances(4, 0).unwrap(), BTreeMap::from([(4, 0)]));
        let c6 = cycle(6);
        assert_eq!(
            c6.bfs_distances(0, 2).unwrap(),
            BTreeMap::from([(0, 0), (1, 1), (5, 1), (2, 2), (4, 2)])
        );
        assert!(matches!(
            p5.bfs_distances(5, 1),
            Err(Error::VertexOutOfRange { vertex: 5, n: 5 })
        ));
    }

    #[test]
    fn ball_examples() {
        assert_eq!(star(4).ball(0, 1).unwrap(), VertexSet::full(5));
        assert_eq!(path(5).ball(0, 2).unwrap(), set(&[0, 1, 2]));
        assert_eq!(path(5).ball(0, 4).unwrap(), VertexSet::full(5));
        assert_eq!(cycle(7).ball(3, 10).unwrap(), VertexSet::full(7));
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert!(matches!(
            Graph::from_edges(3, [(0, 0)]),
            Err(Error::InvalidEdge {
                reason: "self-loop",
                ..
            })
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::InvalidEdge {
                reason: "duplicate edge",
                ..
            })
        ));
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        assert!(Graph::directed_from_arcs(2, [(0, 1), (1, 0)]).is_ok());
    }

    #[test]
    fn delete_examples() {
        let (g, remap) = complete(3).delete(&set(&[1])).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(remap.to_old(1), 2);
        assert_eq!(remap.to_new(1), None);

        let c5 = cycle(5);
        let (same, remap) = c5.delete(&VertexSet::new()).unwrap();
        assert_eq!(same, c5);
        assert!((0..5).all(|v| remap.to_new(v) == Some(v)));

        let (leaves, remap) = star(6).delete(&set(&[0])).unwrap();
        assert_eq!((leaves.n(), leaves.edge_count()), (6, 0));
        assert_eq!(
            remap.backward(&VertexSet::full(6)),
            set(&[1, 2, 3, 4, 5, 6])
        );
        assert_eq!(remap.forward(&set(&[0, 3])), set(&[2]));
    }

    #[test]
    fn power_examples() {
        assert_eq!(path(3).power(2).unwrap(), complete(3));
        let c6 = cycle(6);
        assert_eq!(c6.power(1).unwrap(), c6);
        let sq = c6.power(2).unwrap();
        // Oracle: brute-force pairwise distance on the cycle.
        for u in 0..6usize {
            assert_eq!(sq.degree(u), 4);
            for v in 0..6usize {
                let cyc = (u as i64 - v as i64)
                    .rem_euclid(6)
                    .min((v as i64 - u as i64).rem_euclid(6));
                assert_eq!(sq.has_edge(u, v), (1..=2).contains(&cyc));
            }
        }
        assert!(c6.power(0).is_err());
    }

    #[test]
    fn scattered_examples() {
        let c12 = cycle(12);
        assert!(c12.is_scattered(&set(&[0, 4, 8]), 1).unwrap());
        assert!(!c12.is_scattered(&set(&[0, 4, 8]), 2).unwrap());
        assert!(c12.is_scattered(&set(&[3]), 100).unwrap());
        assert!(c12.is_scattered(&VertexSet::new(), 3).unwrap());
    }

    #[test]
    fn dominates_examples() {
        assert!(star(4)
            .dominates(&set(&[0]), &VertexSet::full(5), 1)
            .unwrap());
        assert!(path(5)
            .dominates(&set(&[1, 3]), &VertexSet::full(5), 1)
            .unwrap());
        assert!(!path(5)
            .dominates(&set(&[1]), &VertexSet::full(5), 1)
            .unwrap());
        assert!(path(5)
            .dominates(&VertexSet::new(), &VertexSet::new(), 0)
            .unwrap());
    }

    #[test]
    fn connected_subsets() {
        let p5 = path(5);
        assert!(p5.induces_connected(&set(&[1, 2, 3])));
        assert!(!p5.induces_connected(&set(&[1, 3])));
        assert!(!p5.induces_connected(&VertexSet::new()));
    }

    #[test]
    fn distance_matrix_matches_bfs() {
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (4, 5)]).unwrap();
        let m = DistanceMatrix::new(&g).unwrap();
        assert_eq!(m.get(0, 3), Some(3));
        assert_eq!(m.get(3, 4), None);
        assert_eq!(m.get(6, 6), Some(0));
    }

    #[test]
    fn vertex_set_ops() {
        let mut s = set(&[5, 1, 3, 3]);
        assert_eq!(s.as_slice(), &[1, 3, 5]);
        assert!(s.insert(2));
        assert!(!s.insert(2));
        assert!(s.remove(5));
        assert_eq!(s.as_slice(), &[1, 2, 3]);
        assert_eq!(s.union(&set(&[9])).len(), 4);
        assert_eq!(s.difference(&set(&[2])), set(&[1, 3]));
        assert!(s.check_range(4).is_ok());
        assert!(s.check_range(3).is_err());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..(2 * n)).prop_map(move |pairs| {
                let edges: std::collections::BTreeSet<(usize, usize)> = pairs
                    .into_iter()
                    .filter(|(u, v)| u != v)
                    .map(|(u, v)| (u.min(v), u.max(v)))
                    .collect();
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn distances_are_a_metric(g in arb_graph(25), seed in any::<u64>()) {
            let m = DistanceMatrix::new(&g).unwrap();
            let n = g.n();
            let pick = |i: u64| ((seed.rotate_left(i as u32 * 7) ^ i) % n as u64) as usize;
            for i in 0..20 {
                let (a, b, c) = (pick(i), pick(i + 100), pick(i + 200));
                prop_assert_eq!(m.get(a, b), m.get(b, a));
                if let (Some(ab), Some(bc)) = (m.get(a, b), m.get(b, c)) {
                    prop_assert!(m.get(a, c).unwrap() <= ab + bc);
                }
            }
        }

        #[test]
        fn balls_are_nested(g in arb_graph(30), d in 0usize..5) {
            for v in 0..g.n() {
                prop_assert!(g.ball(v, d).unwrap().is_subset(&g.ball(v, d + 1).unwrap()));
            }
        }

        #[test]
        fn scattered_iff_independent_in_power(g in arb_graph(40), r in 1usize..3, picks in proptest::collection::vec(any::<usize>(), 0..6)) {
            let a: VertexSet = picks.iter().map(|p| p % g.n()).collect();
            let pw = g.power(2 * r).unwrap();
            let independent = a.iter().all(|u| a.iter().all(|v| !pw.has_edge(u, v)));
            prop_assert_eq!(g.is_scattered(&a, r).unwrap(), independent);
        }

        #[test]
        fn domination_matches_power_graph(g in arb_graph(40), d in 1usize..4, picks in proptest::collection::vec(any::<usize>(), 0..5)) {
            let x: VertexSet = picks.iter().map(|p| p % g.n()).collect();
            let all = g.vertices();
            let pw = g.power(d).unwrap();
            let by_power = all.iter().all(|w| x.contains(w) || pw.neighbors(w).iter().any(|&u| x.contains(u)));
            prop_assert_eq!(g.dominates(&x, &all, d).unwrap(), by_power);
        }
    }
}
