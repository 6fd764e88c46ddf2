//! Seeded graph generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub const FAMILIES: &[&str] = &[
    "path",
    "cycle",
    "star",
    "grid",
    "random_max_deg",
    "subdivided_clique",
    "random_tree",
];

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid path")
}

/// `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// `K_{1,m}` with centre 0.
pub fn star(m: usize) -> Graph {
    Graph::from_edges(m + 1, (1..=m).map(|v| (0, v))).expect("valid star")
}

/// `rows × cols` grid, vertex `r * cols + c`.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Graph::from_edges(rows * cols, edges).expect("valid grid")
}

/// `K_n` with every edge replaced by a path through `t` new vertices.
pub fn subdivided_clique(n: usize, t: usize) -> Graph {
    let mut edges = Vec::new();
    let mut next = n;
    for a in 0..n {
        for b in a + 1..n {
            let mut prev = a;
            for _ in 0..t {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
            edges.push((prev, b));
        }
    }
    Graph::from_edges(next, edges).expect("valid subdivision")
}

/// Uniform random labeled tree via a random Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if n <= 2 {
        return path(n);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &x in &seq {
        degree[x] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> =
        (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in &seq {
        let leaf = leaves.pop_first().expect("a leaf always exists");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let last: Vec<usize> = leaves.into_iter().collect();
    edges.push((last[0], last[1]));
    Graph::from_edges(n, edges).expect("valid tree")
}

/// Connected graph with maximum degree at most `max_deg`: a random tree
/// respecting the bound, then `extra` attempts to add random edges, each
/// rejected if it would exceed the bound or repeat an edge.
pub fn random_max_deg(n: usize, max_deg: usize, extra: usize, seed: u64) -> Result<Graph> {
    if max_deg < 2 && n > 2 {
        return Err(Error::InvalidParameter(format!(
            "a connected graph on {n} vertices needs max degree >= 2"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut degree = vec![0usize; n];
    let mut present = std::collections::HashSet::new();
    let mut edges = Vec::new();
    for i in 1..n {
        let v = order[i];
        let open: Vec<Vertex> = order[..i]
            .iter()
            .copied()
            .filter(|&u| degree[u] < max_deg)
            .collect();
        let u = open[rng.gen_range(0..open.len())];
        degree[u] += 1;
        degree[v] += 1;
        present.insert((u.min(v), u.max(v)));
        edges.push((u, v));
    }
    if n >= 2 {
        for _ in 0..extra {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            let key = (u.min(v), u.max(v));
            if u == v || degree[u] >= max_deg || degree[v] >= max_deg || present.contains(&key) {
                continue;
            }
            degree[u] += 1;
            degree[v] += 1;
            present.insert(key);
            edges.push(key);
        }
    }
    Graph::from_edges(n, edges)
}

fn need(params: &[usize], count: usize, family: &str, usage: &str) -> Result<()> {
    if params.len() < count {
        return Err(Error::InvalidParameter(format!("{family} expects {usage}")));
    }
    Ok(())
}

/// Dispatches on a family name. Parameters:
/// `path n`, `cycle n`, `star m`, `grid rows cols`,
/// `random_max_deg n max_deg [extra]`, `subdivided_clique n t`,
/// `random_tree n`.
pub fn generate(family: &str, params: &[usize], seed: u64) -> Result<Graph> {
    match family {
        "path" => {
            need(params, 1, family, "n")?;
            Ok(path(params[0]))
        }
        "cycle" => {
            need(params, 1, family, "n")?;
            cycle(params[0])
        }
        "star" => {
            need(params, 1, family, "m")?;
            Ok(star(params[0]))
        }
        "grid" => {
            need(params, 2, family, "rows cols")?;
            Ok(grid(params[0], params[1]))
        }
        "random_max_deg" => {
            need(params, 2, family, "n max_deg [extra]")?;
            let extra = params.get(2).copied().unwrap_or(params[0] / 2);
            random_max_deg(params[0], params[1], extra, seed)
        }
        "subdivided_clique" => {
            need(params, 2, family, "n t")?;
            Ok(subdivided_clique(params[0], params[1]))
        }
        "random_tree" => {
            need(params, 1, family, "n")?;
            Ok(random_tree(params[0], seed))
        }
        _ => Err(Error::UnknownFamily(family.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let p = generate("path", &[5], 0).unwrap();
        assert_eq!((p.n(), p.edge_count()), (5, 4));
        let g = generate("grid", &[3, 3], 0).unwrap();
        assert_eq!((g.n(), g.edge_count()), (9, 12));
        let s = generate("subdivided_clique", &[5, 2], 0).unwrap();
        assert_eq!((s.n(), s.edge_count()), (25, 30));
        assert_eq!(generate("star", &[4], 0).unwrap().degree(0), 4);
        assert_eq!(generate("cycle", &[6], 0).unwrap().edge_count(), 6);
        assert!(matches!(
            generate("wheel", &[5], 0),
            Err(Error::UnknownFamily(_))
        ));
        assert!(generate("grid", &[3], 0).is_err());
        assert!(generate("cycle", &[2], 0).is_err());
    }

    #[test]
    fn random_families_are_seeded() {
        for seed in 0..20 {
            let a = generate("random_max_deg", &[40, 3], seed).unwrap();
            assert_eq!(a, generate("random_max_deg", &[40, 3], seed).unwrap());
            assert!(a.max_degree() <= 3);
            assert!(a.induces_connected(&a.vertices()));
            let t = generate("random_tree", &[30], seed).unwrap();
            assert_eq!(t, generate("random_tree", &[30], seed).unwrap());
            assert_eq!(t.edge_count(), 29);
            assert!(t.induces_connected(&t.vertices()));
        }
        assert_ne!(
            generate("random_max_deg", &[40, 3], 1).unwrap(),
            generate("random_max_deg", &[40, 3], 2).unwrap()
        );
    }
}
