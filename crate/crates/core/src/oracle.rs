//! Exhaustive reference solvers for small graphs.

use crate::combinatorics::{binomial, Combinations};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::variants::{is_efficient, RomanLabeling};

pub use crate::domination::brute_force_min_domset;
pub use crate::wideness::{brute_force_scattered, shallow_clique_minor};

/// Largest number of subsets the subset oracles will visit.
pub const SUBSET_BUDGET: u128 = 50_000_000;

fn subsets_up_to(n: usize, k: usize) -> Result<u128> {
    let total = (0..=k.min(n))
        .map(|j| binomial(n as u64, j as u64))
        .fold(0u128, u128::saturating_add);
    if total > SUBSET_BUDGET {
        return Err(Error::GuardExceeded {
            what: "subset oracle",
            size: total,
            limit: SUBSET_BUDGET,
        });
    }
    Ok(total)
}

/// Smallest `X ⊆ candidates`, `|X| <= k_max`, that `d`-dominates `targets`
/// in `g` and induces a connected subgraph of `adjacency`.
pub fn brute_force_connected(
    g: &Graph,
    adjacency: &Graph,
    targets: &VertexSet,
    d: usize,
    k_max: usize,
    candidates: &VertexSet,
) -> Result<Option<VertexSet>> {
    subsets_up_to(candidates.len(), k_max)?;
    let pool = candidates.as_slice();
    for size in 0..=k_max.min(pool.len()) {
        for combo in Combinations::new(pool.len(), size) {
            let x: VertexSet = combo.iter().map(|&i| pool[i]).collect();
            if adjacency.induces_connected(&x) && g.dominates(&x, targets, d)? {
                return Ok(Some(x));
            }
        }
    }
    Ok(None)
}

/// First (lexicographic) efficient dominating set of exactly `k` vertices.
pub fn brute_force_efficient(g: &Graph, k: usize) -> Result<Option<VertexSet>> {
    subsets_up_to(g.n(), k)?;
    let all = g.vertices();
    for combo in Combinations::new(g.n(), k) {
        let x: VertexSet = combo.into_iter().collect();
        if is_efficient(g, &x) && g.dominates(&x, &all, 1)? {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// Largest order [`brute_force_roman`] accepts.
pub const ROMAN_ORACLE_LIMIT: usize = 14;

/// Minimum-weight Roman domination function over all `3^n` labelings.
pub fn brute_force_roman(g: &Graph) -> Result<RomanLabeling> {
    let n = g.n();
    if n > ROMAN_ORACLE_LIMIT {
        return Err(Error::GuardExceeded {
            what: "Roman labeling oracle order",
            size: n as u128,
            limit: ROMAN_ORACLE_LIMIT as u128,
        });
    }
    let mut labels = vec![0u8; n];
    let mut best: Option<(usize, Vec<u8>)> = None;
    for mut code in 0..3u64.pow(n as u32) {
        for l in labels.iter_mut() {
            *l = (code % 3) as u8;
            code /= 3;
        }
        let weight: usize = labels.iter().map(|&l| l as usize).sum();
        if best.as_ref().is_some_and(|(w, _)| *w <= weight) {
            continue;
        }
        let valid =
            (0..n).all(|v| labels[v] != 0 || g.neighbors(v).iter().any(|&u| labels[u] == 2));
        if valid {
            best = Some((weight, labels.clone()));
        }
    }
    let (_, labels) = best.expect("all-ones is always valid");
    RomanLabeling::new(labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn connected_domination_numbers() {
        let p7 = path(7);
        let x = brute_force_connected(&p7, &p7, &p7.vertices(), 1, 7, &p7.vertices())
            .unwrap()
            .unwrap();
        assert_eq!(x.len(), 5);
        let c6 = cycle(6);
        let x = brute_force_connected(&c6, &c6, &c6.vertices(), 1, 6, &c6.vertices())
            .unwrap()
            .unwrap();
        assert_eq!(x.len(), 4);
    }

    #[test]
    fn efficient_on_cycles() {
        for n in 3..=12 {
            let c = cycle(n);
            let found = (0..=n).find_map(|k| brute_force_efficient(&c, k).unwrap());
            assert_eq!(found.is_some(), n % 3 == 0, "n={n}");
        }
    }

    #[test]
    fn roman_weights() {
        assert_eq!(brute_force_roman(&star(5)).unwrap().weight(), 2);
        assert_eq!(brute_force_roman(&cycle(4)).unwrap().weight(), 3);
        assert_eq!(brute_force_roman(&Graph::empty(1)).unwrap().weight(), 1);
        assert_eq!(brute_force_roman(&Graph::empty(0)).unwrap().weight(), 0);
    }
}
