//! Benchmark fixtures: named instances shared by the criterion benches.

use sparse_domset::harness::generate::{grid, path, random_max_deg, star, subdivided_clique};
use sparse_domset::{ClassProfile, Graph, ProfileMode};

/// A graph with the domination parameters a bench runs it with.
pub struct Fixture {
    pub name: String,
    pub graph: Graph,
    pub k: usize,
    pub d: usize,
}

fn fixture(name: String, graph: Graph, k: usize, d: usize) -> Fixture {
    Fixture { name, graph, k, d }
}

/// Stars of growing size; the driver shrinks each to the core guard.
pub fn stars(sizes: &[usize]) -> Vec<Fixture> {
    sizes
        .iter()
        .map(|&m| fixture(format!("star{m}"), star(m), 1, 1))
        .collect()
}

/// Paths at their domination number.
pub fn paths(sizes: &[usize]) -> Vec<Fixture> {
    sizes
        .iter()
        .map(|&n| fixture(format!("path{n}"), path(n), n.div_ceil(3), 1))
        .collect()
}

/// Sparse inputs for the scattered-set search.
pub fn sparse() -> Vec<Fixture> {
    vec![
        fixture("grid12x12".into(), grid(12, 12), 0, 2),
        fixture("subK8t2".into(), subdivided_clique(8, 2), 0, 2),
        fixture(
            "deg3n200".into(),
            random_max_deg(200, 3, 100, 1).expect("valid parameters"),
            0,
            2,
        ),
    ]
}

/// Small graphs inside the range of the Roman base case and branching.
pub fn small() -> Vec<Fixture> {
    vec![
        fixture("grid3x4".into(), grid(3, 4), 4, 1),
        fixture("star12".into(), star(12), 2, 1),
        fixture("path12".into(), path(12), 8, 1),
    ]
}

pub fn profile() -> ClassProfile {
    ClassProfile::by_name("planar", ProfileMode::PracticalSafe).expect("built-in profile")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_well_formed() {
        assert_eq!(stars(&[10])[0].graph.n(), 11);
        assert_eq!(paths(&[9])[0].k, 3);
        assert!(sparse()
            .iter()
            .all(|f| f.graph.max_degree() <= 4 || f.name.starts_with("subK")));
        assert_eq!(small().len(), 3);
    }
}
