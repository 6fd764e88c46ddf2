//! Degree reduction for directed disjoint paths, and an exhaustive check
//! of the disjoint-paths question.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Replaces every fan of `l > 1` arcs into (then out of) a vertex by a
/// balanced binary tree whose leaves are the former neighbours and whose
/// root is the vertex itself. A fan of `l` arcs gains `l - 2` new vertices,
/// appended after the original ids, so terminals keep their ids. The result
/// has total degree at most 4.
pub fn degree_reduction_gadget(
    d: &Graph,
    terminals: &[(Vertex, Vertex)],
) -> Result<(Graph, Vec<(Vertex, Vertex)>)> {
    if !d.is_directed() {
        return Err(Error::Precondition(
            "the gadget needs a directed graph".into(),
        ));
    }
    for &(s, t) in terminals {
        d.check_vertex(s)?;
        d.check_vertex(t)?;
    }
    let n = d.n();
    let mut arcs: Vec<(Vertex, Vertex)> = d.edges().collect();
    let mut next = n;

    // Incoming fans.
    let mut ins = vec![Vec::new(); n];
    for &(u, v) in &arcs {
        ins[v].push(u);
    }
    let mut kept: Vec<(Vertex, Vertex)> = arcs
        .iter()
        .copied()
        .filter(|&(_, v)| ins[v].len() <= 1)
        .collect();
    for (v, leaves) in ins.iter().enumerate() {
        if leaves.len() > 1 {
            fan(leaves, v, &mut next, &mut |a, b| kept.push((a, b)));
        }
    }
    arcs = kept;

    // Outgoing fans, over original vertices only; tree nodes have
    // out-degree 1.
    let mut outs = vec![Vec::new(); next];
    for &(u, v) in &arcs {
        outs[u].push(v);
    }
    let mut kept: Vec<(Vertex, Vertex)> = arcs
        .iter()
        .copied()
        .filter(|&(u, _)| u >= n || outs[u].len() <= 1)
        .collect();
    for v in 0..n {
        if outs[v].len() > 1 {
            let leaves = outs[v].clone();
            fan(&leaves, v, &mut next, &mut |a, b| kept.push((b, a)));
        }
    }

    let g = Graph::directed_from_arcs(next, kept)?;
    Ok((g, terminals.to_vec()))
}

/// Emits the arcs of a balanced binary in-tree from `leaves` to `root`,
/// allocating internal nodes from `next`.
fn fan(leaves: &[Vertex], root: Vertex, next: &mut Vertex, emit: &mut dyn FnMut(Vertex, Vertex)) {
    fn build(leaves: &[Vertex], next: &mut Vertex, emit: &mut dyn FnMut(Vertex, Vertex)) -> Vertex {
        if leaves.len() == 1 {
            return leaves[0];
        }
        let node = *next;
        *next += 1;
        let (left, right) = leaves.split_at(leaves.len() / 2);
        let l = build(left, next, emit);
        let r = build(right, next, emit);
        emit(l, node);
        emit(r, node);
        node
    }
    let (left, right) = leaves.split_at(leaves.len() / 2);
    let l = build(left, next, emit);
    let r = build(right, next, emit);
    emit(l, root);
    emit(r, root);
}

/// Largest order [`disjoint_paths`] accepts.
pub const DISJOINT_PATHS_LIMIT: usize = 256;

/// `true` iff there are pairwise vertex-disjoint directed paths from each
/// `s_i` to `t_i`. Exhaustive over simple paths.
pub fn disjoint_paths(g: &Graph, terminals: &[(Vertex, Vertex)]) -> Result<bool> {
    if g.n() > DISJOINT_PATHS_LIMIT {
        return Err(Error::GuardExceeded {
            what: "disjoint paths oracle order",
            size: g.n() as u128,
            limit: DISJOINT_PATHS_LIMIT as u128,
        });
    }
    for &(s, t) in terminals {
        g.check_vertex(s)?;
        g.check_vertex(t)?;
    }
    let mut used = vec![false; g.n()];
    // Terminals of later pairs are off limits to earlier paths.
    for &(s, t) in terminals {
        if used[s] || (used[t] && s != t) {
            return Ok(false);
        }
        used[s] = true;
        used[t] = true;
    }
    for &(s, t) in terminals {
        used[s] = false;
        used[t] = false;
    }
    let mut reserved = vec![0u32; g.n()];
    for &(s, t) in terminals {
        reserved[s] += 1;
        if t != s {
            reserved[t] += 1;
        }
    }
    Ok(route(g, terminals, &mut used, &mut reserved))
}

fn route(g: &Graph, pairs: &[(Vertex, Vertex)], used: &mut [bool], reserved: &mut [u32]) -> bool {
    let Some((&(s, t), rest)) = pairs.split_first() else {
        return true;
    };
    reserved[s] -= 1;
    if t != s {
        reserved[t] -= 1;
    }
    let found = extend(g, s, t, rest, used, reserved);
    reserved[s] += 1;
    if t != s {
        reserved[t] += 1;
    }
    found
}

fn extend(
    g: &Graph,
    at: Vertex,
    t: Vertex,
    rest: &[(Vertex, Vertex)],
    used: &mut [bool],
    reserved: &mut [u32],
) -> bool {
    used[at] = true;
    let found = if at == t {
        route(g, rest, used, reserved)
    } else {
        g.neighbors(at)
            .iter()
            .any(|&u| !used[u] && reserved[u] == 0 && extend(g, u, t, rest, used, reserved))
    };
    used[at] = false;
    found
}
