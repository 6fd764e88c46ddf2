//! Plain-text instance files.
//!
//! ```text
//! c comment
//! p <kind> <n> <edges>
//! k <int>            optional parameters: k, d, r, m
//! w <v> <v> ...      target set, default all vertices
//! red <v> <v> ...    candidate set, default all vertices
//! <u> <v>            one line per edge
//! ```

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// A parsed instance file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub kind: String,
    pub graph: Graph,
    pub k: Option<usize>,
    pub d: Option<usize>,
    pub r: Option<usize>,
    pub m: Option<usize>,
    pub targets: Option<VertexSet>,
    pub candidates: Option<VertexSet>,
}

impl Instance {
    pub fn new(kind: impl Into<String>, graph: Graph) -> Self {
        Self {
            kind: kind.into(),
            graph,
            k: None,
            d: None,
            r: None,
            m: None,
            targets: None,
            candidates: None,
        }
    }

    /// Targets, defaulting to every vertex.
    pub fn target_set(&self) -> VertexSet {
        self.targets
            .clone()
            .unwrap_or_else(|| self.graph.vertices())
    }

    /// Candidates, defaulting to every vertex.
    pub fn candidate_set(&self) -> VertexSet {
        self.candidates
            .clone()
            .unwrap_or_else(|| self.graph.vertices())
    }
}

fn parse_int(token: &str, line: usize) -> Result<usize> {
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected a non-negative integer, found `{token}`"),
    })
}

fn parse_set(tokens: &[&str], line: usize, n: usize) -> Result<VertexSet> {
    let mut out = VertexSet::new();
    for t in tokens {
        let v = parse_int(t, line)?;
        if v >= n {
            return Err(Error::Parse {
                line,
                message: format!("vertex {v} out of range for n = {n}"),
            });
        }
        if !out.insert(v) {
            return Err(Error::Parse {
                line,
                message: format!("vertex {v} listed twice"),
            });
        }
    }
    Ok(out)
}

/// Parses an instance; every error names the offending line (1-based).
pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut header: Option<(usize, String, usize, usize)> = None;
    let mut params: [Option<usize>; 4] = [None; 4];
    let mut targets = None;
    let mut candidates = None;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut seen = std::collections::HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        let Some(&first) = tokens.first() else {
            continue;
        };
        let err = |message: String| Error::Parse { line, message };
        if first == "c" {
            continue;
        }
        if first == "p" {
            if header.is_some() {
                return Err(err("second `p` line".into()));
            }
            let [_, kind, n, m] = tokens[..] else {
                return Err(err("header must be `p <kind> <n> <edges>`".into()));
            };
            header = Some((
                line,
                kind.to_string(),
                parse_int(n, line)?,
                parse_int(m, line)?,
            ));
            continue;
        }
        let Some((_, _, n, _)) = header.as_ref() else {
            return Err(err("expected the `p` header first".into()));
        };
        let n = *n;
        match first {
            "k" | "d" | "r" | "m" => {
                let [_, value] = tokens[..] else {
                    return Err(err(format!("`{first}` takes exactly one integer")));
                };
                let slot = &mut params["kdrm".find(first).expect("matched above")];
                if slot.is_some() {
                    return Err(err(format!("parameter `{first}` given twice")));
                }
                *slot = Some(parse_int(value, line)?);
            }
            "w" | "red" => {
                let slot = if first == "w" {
                    &mut targets
                } else {
                    &mut candidates
                };
                if slot.is_some() {
                    return Err(err(format!("`{first}` line given twice")));
                }
                *slot = Some(parse_set(&tokens[1..], line, n)?);
            }
            _ => {
                let [u, v] = tokens[..] else {
                    return Err(err(format!("unrecognised line `{raw}`")));
                };
                let (u, v) = (parse_int(u, line)?, parse_int(v, line)?);
                if u >= n || v >= n {
                    return Err(err(format!("edge {u} {v} out of range for n = {n}")));
                }
                if u == v {
                    return Err(err(format!("self-loop at {u}")));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(err(format!("duplicate edge {u} {v}")));
                }
                edges.push((u, v));
            }
        }
    }
    let Some((hline, kind, n, m)) = header else {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            message: "missing `p` header".into(),
        });
    };
    if edges.len() != m {
        return Err(Error::Parse {
            line: hline,
            message: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    let graph = Graph::from_edges(n, edges)?;
    let [k, d, r, m] = params;
    Ok(Instance {
        kind,
        graph,
        k,
        d,
        r,
        m,
        targets,
        candidates,
    })
}

/// Canonical text: header, parameters, `w`, `red`, then edges sorted with
/// `u < v`.
pub fn emit(inst: &Instance) -> String {
    use std::fmt::Write;
    let g = &inst.graph;
    let mut out = format!("p {} {} {}\n", inst.kind, g.n(), g.edge_count());
    for (key, value) in [("k", inst.k), ("d", inst.d), ("r", inst.r), ("m", inst.m)] {
        if let Some(v) = value {
            writeln!(out, "{key} {v}").expect("writing to a string");
        }
    }
    for (key, set) in [("w", &inst.targets), ("red", &inst.candidates)] {
        if let Some(set) = set {
            out.push_str(key);
            for v in set.iter() {
                write!(out, " {v}").expect("writing to a string");
            }
            out.push('\n');
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a string");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_basic_example() {
        let inst = parse_instance("p ds 3 2\nk 1\nd 1\n0 1\n1 2\n").unwrap();
        assert_eq!(inst.graph, Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap());
        assert_eq!((inst.k, inst.d), (Some(1), Some(1)));
        assert_eq!(inst.target_set(), inst.graph.vertices());
    }

    #[test]
    fn reports_line_numbers() {
        let e = parse_instance("p ds 3 1\nc note\n0 5\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e}");
        let e = parse_instance("p ds 3 2\n0 1\n1 0\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e}");
        let e = parse_instance("0 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
        let e = parse_instance("p ds 3 2\n0 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
        let e = parse_instance("p ds 3 0\nk x\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        assert!(parse_instance("").is_err());
    }

    #[test]
    fn target_and_red_lines() {
        let inst = parse_instance("p ds 3 0\nw 0 2\nred 1\n").unwrap();
        assert_eq!(inst.targets, Some([0, 2].into()));
        assert_eq!(inst.candidates, Some([1].into()));
        let empty = parse_instance("p ds 3 0\nw\n").unwrap();
        assert_eq!(empty.targets, Some(VertexSet::new()));
    }

    #[test]
    fn canonical_round_trip() {
        let text = "p ds 4 3\nk 2\nd 1\nr 3\nm 4\nw 0 3\nred 1 2\n0 1\n1 2\n2 3\n";
        let inst = parse_instance(text).unwrap();
        assert_eq!(emit(&inst), text);
        let scrambled = "c hi\np ds 4 3\nred 2 1\n3 2\nd 1\n1 0\nw 3 0\n2 1\nk 2\nm 4\nr 3\n";
        assert_eq!(emit(&parse_instance(scrambled).unwrap()), text);
    }
}
