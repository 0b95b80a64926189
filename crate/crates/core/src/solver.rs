//! Deciding F-orientability for simple sets and producing certificates.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constraint::{dual, ConstraintDigraph, ConstraintError};
use crate::graph::{Edge, Graph, Orientation};
use crate::patterns::ForbiddenSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Constraint(#[from] ConstraintError),
    #[error("({0}, {1}) and its reversal lie in different strong components")]
    NotContradictory(usize, usize),
}

/// Strong components listed so that every component appears before any
/// component that reaches it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongComponents {
    components: Vec<Vec<usize>>,
    component_of: Vec<usize>,
}

impl StrongComponents {
    /// Components in reverse topological order.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// Position of `v`'s component in [`StrongComponents::components`].
    pub fn component_of(&self, v: usize) -> usize {
        self.component_of[v]
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

/// Tarjan's algorithm, iterative. Components come out sinks first, each sorted.
pub fn strong_components(succ: &[Vec<usize>]) -> StrongComponents {
    const UNSEEN: usize = usize::MAX;
    let n = succ.len();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut component_of = vec![UNSEEN; n];
    let mut components = Vec::new();
    let mut next_index = 0;
    // (vertex, position in its successor list)
    let mut frames: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        frames.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = frames.last_mut() {
            if let Some(&w) = succ[v].get(*pos) {
                *pos += 1;
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    frames.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            frames.pop();
            if let Some(&(parent, _)) = frames.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let id = components.len();
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack holds the component");
                    on_stack[w] = false;
                    component_of[w] = id;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                components.push(comp);
            }
        }
    }
    StrongComponents {
        components,
        component_of,
    }
}

pub fn scc_reverse_topological(d: &ConstraintDigraph) -> StrongComponents {
    strong_components(d.adjacency())
}

/// Truth marks per component produced by processing components in reverse
/// topological order: an unmarked component is marked true and its dual
/// false. Fails with the first self-dual component met.
pub fn mark_components(d: &ConstraintDigraph, sccs: &StrongComponents) -> Result<Vec<bool>, usize> {
    let mut mark: Vec<Option<bool>> = vec![None; sccs.len()];
    for (id, comp) in sccs.components().iter().enumerate() {
        if mark[id].is_some() {
            continue;
        }
        let dual_id = sccs.component_of(dual(comp[0]));
        if dual_id == id {
            return Err(id);
        }
        mark[id] = Some(true);
        mark[dual_id] = Some(false);
    }
    debug_assert!(d.order() == 0 || !sccs.is_empty());
    Ok(mark
        .into_iter()
        .map(|m| m.expect("every component is marked"))
        .collect())
}

/// YES or NO answer together with its witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// An F-free orientation.
    Yes(Orientation),
    /// `path` runs through the constraint digraph from `(x, y)` to `(y, x)`,
    /// where `edge = (x, y)`.
    No {
        edge: Edge,
        path: Vec<(usize, usize)>,
    },
}

impl Certificate {
    pub fn is_yes(&self) -> bool {
        matches!(self, Certificate::Yes(_))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let json = match self {
            Certificate::Yes(o) => CertificateJson::Yes {
                orientation: o.arcs().map(|(u, v)| [u, v]).collect(),
            },
            Certificate::No { edge, path } => CertificateJson::No {
                edge: [edge.0, edge.1],
                path: path.iter().map(|&(a, b)| [a, b]).collect(),
            },
        };
        serde_json::to_value(json).expect("certificate serializes")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "answer", rename_all = "lowercase")]
enum CertificateJson {
    Yes {
        orientation: Vec<[usize; 2]>,
    },
    No {
        edge: [usize; 2],
        path: Vec<[usize; 2]>,
    },
}

/// Decides whether `g` has an `f`-free orientation.
///
/// On NO the witness edge is the lexicographically smallest edge whose two
/// orientations share a strong component, with a shortest path between them.
pub fn solve(g: &Graph, f: ForbiddenSet) -> Result<Certificate, SolveError> {
    let d = ConstraintDigraph::build(g, f)?;
    Ok(solve_digraph(&d))
}

pub(crate) fn solve_digraph(d: &ConstraintDigraph) -> Certificate {
    let sccs = scc_reverse_topological(d);
    let g = d.graph();
    if let Some(e) = (0..g.m()).find(|&e| sccs.component_of(2 * e) == sccs.component_of(2 * e + 1))
    {
        let edge = g.edges()[e];
        let path = shortest_path(d, 2 * e, 2 * e + 1).expect("same component implies a path");
        return Certificate::No {
            edge,
            path: path.into_iter().map(|v| d.pair(v)).collect(),
        };
    }
    let marks = mark_components(d, &sccs).expect("no self-dual component remains");
    // edge e = (u, v), u < v, is oriented u -> v iff vertex 2e is marked true
    Certificate::Yes(Orientation::from_fn(g.clone(), |e| {
        !marks[sccs.component_of(2 * e)]
    }))
}

/// Shortest path from `(x, y)` to `(y, x)`, which must share a strong
/// component.
pub fn extract_contradicting_path(
    d: &ConstraintDigraph,
    (x, y): (usize, usize),
) -> Result<Vec<(usize, usize)>, SolveError> {
    let from = d.vertex(x, y).ok_or(ConstraintError::NotAVertex(x, y))?;
    let to = dual(from);
    let forward = shortest_path(d, from, to);
    match forward {
        Some(path) if shortest_path(d, to, from).is_some() => {
            Ok(path.into_iter().map(|v| d.pair(v)).collect())
        }
        _ => Err(SolveError::NotContradictory(x, y)),
    }
}

/// BFS; neighbours are visited in increasing id order so ties resolve
/// deterministically.
fn shortest_path(d: &ConstraintDigraph, from: usize, to: usize) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; d.order()];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &w in d.successors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    None
}
