//! The constraint digraph: one vertex per orientation of each edge, and an arc
//! `(x,y) -> (z,w)` whenever orienting `xy` as `x -> y` forces `zw` to be
//! oriented `z -> w` in every F-free orientation.
//!
//! Vertex `(x, y)` is numbered `2 * i + d`, where `i` is the index of edge
//! `{x, y}` and `d` is 0 when `x < y`. The dual vertex `(y, x)` is then
//! `k ^ 1`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Graph;
use crate::patterns::{ForbiddenSet, Pattern};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstraintError {
    #[error("forbidden set {0} is not simple (only B1, B2, B3, T3 are supported)")]
    NotSimple(ForbiddenSet),
    #[error("({0}, {1}) is not an orientation of an edge")]
    NotAVertex(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintDigraph {
    graph: Graph,
    forbidden: ForbiddenSet,
    succ: Vec<Vec<usize>>,
}

impl ConstraintDigraph {
    pub fn build(g: &Graph, f: ForbiddenSet) -> Result<Self, ConstraintError> {
        if !f.is_simple() {
            return Err(ConstraintError::NotSimple(f));
        }
        let mut succ = vec![Vec::new(); 2 * g.m()];
        // (x,y) as a vertex id, given the index of edge xy
        let id = |x: usize, y: usize, e: usize| 2 * e + usize::from(x > y);
        let (b1, b2, b3, t3) = (
            f.contains(Pattern::B1),
            f.contains(Pattern::B2),
            f.contains(Pattern::B3),
            f.contains(Pattern::T3),
        );
        for y in 0..g.n() {
            let nbrs = g.incident(y);
            // every ordered pair of distinct neighbours covers both role
            // assignments of each path and every labelling of each triangle
            for &(x, exy) in nbrs {
                for &(z, eyz) in nbrs {
                    if x == z {
                        continue;
                    }
                    let (xy, yx) = (id(x, y, exy), id(y, x, exy));
                    let (yz, zy) = (id(y, z, eyz), id(z, y, eyz));
                    if g.has_edge(x, z) {
                        if t3 {
                            // x->y forces y->z around a cyclic triangle, and back
                            succ[xy].push(yz);
                            succ[yz].push(xy);
                        }
                        continue;
                    }
                    if b1 {
                        // x->y<-z forbidden: x->y forces y->z
                        succ[xy].push(yz);
                    }
                    if b2 {
                        // x<-y->z forbidden: y->x forces z->y
                        succ[yx].push(zy);
                    }
                    if b3 {
                        // x->y->z forbidden
                        succ[xy].push(zy);
                        succ[yx].push(yz);
                    }
                }
            }
        }
        for out in &mut succ {
            out.sort_unstable();
            out.dedup();
        }
        Ok(ConstraintDigraph {
            graph: g.clone(),
            forbidden: f,
            succ,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn forbidden(&self) -> ForbiddenSet {
        self.forbidden
    }

    /// Number of vertices, always twice the number of edges.
    pub fn order(&self) -> usize {
        self.succ.len()
    }

    pub fn arc_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    /// Forward adjacency lists indexed by vertex id.
    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.succ
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.succ[v]
    }

    /// Predecessors of `v`, read off the successors of its dual.
    pub fn predecessors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.succ[dual(v)].iter().map(|&u| dual(u))
    }

    pub fn has_arc(&self, from: usize, to: usize) -> bool {
        self.succ[from].binary_search(&to).is_ok()
    }

    /// Vertex id of the ordered pair `(x, y)`.
    pub fn vertex(&self, x: usize, y: usize) -> Option<usize> {
        self.graph
            .edge_index(x, y)
            .map(|e| 2 * e + usize::from(x > y))
    }

    /// Ordered pair named by vertex id `v`.
    pub fn pair(&self, v: usize) -> (usize, usize) {
        let (a, b) = self.graph.edges()[v / 2];
        if v & 1 == 0 {
            (a, b)
        } else {
            (b, a)
        }
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(u, out)| out.iter().map(move |&v| (u, v)))
    }

    /// Reversal of an ordered pair, checked against the vertex set.
    pub fn dual_vertex(&self, (x, y): (usize, usize)) -> Result<(usize, usize), ConstraintError> {
        self.vertex(x, y)
            .map(|_| (y, x))
            .ok_or(ConstraintError::NotAVertex(x, y))
    }

    /// One arc per line as `x,y -> z,w`, sorted.
    pub fn dump(&self) -> String {
        let mut lines: Vec<_> = self
            .arcs()
            .map(|(u, v)| (self.pair(u), self.pair(v)))
            .collect();
        lines.sort_unstable();
        let mut out = String::new();
        for ((x, y), (z, w)) in lines {
            let _ = writeln!(out, "{x},{y} -> {z},{w}");
        }
        out
    }
}

/// Dual of a vertex id.
pub fn dual(v: usize) -> usize {
    v ^ 1
}
