//! Simple undirected graphs over `0..n`, their orientations, and the
//! edge-list text format shared by every command.
//!
//! A document is a header line `n m` followed by `m` lines `u v`. Lines whose
//! first non-blank character is `#` are comments, blank lines are ignored.
//! Orientation documents use the same layout with `u v` meaning the arc
//! `u -> v`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// An undirected edge stored with the smaller endpoint first.
pub type Edge = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    OutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: loop at vertex {vertex}")]
    Loop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    Duplicate { line: usize, u: usize, v: usize },
    #[error("header announces {expected} edges but {found} were listed")]
    EdgeCount { expected: usize, found: usize },
    #[error("missing header line")]
    MissingHeader,
    #[error("orientation does not match the graph: {0}")]
    Mismatch(String),
    #[error("identifying {0} and {1} creates a loop")]
    QuotientLoop(usize, usize),
}

/// A simple undirected graph on the vertex set `0..n`.
///
/// Edges are kept sorted and canonical, so the edge index doubles as a stable
/// name for each edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    // neighbour lists sorted by neighbour, each entry carrying the edge index
    adj: Vec<Vec<(usize, usize)>>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = GraphError;

    fn try_from(raw: RawGraph) -> Result<Self, Self::Error> {
        Graph::new(raw.n, raw.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph {
            n: g.n,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl Graph {
    /// Builds a graph, rejecting loops, repeated edges and out-of-range
    /// endpoints. Errors report the 1-based position of the offending edge.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self, GraphError> {
        let mut list = Vec::new();
        for (i, (u, v)) in edges.into_iter().enumerate() {
            check_edge(n, u, v, i + 1)?;
            list.push((u.min(v), u.max(v)));
        }
        Self::from_checked(n, list, |i| i + 1)
    }

    fn from_checked(
        n: usize,
        mut list: Vec<Edge>,
        line_of: impl Fn(usize) -> usize,
    ) -> Result<Self, GraphError> {
        let mut order: Vec<usize> = (0..list.len()).collect();
        order.sort_by_key(|&i| (list[i], i));
        for w in order.windows(2) {
            if list[w[0]] == list[w[1]] {
                let (u, v) = list[w[1]];
                return Err(GraphError::Duplicate {
                    line: line_of(w[0].max(w[1])),
                    u,
                    v,
                });
            }
        }
        list.sort_unstable();
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in list.iter().enumerate() {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: list,
            adj,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edges in lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    /// Neighbours of `v` paired with the index of the connecting edge.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    /// Index of edge `{u, v}` in [`Graph::edges`], if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a]
            .binary_search_by_key(&b, |&(w, _)| w)
            .ok()
            .map(|pos| self.adj[a][pos].1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Partition of the vertices into connected components, each block sorted
    /// and blocks ordered by their smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut blocks = Vec::new();
        let mut stack = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut block = Vec::new();
            while let Some(v) = stack.pop() {
                block.push(v);
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        blocks
    }

    /// Number of vertex triples inducing a triangle.
    pub fn count_triangles(&self) -> usize {
        // each triangle is counted once, from its smallest edge
        let mut count = 0;
        for &(u, v) in &self.edges {
            count += sorted_intersection(&self.adj[u], &self.adj[v])
                .filter(|&w| w > v)
                .count();
        }
        count
    }

    /// Subgraph induced by `vertices`, relabelled to `0..vertices.len()` in
    /// the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut label = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            label[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| label[u] != usize::MAX && label[v] != usize::MAX)
            .map(|&(u, v)| (label[u], label[v]));
        Graph::new(vertices.len(), edges).expect("induced subgraph of a simple graph is simple")
    }

    /// Quotient by the given identifications.
    ///
    /// Each class is represented by its smallest member; surviving vertices
    /// are renumbered in increasing order. Parallel edges collapse. Returns the
    /// quotient and the map from old to new vertex labels.
    pub fn quotient(&self, identify: &[(usize, usize)]) -> Result<(Graph, Vec<usize>), GraphError> {
        let mut rep: Vec<usize> = (0..self.n).collect();
        fn find(rep: &mut [usize], v: usize) -> usize {
            let mut r = v;
            while rep[r] != r {
                r = rep[r];
            }
            let mut cur = v;
            while rep[cur] != r {
                let next = rep[cur];
                rep[cur] = r;
                cur = next;
            }
            r
        }
        for &(a, b) in identify {
            let (ra, rb) = (find(&mut rep, a), find(&mut rep, b));
            rep[ra.max(rb)] = ra.min(rb);
        }
        let roots: Vec<usize> = (0..self.n).map(|v| find(&mut rep, v)).collect();
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if roots[v] == v {
                label[v] = next;
                next += 1;
            }
        }
        let map: Vec<usize> = roots.iter().map(|&r| label[r]).collect();
        let mut edges = Vec::with_capacity(self.m());
        for &(u, v) in &self.edges {
            if map[u] == map[v] {
                return Err(GraphError::QuotientLoop(u, v));
            }
            edges.push((map[u].min(map[v]), map[u].max(map[v])));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok((Graph::new(next, edges)?, map))
    }
}

fn check_edge(n: usize, u: usize, v: usize, line: usize) -> Result<(), GraphError> {
    for vertex in [u, v] {
        if vertex >= n {
            return Err(GraphError::OutOfRange { line, vertex, n });
        }
    }
    if u == v {
        return Err(GraphError::Loop { line, vertex: u });
    }
    Ok(())
}

pub(crate) fn sorted_intersection<'a>(
    a: &'a [(usize, usize)],
    b: &'a [(usize, usize)],
) -> impl Iterator<Item = usize> + 'a {
    let (mut i, mut j) = (0, 0);
    std::iter::from_fn(move || {
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    let w = a[i].0;
                    i += 1;
                    j += 1;
                    return Some(w);
                }
            }
        }
        None
    })
}

/// An orientation of every edge of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    graph: Graph,
    // reversed[i] is true when edge i = (u, v), u < v, points v -> u
    reversed: Vec<bool>,
}

impl Orientation {
    /// Orientation given by one arc per edge, in any order.
    pub fn from_arcs(graph: Graph, arcs: &[(usize, usize)]) -> Result<Self, GraphError> {
        if arcs.len() != graph.m() {
            return Err(GraphError::Mismatch(format!(
                "{} arcs for {} edges",
                arcs.len(),
                graph.m()
            )));
        }
        let mut seen = vec![false; graph.m()];
        let mut reversed = vec![false; graph.m()];
        for &(u, v) in arcs {
            let i = graph
                .edge_index(u, v)
                .ok_or_else(|| GraphError::Mismatch(format!("arc {u} -> {v} is not an edge")))?;
            if std::mem::replace(&mut seen[i], true) {
                return Err(GraphError::Mismatch(format!("edge {u} {v} oriented twice")));
            }
            reversed[i] = u > v;
        }
        Ok(Orientation { graph, reversed })
    }

    /// Orientation whose edge `i` is reversed iff `reversed(i)`.
    pub fn from_fn(graph: Graph, reversed: impl Fn(usize) -> bool) -> Self {
        let reversed = (0..graph.m()).map(reversed).collect();
        Orientation { graph, reversed }
    }

    /// Orientation encoded by the low `m` bits of `bits`; bit `i` set means
    /// edge `i` points from its larger to its smaller endpoint.
    pub fn from_bits(graph: Graph, bits: u64) -> Self {
        Self::from_fn(graph, |i| bits >> i & 1 == 1)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// The arc for edge index `i`.
    pub fn arc(&self, i: usize) -> (usize, usize) {
        let (u, v) = self.graph.edges[i];
        if self.reversed[i] {
            (v, u)
        } else {
            (u, v)
        }
    }

    /// Arcs in canonical edge order.
    pub fn arcs(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        (0..self.graph.m()).map(|i| self.arc(i))
    }

    /// Whether `u -> v` is an arc. False when `uv` is not an edge.
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.graph
            .edge_index(u, v)
            .is_some_and(|i| self.arc(i) == (u, v))
    }
}

fn tokens(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            Some((i + 1, line.split_whitespace().collect()))
        }
    })
}

fn parse_pair(line: usize, fields: &[&str]) -> Result<(usize, usize), GraphError> {
    let malformed = |reason: String| GraphError::Malformed { line, reason };
    if fields.len() != 2 {
        return Err(malformed(format!(
            "expected two integers, found {} fields",
            fields.len()
        )));
    }
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| malformed(format!("`{s}` is not a non-negative integer")))
    };
    Ok((num(fields[0])?, num(fields[1])?))
}

/// Vertex count, pairs, and the line each pair came from.
type Parsed = (usize, Vec<(usize, usize)>, Vec<usize>);

/// Reads the header and the listed pairs, checking ranges and loops.
fn parse_pairs(text: &str) -> Result<Parsed, GraphError> {
    let mut lines = tokens(text);
    let (hline, header) = lines.next().ok_or(GraphError::MissingHeader)?;
    let (n, m) = parse_pair(hline, &header)?;
    let mut pairs = Vec::with_capacity(m);
    let mut line_numbers = Vec::with_capacity(m);
    for (line, fields) in lines {
        let (u, v) = parse_pair(line, &fields)?;
        check_edge(n, u, v, line)?;
        pairs.push((u, v));
        line_numbers.push(line);
    }
    if pairs.len() != m {
        return Err(GraphError::EdgeCount {
            expected: m,
            found: pairs.len(),
        });
    }
    Ok((n, pairs, line_numbers))
}

/// Parses an edge-list document.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let (n, pairs, lines) = parse_pairs(text)?;
    let canon = pairs.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    Graph::from_checked(n, canon, |i| lines[i])
}

/// Writes the canonical edge-list document for `g`.
pub fn write_graph(g: &Graph) -> String {
    write_pairs(g.n(), g.edges().iter().copied())
}

/// Parses an orientation document; the underlying graph is implied by the arcs.
pub fn parse_orientation(text: &str) -> Result<Orientation, GraphError> {
    let (n, pairs, lines) = parse_pairs(text)?;
    let canon = pairs.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    let graph = Graph::from_checked(n, canon, |i| lines[i])?;
    Orientation::from_arcs(graph, &pairs)
}

/// Writes an orientation document, arcs listed in canonical edge order.
pub fn write_orientation(o: &Orientation) -> String {
    write_pairs(o.graph().n(), o.arcs())
}

fn write_pairs(n: usize, pairs: impl ExactSizeIterator<Item = (usize, usize)>) -> String {
    let mut out = format!("{} {}\n", n, pairs.len());
    for (u, v) in pairs {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
