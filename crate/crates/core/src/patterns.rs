//! The six oriented graphs on three vertices, F-freeness checks, and an
//! exhaustive orientation oracle that never touches the constraint digraph.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Orientation};

/// Oriented graphs on three vertices with at least one arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Pattern {
    /// `x -> y <- z` with `xz` absent.
    B1,
    /// `x <- y -> z` with `xz` absent.
    B2,
    /// Directed path `x -> y -> z` with `xz` absent.
    B3,
    /// Transitive triangle.
    T3,
    /// Directed triangle.
    C3,
    /// A single arc plus an isolated vertex.
    K1K2,
}

impl Pattern {
    pub const ALL: [Pattern; 6] = [
        Pattern::B1,
        Pattern::B2,
        Pattern::B3,
        Pattern::T3,
        Pattern::C3,
        Pattern::K1K2,
    ];

    fn bit(self) -> u8 {
        1 << self as u8
    }

    pub fn name(self) -> &'static str {
        match self {
            Pattern::B1 => "B1",
            Pattern::B2 => "B2",
            Pattern::B3 => "B3",
            Pattern::T3 => "T3",
            Pattern::C3 => "C3",
            Pattern::K1K2 => "K1K2",
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("unknown pattern `{0}` (expected B1, B2, B3, T3, C3 or K1K2)")]
    UnknownPattern(String),
    #[error("triple {0:?} must consist of three distinct vertices below {1}")]
    BadTriple([usize; 3], usize),
    #[error("{edges} edges exceed the oracle cap of {cap}")]
    TooManyEdges { edges: usize, cap: usize },
}

impl FromStr for Pattern {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Pattern::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| PatternError::UnknownPattern(s.trim().to_string()))
    }
}

/// A set of forbidden patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct ForbiddenSet(u8);

impl ForbiddenSet {
    pub const EMPTY: ForbiddenSet = ForbiddenSet(0);
    const SIMPLE_MASK: u8 = 0b1111;

    pub fn new(patterns: impl IntoIterator<Item = Pattern>) -> Self {
        ForbiddenSet(patterns.into_iter().fold(0, |acc, p| acc | p.bit()))
    }

    pub fn contains(self, p: Pattern) -> bool {
        self.0 & p.bit() != 0
    }

    pub fn with(self, p: Pattern) -> Self {
        ForbiddenSet(self.0 | p.bit())
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Only B1, B2, B3 and T3: the sets the constraint digraph handles.
    pub fn is_simple(self) -> bool {
        self.0 & !Self::SIMPLE_MASK == 0
    }

    pub fn is_subset(self, other: ForbiddenSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Pattern> {
        Pattern::ALL.into_iter().filter(move |&p| self.contains(p))
    }

    /// The 15 nonempty subsets of {B1, B2, B3, T3}, by increasing size then
    /// pattern order.
    pub fn nonempty_simple_sets() -> Vec<ForbiddenSet> {
        let mut sets: Vec<ForbiddenSet> = (1..16u8).map(ForbiddenSet).collect();
        sets.sort_by_key(|s| (s.0.count_ones(), s.iter().collect::<Vec<_>>()));
        sets
    }

    /// Every subset of the six patterns.
    pub fn all() -> impl Iterator<Item = ForbiddenSet> {
        (0..64u8).map(ForbiddenSet)
    }
}

impl fmt::Display for ForbiddenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.iter().map(Pattern::name).collect();
        f.write_str(&names.join(","))
    }
}

impl FromStr for ForbiddenSet {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(',')
            .filter(|t| !t.trim().is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Pattern>, _>>()
            .map(ForbiddenSet::new)
    }
}

impl FromIterator<Pattern> for ForbiddenSet {
    fn from_iter<I: IntoIterator<Item = Pattern>>(iter: I) -> Self {
        ForbiddenSet::new(iter)
    }
}

/// A triple inducing a forbidden pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    /// Sorted ascending.
    pub triple: [usize; 3],
    pub pattern: Pattern,
}

/// Classifies the oriented subgraph induced on `triple`; `None` when no two of
/// the vertices are adjacent.
pub fn induced_pattern(
    o: &Orientation,
    triple: [usize; 3],
) -> Result<Option<Pattern>, PatternError> {
    let n = o.graph().n();
    let [a, b, c] = triple;
    if a == b || b == c || a == c || triple.iter().any(|&v| v >= n) {
        return Err(PatternError::BadTriple(triple, n));
    }
    Ok(classify(o, triple))
}

fn classify(o: &Orientation, [a, b, c]: [usize; 3]) -> Option<Pattern> {
    let g = o.graph();
    let pairs = [(a, b), (b, c), (a, c)];
    let present: Vec<(usize, usize)> = pairs
        .into_iter()
        .filter(|&(u, v)| g.has_edge(u, v))
        .collect();
    match present.len() {
        0 => None,
        1 => Some(Pattern::K1K2),
        2 => {
            let (p, q) = (present[0], present[1]);
            let centre = if p.0 == q.0 || p.0 == q.1 { p.0 } else { p.1 };
            let other = |(u, v): (usize, usize)| if u == centre { v } else { u };
            Some(path_pattern(
                o.has_arc(other(p), centre),
                o.has_arc(other(q), centre),
            ))
        }
        _ => {
            let out = |v: usize| {
                [a, b, c]
                    .iter()
                    .filter(|&&w| w != v && o.has_arc(v, w))
                    .count()
            };
            if out(a) == 1 && out(b) == 1 && out(c) == 1 {
                Some(Pattern::C3)
            } else {
                Some(Pattern::T3)
            }
        }
    }
}

/// Pattern of an induced path given whether each arm points into the centre.
fn path_pattern(first_in: bool, second_in: bool) -> Pattern {
    match (first_in, second_in) {
        (true, true) => Pattern::B1,
        (false, false) => Pattern::B2,
        _ => Pattern::B3,
    }
}

/// All triples of `o` inducing a pattern of `f`, sorted.
pub fn violations(o: &Orientation, f: ForbiddenSet) -> Vec<Violation> {
    let g = o.graph();
    let mut found = Vec::new();
    if f.is_empty() {
        return found;
    }
    let sorted = |mut t: [usize; 3]| {
        t.sort_unstable();
        t
    };
    for y in 0..g.n() {
        let nbrs = g.incident(y);
        for (i, &(x, ex)) in nbrs.iter().enumerate() {
            for &(z, ez) in &nbrs[i + 1..] {
                let pattern = if g.has_edge(x, z) {
                    // visit each triangle once, from its smallest vertex
                    if y > x {
                        continue;
                    }
                    let out = |v: usize, w1: usize, w2: usize| {
                        usize::from(o.has_arc(v, w1)) + usize::from(o.has_arc(v, w2))
                    };
                    if out(x, y, z) == 1 && out(y, x, z) == 1 && out(z, x, y) == 1 {
                        Pattern::C3
                    } else {
                        Pattern::T3
                    }
                } else {
                    path_pattern(o.arc(ex).1 == y, o.arc(ez).1 == y)
                };
                if f.contains(pattern) {
                    found.push(Violation {
                        triple: sorted([x, y, z]),
                        pattern,
                    });
                }
            }
        }
    }
    if f.contains(Pattern::K1K2) {
        for &(u, v) in g.edges() {
            for w in 0..g.n() {
                if w != u && w != v && !g.has_edge(u, w) && !g.has_edge(v, w) {
                    found.push(Violation {
                        triple: sorted([u, v, w]),
                        pattern: Pattern::K1K2,
                    });
                }
            }
        }
    }
    found.sort_unstable();
    found
}

/// Default bound on the number of edges the oracle accepts.
pub const DEFAULT_EDGE_CAP: usize = 24;

/// All `2^m` orientations of `g` in binary-counter order (see
/// [`Orientation::from_bits`]).
pub fn all_orientations(g: &Graph) -> impl Iterator<Item = Orientation> + '_ {
    assert!(g.m() < 64, "counter enumeration needs fewer than 64 edges");
    (0..1u64 << g.m()).map(move |bits| Orientation::from_bits(g.clone(), bits))
}

/// Exhaustive search for an `f`-free orientation of `g`, limited to
/// [`DEFAULT_EDGE_CAP`] edges.
pub fn brute_force_orientable(
    g: &Graph,
    f: ForbiddenSet,
) -> Result<Option<Orientation>, PatternError> {
    brute_force_orientable_with_cap(g, f, DEFAULT_EDGE_CAP)
}

/// Returns the first `f`-free orientation in binary-counter order, or `None`.
///
/// The counter is walked depth-first from its most significant bit, and a
/// branch is abandoned as soon as a triple whose edges are all assigned
/// induces a forbidden pattern. The first leaf reached is therefore the
/// smallest counter value whose orientation is `f`-free.
pub fn brute_force_orientable_with_cap(
    g: &Graph,
    f: ForbiddenSet,
    cap: usize,
) -> Result<Option<Orientation>, PatternError> {
    if g.m() > cap {
        return Err(PatternError::TooManyEdges { edges: g.m(), cap });
    }
    if f.contains(Pattern::K1K2) && has_lone_edge_triple(g) {
        return Ok(None);
    }
    let m = g.m();
    // checks[e]: triples whose lowest edge index is e
    let mut checks: Vec<Vec<Triple>> = vec![Vec::new(); m];
    for y in 0..g.n() {
        let nbrs = g.incident(y);
        for (i, &(x, ex)) in nbrs.iter().enumerate() {
            for &(z, ez) in &nbrs[i + 1..] {
                match g.edge_index(x, z) {
                    Some(exz) => {
                        if y < x && (f.contains(Pattern::T3) || f.contains(Pattern::C3)) {
                            let t = Triple::Triangle {
                                edges: [ex, ez, exz],
                                vertices: [y, x, z],
                            };
                            checks[ex.min(ez).min(exz)].push(t);
                        }
                    }
                    None => {
                        if f.contains(Pattern::B1)
                            || f.contains(Pattern::B2)
                            || f.contains(Pattern::B3)
                        {
                            checks[ex.min(ez)].push(Triple::Path {
                                centre: y,
                                arms: [ex, ez],
                            });
                        }
                    }
                }
            }
        }
    }
    let edges = g.edges();
    let mut reversed = vec![false; m];
    let head = |reversed: &[bool], e: usize| {
        let (u, v) = edges[e];
        if reversed[e] {
            u
        } else {
            v
        }
    };
    let forbidden = |reversed: &[bool], t: &Triple| -> bool {
        match *t {
            Triple::Path { centre, arms } => f.contains(path_pattern(
                head(reversed, arms[0]) == centre,
                head(reversed, arms[1]) == centre,
            )),
            Triple::Triangle {
                edges: es,
                vertices,
            } => {
                // cyclic iff every vertex is the head of exactly one arc
                let heads = es.map(|e| head(reversed, e));
                let cyclic = vertices
                    .iter()
                    .all(|v| heads.iter().filter(|&h| h == v).count() == 1);
                f.contains(if cyclic { Pattern::C3 } else { Pattern::T3 })
            }
        }
    };

    // iterative DFS over edges m-1 down to 0; state[d] is the bit chosen at depth d
    if m == 0 {
        return Ok(Some(Orientation::from_bits(g.clone(), 0)));
    }
    let mut depth = 0usize;
    let mut next_bit = vec![0u8; m + 1];
    loop {
        let e = m - 1 - depth;
        if next_bit[depth] > 1 {
            next_bit[depth] = 0;
            if depth == 0 {
                return Ok(None);
            }
            depth -= 1;
            continue;
        }
        reversed[e] = next_bit[depth] == 1;
        next_bit[depth] += 1;
        if checks[e].iter().any(|t| forbidden(&reversed, t)) {
            continue;
        }
        if e == 0 {
            return Ok(Some(Orientation::from_fn(g.clone(), |i| reversed[i])));
        }
        depth += 1;
    }
}

#[derive(Debug, Clone, Copy)]
enum Triple {
    Path {
        centre: usize,
        arms: [usize; 2],
    },
    Triangle {
        edges: [usize; 3],
        vertices: [usize; 3],
    },
}

fn has_lone_edge_triple(g: &Graph) -> bool {
    g.edges().iter().any(|&(u, v)| {
        (0..g.n()).any(|w| w != u && w != v && !g.has_edge(u, w) && !g.has_edge(v, w))
    })
}
