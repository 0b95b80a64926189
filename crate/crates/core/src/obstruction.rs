//! Homomorphic obstructions to T3-free orientations.
//!
//! When a graph has no T3-free orientation, a shortest walk in the
//! constraint graph from `(x, y)` to `(y, x)` is folded into a t-join `D` on
//! vertices `0..=n` (one per step of the walk, plus a leading vertex 0)
//! together with a homomorphism `phi: D -> G`. Identifying the ends of the
//! two underlying paths of `D` yields an odd donut or an even Möbius donut that
//! still maps into `G`.

use serde::Serialize;
use thiserror::Error;

use crate::constraint::ConstraintDigraph;
use crate::graph::{Graph, GraphError, Orientation};
use crate::patterns::{ForbiddenSet, Pattern};
use crate::solver::{solve_digraph, Certificate};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ObstructionError {
    #[error("contradicting path needs at least 3 steps, got {0}")]
    PathTooShort(usize),
    #[error("path ends ({0}, {1}) and ({2}, {3}) are not reversals of each other")]
    EndsNotDual(usize, usize, usize, usize),
    #[error("step {0}: ({1}, {2}) is not an orientation of an edge")]
    NotAnEdge(usize, usize, usize),
    #[error("steps {0} and {1} are not adjacent in the constraint graph")]
    NotAdjacent(usize, usize),
    #[error("walk labels violate an invariant: {0}")]
    InvalidLabels(String),
    #[error("vertex map covers {got} of {expected} vertices")]
    PartialMap { got: usize, expected: usize },
    #[error("vertex map sends {vertex} to {image}, outside 0..{n}")]
    MapOutOfRange {
        vertex: usize,
        image: usize,
        n: usize,
    },
    #[error("identification produced a loop: {0}")]
    DegenerateQuotient(GraphError),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

/// Predecessor structure of the t-join built from a walk: `k`, the colour
/// classes `c`, and the 0- and 1-predecessors of every vertex `i >= 2`.
///
/// Entries at indices 0 and 1 of `k`, `p0` and `p1` are unused and zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainLayout {
    pub k: Vec<usize>,
    pub c: Vec<u8>,
    pub p0: Vec<usize>,
    pub p1: Vec<usize>,
}

impl ChainLayout {
    /// Derives colours and predecessors from `k(2..=n)`.
    pub fn from_k(k: &[usize]) -> Result<Self, ObstructionError> {
        let len = k.len();
        if len < 2 {
            return Err(ObstructionError::InvalidLabels(
                "need vertices 0 and 1".into(),
            ));
        }
        let mut k = k.to_vec();
        k[0] = 0;
        k[1] = 0;
        let mut c = vec![0u8; len];
        c[1] = 1;
        let (mut p0, mut p1) = (vec![0; len], vec![0; len]);
        let mut last = [0usize, 1usize];
        for i in 2..len {
            if k[i] >= i {
                return Err(ObstructionError::InvalidLabels(format!(
                    "k({i}) = {} is not below {i}",
                    k[i]
                )));
            }
            c[i] = 1 - c[k[i]];
            p0[i] = last[0];
            p1[i] = last[1];
            last[c[i] as usize] = i;
        }
        Ok(ChainLayout { k, c, p0, p1 })
    }

    /// Largest vertex index.
    pub fn n(&self) -> usize {
        self.c.len() - 1
    }

    pub fn predecessor(&self, class: u8, i: usize) -> usize {
        if class == 0 {
            self.p0[i]
        } else {
            self.p1[i]
        }
    }

    /// Edge set: `01`, then `i p0(i)` and `i p1(i)` for every `i >= 2`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges = vec![(0, 1)];
        for i in 2..=self.n() {
            edges.push((self.p0[i], i));
            edges.push((self.p1[i], i));
        }
        edges
    }

    pub fn tjoin(&self) -> Graph {
        Graph::new(self.n() + 1, self.edges()).expect("predecessors are distinct and smaller")
    }

    /// For `i >= 2` the predecessor in the class opposite to `i` is `k(i)`.
    fn check_claims(&self) -> Result<(), ObstructionError> {
        for i in 2..=self.n() {
            if self.predecessor(1 - self.c[i], i) != self.k[i] {
                return Err(ObstructionError::InvalidLabels(format!(
                    "predecessor of {i} in class {} is not k({i}) = {}",
                    1 - self.c[i],
                    self.k[i]
                )));
            }
        }
        Ok(())
    }
}

/// Labels attached to a contradicting walk `a_1 ... a_n`, stored 0-based:
/// `fplus[i]` is f+(a_{i+1}).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkLabels {
    pub path: Vec<(usize, usize)>,
    pub fplus: Vec<usize>,
    pub fminus: Vec<usize>,
    pub layout: ChainLayout,
}

impl WalkLabels {
    /// Number of steps `n` of the walk.
    pub fn len(&self) -> usize {
        self.path.len()
    }

    pub fn is_empty(&self) -> bool {
        self.path.is_empty()
    }

    /// Vertex map on `0..=n`: `phi(0) = f-(a_1)`, `phi(i) = f+(a_i)`.
    pub fn phi(&self) -> Vec<usize> {
        std::iter::once(self.fminus[0])
            .chain(self.fplus.iter().copied())
            .collect()
    }

    /// Re-checks every defining property of the labels.
    pub fn validate(&self) -> Result<(), ObstructionError> {
        let bad = |msg: String| Err(ObstructionError::InvalidLabels(msg));
        let n = self.len();
        if n < 3 || self.fplus.len() != n || self.fminus.len() != n || self.layout.n() != n {
            return bad(format!("inconsistent lengths for a walk of {n} steps"));
        }
        for (i, &(t, h)) in self.path.iter().enumerate() {
            let (p, m) = (self.fplus[i], self.fminus[i]);
            if !((p, m) == (t, h) || (p, m) == (h, t)) {
                return bad(format!("step {}: {{f+, f-}} differs from {{t, h}}", i + 1));
            }
            if i > 0 {
                let (pt, ph) = self.path[i - 1];
                if m != pt && m != ph {
                    return bad(format!(
                        "step {}: f- is not an end of the previous step",
                        i + 1
                    ));
                }
                let shared = [t, h].iter().filter(|&&w| w == pt || w == ph).count();
                if shared != 1 {
                    return bad(format!("steps {} and {} share {shared} ends", i, i + 1));
                }
            }
        }
        let phi = self.phi();
        for i in 2..=n {
            let want = self.fminus[i - 1];
            let k = (0..i).rev().find(|&j| phi[j] == want);
            if k != Some(self.layout.k[i]) {
                return bad(format!(
                    "k({i}) is not the last earlier index labelled f-(a_{i})"
                ));
            }
        }
        Ok(())
    }
}

/// Computes f+, f-, k, colours and predecessors for a contradicting walk in
/// the T3 constraint graph of `g`.
pub fn compute_walk_labels(
    path: &[(usize, usize)],
    g: &Graph,
) -> Result<WalkLabels, ObstructionError> {
    let n = path.len();
    if n < 3 {
        return Err(ObstructionError::PathTooShort(n));
    }
    let (x, y) = path[0];
    let (u, v) = path[n - 1];
    if (u, v) != (y, x) {
        return Err(ObstructionError::EndsNotDual(x, y, u, v));
    }
    for (i, &(t, h)) in path.iter().enumerate() {
        if !g.has_edge(t, h) {
            return Err(ObstructionError::NotAnEdge(i + 1, t, h));
        }
    }
    for (i, w) in path.windows(2).enumerate() {
        let ((t1, h1), (t2, h2)) = (w[0], w[1]);
        // adjacent iff h_i = t_{i+1} xor t_i = h_{i+1}, spanning a triangle
        let forward = h1 == t2 && t1 != h2;
        let backward = t1 == h2 && h1 != t2;
        let apex = if forward { h2 } else { t2 };
        let base = if forward { t1 } else { h1 };
        if !(forward || backward) || apex == base || !g.has_edge(apex, base) {
            return Err(ObstructionError::NotAdjacent(i + 1, i + 2));
        }
    }

    let mut fplus = Vec::with_capacity(n);
    let mut fminus = Vec::with_capacity(n);
    let (t2, h2) = path[1];
    if x == t2 || x == h2 {
        fplus.push(x);
        fminus.push(y);
    } else {
        fplus.push(y);
        fminus.push(x);
    }
    for i in 1..n {
        let (t, h) = path[i];
        let (pt, ph) = path[i - 1];
        if t == pt || t == ph {
            fminus.push(t);
            fplus.push(h);
        } else {
            fminus.push(h);
            fplus.push(t);
        }
    }

    let phi: Vec<usize> = std::iter::once(fminus[0])
        .chain(fplus.iter().copied())
        .collect();
    let mut k = vec![0; n + 1];
    for i in 2..=n {
        let want = fminus[i - 1];
        k[i] = (0..i).rev().find(|&j| phi[j] == want).ok_or_else(|| {
            ObstructionError::InvalidLabels(format!("no earlier index for k({i})"))
        })?;
    }
    let labels = WalkLabels {
        path: path.to_vec(),
        fplus,
        fminus,
        layout: ChainLayout::from_k(&k)?,
    };
    labels.validate()?;
    Ok(labels)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ObstructionKind {
    OddDonut,
    EvenMobiusDonut,
}

impl ObstructionKind {
    pub fn is_mobius(self) -> bool {
        self == ObstructionKind::EvenMobiusDonut
    }
}

/// A donut or Möbius donut `tjoin / identify` with a homomorphism into the
/// input graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Obstruction {
    pub kind: ObstructionKind,
    /// The spanning t-join `D` on `0..=n`.
    pub tjoin: Graph,
    /// `phi` on the t-join's vertices.
    pub phi: Vec<usize>,
    /// The two end identifications defining the quotient.
    pub identify: [(usize, usize); 2],
    /// `D / identify`, vertices renumbered in increasing order of their
    /// smallest representative.
    pub host: Graph,
    /// t-join vertex to host vertex.
    pub quotient_map: Vec<usize>,
    /// Homomorphism from the host into the input graph.
    pub host_map: Vec<usize>,
}

#[derive(Serialize)]
struct ObstructionJson<'a> {
    kind: ObstructionKind,
    tjoin: &'a Graph,
    identify: [[usize; 2]; 2],
    phi: &'a [usize],
}

impl Obstruction {
    pub fn to_json(&self) -> serde_json::Value {
        let [(a, b), (c, d)] = self.identify;
        serde_json::to_value(ObstructionJson {
            kind: self.kind,
            tjoin: &self.tjoin,
            identify: [[a, b], [c, d]],
            phi: &self.phi,
        })
        .expect("obstruction serializes")
    }
}

/// Builds the t-join, its end identification, and the induced homomorphism.
pub fn build_obstruction(labels: &WalkLabels, g: &Graph) -> Result<Obstruction, ObstructionError> {
    labels.validate()?;
    let layout = &labels.layout;
    layout.check_claims()?;
    let n = labels.len();
    let tjoin = layout.tjoin();
    let phi = labels.phi();
    if !verify_homomorphism(&phi, &tjoin, g)? {
        return Err(ObstructionError::InvalidLabels(
            "phi is not a homomorphism of the t-join".into(),
        ));
    }

    let (x, y) = labels.path[0];
    let kn = layout.k[n];
    let ends = |a: usize, b: usize| (phi[a] == x && phi[b] == y) || (phi[a] == y && phi[b] == x);
    if !ends(0, 1) || !ends(n, kn) {
        return Err(ObstructionError::Internal(format!(
            "images of 0, 1, n, k(n) do not cover the witness edge {x} {y}"
        )));
    }
    // 0 and 1 start the two colour classes; n and k(n) end them
    let n_meets_zero = phi[n] == phi[0];
    let identify = if n_meets_zero {
        [(0, n), (1, kn)]
    } else {
        [(1, n), (0, kn)]
    };
    let start_class_of_n = if n_meets_zero { 0 } else { 1 };
    let kind = if layout.c[n] == start_class_of_n {
        ObstructionKind::OddDonut
    } else {
        ObstructionKind::EvenMobiusDonut
    };

    let (host, quotient_map) = tjoin
        .quotient(&identify)
        .map_err(ObstructionError::DegenerateQuotient)?;
    let mut host_map = vec![usize::MAX; host.n()];
    for (v, &q) in quotient_map.iter().enumerate() {
        if host_map[q] != usize::MAX && host_map[q] != phi[v] {
            return Err(ObstructionError::Internal(format!(
                "identified vertices of {q} disagree under phi"
            )));
        }
        host_map[q] = phi[v];
    }
    if !verify_homomorphism(&host_map, &host, g)? {
        return Err(ObstructionError::Internal(
            "quotient map is not a homomorphism".into(),
        ));
    }

    let odd = tjoin.count_triangles() % 2 == 1;
    if odd == kind.is_mobius() {
        return Err(ObstructionError::Internal(format!(
            "{kind:?} built from a t-join with {} triangles",
            tjoin.count_triangles()
        )));
    }
    Ok(Obstruction {
        kind,
        tjoin,
        phi,
        identify,
        host,
        quotient_map,
        host_map,
    })
}

/// Whether `map` sends every edge of `from` to an edge of `to`.
pub fn verify_homomorphism(
    map: &[usize],
    from: &Graph,
    to: &Graph,
) -> Result<bool, ObstructionError> {
    if map.len() != from.n() {
        return Err(ObstructionError::PartialMap {
            got: map.len(),
            expected: from.n(),
        });
    }
    if let Some((vertex, &image)) = map.iter().enumerate().find(|&(_, &w)| w >= to.n()) {
        return Err(ObstructionError::MapOutOfRange {
            vertex,
            image,
            n: to.n(),
        });
    }
    Ok(from
        .edges()
        .iter()
        .all(|&(u, v)| to.has_edge(map[u], map[v])))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum T3Outcome {
    Orientable(Orientation),
    Obstructed(Obstruction),
}

/// Decides T3-orientability; on NO, returns a verified obstruction.
///
/// An `Err` signals a broken internal invariant, never a property of `g`.
pub fn extract_t3_obstruction(g: &Graph) -> Result<T3Outcome, ObstructionError> {
    let d = ConstraintDigraph::build(g, ForbiddenSet::new([Pattern::T3])).expect("{T3} is simple");
    match solve_digraph(&d) {
        Certificate::Yes(o) => Ok(T3Outcome::Orientable(o)),
        Certificate::No { path, .. } => {
            let labels = compute_walk_labels(&path, g)?;
            build_obstruction(&labels, g).map(T3Outcome::Obstructed)
        }
    }
}
