//! Generators: t-joins, donuts, Möbius donuts and a corpus of standard graphs.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid t-join: {0}")]
    InvalidTJoin(String),
    #[error("degenerate donut: {0}")]
    Degenerate(String),
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("bad size for `{name}`: {reason}")]
    BadSize { name: String, reason: String },
}

/// Two paths `P = x_1..x_p` and `Q = y_1..y_q` and the order in which a
/// triangulating sweep advances along them: `false` steps along `P`, `true`
/// along `Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TJoinSpec {
    p: usize,
    q: usize,
    merge: Vec<bool>,
}

impl TJoinSpec {
    pub fn new(p: usize, q: usize, merge: Vec<bool>) -> Result<Self, FamilyError> {
        let bad = |s: String| Err(FamilyError::InvalidTJoin(s));
        if p < 1 || q < 1 || p + q < 4 {
            return bad(format!(
                "need p, q >= 1 and p + q >= 4, got p = {p}, q = {q}"
            ));
        }
        let ones = merge.iter().filter(|&&b| b).count();
        if merge.len() != p + q - 2 || ones != q - 1 {
            return bad(format!(
                "merge needs {} zeros and {} ones, got {} zeros and {ones} ones",
                p - 1,
                q - 1,
                merge.len() - ones
            ));
        }
        Ok(TJoinSpec { p, q, merge })
    }

    /// Parses the merge sequence from a string of `0`s and `1`s.
    pub fn parse(p: usize, q: usize, merge: &str) -> Result<Self, FamilyError> {
        let bits = merge
            .chars()
            .map(|ch| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(FamilyError::InvalidTJoin(format!("merge symbol `{other}`"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(p, q, bits)
    }

    /// The sweep that finishes `P` before moving along `Q`.
    pub fn p_first(p: usize, q: usize) -> Result<Self, FamilyError> {
        let mut merge = vec![false; p.saturating_sub(1)];
        merge.resize(merge.len() + q.saturating_sub(1), true);
        Self::new(p, q, merge)
    }

    /// Every valid merge sequence for the given path lengths, in
    /// lexicographic order.
    pub fn all(p: usize, q: usize) -> Vec<TJoinSpec> {
        fn rec(zeros: usize, ones: usize, cur: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
            if zeros == 0 && ones == 0 {
                out.push(cur.clone());
                return;
            }
            if zeros > 0 {
                cur.push(false);
                rec(zeros - 1, ones, cur, out);
                cur.pop();
            }
            if ones > 0 {
                cur.push(true);
                rec(zeros, ones - 1, cur, out);
                cur.pop();
            }
        }
        if p < 1 || q < 1 || p + q < 4 {
            return Vec::new();
        }
        let mut seqs = Vec::new();
        rec(p - 1, q - 1, &mut Vec::new(), &mut seqs);
        seqs.into_iter()
            .map(|merge| TJoinSpec { p, q, merge })
            .collect()
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn merge(&self) -> &[bool] {
        &self.merge
    }

    /// Label of `x_i`, 1-based.
    pub fn x(&self, i: usize) -> usize {
        i - 1
    }

    /// Label of `y_j`, 1-based.
    pub fn y(&self, j: usize) -> usize {
        self.p + j - 1
    }
}

impl fmt::Display for TJoinSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let merge: String = self
            .merge
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect();
        write!(f, "p={} q={} merge={merge}", self.p, self.q)
    }
}

/// The t-join on `p + q` vertices: `x_i` is vertex `i - 1`, `y_j` is vertex
/// `p + j - 1`.
pub fn gen_tjoin(spec: &TJoinSpec) -> Graph {
    let (p, q) = (spec.p, spec.q);
    let mut edges = Vec::with_capacity(2 * (p + q) - 3);
    edges.extend((1..p).map(|i| (spec.x(i), spec.x(i + 1))));
    edges.extend((1..q).map(|j| (spec.y(j), spec.y(j + 1))));
    let (mut i, mut j) = (1, 1);
    edges.push((spec.x(i), spec.y(j)));
    for &along_q in &spec.merge {
        if along_q {
            j += 1;
        } else {
            i += 1;
        }
        edges.push((spec.x(i), spec.y(j)));
    }
    Graph::new(p + q, edges).expect("t-join edges are distinct")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DonutSpec {
    pub tjoin: TJoinSpec,
    pub mobius: bool,
}

/// Pairs of t-join vertices a donut (`x_1 ~ x_p`, `y_1 ~ y_q`) or Möbius donut
/// (`x_1 ~ y_q`, `y_1 ~ x_p`) identifies.
pub fn donut_identification(spec: &DonutSpec) -> [(usize, usize); 2] {
    let t = &spec.tjoin;
    if spec.mobius {
        [(t.x(1), t.y(t.q)), (t.y(1), t.x(t.p))]
    } else {
        [(t.x(1), t.x(t.p)), (t.y(1), t.y(t.q))]
    }
}

/// Quotient of the spanning t-join; identified vertices take the smaller
/// label and parallel edges merge.
pub fn gen_donut(spec: &DonutSpec) -> Result<Graph, FamilyError> {
    let t = &spec.tjoin;
    let tjoin = gen_tjoin(t);
    if !spec.mobius && t.p == 2 && t.q == 2 {
        return Err(FamilyError::Degenerate(
            "donut on two paths of two vertices".into(),
        ));
    }
    if spec.mobius {
        let xs: Vec<usize> = (1..=t.p).map(|i| t.x(i)).collect();
        let ys: Vec<usize> = (1..=t.q).map(|j| t.y(j)).collect();
        let sees_all = |v: usize, others: &[usize]| others.iter().all(|&w| tjoin.has_edge(v, w));
        let ends = [
            (xs[0], &ys),
            (xs[t.p - 1], &ys),
            (ys[0], &xs),
            (ys[t.q - 1], &xs),
        ];
        if let Some((v, _)) = ends.iter().find(|(v, others)| sees_all(*v, others)) {
            return Err(FamilyError::Degenerate(format!(
                "end vertex {v} is adjacent to the whole opposite path"
            )));
        }
    }
    tjoin
        .quotient(&donut_identification(spec))
        .map(|(g, _)| g)
        .map_err(|e| FamilyError::Degenerate(e.to_string()))
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path")
}

pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(bad_size("cycle", "needs at least 3 vertices"));
    }
    Ok(Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle"))
}

/// `K_{1,k}` with centre 0.
pub fn star(k: usize) -> Graph {
    Graph::new(k + 1, (1..=k).map(|i| (0, i))).expect("star")
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("complete")
}

/// Complete multipartite graph with consecutive parts of the given sizes.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let mut part = Vec::new();
    for (i, &size) in parts.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, size));
    }
    let n = part.len();
    let part = &part;
    let edges = (0..n).flat_map(|u| {
        (u + 1..n)
            .filter(move |&v| part[u] != part[v])
            .map(move |v| (u, v))
    });
    Graph::new(n, edges).expect("multipartite")
}

/// Hub 0 joined to the cycle `1..=k`.
pub fn wheel(k: usize) -> Result<Graph, FamilyError> {
    if k < 3 {
        return Err(bad_size("wheel", "rim needs at least 3 vertices"));
    }
    let rim = (1..=k).map(|i| (i, i % k + 1));
    let spokes = (1..=k).map(|i| (0, i));
    Ok(Graph::new(k + 1, rim.chain(spokes)).expect("wheel"))
}

/// Triangle `0 1 2` with vertices 3, 4, 5 each joined to one of its sides.
pub fn hajos() -> Graph {
    Graph::new(
        6,
        [
            (0, 1),
            (1, 2),
            (0, 2),
            (0, 3),
            (1, 3),
            (1, 4),
            (2, 4),
            (0, 5),
            (2, 5),
        ],
    )
    .expect("hajos")
}

/// Mycielski's construction: a shadow `n + i` of every vertex `i`, joined to
/// the neighbours of `i`, and an apex `2n` joined to every shadow.
pub fn mycielskian(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges = g.edges().to_vec();
    for &(u, v) in g.edges() {
        edges.push((n + u, v));
        edges.push((n + v, u));
    }
    edges.extend((0..n).map(|i| (n + i, 2 * n)));
    Graph::new(2 * n + 1, edges).expect("mycielskian")
}

pub fn grotzsch() -> Graph {
    mycielskian(&cycle(5).expect("C5"))
}

fn bad_size(name: &str, reason: &str) -> FamilyError {
    FamilyError::BadSize {
        name: name.into(),
        reason: reason.into(),
    }
}

/// Named standard graphs: `path n`, `cycle n`, `star k`, `complete n`,
/// `multipartite a,b,..`, `wheel k`, `empty n`, `hajos`, `grotzsch`,
/// `mycielski n` (Mycielskian of `C_n`).
pub fn gen_standard(name: &str, size: &[usize]) -> Result<Graph, FamilyError> {
    let one = || match size {
        [n] => Ok(*n),
        _ => Err(bad_size(name, "expects exactly one size")),
    };
    let none = || {
        if size.is_empty() {
            Ok(())
        } else {
            Err(bad_size(name, "takes no size"))
        }
    };
    match name {
        "path" => Ok(path(one()?)),
        "cycle" => cycle(one()?),
        "star" => Ok(star(one()?)),
        "complete" => Ok(complete(one()?)),
        "empty" => Ok(Graph::empty(one()?)),
        "multipartite" => {
            if size.is_empty() {
                Err(bad_size(name, "expects part sizes"))
            } else {
                Ok(complete_multipartite(size))
            }
        }
        "wheel" => wheel(one()?),
        "hajos" => none().map(|_| hajos()),
        "grotzsch" => none().map(|_| grotzsch()),
        "mycielski" => Ok(mycielskian(&cycle(one()?)?)),
        other => Err(FamilyError::UnknownFamily(other.into())),
    }
}

/// Sizes written as a comma-separated list, e.g. `2,3,3`.
pub fn parse_sizes(s: &str) -> Result<Vec<usize>, std::num::ParseIntError> {
    s.split(',')
        .filter(|t| !t.is_empty())
        .map(|t| t.trim().parse())
        .collect()
}

impl FromStr for TJoinSpec {
    type Err = FamilyError;

    /// `p,q,merge`, e.g. `3,3,0101`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').collect();
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| FamilyError::InvalidTJoin(format!("`{t}` is not a count")))
        };
        match parts.as_slice() {
            [p, q, merge] => TJoinSpec::parse(num(p)?, num(q)?, merge.trim()),
            _ => Err(FamilyError::InvalidTJoin("expected p,q,merge".into())),
        }
    }
}
