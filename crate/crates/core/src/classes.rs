//! Structural graph predicates and the atlas that lines them up against the
//! solver and oracle decisions for every forbidden set with a known
//! characterization.

use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::graph::Graph;
use crate::patterns::{brute_force_orientable_with_cap, ForbiddenSet, DEFAULT_EDGE_CAP};
use crate::solver::solve;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassProfile {
    /// Every component has no more edges than vertices.
    pub unicyclic_per_component: bool,
    pub triangle_free: bool,
    pub bipartite: bool,
    pub max_degree_le_2: bool,
    /// Every component is a star `K_{1,k}` (`k >= 0`) or a triangle.
    pub star_or_triangle_components: bool,
    pub k4_free: bool,
    /// Every open neighbourhood induces a bipartite graph.
    pub locally_bipartite: bool,
    pub complete_components: bool,
    pub complete_multipartite: bool,
}

pub fn class_profile(g: &Graph) -> ClassProfile {
    let components = g.connected_components();
    let edges_in = |block: &[usize]| block.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
    ClassProfile {
        unicyclic_per_component: components.iter().all(|b| edges_in(b) <= b.len()),
        triangle_free: g.count_triangles() == 0,
        bipartite: is_bipartite(g),
        max_degree_le_2: g.max_degree() <= 2,
        star_or_triangle_components: components.iter().all(|b| {
            let m = edges_in(b);
            let is_star = m + 1 == b.len() && b.iter().any(|&v| g.degree(v) == m);
            is_star || (b.len() == 3 && m == 3)
        }),
        k4_free: is_k4_free(g),
        locally_bipartite: (0..g.n()).all(|v| {
            let nbrs: Vec<usize> = g.neighbors(v).collect();
            is_bipartite(&g.induced(&nbrs))
        }),
        complete_components: components
            .iter()
            .all(|b| 2 * edges_in(b) == b.len() * (b.len() - 1)),
        complete_multipartite: is_complete_multipartite(g),
    }
}

pub fn is_bipartite(g: &Graph) -> bool {
    let mut side = vec![u8::MAX; g.n()];
    let mut stack = Vec::new();
    for s in 0..g.n() {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        stack.push(s);
        while let Some(v) = stack.pop() {
            for w in g.neighbors(v) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    stack.push(w);
                } else if side[w] == side[v] {
                    return false;
                }
            }
        }
    }
    true
}

fn is_k4_free(g: &Graph) -> bool {
    g.edges().iter().all(|&(u, v)| {
        let common: Vec<usize> = g.neighbors(u).filter(|&w| g.has_edge(v, w)).collect();
        common
            .iter()
            .enumerate()
            .all(|(i, &a)| common[i + 1..].iter().all(|&b| !g.has_edge(a, b)))
    })
}

/// Non-adjacency is an equivalence relation.
fn is_complete_multipartite(g: &Graph) -> bool {
    (0..g.n()).all(|u| {
        (0..g.n()).all(|v| {
            u == v
                || g.has_edge(u, v)
                || (0..g.n()).all(|w| w == u || w == v || g.has_edge(u, w) == g.has_edge(v, w))
        })
    })
}

/// A proper 3-colouring by backtracking in vertex order, if one exists.
pub fn three_colouring(g: &Graph) -> Option<Vec<u8>> {
    let n = g.n();
    let mut colour = vec![u8::MAX; n];
    let mut v = 0;
    while v < n {
        let start = if colour[v] == u8::MAX {
            0
        } else {
            colour[v] + 1
        };
        let next = (start..3).find(|&c| g.neighbors(v).all(|w| w > v || colour[w] != c));
        match next {
            Some(c) => {
                colour[v] = c;
                v += 1;
            }
            None => {
                colour[v] = u8::MAX;
                if v == 0 {
                    return None;
                }
                v -= 1;
            }
        }
    }
    Some(colour)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Solver,
    Oracle,
}

/// How a row's decision relates to its check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "relation")]
pub enum Check {
    /// Decision must equal the predicate.
    Equivalent {
        predicate: &'static str,
        value: bool,
    },
    /// A YES decision requires the predicate.
    Necessary {
        predicate: &'static str,
        value: bool,
    },
    /// Decision must equal the decision of another row.
    SameAs { forbid: String, value: Option<bool> },
}

impl Check {
    fn agrees(&self, decision: bool) -> Option<bool> {
        match *self {
            Check::Equivalent { value, .. } => Some(decision == value),
            Check::Necessary { value, .. } => Some(!decision || value),
            Check::SameAs { value, .. } => value.map(|v| v == decision),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yn = |b: bool| if b { "yes" } else { "no" };
        match self {
            Check::Equivalent { predicate, value } => write!(f, "iff {predicate}: {}", yn(*value)),
            Check::Necessary { predicate, value } => write!(f, "needs {predicate}: {}", yn(*value)),
            Check::SameAs { forbid, value } => match value {
                Some(v) => write!(f, "same as {forbid}: {}", yn(*v)),
                None => write!(f, "same as {forbid}: skipped"),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AtlasRow {
    #[serde(serialize_with = "as_string")]
    pub forbid: ForbiddenSet,
    pub method: Method,
    pub family: &'static str,
    /// `None` when the oracle was skipped for exceeding its edge cap.
    pub decision: Option<bool>,
    pub check: Option<Check>,
    pub agrees: Option<bool>,
}

fn as_string<S: serde::Serializer>(f: &ForbiddenSet, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(f)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AtlasReport {
    pub profile: ClassProfile,
    pub rows: Vec<AtlasRow>,
}

impl AtlasReport {
    pub fn row(&self, forbid: ForbiddenSet) -> Option<&AtlasRow> {
        self.rows.iter().find(|r| r.forbid == forbid)
    }

    /// Rows whose check disagrees with their decision.
    pub fn disagreements(&self) -> impl Iterator<Item = &AtlasRow> {
        self.rows.iter().filter(|r| r.agrees == Some(false))
    }

    pub fn to_table(&self) -> String {
        let mut out = format!(
            "{:<12} {:<6} {:<8} {:<40} {:<46} {}\n",
            "forbid", "method", "decision", "family", "check", "agree"
        );
        for r in &self.rows {
            let decision = match r.decision {
                Some(true) => "yes",
                Some(false) => "no",
                None => "skipped",
            };
            let method = match r.method {
                Method::Solver => "solver",
                Method::Oracle => "oracle",
            };
            let check = r
                .check
                .as_ref()
                .map_or_else(|| "-".to_string(), ToString::to_string);
            let agree = match r.agrees {
                Some(true) => "ok",
                Some(false) => "MISMATCH",
                None => "-",
            };
            let _ = writeln!(
                out,
                "{:<12} {:<6} {:<8} {:<40} {:<46} {}",
                r.forbid.to_string(),
                method,
                decision,
                r.family,
                check,
                agree
            );
        }
        out
    }
}

enum Expect {
    None,
    Equivalent(&'static str, fn(&ClassProfile) -> bool),
    Necessary(&'static str, fn(&ClassProfile) -> bool),
    SameAs(&'static str),
}

const ROWS: &[(&str, Method, &str, Expect)] = {
    use Expect::*;
    use Method::*;
    &[
        ("B1", Solver, "1-perfectly orientable (open)", None),
        ("B2", Solver, "1-perfectly orientable (open)", SameAs("B1")),
        ("B3", Solver, "comparability", None),
        (
            "T3",
            Solver,
            "no odd donut / even Mobius donut image",
            Necessary("K4-free, locally bipartite", |p| {
                p.k4_free && p.locally_bipartite
            }),
        ),
        ("B1,B2", Solver, "proper circular-arc", None),
        ("B1,B3", Solver, "nested interval", None),
        (
            "B1,T3",
            Solver,
            "unicyclic",
            Equivalent("|E| <= |V| per component", |p| p.unicyclic_per_component),
        ),
        ("B2,B3", Solver, "nested interval", SameAs("B1,B3")),
        (
            "B2,T3",
            Solver,
            "unicyclic",
            Equivalent("|E| <= |V| per component", |p| p.unicyclic_per_component),
        ),
        ("B3,T3", Solver, "3-colourable comparability", None),
        (
            "B1,B2,B3",
            Solver,
            "complete components",
            Equivalent("complete components", |p| p.complete_components),
        ),
        (
            "B1,B2,T3",
            Solver,
            "max degree <= 2",
            Equivalent("max degree <= 2", |p| p.max_degree_le_2),
        ),
        (
            "B1,B3,T3",
            Solver,
            "stars and triangles",
            Equivalent("star or triangle components", |p| {
                p.star_or_triangle_components
            }),
        ),
        (
            "B2,B3,T3",
            Solver,
            "stars and triangles",
            Equivalent("star or triangle components", |p| {
                p.star_or_triangle_components
            }),
        ),
        (
            "B1,B2,B3,T3",
            Solver,
            "components K1, K2, K3",
            Equivalent("complete components, max degree <= 2", |p| {
                p.complete_components && p.max_degree_le_2
            }),
        ),
        (
            "C3",
            Oracle,
            "all graphs",
            Equivalent("any graph", |_| true),
        ),
        (
            "T3,C3",
            Oracle,
            "triangle-free",
            Equivalent("triangle-free", |p| p.triangle_free),
        ),
        ("B3,C3", Oracle, "comparability", SameAs("B3")),
        (
            "B1,C3",
            Oracle,
            "transitive-perfectly orientable (open)",
            None,
        ),
        (
            "B2,C3",
            Oracle,
            "transitive-perfectly orientable (open)",
            SameAs("B1,C3"),
        ),
        (
            "B1,T3,C3",
            Oracle,
            "triangle-free unicyclic",
            Equivalent("triangle-free, |E| <= |V| per component", |p| {
                p.triangle_free && p.unicyclic_per_component
            }),
        ),
        (
            "B2,T3,C3",
            Oracle,
            "triangle-free unicyclic",
            Equivalent("triangle-free, |E| <= |V| per component", |p| {
                p.triangle_free && p.unicyclic_per_component
            }),
        ),
        (
            "B3,T3,C3",
            Oracle,
            "bipartite",
            Equivalent("bipartite", |p| p.bipartite),
        ),
        ("B1,B2,C3", Oracle, "proper Helly circular-arc", None),
        ("B1,B3,C3", Oracle, "nested interval", SameAs("B1,B3")),
        ("B2,B3,C3", Oracle, "nested interval", SameAs("B1,B3")),
        (
            "B1,B2,B3,C3",
            Oracle,
            "complete components",
            Equivalent("complete components", |p| p.complete_components),
        ),
        (
            "K1K2",
            Oracle,
            "complete multipartite",
            Equivalent("complete multipartite", |p| p.complete_multipartite),
        ),
    ]
};

/// Decisions for every tabulated forbidden set, with their structural checks.
/// Oracle rows are skipped above [`DEFAULT_EDGE_CAP`] edges.
pub fn atlas(g: &Graph) -> AtlasReport {
    atlas_with_cap(g, DEFAULT_EDGE_CAP)
}

pub fn atlas_with_cap(g: &Graph, cap: usize) -> AtlasReport {
    let profile = class_profile(g);
    let mut rows: Vec<AtlasRow> = Vec::with_capacity(ROWS.len());
    for (forbid, method, family, expect) in ROWS {
        let forbid: ForbiddenSet = forbid.parse().expect("atlas sets parse");
        let decision = match method {
            Method::Solver => Some(solve(g, forbid).expect("solver rows are simple").is_yes()),
            Method::Oracle => brute_force_orientable_with_cap(g, forbid, cap)
                .ok()
                .map(|o| o.is_some()),
        };
        let check = match expect {
            Expect::None => None,
            Expect::Equivalent(predicate, f) => Some(Check::Equivalent {
                predicate,
                value: f(&profile),
            }),
            Expect::Necessary(predicate, f) => Some(Check::Necessary {
                predicate,
                value: f(&profile),
            }),
            Expect::SameAs(other) => {
                let other: ForbiddenSet = other.parse().expect("atlas sets parse");
                let value = rows
                    .iter()
                    .find(|r| r.forbid == other)
                    .and_then(|r| r.decision);
                Some(Check::SameAs {
                    forbid: other.to_string(),
                    value,
                })
            }
        };
        let agrees = match (&check, decision) {
            (Some(c), Some(d)) => c.agrees(d),
            _ => None,
        };
        rows.push(AtlasRow {
            forbid,
            method: *method,
            family,
            decision,
            check,
            agrees,
        });
    }
    AtlasReport { profile, rows }
}
