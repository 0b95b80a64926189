//! Helpers shared by the integration suites. Everything here is deliberately
//! naive: these are the reference computations the library is checked against.

#![allow(dead_code)]

use std::collections::VecDeque;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use triorient::Graph;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Every labelled graph on `n` vertices, by edge subset of the `C(n, 2)` pairs
/// in lexicographic order.
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(n, edges).unwrap()
    })
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, edges).unwrap()
}

/// Random graph with `n` drawn from `1..=max_n` and a random edge density.
pub fn random_small_graph(rng: &mut impl Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let p = rng.gen_range(0.05..0.9);
    random_graph(rng, n, p)
}

pub fn brute_force_triangles(g: &Graph) -> usize {
    let n = g.n();
    let mut count = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Vertices reachable from `s` in a digraph given by successor lists.
pub fn reachable(succ: &[Vec<usize>], s: usize) -> Vec<bool> {
    let mut seen = vec![false; succ.len()];
    seen[s] = true;
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for &w in &succ[v] {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

/// Whether two graphs are isomorphic, by trying every permutation.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let mut degs_a: Vec<usize> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut degs_b: Vec<usize> = (0..b.n()).map(|v| b.degree(v)).collect();
    degs_a.sort();
    degs_b.sort();
    if degs_a != degs_b {
        return false;
    }
    let mut perm: Vec<usize> = (0..a.n()).collect();
    permute(&mut perm, 0, &mut |p| {
        a.edges().iter().all(|&(u, v)| b.has_edge(p[u], p[v]))
    })
}

fn permute(perm: &mut Vec<usize>, k: usize, ok: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if k == perm.len() {
        return ok(perm);
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        if permute(perm, k + 1, ok) {
            return true;
        }
        perm.swap(k, i);
    }
    false
}

/// Proper 3-colourability by trying all `3^n` colourings.
pub fn three_colourable_exhaustive(g: &Graph) -> bool {
    let n = g.n() as u32;
    (0..3u64.pow(n)).any(|mut code| {
        let mut colour = vec![0u8; g.n()];
        for c in colour.iter_mut() {
            *c = (code % 3) as u8;
            code /= 3;
        }
        g.edges().iter().all(|&(u, v)| colour[u] != colour[v])
    })
}

/// Disjoint union, second graph shifted past the first.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.n();
    let edges = a
        .edges()
        .iter()
        .copied()
        .chain(b.edges().iter().map(|&(u, v)| (u + shift, v + shift)));
    Graph::new(a.n() + b.n(), edges).unwrap()
}
