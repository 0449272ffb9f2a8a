//! Shared test support: naive reference oracles and random inputs.
//!
//! The oracles enumerate vertex sequences or matchings outright, with no
//! memoization and no shared code with the production search. Slow on
//! purpose; only run at small sizes.

#![allow(dead_code)]

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

use ramsey_core::graph::{Color, MultipartiteHost, SimpleGraph, TwoColoring};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Does `g` contain a simple path on exactly `k` vertices?
pub fn oracle_has_path(g: &SimpleGraph, k: usize) -> bool {
    let n = g.vertex_count();
    if k == 0 || k > n {
        return false;
    }
    if k == 1 {
        return n >= 1;
    }
    let mut used = vec![false; n];
    for s in 0..n {
        used[s] = true;
        if extend_path(g, s, k - 1, &mut used) {
            return true;
        }
        used[s] = false;
    }
    false
}

fn extend_path(g: &SimpleGraph, at: usize, left: usize, used: &mut [bool]) -> bool {
    if left == 0 {
        return true;
    }
    for &u in g.neighbors(at) {
        if !used[u] {
            used[u] = true;
            if extend_path(g, u, left - 1, used) {
                return true;
            }
            used[u] = false;
        }
    }
    false
}

/// Does `g` contain a cycle on exactly `k` vertices? Requires `k >= 3`.
pub fn oracle_has_cycle(g: &SimpleGraph, k: usize) -> bool {
    assert!(k >= 3);
    let n = g.vertex_count();
    if k > n {
        return false;
    }
    let mut used = vec![false; n];
    // canonical start: the smallest vertex on the cycle
    for s in 0..n {
        used[s] = true;
        if extend_cycle(g, s, s, k - 1, &mut used) {
            return true;
        }
        used[s] = false;
    }
    false
}

fn extend_cycle(g: &SimpleGraph, start: usize, at: usize, left: usize, used: &mut [bool]) -> bool {
    if left == 0 {
        return g.has_edge(at, start);
    }
    for &u in g.neighbors(at) {
        if u > start && !used[u] {
            used[u] = true;
            if extend_cycle(g, start, u, left - 1, used) {
                return true;
            }
            used[u] = false;
        }
    }
    false
}

/// Does `g` contain a cycle on at least `k` vertices? Requires `k >= 3`.
pub fn oracle_has_cycle_at_least(g: &SimpleGraph, k: usize) -> bool {
    (k.max(3)..=g.vertex_count()).any(|len| oracle_has_cycle(g, len))
}

/// Maximum matching size by exhaustive enumeration.
pub fn oracle_max_matching(g: &SimpleGraph) -> usize {
    let mut used = vec![false; g.vertex_count()];
    matching_from(g, 0, &mut used)
}

fn matching_from(g: &SimpleGraph, from: usize, used: &mut [bool]) -> usize {
    let n = g.vertex_count();
    let mut v = from;
    while v < n && used[v] {
        v += 1;
    }
    if v >= n {
        return 0;
    }
    // v stays unmatched
    let mut best = matching_from(g, v + 1, used);
    used[v] = true;
    for &u in g.neighbors(v) {
        if !used[u] {
            used[u] = true;
            best = best.max(1 + matching_from(g, v + 1, used));
            used[u] = false;
        }
    }
    used[v] = false;
    best
}

/// Largest matching that fits inside a single component of `g`.
pub fn oracle_connected_matching(g: &SimpleGraph) -> usize {
    g.components()
        .iter()
        .map(|comp| {
            let (sub, _) = g.induced(comp);
            oracle_max_matching(&sub)
        })
        .max()
        .unwrap_or(0)
}

/// Erdos-Renyi style random graph on `n` vertices.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> SimpleGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::from_edges(n, &edges).unwrap()
}

/// Uniformly random red/blue coloring of a host.
pub fn random_coloring(rng: &mut ChaCha8Rng, host: &Arc<MultipartiteHost>) -> TwoColoring {
    let choices: Vec<Color> = (0..host.edge_count())
        .map(|_| if rng.gen_bool(0.5) { Color::Blue } else { Color::Red })
        .collect();
    TwoColoring::from_fn(Arc::clone(host), |i, _| choices[i])
}

/// The Petersen graph: outer 5-cycle 0..5, inner pentagram 5..10, spokes.
pub fn petersen() -> SimpleGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    SimpleGraph::from_edges(10, &edges).unwrap()
}

pub fn complete_graph(n: usize) -> SimpleGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    SimpleGraph::from_edges(n, &edges).unwrap()
}

pub fn path_graph(n: usize) -> SimpleGraph {
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    SimpleGraph::from_edges(n, &edges).unwrap()
}

pub fn cycle_graph(n: usize) -> SimpleGraph {
    assert!(n >= 3);
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    SimpleGraph::from_edges(n, &edges).unwrap()
}

pub fn complete_bipartite(a: usize, b: usize) -> SimpleGraph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            edges.push((u, v));
        }
    }
    SimpleGraph::from_edges(a + b, &edges).unwrap()
}
