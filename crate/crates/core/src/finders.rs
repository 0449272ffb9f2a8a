//! Exact search for paths, cycles, and connected matchings, plus the
//! monochromatic wrappers that drive verification.
//!
//! Path and cycle existence is decided by depth-first search over vertex
//! bitmasks with memoized dead states, which is subset DP evaluated lazily.
//! Graphs above the configurable cap (default 20 vertices, hard limit 64)
//! are rejected outright rather than searched approximately. Matching has
//! no cap; it runs Edmonds' blossom contraction in O(V^3).
//!
//! Every search is deterministic: candidate vertices are tried in
//! increasing order, so the first witness found is the lexicographically
//! smallest vertex sequence, and equal inputs give byte-equal witnesses.

use std::collections::HashSet;

use thiserror::Error;

use crate::graph::{Color, SimpleGraph, TwoColoring};

/// Default vertex cap for exact path/cycle search.
pub const DEFAULT_SEARCH_CAP: usize = 20;

/// Bitmask search cannot exceed one machine word.
pub const HARD_SEARCH_CAP: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("graph has {n} vertices, exact search is capped at {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("size {k} is not a meaningful {what} target")]
    BadTarget { k: usize, what: &'static str },
}

/// A structure to look for, with its size parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    /// Path on exactly `k` vertices.
    Path(usize),
    /// Cycle on exactly `k` vertices.
    Cycle(usize),
    /// Cycle on at least `k` vertices.
    CycleAtLeast(usize),
    /// `k` pairwise disjoint edges inside one connected component.
    ConnectedMatching(usize),
}

impl std::fmt::Display for Target {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Target::Path(k) => write!(f, "P{k}"),
            Target::Cycle(k) => write!(f, "C{k}"),
            Target::CycleAtLeast(k) => write!(f, "C>={k}"),
            Target::ConnectedMatching(k) => write!(f, "M{k}"),
        }
    }
}

/// Found structure, concrete enough to re-check against the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructureWitness {
    /// Vertices in path order.
    Path(Vec<usize>),
    /// Vertices in cycle order; the last one closes back to the first.
    Cycle(Vec<usize>),
    /// Pairwise disjoint edges, each `(u, v)` with `u < v`, sorted.
    Matching(Vec<(usize, usize)>),
    /// Matching whose edges all lie in one component.
    ConnectedMatching(Vec<(usize, usize)>),
}

/// Witness found inside one color class of a coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoWitness {
    pub color: Color,
    pub witness: StructureWitness,
}

/// Re-checks a witness against the graph it claims to live in.
pub fn check_witness(g: &SimpleGraph, w: &StructureWitness) -> Result<(), String> {
    let distinct = |vs: &[usize]| -> Result<(), String> {
        let mut seen = HashSet::new();
        for &v in vs {
            if v >= g.vertex_count() {
                return Err(format!("vertex {v} out of range"));
            }
            if !seen.insert(v) {
                return Err(format!("vertex {v} repeated"));
            }
        }
        Ok(())
    };
    let consecutive = |vs: &[usize]| -> Result<(), String> {
        for w in vs.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(format!("({}, {}) is not an edge", w[0], w[1]));
            }
        }
        Ok(())
    };
    match w {
        StructureWitness::Path(vs) => {
            if vs.is_empty() {
                return Err("empty path".into());
            }
            distinct(vs)?;
            consecutive(vs)
        }
        StructureWitness::Cycle(vs) => {
            if vs.len() < 3 {
                return Err("cycle shorter than 3".into());
            }
            distinct(vs)?;
            consecutive(vs)?;
            let (a, b) = (vs[vs.len() - 1], vs[0]);
            if !g.has_edge(a, b) {
                return Err(format!("closing edge ({a}, {b}) missing"));
            }
            Ok(())
        }
        StructureWitness::Matching(es) | StructureWitness::ConnectedMatching(es) => {
            let mut flat = Vec::new();
            for &(u, v) in es {
                if !g.has_edge(u, v) {
                    return Err(format!("({u}, {v}) is not an edge"));
                }
                flat.push(u);
                flat.push(v);
            }
            distinct(&flat)?;
            if let StructureWitness::ConnectedMatching(es) = w {
                if !es.is_empty() {
                    let comps = g.components();
                    let home = comps
                        .iter()
                        .position(|c| c.binary_search(&es[0].0).is_ok())
                        .ok_or("endpoint not in any component")?;
                    for &(u, v) in es {
                        for x in [u, v] {
                            if comps[home].binary_search(&x).is_err() {
                                return Err(format!("vertex {x} outside component"));
                            }
                        }
                    }
                }
            }
            Ok(())
        }
    }
}

// ====================================================================
// exact path and cycle search
// ====================================================================

fn check_cap(n: usize, cap: usize) -> Result<(), SearchError> {
    let cap = cap.min(HARD_SEARCH_CAP);
    if n > cap {
        return Err(SearchError::CapExceeded { n, cap });
    }
    Ok(())
}

/// Path on exactly `k` vertices, lexicographically smallest, or `None`.
pub fn find_path_exact(g: &SimpleGraph, k: usize) -> Result<Option<Vec<usize>>, SearchError> {
    find_path_exact_capped(g, k, DEFAULT_SEARCH_CAP)
}

pub fn find_path_exact_capped(
    g: &SimpleGraph,
    k: usize,
    cap: usize,
) -> Result<Option<Vec<usize>>, SearchError> {
    if k == 0 {
        return Err(SearchError::BadTarget { k, what: "path" });
    }
    check_cap(g.vertex_count(), cap)?;
    let n = g.vertex_count();
    if k > n {
        return Ok(None);
    }
    if k == 1 {
        return Ok(Some(vec![0]));
    }
    let masks = g.neighbor_masks();
    let mut dead: HashSet<(u64, u32)> = HashSet::new();
    let mut path = Vec::with_capacity(k);
    for s in 0..n {
        path.clear();
        path.push(s);
        if extend_path(&masks, k, s, 1u64 << s, &mut path, &mut dead) {
            return Ok(Some(path));
        }
    }
    Ok(None)
}

fn extend_path(
    masks: &[u64],
    k: usize,
    at: usize,
    used: u64,
    path: &mut Vec<usize>,
    dead: &mut HashSet<(u64, u32)>,
) -> bool {
    if path.len() == k {
        return true;
    }
    let key = (used, at as u32);
    if dead.contains(&key) {
        return false;
    }
    let mut cand = masks[at] & !used;
    while cand != 0 {
        let u = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        path.push(u);
        if extend_path(masks, k, u, used | 1 << u, path, dead) {
            return true;
        }
        path.pop();
    }
    dead.insert(key);
    false
}

/// Cycle on exactly `k` vertices (`k >= 3`), lexicographically smallest.
pub fn find_cycle_exact(g: &SimpleGraph, k: usize) -> Result<Option<Vec<usize>>, SearchError> {
    find_cycle_exact_capped(g, k, DEFAULT_SEARCH_CAP)
}

pub fn find_cycle_exact_capped(
    g: &SimpleGraph,
    k: usize,
    cap: usize,
) -> Result<Option<Vec<usize>>, SearchError> {
    if k < 3 {
        return Err(SearchError::BadTarget { k, what: "cycle" });
    }
    check_cap(g.vertex_count(), cap)?;
    Ok(cycle_in_graph(g, k))
}

/// Core cycle search; cap already checked by callers.
fn cycle_in_graph(g: &SimpleGraph, k: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if k > n {
        return None;
    }
    let masks = g.neighbor_masks();
    let mut dead: HashSet<(u64, u32)> = HashSet::new();
    let mut path = Vec::with_capacity(k);
    // canonical form starts at the cycle's smallest vertex
    for s in 0..=n - k {
        path.clear();
        path.push(s);
        if extend_cycle(&masks, k, s, s, 1u64 << s, &mut path, &mut dead) {
            return Some(path);
        }
    }
    None
}

#[allow(clippy::too_many_arguments)]
fn extend_cycle(
    masks: &[u64],
    k: usize,
    start: usize,
    at: usize,
    used: u64,
    path: &mut Vec<usize>,
    dead: &mut HashSet<(u64, u32)>,
) -> bool {
    if path.len() == k {
        return masks[at] >> start & 1 == 1;
    }
    let key = (used, at as u32);
    if dead.contains(&key) {
        return false;
    }
    // only vertices above the canonical start
    let mut cand = masks[at] & !used & !((1u64 << (start + 1)) - 1);
    while cand != 0 {
        let u = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        path.push(u);
        if extend_cycle(masks, k, start, u, used | 1 << u, path, dead) {
            return true;
        }
        path.pop();
    }
    dead.insert(key);
    false
}

/// Cycle on at least `k` vertices (`k >= 3`): the shortest qualifying
/// length, lexicographically smallest at that length, or `None`.
///
/// A cycle lies inside a single block, so the search only looks at blocks
/// with at least `k` vertices.
pub fn find_cycle_at_least(g: &SimpleGraph, k: usize) -> Result<Option<Vec<usize>>, SearchError> {
    find_cycle_at_least_capped(g, k, DEFAULT_SEARCH_CAP)
}

pub fn find_cycle_at_least_capped(
    g: &SimpleGraph,
    k: usize,
    cap: usize,
) -> Result<Option<Vec<usize>>, SearchError> {
    if k < 3 {
        return Err(SearchError::BadTarget { k, what: "cycle" });
    }
    check_cap(g.vertex_count(), cap)?;
    let blocks = g.blocks();
    let mut candidates: Vec<(SimpleGraph, Vec<usize>)> = blocks
        .into_iter()
        .filter(|b| b.len() >= k)
        .map(|b| g.induced(&b))
        .collect();
    candidates.sort_by(|a, b| a.1.cmp(&b.1));
    for len in k..=g.vertex_count() {
        let mut best: Option<Vec<usize>> = None;
        for (sub, map) in &candidates {
            if sub.vertex_count() < len {
                continue;
            }
            if let Some(found) = cycle_in_graph(sub, len) {
                let mapped: Vec<usize> = found.into_iter().map(|v| map[v]).collect();
                if best.as_ref().is_none_or(|b| mapped < *b) {
                    best = Some(mapped);
                }
            }
        }
        if best.is_some() {
            return Ok(best);
        }
    }
    Ok(None)
}

// ====================================================================
// maximum matching (Edmonds blossom contraction)
// ====================================================================

const NONE: usize = usize::MAX;

/// Maximum matching over the whole graph, not necessarily connected.
pub fn max_matching(g: &SimpleGraph) -> (usize, StructureWitness) {
    let mate = blossom_mate(g);
    let mut edges = Vec::new();
    for (v, &m) in mate.iter().enumerate() {
        if m != NONE && v < m {
            edges.push((v, m));
        }
    }
    edges.sort_unstable();
    (edges.len(), StructureWitness::Matching(edges))
}

/// Mate array of a maximum matching; `NONE` marks exposed vertices.
fn blossom_mate(g: &SimpleGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut mate = vec![NONE; n];
    // cheap greedy start
    for v in 0..n {
        if mate[v] == NONE {
            for &u in g.neighbors(v) {
                if mate[u] == NONE {
                    mate[v] = u;
                    mate[u] = v;
                    break;
                }
            }
        }
    }
    for root in 0..n {
        if mate[root] == NONE {
            augment_from(g, &mut mate, root);
        }
    }
    mate
}

/// One alternating-tree phase; contracts blossoms via the `base` array.
fn augment_from(g: &SimpleGraph, mate: &mut [usize], root: usize) -> bool {
    let n = g.vertex_count();
    let mut used = vec![false; n];
    let mut parent = vec![NONE; n];
    let mut base: Vec<usize> = (0..n).collect();
    used[root] = true;
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(root);

    while let Some(v) = queue.pop_front() {
        for &to in g.neighbors(v) {
            if base[v] == base[to] || mate[v] == to {
                continue;
            }
            if to == root || (mate[to] != NONE && parent[mate[to]] != NONE) {
                // odd cycle through the root of the alternating tree
                let curbase = blossom_lca(mate, &parent, &base, v, to, n);
                let mut in_blossom = vec![false; n];
                mark_blossom_path(mate, &mut parent, &base, &mut in_blossom, v, curbase, to);
                mark_blossom_path(mate, &mut parent, &base, &mut in_blossom, to, curbase, v);
                for i in 0..n {
                    if in_blossom[base[i]] {
                        base[i] = curbase;
                        if !used[i] {
                            used[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if parent[to] == NONE {
                parent[to] = v;
                if mate[to] == NONE {
                    // augmenting path found: flip along parents
                    let mut at = to;
                    while at != NONE {
                        let pv = parent[at];
                        let next = mate[pv];
                        mate[at] = pv;
                        mate[pv] = at;
                        at = next;
                    }
                    return true;
                }
                used[mate[to]] = true;
                queue.push_back(mate[to]);
            }
        }
    }
    false
}

fn blossom_lca(
    mate: &[usize],
    parent: &[usize],
    base: &[usize],
    mut a: usize,
    mut b: usize,
    n: usize,
) -> usize {
    let mut seen = vec![false; n];
    loop {
        a = base[a];
        seen[a] = true;
        if mate[a] == NONE {
            break; // tree root
        }
        a = parent[mate[a]];
    }
    loop {
        b = base[b];
        if seen[b] {
            return b;
        }
        b = parent[mate[b]];
    }
}

fn mark_blossom_path(
    mate: &[usize],
    parent: &mut [usize],
    base: &[usize],
    in_blossom: &mut [bool],
    mut v: usize,
    b: usize,
    mut child: usize,
) {
    while base[v] != b {
        in_blossom[base[v]] = true;
        in_blossom[base[mate[v]]] = true;
        parent[v] = child;
        child = mate[v];
        v = parent[mate[v]];
    }
}

/// Largest matching contained in a single component, with a witness.
pub fn connected_matching_number(g: &SimpleGraph) -> (usize, StructureWitness) {
    let mut best: Vec<(usize, usize)> = Vec::new();
    for comp in g.components() {
        let (sub, map) = g.induced(&comp);
        let (size, w) = max_matching(&sub);
        if size > best.len() {
            match w {
                StructureWitness::Matching(es) => {
                    best = es.iter().map(|&(u, v)| (map[u], map[v])).collect();
                }
                _ => unreachable!(),
            }
        }
    }
    best.sort_unstable();
    (best.len(), StructureWitness::ConnectedMatching(best))
}

// ====================================================================
// monochromatic wrappers
// ====================================================================

/// Searches one plain graph for the target.
pub fn find_in_graph(
    g: &SimpleGraph,
    target: Target,
) -> Result<Option<StructureWitness>, SearchError> {
    find_in_graph_capped(g, target, DEFAULT_SEARCH_CAP)
}

pub fn find_in_graph_capped(
    g: &SimpleGraph,
    target: Target,
    cap: usize,
) -> Result<Option<StructureWitness>, SearchError> {
    match target {
        Target::Path(k) => {
            Ok(find_path_exact_capped(g, k, cap)?.map(StructureWitness::Path))
        }
        Target::Cycle(k) => {
            Ok(find_cycle_exact_capped(g, k, cap)?.map(StructureWitness::Cycle))
        }
        Target::CycleAtLeast(k) => {
            Ok(find_cycle_at_least_capped(g, k, cap)?.map(StructureWitness::Cycle))
        }
        Target::ConnectedMatching(k) => {
            if k == 0 {
                return Err(SearchError::BadTarget {
                    k,
                    what: "connected matching",
                });
            }
            let (size, w) = connected_matching_number(g);
            if size < k {
                return Ok(None);
            }
            match w {
                StructureWitness::ConnectedMatching(es) => Ok(Some(
                    StructureWitness::ConnectedMatching(es[..k].to_vec()),
                )),
                _ => unreachable!(),
            }
        }
    }
}

/// Looks for the target in color 1 (red) first, then color 2 (blue).
pub fn mono_search(
    c: &TwoColoring,
    target: Target,
) -> Result<Option<MonoWitness>, SearchError> {
    mono_search_capped(c, target, DEFAULT_SEARCH_CAP)
}

pub fn mono_search_capped(
    c: &TwoColoring,
    target: Target,
    cap: usize,
) -> Result<Option<MonoWitness>, SearchError> {
    for color in Color::BOTH {
        if let Some(witness) = find_in_color_capped(c, color, target, cap)? {
            return Ok(Some(MonoWitness { color, witness }));
        }
    }
    Ok(None)
}

/// Searches a single color class of the coloring.
pub fn find_in_color(
    c: &TwoColoring,
    color: Color,
    target: Target,
) -> Result<Option<StructureWitness>, SearchError> {
    find_in_color_capped(c, color, target, DEFAULT_SEARCH_CAP)
}

pub fn find_in_color_capped(
    c: &TwoColoring,
    color: Color,
    target: Target,
    cap: usize,
) -> Result<Option<StructureWitness>, SearchError> {
    find_in_graph_capped(&c.subgraph(color).to_graph(), target, cap)
}
