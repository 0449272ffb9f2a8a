//! Degree-based sufficient conditions for Hamiltonicity of balanced
//! bipartite graphs, plus small exact searches used to cross-check them.
//!
//! Each certifier is one-sided: `Guaranteed` is a proof that the promised
//! structure exists, `Unknown` says only that the condition does not
//! apply. The exact searches in this module and in [`crate::finders`] are
//! the ground truth the certifiers are validated against.

use crate::finders::HARD_SEARCH_CAP;
use crate::graph::{Color, SimpleGraph, TwoColoring};

/// Side-size limit keeping the doubled vertex count within the search cap.
pub const MAX_SIDE: usize = HARD_SEARCH_CAP / 2;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum HamError {
    #[error("sides have different sizes: {left} and {right}")]
    Unbalanced { left: usize, right: usize },
    #[error("side size {m} exceeds the limit {max}")]
    TooLarge { m: usize, max: usize },
    #[error("vertex {v} out of range for side size {m}")]
    BadSideVertex { v: usize, m: usize },
    #[error("q = {q} out of range; need 0 <= q <= {max}")]
    BadQ { q: usize, max: usize },
    #[error("required edge ({u}, {v}) is not an edge of the graph")]
    RequiredEdgeMissing { u: usize, v: usize },
    #[error("required edges do not form vertex-disjoint paths")]
    NotDisjointPaths,
    #[error("graph on {n} vertices exceeds the search cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("host must have exactly two parts of equal size, found {found:?}")]
    NotBalancedHost { found: Vec<usize> },
}

/// Outcome of a sufficient condition: a certificate or nothing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Guaranteed,
    Unknown,
}

/// Bipartite graph with equally sized sides. Left and right vertices are
/// indexed 0..m independently; `to_graph` places the right side at m..2m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancedBipartite {
    m: usize,
    // adj[i] has bit j set when left i is adjacent to right j
    adj: Vec<u64>,
}

impl BalancedBipartite {
    pub fn empty(m: usize) -> Result<BalancedBipartite, HamError> {
        if m > MAX_SIDE {
            return Err(HamError::TooLarge { m, max: MAX_SIDE });
        }
        Ok(BalancedBipartite { m, adj: vec![0; m] })
    }

    pub fn complete(m: usize) -> Result<BalancedBipartite, HamError> {
        let mut b = Self::empty(m)?;
        let full = if m == 64 { !0 } else { (1u64 << m) - 1 };
        b.adj.fill(full);
        Ok(b)
    }

    pub fn from_edges(m: usize, edges: &[(usize, usize)]) -> Result<BalancedBipartite, HamError> {
        let mut b = Self::empty(m)?;
        for &(l, r) in edges {
            b.add_edge(l, r)?;
        }
        Ok(b)
    }

    /// One color class of a coloring whose host is two equal parts.
    pub fn from_color(c: &TwoColoring, color: Color) -> Result<BalancedBipartite, HamError> {
        let sizes = c.host().part_sizes();
        if sizes.len() != 2 || sizes[0] != sizes[1] {
            return Err(HamError::NotBalancedHost {
                found: sizes.to_vec(),
            });
        }
        let m = sizes[0];
        let mut b = Self::empty(m)?;
        for ((u, v), col) in c.edge_colors() {
            if col == color {
                // u is in the first part, v in the second
                b.add_edge(u, v - m)?;
            }
        }
        Ok(b)
    }

    fn check(&self, l: usize, r: usize) -> Result<(), HamError> {
        for v in [l, r] {
            if v >= self.m {
                return Err(HamError::BadSideVertex { v, m: self.m });
            }
        }
        Ok(())
    }

    pub fn add_edge(&mut self, l: usize, r: usize) -> Result<(), HamError> {
        self.check(l, r)?;
        self.adj[l] |= 1 << r;
        Ok(())
    }

    pub fn remove_edge(&mut self, l: usize, r: usize) -> Result<(), HamError> {
        self.check(l, r)?;
        self.adj[l] &= !(1 << r);
        Ok(())
    }

    pub fn has_edge(&self, l: usize, r: usize) -> bool {
        l < self.m && r < self.m && self.adj[l] >> r & 1 == 1
    }

    pub fn side(&self) -> usize {
        self.m
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for l in 0..self.m {
            for r in 0..self.m {
                if self.has_edge(l, r) {
                    out.push((l, r));
                }
            }
        }
        out
    }

    pub fn left_degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|a| a.count_ones() as usize).collect()
    }

    pub fn right_degrees(&self) -> Vec<usize> {
        (0..self.m)
            .map(|r| (0..self.m).filter(|&l| self.has_edge(l, r)).count())
            .collect()
    }

    /// Both degree sequences in nondecreasing order.
    pub fn sorted_degrees(&self) -> (Vec<usize>, Vec<usize>) {
        let mut du = self.left_degrees();
        let mut dv = self.right_degrees();
        du.sort_unstable();
        dv.sort_unstable();
        (du, dv)
    }

    /// Plain graph on 2m vertices: left i stays i, right j becomes m + j.
    pub fn to_graph(&self) -> SimpleGraph {
        let mut edges = Vec::new();
        for (l, r) in self.edges() {
            edges.push((l, self.m + r));
        }
        SimpleGraph::from_edges(2 * self.m, &edges).unwrap()
    }
}

/// Degree-sequence implication test: with both sides sorted ascending,
/// every index i < m with d(u_i) <= i must be answered by
/// d(v_(m-i)) >= m-i+1 on the other side (indices 1-based). A pass
/// guarantees a spanning cycle.
///
/// The verdict reads only the sorted degree arrays, so it cannot depend on
/// vertex numbering.
pub fn chvatal_certifier(h: &BalancedBipartite) -> Verdict {
    let m = h.side();
    if m < 2 {
        // a spanning cycle needs at least two vertices per side
        return Verdict::Unknown;
    }
    let (du, dv) = h.sorted_degrees();
    for i in 1..m {
        if du[i - 1] <= i && dv[m - i - 1] < m - i + 1 {
            return Verdict::Unknown;
        }
    }
    Verdict::Guaranteed
}

/// Smallest-deficiency test: take the smallest 1-based index i with
/// d(u_i) <= i+1 and the smallest j with d(v_j) <= j+1; if both exist,
/// require d(u_i) + d(v_j) >= m+2. A side with no qualifying index
/// imposes no constraint. A pass guarantees a spanning path between
/// every pair of opposite-side vertices.
pub fn berge_certifier(h: &BalancedBipartite) -> Verdict {
    let m = h.side();
    if m < 2 {
        return Verdict::Unknown;
    }
    let (du, dv) = h.sorted_degrees();
    let i = (1..=m).find(|&i| du[i - 1] <= i + 1);
    let j = (1..=m).find(|&j| dv[j - 1] <= j + 1);
    match (i, j) {
        (Some(i), Some(j)) if du[i - 1] + dv[j - 1] < m + 2 => Verdict::Unknown,
        _ => Verdict::Guaranteed,
    }
}

/// Degree test for extending path systems: every nonadjacent pair (u, v)
/// whose degrees clear the positional thresholds must satisfy
/// d(u) + d(v) >= m+q+1. A pass guarantees that every q edges forming
/// vertex-disjoint paths lie on a common spanning cycle.
///
/// The positional threshold for a vertex is taken at the highest position
/// its degree block reaches in the sorted order (the count of same-side
/// degrees <= its own). That filters in a superset of the pairs any
/// concrete tie-break would, so `Guaranteed` here implies the condition
/// under every vertex numbering, and the verdict itself is independent of
/// numbering.
pub fn las_vergnas_certifier(h: &BalancedBipartite, q: usize) -> Result<Verdict, HamError> {
    let m = h.side();
    if m == 0 || q > m - 1 {
        return Err(HamError::BadQ {
            q,
            max: m.saturating_sub(1),
        });
    }
    if m < 2 {
        return Ok(Verdict::Unknown);
    }
    let dl = h.left_degrees();
    let dr = h.right_degrees();
    let mut ls = dl.clone();
    let mut rs = dr.clone();
    ls.sort_unstable();
    rs.sort_unstable();
    let rank = |sorted: &[usize], d: usize| sorted.partition_point(|&x| x <= d);
    for a in 0..m {
        if dl[a] > rank(&ls, dl[a]) + q {
            continue;
        }
        for b in 0..m {
            if h.has_edge(a, b) || dr[b] > rank(&rs, dr[b]) + q {
                continue;
            }
            if dl[a] + dr[b] < m + q + 1 {
                return Ok(Verdict::Unknown);
            }
        }
    }
    Ok(Verdict::Guaranteed)
}

fn require_edges(
    g: &SimpleGraph,
    required: &[(usize, usize)],
) -> Result<(Vec<Vec<usize>>, usize), HamError> {
    let n = g.vertex_count();
    let mut req: Vec<Vec<usize>> = vec![Vec::new(); n];
    // union-find to reject required cycles
    let mut root: Vec<usize> = (0..n).collect();
    fn find(root: &mut [usize], mut v: usize) -> usize {
        while root[v] != v {
            root[v] = root[root[v]];
            v = root[v];
        }
        v
    }
    let mut count = 0usize;
    for &(u, v) in required {
        if u >= n || v >= n || !g.has_edge(u, v) {
            return Err(HamError::RequiredEdgeMissing { u, v });
        }
        if req[u].contains(&v) {
            continue; // duplicate listing of the same edge
        }
        req[u].push(v);
        req[v].push(u);
        count += 1;
        if req[u].len() > 2 || req[v].len() > 2 {
            return Err(HamError::NotDisjointPaths);
        }
        let (ru, rv) = (find(&mut root, u), find(&mut root, v));
        if ru == rv {
            return Err(HamError::NotDisjointPaths);
        }
        root[ru] = rv;
    }
    for r in req.iter_mut() {
        r.sort_unstable();
    }
    Ok((req, count))
}

/// Exact search for a spanning cycle containing every listed edge.
/// Returns the cycle as a vertex sequence starting at 0, or None when no
/// such cycle exists. Plain backtracking with forced moves along required
/// edges; intended for small graphs.
pub fn hamiltonian_cycle_through(
    g: &SimpleGraph,
    required: &[(usize, usize)],
) -> Result<Option<Vec<usize>>, HamError> {
    let n = g.vertex_count();
    if n > HARD_SEARCH_CAP {
        return Err(HamError::CapExceeded {
            n,
            cap: HARD_SEARCH_CAP,
        });
    }
    let (req, req_count) = require_edges(g, required)?;
    if n < 3 {
        return Ok(None);
    }

    struct Search<'a> {
        g: &'a SimpleGraph,
        req: &'a [Vec<usize>],
        req_count: usize,
        n: usize,
        path: Vec<usize>,
        used: u64,
    }

    impl Search<'_> {
        fn closes(&self, consumed: usize) -> bool {
            let last = *self.path.last().unwrap();
            let closing_req = self.req[last].contains(&0);
            self.g.has_edge(last, 0) && consumed + usize::from(closing_req) == self.req_count
        }

        fn extend(&mut self, consumed: usize) -> bool {
            let at = *self.path.last().unwrap();
            if self.path.len() == self.n {
                return self.closes(consumed);
            }
            let pred = if self.path.len() >= 2 {
                Some(self.path[self.path.len() - 2])
            } else {
                None
            };
            let pending: Vec<usize> = self.req[at]
                .iter()
                .copied()
                .filter(|&w| Some(w) != pred)
                .collect();
            // A visited pending neighbor other than the cycle-closing
            // start can never be consumed once we step off `at`.
            let mut forced: Vec<usize> = Vec::new();
            for &w in &pending {
                if self.used >> w & 1 == 1 {
                    if w != 0 {
                        return false;
                    }
                } else {
                    forced.push(w);
                }
            }
            if forced.len() > 1 && pred.is_some() {
                // at already spends one cycle edge on pred
                return false;
            }
            let candidates: Vec<usize> = if !forced.is_empty() {
                forced
            } else {
                self.g.neighbors(at)
                    .iter()
                    .copied()
                    .filter(|&w| self.used >> w & 1 == 0)
                    .collect()
            };
            for w in candidates {
                let step = usize::from(self.req[at].contains(&w));
                self.path.push(w);
                self.used |= 1 << w;
                if self.extend(consumed + step) {
                    return true;
                }
                self.used &= !(1u64 << w);
                self.path.pop();
            }
            false
        }
    }

    let mut s = Search {
        g,
        req: &req,
        req_count,
        n,
        path: vec![0],
        used: 1,
    };
    if s.extend(0) {
        Ok(Some(s.path))
    } else {
        Ok(None)
    }
}

/// Exact search for a spanning path with the given endpoints, by subset
/// dynamic programming. Returns the path or None.
pub fn hamiltonian_path_between(
    g: &SimpleGraph,
    s: usize,
    t: usize,
) -> Result<Option<Vec<usize>>, HamError> {
    let n = g.vertex_count();
    if n > HARD_SEARCH_CAP {
        return Err(HamError::CapExceeded {
            n,
            cap: HARD_SEARCH_CAP,
        });
    }
    for v in [s, t] {
        if v >= n {
            return Err(HamError::BadSideVertex { v, m: n });
        }
    }
    if s == t {
        return Ok(if n == 1 { Some(vec![s]) } else { None });
    }
    let masks = g.neighbor_masks();
    let full: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let mut dead = std::collections::HashSet::new();

    fn go(
        at: usize,
        used: u64,
        t: usize,
        full: u64,
        masks: &[u64],
        dead: &mut std::collections::HashSet<(u64, usize)>,
        path: &mut Vec<usize>,
    ) -> bool {
        if used == full {
            return at == t;
        }
        if at == t || dead.contains(&(used, at)) {
            return false;
        }
        let mut cands = masks[at] & !used;
        while cands != 0 {
            let w = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            path.push(w);
            if go(w, used | 1 << w, t, full, masks, dead, path) {
                return true;
            }
            path.pop();
        }
        dead.insert((used, at));
        false
    }

    let mut path = vec![s];
    if go(s, 1 << s, t, full, &masks, &mut dead, &mut path) {
        Ok(Some(path))
    } else {
        Ok(None)
    }
}
