//! Complete multipartite hosts and 2-colorings of their edges.
//!
//! A host `K_{n_1,...,n_s}` has parts in nonincreasing size order and
//! vertices numbered `0..N` contiguously by part. Its edge set is every
//! cross-part pair, stored in lexicographic `(u, v)` order with `u < v`;
//! that order is the canonical one for bitstring serialization and for
//! enumeration bitmasks. A [`TwoColoring`] assigns every host edge red or
//! blue, never both, never neither.

use std::ops::Range;
use std::sync::Arc;

use thiserror::Error;

/// Hosts are desk-scale objects; the cross-pair index is materialized.
pub const MAX_HOST_VERTICES: usize = 1024;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("part list is empty")]
    EmptyParts,
    #[error("part {index} has size 0")]
    ZeroPart { index: usize },
    #[error("a multipartite host needs at least 2 parts, got {parts}")]
    TooFewParts { parts: usize },
    #[error("host with {vertices} vertices exceeds the {MAX_HOST_VERTICES}-vertex limit")]
    HostTooLarge { vertices: usize },
    #[error("vertex {v} out of range for {n} vertices")]
    BadVertex { v: usize, n: usize },
    #[error("({u}, {v}) is not a host edge")]
    NotAnEdge { u: usize, v: usize },
    #[error("coloring bitstring has length {got}, host has {expected} edges")]
    BitLength { expected: usize, got: usize },
    #[error("coloring bitstring has invalid character {ch:?} at position {pos}")]
    BadBitChar { pos: usize, ch: char },
    #[error("loop edge ({v}, {v})")]
    LoopEdge { v: usize },
}

/// Edge colors. Red serializes as bit 0, blue as bit 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red = 1,
    Blue = 2,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    /// Numeric code used in edge-list files and reports: red 1, blue 2.
    pub fn code(self) -> u8 {
        self as u8
    }

    pub fn from_code(code: u8) -> Option<Color> {
        match code {
            1 => Some(Color::Red),
            2 => Some(Color::Blue),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Color::Red => "red",
            Color::Blue => "blue",
        }
    }

    pub const BOTH: [Color; 2] = [Color::Red, Color::Blue];
}

impl std::fmt::Display for Color {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Complete multipartite graph `K_{n_1,...,n_s}`, parts nonincreasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultipartiteHost {
    part_sizes: Vec<usize>,
    part_of: Vec<u32>,
    part_start: Vec<usize>,
    edges: Vec<(u32, u32)>,
}

impl MultipartiteHost {
    /// Builds the host. Sizes are sorted into nonincreasing order (stable,
    /// so equal sizes keep their given order).
    pub fn new(part_sizes: &[usize]) -> Result<MultipartiteHost, GraphError> {
        if part_sizes.is_empty() {
            return Err(GraphError::EmptyParts);
        }
        if let Some(index) = part_sizes.iter().position(|&s| s == 0) {
            return Err(GraphError::ZeroPart { index });
        }
        if part_sizes.len() < 2 {
            return Err(GraphError::TooFewParts {
                parts: part_sizes.len(),
            });
        }
        let mut sizes = part_sizes.to_vec();
        sizes.sort_by(|a, b| b.cmp(a));
        let n: usize = sizes.iter().sum();
        if n > MAX_HOST_VERTICES {
            return Err(GraphError::HostTooLarge { vertices: n });
        }

        let mut part_of = vec![0u32; n];
        let mut part_start = Vec::with_capacity(sizes.len() + 1);
        let mut at = 0usize;
        for (i, &sz) in sizes.iter().enumerate() {
            part_start.push(at);
            for v in at..at + sz {
                part_of[v] = i as u32;
            }
            at += sz;
        }
        part_start.push(n);

        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if part_of[u] != part_of[v] {
                    edges.push((u as u32, v as u32));
                }
            }
        }

        Ok(MultipartiteHost {
            part_sizes: sizes,
            part_of,
            part_start,
            edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.part_of.len()
    }

    pub fn part_count(&self) -> usize {
        self.part_sizes.len()
    }

    pub fn part_sizes(&self) -> &[usize] {
        &self.part_sizes
    }

    pub fn part_of(&self, v: usize) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.part_of[v] as usize)
    }

    /// Vertex range of part `i`; parts are contiguous.
    pub fn part_vertices(&self, i: usize) -> Range<usize> {
        self.part_start[i]..self.part_start[i + 1]
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Cross-part pairs `(u, v)`, `u < v`, lexicographic. Edge `i` of every
    /// serialized coloring refers to `edges()[i]`.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn is_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_ok()
    }

    /// Position of `(u, v)` in the canonical edge order.
    pub fn edge_index(&self, u: usize, v: usize) -> Result<usize, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::LoopEdge { v });
        }
        let key = (u.min(v) as u32, u.max(v) as u32);
        self.edges
            .binary_search(&key)
            .map_err(|_| GraphError::NotAnEdge { u, v })
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.vertex_count() {
            return Err(GraphError::BadVertex {
                v,
                n: self.vertex_count(),
            });
        }
        Ok(())
    }

    /// Host degree of `v`: adjacent to everything outside its own part.
    pub fn host_degree(&self, v: usize) -> Result<usize, GraphError> {
        let p = self.part_of(v)?;
        Ok(self.vertex_count() - self.part_sizes[p])
    }
}

/// Total red/blue assignment on the edges of a host.
///
/// Stored as one bit per edge in canonical edge order: 0 red, 1 blue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoColoring {
    host: Arc<MultipartiteHost>,
    blue: Vec<u64>,
}

impl TwoColoring {
    pub fn uniform(host: Arc<MultipartiteHost>, color: Color) -> TwoColoring {
        let words = host.edge_count().div_ceil(64);
        let fill = match color {
            Color::Red => 0u64,
            Color::Blue => !0u64,
        };
        let mut blue = vec![fill; words];
        Self::trim(&mut blue, host.edge_count());
        TwoColoring { host, blue }
    }

    /// Colors edge `i` with `f(i, (u, v))`.
    pub fn from_fn(
        host: Arc<MultipartiteHost>,
        mut f: impl FnMut(usize, (usize, usize)) -> Color,
    ) -> TwoColoring {
        let mut c = TwoColoring::uniform(host, Color::Red);
        for i in 0..c.host.edge_count() {
            let (u, v) = c.host.edges()[i];
            if f(i, (u as usize, v as usize)) == Color::Blue {
                c.blue[i / 64] |= 1 << (i % 64);
            }
        }
        c
    }

    /// Coloring from an enumeration bitmask; bit `i` set means edge `i` is
    /// blue. Host must have at most 64 edges.
    pub fn from_bitmask(host: Arc<MultipartiteHost>, mask: u64) -> TwoColoring {
        assert!(host.edge_count() <= 64, "bitmask colorings need <= 64 edges");
        let mut blue = vec![mask];
        Self::trim(&mut blue, host.edge_count());
        TwoColoring { host, blue }
    }

    fn trim(words: &mut [u64], bits: usize) {
        if bits % 64 != 0 {
            if let Some(last) = words.last_mut() {
                *last &= (1u64 << (bits % 64)) - 1;
            }
        }
    }

    pub fn host(&self) -> &MultipartiteHost {
        &self.host
    }

    pub fn host_arc(&self) -> &Arc<MultipartiteHost> {
        &self.host
    }

    pub fn color_of(&self, u: usize, v: usize) -> Result<Color, GraphError> {
        Ok(self.color_of_index(self.host.edge_index(u, v)?))
    }

    pub fn color_of_index(&self, i: usize) -> Color {
        debug_assert!(i < self.host.edge_count());
        if self.blue[i / 64] >> (i % 64) & 1 == 1 {
            Color::Blue
        } else {
            Color::Red
        }
    }

    pub fn set_color_index(&mut self, i: usize, color: Color) {
        debug_assert!(i < self.host.edge_count());
        match color {
            Color::Blue => self.blue[i / 64] |= 1 << (i % 64),
            Color::Red => self.blue[i / 64] &= !(1 << (i % 64)),
        }
    }

    pub fn flip_index(&mut self, i: usize) {
        debug_assert!(i < self.host.edge_count());
        self.blue[i / 64] ^= 1 << (i % 64);
    }

    /// New coloring with red and blue exchanged everywhere.
    pub fn swapped(&self) -> TwoColoring {
        let mut blue: Vec<u64> = self.blue.iter().map(|w| !w).collect();
        Self::trim(&mut blue, self.host.edge_count());
        TwoColoring {
            host: Arc::clone(&self.host),
            blue,
        }
    }

    pub fn edge_colors(&self) -> impl Iterator<Item = ((usize, usize), Color)> + '_ {
        self.host
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| ((u as usize, v as usize), self.color_of_index(i)))
    }

    pub fn subgraph(&self, color: Color) -> ColorSubgraph<'_> {
        ColorSubgraph { coloring: self, color }
    }

    /// Number of `color` neighbors of `v`, optionally counting only
    /// neighbors inside `restrict`.
    pub fn degree_in_color(
        &self,
        color: Color,
        v: usize,
        restrict: Option<&[usize]>,
    ) -> Result<usize, GraphError> {
        self.host.check_vertex(v)?;
        let count_from = |others: &mut dyn Iterator<Item = usize>| -> usize {
            others
                .filter(|&u| {
                    u != v
                        && self
                            .color_of(u, v)
                            .map(|c| c == color)
                            .unwrap_or(false)
                })
                .count()
        };
        match restrict {
            Some(set) => {
                for &u in set {
                    self.host.check_vertex(u)?;
                }
                Ok(count_from(&mut set.iter().copied()))
            }
            None => Ok(count_from(&mut (0..self.host.vertex_count()))),
        }
    }

    /// Canonical serialization: one character per edge, '0' red, '1' blue.
    pub fn bit_string(&self) -> String {
        (0..self.host.edge_count())
            .map(|i| match self.color_of_index(i) {
                Color::Red => '0',
                Color::Blue => '1',
            })
            .collect()
    }

    pub fn from_bit_string(
        host: Arc<MultipartiteHost>,
        bits: &str,
    ) -> Result<TwoColoring, GraphError> {
        let m = host.edge_count();
        if bits.chars().count() != m {
            return Err(GraphError::BitLength {
                expected: m,
                got: bits.chars().count(),
            });
        }
        let mut c = TwoColoring::uniform(host, Color::Red);
        for (i, ch) in bits.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => c.blue[i / 64] |= 1 << (i % 64),
                _ => return Err(GraphError::BadBitChar { pos: i, ch }),
            }
        }
        Ok(c)
    }

    /// The coloring as an enumeration bitmask. Host must have <= 64 edges.
    pub fn to_bitmask(&self) -> u64 {
        assert!(self.host.edge_count() <= 64);
        self.blue.first().copied().unwrap_or(0)
    }
}

/// One color class of a coloring, viewed as a plain graph on the host's
/// vertex set.
#[derive(Clone, Copy)]
pub struct ColorSubgraph<'a> {
    coloring: &'a TwoColoring,
    color: Color,
}

impl<'a> ColorSubgraph<'a> {
    pub fn color(&self) -> Color {
        self.color
    }

    pub fn vertex_count(&self) -> usize {
        self.coloring.host().vertex_count()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + 'a {
        let color = self.color;
        self.coloring
            .edge_colors()
            .filter_map(move |(e, c)| (c == color).then_some(e))
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        self.coloring.degree_in_color(self.color, v, None)
    }

    pub fn to_graph(&self) -> SimpleGraph {
        let mut g = SimpleGraph::empty(self.vertex_count());
        for (u, v) in self.edges() {
            g.add_edge_unchecked(u, v);
        }
        g.finish();
        g
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.to_graph().components()
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        self.to_graph().blocks()
    }
}

/// Plain undirected simple graph; the shape exact search and matching run on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> SimpleGraph {
        SimpleGraph {
            n,
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<SimpleGraph, GraphError> {
        let mut g = SimpleGraph::empty(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::BadVertex { v: u, n });
            }
            if v >= n {
                return Err(GraphError::BadVertex { v, n });
            }
            if u == v {
                return Err(GraphError::LoopEdge { v });
            }
            g.add_edge_unchecked(u, v);
        }
        g.finish();
        Ok(g)
    }

    fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u].push(v);
        self.adj[v].push(u);
    }

    /// Sorts adjacency and drops duplicate edges.
    fn finish(&mut self) {
        for list in &mut self.adj {
            list.sort_unstable();
            list.dedup();
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Neighbor bitmasks; only valid for graphs the exact search accepts.
    pub(crate) fn neighbor_masks(&self) -> Vec<u64> {
        debug_assert!(self.n <= 64);
        let mut masks = vec![0u64; self.n];
        for u in 0..self.n {
            for &v in &self.adj[u] {
                masks[u] |= 1 << v;
            }
        }
        masks
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut queue = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.clear();
            queue.push(s);
            let mut comp = vec![s];
            while let Some(v) = queue.pop() {
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        queue.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Blocks: vertex sets of the maximal 2-connected subgraphs and bridges,
    /// plus a singleton block per isolated vertex. Two blocks share at most
    /// one vertex (a cut vertex). Output is sorted for determinism.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        const UNSET: usize = usize::MAX;
        let mut disc = vec![UNSET; self.n];
        let mut low = vec![0usize; self.n];
        let mut timer = 0usize;
        let mut estack: Vec<(usize, usize)> = Vec::new();
        let mut out: Vec<Vec<usize>> = Vec::new();

        // frame: (vertex, dfs parent, next adjacency index)
        let mut stack: Vec<(usize, usize, usize)> = Vec::new();
        for root in 0..self.n {
            if disc[root] != UNSET {
                continue;
            }
            if self.adj[root].is_empty() {
                disc[root] = timer;
                timer += 1;
                out.push(vec![root]);
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            stack.push((root, UNSET, 0));
            while let Some(frame) = stack.last_mut() {
                let (v, parent, i) = *frame;
                if i < self.adj[v].len() {
                    frame.2 += 1;
                    let to = self.adj[v][i];
                    if to == parent {
                        continue;
                    }
                    if disc[to] == UNSET {
                        estack.push((v, to));
                        disc[to] = timer;
                        low[to] = timer;
                        timer += 1;
                        stack.push((to, v, 0));
                    } else if disc[to] < disc[v] {
                        // back edge; forward edges were handled from the other end
                        estack.push((v, to));
                        low[v] = low[v].min(disc[to]);
                    }
                } else {
                    stack.pop();
                    if let Some(pframe) = stack.last_mut() {
                        let u = pframe.0;
                        low[u] = low[u].min(low[v]);
                        if low[v] >= disc[u] {
                            // block boundary: pop edges through (u, v)
                            let mut verts = Vec::new();
                            while let Some(&(a, b)) = estack.last() {
                                estack.pop();
                                verts.push(a);
                                verts.push(b);
                                if (a, b) == (u, v) {
                                    break;
                                }
                            }
                            verts.sort_unstable();
                            verts.dedup();
                            out.push(verts);
                        }
                    }
                }
            }
            debug_assert!(estack.is_empty());
        }
        out.sort();
        out
    }

    /// Subgraph induced by `verts` (deduplicated, sorted). Returns the graph
    /// on `0..verts.len()` and the map from new index to original vertex.
    pub fn induced(&self, verts: &[usize]) -> (SimpleGraph, Vec<usize>) {
        let mut map: Vec<usize> = verts.to_vec();
        map.sort_unstable();
        map.dedup();
        let mut back = vec![UNMAPPED; self.n];
        for (i, &v) in map.iter().enumerate() {
            back[v] = i;
        }
        let mut g = SimpleGraph::empty(map.len());
        for (i, &v) in map.iter().enumerate() {
            for &u in &self.adj[v] {
                if back[u] != UNMAPPED && back[u] > i {
                    g.add_edge_unchecked(i, back[u]);
                }
            }
        }
        g.finish();
        (g, map)
    }
}

const UNMAPPED: usize = usize::MAX;
