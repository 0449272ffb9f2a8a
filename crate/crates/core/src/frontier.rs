//! Arithmetic threshold conditions on part-size tuples, applicability of
//! the four target families, and exhaustive or heuristic verification of
//! "every coloring contains a monochromatic X" claims at desk scale.

use std::ops::Range;
use std::sync::Arc;
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::finders::{mono_search, SearchError, Target};
use crate::graph::{Color, GraphError, MultipartiteHost, TwoColoring};

/// Enumeration refuses to scan more colorings than this by default.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 25;

/// Within-part permutation groups larger than this are refused.
pub const PERM_GROUP_CAP: usize = 40_320;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FrontierError {
    #[error("half-length n must be at least 1")]
    ZeroHalfLength,
    #[error("{requested} colorings requested, cap is {cap}")]
    TooManyColorings { requested: u64, cap: u64 },
    #[error("host has {edges} edges; enumeration masks support at most 63")]
    EdgeCountTooLarge { edges: usize },
    #[error("range {start}..{end} is not within 0..{total}")]
    BadRange { start: u64, end: u64, total: u64 },
    #[error("within-part permutation group has {size} elements, cap is {cap}")]
    PermGroupTooLarge { size: usize, cap: usize },
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The four structure families the threshold conditions govern, each
/// parametrized by the half-length n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TargetFamily {
    /// cycle on exactly 2n vertices
    EvenCycle,
    /// cycle on at least 2n vertices
    LongCycle,
    /// path on 2n vertices
    EvenPath,
    /// path on 2n+1 vertices
    OddPath,
}

impl TargetFamily {
    pub const ALL: [TargetFamily; 4] = [
        TargetFamily::EvenCycle,
        TargetFamily::LongCycle,
        TargetFamily::EvenPath,
        TargetFamily::OddPath,
    ];

    /// Concrete search target at half-length n.
    pub fn target(self, n: usize) -> Target {
        match self {
            TargetFamily::EvenCycle => Target::Cycle(2 * n),
            TargetFamily::LongCycle => Target::CycleAtLeast(2 * n),
            TargetFamily::EvenPath => Target::Path(2 * n),
            TargetFamily::OddPath => Target::Path(2 * n + 1),
        }
    }

    /// 1-based indices of the conditions this family needs.
    pub fn required_conditions(self) -> &'static [usize] {
        match self {
            TargetFamily::EvenCycle => &[1, 2, 7],
            TargetFamily::LongCycle => &[1, 2, 4, 5],
            TargetFamily::EvenPath => &[1, 2],
            TargetFamily::OddPath => &[2, 3, 6],
        }
    }
}

impl std::fmt::Display for TargetFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            TargetFamily::EvenCycle => "C2n",
            TargetFamily::LongCycle => "C>=2n",
            TargetFamily::EvenPath => "P2n",
            TargetFamily::OddPath => "P2n+1",
        })
    }
}

/// Evaluation of the seven threshold conditions for one (n, part sizes)
/// pair. Conditions with a guard are vacuously true when the guard fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub n: usize,
    /// nonincreasing
    pub part_sizes: Vec<usize>,
    flags: [bool; 7],
    guards: [bool; 7],
}

impl ConditionReport {
    /// Truth of condition `i`, 1-based.
    pub fn condition(&self, i: usize) -> bool {
        self.flags[i - 1]
    }

    /// Whether condition `i`'s premise applies to this tuple (always true
    /// for the unconditional ones).
    pub fn guard_active(&self, i: usize) -> bool {
        self.guards[i - 1]
    }

    pub fn flags(&self) -> [bool; 7] {
        self.flags
    }

    pub fn applicable(&self, family: TargetFamily) -> bool {
        family
            .required_conditions()
            .iter()
            .all(|&i| self.condition(i))
    }
}

/// Evaluates the seven conditions:
/// (1) N >= 3n-1; (2) N-n1 >= 2n-1; (3) N >= 3n;
/// (4) if N-n1-n2 <= 2 then n1 >= 2n-1;
/// (5) if N-n1-n2 <= 1 then n1+N >= 6n-2;
/// (6) if n3 = 0 then n1 >= 2n+1;
/// (7) if N-n1-n2 <= 2 then N >= 4n-1;
/// where n1 >= n2 >= ... are the part sizes and N their sum.
pub fn conditions_report(
    n: usize,
    part_sizes: &[usize],
) -> Result<ConditionReport, FrontierError> {
    if n == 0 {
        return Err(FrontierError::ZeroHalfLength);
    }
    if part_sizes.is_empty() {
        return Err(FrontierError::Graph(GraphError::EmptyParts));
    }
    if let Some(index) = part_sizes.iter().position(|&s| s == 0) {
        return Err(FrontierError::Graph(GraphError::ZeroPart { index }));
    }
    let mut sizes = part_sizes.to_vec();
    sizes.sort_by(|a, b| b.cmp(a));
    let total: usize = sizes.iter().sum();
    let n1 = sizes[0];
    let n2 = sizes.get(1).copied().unwrap_or(0);
    let n3 = sizes.get(2).copied().unwrap_or(0);
    let small_tail = total - n1 - n2;
    let guards = [
        true,
        true,
        true,
        small_tail <= 2,
        small_tail <= 1,
        n3 == 0,
        small_tail <= 2,
    ];
    let flags = [
        total >= 3 * n - 1,
        total - n1 >= 2 * n - 1,
        total >= 3 * n,
        !guards[3] || n1 >= 2 * n - 1,
        !guards[4] || n1 + total >= 6 * n - 2,
        !guards[5] || n1 >= 2 * n + 1,
        !guards[6] || total >= 4 * n - 1,
    ];
    Ok(ConditionReport {
        n,
        part_sizes: sizes,
        flags,
        guards,
    })
}

#[derive(Debug, Clone)]
pub struct EnumerationOptions {
    /// Bitmask subrange to scan; defaults to all 2^|E| colorings.
    pub range: Option<Range<u64>>,
    /// Worker count; 0 and 1 both mean serial.
    pub threads: usize,
    /// Skip colorings that are not the minimum of their orbit under
    /// global color exchange; counts are reported orbit-expanded.
    pub color_swap: bool,
    /// Likewise for within-part vertex permutations.
    pub part_perms: bool,
    /// Refuse to scan more than this many colorings.
    pub max_colorings: u64,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            range: None,
            threads: 1,
            color_swap: false,
            part_perms: false,
            max_colorings: DEFAULT_ENUMERATION_CAP,
        }
    }
}

/// Outcome of an exhaustive scan.
#[derive(Debug, Clone)]
pub struct VerdictSummary {
    /// nonincreasing part sizes of the host
    pub part_sizes: Vec<usize>,
    pub target: Target,
    /// colorings covered, counting each skipped orbit member
    pub colorings: u64,
    /// colorings actually searched (equals `colorings` without reduction)
    pub representatives: u64,
    /// covered colorings lacking a monochromatic target
    pub failures: u64,
    /// smallest failing bitmask, in enumeration order
    pub first_failure: Option<u64>,
    /// the coloring behind `first_failure`
    pub witness: Option<TwoColoring>,
    pub wall_ms: u128,
}

impl VerdictSummary {
    pub const CSV_HEADER: [&'static str; 6] =
        ["parts", "n", "target", "colorings", "failures", "witness-file"];

    /// One CSV record; `witness_file` is the caller-chosen file name for
    /// the stored counterexample, empty when there is none. Wall time is
    /// deliberately excluded so reports are byte-reproducible.
    pub fn csv_record(&self, witness_file: &str) -> [String; 6] {
        let parts = self
            .part_sizes
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join("+");
        [
            parts,
            self.part_sizes.iter().sum::<usize>().to_string(),
            self.target.to_string(),
            self.colorings.to_string(),
            self.failures.to_string(),
            witness_file.to_string(),
        ]
    }
}

/// Writes the standard frontier CSV for a batch of summaries.
pub fn write_csv<W: std::io::Write>(
    rows: &[(VerdictSummary, String)],
    out: W,
) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(VerdictSummary::CSV_HEADER)?;
    for (summary, witness_file) in rows {
        w.write_record(summary.csv_record(witness_file))?;
    }
    w.flush()
}

/// Within-part vertex permutations, represented as edge-index tables.
/// Table t maps edge i to edge t[i] under the vertex relabeling.
fn edge_permutation_tables(host: &MultipartiteHost) -> Result<Vec<Vec<u32>>, FrontierError> {
    let group_size: usize = host
        .part_sizes()
        .iter()
        .try_fold(1usize, |acc, &s| {
            (1..=s).try_fold(acc, |a, f| a.checked_mul(f))
        })
        .filter(|&s| s <= PERM_GROUP_CAP)
        .ok_or(FrontierError::PermGroupTooLarge {
            size: usize::MAX,
            cap: PERM_GROUP_CAP,
        })?;
    let n = host.vertex_count();
    // vertex maps, built part by part
    let mut vertex_maps: Vec<Vec<u32>> = vec![(0..n as u32).collect()];
    for p in 0..host.part_count() {
        let verts: Vec<usize> = host.part_vertices(p).collect();
        let perms = permutations(&verts);
        let mut next = Vec::with_capacity(vertex_maps.len() * perms.len());
        for base in &vertex_maps {
            for perm in &perms {
                let mut map = base.clone();
                for (i, &v) in verts.iter().enumerate() {
                    map[v] = perm[i] as u32;
                }
                next.push(map);
            }
        }
        vertex_maps = next;
    }
    debug_assert_eq!(vertex_maps.len(), group_size);
    let mut tables = Vec::with_capacity(vertex_maps.len());
    for map in &vertex_maps {
        let mut table = Vec::with_capacity(host.edge_count());
        for &(u, v) in host.edges() {
            let (a, b) = (map[u as usize] as usize, map[v as usize] as usize);
            // relabeling within parts keeps edges cross-part
            table.push(host.edge_index(a.min(b), a.max(b)).unwrap() as u32);
        }
        tables.push(table);
    }
    Ok(tables)
}

/// All permutations of `items` in a deterministic order.
fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut work = items.to_vec();
    fn rec(work: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == work.len() {
            out.push(work.clone());
            return;
        }
        for i in k..work.len() {
            work.swap(k, i);
            rec(work, k + 1, out);
            work.swap(k, i);
        }
    }
    rec(&mut work, 0, &mut out);
    out
}

fn apply_table(mask: u64, table: &[u32]) -> u64 {
    let mut out = 0u64;
    let mut bits = mask;
    while bits != 0 {
        let i = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        out |= 1u64 << table[i];
    }
    out
}

struct ChunkOutcome {
    representatives: u64,
    covered: u64,
    failures: u64,
    first_failure: Option<u64>,
}

fn scan_chunk(
    host: &Arc<MultipartiteHost>,
    target: Target,
    chunk: Range<u64>,
    tables: Option<&[Vec<u32>]>,
    color_swap: bool,
    full: u64,
) -> Result<ChunkOutcome, FrontierError> {
    let mut out = ChunkOutcome {
        representatives: 0,
        covered: 0,
        failures: 0,
        first_failure: None,
    };
    let group_total = tables.map_or(1, |t| t.len()) * if color_swap { 2 } else { 1 };
    for mask in chunk {
        let mut orbit = 1u64;
        if group_total > 1 {
            // canonical = minimum of its orbit; orbit size from the
            // stabilizer count
            let mut canonical = true;
            let mut stabilizer = 0usize;
            let identity = [vec![]];
            let tables = tables.unwrap_or(&identity);
            for table in tables {
                let img = if table.is_empty() {
                    mask
                } else {
                    apply_table(mask, table)
                };
                for swapped in [false, true] {
                    if swapped && !color_swap {
                        continue;
                    }
                    let img = if swapped { img ^ full } else { img };
                    if img < mask {
                        canonical = false;
                        break;
                    }
                    if img == mask {
                        stabilizer += 1;
                    }
                }
                if !canonical {
                    break;
                }
            }
            if !canonical {
                continue;
            }
            orbit = (group_total / stabilizer) as u64;
        }
        let coloring = TwoColoring::from_bitmask(Arc::clone(host), mask);
        out.representatives += 1;
        out.covered += orbit;
        if mono_search(&coloring, target)?.is_none() {
            out.failures += orbit;
            if out.first_failure.is_none() {
                out.first_failure = Some(mask);
            }
        }
    }
    Ok(out)
}

/// Scans colorings of the host in bitmask order, searching each for a
/// monochromatic target. Exact within the scanned range; with a symmetry
/// reduction enabled, counts cover whole orbits whose minimum lies in the
/// range.
pub fn enumerate_verify(
    host: &Arc<MultipartiteHost>,
    target: Target,
    opts: &EnumerationOptions,
) -> Result<VerdictSummary, FrontierError> {
    let start_time = Instant::now();
    let edges = host.edge_count();
    if edges > 63 {
        return Err(FrontierError::EdgeCountTooLarge { edges });
    }
    let total = 1u64 << edges;
    let full = total - 1;
    let range = opts.range.clone().unwrap_or(0..total);
    if range.start > range.end || range.end > total {
        return Err(FrontierError::BadRange {
            start: range.start,
            end: range.end,
            total,
        });
    }
    let requested = range.end - range.start;
    if requested > opts.max_colorings {
        return Err(FrontierError::TooManyColorings {
            requested,
            cap: opts.max_colorings,
        });
    }
    let tables = if opts.part_perms {
        Some(edge_permutation_tables(host)?)
    } else {
        None
    };
    let tables_ref = tables.as_deref();

    let workers = opts.threads.max(1).min(requested.max(1) as usize);
    let outcomes: Vec<Result<ChunkOutcome, FrontierError>> = if workers <= 1 {
        vec![scan_chunk(host, target, range.clone(), tables_ref, opts.color_swap, full)]
    } else {
        let per = requested / workers as u64;
        let extra = requested % workers as u64;
        let mut chunks = Vec::with_capacity(workers);
        let mut at = range.start;
        for w in 0..workers as u64 {
            let len = per + u64::from(w < extra);
            chunks.push(at..at + len);
            at += len;
        }
        std::thread::scope(|scope| {
            let handles: Vec<_> = chunks
                .into_iter()
                .map(|chunk| {
                    scope.spawn(move || {
                        scan_chunk(host, target, chunk, tables_ref, opts.color_swap, full)
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        })
    };

    let mut summary = VerdictSummary {
        part_sizes: host.part_sizes().to_vec(),
        target,
        colorings: 0,
        representatives: 0,
        failures: 0,
        first_failure: None,
        witness: None,
        wall_ms: 0,
    };
    for outcome in outcomes {
        let o = outcome?;
        summary.colorings += o.covered;
        summary.representatives += o.representatives;
        summary.failures += o.failures;
        summary.first_failure = match (summary.first_failure, o.first_failure) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
    }
    if let Some(mask) = summary.first_failure {
        let witness = TwoColoring::from_bitmask(Arc::clone(host), mask);
        debug_assert!(mono_search(&witness, target)?.is_none());
        summary.witness = Some(witness);
    }
    summary.wall_ms = start_time.elapsed().as_millis();
    Ok(summary)
}

/// Number of simple paths on exactly k vertices (0 when k exceeds the
/// graph or k < 2). Counted once per path, not per direction.
fn count_paths(masks: &[u64], k: usize) -> u64 {
    let n = masks.len();
    if k < 2 || k > n {
        return 0;
    }
    use std::collections::HashMap;
    let mut layer: HashMap<(u64, u32), u64> = HashMap::new();
    for v in 0..n {
        layer.insert((1u64 << v, v as u32), 1);
    }
    for _ in 2..=k {
        let mut next: HashMap<(u64, u32), u64> = HashMap::new();
        for (&(mask, v), &cnt) in &layer {
            let mut cands = masks[v as usize] & !mask;
            while cands != 0 {
                let w = cands.trailing_zeros();
                cands &= cands - 1;
                *next.entry((mask | 1 << w, w)).or_insert(0) += cnt;
            }
        }
        layer = next;
    }
    layer.values().sum::<u64>() / 2
}

/// Number of simple cycles on exactly k vertices, counted once each.
fn count_cycles(masks: &[u64], k: usize) -> u64 {
    let n = masks.len();
    if k < 3 || k > n {
        return 0;
    }
    use std::collections::HashMap;
    let mut total = 0u64;
    for s in 0..n {
        // cycles whose minimum vertex is s
        let allowed = !((1u64 << s) - 1) & !(1u64 << s);
        let mut layer: HashMap<(u64, u32), u64> = HashMap::new();
        layer.insert((1u64 << s, s as u32), 1);
        for _ in 2..=k {
            let mut next: HashMap<(u64, u32), u64> = HashMap::new();
            for (&(mask, v), &cnt) in &layer {
                let mut cands = masks[v as usize] & !mask & allowed;
                while cands != 0 {
                    let w = cands.trailing_zeros();
                    cands &= cands - 1;
                    *next.entry((mask | 1 << w, w)).or_insert(0) += cnt;
                }
            }
            layer = next;
        }
        for (&(_, v), &cnt) in &layer {
            if masks[v as usize] >> s & 1 == 1 {
                total += cnt;
            }
        }
    }
    total / 2
}

/// Heuristic pressure score: 0 exactly when neither color class contains
/// the target. Path and cycle targets use exact copy counts; connected
/// matchings use the total matching excess over the bound across
/// components.
fn mono_score(c: &TwoColoring, target: Target) -> u64 {
    let mut score = 0u64;
    for color in Color::BOTH {
        let g = c.subgraph(color).to_graph();
        let masks = g.neighbor_masks();
        score += match target {
            Target::Path(k) => count_paths(&masks, k),
            Target::Cycle(k) => count_cycles(&masks, k),
            Target::CycleAtLeast(k) => {
                (k..=g.vertex_count()).map(|j| count_cycles(&masks, j)).sum()
            }
            Target::ConnectedMatching(k) => {
                let mut excess = 0u64;
                for comp in g.components() {
                    let (size, _) = crate::finders::max_matching(&g.induced(&comp).0);
                    excess += size.saturating_sub(k - 1) as u64;
                }
                excess
            }
        };
    }
    score
}

/// Random-restart stochastic descent over single-edge flips, looking for
/// a coloring with no monochromatic target in either color. The budget
/// counts score evaluations. Any returned coloring has been re-verified
/// by exact search.
pub fn counterexample_search(
    host: &Arc<MultipartiteHost>,
    target: Target,
    budget: u64,
    seed: u64,
) -> Result<Option<TwoColoring>, SearchError> {
    let n = host.vertex_count();
    if n > 64 {
        return Err(SearchError::CapExceeded { n, cap: 64 });
    }
    let edges = host.edge_count();
    if edges == 0 {
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut spent = 0u64;
    while spent < budget {
        let mut coloring = TwoColoring::from_fn(Arc::clone(host), |_, _| {
            if rng.gen_bool(0.5) {
                Color::Blue
            } else {
                Color::Red
            }
        });
        let mut score = mono_score(&coloring, target);
        spent += 1;
        let mut stale = 0usize;
        while spent < budget && score > 0 && stale < 3 * edges {
            let i = rng.gen_range(0..edges);
            coloring.flip_index(i);
            let new_score = mono_score(&coloring, target);
            spent += 1;
            if new_score <= score {
                stale = if new_score < score { 0 } else { stale + 1 };
                score = new_score;
            } else {
                coloring.flip_index(i);
                stale += 1;
            }
        }
        if score == 0 && mono_search(&coloring, target)?.is_none() {
            return Ok(Some(coloring));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(n: usize, parts: &[usize]) -> ConditionReport {
        conditions_report(n, parts).unwrap()
    }

    #[test]
    fn boundary_tuples_match_their_families() {
        for n in 2..=6 {
            // two nearly balanced parts summing to 4n-1
            let r = report(n, &[2 * n, 2 * n - 1]);
            assert!(r.applicable(TargetFamily::EvenCycle), "n={n}");

            // the four-part shape one vertex short of the threshold:
            // within the even-cycle family's conditions, only (7) fails,
            // and within the long-cycle family's, only (4)
            let r = report(n, &[2 * n - 2, 2 * n - 2, 1, 1]);
            assert!(!r.applicable(TargetFamily::EvenCycle), "n={n}");
            assert!(r.condition(1) && r.condition(2), "n={n}");
            assert!(!r.condition(7));
            assert!(!r.condition(4));
            assert!(r.condition(5), "tail 2 leaves (5) vacuous");

            // balanced tripartite
            let r = report(n, &[n, n, n]);
            assert!(r.applicable(TargetFamily::OddPath), "n={n}");
        }
        for n in 3..=6 {
            // three parts, gap two: long cycles yes, exact cycles no.
            // at n=2 the tail shrinks to 1 and (5) fires instead.
            let r = report(n, &[2 * n - 1, 2 * n - 3, 2]);
            assert!(r.applicable(TargetFamily::LongCycle), "n={n}");
            assert!(!r.applicable(TargetFamily::EvenCycle), "n={n}");
        }
        let r = report(2, &[3, 1, 2]);
        assert!(!r.condition(5), "sorted tail is 1 and 9 < 6n-2 = 10");
        assert!(!r.applicable(TargetFamily::LongCycle));
    }

    #[test]
    fn guards_go_vacuous_when_the_tail_is_large() {
        // many small parts: no guard fires, conditionals are free
        let r = report(2, &[3, 3, 3, 3]);
        for i in [4, 5, 6, 7] {
            assert!(!r.guard_active(i), "guard {i}");
            assert!(r.condition(i), "condition {i}");
        }
        // two-part host: n3 = 0 fires the third-part guard
        let r = report(2, &[4, 4]);
        assert!(r.guard_active(6));
        assert!(!r.condition(6), "4 < 2n+1 = 5");
        let r = report(2, &[5, 4]);
        assert!(r.condition(6), "5 >= 5");
    }

    #[test]
    fn condition_errors() {
        assert_eq!(
            conditions_report(0, &[3, 3]).unwrap_err(),
            FrontierError::ZeroHalfLength
        );
        assert!(matches!(
            conditions_report(2, &[3, 0]).unwrap_err(),
            FrontierError::Graph(GraphError::ZeroPart { index: 1 })
        ));
        assert!(matches!(
            conditions_report(2, &[]).unwrap_err(),
            FrontierError::Graph(GraphError::EmptyParts)
        ));
    }

    #[test]
    fn unsorted_input_is_normalized() {
        let r = report(3, &[1, 5, 2]);
        assert_eq!(r.part_sizes, vec![5, 2, 1]);
        // n1 = 5: N - n1 = 3 < 2n-1 = 5 so the coverage condition fails
        assert!(!r.condition(2));
    }

    fn k33() -> Arc<MultipartiteHost> {
        Arc::new(MultipartiteHost::new(&[3, 3]).unwrap())
    }

    #[test]
    fn tiny_balanced_host_always_has_short_mono_paths() {
        let summary =
            enumerate_verify(&k33(), Target::Path(4), &EnumerationOptions::default()).unwrap();
        assert_eq!(summary.colorings, 512);
        assert_eq!(summary.representatives, 512);
        assert_eq!(summary.failures, 0);
        assert!(summary.first_failure.is_none() && summary.witness.is_none());
    }

    #[test]
    fn first_failure_is_reproducible_and_reverifies() {
        let host = k33();
        let summary =
            enumerate_verify(&host, Target::Path(5), &EnumerationOptions::default()).unwrap();
        assert!(summary.failures > 0);
        let f = summary.first_failure.unwrap();
        let again =
            enumerate_verify(&host, Target::Path(5), &EnumerationOptions::default()).unwrap();
        assert_eq!(summary.failures, again.failures);
        assert_eq!(again.first_failure, Some(f));
        let witness = summary.witness.unwrap();
        assert!(mono_search(&witness, Target::Path(5)).unwrap().is_none());
    }

    #[test]
    fn parallel_and_serial_scans_agree() {
        let host = k33();
        let serial =
            enumerate_verify(&host, Target::Path(5), &EnumerationOptions::default()).unwrap();
        let parallel = enumerate_verify(
            &host,
            Target::Path(5),
            &EnumerationOptions {
                threads: 4,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(serial.failures, parallel.failures);
        assert_eq!(serial.colorings, parallel.colorings);
        assert_eq!(serial.first_failure, parallel.first_failure);
    }

    #[test]
    fn color_swap_reduction_preserves_counts() {
        let host = k33();
        let plain =
            enumerate_verify(&host, Target::Path(5), &EnumerationOptions::default()).unwrap();
        let reduced = enumerate_verify(
            &host,
            Target::Path(5),
            &EnumerationOptions {
                color_swap: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(reduced.colorings, plain.colorings);
        assert_eq!(reduced.failures, plain.failures);
        assert_eq!(reduced.first_failure, plain.first_failure);
        assert_eq!(reduced.representatives, 256);
    }

    #[test]
    fn part_permutation_reduction_preserves_counts() {
        let host = Arc::new(MultipartiteHost::new(&[2, 2, 1]).unwrap());
        let plain =
            enumerate_verify(&host, Target::Path(4), &EnumerationOptions::default()).unwrap();
        let reduced = enumerate_verify(
            &host,
            Target::Path(4),
            &EnumerationOptions {
                color_swap: true,
                part_perms: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(reduced.colorings, plain.colorings);
        assert_eq!(reduced.failures, plain.failures);
        assert!(reduced.representatives < plain.representatives);
        assert_eq!(reduced.first_failure, plain.first_failure);
    }

    #[test]
    fn range_scan_partitions_the_work() {
        let host = k33();
        let full =
            enumerate_verify(&host, Target::Path(5), &EnumerationOptions::default()).unwrap();
        let lo = enumerate_verify(
            &host,
            Target::Path(5),
            &EnumerationOptions {
                range: Some(0..200),
                ..Default::default()
            },
        )
        .unwrap();
        let hi = enumerate_verify(
            &host,
            Target::Path(5),
            &EnumerationOptions {
                range: Some(200..512),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(lo.colorings + hi.colorings, full.colorings);
        assert_eq!(lo.failures + hi.failures, full.failures);
    }

    #[test]
    fn enumeration_caps_are_enforced() {
        let host = k33();
        let err = enumerate_verify(
            &host,
            Target::Path(5),
            &EnumerationOptions {
                max_colorings: 100,
                ..Default::default()
            },
        )
        .unwrap_err();
        assert_eq!(
            err,
            FrontierError::TooManyColorings {
                requested: 512,
                cap: 100
            }
        );
        let err = enumerate_verify(
            &host,
            Target::Path(5),
            &EnumerationOptions {
                range: Some(0..999),
                ..Default::default()
            },
        )
        .unwrap_err();
        assert!(matches!(err, FrontierError::BadRange { .. }));
    }

    #[test]
    fn copy_counters_match_hand_counts() {
        // triangle plus pendant: 0-1-2-0, 2-3
        let g = crate::graph::SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)])
            .unwrap();
        let masks = g.neighbor_masks();
        assert_eq!(count_paths(&masks, 2), 4);
        // 1-0-2, 0-1-2, 0-2-1 plus the three x-2-3 arms
        assert_eq!(count_paths(&masks, 3), 5);
        assert_eq!(count_paths(&masks, 4), 2);
        assert_eq!(count_cycles(&masks, 3), 1);
        assert_eq!(count_cycles(&masks, 4), 0);
    }

    #[test]
    fn descent_finds_a_split_coloring_when_one_exists() {
        let host = Arc::new(MultipartiteHost::new(&[4, 4]).unwrap());
        let found = counterexample_search(&host, Target::Path(5), 4_000, 7)
            .unwrap()
            .expect("a split coloring avoiding mono 5-vertex paths exists");
        assert!(mono_search(&found, Target::Path(5)).unwrap().is_none());
    }

    #[test]
    fn zero_budget_returns_nothing() {
        let host = k33();
        assert!(counterexample_search(&host, Target::Path(4), 0, 1)
            .unwrap()
            .is_none());
    }

    #[test]
    fn csv_output_is_stable() {
        let host = k33();
        let summary =
            enumerate_verify(&host, Target::Path(4), &EnumerationOptions::default()).unwrap();
        let mut buf = Vec::new();
        write_csv(&[(summary, String::new())], &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "parts,n,target,colorings,failures,witness-file\n3+3,6,P4,512,0,\n"
        );
    }
}
