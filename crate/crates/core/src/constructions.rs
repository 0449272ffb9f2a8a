//! Generators for the extremal two-colorings of complete multipartite
//! graphs that sit just below the structural thresholds handled by
//! [`crate::frontier`].  Each generator returns the colored host together
//! with the vertex sets used to define it, machine-checkable absence
//! certificates where the construction admits one, and the list of
//! structures the coloring is designed to avoid.

use std::collections::BTreeMap;
use std::ops::Range;
use std::sync::Arc;

use crate::certificates::AbsenceCertificate;
use crate::finders::Target;
use crate::graph::{Color, GraphError, MultipartiteHost, TwoColoring};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("no generator numbered {k}; valid ids are 1 through 7")]
    UnknownGenerator { k: usize },
    #[error("generator {k} needs n >= {min}, got {n}")]
    SmallN { k: usize, n: usize, min: usize },
    #[error("part sizes must sum to {expected}, got {got}")]
    BadPartSum { expected: usize, got: usize },
    #[error("generator {k} takes no part list; its host shape is fixed by n")]
    PartsNotAccepted { k: usize },
    #[error("generator {k} needs an explicit part list")]
    PartsRequired { k: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A colored host plus everything needed to audit it: the labelled vertex
/// sets the coloring is defined from, certificates for the absences that
/// have succinct proofs, and the full list of claimed absences (some of
/// which are only checkable by search).
#[derive(Debug, Clone)]
pub struct ExtremalInstance {
    pub host: Arc<MultipartiteHost>,
    pub coloring: TwoColoring,
    pub named_sets: BTreeMap<String, Vec<usize>>,
    pub certificates: Vec<AbsenceCertificate>,
    pub claimed_absences: Vec<(Color, Target)>,
}

impl ExtremalInstance {
    pub fn named(&self, label: &str) -> &[usize] {
        self.named_sets
            .get(label)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }
}

/// Maps logical part indices (the order a construction states them in) to
/// vertex ranges of the host, which stores parts in nonincreasing size
/// order.  Both sorts are stable, so the mapping is well defined even with
/// repeated sizes.
fn logical_ranges(sizes: &[usize], host: &MultipartiteHost) -> Vec<Range<usize>> {
    let mut order: Vec<usize> = (0..sizes.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(sizes[i]));
    let mut ranges = vec![0..0; sizes.len()];
    for (slot, &logical) in order.iter().enumerate() {
        ranges[logical] = host.part_vertices(slot);
    }
    ranges
}

fn in_set(set: &[usize]) -> impl Fn(usize) -> bool + '_ {
    move |v| set.binary_search(&v).is_ok()
}

/// Dispatches on the generator id.  Generators 1 and 2 admit a host shape
/// argument; the rest determine their host from n alone and reject one.
pub fn example(
    k: usize,
    n: usize,
    parts: Option<&[usize]>,
) -> Result<ExtremalInstance, ConstructionError> {
    match k {
        1 => match parts {
            Some(p) => example1(n, p),
            None => Err(ConstructionError::PartsRequired { k: 1 }),
        },
        2 => match parts {
            Some([n1]) => example2(n, *n1, None),
            Some([n1, rest @ ..]) => example2(n, *n1, Some(rest)),
            Some([]) | None => Err(ConstructionError::PartsRequired { k: 2 }),
        },
        3..=7 => {
            if parts.is_some() {
                return Err(ConstructionError::PartsNotAccepted { k });
            }
            match k {
                3 => example3(n),
                4 => example4(n),
                5 => example5(n),
                6 => example6(n),
                _ => example7(n),
            }
        }
        _ => Err(ConstructionError::UnknownGenerator { k }),
    }
}

/// Splits any host on 3n-2 vertices into the first 2n-1 vertices (U1) and
/// the remaining n-1 (U2), coloring the edges between the halves red and
/// everything else blue.  Red has vertex cover U2, so no red matching of
/// size n exists; blue components live inside one half, so no blue
/// connected matching of size n exists either.
pub fn example1(n: usize, parts: &[usize]) -> Result<ExtremalInstance, ConstructionError> {
    if n < 2 {
        return Err(ConstructionError::SmallN { k: 1, n, min: 2 });
    }
    let total: usize = parts.iter().sum();
    if total != 3 * n - 2 {
        return Err(ConstructionError::BadPartSum {
            expected: 3 * n - 2,
            got: total,
        });
    }
    let host = Arc::new(MultipartiteHost::new(parts)?);
    let u1: Vec<usize> = (0..2 * n - 1).collect();
    let u2: Vec<usize> = (2 * n - 1..3 * n - 2).collect();
    let coloring = {
        let split = in_set(&u2);
        TwoColoring::from_fn(Arc::clone(&host), |_, (u, v)| {
            if split(u) != split(v) {
                Color::Red
            } else {
                Color::Blue
            }
        })
    };
    let mut named_sets = BTreeMap::new();
    named_sets.insert("U1".to_string(), u1);
    named_sets.insert("U2".to_string(), u2.clone());
    Ok(ExtremalInstance {
        host,
        coloring,
        named_sets,
        certificates: vec![
            AbsenceCertificate::VertexCover {
                color: Color::Red,
                cover: u2,
                bound: n - 1,
            },
            AbsenceCertificate::ComponentBound {
                color: Color::Blue,
                bound: 2 * n - 1,
            },
        ],
        claimed_absences: vec![
            (Color::Red, Target::ConnectedMatching(n)),
            (Color::Blue, Target::ConnectedMatching(n)),
        ],
    })
}

/// Host with one part of size n1 (U1) and further parts summing to 2n-2.
/// The vertices outside U1 split, in vertex order, into U2 and U3 of size
/// n-1 each.  Edges meeting U2 are red, the rest blue; each color then has
/// a vertex cover of size n-1, killing matchings of size n in both.
pub fn example2(
    n: usize,
    n1: usize,
    rest: Option<&[usize]>,
) -> Result<ExtremalInstance, ConstructionError> {
    if n < 2 {
        return Err(ConstructionError::SmallN { k: 2, n, min: 2 });
    }
    let default_rest = [n - 1, n - 1];
    let rest = rest.unwrap_or(&default_rest);
    let rest_total: usize = rest.iter().sum();
    if rest_total != 2 * n - 2 {
        return Err(ConstructionError::BadPartSum {
            expected: 2 * n - 2,
            got: rest_total,
        });
    }
    let mut sizes = vec![n1];
    sizes.extend_from_slice(rest);
    let host = Arc::new(MultipartiteHost::new(&sizes)?);
    let ranges = logical_ranges(&sizes, &host);
    let u1: Vec<usize> = ranges[0].clone().collect();
    let mut outside: Vec<usize> = (0..host.vertex_count())
        .filter(|v| !ranges[0].contains(v))
        .collect();
    let u3 = outside.split_off(n - 1);
    let u2 = outside;
    let coloring = {
        let red_side = in_set(&u2);
        TwoColoring::from_fn(Arc::clone(&host), |_, (u, v)| {
            if red_side(u) || red_side(v) {
                Color::Red
            } else {
                Color::Blue
            }
        })
    };
    let mut named_sets = BTreeMap::new();
    named_sets.insert("U1".to_string(), u1);
    named_sets.insert("U2".to_string(), u2.clone());
    named_sets.insert("U3".to_string(), u3.clone());
    Ok(ExtremalInstance {
        host,
        coloring,
        named_sets,
        certificates: vec![
            AbsenceCertificate::VertexCover {
                color: Color::Red,
                cover: u2,
                bound: n - 1,
            },
            AbsenceCertificate::VertexCover {
                color: Color::Blue,
                cover: u3,
                bound: n - 1,
            },
        ],
        claimed_absences: vec![
            (Color::Red, Target::ConnectedMatching(n)),
            (Color::Blue, Target::ConnectedMatching(n)),
        ],
    })
}

/// Complete graph on 3n-1 vertices (all parts singletons) split into U1 of
/// size 2n and U2 of size n-1, with the edges between them red.  Red is
/// covered by U2; blue splits into a clique on U1 and a clique on U2, so
/// its longest path has 2n vertices.
pub fn example3(n: usize) -> Result<ExtremalInstance, ConstructionError> {
    if n < 2 {
        return Err(ConstructionError::SmallN { k: 3, n, min: 2 });
    }
    let sizes = vec![1; 3 * n - 1];
    let host = Arc::new(MultipartiteHost::new(&sizes)?);
    let u1: Vec<usize> = (0..2 * n).collect();
    let u2: Vec<usize> = (2 * n..3 * n - 1).collect();
    let coloring = {
        let split = in_set(&u2);
        TwoColoring::from_fn(Arc::clone(&host), |_, (u, v)| {
            if split(u) != split(v) {
                Color::Red
            } else {
                Color::Blue
            }
        })
    };
    let mut named_sets = BTreeMap::new();
    named_sets.insert("U1".to_string(), u1);
    named_sets.insert("U2".to_string(), u2.clone());
    Ok(ExtremalInstance {
        host,
        coloring,
        named_sets,
        certificates: vec![
            AbsenceCertificate::VertexCover {
                color: Color::Red,
                cover: u2,
                bound: n - 1,
            },
            AbsenceCertificate::ComponentBound {
                color: Color::Blue,
                bound: 2 * n,
            },
        ],
        claimed_absences: vec![
            (Color::Red, Target::ConnectedMatching(n)),
            (Color::Blue, Target::Path(2 * n + 1)),
        ],
    })
}

fn half_split(range: Range<usize>) -> (Vec<usize>, Vec<usize>) {
    let mid = range.start + range.len() / 2;
    ((range.start..mid).collect(), (mid..range.end).collect())
}

/// Host with two parts of size 2n-2 plus two singletons x and y.  Each big
/// part is halved; red joins aligned halves and gives x all its edges,
/// blue joins crossed halves and gives y its edges into the big parts.
/// Every block in either color has at most 2n-1 vertices, so neither color
/// has a cycle of length 2n or more.
pub fn example4(n: usize) -> Result<ExtremalInstance, ConstructionError> {
    if n < 2 {
        return Err(ConstructionError::SmallN { k: 4, n, min: 2 });
    }
    let sizes = vec![2 * n - 2, 2 * n - 2, 1, 1];
    let host = Arc::new(MultipartiteHost::new(&sizes)?);
    let v1 = host.part_vertices(0);
    let v2 = host.part_vertices(1);
    let x = host.part_vertices(2).start;
    let y = host.part_vertices(3).start;
    let (v1a, v1b) = half_split(v1.clone());
    let (v2a, v2b) = half_split(v2.clone());
    let first_half = {
        let v1a = v1a.clone();
        let v2a = v2a.clone();
        move |v: usize| v1a.binary_search(&v).is_ok() || v2a.binary_search(&v).is_ok()
    };
    let coloring = TwoColoring::from_fn(Arc::clone(&host), |_, (u, v)| {
        if u == x || v == x {
            Color::Red
        } else if u == y || v == y {
            Color::Blue
        } else if first_half(u) == first_half(v) {
            Color::Red
        } else {
            Color::Blue
        }
    });
    let mut named_sets = BTreeMap::new();
    named_sets.insert("V1".to_string(), v1.collect());
    named_sets.insert("V2".to_string(), v2.collect());
    named_sets.insert("V1'".to_string(), v1a);
    named_sets.insert("V1''".to_string(), v1b);
    named_sets.insert("V2'".to_string(), v2a);
    named_sets.insert("V2''".to_string(), v2b);
    named_sets.insert("x".to_string(), vec![x]);
    named_sets.insert("y".to_string(), vec![y]);
    Ok(ExtremalInstance {
        host,
        coloring,
        named_sets,
        certificates: vec![
            AbsenceCertificate::BlockBound {
                color: Color::Red,
                bound: 2 * n - 1,
            },
            AbsenceCertificate::BlockBound {
                color: Color::Blue,
                bound: 2 * n - 1,
            },
        ],
        claimed_absences: vec![
            (Color::Red, Target::CycleAtLeast(2 * n)),
            (Color::Blue, Target::CycleAtLeast(2 * n)),
        ],
    })
}

/// Restriction of [`example4`] to three parts: y is absorbed into the
/// first big part (making it 2n-1), the second stays at 2n-2, and x stays
/// a singleton.  Edge colors are inherited; the edges from y into the
/// first part simply disappear, so the block bounds survive.
pub fn example5(n: usize) -> Result<ExtremalInstance, ConstructionError> {
    if n < 2 {
        return Err(ConstructionError::SmallN { k: 5, n, min: 2 });
    }
    let base = example4(n)?;
    let old_v1_len = 2 * n - 2;
    // Old ids: V1 = 0..2n-2, V2 = 2n-2..4n-4, x = 4n-4, y = 4n-3.
    // New ids: part one = old V1 then y (0..2n-1), part two = old V2
    // shifted up by one, part three = old x at the end.
    let old_x = 4 * n - 4;
    let old_y = 4 * n - 3;
    let to_old = |v: usize| -> usize {
        if v < old_v1_len {
            v
        } else if v == old_v1_len {
            old_y
        } else if v < 4 * n - 3 {
            v - 1
        } else {
            old_x
        }
    };
    let sizes = vec![2 * n - 1, 2 * n - 2, 1];
    let host = Arc::new(MultipartiteHost::new(&sizes)?);
    let old = &base.coloring;
    let coloring =
        TwoColoring::from_fn(Arc::clone(&host), |_, (u, v)| {
        // Every cross-part pair of the smaller host is cross-part in the
        // larger one, so the lookup cannot fail.
        old.color_of(to_old(u), to_old(v)).unwrap()
    });
    let mut named_sets = BTreeMap::new();
    named_sets.insert("V1".to_string(), (0..2 * n - 1).collect());
    named_sets.insert("V2".to_string(), (2 * n - 1..4 * n - 3).collect());
    named_sets.insert("V1'".to_string(), (0..n - 1).collect());
    named_sets.insert("V1''".to_string(), (n - 1..2 * n - 2).collect());
    named_sets.insert(
        "V2'".to_string(),
        (2 * n - 1..3 * n - 2).collect(),
    );
    named_sets.insert(
        "V2''".to_string(),
        (3 * n - 2..4 * n - 3).collect(),
    );
    named_sets.insert("x".to_string(), vec![4 * n - 3]);
    named_sets.insert("y".to_string(), vec![2 * n - 2]);
    Ok(ExtremalInstance {
        host,
        coloring,
        named_sets,
        certificates: vec![
            AbsenceCertificate::BlockBound {
                color: Color::Red,
                bound: 2 * n - 1,
            },
            AbsenceCertificate::BlockBound {
                color: Color::Blue,
                bound: 2 * n - 1,
            },
        ],
        claimed_absences: vec![
            (Color::Red, Target::CycleAtLeast(2 * n)),
            (Color::Blue, Target::CycleAtLeast(2 * n)),
        ],
    })
}

/// Balanced bipartite host with parts of size 2n, each halved.  Red joins
/// aligned halves, blue crossed halves; both colors are unions of two
/// disjoint copies of K(n,n), so components have 2n vertices and no path
/// on 2n+1 vertices fits in either color.
pub fn example6(n: usize) -> Result<ExtremalInstance, ConstructionError> {
    if n < 1 {
        return Err(ConstructionError::SmallN { k: 6, n, min: 1 });
    }
    let sizes = vec![2 * n, 2 * n];
    let host = Arc::new(MultipartiteHost::new(&sizes)?);
    let (v1a, v1b) = half_split(host.part_vertices(0));
    let (v2a, v2b) = half_split(host.part_vertices(1));
    let first_half = {
        let v1a = v1a.clone();
        let v2a = v2a.clone();
        move |v: usize| v1a.binary_search(&v).is_ok() || v2a.binary_search(&v).is_ok()
    };
    let coloring = TwoColoring::from_fn(Arc::clone(&host), |_, (u, v)| {
        if first_half(u) == first_half(v) {
            Color::Red
        } else {
            Color::Blue
        }
    });
    let mut named_sets = BTreeMap::new();
    named_sets.insert("V1".to_string(), host.part_vertices(0).collect());
    named_sets.insert("V2".to_string(), host.part_vertices(1).collect());
    named_sets.insert("V1'".to_string(), v1a);
    named_sets.insert("V1''".to_string(), v1b);
    named_sets.insert("V2'".to_string(), v2a);
    named_sets.insert("V2''".to_string(), v2b);
    Ok(ExtremalInstance {
        host,
        coloring,
        named_sets,
        certificates: vec![
            AbsenceCertificate::ComponentBound {
                color: Color::Red,
                bound: 2 * n,
            },
            AbsenceCertificate::ComponentBound {
                color: Color::Blue,
                bound: 2 * n,
            },
        ],
        claimed_absences: vec![
            (Color::Red, Target::Path(2 * n + 1)),
            (Color::Blue, Target::Path(2 * n + 1)),
        ],
    })
}

/// Host with parts 2n-1, 2n-3, 1, 1.  The first part is v1 plus halves A
/// and B; the second splits into C (n-1 vertices) and D (n-2).  Red takes
/// A-C, B-D, all of x's edges, and y's edges into B and D; blue takes A-D,
/// B-C, v1's edges into the second part, and y's edges into A, C and v1.
/// Red blocks stay at 2n-1 vertices; blue avoids cycles of length exactly
/// 2n even though it has longer odd cycles, which is why the blue claim
/// carries no certificate and is checked by search.
pub fn example7(n: usize) -> Result<ExtremalInstance, ConstructionError> {
    if n < 2 {
        return Err(ConstructionError::SmallN { k: 7, n, min: 2 });
    }
    let sizes = vec![2 * n - 1, 2 * n - 3, 1, 1];
    let host = Arc::new(MultipartiteHost::new(&sizes)?);
    let v1_vertex = 0usize;
    let a: Range<usize> = 1..n;
    let b: Range<usize> = n..2 * n - 1;
    let c: Range<usize> = 2 * n - 1..3 * n - 2;
    let d: Range<usize> = 3 * n - 2..4 * n - 4;
    let x = 4 * n - 4;
    let y = 4 * n - 3;
    let in_a = a.clone();
    let in_b = b.clone();
    let in_c = c.clone();
    let in_d = d.clone();
    let coloring = TwoColoring::from_fn(Arc::clone(&host), move |_, (p, q)| {
        let (u, v) = (p.min(q), p.max(q));
        if u == x || v == x {
            return Color::Red;
        }
        if v == y {
            return if in_b.contains(&u) || in_d.contains(&u) {
                Color::Red
            } else {
                Color::Blue
            };
        }
        if u == v1_vertex {
            return Color::Blue;
        }
        // Remaining edges run between {A,B} and {C,D}.
        let aligned = (in_a.contains(&u) && in_c.contains(&v))
            || (in_b.contains(&u) && in_d.contains(&v));
        if aligned {
            Color::Red
        } else {
            Color::Blue
        }
    });
    let mut named_sets = BTreeMap::new();
    named_sets.insert("V1".to_string(), (0..2 * n - 1).collect());
    named_sets.insert("V2".to_string(), (2 * n - 1..4 * n - 4).collect());
    named_sets.insert("v1".to_string(), vec![v1_vertex]);
    named_sets.insert("A".to_string(), a.collect());
    named_sets.insert("B".to_string(), b.collect());
    named_sets.insert("C".to_string(), c.collect());
    named_sets.insert("D".to_string(), d.collect());
    named_sets.insert("x".to_string(), vec![x]);
    named_sets.insert("y".to_string(), vec![y]);
    Ok(ExtremalInstance {
        host,
        coloring,
        named_sets,
        certificates: vec![AbsenceCertificate::BlockBound {
            color: Color::Red,
            bound: 2 * n - 1,
        }],
        claimed_absences: vec![
            (Color::Red, Target::Cycle(2 * n)),
            (Color::Blue, Target::Cycle(2 * n)),
        ],
    })
}
