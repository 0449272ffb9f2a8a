//! Absence certificates: compact arguments that one color class cannot
//! contain a given structure, checkable in polynomial time.
//!
//! A certificate is supplied, never computed; [`validate`] re-checks its
//! invariant against the coloring and [`implied_absences`] lists what a
//! valid certificate rules out. Validation answers `Ok(false)` for a
//! well-formed certificate whose invariant fails, and an error only for
//! malformed input such as out-of-range vertices.

use thiserror::Error;

use crate::finders::Target;
use crate::graph::{Color, TwoColoring};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CertificateError {
    #[error("certificate names vertex {v}, host has {n} vertices")]
    BadVertex { v: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AbsenceCertificate {
    /// Every edge of `color` has an endpoint in `cover`, and the cover has
    /// at most `bound` vertices. Bounds every matching in that color.
    VertexCover {
        color: Color,
        cover: Vec<usize>,
        bound: usize,
    },
    /// Every component of `color` has at most `bound` vertices.
    ComponentBound { color: Color, bound: usize },
    /// Every block of `color` has at most `bound` vertices. Cycles live
    /// inside one block, so this bounds cycle lengths.
    BlockBound { color: Color, bound: usize },
}

impl AbsenceCertificate {
    pub fn color(&self) -> Color {
        match self {
            AbsenceCertificate::VertexCover { color, .. }
            | AbsenceCertificate::ComponentBound { color, .. }
            | AbsenceCertificate::BlockBound { color, .. } => *color,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            AbsenceCertificate::VertexCover { .. } => "vertex-cover",
            AbsenceCertificate::ComponentBound { .. } => "component-bound",
            AbsenceCertificate::BlockBound { .. } => "block-bound",
        }
    }
}

/// Checks the certificate's invariant against the coloring.
pub fn validate(
    coloring: &TwoColoring,
    cert: &AbsenceCertificate,
) -> Result<bool, CertificateError> {
    let n = coloring.host().vertex_count();
    match cert {
        AbsenceCertificate::VertexCover { color, cover, bound } => {
            for &v in cover {
                if v >= n {
                    return Err(CertificateError::BadVertex { v, n });
                }
            }
            let mut in_cover = vec![false; n];
            let mut size = 0usize;
            for &v in cover {
                if !in_cover[v] {
                    in_cover[v] = true;
                    size += 1;
                }
            }
            if size > *bound {
                return Ok(false);
            }
            let covered = coloring
                .subgraph(*color)
                .edges()
                .all(|(u, v)| in_cover[u] || in_cover[v]);
            Ok(covered)
        }
        AbsenceCertificate::ComponentBound { color, bound } => Ok(coloring
            .subgraph(*color)
            .components()
            .iter()
            .all(|c| c.len() <= *bound)),
        AbsenceCertificate::BlockBound { color, bound } => Ok(coloring
            .subgraph(*color)
            .blocks()
            .iter()
            .all(|b| b.len() <= *bound)),
    }
}

/// Structures a valid certificate rules out in its color, each with the
/// minimal forbidden size. Larger paths and matchings are absent a
/// fortiori; a cycle target is never emitted below length 3.
pub fn implied_absences(cert: &AbsenceCertificate) -> Vec<(Color, Target)> {
    let color = cert.color();
    match cert {
        AbsenceCertificate::VertexCover { bound: k, .. } => vec![
            // a matching needs one cover vertex per edge
            (color, Target::ConnectedMatching(k + 1)),
            (color, Target::Path(2 * k + 2)),
            (color, Target::Path(2 * k + 3)),
            (color, Target::CycleAtLeast((2 * k + 2).max(3))),
        ],
        AbsenceCertificate::ComponentBound { bound: m, .. } => vec![
            (color, Target::Path(m + 1)),
            (color, Target::CycleAtLeast((m + 1).max(3))),
            // a connected matching of j edges spans 2j vertices of one
            // component
            (color, Target::ConnectedMatching(m / 2 + 1)),
        ],
        AbsenceCertificate::BlockBound { bound: b, .. } => {
            vec![(color, Target::CycleAtLeast((b + 1).max(3)))]
        }
    }
}
