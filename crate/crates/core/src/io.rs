//! Instance files: a small JSON format carrying a host, a coloring, and
//! optional named sets and certificates, plus DOT export for figures.
//!
//! The bitstring encoding is canonical: serialization always emits it,
//! and parse(serialize(x)) reproduces x exactly. The edge-list encoding
//! is accepted on input for hand-written fixtures.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certificates::{implied_absences, validate, AbsenceCertificate};
use crate::constructions::ExtremalInstance;
use crate::finders::Target;
use crate::graph::{Color, GraphError, MultipartiteHost, TwoColoring};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("instance is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported format version {found}, this build reads {FORMAT_VERSION}")]
    Format { found: u32 },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("edge list colors {got} edges, host has {expected}")]
    EdgeCount { expected: usize, got: usize },
    #[error("edge ({u}, {v}) is colored twice")]
    DuplicateEdge { u: usize, v: usize },
    #[error("unknown color {text:?}; use \"red\" or \"blue\"")]
    UnknownColor { text: String },
    #[error("named set {label:?} contains vertex {v}, host has {n} vertices")]
    SetVertex { label: String, v: usize, n: usize },
    #[error("certificate {index} names vertex {v}, host has {n} vertices")]
    CertificateVertex { index: usize, v: usize, n: usize },
}

impl IoError {
    /// Stable machine-readable tag, one per failure class.
    pub fn code(&self) -> &'static str {
        match self {
            IoError::Json(_) => "bad-json",
            IoError::Format { .. } => "bad-format",
            IoError::Graph(GraphError::BitLength { .. }) => "length-mismatch",
            IoError::Graph(GraphError::BadBitChar { .. }) => "bad-bit",
            IoError::Graph(
                GraphError::NotAnEdge { .. }
                | GraphError::BadVertex { .. }
                | GraphError::LoopEdge { .. },
            ) => "bad-edge",
            IoError::Graph(_) => "bad-host",
            IoError::EdgeCount { .. } => "length-mismatch",
            IoError::DuplicateEdge { .. } => "duplicate-edge",
            IoError::UnknownColor { .. } => "unknown-color",
            IoError::SetVertex { .. } => "named-set-vertex",
            IoError::CertificateVertex { .. } => "certificate-vertex",
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct InstanceFile {
    format: u32,
    part_sizes: Vec<usize>,
    coloring: ColoringRepr,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    named_sets: BTreeMap<String, Vec<usize>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    certificates: Vec<CertificateRepr>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum ColoringRepr {
    Bits(String),
    Edges(Vec<EdgeColor>),
}

#[derive(Debug, Serialize, Deserialize)]
struct EdgeColor {
    u: usize,
    v: usize,
    color: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum CertificateRepr {
    VertexCover {
        color: String,
        cover: Vec<usize>,
        bound: usize,
    },
    ComponentBound {
        color: String,
        bound: usize,
    },
    BlockBound {
        color: String,
        bound: usize,
    },
}

fn color_name(c: Color) -> &'static str {
    match c {
        Color::Red => "red",
        Color::Blue => "blue",
    }
}

fn parse_color(text: &str) -> Result<Color, IoError> {
    match text {
        "red" => Ok(Color::Red),
        "blue" => Ok(Color::Blue),
        _ => Err(IoError::UnknownColor {
            text: text.to_string(),
        }),
    }
}

/// A fully validated in-memory instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedInstance {
    pub host: Arc<MultipartiteHost>,
    pub coloring: TwoColoring,
    pub named_sets: BTreeMap<String, Vec<usize>>,
    pub certificates: Vec<AbsenceCertificate>,
}

impl From<ExtremalInstance> for ParsedInstance {
    fn from(inst: ExtremalInstance) -> ParsedInstance {
        ParsedInstance {
            host: inst.host,
            coloring: inst.coloring,
            named_sets: inst.named_sets,
            certificates: inst.certificates,
        }
    }
}

pub fn parse_instance(text: &str) -> Result<ParsedInstance, IoError> {
    let file: InstanceFile = serde_json::from_str(text)?;
    if file.format != FORMAT_VERSION {
        return Err(IoError::Format { found: file.format });
    }
    let host = Arc::new(MultipartiteHost::new(&file.part_sizes)?);
    let n = host.vertex_count();
    let coloring = match &file.coloring {
        ColoringRepr::Bits(bits) => TwoColoring::from_bit_string(Arc::clone(&host), bits)?,
        ColoringRepr::Edges(list) => {
            let m = host.edge_count();
            if list.len() != m {
                return Err(IoError::EdgeCount {
                    expected: m,
                    got: list.len(),
                });
            }
            let mut seen = vec![false; m];
            let mut coloring = TwoColoring::uniform(Arc::clone(&host), Color::Red);
            for e in list {
                let i = host.edge_index(e.u, e.v)?;
                if seen[i] {
                    return Err(IoError::DuplicateEdge { u: e.u, v: e.v });
                }
                seen[i] = true;
                coloring.set_color_index(i, parse_color(&e.color)?);
            }
            // list.len() == m and no duplicates, so every edge was seen
            coloring
        }
    };
    for (label, verts) in &file.named_sets {
        for &v in verts {
            if v >= n {
                return Err(IoError::SetVertex {
                    label: label.clone(),
                    v,
                    n,
                });
            }
        }
    }
    let mut certificates = Vec::with_capacity(file.certificates.len());
    for (index, repr) in file.certificates.iter().enumerate() {
        let cert = match repr {
            CertificateRepr::VertexCover { color, cover, bound } => {
                if let Some(&v) = cover.iter().find(|&&v| v >= n) {
                    return Err(IoError::CertificateVertex { index, v, n });
                }
                AbsenceCertificate::VertexCover {
                    color: parse_color(color)?,
                    cover: cover.clone(),
                    bound: *bound,
                }
            }
            CertificateRepr::ComponentBound { color, bound } => {
                AbsenceCertificate::ComponentBound {
                    color: parse_color(color)?,
                    bound: *bound,
                }
            }
            CertificateRepr::BlockBound { color, bound } => AbsenceCertificate::BlockBound {
                color: parse_color(color)?,
                bound: *bound,
            },
        };
        certificates.push(cert);
    }
    Ok(ParsedInstance {
        host,
        coloring,
        named_sets: file.named_sets,
        certificates,
    })
}

/// Canonical serialization: bitstring coloring, pretty JSON, trailing
/// newline. Byte-for-byte deterministic for a given instance.
pub fn serialize_instance(inst: &ParsedInstance) -> String {
    let certificates = inst
        .certificates
        .iter()
        .map(|c| match c {
            AbsenceCertificate::VertexCover { color, cover, bound } => {
                CertificateRepr::VertexCover {
                    color: color_name(*color).to_string(),
                    cover: cover.clone(),
                    bound: *bound,
                }
            }
            AbsenceCertificate::ComponentBound { color, bound } => {
                CertificateRepr::ComponentBound {
                    color: color_name(*color).to_string(),
                    bound: *bound,
                }
            }
            AbsenceCertificate::BlockBound { color, bound } => CertificateRepr::BlockBound {
                color: color_name(*color).to_string(),
                bound: *bound,
            },
        })
        .collect();
    let file = InstanceFile {
        format: FORMAT_VERSION,
        part_sizes: inst.host.part_sizes().to_vec(),
        coloring: ColoringRepr::Bits(inst.coloring.bit_string()),
        named_sets: inst.named_sets.clone(),
        certificates,
    };
    let mut text = serde_json::to_string_pretty(&file).expect("plain data serializes");
    text.push('\n');
    text
}

/// Validation status of one embedded certificate. An invalid certificate
/// never blocks loading; it only loses its implications.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateStatus {
    pub index: usize,
    pub kind: &'static str,
    pub color: Color,
    pub valid: bool,
    pub implies: Vec<(Color, Target)>,
}

pub fn certificate_report(inst: &ParsedInstance) -> Vec<CertificateStatus> {
    inst.certificates
        .iter()
        .enumerate()
        .map(|(index, cert)| {
            // parse already bounds-checked vertices, so validation errors
            // cannot occur for parsed instances; treat any as invalid
            let valid = validate(&inst.coloring, cert).unwrap_or(false);
            CertificateStatus {
                index,
                kind: cert.kind_name(),
                color: cert.color(),
                valid,
                implies: if valid { implied_absences(cert) } else { Vec::new() },
            }
        })
        .collect()
}

/// DOT rendering: one cluster per part, edges tinted by color, named
/// sets as comments. Output is deterministic.
pub fn export_dot(inst: &ParsedInstance) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    out.push_str("graph coloring {\n");
    out.push_str("  node [shape=circle, fontsize=10];\n");
    for p in 0..inst.host.part_count() {
        let range = inst.host.part_vertices(p);
        writeln!(
            out,
            "  subgraph cluster_part{p} {{\n    label=\"part {p} ({})\";",
            range.len()
        )
        .unwrap();
        let ids: Vec<String> = range.map(|v| v.to_string()).collect();
        writeln!(out, "    {};", ids.join("; ")).unwrap();
        out.push_str("  }\n");
    }
    for (label, verts) in &inst.named_sets {
        let ids: Vec<String> = verts.iter().map(|v| v.to_string()).collect();
        writeln!(out, "  /* {label} = {{{}}} */", ids.join(", ")).unwrap();
    }
    for ((u, v), color) in inst.coloring.edge_colors() {
        writeln!(out, "  {u} -- {v} [color={}];", color_name(color)).unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::example;

    fn tiny() -> ParsedInstance {
        let host = Arc::new(MultipartiteHost::new(&[2, 1]).unwrap());
        let coloring = TwoColoring::from_bit_string(Arc::clone(&host), "01").unwrap();
        let mut named_sets = BTreeMap::new();
        named_sets.insert("anchor".to_string(), vec![2]);
        ParsedInstance {
            host,
            coloring,
            named_sets,
            certificates: vec![AbsenceCertificate::ComponentBound {
                color: Color::Red,
                bound: 2,
            }],
        }
    }

    #[test]
    fn round_trip_is_identity_on_generator_output() {
        for k in 1..=7 {
            let inst: ParsedInstance = match k {
                1 => example(1, 3, Some(&[5, 2])),
                2 => example(2, 3, Some(&[5])),
                _ => example(k, 3, None),
            }
            .unwrap()
            .into();
            let text = serialize_instance(&inst);
            let back = parse_instance(&text).unwrap();
            assert_eq!(inst, back, "generator {k}");
            // canonical form is a fixed point
            assert_eq!(text, serialize_instance(&back));
        }
    }

    #[test]
    fn edge_list_form_parses_to_the_same_instance() {
        let text = r#"{
            "format": 1,
            "part_sizes": [2, 1],
            "coloring": [
                {"u": 0, "v": 2, "color": "red"},
                {"u": 1, "v": 2, "color": "blue"}
            ]
        }"#;
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst.coloring.bit_string(), "01");
        assert!(inst.named_sets.is_empty() && inst.certificates.is_empty());
    }

    #[test]
    fn error_codes_are_distinct_and_stable() {
        let cases = [
            (r#"{"format": 2, "part_sizes": [2,1], "coloring": "01"}"#, "bad-format"),
            (r#"{"format": 1, "part_sizes": [2,1], "coloring": "0"}"#, "length-mismatch"),
            (r#"{"format": 1, "part_sizes": [2,1], "coloring": "0x"}"#, "bad-bit"),
            (r#"{"format": 1, "part_sizes": [2], "coloring": ""}"#, "bad-host"),
            (
                r#"{"format": 1, "part_sizes": [2,1], "coloring": [
                    {"u": 0, "v": 1, "color": "red"},
                    {"u": 1, "v": 2, "color": "blue"}]}"#,
                "bad-edge",
            ),
            (
                r#"{"format": 1, "part_sizes": [2,1], "coloring": [
                    {"u": 0, "v": 2, "color": "red"},
                    {"u": 0, "v": 2, "color": "blue"}]}"#,
                "duplicate-edge",
            ),
            (
                r#"{"format": 1, "part_sizes": [2,1], "coloring": [
                    {"u": 0, "v": 2, "color": "red"},
                    {"u": 1, "v": 2, "color": "green"}]}"#,
                "unknown-color",
            ),
            (
                r#"{"format": 1, "part_sizes": [2,1], "coloring": "01",
                    "named_sets": {"s": [9]}}"#,
                "named-set-vertex",
            ),
            (
                r#"{"format": 1, "part_sizes": [2,1], "coloring": "01",
                    "certificates": [{"kind": "vertex_cover", "color": "red",
                                      "cover": [7], "bound": 1}]}"#,
                "certificate-vertex",
            ),
            (r#"{"format": 1"#, "bad-json"),
        ];
        for (text, code) in cases {
            let err = parse_instance(text).unwrap_err();
            assert_eq!(err.code(), code, "{err}");
        }
        // edge list shorter than the host's edge set
        let err = parse_instance(
            r#"{"format": 1, "part_sizes": [2,1],
                "coloring": [{"u": 0, "v": 2, "color": "red"}]}"#,
        )
        .unwrap_err();
        assert_eq!(err.code(), "length-mismatch");
    }

    #[test]
    fn broken_certificate_loads_but_is_flagged() {
        // bound 0 cannot cover the red edge at vertex 0
        let text = r#"{
            "format": 1,
            "part_sizes": [2, 1],
            "coloring": "01",
            "certificates": [
                {"kind": "vertex_cover", "color": "red", "cover": [], "bound": 0},
                {"kind": "component_bound", "color": "red", "bound": 2}
            ]
        }"#;
        let inst = parse_instance(text).unwrap();
        let report = certificate_report(&inst);
        assert_eq!(report.len(), 2);
        assert!(!report[0].valid);
        assert!(report[0].implies.is_empty());
        assert!(report[1].valid);
        assert!(report[1]
            .implies
            .contains(&(Color::Red, Target::Path(3))));
    }

    #[test]
    fn serialization_is_canonical_and_deterministic() {
        let inst = tiny();
        let a = serialize_instance(&inst);
        let b = serialize_instance(&inst);
        assert_eq!(a, b);
        assert!(a.contains("\"coloring\": \"01\""));
        assert!(a.ends_with('\n'));
        assert_eq!(parse_instance(&a).unwrap(), inst);
    }

    #[test]
    fn dot_export_golden() {
        let expected = "graph coloring {\n  node [shape=circle, fontsize=10];\n  subgraph cluster_part0 {\n    label=\"part 0 (2)\";\n    0; 1;\n  }\n  subgraph cluster_part1 {\n    label=\"part 1 (1)\";\n    2;\n  }\n  /* anchor = {2} */\n  0 -- 2 [color=red];\n  1 -- 2 [color=blue];\n}\n";
        assert_eq!(export_dot(&tiny()), expected);
    }

    #[test]
    fn dot_export_reflects_structure() {
        // the split generator at n=3 with a third spare part
        let inst: ParsedInstance = example(1, 3, Some(&[3, 3, 1])).unwrap().into();
        let dot = export_dot(&inst);
        assert!(dot.contains("subgraph cluster_part2"));
        assert!(dot.contains("/* U1 = {0, 1, 2, 3, 4} */"));
        assert!(dot.contains("/* U2 = {5, 6} */"));

        let host = Arc::new(MultipartiteHost::new(&[2, 2]).unwrap());
        let all_red = ParsedInstance {
            coloring: TwoColoring::uniform(Arc::clone(&host), Color::Red),
            host,
            named_sets: BTreeMap::new(),
            certificates: Vec::new(),
        };
        let dot = export_dot(&all_red);
        assert_eq!(dot.matches("[color=red]").count(), 4);
        assert_eq!(dot.matches("[color=blue]").count(), 0);
    }
}
