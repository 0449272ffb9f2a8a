//! Command-line workbench: generate extremal colorings, check structures,
//! validate certificates, run degree certifiers, evaluate threshold
//! conditions, and exhaustively verify small hosts.
//!
//! Exit codes: 0 positive verdict / success, 1 structure absent or
//! condition failed, 2 usage or input error, 3 search cap exceeded.

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use ramsey_core::certificates::CertificateError;
use ramsey_core::constructions::{example, ConstructionError};
use ramsey_core::finders::{mono_search, SearchError, StructureWitness, Target};
use ramsey_core::frontier::{
    conditions_report, counterexample_search, enumerate_verify, write_csv, EnumerationOptions,
    FrontierError, TargetFamily,
};
use ramsey_core::graph::{Color, GraphError, MultipartiteHost};
use ramsey_core::hamiltonicity::{
    berge_certifier, chvatal_certifier, las_vergnas_certifier, BalancedBipartite, HamError,
    Verdict,
};
use ramsey_core::io::{
    certificate_report, export_dot, parse_instance, serialize_instance, IoError, ParsedInstance,
};

#[derive(Parser)]
#[command(
    name = "ramsey",
    version,
    about = "Workbench for 2-colorings of complete multipartite graphs"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build one of the seven extremal colorings and write it as JSON
    Generate {
        /// Generator number, 1 through 7
        #[arg(long)]
        example: usize,
        /// Half-length parameter of the target structures
        #[arg(long)]
        n: usize,
        /// Part sizes, comma separated; required by generators 1 and 2
        /// (for 2 the first entry is the big part), rejected by the rest
        #[arg(long, value_delimiter = ',')]
        parts: Option<Vec<usize>>,
        /// Output file; stdout when omitted
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Search an instance for a monochromatic structure
    Check {
        file: PathBuf,
        #[arg(long)]
        target: TargetKind,
        /// Structure size: vertex count for paths and cycles, edge count
        /// for connected matchings
        #[arg(long)]
        size: usize,
    },
    /// Validate the certificates embedded in an instance
    Certify { file: PathBuf },
    /// Run a Hamiltonicity degree certifier on one color class
    Ham {
        file: PathBuf,
        #[arg(long)]
        theorem: Theorem,
        /// Surplus parameter for the lasvergnas certifier
        #[arg(long, default_value_t = 0)]
        q: usize,
        /// Restrict to one color; both are tried when omitted
        #[arg(long)]
        color: Option<ColorArg>,
    },
    /// Evaluate the seven threshold conditions for a part-size tuple
    Conditions {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<usize>,
        /// Exit 0/1 by this family's applicability instead of reporting
        #[arg(long)]
        target: Option<FamilyArg>,
    },
    /// Exhaustively scan every coloring of a small host
    Verify {
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<usize>,
        #[arg(long)]
        target: TargetKind,
        #[arg(long)]
        size: usize,
        /// Bitmask subrange A..B to scan
        #[arg(long)]
        range: Option<String>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Skip colorings equivalent under swapping the two colors
        #[arg(long)]
        color_swap: bool,
        /// Skip colorings equivalent under within-part relabelings
        #[arg(long)]
        part_perms: bool,
        /// Refuse scans larger than this many colorings
        #[arg(long)]
        max_colorings: Option<u64>,
        /// Append one CSV record to this file (header written if new)
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Store the first failing coloring here, if any
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Random-restart descent looking for a coloring with no
    /// monochromatic target
    Hunt {
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<usize>,
        #[arg(long)]
        target: TargetKind,
        #[arg(long)]
        size: usize,
        /// Score evaluations to spend
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Store the found coloring here
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Print an instance as DOT
    ExportDot { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetKind {
    Path,
    Cycle,
    CycleMin,
    Cmatching,
}

impl TargetKind {
    fn target(self, size: usize) -> Target {
        match self {
            TargetKind::Path => Target::Path(size),
            TargetKind::Cycle => Target::Cycle(size),
            TargetKind::CycleMin => Target::CycleAtLeast(size),
            TargetKind::Cmatching => Target::ConnectedMatching(size),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    Chvatal,
    Berge,
    Lasvergnas,
}

#[derive(Clone, Copy, ValueEnum)]
enum ColorArg {
    Red,
    Blue,
}

impl From<ColorArg> for Color {
    fn from(c: ColorArg) -> Color {
        match c {
            ColorArg::Red => Color::Red,
            ColorArg::Blue => Color::Blue,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    /// cycle on exactly 2n vertices
    Cycle,
    /// cycle on at least 2n vertices
    CycleMin,
    /// path on 2n vertices
    Path,
    /// path on 2n+1 vertices
    PathOdd,
}

impl From<FamilyArg> for TargetFamily {
    fn from(f: FamilyArg) -> TargetFamily {
        match f {
            FamilyArg::Cycle => TargetFamily::EvenCycle,
            FamilyArg::CycleMin => TargetFamily::LongCycle,
            FamilyArg::Path => TargetFamily::EvenPath,
            FamilyArg::PathOdd => TargetFamily::OddPath,
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    File(#[from] std::io::Error),
    #[error("{0}")]
    Instance(#[from] IoError),
    #[error("{0}")]
    Graph(#[from] GraphError),
    #[error("{0}")]
    Construction(#[from] ConstructionError),
    #[error("{0}")]
    Search(#[from] SearchError),
    #[error("{0}")]
    Certificate(#[from] CertificateError),
    #[error("{0}")]
    Ham(#[from] HamError),
    #[error("{0}")]
    Frontier(#[from] FrontierError),
    #[error("{0}")]
    Csv(#[from] csv::Error),
    #[error("bad range {0:?}, expected A..B")]
    Range(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Search(SearchError::CapExceeded { .. })
            | CliError::Ham(HamError::CapExceeded { .. })
            | CliError::Frontier(
                FrontierError::TooManyColorings { .. }
                | FrontierError::EdgeCountTooLarge { .. }
                | FrontierError::PermGroupTooLarge { .. }
                | FrontierError::Search(SearchError::CapExceeded { .. }),
            ) => 3,
            _ => 2,
        }
    }
}

fn load(path: &PathBuf) -> Result<ParsedInstance, CliError> {
    let text = std::fs::read_to_string(path)?;
    Ok(parse_instance(&text)?)
}

fn witness_line(color: Color, w: &StructureWitness) -> String {
    let color = match color {
        Color::Red => "red",
        Color::Blue => "blue",
    };
    let verts = |vs: &[usize]| {
        vs.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let pairs = |es: &[(usize, usize)]| {
        es.iter()
            .map(|(u, v)| format!("({u},{v})"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    match w {
        StructureWitness::Path(vs) => format!("{color} path: {}", verts(vs)),
        StructureWitness::Cycle(vs) => format!("{color} cycle: {}", verts(vs)),
        StructureWitness::Matching(es) => format!("{color} matching: {}", pairs(es)),
        StructureWitness::ConnectedMatching(es) => {
            format!("{color} connected matching: {}", pairs(es))
        }
    }
}

fn parse_range(text: &str) -> Result<std::ops::Range<u64>, CliError> {
    let bad = || CliError::Range(text.to_string());
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let start: u64 = a.parse().map_err(|_| bad())?;
    let end: u64 = b.parse().map_err(|_| bad())?;
    Ok(start..end)
}

fn store_witness(
    path: &PathBuf,
    host: &Arc<MultipartiteHost>,
    coloring: &ramsey_core::graph::TwoColoring,
) -> Result<(), CliError> {
    let inst = ParsedInstance {
        host: Arc::clone(host),
        coloring: coloring.clone(),
        named_sets: Default::default(),
        certificates: Vec::new(),
    };
    std::fs::write(path, serialize_instance(&inst))?;
    Ok(())
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.cmd {
        Cmd::Generate {
            example: k,
            n,
            parts,
            out,
        } => {
            let inst: ParsedInstance = example(k, n, parts.as_deref())?.into();
            let text = serialize_instance(&inst);
            match out {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(0)
        }
        Cmd::Check { file, target, size } => {
            let inst = load(&file)?;
            let target = target.target(size);
            println!("target: {target}");
            match mono_search(&inst.coloring, target)? {
                Some(found) => {
                    println!("verdict: found {}", witness_line(found.color, &found.witness));
                    Ok(0)
                }
                None => {
                    println!("verdict: absent");
                    Ok(1)
                }
            }
        }
        Cmd::Certify { file } => {
            let inst = load(&file)?;
            let report = certificate_report(&inst);
            let mut bad = 0usize;
            for status in &report {
                let verdict = if status.valid { "valid" } else { "INVALID" };
                let color = match status.color {
                    Color::Red => "red",
                    Color::Blue => "blue",
                };
                println!("certificate {}: {} {} {}", status.index, status.kind, color, verdict);
                for (c, t) in &status.implies {
                    let c = match c {
                        Color::Red => "red",
                        Color::Blue => "blue",
                    };
                    println!("  implies: no {c} {t}");
                }
                bad += usize::from(!status.valid);
            }
            println!("summary: {} certificates, {} invalid", report.len(), bad);
            Ok(u8::from(bad > 0))
        }
        Cmd::Ham {
            file,
            theorem,
            q,
            color,
        } => {
            let inst = load(&file)?;
            let colors: &[Color] = match color {
                Some(c) => match Color::from(c) {
                    Color::Red => &[Color::Red],
                    Color::Blue => &[Color::Blue],
                },
                None => &[Color::Red, Color::Blue],
            };
            let mut any = false;
            for &c in colors {
                let side = BalancedBipartite::from_color(&inst.coloring, c)?;
                let verdict = match theorem {
                    Theorem::Chvatal => chvatal_certifier(&side),
                    Theorem::Berge => berge_certifier(&side),
                    Theorem::Lasvergnas => las_vergnas_certifier(&side, q)?,
                };
                let name = match c {
                    Color::Red => "red",
                    Color::Blue => "blue",
                };
                let text = match verdict {
                    Verdict::Guaranteed => "guaranteed",
                    Verdict::Unknown => "unknown",
                };
                println!("{name}: {text}");
                any |= verdict == Verdict::Guaranteed;
            }
            Ok(u8::from(!any))
        }
        Cmd::Conditions { n, parts, target } => {
            let report = conditions_report(n, &parts)?;
            match target {
                Some(family) => {
                    let family = TargetFamily::from(family);
                    let ok = report.applicable(family);
                    println!(
                        "{family}: {}",
                        if ok { "applicable" } else { "not applicable" }
                    );
                    Ok(u8::from(!ok))
                }
                None => {
                    println!("n: {n}");
                    let parts_text = report
                        .part_sizes
                        .iter()
                        .map(|s| s.to_string())
                        .collect::<Vec<_>>()
                        .join("+");
                    println!("parts: {parts_text}");
                    for i in 1..=7 {
                        let guard = if report.guard_active(i) { "" } else { " (vacuous)" };
                        println!("({i}): {}{guard}", report.condition(i));
                    }
                    for family in TargetFamily::ALL {
                        println!(
                            "{family}: {}",
                            if report.applicable(family) {
                                "applicable"
                            } else {
                                "not applicable"
                            }
                        );
                    }
                    Ok(0)
                }
            }
        }
        Cmd::Verify {
            parts,
            target,
            size,
            range,
            threads,
            color_swap,
            part_perms,
            max_colorings,
            csv,
            witness,
        } => {
            let host = Arc::new(MultipartiteHost::new(&parts)?);
            let target = target.target(size);
            let mut opts = EnumerationOptions {
                threads,
                color_swap,
                part_perms,
                ..Default::default()
            };
            if let Some(text) = range {
                opts.range = Some(parse_range(&text)?);
            }
            if let Some(cap) = max_colorings {
                opts.max_colorings = cap;
            }
            let summary = enumerate_verify(&host, target, &opts)?;
            let parts_text = summary
                .part_sizes
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join("+");
            println!("parts: {parts_text}");
            println!("target: {target}");
            println!("colorings: {}", summary.colorings);
            println!("representatives: {}", summary.representatives);
            println!("failures: {}", summary.failures);
            match summary.first_failure {
                Some(mask) => println!("first-failure: {mask}"),
                None => println!("first-failure: none"),
            }
            let witness_name = match (&witness, &summary.witness) {
                (Some(path), Some(coloring)) => {
                    store_witness(path, &host, coloring)?;
                    path.file_name()
                        .map(|s| s.to_string_lossy().into_owned())
                        .unwrap_or_default()
                }
                _ => String::new(),
            };
            if let Some(path) = csv {
                let fresh = !path.exists();
                let file = std::fs::OpenOptions::new()
                    .create(true)
                    .append(true)
                    .open(&path)?;
                if fresh {
                    write_csv(&[(summary.clone(), witness_name)], file)?;
                } else {
                    // append record only; header already present
                    let mut w = csv::WriterBuilder::new().from_writer(file);
                    w.write_record(summary.csv_record(&witness_name))?;
                    w.flush()?;
                }
            }
            println!("wall-ms: {}", summary.wall_ms);
            Ok(u8::from(summary.failures > 0))
        }
        Cmd::Hunt {
            parts,
            target,
            size,
            budget,
            seed,
            witness,
        } => {
            let host = Arc::new(MultipartiteHost::new(&parts)?);
            let target = target.target(size);
            println!("target: {target}");
            match counterexample_search(&host, target, budget, seed)? {
                Some(coloring) => {
                    println!("verdict: found coloring with no monochromatic {target}");
                    println!("bits: {}", coloring.bit_string());
                    if let Some(path) = witness {
                        store_witness(&path, &host, &coloring)?;
                    }
                    Ok(0)
                }
                None => {
                    println!("verdict: none found within budget");
                    Ok(1)
                }
            }
        }
        Cmd::ExportDot { file } => {
            let inst = load(&file)?;
            print!("{}", export_dot(&inst));
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
