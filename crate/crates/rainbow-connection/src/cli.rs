//! Command-line front end: construction, coloring, verification, exact
//! solving, lower-bound audits, DOT export, and the grid sweep that ties
//! them together.
//!
//! Exit codes: 0 success (verification passed / refutation produced),
//! 1 verification failed, 2 solver size limit, 64 unreadable or
//! non-canonical input file, 65 precondition violation, 70 internal
//! audit inconsistency, 74 I/O failure.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::audit::{audit_lower_bound, pigeonhole_margins};
use crate::coloring::{random_coloring, rc_coloring, src_coloring, EdgeColoring};
use crate::dot::to_dot;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::{rc_exact_with_limit, src_exact_with_limit, DEFAULT_EDGE_LIMIT};
use crate::verify::{exists_rainbow_geodesic, is_rainbow_connected, is_strong_rainbow_connected};
use crate::witness::{build_witness, WitnessGraph, WitnessParams};

#[derive(Parser, Debug)]
#[command(
    name = "rainbow-connection",
    version,
    about = "Witness graphs, explicit colorings, exact solving, and lower-bound audits for rainbow connection numbers"
)]
pub struct CommandConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build the witness graph for targets rc = a, src = b and write it as
    /// witness JSON.
    Construct {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Generate one of the two explicit coloring schemes for a witness
    /// file.
    Color {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        scheme: Scheme,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check a coloring against a graph; exit 0 on pass, 1 on fail. The
    /// report is written either way.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long)]
        report: PathBuf,
    },
    /// Compute an exact connection number by exhaustive search.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        k_max: Option<usize>,
        /// Edge budget override for the exhaustive search.
        #[arg(long, default_value_t = DEFAULT_EDGE_LIMIT)]
        max_edges: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the lower-bound audit against a candidate coloring of the
    /// witness graph for (a, b).
    Audit {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the full grid acceptance: construction, both schemes, both
    /// verifications, pigeonhole margins, and sampled audits per point.
    Sweep {
        #[arg(long)]
        a_max: usize,
        #[arg(long)]
        b_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long)]
        report: PathBuf,
    },
    /// Re-export a graph as canonical JSON or as Graphviz DOT, optionally
    /// with edge colors.
    Export {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Scheme {
    Rc,
    Src,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum ModeArg {
    Rainbow,
    Strong,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum KindArg {
    Rc,
    Src,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Format {
    Json,
    Dot,
}

/// Executes one subcommand and returns the process exit code.
pub fn run(config: CommandConfig) -> i32 {
    match execute(config.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Json(_) | Error::MalformedGraph(_) | Error::Disconnected => 64,
        Error::InvalidParameter(_)
        | Error::ColoringMismatch { .. }
        | Error::Precondition(_)
        | Error::BoundTooSmall { .. } => 65,
        Error::SizeLimit { .. } => 2,
        Error::AuditInconsistency(_) | Error::ArithmeticInconsistency(_) => 70,
        Error::Io(_) => 74,
    }
}

/// Writes through a sibling temp file and renames, so readers never see a
/// partial file.
fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

fn read_file(path: &Path) -> Result<String> {
    Ok(fs::read_to_string(path)?)
}

fn load_graph(path: &Path) -> Result<Graph> {
    Graph::from_json_str(&read_file(path)?)
}

fn load_witness(path: &Path) -> Result<WitnessGraph> {
    WitnessGraph::from_json_str(&read_file(path)?)
}

fn load_coloring(path: &Path) -> Result<EdgeColoring> {
    EdgeColoring::from_json_str(&read_file(path)?)
}

fn execute(command: Command) -> Result<i32> {
    match command {
        Command::Construct { a, b, out } => {
            let wg = build_witness(WitnessParams::new(a, b)?);
            write_atomic(&out, &wg.to_json_string())?;
            println!(
                "witness for (a={a}, b={b}): {} vertices, {} edges, cycle length {}",
                wg.graph().vertex_count(),
                wg.graph().edge_count(),
                wg.cycle_len()
            );
            Ok(0)
        }
        Command::Color { graph, scheme, out } => {
            let wg = load_witness(&graph)?;
            let c = match scheme {
                Scheme::Rc => rc_coloring(&wg),
                Scheme::Src => src_coloring(&wg),
            };
            write_atomic(&out, &c.to_json_string())?;
            println!(
                "{} scheme: palette {}, {} colors used",
                match scheme {
                    Scheme::Rc => "rainbow",
                    Scheme::Src => "strong rainbow",
                },
                c.palette_size(),
                c.used_color_count()
            );
            Ok(0)
        }
        Command::Verify {
            graph,
            coloring,
            mode,
            report,
        } => {
            let g = load_graph(&graph)?;
            let c = load_coloring(&coloring)?;
            let result = match mode {
                ModeArg::Rainbow => is_rainbow_connected(&g, &c)?,
                ModeArg::Strong => is_strong_rainbow_connected(&g, &c)?,
            };
            write_atomic(&report, &result.to_json_string())?;
            if result.passed {
                println!("pass: all {} pairs connected", result.checked_pairs);
                Ok(0)
            } else {
                let (u, v) = result.violating_pair.expect("failed report names a pair");
                println!("fail: pair ({u}, {v}) after {} pairs", result.checked_pairs);
                Ok(1)
            }
        }
        Command::Solve {
            graph,
            kind,
            k_max,
            max_edges,
            out,
        } => {
            let g = load_graph(&graph)?;
            let result = match kind {
                KindArg::Rc => rc_exact_with_limit(&g, k_max, max_edges)?,
                KindArg::Src => src_exact_with_limit(&g, k_max, max_edges)?,
            };
            write_atomic(&out, &result.to_json_string())?;
            println!(
                "{}(G) = {} ({} colorings tested, lower bound {})",
                result.kind.as_str(),
                result.value,
                result.colorings_tested,
                result.lower_bound_used
            );
            Ok(0)
        }
        Command::Audit {
            a,
            b,
            coloring,
            out,
        } => {
            let wg = build_witness(WitnessParams::new(a, b)?);
            let c = load_coloring(&coloring)?;
            let outcome = audit_lower_bound(&wg, &c)?;
            write_atomic(&out, &outcome.to_json_string())?;
            let (u, v) = outcome.refuting_pair();
            println!("refuted: pair ({u}, {v}) has no rainbow geodesic");
            Ok(0)
        }
        Command::Sweep {
            a_max,
            b_max,
            seed,
            samples,
            report,
        } => run_sweep(a_max, b_max, seed, samples, &report),
        Command::Export {
            graph,
            coloring,
            format,
            out,
        } => {
            let g = load_graph(&graph)?;
            let c = coloring.as_deref().map(load_coloring).transpose()?;
            let contents = match format {
                Format::Dot => to_dot(&g, c.as_ref())?,
                Format::Json => {
                    if let Some(c) = &c {
                        c.check_binding(&g)?;
                    }
                    g.to_json_string()
                }
            };
            write_atomic(&out, &contents)?;
            Ok(0)
        }
    }
}

#[derive(Serialize)]
struct SweepPoint {
    a: usize,
    b: usize,
    cycle_n: usize,
    vertices: usize,
    edges: usize,
    diameter: usize,
    diameter_ok: bool,
    rc_upper_ok: bool,
    src_upper_ok: bool,
    margins: (usize, usize),
    audits_refuted: usize,
    audit_ok: bool,
    passed: bool,
}

#[derive(Serialize)]
struct SweepReport {
    a_max: usize,
    b_max: usize,
    seed: u64,
    samples: usize,
    points: Vec<SweepPoint>,
    passed: bool,
}

/// One grid point of the sweep: the two scheme certificates, the diameter
/// bound, the pigeonhole margins, and `samples` seeded audits.
fn sweep_point(a: usize, b: usize, seed: u64, samples: usize) -> Result<SweepPoint> {
    let params = WitnessParams::new(a, b)?;
    let wg = build_witness(params);
    let g = wg.graph();

    let rc = rc_coloring(&wg);
    let rc_upper_ok = is_rainbow_connected(g, &rc)?.passed && rc.used_color_count() == a;
    let src = src_coloring(&wg);
    let src_upper_ok = is_strong_rainbow_connected(g, &src)?.passed && src.used_color_count() == b;

    let diameter = g.diameter();
    let margins = pigeonhole_margins(params)?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((a as u64) << 32) ^ ((b as u64) << 16));
    let mut audits_refuted = 0usize;
    for _ in 0..samples {
        let c = random_coloring(g.edge_count(), b - 1, &mut rng);
        let outcome = audit_lower_bound(&wg, &c)?;
        let (u, v) = outcome.refuting_pair();
        if exists_rainbow_geodesic(g, &c, u, v)?.is_some() {
            return Err(Error::AuditInconsistency(format!(
                "sweep pair ({u}, {v}) has a rainbow geodesic at (a={a}, b={b})"
            )));
        }
        audits_refuted += 1;
    }

    let diameter_ok = diameter == a;
    let audit_ok = audits_refuted == samples;
    Ok(SweepPoint {
        a,
        b,
        cycle_n: wg.cycle_len(),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        diameter,
        diameter_ok,
        rc_upper_ok,
        src_upper_ok,
        margins,
        audits_refuted,
        audit_ok,
        passed: diameter_ok && rc_upper_ok && src_upper_ok && audit_ok,
    })
}

fn run_sweep(a_max: usize, b_max: usize, seed: u64, samples: usize, report: &Path) -> Result<i32> {
    if a_max < 3 || b_max < a_max {
        return Err(Error::InvalidParameter(format!(
            "sweep grid needs 3 <= a-max <= b-max, got a-max={a_max}, b-max={b_max}"
        )));
    }
    let mut points = Vec::new();
    for a in 3..=a_max {
        for b in a..=b_max {
            let point = sweep_point(a, b, seed, samples)?;
            println!(
                "(a={a}, b={b}): diameter {} {}, rainbow scheme {}, strong scheme {}, audits {}/{}",
                point.diameter,
                if point.diameter_ok { "ok" } else { "MISMATCH" },
                if point.rc_upper_ok { "ok" } else { "FAIL" },
                if point.src_upper_ok { "ok" } else { "FAIL" },
                point.audits_refuted,
                samples
            );
            points.push(point);
        }
    }
    let passed = points.iter().all(|p| p.passed);
    let sweep = SweepReport {
        a_max,
        b_max,
        seed,
        samples,
        points,
        passed,
    };
    let mut contents = serde_json::to_string(&sweep)?;
    contents.push('\n');
    write_atomic(report, &contents)?;
    println!("sweep {}", if passed { "passed" } else { "FAILED" });
    Ok(if passed { 0 } else { 1 })
}
