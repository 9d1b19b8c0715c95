//! Toolkit for rainbow connection numbers of edge-colored graphs.
//!
//! An edge coloring makes a connected graph *rainbow connected* when every
//! vertex pair is joined by a path with pairwise-distinct edge colors, and
//! *strongly rainbow connected* when every pair is joined by such a
//! shortest path. The minimum palette sizes are the rainbow connection
//! number `rc(G)` and the strong rainbow connection number `src(G)`, with
//! `diam(G) <= rc(G) <= src(G)` for every connected graph.
//!
//! The crate provides:
//!
//! - [`graph`] — canonical edge-list graphs, standard builders, BFS,
//!   diameter, and shortest-path DAGs;
//! - [`witness`] — for any targets `3 <= a <= b`, a labeled witness graph
//!   with `rc = a` and `src = b` (a cycle of length `3b(b-a+2)`, two hubs
//!   joined to every cycle vertex, and a pendant path on one hub);
//! - [`coloring`] — edge colorings plus the two explicit schemes that
//!   certify the witness upper bounds;
//! - [`verify`] — decision procedures for both predicates, returning
//!   witness paths or the first violating pair;
//! - [`solver`] — exact `rc`/`src` for small graphs by exhaustive search
//!   over colorings, one representative per color permutation;
//! - [`audit`] — a mechanized replay of the matching lower bound: any
//!   coloring of the witness graph with fewer than `b` colors is refuted
//!   by a concrete pair with no rainbow geodesic;
//! - [`dot`] — Graphviz export;
//! - [`cli`] — the `rainbow-connection` binary's subcommands.
//!
//! Each major capability has a runnable example under `examples/`:
//!
//! ```bash
//! cargo run --example construct_witness
//! cargo run --example explicit_colorings
//! cargo run --example verify_colorings
//! cargo run --example exact_small_graphs
//! cargo run --example audit_refutation
//! cargo run --example conjecture_sweep
//! cargo run --example export_dot
//! ```

pub mod audit;
pub mod cli;
pub mod coloring;
pub mod dot;
pub mod error;
pub mod graph;
pub mod solver;
pub mod verify;
pub mod witness;

pub use audit::{audit_lower_bound, pigeonhole_margins, separated_pair, AuditOutcome, AuditTrace};
pub use coloring::{random_coloring, rc_coloring, src_coloring, EdgeColoring};
pub use error::{Error, Result};
pub use graph::{DistanceTable, GeodesicDag, Graph};
pub use solver::{bounds, canonical_colorings, rc_exact, src_exact, SolveKind, SolveResult};
pub use verify::{
    exists_rainbow_geodesic, exists_rainbow_path, is_rainbow_connected,
    is_strong_rainbow_connected, Mode, VerificationReport,
};
pub use witness::{build_small_witness, build_witness, WitnessGraph, WitnessParams};
