//! Deciding whether an edge-colored graph is rainbow connected or strongly
//! rainbow connected, with witness paths on success and the
//! lexicographically first violating pair on failure.
//!
//! The rainbow-path search runs over (vertex, used-color-set) states: each
//! step must consume a fresh color, so walks are bounded by the number of
//! used colors, and any rainbow walk contains a rainbow path (dropping a
//! closed loop only removes colors). Failed states are memoized per
//! source. The geodesic search is restricted to the shortest-path DAG.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which predicate a report belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Mode {
    #[serde(rename = "rainbow")]
    Rainbow,
    #[serde(rename = "strong")]
    StrongRainbow,
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::Rainbow => "rainbow",
            Mode::StrongRainbow => "strong",
        }
    }
}

/// Outcome of a full pair-by-pair check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub mode: Mode,
    pub passed: bool,
    /// Lexicographically first failing pair, absent iff `passed`.
    pub violating_pair: Option<(usize, usize)>,
    /// Pairs examined: all `C(n, 2)` of them on success, the prefix up to
    /// and including the violating pair on failure.
    pub checked_pairs: usize,
    /// One rainbow path (or geodesic) per pair, collected only by the
    /// `*_with_paths` entry points.
    pub witness_paths: Option<BTreeMap<(usize, usize), Vec<usize>>>,
}

impl VerificationReport {
    /// The report interchange format:
    /// `{"mode", "passed", "violating_pair", "checked_pairs"}`.
    pub fn to_json_string(&self) -> String {
        #[derive(Serialize)]
        struct ReportFile<'a> {
            mode: &'a str,
            passed: bool,
            violating_pair: Option<(usize, usize)>,
            checked_pairs: usize,
        }
        let file = ReportFile {
            mode: self.mode.as_str(),
            passed: self.passed,
            violating_pair: self.violating_pair,
            checked_pairs: self.checked_pairs,
        };
        let mut s = serde_json::to_string(&file).expect("report serialization cannot fail");
        s.push('\n');
        s
    }
}

fn check_pair_preconditions(g: &Graph, c: &EdgeColoring, u: usize, v: usize) -> Result<()> {
    c.check_binding(g)?;
    let n = g.vertex_count();
    if u >= n || v >= n {
        return Err(Error::InvalidParameter(format!(
            "vertex pair ({u}, {v}) is outside 0..{n}"
        )));
    }
    if u == v {
        return Err(Error::InvalidParameter(
            "rainbow path endpoints must be distinct".into(),
        ));
    }
    Ok(())
}

/// Searches for a path from `u` to `v` whose edge colors are pairwise
/// distinct. Returns the vertex sequence of one such path if any exists.
pub fn exists_rainbow_path(
    g: &Graph,
    c: &EdgeColoring,
    u: usize,
    v: usize,
) -> Result<Option<Vec<usize>>> {
    check_pair_preconditions(g, c, u, v)?;
    Ok(rainbow_path_search(g, c, u, v))
}

fn rainbow_path_search(g: &Graph, c: &EdgeColoring, u: usize, v: usize) -> Option<Vec<usize>> {
    // Dense-rank the used colors so they fit a bitmask.
    let used: Vec<usize> = c.used_colors().into_iter().collect();
    if used.len() <= 128 {
        let mut rank = vec![usize::MAX; c.palette_size() + 1];
        for (i, &col) in used.iter().enumerate() {
            rank[col] = i;
        }
        let mut failed: HashSet<(usize, u128)> = HashSet::new();
        let mut walk = vec![u];
        if walk_search(g, c, &rank, v, u, 0u128, &mut walk, &mut failed) {
            return Some(erase_loops(&walk));
        }
        None
    } else {
        // Palettes beyond the mask width fall back to exhaustive search
        // over simple paths; correctness does not depend on memoization.
        let mut on_path = vec![false; g.vertex_count()];
        on_path[u] = true;
        let mut used_color = vec![false; c.palette_size() + 1];
        let mut path = vec![u];
        if simple_path_search(g, c, v, &mut path, &mut on_path, &mut used_color) {
            return Some(path);
        }
        None
    }
}

/// DFS over walks that consume a fresh color per step. A rainbow walk
/// yields a rainbow path after loop erasure, and (vertex, colors) states
/// fully determine reachability, so failed states can be cached.
#[allow(clippy::too_many_arguments)]
fn walk_search(
    g: &Graph,
    c: &EdgeColoring,
    rank: &[usize],
    target: usize,
    at: usize,
    mask: u128,
    walk: &mut Vec<usize>,
    failed: &mut HashSet<(usize, u128)>,
) -> bool {
    if at == target {
        return true;
    }
    if failed.contains(&(at, mask)) {
        return false;
    }
    for &y in g.neighbors(at) {
        let col = c.color(g.edge_index(at, y).expect("neighbor edge exists"));
        let bit = 1u128 << rank[col];
        if mask & bit != 0 {
            continue;
        }
        walk.push(y);
        if walk_search(g, c, rank, target, y, mask | bit, walk, failed) {
            return true;
        }
        walk.pop();
    }
    failed.insert((at, mask));
    false
}

fn simple_path_search(
    g: &Graph,
    c: &EdgeColoring,
    target: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    used_color: &mut [bool],
) -> bool {
    let at = *path.last().unwrap();
    if at == target {
        return true;
    }
    for &y in g.neighbors(at) {
        if on_path[y] {
            continue;
        }
        let col = c.color(g.edge_index(at, y).expect("neighbor edge exists"));
        if used_color[col] {
            continue;
        }
        on_path[y] = true;
        used_color[col] = true;
        path.push(y);
        if simple_path_search(g, c, target, path, on_path, used_color) {
            return true;
        }
        path.pop();
        used_color[col] = false;
        on_path[y] = false;
    }
    false
}

/// Cuts closed loops out of a walk, leaving a simple path on a subset of
/// the walk's edges (and therefore a subset of its colors).
fn erase_loops(walk: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::with_capacity(walk.len());
    for &x in walk {
        if let Some(i) = out.iter().position(|&y| y == x) {
            out.truncate(i);
        }
        out.push(x);
    }
    out
}

/// Searches for a shortest `u`-`v` path whose colors are pairwise
/// distinct, walking the geodesic DAG from `u` only.
pub fn exists_rainbow_geodesic(
    g: &Graph,
    c: &EdgeColoring,
    u: usize,
    v: usize,
) -> Result<Option<Vec<usize>>> {
    check_pair_preconditions(g, c, u, v)?;
    let dag = g.geodesic_dag(u)?;
    Ok(rainbow_geodesic_in_dag(g, c, &dag, u, v))
}

fn rainbow_geodesic_in_dag(
    g: &Graph,
    c: &EdgeColoring,
    dag: &crate::graph::GeodesicDag,
    u: usize,
    v: usize,
) -> Option<Vec<usize>> {
    fn descend(
        g: &Graph,
        c: &EdgeColoring,
        dag: &crate::graph::GeodesicDag,
        source: usize,
        at: usize,
        tail: &mut Vec<usize>,
        used_color: &mut [bool],
    ) -> bool {
        if at == source {
            return true;
        }
        for &p in dag.predecessors(at) {
            let col = c.color(g.edge_index(p, at).expect("DAG edge exists"));
            if used_color[col] {
                continue;
            }
            used_color[col] = true;
            tail.push(p);
            if descend(g, c, dag, source, p, tail, used_color) {
                return true;
            }
            tail.pop();
            used_color[col] = false;
        }
        false
    }

    let mut used_color = vec![false; c.palette_size() + 1];
    let mut tail = vec![v];
    if descend(g, c, dag, u, v, &mut tail, &mut used_color) {
        tail.reverse();
        return Some(tail);
    }
    None
}

fn check_graph_preconditions(g: &Graph, c: &EdgeColoring) -> Result<()> {
    c.check_binding(g)?;
    if g.vertex_count() < 2 {
        return Err(Error::InvalidParameter(
            "rainbow connectivity is defined for graphs with at least 2 vertices".into(),
        ));
    }
    Ok(())
}

fn run_check(
    g: &Graph,
    c: &EdgeColoring,
    mode: Mode,
    collect_paths: bool,
) -> Result<VerificationReport> {
    check_graph_preconditions(g, c)?;
    let n = g.vertex_count();
    let mut checked = 0usize;
    let mut paths = collect_paths.then(BTreeMap::new);
    for u in 0..n {
        // In strong mode one DAG per source covers all its pairs.
        let dag = match mode {
            Mode::StrongRainbow => Some(g.geodesic_dag(u)?),
            Mode::Rainbow => None,
        };
        for v in u + 1..n {
            checked += 1;
            let found = match mode {
                Mode::Rainbow => rainbow_path_search(g, c, u, v),
                Mode::StrongRainbow => rainbow_geodesic_in_dag(g, c, dag.as_ref().unwrap(), u, v),
            };
            match found {
                Some(path) => {
                    if let Some(map) = paths.as_mut() {
                        map.insert((u, v), path);
                    }
                }
                None => {
                    return Ok(VerificationReport {
                        mode,
                        passed: false,
                        violating_pair: Some((u, v)),
                        checked_pairs: checked,
                        witness_paths: None,
                    });
                }
            }
        }
    }
    Ok(VerificationReport {
        mode,
        passed: true,
        violating_pair: None,
        checked_pairs: checked,
        witness_paths: paths,
    })
}

/// Does every vertex pair admit a rainbow path?
pub fn is_rainbow_connected(g: &Graph, c: &EdgeColoring) -> Result<VerificationReport> {
    run_check(g, c, Mode::Rainbow, false)
}

/// Does every vertex pair admit a rainbow geodesic?
pub fn is_strong_rainbow_connected(g: &Graph, c: &EdgeColoring) -> Result<VerificationReport> {
    run_check(g, c, Mode::StrongRainbow, false)
}

/// Like [`is_rainbow_connected`] but records one witness path per pair.
pub fn is_rainbow_connected_with_paths(g: &Graph, c: &EdgeColoring) -> Result<VerificationReport> {
    run_check(g, c, Mode::Rainbow, true)
}

/// Like [`is_strong_rainbow_connected`] but records one witness geodesic
/// per pair.
pub fn is_strong_rainbow_connected_with_paths(
    g: &Graph,
    c: &EdgeColoring,
) -> Result<VerificationReport> {
    run_check(g, c, Mode::StrongRainbow, true)
}
