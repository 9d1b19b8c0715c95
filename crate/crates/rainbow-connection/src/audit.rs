//! Mechanized replay of the lower-bound argument for the witness graphs:
//! any coloring of `G(a, b)` with at most `b - 1` colors admits a vertex
//! pair with no rainbow geodesic, and this module finds one.
//!
//! The replay follows the argument step by step. Every cycle vertex
//! reaches the pendant tip through exactly one geodesic (along the pendant
//! path), so those paths must all be rainbow; if one is not, that pair
//! refutes the coloring immediately. Otherwise the spokes to the
//! path-bearing hub avoid all pendant colors, a first pigeonhole yields a
//! spoke class of at least `3b + 1` same-colored edges, a second
//! pigeonhole inside it yields at least four same-colored spokes to the
//! plain hub, and two of those four cycle positions sit more than 3 apart
//! on the cycle. That pair has exactly the two hub routes as geodesics and
//! both repeat a color.
//!
//! Whatever branch it takes, the audit re-verifies its answer with the
//! geodesic search before returning; a structurally plausible trace whose
//! pair actually has a rainbow geodesic aborts as an inconsistency.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::verify::exists_rainbow_geodesic;
use crate::witness::{WitnessGraph, WitnessParams};

/// A set of same-colored hub spokes, listed as graph edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColorClass {
    pub color: usize,
    pub edges: Vec<(usize, usize)>,
}

/// A geodesic that fails to be rainbow, with the color it repeats.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeodesicFailure {
    pub path: Vec<usize>,
    pub repeated_color: usize,
}

/// Full pigeonhole trace: both color classes, the separated cycle pair,
/// and the two failing hub geodesics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditTrace {
    pub forced_path_colors: Vec<usize>,
    pub set_a_class: ColorClass,
    pub set_b_class: ColorClass,
    pub chosen_pair: (usize, usize),
    pub geodesic_failures: Vec<GeodesicFailure>,
}

/// Why the audit could stop before the pigeonhole stage: the unique
/// geodesic from some cycle vertex to the pendant tip already repeats a
/// color.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EarlyRefutation {
    pub pair: (usize, usize),
    pub geodesic: Vec<usize>,
    pub repeated_color: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AuditOutcome {
    /// A forced pendant geodesic is not rainbow.
    ForcedPath(EarlyRefutation),
    /// The pigeonhole stages produced a separated cycle pair whose two
    /// geodesics both repeat a color.
    Pigeonhole(AuditTrace),
}

impl AuditOutcome {
    /// The vertex pair with no rainbow geodesic under the audited coloring.
    pub fn refuting_pair(&self) -> (usize, usize) {
        match self {
            AuditOutcome::ForcedPath(e) => e.pair,
            AuditOutcome::Pigeonhole(t) => t.chosen_pair,
        }
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string(self).expect("audit serialization cannot fail");
        s.push('\n');
        s
    }
}

/// The two pigeonhole margins for the given targets: the guaranteed size
/// of the largest same-color spoke class to the path-bearing hub, and of
/// the largest same-color class among the corresponding plain-hub spokes.
/// The first is at least `3b + 1`, the second at least 4; both inequalities
/// are re-checked here and their failure would mean an implementation bug.
pub fn pigeonhole_margins(params: WitnessParams) -> Result<(usize, usize)> {
    let a = params.a();
    let b = params.b();
    let n = params.cycle_len();
    let ceil_a = n.div_ceil(b - a + 1);
    let ceil_b = (3 * b + 1).div_ceil(b - 1);
    if ceil_a < 3 * b + 1 {
        return Err(Error::ArithmeticInconsistency(format!(
            "spoke class margin {ceil_a} below {} for a={a} b={b}",
            3 * b + 1
        )));
    }
    if ceil_b < 4 {
        return Err(Error::ArithmeticInconsistency(format!(
            "second margin {ceil_b} below 4 for a={a} b={b}"
        )));
    }
    Ok((ceil_a, ceil_b))
}

/// Picks two of the given cycle positions with cyclic distance greater
/// than 3 on a cycle of length `n`. At least 4 distinct positions on a
/// cycle of length at least 18 always contain such a pair; the returned
/// pair is verified, not trusted.
pub fn separated_pair(positions: &[usize], n: usize) -> Result<(usize, usize)> {
    if positions.len() < 4 {
        return Err(Error::InvalidParameter(format!(
            "need at least 4 cycle positions, got {}",
            positions.len()
        )));
    }
    if n < 18 {
        return Err(Error::InvalidParameter(format!(
            "cycle length must be at least 18, got {n}"
        )));
    }
    if positions.iter().any(|&p| p >= n) {
        return Err(Error::InvalidParameter(
            "cycle position out of range".into(),
        ));
    }
    let mut sorted = positions.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != positions.len() {
        return Err(Error::InvalidParameter(
            "cycle positions must be distinct".into(),
        ));
    }
    for (i, &p) in sorted.iter().enumerate() {
        for &q in &sorted[i + 1..] {
            let along = q - p;
            if along.min(n - along) > 3 {
                return Ok((p, q));
            }
        }
    }
    Err(Error::InvalidParameter(
        "no pair of positions with cyclic distance above 3".into(),
    ))
}

/// Largest color class among `(position, color)` items; ties go to the
/// smallest color.
fn largest_class(items: impl Iterator<Item = (usize, usize)>) -> (usize, Vec<usize>) {
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (pos, color) in items {
        classes.entry(color).or_default().push(pos);
    }
    let (&color, positions) = classes
        .iter()
        .max_by(|(ca, pa), (cb, pb)| pa.len().cmp(&pb.len()).then(cb.cmp(ca)))
        .expect("at least one class");
    (color, positions.clone())
}

/// Replays the lower-bound argument against a candidate coloring of the
/// witness graph. The coloring must use at most `b - 1` colors; the
/// returned outcome names a vertex pair with no rainbow geodesic,
/// cross-checked against the geodesic search.
pub fn audit_lower_bound(wg: &WitnessGraph, c: &EdgeColoring) -> Result<AuditOutcome> {
    c.check_binding(wg.graph())?;
    let b = wg.params().b();
    if !c.uses_at_most(b - 1) {
        return Err(Error::Precondition(format!(
            "the audit needs a coloring with at most {} colors, this one uses {}",
            b - 1,
            c.used_color_count()
        )));
    }

    let g = wg.graph();
    let hub_v = wg.hub_v();
    let hub_w = wg.hub_w();
    let tip = wg.path_tip();

    // Colors along the pendant path from the hub out to the tip.
    let pendant_chain: Vec<usize> = std::iter::once(hub_v)
        .chain(wg.path_ids().iter().rev().copied())
        .collect();
    let forced_path_colors: Vec<usize> = pendant_chain
        .windows(2)
        .map(|w| c.color(g.edge_index(w[0], w[1]).expect("pendant edge exists")))
        .collect();

    // Every cycle vertex reaches the tip through the pendant path only, so
    // a repeat anywhere on it, or a spoke reusing a pendant color, kills
    // that unique geodesic.
    let pendant_distinct = {
        let mut sorted = forced_path_colors.clone();
        sorted.sort_unstable();
        sorted.windows(2).all(|w| w[0] != w[1])
    };
    let first_clash = if pendant_distinct {
        wg.cycle_ids().iter().copied().find(|&pos| {
            let spoke = c.color(g.edge_index(pos, hub_v).expect("spoke exists"));
            forced_path_colors.contains(&spoke)
        })
    } else {
        Some(0)
    };
    if let Some(pos) = first_clash {
        let mut geodesic = vec![pos];
        geodesic.extend(&pendant_chain);
        let colors: Vec<usize> = geodesic
            .windows(2)
            .map(|w| c.color(g.edge_index(w[0], w[1]).expect("edge exists")))
            .collect();
        let repeated_color = first_repeat(&colors).ok_or_else(|| {
            Error::AuditInconsistency("forced geodesic has no repeated color".into())
        })?;
        let pair = order_pair(pos, tip);
        confirm_no_rainbow_geodesic(wg, c, pair)?;
        return Ok(AuditOutcome::ForcedPath(EarlyRefutation {
            pair,
            geodesic,
            repeated_color,
        }));
    }

    // First pigeonhole: spokes to the path-bearing hub avoid the pendant
    // colors, so some spoke color class is large.
    let (a_color, a_positions) = largest_class(wg.cycle_ids().iter().map(|&pos| {
        (
            pos,
            c.color(g.edge_index(pos, hub_v).expect("spoke exists")),
        )
    }));
    let (margin_a, _) = pigeonhole_margins(wg.params())?;
    if a_positions.len() < margin_a {
        return Err(Error::AuditInconsistency(format!(
            "largest spoke class has {} edges, expected at least {margin_a}",
            a_positions.len()
        )));
    }

    // Second pigeonhole: among those positions, the spokes to the plain
    // hub concentrate again.
    let (b_color, b_positions) = largest_class(a_positions.iter().map(|&pos| {
        (
            pos,
            c.color(g.edge_index(pos, hub_w).expect("spoke exists")),
        )
    }));
    if b_positions.len() < 4 {
        return Err(Error::AuditInconsistency(format!(
            "largest plain-hub class has {} edges, expected at least 4",
            b_positions.len()
        )));
    }

    // Two of those positions sit more than 3 apart on the cycle, so their
    // only geodesics are the two hub routes, and each repeats its class
    // color.
    let (p, q) = separated_pair(&b_positions, wg.cycle_len())?;
    let dag = g.geodesic_dag(p)?;
    let geodesics = dag.geodesics_to(q);
    let expected = [vec![p, hub_w, q], vec![p, hub_v, q]];
    if dag.distance(q) != 2
        || geodesics.len() != 2
        || !expected.iter().all(|e| geodesics.contains(e))
    {
        return Err(Error::AuditInconsistency(format!(
            "pair ({p}, {q}) does not have exactly the two hub geodesics"
        )));
    }
    let failures = vec![
        GeodesicFailure {
            path: vec![p, hub_w, q],
            repeated_color: b_color,
        },
        GeodesicFailure {
            path: vec![p, hub_v, q],
            repeated_color: a_color,
        },
    ];
    for f in &failures {
        let cols: Vec<usize> = f
            .path
            .windows(2)
            .map(|w| c.color(g.edge_index(w[0], w[1]).expect("edge exists")))
            .collect();
        if cols.iter().any(|&x| x != f.repeated_color) {
            return Err(Error::AuditInconsistency(format!(
                "hub geodesic through {} does not repeat color {}",
                f.path[1], f.repeated_color
            )));
        }
    }

    let pair = order_pair(p, q);
    confirm_no_rainbow_geodesic(wg, c, pair)?;
    Ok(AuditOutcome::Pigeonhole(AuditTrace {
        forced_path_colors,
        set_a_class: ColorClass {
            color: a_color,
            edges: a_positions.iter().map(|&pos| (pos, hub_v)).collect(),
        },
        set_b_class: ColorClass {
            color: b_color,
            edges: b_positions.iter().map(|&pos| (pos, hub_w)).collect(),
        },
        chosen_pair: pair,
        geodesic_failures: failures,
    }))
}

fn order_pair(x: usize, y: usize) -> (usize, usize) {
    (x.min(y), x.max(y))
}

fn first_repeat(colors: &[usize]) -> Option<usize> {
    let mut seen = std::collections::BTreeSet::new();
    colors.iter().copied().find(|&c| !seen.insert(c))
}

fn confirm_no_rainbow_geodesic(
    wg: &WitnessGraph,
    c: &EdgeColoring,
    pair: (usize, usize),
) -> Result<()> {
    if exists_rainbow_geodesic(wg.graph(), c, pair.0, pair.1)?.is_some() {
        return Err(Error::AuditInconsistency(format!(
            "claimed refuting pair ({}, {}) has a rainbow geodesic",
            pair.0, pair.1
        )));
    }
    Ok(())
}
