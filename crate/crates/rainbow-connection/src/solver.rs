//! Exact rainbow and strong rainbow connection numbers for small graphs by
//! exhaustive search over colorings.
//!
//! Color permutations never change either predicate, so the search only
//! visits one representative per permutation class: restricted-growth
//! sequences (the first edge gets color 1, each later edge at most one
//! above the running maximum) that attain exactly `k` colors. Palette
//! sizes are tried upward from the diameter, so the first hit is optimal.

use serde::Serialize;

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verify::{is_rainbow_connected, is_strong_rainbow_connected, VerificationReport};

/// Edge budget beyond which the exact solver refuses to run; the search
/// space grows like a Stirling number of the edge count.
pub const DEFAULT_EDGE_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SolveKind {
    #[serde(rename = "rc")]
    Rc,
    #[serde(rename = "src")]
    Src,
}

impl SolveKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            SolveKind::Rc => "rc",
            SolveKind::Src => "src",
        }
    }
}

/// An exact connection number with its optimal-coloring certificate and
/// search statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub kind: SolveKind,
    pub value: usize,
    pub certificate: EdgeColoring,
    pub colorings_tested: usize,
    pub lower_bound_used: usize,
}

impl SolveResult {
    /// `{"kind", "value", "certificate", "colorings_tested"}` with the
    /// certificate in the coloring interchange format.
    pub fn to_json_string(&self) -> String {
        #[derive(Serialize)]
        struct CertificateFile<'a> {
            k: usize,
            colors: &'a [usize],
        }
        #[derive(Serialize)]
        struct SolveFile<'a> {
            kind: &'a str,
            value: usize,
            certificate: CertificateFile<'a>,
            colorings_tested: usize,
        }
        let file = SolveFile {
            kind: self.kind.as_str(),
            value: self.value,
            certificate: CertificateFile {
                k: self.certificate.palette_size(),
                colors: self.certificate.colors(),
            },
            colorings_tested: self.colorings_tested,
        };
        let mut s = serde_json::to_string(&file).expect("result serialization cannot fail");
        s.push('\n');
        s
    }
}

/// Streams every coloring of `m` edges that uses exactly `k` colors, one
/// representative per color-permutation class, in lexicographic order of
/// the color sequence.
pub fn canonical_colorings(m: usize, k: usize) -> CanonicalColorings {
    CanonicalColorings {
        m,
        k,
        state: Vec::new(),
        started: false,
        done: k > m || k == 0 || m == 0,
    }
}

pub struct CanonicalColorings {
    m: usize,
    k: usize,
    state: Vec<usize>,
    started: bool,
    done: bool,
}

impl CanonicalColorings {
    /// Fills positions `from..` with the lexicographically smallest suffix
    /// that still reaches exactly `k` colors: all 1s until the tail must
    /// climb one fresh color per edge.
    fn fill_suffix(&mut self, from: usize) {
        let mut prefix_max = self.state[..from].iter().copied().max().unwrap_or(0);
        for j in from..self.m {
            let remaining = self.m - j;
            let needed = self.k.saturating_sub(prefix_max);
            debug_assert!(needed <= remaining);
            if needed == remaining {
                prefix_max += 1;
                self.state[j] = prefix_max;
            } else {
                self.state[j] = 1;
            }
        }
    }
}

impl Iterator for CanonicalColorings {
    type Item = EdgeColoring;

    fn next(&mut self) -> Option<EdgeColoring> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.state = vec![0; self.m];
            self.state[0] = 1;
            self.fill_suffix(1);
        } else {
            // Find the rightmost position that can still grow: the new
            // value must respect the growth rule, the palette cap, and
            // leave enough room for the suffix to reach k colors.
            let mut i = self.m;
            loop {
                if i <= 1 {
                    self.done = true;
                    return None;
                }
                i -= 1;
                let prefix_max = self.state[..i].iter().copied().max().unwrap();
                let candidate = self.state[i] + 1;
                let new_max = prefix_max.max(candidate);
                if candidate <= self.k
                    && candidate <= prefix_max + 1
                    && new_max + (self.m - 1 - i) >= self.k
                {
                    self.state[i] = candidate;
                    self.fill_suffix(i + 1);
                    break;
                }
            }
        }
        debug_assert_eq!(
            self.state
                .iter()
                .collect::<std::collections::BTreeSet<_>>()
                .len(),
            self.k
        );
        Some(EdgeColoring::new(self.k, self.state.clone()).expect("growth sequence is valid"))
    }
}

/// Diameter lower bound and edge-count upper bound for both connection
/// numbers: an injective coloring always works, and no coloring beats the
/// diameter.
pub fn bounds(g: &Graph) -> (usize, usize) {
    (g.diameter(), g.edge_count())
}

fn solve(
    g: &Graph,
    kind: SolveKind,
    k_max: Option<usize>,
    edge_limit: usize,
) -> Result<SolveResult> {
    if g.vertex_count() < 2 {
        return Err(Error::InvalidParameter(
            "connection numbers are defined for graphs with at least 2 vertices".into(),
        ));
    }
    let m = g.edge_count();
    if m > edge_limit {
        return Err(Error::SizeLimit {
            edges: m,
            limit: edge_limit,
        });
    }
    let (lower, upper) = bounds(g);
    let cap = k_max.unwrap_or(upper).min(upper);
    let check = |c: &EdgeColoring| -> Result<VerificationReport> {
        match kind {
            SolveKind::Rc => is_rainbow_connected(g, c),
            SolveKind::Src => is_strong_rainbow_connected(g, c),
        }
    };
    let mut tested = 0usize;
    for k in lower.max(1)..=cap {
        for c in canonical_colorings(m, k) {
            tested += 1;
            if check(&c)?.passed {
                return Ok(SolveResult {
                    kind,
                    value: k,
                    certificate: c,
                    colorings_tested: tested,
                    lower_bound_used: lower,
                });
            }
        }
    }
    Err(Error::BoundTooSmall {
        kind: kind.as_str(),
        k_max: cap,
    })
}

/// Exact rainbow connection number, with the default edge budget.
pub fn rc_exact(g: &Graph, k_max: Option<usize>) -> Result<SolveResult> {
    solve(g, SolveKind::Rc, k_max, DEFAULT_EDGE_LIMIT)
}

/// Exact strong rainbow connection number, with the default edge budget.
pub fn src_exact(g: &Graph, k_max: Option<usize>) -> Result<SolveResult> {
    solve(g, SolveKind::Src, k_max, DEFAULT_EDGE_LIMIT)
}

/// [`rc_exact`] with an explicit edge budget override.
pub fn rc_exact_with_limit(
    g: &Graph,
    k_max: Option<usize>,
    edge_limit: usize,
) -> Result<SolveResult> {
    solve(g, SolveKind::Rc, k_max, edge_limit)
}

/// [`src_exact`] with an explicit edge budget override.
pub fn src_exact_with_limit(
    g: &Graph,
    k_max: Option<usize>,
    edge_limit: usize,
) -> Result<SolveResult> {
    solve(g, SolveKind::Src, k_max, edge_limit)
}
