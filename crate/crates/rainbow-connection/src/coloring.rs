//! Edge colorings and the two explicit coloring schemes for the witness
//! graphs: a rainbow coloring on `a` colors and a strong rainbow coloring
//! on `b` colors.
//!
//! A coloring is a dense vector of colors in `1..=k`, indexed by the bound
//! graph's canonical edge order. The binding is by edge count only; every
//! consumer re-checks the length before use.

use std::collections::BTreeSet;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::witness::WitnessGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    palette_size: usize,
    colors: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct ColoringFile {
    k: usize,
    colors: Vec<usize>,
}

impl EdgeColoring {
    /// A coloring with palette `1..=palette_size`. Every entry must lie in
    /// the palette; the palette does not have to be fully used.
    pub fn new(palette_size: usize, colors: Vec<usize>) -> Result<Self> {
        if palette_size == 0 {
            return Err(Error::InvalidParameter(
                "palette size must be positive".into(),
            ));
        }
        if let Some(&c) = colors.iter().find(|&&c| c == 0 || c > palette_size) {
            return Err(Error::InvalidParameter(format!(
                "color {c} is outside the palette 1..={palette_size}"
            )));
        }
        Ok(EdgeColoring {
            palette_size,
            colors,
        })
    }

    pub fn palette_size(&self) -> usize {
        self.palette_size
    }

    /// Number of edges this coloring binds to.
    pub fn edge_count(&self) -> usize {
        self.colors.len()
    }

    /// Color of the edge with the given canonical index.
    pub fn color(&self, edge_index: usize) -> usize {
        self.colors[edge_index]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// The set of colors that actually appear.
    pub fn used_colors(&self) -> BTreeSet<usize> {
        self.colors.iter().copied().collect()
    }

    pub fn used_color_count(&self) -> usize {
        self.used_colors().len()
    }

    /// True when at most `limit` distinct colors appear.
    pub fn uses_at_most(&self, limit: usize) -> bool {
        self.used_color_count() <= limit
    }

    /// Checks that this coloring binds to `g` (same edge count).
    pub fn check_binding(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.edge_count() {
            return Err(Error::ColoringMismatch {
                expected: self.colors.len(),
                got: g.edge_count(),
            });
        }
        Ok(())
    }

    /// Applies a color mapping edge by edge, e.g. to merge color classes.
    /// The result keeps this palette size.
    pub fn map_colors(&self, f: impl Fn(usize) -> usize) -> Result<Self> {
        EdgeColoring::new(
            self.palette_size,
            self.colors.iter().map(|&c| f(c)).collect(),
        )
    }

    pub fn to_json_string(&self) -> String {
        let file = ColoringFile {
            k: self.palette_size,
            colors: self.colors.clone(),
        };
        let mut s = serde_json::to_string(&file).expect("coloring serialization cannot fail");
        s.push('\n');
        s
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let file: ColoringFile = serde_json::from_str(s)?;
        Self::new(file.k, file.colors)
    }
}

/// Role of a witness-graph edge under the deterministic labeling.
/// Positions are 0-based cycle indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum EdgeRole {
    /// Cycle edge from position `pos` to `(pos + 1) % n`.
    Cycle { pos: usize },
    /// Spoke from cycle position `pos` to the plain hub.
    HubW { pos: usize },
    /// Spoke from cycle position `pos` to the path-bearing hub.
    HubV { pos: usize },
    /// Pendant path edge; `seg` counts 1-based from the free end, so the
    /// edge touching the hub has `seg = a - 2`.
    Pendant { seg: usize },
}

/// Classifies every edge of the witness graph by role, in canonical edge
/// order. The classification is total by construction; the counts per role
/// are asserted so that any drift between the labeling and the schemes
/// below fails loudly instead of producing a wrong coloring.
fn classify_edges(wg: &WitnessGraph) -> Vec<EdgeRole> {
    let n = wg.cycle_len();
    let a = wg.params().a();
    let w = wg.hub_w();
    let v = wg.hub_v();
    let roles: Vec<EdgeRole> = wg
        .graph()
        .edges()
        .iter()
        .map(|&(x, y)| {
            if y < n {
                let pos = if x == 0 && y == n - 1 { n - 1 } else { x };
                EdgeRole::Cycle { pos }
            } else if y == w {
                EdgeRole::HubW { pos: x }
            } else if y == v {
                EdgeRole::HubV { pos: x }
            } else {
                // Both endpoints at ids >= hub_v: a pendant path edge. Ids
                // decrease toward the hub, so the lower endpoint fixes the
                // segment number.
                EdgeRole::Pendant { seg: n + a - 1 - x }
            }
        })
        .collect();

    let count = |pred: fn(&EdgeRole) -> bool| roles.iter().filter(|r| pred(r)).count();
    assert_eq!(count(|r| matches!(r, EdgeRole::Cycle { .. })), n);
    assert_eq!(count(|r| matches!(r, EdgeRole::HubW { .. })), n);
    assert_eq!(count(|r| matches!(r, EdgeRole::HubV { .. })), n);
    assert_eq!(count(|r| matches!(r, EdgeRole::Pendant { .. })), a - 2);
    roles
}

/// The explicit rainbow coloring of the witness graph on palette `1..=a`:
/// pendant edge number `i` gets color `i`; spokes to the path-bearing hub
/// alternate between `a - 1` (even positions) and `a` (odd positions);
/// spokes to the plain hub get `a`; cycle edges get 1. Uses exactly `a`
/// colors.
pub fn rc_coloring(wg: &WitnessGraph) -> EdgeColoring {
    let a = wg.params().a();
    let colors = classify_edges(wg)
        .into_iter()
        .map(|role| match role {
            EdgeRole::Pendant { seg } => seg,
            EdgeRole::HubV { pos } => {
                if pos % 2 == 0 {
                    a - 1
                } else {
                    a
                }
            }
            EdgeRole::HubW { .. } => a,
            EdgeRole::Cycle { .. } => 1,
        })
        .collect();
    EdgeColoring::new(a, colors).expect("scheme stays within palette")
}

/// The explicit strong rainbow coloring of the witness graph on palette
/// `1..=b`: pendant edge `i` gets color `i`; spokes to the path-bearing
/// hub get one color per consecutive block of `3b` cycle positions,
/// starting at `a - 1`; spokes to the plain hub cycle through `1..=b` in
/// blocks of three positions; cycle edges repeat the pattern 1, 2, 3.
/// Uses exactly `b` colors.
pub fn src_coloring(wg: &WitnessGraph) -> EdgeColoring {
    let a = wg.params().a();
    let b = wg.params().b();
    let n = wg.cycle_len();
    // Both block patterns tile the cycle exactly.
    assert_eq!(n % (3 * b), 0);
    assert_eq!(n % 3, 0);
    let colors = classify_edges(wg)
        .into_iter()
        .map(|role| match role {
            EdgeRole::Pendant { seg } => seg,
            EdgeRole::HubV { pos } => a - 2 + pos / (3 * b) + 1,
            EdgeRole::HubW { pos } => (pos % (3 * b)) / 3 + 1,
            EdgeRole::Cycle { pos } => pos % 3 + 1,
        })
        .collect();
    EdgeColoring::new(b, colors).expect("scheme stays within palette")
}

/// Uniform random coloring of `edge_count` edges with colors drawn from
/// `1..=num_colors`. Used for seeded sampling in audits and tests.
pub fn random_coloring(edge_count: usize, num_colors: usize, rng: &mut impl Rng) -> EdgeColoring {
    let colors = (0..edge_count)
        .map(|_| rng.random_range(1..=num_colors))
        .collect();
    EdgeColoring::new(num_colors, colors).expect("sampled colors stay in palette")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness::{build_witness, WitnessParams};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeMap;

    fn witness(a: usize, b: usize) -> WitnessGraph {
        build_witness(WitnessParams::new(a, b).unwrap())
    }

    fn color_of(wg: &WitnessGraph, c: &EdgeColoring, u: usize, v: usize) -> usize {
        c.color(wg.graph().edge_index(u, v).expect("edge exists"))
    }

    #[test]
    fn rc_scheme_on_smallest_witness() {
        let wg = witness(3, 3);
        let c = rc_coloring(&wg);
        // Pendant edge (free end to hub).
        assert_eq!(color_of(&wg, &c, 20, 19), 1);
        // Spokes to the path-bearing hub alternate starting at a - 1 = 2.
        assert_eq!(color_of(&wg, &c, 0, 19), 2);
        assert_eq!(color_of(&wg, &c, 1, 19), 3);
        // Every spoke to the plain hub gets a = 3.
        for pos in 0..18 {
            assert_eq!(color_of(&wg, &c, pos, 18), 3);
        }
        // Cycle edges get 1.
        assert_eq!(color_of(&wg, &c, 0, 1), 1);
        assert_eq!(color_of(&wg, &c, 0, 17), 1);
        assert_eq!(c.used_colors(), BTreeSet::from([1, 2, 3]));
    }

    #[test]
    fn rc_scheme_on_4_5() {
        let wg = witness(4, 5);
        let c = rc_coloring(&wg);
        // Pendant edges from the free end: 48-47 is segment 1, 47-46 is
        // segment 2 (46 is the hub).
        assert_eq!(color_of(&wg, &c, 48, 47), 1);
        assert_eq!(color_of(&wg, &c, 47, 46), 2);
        // Positions 6 and 7 carry cycle labels 7 and 8.
        assert_eq!(color_of(&wg, &c, 6, 46), 3);
        assert_eq!(color_of(&wg, &c, 7, 46), 4);
        assert_eq!(c.used_color_count(), 4);
    }

    #[test]
    fn src_scheme_on_smallest_witness() {
        let wg = witness(3, 3);
        let c = src_coloring(&wg);
        // Spokes to the path-bearing hub: blocks of 3b = 9 positions.
        for pos in 0..9 {
            assert_eq!(color_of(&wg, &c, pos, 19), 2);
        }
        for pos in 9..18 {
            assert_eq!(color_of(&wg, &c, pos, 19), 3);
        }
        // Spokes to the plain hub: blocks of three positions, colors 1..=3.
        for pos in 0..3 {
            assert_eq!(color_of(&wg, &c, pos, 18), 1);
        }
        for pos in 3..6 {
            assert_eq!(color_of(&wg, &c, pos, 18), 2);
        }
        for pos in 6..9 {
            assert_eq!(color_of(&wg, &c, pos, 18), 3);
        }
        for pos in 9..12 {
            assert_eq!(color_of(&wg, &c, pos, 18), 1);
        }
        // Cycle pattern 1, 2, 3 and the closing edge.
        assert_eq!(color_of(&wg, &c, 0, 1), 1);
        assert_eq!(color_of(&wg, &c, 1, 2), 2);
        assert_eq!(color_of(&wg, &c, 2, 3), 3);
        assert_eq!(color_of(&wg, &c, 17, 0), 3);
    }

    #[test]
    fn src_scheme_uses_full_palette_on_3_4() {
        let wg = witness(3, 4);
        let c = src_coloring(&wg);
        assert_eq!(c.used_colors(), BTreeSet::from([1, 2, 3, 4]));
    }

    #[test]
    fn schemes_use_exactly_their_targets_on_grid() {
        for a in 3..=7usize {
            for b in a..=7usize {
                let wg = witness(a, b);
                assert_eq!(rc_coloring(&wg).used_color_count(), a);
                assert_eq!(src_coloring(&wg).used_color_count(), b);
            }
        }
    }

    #[test]
    fn src_scheme_hub_class_sizes() {
        for a in 3..=6usize {
            for b in a..=6usize {
                let wg = witness(a, b);
                let c = src_coloring(&wg);
                let mut v_classes: BTreeMap<usize, usize> = BTreeMap::new();
                let mut w_classes: BTreeMap<usize, usize> = BTreeMap::new();
                for &pos in wg.cycle_ids() {
                    *v_classes
                        .entry(color_of(&wg, &c, pos, wg.hub_v()))
                        .or_default() += 1;
                    *w_classes
                        .entry(color_of(&wg, &c, pos, wg.hub_w()))
                        .or_default() += 1;
                }
                assert!(v_classes.values().all(|&s| s == 3 * b));
                assert!(w_classes.values().all(|&s| s == 3 * (b - a + 2)));
            }
        }
    }

    #[test]
    fn schemes_are_deterministic() {
        let wg = witness(4, 6);
        assert_eq!(rc_coloring(&wg), rc_coloring(&wg));
        assert_eq!(src_coloring(&wg), src_coloring(&wg));
    }

    #[test]
    fn palette_restriction_checks() {
        assert!(!src_coloring(&witness(3, 3)).uses_at_most(2));
        let constant = EdgeColoring::new(1, vec![1; 6]).unwrap();
        assert_eq!(constant.used_colors(), BTreeSet::from([1]));
        assert!(constant.uses_at_most(1));
        assert!(rc_coloring(&witness(4, 6)).uses_at_most(4));
    }

    #[test]
    fn rejects_out_of_palette_colors() {
        assert!(EdgeColoring::new(2, vec![1, 3]).is_err());
        assert!(EdgeColoring::new(2, vec![0, 1]).is_err());
        assert!(EdgeColoring::new(0, vec![]).is_err());
        assert!(EdgeColoring::from_json_str(r#"{"k":2,"colors":[1,2,3]}"#).is_err());
    }

    #[test]
    fn coloring_json_round_trip() {
        let wg = witness(3, 4);
        let c = src_coloring(&wg);
        let s = c.to_json_string();
        let back = EdgeColoring::from_json_str(&s).unwrap();
        assert_eq!(c, back);
        assert_eq!(s, back.to_json_string());
    }

    #[test]
    fn binding_check() {
        let wg = witness(3, 3);
        let c = rc_coloring(&wg);
        assert!(c.check_binding(wg.graph()).is_ok());
        let other = Graph::cycle(4).unwrap();
        assert!(matches!(
            c.check_binding(&other),
            Err(Error::ColoringMismatch { .. })
        ));
    }

    #[test]
    fn random_coloring_is_seeded_and_bounded() {
        let mut rng1 = ChaCha8Rng::seed_from_u64(42);
        let mut rng2 = ChaCha8Rng::seed_from_u64(42);
        let c1 = random_coloring(30, 4, &mut rng1);
        let c2 = random_coloring(30, 4, &mut rng2);
        assert_eq!(c1, c2);
        assert!(c1.used_colors().iter().all(|&c| (1..=4).contains(&c)));
    }

    proptest! {
        /// Relabeling colors with a bijection never changes how many are used.
        #[test]
        fn permutation_preserves_used_count(colors in prop::collection::vec(1usize..=6, 1..40), shift in 0usize..6) {
            let c = EdgeColoring::new(6, colors).unwrap();
            let permuted = c.map_colors(|x| (x - 1 + shift) % 6 + 1).unwrap();
            prop_assert_eq!(c.used_color_count(), permuted.used_color_count());
        }
    }
}
