//! Construction of the labeled witness graph `G(a, b)`: a cycle of length
//! `n = 3b(b-a+2)` together with two hub vertices adjacent to every cycle
//! vertex, and a pendant path of `a-2` extra vertices attached at one hub.
//! For `3 <= a <= b` the graph has rainbow connection number `a` and
//! strong rainbow connection number `b`.
//!
//! Labeling is deterministic: cycle vertices take ids `0..n` in cycle
//! order, the plain hub `w` is `n`, the path-bearing hub `v` is `n + 1`,
//! and the pendant vertices continue from `n + 2` starting with the one
//! adjacent to `v`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Target pair: `a` for the rainbow connection number, `b` for the strong
/// one. Only `3 <= a <= b` is accepted; the small cases live in
/// [`build_small_witness`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessParams {
    a: usize,
    b: usize,
}

impl WitnessParams {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a < 3 {
            return Err(Error::InvalidParameter(format!(
                "witness construction needs a >= 3 (got a = {a}); \
                 for equal targets 1 and 2 use the small witnesses"
            )));
        }
        if b < a {
            return Err(Error::InvalidParameter(format!(
                "witness construction needs a <= b (got a = {a}, b = {b})"
            )));
        }
        Ok(WitnessParams { a, b })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    /// Cycle length `3b(b - a + 2)`; always at least 18 on the valid domain.
    pub fn cycle_len(&self) -> usize {
        3 * self.b * (self.b - self.a + 2)
    }
}

/// The witness graph together with its labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessGraph {
    graph: Graph,
    params: WitnessParams,
    cycle_ids: Vec<usize>,
    hub_w: usize,
    hub_v: usize,
    path_ids: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct WitnessFile {
    n: usize,
    edges: Vec<(usize, usize)>,
    labels: WitnessLabels,
}

#[derive(Serialize, Deserialize)]
struct WitnessLabels {
    cycle: Vec<usize>,
    w: usize,
    v: usize,
    path: Vec<usize>,
    a: usize,
    b: usize,
    cycle_n: usize,
}

impl WitnessGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn params(&self) -> WitnessParams {
        self.params
    }

    /// Cycle length `n`.
    pub fn cycle_len(&self) -> usize {
        self.cycle_ids.len()
    }

    /// Ids of the cycle vertices in cycle order.
    pub fn cycle_ids(&self) -> &[usize] {
        &self.cycle_ids
    }

    /// The hub that carries nothing but cycle edges.
    pub fn hub_w(&self) -> usize {
        self.hub_w
    }

    /// The hub the pendant path is attached to.
    pub fn hub_v(&self) -> usize {
        self.hub_v
    }

    /// Ids of the pendant path vertices, ordered from the free end toward
    /// the hub; the last one is adjacent to [`WitnessGraph::hub_v`]. Empty
    /// path never occurs (`a >= 3` forces at least one vertex).
    pub fn path_ids(&self) -> &[usize] {
        &self.path_ids
    }

    /// The free endpoint of the pendant path, the vertex realizing the
    /// diameter together with `hub_w`.
    pub fn path_tip(&self) -> usize {
        self.path_ids[0]
    }

    pub fn to_json_string(&self) -> String {
        let file = WitnessFile {
            n: self.graph.vertex_count(),
            edges: self.graph.edges().to_vec(),
            labels: WitnessLabels {
                cycle: self.cycle_ids.clone(),
                w: self.hub_w,
                v: self.hub_v,
                path: self.path_ids.clone(),
                a: self.params.a,
                b: self.params.b,
                cycle_n: self.cycle_len(),
            },
        };
        let mut s = serde_json::to_string(&file).expect("witness serialization cannot fail");
        s.push('\n');
        s
    }

    /// Parses a witness file. The graph and labels must match the canonical
    /// construction for the stored `(a, b)` exactly; anything else is
    /// rejected rather than repaired.
    pub fn from_json_str(s: &str) -> Result<Self> {
        let file: WitnessFile = serde_json::from_str(s)?;
        let params = WitnessParams::new(file.labels.a, file.labels.b)?;
        let canonical = build_witness(params);
        let stored = Graph::new(file.n, file.edges)?;
        let labels_match = file.labels.cycle == canonical.cycle_ids
            && file.labels.w == canonical.hub_w
            && file.labels.v == canonical.hub_v
            && file.labels.path == canonical.path_ids
            && file.labels.cycle_n == canonical.cycle_len();
        if stored != canonical.graph || !labels_match {
            return Err(Error::MalformedGraph(
                "witness file does not match the canonical construction for its (a, b)".into(),
            ));
        }
        Ok(canonical)
    }
}

/// Builds the labeled witness graph for the given targets.
pub fn build_witness(params: WitnessParams) -> WitnessGraph {
    let a = params.a;
    let n = params.cycle_len();
    let hub_w = n;
    let hub_v = n + 1;
    // Pendant vertex ids: the one adjacent to hub_v is n + 2, the free end
    // of the path gets the highest id n + a - 1.
    let path_ids: Vec<usize> = (n + 2..n + a).rev().collect();

    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(3 * n + a - 2);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((i, hub_w));
        edges.push((i, hub_v));
    }
    let mut prev = hub_v;
    for &u in path_ids.iter().rev() {
        edges.push((prev, u));
        prev = u;
    }

    let graph = Graph::from_edges(n + a, edges).expect("witness construction is connected");
    assert_eq!(graph.edge_count(), 3 * n + a - 2);

    WitnessGraph {
        graph,
        params,
        cycle_ids: (0..n).collect(),
        hub_w,
        hub_v,
        path_ids,
    }
}

/// Representatives for the two small equal-target cases: `t = 1` gives a
/// triangle (both connection numbers 1), `t = 2` a four-cycle (both 2).
pub fn build_small_witness(t: usize) -> Result<Graph> {
    match t {
        1 => Graph::complete(3),
        2 => Graph::cycle(4),
        _ => Err(Error::InvalidParameter(format!(
            "small witnesses exist only for targets 1 and 2, got {t}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_validate_domain() {
        assert!(WitnessParams::new(3, 3).is_ok());
        assert!(matches!(
            WitnessParams::new(2, 5),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            WitnessParams::new(4, 3),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn smallest_witness_counts() {
        let wg = build_witness(WitnessParams::new(3, 3).unwrap());
        assert_eq!(wg.cycle_len(), 18);
        assert_eq!(wg.graph().vertex_count(), 21);
        assert_eq!(wg.graph().edge_count(), 55);
        assert_eq!(wg.hub_w(), 18);
        assert_eq!(wg.hub_v(), 19);
        assert_eq!(wg.path_ids(), &[20]);
    }

    #[test]
    fn witness_3_4_counts() {
        let wg = build_witness(WitnessParams::new(3, 4).unwrap());
        assert_eq!(wg.cycle_len(), 36);
        assert_eq!(wg.graph().vertex_count(), 39);
        assert_eq!(wg.graph().edge_count(), 109);
    }

    #[test]
    fn witness_4_5_counts_and_diameter() {
        let wg = build_witness(WitnessParams::new(4, 5).unwrap());
        assert_eq!(wg.cycle_len(), 45);
        assert_eq!(wg.graph().vertex_count(), 49);
        assert_eq!(wg.graph().edge_count(), 137);
        assert_eq!(wg.graph().diameter(), 4);
        // Pendant ids run from the free end toward the hub.
        assert_eq!(wg.path_ids(), &[48, 47]);
    }

    #[test]
    fn hub_degrees_and_path_shape() {
        for (a, b) in [(3, 3), (3, 5), (4, 4), (5, 7)] {
            let wg = build_witness(WitnessParams::new(a, b).unwrap());
            let g = wg.graph();
            let n = wg.cycle_len();
            assert_eq!(g.degree(wg.hub_w()), n);
            assert_eq!(g.degree(wg.hub_v()), n + 1);
            for &c in wg.cycle_ids() {
                assert!(g.edge_index(c, wg.hub_w()).is_some());
                assert!(g.edge_index(c, wg.hub_v()).is_some());
            }
            // Pendant vertices form an induced path ending at hub_v.
            let chain: Vec<usize> = wg.path_ids().iter().copied().chain([wg.hub_v()]).collect();
            for pair in chain.windows(2) {
                assert!(g.edge_index(pair[0], pair[1]).is_some());
            }
            assert_eq!(g.degree(wg.path_tip()), 1);
        }
    }

    #[test]
    fn grid_sweep_structure() {
        for a in 3..=7usize {
            for b in a..=7usize {
                let params = WitnessParams::new(a, b).unwrap();
                let wg = build_witness(params);
                let n = 3 * b * (b - a + 2);
                assert!(n >= 18);
                assert_eq!(wg.cycle_len(), n);
                assert_eq!(wg.graph().vertex_count(), n + a);
                assert_eq!(wg.graph().edge_count(), 3 * n + a - 2);
                assert_eq!(wg.graph().diameter(), a);
                // The far end of the pendant path realizes the diameter
                // against the plain hub.
                let from_w = wg.graph().bfs_distances(wg.hub_w()).unwrap();
                assert_eq!(from_w.dist[wg.path_tip()], a);
            }
        }
    }

    #[test]
    fn pendant_tip_sees_each_cycle_vertex_through_one_geodesic() {
        for (a, b) in [(3, 3), (4, 5), (5, 5)] {
            let wg = build_witness(WitnessParams::new(a, b).unwrap());
            let dag = wg.graph().geodesic_dag(wg.path_tip()).unwrap();
            for &c in wg.cycle_ids() {
                assert_eq!(dag.distance(c), a - 1);
                let paths = dag.geodesics_to(c);
                assert_eq!(paths.len(), 1);
                // The unique geodesic runs along the pendant path and
                // through the path-bearing hub.
                assert_eq!(paths[0][a - 2], wg.hub_v());
            }
        }
    }

    #[test]
    fn distant_cycle_pairs_have_exactly_the_hub_geodesics() {
        for (a, b) in [(3, 3), (4, 5)] {
            let wg = build_witness(WitnessParams::new(a, b).unwrap());
            let n = wg.cycle_len();
            let dag = wg.graph().geodesic_dag(0).unwrap();
            for t in 1..n {
                if t.min(n - t) <= 3 {
                    continue;
                }
                assert_eq!(dag.distance(t), 2);
                assert_eq!(
                    dag.geodesics_to(t),
                    vec![vec![0, wg.hub_w(), t], vec![0, wg.hub_v(), t]]
                );
            }
        }
    }

    #[test]
    fn small_witnesses() {
        let t1 = build_small_witness(1).unwrap();
        assert_eq!(t1, Graph::complete(3).unwrap());
        let t2 = build_small_witness(2).unwrap();
        assert_eq!(t2, Graph::cycle(4).unwrap());
        assert!(matches!(
            build_small_witness(3),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn witness_json_round_trip() {
        let wg = build_witness(WitnessParams::new(4, 6).unwrap());
        let s = wg.to_json_string();
        let back = WitnessGraph::from_json_str(&s).unwrap();
        assert_eq!(wg, back);
        assert_eq!(s, back.to_json_string());
    }

    #[test]
    fn witness_json_rejects_tampering() {
        let wg = build_witness(WitnessParams::new(3, 3).unwrap());
        let s = wg.to_json_string();
        // Claiming different parameters must fail the canonical-match check.
        let tampered = s.replace("\"a\":3,\"b\":3", "\"a\":3,\"b\":4");
        assert!(WitnessGraph::from_json_str(&tampered).is_err());
        // A plain graph without labels is not a witness file.
        assert!(WitnessGraph::from_json_str(&wg.graph().to_json_string()).is_err());
    }
}
