//! Undirected simple connected graphs with a canonical sorted edge list,
//! plus the distance machinery (BFS, diameter, geodesic DAGs) the rest of
//! the crate builds on.
//!
//! Vertices are `0..vertex_count`. Edges are stored as pairs `(u, v)` with
//! `u < v`, sorted lexicographically with no duplicates; the index of an
//! edge in that list is its identity, and colorings bind to it.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct GraphFile {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an edge list that must already be canonical:
    /// every pair `(u, v)` with `u < v`, strictly increasing lexicographic
    /// order. Endpoint range and connectivity are checked as well.
    /// Violations are rejected, never repaired.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::MalformedGraph(
                "vertex count must be positive".into(),
            ));
        }
        for &(u, v) in &edges {
            if u >= v {
                return Err(Error::MalformedGraph(format!(
                    "edge ({u}, {v}) is not in u < v form"
                )));
            }
            if v >= n {
                return Err(Error::MalformedGraph(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
        }
        for w in edges.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::MalformedGraph(format!(
                    "edge list is not strictly sorted at ({}, {}) followed by ({}, {})",
                    w[0].0, w[0].1, w[1].0, w[1].1
                )));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        let g = Graph { n, edges, adj };
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    /// Builds a graph from edges in any order, sorting them into canonical
    /// form first. Loops and duplicate edges are still errors.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut canon: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(u, v)| if u <= v { (u, v) } else { (v, u) })
            .collect();
        canon.sort_unstable();
        Self::new(n, canon)
    }

    /// The cycle on `n >= 3` vertices, edges `(i, i+1 mod n)`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "a cycle needs at least 3 vertices, got {n}"
            )));
        }
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// The path on `n >= 1` vertices.
    pub fn path(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter(
                "a path needs at least 1 vertex".into(),
            ));
        }
        Self::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    /// The complete graph on `n >= 1` vertices.
    pub fn complete(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter(
                "a complete graph needs at least 1 vertex".into(),
            ));
        }
        Self::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// The star with one center and `leaves >= 1` leaves.
    pub fn star(leaves: usize) -> Result<Self> {
        if leaves < 1 {
            return Err(Error::InvalidParameter(
                "a star needs at least 1 leaf".into(),
            ));
        }
        Self::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical sorted edge list.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbors of `u`.
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    /// Index of the edge between `u` and `v` in the canonical list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    reached += 1;
                    queue.push_back(y);
                }
            }
        }
        reached == self.n
    }

    /// Exact hop distances from `source` to every vertex.
    pub fn bfs_distances(&self, source: usize) -> Result<DistanceTable> {
        if source >= self.n {
            return Err(Error::InvalidParameter(format!(
                "source {source} is outside 0..{}",
                self.n
            )));
        }
        let mut dist = vec![usize::MAX; self.n];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        debug_assert!(dist.iter().all(|&d| d != usize::MAX));
        Ok(DistanceTable { source, dist })
    }

    /// Largest distance between any two vertices.
    pub fn diameter(&self) -> usize {
        (0..self.n)
            .map(|s| {
                let table = self.bfs_distances(s).expect("source in range");
                table.dist.into_iter().max().unwrap_or(0)
            })
            .max()
            .unwrap_or(0)
    }

    /// The layered DAG of all shortest paths out of `source`: for each
    /// vertex `t`, the neighbors one step closer to `source`. Every
    /// source-to-t path in the DAG is a geodesic and every geodesic of the
    /// graph appears in it.
    pub fn geodesic_dag(&self, source: usize) -> Result<GeodesicDag> {
        let table = self.bfs_distances(source)?;
        let preds = (0..self.n)
            .map(|t| {
                self.adj[t]
                    .iter()
                    .copied()
                    .filter(|&p| table.dist[t] > 0 && table.dist[p] == table.dist[t] - 1)
                    .collect()
            })
            .collect();
        Ok(GeodesicDag {
            source,
            dist: table.dist,
            preds,
        })
    }

    pub fn to_json_string(&self) -> String {
        let file = GraphFile {
            n: self.n,
            edges: self.edges.clone(),
        };
        let mut s = serde_json::to_string(&file).expect("graph serialization cannot fail");
        s.push('\n');
        s
    }

    /// Parses the graph interchange format `{"n": ..., "edges": [[u,v], ...]}`.
    /// The edge list must already be canonical; see [`Graph::new`].
    pub fn from_json_str(s: &str) -> Result<Self> {
        let file: GraphFile = serde_json::from_str(s)?;
        Self::new(file.n, file.edges)
    }
}

/// BFS distances from one source vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    pub source: usize,
    pub dist: Vec<usize>,
}

/// Shortest-path DAG out of one source; see [`Graph::geodesic_dag`].
#[derive(Debug, Clone)]
pub struct GeodesicDag {
    source: usize,
    dist: Vec<usize>,
    preds: Vec<Vec<usize>>,
}

impl GeodesicDag {
    pub fn source(&self) -> usize {
        self.source
    }

    pub fn distance(&self, t: usize) -> usize {
        self.dist[t]
    }

    /// Predecessors of `t`: its neighbors one layer closer to the source.
    pub fn predecessors(&self, t: usize) -> &[usize] {
        &self.preds[t]
    }

    /// All geodesics from the source to `target`, each as a vertex
    /// sequence starting at the source. Deterministic order (predecessor
    /// lists are sorted).
    pub fn geodesics_to(&self, target: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut tail = vec![target];
        self.collect_geodesics(target, &mut tail, &mut out);
        out
    }

    fn collect_geodesics(&self, at: usize, tail: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if at == self.source {
            out.push(tail.iter().rev().copied().collect());
            return;
        }
        for &p in &self.preds[at] {
            tail.push(p);
            self.collect_geodesics(p, tail, out);
            tail.pop();
        }
    }

    /// Number of geodesics from the source to `target`.
    pub fn count_geodesics(&self, target: usize) -> u128 {
        let mut counts = vec![None; self.dist.len()];
        self.count_rec(target, &mut counts)
    }

    fn count_rec(&self, at: usize, counts: &mut [Option<u128>]) -> u128 {
        if at == self.source {
            return 1;
        }
        if let Some(c) = counts[at] {
            return c;
        }
        let c = self.preds[at]
            .clone()
            .iter()
            .map(|&p| self.count_rec(p, counts))
            .sum();
        counts[at] = Some(c);
        c
    }
}

#[cfg(test)]
pub(crate) fn random_connected_graph(
    n: usize,
    extra: usize,
    rng: &mut rand_chacha::ChaCha8Rng,
) -> Graph {
    use rand::Rng;
    let mut edges: Vec<(usize, usize)> = (1..n)
        .map(|v| {
            let u = rng.random_range(0..v);
            (u, v)
        })
        .collect();
    for _ in 0..extra {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u != v {
            let e = (u.min(v), u.max(v));
            if !edges.contains(&e) {
                edges.push(e);
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn cycle_smallest_is_triangle() {
        let g = Graph::cycle(3).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn cycle_four_edges() {
        let g = Graph::cycle(4).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);
    }

    #[test]
    fn cycle_eighteen_is_two_regular() {
        // 18 is the smallest cycle length the witness construction produces.
        let g = Graph::cycle(18).unwrap();
        assert_eq!(g.vertex_count(), 18);
        assert_eq!(g.edge_count(), 18);
        assert!((0..18).all(|u| g.degree(u) == 2));
    }

    #[test]
    fn cycle_rejects_small_n() {
        assert!(matches!(Graph::cycle(2), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn path_builders() {
        let single = Graph::path(1).unwrap();
        assert_eq!(single.vertex_count(), 1);
        assert_eq!(single.edge_count(), 0);

        let two = Graph::path(2).unwrap();
        assert_eq!(two.edges(), &[(0, 1)]);

        let five = Graph::path(5).unwrap();
        assert_eq!(five.edge_count(), 4);
        let leaves = (0..5).filter(|&u| five.degree(u) == 1).count();
        assert_eq!(leaves, 2);

        assert!(matches!(Graph::path(0), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn complete_builders() {
        assert_eq!(Graph::complete(2).unwrap().edge_count(), 1);
        assert_eq!(Graph::complete(4).unwrap().edge_count(), 6);
        assert_eq!(Graph::complete(5).unwrap().diameter(), 1);
        assert!(matches!(
            Graph::complete(0),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn star_has_center_of_full_degree() {
        let g = Graph::star(4).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.degree(0), 4);
        assert!((1..5).all(|u| g.degree(u) == 1));
    }

    #[test]
    fn bfs_on_small_fixtures() {
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(c6.bfs_distances(0).unwrap().dist, vec![0, 1, 2, 3, 2, 1]);

        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.bfs_distances(2).unwrap().dist, vec![1, 1, 0, 1]);

        let p4 = Graph::path(4).unwrap();
        assert_eq!(p4.bfs_distances(0).unwrap().dist, vec![0, 1, 2, 3]);

        assert!(matches!(
            p4.bfs_distances(4),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn diameter_fixtures() {
        for n in 2..=5 {
            assert_eq!(Graph::complete(n).unwrap().diameter(), 1);
        }
        assert_eq!(Graph::cycle(6).unwrap().diameter(), 3);
        assert_eq!(Graph::path(4).unwrap().diameter(), 3);
    }

    #[test]
    fn geodesic_dag_on_c4_finds_both_routes() {
        let g = Graph::cycle(4).unwrap();
        let dag = g.geodesic_dag(0).unwrap();
        let paths = dag.geodesics_to(2);
        assert_eq!(paths, vec![vec![0, 1, 2], vec![0, 3, 2]]);
        assert_eq!(dag.count_geodesics(2), 2);
    }

    #[test]
    fn geodesic_dag_on_tree_is_unique() {
        let g = Graph::path(4).unwrap();
        let dag = g.geodesic_dag(0).unwrap();
        assert_eq!(dag.geodesics_to(3), vec![vec![0, 1, 2, 3]]);
        assert_eq!(dag.count_geodesics(3), 1);
    }

    #[test]
    fn new_rejects_malformed_edge_lists() {
        assert!(matches!(
            Graph::new(3, vec![(1, 0), (1, 2)]),
            Err(Error::MalformedGraph(_))
        ));
        assert!(matches!(
            Graph::new(3, vec![(0, 1), (0, 1), (1, 2)]),
            Err(Error::MalformedGraph(_))
        ));
        assert!(matches!(
            Graph::new(3, vec![(0, 3), (1, 2)]),
            Err(Error::MalformedGraph(_))
        ));
        assert!(matches!(
            Graph::new(3, vec![(1, 2), (0, 1)]),
            Err(Error::MalformedGraph(_))
        ));
        assert!(matches!(
            Graph::new(4, vec![(0, 1), (2, 3)]),
            Err(Error::Disconnected)
        ));
        assert!(matches!(
            Graph::new(0, vec![]),
            Err(Error::MalformedGraph(_))
        ));
    }

    #[test]
    fn from_edges_rejects_duplicates_in_any_orientation() {
        assert!(matches!(
            Graph::from_edges(3, vec![(0, 1), (1, 0), (1, 2)]),
            Err(Error::MalformedGraph(_))
        ));
        assert!(matches!(
            Graph::from_edges(3, vec![(1, 1), (0, 1), (1, 2)]),
            Err(Error::MalformedGraph(_))
        ));
    }

    #[test]
    fn json_loader_rejects_non_canonical_input() {
        assert!(Graph::from_json_str(r#"{"n":3,"edges":[[1,0],[1,2]]}"#).is_err());
        assert!(Graph::from_json_str(r#"{"n":3,"edges":[[1,2],[0,1]]}"#).is_err());
        assert!(Graph::from_json_str(r#"{"n":4,"edges":[[0,1]]}"#).is_err());
        assert!(Graph::from_json_str("not json").is_err());
    }

    #[test]
    fn json_round_trip_on_fixture() {
        let g = Graph::cycle(5).unwrap();
        let s = g.to_json_string();
        let back = Graph::from_json_str(&s).unwrap();
        assert_eq!(g, back);
        assert_eq!(s, back.to_json_string());
    }

    /// Independent all-pairs oracle: Floyd-Warshall on the adjacency matrix.
    fn floyd_warshall_diameter(g: &Graph) -> usize {
        let n = g.vertex_count();
        let inf = usize::MAX / 2;
        let mut d = vec![vec![inf; n]; n];
        for (v, row) in d.iter_mut().enumerate() {
            row[v] = 0;
        }
        for &(u, v) in g.edges() {
            d[u][v] = 1;
            d[v][u] = 1;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if d[i][k] + d[k][j] < d[i][j] {
                        d[i][j] = d[i][k] + d[k][j];
                    }
                }
            }
        }
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| d[i][j])
            .max()
            .unwrap()
    }

    /// Independent path oracle: enumerate simple paths, keep the shortest.
    fn enumerate_shortest_paths(g: &Graph, s: usize, t: usize) -> Vec<Vec<usize>> {
        fn walk(
            g: &Graph,
            t: usize,
            path: &mut Vec<usize>,
            on_path: &mut Vec<bool>,
            found: &mut Vec<Vec<usize>>,
        ) {
            let at = *path.last().unwrap();
            if at == t {
                found.push(path.clone());
                return;
            }
            for &y in g.neighbors(at) {
                if !on_path[y] {
                    on_path[y] = true;
                    path.push(y);
                    walk(g, t, path, on_path, found);
                    path.pop();
                    on_path[y] = false;
                }
            }
        }
        let mut found = Vec::new();
        let mut on_path = vec![false; g.vertex_count()];
        on_path[s] = true;
        walk(g, t, &mut vec![s], &mut on_path, &mut found);
        let best = found.iter().map(Vec::len).min().unwrap();
        found.retain(|p| p.len() == best);
        found
    }

    #[test]
    fn diameter_matches_independent_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in [2usize, 5, 10, 25, 50] {
            for extra in [0usize, n / 2, n] {
                let g = random_connected_graph(n, extra, &mut rng);
                assert_eq!(g.diameter(), floyd_warshall_diameter(&g));
            }
        }
    }

    #[test]
    fn geodesic_counts_match_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 2..=12usize {
            for extra in [0usize, n, 2 * n] {
                let g = random_connected_graph(n, extra, &mut rng);
                let s = rng.random_range(0..n);
                let dag = g.geodesic_dag(s).unwrap();
                for t in 0..n {
                    if t == s {
                        continue;
                    }
                    let expected = enumerate_shortest_paths(&g, s, t);
                    assert_eq!(dag.count_geodesics(t) as usize, expected.len());
                    let mut got = dag.geodesics_to(t);
                    let mut want = expected;
                    got.sort();
                    want.sort();
                    assert_eq!(got, want);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn json_round_trip_is_bit_exact(n in 2usize..40, extra in 0usize..40, seed in 0u64..1000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = random_connected_graph(n, extra, &mut rng);
            let s = g.to_json_string();
            let back = Graph::from_json_str(&s).unwrap();
            prop_assert_eq!(&g, &back);
            prop_assert_eq!(s, back.to_json_string());
        }

        #[test]
        fn bfs_is_edge_lipschitz(n in 2usize..100, extra in 0usize..120, seed in 0u64..1000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = random_connected_graph(n, extra, &mut rng);
            for source in 0..g.vertex_count() {
                let table = g.bfs_distances(source).unwrap();
                prop_assert_eq!(table.dist[source], 0);
                for &(u, v) in g.edges() {
                    let a = table.dist[u] as isize;
                    let b = table.dist[v] as isize;
                    prop_assert!((a - b).abs() <= 1);
                }
            }
        }
    }
}
