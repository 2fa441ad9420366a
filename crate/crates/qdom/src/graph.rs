//! Simple undirected graphs with value semantics.
//!
//! Vertices are `0..n`. Graphs are immutable once built; every surgery
//! operation returns a fresh graph, which keeps enumeration and
//! perturbation code trivially rollback-safe and makes sharing across
//! worker threads free.
//!
//! Paper figures label vertices from 1; all fixtures in this crate shift
//! them down by one.

use std::collections::BTreeSet;
use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    OutOfRange { vertex: usize, order: usize },
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} not present")]
    MissingEdge(usize, usize),
    #[error("edge {0}-{1} already present")]
    EdgePresent(usize, usize),
    #[error("graph is bipartite")]
    Bipartite,
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("order {order} exceeds supported bound {bound}")]
    TooLarge { order: usize, bound: usize },
}

/// Error from parsing the edge-list text format; carries a 1-based line.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

/// A simple undirected graph: per-vertex sorted neighbor sets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

/// A cycle in a host graph, stored as its vertex sequence.
///
/// Witnesses are canonical: they start at their smallest vertex and run
/// in the direction whose second vertex is smaller, so equality of
/// witnesses is equality of cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleWitness {
    vertices: Vec<usize>,
}

impl CycleWitness {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// True iff the sequence is a cycle of the host graph: all vertices
    /// distinct, consecutive ones (cyclically) adjacent.
    pub fn validate(&self, g: &Graph) -> bool {
        let k = self.vertices.len();
        if k < 3 {
            return false;
        }
        let distinct: BTreeSet<_> = self.vertices.iter().collect();
        if distinct.len() != k {
            return false;
        }
        self.vertices
            .iter()
            .zip(self.vertices.iter().cycle().skip(1))
            .all(|(&u, &v)| g.has_edge(u, v))
    }
}

/// Outcome of the parity-BFS bipartiteness test.
#[derive(Clone, Debug)]
pub enum Bipartition {
    /// Side assignment (0/1) per vertex.
    TwoColoring(Vec<u8>),
    /// A closed walk with an odd number of edges, as a vertex sequence
    /// starting and ending at the same vertex.
    OddClosedWalk(Vec<usize>),
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops,
    /// out-of-range vertices and duplicate pairs.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adj = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange { vertex: w, order: n });
                }
            }
            if !adj[u].insert(v) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adj[v].insert(u);
        }
        Ok(Graph { adj })
    }

    /// Path on `n` vertices, `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::build(n, &edges).expect("path edges are valid")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::build(n, &edges).expect("cycle edges are valid")
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::build(n, &edges).expect("complete-graph edges are valid")
    }

    /// Star `K_{1,k}` with center 0.
    pub fn star(k: usize) -> Graph {
        let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
        Graph::build(k + 1, &edges).expect("star edges are valid")
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in self.vertices() {
            for &v in self.adj[u].range(u + 1..) {
                out.push((u, v));
            }
        }
        out
    }

    /// Closed neighborhood of `v` as a bitmask; requires `n <= 64`.
    pub fn closed_neighborhood_mask(&self, v: usize) -> u64 {
        debug_assert!(self.order() <= 64);
        let mut m = 1u64 << v;
        for &w in &self.adj[v] {
            m |= 1 << w;
        }
        m
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.order()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.order()
    }

    /// Parity BFS: a 2-coloring, or an odd closed walk when none exists.
    pub fn bipartition(&self) -> Bipartition {
        let n = self.order();
        let mut color = vec![u8::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        parent[v] = u;
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        // Same-parity edge: root->u, edge u-v, v->root is
                        // a closed walk with an odd number of edges.
                        let ascend = |mut w: usize| {
                            let mut path = vec![w];
                            while parent[w] != usize::MAX {
                                w = parent[w];
                                path.push(w);
                            }
                            path
                        };
                        let up = ascend(u);
                        let mut walk: Vec<usize> = up.iter().rev().copied().collect();
                        walk.extend(ascend(v));
                        return Bipartition::OddClosedWalk(walk);
                    }
                }
            }
        }
        Bipartition::TwoColoring(color)
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartition(), Bipartition::TwoColoring(_))
    }

    /// Length of the shortest odd cycle via per-source parity-layered BFS,
    /// with a witness; `None` iff bipartite.
    pub fn odd_girth(&self) -> Option<(usize, CycleWitness)> {
        let n = self.order();
        let mut best = usize::MAX;
        for s in 0..n {
            // dist[v][p]: fewest edges from s to v along a walk of parity p.
            let mut dist = vec![[usize::MAX; 2]; n];
            dist[s][0] = 0;
            let mut queue = VecDeque::from([(s, 0usize)]);
            while let Some((u, p)) = queue.pop_front() {
                for &v in &self.adj[u] {
                    let q = 1 - p;
                    if dist[v][q] == usize::MAX {
                        dist[v][q] = dist[u][p] + 1;
                        queue.push_back((v, q));
                    }
                }
            }
            best = best.min(dist[s][1]);
        }
        if best == usize::MAX {
            return None;
        }
        let witness = self
            .cycles_of_length(best)
            .into_iter()
            .next()
            .expect("an odd cycle of the detected length exists");
        Some((best, witness))
    }

    /// Length of the shortest cycle with a witness; `None` for forests.
    pub fn girth(&self) -> Option<(usize, CycleWitness)> {
        let n = self.order();
        let mut best = usize::MAX;
        // Min over sources of the shortest cycle seen from each BFS; the
        // minimum over all sources is exact.
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        best = best.min(dist[u] + dist[v] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            return None;
        }
        let witness = self
            .cycles_of_length(best)
            .into_iter()
            .next()
            .expect("a cycle of the detected girth exists");
        Some((best, witness))
    }

    /// All cycles of exactly `len` edges, each reported once in canonical
    /// orientation, in lexicographic order.
    pub fn cycles_of_length(&self, len: usize) -> Vec<CycleWitness> {
        let mut out = Vec::new();
        if len < 3 {
            return out;
        }
        let mut path = Vec::with_capacity(len);
        let mut in_path = vec![false; self.order()];
        for root in self.vertices() {
            path.push(root);
            in_path[root] = true;
            self.cycle_dfs(root, len, &mut path, &mut in_path, &mut out);
            in_path[root] = false;
            path.pop();
        }
        out
    }

    fn cycle_dfs(
        &self,
        root: usize,
        len: usize,
        path: &mut Vec<usize>,
        in_path: &mut [bool],
        out: &mut Vec<CycleWitness>,
    ) {
        let last = *path.last().unwrap();
        if path.len() == len {
            // Close the cycle; direction dedup: second vertex < last.
            if self.has_edge(last, root) && path[1] < path[len - 1] {
                out.push(CycleWitness {
                    vertices: path.clone(),
                });
            }
            return;
        }
        for &w in &self.adj[last] {
            // Root is the smallest vertex on the cycle: rotation dedup.
            if w > root && !in_path[w] {
                path.push(w);
                in_path[w] = true;
                self.cycle_dfs(root, len, path, in_path, out);
                in_path[w] = false;
                path.pop();
            }
        }
    }

    /// All shortest odd cycles (length = odd girth), canonical and
    /// deduplicated. Errors on bipartite input.
    pub fn shortest_odd_cycles(&self) -> Result<Vec<CycleWitness>, GraphError> {
        let (go, _) = self.odd_girth().ok_or(GraphError::Bipartite)?;
        Ok(self.cycles_of_length(go))
    }

    /// Coalescence: identify `v1` of `self` with `v2` of `other`.
    ///
    /// Vertices of `self` keep their ids; vertices of `other` follow in
    /// order, skipping `v2` (which becomes `v1`). Order of the result is
    /// `n1 + n2 - 1` and the merged vertex keeps both neighborhoods.
    pub fn coalesce(
        &self,
        v1: usize,
        other: &Graph,
        v2: usize,
    ) -> Result<Graph, GraphError> {
        let (n1, n2) = (self.order(), other.order());
        if v1 >= n1 {
            return Err(GraphError::OutOfRange { vertex: v1, order: n1 });
        }
        if v2 >= n2 {
            return Err(GraphError::OutOfRange { vertex: v2, order: n2 });
        }
        let mut map = Vec::with_capacity(n2);
        let mut next = n1;
        for w in 0..n2 {
            if w == v2 {
                map.push(v1);
            } else {
                map.push(next);
                next += 1;
            }
        }
        let mut edges = self.edges();
        for (u, v) in other.edges() {
            edges.push((map[u], map[v]));
        }
        Graph::build(n1 + n2 - 1, &edges)
    }

    /// Vertices of degree one.
    pub fn pendant_vertices(&self) -> Vec<usize> {
        self.vertices().filter(|&v| self.degree(v) == 1).collect()
    }

    /// Vertices adjacent to at least one pendant vertex.
    pub fn pendant_neighbors(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for v in self.vertices() {
            if self.degree(v) == 1 {
                out.insert(*self.adj[v].iter().next().unwrap());
            }
        }
        out
    }

    /// Value-semantics edge deletion; every edge must be present.
    pub fn delete_edges(&self, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adj = self.adj.clone();
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= adj.len() {
                    return Err(GraphError::OutOfRange { vertex: w, order: adj.len() });
                }
            }
            if !adj[u].remove(&v) {
                return Err(GraphError::MissingEdge(u, v));
            }
            adj[v].remove(&u);
        }
        Ok(Graph { adj })
    }

    /// Value-semantics edge insertion; every edge must be absent.
    pub fn add_edges(&self, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adj = self.adj.clone();
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= adj.len() {
                    return Err(GraphError::OutOfRange { vertex: w, order: adj.len() });
                }
            }
            if !adj[u].insert(v) {
                return Err(GraphError::EdgePresent(u, v));
            }
            adj[v].insert(u);
        }
        Ok(Graph { adj })
    }

    /// BFS distances from `v`; `None` for unreachable vertices.
    pub fn distances_from(&self, v: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[v] = Some(0);
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(dist[u].unwrap() + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        self.distances_from(u)[v]
    }

    /// Distance between two vertex sets: min pairwise vertex distance.
    pub fn set_distance(&self, a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> Option<usize> {
        let mut best = None;
        for &u in a {
            let dist = self.distances_from(u);
            for &v in b {
                if let Some(d) = dist[v] {
                    best = Some(best.map_or(d, |cur: usize| cur.min(d)));
                }
            }
        }
        best
    }

    /// Connected components of the subgraph induced on `within`, as vertex
    /// sets in the host graph's ids.
    pub fn components_within(&self, within: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in within {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            comp.insert(start);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if within.contains(&v) && seen.insert(v) {
                        comp.insert(v);
                        queue.push_back(v);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Parses the edge-list text format: `#` comment lines, a `p <n>`
    /// header, then one `<u> <v>` pair per line (0-based ids).
    pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
        let mut order = None;
        let mut edges = Vec::new();
        let mut header_line = 0;
        for (i, raw) in text.lines().enumerate() {
            let lineno = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if order.is_none() {
                let mut parts = line.split_whitespace();
                if parts.next() != Some("p") {
                    return Err(ParseError {
                        line: lineno,
                        message: "expected header `p <n>`".into(),
                    });
                }
                let n: usize = parts
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| ParseError {
                        line: lineno,
                        message: "header needs a vertex count".into(),
                    })?;
                if parts.next().is_some() {
                    return Err(ParseError {
                        line: lineno,
                        message: "trailing tokens after header".into(),
                    });
                }
                if n == 0 {
                    return Err(ParseError {
                        line: lineno,
                        message: "vertex count must be positive".into(),
                    });
                }
                order = Some(n);
                header_line = lineno;
                continue;
            }
            let mut parts = line.split_whitespace();
            let parse_id = |tok: Option<&str>| -> Result<usize, ParseError> {
                tok.and_then(|t| t.parse().ok()).ok_or_else(|| ParseError {
                    line: lineno,
                    message: format!("expected `<u> <v>`, got `{line}`"),
                })
            };
            let u = parse_id(parts.next())?;
            let v = parse_id(parts.next())?;
            if parts.next().is_some() {
                return Err(ParseError {
                    line: lineno,
                    message: "trailing tokens after edge".into(),
                });
            }
            edges.push((u, v, lineno));
        }
        let n = order.ok_or(ParseError {
            line: text.lines().count().max(1),
            message: "missing `p <n>` header".into(),
        })?;
        let _ = header_line;
        let mut adj = vec![BTreeSet::new(); n];
        for (u, v, lineno) in edges {
            let fail = |e: GraphError| ParseError {
                line: lineno,
                message: e.to_string(),
            };
            if u == v {
                return Err(fail(GraphError::SelfLoop(u)));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(fail(GraphError::OutOfRange { vertex: w, order: n }));
                }
            }
            if !adj[u].insert(v) {
                return Err(fail(GraphError::DuplicateEdge(u, v)));
            }
            adj[v].insert(u);
        }
        Ok(Graph { adj })
    }

    /// Serializes to the edge-list text format.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("p {}\n", self.order());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// DOT export: undirected graph with plain integer node ids.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        for v in self.vertices() {
            out.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn fig_3_4_g() -> Graph {
        Graph::build(
            9,
            &[
                (0, 1),
                (0, 4),
                (0, 7),
                (0, 8),
                (1, 2),
                (1, 5),
                (2, 3),
                (3, 4),
                (3, 6),
                (4, 5),
                (6, 7),
            ],
        )
        .unwrap()
    }

    fn fig_3_4_h() -> Graph {
        // Right panel of the same figure: G minus edges {0-4, 6-7}.
        fig_3_4_g().delete_edges(&[(0, 4), (6, 7)]).unwrap()
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(Graph::build(3, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::build(3, &[(0, 3)]),
            Err(GraphError::OutOfRange { vertex: 3, order: 3 })
        );
        assert_eq!(
            Graph::build(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(1, 0))
        );
        assert_eq!(Graph::build(0, &[]), Err(GraphError::Empty));
    }

    #[test]
    fn triangle_basics() {
        let k3 = Graph::complete(3);
        assert_eq!(k3.order(), 3);
        assert_eq!(k3.size(), 3);
        assert!(k3.is_connected());
        assert!(!k3.is_bipartite());
        assert_eq!(k3.odd_girth().unwrap().0, 3);
        assert_eq!(k3.girth().unwrap().0, 3);
        let cycles = k3.shortest_odd_cycles().unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].vertices(), &[0, 1, 2]);
    }

    #[test]
    fn single_vertex_and_disconnected() {
        let single = Graph::build(1, &[]).unwrap();
        assert!(single.is_connected());
        assert!(single.girth().is_none());
        let two = Graph::build(2, &[]).unwrap();
        assert!(!two.is_connected());
    }

    #[test]
    fn bipartite_examples() {
        assert!(Graph::path(4).is_bipartite());
        assert!(!Graph::complete(3).is_bipartite());
        match Graph::complete(3).bipartition() {
            Bipartition::OddClosedWalk(walk) => {
                assert_eq!(walk.first(), walk.last());
                assert!(walk.len() % 2 == 0, "odd edge count means even vertex-list length: {walk:?}");
            }
            Bipartition::TwoColoring(_) => panic!("K3 is not bipartite"),
        }
        match Graph::path(4).bipartition() {
            Bipartition::TwoColoring(c) => {
                for (u, v) in Graph::path(4).edges() {
                    assert_ne!(c[u], c[v]);
                }
            }
            Bipartition::OddClosedWalk(_) => panic!("P4 is bipartite"),
        }
    }

    #[test]
    fn odd_girth_examples() {
        assert_eq!(Graph::cycle(5).odd_girth().unwrap().0, 5);
        assert!(Graph::path(5).odd_girth().is_none());
        assert!(Graph::path(5).girth().is_none());
        let (go, w) = fig_3_4_g().odd_girth().unwrap();
        assert_eq!(go, 5);
        assert!(w.validate(&fig_3_4_g()));
    }

    #[test]
    fn fig_3_4_structure() {
        let g = fig_3_4_g();
        assert!(g.is_connected());
        assert!(!g.is_bipartite());
        assert_eq!(g.size(), 11);
        let cycles = g.shortest_odd_cycles().unwrap();
        // The paper's cycle v1 v5 v4 v7 v8 is (0,4,3,6,7), canonical.
        assert!(cycles
            .iter()
            .any(|c| c.vertices() == [0, 4, 3, 6, 7]));
        for c in &cycles {
            assert!(c.validate(&g));
        }
        let h = fig_3_4_h();
        assert_eq!(h.order(), 9);
        assert_eq!(h.size(), 9);
        assert_eq!(h.girth().unwrap().0, 5);
        // H is a subgraph of G as edge sets.
        let g_edges: BTreeSet<_> = g.edges().into_iter().collect();
        for e in h.edges() {
            assert!(g_edges.contains(&e));
        }
    }

    #[test]
    fn coalesce_examples() {
        // K3 with a P2 end glued on vertex 0: triangle plus one pendant.
        let glued = Graph::complete(3).coalesce(0, &Graph::path(2), 0).unwrap();
        assert_eq!(glued.order(), 4);
        assert_eq!(glued.size(), 4);
        assert_eq!(glued.degree(0), 3);
        assert_eq!(glued.pendant_vertices(), vec![3]);

        // Coalescing with a single vertex changes nothing but labels.
        let g = fig_3_4_g();
        let same = Graph::build(1, &[]).unwrap().coalesce(0, &g, 3).unwrap();
        assert_eq!(same.order(), g.order());
        assert_eq!(same.size(), g.size());

        // Two paths glued end to end form P3.
        let p3 = Graph::path(2).coalesce(1, &Graph::path(2), 0).unwrap();
        assert_eq!(p3.order(), 3);
        assert_eq!(p3.size(), 2);
        assert!(p3.is_connected());
        assert_eq!(p3.pendant_vertices().len(), 2);
    }

    #[test]
    fn pendant_sets() {
        assert_eq!(
            Graph::star(4).pendant_neighbors(),
            BTreeSet::from([0usize])
        );
        assert!(Graph::cycle(5).pendant_neighbors().is_empty());
    }

    #[test]
    fn edge_surgery() {
        let k3 = Graph::complete(3);
        let p3 = k3.delete_edges(&[(0, 1)]).unwrap();
        assert_eq!(p3.size(), 2);
        assert!(p3.is_bipartite());
        let back = p3.add_edges(&[(0, 1)]).unwrap();
        assert_eq!(back.size(), 3);
        assert_eq!(
            k3.delete_edges(&[(0, 1), (0, 1)]),
            Err(GraphError::MissingEdge(0, 1))
        );
        assert_eq!(k3.add_edges(&[(0, 1)]), Err(GraphError::EdgePresent(0, 1)));
        // Inputs are untouched.
        assert_eq!(k3.size(), 3);
    }

    #[test]
    fn distances() {
        let p5 = Graph::path(5);
        assert_eq!(p5.distance(0, 4), Some(4));
        let a = BTreeSet::from([0usize]);
        let b = BTreeSet::from([3usize, 4]);
        assert_eq!(p5.set_distance(&a, &b), Some(3));
    }

    #[test]
    fn components_within_subsets() {
        let p5 = Graph::path(5);
        let within = BTreeSet::from([0usize, 1, 3]);
        let comps = p5.components_within(&within);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0], BTreeSet::from([0usize, 1]));
        assert_eq!(comps[1], BTreeSet::from([3usize]));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = fig_3_4_g();
        let text = g.to_edge_list();
        let back = Graph::parse_edge_list(&text).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = Graph::parse_edge_list("# c\np 3\n0 1\n0 zebra\n").unwrap_err();
        assert_eq!(err.line, 4);
        let err = Graph::parse_edge_list("0 1\n").unwrap_err();
        assert_eq!(err.line, 1);
        let err = Graph::parse_edge_list("p 2\n0 1\n0 1\n").unwrap_err();
        assert_eq!(err.line, 3);
        let err = Graph::parse_edge_list("p 2\n0 5\n").unwrap_err();
        assert_eq!(err.line, 2);
    }

    #[test]
    fn dot_export_shape() {
        let dot = Graph::path(2).to_dot();
        assert!(dot.starts_with("graph {"));
        assert!(dot.contains("0 -- 1;"));
    }

    #[test]
    fn cycle_enumeration_canonical() {
        // C5 has exactly one 5-cycle; K4 has exactly four triangles.
        assert_eq!(Graph::cycle(5).cycles_of_length(5).len(), 1);
        assert_eq!(Graph::complete(4).cycles_of_length(3).len(), 4);
        assert_eq!(Graph::complete(4).cycles_of_length(4).len(), 3);
    }
}
