//! Simple undirected graphs with canonical edge numbering.
//!
//! Vertices and edges are 1-based everywhere, matching the file formats.
//! Edge ids are assigned by scanning vertices in increasing order and each
//! adjacency row left to right; an unnumbered slot gets the next id and the
//! mirror slot gets the same id.

use std::collections::VecDeque;

use crate::error::GraphError;

/// Immutable simple undirected graph. `adjacency[v]` preserves input order;
/// `incidence[v][i]` is the edge id of the slot `adjacency[v][i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adjacency: Vec<Vec<usize>>,
    incidence: Vec<Vec<usize>>,
    edge_ends: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from 1-based per-vertex neighbor lists.
    ///
    /// Edge numbering follows the row scan described at module level, so the
    /// same lists always produce the same ids.
    pub fn from_adjacency(n: usize, lists: &[Vec<usize>]) -> Result<Graph, GraphError> {
        if lists.len() != n {
            return Err(GraphError::RowCount {
                expected: n,
                got: lists.len(),
            });
        }
        let mut adjacency = vec![Vec::new(); n + 1];
        for (i, row) in lists.iter().enumerate() {
            let u = i + 1;
            let mut seen = vec![false; n + 1];
            for &v in row {
                if v == 0 || v > n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
                if v == u {
                    return Err(GraphError::SelfLoop { vertex: u });
                }
                if seen[v] {
                    return Err(GraphError::DuplicateNeighbor {
                        row: u,
                        neighbor: v,
                    });
                }
                seen[v] = true;
            }
            adjacency[u] = row.clone();
        }
        for u in 1..=n {
            for &v in &adjacency[u] {
                if !adjacency[v].contains(&u) {
                    return Err(GraphError::Asymmetric { u, v });
                }
            }
        }
        // Row-scan numbering (procedure style: first unnumbered slot gets the
        // next id, the mirror slot the same id).
        let mut incidence: Vec<Vec<usize>> = adjacency.iter().map(|r| vec![0; r.len()]).collect();
        let mut edge_ends = vec![(0, 0)];
        let mut next = 0;
        for u in 1..=n {
            for i in 0..adjacency[u].len() {
                if incidence[u][i] != 0 {
                    continue;
                }
                let v = adjacency[u][i];
                next += 1;
                incidence[u][i] = next;
                edge_ends.push((u, v));
                let j = adjacency[v]
                    .iter()
                    .zip(&incidence[v])
                    .position(|(&w, &id)| w == u && id == 0)
                    .expect("mirror slot exists for symmetric adjacency");
                incidence[v][j] = next;
            }
        }
        Ok(Graph {
            n,
            m: next,
            adjacency,
            incidence,
            edge_ends,
        })
    }

    /// Builds a graph from an explicit edge list; edge `i+1` is `edges[i]`.
    /// Adjacency rows accumulate neighbors in edge order.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adjacency = vec![Vec::new(); n + 1];
        let mut incidence = vec![Vec::new(); n + 1];
        let mut edge_ends = vec![(0, 0)];
        for (i, &(u, v)) in edges.iter().enumerate() {
            let id = i + 1;
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            if adjacency[u].contains(&v) {
                return Err(GraphError::DuplicateNeighbor {
                    row: u,
                    neighbor: v,
                });
            }
            adjacency[u].push(v);
            incidence[u].push(id);
            adjacency[v].push(u);
            incidence[v].push(id);
            edge_ends.push((u, v));
        }
        Ok(Graph {
            n,
            m: edges.len(),
            adjacency,
            incidence,
            edge_ends,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    /// Cyclomatic number m - n + 1.
    pub fn cyclomatic_number(&self) -> usize {
        self.m + 1 - self.n
    }

    /// Neighbors of `v` in input order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Edge ids incident to `v`, aligned with `neighbors(v)`.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    /// Endpoints of edge `e` as discovered by the row scan.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edge_ends[e]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Edge id between `u` and `v`, if present.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.adjacency[u]
            .iter()
            .position(|&w| w == v)
            .map(|i| self.incidence[u][i])
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = usize> {
        1..=self.m
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n + 1];
        let mut queue = VecDeque::from([1usize]);
        seen[1] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n
    }

    /// BFS distances from `s` to every vertex (`usize::MAX` if unreachable).
    pub fn bfs_distances(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n + 1];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Checks the admissible input class: connected, min degree 3, no bridges,
    /// no cut vertices. Collects every violation instead of stopping early.
    pub fn validate_nonseparable(&self) -> NonseparabilityReport {
        let mut violations = Vec::new();
        if !self.is_connected() {
            violations.push(Violation::Disconnected);
        }
        for v in 1..=self.n {
            let d = self.degree(v);
            if d < 3 {
                violations.push(Violation::LowDegree {
                    vertex: v,
                    degree: d,
                });
            }
        }
        let (cuts, bridges) = self.cut_vertices_and_bridges();
        for v in cuts {
            violations.push(Violation::CutVertex { vertex: v });
        }
        for e in bridges {
            violations.push(Violation::Bridge { edge: e });
        }
        NonseparabilityReport { violations }
    }

    /// Iterative lowpoint DFS over the first component.
    fn cut_vertices_and_bridges(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.n;
        let mut disc = vec![0usize; n + 1];
        let mut low = vec![0usize; n + 1];
        let mut is_cut = vec![false; n + 1];
        let mut bridges = Vec::new();
        let mut timer = 0usize;
        if n == 0 {
            return (Vec::new(), Vec::new());
        }
        // stack of (vertex, parent edge id, next neighbor slot)
        let mut stack = vec![(1usize, 0usize, 0usize)];
        timer += 1;
        disc[1] = timer;
        low[1] = timer;
        let mut root_children = 0usize;
        while let Some(&mut (u, pe, ref mut slot)) = stack.last_mut() {
            if *slot < self.adjacency[u].len() {
                let i = *slot;
                *slot += 1;
                let v = self.adjacency[u][i];
                let e = self.incidence[u][i];
                if e == pe {
                    continue;
                }
                if disc[v] == 0 {
                    timer += 1;
                    disc[v] = timer;
                    low[v] = timer;
                    if u == 1 {
                        root_children += 1;
                    }
                    stack.push((v, e, 0));
                } else if disc[v] < low[u] {
                    low[u] = disc[v];
                }
            } else {
                stack.pop();
                if let Some(&mut (p, _, _)) = stack.last_mut() {
                    if low[u] < low[p] {
                        low[p] = low[u];
                    }
                    if low[u] > disc[p] {
                        bridges.push(pe);
                    }
                    if p != 1 && low[u] >= disc[p] {
                        is_cut[p] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[1] = true;
        }
        let cuts = (1..=n).filter(|&v| is_cut[v]).collect();
        bridges.sort_unstable();
        (cuts, bridges)
    }

    /// Deterministic DFS tree from vertex 1 following adjacency order;
    /// everything outside the tree is a chord.
    pub fn spanning_split(&self) -> Result<SpanningTreeSplit, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let mut in_tree = vec![false; self.m + 1];
        let mut seen = vec![false; self.n + 1];
        seen[1] = true;
        let mut stack = vec![(1usize, 0usize)];
        while let Some(&mut (u, ref mut slot)) = stack.last_mut() {
            if *slot < self.adjacency[u].len() {
                let i = *slot;
                *slot += 1;
                let v = self.adjacency[u][i];
                if !seen[v] {
                    seen[v] = true;
                    in_tree[self.incidence[u][i]] = true;
                    stack.push((v, 0));
                }
            } else {
                stack.pop();
            }
        }
        Ok(SpanningTreeSplit::from_tree_flags(self, in_tree))
    }
}

/// Partition of the edge set into a spanning tree and its chords.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTreeSplit {
    tree_edges: Vec<usize>,
    chords: Vec<usize>,
    is_tree: Vec<bool>,
}

impl SpanningTreeSplit {
    fn from_tree_flags(g: &Graph, in_tree: Vec<bool>) -> SpanningTreeSplit {
        let tree_edges: Vec<usize> = g.edges().filter(|&e| in_tree[e]).collect();
        let chords: Vec<usize> = g.edges().filter(|&e| !in_tree[e]).collect();
        SpanningTreeSplit {
            tree_edges,
            chords,
            is_tree: in_tree,
        }
    }

    /// Builds a split from an explicit tree edge set, checking that it is a
    /// spanning tree of `g`. Used when the tree choice comes from outside.
    pub fn from_tree_edges(g: &Graph, tree: &[usize]) -> Result<SpanningTreeSplit, GraphError> {
        let mut in_tree = vec![false; g.edge_count() + 1];
        for &e in tree {
            if e == 0 || e > g.edge_count() {
                return Err(GraphError::EdgeOutOfRange {
                    edge: e,
                    m: g.edge_count(),
                });
            }
            in_tree[e] = true;
        }
        if tree.len() != g.vertex_count() - 1 {
            return Err(GraphError::NotATree);
        }
        // connectivity over tree edges only
        let mut seen = vec![false; g.vertex_count() + 1];
        let mut queue = VecDeque::from([1usize]);
        seen[1] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for (i, &v) in g.neighbors(u).iter().enumerate() {
                if in_tree[g.incident_edges(u)[i]] && !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        if count != g.vertex_count() {
            return Err(GraphError::NotATree);
        }
        Ok(SpanningTreeSplit::from_tree_flags(g, in_tree))
    }

    pub fn tree_edges(&self) -> &[usize] {
        &self.tree_edges
    }

    pub fn chords(&self) -> &[usize] {
        &self.chords
    }

    pub fn is_chord(&self, e: usize) -> bool {
        !self.is_tree[e]
    }
}

/// Result of `validate_nonseparable`: everything wrong with the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonseparabilityReport {
    pub violations: Vec<Violation>,
}

impl NonseparabilityReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Disconnected,
    LowDegree { vertex: usize, degree: usize },
    Bridge { edge: usize },
    CutVertex { vertex: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Disconnected => write!(f, "graph is disconnected"),
            Violation::LowDegree { vertex, degree } => {
                write!(f, "vertex {vertex} has degree {degree} < 3")
            }
            Violation::Bridge { edge } => write!(f, "edge {edge} is a bridge"),
            Violation::CutVertex { vertex } => write!(f, "vertex {vertex} is a cut vertex"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{complete_graph, g1_adjacency, k5, sample_7_16};

    #[test]
    fn k5_numbering_matches_row_scan() {
        let g = k5();
        assert_eq!(g.edge_count(), 10);
        assert_eq!(g.endpoints(1), (1, 2));
        assert_eq!(g.endpoints(5), (2, 3));
        assert_eq!(g.endpoints(10), (4, 5));
    }

    #[test]
    fn triangle_numbering() {
        let g = Graph::from_adjacency(3, &[vec![2, 3], vec![1, 3], vec![1, 2]]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.endpoints(1), (1, 2));
        assert_eq!(g.endpoints(2), (1, 3));
        assert_eq!(g.endpoints(3), (2, 3));
    }

    #[test]
    fn seven_vertex_graph_has_sixteen_edges() {
        let g = sample_7_16();
        assert_eq!(g.edge_count(), 16);
        let degrees: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
        assert_eq!(degrees, vec![5, 5, 4, 4, 5, 5, 4]);
        // incidence row of vertex 1 per the reference listing
        assert_eq!(g.incident_edges(1), &[1, 2, 3, 4, 5]);
        assert_eq!(g.incident_edges(7), &[5, 11, 15, 16]);
    }

    #[test]
    fn rejects_malformed_adjacency() {
        assert!(matches!(
            Graph::from_adjacency(2, &[vec![2], vec![]]),
            Err(GraphError::Asymmetric { .. })
        ));
        assert!(matches!(
            Graph::from_adjacency(2, &[vec![1], vec![2]]),
            Err(GraphError::SelfLoop { .. })
        ));
        assert!(matches!(
            Graph::from_adjacency(2, &[vec![2, 2], vec![1, 1]]),
            Err(GraphError::DuplicateNeighbor { .. })
        ));
    }

    #[test]
    fn k5_is_nonseparable() {
        assert!(k5().validate_nonseparable().is_ok());
    }

    #[test]
    fn path_violations() {
        let g = Graph::from_adjacency(3, &[vec![2], vec![1, 3], vec![2]]).unwrap();
        let report = g.validate_nonseparable();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::LowDegree { .. })));
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Bridge { .. })));
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::CutVertex { vertex: 2 })));
    }

    #[test]
    fn two_triangles_sharing_a_vertex_have_a_cut_vertex() {
        // oracle case: vertex 1 is the articulation point
        let g = Graph::from_adjacency(
            5,
            &[
                vec![2, 3, 4, 5],
                vec![1, 3],
                vec![1, 2],
                vec![1, 5],
                vec![1, 4],
            ],
        )
        .unwrap();
        let report = g.validate_nonseparable();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::CutVertex { vertex: 1 })));
        assert!(!report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Bridge { .. })));
    }

    #[test]
    fn spanning_split_counts() {
        let g = k5();
        let split = g.spanning_split().unwrap();
        assert_eq!(split.tree_edges().len(), 4);
        assert_eq!(split.chords().len(), 6);

        let g1 = Graph::from_adjacency(6, &g1_adjacency()).unwrap();
        let split = g1.spanning_split().unwrap();
        assert_eq!(split.chords().len(), 8);
    }

    #[test]
    fn tree_input_has_no_chords() {
        let g = Graph::from_adjacency(4, &[vec![2], vec![1, 3, 4], vec![2], vec![2]]).unwrap();
        let split = g.spanning_split().unwrap();
        assert!(split.chords().is_empty());
        assert_eq!(split.tree_edges().len(), 3);
    }

    #[test]
    fn chords_equal_cyclomatic_number_on_complete_graphs() {
        for n in 3..=8 {
            let g = complete_graph(n);
            let split = g.spanning_split().unwrap();
            assert_eq!(split.chords().len(), g.cyclomatic_number());
        }
    }
}
