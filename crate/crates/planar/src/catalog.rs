//! Small named graphs used across tests, benchmarks and the guide.
//!
//! The `sample_*` graphs are nonseparable instances sized `n`×`m`; their
//! adjacency rows are sorted, so the canonical edge numbering is stable.

use crate::graph::Graph;

/// Complete graph on `n` vertices.
pub fn complete_graph(n: usize) -> Graph {
    let lists: Vec<Vec<usize>> = (1..=n)
        .map(|u| (1..=n).filter(|&v| v != u).collect())
        .collect();
    Graph::from_adjacency(n, &lists).unwrap()
}

/// Complete bipartite graph with parts 1..=a and a+1..=a+b.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let n = a + b;
    let lists: Vec<Vec<usize>> = (1..=n)
        .map(|u| {
            if u <= a {
                (a + 1..=n).collect()
            } else {
                (1..=a).collect()
            }
        })
        .collect();
    Graph::from_adjacency(n, &lists).unwrap()
}

/// K5, the smallest nonplanar complete graph.
pub fn k5() -> Graph {
    complete_graph(5)
}

/// The 3-cube (8 vertices, 12 edges).
pub fn cube() -> Graph {
    let lists = vec![
        vec![2, 4, 5],
        vec![1, 3, 6],
        vec![2, 4, 7],
        vec![1, 3, 8],
        vec![1, 6, 8],
        vec![2, 5, 7],
        vec![3, 6, 8],
        vec![4, 5, 7],
    ];
    Graph::from_adjacency(8, &lists).unwrap()
}

/// Wheel: hub n+1 joined to an n-cycle 1..n.
pub fn wheel(n: usize) -> Graph {
    let hub = n + 1;
    let mut lists: Vec<Vec<usize>> = (1..=n)
        .map(|u| {
            let prev = if u == 1 { n } else { u - 1 };
            let next = if u == n { 1 } else { u + 1 };
            let mut row = vec![prev, next, hub];
            row.sort_unstable();
            row
        })
        .collect();
    lists.push((1..=n).collect());
    Graph::from_adjacency(hub, &lists).unwrap()
}

pub fn g1_adjacency() -> Vec<Vec<usize>> {
    vec![
        vec![2, 4, 5, 6],
        vec![1, 3, 4, 5, 6],
        vec![2, 4, 6],
        vec![1, 2, 3, 5, 6],
        vec![1, 2, 4, 6],
        vec![1, 2, 3, 4, 5],
    ]
}

/// 6-vertex, 13-edge sample (K6 minus two edges at one vertex).
pub fn sample_6_13() -> Graph {
    Graph::from_adjacency(6, &g1_adjacency()).unwrap()
}

/// 7-vertex, 16-edge sample; the graph behind the bundled `7.grf` file.
pub fn sample_7_16() -> Graph {
    let lists = vec![
        vec![2, 3, 5, 6, 7],
        vec![1, 3, 4, 5, 6],
        vec![1, 2, 4, 7],
        vec![2, 3, 5, 6],
        vec![1, 2, 4, 6, 7],
        vec![1, 2, 4, 5, 7],
        vec![1, 3, 5, 6],
    ];
    Graph::from_adjacency(7, &lists).unwrap()
}

/// 11-vertex, 20-edge planar sample.
pub fn sample_11_20() -> Graph {
    let lists = vec![
        vec![2, 3, 6, 8],
        vec![1, 5, 9],
        vec![1, 4, 7],
        vec![3, 6, 7],
        vec![2, 6, 7],
        vec![1, 4, 5, 7],
        vec![3, 4, 5, 6, 8, 11],
        vec![1, 7, 9, 10],
        vec![2, 8, 10, 11],
        vec![8, 9, 11],
        vec![7, 9, 10],
    ];
    Graph::from_adjacency(11, &lists).unwrap()
}

/// 14-vertex cubic sample (generalized Petersen style), 21 edges.
pub fn sample_14_21() -> Graph {
    let lists = vec![
        vec![2, 7, 12],
        vec![1, 3, 9],
        vec![2, 4, 13],
        vec![3, 5, 10],
        vec![4, 6, 14],
        vec![5, 7, 11],
        vec![1, 6, 8],
        vec![7, 9, 14],
        vec![2, 8, 10],
        vec![4, 9, 11],
        vec![6, 10, 12],
        vec![1, 11, 13],
        vec![3, 12, 14],
        vec![5, 8, 13],
    ];
    Graph::from_adjacency(14, &lists).unwrap()
}

/// 13-vertex, 22-edge sample. Its edge numbering follows the order below,
/// which is not the sorted row scan, so it is built from the edge list.
pub fn sample_13_22() -> Graph {
    let edges = [
        (1, 7),
        (1, 9),
        (1, 11),
        (2, 7),
        (2, 9),
        (2, 8),
        (2, 10),
        (3, 8),
        (3, 7),
        (3, 13),
        (3, 10),
        (4, 9),
        (4, 8),
        (4, 13),
        (4, 12),
        (4, 11),
        (5, 11),
        (5, 9),
        (5, 12),
        (6, 13),
        (6, 10),
        (6, 12),
    ];
    Graph::from_edge_list(13, &edges).unwrap()
}

/// 9-vertex, 20-edge sample.
pub fn sample_9_20() -> Graph {
    let lists = vec![
        vec![2, 3, 5, 6, 8],
        vec![1, 3, 5, 9],
        vec![1, 2, 4, 5, 7],
        vec![3, 5, 7, 9],
        vec![1, 2, 3, 4, 6, 7, 8],
        vec![1, 5, 8, 9],
        vec![3, 4, 5, 8],
        vec![1, 5, 6, 7],
        vec![2, 4, 6],
    ];
    Graph::from_adjacency(9, &lists).unwrap()
}

/// 7-vertex, 14-edge sample used by the edge-routing walkthrough.
pub fn sample_7_14() -> Graph {
    let lists = vec![
        vec![2, 3, 5],
        vec![1, 3, 4, 6, 7],
        vec![1, 2, 4, 5, 7],
        vec![2, 3, 5, 6],
        vec![1, 3, 4, 6],
        vec![2, 4, 5, 7],
        vec![2, 3, 6],
    ];
    Graph::from_adjacency(7, &lists).unwrap()
}

/// 21-vertex, 33-edge sample.
pub fn sample_21_33() -> Graph {
    let edges = [
        (1, 5),
        (1, 8),
        (1, 11),
        (1, 21),
        (2, 12),
        (2, 16),
        (2, 19),
        (2, 21),
        (3, 7),
        (3, 12),
        (3, 16),
        (4, 12),
        (4, 13),
        (4, 14),
        (4, 20),
        (5, 17),
        (5, 20),
        (6, 10),
        (6, 14),
        (6, 15),
        (7, 10),
        (7, 18),
        (8, 15),
        (8, 18),
        (9, 13),
        (9, 17),
        (9, 18),
        (10, 20),
        (11, 15),
        (11, 17),
        (13, 21),
        (14, 19),
        (16, 19),
    ];
    Graph::from_edge_list(21, &edges).unwrap()
}

/// 45-vertex, 72-edge sample used by the ring-projection walkthrough.
pub fn sample_45_72() -> Graph {
    let edges = [
        (1, 19),
        (1, 28),
        (1, 30),
        (1, 35),
        (1, 44),
        (2, 23),
        (2, 24),
        (2, 26),
        (2, 33),
        (2, 41),
        (3, 18),
        (3, 19),
        (3, 23),
        (3, 25),
        (3, 42),
        (3, 45),
        (4, 18),
        (4, 24),
        (4, 30),
        (5, 20),
        (5, 21),
        (5, 25),
        (5, 26),
        (6, 13),
        (6, 18),
        (6, 21),
        (6, 24),
        (7, 27),
        (7, 30),
        (7, 31),
        (8, 29),
        (8, 32),
        (8, 35),
        (9, 11),
        (9, 26),
        (9, 27),
        (10, 31),
        (10, 32),
        (10, 34),
        (11, 35),
        (11, 43),
        (12, 29),
        (12, 31),
        (12, 33),
        (13, 32),
        (13, 39),
        (14, 28),
        (14, 36),
        (14, 39),
        (15, 38),
        (15, 42),
        (15, 44),
        (16, 37),
        (16, 39),
        (16, 45),
        (17, 37),
        (17, 41),
        (17, 43),
        (19, 41),
        (20, 40),
        (20, 43),
        (21, 36),
        (22, 36),
        (22, 37),
        (22, 40),
        (23, 27),
        (25, 44),
        (28, 40),
        (29, 34),
        (33, 38),
        (34, 38),
        (42, 45),
    ];
    Graph::from_edge_list(45, &edges).unwrap()
}

/// 31-vertex, 147-edge sample; the layout walkthrough instance.
pub fn sample_31_147() -> Graph {
    let lists: Vec<Vec<usize>> = vec![
        vec![2, 3, 4, 5, 21, 22, 31],
        vec![1, 3, 4, 5, 6, 10, 11],
        vec![1, 2, 4, 5, 6, 10, 11, 16, 17],
        vec![1, 2, 3, 5, 11, 16, 17, 20, 21],
        vec![1, 2, 3, 4, 16, 20, 21, 22, 31],
        vec![2, 3, 7, 8, 9, 10, 11, 12, 13, 17, 18],
        vec![6, 8, 9, 10, 11, 12, 13, 14, 17, 18, 25, 26, 31],
        vec![6, 7, 9, 11, 12, 14, 17, 18, 25, 26, 30, 31],
        vec![6, 7, 8, 11, 17, 18, 19, 24, 26, 30],
        vec![2, 3, 6, 7, 11, 12, 13, 15, 27, 28],
        vec![2, 3, 4, 6, 7, 8, 9, 10, 16, 17, 18],
        vec![6, 7, 8, 10, 13, 14, 15, 25, 26, 31],
        vec![6, 7, 10, 12, 14, 15, 27, 28],
        vec![7, 8, 12, 13, 15, 25, 26, 27, 29, 31],
        vec![10, 12, 13, 14, 27, 28, 29, 31],
        vec![3, 4, 5, 11, 17, 18, 19, 20, 21, 23],
        vec![3, 4, 6, 7, 8, 9, 11, 16, 18, 19, 20, 23],
        vec![6, 7, 8, 9, 11, 16, 17, 19, 20, 23, 24, 30],
        vec![9, 16, 17, 18, 20, 22, 23, 24, 25, 30, 31],
        vec![4, 5, 16, 17, 18, 19, 21, 22, 23],
        vec![1, 4, 5, 16, 20, 22, 23, 31],
        vec![1, 5, 19, 20, 21, 23, 24, 25, 31],
        vec![16, 17, 18, 19, 20, 21, 22, 24, 25, 31],
        vec![9, 18, 19, 22, 23, 25, 26, 30, 31],
        vec![7, 8, 12, 14, 19, 22, 23, 24, 26, 30, 31],
        vec![7, 8, 9, 12, 14, 24, 25, 30, 31],
        vec![10, 13, 14, 15, 28, 29, 31],
        vec![10, 13, 15, 27, 29],
        vec![14, 15, 27, 28, 31],
        vec![8, 9, 18, 19, 24, 25, 26],
        vec![1, 5, 7, 8, 12, 14, 15, 19, 21, 22, 23, 24, 25, 26, 27, 29],
    ];
    Graph::from_adjacency(31, &lists).unwrap()
}
