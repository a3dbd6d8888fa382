//! Isometric-cycle enumeration.
//!
//! A simple cycle is isometric when the distance between any two of its
//! vertices measured inside the cycle equals their distance in the graph.
//! Every such cycle is recovered from an antipodal pair: a vertex facing an
//! edge (odd length) or a vertex facing a vertex (even length), joined by two
//! internally disjoint geodesics. Candidates built that way are filtered by
//! the metric test, deduplicated and sorted by their edge-id lists.

use std::collections::BTreeSet;

use crate::edgeset::{Cycle, CycleSystem, EdgeSet};
use crate::error::CycleError;
use crate::graph::Graph;

/// Wave depths rooted at an edge: depth(v1)=1, depth(v2)=2, everything else
/// reached breadth-first from v2 without ever expanding v1.
pub fn bfs_levels(g: &Graph, v1: usize, v2: usize) -> Result<Vec<usize>, CycleError> {
    if g.edge_between(v1, v2).is_none() {
        return Err(CycleError::NotAdjacent { u: v1, v: v2 });
    }
    let mut depth = vec![0usize; g.vertex_count() + 1];
    depth[v1] = 1;
    depth[v2] = 2;
    let mut frontier = vec![v2];
    let mut level = 2;
    while !frontier.is_empty() {
        level += 1;
        let mut next = Vec::new();
        for &u in &frontier {
            for &w in g.neighbors(u) {
                if depth[w] == 0 {
                    depth[w] = level;
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    if depth[1..].contains(&0) {
        return Err(CycleError::Disconnected);
    }
    Ok(depth)
}

/// True iff every pair of cycle vertices is as close in the graph as inside
/// the cycle. This is the defining metric test, usable as an oracle.
pub fn is_isometric(g: &Graph, c: &Cycle) -> bool {
    let walk = c.vertices();
    let len = walk.len();
    for i in 0..len {
        let dist = g.bfs_distances(walk[i]);
        for (j, &w) in walk.iter().enumerate().skip(i + 1) {
            let along = (j - i).min(len - (j - i));
            if dist[w] != along {
                return false;
            }
        }
    }
    true
}

/// Enumerates the full set of isometric cycles of a nonseparable graph,
/// sorted by their edge-id lists.
pub fn enumerate_isometric_cycles(g: &Graph) -> Result<CycleSystem, CycleError> {
    let report = g.validate_nonseparable();
    if !report.is_ok() {
        let msg = report
            .violations
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join("; ");
        return Err(CycleError::Separable(msg));
    }
    let n = g.vertex_count();
    let dist: Vec<Vec<usize>> = std::iter::once(Vec::new())
        .chain((1..=n).map(|v| g.bfs_distances(v)))
        .collect();

    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut consider = |walk: &[usize]| {
        if let Ok(c) = Cycle::from_vertex_walk(g, walk) {
            if is_isometric(g, &c) {
                found.insert(c.edge_ids());
            }
        }
    };

    // Odd cycles: apex w against an edge (u,v) with d(w,u) = d(w,v) = k.
    for w in 1..=n {
        for e in g.edges() {
            let (u, v) = g.endpoints(e);
            let k = dist[w][u];
            if k == 0 || k != dist[w][v] {
                continue;
            }
            for_each_geodesic_pair(g, &dist, w, u, v, |left, right| {
                // left: w..u, right: w..v; walk u..w..v plus edge (v,u)
                let mut walk: Vec<usize> = left.iter().rev().copied().collect();
                walk.extend(&right[1..]);
                consider(&walk);
            });
        }
    }
    // Even cycles: antipodal vertices w, z at distance k >= 2.
    for w in 1..=n {
        for z in w + 1..=n {
            let k = dist[w][z];
            if k < 2 {
                continue;
            }
            for_each_geodesic_pair(g, &dist, w, z, z, |left, right| {
                if left[1..left.len() - 1]
                    .iter()
                    .any(|x| right[1..right.len() - 1].contains(x))
                {
                    return;
                }
                let mut walk: Vec<usize> = left.to_vec();
                walk.extend(right[1..right.len() - 1].iter().rev());
                consider(&walk);
            });
        }
    }

    let cycles = found
        .into_iter()
        .map(|ids| Cycle::from_edge_set(g, EdgeSet::from_edges(g.edge_count(), &ids)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CycleSystem::new(g, cycles))
}

/// Calls `f(left, right)` for every pair of geodesics w->a and w->b that are
/// internally disjoint (and do not pass through each other's endpoint). For
/// the odd case a and b are the antipodal edge ends; for the even case a == b
/// and `f` receives every ordered pair of distinct geodesics once.
fn for_each_geodesic_pair<F: FnMut(&[usize], &[usize])>(
    g: &Graph,
    dist: &[Vec<usize>],
    w: usize,
    a: usize,
    b: usize,
    mut f: F,
) {
    let lefts = geodesics(g, dist, w, a);
    let rights = if a == b {
        lefts.clone()
    } else {
        geodesics(g, dist, w, b)
    };
    for (i, l) in lefts.iter().enumerate() {
        for (j, r) in rights.iter().enumerate() {
            if a == b && j <= i {
                continue;
            }
            // interiors must not meet; endpoints only at w (and z when a == b)
            let li = &l[1..];
            let ri = &r[1..];
            let overlap = li.iter().any(|x| ri.contains(x) && !(a == b && *x == a));
            if !overlap {
                f(l, r);
            }
        }
    }
}

/// All shortest paths from w to t as vertex lists starting at w.
fn geodesics(g: &Graph, dist: &[Vec<usize>], w: usize, t: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut path = vec![t];
    descend(g, dist, w, t, &mut path, &mut out);
    for p in &mut out {
        p.reverse();
    }
    out
}

fn descend(
    g: &Graph,
    dist: &[Vec<usize>],
    w: usize,
    cur: usize,
    path: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if cur == w {
        out.push(path.clone());
        return;
    }
    for &p in g.neighbors(cur) {
        if dist[w][p] + 1 == dist[w][cur] {
            path.push(p);
            descend(g, dist, w, p, path, out);
            path.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{complete_graph, cube, k5, sample_6_13, sample_7_16};

    #[test]
    fn wave_depths_on_k5() {
        let g = k5();
        assert_eq!(bfs_levels(&g, 1, 2).unwrap()[1..], [1, 2, 3, 3, 3]);
    }

    #[test]
    fn wave_depths_on_triangle_and_path() {
        let t = Graph::from_adjacency(3, &[vec![2, 3], vec![1, 3], vec![1, 2]]).unwrap();
        assert_eq!(bfs_levels(&t, 1, 2).unwrap()[1..], [1, 2, 3]);
        let p = Graph::from_adjacency(4, &[vec![2], vec![1, 3], vec![2, 4], vec![3]]).unwrap();
        assert_eq!(bfs_levels(&p, 1, 2).unwrap()[1..], [1, 2, 3, 4]);
    }

    #[test]
    fn wave_requires_adjacency_and_connectivity() {
        let g = k5();
        assert!(matches!(
            bfs_levels(&g, 1, 1),
            Err(CycleError::NotAdjacent { .. })
        ));
        let two = Graph::from_adjacency(4, &[vec![2], vec![1], vec![4], vec![3]]).unwrap();
        assert!(matches!(
            bfs_levels(&two, 1, 2),
            Err(CycleError::Disconnected)
        ));
    }

    #[test]
    fn k5_has_ten_triangles() {
        let g = k5();
        let sys = enumerate_isometric_cycles(&g).unwrap();
        let ids: Vec<Vec<usize>> = sys.cycles().iter().map(|c| c.edge_ids()).collect();
        assert_eq!(
            ids,
            vec![
                vec![1, 2, 5],
                vec![1, 3, 6],
                vec![1, 4, 7],
                vec![2, 3, 8],
                vec![2, 4, 9],
                vec![3, 4, 10],
                vec![5, 6, 8],
                vec![5, 7, 9],
                vec![6, 7, 10],
                vec![8, 9, 10],
            ]
        );
    }

    #[test]
    fn sample_6_13_has_thirteen_triangles() {
        let sys = enumerate_isometric_cycles(&sample_6_13()).unwrap();
        assert_eq!(sys.len(), 13);
        assert!(sys.cycles().iter().all(|c| c.len() == 3));
        assert_eq!(sys.cycle(0).edge_ids(), vec![1, 2, 6]);
        assert_eq!(sys.cycle(12).edge_ids(), vec![11, 12, 13]);
    }

    #[test]
    fn sample_7_16_has_nineteen_cycles() {
        let sys = enumerate_isometric_cycles(&sample_7_16()).unwrap();
        assert_eq!(sys.len(), 19);
        let ids: Vec<Vec<usize>> = sys.cycles().iter().map(|c| c.edge_ids()).collect();
        assert_eq!(ids[3], vec![2, 3, 10, 12]);
        assert_eq!(ids[18], vec![14, 15, 16]);
    }

    #[test]
    fn triangles_are_isometric_and_k5_squares_are_not() {
        let g = k5();
        let t = Cycle::from_vertex_walk(&g, &[1, 2, 3]).unwrap();
        assert!(is_isometric(&g, &t));
        let sq = Cycle::from_vertex_walk(&g, &[1, 2, 3, 4]).unwrap();
        assert!(!is_isometric(&g, &sq));
    }

    #[test]
    fn cube_faces_are_isometric() {
        let g = cube();
        let face = Cycle::from_vertex_walk(&g, &[1, 2, 3, 4]).unwrap();
        assert!(is_isometric(&g, &face));
        let sys = enumerate_isometric_cycles(&g).unwrap();
        // six faces plus the four hexagons around the main diagonals
        assert_eq!(sys.len(), 10);
        assert_eq!(sys.cycles().iter().filter(|c| c.len() == 4).count(), 6);
        assert_eq!(sys.cycles().iter().filter(|c| c.len() == 6).count(), 4);
    }

    /// Exhaustive oracle: every simple cycle, filtered by the metric test.
    fn exhaustive_isometric(g: &Graph) -> BTreeSet<Vec<usize>> {
        let mut out = BTreeSet::new();
        let n = g.vertex_count();
        // DFS over vertex paths with the smallest vertex first
        fn extend(
            g: &Graph,
            path: &mut Vec<usize>,
            used: &mut Vec<bool>,
            out: &mut BTreeSet<Vec<usize>>,
        ) {
            let last = *path.last().unwrap();
            for &v in g.neighbors(last) {
                if v == path[0] && path.len() >= 3 {
                    if let Ok(c) = Cycle::from_vertex_walk(g, path) {
                        if is_isometric(g, &c) {
                            out.insert(c.edge_ids());
                        }
                    }
                }
                if !used[v] && v > path[0] {
                    used[v] = true;
                    path.push(v);
                    extend(g, path, used, out);
                    path.pop();
                    used[v] = false;
                }
            }
        }
        for s in 1..=n {
            let mut used = vec![false; n + 1];
            used[s] = true;
            extend(g, &mut vec![s], &mut used, &mut out);
        }
        out
    }

    #[test]
    fn enumeration_matches_exhaustive_oracle() {
        for g in [
            k5(),
            cube(),
            sample_6_13(),
            sample_7_16(),
            complete_graph(6),
            crate::catalog::wheel(6),
            crate::catalog::sample_9_20(),
            crate::catalog::sample_11_20(),
        ] {
            let sys = enumerate_isometric_cycles(&g).unwrap();
            let got: BTreeSet<Vec<usize>> = sys.cycles().iter().map(|c| c.edge_ids()).collect();
            assert_eq!(got, exhaustive_isometric(&g));
        }
    }

    #[test]
    fn every_edge_lies_on_a_cycle() {
        for g in [k5(), cube(), sample_7_16(), crate::catalog::sample_14_21()] {
            let sys = enumerate_isometric_cycles(&g).unwrap();
            let (p_e, _) = sys.cycle_vectors(&vec![true; sys.len()]);
            assert!(p_e[1..].iter().all(|&c| c > 0));
        }
    }

    #[test]
    fn enumeration_is_label_invariant() {
        // relabel sample_7_16 by a permutation; cycle sets must agree after mapping
        let g = sample_7_16();
        let perm = [0usize, 4, 2, 6, 1, 7, 3, 5]; // image of each vertex
        let mut lists = vec![Vec::new(); 7];
        for v in 1..=7 {
            let mut row: Vec<usize> = g.neighbors(v).iter().map(|&u| perm[u]).collect();
            row.sort_unstable();
            lists[perm[v] - 1] = row;
        }
        let h = Graph::from_adjacency(7, &lists).unwrap();
        let sys_g = enumerate_isometric_cycles(&g).unwrap();
        let sys_h = enumerate_isometric_cycles(&h).unwrap();
        let mapped: BTreeSet<Vec<usize>> = sys_g
            .cycles()
            .iter()
            .map(|c| {
                let mut vs: Vec<usize> = c.vertices().iter().map(|&v| perm[v]).collect();
                vs.sort_unstable();
                vs
            })
            .collect();
        let direct: BTreeSet<Vec<usize>> = sys_h
            .cycles()
            .iter()
            .map(|c| {
                let mut vs = c.vertices().to_vec();
                vs.sort_unstable();
                vs
            })
            .collect();
        assert_eq!(mapped, direct);
    }

    #[test]
    fn separable_input_is_rejected() {
        let p = Graph::from_adjacency(3, &[vec![2], vec![1, 3], vec![2]]).unwrap();
        assert!(matches!(
            enumerate_isometric_cycles(&p),
            Err(CycleError::Separable(_))
        ));
    }

    use crate::graph::Graph;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn sym_diff_group_laws(xs in proptest::collection::vec(1usize..=12, 0..8),
                               ys in proptest::collection::vec(1usize..=12, 0..8),
                               zs in proptest::collection::vec(1usize..=12, 0..8)) {
            use crate::edgeset::{sym_diff, EdgeSet};
            let a = EdgeSet::from_edges(12, &xs);
            let b = EdgeSet::from_edges(12, &ys);
            let c = EdgeSet::from_edges(12, &zs);
            let ab_c = sym_diff(&sym_diff(&a, &b).unwrap(), &c).unwrap();
            let a_bc = sym_diff(&a, &sym_diff(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(ab_c, a_bc);
            prop_assert_eq!(sym_diff(&a, &b).unwrap(), sym_diff(&b, &a).unwrap());
            prop_assert!(sym_diff(&a, &a).unwrap().is_empty());
        }
    }
}
