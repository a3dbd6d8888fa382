//! Geometric realization: level sequences, contour placement, and the
//! fixed-boundary spring solve.
//!
//! Levels are breadth-first strata from the rim. The cyclic vertex sequence
//! of level k+1 is read off the embedding by sweeping, around level k's
//! sequence, each vertex's rotation fan from its shallow side and emitting
//! the level-(k+1) neighbors; consecutive repeats merge and the surviving
//! double visits mark pinch vertices. Coordinates come from a spring system:
//! every free vertex sits at the average of its neighbors, with the rim (or
//! any chosen boundary) pinned.

use std::collections::BTreeMap;

use nalgebra::{DMatrix, DVector};

use crate::error::LayoutError;
use crate::graph::Graph;
use crate::rotation::Embedding;

/// Breadth-first strata from the rim with per-level cyclic sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelStructure {
    /// Level per vertex (rim = 1, 0 = not embedded).
    pub level_of: Vec<usize>,
    /// `sequences[k]` is the cyclic vertex order of level k+1.
    pub sequences: Vec<Vec<usize>>,
    /// Pinch vertices occurring twice in their sequence: (level, vertex).
    pub duplicates: Vec<(usize, usize)>,
    /// Anchor lists per level k+1 slot: the level-k vertices whose fans
    /// emitted that slot.
    pub anchors: Vec<Vec<Vec<usize>>>,
}

impl LevelStructure {
    pub fn depth(&self) -> usize {
        self.sequences.len()
    }

    pub fn sequence(&self, level: usize) -> &[usize] {
        &self.sequences[level - 1]
    }
}

fn reversed_sigma(emb: &Embedding, v: usize) -> Vec<usize> {
    let mut row: Vec<usize> = emb.rotation.order(v).to_vec();
    row.reverse();
    row
}

/// Level strata and sequences of an embedding with a designated rim.
pub fn level_structure(emb: &Embedding) -> Result<LevelStructure, LayoutError> {
    let rim: Vec<usize> = emb.rim().ok_or(LayoutError::EmptyBoundary)?.to_vec();
    let max = emb.rotation.max_vertex();
    let mut level_of = vec![0usize; max + 1];
    let mut frontier = rim.clone();
    for &v in &rim {
        level_of[v] = 1;
    }
    let mut depth = 1;
    while !frontier.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for &v in &frontier {
            for &w in emb.rotation.order(v) {
                if level_of[w] == 0 {
                    level_of[w] = depth;
                    next.push(w);
                }
            }
        }
        frontier = next;
    }

    let mut sequences = vec![rim.clone()];
    let mut anchors: Vec<Vec<Vec<usize>>> = vec![rim.iter().map(|_| Vec::new()).collect()];
    let mut duplicates = Vec::new();
    let mut k = 1;
    loop {
        let current = sequences.last().unwrap().clone();
        let mut emitted: Vec<(usize, usize)> = Vec::new(); // (vertex, anchor)
        let len = current.len();
        for (i, &a) in current.iter().enumerate() {
            let fan = fan_of(emb, &level_of, a, k, &current, i, len);
            for x in fan {
                if level_of[x] == k + 1 {
                    emitted.push((x, a));
                }
            }
        }
        if emitted.is_empty() {
            break;
        }
        // merge consecutive repeats, cyclically, keeping anchor lists
        let mut seq: Vec<usize> = Vec::new();
        let mut slot_anchors: Vec<Vec<usize>> = Vec::new();
        for (x, a) in emitted {
            if seq.last() == Some(&x) {
                slot_anchors.last_mut().unwrap().push(a);
            } else {
                seq.push(x);
                slot_anchors.push(vec![a]);
            }
        }
        // close the contour across the wrap; a closed contour keeps at
        // least three stations, so tighter repeats stay as pinch visits
        while seq.len() > 3 && seq.first() == seq.last() {
            let merged = slot_anchors.pop().unwrap();
            seq.pop();
            slot_anchors[0].splice(0..0, merged);
        }
        for &v in seq.iter().collect::<std::collections::BTreeSet<_>>() {
            let occurrences = seq.iter().filter(|&&x| x == v).count();
            if occurrences > 1 {
                duplicates.push((k + 1, v));
            }
        }
        sequences.push(seq);
        anchors.push(slot_anchors);
        k += 1;
    }
    Ok(LevelStructure {
        level_of,
        sequences,
        duplicates,
        anchors,
    })
}

/// The fan of `a` (level k) facing level k+1, in reversed rotation order.
/// For the rim the fan runs from the cyclic predecessor to the successor;
/// deeper levels start after the shallow block.
fn fan_of(
    emb: &Embedding,
    level_of: &[usize],
    a: usize,
    k: usize,
    sequence: &[usize],
    index: usize,
    len: usize,
) -> Vec<usize> {
    let sigma = reversed_sigma(emb, a);
    let deg = sigma.len();
    if k == 1 {
        let prev = sequence[(index + len - 1) % len];
        let next = sequence[(index + 1) % len];
        let start = sigma.iter().position(|&x| x == prev).unwrap();
        let mut fan = Vec::new();
        for step in 1..deg {
            let x = sigma[(start + step) % deg];
            if x == next {
                break;
            }
            fan.push(x);
        }
        fan
    } else {
        let shallow = |x: usize| level_of[x] < k;
        // start just after a shallow run
        let Some(anchor) = (0..deg).find(|&i| shallow(sigma[i]) && !shallow(sigma[(i + 1) % deg]))
        else {
            return Vec::new();
        };
        let mut fan = Vec::new();
        for step in 1..deg {
            let x = sigma[(anchor + step) % deg];
            if shallow(x) {
                break;
            }
            fan.push(x);
        }
        fan
    }
}

/// A consecutive level-k pair with the shallow endpoints it induces and the
/// deeper members spanned between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopoSection {
    pub level: usize,
    pub pair: (usize, usize),
    pub endpoints: (usize, usize),
    pub members: Vec<usize>,
}

/// Sections of every level `k >= 2` toward level k-1: each consecutive pair
/// `(p, q)` of the level-k sequence induces the shallow anchors recorded by
/// the sweep (last anchor of `p`, first anchor of `q`).
pub fn topo_sections(ls: &LevelStructure) -> Vec<TopoSection> {
    let mut out = Vec::new();
    for k in 2..=ls.depth() {
        let seq = &ls.sequences[k - 1];
        let anchors = &ls.anchors[k - 1];
        let len = seq.len();
        for i in 0..len {
            let j = (i + 1) % len;
            let x = *ls.anchors[k - 1][i].last().unwrap();
            let y = *anchors[j].first().unwrap();
            let shallow_seq = &ls.sequences[k - 2];
            let members = run_between(shallow_seq, x, y);
            out.push(TopoSection {
                level: k,
                pair: (seq[i], seq[j]),
                endpoints: (x, y),
                members,
            });
        }
    }
    out
}

/// Vertices of the cyclic sequence strictly between `x` and `y` (first
/// occurrences), walking forward.
fn run_between(seq: &[usize], x: usize, y: usize) -> Vec<usize> {
    let len = seq.len();
    let Some(a) = seq.iter().position(|&v| v == x) else {
        return Vec::new();
    };
    let Some(b) = seq.iter().position(|&v| v == y) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let mut i = (a + 1) % len;
    while i != b {
        out.push(seq[i]);
        i = (i + 1) % len;
    }
    out
}

/// Per-vertex coordinates with the pinned boundary.
#[derive(Debug, Clone)]
pub struct Drawing {
    pub coords: BTreeMap<usize, (f64, f64)>,
    pub fixed: Vec<usize>,
}

/// Contour family for the initial placement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Contour {
    Circle,
    Rectangle,
}

/// Point on the unit contour at parameter `t` in [0, 1).
fn contour_point(contour: Contour, t: f64, radius: f64) -> (f64, f64) {
    match contour {
        Contour::Circle => {
            let a = t * std::f64::consts::TAU;
            (radius * a.cos(), radius * a.sin())
        }
        Contour::Rectangle => {
            // perimeter of the square [-r, r]^2, counterclockwise from (r, -r)
            let s = (t * 4.0).fract();
            let side = (t * 4.0).floor() as usize % 4;
            let r = radius;
            match side {
                0 => (r, -r + 2.0 * r * s),
                1 => (r - 2.0 * r * s, r),
                2 => (-r, r - 2.0 * r * s),
                _ => (-r + 2.0 * r * s, -r),
            }
        }
    }
}

/// Initial placement: the longest level sequence is spread evenly on the
/// outer contour; other levels sit on concentric contours, each vertex at
/// the mean angle of its anchors so that section members stay between their
/// endpoints.
pub fn place_on_contour(ls: &LevelStructure, contour: Contour, radius_step: f64) -> Drawing {
    let depth = ls.depth();
    let longest = (1..=depth)
        .max_by_key(|&k| (ls.sequence(k).len(), k))
        .unwrap();
    let mut coords = BTreeMap::new();
    let mut angle_of: BTreeMap<usize, f64> = BTreeMap::new();

    let radius = |k: usize| {
        let dist = k.abs_diff(longest);
        radius_step * (depth - dist) as f64
    };

    // longest level: equal spacing
    let seq = ls.sequence(longest);
    for (i, &v) in seq.iter().enumerate() {
        let t = i as f64 / seq.len() as f64;
        angle_of.insert(v, t);
        coords.insert(v, contour_point(contour, t, radius(longest)));
    }
    // outward then inward from the longest level, averaging anchor angles
    let mut order: Vec<usize> = (1..=depth).filter(|&k| k != longest).collect();
    order.sort_by_key(|&k| (k.abs_diff(longest), k));
    for k in order {
        let seq = ls.sequence(k);
        let source: Vec<Option<f64>> = if k < depth && !angle_of.is_empty() && k < longest {
            // anchors of level k+1 point back into level k
            let mut angles: BTreeMap<usize, Vec<f64>> = BTreeMap::new();
            for (slot, anchor_list) in ls.anchors[k].iter().enumerate() {
                let deeper = ls.sequences[k][slot];
                if let Some(&a) = angle_of.get(&deeper) {
                    for &anchor in anchor_list {
                        angles.entry(anchor).or_default().push(a);
                    }
                }
            }
            seq.iter()
                .map(|v| {
                    angles
                        .get(v)
                        .map(|list| list.iter().sum::<f64>() / list.len() as f64)
                })
                .collect()
        } else {
            // level k anchors sit at level k-1 (already placed when k > longest)
            seq.iter()
                .enumerate()
                .map(|(slot, _)| {
                    let list = &ls.anchors[k - 1][slot];
                    let known: Vec<f64> = list
                        .iter()
                        .filter_map(|a| angle_of.get(a).copied())
                        .collect();
                    (!known.is_empty()).then(|| known.iter().sum::<f64>() / known.len() as f64)
                })
                .collect()
        };
        for (i, &v) in seq.iter().enumerate() {
            let t = source[i].unwrap_or(i as f64 / seq.len() as f64);
            angle_of.entry(v).or_insert(t);
            coords
                .entry(v)
                .or_insert(contour_point(contour, t, radius(k)));
        }
    }
    Drawing {
        coords,
        fixed: ls.sequence(longest).to_vec(),
    }
}

/// The equilibrium equations of the unit-spring model over `g`, with the
/// boundary pinned: for every free vertex, degree times its coordinate minus
/// the sum over free neighbors equals the sum of fixed neighbor positions.
#[derive(Debug, Clone)]
pub struct SpringSystem {
    pub free: Vec<usize>,
    matrix: DMatrix<f64>,
    rhs_x: DVector<f64>,
    rhs_y: DVector<f64>,
    fixed: BTreeMap<usize, (f64, f64)>,
}

pub fn assemble_spring_system(
    g: &Graph,
    fixed: &BTreeMap<usize, (f64, f64)>,
    stiffness: f64,
) -> Result<SpringSystem, LayoutError> {
    assemble_filtered(g, fixed, stiffness, &|_| true)
}

fn assemble_filtered(
    g: &Graph,
    fixed: &BTreeMap<usize, (f64, f64)>,
    stiffness: f64,
    allow: &dyn Fn(usize) -> bool,
) -> Result<SpringSystem, LayoutError> {
    if fixed.is_empty() {
        return Err(LayoutError::EmptyBoundary);
    }
    let free: Vec<usize> = g
        .vertices()
        .filter(|&v| allow(v) && !fixed.contains_key(&v))
        .collect();
    // every free vertex must reach the boundary
    let mut reach: Vec<bool> = vec![false; g.vertex_count() + 1];
    let mut queue: Vec<usize> = fixed.keys().copied().collect();
    for &v in &queue {
        reach[v] = true;
    }
    while let Some(v) = queue.pop() {
        for &w in g.neighbors(v) {
            if allow(w) && !reach[w] {
                reach[w] = true;
                queue.push(w);
            }
        }
    }
    if let Some(&v) = free.iter().find(|&&v| !reach[v]) {
        return Err(LayoutError::UnreachableVertex { vertex: v });
    }
    let index: BTreeMap<usize, usize> = free.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let n = free.len();
    let mut matrix = DMatrix::zeros(n, n);
    let mut rhs_x = DVector::zeros(n);
    let mut rhs_y = DVector::zeros(n);
    for (&v, &i) in &index {
        let active: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| allow(u) || fixed.contains_key(&u))
            .collect();
        matrix[(i, i)] = stiffness * active.len() as f64;
        for u in active {
            match index.get(&u) {
                Some(&j) => matrix[(i, j)] -= stiffness,
                None => {
                    let (x, y) = fixed[&u];
                    rhs_x[i] += stiffness * x;
                    rhs_y[i] += stiffness * y;
                }
            }
        }
    }
    Ok(SpringSystem {
        free,
        matrix,
        rhs_x,
        rhs_y,
        fixed: fixed.clone(),
    })
}

/// Relative infinity-norm residual guaranteed by [`solve_spring`].
pub const SPRING_RESIDUAL: f64 = 1e-9;

pub fn solve_spring(system: &SpringSystem) -> Result<Drawing, LayoutError> {
    if system.free.is_empty() {
        return Ok(Drawing {
            coords: system.fixed.clone(),
            fixed: system.fixed.keys().copied().collect(),
        });
    }
    let lu = system.matrix.clone().lu();
    let xs = lu.solve(&system.rhs_x).ok_or(LayoutError::Singular)?;
    let ys = lu.solve(&system.rhs_y).ok_or(LayoutError::Singular)?;
    for (rhs, sol) in [(&system.rhs_x, &xs), (&system.rhs_y, &ys)] {
        let residual = (&system.matrix * sol - rhs).abs().max();
        let scale = rhs.abs().max().max(1.0);
        if residual / scale > SPRING_RESIDUAL {
            return Err(LayoutError::Singular);
        }
    }
    let mut coords = system.fixed.clone();
    for (i, &v) in system.free.iter().enumerate() {
        coords.insert(v, (xs[i], ys[i]));
    }
    Ok(Drawing {
        coords,
        fixed: system.fixed.keys().copied().collect(),
    })
}

/// Level-by-level solve: round r pins the already-placed vertices, solves the
/// subgraph spanned by levels 1..=r+1, then pulls each newly placed vertex
/// halfway (by `shorten`) toward its shallowest placed neighbor before the
/// positions freeze for the next round.
pub fn iterative_refine(
    g: &Graph,
    ls: &LevelStructure,
    boundary: &BTreeMap<usize, (f64, f64)>,
    rounds: usize,
    shorten: f64,
) -> Result<Drawing, LayoutError> {
    let mut fixed = boundary.clone();
    let depth = ls.depth();
    for r in 1..=rounds.min(depth.saturating_sub(1)) {
        let active_level = r + 1;
        let allow = |v: usize| {
            v < ls.level_of.len() && ls.level_of[v] > 0 && ls.level_of[v] <= active_level
        };
        let system = assemble_filtered(g, &fixed, 1.0, &allow)?;
        let drawing = solve_spring(&system)?;
        // freeze the new level, shortened toward its outer anchor
        for (&v, &(x, y)) in &drawing.coords {
            if fixed.contains_key(&v) || ls.level_of[v] != active_level {
                continue;
            }
            let outer = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&u| fixed.contains_key(&u) && ls.level_of[u] < ls.level_of[v])
                .min_by_key(|&u| (ls.level_of[u], u));
            let (nx, ny) = match outer {
                Some(u) => {
                    let (ox, oy) = fixed[&u];
                    (ox + (x - ox) / shorten, oy + (y - oy) / shorten)
                }
                None => (x, y),
            };
            fixed.insert(v, (nx, ny));
        }
    }
    // final full solve with everything placed so far as boundary
    if fixed.len() < g.vertex_count() {
        let system = assemble_spring_system(g, &fixed, 1.0)?;
        return solve_spring(&system);
    }
    Ok(Drawing {
        coords: fixed.clone(),
        fixed: fixed.keys().copied().collect(),
    })
}

/// Counts proper crossings among straight segments of the drawn edges.
pub fn segment_crossings(drawing: &Drawing, edges: &[(usize, usize)]) -> usize {
    fn orient(o: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    }
    let mut count = 0;
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let (pa, pb, pc, pd) = (
                drawing.coords[&a],
                drawing.coords[&b],
                drawing.coords[&c],
                drawing.coords[&d],
            );
            let d1 = orient(pc, pd, pa);
            let d2 = orient(pc, pd, pb);
            let d3 = orient(pa, pb, pc);
            let d4 = orient(pa, pb, pd);
            if (d1 > 0.0) != (d2 > 0.0) && (d3 > 0.0) != (d4 > 0.0) {
                count += 1;
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{sample_31_147, wheel};
    use crate::edgeset::Cycle;
    use crate::fixtures;
    use crate::rotation::cycles_to_rotation;

    fn layout_sample() -> (Graph, Embedding) {
        let g = sample_31_147();
        let faces = fixtures::sample_31_147_faces();
        let cycles: Vec<Cycle> = faces
            .iter()
            .map(|w| Cycle::from_vertex_walk(&g, w).unwrap())
            .collect();
        let (kept, rim) = cycles.split_at(cycles.len() - 1);
        let emb = cycles_to_rotation(&g, kept, &rim[0]).unwrap();
        (g, emb)
    }

    fn cyclic_eq_up_to_reflection(a: &[usize], b: &[usize]) -> bool {
        if a.len() != b.len() {
            return false;
        }
        let forward = (0..b.len()).any(|s| (0..a.len()).all(|i| a[i] == b[(s + i) % b.len()]));
        let rev: Vec<usize> = b.iter().rev().copied().collect();
        let backward =
            (0..rev.len()).any(|s| (0..a.len()).all(|i| a[i] == rev[(s + i) % rev.len()]));
        forward || backward
    }

    #[test]
    fn level_sequences_of_the_layout_sample() {
        let (_, emb) = layout_sample();
        let ls = level_structure(&emb).unwrap();
        assert_eq!(ls.depth(), 5);
        assert!(cyclic_eq_up_to_reflection(
            ls.sequence(1),
            &[31, 29, 28, 10, 2, 1]
        ));
        assert!(cyclic_eq_up_to_reflection(
            ls.sequence(2),
            &[25, 14, 27, 13, 6, 3, 5, 22]
        ));
        assert!(cyclic_eq_up_to_reflection(
            ls.sequence(3),
            &[24, 26, 12, 15, 12, 7, 11, 4, 21, 23]
        ));
        assert!(cyclic_eq_up_to_reflection(
            ls.sequence(4),
            &[19, 30, 8, 17, 16, 20]
        ));
        assert!(cyclic_eq_up_to_reflection(ls.sequence(5), &[18, 9, 18]));
        assert!(ls.duplicates.contains(&(3, 12)));
        assert!(ls.duplicates.contains(&(5, 18)));
        assert_eq!(ls.duplicates.len(), 2);
    }

    #[test]
    fn levels_agree_with_bfs_distances() {
        let (_, emb) = layout_sample();
        let ls = level_structure(&emb).unwrap();
        // independent BFS from the rim over the embedded edges
        let rim = emb.rim().unwrap().to_vec();
        let mut dist = vec![usize::MAX; 32];
        let mut queue: std::collections::VecDeque<usize> = rim.iter().copied().collect();
        for &v in &rim {
            dist[v] = 1;
        }
        while let Some(v) = queue.pop_front() {
            for &w in emb.rotation.order(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        for v in 1..=31 {
            assert_eq!(ls.level_of[v], dist[v]);
        }
        // each vertex appears once modulo the flagged duplicates
        let mut count = vec![0usize; 32];
        for seq in &ls.sequences {
            for &v in seq {
                count[v] += 1;
            }
        }
        for v in 1..=31 {
            let expected = 1 + ls.duplicates.iter().filter(|&&(_, d)| d == v).count();
            assert_eq!(count[v], expected, "vertex {v}");
        }
    }

    #[test]
    fn wheel_hub_is_the_whole_second_level() {
        let g = wheel(6);
        let outer: Vec<usize> = (1..=6).collect();
        let mut faces: Vec<Vec<usize>> = (0..6).map(|i| vec![i + 1, (i + 1) % 6 + 1, 7]).collect();
        faces.push(outer);
        let cycles: Vec<Cycle> = faces
            .iter()
            .map(|w| Cycle::from_vertex_walk(&g, w).unwrap())
            .collect();
        let (kept, rim) = cycles.split_at(cycles.len() - 1);
        let emb = cycles_to_rotation(&g, kept, &rim[0]).unwrap();
        let ls = level_structure(&emb).unwrap();
        assert_eq!(ls.depth(), 2);
        assert_eq!(ls.sequence(2), &[7]);
    }

    #[test]
    fn sections_of_the_layout_sample() {
        let (_, emb) = layout_sample();
        let ls = level_structure(&emb).unwrap();
        let sections = topo_sections(&ls);
        let level3: Vec<&TopoSection> = sections.iter().filter(|s| s.level == 3).collect();
        assert_eq!(level3.len(), 10);
        // stable reference pairs
        let find = |p: (usize, usize)| {
            level3
                .iter()
                .find(|s| s.pair == p || (s.pair.1, s.pair.0) == p)
                .unwrap()
        };
        let l1 = find((21, 23));
        assert_eq!(l1.endpoints, (22, 22));
        let l3 = find((24, 26));
        assert_eq!(l3.endpoints, (25, 25));
        let l4 = find((26, 12));
        assert!(l4.endpoints == (25, 14) || l4.endpoints == (14, 25));
        // endpoints always adjacent to pair members in the embedding
        for s in &sections {
            assert!(emb.rotation.order(s.pair.0).contains(&s.endpoints.0));
            assert!(emb.rotation.order(s.pair.1).contains(&s.endpoints.1));
        }
    }

    #[test]
    fn single_vertex_level_has_one_wraparound_section() {
        let g = wheel(6);
        let mut faces: Vec<Vec<usize>> = (0..6).map(|i| vec![i + 1, (i + 1) % 6 + 1, 7]).collect();
        faces.push((1..=6).collect());
        let cycles: Vec<Cycle> = faces
            .iter()
            .map(|w| Cycle::from_vertex_walk(&g, w).unwrap())
            .collect();
        let (kept, rim) = cycles.split_at(cycles.len() - 1);
        let emb = cycles_to_rotation(&g, kept, &rim[0]).unwrap();
        let ls = level_structure(&emb).unwrap();
        let sections = topo_sections(&ls);
        let level2: Vec<&TopoSection> = sections.iter().filter(|s| s.level == 2).collect();
        assert_eq!(level2.len(), 1);
        assert_eq!(level2[0].pair, (7, 7));
    }

    #[test]
    fn contour_placement_spreads_the_longest_level_evenly() {
        let (_, emb) = layout_sample();
        let ls = level_structure(&emb).unwrap();
        let drawing = place_on_contour(&ls, Contour::Circle, 10.0);
        // level 3 is longest: its vertices sit on the outer circle
        let outer_radius = 10.0 * ls.depth() as f64;
        let seq = ls.sequence(3);
        for &v in seq {
            let (x, y) = drawing.coords[&v];
            let r = (x * x + y * y).sqrt();
            assert!((r - outer_radius).abs() < 1e-9);
        }
        // equal slot spacing: every angular gap is a whole number of slots
        // (the pinch vertex keeps its first slot, so its gap doubles)
        let angles: Vec<f64> = seq
            .iter()
            .map(|v| {
                let (x, y) = drawing.coords[v];
                y.atan2(x)
            })
            .collect();
        let unit = std::f64::consts::TAU / seq.len() as f64;
        for w in angles.windows(2) {
            let mut d = (w[1] - w[0]) % std::f64::consts::TAU;
            if d < 0.0 {
                d += std::f64::consts::TAU;
            }
            let slots = d / unit;
            assert!((slots - slots.round()).abs() < 1e-9);
        }
        // every embedded vertex got a position
        assert_eq!(drawing.coords.len(), 31);
    }

    #[test]
    fn rectangle_contour_uses_the_same_orders() {
        let (_, emb) = layout_sample();
        let ls = level_structure(&emb).unwrap();
        let circle = place_on_contour(&ls, Contour::Circle, 10.0);
        let rect = place_on_contour(&ls, Contour::Rectangle, 10.0);
        assert_eq!(
            circle.coords.keys().collect::<Vec<_>>(),
            rect.coords.keys().collect::<Vec<_>>()
        );
        // rectangle points lie on the square's perimeter
        let outer = 10.0 * ls.depth() as f64;
        for &v in ls.sequence(3) {
            let (x, y) = rect.coords[&v];
            assert!((x.abs() - outer).abs() < 1e-9 || (y.abs() - outer).abs() < 1e-9);
        }
    }

    #[test]
    fn cycle_graph_gets_one_contour() {
        let lists = vec![vec![2, 5], vec![1, 3], vec![2, 4], vec![3, 5], vec![1, 4]];
        let g = Graph::from_adjacency(5, &lists).unwrap();
        let c = Cycle::from_vertex_walk(&g, &[1, 2, 3, 4, 5]).unwrap();
        let emb = cycles_to_rotation(&g, std::slice::from_ref(&c), &c).unwrap();
        let ls = level_structure(&emb).unwrap();
        assert_eq!(ls.depth(), 1);
        let drawing = place_on_contour(&ls, Contour::Circle, 5.0);
        assert_eq!(drawing.coords.len(), 5);
    }

    #[test]
    fn star_center_lands_on_the_leaf_centroid() {
        let lists = vec![vec![2, 3, 4], vec![1], vec![1], vec![1]];
        let g = Graph::from_adjacency(4, &lists).unwrap();
        let fixed = BTreeMap::from([(2, (0.0, 0.0)), (3, (3.0, 0.0)), (4, (0.0, 3.0))]);
        let system = assemble_spring_system(&g, &fixed, 1.0).unwrap();
        let drawing = solve_spring(&system).unwrap();
        let (x, y) = drawing.coords[&1];
        assert!((x - 1.0).abs() < 1e-12);
        assert!((y - 1.0).abs() < 1e-12);
    }

    #[test]
    fn path_interpolates_between_fixed_ends() {
        let lists = vec![vec![2], vec![1, 3], vec![2, 4], vec![3]];
        let g = Graph::from_adjacency(4, &lists).unwrap();
        let fixed = BTreeMap::from([(1, (0.0, 0.0)), (4, (3.0, 0.0))]);
        let system = assemble_spring_system(&g, &fixed, 1.0).unwrap();
        let drawing = solve_spring(&system).unwrap();
        assert!((drawing.coords[&2].0 - 1.0).abs() < 1e-12);
        assert!((drawing.coords[&3].0 - 2.0).abs() < 1e-12);
    }

    #[test]
    fn diagonal_entry_matches_the_degree() {
        let g = sample_31_147();
        let fixed = BTreeMap::from([(1, (0.0, 0.0))]);
        let system = assemble_spring_system(&g, &fixed, 1.0).unwrap();
        let i = system.free.iter().position(|&v| v == 27).unwrap();
        assert_eq!(system.matrix[(i, i)], 7.0);
    }

    #[test]
    fn unreachable_vertex_is_an_error() {
        let lists = vec![vec![2], vec![1], vec![4], vec![3]];
        let g = Graph::from_adjacency(4, &lists).unwrap();
        let fixed = BTreeMap::from([(1, (0.0, 0.0))]);
        assert!(matches!(
            assemble_spring_system(&g, &fixed, 1.0),
            Err(LayoutError::UnreachableVertex { vertex: 3 | 4 })
        ));
    }

    #[test]
    fn all_fixed_graph_is_identity() {
        let g = Graph::from_adjacency(2, &[vec![2], vec![1]]).unwrap();
        let fixed = BTreeMap::from([(1, (1.0, 2.0)), (2, (3.0, 4.0))]);
        let system = assemble_spring_system(&g, &fixed, 1.0).unwrap();
        let drawing = solve_spring(&system).unwrap();
        assert_eq!(drawing.coords[&1], (1.0, 2.0));
        assert_eq!(drawing.coords[&2], (3.0, 4.0));
    }

    #[test]
    fn free_vertices_stay_in_the_fixed_hull() {
        let g = sample_31_147();
        let fixed = BTreeMap::from([
            (31, (0.0, 100.0)),
            (29, (0.67, 100.0)),
            (28, (100.0, 67.0)),
            (10, (100.0, 0.0)),
            (2, (67.0, 0.0)),
            (1, (0.0, 0.0)),
        ]);
        let system = assemble_spring_system(&g, &fixed, 1.0).unwrap();
        let drawing = solve_spring(&system).unwrap();
        for (&v, &(x, y)) in &drawing.coords {
            if fixed.contains_key(&v) {
                continue;
            }
            assert!(x > 0.0 && x < 100.0, "vertex {v}");
            assert!(y > 0.0 && y < 100.0, "vertex {v}");
        }
    }

    #[test]
    fn k4_barycentric_drawing_is_crossing_free() {
        let g = crate::catalog::complete_graph(4);
        let fixed = BTreeMap::from([
            (1, (0.0, 0.0)),
            (2, (4.0, 0.0)),
            (3, (2.0, 3.5)),
        ]);
        let system = assemble_spring_system(&g, &fixed, 1.0).unwrap();
        let drawing = solve_spring(&system).unwrap();
        let edges: Vec<(usize, usize)> = g.edges().map(|e| g.endpoints(e)).collect();
        assert_eq!(segment_crossings(&drawing, &edges), 0);
    }

    #[test]
    fn refinement_pushes_vertices_outward() {
        let (g, emb) = layout_sample();
        let ls = level_structure(&emb).unwrap();
        let boundary = BTreeMap::from([
            (31, (0.0, 100.0)),
            (29, (0.67, 100.0)),
            (28, (100.0, 67.0)),
            (10, (100.0, 0.0)),
            (2, (67.0, 0.0)),
            (1, (0.0, 0.0)),
        ]);
        let plain = {
            let system = assemble_spring_system(&g, &boundary, 1.0).unwrap();
            solve_spring(&system).unwrap()
        };
        let refined = iterative_refine(&g, &ls, &boundary, ls.depth(), 2.0).unwrap();
        assert_eq!(refined.coords.len(), 31);
        // refinement counters the central collapse: every free vertex ends
        // at least as far from the boundary centroid as the plain solve put it
        let cx: f64 = boundary.values().map(|p| p.0).sum::<f64>() / boundary.len() as f64;
        let cy: f64 = boundary.values().map(|p| p.1).sum::<f64>() / boundary.len() as f64;
        let dist = |d: &Drawing, v: usize| {
            let (x, y) = d.coords[&v];
            ((x - cx).powi(2) + (y - cy).powi(2)).sqrt()
        };
        for v in 1..=31 {
            if boundary.contains_key(&v) {
                continue;
            }
            assert!(dist(&refined, v) >= dist(&plain, v) - 1e-9, "vertex {v}");
        }
    }

    use crate::graph::Graph;
}
