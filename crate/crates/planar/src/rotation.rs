//! Rotation systems, face tracing and embedding verification.
//!
//! A rotation system fixes the cyclic neighbor order at every vertex. Faces
//! fall out of the successor rule: arriving at `v` along `(u, v)`, the walk
//! leaves along the neighbor after `u` in the rotation of `v`. Building the
//! rotation from a zero-functional cycle system is the inverse operation:
//! orient the cycles so every edge is traversed once per direction, then
//! stitch the corners at each vertex into one cyclic order.

use std::collections::{BTreeMap, VecDeque};

use crate::edgeset::Cycle;
use crate::error::EmbedError;
use crate::graph::Graph;

/// Cyclic neighbor order per vertex; an empty row means the vertex is not
/// embedded. Index 0 is unused.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    sigma: Vec<Vec<usize>>,
}

impl RotationSystem {
    pub fn new(max_vertex: usize) -> RotationSystem {
        RotationSystem {
            sigma: vec![Vec::new(); max_vertex + 1],
        }
    }

    pub fn from_orders(orders: &[(usize, Vec<usize>)]) -> RotationSystem {
        let max = orders.iter().map(|&(v, _)| v).max().unwrap_or(0);
        let mut rot = RotationSystem::new(max);
        for (v, order) in orders {
            rot.sigma[*v] = order.clone();
        }
        rot
    }

    pub fn max_vertex(&self) -> usize {
        self.sigma.len() - 1
    }

    pub fn order(&self, v: usize) -> &[usize] {
        &self.sigma[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.sigma[v].len()
    }

    pub fn is_embedded(&self, v: usize) -> bool {
        v < self.sigma.len() && !self.sigma[v].is_empty()
    }

    pub fn embedded_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (1..self.sigma.len()).filter(move |&v| !self.sigma[v].is_empty())
    }

    /// The neighbor following `u` in the rotation at `v`.
    pub fn successor(&self, v: usize, u: usize) -> Option<usize> {
        let row = &self.sigma[v];
        row.iter()
            .position(|&w| w == u)
            .map(|i| row[(i + 1) % row.len()])
    }

    /// Inserts `w` into the rotation of `v` immediately after `after`.
    pub fn insert_after(&mut self, v: usize, after: usize, w: usize) {
        let row = &mut self.sigma[v];
        let i = row
            .iter()
            .position(|&x| x == after)
            .expect("anchor neighbor present");
        row.insert(i + 1, w);
    }

    pub fn push_neighbor(&mut self, v: usize, w: usize) {
        if v >= self.sigma.len() {
            self.sigma.resize(v + 1, Vec::new());
        }
        self.sigma[v].push(w);
    }

    /// Replaces neighbor `old` of `v` by `new`, keeping the position.
    pub fn replace_neighbor(&mut self, v: usize, old: usize, new: usize) {
        let row = &mut self.sigma[v];
        let i = row.iter().position(|&x| x == old).expect("old neighbor");
        row[i] = new;
    }

    pub fn grow_to(&mut self, max_vertex: usize) {
        if max_vertex >= self.sigma.len() {
            self.sigma.resize(max_vertex + 1, Vec::new());
        }
    }

    /// Directed edge count (twice the embedded edge count).
    pub fn dart_count(&self) -> usize {
        self.sigma.iter().map(|r| r.len()).sum()
    }

    /// All embedded undirected edges.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for v in 1..self.sigma.len() {
            for &w in &self.sigma[v] {
                if v < w {
                    out.push((v, w));
                }
            }
        }
        out
    }

    pub fn mirrored(&self) -> RotationSystem {
        RotationSystem {
            sigma: self
                .sigma
                .iter()
                .map(|row| row.iter().rev().copied().collect())
                .collect(),
        }
    }
}

/// Traces every face of the rotation: each directed edge is consumed exactly
/// once by the successor rule. Faces come out as vertex walks.
pub fn trace_faces(rot: &RotationSystem) -> Vec<Vec<usize>> {
    let mut seen: BTreeMap<(usize, usize), bool> = BTreeMap::new();
    let mut faces = Vec::new();
    for u in 1..=rot.max_vertex() {
        for &v in rot.order(u) {
            if seen.contains_key(&(u, v)) {
                continue;
            }
            let mut walk = Vec::new();
            let (mut a, mut b) = (u, v);
            loop {
                seen.insert((a, b), true);
                walk.push(a);
                let next = rot.successor(b, a).expect("symmetric rotation");
                a = b;
                b = next;
                if (a, b) == (u, v) {
                    break;
                }
            }
            faces.push(walk);
        }
    }
    faces
}

/// A combinatorial embedding: rotation, its face list, the designated rim,
/// and the registry of crossing dummies.
#[derive(Debug, Clone)]
pub struct Embedding {
    pub rotation: RotationSystem,
    pub faces: Vec<Vec<usize>>,
    /// Index of the rim face, when one is designated.
    pub rim_face: Option<usize>,
    /// Number of real vertices; anything above is a crossing dummy.
    pub real_vertices: usize,
    /// dummy vertex -> (crossed edge, inserted edge) as vertex pairs of the
    /// original graph.
    pub dummies: BTreeMap<usize, ((usize, usize), (usize, usize))>,
}

impl Embedding {
    /// Rebuilds the face list from the rotation, re-locating the rim face by
    /// its undirected edge set.
    pub fn retrace(&mut self) -> Result<(), EmbedError> {
        let rim_edges = self.rim_face.map(|i| face_edge_multiset(&self.faces[i]));
        self.faces = trace_faces(&self.rotation);
        self.rim_face = match rim_edges {
            Some(key) => Some(
                self.faces
                    .iter()
                    .position(|f| face_edge_multiset(f) == key)
                    .ok_or(EmbedError::NoRim)?,
            ),
            None => None,
        };
        Ok(())
    }

    pub fn rim(&self) -> Option<&[usize]> {
        self.rim_face.map(|i| self.faces[i].as_slice())
    }

    /// Connected components of the embedded part.
    pub fn component_count(&self) -> usize {
        let max = self.rotation.max_vertex();
        let mut seen = vec![false; max + 1];
        let mut components = 0;
        for s in 1..=max {
            if seen[s] || !self.rotation.is_embedded(s) {
                continue;
            }
            components += 1;
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(x) = stack.pop() {
                for &y in self.rotation.order(x) {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        components
    }

    pub fn embedded_edge_count(&self) -> usize {
        self.rotation.dart_count() / 2
    }

    pub fn embedded_vertex_count(&self) -> usize {
        self.rotation.embedded_vertices().count()
    }

    /// Faces (indices) whose boundary passes through `v`.
    pub fn faces_at(&self, v: usize) -> Vec<usize> {
        self.faces
            .iter()
            .enumerate()
            .filter(|(_, f)| f.contains(&v))
            .map(|(i, _)| i)
            .collect()
    }
}

pub(crate) fn face_edge_multiset(face: &[usize]) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = (0..face.len())
        .map(|i| {
            let a = face[i];
            let b = face[(i + 1) % face.len()];
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    edges
}

/// Builds the rotation system whose faces are exactly `kept ∪ {rim}`.
///
/// Every embedded edge must be covered exactly twice across the input. The
/// cycles are oriented consistently by propagation over shared edges, the
/// mirror image is resolved by directing the rim at its smallest vertex
/// toward its smaller neighbor, and the corners are stitched per vertex.
pub fn cycles_to_rotation(g: &Graph, kept: &[Cycle], rim: &Cycle) -> Result<Embedding, EmbedError> {
    let mut all: Vec<&Cycle> = kept.iter().collect();
    all.push(rim);

    // coverage check
    let mut coverage = vec![0usize; g.edge_count() + 1];
    for c in &all {
        for e in c.edges().iter() {
            coverage[e] += 1;
        }
    }
    for e in 1..=g.edge_count() {
        if coverage[e] != 0 && coverage[e] != 2 {
            return Err(EmbedError::BadCoverage {
                edge: e,
                count: coverage[e],
            });
        }
    }

    // orient cycles so shared edges run in opposite directions
    let walks: Vec<Vec<usize>> = all.iter().map(|c| c.vertices().to_vec()).collect();
    let mut owner: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, c) in all.iter().enumerate() {
        for e in c.edges().iter() {
            let (u, v) = g.endpoints(e);
            owner.entry((u.min(v), u.max(v))).or_default().push(i);
        }
    }
    let mut flip: Vec<Option<bool>> = vec![None; all.len()];
    for start in 0..all.len() {
        if flip[start].is_some() {
            continue;
        }
        flip[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for e in all[i].edges().iter() {
                let (u, v) = g.endpoints(e);
                let key = (u.min(v), u.max(v));
                let pair = &owner[&key];
                debug_assert_eq!(pair.len(), 2);
                let j = if pair[0] == i { pair[1] } else { pair[0] };
                // same traversal direction before flips?
                let same = walk_direction(&walks[i], key) == walk_direction(&walks[j], key);
                let want = flip[i].unwrap() ^ same;
                match flip[j] {
                    None => {
                        flip[j] = Some(want);
                        queue.push_back(j);
                    }
                    Some(f) if f != want => {
                        return Err(EmbedError::NotOrientable { edge: e });
                    }
                    _ => {}
                }
            }
        }
    }
    let mut oriented: Vec<Vec<usize>> = walks
        .iter()
        .zip(&flip)
        .map(|(w, f)| {
            if f.unwrap() {
                let mut r = w.clone();
                r.reverse();
                r
            } else {
                w.clone()
            }
        })
        .collect();

    // chirality: at the rim's smallest vertex, walk toward its smaller neighbor
    let rim_walk = oriented.last().unwrap();
    let pos = rim_walk
        .iter()
        .position(|&v| v == *rim_walk.iter().min().unwrap())
        .unwrap();
    let next = rim_walk[(pos + 1) % rim_walk.len()];
    let prev = rim_walk[(pos + rim_walk.len() - 1) % rim_walk.len()];
    if next < prev {
        for w in &mut oriented {
            w.reverse();
        }
    }

    // corner stitching: face corner (a -> v -> b) fixes successor(v, a) = b
    let n = g.vertex_count();
    let mut succ: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); n + 1];
    for walk in &oriented {
        let len = walk.len();
        for i in 0..len {
            let a = walk[i];
            let v = walk[(i + 1) % len];
            let b = walk[(i + 2) % len];
            if succ[v].insert(a, b).is_some() {
                return Err(EmbedError::SplitVertex { vertex: v });
            }
        }
    }
    let mut rot = RotationSystem::new(n);
    for v in 1..=n {
        if succ[v].is_empty() {
            continue;
        }
        let start = *succ[v].keys().next().unwrap();
        let mut order = vec![start];
        let mut cur = succ[v][&start];
        while cur != start {
            if order.len() > succ[v].len() {
                return Err(EmbedError::SplitVertex { vertex: v });
            }
            order.push(cur);
            cur = *succ[v]
                .get(&cur)
                .ok_or(EmbedError::SplitVertex { vertex: v })?;
        }
        if order.len() != succ[v].len() {
            return Err(EmbedError::SplitVertex { vertex: v });
        }
        rot.sigma[v] = order;
    }

    // the traced faces must reproduce the input cycles
    let faces = trace_faces(&rot);
    if faces.len() != all.len() {
        return Err(EmbedError::BadFaceTrace);
    }
    let rim_edges: Vec<(usize, usize)> = {
        let mut v: Vec<(usize, usize)> = rim
            .edges()
            .iter()
            .map(|e| {
                let (a, b) = g.endpoints(e);
                (a.min(b), a.max(b))
            })
            .collect();
        v.sort_unstable();
        v
    };
    let rim_face = faces
        .iter()
        .position(|f| face_edge_multiset(f) == rim_edges)
        .ok_or(EmbedError::NoRim)?;
    Ok(Embedding {
        rotation: rot,
        faces,
        rim_face: Some(rim_face),
        real_vertices: n,
        dummies: BTreeMap::new(),
    })
}

/// Direction cycle `walk` traverses the undirected edge `key`.
fn walk_direction(walk: &[usize], key: (usize, usize)) -> bool {
    let len = walk.len();
    for i in 0..len {
        let a = walk[i];
        let b = walk[(i + 1) % len];
        if (a, b) == key {
            return true;
        }
        if (b, a) == key {
            return false;
        }
    }
    unreachable!("edge not on walk");
}

/// What the verifier reports about an embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingReport {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub components: usize,
    pub euler: i64,
    /// 2·components - euler: 0 when every component sits on the sphere.
    pub genus_residual: i64,
    pub problems: Vec<String>,
}

impl EmbeddingReport {
    pub fn is_ok(&self) -> bool {
        self.problems.is_empty() && self.genus_residual == 0
    }
}

/// Checks the structural invariants: every dart on exactly one face, stored
/// faces consistent with the rotation, Euler characteristic, dummy degrees.
pub fn verify_embedding(emb: &Embedding) -> EmbeddingReport {
    let mut problems = Vec::new();
    let v = emb.embedded_vertex_count();
    let e = emb.embedded_edge_count();
    let f = emb.faces.len();
    let components = emb.component_count();
    let euler = v as i64 - e as i64 + f as i64;

    let traced = trace_faces(&emb.rotation);
    let dart_total: usize = traced.iter().map(|w| w.len()).sum();
    if dart_total != emb.rotation.dart_count() {
        problems.push("face trace does not cover every dart exactly once".into());
    }
    let mut canon_a: Vec<Vec<(usize, usize)>> =
        traced.iter().map(|f| face_edge_multiset(f)).collect();
    let mut canon_b: Vec<Vec<(usize, usize)>> =
        emb.faces.iter().map(|f| face_edge_multiset(f)).collect();
    canon_a.sort();
    canon_b.sort();
    if canon_a != canon_b {
        problems.push("stored faces disagree with the rotation's trace".into());
    }
    if emb.rim_face.is_some_and(|i| i >= emb.faces.len()) {
        problems.push("rim face index out of range".into());
    }
    for &d in emb.dummies.keys() {
        if emb.rotation.degree(d) != 4 {
            problems.push(format!(
                "dummy vertex {d} has degree {}",
                emb.rotation.degree(d)
            ));
        }
    }
    EmbeddingReport {
        vertices: v,
        edges: e,
        faces: f,
        components,
        euler,
        genus_residual: 2 * components as i64 - euler,
        problems,
    }
}

/// True when the rotations agree at every vertex up to cyclic rotation,
/// either all as given or all mirrored.
pub fn rotations_equal_up_to_reflection(a: &RotationSystem, b: &RotationSystem) -> bool {
    fn cyclically_equal(x: &[usize], y: &[usize]) -> bool {
        if x.len() != y.len() {
            return false;
        }
        if x.is_empty() {
            return true;
        }
        (0..y.len()).any(|s| (0..x.len()).all(|i| x[i] == y[(s + i) % y.len()]))
    }
    let same = |a: &RotationSystem, b: &RotationSystem| {
        let max = a.max_vertex().max(b.max_vertex());
        (1..=max).all(|v| {
            let ra: &[usize] = if v <= a.max_vertex() { a.order(v) } else { &[] };
            let rb: &[usize] = if v <= b.max_vertex() { b.order(v) } else { &[] };
            cyclically_equal(ra, rb)
        })
    };
    same(a, b) || same(&a.mirrored(), b)
}
