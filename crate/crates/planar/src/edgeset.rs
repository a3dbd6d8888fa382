//! GF(2) edge-subset vectors and simple cycles carried as such.

use crate::error::CycleError;
use crate::graph::Graph;

/// A subset of the edge ids 1..=m, stored as a bit vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet {
    m: usize,
    bits: Vec<u64>,
}

impl EdgeSet {
    pub fn empty(m: usize) -> EdgeSet {
        EdgeSet {
            m,
            bits: vec![0; m / 64 + 1],
        }
    }

    pub fn from_edges(m: usize, edges: &[usize]) -> EdgeSet {
        let mut s = EdgeSet::empty(m);
        for &e in edges {
            s.insert(e);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.m
    }

    pub fn insert(&mut self, e: usize) {
        debug_assert!(e >= 1 && e <= self.m);
        self.bits[e / 64] |= 1 << (e % 64);
    }

    pub fn remove(&mut self, e: usize) {
        self.bits[e / 64] &= !(1 << (e % 64));
    }

    pub fn contains(&self, e: usize) -> bool {
        e >= 1 && e <= self.m && self.bits[e / 64] >> (e % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&b| b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.m).filter(move |&e| self.contains(e))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn xor_assign(&mut self, other: &EdgeSet) {
        debug_assert_eq!(self.m, other.m);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a ^= b;
        }
    }

    pub fn intersects(&self, other: &EdgeSet) -> bool {
        self.bits.iter().zip(&other.bits).any(|(a, b)| a & b != 0)
    }
}

/// Symmetric difference of two edge sets over the same edge universe.
pub fn sym_diff(a: &EdgeSet, b: &EdgeSet) -> Result<EdgeSet, CycleError> {
    if a.universe() != b.universe() {
        return Err(CycleError::LengthMismatch {
            a: a.universe(),
            b: b.universe(),
        });
    }
    let mut out = a.clone();
    out.xor_assign(b);
    Ok(out)
}

/// A simple cycle stored both as an edge set and a cyclic vertex walk.
///
/// The walk is normalized to start at the smallest vertex and proceed toward
/// the smaller of its two cycle neighbors, so two equal cycles compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    edges: EdgeSet,
    vertices: Vec<usize>,
}

impl Cycle {
    /// Reconstructs the vertex walk of an edge subset that forms one simple
    /// cycle of `g`.
    pub fn from_edge_set(g: &Graph, edges: EdgeSet) -> Result<Cycle, CycleError> {
        let mut deg = vec![0usize; g.vertex_count() + 1];
        let mut nbr: Vec<[usize; 2]> = vec![[0, 0]; g.vertex_count() + 1];
        let mut count = 0;
        for e in edges.iter() {
            let (u, v) = g.endpoints(e);
            for (a, b) in [(u, v), (v, u)] {
                if deg[a] >= 2 {
                    return Err(CycleError::NotACycle);
                }
                nbr[a][deg[a]] = b;
                deg[a] += 1;
            }
            count += 1;
        }
        if count < 3 {
            return Err(CycleError::NotACycle);
        }
        let start = (1..=g.vertex_count())
            .find(|&v| deg[v] > 0)
            .ok_or(CycleError::NotACycle)?;
        let mut walk = vec![start];
        let mut prev = start;
        let mut cur = nbr[start][0].min(nbr[start][1]);
        while cur != start {
            walk.push(cur);
            let next = if nbr[cur][0] == prev {
                nbr[cur][1]
            } else {
                nbr[cur][0]
            };
            prev = cur;
            cur = next;
        }
        if walk.len() != count {
            return Err(CycleError::NotACycle);
        }
        Ok(Cycle {
            edges,
            vertices: walk,
        })
    }

    /// Builds the cycle visiting `vertices` in order (closing back to the
    /// first), looking up each edge in `g`.
    pub fn from_vertex_walk(g: &Graph, vertices: &[usize]) -> Result<Cycle, CycleError> {
        if vertices.len() < 3 {
            return Err(CycleError::NotACycle);
        }
        let mut edges = EdgeSet::empty(g.edge_count());
        for i in 0..vertices.len() {
            let u = vertices[i];
            let v = vertices[(i + 1) % vertices.len()];
            let e = g
                .edge_between(u, v)
                .ok_or(CycleError::NotAdjacent { u, v })?;
            if edges.contains(e) {
                return Err(CycleError::NotACycle);
            }
            edges.insert(e);
        }
        Cycle::from_edge_set(g, edges)
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    /// The normalized cyclic vertex sequence.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// Sorted edge ids; doubles as the canonical sort key.
    pub fn edge_ids(&self) -> Vec<usize> {
        self.edges.to_vec()
    }
}

/// An ordered collection of cycles with cached coverage counts.
#[derive(Debug, Clone)]
pub struct CycleSystem {
    n: usize,
    m: usize,
    cycles: Vec<Cycle>,
    p_e: Vec<u32>,
    p_v: Vec<u32>,
}

impl CycleSystem {
    pub fn new(g: &Graph, cycles: Vec<Cycle>) -> CycleSystem {
        let n = g.vertex_count();
        let m = g.edge_count();
        let mut p_e = vec![0u32; m + 1];
        let mut p_v = vec![0u32; n + 1];
        for c in &cycles {
            for e in c.edges().iter() {
                p_e[e] += 1;
            }
            for &v in c.vertices() {
                p_v[v] += 1;
            }
        }
        CycleSystem {
            n,
            m,
            cycles,
            p_e,
            p_v,
        }
    }

    /// Convenience: build from explicit edge-id lists (1-based cycle data).
    pub fn from_edge_lists(g: &Graph, lists: &[Vec<usize>]) -> Result<CycleSystem, CycleError> {
        let cycles = lists
            .iter()
            .map(|l| Cycle::from_edge_set(g, EdgeSet::from_edges(g.edge_count(), l)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CycleSystem::new(g, cycles))
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn cycle(&self, i: usize) -> &Cycle {
        &self.cycles[i]
    }

    pub fn edge_universe(&self) -> usize {
        self.m
    }

    pub fn vertex_universe(&self) -> usize {
        self.n
    }

    /// Full per-edge counts (index 0 unused).
    pub fn p_e(&self) -> &[u32] {
        &self.p_e
    }

    /// Full per-vertex counts (index 0 unused).
    pub fn p_v(&self) -> &[u32] {
        &self.p_v
    }

    /// Coverage counts restricted to the cycles with `mask[i] == true`.
    pub fn cycle_vectors(&self, mask: &[bool]) -> (Vec<u32>, Vec<u32>) {
        let mut p_e = vec![0u32; self.m + 1];
        let mut p_v = vec![0u32; self.n + 1];
        for (c, _) in self.cycles.iter().zip(mask).filter(|(_, &keep)| keep) {
            for e in c.edges().iter() {
                p_e[e] += 1;
            }
            for &v in c.vertices() {
                p_v[v] += 1;
            }
        }
        (p_e, p_v)
    }

    /// XOR of the masked cycles' edge sets.
    pub fn rim_of(&self, mask: &[bool]) -> EdgeSet {
        let mut rim = EdgeSet::empty(self.m);
        for (c, _) in self.cycles.iter().zip(mask).filter(|(_, &keep)| keep) {
            rim.xor_assign(c.edges());
        }
        rim
    }
}
