//! Planarization engines.
//!
//! Stage one trims an isometric cycle collection down to a basis of the cycle
//! space by steepest descent on the quadratic functional. Stage two deletes
//! cycles (and with each cycle exactly one edge, or two edges and a vertex
//! when the Euler count still balances) until the cubic functional vanishes.
//! On top of those sit a fragmentary greedy builder, a seeded random-restart
//! pipeline and a permutation-evolution search.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::edgeset::{Cycle, CycleSystem, EdgeSet};
use crate::error::DescentError;
use crate::gauss;
use crate::graph::Graph;
use crate::maclane::{euler_check, maclane_f, maclane_fp};

/// One executed removal. `rejected_before` lists candidates that scored no
/// worse at this step but were turned down (veto or inadmissible deletion),
/// with the functional value their removal would have reached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentStep {
    pub removed_cycle: usize,
    pub functional_after: i64,
    pub edges_deleted: Vec<usize>,
    pub rejected_before: Vec<(usize, i64)>,
}

/// A zero-functional cycle subset together with how it was reached.
#[derive(Debug, Clone)]
pub struct PlanarResult {
    /// Kept-cycle mask over the system the search ran on.
    pub kept_cycles: Vec<bool>,
    /// Edges left uncovered by the kept cycles, ascending.
    pub deleted_edges: Vec<usize>,
    /// Ring sum of the kept cycles.
    pub rim: EdgeSet,
    pub trace: Vec<DescentStep>,
    pub seed: u64,
    /// Cycle order used (1-based indices into the original system).
    pub permutation: Vec<usize>,
}

impl PlanarResult {
    pub fn kept_count(&self) -> usize {
        self.kept_cycles.iter().filter(|&&b| b).count()
    }

    pub fn kept_indices(&self) -> Vec<usize> {
        self.kept_cycles
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

fn deleted_edges_of(sys: &CycleSystem, mask: &[bool]) -> Vec<usize> {
    let (p_e, _) = sys.cycle_vectors(mask);
    (1..=sys.edge_universe()).filter(|&e| p_e[e] == 0).collect()
}

fn result_from_mask(sys: &CycleSystem, mask: Vec<bool>, trace: Vec<DescentStep>) -> PlanarResult {
    let rim = sys.rim_of(&mask);
    let deleted_edges = deleted_edges_of(sys, &mask);
    PlanarResult {
        deleted_edges,
        rim,
        trace,
        seed: 0,
        permutation: (1..=mask.len()).collect(),
        kept_cycles: mask,
    }
}

/// Steepest descent on the quadratic functional down to `nu` cycles.
///
/// Each round evaluates F after every single-cycle removal and removes the
/// one with the smallest value; ties prefer the longest cycle, then the
/// lowest index. A removal that would leave some vertex uncovered is vetoed
/// and the next candidate taken.
pub fn steepest_descent_basis(
    sys: &CycleSystem,
    nu: usize,
) -> Result<(Vec<bool>, Vec<DescentStep>), DescentError> {
    let mut mask = vec![true; sys.len()];
    let mut trace = Vec::new();
    let mut active = sys.len();
    while active > nu {
        let mut candidates: Vec<(i64, usize, usize)> = Vec::new(); // (F after, cycle len, index)
        for i in 0..sys.len() {
            if !mask[i] {
                continue;
            }
            mask[i] = false;
            candidates.push((maclane_f(sys, &mask), sys.cycle(i).len(), i));
            mask[i] = true;
        }
        candidates.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)).then(a.2.cmp(&b.2)));
        let mut rejected = Vec::new();
        let mut taken = None;
        for &(f_after, _, i) in &candidates {
            mask[i] = false;
            let (_, p_v) = sys.cycle_vectors(&mask);
            let empties_vertex = sys.cycle(i).vertices().iter().any(|&v| p_v[v] == 0);
            if empties_vertex {
                mask[i] = true;
                rejected.push((i + 1, f_after));
            } else {
                taken = Some((i, f_after));
                break;
            }
        }
        let Some((i, f_after)) = taken else {
            return Err(DescentError::AllRemovalsVetoed);
        };
        trace.push(DescentStep {
            removed_cycle: i + 1,
            functional_after: f_after,
            edges_deleted: Vec::new(),
            rejected_before: rejected,
        });
        active -= 1;
    }
    Ok((mask, trace))
}

/// Deletes cycles from an independent basis until the cubic functional hits
/// zero. A removal is admissible when it uncovers exactly one more edge than
/// it uncovers vertices, which keeps the Euler count balanced; among
/// admissible candidates the smallest FP wins, ties to the lowest index.
pub fn cubic_descent(sys: &CycleSystem, basis_mask: &[bool]) -> Result<PlanarResult, DescentError> {
    let mut mask = basis_mask.to_vec();
    let mut trace = Vec::new();
    loop {
        let fp = maclane_fp(sys, &mask);
        if fp == 0 {
            break;
        }
        let (p_e, p_v) = sys.cycle_vectors(&mask);
        let mut scored: Vec<(i64, usize, Vec<usize>, bool)> = Vec::new();
        for i in 0..sys.len() {
            if !mask[i] {
                continue;
            }
            let cycle = sys.cycle(i);
            let gone: Vec<usize> = cycle.edges().iter().filter(|&e| p_e[e] == 1).collect();
            let lost_vertices = cycle.vertices().iter().filter(|&&v| p_v[v] == 1).count();
            mask[i] = false;
            let fp_after = maclane_fp(sys, &mask);
            mask[i] = true;
            let admissible = !gone.is_empty() && gone.len() == lost_vertices + 1;
            scored.push((fp_after, i, gone, admissible));
        }
        scored.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
        let chosen = scored.iter().position(|s| s.3);
        let Some(pos) = chosen else {
            return Err(DescentError::NoAdmissibleRemoval { fp });
        };
        let rejected: Vec<(usize, i64)> = scored[..pos]
            .iter()
            .map(|&(fp_after, i, _, _)| (i + 1, fp_after))
            .collect();
        let (fp_after, i, gone, _) = scored[pos].clone();
        mask[i] = false;
        trace.push(DescentStep {
            removed_cycle: i + 1,
            functional_after: fp_after,
            edges_deleted: gone,
            rejected_before: rejected,
        });
    }
    Ok(result_from_mask(sys, mask, trace))
}

/// Grows a plane configuration bottom-up: scan the cycles in `order` and
/// accept one when it shares an edge with the running rim (first cycle
/// exempt), the new rim stays nonempty, and both F and the Euler residual
/// stay zero.
pub fn fragmentary_greedy(sys: &CycleSystem, order: &[usize]) -> PlanarResult {
    let mut mask = vec![false; sys.len()];
    let mut rim = EdgeSet::empty(sys.edge_universe());
    let mut taken = 0usize;
    for &idx in order {
        let i = idx - 1;
        let cycle = sys.cycle(i);
        if taken > 0 && !rim.intersects(cycle.edges()) {
            continue;
        }
        let mut new_rim = rim.clone();
        new_rim.xor_assign(cycle.edges());
        if new_rim.is_empty() {
            continue;
        }
        mask[i] = true;
        if maclane_f(sys, &mask) == 0 && euler_check(sys, &mask) == 0 {
            rim = new_rim;
            taken += 1;
        } else {
            mask[i] = false;
        }
    }
    let mut result = result_from_mask(sys, mask, Vec::new());
    result.permutation = order.to_vec();
    result
}

/// Total order for picking the best of several results: fewest deleted
/// edges, then the lexicographically smallest deleted set, then the seed.
fn better(a: &PlanarResult, b: &PlanarResult) -> bool {
    (a.deleted_edges.len(), &a.deleted_edges, a.seed)
        < (b.deleted_edges.len(), &b.deleted_edges, b.seed)
}

fn run_permutation(
    g: &Graph,
    sys: &CycleSystem,
    perm: &[usize],
) -> Result<PlanarResult, DescentError> {
    let shuffled = CycleSystem::new(g, perm.iter().map(|&i| sys.cycle(i - 1).clone()).collect());
    let split = g.spanning_split().expect("pipeline input is connected");
    let trace = gauss::modified_gauss(g, &split, &shuffled)
        .map_err(|_| DescentError::AllRestartsFailed(0))?;
    let result = cubic_descent(&shuffled, &trace.basis_mask)?;
    // a kept set pinched at a vertex has no simple rim and cannot embed;
    // the restart loop treats it like any other failed descent
    if Cycle::from_edge_set(g, result.rim.clone()).is_err() {
        return Err(DescentError::NoAdmissibleRemoval { fp: 0 });
    }
    // map the kept mask back onto the original ordering
    let mut kept = vec![false; sys.len()];
    for (slot, &orig) in perm.iter().enumerate() {
        kept[orig - 1] = result.kept_cycles[slot];
    }
    Ok(PlanarResult {
        kept_cycles: kept,
        permutation: perm.to_vec(),
        ..result
    })
}

/// Seeded random-restart pipeline: shuffle the cycle order, reduce to a
/// basis, run the cubic descent, keep the best outcome.
pub fn random_restart_pipeline(
    g: &Graph,
    sys: &CycleSystem,
    restarts: usize,
    seed: u64,
) -> Result<PlanarResult, DescentError> {
    let mut best: Option<PlanarResult> = None;
    let mut last_err = DescentError::AllRestartsFailed(restarts);
    for r in 0..restarts {
        let mut rng = restart_rng(seed, r as u64);
        let mut perm: Vec<usize> = (1..=sys.len()).collect();
        perm.shuffle(&mut rng);
        match run_permutation(g, sys, &perm) {
            Ok(mut result) => {
                result.seed = r as u64;
                if best.as_ref().is_none_or(|b| better(&result, b)) {
                    best = Some(result);
                }
            }
            Err(e) => last_err = e,
        }
    }
    best.ok_or(last_err)
}

fn restart_rng(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Merges two permutations of the same index set: repeatedly take the
/// smaller of the two heads and delete it from both parents.
pub fn crossover_merge(p1: &[usize], p2: &[usize]) -> Vec<usize> {
    assert_eq!(
        {
            let mut a = p1.to_vec();
            a.sort_unstable();
            a
        },
        {
            let mut b = p2.to_vec();
            b.sort_unstable();
            b
        },
        "parents must permute the same index set"
    );
    let mut a: Vec<usize> = p1.to_vec();
    let mut b: Vec<usize> = p2.to_vec();
    let mut child = Vec::with_capacity(a.len());
    while !a.is_empty() {
        let pick = a[0].min(b[0]);
        child.push(pick);
        a.retain(|&x| x != pick);
        b.retain(|&x| x != pick);
    }
    child
}

/// Outcome of the evolutionary search: the winner plus the best fitness
/// (edges kept) recorded after the initial population and each generation.
#[derive(Debug, Clone)]
pub struct EvolutionOutcome {
    pub best: PlanarResult,
    pub fitness_trace: Vec<usize>,
}

/// Elitist permutation evolution with the head-merge crossover and a single
/// random transposition as mutation (probability 0.2).
pub fn evolutionary_search(
    g: &Graph,
    sys: &CycleSystem,
    population: usize,
    generations: usize,
    seed: u64,
) -> Result<EvolutionOutcome, DescentError> {
    assert!(population >= 2, "population must hold at least one pair");
    let m = sys.edge_universe();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fitness_of = |r: &PlanarResult| m - r.deleted_edges.len();

    // (permutation, fitness, result, discovery index)
    let mut pool: Vec<(Vec<usize>, usize, PlanarResult, usize)> = Vec::new();
    let mut discovered = 0usize;
    for _ in 0..population {
        let mut perm: Vec<usize> = (1..=sys.len()).collect();
        perm.shuffle(&mut rng);
        if let Ok(result) = run_permutation(g, sys, &perm) {
            let fit = fitness_of(&result);
            pool.push((perm, fit, result, discovered));
        }
        discovered += 1;
    }
    if pool.is_empty() {
        return Err(DescentError::AllRestartsFailed(population));
    }
    let rank = |pool: &mut Vec<(Vec<usize>, usize, PlanarResult, usize)>| {
        pool.sort_by(|a, b| b.1.cmp(&a.1).then(a.3.cmp(&b.3)));
    };
    rank(&mut pool);
    let mut fitness_trace = vec![pool[0].1];

    for _ in 0..generations {
        let parents = pool.len();
        let mut children = Vec::new();
        for _ in 0..parents {
            let i = rng.gen_range(0..parents);
            let j = rng.gen_range(0..parents);
            let mut child = crossover_merge(&pool[i].0, &pool[j].0);
            if rng.gen_bool(0.2) && child.len() >= 2 {
                let a = rng.gen_range(0..child.len());
                let b = rng.gen_range(0..child.len());
                child.swap(a, b);
            }
            if let Ok(result) = run_permutation(g, sys, &child) {
                let fit = fitness_of(&result);
                children.push((child, fit, result, discovered));
            }
            discovered += 1;
        }
        pool.extend(children);
        rank(&mut pool);
        pool.truncate(population);
        fitness_trace.push(pool[0].1);
    }
    let best = pool.swap_remove(0).2;
    Ok(EvolutionOutcome {
        best,
        fitness_trace,
    })
}
