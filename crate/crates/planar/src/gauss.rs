//! Elimination over GF(2) on cycle-edge rows.
//!
//! Pivots are always chords of a spanning tree. When a row is eliminated it
//! moves to the end of the matrix and keeps a label set recording, mod 2,
//! which original rows were folded into it; a row that empties out therefore
//! names a dependency among the original cycles.

use std::collections::BTreeSet;

use crate::edgeset::{Cycle, CycleSystem, EdgeSet};
use crate::error::GaussError;
use crate::graph::{Graph, SpanningTreeSplit};
use crate::maclane;

/// Outcome of one elimination run.
#[derive(Debug, Clone)]
pub struct GaussTrace {
    /// Chords chosen as leading elements, in pivot order.
    pub pivot_chords: Vec<usize>,
    /// Final label set per original row (1-based indices, own index included).
    pub row_labels: Vec<BTreeSet<usize>>,
    /// Original indices of rows that became empty, in elimination order.
    pub zero_rows: Vec<usize>,
    /// Per original row: true when the row survived with content.
    pub basis_mask: Vec<bool>,
}

impl GaussTrace {
    pub fn is_independent(&self) -> bool {
        self.zero_rows.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.basis_mask.iter().filter(|&&b| b).count()
    }
}

struct Row {
    edges: EdgeSet,
    labels: BTreeSet<usize>,
    orig: usize,
}

fn eliminate(mut rows: Vec<Row>, split: &SpanningTreeSplit) -> Result<GaussTrace, GaussError> {
    let total = rows.len();
    let mut pivot_chords = Vec::new();
    let mut i = 0;
    while i < rows.len() {
        if rows[i].edges.is_empty() {
            i += 1;
            continue;
        }
        let pivot = rows[i]
            .edges
            .iter()
            .find(|&e| split.is_chord(e))
            .ok_or(GaussError::NoChordInRow)?;
        pivot_chords.push(pivot);
        let (pivot_edges, pivot_labels) = (rows[i].edges.clone(), rows[i].labels.clone());
        let mut stay = Vec::new();
        let mut moved = Vec::new();
        for row in rows.drain(i + 1..) {
            if row.edges.contains(pivot) {
                let mut row = row;
                row.edges.xor_assign(&pivot_edges);
                row.labels = &row.labels ^ &pivot_labels;
                moved.push(row);
            } else {
                stay.push(row);
            }
        }
        rows.extend(stay);
        rows.extend(moved);
        i += 1;
    }
    let mut row_labels = vec![BTreeSet::new(); total + 1];
    let mut zero_rows = Vec::new();
    let mut basis_mask = vec![false; total];
    for row in &rows {
        row_labels[row.orig] = row.labels.clone();
        if row.edges.is_empty() {
            zero_rows.push(row.orig);
        } else {
            basis_mask[row.orig - 1] = true;
        }
    }
    Ok(GaussTrace {
        pivot_chords,
        row_labels: row_labels.split_off(1),
        zero_rows,
        basis_mask,
    })
}

fn rows_from_cycles(cycles: &[Cycle]) -> Vec<Row> {
    cycles
        .iter()
        .enumerate()
        .map(|(i, c)| Row {
            edges: c.edges().clone(),
            labels: BTreeSet::from([i + 1]),
            orig: i + 1,
        })
        .collect()
}

/// Runs the elimination on the cycles of `sys` in their stored order.
pub fn modified_gauss(
    _g: &Graph,
    split: &SpanningTreeSplit,
    sys: &CycleSystem,
) -> Result<GaussTrace, GaussError> {
    eliminate(rows_from_cycles(sys.cycles()), split)
}

/// A dependency found by the elimination: a member set whose ring sum is
/// empty, flagged as plane when the quadratic functional also vanishes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneConfiguration {
    /// 1-based row indices (original order), own row included.
    pub members: Vec<usize>,
    pub is_plane: bool,
}

/// Reads the zero rows of a trace back as cycle-index dependencies.
///
/// `sys` must contain the rows the trace was computed from (extra trailing
/// rows are allowed when rims were appended).
pub fn extract_plane_configs(trace: &GaussTrace, sys: &CycleSystem) -> Vec<PlaneConfiguration> {
    trace
        .zero_rows
        .iter()
        .map(|&orig| {
            let members: Vec<usize> = trace.row_labels[orig - 1].iter().copied().collect();
            let mut ring = EdgeSet::empty(sys.edge_universe());
            for &i in &members {
                ring.xor_assign(sys.cycle(i - 1).edges());
            }
            debug_assert!(ring.is_empty(), "zero-row labels must cancel");
            let mut mask = vec![false; sys.len()];
            for &i in &members {
                mask[i - 1] = true;
            }
            let is_plane = maclane::maclane_f(sys, &mask) == 0;
            PlaneConfiguration { members, is_plane }
        })
        .collect()
}

/// Appends the rim cycles as the last rows, eliminates, and keeps only the
/// dependencies that involve a rim row. Member indices above `sys.len()`
/// refer to `rims` (1-based continuation).
pub fn rim_constrained_configs(
    g: &Graph,
    split: &SpanningTreeSplit,
    sys: &CycleSystem,
    rims: &[Cycle],
) -> Result<Vec<PlaneConfiguration>, GaussError> {
    let mut all: Vec<Cycle> = sys.cycles().to_vec();
    all.extend(rims.iter().cloned());
    let extended = CycleSystem::new(g, all);
    let trace = eliminate(rows_from_cycles(extended.cycles()), split)?;
    let configs = extract_plane_configs(&trace, &extended);
    Ok(configs
        .into_iter()
        .filter(|c| c.members.iter().any(|&i| i > sys.len()))
        .collect())
}

/// For every chord, the 1-based indices of the cycles through it, in row
/// order; chords ascend by edge id.
pub fn chord_rows(
    _g: &Graph,
    split: &SpanningTreeSplit,
    sys: &CycleSystem,
) -> Vec<(usize, Vec<usize>)> {
    split
        .chords()
        .iter()
        .map(|&h| {
            let cycles = sys
                .cycles()
                .iter()
                .enumerate()
                .filter(|(_, c)| c.edges().contains(h))
                .map(|(i, _)| i + 1)
                .collect();
            (h, cycles)
        })
        .collect()
}

/// Exact number of ways to pick one cycle per chord row, all distinct, using
/// exactly the candidate cycles. Even ⇒ dependent, odd ⇒ independent.
pub fn transversal_count(
    g: &Graph,
    split: &SpanningTreeSplit,
    sys: &CycleSystem,
    candidate: &[usize],
    budget: usize,
) -> Result<u128, GaussError> {
    let nu = g.cyclomatic_number();
    if candidate.len() != nu {
        return Err(GaussError::CandidateSize {
            expected: nu,
            got: candidate.len(),
        });
    }
    if nu >= 26 || (1usize << nu) > budget {
        return Err(GaussError::BudgetExceeded { budget });
    }
    let pos: std::collections::BTreeMap<usize, usize> =
        candidate.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    if pos.len() != candidate.len() {
        return Ok(0); // repeated cycle: no distinct transversal
    }
    // row bitmasks over candidate positions
    let rows: Vec<u32> = chord_rows(g, split, sys)
        .into_iter()
        .map(|(_, cycles)| {
            cycles
                .iter()
                .filter_map(|c| pos.get(c))
                .fold(0u32, |m, &i| m | 1 << i)
        })
        .collect();
    // permanent via subset DP
    let mut dp = vec![0u128; 1 << nu];
    dp[0] = 1;
    for (k, &row) in rows.iter().enumerate() {
        let mut next = vec![0u128; 1 << nu];
        for (mask, &ways) in dp.iter().enumerate() {
            if ways == 0 || (mask as u32).count_ones() as usize != k {
                continue;
            }
            let mut avail = row & !(mask as u32);
            while avail != 0 {
                let bit = avail & avail.wrapping_neg();
                next[mask | bit as usize] += ways;
                avail ^= bit;
            }
        }
        dp = next;
    }
    Ok(dp[(1 << nu) - 1])
}

/// Independence by transversal parity. Must agree with the GF(2) rank.
pub fn parity_independence(
    g: &Graph,
    split: &SpanningTreeSplit,
    sys: &CycleSystem,
    candidate: &[usize],
    budget: usize,
) -> Result<bool, GaussError> {
    Ok(transversal_count(g, split, sys, candidate, budget)? % 2 == 1)
}

/// Expands the product of chord rows as distinct all-different transversals
/// in odometer order (rows ascend by chord id, picks by row position), up to
/// `budget` emitted candidates. Each candidate is a sorted 1-based index set.
pub fn running_string_enumerate(
    g: &Graph,
    split: &SpanningTreeSplit,
    sys: &CycleSystem,
    budget: usize,
) -> Vec<Vec<usize>> {
    let rows: Vec<Vec<usize>> = chord_rows(g, split, sys)
        .into_iter()
        .map(|(_, cycles)| cycles)
        .collect();
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    if rows.iter().any(|r| r.is_empty()) {
        return out;
    }
    let mut picks = vec![0usize; rows.len()];
    'outer: loop {
        let chosen: Vec<usize> = picks.iter().zip(&rows).map(|(&i, r)| r[i]).collect();
        let set: BTreeSet<usize> = chosen.iter().copied().collect();
        if set.len() == rows.len() {
            let key: Vec<usize> = set.into_iter().collect();
            if seen.insert(key.clone()) {
                out.push(key);
                if out.len() >= budget {
                    break;
                }
            }
        }
        // advance odometer, rightmost fastest
        let mut i = rows.len();
        loop {
            if i == 0 {
                break 'outer;
            }
            i -= 1;
            picks[i] += 1;
            if picks[i] < rows[i].len() {
                break;
            }
            picks[i] = 0;
        }
    }
    out
}
