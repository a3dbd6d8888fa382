//! Planarity functionals over cycle coverage counts.
//!
//! For a cycle subset let `a_i` count the member cycles through edge `i`.
//! The quadratic functional sums `(a-1)(a-2)` over covered edges and is zero
//! exactly when every covered edge lies on one or two cycles; the cubic
//! variant `a(a-1)(a-2)` tolerates uncovered edges and drives edge deletion.

use crate::edgeset::CycleSystem;

/// Quadratic functional: Σ (a_i - 1)(a_i - 2) over edges with a_i > 0.
pub fn maclane_f(sys: &CycleSystem, mask: &[bool]) -> i64 {
    let (p_e, _) = sys.cycle_vectors(mask);
    p_e[1..]
        .iter()
        .filter(|&&a| a > 0)
        .map(|&a| {
            let a = a as i64;
            (a - 1) * (a - 2)
        })
        .sum()
}

/// Cubic functional: Σ a_i (a_i - 1)(a_i - 2) over all edges.
pub fn maclane_fp(sys: &CycleSystem, mask: &[bool]) -> i64 {
    let (p_e, _) = sys.cycle_vectors(mask);
    p_e[1..]
        .iter()
        .map(|&a| {
            let a = a as i64;
            a * (a - 1) * (a - 2)
        })
        .sum()
}

/// Residual of k - m' + n' - 1 where k counts active cycles and m', n' count
/// covered edges and vertices. Zero for a disk system on one component.
pub fn euler_check(sys: &CycleSystem, mask: &[bool]) -> i64 {
    let (p_e, p_v) = sys.cycle_vectors(mask);
    let k = mask.iter().filter(|&&b| b).count() as i64;
    let m = p_e[1..].iter().filter(|&&a| a > 0).count() as i64;
    let n = p_v[1..].iter().filter(|&&a| a > 0).count() as i64;
    k - m + n - 1
}

/// Everything the functionals say about one cycle subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionalReport {
    pub f_quadratic: i64,
    pub fp_cubic: i64,
    pub covered_edges: usize,
    pub covered_vertices: usize,
    pub euler_residual: i64,
}

pub fn functional_report(sys: &CycleSystem, mask: &[bool]) -> FunctionalReport {
    let (p_e, p_v) = sys.cycle_vectors(mask);
    FunctionalReport {
        f_quadratic: maclane_f(sys, mask),
        fp_cubic: maclane_fp(sys, mask),
        covered_edges: p_e[1..].iter().filter(|&&a| a > 0).count(),
        covered_vertices: p_v[1..].iter().filter(|&&a| a > 0).count(),
        euler_residual: euler_check(sys, mask),
    }
}

/// A member set is a plane configuration when its ring sum is empty and the
/// quadratic functional vanishes.
pub fn is_plane_configuration(sys: &CycleSystem, members: &[usize]) -> bool {
    let mut mask = vec![false; sys.len()];
    for &i in members {
        mask[i] = true;
    }
    sys.rim_of(&mask).is_empty() && maclane_f(sys, &mask) == 0
}
