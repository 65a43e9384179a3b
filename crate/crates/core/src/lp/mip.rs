//! Branch-and-bound over the bounded simplex: most-fractional branching,
//! depth-first diving with best-bound backtracking, and warm-started node
//! re-solves through the dual simplex.

use alloc::vec::Vec;

use super::simplex::{PrimalOutcome, Simplex};
use super::{LinearProgram, LpError};
use crate::math;

/// Distance from an integer below which a value counts as integral.
const INT_TOL: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MipStatus {
    Optimal,
    Infeasible,
    Unbounded,
    /// A node or simplex iteration budget ran out; incumbent and bound are
    /// still reported honestly.
    IterationLimit,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MipSolution {
    pub status: MipStatus,
    /// Incumbent values (integer variables exactly integral).
    pub x: Vec<f64>,
    pub objective: f64,
    /// Proven lower bound on the optimal objective.
    pub bound: f64,
    /// Relative gap between incumbent and bound at termination.
    pub gap: f64,
    pub nodes: u64,
    /// Total simplex pivots across all node solves.
    pub simplex_iterations: u64,
    /// Pivot split (phase 1, phase 2, dual), for diagnostics.
    pub pivot_split: (u64, u64, u64),
}

#[derive(Debug, Clone, Copy)]
pub struct MipOptions {
    pub max_nodes: u64,
}

impl Default for MipOptions {
    fn default() -> Self {
        MipOptions { max_nodes: 2_000_000 }
    }
}

struct Node {
    /// Bound overrides relative to the root, accumulated along the path.
    bounds: Vec<(usize, f64, f64)>,
    /// LP objective of the parent: a valid lower bound for this subtree.
    bound_est: f64,
    id: u64,
}

/// Solves the integer program to the given relative gap. `gap = 0` proves
/// optimality exactly (up to 1e-9 float slack).
pub fn solve_mip(lp: &LinearProgram, gap: f64) -> Result<MipSolution, LpError> {
    solve_mip_with(lp, gap, MipOptions::default())
}

pub fn solve_mip_with(
    lp: &LinearProgram,
    gap: f64,
    options: MipOptions,
) -> Result<MipSolution, LpError> {
    let mut simplex = Simplex::new(lp)?;
    // one perturbation for the whole tree; bounds compensate via the margin
    simplex.keep_perturbed = true;
    let margin = simplex.perturbation_margin();
    let mut nodes_evaluated = 1u64;

    let root_outcome = simplex.primal_solve();
    match root_outcome {
        PrimalOutcome::Infeasible => {
            return Ok(MipSolution {
                status: MipStatus::Infeasible,
                x: Vec::new(),
                objective: f64::INFINITY,
                bound: f64::INFINITY,
                gap: 0.0,
                nodes: nodes_evaluated,
                simplex_iterations: simplex.iterations,
                pivot_split: (simplex.pivots_phase1, simplex.pivots_phase2, simplex.pivots_dual),
            })
        }
        PrimalOutcome::Unbounded => {
            return Ok(MipSolution {
                status: MipStatus::Unbounded,
                x: Vec::new(),
                objective: f64::NEG_INFINITY,
                bound: f64::NEG_INFINITY,
                gap: 0.0,
                nodes: nodes_evaluated,
                simplex_iterations: simplex.iterations,
                pivot_split: (simplex.pivots_phase1, simplex.pivots_phase2, simplex.pivots_dual),
            })
        }
        PrimalOutcome::IterationLimit => {
            return Ok(MipSolution {
                status: MipStatus::IterationLimit,
                x: Vec::new(),
                objective: f64::INFINITY,
                bound: f64::NEG_INFINITY,
                gap: f64::INFINITY,
                nodes: nodes_evaluated,
                simplex_iterations: simplex.iterations,
                pivot_split: (simplex.pivots_phase1, simplex.pivots_phase2, simplex.pivots_dual),
            })
        }
        PrimalOutcome::Optimal => {}
    }

    let root_bounds: Vec<(f64, f64)> = (0..lp.num_vars()).map(|v| simplex.bounds_of(v)).collect();
    let mut touched: Vec<usize> = Vec::new();

    let mut incumbent: Option<(f64, Vec<f64>)> = None;
    let mut open: Vec<Node> = Vec::new();
    let mut next_id = 0u64;
    let mut hit_limit = false;

    // The root was just solved; enter the loop without re-solving it.
    let mut current: Option<(Node, bool)> = Some((
        Node {
            bounds: Vec::new(),
            bound_est: simplex.working_objective() - margin,
            id: next_id,
        },
        true,
    ));
    next_id += 1;

    while let Some((node, already_solved)) = current.take() {
        let cutoff = incumbent
            .as_ref()
            .map(|(obj, _)| obj - f64::max(gap * math::abs(*obj), 1e-9));

        if let Some(cutoff) = cutoff {
            if node.bound_est >= cutoff {
                current = pop_best(&mut open);
                continue;
            }
        }

        let outcome = if already_solved {
            PrimalOutcome::Optimal
        } else {
            if nodes_evaluated >= options.max_nodes {
                hit_limit = true;
                open.push(node);
                break;
            }
            nodes_evaluated += 1;
            apply_bounds(&mut simplex, &root_bounds, &mut touched, &node.bounds);
            simplex.node_resolve()
        };

        #[cfg(feature = "std")]
        if !already_solved && std::env::var("TOVRP_VERIFY_NODES").is_ok() {
            let mut check = lp.clone();
            for &(v, lo, hi) in &node.bounds {
                check.lower[v] = lo;
                check.upper[v] = hi;
            }
            let fresh = super::simplex::solve_lp(&check).unwrap();
            let fresh_outcome = match fresh.status {
                crate::lp::LpStatus::Optimal => PrimalOutcome::Optimal,
                crate::lp::LpStatus::Infeasible => PrimalOutcome::Infeasible,
                crate::lp::LpStatus::Unbounded => PrimalOutcome::Unbounded,
                crate::lp::LpStatus::IterationLimit => PrimalOutcome::IterationLimit,
            };
            let node_obj = simplex.objective();
            if fresh_outcome != outcome
                || (outcome == PrimalOutcome::Optimal
                    && (node_obj - fresh.objective).abs() > 1e-4 * (1.0 + fresh.objective.abs()))
            {
                panic!(
                    "node {} diverged: incremental {:?} obj {:.6} vs fresh {:?} obj {:.6}; bounds {:?}",
                    node.id, outcome, node_obj, fresh.status, fresh.objective, node.bounds
                );
            }
        }

        match outcome {
            PrimalOutcome::Infeasible => {
                current = pop_best(&mut open);
                continue;
            }
            PrimalOutcome::Unbounded => {
                // Bounded root relaxation cannot become unbounded by adding
                // bounds; treat defensively as a limit.
                hit_limit = true;
                open.push(node);
                break;
            }
            PrimalOutcome::IterationLimit => {
                hit_limit = true;
                open.push(node);
                break;
            }
            PrimalOutcome::Optimal => {}
        }

        let node_bound = simplex.working_objective() - margin;
        if let Some(cutoff) = cutoff {
            if node_bound >= cutoff {
                current = pop_best(&mut open);
                continue;
            }
        }

        let x = simplex.primal_values();
        match most_fractional(lp, &x) {
            None => {
                // Integral: round off solver fuzz and keep if improving.
                let mut rounded = x;
                for (v, val) in rounded.iter_mut().enumerate() {
                    if lp.integer[v] {
                        *val = math::floor(*val + 0.5);
                    }
                }
                let obj = lp.objective_value(&rounded);
                if incumbent.as_ref().map_or(true, |(best, _)| obj < *best) {
                    incumbent = Some((obj, rounded));
                    let cutoff = obj - f64::max(gap * math::abs(obj), 1e-9);
                    open.retain(|n| n.bound_est < cutoff);
                }
                current = pop_best(&mut open);
            }
            Some(var) => {
                let value = x[var];
                let (lo, hi) = current_bounds(&root_bounds, &node.bounds, var);
                let down = child(&node.bounds, var, lo, math::floor(value), node_bound, &mut next_id);
                let up = child(&node.bounds, var, math::ceil(value), hi, node_bound, &mut next_id);
                // dive toward the branch the relaxation leans to; forcing a
                // variable up pins structure and reaches incumbents sooner
                if value - math::floor(value) >= 0.5 {
                    open.push(down);
                    current = Some((up, false));
                } else {
                    open.push(up);
                    current = Some((down, false));
                }
            }
        }
    }

    let open_bound = open
        .iter()
        .map(|n| n.bound_est)
        .fold(f64::INFINITY, f64::min);

    match incumbent {
        Some((obj, x)) => {
            debug_assert!(lp.max_violation(&x) <= 1e-6, "incumbent must stay feasible");
            // subtrees pruned by the cutoff cannot sit below it, so with the
            // tree exhausted the incumbent is the proven bound
            let bound = obj.min(open_bound);
            let denom = f64::max(math::abs(obj), 1e-10);
            let rel_gap = f64::max(obj - bound, 0.0) / denom;
            let status = if hit_limit && rel_gap > gap {
                MipStatus::IterationLimit
            } else {
                MipStatus::Optimal
            };
            Ok(MipSolution {
                status,
                x,
                objective: obj,
                bound,
                gap: rel_gap,
                nodes: nodes_evaluated,
                simplex_iterations: simplex.iterations,
                pivot_split: (simplex.pivots_phase1, simplex.pivots_phase2, simplex.pivots_dual),
            })
        }
        None => Ok(MipSolution {
            status: if hit_limit {
                MipStatus::IterationLimit
            } else {
                MipStatus::Infeasible
            },
            x: Vec::new(),
            objective: f64::INFINITY,
            bound: if hit_limit { open_bound } else { f64::INFINITY },
            gap: if hit_limit { f64::INFINITY } else { 0.0 },
            nodes: nodes_evaluated,
            simplex_iterations: simplex.iterations,
                pivot_split: (simplex.pivots_phase1, simplex.pivots_phase2, simplex.pivots_dual),
        }),
    }
}

fn apply_bounds(
    simplex: &mut Simplex,
    root: &[(f64, f64)],
    touched: &mut Vec<usize>,
    bounds: &[(usize, f64, f64)],
) {
    for &v in touched.iter() {
        simplex.set_bounds(v, root[v].0, root[v].1);
    }
    touched.clear();
    for &(v, lo, hi) in bounds {
        simplex.set_bounds(v, lo, hi);
        touched.push(v);
    }
}

fn current_bounds(root: &[(f64, f64)], overrides: &[(usize, f64, f64)], var: usize) -> (f64, f64) {
    overrides
        .iter()
        .rev()
        .find(|&&(v, _, _)| v == var)
        .map(|&(_, lo, hi)| (lo, hi))
        .unwrap_or(root[var])
}

fn child(
    parent: &[(usize, f64, f64)],
    var: usize,
    lo: f64,
    hi: f64,
    bound_est: f64,
    next_id: &mut u64,
) -> Node {
    let mut bounds = parent.to_vec();
    if let Some(entry) = bounds.iter_mut().find(|(v, _, _)| *v == var) {
        entry.1 = lo;
        entry.2 = hi;
    } else {
        bounds.push((var, lo, hi));
    }
    let id = *next_id;
    *next_id += 1;
    Node {
        bounds,
        bound_est,
        id,
    }
}

/// Best-bound backtracking: the open node with the smallest bound estimate,
/// ties by insertion order.
fn pop_best(open: &mut Vec<Node>) -> Option<(Node, bool)> {
    if open.is_empty() {
        return None;
    }
    let mut best = 0;
    for i in 1..open.len() {
        let a = &open[i];
        let b = &open[best];
        if a.bound_est < b.bound_est || (a.bound_est == b.bound_est && a.id < b.id) {
            best = i;
        }
    }
    Some((open.swap_remove(best), false))
}

/// Integer variable whose fractional part is closest to one half, if any.
fn most_fractional(lp: &LinearProgram, x: &[f64]) -> Option<usize> {
    let mut best: Option<(f64, usize)> = None;
    for v in 0..lp.num_vars() {
        if !lp.integer[v] {
            continue;
        }
        let frac = x[v] - math::floor(x[v]);
        let dist = frac.min(1.0 - frac);
        if dist > INT_TOL {
            let score = math::abs(frac - 0.5);
            if best.map_or(true, |(s, _)| score < s) {
                best = Some((score, v));
            }
        }
    }
    best.map(|(_, v)| v)
}
