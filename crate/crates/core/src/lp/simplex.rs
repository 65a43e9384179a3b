//! Bounded-variable revised simplex with an explicit, column-major basis
//! inverse.
//!
//! Every row `a'x {<=,>=,=} b` gets a slack with bounds `[0, inf)`,
//! `(-inf, 0]` or `[0, 0]`, so the all-slack basis is always a valid start
//! and the basis inverse begins as the identity. Phase 1 drives basic
//! variables inside their bounds by minimizing total violation; phase 2
//! prices with Dantzig's rule and maintains reduced costs incrementally. A
//! bounded dual simplex re-solves after bound changes, which is what
//! branch-and-bound uses to warm-start every node.

use alloc::vec;
use alloc::vec::Vec;

use super::{LinearProgram, LpError, LpSolution, LpStatus, Relation};
use crate::math;

/// Bound violation below which a basic variable counts as feasible.
const FEAS: f64 = 1e-7;
/// Reduced-cost threshold for pricing eligibility.
const DUAL_TOL: f64 = 5e-8;
/// Bound relaxation of the two-pass (Harris) ratio test; must stay below
/// `FEAS` so overshoot is never classified as infeasibility.
const RELAX: f64 = 5e-8;
/// Entries smaller than this never pivot.
const PIVOT_EPS: f64 = 1e-9;
/// Preferred minimum pivot magnitude; smaller pivots are taken only when no
/// ranked alternative offers a safer one.
const PIVOT_SAFE: f64 = 1e-7;
/// Basis-inverse entries below this are treated as exact zeros.
const DROP_TOL: f64 = 1e-12;
/// Non-improving pivots tolerated before switching to Bland's rule.
const STALL_LIMIT: u64 = 1_000;
/// Pivots between full recomputations of reduced costs and basic values.
const REFRESH_EVERY: u64 = 256;

const UNSET: usize = usize::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum VState {
    Basic,
    AtLower,
    AtUpper,
    /// Nonbasic with equal bounds; never eligible to enter.
    Fixed,
    /// Nonbasic without a finite bound to sit on; pinned at zero.
    Free,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum PrimalOutcome {
    Optimal,
    Infeasible,
    Unbounded,
    IterationLimit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum DualOutcome {
    Optimal,
    /// Dual unbounded: the (primal) problem has no feasible point.
    Infeasible,
    IterationLimit,
}

pub(crate) struct Simplex {
    n: usize,
    m: usize,
    total: usize,
    // structural columns, compressed
    col_ptr: Vec<usize>,
    col_row: Vec<usize>,
    col_val: Vec<f64>,
    rhs: Vec<f64>,
    /// Working costs; equal to `cost_true` plus the anti-degeneracy
    /// perturbation while a solve is in flight.
    cost: Vec<f64>,
    cost_true: Vec<f64>,
    lower: Vec<f64>,
    upper: Vec<f64>,

    basis: Vec<usize>,
    pos_of: Vec<usize>,
    state: Vec<VState>,
    /// Basis inverse, column-major: entry (r, c) at `binv[c * m + r]`.
    binv: Vec<f64>,
    x_basic: Vec<f64>,
    /// Reduced costs for the current cost vector (phase 2 / dual).
    d: Vec<f64>,

    w: Vec<f64>,
    w_support: Vec<usize>,
    alpha: Vec<f64>,
    scratch: Vec<f64>,

    pub(crate) iterations: u64,
    /// When set, solves stay under the perturbed costs permanently and the
    /// caller compensates through `perturbation_margin`.
    pub(crate) keep_perturbed: bool,
    perturbed: bool,
    /// Raised when dual magnitudes blow past anything the data supports;
    /// the inverse has degraded and only a fresh basis can be trusted.
    inverse_suspect: bool,
    in_fresh_retry: bool,
    /// Whether `d` matches the current basis and working costs. Phase 1
    /// pivots without maintaining reduced costs, so it clears this.
    d_valid: bool,
    pub(crate) pivots_phase1: u64,
    pub(crate) pivots_phase2: u64,
    pub(crate) pivots_dual: u64,
    /// Per-call pivot budget; public entry points reset `call_start`.
    call_budget: u64,
    call_start: u64,
    budget_override: Option<u64>,
}

impl Simplex {
    pub(crate) fn new(lp: &LinearProgram) -> Result<Self, LpError> {
        lp.validate()?;
        let n = lp.num_vars();
        let m = lp.num_rows();
        let total = n + m;

        // Column-compressed structural matrix; duplicate entries within a
        // row are summed.
        let mut per_col: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
        for (r, row) in lp.rows.iter().enumerate() {
            for &(v, a) in &row.coeffs {
                if let Some(entry) = per_col[v].iter_mut().find(|(rr, _)| *rr == r) {
                    entry.1 += a;
                } else {
                    per_col[v].push((r, a));
                }
            }
        }
        let mut col_ptr = Vec::with_capacity(n + 1);
        let mut col_row = Vec::new();
        let mut col_val = Vec::new();
        col_ptr.push(0);
        for col in &per_col {
            for &(r, a) in col {
                col_row.push(r);
                col_val.push(a);
            }
            col_ptr.push(col_row.len());
        }

        let mut lower = lp.lower.clone();
        let mut upper = lp.upper.clone();
        let mut cost = lp.costs.clone();
        let mut rhs = Vec::with_capacity(m);
        for row in &lp.rows {
            let (lo, hi) = match row.relation {
                Relation::Le => (0.0, f64::INFINITY),
                Relation::Ge => (f64::NEG_INFINITY, 0.0),
                Relation::Eq => (0.0, 0.0),
            };
            lower.push(lo);
            upper.push(hi);
            cost.push(0.0);
            rhs.push(row.rhs);
        }

        let mut solver = Simplex {
            n,
            m,
            total,
            col_ptr,
            col_row,
            col_val,
            rhs,
            cost_true: cost.clone(),
            cost,
            lower,
            upper,
            basis: (n..total).collect(),
            pos_of: vec![UNSET; total],
            state: vec![VState::AtLower; total],
            binv: vec![0.0; m * m],
            x_basic: vec![0.0; m],
            d: vec![0.0; total],
            w: vec![0.0; m],
            w_support: Vec::new(),
            alpha: vec![0.0; m],
            scratch: vec![0.0; m],
            iterations: 0,
            keep_perturbed: false,
            perturbed: false,
            inverse_suspect: false,
            in_fresh_retry: false,
            d_valid: false,
            pivots_phase1: 0,
            pivots_phase2: 0,
            pivots_dual: 0,
            call_budget: u64::MAX,
            call_start: 0,
            budget_override: None,
        };
        solver.reset_basis();
        Ok(solver)
    }

    /// All-slack basis, structural variables at their natural bound.
    fn reset_basis(&mut self) {
        for p in 0..self.m {
            self.basis[p] = self.n + p;
        }
        for v in 0..self.total {
            self.pos_of[v] = UNSET;
            self.state[v] = self.nonbasic_home(v);
        }
        for p in 0..self.m {
            self.pos_of[self.n + p] = p;
            self.state[self.n + p] = VState::Basic;
        }
        self.binv.iter_mut().for_each(|x| *x = 0.0);
        for p in 0..self.m {
            self.binv[p * self.m + p] = 1.0;
        }
        self.refresh_x_basic();
        self.iterations = 0;
        self.call_start = 0;
        self.d_valid = false;
    }

    fn out_of_budget(&self) -> bool {
        self.iterations - self.call_start >= self.call_budget
    }

    /// Deterministic anti-degeneracy perturbation: a tiny, variable-specific
    /// cost bump. Only variables with two finite bounds are perturbed, so a
    /// bounded problem can never become unbounded and the total objective
    /// distortion has a computable ceiling.
    fn perturbation(&self, v: usize) -> f64 {
        const PERTURB: f64 = 2e-9;
        if !self.lower[v].is_finite() || !self.upper[v].is_finite() {
            return 0.0;
        }
        let mut x = (v as u64).wrapping_add(0x9E37_79B9_7F4A_7C15);
        x ^= x >> 30;
        x = x.wrapping_mul(0xBF58_476D_1CE4_E5B9);
        x ^= x >> 27;
        x = x.wrapping_mul(0x94D0_49BB_1331_11EB);
        x ^= x >> 31;
        let xi = 1.0 + (x >> 11) as f64 / (1u64 << 53) as f64; // in [1, 2)
        PERTURB * (1.0 + math::abs(self.cost_true[v])) * xi
    }

    /// Ceiling on `sum eps_v * |x_v|` over the feasible box: how far the
    /// perturbed objective can sit above the true one.
    pub(crate) fn perturbation_margin(&self) -> f64 {
        (0..self.n)
            .map(|v| {
                let eps = self.perturbation(v);
                if eps > 0.0 {
                    eps * math::abs(self.lower[v]).max(math::abs(self.upper[v]))
                } else {
                    0.0
                }
            })
            .sum()
    }

    fn apply_perturbation(&mut self) {
        for v in 0..self.n {
            self.cost[v] = self.cost_true[v] + self.perturbation(v);
        }
        self.perturbed = true;
        self.refresh_reduced_costs();
    }

    fn clear_perturbation(&mut self) {
        self.cost[..self.n].copy_from_slice(&self.cost_true[..self.n]);
        self.perturbed = false;
        self.refresh_reduced_costs();
    }

    /// Objective under the working (perturbed) costs.
    pub(crate) fn working_objective(&self) -> f64 {
        (0..self.n).map(|v| self.cost[v] * self.value_of(v)).sum()
    }

    fn nonbasic_home(&self, v: usize) -> VState {
        if self.lower[v] == self.upper[v] {
            VState::Fixed
        } else if self.lower[v].is_finite() {
            VState::AtLower
        } else if self.upper[v].is_finite() {
            VState::AtUpper
        } else {
            VState::Free
        }
    }

    fn value_of(&self, v: usize) -> f64 {
        match self.state[v] {
            VState::Basic => self.x_basic[self.pos_of[v]],
            VState::AtLower | VState::Fixed => self.lower[v],
            VState::AtUpper => self.upper[v],
            VState::Free => 0.0,
        }
    }

    /// Updates one variable's bounds (used by branch-and-bound). The
    /// nonbasic state keeps the variable's current value whenever the new
    /// bounds allow it, so bound restores do not shake the basic values.
    pub(crate) fn set_bounds(&mut self, v: usize, lo: f64, hi: f64) {
        let value = self.value_of(v);
        self.lower[v] = lo;
        self.upper[v] = hi;
        if self.state[v] == VState::Basic {
            return;
        }
        self.state[v] = if lo == hi {
            VState::Fixed
        } else if value == hi {
            VState::AtUpper
        } else if value == lo || lo.is_finite() {
            VState::AtLower
        } else if hi.is_finite() {
            VState::AtUpper
        } else {
            VState::Free
        };
    }

    pub(crate) fn bounds_of(&self, v: usize) -> (f64, f64) {
        (self.lower[v], self.upper[v])
    }

    /// Recomputes basic values from the nonbasic point: `x_B = Binv (b - N x_N)`.
    pub(crate) fn refresh_x_basic(&mut self) {
        let m = self.m;
        self.scratch[..m].copy_from_slice(&self.rhs);
        for v in 0..self.total {
            if self.state[v] == VState::Basic {
                continue;
            }
            let value = self.value_of(v);
            if value == 0.0 {
                continue;
            }
            if v < self.n {
                for idx in self.col_ptr[v]..self.col_ptr[v + 1] {
                    self.scratch[self.col_row[idx]] -= self.col_val[idx] * value;
                }
            } else {
                self.scratch[v - self.n] -= value;
            }
        }
        self.x_basic.iter_mut().for_each(|x| *x = 0.0);
        for t in 0..m {
            let r0 = self.scratch[t];
            if r0 == 0.0 {
                continue;
            }
            let col = &self.binv[t * m..(t + 1) * m];
            for p in 0..m {
                self.x_basic[p] += r0 * col[p];
            }
        }
    }

    /// `w = Binv * A_q`, with the support list of nonzero positions. Entries
    /// below the drop tolerance are snapped to zero so numerical residue
    /// cannot densify the inverse over time.
    fn ftran(&mut self, q: usize) {
        let m = self.m;
        self.w.iter_mut().for_each(|x| *x = 0.0);
        if q < self.n {
            for idx in self.col_ptr[q]..self.col_ptr[q + 1] {
                let a = self.col_val[idx];
                let col = &self.binv[self.col_row[idx] * m..(self.col_row[idx] + 1) * m];
                for p in 0..m {
                    self.w[p] += a * col[p];
                }
            }
        } else {
            let col = &self.binv[(q - self.n) * m..(q - self.n + 1) * m];
            self.w.copy_from_slice(col);
        }
        self.w_support.clear();
        for p in 0..m {
            if math::abs(self.w[p]) > DROP_TOL {
                self.w_support.push(p);
            } else {
                self.w[p] = 0.0;
            }
        }
    }

    /// Row `r` of the basis inverse (a strided gather).
    fn gather_row(&mut self, r: usize) {
        let m = self.m;
        for c in 0..m {
            self.alpha[c] = self.binv[c * m + r];
        }
    }

    /// `alpha . A_v` using the previously gathered row.
    fn alpha_dot_col(&self, v: usize) -> f64 {
        if v < self.n {
            let mut acc = 0.0;
            for idx in self.col_ptr[v]..self.col_ptr[v + 1] {
                acc += self.alpha[self.col_row[idx]] * self.col_val[idx];
            }
            acc
        } else {
            self.alpha[v - self.n]
        }
    }

    /// Dense dual vector for an arbitrary objective over basic positions:
    /// `y = g' Binv` where `g[p]` is the objective weight of basis row `p`.
    fn btran_dense(&mut self, weights: &[(usize, f64)]) {
        let m = self.m;
        self.alpha.iter_mut().for_each(|x| *x = 0.0);
        if weights.is_empty() {
            return;
        }
        for c in 0..m {
            let col = &self.binv[c * m..(c + 1) * m];
            let mut acc = 0.0;
            for &(p, g) in weights {
                acc += g * col[p];
            }
            self.alpha[c] = acc;
        }
    }

    /// Recomputes all reduced costs for the working objective.
    fn refresh_reduced_costs(&mut self) {
        let weights: Vec<(usize, f64)> = (0..self.m)
            .filter(|&p| self.cost[self.basis[p]] != 0.0)
            .map(|p| (p, self.cost[self.basis[p]]))
            .collect();
        self.btran_dense(&weights);
        let worst = self.alpha.iter().fold(0.0f64, |acc, &y| acc.max(math::abs(y)));
        if worst > 1e9 {
            self.inverse_suspect = true;
        }
        for v in 0..self.total {
            if self.state[v] == VState::Basic {
                self.d[v] = 0.0;
            } else {
                self.d[v] = self.cost[v] - self.alpha_dot_col(v);
            }
        }
        self.d_valid = true;
    }

    /// Row duals `y = c_B' Binv` for the current basis.
    pub(crate) fn duals(&mut self) -> Vec<f64> {
        let weights: Vec<(usize, f64)> = (0..self.m)
            .filter(|&p| self.cost[self.basis[p]] != 0.0)
            .map(|p| (p, self.cost[self.basis[p]]))
            .collect();
        self.btran_dense(&weights);
        self.alpha.clone()
    }

    pub(crate) fn primal_values(&self) -> Vec<f64> {
        (0..self.n).map(|v| self.value_of(v)).collect()
    }

    /// Objective under the true (unperturbed) costs.
    pub(crate) fn objective(&self) -> f64 {
        (0..self.n)
            .map(|v| self.cost_true[v] * self.value_of(v))
            .sum()
    }

    fn basic_violation(&self, p: usize) -> f64 {
        let v = self.basis[p];
        let x = self.x_basic[p];
        if x < self.lower[v] - FEAS {
            self.lower[v] - x
        } else if x > self.upper[v] + FEAS {
            x - self.upper[v]
        } else {
            0.0
        }
    }

    fn total_violation(&self) -> f64 {
        (0..self.m).map(|p| self.basic_violation(p)).sum()
    }

    // ------------------------------------------------------------------
    // pivoting
    // ------------------------------------------------------------------

    /// Applies the basis exchange at position `r` with entering variable `q`
    /// moved by `step` (signed). `leave_upper` says which bound the leaving
    /// variable lands on. `self.w` must hold `Binv A_q`.
    fn pivot(&mut self, q: usize, r: usize, step: f64, leave_upper: bool, update_d: bool) {
        let m = self.m;
        let pivot = self.w[r];
        debug_assert!(pivot != 0.0);

        if update_d {
            let theta = self.d[q] / pivot;
            if theta != 0.0 {
                self.gather_row(r);
                for v in 0..self.total {
                    if self.state[v] != VState::Basic {
                        let beta = self.alpha_dot_col(v);
                        if beta != 0.0 {
                            self.d[v] -= theta * beta;
                        }
                    }
                }
            }
            let leaving = self.basis[r];
            self.d[leaving] = -theta;
            self.d[q] = 0.0;
        }

        let entering_value = self.value_of(q) + step;
        if step != 0.0 {
            for &p in &self.w_support {
                self.x_basic[p] -= self.w[p] * step;
            }
        }

        // Binv <- E Binv with E the elementary transform of column r. Tiny
        // results are dropped to keep the inverse sparse; a dense sweep is
        // faster than indirect indexing once the support is wide.
        let inv_pivot = 1.0 / pivot;
        let dense_update = self.w_support.len() > m / 4;
        for c in 0..m {
            let col = &mut self.binv[c * m..(c + 1) * m];
            let t = col[r];
            if t == 0.0 {
                continue;
            }
            let t = t * inv_pivot;
            if dense_update {
                for p in 0..m {
                    let next = col[p] - self.w[p] * t;
                    col[p] = if math::abs(next) > DROP_TOL { next } else { 0.0 };
                }
            } else {
                for &p in &self.w_support {
                    if p != r {
                        let next = col[p] - self.w[p] * t;
                        col[p] = if math::abs(next) > DROP_TOL { next } else { 0.0 };
                    }
                }
            }
            col[r] = if math::abs(t) > DROP_TOL { t } else { 0.0 };
        }

        let leaving = self.basis[r];
        self.pos_of[leaving] = UNSET;
        self.state[leaving] = if self.lower[leaving] == self.upper[leaving] {
            VState::Fixed
        } else if leave_upper {
            VState::AtUpper
        } else {
            VState::AtLower
        };
        self.basis[r] = q;
        self.pos_of[q] = r;
        self.state[q] = VState::Basic;
        self.x_basic[r] = entering_value;
    }

    // ------------------------------------------------------------------
    // primal simplex
    // ------------------------------------------------------------------

    fn arm_budget(&mut self, pivots: u64) {
        self.call_start = self.iterations;
        self.call_budget = self.budget_override.unwrap_or(pivots);
    }

    /// Full primal solve from the all-slack basis.
    pub(crate) fn primal_solve(&mut self) -> PrimalOutcome {
        self.reset_basis();
        self.primal_resolve()
    }

    /// Primal solve from the current basis: phase 1, then phase 2 under
    /// perturbed costs (degeneracy never survives distinct costs), then a
    /// cleanup phase 2 under the true costs.
    pub(crate) fn primal_resolve(&mut self) -> PrimalOutcome {
        self.arm_budget(50_000 + 40 * self.m as u64);
        let outcome = self.primal_resolve_armed();
        if outcome == PrimalOutcome::IterationLimit
            && self.inverse_suspect
            && !self.in_fresh_retry
        {
            // the inverse degraded beyond use; rebuild from the slack basis
            self.in_fresh_retry = true;
            let retried = self.primal_solve();
            self.in_fresh_retry = false;
            return retried;
        }
        outcome
    }

    fn primal_resolve_armed(&mut self) -> PrimalOutcome {
        self.inverse_suspect = false;
        match self.phase1() {
            Phase1::Feasible => {}
            Phase1::Infeasible => return PrimalOutcome::Infeasible,
            Phase1::IterationLimit => return PrimalOutcome::IterationLimit,
        }
        self.apply_perturbation();
        let outcome = self.phase2();
        if self.keep_perturbed {
            return outcome;
        }
        self.clear_perturbation();
        match outcome {
            PrimalOutcome::Optimal | PrimalOutcome::Unbounded => self.phase2(),
            other => other,
        }
    }

    fn phase1(&mut self) -> Phase1 {
        let mut bland_countdown = STALL_LIMIT;
        let mut last_violation = f64::INFINITY;
        loop {
            let violation = self.total_violation();
            if violation <= FEAS {
                return Phase1::Feasible;
            }
            if self.out_of_budget() {
                return Phase1::IterationLimit;
            }
            if violation < last_violation - 1e-12 {
                last_violation = violation;
                bland_countdown = STALL_LIMIT;
            } else {
                bland_countdown = bland_countdown.saturating_sub(1);
            }
            let bland = bland_countdown == 0;

            // Gradient of the total violation over basic positions.
            let weights: Vec<(usize, f64)> = (0..self.m)
                .filter_map(|p| {
                    let v = self.basis[p];
                    let x = self.x_basic[p];
                    if x < self.lower[v] - FEAS {
                        Some((p, -1.0))
                    } else if x > self.upper[v] + FEAS {
                        Some((p, 1.0))
                    } else {
                        None
                    }
                })
                .collect();
            self.btran_dense(&weights);

            // Entering: most negative phase-1 reduced costs (sign-adjusted),
            // kept as a short ranked list so tiny pivots can be declined.
            let mut kept: [(f64, usize, f64); 6] = [(0.0, 0, 0.0); 6];
            let mut len = 0usize;
            for v in 0..self.total {
                let d1 = match self.state[v] {
                    VState::Basic | VState::Fixed => continue,
                    _ => -self.alpha_dot_col(v),
                };
                let improving = match self.state[v] {
                    VState::AtLower => -d1,
                    VState::AtUpper => d1,
                    VState::Free => math::abs(d1),
                    _ => unreachable!(),
                };
                if improving > DUAL_TOL {
                    if bland {
                        kept[0] = (improving, v, d1);
                        len = 1;
                        break;
                    }
                    if len < kept.len() {
                        kept[len] = (improving, v, d1);
                        len += 1;
                        kept[..len].sort_by(|a, b| b.0.partial_cmp(&a.0).expect("finite"));
                    } else if improving > kept[len - 1].0 {
                        kept[len - 1] = (improving, v, d1);
                        kept[..len].sort_by(|a, b| b.0.partial_cmp(&a.0).expect("finite"));
                    }
                }
            }
            if len == 0 {
                // No improving direction: the violation is minimal and nonzero.
                return Phase1::Infeasible;
            }

            let mut fallback: Option<(usize, f64, Ratio, f64)> = None;
            let mut accepted: Option<(usize, f64, Ratio)> = None;
            let mut unbounded = false;
            for &(_, q, d1_q) in &kept[..len] {
                let dir = match self.state[q] {
                    VState::AtLower => 1.0,
                    VState::AtUpper => -1.0,
                    VState::Free => {
                        if d1_q < 0.0 {
                            1.0
                        } else {
                            -1.0
                        }
                    }
                    _ => unreachable!(),
                };
                self.ftran(q);
                let ratio = self.ratio_test(q, dir, true, bland);
                match ratio {
                    Ratio::Unbounded => {
                        unbounded = true;
                        continue;
                    }
                    Ratio::BoundFlip { .. } => {
                        accepted = Some((q, dir, ratio));
                        break;
                    }
                    Ratio::Pivot { r, .. } => {
                        let size = math::abs(self.w[r]);
                        if size >= PIVOT_SAFE {
                            accepted = Some((q, dir, ratio));
                            break;
                        }
                        if fallback.as_ref().map_or(true, |&(_, _, _, fs)| size > fs) {
                            fallback = Some((q, dir, ratio, size));
                        }
                    }
                }
            }
            let chosen = accepted.or(fallback.map(|(q, d, ra, _)| (q, d, ra)));
            let (q, dir, ratio) = match chosen {
                Some(c) => c,
                None => {
                    if unbounded {
                        // a finite minimum of the violation always exists;
                        // treat as numerical trouble and stop honestly
                        return Phase1::IterationLimit;
                    }
                    return Phase1::Infeasible;
                }
            };
            self.ftran(q);
            self.iterations += 1;
            self.pivots_phase1 += 1;
            match ratio {
                Ratio::Unbounded => return Phase1::IterationLimit,
                Ratio::BoundFlip { t } => self.apply_bound_flip(q, dir * t),
                Ratio::Pivot { t, r, leave_upper } => {
                    self.d_valid = false;
                    self.pivot(q, r, dir * t, leave_upper, false);
                }
            }
        }
    }

    fn phase2(&mut self) -> PrimalOutcome {
        let mut bland_countdown = STALL_LIMIT;
        let mut since_refresh = 0u64;
        let mut last_obj = f64::INFINITY;
        loop {
            if self.out_of_budget() {
                return PrimalOutcome::IterationLimit;
            }
            if since_refresh >= REFRESH_EVERY {
                self.refresh_x_basic();
                self.refresh_reduced_costs();
                since_refresh = 0;
                if self.inverse_suspect {
                    return PrimalOutcome::IterationLimit;
                }
            }

            // stall detection tracks the working (possibly perturbed) costs
            let obj: f64 = (0..self.n).map(|v| self.cost[v] * self.value_of(v)).sum();
            if obj < last_obj - 1e-12 * (1.0 + math::abs(last_obj)) {
                last_obj = obj;
                bland_countdown = STALL_LIMIT;
            } else {
                bland_countdown = bland_countdown.saturating_sub(1);
            }
            let bland = bland_countdown == 0;
            #[cfg(feature = "std")]
            if bland && std::env::var("TOVRP_DEBUG_STALL").is_ok() {
                let q = self.price_entering(false);
                std::eprintln!(
                    "phase2 stalled: obj {obj:.9} iter {} entering {:?} d {:?}",
                    self.iterations,
                    q,
                    q.map(|v| self.d[v])
                );
            }

            let mut ranked = [None; 6];
            self.price_ranked(bland, &mut ranked);
            if ranked[0].is_none() {
                // Guard against drift: confirm optimality on fresh data.
                if since_refresh > 0 {
                    self.refresh_x_basic();
                    self.refresh_reduced_costs();
                    since_refresh = 0;
                    if self.price_entering(false).is_some() {
                        continue;
                    }
                }
                return PrimalOutcome::Optimal;
            }

            // Try candidates until one admits a numerically safe pivot; a
            // tiny pivot poisons the explicit inverse beyond repair.
            let mut fallback: Option<(usize, f64, Ratio, f64)> = None; // (q, dir, ratio, |pivot|)
            let mut accepted: Option<(usize, f64, Ratio)> = None;
            for q in ranked.iter().flatten().copied() {
                let dir = match self.state[q] {
                    VState::AtLower => 1.0,
                    VState::AtUpper => -1.0,
                    VState::Free => {
                        if self.d[q] < 0.0 {
                            1.0
                        } else {
                            -1.0
                        }
                    }
                    _ => unreachable!(),
                };
                self.ftran(q);
                let ratio = self.ratio_test(q, dir, false, bland);
                match ratio {
                    Ratio::Unbounded => return PrimalOutcome::Unbounded,
                    Ratio::BoundFlip { .. } => {
                        accepted = Some((q, dir, ratio));
                        break;
                    }
                    Ratio::Pivot { r, .. } => {
                        let size = math::abs(self.w[r]);
                        if size >= PIVOT_SAFE {
                            accepted = Some((q, dir, ratio));
                            break;
                        }
                        if fallback.as_ref().map_or(true, |&(_, _, _, fs)| size > fs) {
                            fallback = Some((q, dir, ratio, size));
                        }
                    }
                }
            }
            let (q, dir, ratio) = match accepted.or(fallback.map(|(q, d, ra, _)| (q, d, ra))) {
                Some(choice) => choice,
                None => return PrimalOutcome::Optimal, // cannot happen; ranked nonempty
            };
            // the ratio test used `self.w` for its own candidate; recompute
            // when the accepted candidate is not the last one probed
            self.ftran(q);

            self.iterations += 1;
            self.pivots_phase2 += 1;
            since_refresh += 1;
            match ratio {
                Ratio::Unbounded => return PrimalOutcome::Unbounded,
                Ratio::BoundFlip { t } => self.apply_bound_flip(q, dir * t),
                Ratio::Pivot { t, r, leave_upper } => {
                    self.pivot(q, r, dir * t, leave_upper, true);
                }
            }
        }
    }

    fn price_entering(&self, bland: bool) -> Option<usize> {
        let mut ranked = [None; 1];
        self.price_ranked(bland, &mut ranked);
        ranked[0]
    }

    /// Fills `out` with the most attractive entering candidates, best first.
    fn price_ranked(&self, bland: bool, out: &mut [Option<usize>]) {
        out.iter_mut().for_each(|s| *s = None);
        let mut kept: [(f64, usize); 8] = [(0.0, 0); 8];
        let k = out.len().min(8);
        let mut len = 0usize;
        for v in 0..self.total {
            let score = match self.state[v] {
                VState::AtLower => -self.d[v],
                VState::AtUpper => self.d[v],
                VState::Free => math::abs(self.d[v]),
                _ => continue,
            };
            if score > DUAL_TOL {
                if bland {
                    out[0] = Some(v);
                    return;
                }
                if len < k {
                    kept[len] = (score, v);
                    len += 1;
                    kept[..len].sort_by(|a, b| b.0.partial_cmp(&a.0).expect("finite"));
                } else if score > kept[len - 1].0 {
                    kept[len - 1] = (score, v);
                    kept[..len].sort_by(|a, b| b.0.partial_cmp(&a.0).expect("finite"));
                }
            }
        }
        for (slot, &(_, v)) in out.iter_mut().zip(kept[..len].iter()) {
            *slot = Some(v);
        }
    }

    fn apply_bound_flip(&mut self, q: usize, step: f64) {
        for &p in &self.w_support {
            self.x_basic[p] -= self.w[p] * step;
        }
        self.state[q] = match self.state[q] {
            VState::AtLower => VState::AtUpper,
            VState::AtUpper => VState::AtLower,
            s => s,
        };
    }

    /// The step limit a basic variable imposes, with its bound moved out by
    /// `relax`. In phase 1, variables outside their bounds block where they
    /// re-enter feasibility (the violation gradient changes there); moving
    /// further out never blocks because the gradient already prices it.
    /// Returns the limit and whether the blocking bound is the upper one.
    fn step_limit(&self, p: usize, dir: f64, phase1: bool, relax: f64) -> Option<(f64, bool)> {
        let wp = self.w[p];
        if math::abs(wp) <= PIVOT_EPS {
            return None;
        }
        let v = self.basis[p];
        let x = self.x_basic[p];
        let delta = -dir * wp;
        if delta > 0.0 {
            if phase1 && x < self.lower[v] - FEAS {
                Some((((self.lower[v] + relax - x) / delta).max(0.0), false))
            } else if phase1 && x > self.upper[v] + FEAS {
                None
            } else if self.upper[v].is_finite() {
                Some((((self.upper[v] + relax - x) / delta).max(0.0), true))
            } else {
                None
            }
        } else if phase1 && x > self.upper[v] + FEAS {
            Some((((x - self.upper[v] + relax) / -delta).max(0.0), true))
        } else if phase1 && x < self.lower[v] - FEAS {
            None
        } else if self.lower[v].is_finite() {
            Some((((x - self.lower[v] + relax) / -delta).max(0.0), false))
        } else {
            None
        }
    }

    /// Two-pass (Harris) ratio test: pass one finds the most permissive step
    /// under relaxed bounds, pass two picks the largest pivot among blockers
    /// within that step. Large pivots keep the explicit inverse healthy.
    fn ratio_test(&self, q: usize, dir: f64, phase1: bool, bland: bool) -> Ratio {
        let mut theta_max = f64::INFINITY;
        for &p in &self.w_support {
            if let Some((limit, _)) = self.step_limit(p, dir, phase1, RELAX) {
                theta_max = theta_max.min(limit);
            }
        }

        let span = self.upper[q] - self.lower[q];
        if span.is_finite() && span <= theta_max {
            return Ratio::BoundFlip { t: span };
        }

        let mut blocker: Option<(usize, f64, bool, f64)> = None; // (pos, |pivot|, leave_upper, limit)
        for &p in &self.w_support {
            if let Some((limit, leave_upper)) = self.step_limit(p, dir, phase1, 0.0) {
                if limit <= theta_max {
                    let wp = math::abs(self.w[p]);
                    let better = match blocker {
                        None => true,
                        Some((bp, bw, _, _)) => {
                            if bland {
                                self.basis[p] < self.basis[bp]
                            } else {
                                wp > bw
                            }
                        }
                    };
                    if better {
                        blocker = Some((p, wp, leave_upper, limit));
                    }
                }
            }
        }

        match blocker {
            Some((r, _, leave_upper, limit)) => Ratio::Pivot {
                t: limit,
                r,
                leave_upper,
            },
            None => {
                if span.is_finite() {
                    Ratio::BoundFlip { t: span }
                } else {
                    Ratio::Unbounded
                }
            }
        }
    }

    // ------------------------------------------------------------------
    // dual simplex
    // ------------------------------------------------------------------

    /// Re-solves after bound changes: the current basis stays dual feasible,
    /// so the dual simplex walks back to primal feasibility. Falls back to a
    /// primal solve when reduced costs are not usable.
    /// Node re-solve after bound changes: when the basis still prices dual
    /// feasible, the dual simplex walks the few violated basics back in;
    /// otherwise the warm primal path re-optimizes (phase 1 has no
    /// precondition at all). Warm infeasibility verdicts are confirmed from
    /// the clean slack basis before being believed.
    pub(crate) fn node_resolve(&mut self) -> PrimalOutcome {
        // healthy warm-started nodes finish in a handful of dual pivots;
        // anything longer is degenerate churn better served by the primal
        self.arm_budget(400 + self.m as u64 / 8);
        debug_assert!(self.keep_perturbed && self.perturbed);
        self.refresh_x_basic();
        if self.d_valid && self.dual_infeasibility() <= DUAL_TOL * 10.0 {
            match self.dual_loop() {
                DualOutcome::Optimal => return PrimalOutcome::Optimal,
                DualOutcome::Infeasible => return self.primal_solve(),
                DualOutcome::IterationLimit => {}
            }
        }
        self.resolve_confirmed()
    }

    /// Warm primal re-solve whose `Infeasible` verdict is confirmed by a
    /// fresh solve from the slack basis before being believed.
    fn resolve_confirmed(&mut self) -> PrimalOutcome {
        match self.primal_resolve() {
            PrimalOutcome::Infeasible => self.primal_solve(),
            other => other,
        }
    }

    fn dual_infeasibility(&self) -> f64 {
        let mut worst = 0.0f64;
        for v in 0..self.total {
            let bad = match self.state[v] {
                VState::AtLower => -self.d[v],
                VState::AtUpper => self.d[v],
                VState::Free => math::abs(self.d[v]),
                _ => continue,
            };
            worst = worst.max(bad);
        }
        worst
    }

    fn dual_loop(&mut self) -> DualOutcome {
        let mut bland_countdown = STALL_LIMIT * 4;
        loop {
            if self.out_of_budget() {
                return DualOutcome::IterationLimit;
            }
            bland_countdown = bland_countdown.saturating_sub(1);
            let bland = bland_countdown == 0;

            // Leaving: the most violated basic variable.
            let mut leaving: Option<(f64, usize)> = None;
            for p in 0..self.m {
                let viol = self.basic_violation(p);
                if viol > FEAS {
                    if bland {
                        leaving = Some((viol, p));
                        break;
                    }
                    if leaving.map_or(true, |(best, _)| viol > best) {
                        leaving = Some((viol, p));
                    }
                }
            }
            let (_, r) = match leaving {
                Some(l) => l,
                None => return DualOutcome::Optimal,
            };
            let leave_var = self.basis[r];
            let below = self.x_basic[r] < self.lower[leave_var];
            // target bound the leaving variable snaps to
            let target = if below {
                self.lower[leave_var]
            } else {
                self.upper[leave_var]
            };

            self.gather_row(r);

            // Sign-eligible entering candidates: increasing an at-lower
            // variable with the right beta sign (or decreasing an at-upper
            // one) moves x_r toward its violated bound.
            // x_r changes at rate -beta per unit increase of x_v.
            let mut candidates: Vec<(f64, usize, f64)> = Vec::new(); // (ratio, var, beta)
            for v in 0..self.total {
                let beta = match self.state[v] {
                    VState::Basic | VState::Fixed => continue,
                    _ => self.alpha_dot_col(v),
                };
                if math::abs(beta) <= PIVOT_EPS {
                    continue;
                }
                let eligible = match self.state[v] {
                    VState::AtLower => {
                        if below {
                            beta < 0.0
                        } else {
                            beta > 0.0
                        }
                    }
                    VState::AtUpper => {
                        if below {
                            beta > 0.0
                        } else {
                            beta < 0.0
                        }
                    }
                    VState::Free => true,
                    _ => unreachable!(),
                };
                if eligible {
                    candidates.push((math::abs(self.d[v] / beta), v, beta));
                }
            }
            if candidates.is_empty() {
                return DualOutcome::Infeasible;
            }

            // Generalized ratio test: walk candidates in ratio order. Each
            // bounded candidate can absorb part of the violation by moving
            // across its whole span (a bound flip, no basis change); the
            // first candidate that covers the remainder pivots in with a
            // partial step. This keeps entering values inside their bounds
            // instead of launching them past and ping-ponging.
            candidates.sort_by(|a, b| {
                a.0.partial_cmp(&b.0)
                    .expect("finite ratios")
                    .then(a.1.cmp(&b.1))
            });
            let mut need = math::abs(self.x_basic[r] - target);
            let mut flips: Vec<usize> = Vec::new();
            let mut chosen: Option<(usize, f64)> = None;
            for group in candidates.chunk_by(|a, b| b.0 - a.0 <= RELAX) {
                // within a ratio tie, prefer the largest pivot (stability);
                // under Bland, the lowest variable index
                let mut best_in_group: Option<(usize, f64)> = None;
                for &(_, v, beta) in group {
                    let absorb = (self.upper[v] - self.lower[v]) * math::abs(beta);
                    if absorb >= need - FEAS {
                        let better = match best_in_group {
                            None => true,
                            Some((bv, bb)) => {
                                if bland {
                                    v < bv
                                } else {
                                    math::abs(beta) > math::abs(bb)
                                }
                            }
                        };
                        if better {
                            best_in_group = Some((v, beta));
                        }
                    }
                }
                if let Some((v, beta)) = best_in_group {
                    chosen = Some((v, beta));
                    break;
                }
                // no single candidate in this group covers the need: flip
                // them all and keep walking
                for &(_, v, beta) in group {
                    let span = self.upper[v] - self.lower[v];
                    if span.is_finite() && span > 0.0 {
                        need -= span * math::abs(beta);
                        flips.push(v);
                    }
                }
                if need <= FEAS {
                    // the flips alone restore feasibility; pivot on the
                    // best candidate of this group with the residual step
                    let last = flips.pop().expect("at least one flip");
                    chosen = Some((
                        last,
                        group
                            .iter()
                            .find(|&&(_, v, _)| v == last)
                            .expect("last flip is in this group")
                            .2,
                    ));
                    break;
                }
            }
            let (q, beta_q) = match chosen {
                Some(c) => c,
                None => return DualOutcome::Infeasible, // even all flips cannot cover
            };

            // apply the bound flips: values move across the span, basics
            // absorb the difference
            for &v in &flips {
                let span = self.upper[v] - self.lower[v];
                let delta = match self.state[v] {
                    VState::AtLower => {
                        self.state[v] = VState::AtUpper;
                        span
                    }
                    VState::AtUpper => {
                        self.state[v] = VState::AtLower;
                        -span
                    }
                    _ => unreachable!("only bounded nonbasics are flipped"),
                };
                self.ftran(v);
                for &p in &self.w_support.clone() {
                    self.x_basic[p] -= self.w[p] * delta;
                }
            }

            self.ftran(q);
            let pivot = self.w[r];
            if math::abs(pivot) <= PIVOT_EPS {
                // numerically useless pivot; refresh and retry once
                self.refresh_x_basic();
                self.refresh_reduced_costs();
                if self.basic_violation(r) <= FEAS {
                    continue;
                }
                return DualOutcome::IterationLimit;
            }
            debug_assert!(
                beta_q == 0.0 || (pivot < 0.0) == (beta_q < 0.0) || math::abs(pivot) < 1e-6,
                "ftran and btran disagree on the pivot sign"
            );
            let step = (self.x_basic[r] - target) / pivot;
            self.iterations += 1;
            self.pivots_dual += 1;
            self.pivot(q, r, step, !below, true);
        }
    }

    // ------------------------------------------------------------------
    // extraction
    // ------------------------------------------------------------------

    pub(crate) fn extract(&mut self, lp: &LinearProgram, status: LpStatus) -> LpSolution {
        let x = self.primal_values();
        let objective = lp.objective_value(&x);
        let duals = if self.m > 0 { self.duals() } else { Vec::new() };
        let mut reduced = Vec::with_capacity(self.n);
        for v in 0..self.n {
            // alpha still holds the dual vector after `duals()`
            let mut dv = self.cost[v];
            for idx in self.col_ptr[v]..self.col_ptr[v + 1] {
                dv -= duals[self.col_row[idx]] * self.col_val[idx];
            }
            reduced.push(dv);
        }
        LpSolution {
            status,
            x,
            duals,
            reduced_costs: reduced,
            objective,
            iterations: self.iterations,
        }
    }
}

#[derive(Clone, Copy)]
enum Ratio {
    Unbounded,
    BoundFlip { t: f64 },
    Pivot { t: f64, r: usize, leave_upper: bool },
}

enum Phase1 {
    Feasible,
    Infeasible,
    IterationLimit,
}

/// Solves the linear relaxation of `lp` (integrality flags ignored) and
/// returns primal values, row duals, and reduced costs. Deterministic for
/// identical input.
pub fn solve_lp(lp: &LinearProgram) -> Result<LpSolution, LpError> {
    solve_lp_capped(lp, 2_000_000)
}

#[doc(hidden)]
pub fn solve_lp_capped(lp: &LinearProgram, max_iterations: u64) -> Result<LpSolution, LpError> {
    let mut simplex = Simplex::new(lp)?;
    simplex.budget_override = Some(max_iterations);
    let outcome = simplex.primal_solve();
    let status = match outcome {
        PrimalOutcome::Optimal => LpStatus::Optimal,
        PrimalOutcome::Infeasible => LpStatus::Infeasible,
        PrimalOutcome::Unbounded => LpStatus::Unbounded,
        PrimalOutcome::IterationLimit => LpStatus::IterationLimit,
    };
    Ok(simplex.extract(lp, status))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lp::check_certificates;
    use alloc::vec;

    const INF: f64 = f64::INFINITY;

    #[test]
    fn min_x_with_ge_row() {
        // min x s.t. x >= 1, x >= 0: optimum 1, row dual 1
        let mut lp = LinearProgram::new();
        let x = lp.add_var(1.0, 0.0, INF, false);
        lp.add_row(Relation::Ge, 1.0, &[(x, 1.0)]);
        let sol = solve_lp(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert!((sol.x[0] - 1.0).abs() < 1e-9);
        assert!((sol.objective - 1.0).abs() < 1e-9);
        assert!((sol.duals[0] - 1.0).abs() < 1e-9);
        check_certificates(&lp, &sol).unwrap();
    }

    #[test]
    fn degenerate_optimal_face() {
        // min -x - y s.t. x + y <= 1: objective -1, dual -1
        let mut lp = LinearProgram::new();
        let x = lp.add_var(-1.0, 0.0, INF, false);
        let y = lp.add_var(-1.0, 0.0, INF, false);
        lp.add_row(Relation::Le, 1.0, &[(x, 1.0), (y, 1.0)]);
        let sol = solve_lp(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert!((sol.objective + 1.0).abs() < 1e-9);
        assert!((sol.duals[0] + 1.0).abs() < 1e-9);
        assert!((sol.x[0] + sol.x[1] - 1.0).abs() < 1e-9);
        check_certificates(&lp, &sol).unwrap();
    }

    #[test]
    fn infeasible_rows_detected() {
        // x <= 1 and x >= 2
        let mut lp = LinearProgram::new();
        let x = lp.add_var(1.0, 0.0, INF, false);
        lp.add_row(Relation::Le, 1.0, &[(x, 1.0)]);
        lp.add_row(Relation::Ge, 2.0, &[(x, 1.0)]);
        let sol = solve_lp(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Infeasible);
    }

    #[test]
    fn unbounded_detected() {
        let mut lp = LinearProgram::new();
        let x = lp.add_var(-1.0, 0.0, INF, false);
        lp.add_row(Relation::Ge, 0.0, &[(x, 1.0)]);
        let sol = solve_lp(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Unbounded);
    }

    #[test]
    fn equality_rows_and_upper_bounds() {
        // min 2x + 3y s.t. x + y = 1, 0 <= x <= 0.4, 0 <= y <= 1
        let mut lp = LinearProgram::new();
        let x = lp.add_var(2.0, 0.0, 0.4, false);
        let y = lp.add_var(3.0, 0.0, 1.0, false);
        lp.add_row(Relation::Eq, 1.0, &[(x, 1.0), (y, 1.0)]);
        let sol = solve_lp(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert!((sol.x[0] - 0.4).abs() < 1e-9);
        assert!((sol.x[1] - 0.6).abs() < 1e-9);
        assert!((sol.objective - 2.6).abs() < 1e-9);
        check_certificates(&lp, &sol).unwrap();
    }

    #[test]
    fn negative_rhs_ge_row() {
        // min x s.t. x >= -5, x free-ish via lower bound -10
        let mut lp = LinearProgram::new();
        let x = lp.add_var(1.0, -10.0, INF, false);
        lp.add_row(Relation::Ge, -5.0, &[(x, 1.0)]);
        let sol = solve_lp(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert!((sol.x[0] + 5.0).abs() < 1e-9);
        check_certificates(&lp, &sol).unwrap();
    }

    #[test]
    fn free_variable_equality() {
        // min x + y s.t. x + y = 3 with x free: multiple optima, objective 3
        let mut lp = LinearProgram::new();
        let x = lp.add_var(1.0, f64::NEG_INFINITY, INF, false);
        let y = lp.add_var(1.0, 0.0, INF, false);
        lp.add_row(Relation::Eq, 3.0, &[(x, 1.0), (y, 1.0)]);
        let sol = solve_lp(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert!((sol.objective - 3.0).abs() < 1e-9);
        check_certificates(&lp, &sol).unwrap();
    }

    #[test]
    fn fixed_variables_are_respected() {
        // y fixed at 0.5 forces x = 0.5 for x + y >= 1
        let mut lp = LinearProgram::new();
        let x = lp.add_var(1.0, 0.0, INF, false);
        let y = lp.add_var(0.0, 0.5, 0.5, false);
        lp.add_row(Relation::Ge, 1.0, &[(x, 1.0), (y, 1.0)]);
        let sol = solve_lp(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert!((sol.x[0] - 0.5).abs() < 1e-9);
        assert!((sol.x[1] - 0.5).abs() < 1e-9);
        check_certificates(&lp, &sol).unwrap();
    }

    #[test]
    fn no_rows_drives_vars_to_best_bound() {
        let mut lp = LinearProgram::new();
        lp.add_var(1.0, -2.0, 5.0, false);
        lp.add_var(-1.0, -2.0, 5.0, false);
        let sol = solve_lp(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_eq!(sol.x, vec![-2.0, 5.0]);
        assert!((sol.objective + 7.0).abs() < 1e-12);
    }

    #[test]
    fn covering_lp_duals() {
        // min y1 + y2 s.t. y1 >= 1 (t0), y1 + y2 >= 1 (t1), y2 <= 1,
        // 0 <= y <= 1. Optimal: y1 = 1, y2 = 0, objective 1.
        let mut lp = LinearProgram::new();
        let y1 = lp.add_var(1.0, 0.0, 1.0, false);
        let y2 = lp.add_var(1.0, 0.0, 1.0, false);
        lp.add_row(Relation::Ge, 1.0, &[(y1, 1.0)]);
        lp.add_row(Relation::Ge, 1.0, &[(y1, 1.0), (y2, 1.0)]);
        lp.add_row(Relation::Le, 1.0, &[(y2, 1.0)]);
        let sol = solve_lp(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert!((sol.objective - 1.0).abs() < 1e-9);
        check_certificates(&lp, &sol).unwrap();
    }

    #[test]
    fn determinism_same_input_same_output() {
        let mut lp = LinearProgram::new();
        for i in 0..6 {
            lp.add_var(((i * 7) % 5) as f64 - 2.0, 0.0, 2.0, false);
        }
        lp.add_row(Relation::Ge, 3.0, &[(0, 1.0), (1, 2.0), (2, 1.0)]);
        lp.add_row(Relation::Le, 4.0, &[(2, 1.0), (3, 1.0), (4, 2.0)]);
        lp.add_row(Relation::Eq, 1.0, &[(1, 1.0), (5, -1.0)]);
        let a = solve_lp(&lp).unwrap();
        let b = solve_lp(&lp).unwrap();
        assert_eq!(a, b);
    }
}
