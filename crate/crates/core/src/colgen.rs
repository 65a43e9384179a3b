//! The path-based formulation: a set-covering restricted master problem over
//! task combinations, priced by reduced cost until no column improves the
//! relaxation, then solved with integrality over the admitted columns.

use alloc::vec::Vec;

use crate::enumerate::{build_initial_set, ColumnPool, EnumError};
use crate::graph::build_graph;
use crate::lp::{
    solve_lp, solve_mip, LinearProgram, LpError, LpSolution, LpStatus, MipStatus, Relation,
};
use crate::model::{validate_instance, Instance, Method, ModelError, Solution, TaskCombination};

#[derive(Debug, Clone, Copy)]
pub struct ColGenConfig {
    /// Reduced costs above this (negative) threshold do not enter.
    pub pricing_tolerance: f64,
    /// Cap on pricing rounds before declaring non-termination.
    pub max_iterations: usize,
    /// Relative gap of the final integer solve.
    pub final_gap: f64,
    /// Cap on the enumerated combination pool.
    pub enum_cap: usize,
}

impl Default for ColGenConfig {
    fn default() -> Self {
        ColGenConfig {
            pricing_tolerance: 1e-7,
            max_iterations: 10_000,
            final_gap: crate::DEFAULT_MIP_GAP,
            enum_cap: crate::enumerate::DEFAULT_POOL_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ColGenError {
    Invalid(ModelError),
    Enumeration(EnumError),
    Lp(LpError),
    /// The covering relaxation has no feasible point. Lists tasks no
    /// vehicle/column pair can serve; empty when the fleet is simply too
    /// small rather than any single task being unservable.
    Infeasible { unservable: Vec<usize> },
    /// The integer solve over the admitted columns found no cover.
    IntegerInfeasible,
    /// Pricing kept generating columns past the iteration cap.
    NonTermination { iterations: usize },
    /// The embedded solver gave up (iteration limit).
    SolverStalled,
}

impl core::fmt::Display for ColGenError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ColGenError::Invalid(e) => write!(f, "invalid instance: {e}"),
            ColGenError::Enumeration(e) => write!(f, "{e}"),
            ColGenError::Lp(e) => write!(f, "lp error: {e}"),
            ColGenError::Infeasible { unservable } => {
                if unservable.is_empty() {
                    write!(f, "covering relaxation infeasible: fleet cannot cover all tasks")
                } else {
                    write!(f, "covering relaxation infeasible: unservable tasks {unservable:?}")
                }
            }
            ColGenError::IntegerInfeasible => {
                write!(f, "integer master problem infeasible over admitted columns")
            }
            ColGenError::NonTermination { iterations } => {
                write!(f, "column generation did not terminate after {iterations} iterations")
            }
            ColGenError::SolverStalled => write!(f, "embedded solver hit its iteration limit"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ColGenError {}

impl From<ModelError> for ColGenError {
    fn from(e: ModelError) -> Self {
        ColGenError::Invalid(e)
    }
}

impl From<EnumError> for ColGenError {
    fn from(e: EnumError) -> Self {
        ColGenError::Enumeration(e)
    }
}

impl From<LpError> for ColGenError {
    fn from(e: LpError) -> Self {
        ColGenError::Lp(e)
    }
}

/// Objective coefficient of assigning `vehicle` to a combination of this
/// duration: the rental cost net of the unused-time reimbursement. Unlike
/// [`crate::model::assignment_cost`] this is the raw formula without the
/// rental-period check; overlong pairs keep their coefficient but are fixed
/// to zero in the master problem.
pub fn rmp_cost(vehicle: &crate::model::Vehicle, duration: f64) -> f64 {
    vehicle.rent_period * vehicle.cost_rate
        - vehicle.reimburse_fraction * vehicle.cost_rate * (vehicle.rent_period - duration)
}

/// Master-problem state: the admitted column set, the freshest solve, and
/// the duals the pricing step consumes.
#[derive(Debug, Clone)]
pub struct RmpState {
    /// Column ids admitted to the master problem, in admission order.
    pub active: Vec<usize>,
    /// Column ids still available to pricing (the complement of `active`).
    pub remaining: Vec<usize>,
    /// Covering-row duals, one per task.
    pub mu: Vec<f64>,
    /// Convexity-row duals, one per vehicle.
    pub lambda: Vec<f64>,
    /// Rental-row duals, one per vehicle.
    pub gamma: Vec<f64>,
    pub last_solve: Option<LpSolution>,
    lp: LinearProgram,
}

/// Result of pricing one vehicle over the remaining columns.
#[derive(Debug, Clone, PartialEq)]
pub struct PricingResult {
    pub vehicle: usize,
    /// Column id with the most negative reduced cost, if below tolerance.
    pub column: Option<usize>,
    /// The most negative reduced cost seen (infinite when nothing to scan).
    pub reduced_cost: f64,
}

/// Builds the restricted master problem over the pool's initial set.
pub fn build_rmp(pool: &ColumnPool, instance: &Instance) -> Result<RmpState, ColGenError> {
    if pool.is_empty() {
        return Err(ColGenError::Invalid(ModelError::EmptyPath));
    }
    let mut state = RmpState {
        active: pool.initial.clone(),
        remaining: pool.remaining.clone(),
        mu: Vec::new(),
        lambda: Vec::new(),
        gamma: Vec::new(),
        last_solve: None,
        lp: LinearProgram::new(),
    };
    state.rebuild(pool, instance);
    Ok(state)
}

impl RmpState {
    /// Variable index of `y(vehicle, active[pos])`.
    pub fn var_index(&self, instance: &Instance, vehicle: usize, pos: usize) -> usize {
        pos * instance.num_vehicles() + vehicle
    }

    pub fn lp(&self) -> &LinearProgram {
        &self.lp
    }

    /// Reconstructs the master LP from the current active set: covering rows
    /// (>= 1) per task, convexity rows (<= 1) and rental rows (<= 0) per
    /// vehicle, one binary-flagged variable per (vehicle, column) pair with
    /// overlong pairs fixed to zero.
    fn rebuild(&mut self, pool: &ColumnPool, instance: &Instance) {
        let n = instance.num_tasks();
        let m = instance.num_vehicles();
        let mut lp = LinearProgram::new();
        for (pos, &col) in self.active.iter().enumerate() {
            let duration = pool.durations[col];
            for (k, vehicle) in instance.vehicles.iter().enumerate() {
                let overlong = duration > vehicle.rent_period + crate::TOL;
                let var = lp.add_var(
                    rmp_cost(vehicle, duration),
                    0.0,
                    if overlong { 0.0 } else { 1.0 },
                    true,
                );
                debug_assert_eq!(var, self.var_index(instance, k, pos));
            }
        }
        let mut rows: Vec<Vec<(usize, f64)>> = alloc::vec![Vec::new(); n];
        for (pos, &col) in self.active.iter().enumerate() {
            for &t in &pool.columns[col].tasks {
                for k in 0..m {
                    rows[t].push((self.var_index(instance, k, pos), 1.0));
                }
            }
        }
        for row in rows {
            lp.add_row(Relation::Ge, 1.0, &row);
        }
        for k in 0..m {
            let coeffs: Vec<(usize, f64)> = (0..self.active.len())
                .map(|pos| (self.var_index(instance, k, pos), 1.0))
                .collect();
            lp.add_row(Relation::Le, 1.0, &coeffs);
        }
        for (k, vehicle) in instance.vehicles.iter().enumerate() {
            let coeffs: Vec<(usize, f64)> = self
                .active
                .iter()
                .enumerate()
                .map(|(pos, &col)| {
                    (
                        self.var_index(instance, k, pos),
                        pool.durations[col] - vehicle.rent_period,
                    )
                })
                .collect();
            lp.add_row(Relation::Le, 0.0, &coeffs);
        }
        self.lp = lp;
    }

    /// Solves the relaxation and stores the duals.
    pub fn solve_relaxation(&mut self, instance: &Instance) -> Result<&LpSolution, ColGenError> {
        let solution = solve_lp(&self.lp)?;
        match solution.status {
            LpStatus::Optimal => {}
            LpStatus::Infeasible => {
                return Err(ColGenError::Infeasible {
                    unservable: unservable_tasks(instance),
                })
            }
            LpStatus::Unbounded | LpStatus::IterationLimit => {
                return Err(ColGenError::SolverStalled)
            }
        }
        let n = instance.num_tasks();
        let m = instance.num_vehicles();
        self.mu = solution.duals[..n].to_vec();
        self.lambda = solution.duals[n..n + m].to_vec();
        self.gamma = solution.duals[n + m..n + 2 * m].to_vec();
        self.last_solve = Some(solution);
        Ok(self.last_solve.as_ref().unwrap())
    }

    /// Moves columns from the remaining set into the master problem.
    pub fn admit(&mut self, columns: &[usize], pool: &ColumnPool, instance: &Instance) {
        for &col in columns {
            debug_assert!(self.remaining.contains(&col));
            self.active.push(col);
        }
        self.remaining.retain(|c| !columns.contains(c));
        self.rebuild(pool, instance);
    }
}

/// Reduced cost of assigning `vehicle` to column `col` under the last duals:
/// `cost(k, l_c) - sum of mu over covered tasks - lambda_k - gamma_k (l_c - r_k)`.
pub fn reduced_cost(
    state: &RmpState,
    instance: &Instance,
    pool: &ColumnPool,
    vehicle: usize,
    col: usize,
) -> f64 {
    let v = &instance.vehicles[vehicle];
    let duration = pool.durations[col];
    let mut value = rmp_cost(v, duration);
    for &t in &pool.columns[col].tasks {
        value -= state.mu[t];
    }
    value -= state.lambda[vehicle];
    value -= state.gamma[vehicle] * (duration - v.rent_period);
    value
}

/// Scans the remaining columns for the one minimizing this vehicle's reduced
/// cost; ties break toward the lowest column id.
pub fn price_vehicle(
    state: &RmpState,
    instance: &Instance,
    pool: &ColumnPool,
    vehicle: usize,
    tolerance: f64,
) -> PricingResult {
    let mut best: Option<(f64, usize)> = None;
    for &col in &state.remaining {
        let value = reduced_cost(state, instance, pool, vehicle, col);
        if best.map_or(true, |(b, _)| value < b) {
            best = Some((value, col));
        }
    }
    match best {
        Some((value, col)) if value < -tolerance => PricingResult {
            vehicle,
            column: Some(col),
            reduced_cost: value,
        },
        Some((value, _)) => PricingResult {
            vehicle,
            column: None,
            reduced_cost: value,
        },
        None => PricingResult {
            vehicle,
            column: None,
            reduced_cost: f64::INFINITY,
        },
    }
}

/// Tasks no vehicle can serve within any rental period.
fn unservable_tasks(instance: &Instance) -> Vec<usize> {
    let max_rent = instance
        .vehicles
        .iter()
        .map(|v| v.rent_period)
        .fold(0.0f64, f64::max);
    (0..instance.num_tasks())
        .filter(|&t| instance.tasks[t].duration > max_rent + crate::TOL)
        .collect()
}

/// One pricing round in the trace.
#[derive(Debug, Clone, PartialEq)]
pub struct IterationTrace {
    pub iteration: usize,
    pub active_columns: usize,
    pub lp_objective: f64,
    pub columns_added: usize,
}

/// Everything a run produces beyond the solution itself.
#[derive(Debug, Clone)]
pub struct ColGenRun {
    pub solution: Solution,
    pub trace: Vec<IterationTrace>,
    /// Final relaxation objective: a lower bound on the covering optimum
    /// over the full enumerated pool.
    pub relaxation_objective: f64,
    /// Residual gap between the integer objective and the relaxation bound.
    pub integrality_gap: f64,
    pub pool_size: usize,
    pub columns_generated: usize,
    pub pricing_rounds: usize,
    /// State at termination, for post-hoc optimality scans.
    pub state: RmpState,
}

/// Runs the full column-generation pipeline on a validated instance.
pub fn run_column_generation(
    instance: &Instance,
    config: &ColGenConfig,
) -> Result<ColGenRun, ColGenError> {
    let violations = validate_instance(instance);
    if !violations.is_empty() {
        return Err(ColGenError::Invalid(ModelError::InvalidInstance(violations)));
    }
    if instance.num_tasks() == 0 {
        let state = RmpState {
            active: Vec::new(),
            remaining: Vec::new(),
            mu: Vec::new(),
            lambda: Vec::new(),
            gamma: Vec::new(),
            last_solve: None,
            lp: LinearProgram::new(),
        };
        return Ok(ColGenRun {
            solution: Solution {
                assignments: Vec::new(),
                objective: 0.0,
                method: Method::ColumnGeneration,
            },
            trace: Vec::new(),
            relaxation_objective: 0.0,
            integrality_gap: 0.0,
            pool_size: 0,
            columns_generated: 0,
            pricing_rounds: 0,
            state,
        });
    }

    let graph = build_graph(instance)?;
    let pool = build_initial_set(&graph, instance, config.enum_cap)?;
    let mut state = build_rmp(&pool, instance)?;

    let mut trace = Vec::new();
    let mut columns_generated = 0usize;
    let mut rounds = 0usize;
    let relaxation_objective = loop {
        if rounds >= config.max_iterations {
            return Err(ColGenError::NonTermination { iterations: rounds });
        }
        rounds += 1;
        let lp_objective = state.solve_relaxation(instance)?.objective;

        // one candidate per vehicle, deduplicated, admitted in vehicle order
        let mut admitted: Vec<usize> = Vec::new();
        for k in 0..instance.num_vehicles() {
            let priced = price_vehicle(&state, instance, &pool, k, config.pricing_tolerance);
            if let Some(col) = priced.column {
                if !admitted.contains(&col) {
                    admitted.push(col);
                }
            }
        }
        trace.push(IterationTrace {
            iteration: rounds,
            active_columns: state.active.len(),
            lp_objective,
            columns_added: admitted.len(),
        });
        if admitted.is_empty() {
            break lp_objective;
        }
        columns_generated += admitted.len();
        state.admit(&admitted, &pool, instance);
    };

    // integer solve over the admitted columns only
    let mip = solve_mip(state.lp(), config.final_gap)?;
    match mip.status {
        MipStatus::Optimal => {}
        MipStatus::Infeasible => return Err(ColGenError::IntegerInfeasible),
        MipStatus::Unbounded | MipStatus::IterationLimit => {
            return Err(ColGenError::SolverStalled)
        }
    }

    let m = instance.num_vehicles();
    let mut tours: Vec<(usize, TaskCombination)> = Vec::new();
    for (pos, &col) in state.active.iter().enumerate() {
        for k in 0..m {
            if mip.x[pos * m + k] > 0.5 {
                tours.push((k, pool.columns[col].clone()));
            }
        }
    }
    tours.sort_by_key(|&(k, _)| k);
    let solution = Solution::from_tours(instance, tours, Method::ColumnGeneration)
        .map_err(ColGenError::Invalid)?;

    let integrality_gap = if relaxation_objective.abs() > 1e-12 {
        (solution.objective - relaxation_objective) / relaxation_objective.abs()
    } else {
        0.0
    };
    Ok(ColGenRun {
        solution,
        trace,
        relaxation_objective,
        integrality_gap,
        pool_size: pool.len(),
        columns_generated,
        pricing_rounds: rounds,
        state,
    })
}

/// Exhaustive optimality scan: the minimum reduced cost over every
/// (vehicle, column) pair of the full pool under the final duals. At
/// termination of the pricing loop this must not be below `-1e-7`.
pub fn min_reduced_cost_full_scan(
    state: &RmpState,
    instance: &Instance,
    pool: &ColumnPool,
) -> f64 {
    let mut min = f64::INFINITY;
    for k in 0..instance.num_vehicles() {
        for col in 0..pool.len() {
            min = min.min(reduced_cost(state, instance, pool, k, col));
        }
    }
    min
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Location, Task, Vehicle};
    use alloc::vec;

    fn task(id: u32, delivery_time: f64, duration: f64) -> Task {
        Task {
            id,
            depot: Location::new(0.0, 0.0),
            client: Location::new(0.0, 0.0),
            delivery_time,
            duration,
        }
    }

    fn vehicle(id: u32, r: f64, c: f64, p: f64) -> Vehicle {
        Vehicle {
            id,
            rent_period: r,
            cost_rate: c,
            reimburse_fraction: p,
        }
    }

    /// Two tasks chained by one arc, two vehicles.
    fn chain_instance() -> Instance {
        Instance {
            tasks: vec![task(0, 10.0, 2.0), task(1, 19.0, 3.0)],
            vehicles: vec![vehicle(0, 100.0, 1.0, 0.5), vehicle(1, 50.0, 2.0, 0.2)],
            epsilon: 2.0,
            speed: 1.0,
            deadhead: Some(vec![vec![0.0, 5.0], vec![5.0, 0.0]]),
        }
    }

    fn pool_for(instance: &Instance) -> ColumnPool {
        let graph = build_graph(instance).unwrap();
        build_initial_set(&graph, instance, 1000).unwrap()
    }

    #[test]
    fn rmp_structure_counts() {
        let instance = chain_instance();
        let pool = pool_for(&instance);
        let state = build_rmp(&pool, &instance).unwrap();
        let (n, m) = (2, 2);
        assert_eq!(state.lp().num_rows(), n + 2 * m);
        assert_eq!(state.lp().num_vars(), state.active.len() * m);
    }

    #[test]
    fn single_column_single_vehicle_structure() {
        // one task: 1 covering row, 1 convexity, 1 rental, 1 variable
        let instance = Instance {
            tasks: vec![task(0, 10.0, 2.0)],
            vehicles: vec![vehicle(0, 100.0, 1.0, 0.5)],
            epsilon: 2.0,
            speed: 1.0,
            deadhead: None,
        };
        let pool = pool_for(&instance);
        let state = build_rmp(&pool, &instance).unwrap();
        assert_eq!(state.lp().num_vars(), 1);
        assert_eq!(state.lp().num_rows(), 3);
    }

    #[test]
    fn overlong_pairs_are_fixed_to_zero() {
        let mut instance = chain_instance();
        instance.vehicles[1] = vehicle(1, 10.0, 2.0, 0.2); // tour [0,1] lasts 11
        let pool = pool_for(&instance);
        let state = build_rmp(&pool, &instance).unwrap();
        let long_col_pos = state
            .active
            .iter()
            .position(|&c| pool.columns[c].tasks.len() == 2)
            .unwrap();
        let var = state.var_index(&instance, 1, long_col_pos);
        assert_eq!(state.lp().upper[var], 0.0);
        let var_ok = state.var_index(&instance, 0, long_col_pos);
        assert_eq!(state.lp().upper[var_ok], 1.0);
    }

    #[test]
    fn initial_set_is_always_solvable() {
        let instance = chain_instance();
        let pool = pool_for(&instance);
        let mut state = build_rmp(&pool, &instance).unwrap();
        let solution = state.solve_relaxation(&instance).unwrap();
        assert_eq!(solution.status, LpStatus::Optimal);
    }

    #[test]
    fn reduced_cost_with_zero_duals_is_cost() {
        let instance = chain_instance();
        let pool = pool_for(&instance);
        let mut state = build_rmp(&pool, &instance).unwrap();
        state.mu = vec![0.0; 2];
        state.lambda = vec![0.0; 2];
        state.gamma = vec![0.0; 2];
        for col in 0..pool.len() {
            for k in 0..2 {
                let expected = rmp_cost(&instance.vehicles[k], pool.durations[col]);
                assert!((reduced_cost(&state, &instance, &pool, k, col) - expected).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn active_columns_price_nonnegative_at_optimum() {
        let instance = chain_instance();
        let pool = pool_for(&instance);
        let mut state = build_rmp(&pool, &instance).unwrap();
        state.solve_relaxation(&instance).unwrap();
        for (pos, &col) in state.active.clone().iter().enumerate() {
            for k in 0..2 {
                let rc = reduced_cost(&state, &instance, &pool, k, col);
                let var = state.var_index(&instance, k, pos);
                // fixed pairs carry no optimality condition
                if state.lp().upper[var] > 0.0 {
                    assert!(rc > -1e-7, "active column {col} vehicle {k}: rc = {rc}");
                }
            }
        }
    }

    #[test]
    fn pricing_empty_remaining_returns_none() {
        let instance = Instance {
            tasks: vec![task(0, 10.0, 2.0)],
            vehicles: vec![vehicle(0, 100.0, 1.0, 0.5)],
            epsilon: 2.0,
            speed: 1.0,
            deadhead: None,
        };
        let pool = pool_for(&instance);
        let state = build_rmp(&pool, &instance).unwrap();
        assert!(state.remaining.is_empty());
        let priced = price_vehicle(&state, &instance, &pool, 0, 1e-7);
        assert_eq!(priced.column, None);
        assert_eq!(priced.reduced_cost, f64::INFINITY);
    }

    #[test]
    fn pricing_tolerance_rejects_marginal_columns() {
        let instance = chain_instance();
        let pool = pool_for(&instance);
        let mut state = build_rmp(&pool, &instance).unwrap();
        // with all-zero duals, reduced costs equal the positive rental costs
        state.mu = vec![0.0; 2];
        state.lambda = vec![0.0; 2];
        state.gamma = vec![0.0; 2];
        let priced = price_vehicle(&state, &instance, &pool, 0, 1e-7);
        assert_eq!(priced.column, None);
        assert!(priced.reduced_cost > 0.0);
    }

    #[test]
    fn colgen_solves_the_chain() {
        let instance = chain_instance();
        let run = run_column_generation(&instance, &ColGenConfig::default()).unwrap();
        let report = crate::validate::validate_solution(&instance, &run.solution);
        assert!(report.is_clean(), "{:?}", report.violations);
        // single tour [0, 1] on the cheaper vehicle:
        // vehicle 0: 100 - 0.5*(100-11) = 55.5; vehicle 1: 100 - 0.4*39 = 84.4
        assert!((run.solution.objective - 55.5).abs() < 1e-9);
        assert_eq!(run.solution.assignments.len(), 1);
        assert_eq!(run.solution.assignments[0].vehicle, 0);
    }

    #[test]
    fn no_arc_instance_uses_one_vehicle_per_task() {
        let tasks = vec![task(0, 100.0, 5.0), task(1, 300.0, 5.0)];
        let instance = Instance {
            tasks,
            vehicles: vec![vehicle(0, 400.0, 1.0, 0.5), vehicle(1, 400.0, 1.0, 0.5)],
            epsilon: 5.0,
            speed: 1.0,
            deadhead: Some(vec![vec![0.0, 1e6], vec![1e6, 0.0]]),
        };
        let run = run_column_generation(&instance, &ColGenConfig::default()).unwrap();
        assert_eq!(run.solution.assignments.len(), 2);
        // each assignment costs 400 - 0.5*395 = 202.5
        assert!((run.solution.objective - 405.0).abs() < 1e-9);
        // pool is all singletons, so pricing has nothing to add
        assert_eq!(run.pricing_rounds, 1);
        assert_eq!(run.columns_generated, 0);
    }

    #[test]
    fn infeasible_when_fleet_too_small() {
        let tasks = vec![task(0, 100.0, 5.0), task(1, 300.0, 5.0)];
        let instance = Instance {
            tasks,
            vehicles: vec![vehicle(0, 400.0, 1.0, 0.5)],
            epsilon: 5.0,
            speed: 1.0,
            deadhead: Some(vec![vec![0.0, 1e6], vec![1e6, 0.0]]),
        };
        match run_column_generation(&instance, &ColGenConfig::default()) {
            Err(ColGenError::Infeasible { unservable }) => assert!(unservable.is_empty()),
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn unservable_task_is_named() {
        let tasks = vec![task(0, 100.0, 50.0)];
        let instance = Instance {
            tasks,
            vehicles: vec![vehicle(0, 20.0, 1.0, 0.5)],
            epsilon: 5.0,
            speed: 1.0,
            deadhead: None,
        };
        match run_column_generation(&instance, &ColGenConfig::default()) {
            Err(ColGenError::Infeasible { unservable }) => assert_eq!(unservable, vec![0]),
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn final_scan_finds_no_negative_reduced_cost() {
        let instance = chain_instance();
        let run = run_column_generation(&instance, &ColGenConfig::default()).unwrap();
        let graph = build_graph(&instance).unwrap();
        let pool = build_initial_set(&graph, &instance, 1000).unwrap();
        let min = min_reduced_cost_full_scan(&run.state, &instance, &pool);
        assert!(min >= -1e-7, "reduced cost {min} below tolerance");
    }
}
