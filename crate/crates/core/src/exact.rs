//! The arc-based mixed-integer model over a pull-out / deadhead / pull-in
//! network, plus a partition-enumeration brute force for tiny instances.
//!
//! Per vehicle there is one binary per pull-out arc (source to task), one
//! per pull-in arc (task to sink), and one per deadhead arc (the
//! compatibility arcs), plus continuous tour start/finish times linked by
//! big-M rows. Deadhead timing feasibility is enforced by construction of
//! the arc set, so no timing rows are needed on deadhead arcs.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::enumerate::EnumError;
use crate::graph::{build_graph, CompatGraph};
use crate::lp::{solve_mip, LinearProgram, LpError, MipSolution, MipStatus, Relation};
use crate::model::{
    assignment_cost, tour_duration, validate_instance, Instance, Method, ModelError, Solution,
    TaskCombination,
};

/// The arc network: tasks plus an artificial source and sink. Pull-out and
/// pull-in arcs exist for every task; deadhead arcs are exactly the
/// compatibility arcs.
#[derive(Debug, Clone)]
pub struct ArcNetwork {
    pub num_tasks: usize,
    /// Deadhead arcs (i, j), ordered by i then j.
    pub deadhead: Vec<(usize, usize)>,
    /// Big-M constant: the largest delivery time among all tasks.
    pub big_m: f64,
}

impl ArcNetwork {
    pub fn new(instance: &Instance, graph: &CompatGraph) -> Self {
        ArcNetwork {
            num_tasks: instance.num_tasks(),
            deadhead: graph.arcs().collect(),
            big_m: instance
                .tasks
                .iter()
                .map(|t| t.delivery_time)
                .fold(0.0f64, f64::max),
        }
    }
}

/// Maps (vehicle, arc) pairs and tour-time variables to LP column indices.
#[derive(Debug, Clone)]
pub struct ArcModel {
    pub lp: LinearProgram,
    pub network: ArcNetwork,
    num_vehicles: usize,
    /// Deadhead arcs leaving / entering each task, as indices into
    /// `network.deadhead`.
    arcs_out: Vec<Vec<usize>>,
    arcs_in: Vec<Vec<usize>>,
}

impl ArcModel {
    fn block(&self) -> usize {
        2 * self.network.num_tasks + self.network.deadhead.len()
    }

    /// Binary: vehicle `k` starts its tour at task `j`.
    pub fn pull_out(&self, k: usize, j: usize) -> usize {
        k * self.block() + j
    }

    /// Binary: vehicle `k` ends its tour at task `i`.
    pub fn pull_in(&self, k: usize, i: usize) -> usize {
        k * self.block() + self.network.num_tasks + i
    }

    /// Binary: vehicle `k` traverses deadhead arc `e`.
    pub fn deadhead_var(&self, k: usize, e: usize) -> usize {
        k * self.block() + 2 * self.network.num_tasks + e
    }

    /// Continuous tour start of vehicle `k`.
    pub fn tour_start(&self, k: usize) -> usize {
        self.num_vehicles * self.block() + 2 * k
    }

    /// Continuous tour finish of vehicle `k`.
    pub fn tour_finish(&self, k: usize) -> usize {
        self.num_vehicles * self.block() + 2 * k + 1
    }
}

/// Builds the arc-based model. `symmetry_breaking` adds ordering rows over
/// identical vehicles (equal rent, rate, and reimbursement): vehicle `k` can
/// only start a tour if its predecessor in the class does.
pub fn build_arc_model_with(
    instance: &Instance,
    graph: &CompatGraph,
    symmetry_breaking: bool,
) -> ArcModel {
    let n = instance.num_tasks();
    let m = instance.num_vehicles();
    let network = ArcNetwork::new(instance, graph);
    let big_m = network.big_m;

    let mut arcs_out = alloc::vec![Vec::new(); n];
    let mut arcs_in = alloc::vec![Vec::new(); n];
    for (e, &(i, j)) in network.deadhead.iter().enumerate() {
        arcs_out[i].push(e);
        arcs_in[j].push(e);
    }

    let mut model = ArcModel {
        lp: LinearProgram::new(),
        network,
        num_vehicles: m,
        arcs_out,
        arcs_in,
    };

    // variables: per vehicle [pull-out | pull-in | deadhead], then tour times
    let lp = &mut model.lp;
    for (_k, vehicle) in instance.vehicles.iter().enumerate() {
        let acquisition = vehicle.rent_period * vehicle.cost_rate * (1.0 - vehicle.reimburse_fraction);
        for _j in 0..n {
            lp.add_var(acquisition, 0.0, 1.0, true); // pull-out carries the rental cost
        }
        for _i in 0..n {
            lp.add_var(0.0, 0.0, 1.0, true);
        }
        for _e in 0..model.network.deadhead.len() {
            lp.add_var(0.0, 0.0, 1.0, true);
        }
    }
    for vehicle in &instance.vehicles {
        let usage = vehicle.cost_rate * vehicle.reimburse_fraction;
        lp.add_var(-usage, 0.0, f64::INFINITY, false); // tour start
        lp.add_var(usage, 0.0, f64::INFINITY, false); // tour finish
    }

    // each task is delivered exactly once, by a pull-out or a deadhead arc
    for j in 0..n {
        let mut coeffs = Vec::new();
        for k in 0..m {
            coeffs.push((model.pull_out(k, j), 1.0));
            for &e in &model.arcs_in[j] {
                coeffs.push((model.deadhead_var(k, e), 1.0));
            }
        }
        model.lp.add_row(Relation::Eq, 1.0, &coeffs);
    }

    // flow conservation at every task node, per vehicle
    for k in 0..m {
        for j in 0..n {
            let mut coeffs = Vec::new();
            coeffs.push((model.pull_out(k, j), 1.0));
            for &e in &model.arcs_in[j] {
                coeffs.push((model.deadhead_var(k, e), 1.0));
            }
            coeffs.push((model.pull_in(k, j), -1.0));
            for &e in &model.arcs_out[j] {
                coeffs.push((model.deadhead_var(k, e), -1.0));
            }
            model.lp.add_row(Relation::Eq, 0.0, &coeffs);
        }
    }

    // at most one tour per vehicle, and tours that start must end
    for k in 0..m {
        let coeffs: Vec<(usize, f64)> = (0..n).map(|j| (model.pull_out(k, j), 1.0)).collect();
        model.lp.add_row(Relation::Le, 1.0, &coeffs);
    }
    for k in 0..m {
        let mut coeffs: Vec<(usize, f64)> = (0..n).map(|j| (model.pull_out(k, j), 1.0)).collect();
        coeffs.extend((0..n).map(|i| (model.pull_in(k, i), -1.0)));
        model.lp.add_row(Relation::Eq, 0.0, &coeffs);
    }

    // big-M rows pinning tour start / finish to the first / last task
    for k in 0..m {
        for j in 0..n {
            let pickup = instance.tasks[j].delivery_time - instance.tasks[j].duration;
            model.lp.add_row(
                Relation::Ge,
                pickup - big_m,
                &[(model.tour_start(k), 1.0), (model.pull_out(k, j), -big_m)],
            );
            model.lp.add_row(
                Relation::Le,
                pickup + big_m,
                &[(model.tour_start(k), 1.0), (model.pull_out(k, j), big_m)],
            );
        }
    }
    for k in 0..m {
        for i in 0..n {
            let delivery = instance.tasks[i].delivery_time;
            model.lp.add_row(
                Relation::Ge,
                delivery - big_m,
                &[(model.tour_finish(k), 1.0), (model.pull_in(k, i), -big_m)],
            );
            model.lp.add_row(
                Relation::Le,
                delivery + big_m,
                &[(model.tour_finish(k), 1.0), (model.pull_in(k, i), big_m)],
            );
        }
    }

    // tour length within the rental period (zero when the vehicle is unused)
    for (k, vehicle) in instance.vehicles.iter().enumerate() {
        let mut coeffs = alloc::vec![
            (model.tour_finish(k), 1.0),
            (model.tour_start(k), -1.0),
        ];
        coeffs.extend((0..n).map(|j| (model.pull_out(k, j), -vehicle.rent_period)));
        model.lp.add_row(Relation::Le, 0.0, &coeffs);
    }

    // tour windows only exist for used vehicles: the span is nonnegative and
    // the start time collapses to zero when no pull-out is selected. Without
    // these, an idle vehicle's start time drifts upward and collects
    // reimbursement for time it never rented.
    for k in 0..m {
        model.lp.add_row(
            Relation::Ge,
            0.0,
            &[(model.tour_finish(k), 1.0), (model.tour_start(k), -1.0)],
        );
        let mut coeffs = alloc::vec![(model.tour_start(k), 1.0)];
        coeffs.extend((0..n).map(|j| (model.pull_out(k, j), -big_m)));
        model.lp.add_row(Relation::Le, 0.0, &coeffs);
    }

    if symmetry_breaking {
        for k in 1..m {
            let a = &instance.vehicles[k - 1];
            let b = &instance.vehicles[k];
            let identical = a.rent_period == b.rent_period
                && a.cost_rate == b.cost_rate
                && a.reimburse_fraction == b.reimburse_fraction;
            if identical {
                let mut coeffs: Vec<(usize, f64)> =
                    (0..n).map(|j| (model.pull_out(k, j), 1.0)).collect();
                coeffs.extend((0..n).map(|j| (model.pull_out(k - 1, j), -1.0)));
                model.lp.add_row(Relation::Le, 0.0, &coeffs);
            }
        }
    }

    model
}

/// The plain formulation without symmetry-breaking rows.
pub fn build_arc_model(instance: &Instance, graph: &CompatGraph) -> ArcModel {
    build_arc_model_with(instance, graph, false)
}

#[derive(Debug, Clone, PartialEq)]
pub enum ExactError {
    Invalid(ModelError),
    Lp(LpError),
    Enumeration(EnumError),
    /// No feasible schedule. Lists tasks whose duration exceeds every rental
    /// period; empty when the fleet is too small rather than any single task
    /// being unservable.
    Infeasible { unservable: Vec<usize> },
    /// The instance exceeds the brute-force size limit.
    TooLarge { tasks: usize, limit: usize },
    /// The solver exhausted its budget.
    Stalled,
}

impl core::fmt::Display for ExactError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ExactError::Invalid(e) => write!(f, "invalid instance: {e}"),
            ExactError::Lp(e) => write!(f, "lp error: {e}"),
            ExactError::Enumeration(e) => write!(f, "{e}"),
            ExactError::Infeasible { unservable } => {
                if unservable.is_empty() {
                    write!(f, "infeasible: fleet cannot cover all tasks")
                } else {
                    write!(f, "infeasible: unservable tasks {unservable:?}")
                }
            }
            ExactError::TooLarge { tasks, limit } => {
                write!(f, "{tasks} tasks exceed the brute-force limit of {limit}")
            }
            ExactError::Stalled => write!(f, "solver exhausted its iteration budget"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ExactError {}

impl From<ModelError> for ExactError {
    fn from(e: ModelError) -> Self {
        ExactError::Invalid(e)
    }
}

impl From<LpError> for ExactError {
    fn from(e: LpError) -> Self {
        ExactError::Lp(e)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ExactConfig {
    pub mip_gap: f64,
    pub symmetry_breaking: bool,
}

impl Default for ExactConfig {
    fn default() -> Self {
        ExactConfig {
            mip_gap: crate::DEFAULT_MIP_GAP,
            symmetry_breaking: true,
        }
    }
}

/// Solution plus solver diagnostics.
#[derive(Debug, Clone)]
pub struct ExactRun {
    pub solution: Solution,
    pub mip: MipSolution,
}

pub fn solve_exact(instance: &Instance) -> Result<Solution, ExactError> {
    solve_exact_with(instance, &ExactConfig::default()).map(|run| run.solution)
}

pub fn solve_exact_with(instance: &Instance, config: &ExactConfig) -> Result<ExactRun, ExactError> {
    let violations = validate_instance(instance);
    if !violations.is_empty() {
        return Err(ExactError::Invalid(ModelError::InvalidInstance(violations)));
    }
    if instance.num_tasks() == 0 {
        return Ok(ExactRun {
            solution: Solution {
                assignments: Vec::new(),
                objective: 0.0,
                method: Method::Exact,
            },
            mip: MipSolution {
                status: MipStatus::Optimal,
                x: Vec::new(),
                objective: 0.0,
                bound: 0.0,
                gap: 0.0,
                nodes: 0,
                simplex_iterations: 0,
                pivot_split: (0, 0, 0),
            },
        });
    }
    let graph = build_graph(instance)?;
    let model = build_arc_model_with(instance, &graph, config.symmetry_breaking);
    let mip = solve_mip(&model.lp, config.mip_gap)?;
    match mip.status {
        MipStatus::Optimal => {}
        MipStatus::Infeasible => {
            return Err(ExactError::Infeasible {
                unservable: unservable_tasks(instance),
            })
        }
        MipStatus::Unbounded | MipStatus::IterationLimit => return Err(ExactError::Stalled),
    }

    let tours = decode_tours(&model, instance, &mip.x);
    let solution =
        Solution::from_tours(instance, tours, Method::Exact).map_err(ExactError::Invalid)?;
    Ok(ExactRun { solution, mip })
}

/// Walks each vehicle's selected arcs from its pull-out to its pull-in.
fn decode_tours(
    model: &ArcModel,
    instance: &Instance,
    x: &[f64],
) -> Vec<(usize, TaskCombination)> {
    let n = instance.num_tasks();
    let m = instance.num_vehicles();
    let mut tours = Vec::new();
    for k in 0..m {
        let start = (0..n).find(|&j| x[model.pull_out(k, j)] > 0.5);
        let mut current = match start {
            Some(j) => j,
            None => continue,
        };
        let mut path = alloc::vec![current];
        loop {
            debug_assert!(path.len() <= n, "tour decoding exceeded task count");
            let next = model.arcs_out[current]
                .iter()
                .find(|&&e| x[model.deadhead_var(k, e)] > 0.5)
                .map(|&e| model.network.deadhead[e].1);
            match next {
                Some(j) if path.len() <= n => {
                    path.push(j);
                    current = j;
                }
                _ => break,
            }
        }
        debug_assert!(x[model.pull_in(k, current)] > 0.5, "tour must end at the sink");
        tours.push((k, TaskCombination::new(path)));
    }
    tours
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

/// Default task-count limit of the brute force.
pub const BRUTE_FORCE_LIMIT: usize = 8;

/// Exhaustive, solver-free optimum: enumerates every partition of the tasks
/// into feasible ordered combinations (orders are forced by delivery times),
/// then every injective assignment of vehicles to the blocks, collapsing
/// identical vehicles.
pub fn brute_force(instance: &Instance, limit: usize) -> Result<Solution, ExactError> {
    let violations = validate_instance(instance);
    if !violations.is_empty() {
        return Err(ExactError::Invalid(ModelError::InvalidInstance(violations)));
    }
    let n = instance.num_tasks();
    if n > limit {
        return Err(ExactError::TooLarge { tasks: n, limit });
    }
    if n == 0 {
        return Ok(Solution {
            assignments: Vec::new(),
            objective: 0.0,
            method: Method::BruteForce,
        });
    }
    let graph = build_graph(instance)?;

    // vehicle classes: identical vehicles are interchangeable
    let mut classes: BTreeMap<(u64, u64, u64), (usize, Vec<usize>)> = BTreeMap::new();
    for (k, v) in instance.vehicles.iter().enumerate() {
        let key = (
            v.rent_period.to_bits(),
            v.cost_rate.to_bits(),
            v.reimburse_fraction.to_bits(),
        );
        let entry = classes.entry(key).or_insert((0, Vec::new()));
        entry.0 += 1;
        entry.1.push(k);
    }
    let class_vehicles: Vec<Vec<usize>> = classes.values().map(|(_, ks)| ks.clone()).collect();
    let class_counts: Vec<usize> = classes.values().map(|(c, _)| *c).collect();

    // tasks in delivery order; any feasible combination is increasing in
    // delivery time, so blocks only ever extend at the tail
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        instance.tasks[a]
            .delivery_time
            .partial_cmp(&instance.tasks[b].delivery_time)
            .expect("finite delivery times")
            .then(a.cmp(&b))
    });

    let mut best: Option<(f64, Vec<(usize, Vec<usize>)>)> = None;
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    partition_search(
        instance,
        &graph,
        &order,
        0,
        &mut blocks,
        &class_vehicles,
        &class_counts,
        &mut best,
    );

    match best {
        Some((_, assignment)) => {
            let tours = assignment
                .into_iter()
                .map(|(k, path)| (k, TaskCombination::new(path)))
                .collect();
            Solution::from_tours(instance, tours, Method::BruteForce).map_err(ExactError::Invalid)
        }
        None => Err(ExactError::Infeasible {
            unservable: unservable_tasks(instance),
        }),
    }
}

#[allow(clippy::too_many_arguments)]
fn partition_search(
    instance: &Instance,
    graph: &CompatGraph,
    order: &[usize],
    depth: usize,
    blocks: &mut Vec<Vec<usize>>,
    class_vehicles: &[Vec<usize>],
    class_counts: &[usize],
    best: &mut Option<(f64, Vec<(usize, Vec<usize>)>)>,
) {
    if depth == order.len() {
        if let Some((cost, picks)) = assign_vehicles(instance, blocks, class_vehicles, class_counts)
        {
            let better = best.as_ref().map_or(true, |(b, _)| cost < *b - 1e-12);
            if better {
                let assignment = picks
                    .iter()
                    .zip(blocks.iter())
                    .map(|(&k, block)| (k, block.clone()))
                    .collect();
                *best = Some((cost, assignment));
            }
        }
        return;
    }
    let task = order[depth];
    for b in 0..blocks.len() {
        let last = *blocks[b].last().unwrap();
        if graph.has_arc(last, task) {
            blocks[b].push(task);
            partition_search(
                instance,
                graph,
                order,
                depth + 1,
                blocks,
                class_vehicles,
                class_counts,
                best,
            );
            blocks[b].pop();
        }
    }
    blocks.push(alloc::vec![task]);
    partition_search(
        instance,
        graph,
        order,
        depth + 1,
        blocks,
        class_vehicles,
        class_counts,
        best,
    );
    blocks.pop();
}

/// Cheapest injective vehicle choice for the blocks: exhaustive over vehicle
/// classes with capacities. Returns concrete vehicle indices (ascending ids
/// within each class).
fn assign_vehicles(
    instance: &Instance,
    blocks: &[Vec<usize>],
    class_vehicles: &[Vec<usize>],
    class_counts: &[usize],
) -> Option<(f64, Vec<usize>)> {
    let durations: Vec<f64> = blocks
        .iter()
        .map(|b| tour_duration(b, instance).expect("blocks hold valid indices"))
        .collect();
    let mut capacity = class_counts.to_vec();
    let mut choice = alloc::vec![usize::MAX; blocks.len()];
    let mut best: Option<(f64, Vec<usize>)> = None;
    search_classes(
        instance,
        &durations,
        class_vehicles,
        &mut capacity,
        &mut choice,
        0,
        0.0,
        &mut best,
    );
    let (cost, class_choice) = best?;
    // materialize: next unused vehicle of each class, ascending
    let mut used = alloc::vec![0usize; class_vehicles.len()];
    let mut picks = Vec::with_capacity(blocks.len());
    for &cls in &class_choice {
        picks.push(class_vehicles[cls][used[cls]]);
        used[cls] += 1;
    }
    Some((cost, picks))
}

#[allow(clippy::too_many_arguments)]
fn search_classes(
    instance: &Instance,
    durations: &[f64],
    class_vehicles: &[Vec<usize>],
    capacity: &mut [usize],
    choice: &mut [usize],
    depth: usize,
    cost_so_far: f64,
    best: &mut Option<(f64, Vec<usize>)>,
) {
    if let Some((b, _)) = best {
        if cost_so_far >= *b - 1e-12 {
            return;
        }
    }
    if depth == durations.len() {
        *best = Some((cost_so_far, choice.to_vec()));
        return;
    }
    for cls in 0..class_vehicles.len() {
        if capacity[cls] == 0 {
            continue;
        }
        let vehicle = &instance.vehicles[class_vehicles[cls][0]];
        match assignment_cost(vehicle, durations[depth]) {
            Ok(cost) => {
                capacity[cls] -= 1;
                choice[depth] = cls;
                search_classes(
                    instance,
                    durations,
                    class_vehicles,
                    capacity,
                    choice,
                    depth + 1,
                    cost_so_far + cost,
                    best,
                );
                capacity[cls] += 1;
            }
            Err(_) => continue, // rental period too short for this block
        }
    }
}
