//! Domain types shared by every formulation, plus the cost and duration
//! formulas both solvers must agree on.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::math;
use crate::TOL;

pub type TaskId = u32;
pub type VehicleId = u32;

/// A point in the plane, in abstract distance units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Location {
    pub x: f64,
    pub y: f64,
}

impl Location {
    pub fn new(x: f64, y: f64) -> Self {
        Location { x, y }
    }

    pub fn distance_to(&self, other: Location) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        math::sqrt(dx * dx + dy * dy)
    }
}

/// One truckload job: pick up at `depot`, deliver to `client` exactly at
/// `delivery_time`. `duration` covers loading, the loaded leg, and
/// unloading, so the pickup starts at `delivery_time - duration`.
#[derive(Debug, Clone, PartialEq)]
pub struct Task {
    pub id: TaskId,
    pub depot: Location,
    pub client: Location,
    pub delivery_time: f64,
    pub duration: f64,
}

/// A rentable vehicle. Renting costs `rent_period * cost_rate`; a fraction
/// `reimburse_fraction` of the rate is refunded per unit of unused time.
#[derive(Debug, Clone, PartialEq)]
pub struct Vehicle {
    pub id: VehicleId,
    pub rent_period: f64,
    pub cost_rate: f64,
    pub reimburse_fraction: f64,
}

/// A full problem instance. Deadhead travel times come from the explicit
/// matrix when present, otherwise from coordinates at the given `speed`.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub tasks: Vec<Task>,
    pub vehicles: Vec<Vehicle>,
    /// Maximum idle time a vehicle may wait between consecutive tasks.
    pub epsilon: f64,
    /// Distance units per time unit; used only when `deadhead` is `None`.
    pub speed: f64,
    /// Explicit deadhead matrix, row-major by task position. Overrides
    /// coordinate-derived times.
    pub deadhead: Option<Vec<Vec<f64>>>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ModelError {
    /// Task index out of range.
    UnknownTask(usize),
    /// Vehicle index out of range.
    UnknownVehicle(usize),
    EmptyPath,
    /// Deadhead time queried for i == j; self-arcs have no meaning.
    SelfArc(usize),
    /// Assignment duration exceeds the vehicle's rental period.
    InfeasibleAssignment {
        vehicle: VehicleId,
        duration: f64,
        rent_period: f64,
    },
    /// The instance failed validation.
    InvalidInstance(Vec<Violation>),
}

impl core::fmt::Display for ModelError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ModelError::UnknownTask(i) => write!(f, "unknown task index {i}"),
            ModelError::UnknownVehicle(i) => write!(f, "unknown vehicle index {i}"),
            ModelError::EmptyPath => write!(f, "path is empty"),
            ModelError::SelfArc(i) => write!(f, "self-arc queried for task index {i}"),
            ModelError::InfeasibleAssignment {
                vehicle,
                duration,
                rent_period,
            } => write!(
                f,
                "vehicle {vehicle}: tour duration {duration} exceeds rent period {rent_period}"
            ),
            ModelError::InvalidInstance(violations) => {
                write!(f, "invalid instance ({} violations)", violations.len())
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ModelError {}

impl Instance {
    pub fn num_tasks(&self) -> usize {
        self.tasks.len()
    }

    pub fn num_vehicles(&self) -> usize {
        self.vehicles.len()
    }

    /// Position of the task with the given id, if any.
    pub fn task_index(&self, id: TaskId) -> Option<usize> {
        self.tasks.iter().position(|t| t.id == id)
    }

    pub fn vehicle_index(&self, id: VehicleId) -> Option<usize> {
        self.vehicles.iter().position(|v| v.id == id)
    }

    /// Deadhead travel time from the client (delivery point) of task `i` to
    /// the depot (pickup point) of task `j`, by task position.
    pub fn deadhead_time(&self, i: usize, j: usize) -> Result<f64, ModelError> {
        let n = self.tasks.len();
        if i >= n {
            return Err(ModelError::UnknownTask(i));
        }
        if j >= n {
            return Err(ModelError::UnknownTask(j));
        }
        if i == j {
            return Err(ModelError::SelfArc(i));
        }
        match &self.deadhead {
            Some(matrix) => Ok(matrix[i][j]),
            None => Ok(self.tasks[i].client.distance_to(self.tasks[j].depot) / self.speed),
        }
    }
}

/// Tour duration of a path of task positions: delivery time of the last task
/// minus the pickup start of the first. Interior tasks do not matter.
pub fn tour_duration(path: &[usize], instance: &Instance) -> Result<f64, ModelError> {
    let (&first, &last) = match (path.first(), path.last()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(ModelError::EmptyPath),
    };
    for &t in path {
        if t >= instance.tasks.len() {
            return Err(ModelError::UnknownTask(t));
        }
    }
    let first = &instance.tasks[first];
    let last = &instance.tasks[last];
    Ok(last.delivery_time - first.delivery_time + first.duration)
}

/// Cost of renting `vehicle` for a tour of the given duration:
/// `r*c - p*c*(r - duration)`, i.e. the acquisition cost minus the
/// reimbursement for unused rental time.
pub fn assignment_cost(vehicle: &Vehicle, duration: f64) -> Result<f64, ModelError> {
    if duration > vehicle.rent_period + TOL || duration < -TOL {
        return Err(ModelError::InfeasibleAssignment {
            vehicle: vehicle.id,
            duration,
            rent_period: vehicle.rent_period,
        });
    }
    let r = vehicle.rent_period;
    let c = vehicle.cost_rate;
    let p = vehicle.reimburse_fraction;
    Ok(r * c - p * c * (r - duration))
}

/// A violation found by [`validate_instance`]. Carries enough context to
/// name the offending task or vehicle.
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    DuplicateTaskId(TaskId),
    DuplicateVehicleId(VehicleId),
    NonPositiveDuration(TaskId),
    DeliveryBeforeDuration(TaskId),
    NonPositiveRentPeriod(VehicleId),
    NonPositiveCostRate(VehicleId),
    ReimburseFractionOutOfRange(VehicleId),
    NegativeEpsilon,
    NonPositiveSpeed,
    DeadheadRowCount { got: usize, want: usize },
    DeadheadRowLength { row: usize, got: usize, want: usize },
    NegativeDeadhead { i: usize, j: usize },
    NonFinite(String),
}

impl core::fmt::Display for Violation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Violation::DuplicateTaskId(id) => write!(f, "duplicate task id {id}"),
            Violation::DuplicateVehicleId(id) => write!(f, "duplicate vehicle id {id}"),
            Violation::NonPositiveDuration(id) => {
                write!(f, "task {id}: duration must be positive")
            }
            Violation::DeliveryBeforeDuration(id) => {
                write!(f, "task {id}: delivery time earlier than task duration")
            }
            Violation::NonPositiveRentPeriod(id) => {
                write!(f, "vehicle {id}: rent period must be positive")
            }
            Violation::NonPositiveCostRate(id) => {
                write!(f, "vehicle {id}: cost rate must be positive")
            }
            Violation::ReimburseFractionOutOfRange(id) => {
                write!(f, "vehicle {id}: reimburse fraction outside [0, 1]")
            }
            Violation::NegativeEpsilon => write!(f, "epsilon must be nonnegative"),
            Violation::NonPositiveSpeed => write!(f, "speed must be positive"),
            Violation::DeadheadRowCount { got, want } => {
                write!(f, "deadhead matrix has {got} rows, expected {want}")
            }
            Violation::DeadheadRowLength { row, got, want } => {
                write!(f, "deadhead row {row} has {got} entries, expected {want}")
            }
            Violation::NegativeDeadhead { i, j } => {
                write!(f, "deadhead[{i}][{j}] is negative")
            }
            Violation::NonFinite(what) => write!(f, "{what} is not finite"),
        }
    }
}

/// Checks every type invariant; returns the full list of violations instead
/// of stopping at the first.
pub fn validate_instance(instance: &Instance) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = instance.tasks.len();

    for (pos, task) in instance.tasks.iter().enumerate() {
        if instance.tasks[..pos].iter().any(|t| t.id == task.id) {
            out.push(Violation::DuplicateTaskId(task.id));
        }
        for (value, what) in [
            (task.delivery_time, "delivery time"),
            (task.duration, "duration"),
            (task.depot.x, "depot coordinate"),
            (task.depot.y, "depot coordinate"),
            (task.client.x, "client coordinate"),
            (task.client.y, "client coordinate"),
        ] {
            if !value.is_finite() {
                out.push(Violation::NonFinite(format!("task {}: {what}", task.id)));
            }
        }
        if !(task.duration > 0.0) {
            out.push(Violation::NonPositiveDuration(task.id));
        } else if task.delivery_time < task.duration - TOL {
            out.push(Violation::DeliveryBeforeDuration(task.id));
        }
    }

    for (pos, vehicle) in instance.vehicles.iter().enumerate() {
        if instance.vehicles[..pos].iter().any(|v| v.id == vehicle.id) {
            out.push(Violation::DuplicateVehicleId(vehicle.id));
        }
        for (value, what) in [
            (vehicle.rent_period, "rent period"),
            (vehicle.cost_rate, "cost rate"),
            (vehicle.reimburse_fraction, "reimburse fraction"),
        ] {
            if !value.is_finite() {
                out.push(Violation::NonFinite(format!(
                    "vehicle {}: {what}",
                    vehicle.id
                )));
            }
        }
        if !(vehicle.rent_period > 0.0) {
            out.push(Violation::NonPositiveRentPeriod(vehicle.id));
        }
        if !(vehicle.cost_rate > 0.0) {
            out.push(Violation::NonPositiveCostRate(vehicle.id));
        }
        if !(0.0..=1.0).contains(&vehicle.reimburse_fraction) {
            out.push(Violation::ReimburseFractionOutOfRange(vehicle.id));
        }
    }

    if !(instance.epsilon >= 0.0) || !instance.epsilon.is_finite() {
        out.push(Violation::NegativeEpsilon);
    }
    if instance.deadhead.is_none() && !(instance.speed > 0.0 && instance.speed.is_finite()) {
        out.push(Violation::NonPositiveSpeed);
    }

    if let Some(matrix) = &instance.deadhead {
        if matrix.len() != n {
            out.push(Violation::DeadheadRowCount {
                got: matrix.len(),
                want: n,
            });
        }
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != n {
                out.push(Violation::DeadheadRowLength {
                    row: i,
                    got: row.len(),
                    want: n,
                });
                continue;
            }
            for (j, &d) in row.iter().enumerate() {
                if i == j {
                    continue; // self entries are unused
                }
                if !d.is_finite() {
                    out.push(Violation::NonFinite(format!("deadhead[{i}][{j}]")));
                } else if d < 0.0 {
                    out.push(Violation::NegativeDeadhead { i, j });
                }
            }
        }
    }

    out
}

/// An ordered set of tasks one vehicle performs consecutively (a path of the
/// compatibility graph). `tasks` holds positions into `Instance::tasks`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TaskCombination {
    pub tasks: Vec<usize>,
}

impl TaskCombination {
    pub fn new(tasks: Vec<usize>) -> Self {
        TaskCombination { tasks }
    }

    pub fn duration(&self, instance: &Instance) -> Result<f64, ModelError> {
        tour_duration(&self.tasks, instance)
    }

    pub fn contains(&self, task: usize) -> bool {
        self.tasks.contains(&task)
    }
}

/// Which solver produced a [`Solution`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ColumnGeneration,
    Exact,
    BruteForce,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::ColumnGeneration => "cg",
            Method::Exact => "exact",
            Method::BruteForce => "brute",
        }
    }
}

impl core::fmt::Display for Method {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One vehicle's tour in a solution. `vehicle` is a position into
/// `Instance::vehicles`.
#[derive(Debug, Clone, PartialEq)]
pub struct Assignment {
    pub vehicle: usize,
    pub combination: TaskCombination,
    pub tour_start: f64,
    pub tour_finish: f64,
    pub cost: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub assignments: Vec<Assignment>,
    pub objective: f64,
    pub method: Method,
}

impl Solution {
    /// Builds an assignment with the tour window and cost implied by the
    /// combination: start at the first pickup, finish at the last delivery.
    pub fn assignment(
        instance: &Instance,
        vehicle: usize,
        combination: TaskCombination,
    ) -> Result<Assignment, ModelError> {
        if vehicle >= instance.vehicles.len() {
            return Err(ModelError::UnknownVehicle(vehicle));
        }
        let duration = combination.duration(instance)?;
        let first = &instance.tasks[combination.tasks[0]];
        let last = &instance.tasks[*combination.tasks.last().unwrap()];
        let cost = assignment_cost(&instance.vehicles[vehicle], duration)?;
        Ok(Assignment {
            vehicle,
            combination,
            tour_start: first.delivery_time - first.duration,
            tour_finish: last.delivery_time,
            cost,
        })
    }

    /// Assembles a solution from per-vehicle combinations, recomputing every
    /// cost so the stored objective always matches the assignments.
    pub fn from_tours(
        instance: &Instance,
        tours: Vec<(usize, TaskCombination)>,
        method: Method,
    ) -> Result<Solution, ModelError> {
        let mut assignments = Vec::with_capacity(tours.len());
        for (vehicle, combination) in tours {
            assignments.push(Self::assignment(instance, vehicle, combination)?);
        }
        let objective = assignments.iter().map(|a| a.cost).sum();
        Ok(Solution {
            assignments,
            objective,
            method,
        })
    }
}
