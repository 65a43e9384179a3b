//! Solution validation: coverage, rental limits, leg compatibility, and cost
//! recomputation, reported as an itemized list.

use alloc::vec::Vec;

use crate::graph::is_compatible;
use crate::model::{assignment_cost, tour_duration, Instance, Solution};
use crate::TOL;

#[derive(Debug, Clone, PartialEq)]
pub enum SolutionViolation {
    UnknownVehicle { assignment: usize, vehicle: usize },
    VehicleReused { vehicle: usize },
    UnknownTask { assignment: usize, task: usize },
    EmptyTour { assignment: usize },
    RepeatedTask { assignment: usize, task: usize },
    UncoveredTask { task: usize },
    IncompatibleLeg { assignment: usize, from: usize, to: usize },
    RentalExceeded { assignment: usize, duration: f64, rent_period: f64 },
    TourStartMismatch { assignment: usize, stored: f64, expected: f64 },
    TourFinishMismatch { assignment: usize, stored: f64, expected: f64 },
    CostMismatch { assignment: usize, stored: f64, expected: f64 },
    ObjectiveMismatch { stored: f64, expected: f64 },
}

impl core::fmt::Display for SolutionViolation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        use SolutionViolation::*;
        match self {
            UnknownVehicle { assignment, vehicle } => {
                write!(f, "assignment {assignment}: unknown vehicle index {vehicle}")
            }
            VehicleReused { vehicle } => {
                write!(f, "vehicle {vehicle} appears in more than one assignment")
            }
            UnknownTask { assignment, task } => {
                write!(f, "assignment {assignment}: unknown task index {task}")
            }
            EmptyTour { assignment } => write!(f, "assignment {assignment}: empty tour"),
            RepeatedTask { assignment, task } => {
                write!(f, "assignment {assignment}: task {task} repeated within the tour")
            }
            UncoveredTask { task } => write!(f, "task {task} is not covered by any tour"),
            IncompatibleLeg { assignment, from, to } => write!(
                f,
                "assignment {assignment}: tasks {from} -> {to} are not compatible"
            ),
            RentalExceeded { assignment, duration, rent_period } => write!(
                f,
                "assignment {assignment}: tour duration {duration} exceeds rent period {rent_period}"
            ),
            TourStartMismatch { assignment, stored, expected } => write!(
                f,
                "assignment {assignment}: tour start {stored} differs from expected {expected}"
            ),
            TourFinishMismatch { assignment, stored, expected } => write!(
                f,
                "assignment {assignment}: tour finish {stored} differs from expected {expected}"
            ),
            CostMismatch { assignment, stored, expected } => write!(
                f,
                "assignment {assignment}: stored cost {stored} differs from recomputed {expected}"
            ),
            ObjectiveMismatch { stored, expected } => write!(
                f,
                "stored objective {stored} differs from recomputed {expected}"
            ),
        }
    }
}

/// Validation outcome. `exact_cover` records whether every task is covered
/// exactly once (a partition); covering solutions may overlap legitimately.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionReport {
    pub violations: Vec<SolutionViolation>,
    pub exact_cover: bool,
}

impl SolutionReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every solution invariant against the instance.
pub fn validate_solution(instance: &Instance, solution: &Solution) -> SolutionReport {
    let mut violations = Vec::new();
    let n = instance.tasks.len();
    let mut cover_count = alloc::vec![0usize; n];
    let mut vehicle_used = alloc::vec![false; instance.vehicles.len()];

    for (idx, a) in solution.assignments.iter().enumerate() {
        if a.vehicle >= instance.vehicles.len() {
            violations.push(SolutionViolation::UnknownVehicle {
                assignment: idx,
                vehicle: a.vehicle,
            });
            continue;
        }
        if vehicle_used[a.vehicle] {
            violations.push(SolutionViolation::VehicleReused { vehicle: a.vehicle });
        }
        vehicle_used[a.vehicle] = true;

        let path = &a.combination.tasks;
        if path.is_empty() {
            violations.push(SolutionViolation::EmptyTour { assignment: idx });
            continue;
        }
        let mut bad_task = false;
        for &t in path {
            if t >= n {
                violations.push(SolutionViolation::UnknownTask {
                    assignment: idx,
                    task: t,
                });
                bad_task = true;
            }
        }
        if bad_task {
            continue;
        }
        for (pos, &t) in path.iter().enumerate() {
            if path[..pos].contains(&t) {
                violations.push(SolutionViolation::RepeatedTask {
                    assignment: idx,
                    task: t,
                });
            } else {
                cover_count[t] += 1;
            }
        }
        for pair in path.windows(2) {
            if !is_compatible(pair[0], pair[1], instance).unwrap_or(false) {
                violations.push(SolutionViolation::IncompatibleLeg {
                    assignment: idx,
                    from: pair[0],
                    to: pair[1],
                });
            }
        }

        let duration = tour_duration(path, instance).expect("indices checked above");
        let vehicle = &instance.vehicles[a.vehicle];
        if duration > vehicle.rent_period + TOL {
            violations.push(SolutionViolation::RentalExceeded {
                assignment: idx,
                duration,
                rent_period: vehicle.rent_period,
            });
        }

        let first = &instance.tasks[path[0]];
        let last = &instance.tasks[*path.last().unwrap()];
        let expected_start = first.delivery_time - first.duration;
        if (a.tour_start - expected_start).abs() > TOL {
            violations.push(SolutionViolation::TourStartMismatch {
                assignment: idx,
                stored: a.tour_start,
                expected: expected_start,
            });
        }
        if (a.tour_finish - last.delivery_time).abs() > TOL {
            violations.push(SolutionViolation::TourFinishMismatch {
                assignment: idx,
                stored: a.tour_finish,
                expected: last.delivery_time,
            });
        }

        if let Ok(expected_cost) = assignment_cost(vehicle, duration) {
            if (a.cost - expected_cost).abs() > TOL {
                violations.push(SolutionViolation::CostMismatch {
                    assignment: idx,
                    stored: a.cost,
                    expected: expected_cost,
                });
            }
        }
    }

    for (task, &count) in cover_count.iter().enumerate() {
        if count == 0 {
            violations.push(SolutionViolation::UncoveredTask { task });
        }
    }

    let expected_objective: f64 = solution.assignments.iter().map(|a| a.cost).sum();
    if (solution.objective - expected_objective).abs() > TOL {
        violations.push(SolutionViolation::ObjectiveMismatch {
            stored: solution.objective,
            expected: expected_objective,
        });
    }

    SolutionReport {
        exact_cover: cover_count.iter().all(|&c| c == 1),
        violations,
    }
}
