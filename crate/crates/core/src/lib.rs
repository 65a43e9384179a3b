//! Truckload open vehicle routing with fixed delivery times and vehicle
//! rental periods.
//!
//! Every task is one full truckload: pick up at a depot, deliver to a client
//! at a fixed time `T`, with total duration `pi` (loading + travel +
//! unloading). Vehicles are rented for a period `r` at a rate `c`, and a
//! fraction `p` of the unused rental is reimbursed. Tours are open: a vehicle
//! starts at the first pickup and ends at the last delivery.
//!
//! Two solvers are provided and cross-check each other:
//!
//! * [`exact`] builds the arc-based mixed-integer model over a
//!   pull-out / deadhead / pull-in network and solves it with the embedded
//!   branch-and-bound.
//! * [`colgen`] enumerates feasible task combinations (paths of the
//!   compatibility graph), prices them into a set-covering restricted master
//!   problem, and finishes with an integer solve.
//!
//! Both run on the bounded-variable simplex in [`lp`]; no external solver is
//! involved. The crate is `no_std`-compatible (requires `alloc`; enable the
//! `libm` feature instead of `std` for float intrinsics).

#![cfg_attr(not(feature = "std"), no_std)]

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("tovrp-core needs either the `std` or the `libm` feature");

extern crate alloc;

pub mod colgen;
pub mod enumerate;
pub mod exact;
pub mod gen;
pub mod graph;
pub mod lp;
mod math;
pub mod model;
pub mod validate;

pub use graph::CompatGraph;
pub use model::{Instance, Location, Solution, Task, TaskCombination, Vehicle};

/// Absolute tolerance for model-level comparisons (times, costs).
pub const TOL: f64 = 1e-9;

/// Feasibility tolerance of the LP engine (primal and dual).
pub const LP_TOL: f64 = 1e-7;

/// Default relative gap for integer solves.
pub const DEFAULT_MIP_GAP: f64 = 1e-3;
