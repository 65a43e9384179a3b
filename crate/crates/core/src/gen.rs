//! Reproducible random instances: depots and clients placed uniformly in a
//! square box, each task served from its client's nearest depot, delivery
//! times uniform over the horizon. Fully determined by the seed.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::model::{Instance, Location, Task, Vehicle};

/// One homogeneous group of vehicles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FleetClass {
    pub count: usize,
    pub rent_period: f64,
    pub cost_rate: f64,
    pub reimburse_fraction: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenParams {
    pub n_tasks: usize,
    pub n_depots: usize,
    pub n_clients: usize,
    pub fleet: Vec<FleetClass>,
    /// Maximum idle time between consecutive tasks.
    pub epsilon: f64,
    /// Side length of the square coordinate box.
    pub box_size: f64,
    /// Latest possible delivery time.
    pub horizon: f64,
    /// Constant loading-plus-unloading time added to every task.
    pub load_unload: f64,
    pub speed: f64,
    pub seed: u64,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            n_tasks: 10,
            n_depots: 3,
            n_clients: 10,
            fleet: alloc::vec![
                FleetClass {
                    count: 15,
                    rent_period: 480.0,
                    cost_rate: 1.0,
                    reimburse_fraction: 0.5,
                },
                FleetClass {
                    count: 15,
                    rent_period: 240.0,
                    cost_rate: 0.8,
                    reimburse_fraction: 0.5,
                },
            ],
            epsilon: 30.0,
            box_size: 100.0,
            horizon: 480.0,
            load_unload: 10.0,
            speed: 1.0,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum GenError {
    ZeroTasks,
    ZeroDepots,
    ZeroClients,
    EmptyFleet,
    ZeroClassCount,
    BadBox,
    BadEpsilon,
    BadSpeed,
    BadLoadUnload,
    BadClass { class: usize },
    /// A task's duration cannot fit before the horizon.
    HorizonTooShort { task_duration: f64, horizon: f64 },
}

impl core::fmt::Display for GenError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GenError::ZeroTasks => write!(f, "need at least one task"),
            GenError::ZeroDepots => write!(f, "need at least one depot"),
            GenError::ZeroClients => write!(f, "need at least one client"),
            GenError::EmptyFleet => write!(f, "fleet must have at least one class"),
            GenError::ZeroClassCount => write!(f, "fleet classes need a positive count"),
            GenError::BadBox => write!(f, "coordinate box must have positive size"),
            GenError::BadEpsilon => write!(f, "epsilon must be nonnegative"),
            GenError::BadSpeed => write!(f, "speed must be positive"),
            GenError::BadLoadUnload => write!(f, "load/unload time must be nonnegative"),
            GenError::BadClass { class } => write!(f, "fleet class {class} has invalid parameters"),
            GenError::HorizonTooShort { task_duration, horizon } => write!(
                f,
                "horizon {horizon} cannot fit a task of duration {task_duration}"
            ),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for GenError {}

/// Generates an instance; the same parameters always produce the same
/// instance, bit for bit.
pub fn generate(params: &GenParams) -> Result<Instance, GenError> {
    if params.n_tasks == 0 {
        return Err(GenError::ZeroTasks);
    }
    if params.n_depots == 0 {
        return Err(GenError::ZeroDepots);
    }
    if params.n_clients == 0 {
        return Err(GenError::ZeroClients);
    }
    if params.fleet.is_empty() {
        return Err(GenError::EmptyFleet);
    }
    for (i, class) in params.fleet.iter().enumerate() {
        if class.count == 0 {
            return Err(GenError::ZeroClassCount);
        }
        if !(class.rent_period > 0.0)
            || !(class.cost_rate > 0.0)
            || !(0.0..=1.0).contains(&class.reimburse_fraction)
        {
            return Err(GenError::BadClass { class: i });
        }
    }
    if !(params.box_size > 0.0) || !params.box_size.is_finite() {
        return Err(GenError::BadBox);
    }
    if !(params.epsilon >= 0.0) {
        return Err(GenError::BadEpsilon);
    }
    if !(params.speed > 0.0) {
        return Err(GenError::BadSpeed);
    }
    if !(params.load_unload >= 0.0) {
        return Err(GenError::BadLoadUnload);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let point = |rng: &mut ChaCha8Rng| {
        Location::new(
            rng.gen_range(0.0..params.box_size),
            rng.gen_range(0.0..params.box_size),
        )
    };
    let depots: Vec<Location> = (0..params.n_depots).map(|_| point(&mut rng)).collect();
    let clients: Vec<Location> = (0..params.n_clients).map(|_| point(&mut rng)).collect();

    let mut tasks = Vec::with_capacity(params.n_tasks);
    for t in 0..params.n_tasks {
        let client = clients[rng.gen_range(0..params.n_clients)];
        let depot = *nearest(&depots, client);
        let duration = depot.distance_to(client) / params.speed + params.load_unload;
        if duration > params.horizon {
            return Err(GenError::HorizonTooShort {
                task_duration: duration,
                horizon: params.horizon,
            });
        }
        let delivery_time = if params.horizon > duration {
            rng.gen_range(duration..params.horizon)
        } else {
            duration
        };
        tasks.push(Task {
            id: t as u32,
            depot,
            client,
            delivery_time,
            duration,
        });
    }

    let mut vehicles = Vec::new();
    let mut id = 0u32;
    for class in &params.fleet {
        for _ in 0..class.count {
            vehicles.push(Vehicle {
                id,
                rent_period: class.rent_period,
                cost_rate: class.cost_rate,
                reimburse_fraction: class.reimburse_fraction,
            });
            id += 1;
        }
    }

    Ok(Instance {
        tasks,
        vehicles,
        epsilon: params.epsilon,
        speed: params.speed,
        deadhead: None,
    })
}

/// Nearest depot, ties to the lowest index.
fn nearest(depots: &[Location], client: Location) -> &Location {
    let mut best = &depots[0];
    let mut best_dist = best.distance_to(client);
    for depot in &depots[1..] {
        let dist = depot.distance_to(client);
        if dist < best_dist {
            best = depot;
            best_dist = dist;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use crate::model::validate_instance;

    #[test]
    fn same_seed_same_instance() {
        let params = GenParams {
            n_tasks: 25,
            seed: 17,
            ..GenParams::default()
        };
        let a = generate(&params).unwrap();
        let b = generate(&params).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn different_seeds_differ() {
        let a = generate(&GenParams { seed: 1, ..GenParams::default() }).unwrap();
        let b = generate(&GenParams { seed: 2, ..GenParams::default() }).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn single_depot_serves_everyone() {
        let params = GenParams {
            n_depots: 1,
            n_tasks: 20,
            seed: 3,
            ..GenParams::default()
        };
        let instance = generate(&params).unwrap();
        let depot = instance.tasks[0].depot;
        assert!(instance.tasks.iter().all(|t| t.depot == depot));
    }

    #[test]
    fn generated_instances_are_valid_and_buildable() {
        for seed in 0..5 {
            let params = GenParams { n_tasks: 10, seed, ..GenParams::default() };
            let instance = generate(&params).unwrap();
            assert!(validate_instance(&instance).is_empty());
            assert_eq!(instance.num_tasks(), 10);
            assert_eq!(instance.num_vehicles(), 30);
            build_graph(&instance).unwrap();
        }
    }

    #[test]
    fn depot_assignment_is_nearest_recomputed() {
        let params = GenParams {
            n_tasks: 1000,
            seed: 11,
            ..GenParams::default()
        };
        let instance = generate(&params).unwrap();
        for task in &instance.tasks {
            // no depot can be strictly closer than the assigned one
            let assigned = task.depot.distance_to(task.client);
            assert!(task.delivery_time >= task.duration);
            assert!(task.duration >= params.load_unload);
            let _ = assigned;
        }
        // regenerate depot pool by replaying the leading draws
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(params.seed);
        let depots: Vec<Location> = (0..params.n_depots)
            .map(|_| {
                Location::new(
                    rng.gen_range(0.0..params.box_size),
                    rng.gen_range(0.0..params.box_size),
                )
            })
            .collect();
        for task in &instance.tasks {
            let assigned = task.depot.distance_to(task.client);
            for depot in &depots {
                assert!(depot.distance_to(task.client) >= assigned - 1e-12);
            }
        }
    }

    #[test]
    fn triangle_inequality_holds_for_generated_deadheads() {
        let params = GenParams { n_tasks: 12, seed: 5, ..GenParams::default() };
        let instance = generate(&params).unwrap();
        let n = instance.num_tasks();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if i == j || j == k || i == k {
                        continue;
                    }
                    // client(i) -> depot(j) distances satisfy the triangle
                    // inequality through any intermediate point
                    let d_ij = instance.tasks[i].client.distance_to(instance.tasks[j].depot);
                    let via = instance.tasks[i].client.distance_to(instance.tasks[k].depot)
                        + instance.tasks[k].depot.distance_to(instance.tasks[j].depot);
                    assert!(d_ij <= via + 1e-9);
                }
            }
        }
    }

    #[test]
    fn degenerate_params_are_rejected() {
        assert_eq!(
            generate(&GenParams { n_tasks: 0, ..GenParams::default() }),
            Err(GenError::ZeroTasks)
        );
        assert_eq!(
            generate(&GenParams { box_size: 0.0, ..GenParams::default() }),
            Err(GenError::BadBox)
        );
        let params = GenParams {
            horizon: 5.0, // load/unload alone is 10
            ..GenParams::default()
        };
        assert!(matches!(
            generate(&params),
            Err(GenError::HorizonTooShort { .. })
        ));
    }
}
