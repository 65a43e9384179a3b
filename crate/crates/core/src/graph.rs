//! Task-compatibility graph: the single source of truth for "task j can
//! follow task i on the same vehicle".
//!
//! An arc (i, j) exists when the vehicle finishing i can reach j's pickup in
//! time to deliver at `T_j`, idling at most `epsilon`:
//!
//! ```text
//! T_i + d_ij + pi_j  <=  T_j  <=  T_i + d_ij + pi_j + epsilon
//! ```
//!
//! Since task durations are positive, every arc strictly increases the
//! delivery time, so the graph is acyclic and path enumeration terminates.

use alloc::vec::Vec;

use crate::model::{validate_instance, Instance, ModelError};
use crate::TOL;

/// Immutable successor-list form of the compatibility graph. Task indices
/// are positions into `Instance::tasks`; successor lists are sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatGraph {
    succ: Vec<Vec<usize>>,
    pred: Vec<Vec<usize>>,
    arc_count: usize,
}

impl CompatGraph {
    pub fn num_tasks(&self) -> usize {
        self.succ.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    /// Successors of `i`, ascending.
    pub fn successors(&self, i: usize) -> &[usize] {
        &self.succ[i]
    }

    /// Predecessors of `j`, ascending.
    pub fn predecessors(&self, j: usize) -> &[usize] {
        &self.pred[j]
    }

    pub fn has_arc(&self, i: usize, j: usize) -> bool {
        self.succ[i].binary_search(&j).is_ok()
    }

    /// All arcs (i, j), ordered by i then j.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(i, js)| js.iter().map(move |&j| (i, j)))
    }
}

/// Whether task `j` can directly follow task `i` on one vehicle.
pub fn is_compatible(i: usize, j: usize, instance: &Instance) -> Result<bool, ModelError> {
    let d = instance.deadhead_time(i, j)?;
    let ti = instance.tasks[i].delivery_time;
    let tj = instance.tasks[j].delivery_time;
    let pj = instance.tasks[j].duration;
    let arrival = ti + d + pj;
    Ok(tj >= arrival - TOL && tj <= arrival + instance.epsilon + TOL)
}

/// Builds the compatibility graph. The instance must be validator-clean.
pub fn build_graph(instance: &Instance) -> Result<CompatGraph, ModelError> {
    let violations = validate_instance(instance);
    if !violations.is_empty() {
        return Err(ModelError::InvalidInstance(violations));
    }
    let n = instance.tasks.len();
    let mut succ = Vec::with_capacity(n);
    let mut pred = alloc::vec![Vec::new(); n];
    let mut arc_count = 0;
    for i in 0..n {
        let mut row = Vec::new();
        for j in 0..n {
            if i != j && is_compatible(i, j, instance)? {
                row.push(j);
                pred[j].push(i);
                arc_count += 1;
            }
        }
        succ.push(row);
    }
    Ok(CompatGraph {
        succ,
        pred,
        arc_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Location, Task, Violation};
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

    fn instance_with_matrix(tasks: Vec<Task>, epsilon: f64, matrix: Vec<Vec<f64>>) -> Instance {
        Instance {
            tasks,
            vehicles: vec![],
            epsilon,
            speed: 1.0,
            deadhead: Some(matrix),
        }
    }

    #[test]
    fn compatibility_window() {
        // T_i=10, d=5, pi_j=3, eps=2: window [18, 20]
        let matrix = vec![vec![0.0, 5.0], vec![5.0, 0.0]];
        for (tj, want) in [(19.0, true), (18.0, true), (20.0, true), (17.0, false), (21.0, false)]
        {
            let inst =
                instance_with_matrix(vec![task(0, 10.0, 4.0), task(1, tj, 3.0)], 2.0, matrix.clone());
            assert_eq!(is_compatible(0, 1, &inst).unwrap(), want, "T_j = {tj}");
        }
    }

    #[test]
    fn single_task_has_no_arcs() {
        let inst = Instance {
            tasks: vec![task(0, 10.0, 2.0)],
            vehicles: vec![],
            epsilon: 2.0,
            speed: 1.0,
            deadhead: None,
        };
        let g = build_graph(&inst).unwrap();
        assert_eq!(g.arc_count(), 0);
    }

    #[test]
    fn forward_pair_only() {
        // a(T=10, pi=2), b(T=19, pi=3), d=5 both ways, eps=2:
        // a->b window [18, 20] holds; b->a would need T_a >= 26.
        let inst = instance_with_matrix(
            vec![task(0, 10.0, 2.0), task(1, 19.0, 3.0)],
            2.0,
            vec![vec![0.0, 5.0], vec![5.0, 0.0]],
        );
        let g = build_graph(&inst).unwrap();
        assert_eq!(g.arc_count(), 1);
        assert!(g.has_arc(0, 1));
        assert!(!g.has_arc(1, 0));
        assert_eq!(g.predecessors(1), &[0]);
    }

    #[test]
    fn chain_without_skip_arc() {
        // Consecutive pairs compatible, skip pair (a, c) exceeds the idle cap.
        let inst = instance_with_matrix(
            vec![task(0, 10.0, 2.0), task(1, 20.0, 3.0), task(2, 30.0, 4.0)],
            3.0,
            vec![
                vec![0.0, 7.0, 7.0],
                vec![7.0, 0.0, 6.0],
                vec![7.0, 6.0, 0.0],
            ],
        );
        // a->b: 10+7+3=20 == T_b; b->c: 20+6+4=30 == T_c; a->c: 10+7+4=21, T_c=30 > 21+3.
        let g = build_graph(&inst).unwrap();
        let arcs: Vec<_> = g.arcs().collect();
        assert_eq!(arcs, vec![(0, 1), (1, 2)]);

        // Brute-force cross-check over every ordered pair.
        for i in 0..3 {
            for j in 0..3 {
                if i == j {
                    continue;
                }
                assert_eq!(g.has_arc(i, j), is_compatible(i, j, &inst).unwrap());
            }
        }
    }

    #[test]
    fn arcs_strictly_increase_delivery_time() {
        let inst = instance_with_matrix(
            vec![task(0, 10.0, 2.0), task(1, 20.0, 3.0), task(2, 30.0, 4.0)],
            50.0,
            vec![
                vec![0.0, 1.0, 2.0],
                vec![1.0, 0.0, 1.0],
                vec![2.0, 1.0, 0.0],
            ],
        );
        let g = build_graph(&inst).unwrap();
        for (i, j) in g.arcs() {
            assert!(inst.tasks[j].delivery_time > inst.tasks[i].delivery_time);
        }
    }

    #[test]
    fn build_rejects_invalid_instance() {
        let inst = Instance {
            tasks: vec![task(0, 10.0, 0.0)],
            vehicles: vec![],
            epsilon: 2.0,
            speed: 1.0,
            deadhead: None,
        };
        match build_graph(&inst) {
            Err(ModelError::InvalidInstance(v)) => {
                assert_eq!(v, vec![Violation::NonPositiveDuration(0)]);
            }
            other => panic!("expected validation error, got {other:?}"),
        }
    }
}
