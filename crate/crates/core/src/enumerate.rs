//! Path generation: the full feasible task-combination set and the greedy
//! initial set that seeds the restricted master problem.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::graph::CompatGraph;
use crate::model::{Instance, TaskCombination};

/// Default cap on the number of enumerated combinations.
pub const DEFAULT_POOL_CAP: usize = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnumError {
    /// Enumeration would exceed the configured combination cap.
    PoolLimit { count: usize, cap: usize },
}

impl core::fmt::Display for EnumError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            EnumError::PoolLimit { count, cap } => write!(
                f,
                "combination pool exceeds the cap of {cap} (at least {count} paths)"
            ),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for EnumError {}

/// The enumerated column pool: all feasible combinations, split into the
/// greedy initial set and the remainder used by pricing.
#[derive(Debug, Clone, PartialEq)]
pub struct ColumnPool {
    /// Every feasible task combination, in enumeration order, with its
    /// duration precomputed.
    pub columns: Vec<TaskCombination>,
    /// Duration of each column, aligned with `columns`.
    pub durations: Vec<f64>,
    /// Indices into `columns` forming the initial set.
    pub initial: Vec<usize>,
    /// Indices into `columns` left for pricing (complement of `initial`).
    pub remaining: Vec<usize>,
}

impl ColumnPool {
    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }
}

/// Enumerates every elementary directed path of the compatibility graph:
/// a depth-first traversal from each start node, recording every nonempty
/// prefix. Output order is deterministic (start node ascending, then
/// preorder with ascending successors).
pub fn enumerate_feasible(
    graph: &CompatGraph,
    instance: &Instance,
    cap: usize,
) -> Result<Vec<TaskCombination>, EnumError> {
    let n = graph.num_tasks();
    let mut out = Vec::new();
    let mut path = Vec::new();
    let mut visited = alloc::vec![false; n];
    for start in 0..n {
        path.clear();
        path.push(start);
        visited[start] = true;
        traverse(graph, &mut path, &mut visited, &mut out, cap)?;
        visited[start] = false;
    }
    debug_assert!(path_set_is_unique(&out));
    let _ = instance;
    Ok(out)
}

fn traverse(
    graph: &CompatGraph,
    path: &mut Vec<usize>,
    visited: &mut [bool],
    out: &mut Vec<TaskCombination>,
    cap: usize,
) -> Result<(), EnumError> {
    if out.len() >= cap {
        return Err(EnumError::PoolLimit {
            count: out.len() + 1,
            cap,
        });
    }
    out.push(TaskCombination::new(path.clone()));
    let last = *path.last().unwrap();
    for &next in graph.successors(last) {
        if !visited[next] {
            visited[next] = true;
            path.push(next);
            traverse(graph, path, visited, out, cap)?;
            path.pop();
            visited[next] = false;
        }
    }
    Ok(())
}

fn path_set_is_unique(paths: &[TaskCombination]) -> bool {
    let mut seen = BTreeSet::new();
    paths.iter().all(|p| seen.insert(&p.tasks))
}

/// Builds one path greedily from `start`: repeatedly append the successor of
/// the current last task minimizing `T_j - T_last + d(last, j) + pi_j`, until
/// the last task has no successor. Ties go to the lowest task id.
pub fn greedy_path_from(
    start: usize,
    graph: &CompatGraph,
    instance: &Instance,
) -> TaskCombination {
    let mut path = alloc::vec![start];
    let mut last = start;
    loop {
        let mut best: Option<(f64, u32, usize)> = None;
        for &j in graph.successors(last) {
            if path.contains(&j) {
                continue;
            }
            let d = instance
                .deadhead_time(last, j)
                .expect("graph and instance agree on task count");
            let t_last = instance.tasks[last].delivery_time;
            let criterion = instance.tasks[j].delivery_time - t_last + d + instance.tasks[j].duration;
            let key = (criterion, instance.tasks[j].id, j);
            let better = match best {
                None => true,
                Some((c, id, _)) => {
                    criterion < c - crate::TOL
                        || ((criterion - c).abs() <= crate::TOL && key.1 < id)
                }
            };
            if better {
                best = Some(key);
            }
        }
        match best {
            Some((_, _, j)) => {
                path.push(j);
                last = j;
            }
            None => break,
        }
    }
    TaskCombination::new(path)
}

/// Assembles the column pool: enumerates the full feasible set, then marks
/// the greedy path from every start task as the initial set (duplicates
/// collapsed). Every task appears in at least one initial column because
/// each task starts its own greedy path.
pub fn build_initial_set(
    graph: &CompatGraph,
    instance: &Instance,
    cap: usize,
) -> Result<ColumnPool, EnumError> {
    let columns = enumerate_feasible(graph, instance, cap)?;
    let index_of: alloc::collections::BTreeMap<&[usize], usize> = columns
        .iter()
        .enumerate()
        .map(|(idx, c)| (c.tasks.as_slice(), idx))
        .collect();

    let mut initial = Vec::new();
    let mut in_initial = alloc::vec![false; columns.len()];
    for start in 0..graph.num_tasks() {
        let path = greedy_path_from(start, graph, instance);
        let idx = *index_of
            .get(path.tasks.as_slice())
            .expect("greedy paths follow graph arcs, so enumeration contains them");
        if !in_initial[idx] {
            in_initial[idx] = true;
            initial.push(idx);
        }
    }

    let remaining = (0..columns.len()).filter(|&i| !in_initial[i]).collect();
    let durations = columns
        .iter()
        .map(|c| c.duration(instance).expect("enumerated paths are valid"))
        .collect();
    Ok(ColumnPool {
        columns,
        durations,
        initial,
        remaining,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
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

    fn vehicle(id: u32) -> Vehicle {
        Vehicle {
            id,
            rent_period: 1000.0,
            cost_rate: 1.0,
            reimburse_fraction: 0.5,
        }
    }

    /// Instance whose compatibility graph is exactly `arcs`, built by giving
    /// arc pairs a deadhead that lands inside the window and everyone else
    /// a deadhead far outside it.
    pub(crate) fn instance_with_arcs(n: usize, arcs: &[(usize, usize)]) -> Instance {
        let tasks: Vec<Task> = (0..n)
            .map(|i| task(i as u32, 100.0 * (i as f64 + 1.0), 1.0))
            .collect();
        let mut matrix = vec![vec![1e6; n]; n];
        for &(i, j) in arcs {
            // T_j = T_i + d + pi_j exactly: d = T_j - T_i - 1
            let d = tasks[j].delivery_time - tasks[i].delivery_time - 1.0;
            assert!(d >= 0.0, "arcs must go forward in delivery time");
            matrix[i][j] = d;
        }
        Instance {
            tasks,
            vehicles: vec![vehicle(0), vehicle(1)],
            epsilon: 0.0,
            speed: 1.0,
            deadhead: Some(matrix),
        }
    }

    #[test]
    fn chain_yields_all_subpaths() {
        let inst = instance_with_arcs(3, &[(0, 1), (1, 2)]);
        let g = build_graph(&inst).unwrap();
        let all = enumerate_feasible(&g, &inst, DEFAULT_POOL_CAP).unwrap();
        let seqs: Vec<&[usize]> = all.iter().map(|c| c.tasks.as_slice()).collect();
        assert_eq!(
            seqs,
            vec![
                &[0][..],
                &[0, 1][..],
                &[0, 1, 2][..],
                &[1][..],
                &[1, 2][..],
                &[2][..]
            ]
        );
    }

    #[test]
    fn no_arcs_yield_singletons() {
        let inst = instance_with_arcs(5, &[]);
        let g = build_graph(&inst).unwrap();
        let all = enumerate_feasible(&g, &inst, DEFAULT_POOL_CAP).unwrap();
        assert_eq!(all.len(), 5);
        assert!(all.iter().all(|c| c.tasks.len() == 1));
    }

    /// Independent path counter: counts elementary paths recursively without
    /// sharing any state with the enumerator.
    pub(crate) fn count_paths(succ: &[Vec<usize>]) -> usize {
        fn walk(succ: &[Vec<usize>], node: usize, seen: &mut Vec<usize>) -> usize {
            let mut count = 1;
            for &next in &succ[node] {
                if !seen.contains(&next) {
                    seen.push(next);
                    count += walk(succ, next, seen);
                    seen.pop();
                }
            }
            count
        }
        (0..succ.len())
            .map(|s| walk(succ, s, &mut vec![s]))
            .sum()
    }

    #[test]
    fn diamond_counts_match_independent_counter() {
        // a->b, a->c, b->d, c->d
        let arcs = [(0, 1), (0, 2), (1, 3), (2, 3)];
        let inst = instance_with_arcs(4, &arcs);
        let g = build_graph(&inst).unwrap();
        let all = enumerate_feasible(&g, &inst, DEFAULT_POOL_CAP).unwrap();

        let succ: Vec<Vec<usize>> = (0..4).map(|i| g.successors(i).to_vec()).collect();
        let expected = count_paths(&succ);
        assert_eq!(expected, 10);
        assert_eq!(all.len(), expected);
    }

    #[test]
    fn diamond_with_skip_arc() {
        // Add a->d to the diamond; the counter and enumerator must agree.
        let arcs = [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)];
        let inst = instance_with_arcs(4, &arcs);
        let g = build_graph(&inst).unwrap();
        let all = enumerate_feasible(&g, &inst, DEFAULT_POOL_CAP).unwrap();
        let succ: Vec<Vec<usize>> = (0..4).map(|i| g.successors(i).to_vec()).collect();
        assert_eq!(all.len(), count_paths(&succ));
    }

    #[test]
    fn pool_cap_is_enforced() {
        let inst = instance_with_arcs(3, &[(0, 1), (1, 2)]);
        let g = build_graph(&inst).unwrap();
        match enumerate_feasible(&g, &inst, 4) {
            Err(EnumError::PoolLimit { count, cap: 4 }) => assert!(count > 4),
            other => panic!("expected pool limit, got {other:?}"),
        }
    }

    #[test]
    fn enumeration_is_deterministic() {
        let arcs = [(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (3, 4)];
        let inst = instance_with_arcs(5, &arcs);
        let g = build_graph(&inst).unwrap();
        let a = enumerate_feasible(&g, &inst, DEFAULT_POOL_CAP).unwrap();
        let b = enumerate_feasible(&g, &inst, DEFAULT_POOL_CAP).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn greedy_stops_without_successors() {
        let inst = instance_with_arcs(2, &[]);
        let g = build_graph(&inst).unwrap();
        assert_eq!(greedy_path_from(1, &g, &inst).tasks, vec![1]);
    }

    #[test]
    fn greedy_picks_minimum_criterion() {
        // From 0, successors 1 and 2; make 2 the cheaper continuation by
        // giving it a smaller deadhead-plus-duration total.
        let tasks = vec![task(0, 100.0, 1.0), task(1, 200.0, 1.0), task(2, 200.0, 1.0)];
        let mut matrix = vec![vec![1e6; 3]; 3];
        matrix[0][1] = 99.0; // T_1 = 100 + 99 + 1: exact arrival
        matrix[0][2] = 95.0; // T_2 = 100 + 95 + 1 + 4 idle (eps = 5)
        let inst = Instance {
            tasks,
            vehicles: vec![vehicle(0)],
            epsilon: 5.0,
            speed: 1.0,
            deadhead: Some(matrix),
        };
        let g = build_graph(&inst).unwrap();
        assert!(g.has_arc(0, 1) && g.has_arc(0, 2));
        // criterion(1) = 200-100+99+1 = 200; criterion(2) = 200-100+95+1 = 196
        assert_eq!(greedy_path_from(0, &g, &inst).tasks, vec![0, 2]);
    }

    #[test]
    fn greedy_breaks_ties_by_task_id() {
        let tasks = vec![task(0, 100.0, 1.0), task(1, 200.0, 1.0), task(2, 200.0, 1.0)];
        let mut matrix = vec![vec![1e6; 3]; 3];
        matrix[0][1] = 99.0;
        matrix[0][2] = 99.0;
        let inst = Instance {
            tasks,
            vehicles: vec![vehicle(0)],
            epsilon: 5.0,
            speed: 1.0,
            deadhead: Some(matrix),
        };
        let g = build_graph(&inst).unwrap();
        assert_eq!(greedy_path_from(0, &g, &inst).tasks, vec![0, 1]);
    }

    #[test]
    fn initial_set_on_chain() {
        let inst = instance_with_arcs(3, &[(0, 1), (1, 2)]);
        let g = build_graph(&inst).unwrap();
        let pool = build_initial_set(&g, &inst, DEFAULT_POOL_CAP).unwrap();

        let initial: Vec<&[usize]> = pool
            .initial
            .iter()
            .map(|&i| pool.columns[i].tasks.as_slice())
            .collect();
        assert_eq!(initial, vec![&[0, 1, 2][..], &[1, 2][..], &[2][..]]);

        let remaining: Vec<&[usize]> = pool
            .remaining
            .iter()
            .map(|&i| pool.columns[i].tasks.as_slice())
            .collect();
        assert_eq!(remaining, vec![&[0][..], &[0, 1][..], &[1][..]]);
    }

    #[test]
    fn initial_set_covers_every_task_and_partitions_pool() {
        let arcs = [(0, 1), (0, 2), (1, 3), (2, 3), (2, 4)];
        let inst = instance_with_arcs(5, &arcs);
        let g = build_graph(&inst).unwrap();
        let pool = build_initial_set(&g, &inst, DEFAULT_POOL_CAP).unwrap();

        for t in 0..5 {
            assert!(
                pool.initial
                    .iter()
                    .any(|&i| pool.columns[i].contains(t)),
                "task {t} not covered by the initial set"
            );
        }
        let mut all: Vec<usize> = pool
            .initial
            .iter()
            .chain(pool.remaining.iter())
            .copied()
            .collect();
        all.sort_unstable();
        assert_eq!(all, (0..pool.len()).collect::<Vec<_>>());

        // Durations agree with the endpoint formula for the whole pool.
        for (c, &d) in pool.columns.iter().zip(&pool.durations) {
            assert_eq!(c.duration(&inst).unwrap(), d);
        }
    }

    #[test]
    fn no_arc_initial_set_is_all_singletons() {
        let inst = instance_with_arcs(4, &[]);
        let g = build_graph(&inst).unwrap();
        let pool = build_initial_set(&g, &inst, DEFAULT_POOL_CAP).unwrap();
        assert_eq!(pool.initial.len(), 4);
        assert!(pool.remaining.is_empty());
    }
}
