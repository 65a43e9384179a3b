// temporary debugging aid; deleted before release
use tovrp_core::colgen::{run_column_generation, ColGenConfig};
use tovrp_core::exact::{brute_force, solve_exact_with, ExactConfig};
use tovrp_core::gen::{generate, GenParams};
use tovrp_core::graph::build_graph;

#[test]
fn which_solver_fails() {
    let params = GenParams {
        n_tasks: 4,
        seed: 1000,
        ..GenParams::default()
    };
    let instance = generate(&params).unwrap();
    let graph = build_graph(&instance).unwrap();
    println!("arcs: {:?}", graph.arcs().collect::<Vec<_>>());
    for t in &instance.tasks {
        println!(
            "task {}: T={:.2} pi={:.2}",
            t.id, t.delivery_time, t.duration
        );
    }
    println!("brute: {:?}", brute_force(&instance, 8).map(|s| s.objective));
    println!(
        "exact: {:?}",
        solve_exact_with(&instance, &ExactConfig::default()).map(|r| r.solution.objective)
    );
    println!(
        "cg: {:?}",
        run_column_generation(&instance, &ColGenConfig::default()).map(|r| r.solution.objective)
    );
}
