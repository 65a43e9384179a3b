// temporary debugging aid; deleted before release
use std::time::Instant;
use tovrp_core::exact::{solve_exact_with, ExactConfig};
use tovrp_core::gen::{generate, GenParams};

#[test]
fn sweep_small() {
    for seed in 1000..1012u64 {
        for n in [4usize, 6, 8] {
            let params = GenParams { n_tasks: n, seed, ..GenParams::default() };
            let instance = generate(&params).unwrap();
            let t = Instant::now();
            match solve_exact_with(&instance, &ExactConfig::default()) {
                Ok(run) => println!(
                    "n={n} seed={seed}: obj {:.4} nodes {} pivots {} {:.2}s",
                    run.solution.objective, run.mip.nodes, run.mip.simplex_iterations,
                    t.elapsed().as_secs_f64()
                ),
                Err(e) => println!("n={n} seed={seed}: ERROR {e} after {:.2}s", t.elapsed().as_secs_f64()),
            }
        }
    }
}
