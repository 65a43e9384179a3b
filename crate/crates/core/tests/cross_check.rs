//! End-to-end agreement between the three solution methods on generated
//! instances, at the sizes the benchmark protocol uses.

use std::time::Instant;

use tovrp_core::colgen::{run_column_generation, ColGenConfig};
use tovrp_core::exact::{brute_force, solve_exact_with, ExactConfig};
use tovrp_core::gen::{generate, GenParams};
use tovrp_core::validate::validate_solution;

#[test]
fn small_instances_agree_with_brute_force() {
    let mut checked = 0;
    for seed in 0..12 {
        for n in [4, 6, 8] {
            let params = GenParams {
                n_tasks: n,
                seed: 1000 + seed,
                ..GenParams::default()
            };
            let instance = generate(&params).unwrap();
            let brute = brute_force(&instance, 8).unwrap();
            let exact = solve_exact_with(&instance, &ExactConfig::default()).unwrap();
            let cg = run_column_generation(&instance, &ColGenConfig::default()).unwrap();

            assert!(validate_solution(&instance, &brute).is_clean());
            assert!(validate_solution(&instance, &exact.solution).is_clean());
            assert!(validate_solution(&instance, &cg.solution).is_clean());

            let b = brute.objective;
            let e = exact.solution.objective;
            let c = cg.solution.objective;
            assert!(
                (e - b).abs() <= 1e-3 * b.abs() + 1e-9,
                "seed {seed} n {n}: exact {e} vs brute {b}"
            );
            assert!(
                (c - b).abs() <= 1e-3 * b.abs() + 1e-9,
                "seed {seed} n {n}: cg {c} vs brute {b}"
            );
            checked += 1;
        }
    }
    assert!(checked >= 25);
}

#[test]
#[ignore] // timing exploration; run explicitly
fn bench_sizes_timing() {
    for n in [10, 20, 30] {
        for seed in 0..5 {
            let params = GenParams {
                n_tasks: n,
                seed,
                ..GenParams::default()
            };
            let instance = generate(&params).unwrap();

            let t0 = Instant::now();
            let cg = run_column_generation(&instance, &ColGenConfig::default()).unwrap();
            let t_cg = t0.elapsed().as_secs_f64();

            let t0 = Instant::now();
            let exact = solve_exact_with(&instance, &ExactConfig::default()).unwrap();
            let t_exact = t0.elapsed().as_secs_f64();

            let c = cg.solution.objective;
            let e = exact.solution.objective;
            println!(
                "n={n} seed={seed}: cg={c:.4} ({t_cg:.3}s, {} rounds, pool {}) exact={e:.4} ({t_exact:.3}s, {} nodes, gap {:.5}) diff={:.5}%",
                cg.pricing_rounds,
                cg.pool_size,
                exact.mip.nodes,
                exact.mip.gap,
                100.0 * (e - c).abs() / e.abs()
            );
            assert!(
                (c - e).abs() <= 1e-3 * e.abs() + 1e-9,
                "n {n} seed {seed}: cg {c} vs exact {e}"
            );
        }
    }
}
