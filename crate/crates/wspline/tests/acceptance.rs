//! End-to-end acceptance suite.  Each test checks one headline property
//! of the library against an independent reference computation and
//! prints a single pass/fail line, so `cargo test --test acceptance --
//! --nocapture` doubles as a status report.

use std::time::Instant;

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wspline::discrete::{
    coupling_marginal_flow, exact_multimarginal_oracle, solve_chain_sinkhorn, DiscreteMeasure,
    SolverConfig,
};
use wspline::gaussian::{
    assemble_chain_sdp, complete_chain, covariance_flow, optimal_edge_coupling, solve_chain_sdp,
    ChainGaussianPlan, GaussianMarginal,
};
use wspline::grid::TimeGrid;
use wspline::linalg::{kron_identity, sym_eigen, symmetrize};
use wspline::sampling::{empirical_energy, sample_gaussian_plan};
use wspline::spline::{
    energy_quadratic_form, hermite_spline, natural_spline, spline_energy, KnotPath, PhaseKnots,
};

fn report(name: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("acceptance {name}: PASS");
    } else {
        println!("acceptance {name}: FAIL");
        for f in &failures {
            println!("  - {f}");
        }
        panic!("{name}: {} check(s) failed", failures.len());
    }
}

fn check_runtime(failures: &mut Vec<String>, start: Instant, limit_s: f64) {
    let elapsed = start.elapsed().as_secs_f64();
    if elapsed > limit_s {
        failures.push(format!("runtime {elapsed:.1} s exceeds the {limit_s} s budget"));
    }
}

fn random_vec(rng: &mut ChaCha8Rng, d: usize, scale: f64) -> DVector<f64> {
    DVector::from_fn(d, |_, _| rng.gen_range(-scale..scale))
}

fn random_psd(rng: &mut ChaCha8Rng, d: usize) -> DMatrix<f64> {
    let g = DMatrix::from_fn(d, d, |_, _| rng.gen_range(-1.0..1.0));
    symmetrize(&(&g * g.transpose()))
}

fn random_grid(rng: &mut ChaCha8Rng, n_segments: usize) -> TimeGrid {
    let mut times = vec![0.0];
    for _ in 0..n_segments {
        times.push(times.last().unwrap() + rng.gen_range(0.2..2.0));
    }
    TimeGrid::new(times).unwrap()
}

/// 1. The natural spline minimizes integrated squared acceleration among
/// interpolants of the same knots: no random admissible competitor does
/// better.
#[test]
fn holladay_minimality() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for instance in 0..100 {
        let n_seg = rng.gen_range(1..=7);
        let d = rng.gen_range(1..=3);
        let grid = random_grid(&mut rng, n_seg);
        let points: Vec<DVector<f64>> = (0..=n_seg).map(|_| random_vec(&mut rng, d, 1.0)).collect();
        let knots = KnotPath::new(grid.clone(), points.clone()).unwrap();
        let energy = spline_energy(&natural_spline(&knots).unwrap());
        for trial in 0..100 {
            // Any choice of knot velocities yields a C¹ interpolant of
            // the same positions; its energy must not beat the spline.
            let velocities: Vec<DVector<f64>> =
                (0..=n_seg).map(|_| random_vec(&mut rng, d, 3.0)).collect();
            let phase = PhaseKnots::new(grid.clone(), points.clone(), velocities).unwrap();
            let competitor = spline_energy(&hermite_spline(&phase).unwrap());
            if energy > competitor + 1e-9 {
                failures.push(format!(
                    "instance {instance} trial {trial}: spline energy {energy} beats competitor {competitor}"
                ));
            }
        }
    }
    check_runtime(&mut failures, start, 10.0);
    report("01 holladay-minimality", failures);
}

/// 2. The closed-form segment cost equals the numerically integrated
/// squared acceleration of the cubic with those boundary conditions.
#[test]
fn segment_cost_matches_numeric_integration() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    for case in 0..1000 {
        let d = rng.gen_range(1..=3);
        let h = match case % 4 {
            0 => 0.1,
            1 => 1.0,
            2 => 10.0,
            _ => rng.gen_range(0.05..15.0),
        };
        let x0 = random_vec(&mut rng, d, 2.0);
        let x1 = random_vec(&mut rng, d, 2.0);
        let v0 = random_vec(&mut rng, d, 2.0);
        let v1 = random_vec(&mut rng, d, 2.0);
        let cost = wspline::spline::segment_cost(&x0, &x1, &v0, &v1, h).unwrap();
        let grid = TimeGrid::new(vec![0.0, h]).unwrap();
        let phase =
            PhaseKnots::new(grid, vec![x0.clone(), x1.clone()], vec![v0.clone(), v1.clone()])
                .unwrap();
        let curve = hermite_spline(&phase).unwrap();
        // Simpson's rule: |x''|² is a quadratic polynomial in t, so the
        // composite rule is exact up to rounding.
        let m = 64;
        let step = h / m as f64;
        let acc2 = |t: f64| curve.second_derivative(t).unwrap().norm_squared();
        let mut integral = acc2(0.0) + acc2(h);
        for j in 1..m {
            let w = if j % 2 == 1 { 4.0 } else { 2.0 };
            integral += w * acc2(j as f64 * step);
        }
        integral *= step / 3.0;
        let rel = (cost - integral).abs() / cost.abs().max(1e-12);
        if rel > 1e-8 {
            failures.push(format!(
                "case {case}: h={h}, cost {cost} vs integral {integral} (rel {rel:.2e})"
            ));
        }
    }
    check_runtime(&mut failures, start, 5.0);
    report("02 segment-cost-integral", failures);
}

/// 3. The knot-energy quadratic form reproduces the spline energy, is
/// identically zero on two knots, and matches the closed form
/// (3/2)·uuᵀ⊗I with u = (1, −2, 1) on three unit-gap knots.
#[test]
fn quadratic_form_identity() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    for instance in 0..200 {
        let n_seg = rng.gen_range(1..=6);
        let d = rng.gen_range(1..=3);
        let grid = random_grid(&mut rng, n_seg);
        let points: Vec<DVector<f64>> = (0..=n_seg).map(|_| random_vec(&mut rng, d, 1.0)).collect();
        let form = energy_quadratic_form(&grid, d).unwrap();
        let quad = form.evaluate(&points).unwrap();
        let direct =
            wspline::spline::multimarginal_cost(&KnotPath::new(grid, points).unwrap()).unwrap();
        let rel = (quad - direct).abs() / direct.abs().max(1.0);
        if rel > 1e-9 {
            failures.push(format!(
                "instance {instance}: quadratic form {quad} vs direct cost {direct}"
            ));
        }
    }
    for d in 1..=3 {
        let r1 = energy_quadratic_form(&TimeGrid::unit_gaps(1).unwrap(), d).unwrap();
        if r1.matrix().norm() != 0.0 {
            failures.push(format!("two-knot form is not exactly zero at d={d}"));
        }
        let r2 = energy_quadratic_form(&TimeGrid::unit_gaps(2).unwrap(), d).unwrap();
        let u = DVector::from_vec(vec![1.0, -2.0, 1.0]);
        let expected = kron_identity(&(1.5 * &u * u.transpose()), d);
        let diff = (r2.matrix() - &expected).norm();
        if diff > 1e-12 {
            failures.push(format!("three-knot form deviates from 1.5·uuᵀ⊗I at d={d}: {diff:.2e}"));
        }
    }
    report("03 quadratic-form-identity", failures);
}

/// 4. The entropic chain solver approaches the exact enumeration optimum
/// as ε decreases, and is within 5e-2 of it at ε = 1e-3.
#[test]
fn entropic_solver_matches_enumeration_oracle() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    for instance in 0..5 {
        let grid = TimeGrid::unit_gaps(2).unwrap();
        let marginals: Vec<DiscreteMeasure> = (0..3)
            .map(|_| {
                let a = rng.gen_range(-1.0..0.0);
                let b = rng.gen_range(0.25..1.25);
                DiscreteMeasure::uniform(vec![
                    DVector::from_element(1, a),
                    DVector::from_element(1, a + b),
                ])
                .unwrap()
            })
            .collect();
        let oracle = exact_multimarginal_oracle(&marginals, &grid).unwrap().cost;
        let mut gaps = Vec::new();
        for epsilon in [1e-1, 1e-2, 1e-3] {
            let cfg = SolverConfig {
                epsilon,
                max_iters: 100_000,
                marginal_tol: 1e-6,
                ..SolverConfig::default()
            };
            let coupling = solve_chain_sinkhorn(&marginals, &grid, &cfg).unwrap();
            gaps.push((coupling.entropic_cost() - oracle).abs());
        }
        if gaps[2] > 5e-2 {
            failures.push(format!(
                "instance {instance}: gap {:.3e} at ε=1e-3 exceeds 5e-2 (oracle {oracle:.6})",
                gaps[2]
            ));
        }
        if !(gaps[0] + 1e-10 >= gaps[1] && gaps[1] + 1e-10 >= gaps[2]) {
            failures.push(format!(
                "instance {instance}: gaps {:?} do not shrink with ε",
                gaps
            ));
        }
    }
    check_runtime(&mut failures, start, 30.0);
    report("04 entropic-oracle-gap", failures);
}

/// 5. Any two Gaussians are joined at (numerically) zero acceleration
/// cost: straight-line transport is optimal for a single segment.
#[test]
fn gaussian_two_marginal_zero_cost() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(505);
    let grid = TimeGrid::unit_gaps(1).unwrap();
    for instance in 0..50 {
        let d = rng.gen_range(1..=3);
        let marginals = vec![
            GaussianMarginal::new(random_vec(&mut rng, d, 1.0), random_psd(&mut rng, d)).unwrap(),
            GaussianMarginal::new(random_vec(&mut rng, d, 1.0), random_psd(&mut rng, d)).unwrap(),
        ];
        let problem = assemble_chain_sdp(&marginals, &grid).unwrap();
        match solve_chain_sdp(&problem, 1e-8) {
            Ok(plan) => {
                if !(plan.objective() < 1e-6) {
                    failures.push(format!(
                        "instance {instance} (d={d}): objective {:.3e}",
                        plan.objective()
                    ));
                }
            }
            Err(e) => failures.push(format!("instance {instance} (d={d}): {e}")),
        }
    }
    check_runtime(&mut failures, start, 60.0);
    report("05 gaussian-zero-cost", failures);
}

/// Slow reference solver for the d=1 chain SDP: factor the full joint
/// covariance as W = LLᵀ and run projected gradient descent on L, the
/// position rows rescaled to the pinned variances after every step.
/// Entirely independent of the ADMM path.
fn factored_descent_oracle(sigmas: &[f64], edge_cost: &DMatrix<f64>, rng: &mut ChaCha8Rng) -> f64 {
    let n_knots = sigmas.len();
    let dim = 2 * n_knots;
    let mut g = DMatrix::zeros(dim, dim);
    for e in 0..n_knots - 1 {
        let mut view = g.view_mut((2 * e, 2 * e), (4, 4));
        view += edge_cost;
    }
    let (evals, _) = sym_eigen(&g);
    let lip = 2.0 * evals.iter().cloned().fold(0.0_f64, f64::max);
    let step = 0.9 / lip;

    let project = |l: &mut DMatrix<f64>| {
        for i in 0..n_knots {
            let target = sigmas[i].sqrt();
            let norm = l.row(2 * i).norm();
            if norm < 1e-300 {
                l[(2 * i, 0)] = target;
            } else {
                let scale = target / norm;
                for c in 0..dim {
                    l[(2 * i, c)] *= scale;
                }
            }
        }
    };

    let mut best = f64::INFINITY;
    for _restart in 0..3 {
        let mut l = DMatrix::from_fn(dim, dim, |_, _| rng.gen_range(-1.0..1.0));
        project(&mut l);
        let mut obj = (&g * &l * l.transpose()).trace();
        let mut last_check = obj;
        for iter in 1..=200_000_usize {
            let grad = 2.0 * &g * &l;
            l -= step * grad;
            project(&mut l);
            if iter % 500 == 0 {
                obj = (&g * &l * l.transpose()).trace();
                if (last_check - obj).abs() < 1e-13 * (1.0 + obj.abs()) {
                    break;
                }
                last_check = obj;
            }
        }
        obj = (&g * &l * l.transpose()).trace();
        best = best.min(obj);
    }
    best
}

/// 6. The ADMM chain solver agrees with the independent factored-descent
/// reference on random scalar three-marginal instances.
#[test]
fn chain_sdp_matches_descent_oracle() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    let grid = TimeGrid::unit_gaps(2).unwrap();
    for instance in 0..20 {
        let sigmas: Vec<f64> = (0..3).map(|_| rng.gen_range(0.3..3.0)).collect();
        let marginals: Vec<GaussianMarginal> = sigmas
            .iter()
            .map(|&s| GaussianMarginal::new(DVector::zeros(1), DMatrix::from_element(1, 1, s)).unwrap())
            .collect();
        let problem = assemble_chain_sdp(&marginals, &grid).unwrap();
        let plan = solve_chain_sdp(&problem, 1e-9).unwrap();
        let reference = factored_descent_oracle(&sigmas, problem.edge_cost(), &mut rng);
        let rel = (plan.objective() - reference).abs() / reference.abs().max(1.0);
        if rel > 1e-4 {
            failures.push(format!(
                "instance {instance}: objective {:.8e} vs reference {:.8e} (rel {rel:.2e})",
                plan.objective(),
                reference
            ));
        }
    }
    check_runtime(&mut failures, start, 120.0);
    report("06 sdp-descent-oracle", failures);
}

/// 7. Figure-style scalar chains: the covariance flow hits the knot
/// variances and stays positive on a dense grid, including a 100-segment
/// instance.
#[test]
fn covariance_flow_constraints_and_positivity() {
    let mut failures = Vec::new();
    for n_seg in [5usize, 10, 100] {
        let start = Instant::now();
        let variances = wspline::cli::figure_variances(n_seg, 7 + n_seg as u64);
        let marginals: Vec<GaussianMarginal> = variances
            .iter()
            .map(|&v| GaussianMarginal::new(DVector::zeros(1), DMatrix::from_element(1, 1, v)).unwrap())
            .collect();
        let grid = TimeGrid::unit_gaps(n_seg).unwrap();
        let plan = match solve_chain_sdp(&assemble_chain_sdp(&marginals, &grid).unwrap(), 1e-7) {
            Ok(p) => p,
            Err(e) => {
                failures.push(format!("N={n_seg}: solver failed: {e}"));
                continue;
            }
        };
        for (i, &v) in variances.iter().enumerate() {
            let (pos, _) = covariance_flow(&plan, i as f64).unwrap();
            if (pos[(0, 0)] - v).abs() > 1e-6 {
                failures.push(format!(
                    "N={n_seg}: knot {i} variance {:.8} misses target {v:.8}",
                    pos[(0, 0)]
                ));
            }
        }
        let mut min_var = f64::INFINITY;
        for j in 0..2000 {
            let t = n_seg as f64 * j as f64 / 1999.0;
            let (pos, _) = covariance_flow(&plan, t).unwrap();
            min_var = min_var.min(pos[(0, 0)]);
        }
        if min_var < -1e-8 {
            failures.push(format!("N={n_seg}: variance dips to {min_var:.3e} on the grid"));
        }
        if n_seg == 100 {
            check_runtime(&mut failures, start, 60.0);
        }
    }
    report("07 flow-positivity", failures);
}

/// 8. Monte-Carlo consistency: sampled trajectories reproduce both the
/// plan objective (as mean energy) and the covariance flow, within three
/// standard errors.
#[test]
fn monte_carlo_consistency() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(808);
    let n = 100_000usize;
    for instance in 0..10 {
        let n_seg = rng.gen_range(2..=3);
        let grid = TimeGrid::unit_gaps(n_seg).unwrap();
        let marginals: Vec<GaussianMarginal> = (0..=n_seg)
            .map(|_| {
                GaussianMarginal::new(
                    random_vec(&mut rng, 1, 1.0),
                    DMatrix::from_element(1, 1, rng.gen_range(0.3..2.0)),
                )
                .unwrap()
            })
            .collect();
        let plan = solve_chain_sdp(&assemble_chain_sdp(&marginals, &grid).unwrap(), 1e-10).unwrap();
        let batch = sample_gaussian_plan(&plan, n, 1000 + instance).unwrap();

        let energies: Vec<f64> = batch.curves().iter().map(spline_energy).collect();
        let mean_energy = empirical_energy(&batch).unwrap();
        let var_energy =
            energies.iter().map(|e| (e - mean_energy).powi(2)).sum::<f64>() / (n - 1) as f64;
        let se_energy = (var_energy / n as f64).sqrt();
        let expected = plan.objective() + spline_energy(plan.mean_spline());
        if (mean_energy - expected).abs() > 3.0 * se_energy {
            failures.push(format!(
                "instance {instance}: mean energy {mean_energy:.6} vs expected {expected:.6} (3σ = {:.2e})",
                3.0 * se_energy
            ));
        }

        for k in 1..=5 {
            let t = n_seg as f64 * k as f64 / 6.0;
            let (pos, _) = covariance_flow(&plan, t).unwrap();
            let (_, cov) = batch.empirical_moments(t).unwrap();
            let se_var = pos[(0, 0)] * (2.0 / (n as f64 - 1.0)).sqrt();
            if (cov[(0, 0)] - pos[(0, 0)]).abs() > 3.0 * se_var.max(1e-12) {
                failures.push(format!(
                    "instance {instance}, t={t:.2}: Var {:.6} vs flow {:.6} (3σ = {:.2e})",
                    cov[(0, 0)],
                    pos[(0, 0)],
                    3.0 * se_var
                ));
            }
        }
    }
    report("08 monte-carlo-consistency", failures);
}

/// 9. The completed joint covariance of an edge-optimal plan has rank at
/// most 2d: the whole path is a deterministic function of one phase point.
#[test]
fn edge_optimal_completion_is_low_rank() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(909);
    let grid = TimeGrid::unit_gaps(2).unwrap();
    for instance in 0..20 {
        let d = rng.gen_range(1..=2);
        let marginals: Vec<GaussianMarginal> = (0..3)
            .map(|_| GaussianMarginal::new(DVector::zeros(d), random_psd(&mut rng, d)).unwrap())
            .collect();
        let problem = assemble_chain_sdp(&marginals, &grid).unwrap();
        // The rank property is structural: it holds for the edge-optimal
        // completion of any feasible node covariances, so a moderate
        // solver tolerance is plenty here.
        let plan = solve_chain_sdp(&problem, 1e-6).unwrap();
        // First-order iterates carry solver-tolerance-level noise in the
        // near-zero eigenvalues; truncate it so the rank-deficient
        // directions the optimum calls for are exactly rank-deficient.
        let truncate = |m: &DMatrix<f64>| {
            let (evals, vecs) = sym_eigen(m);
            let cutoff = 1e-6 * m.trace().abs().max(1e-300);
            let clipped = DMatrix::from_diagonal(&evals.map(|l| if l < cutoff { 0.0 } else { l }));
            symmetrize(&(&vecs * clipped * vecs.transpose()))
        };
        let sigma_hats: Vec<DMatrix<f64>> =
            (0..3).map(|i| truncate(plan.sigma_hat(i))).collect();
        let crosses: Vec<DMatrix<f64>> = (0..2)
            .map(|e| {
                optimal_edge_coupling(&sigma_hats[e], &sigma_hats[e + 1])
                    .unwrap()
                    .cross
            })
            .collect();
        let polished = ChainGaussianPlan::from_blocks(
            grid.clone(),
            plan.means().to_vec(),
            sigma_hats,
            crosses,
            plan.objective(),
            plan.primal_residual(),
            plan.iterations(),
        )
        .unwrap();
        let joint = complete_chain(&polished).unwrap();
        let (evals, _) = sym_eigen(&joint);
        let mut sorted: Vec<f64> = evals.iter().cloned().collect();
        sorted.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let cutoff = 1e-8 * joint.trace();
        let tail = sorted[2 * d..].iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        if tail > cutoff {
            failures.push(format!(
                "instance {instance} (d={d}): eigenvalue {tail:.3e} beyond rank 2d exceeds {cutoff:.3e}"
            ));
        }
    }
    report("09 low-rank-completion", failures);
}

/// 10. Point-mass data collapses both solvers to the deterministic
/// natural-spline flow.
#[test]
fn point_mass_data_reproduces_the_natural_spline() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(111);
    let n_seg = 3usize;
    let d = 2usize;
    let grid = TimeGrid::unit_gaps(n_seg).unwrap();
    let knots: Vec<DVector<f64>> = (0..=n_seg).map(|_| random_vec(&mut rng, d, 1.0)).collect();
    let reference =
        natural_spline(&KnotPath::new(grid.clone(), knots.clone()).unwrap()).unwrap();
    let query_times: Vec<f64> = (0..=30).map(|j| n_seg as f64 * j as f64 / 30.0).collect();

    // Gaussian side: zero covariances.
    let marginals: Vec<GaussianMarginal> = knots
        .iter()
        .map(|m| GaussianMarginal::new(m.clone(), DMatrix::zeros(d, d)).unwrap())
        .collect();
    let plan = solve_chain_sdp(&assemble_chain_sdp(&marginals, &grid).unwrap(), 1e-9).unwrap();
    for &t in &query_times {
        let (pos, _) = covariance_flow(&plan, t).unwrap();
        if pos.norm() > 1e-9 {
            failures.push(format!("gaussian: nonzero covariance {:.3e} at t={t}", pos.norm()));
        }
        let diff = (plan.mean_spline().eval(t).unwrap() - reference.eval(t).unwrap()).norm();
        if diff > 1e-9 {
            failures.push(format!("gaussian: mean flow off by {diff:.3e} at t={t}"));
        }
    }
    let batch = sample_gaussian_plan(&plan, 8, 3).unwrap();
    for curve in batch.curves() {
        for &t in &query_times {
            let diff = (curve.eval(t).unwrap() - reference.eval(t).unwrap()).norm();
            if diff > 1e-9 {
                failures.push(format!("gaussian sample: off by {diff:.3e} at t={t}"));
                break;
            }
        }
    }

    // Discrete side: one-point marginals.
    let measures: Vec<DiscreteMeasure> =
        knots.iter().map(|m| DiscreteMeasure::dirac(m.clone())).collect();
    let coupling = solve_chain_sinkhorn(&measures, &grid, &SolverConfig::default()).unwrap();
    let flow = coupling_marginal_flow(&coupling, &query_times).unwrap();
    for (j, measure) in flow.iter().enumerate() {
        let t = query_times[j];
        if measure.len() != 1 || (measure.weights()[0] - 1.0).abs() > 1e-9 {
            failures.push(format!("discrete: flow at t={t} is not a point mass"));
            continue;
        }
        let diff = (&measure.points()[0] - reference.eval(t).unwrap()).norm();
        if diff > 1e-9 {
            failures.push(format!("discrete: flow off by {diff:.3e} at t={t}"));
        }
    }
    report("10 point-mass-flow", failures);
}
