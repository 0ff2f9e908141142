//! Trajectory sampling: materializes a solved plan as a batch of cubic
//! splines and estimates path-space functionals empirically.
//!
//! Every trajectory gets its own counter-based RNG stream derived from
//! the batch seed, so batches are reproducible bit-for-bit and
//! independent of how the work is scheduled across threads.
//!
//! ```
//! use nalgebra::{DMatrix, DVector};
//! use wspline::gaussian::{assemble_chain_sdp, solve_chain_sdp, GaussianMarginal};
//! use wspline::grid::TimeGrid;
//! use wspline::sampling::sample_gaussian_plan;
//!
//! let grid = TimeGrid::new(vec![0.0, 1.0, 2.0])?;
//! let marginal = |mean: f64, var: f64| {
//!     GaussianMarginal::new(
//!         DVector::from_vec(vec![mean]),
//!         DMatrix::from_element(1, 1, var),
//!     )
//! };
//! let marginals = vec![marginal(0.0, 1.0)?, marginal(1.0, 0.5)?, marginal(0.0, 2.0)?];
//! let plan = solve_chain_sdp(&assemble_chain_sdp(&marginals, &grid)?, 1e-8)?;
//! let batch = sample_gaussian_plan(&plan, 4000, 7)?;
//! let (mean, cov) = batch.empirical_moments(1.0)?;
//! assert!((mean[0] - 1.0).abs() < 0.05);
//! assert!((cov[(0, 0)] - 0.5).abs() < 0.05);
//! # Ok::<(), wspline::error::Error>(())
//! ```

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::discrete::ChainCoupling;
use crate::error::{Error, Result};
use crate::gaussian::ChainGaussianPlan;
use crate::linalg::{psd_pinv, psd_sqrt, symmetrize};
use crate::spline::{hermite_spline, natural_spline, spline_energy, KnotPath, PhaseKnots, PiecewiseCubic};

/// A batch of sampled trajectories on a shared grid.
#[derive(Debug, Clone)]
pub struct TrajectoryBatch {
    curves: Vec<PiecewiseCubic>,
    seed: u64,
}

impl TrajectoryBatch {
    pub fn curves(&self) -> &[PiecewiseCubic] {
        &self.curves
    }

    pub fn count(&self) -> usize {
        self.curves.len()
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Empirical mean and covariance of `X_t` across the batch.
    pub fn empirical_moments(&self, t: f64) -> Result<(DVector<f64>, DMatrix<f64>)> {
        if self.curves.is_empty() {
            return Err(Error::InvalidArgument("empty batch".into()));
        }
        let d = self.curves[0].dim();
        let n = self.curves.len() as f64;
        let mut mean = DVector::zeros(d);
        let mut second = DMatrix::zeros(d, d);
        for curve in &self.curves {
            let x = curve.eval(t)?;
            second += &x * x.transpose();
            mean += x;
        }
        mean /= n;
        let cov = symmetrize(&(second / n - &mean * mean.transpose()));
        Ok((mean, cov))
    }
}

fn stream_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

fn standard_normal(rng: &mut ChaCha8Rng, d: usize) -> DVector<f64> {
    DVector::from_fn(d, |_, _| rng.sample(StandardNormal))
}

/// Sample Hermite-cubic trajectories from a Gaussian plan by ancestral
/// sampling along the chain: `ξ_0 ~ N(μ_0, Σ̂_0)`, then `ξ_{i+1} =
/// μ_{i+1} + T_i (ξ_i − μ_i) + noise` with `T_i = S_{i,i+1}ᵀ Σ̂_i†`.
pub fn sample_gaussian_plan(
    plan: &ChainGaussianPlan,
    n: usize,
    seed: u64,
) -> Result<TrajectoryBatch> {
    if n == 0 {
        return Err(Error::InvalidArgument("sample count must be positive".into()));
    }
    let d = plan.dim();
    let td = 2 * d;
    let segs = plan.n_segments();

    // Phase means: knot means plus the mean-spline knot velocities.
    let phase_means: Vec<DVector<f64>> = (0..=segs)
        .map(|i| {
            let t = plan.grid().times()[i];
            let mut mu = DVector::zeros(td);
            mu.rows_mut(0, d).copy_from(&plan.means()[i]);
            mu.rows_mut(d, d).copy_from(&plan.mean_spline().derivative(t)?);
            Ok(mu)
        })
        .collect::<Result<_>>()?;

    let root_sqrt = psd_sqrt(plan.sigma_hat(0));
    let mut transitions = Vec::with_capacity(segs);
    let mut noise_sqrts = Vec::with_capacity(segs);
    for e in 0..segs {
        let t = plan.cross(e).transpose() * psd_pinv(plan.sigma_hat(e));
        let cond = symmetrize(&(plan.sigma_hat(e + 1) - &t * plan.cross(e)));
        noise_sqrts.push(psd_sqrt(&cond));
        transitions.push(t);
    }

    let curves: Vec<PiecewiseCubic> = (0..n)
        .into_par_iter()
        .map(|idx| {
            let mut rng = stream_rng(seed, idx);
            let mut xi = &phase_means[0] + &root_sqrt * standard_normal(&mut rng, td);
            let mut positions = Vec::with_capacity(segs + 1);
            let mut velocities = Vec::with_capacity(segs + 1);
            positions.push(xi.rows(0, d).clone_owned());
            velocities.push(xi.rows(d, d).clone_owned());
            for e in 0..segs {
                xi = &phase_means[e + 1]
                    + &transitions[e] * (&xi - &phase_means[e])
                    + &noise_sqrts[e] * standard_normal(&mut rng, td);
                positions.push(xi.rows(0, d).clone_owned());
                velocities.push(xi.rows(d, d).clone_owned());
            }
            hermite_spline(&PhaseKnots::new(plan.grid().clone(), positions, velocities)?)
        })
        .collect::<Result<_>>()?;

    Ok(TrajectoryBatch { curves, seed })
}

fn sample_categorical(rng: &mut ChaCha8Rng, probs: &[f64]) -> usize {
    let u: f64 = rng.gen();
    let mut acc = 0.0;
    for (i, &p) in probs.iter().enumerate() {
        acc += p;
        if u < acc {
            return i;
        }
    }
    probs.len() - 1
}

/// Sample natural-spline trajectories from a converged discrete coupling
/// by ancestral sampling of support tuples along the chain.
pub fn sample_discrete_coupling(
    coupling: &ChainCoupling,
    n: usize,
    seed: u64,
) -> Result<TrajectoryBatch> {
    if n == 0 {
        return Err(Error::InvalidArgument("sample count must be positive".into()));
    }
    if !coupling.converged() {
        return Err(Error::InvalidArgument(
            "coupling has not converged; samples would be biased".into(),
        ));
    }
    let (root, transitions) = coupling.chain_distribution();
    let transition_rows: Vec<Vec<Vec<f64>>> = transitions
        .iter()
        .map(|t| (0..t.nrows()).map(|r| t.row(r).iter().copied().collect()).collect())
        .collect();

    let curves: Vec<PiecewiseCubic> = (0..n)
        .into_par_iter()
        .map(|idx| {
            let mut rng = stream_rng(seed, idx);
            let mut z = sample_categorical(&mut rng, &root);
            let mut points = Vec::with_capacity(coupling.supports().len());
            points.push(coupling.supports()[0].phase_point(z).0.clone());
            for (i, rows) in transition_rows.iter().enumerate() {
                z = sample_categorical(&mut rng, &rows[z]);
                points.push(coupling.supports()[i + 1].phase_point(z).0.clone());
            }
            natural_spline(&KnotPath::new(coupling.grid().clone(), points)?)
        })
        .collect::<Result<_>>()?;

    Ok(TrajectoryBatch { curves, seed })
}

/// Mean integrated squared acceleration across the batch — the empirical
/// estimate of the plan objective.
pub fn empirical_energy(batch: &TrajectoryBatch) -> Result<f64> {
    if batch.curves.is_empty() {
        return Err(Error::InvalidArgument("empty batch".into()));
    }
    let total: f64 = batch.curves.par_iter().map(spline_energy).sum();
    Ok(total / batch.count() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discrete::{solve_chain_sinkhorn, DiscreteMeasure, SolverConfig};
    use crate::gaussian::{assemble_chain_sdp, covariance_flow, solve_chain_sdp, GaussianMarginal};
    use crate::grid::TimeGrid;
    use crate::spline::multimarginal_cost;
    use approx::assert_relative_eq;

    fn gaussian_plan_tol(vars: &[f64], tol: f64) -> ChainGaussianPlan {
        let grid = TimeGrid::unit_gaps(vars.len() - 1).unwrap();
        let marginals: Vec<GaussianMarginal> = vars
            .iter()
            .map(|&v| {
                GaussianMarginal::new(DVector::zeros(1), DMatrix::from_element(1, 1, v)).unwrap()
            })
            .collect();
        solve_chain_sdp(&assemble_chain_sdp(&marginals, &grid).unwrap(), tol).unwrap()
    }

    fn gaussian_plan(vars: &[f64]) -> ChainGaussianPlan {
        gaussian_plan_tol(vars, 1e-7)
    }

    #[test]
    fn zero_covariance_reproduces_the_mean_spline() {
        let grid = TimeGrid::unit_gaps(2).unwrap();
        let marginals: Vec<GaussianMarginal> = [0.0, 1.0, 0.0]
            .iter()
            .map(|&m| {
                GaussianMarginal::new(DVector::from_element(1, m), DMatrix::zeros(1, 1)).unwrap()
            })
            .collect();
        let plan = solve_chain_sdp(&assemble_chain_sdp(&marginals, &grid).unwrap(), 1e-7).unwrap();
        let batch = sample_gaussian_plan(&plan, 16, 9).unwrap();
        for curve in batch.curves() {
            for t in [0.0, 0.5, 1.0, 1.5, 2.0] {
                assert_relative_eq!(
                    curve.eval(t).unwrap()[0],
                    plan.mean_spline().eval(t).unwrap()[0],
                    epsilon = 1e-9
                );
            }
        }
        assert!(empirical_energy(&batch).unwrap() - 6.0 < 1e-9);
    }

    #[test]
    fn frozen_ensemble_trajectories_are_constant() {
        let plan = gaussian_plan_tol(&[1.0, 1.0, 1.0], 1e-10);
        let batch = sample_gaussian_plan(&plan, 2000, 4).unwrap();
        for curve in batch.curves().iter().take(20) {
            let x0 = curve.eval(0.0).unwrap()[0];
            for t in [0.7, 1.0, 1.9] {
                assert_relative_eq!(curve.eval(t).unwrap()[0], x0, epsilon = 1e-3);
            }
        }
        let (_, var) = batch.empirical_moments(1.0).unwrap();
        assert!((var[(0, 0)] - 1.0).abs() < 0.1);
    }

    #[test]
    fn empirical_variance_tracks_the_flow() {
        let plan = gaussian_plan(&[1.0, 0.5, 2.0]);
        let batch = sample_gaussian_plan(&plan, 40_000, 12).unwrap();
        for t in [0.25, 0.9, 1.5] {
            let (pos, _) = covariance_flow(&plan, t).unwrap();
            let (_, var) = batch.empirical_moments(t).unwrap();
            // Var of the sample variance ≈ 2σ⁴/n for Gaussians.
            let se = (2.0 * pos[(0, 0)].powi(2) / batch.count() as f64).sqrt();
            assert!(
                (var[(0, 0)] - pos[(0, 0)]).abs() < 4.0 * se.max(1e-3),
                "t={t}: {} vs {}",
                var[(0, 0)],
                pos[(0, 0)]
            );
        }
    }

    #[test]
    fn reproducibility_is_bitwise() {
        let plan = gaussian_plan(&[1.0, 0.5, 2.0]);
        let a = sample_gaussian_plan(&plan, 64, 77).unwrap();
        let b = sample_gaussian_plan(&plan, 64, 77).unwrap();
        for (ca, cb) in a.curves().iter().zip(b.curves()) {
            for s in 0..ca.grid().n_segments() {
                assert_eq!(ca.segment_coefficients(s), cb.segment_coefficients(s));
            }
        }
    }

    #[test]
    fn dirac_coupling_samples_the_natural_spline() {
        let grid = TimeGrid::unit_gaps(2).unwrap();
        let points = [0.0, 1.0, 0.0];
        let marginals: Vec<DiscreteMeasure> = points
            .iter()
            .map(|&x| DiscreteMeasure::dirac(DVector::from_element(1, x)))
            .collect();
        let coupling = solve_chain_sinkhorn(&marginals, &grid, &SolverConfig::default()).unwrap();
        let batch = sample_discrete_coupling(&coupling, 8, 1).unwrap();
        let knots = KnotPath::new(
            grid,
            points.iter().map(|&x| DVector::from_element(1, x)).collect(),
        )
        .unwrap();
        let energy = multimarginal_cost(&knots).unwrap();
        for curve in batch.curves() {
            assert_relative_eq!(curve.eval(0.5).unwrap()[0], 11.0 / 16.0, epsilon = 1e-9);
            // Natural boundary: second derivative vanishes at both ends.
            assert!(curve.second_derivative(0.0).unwrap().norm() < 1e-9);
            assert!(curve.second_derivative(2.0).unwrap().norm() < 1e-9);
        }
        assert_relative_eq!(empirical_energy(&batch).unwrap(), energy, epsilon = 1e-9);
    }

    #[test]
    fn empty_batch_is_rejected() {
        let plan = gaussian_plan(&[1.0, 1.0]);
        assert!(sample_gaussian_plan(&plan, 0, 0).is_err());
    }
}
