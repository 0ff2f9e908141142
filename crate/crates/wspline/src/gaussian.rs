//! Gaussian covariance interpolation: mean spline, chain-structured
//! covariance SDP, Markov completion of the joint covariance, and the
//! continuous covariance flow.
//!
//! The phase vector at knot `i` is `ξ_i = (x_i, v_i) ∈ R^{2d}`; on unit
//! gaps the segment acceleration cost is `(ξ_{i+1} − Φξ_i)ᵀ Q (ξ_{i+1} −
//! Φξ_i)` with `Q = [[12,−6],[−6,4]] ⊗ I_d` and `Φ = [[1,1],[0,1]] ⊗
//! I_d`, so the expected energy of a Gaussian plan is linear in the
//! phase covariances `Σ̂_i` and cross blocks `S_{i,i+1} = E[ξ_i
//! ξ_{i+1}ᵀ]`.  Minimizing it subject to pinned position blocks and
//! PSD edge blocks is a chain SDP solved here by consensus ADMM.
//!
//! ```
//! use nalgebra::{DMatrix, DVector};
//! use wspline::gaussian::{assemble_chain_sdp, covariance_flow, solve_chain_sdp, GaussianMarginal};
//! use wspline::grid::TimeGrid;
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
//! let (pos, _) = covariance_flow(&plan, 1.0)?;   // exact at knots
//! assert!((pos[(0, 0)] - 0.5).abs() < 1e-6);
//! # Ok::<(), wspline::error::Error>(())
//! ```

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::grid::TimeGrid;
use crate::linalg::{
    kron_identity, min_eigenvalue, psd_pinv, psd_pinv_sqrt, psd_project, psd_sqrt,
    symmetrize,
};
use crate::spline::{natural_spline, KnotPath, PiecewiseCubic};

/// One Gaussian marginal `N(mean, cov)`.
#[derive(Debug, Clone)]
pub struct GaussianMarginal {
    mean: DVector<f64>,
    cov: DMatrix<f64>,
}

impl GaussianMarginal {
    pub fn new(mean: DVector<f64>, cov: DMatrix<f64>) -> Result<Self> {
        let d = mean.len();
        if cov.nrows() != d || cov.ncols() != d {
            return Err(Error::DimensionMismatch(format!(
                "mean has dimension {d} but covariance is {}x{}",
                cov.nrows(),
                cov.ncols()
            )));
        }
        let asym = (&cov - cov.transpose()).amax();
        if asym > 1e-12 * (1.0 + cov.amax()) {
            return Err(Error::InvalidArgument(format!(
                "covariance is not symmetric (defect {asym:.3e})"
            )));
        }
        let cov = symmetrize(&cov);
        let floor = -1e-10 * cov.trace().max(1.0);
        if min_eigenvalue(&cov) < floor {
            return Err(Error::Infeasible(format!(
                "covariance has eigenvalue below {floor:.3e}"
            )));
        }
        Ok(Self { mean, cov })
    }

    pub fn mean(&self) -> &DVector<f64> {
        &self.mean
    }

    pub fn cov(&self) -> &DMatrix<f64> {
        &self.cov
    }

    pub fn dim(&self) -> usize {
        self.mean.len()
    }
}

/// `Q = [[12,−6],[−6,4]] ⊗ I_d`, the unit-gap Hermite energy Gram matrix.
pub fn q_matrix(d: usize) -> DMatrix<f64> {
    kron_identity(&DMatrix::from_row_slice(2, 2, &[12.0, -6.0, -6.0, 4.0]), d)
}

/// `Φ = [[1,1],[0,1]] ⊗ I_d`, the unit-time free-flight transition.
pub fn phi_matrix(d: usize) -> DMatrix<f64> {
    kron_identity(&DMatrix::from_row_slice(2, 2, &[1.0, 1.0, 0.0, 1.0]), d)
}

/// Assembled chain SDP data.
#[derive(Debug, Clone)]
pub struct ChainSdpProblem {
    grid: TimeGrid,
    dim: usize,
    marginals: Vec<GaussianMarginal>,
    /// Per-edge 4d×4d cost matrix `C = Kᵀ Q K` with `K = [−Φ, I]`, so
    /// that the objective is `Σ_i Tr(C · edge_block_i)`.
    edge_cost: DMatrix<f64>,
}

impl ChainSdpProblem {
    pub fn grid(&self) -> &TimeGrid {
        &self.grid
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn marginals(&self) -> &[GaussianMarginal] {
        &self.marginals
    }

    pub fn edge_cost(&self) -> &DMatrix<f64> {
        &self.edge_cost
    }

    pub fn n_segments(&self) -> usize {
        self.grid.n_segments()
    }
}

/// Build the chain SDP for unit-gap grids.
pub fn assemble_chain_sdp(
    marginals: &[GaussianMarginal],
    grid: &TimeGrid,
) -> Result<ChainSdpProblem> {
    if !grid.has_unit_gaps() {
        return Err(Error::InvalidGrid(
            "Gaussian mode requires unit gaps (knot times 0,1,…,N)".into(),
        ));
    }
    if marginals.len() != grid.n_knots() {
        return Err(Error::DimensionMismatch(format!(
            "{} marginals but {} knot times",
            marginals.len(),
            grid.n_knots()
        )));
    }
    let d = marginals[0].dim();
    if marginals.iter().any(|m| m.dim() != d) {
        return Err(Error::DimensionMismatch(
            "marginals must share a common dimension".into(),
        ));
    }

    let q = q_matrix(d);
    let phi = phi_matrix(d);
    // K = [−Φ, I] maps (ξ_i, ξ_{i+1}) to ξ_{i+1} − Φξ_i.
    let mut k = DMatrix::zeros(2 * d, 4 * d);
    k.view_mut((0, 0), (2 * d, 2 * d)).copy_from(&(-&phi));
    k.view_mut((0, 2 * d), (2 * d, 2 * d))
        .copy_from(&DMatrix::identity(2 * d, 2 * d));
    let edge_cost = symmetrize(&(k.transpose() * &q * &k));

    Ok(ChainSdpProblem {
        grid: grid.clone(),
        dim: d,
        marginals: marginals.to_vec(),
        edge_cost,
    })
}

/// A solved Gaussian plan: phase covariances, edge cross blocks, and the
/// mean spline.
#[derive(Debug, Clone)]
pub struct ChainGaussianPlan {
    grid: TimeGrid,
    dim: usize,
    means: Vec<DVector<f64>>,
    sigma_hats: Vec<DMatrix<f64>>,
    crosses: Vec<DMatrix<f64>>,
    mean_spline: PiecewiseCubic,
    objective: f64,
    primal_residual: f64,
    iterations: usize,
}

impl ChainGaussianPlan {
    pub fn grid(&self) -> &TimeGrid {
        &self.grid
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n_segments(&self) -> usize {
        self.grid.n_segments()
    }

    pub fn means(&self) -> &[DVector<f64>] {
        &self.means
    }

    pub fn sigma_hat(&self, i: usize) -> &DMatrix<f64> {
        &self.sigma_hats[i]
    }

    pub fn cross(&self, edge: usize) -> &DMatrix<f64> {
        &self.crosses[edge]
    }

    pub fn mean_spline(&self) -> &PiecewiseCubic {
        &self.mean_spline
    }

    pub fn objective(&self) -> f64 {
        self.objective
    }

    pub fn primal_residual(&self) -> f64 {
        self.primal_residual
    }

    pub fn iterations(&self) -> usize {
        self.iterations
    }

    /// 4d×4d joint covariance of `(ξ_i, ξ_{i+1})`.
    pub fn edge_block(&self, edge: usize) -> DMatrix<f64> {
        let td = 2 * self.dim;
        let mut w = DMatrix::zeros(2 * td, 2 * td);
        w.view_mut((0, 0), (td, td)).copy_from(&self.sigma_hats[edge]);
        w.view_mut((0, td), (td, td)).copy_from(&self.crosses[edge]);
        w.view_mut((td, 0), (td, td))
            .copy_from(&self.crosses[edge].transpose());
        w.view_mut((td, td), (td, td))
            .copy_from(&self.sigma_hats[edge + 1]);
        w
    }

    /// Construct a plan directly from blocks (used by tests and by
    /// `plan.json` round-trips); validates edge-block PSD-ness.
    pub fn from_blocks(
        grid: TimeGrid,
        means: Vec<DVector<f64>>,
        sigma_hats: Vec<DMatrix<f64>>,
        crosses: Vec<DMatrix<f64>>,
        objective: f64,
        primal_residual: f64,
        iterations: usize,
    ) -> Result<Self> {
        if !grid.has_unit_gaps() {
            return Err(Error::InvalidGrid("plan grids must have unit gaps".into()));
        }
        let n = grid.n_segments();
        if means.len() != n + 1 || sigma_hats.len() != n + 1 || crosses.len() != n {
            return Err(Error::DimensionMismatch(
                "block counts inconsistent with the grid".into(),
            ));
        }
        let d = means[0].len();
        if sigma_hats.iter().any(|s| s.nrows() != 2 * d || s.ncols() != 2 * d)
            || crosses.iter().any(|s| s.nrows() != 2 * d || s.ncols() != 2 * d)
        {
            return Err(Error::DimensionMismatch(
                "phase blocks must be 2d × 2d".into(),
            ));
        }
        let mean_spline = natural_spline(&KnotPath::new(grid.clone(), means.clone())?)?;
        let plan = Self {
            grid,
            dim: d,
            means,
            sigma_hats,
            crosses,
            mean_spline,
            objective,
            primal_residual,
            iterations,
        };
        for edge in 0..n {
            let w = plan.edge_block(edge);
            // First-order solver output satisfies the PSD constraint only
            // to its tolerance; the gate rejects genuinely indefinite
            // blocks, not that noise.
            if min_eigenvalue(&w) < -1e-6 * w.trace().max(1.0) {
                return Err(Error::Infeasible(format!(
                    "edge block {edge} is not PSD"
                )));
            }
        }
        Ok(plan)
    }
}

fn extract_edge(sigma_hats: &[DMatrix<f64>], crosses: &[DMatrix<f64>], edge: usize) -> DMatrix<f64> {
    let td = sigma_hats[edge].nrows();
    let mut w = DMatrix::zeros(2 * td, 2 * td);
    w.view_mut((0, 0), (td, td)).copy_from(&sigma_hats[edge]);
    w.view_mut((0, td), (td, td)).copy_from(&crosses[edge]);
    w.view_mut((td, 0), (td, td))
        .copy_from(&crosses[edge].transpose());
    w.view_mut((td, td), (td, td)).copy_from(&sigma_hats[edge + 1]);
    w
}

fn chain_objective(
    edge_cost: &DMatrix<f64>,
    sigma_hats: &[DMatrix<f64>],
    crosses: &[DMatrix<f64>],
) -> f64 {
    (0..crosses.len())
        .map(|e| (edge_cost * extract_edge(sigma_hats, crosses, e)).trace())
        .sum()
}

/// Solve the chain SDP by consensus ADMM.
///
/// Each edge carries a local 4d×4d PSD variable `W_e`; the consensus
/// variable is the set of shared node blocks `Σ̂_i` (with pinned position
/// blocks) and cross blocks `S_e`.  One iteration does a per-edge PSD
/// projection, a consensus average with exact re-pinning, and a dual
/// update; the penalty is rebalanced from the residual ratio.  After
/// convergence the cross blocks are replaced by the edge-optimal
/// couplings for the final `Σ̂_i`, which only improves the objective and
/// keeps every edge block PSD.
pub fn solve_chain_sdp(problem: &ChainSdpProblem, tol: f64) -> Result<ChainGaussianPlan> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let d = problem.dim;
    let td = 2 * d;
    let n = problem.n_segments();
    let c = &problem.edge_cost;

    // Initial consensus point: block-diagonal phase covariances whose
    // velocity block is scaled to the data, independent edges.
    let mut sigma_hats: Vec<DMatrix<f64>> = problem
        .marginals
        .iter()
        .map(|m| {
            let mut s = DMatrix::zeros(td, td);
            s.view_mut((0, 0), (d, d)).copy_from(m.cov());
            let scale = (m.cov().trace() / d as f64).max(1e-3);
            s.view_mut((d, d), (d, d))
                .copy_from(&(DMatrix::identity(d, d) * scale));
            s
        })
        .collect();
    let mut crosses: Vec<DMatrix<f64>> = vec![DMatrix::zeros(td, td); n];
    let mut w: Vec<DMatrix<f64>> = (0..n).map(|e| extract_edge(&sigma_hats, &crosses, e)).collect();
    let mut u: Vec<DMatrix<f64>> = vec![DMatrix::zeros(2 * td, 2 * td); n];

    let mut rho = c.norm().max(1.0);
    let mut prev_obj = chain_objective(c, &sigma_hats, &crosses);
    let mut primal = f64::INFINITY;
    let max_iters = 50_000;

    for iter in 1..=max_iters {
        // Local step: per-edge projection onto the PSD cone.
        for e in 0..n {
            let target = extract_edge(&sigma_hats, &crosses, e) - &u[e] - c / rho;
            w[e] = crate::linalg::psd_project(&target);
        }

        // Consensus step: average the shared node blocks, re-pin the
        // position blocks exactly, symmetrize the cross blocks.
        let prev_sigma = sigma_hats.clone();
        for i in 0..=n {
            let mut acc = DMatrix::zeros(td, td);
            let mut count = 0.0;
            if i < n {
                acc += (&w[i] + &u[i]).view((0, 0), (td, td)).clone_owned();
                count += 1.0;
            }
            if i > 0 {
                acc += (&w[i - 1] + &u[i - 1]).view((td, td), (td, td)).clone_owned();
                count += 1.0;
            }
            let mut s = symmetrize(&(acc / count));
            s.view_mut((0, 0), (d, d)).copy_from(problem.marginals[i].cov());
            sigma_hats[i] = s;
        }
        for e in 0..n {
            let we = &w[e] + &u[e];
            let tr = we.view((0, td), (td, td)).clone_owned();
            let bl = we.view((td, 0), (td, td)).transpose();
            crosses[e] = (tr + bl) * 0.5;
        }

        // Dual step.
        for e in 0..n {
            u[e] += &w[e] - extract_edge(&sigma_hats, &crosses, e);
        }

        primal = (0..n)
            .map(|e| {
                let eg = extract_edge(&sigma_hats, &crosses, e);
                (&w[e] - &eg).norm() / (1.0 + eg.norm())
            })
            .fold(0.0_f64, f64::max);
        let dual_scale = 1.0 + rho * u.iter().map(|ue| ue.norm()).fold(0.0_f64, f64::max);
        let dual = (0..=n)
            .map(|i| rho * (&sigma_hats[i] - &prev_sigma[i]).norm())
            .fold(0.0_f64, f64::max)
            / dual_scale;
        let obj = chain_objective(c, &sigma_hats, &crosses);
        let rel_change = (obj - prev_obj).abs() / (1.0 + obj.abs());
        prev_obj = obj;

        if iter > 10 && primal.max(dual).max(rel_change) < tol {
            // Polish: edge-optimal cross blocks for the final Σ̂_i, kept
            // only when they actually lower the objective (the closed
            // form loses a little accuracy on near-singular blocks).
            let polished: Vec<DMatrix<f64>> = (0..n)
                .map(|e| {
                    let si = psd_project(&sigma_hats[e]);
                    let sj = psd_project(&sigma_hats[e + 1]);
                    Ok(optimal_edge_coupling(&si, &sj)?.cross)
                })
                .collect::<Result<_>>()?;
            let polished_obj = chain_objective(c, &sigma_hats, &polished);
            if polished_obj < obj {
                crosses = polished;
            }
            let objective = chain_objective(c, &sigma_hats, &crosses);
            let means: Vec<DVector<f64>> =
                problem.marginals.iter().map(|m| m.mean().clone()).collect();
            let mean_spline =
                natural_spline(&KnotPath::new(problem.grid.clone(), means.clone())?)?;
            return Ok(ChainGaussianPlan {
                grid: problem.grid.clone(),
                dim: d,
                means,
                sigma_hats,
                crosses,
                mean_spline,
                objective,
                primal_residual: primal,
                iterations: iter,
            });
        }

        // Residual balancing keeps the two ADMM residuals comparable.
        if iter % 10 == 0 {
            let p_abs = (0..n)
                .map(|e| (&w[e] - extract_edge(&sigma_hats, &crosses, e)).norm())
                .fold(0.0_f64, f64::max);
            if p_abs > 10.0 * dual && rho < 1e8 {
                rho *= 2.0;
                for ue in &mut u {
                    *ue /= 2.0;
                }
            } else if dual > 10.0 * p_abs && rho > 1e-8 {
                rho /= 2.0;
                for ue in &mut u {
                    *ue *= 2.0;
                }
            }
        }
    }

    Err(Error::NonConvergence {
        residual: primal,
        iterations: max_iters,
        detail: "chain SDP consensus splitting did not reach tolerance".into(),
    })
}

/// An edge-optimal coupling: the cross block and the achieved value of
/// the coupling term `Tr(QΦ S)`.
#[derive(Debug, Clone)]
pub struct EdgeCoupling {
    pub cross: DMatrix<f64>,
    pub value: f64,
}

/// The cross block `S` maximizing `Tr(QΦS)` subject to the edge block
/// being PSD, with optimal value `Tr((Σ̂_i^{1/2} ΦᵀQ Σ̂_{i+1} QΦ
/// Σ̂_i^{1/2})^{1/2})`.
///
/// Writing `η = QΦ ξ_i` with covariance `P = QΦ Σ̂_i (QΦ)ᵀ`, the problem
/// is the classical Gaussian transport coupling between `N(0, P)` and
/// `N(0, Σ̂_{i+1})`.  Any admissible cross block factors as `C = P^{1/2}
/// K Σ̂_{i+1}^{1/2}` with a contraction `K`, and `Tr C` is maximized by
/// the polar factor of `Σ̂_{i+1}^{1/2} P^{1/2}`, giving the Bures value
/// `Tr((P^{1/2} Σ̂_{i+1} P^{1/2})^{1/2})`.  Working through the SVD keeps
/// the result exactly admissible even for singular covariances, where
/// the textbook `P^{†/2}` expression breaks down.  `S` is recovered
/// through `(QΦ)⁻¹`, which exists because `det Q ≠ 0`.
pub fn optimal_edge_coupling(
    sigma_i: &DMatrix<f64>,
    sigma_j: &DMatrix<f64>,
) -> Result<EdgeCoupling> {
    let td = sigma_i.nrows();
    if td % 2 != 0 || sigma_i.ncols() != td || sigma_j.nrows() != td || sigma_j.ncols() != td {
        return Err(Error::DimensionMismatch(
            "phase covariances must be square 2d × 2d".into(),
        ));
    }
    let d = td / 2;
    // Roundoff-level negativity (for instance from a first-order solver
    // iterate) is repaired by projection below; anything worse is a
    // genuinely indefinite input and gets rejected.
    let floor_i = -1e-6 * sigma_i.trace().max(1.0);
    let floor_j = -1e-6 * sigma_j.trace().max(1.0);
    if min_eigenvalue(sigma_i) < floor_i || min_eigenvalue(sigma_j) < floor_j {
        return Err(Error::Infeasible("phase covariance is not PSD".into()));
    }

    let m = q_matrix(d) * phi_matrix(d);
    let i_proj = psd_project(sigma_i);
    let p = symmetrize(&(&m * i_proj * m.transpose()));
    let p_half = psd_sqrt(&p);
    let j_half = psd_sqrt(&psd_project(sigma_j));
    let svd = (&j_half * &p_half).svd(true, true);
    let u = svd.u.as_ref().expect("SVD with U requested");
    let vt = svd.v_t.as_ref().expect("SVD with Vᵀ requested");
    let value = svd.singular_values.sum();
    let c_star = &p_half * vt.transpose() * u.transpose() * &j_half;
    let cross = m
        .clone()
        .lu()
        .solve(&c_star)
        .ok_or_else(|| Error::InvalidArgument("QΦ is singular (cannot happen)".into()))?;
    Ok(EdgeCoupling { cross, value })
}

/// Markov completion of the chain plan to the full `2d(N+1)` joint
/// covariance: conditional mean factor `S_{i,i+1}ᵀ Σ̂_i†`, cross blocks by
/// the chain recursion `Σ(i,j) = Σ(i,j−1) T_{j−1}ᵀ`.
pub fn complete_chain(plan: &ChainGaussianPlan) -> Result<DMatrix<f64>> {
    let td = 2 * plan.dim;
    let n = plan.n_segments();
    for e in 0..n {
        let w = plan.edge_block(e);
        if min_eigenvalue(&w) < -1e-8 * w.trace().max(1.0) {
            return Err(Error::Infeasible(format!("edge block {e} is not PSD")));
        }
    }
    let transitions: Vec<DMatrix<f64>> = (0..n)
        .map(|e| plan.crosses[e].transpose() * psd_pinv(&plan.sigma_hats[e]))
        .collect();

    let mut full = DMatrix::zeros(td * (n + 1), td * (n + 1));
    for i in 0..=n {
        full.view_mut((i * td, i * td), (td, td))
            .copy_from(&plan.sigma_hats[i]);
        let mut cross = plan.sigma_hats[i].clone();
        for j in i + 1..=n {
            cross *= transitions[j - 1].transpose();
            full.view_mut((i * td, j * td), (td, td)).copy_from(&cross);
            full.view_mut((j * td, i * td), (td, td))
                .copy_from(&cross.transpose());
        }
    }
    Ok(symmetrize(&full))
}

/// Hermite propagation matrix `L(s)`: rows map `(x_i, v_i, x_{i+1},
/// v_{i+1})` to `(x(s), v(s))` on a unit segment.
fn hermite_propagator(s: f64, d: usize) -> DMatrix<f64> {
    let h00 = 2.0 * s.powi(3) - 3.0 * s.powi(2) + 1.0;
    let h10 = s.powi(3) - 2.0 * s.powi(2) + s;
    let h01 = -2.0 * s.powi(3) + 3.0 * s.powi(2);
    let h11 = s.powi(3) - s.powi(2);
    let dh00 = 6.0 * s.powi(2) - 6.0 * s;
    let dh10 = 3.0 * s.powi(2) - 4.0 * s + 1.0;
    let dh01 = -6.0 * s.powi(2) + 6.0 * s;
    let dh11 = 3.0 * s.powi(2) - 2.0 * s;
    let mut l = DMatrix::zeros(2 * d, 4 * d);
    let id = DMatrix::identity(d, d);
    for (col, (pos, vel)) in [(h00, dh00), (h10, dh10), (h01, dh01), (h11, dh11)]
        .iter()
        .enumerate()
    {
        // Blocks are ordered (x_i, v_i, x_{i+1}, v_{i+1}).
        let block = match col {
            0 | 1 => col * d,
            _ => 2 * d + (col - 2) * d,
        };
        l.view_mut((0, block), (d, d)).copy_from(&(&id * *pos));
        l.view_mut((d, block), (d, d)).copy_from(&(&id * *vel));
    }
    l
}

/// Phase covariance `Σ̂(t) = L(s) · edge_block · L(s)ᵀ` by Hermite
/// propagation (exact at knots), plus its position block `Σ_t`.
pub fn covariance_flow(plan: &ChainGaussianPlan, t: f64) -> Result<(DMatrix<f64>, DMatrix<f64>)> {
    let i = plan.grid.segment_of(t)?;
    let s = t - plan.grid.times()[i];
    let l = hermite_propagator(s, plan.dim);
    let phase = symmetrize(&(&l * plan.edge_block(i) * l.transpose()));
    let pos = phase.view((0, 0), (plan.dim, plan.dim)).clone_owned();
    Ok((pos, phase))
}

/// The closed-form covariance flow for edge-optimal plans with
/// invertible `Σ̂_i`, used as a cross-check on [`covariance_flow`] away
/// from knots; returns the 2d×2d phase covariance.
pub fn closed_form_covariance(plan: &ChainGaussianPlan, t: f64) -> Result<DMatrix<f64>> {
    let i = plan.grid.segment_of(t)?;
    let s = t - plan.grid.times()[i];
    if s < 0.05 || s > 0.95 {
        return Err(Error::OutOfRange(format!(
            "closed form is singular near knots (offset {s})"
        )));
    }
    let d = plan.dim;
    let sigma_i = &plan.sigma_hats[i];
    let sigma_j = &plan.sigma_hats[i + 1];
    if min_eigenvalue(sigma_i) < 1e-10 * sigma_i.trace().max(1.0) {
        return Err(Error::Infeasible(
            "closed form requires an invertible phase covariance".into(),
        ));
    }

    let q = q_matrix(d);
    let phi = phi_matrix(d);
    let m_s = kron_identity(
        &DMatrix::from_row_slice(
            2,
            2,
            &[
                s.powi(3) / 3.0,
                s.powi(2) / 2.0,
                s.powi(2) / 2.0,
                s,
            ],
        ),
        d,
    );
    let phi_s = kron_identity(&DMatrix::from_row_slice(2, 2, &[1.0, s, 0.0, 1.0]), d);
    let phi_s_inv = kron_identity(&DMatrix::from_row_slice(2, 2, &[1.0, -s, 0.0, 1.0]), d);

    let half = psd_sqrt(sigma_i);
    let half_inv = psd_pinv_sqrt(sigma_i);
    let m_s_inv = m_s
        .clone()
        .lu()
        .solve(&DMatrix::identity(2 * d, 2 * d))
        .ok_or_else(|| Error::Infeasible("singular M(s)".into()))?;

    let bures = psd_sqrt(&symmetrize(&(
        &half * phi.transpose() * &q * sigma_j * &q * &phi * &half
    )));
    let inner = symmetrize(
        &(-(&half * phi.transpose() * &q * &phi * &half)
            + bures
            + &half * phi_s.transpose() * &m_s_inv * &phi_s * &half),
    );
    let squared = &inner * &inner;
    Ok(symmetrize(
        &(&m_s * phi_s_inv.transpose() * &half_inv * squared * &half_inv * &phi_s_inv * &m_s),
    ))
}

/// Natural spline through the marginal means, evaluated at `t`.
pub fn mean_flow(marginals: &[GaussianMarginal], grid: &TimeGrid, t: f64) -> Result<DVector<f64>> {
    let means: Vec<DVector<f64>> = marginals.iter().map(|m| m.mean().clone()).collect();
    natural_spline(&KnotPath::new(grid.clone(), means)?)?.eval(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_psd(rng: &mut impl Rng, d: usize) -> DMatrix<f64> {
        let a = DMatrix::from_fn(d, d, |_, _| rng.gen_range(-1.0..1.0));
        symmetrize(&(&a * a.transpose()))
    }

    fn scalar_marginals(vars: &[f64]) -> Vec<GaussianMarginal> {
        vars.iter()
            .map(|&v| {
                GaussianMarginal::new(DVector::zeros(1), DMatrix::from_element(1, 1, v)).unwrap()
            })
            .collect()
    }

    #[test]
    fn system_matrices_d1() {
        let q = q_matrix(1);
        let phi = phi_matrix(1);
        assert_eq!(q, DMatrix::from_row_slice(2, 2, &[12.0, -6.0, -6.0, 4.0]));
        assert_eq!(phi, DMatrix::from_row_slice(2, 2, &[1.0, 1.0, 0.0, 1.0]));
        let ptqp = phi.transpose() * &q * &phi;
        assert_eq!(ptqp, DMatrix::from_row_slice(2, 2, &[12.0, 6.0, 6.0, 4.0]));
    }

    #[test]
    fn identity_transport_has_zero_objective() {
        let grid = TimeGrid::unit_gaps(1).unwrap();
        let problem = assemble_chain_sdp(&scalar_marginals(&[1.0, 1.0]), &grid).unwrap();
        let frozen = DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, 0.0]);
        let obj = chain_objective(
            problem.edge_cost(),
            &[frozen.clone(), frozen.clone()],
            &[frozen.clone()],
        );
        assert_relative_eq!(obj, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn edge_cost_is_psd() {
        let problem = assemble_chain_sdp(
            &scalar_marginals(&[1.0, 2.0]),
            &TimeGrid::unit_gaps(1).unwrap(),
        )
        .unwrap();
        assert!(min_eigenvalue(problem.edge_cost()) > -1e-12);
    }

    #[test]
    fn non_unit_gaps_rejected() {
        let grid = TimeGrid::new(vec![0.0, 0.5, 1.0]).unwrap();
        assert!(matches!(
            assemble_chain_sdp(&scalar_marginals(&[1.0, 1.0, 1.0]), &grid),
            Err(Error::InvalidGrid(_))
        ));
    }

    #[test]
    fn zero_covariances_solve_exactly() {
        let grid = TimeGrid::unit_gaps(2).unwrap();
        let problem = assemble_chain_sdp(&scalar_marginals(&[0.0, 0.0, 0.0]), &grid).unwrap();
        let plan = solve_chain_sdp(&problem, 1e-7).unwrap();
        assert!(plan.objective().abs() < 1e-12);
        for i in 0..3 {
            assert!(plan.sigma_hat(i).amax() < 1e-12);
        }
    }

    #[test]
    fn frozen_ensemble_is_optimal() {
        let grid = TimeGrid::unit_gaps(2).unwrap();
        let problem = assemble_chain_sdp(&scalar_marginals(&[1.0, 1.0, 1.0]), &grid).unwrap();
        let plan = solve_chain_sdp(&problem, 1e-7).unwrap();
        assert!(plan.objective() < 1e-5, "objective {}", plan.objective());
        for t in [0.0, 0.5, 1.0, 1.3, 2.0] {
            let (pos, _) = covariance_flow(&plan, t).unwrap();
            assert_relative_eq!(pos[(0, 0)], 1.0, epsilon = 1e-4);
        }
    }

    #[test]
    fn two_marginal_cost_is_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let grid = TimeGrid::unit_gaps(1).unwrap();
        for d in 1..=3 {
            let marginals = vec![
                GaussianMarginal::new(DVector::zeros(d), random_psd(&mut rng, d)).unwrap(),
                GaussianMarginal::new(DVector::zeros(d), random_psd(&mut rng, d)).unwrap(),
            ];
            let problem = assemble_chain_sdp(&marginals, &grid).unwrap();
            let plan = solve_chain_sdp(&problem, 1e-7).unwrap();
            assert!(
                plan.objective() < 1e-6,
                "d={d}: objective {}",
                plan.objective()
            );
        }
    }

    #[test]
    fn edge_coupling_zero_and_identity() {
        let zero = DMatrix::zeros(2, 2);
        let ec = optimal_edge_coupling(&zero, &zero).unwrap();
        assert!(ec.cross.amax() < 1e-12);
        assert!(ec.value.abs() < 1e-12);

        // Σ̂_i = Σ̂_j = I: the optimal value is Tr((ΦᵀQ²Φ)^{1/2}).
        let id = DMatrix::identity(2, 2);
        let ec = optimal_edge_coupling(&id, &id).unwrap();
        let q = q_matrix(1);
        let phi = phi_matrix(1);
        let expected = psd_sqrt(&symmetrize(&(phi.transpose() * &q * &q * &phi))).trace();
        assert_relative_eq!(ec.value, expected, epsilon = 1e-9);

        // The achieved value matches Tr(QΦS) and the edge block is PSD.
        let achieved = (q * phi * &ec.cross).trace();
        assert_relative_eq!(achieved, expected, epsilon = 1e-9);
        let mut w = DMatrix::zeros(4, 4);
        w.view_mut((0, 0), (2, 2)).copy_from(&id);
        w.view_mut((2, 2), (2, 2)).copy_from(&id);
        w.view_mut((0, 2), (2, 2)).copy_from(&ec.cross);
        w.view_mut((2, 0), (2, 2)).copy_from(&ec.cross.transpose());
        assert!(min_eigenvalue(&w) > -1e-9);
    }

    #[test]
    fn edge_coupling_beats_random_feasible_cross_blocks() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let si = random_psd(&mut rng, 2);
        let sj = random_psd(&mut rng, 2);
        let ec = optimal_edge_coupling(&si, &sj).unwrap();
        let qphi = q_matrix(1) * phi_matrix(1);
        let (si_half, sj_half) = (psd_sqrt(&si), psd_sqrt(&sj));
        for _ in 0..200 {
            // Any contraction si^(1/2) K sj^(1/2) with ‖K‖ ≤ 1 is feasible.
            let a = DMatrix::from_fn(2, 2, |_, _| rng.gen_range(-1.0..1.0));
            let scale: f64 = a.norm();
            let k = &a / scale.max(1.0) / 2.0_f64.sqrt();
            let s = &si_half * k * &sj_half;
            assert!((&qphi * &s).trace() <= ec.value + 1e-9);
        }
    }

    #[test]
    fn completion_matches_edge_block_for_one_segment() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let grid = TimeGrid::unit_gaps(1).unwrap();
        let marginals = vec![
            GaussianMarginal::new(DVector::zeros(2), random_psd(&mut rng, 2)).unwrap(),
            GaussianMarginal::new(DVector::zeros(2), random_psd(&mut rng, 2)).unwrap(),
        ];
        let problem = assemble_chain_sdp(&marginals, &grid).unwrap();
        let plan = solve_chain_sdp(&problem, 1e-7).unwrap();
        let full = complete_chain(&plan).unwrap();
        assert_relative_eq!(full, plan.edge_block(0), epsilon = 1e-8);
    }

    #[test]
    fn completion_with_zero_crosses_is_block_diagonal() {
        let grid = TimeGrid::unit_gaps(2).unwrap();
        let id = DMatrix::identity(2, 2);
        let plan = ChainGaussianPlan::from_blocks(
            grid,
            vec![DVector::zeros(1); 3],
            vec![id.clone(), id.clone(), id.clone()],
            vec![DMatrix::zeros(2, 2); 2],
            0.0,
            0.0,
            0,
        )
        .unwrap();
        let full = complete_chain(&plan).unwrap();
        assert_relative_eq!(full, DMatrix::identity(6, 6), epsilon = 1e-12);
    }

    #[test]
    fn flow_interpolates_knots_exactly() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let grid = TimeGrid::unit_gaps(3).unwrap();
        let marginals: Vec<GaussianMarginal> = (0..4)
            .map(|_| GaussianMarginal::new(DVector::zeros(1), random_psd(&mut rng, 1)).unwrap())
            .collect();
        let problem = assemble_chain_sdp(&marginals, &grid).unwrap();
        let plan = solve_chain_sdp(&problem, 1e-7).unwrap();
        for (i, m) in marginals.iter().enumerate() {
            let (pos, phase) = covariance_flow(&plan, i as f64).unwrap();
            assert_relative_eq!(pos, m.cov().clone(), epsilon = 1e-9);
            assert_relative_eq!(phase, plan.sigma_hat(i).clone(), epsilon = 1e-9);
        }
    }

    #[test]
    fn closed_form_matches_hermite_propagation() {
        let grid = TimeGrid::unit_gaps(1).unwrap();
        let marginals = scalar_marginals(&[1.0, 2.5]);
        let problem = assemble_chain_sdp(&marginals, &grid).unwrap();
        let plan = solve_chain_sdp(&problem, 1e-9).unwrap();
        // The solved Σ̂_i can be singular; only cross-check when it is not.
        if min_eigenvalue(plan.sigma_hat(0)) > 1e-8 {
            for t in [0.3, 0.5, 0.7] {
                let (_, hermite) = covariance_flow(&plan, t).unwrap();
                let closed = closed_form_covariance(&plan, t).unwrap();
                let rel = (&hermite - &closed).norm() / hermite.norm();
                assert!(rel < 1e-5, "t={t}: relative gap {rel}");
            }
        }
    }

    #[test]
    fn mean_flow_is_the_natural_spline() {
        let grid = TimeGrid::unit_gaps(2).unwrap();
        let marginals: Vec<GaussianMarginal> = [0.0, 1.0, 0.0]
            .iter()
            .map(|&m| {
                GaussianMarginal::new(
                    DVector::from_element(1, m),
                    DMatrix::from_element(1, 1, 1.0),
                )
                .unwrap()
            })
            .collect();
        assert_relative_eq!(
            mean_flow(&marginals, &grid, 1.0).unwrap()[0],
            1.0,
            epsilon = 1e-12
        );
        assert_relative_eq!(
            mean_flow(&marginals, &grid, 0.5).unwrap()[0],
            11.0 / 16.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn non_psd_covariance_rejected() {
        let bad = DMatrix::from_row_slice(2, 2, &[1.0, 2.0, 2.0, 1.0]);
        assert!(matches!(
            GaussianMarginal::new(DVector::zeros(2), bad),
            Err(Error::Infeasible(_))
        ));
    }
}

