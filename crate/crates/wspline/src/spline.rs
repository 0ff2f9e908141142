//! Natural cubic splines in `R^d`, the Holladay energy, the phase-space
//! segment cost, and the multimarginal cost in both its variational and
//! quadratic-form representations.
//!
//! All energies are integrated analytically from polynomial coefficients;
//! there is no quadrature anywhere in this module.
//!
//! The variational multimarginal cost (minimize over knot velocities) and
//! the closed quadratic form agree on every knot path:
//!
//! ```
//! use nalgebra::DVector;
//! use wspline::grid::TimeGrid;
//! use wspline::spline::{energy_quadratic_form, multimarginal_cost, KnotPath};
//!
//! let grid = TimeGrid::new(vec![0.0, 1.0, 2.0])?;
//! let points = vec![
//!     DVector::from_vec(vec![0.0]),
//!     DVector::from_vec(vec![1.0]),
//!     DVector::from_vec(vec![0.0]),
//! ];
//! let variational = multimarginal_cost(&KnotPath::new(grid.clone(), points.clone())?)?;
//! let form = energy_quadratic_form(&grid, 1)?;
//! assert!((variational - form.evaluate(&points)?).abs() < 1e-12);
//! assert!((variational - 6.0).abs() < 1e-12);
//! # Ok::<(), wspline::error::Error>(())
//! ```

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::grid::TimeGrid;
use crate::linalg::kron_identity;

/// Spatial data at the knot times.
#[derive(Debug, Clone)]
pub struct KnotPath {
    pub grid: TimeGrid,
    pub points: Vec<DVector<f64>>,
}

impl KnotPath {
    pub fn new(grid: TimeGrid, points: Vec<DVector<f64>>) -> Result<Self> {
        if points.len() != grid.n_knots() {
            return Err(Error::DimensionMismatch(format!(
                "{} knot times but {} points",
                grid.n_knots(),
                points.len()
            )));
        }
        let d = points[0].len();
        if d == 0 {
            return Err(Error::InvalidArgument("points must have dimension >= 1".into()));
        }
        if let Some(bad) = points.iter().position(|p| p.len() != d) {
            return Err(Error::DimensionMismatch(format!(
                "point {bad} has dimension {} but point 0 has {d}",
                points[bad].len()
            )));
        }
        Ok(Self { grid, points })
    }

    pub fn dim(&self) -> usize {
        self.points[0].len()
    }
}

/// Position and velocity data at the knot times.
#[derive(Debug, Clone)]
pub struct PhaseKnots {
    pub grid: TimeGrid,
    pub positions: Vec<DVector<f64>>,
    pub velocities: Vec<DVector<f64>>,
}

impl PhaseKnots {
    pub fn new(
        grid: TimeGrid,
        positions: Vec<DVector<f64>>,
        velocities: Vec<DVector<f64>>,
    ) -> Result<Self> {
        let path = KnotPath::new(grid, positions)?;
        if velocities.len() != path.points.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} positions but {} velocities",
                path.points.len(),
                velocities.len()
            )));
        }
        if let Some(bad) = velocities.iter().position(|v| v.len() != path.dim()) {
            return Err(Error::DimensionMismatch(format!(
                "velocity {bad} has dimension {} but positions have {}",
                velocities[bad].len(),
                path.dim()
            )));
        }
        Ok(Self {
            grid: path.grid,
            positions: path.points,
            velocities,
        })
    }

    pub fn dim(&self) -> usize {
        self.positions[0].len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryKind {
    /// Second derivative vanishes at both ends.
    Natural,
    /// Endpoint velocities prescribed.
    Clamped,
}

/// A C² piecewise cubic. Segment `i` stores coefficients `c0..c3` of
/// `x(s) = c0 + c1 s + c2 s² + c3 s³` in the local time `s = t - t_i`.
#[derive(Debug, Clone)]
pub struct PiecewiseCubic {
    grid: TimeGrid,
    coeffs: Vec<[DVector<f64>; 4]>,
    boundary_kind: BoundaryKind,
}

impl PiecewiseCubic {
    /// Assemble from per-segment coefficients. Shapes are validated;
    /// continuity is the caller's responsibility (see [`continuity_defect`]).
    ///
    /// [`continuity_defect`]: PiecewiseCubic::continuity_defect
    pub fn from_segments(
        grid: TimeGrid,
        coeffs: Vec<[DVector<f64>; 4]>,
        boundary_kind: BoundaryKind,
    ) -> Result<Self> {
        if coeffs.len() != grid.n_segments() {
            return Err(Error::DimensionMismatch(format!(
                "{} segments but {} coefficient blocks",
                grid.n_segments(),
                coeffs.len()
            )));
        }
        let d = coeffs[0][0].len();
        for (i, block) in coeffs.iter().enumerate() {
            if block.iter().any(|c| c.len() != d) {
                return Err(Error::DimensionMismatch(format!(
                    "segment {i} has inconsistent coefficient dimensions"
                )));
            }
        }
        Ok(Self {
            grid,
            coeffs,
            boundary_kind,
        })
    }

    pub fn grid(&self) -> &TimeGrid {
        &self.grid
    }

    pub fn dim(&self) -> usize {
        self.coeffs[0][0].len()
    }

    pub fn boundary_kind(&self) -> BoundaryKind {
        self.boundary_kind
    }

    pub fn segment_coefficients(&self, segment: usize) -> &[DVector<f64>; 4] {
        &self.coeffs[segment]
    }

    pub fn eval(&self, t: f64) -> Result<DVector<f64>> {
        let i = self.grid.segment_of(t)?;
        let s = t - self.grid.times()[i];
        let [c0, c1, c2, c3] = &self.coeffs[i];
        Ok(c0 + c1 * s + c2 * (s * s) + c3 * (s * s * s))
    }

    pub fn derivative(&self, t: f64) -> Result<DVector<f64>> {
        let i = self.grid.segment_of(t)?;
        let s = t - self.grid.times()[i];
        let [_, c1, c2, c3] = &self.coeffs[i];
        Ok(c1 + c2 * (2.0 * s) + c3 * (3.0 * s * s))
    }

    pub fn second_derivative(&self, t: f64) -> Result<DVector<f64>> {
        let i = self.grid.segment_of(t)?;
        let s = t - self.grid.times()[i];
        let [_, _, c2, c3] = &self.coeffs[i];
        Ok(c2 * 2.0 + c3 * (6.0 * s))
    }

    /// Largest mismatch of value, first and second derivative across
    /// interior knots. Zero (up to roundoff) for a genuine C² spline.
    pub fn continuity_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.grid.n_segments() - 1 {
            let h = self.grid.gap(i);
            let [c0, c1, c2, c3] = &self.coeffs[i];
            let left_val = c0 + c1 * h + c2 * (h * h) + c3 * (h * h * h);
            let left_d1 = c1 + c2 * (2.0 * h) + c3 * (3.0 * h * h);
            let left_d2 = c2 * 2.0 + c3 * (6.0 * h);
            let [r0, r1, r2, _] = &self.coeffs[i + 1];
            worst = worst
                .max((left_val - r0).norm())
                .max((left_d1 - r1).norm())
                .max((left_d2 - r2 * 2.0).norm());
        }
        worst
    }

    /// `∫ |S̈|² dt`, integrated segment by segment in closed form.
    ///
    /// On a segment the second derivative is `2 c2 + 6 c3 s`, so the
    /// integral over `[0, h]` is `4|c2|² h + 12 ⟨c2, c3⟩ h² + 12 |c3|² h³`.
    pub fn energy(&self) -> f64 {
        let mut total = 0.0;
        for (i, [_, _, c2, c3]) in self.coeffs.iter().enumerate() {
            let h = self.grid.gap(i);
            total += 4.0 * c2.norm_squared() * h
                + 12.0 * c2.dot(c3) * h * h
                + 12.0 * c3.norm_squared() * h * h * h;
        }
        total
    }

    /// Knot values `(t_i, S(t_i))`.
    pub fn knot_values(&self) -> Vec<DVector<f64>> {
        let mut out: Vec<DVector<f64>> =
            (0..self.grid.n_segments()).map(|i| self.coeffs[i][0].clone()).collect();
        out.push(self.eval(self.grid.end()).unwrap());
        out
    }
}

/// Solve a tridiagonal system with vector-valued right-hand sides
/// (Thomas elimination; one pass per coordinate block).
fn tridiagonal_solve(
    sub: &[f64],
    diag: &[f64],
    sup: &[f64],
    rhs: &[DVector<f64>],
) -> Vec<DVector<f64>> {
    let n = diag.len();
    debug_assert_eq!(sub.len(), n - 1);
    debug_assert_eq!(sup.len(), n - 1);
    debug_assert_eq!(rhs.len(), n);
    let mut c_prime = vec![0.0; n];
    let mut d_prime: Vec<DVector<f64>> = rhs.to_vec();
    c_prime[0] = sup.first().map_or(0.0, |&c| c / diag[0]);
    d_prime[0] = &rhs[0] / diag[0];
    for i in 1..n {
        let m = diag[i] - sub[i - 1] * c_prime[i - 1];
        assert!(m != 0.0, "tridiagonal pivot vanished");
        if i < n - 1 {
            c_prime[i] = sup[i] / m;
        }
        d_prime[i] = (&rhs[i] - &d_prime[i - 1] * sub[i - 1]) / m;
    }
    for i in (0..n - 1).rev() {
        let next = d_prime[i + 1].clone();
        d_prime[i] -= next * c_prime[i];
    }
    d_prime
}

/// The unique natural interpolating cubic spline through the knots.
///
/// Solves the classical tridiagonal moment system (second derivatives at
/// the knots, with the two boundary moments pinned to zero) and converts
/// moments to per-segment coefficients.
pub fn natural_spline(knots: &KnotPath) -> Result<PiecewiseCubic> {
    let n = knots.grid.n_segments();
    let d = knots.dim();
    let pts = &knots.points;
    let zero = DVector::zeros(d);

    // Moments m_i = S''(t_i); m_0 = m_N = 0.
    let mut moments: Vec<DVector<f64>> = vec![zero.clone(); n + 1];
    if n >= 2 {
        let m = n - 1; // number of interior unknowns
        let mut sub = vec![0.0; m - 1];
        let mut diag = vec![0.0; m];
        let mut sup = vec![0.0; m - 1];
        let mut rhs: Vec<DVector<f64>> = Vec::with_capacity(m);
        for k in 0..m {
            let i = k + 1;
            let h_prev = knots.grid.gap(i - 1);
            let h_next = knots.grid.gap(i);
            diag[k] = (h_prev + h_next) / 3.0;
            if k > 0 {
                sub[k - 1] = h_prev / 6.0;
            }
            if k < m - 1 {
                sup[k] = h_next / 6.0;
            }
            rhs.push((&pts[i + 1] - &pts[i]) / h_next - (&pts[i] - &pts[i - 1]) / h_prev);
        }
        let interior = tridiagonal_solve(&sub, &diag, &sup, &rhs);
        for (k, msol) in interior.into_iter().enumerate() {
            moments[k + 1] = msol;
        }
    }

    let mut coeffs = Vec::with_capacity(n);
    for i in 0..n {
        let h = knots.grid.gap(i);
        let c0 = pts[i].clone();
        let c1 = (&pts[i + 1] - &pts[i]) / h - (&moments[i] * 2.0 + &moments[i + 1]) * (h / 6.0);
        let c2 = &moments[i] / 2.0;
        let c3 = (&moments[i + 1] - &moments[i]) / (6.0 * h);
        coeffs.push([c0, c1, c2, c3]);
    }
    PiecewiseCubic::from_segments(knots.grid.clone(), coeffs, BoundaryKind::Natural)
}

/// `∫ |S̈|² dt` of a piecewise cubic (alias for [`PiecewiseCubic::energy`]).
pub fn spline_energy(curve: &PiecewiseCubic) -> f64 {
    curve.energy()
}

fn check_gap(h: f64) -> Result<()> {
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "segment length must be positive, got {h}"
        )));
    }
    Ok(())
}

fn check_phase_pair(
    x0: &DVector<f64>,
    x1: &DVector<f64>,
    v0: &DVector<f64>,
    v1: &DVector<f64>,
) -> Result<()> {
    let d = x0.len();
    if x1.len() != d || v0.len() != d || v1.len() != d {
        return Err(Error::DimensionMismatch(format!(
            "expected common dimension {d}, got x1: {}, v0: {}, v1: {}",
            x1.len(),
            v0.len(),
            v1.len()
        )));
    }
    Ok(())
}

/// The unique cubic on an interval of length `h` with prescribed endpoint
/// positions and velocities.
pub fn hermite_segment(
    x0: &DVector<f64>,
    x1: &DVector<f64>,
    v0: &DVector<f64>,
    v1: &DVector<f64>,
    h: f64,
) -> Result<PiecewiseCubic> {
    check_gap(h)?;
    check_phase_pair(x0, x1, v0, v1)?;
    let delta = x1 - x0;
    let c2 = &delta * (3.0 / (h * h)) - (v0 * 2.0 + v1) / h;
    let c3 = &delta * (-2.0 / (h * h * h)) + (v0 + v1) / (h * h);
    let grid = TimeGrid::new(vec![0.0, h])?;
    PiecewiseCubic::from_segments(
        grid,
        vec![[x0.clone(), v0.clone(), c2, c3]],
        BoundaryKind::Clamped,
    )
}

/// The piecewise Hermite cubic through full phase-space knot data.
pub fn hermite_spline(phase: &PhaseKnots) -> Result<PiecewiseCubic> {
    let n = phase.grid.n_segments();
    let mut coeffs = Vec::with_capacity(n);
    for i in 0..n {
        let h = phase.grid.gap(i);
        let seg = hermite_segment(
            &phase.positions[i],
            &phase.positions[i + 1],
            &phase.velocities[i],
            &phase.velocities[i + 1],
            h,
        )?;
        coeffs.push(seg.coeffs[0].clone());
    }
    PiecewiseCubic::from_segments(phase.grid.clone(), coeffs, BoundaryKind::Clamped)
}

/// Exact `∫ |ẍ|²` of the Hermite cubic joining `(x0, v0)` to `(x1, v1)`
/// over an interval of length `h`:
///
/// `[12|Δ|² − 12 h ⟨Δ, δ⟩ + 4 h² |δ|²] / h³`
/// with `Δ = x1 − x0 − h v0` and `δ = v1 − v0`.
///
/// For `h = 1` this is the unit-gap phase-space edge cost; for other gaps
/// it is the exactly rescaled integral.
pub fn segment_cost(
    x0: &DVector<f64>,
    x1: &DVector<f64>,
    v0: &DVector<f64>,
    v1: &DVector<f64>,
    h: f64,
) -> Result<f64> {
    check_gap(h)?;
    check_phase_pair(x0, x1, v0, v1)?;
    let delta = x1 - x0 - v0 * h;
    let dv = v1 - v0;
    Ok((12.0 * delta.norm_squared() - 12.0 * h * delta.dot(&dv) + 4.0 * h * h * dv.norm_squared())
        / (h * h * h))
}

/// The unique knot velocities minimizing the summed segment cost.
///
/// Stationarity of the segment-cost sum in the velocities gives a
/// symmetric tridiagonal system (coefficients `8/h` on the diagonal,
/// `4/h` off it), solved per coordinate by Thomas elimination. These
/// velocities coincide with the knot derivatives of the natural spline,
/// which the test suite checks through the independent moment solve.
pub fn optimal_velocities(knots: &KnotPath) -> Result<PhaseKnots> {
    let n = knots.grid.n_segments();
    let m = n + 1;
    let mut sub = vec![0.0; m - 1];
    let mut diag = vec![0.0; m];
    let mut sup = vec![0.0; m - 1];
    let mut rhs: Vec<DVector<f64>> = vec![DVector::zeros(knots.dim()); m];
    for i in 0..n {
        let h = knots.grid.gap(i);
        let slope12 = (&knots.points[i + 1] - &knots.points[i]) * (12.0 / (h * h));
        diag[i] += 8.0 / h;
        diag[i + 1] += 8.0 / h;
        sub[i] = 4.0 / h;
        sup[i] = 4.0 / h;
        rhs[i] += &slope12;
        rhs[i + 1] += &slope12;
    }
    let velocities = tridiagonal_solve(&sub, &diag, &sup, &rhs);
    PhaseKnots::new(knots.grid.clone(), knots.points.clone(), velocities)
}

/// The multimarginal cost `𝒞(x_0, …, x_N)`: the Holladay energy of the
/// natural spline through the knots, computed by minimizing out the
/// velocities and summing segment costs.
pub fn multimarginal_cost(knots: &KnotPath) -> Result<f64> {
    let phase = optimal_velocities(knots)?;
    let mut total = 0.0;
    for i in 0..knots.grid.n_segments() {
        total += segment_cost(
            &phase.positions[i],
            &phase.positions[i + 1],
            &phase.velocities[i],
            &phase.velocities[i + 1],
            knots.grid.gap(i),
        )?;
    }
    Ok(total)
}

/// The multimarginal cost as a quadratic form: `𝒞(x) = xᵀ R x` for the
/// stacked knot vector `x = (x_0ᵀ, …, x_Nᵀ)ᵀ`.
#[derive(Debug, Clone)]
pub struct QuadraticEnergyForm {
    matrix: DMatrix<f64>,
    dim: usize,
}

impl QuadraticEnergyForm {
    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn evaluate(&self, points: &[DVector<f64>]) -> Result<f64> {
        let expected = self.matrix.nrows() / self.dim;
        if points.len() != expected {
            return Err(Error::DimensionMismatch(format!(
                "form expects {expected} knots, got {}",
                points.len()
            )));
        }
        let mut x = DVector::zeros(self.matrix.nrows());
        for (i, p) in points.iter().enumerate() {
            if p.len() != self.dim {
                return Err(Error::DimensionMismatch(format!(
                    "knot {i} has dimension {}, form expects {}",
                    p.len(),
                    self.dim
                )));
            }
            x.rows_mut(i * self.dim, self.dim).copy_from(p);
        }
        Ok((x.transpose() * &self.matrix * &x)[(0, 0)])
    }
}

/// Assemble `R` by eliminating the velocities from the phase-space
/// quadratic form (Schur complement of the velocity block).
///
/// The per-segment cost is `zᵀ M z` with `z = (x_i, x_{i+1}, v_i, v_{i+1})`
/// and `M = 12/h³ aaᵀ − 6/h² (abᵀ + baᵀ) + 4/h bbᵀ`, where
/// `a = (−1, 1, −h, 0)` and `b = (0, 0, −1, 1)` pick out `Δ` and `δ`.
/// Coordinates decouple, so the scalar form is assembled first and then
/// expanded with `⊗ I_d`.
pub fn energy_quadratic_form(grid: &TimeGrid, dim: usize) -> Result<QuadraticEnergyForm> {
    if dim == 0 {
        return Err(Error::InvalidArgument("dimension must be >= 1".into()));
    }
    let n = grid.n_segments();
    let m = n + 1;
    // Two knots admit a straight interpolant: the cost is identically zero.
    if n == 1 {
        return Ok(QuadraticEnergyForm {
            matrix: DMatrix::zeros(2 * dim, 2 * dim),
            dim,
        });
    }
    // Scalar phase-space form over (x_0..x_N, v_0..v_N).
    let mut h_full = DMatrix::<f64>::zeros(2 * m, 2 * m);
    for i in 0..n {
        let h = grid.gap(i);
        let idx = [i, i + 1, m + i, m + i + 1];
        let a = [-1.0, 1.0, -h, 0.0];
        let b = [0.0, 0.0, -1.0, 1.0];
        for r in 0..4 {
            for c in 0..4 {
                h_full[(idx[r], idx[c])] += 12.0 / (h * h * h) * a[r] * a[c]
                    - 6.0 / (h * h) * (a[r] * b[c] + b[r] * a[c])
                    + 4.0 / h * b[r] * b[c];
            }
        }
    }
    let p = h_full.view((0, 0), (m, m)).into_owned();
    let b = h_full.view((0, m), (m, m)).into_owned();
    let c = h_full.view((m, m), (m, m)).into_owned();
    let chol = c
        .cholesky()
        .expect("velocity block of the phase-space form is positive definite");
    let r_scalar = &p - &b * chol.solve(&b.transpose());
    let r_scalar = crate::linalg::symmetrize(&r_scalar);
    Ok(QuadraticEnergyForm {
        matrix: kron_identity(&r_scalar, dim),
        dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn v1(x: f64) -> DVector<f64> {
        DVector::from_vec(vec![x])
    }

    fn path_1d(times: Vec<f64>, xs: &[f64]) -> KnotPath {
        KnotPath::new(
            TimeGrid::new(times).unwrap(),
            xs.iter().map(|&x| v1(x)).collect(),
        )
        .unwrap()
    }

    fn random_path(rng: &mut ChaCha8Rng, n: usize, d: usize) -> KnotPath {
        let grid = TimeGrid::unit_gaps(n).unwrap();
        let pts = (0..=n)
            .map(|_| DVector::from_fn(d, |_, _| rng.gen_range(-2.0..2.0)))
            .collect();
        KnotPath::new(grid, pts).unwrap()
    }

    #[test]
    fn two_knots_give_a_line() {
        let s = natural_spline(&path_1d(vec![0.0, 1.0], &[0.0, 1.0])).unwrap();
        for t in [0.0, 0.3, 0.77, 1.0] {
            assert_relative_eq!(s.eval(t).unwrap()[0], t, epsilon = 1e-12);
            assert_relative_eq!(s.second_derivative(t).unwrap()[0], 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn hat_spline_matches_hand_solve() {
        // Natural spline through (0,0),(1,1),(2,0): S''(1) = -3, energy 6.
        let s = natural_spline(&path_1d(vec![0.0, 1.0, 2.0], &[0.0, 1.0, 0.0])).unwrap();
        assert_relative_eq!(s.second_derivative(1.0).unwrap()[0], -3.0, epsilon = 1e-10);
        assert_relative_eq!(s.energy(), 6.0, epsilon = 1e-10);
        assert_relative_eq!(s.eval(0.5).unwrap()[0], 11.0 / 16.0, epsilon = 1e-12);
        // Natural boundary.
        assert_relative_eq!(s.second_derivative(0.0).unwrap()[0], 0.0, epsilon = 1e-12);
        assert_relative_eq!(s.second_derivative(2.0).unwrap()[0], 0.0, epsilon = 1e-12);
    }

    #[test]
    fn collinear_2d_data_stays_on_the_line() {
        let grid = TimeGrid::unit_gaps(3).unwrap();
        let pts = (0..=3)
            .map(|i| DVector::from_vec(vec![i as f64, 2.0 * i as f64 + 1.0]))
            .collect();
        let s = natural_spline(&KnotPath::new(grid, pts).unwrap()).unwrap();
        for t in [0.0, 0.4, 1.7, 2.5, 3.0] {
            let p = s.eval(t).unwrap();
            assert_relative_eq!(p[0], t, epsilon = 1e-10);
            assert_relative_eq!(p[1], 2.0 * t + 1.0, epsilon = 1e-10);
        }
        assert_relative_eq!(s.energy(), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn spline_interpolates_and_is_c2() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let n = rng.gen_range(2..8);
            let d = rng.gen_range(1..4);
            let path = random_path(&mut rng, n, d);
            let s = natural_spline(&path).unwrap();
            for (i, t) in path.grid.times().iter().enumerate() {
                assert_relative_eq!(s.eval(*t).unwrap(), path.points[i], epsilon = 1e-9);
            }
            let scale = path.points.iter().map(|p| p.norm()).fold(1.0, f64::max);
            assert!(s.continuity_defect() <= 1e-10 * scale);
        }
    }

    #[test]
    fn hermite_examples() {
        let line = hermite_segment(&v1(0.0), &v1(1.0), &v1(1.0), &v1(1.0), 1.0).unwrap();
        assert_relative_eq!(line.eval(0.37).unwrap()[0], 0.37, epsilon = 1e-12);

        // x(t) = 3t^2 - 2t^3
        let s = hermite_segment(&v1(0.0), &v1(1.0), &v1(0.0), &v1(0.0), 1.0).unwrap();
        let c = s.segment_coefficients(0);
        assert_relative_eq!(c[2][0], 3.0, epsilon = 1e-12);
        assert_relative_eq!(c[3][0], -2.0, epsilon = 1e-12);
        assert_relative_eq!(s.energy(), 12.0, epsilon = 1e-10);

        // x(t) = t^3 - t^2
        let s = hermite_segment(&v1(0.0), &v1(0.0), &v1(0.0), &v1(1.0), 1.0).unwrap();
        let c = s.segment_coefficients(0);
        assert_relative_eq!(c[2][0], -1.0, epsilon = 1e-12);
        assert_relative_eq!(c[3][0], 1.0, epsilon = 1e-12);
        assert_relative_eq!(s.energy(), 4.0, epsilon = 1e-10);

        assert!(hermite_segment(&v1(0.0), &v1(1.0), &v1(0.0), &v1(0.0), 0.0).is_err());
    }

    #[test]
    fn segment_cost_examples() {
        let c = |x0, x1, va, vb| segment_cost(&v1(x0), &v1(x1), &v1(va), &v1(vb), 1.0).unwrap();
        assert_relative_eq!(c(0.0, 1.0, 1.0, 1.0), 0.0, epsilon = 1e-12);
        assert_relative_eq!(c(0.0, 1.0, 0.0, 0.0), 12.0, epsilon = 1e-12);
        assert_relative_eq!(c(0.0, 0.0, 0.0, 1.0), 4.0, epsilon = 1e-12);
    }

    #[test]
    fn segment_cost_matches_hermite_energy() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let d = rng.gen_range(1..4);
            let h = [0.1, 1.0, 10.0][rng.gen_range(0..3)];
            let rv = |rng: &mut ChaCha8Rng| DVector::from_fn(d, |_, _| rng.gen_range(-3.0..3.0));
            let (x0, x1, v0, v1) = (rv(&mut rng), rv(&mut rng), rv(&mut rng), rv(&mut rng));
            let cost = segment_cost(&x0, &x1, &v0, &v1, h).unwrap();
            let energy = hermite_segment(&x0, &x1, &v0, &v1, h).unwrap().energy();
            assert_relative_eq!(cost, energy, epsilon = 1e-10, max_relative = 1e-10);
        }
    }

    #[test]
    fn optimal_velocities_examples() {
        // Hand-solved hat instance.
        let phase = optimal_velocities(&path_1d(vec![0.0, 1.0, 2.0], &[0.0, 1.0, 0.0])).unwrap();
        assert_relative_eq!(phase.velocities[0][0], 1.5, epsilon = 1e-12);
        assert_relative_eq!(phase.velocities[1][0], 0.0, epsilon = 1e-12);
        assert_relative_eq!(phase.velocities[2][0], -1.5, epsilon = 1e-12);

        // Single segment: both velocities equal the slope.
        let phase = optimal_velocities(&path_1d(vec![0.0, 1.0], &[1.0, 3.5])).unwrap();
        assert_relative_eq!(phase.velocities[0][0], 2.5, epsilon = 1e-12);
        assert_relative_eq!(phase.velocities[1][0], 2.5, epsilon = 1e-12);

        // Collinear equally spaced knots: common slope everywhere.
        let phase =
            optimal_velocities(&path_1d(vec![0.0, 1.0, 2.0, 3.0], &[0.0, 2.0, 4.0, 6.0])).unwrap();
        for v in &phase.velocities {
            assert_relative_eq!(v[0], 2.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn optimal_velocities_match_spline_derivatives() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..50 {
            let n = rng.gen_range(1..8);
            let d = rng.gen_range(1..4);
            let path = random_path(&mut rng, n, d);
            let s = natural_spline(&path).unwrap();
            let phase = optimal_velocities(&path).unwrap();
            for (i, t) in path.grid.times().iter().enumerate() {
                assert_relative_eq!(
                    phase.velocities[i],
                    s.derivative(*t).unwrap(),
                    epsilon = 1e-9
                );
            }
        }
    }

    #[test]
    fn multimarginal_cost_examples() {
        assert_relative_eq!(
            multimarginal_cost(&path_1d(vec![0.0, 1.0], &[-3.0, 9.0])).unwrap(),
            0.0,
            epsilon = 1e-12
        );
        assert_relative_eq!(
            multimarginal_cost(&path_1d(vec![0.0, 1.0, 2.0], &[0.0, 1.0, 0.0])).unwrap(),
            6.0,
            epsilon = 1e-10
        );
        assert_relative_eq!(
            multimarginal_cost(&path_1d(vec![0.0, 1.0, 2.0, 3.0], &[4.0, 4.0, 4.0, 4.0])).unwrap(),
            0.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn multimarginal_cost_equals_spline_energy() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..50 {
            let n = rng.gen_range(1..8);
            let d = rng.gen_range(1..4);
            let path = random_path(&mut rng, n, d);
            let cost = multimarginal_cost(&path).unwrap();
            let energy = natural_spline(&path).unwrap().energy();
            assert_relative_eq!(cost, energy, epsilon = 1e-9, max_relative = 1e-9);
        }
    }

    #[test]
    fn quadratic_form_n1_is_zero() {
        let r = energy_quadratic_form(&TimeGrid::unit_gaps(1).unwrap(), 3).unwrap();
        assert_eq!(r.matrix().amax(), 0.0);
    }

    #[test]
    fn quadratic_form_n2_unit_gaps() {
        let r = energy_quadratic_form(&TimeGrid::unit_gaps(2).unwrap(), 1).unwrap();
        let u = DVector::from_vec(vec![1.0, -2.0, 1.0]);
        let expected = &u * u.transpose() * 1.5;
        assert_relative_eq!(r.matrix(), &expected, epsilon = 1e-10);
    }

    #[test]
    fn quadratic_form_matches_multimarginal_cost() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for _ in 0..30 {
            let n = rng.gen_range(1..7);
            let d = rng.gen_range(1..4);
            let path = random_path(&mut rng, n, d);
            let form = energy_quadratic_form(&path.grid, d).unwrap();
            let quad = form.evaluate(&path.points).unwrap();
            let cost = multimarginal_cost(&path).unwrap();
            assert_relative_eq!(quad, cost, epsilon = 1e-9, max_relative = 1e-9);
        }
    }

    #[test]
    fn quadratic_form_annihilates_affine_data() {
        let grid = TimeGrid::unit_gaps(5).unwrap();
        let form = energy_quadratic_form(&grid, 2).unwrap();
        let mut x = DVector::zeros(12);
        for i in 0..6 {
            x[2 * i] = 3.0 * i as f64 + 1.0;
            x[2 * i + 1] = -2.0 * i as f64 + 0.5;
        }
        assert!((form.matrix() * &x).amax() < 1e-10);
    }

    #[test]
    fn rejects_bad_inputs() {
        let grid = TimeGrid::new(vec![0.0, 1.0, 2.0]).unwrap();
        // Length mismatch.
        assert!(KnotPath::new(grid.clone(), vec![v1(0.0), v1(1.0)]).is_err());
        // Dimension mismatch.
        assert!(KnotPath::new(
            grid,
            vec![v1(0.0), DVector::from_vec(vec![1.0, 2.0]), v1(0.0)]
        )
        .is_err());
        assert!(segment_cost(&v1(0.0), &v1(1.0), &v1(0.0), &v1(0.0), -1.0).is_err());
    }
}
