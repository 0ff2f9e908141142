//! Knot time grids.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Strictly increasing knot times `t_0 = 0 < t_1 < … < t_N`.
///
/// Path-space problems rescale to `t_N = 1`; the Gaussian pipeline uses
/// integer knots `t_i = i`. Neither convention is enforced here beyond
/// `t_0 = 0`; operations that require unit gaps check for themselves.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimeGrid {
    times: Vec<f64>,
}

impl TimeGrid {
    pub fn new(times: Vec<f64>) -> Result<Self> {
        if times.len() < 2 {
            return Err(Error::InvalidGrid(format!(
                "need at least two knot times, got {}",
                times.len()
            )));
        }
        if times[0] != 0.0 {
            return Err(Error::InvalidGrid(format!(
                "first knot time must be 0, got {}",
                times[0]
            )));
        }
        for w in times.windows(2) {
            if !(w[1] > w[0]) || !w[1].is_finite() {
                return Err(Error::InvalidGrid(format!(
                    "knot times must be strictly increasing, got {} then {}",
                    w[0], w[1]
                )));
            }
        }
        Ok(Self { times })
    }

    /// `t_i = i` for `i = 0..=n_segments` (the Gaussian convention).
    pub fn unit_gaps(n_segments: usize) -> Result<Self> {
        Self::new((0..=n_segments).map(|i| i as f64).collect())
    }

    /// `n_segments + 1` equally spaced knots on `[0, 1]`.
    pub fn uniform_unit_interval(n_segments: usize) -> Result<Self> {
        if n_segments == 0 {
            return Err(Error::InvalidGrid("need at least one segment".into()));
        }
        Self::new(
            (0..=n_segments)
                .map(|i| i as f64 / n_segments as f64)
                .collect(),
        )
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn n_knots(&self) -> usize {
        self.times.len()
    }

    /// Number of segments N.
    pub fn n_segments(&self) -> usize {
        self.times.len() - 1
    }

    pub fn gap(&self, segment: usize) -> f64 {
        self.times[segment + 1] - self.times[segment]
    }

    pub fn start(&self) -> f64 {
        self.times[0]
    }

    pub fn end(&self) -> f64 {
        *self.times.last().unwrap()
    }

    pub fn has_unit_gaps(&self) -> bool {
        self.times
            .windows(2)
            .all(|w| (w[1] - w[0] - 1.0).abs() < 1e-12)
    }

    pub fn contains(&self, t: f64) -> bool {
        t >= self.start() && t <= self.end()
    }

    /// Index of the segment containing `t`; the last segment claims `t_N`.
    pub fn segment_of(&self, t: f64) -> Result<usize> {
        if !self.contains(t) {
            return Err(Error::OutOfRange(format!(
                "t = {t} outside [{}, {}]",
                self.start(),
                self.end()
            )));
        }
        let idx = match self
            .times
            .binary_search_by(|probe| probe.partial_cmp(&t).unwrap())
        {
            Ok(i) => i,
            Err(i) => i - 1,
        };
        Ok(idx.min(self.n_segments() - 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_single_knot() {
        assert!(TimeGrid::new(vec![0.0]).is_err());
    }

    #[test]
    fn rejects_non_increasing() {
        assert!(TimeGrid::new(vec![0.0, 1.0, 1.0]).is_err());
        assert!(TimeGrid::new(vec![0.0, 2.0, 1.0]).is_err());
    }

    #[test]
    fn rejects_nonzero_origin() {
        assert!(TimeGrid::new(vec![0.5, 1.0]).is_err());
    }

    #[test]
    fn segment_lookup() {
        let g = TimeGrid::new(vec![0.0, 1.0, 2.0]).unwrap();
        assert_eq!(g.segment_of(0.0).unwrap(), 0);
        assert_eq!(g.segment_of(0.7).unwrap(), 0);
        assert_eq!(g.segment_of(1.0).unwrap(), 1);
        assert_eq!(g.segment_of(2.0).unwrap(), 1);
        assert!(g.segment_of(2.1).is_err());
        assert!(g.segment_of(-0.1).is_err());
    }

    #[test]
    fn unit_gap_detection() {
        assert!(TimeGrid::unit_gaps(3).unwrap().has_unit_gaps());
        assert!(!TimeGrid::uniform_unit_interval(3).unwrap().has_unit_gaps());
    }
}
