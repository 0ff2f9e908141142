//! Interpolating splines in the space of probability measures.
//!
//! Given marginal distributions at knot times, this crate solves the
//! associated multimarginal optimal transport problems and evaluates the
//! resulting measure-valued curve at any time. Two marginal families are
//! supported end to end:
//!
//! * **discrete measures**, handled by an entropic chain solver over the
//!   phase-space multimarginal problem ([`discrete`]);
//! * **Gaussian measures**, handled by a chain-structured semidefinite
//!   program over phase-space covariances ([`gaussian`]).
//!
//! Both reduce to classical natural cubic splines in `R^d` ([`spline`]):
//! the optimal path-space measure is supported on natural splines, so a
//! measure-valued spline is the pushforward of a multimarginal coupling
//! through ordinary splines. [`sampling`] materializes that pushforward
//! as trajectory ensembles.
//!
//! ```
//! use nalgebra::DVector;
//! use wspline::grid::TimeGrid;
//! use wspline::spline::{natural_spline, KnotPath};
//!
//! let grid = TimeGrid::new(vec![0.0, 1.0, 2.0])?;
//! let points = vec![
//!     DVector::from_vec(vec![0.0]),
//!     DVector::from_vec(vec![1.0]),
//!     DVector::from_vec(vec![0.0]),
//! ];
//! let s = natural_spline(&KnotPath::new(grid, points)?)?;
//! assert!((s.energy() - 6.0).abs() < 1e-10);
//! # Ok::<(), wspline::error::Error>(())
//! ```
//!
//! The accompanying guide in `book/` walks through the constructions in
//! narrative form; its code snippets are kept in sync with the doc-tests
//! in this crate.

pub mod cli;
pub mod discrete;
pub mod error;
pub mod gaussian;
pub mod grid;
pub mod linalg;
pub mod sampling;
pub mod spline;

pub use error::{Error, Result};
