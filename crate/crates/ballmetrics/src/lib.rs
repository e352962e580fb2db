//! Hyperbolic-type metrics on the unit ball and on sampled bounded domains.
//!
//! The crate evaluates four metrics for points of `B^n` (and of arbitrary
//! sampled domains where they make sense):
//!
//! * the hyperbolic metric `rho`,
//! * the distance ratio metric `j`,
//! * the Cassinian metric `c` (boundary supremum of `|x-y|/(|x-z||z-y|)`),
//! * the triangular ratio metric `s` (boundary supremum of
//!   `|x-y|/(|x-z|+|z-y|)`),
//!
//! together with the lower Cassinian bound `chat`, the sharp comparison
//! constants between them, the quasiregular distortion stack (`mu`,
//! `phi_K`, `eta_K`, `c(K)`), and a seeded randomized harness that verifies
//! every comparison inequality against independent brute-force oracles.
//!
//! Extremum metrics return a [`MetricValue`] carrying the attaining
//! boundary witness and a method tag (closed-form, optimized or sampled).

pub mod analysis;
pub mod ball;
pub mod distortion;
pub mod domain;
mod error;
pub mod generic;
mod optimize;
pub mod report;
pub mod sampling;

pub mod geometry;

pub use ball::{Method, MetricValue};
pub use domain::{DomainSpec, SampledDomain};
pub use error::{Error, Result};
pub use geometry::{Point, PlanePair};
