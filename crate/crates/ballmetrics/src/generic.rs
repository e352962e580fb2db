//! Metrics over sampled bounded domains.
//!
//! The boundary suprema of the Cassinian and triangular ratio metrics
//! become maxima over the boundary samples; the witness is the attaining
//! sample (lowest index on ties), so the result is independent of
//! evaluation order. A unit-ball `DomainSpec` delegates to the exact ball
//! evaluations.

use crate::ball::{self, Method, MetricValue};
use crate::domain::{boundary_distance, DomainSpec};
use crate::error::{Error, Result};
use crate::geometry::Point;

/// Distance ratio metric `log(1 + |x-y| / min(d(x), d(y)))` with boundary
/// distances from the domain.
pub fn j_generic(domain: &DomainSpec, x: &Point, y: &Point) -> Result<f64> {
    let dx = boundary_distance(domain, x)?;
    let dy = boundary_distance(domain, y)?;
    Ok((x.dist(y) / dx.min(dy)).ln_1p())
}

/// Cassinian metric `sup |x-y| / (|x-z||z-y|)` over boundary samples.
pub fn cassinian_generic(domain: &DomainSpec, x: &Point, y: &Point) -> Result<MetricValue> {
    match domain {
        DomainSpec::UnitBall { .. } => {
            domain.check_contains(x)?;
            domain.check_contains(y)?;
            ball::cassinian_ball(x, y)
        }
        DomainSpec::Sampled(s) => {
            domain.check_contains(x)?;
            domain.check_contains(y)?;
            if x == y {
                return Ok(MetricValue {
                    value: 0.0,
                    witness: None,
                    method: Method::Sampled,
                });
            }
            let (witness, denom) = argmin_over_samples(s.boundary_samples(), |z| {
                x.dist(z) * z.dist(y)
            })?;
            Ok(MetricValue {
                value: x.dist(y) / denom,
                witness: Some(witness.clone()),
                method: Method::Sampled,
            })
        }
    }
}

/// Triangular ratio metric `sup |x-y| / (|x-z| + |z-y|)` over boundary
/// samples, clamped to `[0, 1]`.
pub fn s_generic(domain: &DomainSpec, x: &Point, y: &Point) -> Result<MetricValue> {
    match domain {
        DomainSpec::UnitBall { .. } => {
            domain.check_contains(x)?;
            domain.check_contains(y)?;
            ball::s_ball(x, y)
        }
        DomainSpec::Sampled(s) => {
            domain.check_contains(x)?;
            domain.check_contains(y)?;
            if x == y {
                return Ok(MetricValue {
                    value: 0.0,
                    witness: None,
                    method: Method::Sampled,
                });
            }
            let (witness, denom) = argmin_over_samples(s.boundary_samples(), |z| {
                x.dist(z) + z.dist(y)
            })?;
            Ok(MetricValue {
                value: (x.dist(y) / denom).min(1.0),
                witness: Some(witness.clone()),
                method: Method::Sampled,
            })
        }
    }
}

/// The Jung-theorem constant: `c_D >= bound * s_D` holds for every pair of
/// a bounded domain with `bound = 2 / (sqrt(n/(2n+2)) diam D)`.
pub fn jung_ratio_bound(domain: &DomainSpec) -> Result<f64> {
    let (n, diam) = match domain {
        DomainSpec::UnitBall { dim } => (*dim, 2.0),
        DomainSpec::Sampled(s) => {
            if s.boundary_samples().is_empty() {
                return Err(Error::EmptyBoundary);
            }
            (s.dim(), s.diameter())
        }
    };
    if !(diam > 0.0 && diam.is_finite()) {
        return Err(Error::OutOfRange(format!(
            "domain diameter must be positive and finite, got {diam}"
        )));
    }
    let n = n as f64;
    Ok(2.0 / ((n / (2.0 * n + 2.0)).sqrt() * diam))
}

fn argmin_over_samples<'a>(
    samples: &'a [Point],
    objective: impl Fn(&Point) -> f64,
) -> Result<(&'a Point, f64)> {
    let mut best: Option<(&Point, f64)> = None;
    for z in samples {
        let v = objective(z);
        match best {
            // Strict improvement only, so the lowest index wins ties.
            Some((_, bv)) if v >= bv => {}
            _ => best = Some((z, v)),
        }
    }
    best.ok_or(Error::EmptyBoundary)
}
