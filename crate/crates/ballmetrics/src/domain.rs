//! Domains: the exact unit ball and sampled bounded domains.
//!
//! A sampled domain represents its boundary as a finite point cloud; every
//! infimum or supremum over the boundary becomes a minimum or maximum over
//! the samples. Built-in generators produce circle, ellipse, square and
//! annulus clouds together with exact membership predicates and exact
//! diameters. Point clouds can also be loaded from CSV (header `x1,...,xn`,
//! one boundary point per row).

use std::fmt;
use std::path::Path;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::geometry::Point;

/// Membership test for a sampled domain.
pub type ContainsFn = Arc<dyn Fn(&[f64]) -> bool + Send + Sync>;

/// Membership predicates keep a small collar away from the boundary so that
/// boundary samples always test as outside.
pub const BOUNDARY_COLLAR: f64 = 1e-12;

/// A domain on which the metrics are evaluated.
#[derive(Clone)]
pub enum DomainSpec {
    /// The exact unit ball `B^dim`; boundary distance is `1 - |x|`.
    UnitBall { dim: usize },
    /// A bounded domain given by a boundary point cloud.
    Sampled(SampledDomain),
}

impl DomainSpec {
    pub fn unit_ball(dim: usize) -> Result<Self> {
        if dim < 2 {
            return Err(Error::OutOfRange(format!(
                "ball dimension must be >= 2, got {dim}"
            )));
        }
        Ok(DomainSpec::UnitBall { dim })
    }

    pub fn dim(&self) -> usize {
        match self {
            DomainSpec::UnitBall { dim } => *dim,
            DomainSpec::Sampled(s) => s.dim,
        }
    }

    /// Membership test. For point clouds without a predicate (raw CSV data
    /// in dimension >= 3) membership is not decidable and every point of the
    /// right dimension is accepted.
    pub fn contains(&self, x: &Point) -> bool {
        if x.dim() != self.dim() {
            return false;
        }
        match self {
            DomainSpec::UnitBall { .. } => x.norm() < 1.0,
            DomainSpec::Sampled(s) => match &s.contains {
                Some(f) => f(x.coords()),
                None => true,
            },
        }
    }

    pub(crate) fn check_contains(&self, x: &Point) -> Result<()> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: x.dim(),
            });
        }
        if !self.contains(x) {
            return Err(Error::OutsideDomain);
        }
        Ok(())
    }
}

impl fmt::Debug for DomainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainSpec::UnitBall { dim } => write!(f, "UnitBall({dim})"),
            DomainSpec::Sampled(s) => f
                .debug_struct("Sampled")
                .field("dim", &s.dim)
                .field("samples", &s.boundary.len())
                .field("diameter_hint", &s.diameter_hint)
                .finish(),
        }
    }
}

/// A bounded domain described by boundary samples.
#[derive(Clone)]
pub struct SampledDomain {
    boundary: Vec<Point>,
    dim: usize,
    contains: Option<ContainsFn>,
    diameter_hint: Option<f64>,
}

impl SampledDomain {
    /// Builds a sampled domain from raw boundary points, without a
    /// membership predicate.
    pub fn from_points(boundary: Vec<Point>) -> Result<Self> {
        let dim = match boundary.first() {
            Some(p) => p.dim(),
            None => return Err(Error::EmptyBoundary),
        };
        if boundary.iter().any(|p| p.dim() != dim) {
            return Err(Error::BoundaryFormat(
                "boundary points have mixed dimensions".into(),
            ));
        }
        Ok(Self {
            boundary,
            dim,
            contains: None,
            diameter_hint: None,
        })
    }

    /// Attaches a membership predicate.
    pub fn with_contains(mut self, contains: ContainsFn) -> Self {
        self.contains = Some(contains);
        self
    }

    /// Declares the domain diameter. Rejected when smaller than the largest
    /// pairwise sample distance (O(m^2) check).
    pub fn with_diameter_hint(mut self, diameter: f64) -> Result<Self> {
        if !(diameter > 0.0) {
            return Err(Error::OutOfRange("diameter must be positive".into()));
        }
        let spread = max_pairwise_distance(&self.boundary);
        if diameter < spread - 1e-9 {
            return Err(Error::OutOfRange(format!(
                "diameter hint {diameter} is below the sample spread {spread}"
            )));
        }
        self.diameter_hint = Some(diameter);
        Ok(self)
    }

    pub fn boundary_samples(&self) -> &[Point] {
        &self.boundary
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn diameter_hint(&self) -> Option<f64> {
        self.diameter_hint
    }

    /// Domain diameter: the declared hint when present, otherwise the
    /// largest pairwise sample distance.
    pub fn diameter(&self) -> f64 {
        self.diameter_hint
            .unwrap_or_else(|| max_pairwise_distance(&self.boundary))
    }

    /// Circle of the given radius about the origin; `count` samples at
    /// equally spaced angles.
    pub fn circle(radius: f64, count: usize) -> Result<Self> {
        check_shape(radius > 0.0, "radius must be positive", count)?;
        let boundary = (0..count)
            .map(|k| {
                let (s, c) = angle_of(k, count).sin_cos();
                Point::xy(radius * c, radius * s)
            })
            .collect();
        let r = radius;
        Ok(Self {
            boundary,
            dim: 2,
            contains: Some(Arc::new(move |p| {
                (p[0] * p[0] + p[1] * p[1]).sqrt() < r - BOUNDARY_COLLAR
            })),
            diameter_hint: Some(2.0 * radius),
        })
    }

    /// Axis-aligned ellipse with semi-axes `a`, `b`; samples at equally
    /// spaced parameter values.
    pub fn ellipse(a: f64, b: f64, count: usize) -> Result<Self> {
        check_shape(a > 0.0 && b > 0.0, "semi-axes must be positive", count)?;
        let boundary = (0..count)
            .map(|k| {
                let (s, c) = angle_of(k, count).sin_cos();
                Point::xy(a * c, b * s)
            })
            .collect();
        Ok(Self {
            boundary,
            dim: 2,
            contains: Some(Arc::new(move |p| {
                let q = (p[0] / a) * (p[0] / a) + (p[1] / b) * (p[1] / b);
                q < 1.0 - BOUNDARY_COLLAR
            })),
            diameter_hint: Some(2.0 * a.max(b)),
        })
    }

    /// Square `[-h, h]^2`; samples walk the perimeter at uniform spacing
    /// starting from the corner `(-h, -h)`.
    pub fn square(half_width: f64, count: usize) -> Result<Self> {
        check_shape(half_width > 0.0, "half-width must be positive", count)?;
        let h = half_width;
        let perimeter = 8.0 * h;
        let boundary = (0..count)
            .map(|k| {
                let mut s = perimeter * k as f64 / count as f64;
                if s < 2.0 * h {
                    return Point::xy(-h + s, -h);
                }
                s -= 2.0 * h;
                if s < 2.0 * h {
                    return Point::xy(h, -h + s);
                }
                s -= 2.0 * h;
                if s < 2.0 * h {
                    return Point::xy(h - s, h);
                }
                s -= 2.0 * h;
                Point::xy(-h, h - s)
            })
            .collect();
        Ok(Self {
            boundary,
            dim: 2,
            contains: Some(Arc::new(move |p| {
                p[0].abs().max(p[1].abs()) < h - BOUNDARY_COLLAR
            })),
            diameter_hint: Some(2.0 * std::f64::consts::SQRT_2 * h),
        })
    }

    /// Annulus `inner < |x| < outer`; the sample budget is split between the
    /// two circles in proportion to their circumference.
    pub fn annulus(inner: f64, outer: f64, count: usize) -> Result<Self> {
        check_shape(
            inner > 0.0 && outer > inner,
            "need 0 < inner < outer",
            count,
        )?;
        let n_outer =
            ((count as f64 * outer / (inner + outer)).round() as usize).clamp(8, count - 8);
        let n_inner = count - n_outer;
        let mut boundary: Vec<Point> = (0..n_outer)
            .map(|k| {
                let (s, c) = angle_of(k, n_outer).sin_cos();
                Point::xy(outer * c, outer * s)
            })
            .collect();
        boundary.extend((0..n_inner).map(|k| {
            let (s, c) = angle_of(k, n_inner).sin_cos();
            Point::xy(inner * c, inner * s)
        }));
        Ok(Self {
            boundary,
            dim: 2,
            contains: Some(Arc::new(move |p| {
                let r = (p[0] * p[0] + p[1] * p[1]).sqrt();
                r > inner + BOUNDARY_COLLAR && r < outer - BOUNDARY_COLLAR
            })),
            diameter_hint: Some(2.0 * outer),
        })
    }

    /// Loads a boundary cloud from CSV with header `x1,...,xn`.
    ///
    /// For planar clouds the rows are interpreted as an ordered closed loop
    /// and membership is decided by even-odd ray casting against that loop
    /// (all built-in generators emit their samples in loop order). For
    /// `n >= 3` membership is not derivable from a point cloud and no
    /// predicate is attached.
    pub fn from_csv(path: impl AsRef<Path>) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(true)
            .trim(csv::Trim::All)
            .from_path(path.as_ref())?;

        let headers = reader.headers()?.clone();
        let dim = headers.len();
        if dim < 2 {
            return Err(Error::BoundaryFormat(format!(
                "need at least two coordinate columns, found {dim}"
            )));
        }
        for (i, name) in headers.iter().enumerate() {
            let expected = format!("x{}", i + 1);
            if name != expected {
                return Err(Error::BoundaryFormat(format!(
                    "header column {} is {name:?}, expected {expected:?}",
                    i + 1
                )));
            }
        }

        let mut boundary = Vec::new();
        for (row, record) in reader.records().enumerate() {
            let record = record?;
            if record.len() != dim {
                return Err(Error::BoundaryFormat(format!(
                    "row {} has {} fields, expected {dim}",
                    row + 2,
                    record.len()
                )));
            }
            let coords = record
                .iter()
                .map(|f| {
                    f.parse::<f64>().map_err(|_| {
                        Error::BoundaryFormat(format!(
                            "row {}: {f:?} is not a number",
                            row + 2
                        ))
                    })
                })
                .collect::<Result<Vec<f64>>>()?;
            boundary.push(Point::new(coords)?);
        }

        let mut domain = Self::from_points(boundary)?;
        if dim == 2 {
            let loop_points: Vec<(f64, f64)> = domain
                .boundary
                .iter()
                .map(|p| (p.coords()[0], p.coords()[1]))
                .collect();
            domain.contains = Some(Arc::new(move |p| {
                point_in_loop(p[0], p[1], &loop_points)
            }));
        }
        Ok(domain)
    }
}

fn check_shape(ok: bool, msg: &str, count: usize) -> Result<()> {
    if !ok {
        return Err(Error::OutOfRange(msg.into()));
    }
    if count < 16 {
        return Err(Error::OutOfRange(format!(
            "need at least 16 boundary samples, got {count}"
        )));
    }
    Ok(())
}

fn angle_of(k: usize, count: usize) -> f64 {
    2.0 * std::f64::consts::PI * k as f64 / count as f64
}

fn max_pairwise_distance(points: &[Point]) -> f64 {
    let mut best = 0.0f64;
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            best = best.max(p.dist(q));
        }
    }
    best
}

/// Even-odd ray casting against a closed polyline.
fn point_in_loop(px: f64, py: f64, pts: &[(f64, f64)]) -> bool {
    let n = pts.len();
    if n < 3 {
        return false;
    }
    let mut inside = false;
    let mut j = n - 1;
    for i in 0..n {
        let (xi, yi) = pts[i];
        let (xj, yj) = pts[j];
        if (yi > py) != (yj > py) {
            let x_cross = xi + (py - yi) / (yj - yi) * (xj - xi);
            if px < x_cross {
                inside = !inside;
            }
        }
        j = i;
    }
    inside
}

/// Distance from `x` to the domain boundary: `1 - |x|` for the unit ball,
/// the minimum distance to a boundary sample otherwise.
pub fn boundary_distance(domain: &DomainSpec, x: &Point) -> Result<f64> {
    domain.check_contains(x)?;
    match domain {
        DomainSpec::UnitBall { .. } => Ok(1.0 - x.norm()),
        DomainSpec::Sampled(s) => Ok(s
            .boundary
            .iter()
            .map(|z| x.dist(z))
            .fold(f64::INFINITY, f64::min)),
    }
}
