//! Points, angles and the plane reduction.
//!
//! Everything downstream works on Euclidean points of dimension `n >= 2`.
//! The key operation here is [`reduce_to_plane`]: for the unit ball all
//! boundary-extremum metrics depend on `x` and `y` only through `|x|`, `|y|`
//! and the angle `omega` between them, so the n-dimensional extremum problem
//! collapses to a problem in the plane spanned by `x` and `y`.

use serde::Serialize;

use crate::error::{Error, Result};

/// A point of `R^n`, `n >= 2`, with finite coordinates.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Point {
    coords: Vec<f64>,
}

impl Point {
    /// Builds a point, rejecting dimension < 2 and non-finite coordinates.
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::OutOfRange(format!(
                "point dimension must be >= 2, got {}",
                coords.len()
            )));
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::OutOfRange(
                "point coordinates must be finite".into(),
            ));
        }
        Ok(Self { coords })
    }

    /// Planar point `(x, y)`.
    pub fn xy(x: f64, y: f64) -> Self {
        Self { coords: vec![x, y] }
    }

    /// The origin of `R^dim`.
    pub fn origin(dim: usize) -> Self {
        Self {
            coords: vec![0.0; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// Euclidean norm `|x|`.
    pub fn norm(&self) -> f64 {
        self.coords.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn dot(&self, other: &Point) -> f64 {
        assert_eq!(self.dim(), other.dim(), "dot: dimension mismatch");
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Euclidean distance `|x - y|`.
    pub fn dist(&self, other: &Point) -> f64 {
        assert_eq!(self.dim(), other.dim(), "dist: dimension mismatch");
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }

    pub fn scaled(&self, t: f64) -> Point {
        Point {
            coords: self.coords.iter().map(|c| c * t).collect(),
        }
    }

    pub fn neg(&self) -> Point {
        self.scaled(-1.0)
    }

    pub fn sub(&self, other: &Point) -> Point {
        assert_eq!(self.dim(), other.dim(), "sub: dimension mismatch");
        Point {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| *c == 0.0)
    }

    pub(crate) fn from_vec(coords: Vec<f64>) -> Self {
        debug_assert!(coords.len() >= 2);
        Self { coords }
    }
}

/// Requires `x` and `y` to live in the same space.
pub(crate) fn check_same_dim(x: &Point, y: &Point) -> Result<()> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            got: y.dim(),
        });
    }
    Ok(())
}

/// The planar configuration equivalent to a pair `(x, y)`:
/// `x2 = (|x|, 0)`, `y2 = (|y| cos omega, |y| sin omega)` with
/// `omega` the angle at the origin between `x` and `y`.
#[derive(Clone, Debug, PartialEq)]
pub struct PlanePair {
    pub x2: Point,
    pub y2: Point,
    /// Angle in `[0, pi]` between the two position vectors.
    pub omega: f64,
    /// Set when `x = y = 0`, where no plane is determined.
    pub degenerate: bool,
}

/// Orthonormal frame of the plane spanned by `x` and `y`, kept so that a
/// planar extremal point can be lifted back to the original space.
#[derive(Clone, Debug)]
pub(crate) struct PlaneFrame {
    pub pair: PlanePair,
    basis: Option<(Vec<f64>, Vec<f64>)>,
    dim: usize,
}

impl PlaneFrame {
    /// Maps the planar unit-circle point `e^{i theta}` back to the original
    /// space: `cos(theta) u + sin(theta) v`.
    pub fn lift_angle(&self, theta: f64) -> Point {
        let (s, c) = theta.sin_cos();
        match &self.basis {
            Some((u, v)) => Point::from_vec(
                u.iter().zip(v).map(|(ui, vi)| c * ui + s * vi).collect(),
            ),
            // No direction information at all: fall back to the first
            // coordinate plane.
            None => {
                let mut coords = vec![0.0; self.dim];
                coords[0] = c;
                coords[1] = s;
                Point::from_vec(coords)
            }
        }
    }
}

/// Angle `angle(x, 0, y)` in `[0, pi]` between two nonzero vectors,
/// `arccos` of the normalized inner product with the argument clamped to
/// `[-1, 1]` to absorb roundoff.
pub fn angle_between(x: &Point, y: &Point) -> Result<f64> {
    check_same_dim(x, y)?;
    let (nx, ny) = (x.norm(), y.norm());
    if nx == 0.0 || ny == 0.0 {
        return Err(Error::ZeroVector);
    }
    let cos = (x.dot(y) / (nx * ny)).clamp(-1.0, 1.0);
    Ok(cos.acos())
}

/// Reduces a pair of points of `B^n` to the equivalent planar configuration.
///
/// The reduction preserves `|x|`, `|y|`, `|x - y|` and the angle `omega`;
/// all four ball metrics are invariant under it. For `x = y = 0` the result
/// is the degenerate pair `(0,0), (0,0)`.
pub fn reduce_to_plane(x: &Point, y: &Point) -> Result<PlanePair> {
    Ok(plane_frame(x, y)?.pair)
}

/// Internal form of [`reduce_to_plane`] that also carries the orthonormal
/// basis of the spanned plane.
pub(crate) fn plane_frame(x: &Point, y: &Point) -> Result<PlaneFrame> {
    check_same_dim(x, y)?;
    let dim = x.dim();
    let (nx, ny) = (x.norm(), y.norm());

    if nx == 0.0 && ny == 0.0 {
        return Ok(PlaneFrame {
            pair: PlanePair {
                x2: Point::xy(0.0, 0.0),
                y2: Point::xy(0.0, 0.0),
                omega: 0.0,
                degenerate: true,
            },
            basis: None,
            dim,
        });
    }

    // Unit vector along the first nonzero point; the second basis vector is
    // the Gram-Schmidt remainder of the other point (re-orthogonalized once
    // for near-parallel pairs), with a coordinate-axis fallback when the
    // points are collinear.
    let primary = if nx > 0.0 { x } else { y };
    let np = primary.norm();
    let u: Vec<f64> = primary.coords().iter().map(|c| c / np).collect();

    let other = if nx > 0.0 { y } else { x };
    let proj: f64 = other.coords().iter().zip(&u).map(|(a, b)| a * b).sum();
    let mut w: Vec<f64> = other
        .coords()
        .iter()
        .zip(&u)
        .map(|(a, b)| a - proj * b)
        .collect();
    let mut nw = w.iter().map(|c| c * c).sum::<f64>().sqrt();
    if nw > 1e-12 * other.norm().max(1.0) {
        let corr: f64 = w.iter().zip(&u).map(|(a, b)| a * b).sum();
        for (wi, ui) in w.iter_mut().zip(&u) {
            *wi -= corr * ui;
        }
        nw = w.iter().map(|c| c * c).sum::<f64>().sqrt();
    } else {
        // Collinear pair: any unit vector orthogonal to u completes the
        // frame. Take the axis where u is smallest and orthogonalize.
        let k = u
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.abs().total_cmp(&b.1.abs()))
            .map(|(i, _)| i)
            .unwrap();
        w = vec![0.0; dim];
        w[k] = 1.0;
        let corr: f64 = u[k];
        for (wi, ui) in w.iter_mut().zip(&u) {
            *wi -= corr * ui;
        }
        nw = w.iter().map(|c| c * c).sum::<f64>().sqrt();
    }
    let v: Vec<f64> = w.iter().map(|c| c / nw).collect();

    // Coordinates of x and y in the (u, v) frame. The primary point sits on
    // the positive u-axis, the other one in the closed upper half-plane.
    let ou: f64 = other.coords().iter().zip(&u).map(|(a, b)| a * b).sum();
    let ov: f64 = other.coords().iter().zip(&v).map(|(a, b)| a * b).sum::<f64>().max(0.0);
    let omega = if other.norm() == 0.0 {
        0.0
    } else {
        ov.atan2(ou)
    };

    let (x2, y2) = if nx > 0.0 {
        (Point::xy(nx, 0.0), Point::xy(ou, ov))
    } else {
        // x was zero: it stays at the origin, y defines the axis.
        (Point::xy(0.0, 0.0), Point::xy(ny, 0.0))
    };

    Ok(PlaneFrame {
        pair: PlanePair {
            x2,
            y2,
            omega,
            degenerate: false,
        },
        basis: Some((u, v)),
        dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const PI: f64 = std::f64::consts::PI;

    fn p(coords: &[f64]) -> Point {
        Point::new(coords.to_vec()).unwrap()
    }

    #[test]
    fn angle_orthogonal() {
        let a = angle_between(&p(&[0.5, 0.0]), &p(&[0.0, 0.5])).unwrap();
        assert!((a - PI / 2.0).abs() < 1e-15);
    }

    #[test]
    fn angle_identical_direction() {
        let a = angle_between(&p(&[0.5, 0.0]), &p(&[0.5, 0.0])).unwrap();
        assert_eq!(a, 0.0);
    }

    #[test]
    fn angle_antipodal() {
        let a = angle_between(&p(&[0.3, 0.4]), &p(&[-0.3, -0.4])).unwrap();
        assert!((a - PI).abs() < 1e-7);
    }

    #[test]
    fn angle_zero_vector_rejected() {
        assert!(matches!(
            angle_between(&p(&[0.0, 0.0]), &p(&[0.1, 0.0])),
            Err(Error::ZeroVector)
        ));
    }

    #[test]
    fn point_validation() {
        assert!(Point::new(vec![1.0]).is_err());
        assert!(Point::new(vec![f64::NAN, 0.0]).is_err());
        assert!(Point::new(vec![0.1, 0.2, 0.3]).is_ok());
    }

    #[test]
    fn reduce_already_planar() {
        let pp = reduce_to_plane(&p(&[0.5, 0.0, 0.0]), &p(&[0.0, 0.5, 0.0])).unwrap();
        assert!((pp.x2.coords()[0] - 0.5).abs() < 1e-15);
        assert!(pp.x2.coords()[1].abs() < 1e-15);
        assert!(pp.y2.coords()[0].abs() < 1e-15);
        assert!((pp.y2.coords()[1] - 0.5).abs() < 1e-15);
        assert!(!pp.degenerate);
    }

    #[test]
    fn reduce_three_dim_orthogonal() {
        // |x| = |y| = 0.5, omega = pi/2 by direct inner product.
        let pp = reduce_to_plane(&p(&[0.3, 0.4, 0.0]), &p(&[0.0, 0.0, 0.5])).unwrap();
        assert!((pp.x2.norm() - 0.5).abs() < 1e-14);
        assert!((pp.y2.norm() - 0.5).abs() < 1e-14);
        assert!((pp.omega - PI / 2.0).abs() < 1e-14);
    }

    #[test]
    fn reduce_origin_preserved() {
        let pp = reduce_to_plane(&p(&[0.2, 0.0]), &p(&[0.0, 0.0])).unwrap();
        assert_eq!(pp.x2, Point::xy(0.2, 0.0));
        assert_eq!(pp.y2, Point::xy(0.0, 0.0));
        assert!(!pp.degenerate);
    }

    #[test]
    fn reduce_both_zero_degenerate() {
        let pp = reduce_to_plane(&p(&[0.0, 0.0]), &p(&[0.0, 0.0])).unwrap();
        assert!(pp.degenerate);
        assert!(pp.x2.is_zero() && pp.y2.is_zero());
    }

    #[test]
    fn lift_angle_is_on_unit_sphere() {
        let frame = plane_frame(&p(&[0.3, 0.1, -0.2]), &p(&[-0.1, 0.4, 0.2])).unwrap();
        for k in 0..16 {
            let z = frame.lift_angle(2.0 * PI * k as f64 / 16.0);
            assert!((z.norm() - 1.0).abs() < 1e-14);
        }
    }

    proptest! {
        #[test]
        fn reduction_preserves_norms_and_gap(
            xs in proptest::collection::vec(-0.6f64..0.6, 2..5),
            ys in proptest::collection::vec(-0.6f64..0.6, 2..5),
        ) {
            let dim = xs.len().min(ys.len());
            let x = p(&xs[..dim]);
            let y = p(&ys[..dim]);
            let pp = reduce_to_plane(&x, &y).unwrap();
            prop_assert!((pp.x2.norm() - x.norm()).abs() < 1e-12);
            prop_assert!((pp.y2.norm() - y.norm()).abs() < 1e-12);
            prop_assert!((pp.x2.dist(&pp.y2) - x.dist(&y)).abs() < 1e-12);
        }

        #[test]
        fn angle_symmetric(
            xs in proptest::collection::vec(-0.9f64..0.9, 3),
            ys in proptest::collection::vec(-0.9f64..0.9, 3),
        ) {
            let x = p(&xs);
            let y = p(&ys);
            prop_assume!(x.norm() > 1e-3 && y.norm() > 1e-3);
            let a = angle_between(&x, &y).unwrap();
            let b = angle_between(&y, &x).unwrap();
            prop_assert!((a - b).abs() < 1e-15);
            prop_assert!((0.0..=PI).contains(&a));
        }

        #[test]
        fn reduction_omega_matches_angle(
            xs in proptest::collection::vec(-0.6f64..0.6, 3),
            ys in proptest::collection::vec(-0.6f64..0.6, 3),
        ) {
            let x = p(&xs);
            let y = p(&ys);
            prop_assume!(x.norm() > 1e-3 && y.norm() > 1e-3);
            let ang = angle_between(&x, &y).unwrap();
            prop_assume!(ang > 0.05 && ang < PI - 0.05);
            let pp = reduce_to_plane(&x, &y).unwrap();
            prop_assert!((pp.omega - ang).abs() < 1e-10);
        }
    }
}
