//! Metrics of the unit ball.
//!
//! For `x, y` in `B^n`:
//!
//! * hyperbolic metric: `th(rho/2) = |x-y| / sqrt(|x-y|^2 + (1-|x|^2)(1-|y|^2))`
//! * distance ratio metric: `j = log(1 + |x-y| / min(1-|x|, 1-|y|))`
//! * Cassinian metric: `c = sup_{|z|=1} |x-y| / (|x-z||z-y|)`
//! * triangular ratio metric: `s = sup_{|z|=1} |x-y| / (|x-z|+|z-y|)`, in `[0,1]`
//! * `chat`: the Cassinian quotient at the nearest boundary point of the
//!   point closer to the boundary; a lower bound for `c`.
//!
//! The suprema are computed in the plane spanned by `x` and `y`
//! (rotational symmetry), using closed forms where they exist: `x = 0`
//! and `y = -x` for the Cassinian metric, and the equal-modulus slice
//! `|x| = |y|` for the triangular ratio metric, where the extremal boundary
//! angle has an explicit two-branch formula.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{check_same_dim, plane_frame, Point};
use crate::optimize::minimize_on_circle;

/// Points whose moduli differ by at most this route to the equal-modulus
/// closed form of the triangular ratio metric.
pub const EQUAL_MODULUS_TOL: f64 = 1e-12;

/// How a metric value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Method {
    #[serde(rename = "closed-form")]
    ClosedForm,
    #[serde(rename = "optimized")]
    Optimized,
    #[serde(rename = "sampled")]
    Sampled,
}

/// A metric evaluation: the value, the boundary point attaining the
/// extremum (when the metric is a boundary extremum and `x != y`), and how
/// it was computed.
#[derive(Clone, Debug, Serialize)]
pub struct MetricValue {
    pub value: f64,
    pub witness: Option<Point>,
    pub method: Method,
}

impl MetricValue {
    fn zero() -> Self {
        MetricValue {
            value: 0.0,
            witness: None,
            method: Method::ClosedForm,
        }
    }
}

fn check_in_ball(x: &Point) -> Result<()> {
    if x.norm() >= 1.0 {
        return Err(Error::OutsideDomain);
    }
    Ok(())
}

fn check_pair(x: &Point, y: &Point) -> Result<()> {
    check_same_dim(x, y)?;
    check_in_ball(x)?;
    check_in_ball(y)
}

/// `1 - |x|^2`, computed as `(1 - |x|)(1 + |x|)` to stay accurate near the
/// boundary.
fn one_minus_norm_sq(n: f64) -> f64 {
    (1.0 - n) * (1.0 + n)
}

/// Hyperbolic distance of the unit ball,
/// `rho = 2 arth( |x-y| / sqrt(|x-y|^2 + (1-|x|^2)(1-|y|^2)) )`.
pub fn rho_ball(x: &Point, y: &Point) -> Result<f64> {
    check_pair(x, y)?;
    let d = x.dist(y);
    if d == 0.0 {
        return Ok(0.0);
    }
    let denom = (d * d + one_minus_norm_sq(x.norm()) * one_minus_norm_sq(y.norm())).sqrt();
    Ok(2.0 * (d / denom).atanh())
}

/// `sh(rho/2) = |x-y| / sqrt((1-|x|^2)(1-|y|^2))`.
pub fn sh_half_rho(x: &Point, y: &Point) -> Result<f64> {
    check_pair(x, y)?;
    let d = x.dist(y);
    Ok(d / (one_minus_norm_sq(x.norm()) * one_minus_norm_sq(y.norm())).sqrt())
}

/// Distance ratio metric of the ball,
/// `j = log(1 + |x-y| / min(1-|x|, 1-|y|))`.
pub fn j_ball(x: &Point, y: &Point) -> Result<f64> {
    check_pair(x, y)?;
    let d = x.dist(y);
    let min_bd = (1.0 - x.norm()).min(1.0 - y.norm());
    Ok((d / min_bd).ln_1p())
}

/// Cassinian metric of the ball.
///
/// Closed forms: `c(0, y) = |y| / (1 - |y|)` with witness `y/|y|`, and
/// `c(x, -x) = 2|x| / (1 - |x|^2)` with witness `x/|x|`. Everything else is
/// a plane reduction followed by minimizing `|x-z||z-y|` over the circle.
pub fn cassinian_ball(x: &Point, y: &Point) -> Result<MetricValue> {
    check_pair(x, y)?;
    if x == y {
        return Ok(MetricValue::zero());
    }
    if x.is_zero() || y.is_zero() {
        let p = if x.is_zero() { y } else { x };
        let n = p.norm();
        return Ok(MetricValue {
            value: n / (1.0 - n),
            witness: Some(p.scaled(1.0 / n)),
            method: Method::ClosedForm,
        });
    }
    let antipodal = x
        .coords()
        .iter()
        .zip(y.coords())
        .all(|(a, b)| a + b == 0.0);
    if antipodal {
        let n = x.norm();
        return Ok(MetricValue {
            value: 2.0 * n / one_minus_norm_sq(n),
            witness: Some(x.scaled(1.0 / n)),
            method: Method::ClosedForm,
        });
    }

    let frame = plane_frame(x, y)?;
    // Scan form: |p - z|^2 = (1 + |p|^2) - 2 p.z, linear in (cos t, sin t).
    let (a1, bx1, by1) = scan_coeffs(&frame.pair.x2);
    let (a2, bx2, by2) = scan_coeffs(&frame.pair.y2);
    let prod_sq = move |c: f64, s: f64| {
        let d1 = (a1 - bx1 * c - by1 * s).max(0.0);
        let d2 = (a2 - bx2 * c - by2 * s).max(0.0);
        d1 * d2
    };
    let to_x = circle_gap_sq(x.norm(), 0.0);
    let to_y = circle_gap_sq(y.norm(), frame.pair.omega);
    // |d/dtheta (|x-z||z-y|)| <= |x-z| + |z-y| <= 4 on the circle.
    let min = minimize_on_circle(
        prod_sq,
        move |t| (to_x(t) * to_y(t)).sqrt(),
        8.0,
    );
    Ok(MetricValue {
        value: x.dist(y) / min.value,
        witness: Some(frame.lift_angle(min.theta)),
        method: Method::Optimized,
    })
}

/// Squared distance from the boundary point `e^{i theta}` to the point at
/// radius `r`, angle `theta_p`, as `(1-r)^2 + 4 r sin^2((theta-theta_p)/2)`.
///
/// The coordinate form `|p - z|^2` cancels catastrophically once the gap is
/// far below 1; this form is accurate at machine precision however close
/// `p` sits to the boundary, and it reuses the exact same `1 - |p|` the
/// closed-form paths are built from.
fn circle_gap_sq(r: f64, theta_p: f64) -> impl Fn(f64) -> f64 {
    let base = (1.0 - r) * (1.0 - r);
    move |theta: f64| {
        let half = 0.5 * (theta - theta_p);
        let s = half.sin();
        base + 4.0 * r * s * s
    }
}

/// Triangular ratio metric of the ball, always in `[0, 1]`.
///
/// On the equal-modulus slice `|x| = |y|` the value has a closed form
/// (`|x|` once `cos(omega/2) < |x|`, an explicit quotient otherwise) with
/// the extremal angle from [`s_extremal_angle`]. Other pairs are handled by
/// plane reduction and minimizing `|x-z| + |z-y|` over the circle.
pub fn s_ball(x: &Point, y: &Point) -> Result<MetricValue> {
    check_pair(x, y)?;
    if x == y {
        return Ok(MetricValue::zero());
    }
    let (nx, ny) = (x.norm(), y.norm());
    let frame = plane_frame(x, y)?;
    let omega = frame.pair.omega;
    if (nx - ny).abs() <= EQUAL_MODULUS_TOL && omega > 0.0 {
        let r = nx;
        let half = 0.5 * omega;
        let value = if half.cos() < r {
            r
        } else {
            r * half.sin() / (1.0 + r * r - 2.0 * r * half.cos()).sqrt()
        };
        let angles = s_extremal_angle(r, omega)?;
        return Ok(MetricValue {
            value: value.min(1.0),
            witness: Some(frame.lift_angle(angles.theta)),
            method: Method::ClosedForm,
        });
    }
    s_ball_optimized(x, y, &frame)
}

/// Optimized-path evaluation of the triangular ratio metric; also used to
/// cross-check the closed form on the equal-modulus slice.
fn s_ball_optimized(
    x: &Point,
    y: &Point,
    frame: &crate::geometry::PlaneFrame,
) -> Result<MetricValue> {
    let (a1, bx1, by1) = scan_coeffs(&frame.pair.x2);
    let (a2, bx2, by2) = scan_coeffs(&frame.pair.y2);
    let sum = move |c: f64, s: f64| {
        let d1 = (a1 - bx1 * c - by1 * s).max(0.0).sqrt();
        let d2 = (a2 - bx2 * c - by2 * s).max(0.0).sqrt();
        d1 + d2
    };
    let to_x = circle_gap_sq(x.norm(), 0.0);
    let to_y = circle_gap_sq(y.norm(), frame.pair.omega);
    // The distance sum is 2-Lipschitz in the angle.
    let min = minimize_on_circle(
        sum,
        move |t| to_x(t).sqrt() + to_y(t).sqrt(),
        4.0,
    );
    Ok(MetricValue {
        value: (x.dist(y) / min.value).min(1.0),
        witness: Some(frame.lift_angle(min.theta)),
        method: Method::Optimized,
    })
}

/// `chat`: with `p` the point closer to the boundary (ties go to `x`) and
/// `z = p/|p|` its nearest boundary point,
/// `chat(x, y) = |x-y| / ((1-|p|) |z-q|)` where `q` is the other point.
pub fn hat_c_ball(x: &Point, y: &Point) -> Result<MetricValue> {
    check_pair(x, y)?;
    if x == y {
        return Ok(MetricValue::zero());
    }
    let (p, q) = if 1.0 - x.norm() <= 1.0 - y.norm() {
        (x, y)
    } else {
        (y, x)
    };
    // |p| >= |q| and x != y, so p is nonzero and z is unique.
    let np = p.norm();
    let z = p.scaled(1.0 / np);
    Ok(MetricValue {
        value: x.dist(y) / ((1.0 - np) * z.dist(q)),
        witness: Some(z),
        method: Method::ClosedForm,
    })
}

/// Extremal boundary angles for the equal-modulus triangular ratio
/// configuration `x = (r, 0)`, `y = r e^{i omega}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SExtremalAngles {
    /// True when the extremum sits on the angle bisector (single tangency
    /// point of the focal ellipse).
    pub bisector: bool,
    /// The extremal angle: `omega/2` on the bisector branch, otherwise the
    /// smaller of the two symmetric solutions.
    pub theta: f64,
    /// The second solution on the two-point branch; reflection of `theta`
    /// about `omega/2`, attaining the same distance sum.
    pub theta_alt: Option<f64>,
}

/// Where the supremum of the triangular ratio is attained for `x = (r, 0)`,
/// `y = r e^{i omega}`.
///
/// With `q = sin((pi - omega)/2) = cos(omega/2)`: if `q >= r` the extremum
/// is at `theta = omega/2`; otherwise it splits into the symmetric pair
/// `theta = (omega - pi)/2 + arcsin(q/r)` and
/// `theta = (pi + omega)/2 - arcsin(q/r)`.
pub fn s_extremal_angle(r: f64, omega: f64) -> Result<SExtremalAngles> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::OutOfRange(format!("r must lie in (0,1), got {r}")));
    }
    if !(omega > 0.0 && omega <= std::f64::consts::PI) {
        return Err(Error::OutOfRange(format!(
            "omega must lie in (0, pi], got {omega}"
        )));
    }
    let q = (0.5 * (std::f64::consts::PI - omega)).sin();
    if q >= r {
        Ok(SExtremalAngles {
            bisector: true,
            theta: 0.5 * omega,
            theta_alt: None,
        })
    } else {
        let d = (q / r).asin();
        Ok(SExtremalAngles {
            bisector: false,
            theta: 0.5 * (omega - std::f64::consts::PI) + d,
            theta_alt: Some(0.5 * (std::f64::consts::PI + omega) - d),
        })
    }
}

/// Certificate for the off-bisector tangency point of the equal-modulus
/// configuration.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct TangencyCertificate {
    /// The angle at `z` between the rays towards `y`/`x` and the origin
    /// (average of the two, which coincide at the tangency point).
    pub gamma: f64,
    /// `cos(gamma) - (|x-z| + |y-z|)/2`; vanishes at the tangency point.
    pub cos_residual: f64,
    /// `|y-z||x| + |y||x-z| - |x-y|`; vanishes exactly when `0, x, z, y`
    /// are concyclic (Ptolemy).
    pub ptolemy_residual: f64,
}

/// Evaluates the two tangency identities at a boundary point `z` for an
/// equal-modulus pair. Both residuals vanish (to roundoff) at the extremal
/// tangency point of the off-bisector branch.
pub fn tangency_certificate(x: &Point, y: &Point, z: &Point) -> Result<TangencyCertificate> {
    check_pair(x, y)?;
    check_same_dim(x, z)?;
    if (z.norm() - 1.0).abs() > 1e-9 {
        return Err(Error::OutOfRange("z must lie on the unit sphere".into()));
    }
    if (x.norm() - y.norm()).abs() > 1e-9 {
        return Err(Error::OutOfRange("|x| and |y| must agree".into()));
    }
    if x == y {
        return Err(Error::OutOfRange("x and y must differ".into()));
    }
    let to_origin = z.neg();
    let g1 = crate::geometry::angle_between(&y.sub(z), &to_origin)?;
    let g2 = crate::geometry::angle_between(&to_origin, &x.sub(z))?;
    let gamma = 0.5 * (g1 + g2);
    let cos_residual = gamma.cos() - 0.5 * (x.dist(z) + y.dist(z));
    let ptolemy_residual = y.dist(z) * x.norm() + y.norm() * x.dist(z) - x.dist(y);
    Ok(TangencyCertificate {
        gamma,
        cos_residual,
        ptolemy_residual,
    })
}

/// Coefficients of `|p - z(t)|^2 = a - bx cos t - by sin t` on `|z| = 1`.
fn scan_coeffs(p: &Point) -> (f64, f64, f64) {
    let c = p.coords();
    (1.0 + c[0] * c[0] + c[1] * c[1], 2.0 * c[0], 2.0 * c[1])
}
