//! Sharp constants, the inequality registry, and brute-force oracles.
//!
//! The registry pairs every inequality with a seeded randomized
//! verification harness: pairs are drawn by rejection sampling (per-index
//! ChaCha streams, so reports do not depend on evaluation order), both
//! sides are evaluated through the library's fast paths, and violations,
//! the worst margin and the tightest observed ratio are reported.
//!
//! [`brute_force_extremum`] is the independent oracle for the two
//! boundary-extremum metrics: a dense angular grid plus golden-section
//! refinement, deliberately sharing no code with the optimizer behind
//! `cassinian_ball` / `s_ball`.

use std::sync::OnceLock;

use serde::Serialize;

use crate::ball::{cassinian_ball, hat_c_ball, j_ball, rho_ball, s_ball, sh_half_rho, Method, MetricValue};
use crate::domain::{DomainSpec, SampledDomain};
use crate::error::{Error, Result};
use crate::geometry::{plane_frame, Point};
use crate::sampling;

/// Solution of the sharp-constant equation: the root `alpha`, the constant
/// `a = m(alpha)`, and the equation residual at the root.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SharpConstants {
    pub alpha: f64,
    pub a: f64,
    pub residual: f64,
}

/// `m(t) = log((1+t)/(1-t)) / log((1+2t-t^2)/(1-t^2))` on `(0, 1)`.
///
/// Both quotient arguments are `1 + 2t/(1-t)` and `1 + 2t/(1-t^2)`, so the
/// evaluation goes through `log1p` and stays accurate at the endpoints,
/// where `m` tends to 1 from above (`m(t) = 1 + t + O(t^2)` as `t -> 0`).
pub fn m_function(t: f64) -> Result<f64> {
    if !(t > 0.0 && t < 1.0) {
        return Err(Error::OutOfRange(format!(
            "m is defined on (0,1), got {t}"
        )));
    }
    let num = (2.0 * t / (1.0 - t)).ln_1p();
    let den = (2.0 * t / ((1.0 - t) * (1.0 + t))).ln_1p();
    Ok(num / den)
}

fn sharp_equation(t: f64) -> f64 {
    (1.0 + t * t) * ((1.0 + t) / (1.0 - t)).ln()
        + (t * t - 2.0 * t - 1.0) * ((1.0 + 2.0 * t - t * t) / (1.0 - t * t)).ln()
}

/// Solves `(1+t^2) log((1+t)/(1-t)) + (t^2-2t-1) log((1+2t-t^2)/(1-t^2)) = 0`
/// on `(0, 1)` by bracketing bisection plus secant polish.
///
/// The root is `alpha ~ 0.6564` and the constant `a = m(alpha) ~ 1.3152`.
pub fn solve_alpha() -> Result<SharpConstants> {
    let (mut lo, mut hi) = (0.1f64, 0.9f64);
    let (flo, fhi) = (sharp_equation(lo), sharp_equation(hi));
    if flo.signum() == fhi.signum() {
        return Err(Error::BracketFailure);
    }
    let rising = fhi > 0.0;
    while hi - lo > 1e-15 {
        let mid = 0.5 * (lo + hi);
        if (sharp_equation(mid) > 0.0) == rising {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let mut r0 = lo;
    let mut r1 = hi;
    let mut f0 = sharp_equation(r0);
    for _ in 0..2 {
        let f1 = sharp_equation(r1);
        if f1 == f0 {
            break;
        }
        let r2 = r1 - f1 * (r1 - r0) / (f1 - f0);
        r0 = r1;
        f0 = f1;
        r1 = r2;
    }
    let alpha = r1;
    Ok(SharpConstants {
        alpha,
        a: m_function(alpha)?,
        residual: sharp_equation(alpha),
    })
}

/// The sharp constant `a`, solved once and cached.
fn sharp_a() -> f64 {
    static A: OnceLock<f64> = OnceLock::new();
    *A.get_or_init(|| solve_alpha().expect("sign change is verified on [0.1, 0.9]").a)
}

/// The four monotone functions of the logarithm lemma.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lemma21Function {
    /// `f(x) = log(1+x)/x`, decreasing on `(0, inf)`.
    F,
    /// `g(x) = log(ax)/(a - 1/x)`, increasing on `(0, inf)`; `aux = a > 0`.
    G,
    /// `h(x) = log((1+x)/(1-x)) / (1/(1-x) - 1/(1+x))`, decreasing on `(0,1)`.
    H,
    /// `f(b) = log(1 + b/(1-x)) / log(1 + b/((1-x)(b+1-x)))`, increasing on
    /// `(0, 2)`; `aux = x` in `(0,1)`.
    Fb,
}

/// Evaluates one of the lemma functions at `arg` (with `aux` where the
/// function is a family).
pub fn lemma21_eval(which: Lemma21Function, arg: f64, aux: Option<f64>) -> Result<f64> {
    match which {
        Lemma21Function::F => {
            if !(arg > 0.0) {
                return Err(Error::OutOfRange(format!("f needs x > 0, got {arg}")));
            }
            Ok(arg.ln_1p() / arg)
        }
        Lemma21Function::G => {
            let a = aux.ok_or_else(|| Error::OutOfRange("g needs aux = a".into()))?;
            if !(a > 0.0) || !(arg > 0.0) {
                return Err(Error::OutOfRange(format!(
                    "g needs a > 0 and x > 0, got a={a}, x={arg}"
                )));
            }
            // g(x) = x log(u)/(u-1) with u = ax; log1p keeps the removable
            // singularity at u = 1 smooth.
            let d = a * arg - 1.0;
            if d == 0.0 {
                return Ok(arg);
            }
            Ok(arg * d.ln_1p() / d)
        }
        Lemma21Function::H => {
            if !(arg > 0.0 && arg < 1.0) {
                return Err(Error::OutOfRange(format!("h needs x in (0,1), got {arg}")));
            }
            let num = (2.0 * arg / (1.0 - arg)).ln_1p();
            Ok(num * (1.0 - arg) * (1.0 + arg) / (2.0 * arg))
        }
        Lemma21Function::Fb => {
            let x = aux.ok_or_else(|| Error::OutOfRange("fb needs aux = x".into()))?;
            if !(x > 0.0 && x < 1.0) || !(arg > 0.0 && arg < 2.0) {
                return Err(Error::OutOfRange(format!(
                    "fb needs x in (0,1) and b in (0,2), got x={x}, b={arg}"
                )));
            }
            let num = (arg / (1.0 - x)).ln_1p();
            let den = (arg / ((1.0 - x) * (arg + 1.0 - x))).ln_1p();
            Ok(num / den)
        }
    }
}

/// Outcome of a randomized verification run.
#[derive(Clone, Debug, Serialize)]
pub struct InequalityReport {
    pub name: String,
    #[serde(rename = "n")]
    pub dimension: usize,
    pub samples: usize,
    pub seed: u64,
    /// Slack below `-tolerance` counts as a violation.
    pub tolerance: f64,
    pub violations: usize,
    /// Smallest slack seen (most negative first; ties go to the lowest
    /// sample index).
    pub worst_margin: f64,
    /// Largest LHS/RHS quotient seen; 1 means the inequality is attained.
    pub max_ratio: f64,
    /// The pair attaining the worst margin.
    pub extremal_pair: (Point, Point),
}

type PairEval = fn(&Point, &Point) -> Result<(f64, f64)>;
type DomainEval = fn(&DomainSpec, &Point, &Point) -> Result<(f64, f64)>;

enum Entry {
    /// Pairs drawn uniformly from `B^n`.
    Ball(PairEval),
    /// Pairs drawn from a fixed planar sampled domain.
    Sampled {
        build: fn() -> SampledDomain,
        cube_half: f64,
        eval: DomainEval,
    },
}

struct InequalityDef {
    name: &'static str,
    /// Violation tolerance: 1e-9 for closed-form/optimized sides, 1e-6 when
    /// a side is a sampled-boundary extremum (sampled extrema are biased
    /// low).
    tolerance: f64,
    entry: Entry,
}

fn ratio(lhs: f64, rhs: f64) -> f64 {
    if rhs > 0.0 {
        lhs / rhs
    } else if lhs <= 0.0 {
        0.0
    } else {
        f64::INFINITY
    }
}

fn chain2(lhs: f64, mid: f64, rhs: f64) -> (f64, f64) {
    ((mid - lhs).min(rhs - mid), ratio(lhs, mid).max(ratio(mid, rhs)))
}

fn eval_th4_s_th2(x: &Point, y: &Point) -> Result<(f64, f64)> {
    let rho = rho_ball(x, y)?;
    let s = s_ball(x, y)?.value;
    Ok(chain2((rho / 4.0).tanh(), s, (rho / 2.0).tanh()))
}

fn eval_sh2_c(x: &Point, y: &Point) -> Result<(f64, f64)> {
    let lhs = sh_half_rho(x, y)?;
    let c = cassinian_ball(x, y)?.value;
    Ok((c - lhs, ratio(lhs, c)))
}

fn eval_j_rho_2j(x: &Point, y: &Point) -> Result<(f64, f64)> {
    let j = j_ball(x, y)?;
    let rho = rho_ball(x, y)?;
    Ok(chain2(j, rho, 2.0 * j))
}

fn eval_2s_c(x: &Point, y: &Point) -> Result<(f64, f64)> {
    let s = s_ball(x, y)?.value;
    let c = cassinian_ball(x, y)?.value;
    Ok((c - 2.0 * s, ratio(2.0 * s, c)))
}

fn eval_s_c_sqrt(x: &Point, y: &Point) -> Result<(f64, f64)> {
    let s = s_ball(x, y)?.value;
    let c = cassinian_ball(x, y)?.value;
    let rhs = c / (1.0 + c * c).sqrt();
    Ok((rhs - s, ratio(s, rhs)))
}

fn eval_j_chat_c(x: &Point, y: &Point) -> Result<(f64, f64)> {
    let j = j_ball(x, y)?;
    let chat = hat_c_ball(x, y)?.value;
    let c = cassinian_ball(x, y)?.value;
    Ok(chain2(j, chat, c))
}

fn eval_j_a_log(x: &Point, y: &Point) -> Result<(f64, f64)> {
    let j = j_ball(x, y)?;
    let c = cassinian_ball(x, y)?.value;
    let rhs = sharp_a() * c.ln_1p();
    Ok((rhs - j, ratio(j, rhs)))
}

fn eval_j_4arth(x: &Point, y: &Point) -> Result<(f64, f64)> {
    let j = j_ball(x, y)?;
    let c = cassinian_ball(x, y)?.value;
    // arth(c/2) blows up at c = 2; beyond it the bound is vacuous.
    let rhs = if c < 2.0 {
        4.0 * (c / 2.0).atanh()
    } else {
        f64::INFINITY
    };
    Ok((rhs - j, ratio(j, rhs)))
}

fn eval_jung(domain: &DomainSpec, x: &Point, y: &Point) -> Result<(f64, f64)> {
    let bound = crate::generic::jung_ratio_bound(domain)?;
    let c = crate::generic::cassinian_generic(domain, x, y)?.value;
    let s = crate::generic::s_generic(domain, x, y)?.value;
    Ok((c - bound * s, ratio(bound * s, c)))
}

fn eval_2s_c_domain(domain: &DomainSpec, x: &Point, y: &Point) -> Result<(f64, f64)> {
    let c = crate::generic::cassinian_generic(domain, x, y)?.value;
    let s = crate::generic::s_generic(domain, x, y)?.value;
    Ok((c - 2.0 * s, ratio(2.0 * s, c)))
}

fn build_square() -> SampledDomain {
    SampledDomain::square(1.0, 4096).expect("static shape parameters")
}

fn build_annulus() -> SampledDomain {
    SampledDomain::annulus(0.3, 0.9, 4096).expect("static shape parameters")
}

const CLOSED_FORM_TOL: f64 = 1e-9;
const SAMPLED_TOL: f64 = 1e-6;

static REGISTRY: &[InequalityDef] = &[
    InequalityDef {
        name: "th4_le_s_le_th2",
        tolerance: CLOSED_FORM_TOL,
        entry: Entry::Ball(eval_th4_s_th2),
    },
    InequalityDef {
        name: "sh2_le_c",
        tolerance: CLOSED_FORM_TOL,
        entry: Entry::Ball(eval_sh2_c),
    },
    InequalityDef {
        name: "j_le_rho_le_2j",
        tolerance: CLOSED_FORM_TOL,
        entry: Entry::Ball(eval_j_rho_2j),
    },
    InequalityDef {
        name: "2s_le_c",
        tolerance: CLOSED_FORM_TOL,
        entry: Entry::Ball(eval_2s_c),
    },
    InequalityDef {
        name: "s_le_c_over_sqrt1pc2",
        tolerance: CLOSED_FORM_TOL,
        entry: Entry::Ball(eval_s_c_sqrt),
    },
    InequalityDef {
        name: "j_le_chat_le_c",
        tolerance: CLOSED_FORM_TOL,
        entry: Entry::Ball(eval_j_chat_c),
    },
    InequalityDef {
        name: "j_le_a_log1pc",
        tolerance: CLOSED_FORM_TOL,
        entry: Entry::Ball(eval_j_a_log),
    },
    InequalityDef {
        name: "j_le_4arth_chalf",
        tolerance: CLOSED_FORM_TOL,
        entry: Entry::Ball(eval_j_4arth),
    },
    InequalityDef {
        name: "jung_square",
        tolerance: SAMPLED_TOL,
        entry: Entry::Sampled {
            build: build_square,
            cube_half: 1.0,
            eval: eval_jung,
        },
    },
    InequalityDef {
        name: "2s_le_c_annulus",
        tolerance: SAMPLED_TOL,
        entry: Entry::Sampled {
            build: build_annulus,
            cube_half: 0.9,
            eval: eval_2s_c_domain,
        },
    },
];

/// Names of all registered inequalities, in registry order.
pub fn inequality_names() -> Vec<&'static str> {
    REGISTRY.iter().map(|d| d.name).collect()
}

/// Default violation tolerance of a registered inequality.
pub fn default_tolerance(name: &str) -> Result<f64> {
    REGISTRY
        .iter()
        .find(|d| d.name == name)
        .map(|d| d.tolerance)
        .ok_or_else(|| Error::UnknownName(name.into()))
}

/// Runs a registered inequality over `samples` seeded random pairs.
///
/// Identical arguments produce an identical report: pair `i` is a pure
/// function of `(seed, i)` and the aggregation breaks ties by lowest index.
pub fn verify_inequality(
    name: &str,
    n: usize,
    samples: usize,
    seed: u64,
    tolerance: Option<f64>,
) -> Result<InequalityReport> {
    let def = REGISTRY
        .iter()
        .find(|d| d.name == name)
        .ok_or_else(|| Error::UnknownName(name.into()))?;
    if n < 2 {
        return Err(Error::OutOfRange(format!("dimension must be >= 2, got {n}")));
    }
    if samples == 0 {
        return Err(Error::OutOfRange("need at least one sample".into()));
    }
    let tolerance = tolerance.unwrap_or(def.tolerance);

    let domain = match &def.entry {
        Entry::Ball(_) => None,
        Entry::Sampled { build, .. } => {
            if n != 2 {
                return Err(Error::OutOfRange(format!(
                    "{name} is registered on a planar domain; use --dim 2, got {n}"
                )));
            }
            Some(DomainSpec::Sampled(build()))
        }
    };

    let mut violations = 0usize;
    let mut worst_margin = f64::INFINITY;
    let mut max_ratio = f64::NEG_INFINITY;
    let mut extremal: Option<(Point, Point)> = None;

    for i in 0..samples {
        let (x, y) = match &def.entry {
            Entry::Ball(_) => sampling::ball_pair(seed, n, i as u64),
            Entry::Sampled { cube_half, .. } => {
                let dom = domain.as_ref().expect("built above");
                sampling::region_pair(seed, 2, *cube_half, i as u64, |p| dom.contains(p))
            }
        };
        let (slack, r) = match &def.entry {
            Entry::Ball(eval) => eval(&x, &y)?,
            Entry::Sampled { eval, .. } => eval(domain.as_ref().expect("built above"), &x, &y)?,
        };
        if slack < -tolerance {
            violations += 1;
        }
        if slack < worst_margin {
            worst_margin = slack;
            extremal = Some((x, y));
        }
        if r > max_ratio {
            max_ratio = r;
        }
    }

    let extremal_pair = extremal.expect("samples >= 1");
    Ok(InequalityReport {
        name: name.to_string(),
        dimension: n,
        samples,
        seed,
        tolerance,
        violations,
        worst_margin,
        max_ratio,
        extremal_pair,
    })
}

/// Which boundary-extremum metric the brute-force oracle evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleMetric {
    /// Cassinian: minimize `|x-z||z-y|` over the boundary circle.
    Cassinian,
    /// Triangular ratio: minimize `|x-z| + |z-y|`.
    Triangular,
}

/// Independent brute-force evaluation of the Cassinian or triangular ratio
/// metric of the ball: `grid` equally spaced circle angles (after plane
/// reduction for `n > 2`), then `refine_iters` golden-section steps around
/// every coarse local minimum.
pub fn brute_force_extremum(
    metric: OracleMetric,
    x: &Point,
    y: &Point,
    grid: usize,
    refine_iters: usize,
) -> Result<MetricValue> {
    crate::geometry::check_same_dim(x, y)?;
    if x.norm() >= 1.0 || y.norm() >= 1.0 {
        return Err(Error::OutsideDomain);
    }
    if grid < 16 {
        return Err(Error::OutOfRange(format!(
            "grid must have at least 16 angles, got {grid}"
        )));
    }
    if x == y {
        return Ok(MetricValue {
            value: 0.0,
            witness: None,
            method: Method::Sampled,
        });
    }

    let frame = plane_frame(x, y)?;
    let (ax, ay) = {
        let c = frame.pair.x2.coords();
        (c[0], c[1])
    };
    let (bx, by) = {
        let c = frame.pair.y2.coords();
        (c[0], c[1])
    };
    let denom = move |c: f64, s: f64| {
        let d1 = ((c - ax) * (c - ax) + (s - ay) * (s - ay)).sqrt();
        let d2 = ((c - bx) * (c - bx) + (s - by) * (s - by)).sqrt();
        match metric {
            OracleMetric::Cassinian => d1 * d2,
            OracleMetric::Triangular => d1 + d2,
        }
    };
    // Refinement evaluates distances in polar form,
    // |p - e^{i t}|^2 = (1-|p|)^2 + 4 |p| sin^2((t - arg p)/2),
    // which stays accurate for points hugging the boundary.
    let (r1, th1) = (x.norm(), ay.atan2(ax));
    let (r2, th2) = (y.norm(), by.atan2(bx));
    let refine_denom = move |t: f64| {
        let s1 = (0.5 * (t - th1)).sin();
        let s2 = (0.5 * (t - th2)).sin();
        let g1 = ((1.0 - r1) * (1.0 - r1) + 4.0 * r1 * s1 * s1).sqrt();
        let g2 = ((1.0 - r2) * (1.0 - r2) + 4.0 * r2 * s2 * s2).sqrt();
        match metric {
            OracleMetric::Cassinian => g1 * g2,
            OracleMetric::Triangular => g1 + g2,
        }
    };

    // Incremental rotation around the circle, renormalized periodically.
    let mut values = vec![0.0f64; grid];
    let h = 2.0 * std::f64::consts::PI / grid as f64;
    let (sh, ch) = h.sin_cos();
    let (mut cc, mut ss) = (1.0f64, 0.0f64);
    for (i, v) in values.iter_mut().enumerate() {
        *v = denom(cc, ss);
        let cn = cc * ch - ss * sh;
        let sn = ss * ch + cc * sh;
        cc = cn;
        ss = sn;
        if i % 1024 == 1023 {
            let norm = (cc * cc + ss * ss).sqrt();
            cc /= norm;
            ss /= norm;
        }
    }

    let mut candidates: Vec<(f64, usize)> = Vec::new();
    for i in 0..grid {
        let prev = values[(i + grid - 1) % grid];
        let next = values[(i + 1) % grid];
        if values[i] <= prev && values[i] <= next {
            candidates.push((values[i], i));
        }
    }
    candidates.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    candidates.truncate(8);

    let mut best_theta = f64::NAN;
    let mut best_value = f64::INFINITY;
    for &(_, i) in &candidates {
        let center = i as f64 * h;
        let (t, v) = oracle_golden(&refine_denom, center - h, center + h, refine_iters);
        let t = t.rem_euclid(2.0 * std::f64::consts::PI);
        let tie = 1e-12 * (1.0 + v.abs());
        if v < best_value - tie {
            best_value = v;
            best_theta = t;
        } else if v <= best_value + tie && t < best_theta {
            best_theta = t;
            best_value = best_value.min(v);
        }
    }

    let raw = x.dist(y) / best_value;
    Ok(MetricValue {
        value: match metric {
            OracleMetric::Cassinian => raw,
            OracleMetric::Triangular => raw.min(1.0),
        },
        witness: Some(frame.lift_angle(best_theta)),
        method: Method::Sampled,
    })
}

/// Golden-section minimizer local to the oracle path.
fn oracle_golden(f: &impl Fn(f64) -> f64, lo: f64, hi: f64, iters: usize) -> (f64, f64) {
    const RATIO: f64 = 0.381_966_011_250_105_1; // 2 - golden ratio
    let (mut a, mut b) = (lo, hi);
    let mut x1 = a + RATIO * (b - a);
    let mut x2 = b - RATIO * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..iters {
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = a + RATIO * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = b - RATIO * (b - a);
            f2 = f(x2);
        }
    }
    if f1 < f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Fixed internal seed for the equality-case probe.
const IMSZ_PROBE_SEED: u64 = 0x1507_2016;

/// Ratio sequences along the extremal families that certify sharpness.
///
/// * `two_sc`: `c(x,-x) / (2 s(x,-x))` at `x = t e1`, decreasing `t`; tends
///   to 1, so the constant 2 cannot be improved.
/// * `lambda_j_chat`, `lambda_j_c`: `j(x,0) / chat(x,0)` (resp. `c`),
///   which tends to 1 as `t -> 0`, so no factor `lambda < 1` works.
/// * `imsz_equality`: `sh(rho(x,-x)/2) / c(x,-x)` at seeded random `x`,
///   identically 1.
///
/// The geometric families run from `t = 1e-1` down to exactly `t = 1e-4`.
pub fn sharpness_probe(name: &str, steps: usize) -> Result<Vec<(f64, f64)>> {
    if steps == 0 {
        return Err(Error::OutOfRange("need at least one probe step".into()));
    }
    let family = |steps: usize| -> Vec<f64> {
        if steps == 1 {
            return vec![1e-4];
        }
        (0..steps)
            .map(|j| {
                if j == steps - 1 {
                    1e-4
                } else {
                    let e = -1.0 - 3.0 * j as f64 / (steps - 1) as f64;
                    10f64.powf(e)
                }
            })
            .collect()
    };
    match name {
        "two_sc" => family(steps)
            .into_iter()
            .map(|t| {
                let x = Point::xy(t, 0.0);
                let c = cassinian_ball(&x, &x.neg())?.value;
                let s = s_ball(&x, &x.neg())?.value;
                Ok((t, c / (2.0 * s)))
            })
            .collect(),
        "lambda_j_chat" | "lambda_j_c" => {
            let use_chat = name == "lambda_j_chat";
            family(steps)
                .into_iter()
                .map(|t| {
                    let x = Point::xy(t, 0.0);
                    let origin = Point::xy(0.0, 0.0);
                    let j = j_ball(&x, &origin)?;
                    let denom = if use_chat {
                        hat_c_ball(&x, &origin)?.value
                    } else {
                        cassinian_ball(&x, &origin)?.value
                    };
                    Ok((t, j / denom))
                })
                .collect()
        }
        "imsz_equality" => (0..steps)
            .map(|i| {
                let mut rng = sampling::stream_rng(IMSZ_PROBE_SEED, i as u64);
                let x = sampling::ball_point(&mut rng, 2, 1.0);
                let sh = sh_half_rho(&x, &x.neg())?;
                let c = cassinian_ball(&x, &x.neg())?.value;
                Ok((x.norm(), sh / c))
            })
            .collect(),
        other => Err(Error::UnknownName(other.into())),
    }
}

/// The geometric core of the `2s <= c` proof.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct CassinianProductBound {
    /// Brute-force `inf` of `|x-w||w-y|` over the boundary sphere.
    pub inf_product: f64,
    /// `1 - (|x-y|/2)^2`: the exact infimum for the centered pair with the
    /// same gap.
    pub centered_value: f64,
    /// `inf_product <= centered_value <= 1` within 1e-9.
    pub bound_holds: bool,
}

/// Evaluates `inf |x-w||w-y|` over the unit sphere by brute force (plane
/// reduction + dense scan) and compares it with the centered-pair value.
pub fn cassinian_product_bound(x: &Point, y: &Point) -> Result<CassinianProductBound> {
    crate::geometry::check_same_dim(x, y)?;
    if x.norm() >= 1.0 || y.norm() >= 1.0 {
        return Err(Error::OutsideDomain);
    }
    let frame = plane_frame(x, y)?;
    let (ax, ay) = {
        let c = frame.pair.x2.coords();
        (c[0], c[1])
    };
    let (bx, by) = {
        let c = frame.pair.y2.coords();
        (c[0], c[1])
    };
    let denom = move |t: f64| {
        let (s, c) = t.sin_cos();
        let d1 = ((c - ax) * (c - ax) + (s - ay) * (s - ay)).sqrt();
        let d2 = ((c - bx) * (c - bx) + (s - by) * (s - by)).sqrt();
        d1 * d2
    };
    const GRID: usize = 8192;
    let h = 2.0 * std::f64::consts::PI / GRID as f64;
    let mut best_i = 0usize;
    let mut best_v = f64::INFINITY;
    for i in 0..GRID {
        let v = denom(i as f64 * h);
        if v < best_v {
            best_v = v;
            best_i = i;
        }
    }
    let center = best_i as f64 * h;
    let (_, inf_product) = oracle_golden(&denom, center - h, center + h, 80);
    let inf_product = inf_product.min(best_v);

    let half_gap = 0.5 * x.dist(y);
    let centered_value = 1.0 - half_gap * half_gap;
    Ok(CassinianProductBound {
        inf_product,
        centered_value,
        bound_holds: inf_product <= centered_value + 1e-9 && centered_value <= 1.0 + 1e-9,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::to_json_string;

    fn p(coords: &[f64]) -> Point {
        Point::new(coords.to_vec()).unwrap()
    }

    fn assert_close(got: f64, want: f64, tol: f64, what: &str) {
        assert!(
            (got - want).abs() <= tol,
            "{what}: got {got}, want {want} (diff {})",
            (got - want).abs()
        );
    }

    #[test]
    fn m_at_half() {
        // log 3 / log(7/3).
        assert_close(
            m_function(0.5).unwrap(),
            1.2966069431192223,
            1e-14,
            "m(0.5)",
        );
    }

    #[test]
    fn m_limits() {
        assert_close(m_function(1e-9).unwrap(), 1.0, 1e-8, "m near 0");
        let near_one = m_function(1.0 - 1e-9).unwrap();
        assert!(near_one > 1.0 && near_one < 1.1, "m near 1: {near_one}");
        assert!(m_function(0.0).is_err());
        assert!(m_function(1.0).is_err());
    }

    #[test]
    fn solve_alpha_matches_oracle() {
        // Frozen from a 40-digit root solve of the sharp-constant equation.
        let sc = solve_alpha().unwrap();
        assert_close(sc.alpha, 0.65643076974379235, 1e-9, "alpha");
        assert_close(sc.a, 1.3152270607834449, 1e-9, "a");
        assert!(sc.residual.abs() <= 1e-12, "residual {}", sc.residual);
    }

    #[test]
    fn alpha_is_grid_argmax_of_m() {
        let sc = solve_alpha().unwrap();
        let n = 100_000;
        let mut best_t = 0.0;
        let mut best_v = 0.0;
        for i in 1..n {
            let t = 1e-6 + (1.0 - 2e-6) * i as f64 / n as f64;
            let v = m_function(t).unwrap();
            if v > best_v {
                best_v = v;
                best_t = t;
            }
        }
        assert!((best_t - sc.alpha).abs() < 2.0 / n as f64);
        assert!(sc.a >= best_v - 1e-12);
    }

    #[test]
    fn lemma21_values() {
        assert_close(
            lemma21_eval(Lemma21Function::F, 1.0, None).unwrap(),
            2.0f64.ln(),
            1e-15,
            "f(1)",
        );
        assert_close(
            lemma21_eval(Lemma21Function::H, 1e-6, None).unwrap(),
            1.0,
            1e-5,
            "h near 0",
        );
        // Removable singularity of g at x = 1/a.
        assert_close(
            lemma21_eval(Lemma21Function::G, 0.5, Some(2.0)).unwrap(),
            0.5,
            1e-12,
            "g at 1/a",
        );
        assert!(lemma21_eval(Lemma21Function::F, 0.0, None).is_err());
        assert!(lemma21_eval(Lemma21Function::G, 1.0, None).is_err());
        assert!(lemma21_eval(Lemma21Function::H, 1.5, None).is_err());
        assert!(lemma21_eval(Lemma21Function::Fb, 1.0, Some(1.5)).is_err());
    }

    #[test]
    fn lemma21_monotonicity() {
        let grid = |lo: f64, hi: f64, n: usize| -> Vec<f64> {
            (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
        };
        let mut prev = f64::INFINITY;
        for t in grid(1e-3, 50.0, 1000) {
            let v = lemma21_eval(Lemma21Function::F, t, None).unwrap();
            assert!(v < prev, "f not strictly decreasing at {t}");
            prev = v;
        }
        for &a in &[0.5, 2.0] {
            let mut prev = f64::NEG_INFINITY;
            for t in grid(1e-3, 50.0, 1000) {
                let v = lemma21_eval(Lemma21Function::G, t, Some(a)).unwrap();
                assert!(v > prev, "g not strictly increasing at {t} (a={a})");
                prev = v;
            }
        }
        let mut prev = f64::INFINITY;
        for t in grid(1e-6, 1.0 - 1e-6, 1000) {
            let v = lemma21_eval(Lemma21Function::H, t, None).unwrap();
            assert!(v < prev, "h not strictly decreasing at {t}");
            prev = v;
        }
        for &x in &[0.3, 0.7] {
            let mut prev = f64::NEG_INFINITY;
            for b in grid(1e-6, 2.0 - 1e-6, 1000) {
                let v = lemma21_eval(Lemma21Function::Fb, b, Some(x)).unwrap();
                assert!(v > prev, "fb not strictly increasing at {b} (x={x})");
                prev = v;
            }
        }
    }

    #[test]
    fn registry_runs_clean_at_small_scale() {
        for def in super::REGISTRY {
            let report = verify_inequality(def.name, 2, 500, 1, None).unwrap();
            assert_eq!(report.violations, 0, "{} violated: {report:?}", def.name);
            assert!(report.max_ratio <= 1.0 + 1e-9, "{}", def.name);
            if matches!(def.entry, Entry::Ball(_)) {
                let report = verify_inequality(def.name, 3, 300, 2, None).unwrap();
                assert_eq!(report.violations, 0, "{} violated in B^3", def.name);
            }
        }
    }

    #[test]
    fn verify_is_reproducible() {
        let a = verify_inequality("2s_le_c", 2, 400, 9, None).unwrap();
        let b = verify_inequality("2s_le_c", 2, 400, 9, None).unwrap();
        assert_eq!(to_json_string(&a), to_json_string(&b));
    }

    #[test]
    fn verify_rejects_bad_input() {
        assert!(matches!(
            verify_inequality("no_such", 2, 10, 1, None),
            Err(Error::UnknownName(_))
        ));
        assert!(verify_inequality("2s_le_c", 1, 10, 1, None).is_err());
        assert!(verify_inequality("2s_le_c", 2, 0, 1, None).is_err());
        assert!(verify_inequality("jung_square", 3, 10, 1, None).is_err());
    }

    #[test]
    fn report_json_shape_is_stable() {
        let report = verify_inequality("j_le_rho_le_2j", 2, 3, 42, Some(1e-9)).unwrap();
        let json = to_json_string(&report);
        assert!(json.starts_with(r#"{"name":"j_le_rho_le_2j","n":2,"samples":3,"seed":42,"tolerance":1e-09,"#));
        assert!(json.contains(r#""violations":0"#));
        assert!(json.contains(r#""extremal_pair":[["#));
    }

    #[test]
    fn oracle_matches_closed_forms() {
        // Antipodal Cassinian: 2t/(1-t^2).
        for &t in &[0.2, 0.5, 0.8] {
            let x = p(&[t, 0.0]);
            let m = brute_force_extremum(OracleMetric::Cassinian, &x, &x.neg(), 4096, 64).unwrap();
            assert_close(m.value, 2.0 * t / (1.0 - t * t), 1e-8, "oracle c antipodal");
            assert_eq!(m.method, Method::Sampled);
        }
        // Conjugate-pair triangular ratio: the closed-form slice.
        let m = brute_force_extremum(
            OracleMetric::Triangular,
            &p(&[0.3, 0.4]),
            &p(&[0.3, -0.4]),
            4096,
            64,
        )
        .unwrap();
        assert_close(m.value, 0.4 / 0.65f64.sqrt(), 1e-8, "oracle s conjugate");
    }

    #[test]
    fn oracle_cross_checks_fast_paths() {
        let mut state = 0xFEEDu64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
        };
        let mut done = 0;
        while done < 50 {
            let x = p(&[0.95 * next(), 0.95 * next()]);
            let y = p(&[0.95 * next(), 0.95 * next()]);
            if x.norm() >= 1.0 || y.norm() >= 1.0 || x == y {
                continue;
            }
            done += 1;
            let c_fast = cassinian_ball(&x, &y).unwrap().value;
            let c_brute = brute_force_extremum(OracleMetric::Cassinian, &x, &y, 8192, 64)
                .unwrap()
                .value;
            assert_close(c_brute, c_fast, 1e-8 * (1.0 + c_fast), "c vs oracle");
            let s_fast = s_ball(&x, &y).unwrap().value;
            let s_brute = brute_force_extremum(OracleMetric::Triangular, &x, &y, 8192, 64)
                .unwrap()
                .value;
            assert_close(s_brute, s_fast, 1e-8, "s vs oracle");
        }
    }

    #[test]
    fn oracle_guards() {
        let x = p(&[0.1, 0.1]);
        assert!(brute_force_extremum(OracleMetric::Cassinian, &x, &x, 4096, 64)
            .unwrap()
            .value
            == 0.0);
        assert!(brute_force_extremum(OracleMetric::Cassinian, &x, &p(&[0.2, 0.0]), 8, 64).is_err());
        assert!(
            brute_force_extremum(OracleMetric::Cassinian, &p(&[1.0, 0.0]), &x, 4096, 64).is_err()
        );
    }

    #[test]
    fn two_sc_probe_follows_derived_ratio() {
        let probe = sharpness_probe("two_sc", 7).unwrap();
        assert_eq!(probe.len(), 7);
        for &(t, ratio) in &probe {
            assert_close(ratio, 1.0 / (1.0 - t * t), 1e-10, "two_sc ratio");
        }
        let (t_last, r_last) = probe[probe.len() - 1];
        assert_eq!(t_last, 1e-4);
        assert!(r_last - 1.0 <= 2e-8, "ratio excess {}", r_last - 1.0);
    }

    #[test]
    fn lambda_probes_certify_sharpness() {
        let probe = sharpness_probe("lambda_j_c", 4).unwrap();
        // With 4 steps the family is 1e-1, 1e-2, 1e-3, 1e-4.
        assert_close(probe[1].0, 1e-2, 1e-15, "t grid");
        assert_close(probe[1].1, 0.9949832494966427, 1e-10, "ratio at t=0.01");
        for lambda in [0.9, 0.99] {
            assert!(
                probe.iter().any(|&(_, r)| r > lambda),
                "no pair beats lambda = {lambda}"
            );
        }
        let chat_probe = sharpness_probe("lambda_j_chat", 4).unwrap();
        // chat(x, 0) = c(x, 0) on this family, so the ratios agree.
        for (a, b) in probe.iter().zip(&chat_probe) {
            assert_close(a.1, b.1, 1e-12, "chat vs c probe");
        }
    }

    #[test]
    fn imsz_probe_is_identically_one() {
        for &(r, ratio) in &sharpness_probe("imsz_equality", 100).unwrap() {
            assert!(r < 1.0);
            assert!((ratio - 1.0).abs() < 1e-12, "ratio {ratio} at |x| = {r}");
        }
    }

    #[test]
    fn unknown_probe_rejected() {
        assert!(matches!(
            sharpness_probe("nope", 3),
            Err(Error::UnknownName(_))
        ));
    }

    #[test]
    fn product_bound_antipodal() {
        let b = cassinian_product_bound(&p(&[0.5, 0.0]), &p(&[-0.5, 0.0])).unwrap();
        assert_close(b.inf_product, 0.75, 1e-10, "inf product");
        assert_close(b.centered_value, 0.75, 1e-15, "centered value");
        assert!(b.bound_holds);
    }

    #[test]
    fn product_bound_equal_points() {
        let b = cassinian_product_bound(&p(&[0.3, 0.2]), &p(&[0.3, 0.2])).unwrap();
        assert!(b.inf_product <= 1.0 + 1e-12);
        assert_close(b.centered_value, 1.0, 1e-15, "centered at zero gap");
        assert!(b.bound_holds);
    }

    #[test]
    fn product_bound_random_pairs() {
        let mut checked = 0;
        let mut i = 0u64;
        while checked < 1000 {
            let (x, y) = sampling::ball_pair(0xB0A7, 2, i);
            i += 1;
            let b = cassinian_product_bound(&x, &y).unwrap();
            assert!(
                b.bound_holds,
                "bound failed: inf={}, centered={}, x={x:?}, y={y:?}",
                b.inf_product, b.centered_value
            );
            checked += 1;
        }
    }
}
