//! Quasiregular distortion functions.
//!
//! The stack is built on the Grotzsch modulus
//! `mu(r) = (pi/2) K(r') / K(r)`, `r' = sqrt(1 - r^2)`, with the complete
//! elliptic integral `K` evaluated by the arithmetic-geometric mean
//! iteration (quadratic convergence, no external special-function
//! dependency). On top of it:
//!
//! * `phi_K(r) = mu^{-1}(mu(r) / K)`, the Hersch-Pfluger distortion
//!   function of the quasiregular Schwarz lemma;
//! * `eta_K(t) = phi_K^2(sqrt(t/(1+t))) / (1 - phi_K^2(sqrt(t/(1+t))))`,
//!   which controls Cassinian growth under K-quasiregular maps and is
//!   bounded by `e^{pi (K - 1/K)} max(t^{1/K}, t^K)`;
//! * `c(K) = 2 arth(phi_K(th 1/2))`, the growth constant of the hyperbolic
//!   metric, bounded by `1.3507 (K - 1) + K` with `c(1) = 1`.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Maximal dilatation `K >= 1` plus the inversion tolerance used when
/// evaluating `mu^{-1}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DistortionParams {
    k: f64,
    tol: f64,
}

impl DistortionParams {
    pub const DEFAULT_TOL: f64 = 1e-12;

    /// Dilatation `k >= 1` with the default inversion tolerance.
    pub fn new(k: f64) -> Result<Self> {
        Self::with_tol(k, Self::DEFAULT_TOL)
    }

    /// Dilatation `k >= 1` and tolerance in `(0, 1e-6]`.
    pub fn with_tol(k: f64, tol: f64) -> Result<Self> {
        if !(k >= 1.0 && k.is_finite()) {
            return Err(Error::OutOfRange(format!("K must be >= 1, got {k}")));
        }
        if !(tol > 0.0 && tol <= 1e-6) {
            return Err(Error::OutOfRange(format!(
                "tol must lie in (0, 1e-6], got {tol}"
            )));
        }
        Ok(Self { k, tol })
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }
}

/// Arithmetic-geometric mean of two positive numbers.
fn agm(mut a: f64, mut b: f64) -> f64 {
    for _ in 0..64 {
        let an = 0.5 * (a + b);
        let bn = (a * b).sqrt();
        if (an - bn).abs() <= 1e-16 * an {
            return an;
        }
        a = an;
        b = bn;
    }
    0.5 * (a + b)
}

/// Grotzsch modulus, strictly decreasing from infinity to 0 on `(0, 1)`,
/// with `mu(r) mu(sqrt(1-r^2)) = pi^2/4` and `mu(1/sqrt 2) = pi/2`.
pub fn mu(r: f64) -> Result<f64> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::OutOfRange(format!(
            "mu requires r in (0,1), got {r}"
        )));
    }
    Ok(mu_unchecked(r))
}

fn mu_unchecked(r: f64) -> f64 {
    // AGM conditioning degrades at the endpoints; switch to the logarithmic
    // series below 1e-8 (error O(r^2)) and to the reflection identity
    // mu(r) = pi^2 / (4 mu(r')) above 1 - 1e-8.
    if r < 1e-8 {
        (4.0 / r).ln()
    } else if r > 1.0 - 1e-8 {
        let rp = ((1.0 - r) * (1.0 + r)).sqrt();
        PI * PI / (4.0 * mu_unchecked(rp))
    } else {
        let rp = ((1.0 - r) * (1.0 + r)).sqrt();
        0.5 * PI * agm(1.0, rp) / agm(1.0, r)
    }
}

/// Inverse of `mu`: the unique `r` in `(0,1)` with `mu(r) = y`.
///
/// Bracketing bisection to `tol` followed by two secant polish steps; the
/// asymptotic inverses take over beyond the bisection window.
fn mu_inv(y: f64, tol: f64) -> f64 {
    debug_assert!(y > 0.0);
    let mu_lo = (4.0 / 1e-8_f64).ln(); // mu(1e-8)
    if y >= mu_lo {
        return 4.0 * (-y).exp();
    }
    let mu_hi = mu_unchecked(1.0 - 1e-8);
    if y <= mu_hi {
        // Solve for the complement instead: mu(r') = pi^2/(4y) is large.
        let rp = mu_inv(PI * PI / (4.0 * y), tol);
        return ((1.0 - rp) * (1.0 + rp)).sqrt();
    }

    let mut lo = 1e-8;
    let mut hi = 1.0 - 1e-8;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mu_unchecked(mid) > y {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut r0 = lo;
    let mut r1 = hi;
    let mut f0 = mu_unchecked(r0) - y;
    for _ in 0..2 {
        let f1 = mu_unchecked(r1) - y;
        if f1 == f0 {
            break;
        }
        let r2 = (r1 - f1 * (r1 - r0) / (f1 - f0)).clamp(1e-10, 1.0 - 1e-10);
        r0 = r1;
        f0 = f1;
        r1 = r2;
    }
    r1
}

/// Hersch-Pfluger distortion function `phi_K(r) = mu^{-1}(mu(r)/K)`,
/// increasing in both `r` and `K`, with `phi_1(r) = r` and the endpoints
/// fixed.
pub fn phi_k(params: &DistortionParams, r: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::OutOfRange(format!(
            "phi_K requires r in [0,1], got {r}"
        )));
    }
    if r == 0.0 || r == 1.0 || params.k == 1.0 {
        return Ok(r);
    }
    Ok(mu_inv(mu_unchecked(r) / params.k, params.tol))
}

/// Cassinian growth function
/// `eta_K(t) = phi_K^2(sqrt(t/(1+t))) / (1 - phi_K^2(sqrt(t/(1+t))))`.
///
/// `eta_1(t) = t`; increasing in `t`. Fails with a saturation error once
/// `phi_K` is so close to 1 that the quotient overflows.
pub fn eta_k(params: &DistortionParams, t: f64) -> Result<f64> {
    if !(t >= 0.0) {
        return Err(Error::OutOfRange(format!(
            "eta_K requires t >= 0, got {t}"
        )));
    }
    if t == 0.0 {
        return Ok(0.0);
    }
    if params.k == 1.0 {
        return Ok(t);
    }
    let r = (t / (1.0 + t)).sqrt();
    let y = mu_unchecked(r) / params.k;
    let phi = mu_inv(y, params.tol);
    if phi <= 0.9 {
        return Ok(phi * phi / ((1.0 - phi) * (1.0 + phi)));
    }
    // Near 1 the complement sqrt(1 - phi^2) carries the precision: invert
    // for it directly through the reflection identity.
    let phi_c = mu_inv(PI * PI / (4.0 * y), params.tol);
    let eta = ((1.0 - phi_c) * (1.0 + phi_c)) / (phi_c * phi_c);
    if phi_c == 0.0 || !eta.is_finite() {
        return Err(Error::Saturated);
    }
    Ok(eta)
}

/// Hyperbolic growth constant `c(K) = 2 arth(phi_K(th 1/2))`; `c(1) = 1`
/// and `c(K) <= 1.3507 (K - 1) + K`.
pub fn c_of_k(params: &DistortionParams) -> f64 {
    if params.k == 1.0 {
        // 2 arth(th 1/2) collapses exactly.
        return 1.0;
    }
    let r = 0.5f64.tanh();
    let phi = phi_k(params, r).expect("th(1/2) lies in (0,1)");
    2.0 * phi.atanh()
}

/// Cassinian growth bound of a K-quasiregular map fixing the origin:
/// `e^{pi (K - 1/K)} max(t^{1/K}, t)` evaluated at `t = c(0, x)`.
pub fn casgrow_bound(params: &DistortionParams, c0x: f64) -> Result<f64> {
    if !(c0x >= 0.0) {
        return Err(Error::OutOfRange(format!(
            "casgrow_bound requires t >= 0, got {c0x}"
        )));
    }
    if params.k == 1.0 {
        return Ok(c0x);
    }
    let gain = (PI * (params.k - 1.0 / params.k)).exp();
    Ok(gain * c0x.powf(1.0 / params.k).max(c0x))
}

/// Hyperbolic growth bound `c(K) max(rho, rho^{1/K})`.
pub fn rho_growth_bound(params: &DistortionParams, rho: f64) -> Result<f64> {
    if !(rho >= 0.0) {
        return Err(Error::OutOfRange(format!(
            "rho_growth_bound requires rho >= 0, got {rho}"
        )));
    }
    Ok(c_of_k(params) * rho.max(rho.powf(1.0 / params.k)))
}

/// Compares `eta_K(t)` against [`casgrow_bound`].
///
/// For `t <= 1` the two growth bounds coincide and the comparison always
/// holds (it is the chain behind the Cassinian growth theorem). For large
/// `t` the quotient `eta_K` grows like `t^K` while the growth bound is
/// linear in `t`, so the comparison eventually fails (around `t ~ 5.7` for
/// `K = 2`); callers probing the chain should stay in the moderate range.
/// Equality cases (K = 1) tolerate a relative roundoff of 1e-9.
pub fn verify_casgrow_against_eta(params: &DistortionParams, t: f64) -> Result<bool> {
    let eta = eta_k(params, t)?;
    let bound = casgrow_bound(params, t)?;
    Ok(eta <= bound * (1.0 + 1e-9) + 1e-12)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(k: f64) -> DistortionParams {
        DistortionParams::new(k).unwrap()
    }

    fn assert_close(got: f64, want: f64, tol: f64, what: &str) {
        assert!(
            (got - want).abs() <= tol,
            "{what}: got {got}, want {want} (diff {})",
            (got - want).abs()
        );
    }

    #[test]
    fn mu_symmetry_point() {
        assert_close(
            mu(std::f64::consts::FRAC_1_SQRT_2).unwrap(),
            PI / 2.0,
            1e-10,
            "mu(1/sqrt2)",
        );
    }

    #[test]
    fn mu_functional_identity_on_grid() {
        for i in 1..200 {
            let r = i as f64 / 200.0;
            let rp = ((1.0 - r) * (1.0 + r)).sqrt();
            let prod = mu(r).unwrap() * mu(rp).unwrap();
            assert_close(prod, PI * PI / 4.0, 1e-10, &format!("mu identity at r={r}"));
        }
    }

    #[test]
    fn mu_strictly_decreasing() {
        let mut prev = f64::INFINITY;
        for i in 1..=1000 {
            let r = i as f64 / 1001.0;
            let v = mu(r).unwrap();
            assert!(v < prev, "mu not decreasing at r={r}");
            prev = v;
        }
    }

    #[test]
    fn mu_series_guard_is_continuous() {
        // Values straddling the 1e-8 switch agree with the series to well
        // below the acceptance tolerance.
        let below = mu(0.999e-8).unwrap();
        let above = mu(1.001e-8).unwrap();
        assert_close(below, (4.0 / 0.999e-8_f64).ln(), 1e-12, "series side");
        assert_close(above, (4.0 / 1.001e-8_f64).ln(), 1e-10, "agm side");
        assert_close(
            mu(1e-8).unwrap(),
            19.806975105072256,
            1e-10,
            "mu(1e-8) frozen",
        );
    }

    #[test]
    fn mu_rejects_endpoints() {
        assert!(mu(0.0).is_err());
        assert!(mu(1.0).is_err());
        assert!(mu(-0.5).is_err());
    }

    #[test]
    fn phi_identity_dilatation() {
        let p1 = params(1.0);
        for i in 0..=10 {
            let r = i as f64 / 10.0;
            assert_eq!(phi_k(&p1, r).unwrap(), r);
        }
    }

    #[test]
    fn phi_2_matches_classical_identity() {
        // phi_2(r) = 2 sqrt(r) / (1 + r), the independent oracle for the
        // whole elliptic stack.
        let p2 = params(2.0);
        for i in 1..=200 {
            let r = i as f64 / 201.0;
            let want = 2.0 * r.sqrt() / (1.0 + r);
            assert_close(phi_k(&p2, r).unwrap(), want, 1e-10, &format!("phi_2({r})"));
        }
        assert_close(phi_k(&p2, 0.25).unwrap(), 0.8, 1e-10, "phi_2(1/4)");
    }

    #[test]
    fn phi_defining_relation() {
        for &k in &[1.25, 1.5, 2.0, 4.0] {
            let p = params(k);
            for &r in &[0.05, 0.3, 0.7, 0.95] {
                let phi = phi_k(&p, r).unwrap();
                assert_close(
                    mu(phi).unwrap(),
                    mu(r).unwrap() / k,
                    1e-9,
                    &format!("mu(phi_{k}({r}))"),
                );
            }
        }
    }

    #[test]
    fn phi_growth_bound_and_range() {
        for &k in &[1.0, 1.25, 1.5, 2.0, 4.0] {
            let p = params(k);
            let mut prev = 0.0;
            for i in 1..=200 {
                let r = i as f64 / 201.0;
                let phi = phi_k(&p, r).unwrap();
                assert!(phi > 0.0 && phi < 1.0);
                assert!(phi > prev, "phi_K not increasing in r");
                assert!(
                    phi <= 4.0f64.powf(1.0 - 1.0 / k) * r.powf(1.0 / k) + 1e-12,
                    "Schwarz bound fails at K={k}, r={r}"
                );
                prev = phi;
            }
        }
        // Monotone in K as well.
        for &r in &[0.2, 0.5, 0.8] {
            let mut prev = 0.0;
            for &k in &[1.0, 1.25, 1.5, 2.0, 4.0] {
                let phi = phi_k(&params(k), r).unwrap();
                assert!(phi >= prev);
                prev = phi;
            }
        }
    }

    #[test]
    fn eta_identity_dilatation() {
        let p1 = params(1.0);
        assert_eq!(eta_k(&p1, 0.7).unwrap(), 0.7);
        assert_eq!(eta_k(&p1, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn eta_2_at_one() {
        // Via the phi_2 identity: phi_2(sqrt(1/2)) ~ 0.98517, value
        // 0.97056/0.02944.
        let got = eta_k(&params(2.0), 1.0).unwrap();
        assert_close(got, 32.970562748477140, 1e-8, "eta_2(1) frozen");
        let r = 0.5f64.sqrt();
        let phi = 2.0 * r.sqrt() / (1.0 + r);
        assert_close(
            got,
            phi * phi / (1.0 - phi * phi),
            1e-8,
            "eta_2(1) vs identity route",
        );
    }

    #[test]
    fn eta_respects_paper_bound() {
        for &k in &[1.0, 1.25, 1.5, 2.0, 4.0] {
            let p = params(k);
            let gain = (PI * (k - 1.0 / k)).exp();
            for i in 1..=200 {
                let t = i as f64 / 20.0;
                let eta = eta_k(&p, t).unwrap();
                let bound = gain * t.powf(1.0 / k).max(t.powf(k));
                assert!(
                    eta <= bound * (1.0 + 1e-9),
                    "eta bound fails at K={k}, t={t}: {eta} > {bound}"
                );
            }
        }
    }

    #[test]
    fn eta_increasing_in_t() {
        let p = params(1.5);
        let mut prev = -1.0;
        for i in 0..=300 {
            let t = i as f64 / 30.0;
            let eta = eta_k(&p, t).unwrap();
            assert!(eta > prev || (i == 0 && eta == 0.0));
            prev = eta;
        }
    }

    #[test]
    fn c_of_k_values() {
        assert_eq!(c_of_k(&params(1.0)), 1.0);
        let c2 = c_of_k(&params(2.0));
        // Frozen from the phi_2 identity route: 2 arth(2 sqrt(th 1/2) / (1 + th 1/2)).
        assert_close(c2, 3.3149089083061546, 1e-10, "c(2) frozen");
        let th = 0.5f64.tanh();
        assert_close(
            c2,
            2.0 * (2.0 * th.sqrt() / (1.0 + th)).atanh(),
            1e-10,
            "c(2) vs identity route",
        );
        for &k in &[1.0, 1.25, 1.5, 2.0, 4.0, 8.0] {
            let c = c_of_k(&params(k));
            assert!(
                c <= 1.3507 * (k - 1.0) + k,
                "linear bound fails at K={k}: {c}"
            );
        }
    }

    #[test]
    fn casgrow_bound_values() {
        let p1 = params(1.0);
        assert_eq!(casgrow_bound(&p1, 0.37).unwrap(), 0.37);
        let p2 = params(2.0);
        assert_close(
            casgrow_bound(&p2, 0.25).unwrap(),
            55.658889244928113,
            1e-9,
            "K=2, t=1/4",
        );
        assert_close(
            casgrow_bound(&p2, 4.0).unwrap(),
            445.27111395942490,
            1e-8,
            "K=2, t=4",
        );
        assert!(casgrow_bound(&p2, -1.0).is_err());
    }

    #[test]
    fn rho_growth_bound_values() {
        assert_eq!(rho_growth_bound(&params(1.0), 0.8).unwrap(), 0.8);
        let p2 = params(2.0);
        assert_close(
            rho_growth_bound(&p2, 1.0).unwrap(),
            c_of_k(&p2),
            1e-12,
            "rho = 1 collapses to c(K)",
        );
        assert_close(
            rho_growth_bound(&p2, 0.01).unwrap(),
            c_of_k(&p2) * 0.1,
            1e-12,
            "small rho uses the 1/K power",
        );
    }

    #[test]
    fn casgrow_dominates_eta_in_moderate_range() {
        assert!(verify_casgrow_against_eta(&params(1.0), 0.5).unwrap());
        assert!(verify_casgrow_against_eta(&params(1.5), 1.0).unwrap());
        for i in 1..=100 {
            let t = i as f64 / 25.0;
            assert!(
                verify_casgrow_against_eta(&params(2.0), t).unwrap(),
                "chain fails at t={t}"
            );
        }
        // eta grows like t^K, the growth bound only linearly; the
        // comparison genuinely flips for large t.
        assert!(!verify_casgrow_against_eta(&params(2.0), 10.0).unwrap());
    }

    #[test]
    fn params_validation() {
        assert!(DistortionParams::new(0.5).is_err());
        assert!(DistortionParams::with_tol(2.0, 0.0).is_err());
        assert!(DistortionParams::with_tol(2.0, 1e-3).is_err());
        assert!(DistortionParams::with_tol(2.0, 1e-9).is_ok());
    }
}
