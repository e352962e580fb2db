//! 1-D minimization over the unit circle.
//!
//! The boundary objectives (Cassinian product and triangular-ratio sum) are
//! smooth with at most a handful of local minima, but the two-tangency-point
//! structure of the equal-modulus case means a single local descent is not
//! enough. The scheme here is a coarse scan over equally spaced angles
//! followed by golden-section refinement of every coarse local minimum that
//! can still contain the global optimum.

use std::sync::LazyLock;

/// Number of coarse scan angles.
pub(crate) const COARSE_STEPS: usize = 4096;

/// Golden-section iterations; 48 steps shrink the coarse cell below 1e-12
/// radians.
pub(crate) const GOLDEN_ITERS: usize = 48;

// Split fixed-size cos/sin tables so the scan loop vectorizes without
// bounds checks.
static CIRCLE_COS: LazyLock<[f64; COARSE_STEPS]> = LazyLock::new(|| {
    let mut t = [0.0; COARSE_STEPS];
    for (k, v) in t.iter_mut().enumerate() {
        *v = (2.0 * std::f64::consts::PI * k as f64 / COARSE_STEPS as f64).cos();
    }
    t
});
static CIRCLE_SIN: LazyLock<[f64; COARSE_STEPS]> = LazyLock::new(|| {
    let mut t = [0.0; COARSE_STEPS];
    for (k, v) in t.iter_mut().enumerate() {
        *v = (2.0 * std::f64::consts::PI * k as f64 / COARSE_STEPS as f64).sin();
    }
    t
});

/// Result of a circle minimization.
#[derive(Clone, Copy, Debug)]
pub(crate) struct CircleMin {
    pub theta: f64,
    pub value: f64,
}

/// Golden-section search for the minimum of `f` on `[a, b]`.
pub(crate) fn golden_min(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, iters: usize) -> (f64, f64) {
    const INVPHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = b - INVPHI * (b - a);
    let mut x2 = a + INVPHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..iters {
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INVPHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INVPHI * (b - a);
            f2 = f(x2);
        }
    }
    if f1 < f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Minimizes a boundary objective over the unit circle.
///
/// `scan` is a cheap proxy evaluated at table points `(cos t, sin t)`; it
/// must be a strictly increasing transform of the true objective (for the
/// Cassinian product the squared product saves two square roots per angle).
/// `objective(theta)` is the true objective used during refinement, and
/// `lipschitz` bounds its derivative: coarse local minima more than
/// `lipschitz * cell` above the best cannot contain the global minimum and
/// are skipped.
///
/// Returns the minimum; on value ties the smaller angle in `[0, 2*pi)` wins.
pub(crate) fn minimize_on_circle<S, F>(scan: S, objective: F, lipschitz: f64) -> CircleMin
where
    S: Fn(f64, f64) -> f64,
    F: Fn(f64) -> f64,
{
    let cos_tab = &*CIRCLE_COS;
    let sin_tab = &*CIRCLE_SIN;
    let n = COARSE_STEPS;
    let mut values = [0.0f64; COARSE_STEPS];
    for i in 0..n {
        values[i] = scan(cos_tab[i], sin_tab[i]);
    }

    let h = 2.0 * std::f64::consts::PI / n as f64;

    // Coarse local minima (cyclic), in true-objective units.
    let mut candidates: Vec<(f64, usize)> = Vec::with_capacity(8);
    for i in 0..n {
        let prev = values[(i + n - 1) % n];
        let next = values[(i + 1) % n];
        if values[i] <= prev && values[i] <= next {
            candidates.push((objective(i as f64 * h), i));
        }
    }
    candidates.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    candidates.truncate(8);

    // A basin whose sampled minimum exceeds the best sample by more than
    // lipschitz * h cannot hide a smaller true minimum.
    let cutoff = candidates[0].0 + lipschitz * h;

    let mut best = CircleMin {
        theta: f64::NAN,
        value: f64::INFINITY,
    };
    for &(v0, i) in &candidates {
        if v0 > cutoff {
            break;
        }
        let center = i as f64 * h;
        let (t, v) = golden_min(&objective, center - h, center + h, GOLDEN_ITERS);
        let t = t.rem_euclid(2.0 * std::f64::consts::PI);
        // Value ties (symmetric extremal pairs) resolve to the smaller angle.
        let tie = 1e-12 * (1.0 + v.abs());
        if v < best.value - tie {
            best = CircleMin { theta: t, value: v };
        } else if v <= best.value + tie && t < best.theta {
            best.theta = t;
            best.value = best.value.min(v);
        }
    }
    best
}
