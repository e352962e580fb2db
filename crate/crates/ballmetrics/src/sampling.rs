//! Seeded, order-independent random sampling.
//!
//! Every sample index gets its own ChaCha stream derived from `(seed,
//! index)`, so a batch of samples is reproducible regardless of evaluation
//! order or concurrency: sample `i` of a run is a pure function of the seed
//! and `i`.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::geometry::Point;

/// ChaCha stream dedicated to `(seed, index)`.
pub fn stream_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Uniform draw from `[lo, hi)` using the top 53 bits.
pub fn uniform_in(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    let u = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
    lo + (hi - lo) * u
}

/// Uniform draw from `[-1, 1)`.
fn unit_interval(rng: &mut ChaCha8Rng) -> f64 {
    uniform_in(rng, -1.0, 1.0)
}

/// Uniform point of the open ball `|x| < radius` in `R^dim`, by rejection
/// from the bounding cube.
pub fn ball_point(rng: &mut ChaCha8Rng, dim: usize, radius: f64) -> Point {
    loop {
        let coords: Vec<f64> = (0..dim).map(|_| radius * unit_interval(rng)).collect();
        let norm_sq: f64 = coords.iter().map(|c| c * c).sum();
        if norm_sq < radius * radius {
            return Point::new(coords).expect("rejection sample is finite");
        }
    }
}

/// The `index`-th pair of independent uniform points of `B^dim` for the
/// given seed.
pub fn ball_pair(seed: u64, dim: usize, index: u64) -> (Point, Point) {
    let mut rng = stream_rng(seed, index);
    let x = ball_point(&mut rng, dim, 1.0);
    let y = ball_point(&mut rng, dim, 1.0);
    (x, y)
}

/// The `index`-th pair drawn uniformly from a rejection region: points come
/// from the cube `[-half, half]^dim` until `accept` holds.
pub fn region_pair(
    seed: u64,
    dim: usize,
    half: f64,
    index: u64,
    accept: impl Fn(&Point) -> bool,
) -> (Point, Point) {
    let mut rng = stream_rng(seed, index);
    let draw = |rng: &mut ChaCha8Rng| loop {
        let coords: Vec<f64> = (0..dim).map(|_| half * unit_interval(rng)).collect();
        let p = Point::new(coords).expect("finite");
        if accept(&p) {
            return p;
        }
    };
    let x = draw(&mut rng);
    let y = draw(&mut rng);
    (x, y)
}
