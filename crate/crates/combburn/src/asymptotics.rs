//! Limiting burning exponents along exponentially parameterized families.
//!
//! Take a total budget of 2^k vertices and split it as a comb with 2^u teeth
//! of length 2^(k-u). As k grows, (1/k) log2 of the burning number converges
//! to a piecewise-linear function of x = u/k: that function is [`f`]. Taking
//! the better of the two orientations gives [`g`], and the analogous limits
//! for Cartesian and strong products of paths give [`h`]. All three map
//! [0,1] into [1/3, 1/2] and satisfy h <= g <= f pointwise.
//!
//! The samplers never burn a 2^60-vertex graph; they evaluate the closed
//! forms (exact on wide combs, the greedy horizon on tall ones, where it is a
//! constant-factor proxy whose error vanishes under (1/k) log2).

use crate::formulas::b_exact_spine;
use crate::greedy::t_greedy_tooth_fast;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

fn check_unit_interval(x: f64) {
    assert!(
        (0.0..=1.0).contains(&x),
        "limit functions are defined on [0,1], got {x}"
    );
}

/// Comb limit exponent: 1/2 on [0,1/2], then 1-x on [1/2,2/3], then x/2 on
/// [2/3,1]. Panics outside [0,1].
pub fn f(x: f64) -> f64 {
    check_unit_interval(x);
    if x <= 0.5 {
        0.5
    } else if x <= 2.0 / 3.0 {
        1.0 - x
    } else {
        x / 2.0
    }
}

/// Orientation-free comb limit: the better of spine-first and tooth-first,
/// g(x) = min(f(x), f(1-x)). Panics outside [0,1].
pub fn g(x: f64) -> f64 {
    check_unit_interval(x);
    f(x).min(f(1.0 - x))
}

/// Path-product limit exponent (Cartesian and strong alike): (1-x)/2 on
/// [0,1/3], then 1/3 on [1/3,2/3], then x/2 on [2/3,1]. Panics outside [0,1].
pub fn h(x: f64) -> f64 {
    check_unit_interval(x);
    if x <= 1.0 / 3.0 {
        (1.0 - x) / 2.0
    } else if x <= 2.0 / 3.0 {
        1.0 / 3.0
    } else {
        x / 2.0
    }
}

/// One evaluation of the comb exponent at a dyadic split, next to its limit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExponentSample {
    pub k: u32,
    pub u: u32,
    pub comb_exponent: f64,
    pub limit_value: f64,
}

impl ExponentSample {
    pub fn abs_dev(&self) -> f64 {
        (self.comb_exponent - self.limit_value).abs()
    }
}

fn check_split(k: u32, u: u32) {
    assert!(
        (1..=60).contains(&k),
        "k must lie in 1..=60 so both sides fit in u64, got {k}"
    );
    assert!(u <= k, "u must lie in 0..=k, got u={u}, k={k}");
}

/// Burning exponent of the comb with 2^u teeth of length 2^(k-u): exact on
/// wide combs, greedy horizon on tall ones. The sample carries f(u/k) as the
/// limit it converges to.
pub fn sample_comb_exponent(k: u32, u: u32) -> ExponentSample {
    check_split(k, u);
    let teeth = 1u64 << u;
    let height = 1u64 << (k - u);
    let proxy = if teeth >= height {
        b_exact_spine(teeth, height).expect("sides are positive powers of two")
    } else {
        t_greedy_tooth_fast(teeth, height).expect("sides are positive powers of two")
    };
    ExponentSample {
        k,
        u,
        comb_exponent: (proxy as f64).log2() / f64::from(k),
        limit_value: f(f64::from(u) / f64::from(k)),
    }
}

/// Burning exponent of a product of paths with sides 2^u and 2^(k-u). When
/// the short side is at most the square root of the long one, burning is
/// governed by the long side alone; otherwise the volume term with the given
/// leading constant takes over. Lower-order terms are dropped.
fn product_exponent(k: u32, u: u32, balanced_constant: f64) -> f64 {
    check_split(k, u);
    let lo = u.min(k - u);
    let hi = u.max(k - u);
    if 2 * lo <= hi {
        f64::from(hi) / (2.0 * f64::from(k))
    } else {
        (balanced_constant.log2() + f64::from(k)) / (3.0 * f64::from(k))
    }
}

/// Cartesian-product exponent; converges to h(u/k).
pub fn grid_exponent(k: u32, u: u32) -> f64 {
    product_exponent(k, u, 1.5)
}

/// Strong-product exponent; converges to h(u/k).
pub fn strong_exponent(k: u32, u: u32) -> f64 {
    product_exponent(k, u, 0.75)
}

/// Deviation statistics of sampled comb exponents from their limit.
#[derive(Debug, Clone, PartialEq)]
pub struct DeviationSummary {
    pub max_abs_dev: f64,
    pub mean_abs_dev: f64,
    pub samples: Vec<ExponentSample>,
}

/// Draw `trials` uniform splits u in 0..=k from a seeded generator and
/// measure how far the comb exponent sits from f(u/k). Deterministic for a
/// fixed seed regardless of thread count.
pub fn empirical_limit(k: u32, trials: u64, seed: u64) -> DeviationSummary {
    assert!(trials >= 1, "need at least one trial");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let splits: Vec<u32> = (0..trials).map(|_| rng.gen_range(0..=k)).collect();
    let samples: Vec<ExponentSample> = splits
        .par_iter()
        .map(|&u| sample_comb_exponent(k, u))
        .collect();
    let max_abs_dev = samples
        .iter()
        .map(ExponentSample::abs_dev)
        .fold(0.0, f64::max);
    let mean_abs_dev =
        samples.iter().map(ExponentSample::abs_dev).sum::<f64>() / samples.len() as f64;
    DeviationSummary {
        max_abs_dev,
        mean_abs_dev,
        samples,
    }
}

pub fn exponent_csv_header() -> &'static str {
    "k,u,x_exp,comb_exponent,limit_f,abs_dev"
}

pub fn exponent_csv_row(s: &ExponentSample) -> String {
    format!(
        "{},{},{},{},{},{}",
        s.k,
        s.u,
        f64::from(s.u) / f64::from(s.k),
        s.comb_exponent,
        s.limit_value,
        s.abs_dev()
    )
}
