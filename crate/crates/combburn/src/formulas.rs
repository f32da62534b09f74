//! Closed forms and bounds for the comb burning number.
//!
//! Wide combs (n >= m) are solved exactly: the greedy horizon is optimal
//! there. Tall combs are bracketed between a uniform-ball-cover lower bound
//! and the greedy horizon, with exact values on the near-diagonal bands.

use crate::arith::{ceil_sqrt, ceil_sqrt_u128};
use crate::greedy::t_greedy_tooth_fast;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormulaError {
    #[error("comb sides must be positive, got n={n}, m={m}")]
    ZeroSide { n: u64, m: u64 },
    #[error("spine closed form needs n >= m, got n={n}, m={m}")]
    NotSpine { n: u64, m: u64 },
    #[error("tall-comb bound needs n <= m, got n={n}, m={m}")]
    NotTooth { n: u64, m: u64 },
}

fn check_sides(n: u64, m: u64) -> Result<(), FormulaError> {
    if n == 0 || m == 0 {
        Err(FormulaError::ZeroSide { n, m })
    } else {
        Ok(())
    }
}

/// Exact burning number of a wide comb (n >= m): the greedy spine sweep is
/// optimal, spending m-1 rounds of depth and burning a path of n-m+1 spine
/// vertices with what remains.
pub fn b_exact_spine(n: u64, m: u64) -> Result<u64, FormulaError> {
    check_sides(n, m)?;
    if n < m {
        return Err(FormulaError::NotSpine { n, m });
    }
    Ok(m - 1 + ceil_sqrt(n - m + 1))
}

/// Square-root bound `ceil(sqrt(nm))`: an upper bound on every comb, exact on
/// several near-diagonal families.
pub fn bnc_bound(n: u64, m: u64) -> u64 {
    u64::try_from(ceil_sqrt_u128(n as u128 * m as u128)).expect("sqrt of u128 product fits u64")
}

/// Minimum number of radius-`r` balls covering `C_{n,m}`, in closed form.
///
/// For r < m each tooth needs its own stack of A = floor(m/(2r+1)) balls; the
/// leftover tip of length L is either free (L = 0), shareable across
/// 2(r-L+1)+1 teeth by spine balls (L <= r), or forces one extra private ball
/// per tooth (L > r). For r >= m spine balls cover whole teeth outright.
pub fn hat_b_r(n: u64, m: u64, r: u64) -> u64 {
    debug_assert!(n >= 1 && m >= 1);
    let (n_w, m_w, r_w) = (n as u128, m as u128, r as u128);
    let count = if r_w >= m_w {
        n_w.div_ceil(2 * (r_w - m_w + 1) + 1)
    } else {
        let diam = 2 * r_w + 1;
        let a = m_w / diam;
        let l = m_w - a * diam;
        let b = if l == 0 {
            0
        } else if l <= r_w {
            n_w.div_ceil(2 * (r_w - l + 1) + 1)
        } else {
            n_w
        };
        a * n_w + b
    };
    u64::try_from(count).expect("cover count fits u64")
}

/// Cover-based lower bound on the burning number: least r whose radius-(r-1)
/// covers fit within r balls. Binary search; the predicate is monotone since
/// cover counts shrink as radii grow.
pub fn hat_b(n: u64, m: u64) -> u64 {
    debug_assert!(n >= 1 && m >= 1);
    let fits = |r: u64| hat_b_r(n, m, r - 1) <= r;
    let mut lo = 1u64;
    let mut hi = n + m;
    debug_assert!(fits(hi));
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if fits(mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    lo
}

/// Quadratic-root expression associated with tall combs. NOT a valid lower
/// bound on the burning number (it overshoots on near-diagonal tall combs,
/// e.g. n=4, m=7 where it exceeds the exact value), so [`bounds`] does not
/// use it; it does dominate sqrt(nm/2), which is tested.
pub fn lower_bound_tilde(n: u64, m: u64) -> Result<u64, FormulaError> {
    check_sides(n, m)?;
    if n > m {
        return Err(FormulaError::NotTooth { n, m });
    }
    let (n_w, m_w) = (n as u128, m as u128);
    let disc = 8 * m_w * n_w + (2 * n_w - 1) * (2 * n_w - 1);
    let val = (ceil_sqrt_u128(disc) + 2 * n_w + 1).div_ceil(4);
    Ok(u64::try_from(val).expect("tilde value fits u64"))
}

/// Growth regime of `b(C_{n,m})` in the side lengths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// Very wide: m^2 <= n, burning number ~ sqrt(n).
    SpineSqrt,
    /// Wide: m <= n, burning number m - 1 + sqrt(n - m + 1).
    SpineLinear,
    /// Tall: n < m, burning number ~ sqrt(nm).
    Tooth,
    /// Transitional band; the classifier never returns it, kept so callers
    /// can represent the region in their own analyses.
    Boundary,
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Regime::SpineSqrt => "spine_sqrt",
            Regime::SpineLinear => "spine_linear",
            Regime::Tooth => "tooth",
            Regime::Boundary => "boundary",
        })
    }
}

pub fn regime(n: u64, m: u64) -> Regime {
    debug_assert!(n >= 1 && m >= 1);
    if (m as u128) * (m as u128) <= n as u128 {
        Regime::SpineSqrt
    } else if m <= n {
        Regime::SpineLinear
    } else {
        Regime::Tooth
    }
}

/// Whether `ceil(sqrt(nm))` is exactly the burning number of a wide comb,
/// by direct comparison of the two closed forms.
pub fn is_bnc_tight_spine(n: u64, m: u64) -> Result<bool, FormulaError> {
    Ok(b_exact_spine(n, m)? == bnc_bound(n, m))
}

/// Same predicate through its structural characterization: the diagonal, the
/// path row, three infinite offset families, and eight sporadic combs. Must
/// agree with [`is_bnc_tight_spine`] everywhere; the test suite checks the
/// region m <= 200, n <= m + 20 exhaustively.
pub fn is_bnc_tight_spine_characterized(n: u64, m: u64) -> Result<bool, FormulaError> {
    check_sides(n, m)?;
    if n < m {
        return Err(FormulaError::NotSpine { n, m });
    }
    const SPORADIC: [(u64, u64); 8] = [
        (7, 2),
        (8, 2),
        (8, 3),
        (9, 4),
        (11, 2),
        (12, 2),
        (12, 3),
        (18, 2),
    ];
    Ok(m == 1 || n == m || matches!(n - m, 1 | 2 | 4) || SPORADIC.contains(&(n, m)))
}

/// Bracket (and exact value where known) for `b(C_{n,m})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BurnBounds {
    pub lower: u64,
    pub upper: u64,
    pub exact: Option<u64>,
}

/// Best oracle-free bracket. Wide combs are exact. Tall combs sit between
/// the strongest of three lower bounds (the ball-cover bound, the tooth
/// count, and ceil(sqrt(nm/2)), which cross each other) and the greedy
/// horizon, with exact values for m - n <= 6 (and the path column n = 1).
pub fn bounds(n: u64, m: u64) -> Result<BurnBounds, FormulaError> {
    check_sides(n, m)?;
    if n >= m {
        let e = b_exact_spine(n, m)?;
        return Ok(BurnBounds {
            lower: e,
            upper: e,
            exact: Some(e),
        });
    }
    let half = u64::try_from(ceil_sqrt_u128((n as u128 * m as u128).div_ceil(2)))
        .expect("sqrt of half the u128 product fits u64");
    let lower = hat_b(n, m).max(n).max(half);
    let upper = t_greedy_tooth_fast(n, m).expect("n <= m here");
    let exact = if n == 1 {
        Some(ceil_sqrt(m))
    } else {
        match m - n {
            1 | 2 => Some(n + 1),
            3..=6 => Some(n + 2),
            _ => None,
        }
    };
    assert!(
        lower <= upper,
        "bracket inverted on comb({n},{m}): {lower} > {upper}"
    );
    if let Some(e) = exact {
        assert!(
            (lower..=upper).contains(&e),
            "exact value {e} outside bracket [{lower},{upper}] on comb({n},{m})"
        );
    }
    Ok(BurnBounds {
        lower,
        upper,
        exact,
    })
}
