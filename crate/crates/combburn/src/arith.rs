//! Exact integer helpers shared by the closed forms.
//!
//! Everything here must be exact at perfect squares and their neighbors; the
//! burning formulas compare values that differ by 1.

/// Least `k` with `k*k >= x`.
pub fn ceil_sqrt(x: u64) -> u64 {
    let r = x.isqrt();
    if r * r < x {
        r + 1
    } else {
        r
    }
}

/// Least `k` with `k*k >= x`, for 128-bit products of two `u64` sides.
pub fn ceil_sqrt_u128(x: u128) -> u128 {
    let r = x.isqrt();
    if r * r < x {
        r + 1
    } else {
        r
    }
}

/// Least `k` with `2*k*k >= x`.
pub fn ceil_sqrt_half(x: u64) -> u64 {
    ceil_sqrt(x.div_ceil(2))
}
