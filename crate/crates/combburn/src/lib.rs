//! Graph burning on comb graphs.
//!
//! A comb `C_{n,m}` is the rooted product of two paths: a spine `P_n` with a
//! tooth `P_m` hanging off every spine vertex (the spine vertex is height 1 of
//! its own tooth, the far end is the leaf). This crate computes and bounds the
//! burning number of combs with closed forms where they are exact, a greedy
//! strategy where they are not, and a branch-and-bound oracle for small
//! instances of arbitrary graphs. It also ships a normalization procedure that
//! rewrites any covering burning sequence into the greedy one, and samplers for
//! the large-scale burning exponent of comb, grid and strong products.
//!
//! Coordinates are 1-based `(tooth, height)` pairs; vertex ids flatten them in
//! tooth-major order. Public arithmetic is `u64` with 128-bit internals, so the
//! closed forms stay exact up to sides around `2^60`.

pub mod arith;
pub mod asymptotics;
pub mod burn;
pub mod comb;
pub mod formulas;
pub mod graph;
pub mod greedy;
pub mod normalize;
pub mod oracle;
pub mod sweep;

pub use burn::{simulate_strict, verify_cover, BurnError, BurnGraph, BurnReport, BurningSequence};
pub use comb::{comb, CombError, CombGraph, CombVertex};
pub use formulas::{
    b_exact_spine, bnc_bound, bounds, hat_b, hat_b_r, is_bnc_tight_spine,
    is_bnc_tight_spine_characterized, lower_bound_tilde, regime, BurnBounds, FormulaError, Regime,
};
pub use graph::{
    cartesian_grid, cartesian_product, rooted_product, GeneralGraph, GraphError, RootedSpec,
};
pub use greedy::{
    burned_layers_closed, greedy_comb, greedy_path_forest, t_greedy, t_greedy_spine_closed,
    t_greedy_tooth_fast, GreedyError, GreedyOutcome, PathForest,
};
pub use normalize::{
    normalize, optimality_via_normalization, NormalizationTrace, NormalizeError, NormalizeStep,
};
pub use oracle::{
    burning_number_exact, burning_number_exact_witness, disprove_k, hat_b_exact, min_ball_cover,
    OracleConfig, OracleError,
};
pub use sweep::{sweep_cell, sweep_stats, HalfPlane, SweepCell, SweepSummary};
