//! Grid sweeps comparing the greedy horizon against the square-root bound.
//!
//! Everything here runs on closed forms only, so full 5000 x 5000 grids are
//! cheap. Row parallelism keeps output deterministic: each worker owns whole
//! n-rows and results are reduced order-independently (max + tie lists).

use crate::formulas::bnc_bound;
use crate::greedy::{t_greedy_spine_closed, t_greedy_tooth_fast};
use rayon::prelude::*;

/// One grid cell: greedy horizon vs square-root bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepCell {
    pub n: u64,
    pub m: u64,
    pub t_greedy: u64,
    pub bnc: u64,
    /// bnc - t_greedy; signed so an inverted bracket would be visible
    /// rather than a panic.
    pub gap: i64,
}

pub fn sweep_cell(n: u64, m: u64) -> SweepCell {
    let t_greedy = if n >= m {
        t_greedy_spine_closed(n, m).expect("n >= m")
    } else {
        t_greedy_tooth_fast(n, m).expect("n < m")
    };
    let bnc = bnc_bound(n, m);
    SweepCell {
        n,
        m,
        t_greedy,
        bnc,
        gap: bnc as i64 - t_greedy as i64,
    }
}

/// Which half of the (n, m) grid a summary covers. The diagonal n = m is in
/// both halves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalfPlane {
    /// n >= m: wide combs.
    Spine,
    /// n <= m: tall combs.
    Tooth,
}

impl std::fmt::Display for HalfPlane {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            HalfPlane::Spine => "n >= m",
            HalfPlane::Tooth => "n <= m",
        })
    }
}

/// Extreme gap over one half-plane: the maximum of bnc - t_greedy and every
/// cell attaining it, sorted by (n, m).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSummary {
    pub half: HalfPlane,
    pub max_gap: i64,
    pub argmax: Vec<(u64, u64)>,
}

#[derive(Clone, Default)]
struct Extreme {
    max_gap: Option<i64>,
    argmax: Vec<(u64, u64)>,
}

impl Extreme {
    fn push(&mut self, gap: i64, n: u64, m: u64) {
        match self.max_gap {
            Some(best) if gap < best => {}
            Some(best) if gap == best => self.argmax.push((n, m)),
            _ => {
                self.max_gap = Some(gap);
                self.argmax = vec![(n, m)];
            }
        }
    }

    fn merge(mut self, other: Extreme) -> Extreme {
        match (self.max_gap, other.max_gap) {
            (_, None) => self,
            (None, _) => other,
            (Some(a), Some(b)) if a > b => self,
            (Some(a), Some(b)) if b > a => other,
            _ => {
                self.argmax.extend(other.argmax);
                self
            }
        }
    }

    fn finish(mut self, half: HalfPlane) -> SweepSummary {
        self.argmax.sort_unstable();
        SweepSummary {
            half,
            max_gap: self.max_gap.unwrap_or(0),
            argmax: self.argmax,
        }
    }
}

/// Max-gap summaries for both halves of the grid 1..=n_max x 1..=m_max,
/// computed in parallel over rows.
pub fn sweep_stats(n_max: u64, m_max: u64) -> (SweepSummary, SweepSummary) {
    let (spine, tooth) = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let mut spine = Extreme::default();
            let mut tooth = Extreme::default();
            for m in 1..=m_max {
                let cell = sweep_cell(n, m);
                if n >= m {
                    spine.push(cell.gap, n, m);
                }
                if n <= m {
                    tooth.push(cell.gap, n, m);
                }
            }
            (spine, tooth)
        })
        .reduce(
            || (Extreme::default(), Extreme::default()),
            |(s1, t1), (s2, t2)| (s1.merge(s2), t1.merge(t2)),
        );
    (
        spine.finish(HalfPlane::Spine),
        tooth.finish(HalfPlane::Tooth),
    )
}

pub fn csv_header() -> &'static str {
    "n,m,t_greedy,bnc,gap"
}

pub fn csv_row(cell: &SweepCell) -> String {
    format!(
        "{},{},{},{},{}",
        cell.n, cell.m, cell.t_greedy, cell.bnc, cell.gap
    )
}

/// Full CSV for the grid, rows in (n, m) lexicographic order. Rows are built
/// in parallel per n and concatenated in order, so the bytes do not depend on
/// the thread count.
pub fn sweep_csv(n_max: u64, m_max: u64) -> String {
    let rows: Vec<String> = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let mut chunk = String::new();
            for m in 1..=m_max {
                chunk.push_str(&csv_row(&sweep_cell(n, m)));
                chunk.push('\n');
            }
            chunk
        })
        .collect();
    let mut out = String::with_capacity(rows.iter().map(String::len).sum::<usize>() + 32);
    out.push_str(csv_header());
    out.push('\n');
    for chunk in rows {
        out.push_str(&chunk);
    }
    out
}
