//! The greedy burning strategy for combs and path forests.
//!
//! Two regimes share one entry point. With a wide comb (n >= m) the big early
//! fires sweep the spine left to right, each placed so its ball exactly
//! finishes the leftmost unfinished tooth, and the leftover staircase of tooth
//! tips is handed to the path-forest greedy. With a tall comb (n < m) every
//! fire after the first dives down the currently worst tooth; bookkeeping
//! tracks the first unburned layer of each tooth as if teeth were infinite,
//! which is what the closed layer count [`burned_layers_closed`] measures.

use crate::arith::{ceil_sqrt, ceil_sqrt_u128};
use crate::burn::BurningSequence;
use crate::comb::{comb, CombVertex};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GreedyError {
    #[error("start offset S={s} outside [1, {n}]")]
    OriginOutOfRange { s: u64, n: u64 },
    #[error("comb sides must be positive, got n={n}, m={m}")]
    ZeroSide { n: u64, m: u64 },
    #[error("expected spine orientation n >= m, got n={n}, m={m}")]
    NotSpine { n: u64, m: u64 },
    #[error("expected tooth orientation n <= m, got n={n}, m={m}")]
    NotTooth { n: u64, m: u64 },
    #[error("layer count needs horizon T >= n, got T={t}, n={n}")]
    HorizonBelowSpineLength { t: u64, n: u64 },
    #[error("path forest segments must have positive length")]
    EmptySegment,
}

/// Disjoint vertical segments, top to bottom, listed left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathForest {
    segments: Vec<u64>,
}

impl PathForest {
    pub fn new(segments: Vec<u64>) -> Result<Self, GreedyError> {
        if segments.contains(&0) {
            return Err(GreedyError::EmptySegment);
        }
        Ok(PathForest { segments })
    }

    pub fn segments(&self) -> &[u64] {
        &self.segments
    }
}

/// What a greedy run produced: the fires as a burning sequence at the given
/// horizon, whether the graph was fully burned, and (for tooth-dominant runs)
/// how many layers of the infinite comb the run burns completely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyOutcome {
    pub success: bool,
    pub sequence: BurningSequence,
    pub burned_layers: u64,
}

/// One live segment in the forest phase. `key` identifies the column (tooth
/// index, or input position for standalone forests); `top` is the axis
/// coordinate of its first unburned vertex.
pub(crate) struct SegState {
    pub(crate) key: u64,
    pub(crate) top: u64,
    pub(crate) len: u64,
}

/// Shared forest loop: repeatedly fire at the longest remaining segment
/// (first in list order on ties), `min(radius+1, len)` below its top, where
/// the fire at global round `k` has radius `t - k`. `record` receives
/// `(key, axis position, unclamped covered end)` per fire.
pub(crate) fn forest_phase(
    t: u64,
    mut k: u64,
    segments: &mut Vec<SegState>,
    mut record: impl FnMut(u64, u64, u64),
) -> bool {
    loop {
        if segments.is_empty() {
            return true;
        }
        if k > t {
            return false;
        }
        let rho = t - k;
        let idx = segments
            .iter()
            .enumerate()
            .max_by_key(|(i, s)| (s.len, std::cmp::Reverse(*i)))
            .map(|(i, _)| i)
            .unwrap();
        let seg = &mut segments[idx];
        let pos = (rho + 1).min(seg.len);
        let axis = seg.top + pos - 1;
        record(seg.key, axis, seg.top + pos + rho - 1);
        if pos + rho >= seg.len {
            segments.remove(idx);
        } else {
            seg.top += pos + rho;
            seg.len -= pos + rho;
        }
        k += 1;
    }
}

/// Greedy burning of a path forest at horizon `t`. Vertices are numbered
/// consecutively segment by segment in input order, top first; failure (some
/// segment outlives the horizon) is a normal outcome, not an error.
pub fn greedy_path_forest(t: u64, forest: &PathForest) -> GreedyOutcome {
    assert!(t >= 1, "horizon must be positive");
    let mut offset = 0u64;
    let mut segs = Vec::with_capacity(forest.segments.len());
    for &len in &forest.segments {
        segs.push(SegState {
            key: offset,
            top: 1,
            len,
        });
        offset += len;
    }
    let mut centers = Vec::new();
    let success = forest_phase(t, 1, &mut segs, |key, axis, _| {
        centers.push(key + axis - 1);
    });
    GreedyOutcome {
        success,
        sequence: BurningSequence::new(t, centers).expect("at most t fires"),
        burned_layers: 0,
    }
}

/// Greedy comb burning at horizon `t`, with the tooth-dominant run anchored
/// at spine offset `s`. Returns the fires actually placed (the run stops as
/// soon as the comb is fully burned).
pub fn greedy_comb(t: u64, n: u64, m: u64, s: u64) -> Result<GreedyOutcome, GreedyError> {
    assert!(t >= 1, "horizon must be positive");
    if n == 0 || m == 0 {
        return Err(GreedyError::ZeroSide { n, m });
    }
    if s < 1 || s > n {
        return Err(GreedyError::OriginOutOfRange { s, n });
    }
    if n >= m {
        Ok(spine_run(t, n, m, s))
    } else if n == 1 {
        // C_{1,m} is a bare path; the spine is a single corner vertex and
        // anchoring fire 1 there wastes its reach, so run the path greedy.
        Ok(single_tooth_run(t, m))
    } else {
        Ok(tooth_run(t, n, m, s))
    }
}

fn spine_run(t: u64, n: u64, m: u64, s: u64) -> GreedyOutcome {
    let g = comb(n, m).unwrap();
    let nn = n as usize;
    // Burned prefix height per tooth; spine-phase balls only ever burn
    // prefixes, so this is the complete coverage state.
    let mut prefix = vec![0u64; nn];
    let mut centers: Vec<u64> = Vec::new();
    let mut k = 1u64;

    let spread_spine_fire = |prefix: &mut Vec<u64>, tooth: u64, rho: u64| {
        let lo = tooth.saturating_sub(rho).max(1);
        let hi = (tooth + rho).min(n);
        for j in lo..=hi {
            let reach = rho - tooth.abs_diff(j);
            let p = (reach + 1).min(m);
            let slot = &mut prefix[j as usize - 1];
            *slot = (*slot).max(p);
        }
    };
    let all_burned = |prefix: &Vec<u64>| prefix.iter().all(|&p| p == m);

    // Long-radius sweep: while the current fire still has radius >= m, place
    // it on the spine so its ball exactly finishes the leftmost unfinished
    // tooth, clamping at the right end of the spine.
    while k + m <= t {
        let Some(j0) = prefix.iter().position(|&p| p < m) else {
            break;
        };
        let rho = t - k;
        let offset = rho - (m - 1);
        let tooth = (j0 as u64 + 1 + offset).min(n);
        centers.push(g.vertex_id(CombVertex { tooth, height: 1 }));
        spread_spine_fire(&mut prefix, tooth, rho);
        k += 1;
        if all_burned(&prefix) {
            return finish_spine(t, centers);
        }
    }

    if k > t {
        return GreedyOutcome {
            success: all_burned(&prefix),
            sequence: BurningSequence::new(t, centers).unwrap(),
            burned_layers: 0,
        };
    }

    if !all_burned(&prefix) {
        // Anchor fire: radius m-1 when the sweep ran its course. Placed on
        // the spine above the s-th leftmost unfinished tooth, or at the far
        // end of the spine if fewer than s remain.
        let unfinished: Vec<u64> = (1..=n).filter(|&j| prefix[j as usize - 1] < m).collect();
        let tooth = *unfinished.get(s as usize - 1).unwrap_or(&n);
        let rho = t - k;
        centers.push(g.vertex_id(CombVertex { tooth, height: 1 }));
        spread_spine_fire(&mut prefix, tooth, rho);
        k += 1;
        if all_burned(&prefix) {
            return finish_spine(t, centers);
        }
    }

    // Tooth tips that survive the spine fires form a staircase of vertical
    // segments; the path-forest greedy finishes them.
    let mut segs: Vec<SegState> = (1..=n)
        .filter(|&j| prefix[j as usize - 1] < m)
        .map(|j| SegState {
            key: j,
            top: prefix[j as usize - 1] + 1,
            len: m - prefix[j as usize - 1],
        })
        .collect();
    let success = forest_phase(t, k, &mut segs, |tooth, height, _| {
        centers.push(g.vertex_id(CombVertex { tooth, height }));
    });
    GreedyOutcome {
        success,
        sequence: BurningSequence::new(t, centers).unwrap(),
        burned_layers: 0,
    }
}

fn finish_spine(t: u64, centers: Vec<u64>) -> GreedyOutcome {
    GreedyOutcome {
        success: true,
        sequence: BurningSequence::new(t, centers).unwrap(),
        burned_layers: 0,
    }
}

fn single_tooth_run(t: u64, m: u64) -> GreedyOutcome {
    let g = comb(1, m).unwrap();
    let mut segs = vec![SegState {
        key: 1,
        top: 1,
        len: m,
    }];
    let mut centers = Vec::new();
    let mut layers = 0u64;
    let success = forest_phase(t, 1, &mut segs, |_, height, end| {
        centers.push(g.vertex_id(CombVertex { tooth: 1, height }));
        layers = layers.max(end);
    });
    GreedyOutcome {
        success,
        sequence: BurningSequence::new(t, centers).unwrap(),
        burned_layers: layers,
    }
}

fn tooth_run(t: u64, n: u64, m: u64, s: u64) -> GreedyOutcome {
    let g = comb(n, m).unwrap();
    let nn = n as usize;
    // First unburned layer per tooth, counted on the infinite comb: layers
    // past m don't exist, but the unclamped count is exactly what the closed
    // form predicts, and "tooth finished" is simply tau > m.
    let mut tau = vec![1u64; nn];
    let mut centers: Vec<u64> = Vec::new();

    // Fire 1 sits on the spine and is the only fire that spreads sideways
    // (later fires are buried inside teeth).
    centers.push(g.vertex_id(CombVertex {
        tooth: s,
        height: 1,
    }));
    for j in 1..=n {
        let covered = t.saturating_sub(j.abs_diff(s));
        tau[j as usize - 1] = covered + 1;
    }

    let done = |tau: &Vec<u64>| tau.iter().all(|&x| x > m);
    let mut k = 2u64;
    while k <= t && !done(&tau) {
        let rho = t - k;
        let (idx, &tau0) = tau
            .iter()
            .enumerate()
            .min_by_key(|(i, &x)| (x, *i))
            .expect("n >= 1 teeth");
        let j = idx as u64 + 1;
        // Place to just reach the tooth's first unburned layer; if that would
        // overshoot the leaf, the fire relocates to the leaf itself.
        let h = (tau0 + rho).min(m);
        centers.push(g.vertex_id(CombVertex {
            tooth: j,
            height: h,
        }));
        tau[idx] = tau[idx].max(tau0 + 2 * rho + 1);
        if h <= rho {
            // Oversized radius spilling over the spine (only reachable when
            // the horizon exceeds the tooth length); credit the prefixes it
            // burns on other teeth so the outcome stays honest.
            for j2 in 1..=n {
                if j2 != j {
                    let p = (rho + 2).saturating_sub(h + j.abs_diff(j2));
                    if p >= 1 {
                        let slot = &mut tau[j2 as usize - 1];
                        *slot = (*slot).max(p + 1);
                    }
                }
            }
        }
        k += 1;
    }

    let layers = tau.iter().min().unwrap() - 1;
    GreedyOutcome {
        success: done(&tau),
        sequence: BurningSequence::new(t, centers).unwrap(),
        burned_layers: layers,
    }
}

/// Minimal horizon at which [`greedy_comb`] succeeds, by direct simulation.
/// This is the reference implementation; the closed forms below must agree
/// with it wherever they apply.
pub fn t_greedy(n: u64, m: u64, s: u64) -> Result<u64, GreedyError> {
    if n == 0 || m == 0 {
        return Err(GreedyError::ZeroSide { n, m });
    }
    if s < 1 || s > n {
        return Err(GreedyError::OriginOutOfRange { s, n });
    }
    let cap = n + m + 2 * ceil_sqrt(n.saturating_mul(m)) + 8;
    for t in 1..=cap {
        if greedy_comb(t, n, m, s)?.success {
            return Ok(t);
        }
    }
    unreachable!("greedy failed below horizon {cap} on comb({n},{m}), S={s}")
}

/// Closed form of the spine-dominant greedy horizon (n >= m), which is also
/// the exact burning number there: the sweep spends m-1 rounds on tooth depth
/// and burns the spine like a path of length n-m+1.
pub fn t_greedy_spine_closed(n: u64, m: u64) -> Result<u64, GreedyError> {
    if n == 0 || m == 0 {
        return Err(GreedyError::ZeroSide { n, m });
    }
    if n < m {
        return Err(GreedyError::NotSpine { n, m });
    }
    Ok(m - 1 + ceil_sqrt(n - m + 1))
}

/// Layers of the infinite comb `C_{n,inf}` fully burned by a tooth-dominant
/// greedy run with horizon `t >= n`. Exact integer arithmetic; the closed
/// polynomial is always divisible by n.
pub fn burned_layers_closed(t: u64, n: u64) -> Result<u64, GreedyError> {
    if n == 0 {
        return Err(GreedyError::ZeroSide { n, m: 0 });
    }
    if t < n {
        return Err(GreedyError::HorizonBelowSpineLength { t, n });
    }
    let (t, n) = (t as i128, n as i128);
    let r = (t - 1) % n;
    let total = t * t + (n - 2) * t + 1 + r * (n - r) - n * (n - 1);
    debug_assert!(
        total > 0,
        "layer polynomial must be positive at t={t}, n={n}"
    );
    assert_eq!(
        total % n,
        0,
        "layer polynomial not divisible by n at t={t}, n={n}"
    );
    Ok(u64::try_from(total / n).expect("layer count fits u64"))
}

/// Tooth-dominant greedy horizon (n <= m) without simulation: binary search
/// of the closed layer count over its sound bracket around ceil(sqrt(nm)).
pub fn t_greedy_tooth_fast(n: u64, m: u64) -> Result<u64, GreedyError> {
    if n == 0 || m == 0 {
        return Err(GreedyError::ZeroSide { n, m });
    }
    if n > m {
        return Err(GreedyError::NotTooth { n, m });
    }
    if n == 1 {
        return Ok(ceil_sqrt(m));
    }
    let hi = u64::try_from(ceil_sqrt_u128(n as u128 * m as u128)).unwrap();
    debug_assert!(hi >= n);
    let lo = n.max(hi.saturating_sub(n.div_ceil(2)));
    let enough = |t: u64| burned_layers_closed(t, n).unwrap() >= m;
    assert!(
        enough(hi),
        "greedy should finish within ceil(sqrt(nm)) rounds on comb({n},{m})"
    );
    let (mut lo, mut hi) = (lo, hi);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if enough(mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(lo)
}
