//! Rewriting covering sequences on wide combs into the greedy one.
//!
//! The procedure works on a wide comb (n >= m) and a covering sequence at
//! horizon t. A fire's radius is t minus its position, so fires at positions
//! 1..=t-m+1 ("big" fires, radius >= m-1) can each finish whole teeth, while
//! later fires are local. Normalization repeatedly:
//!
//! - drops fires whose ball is already covered by earlier fires (`Reduce`;
//!   removal only grows the radii of later fires),
//! - moves big fires to their own tooth's spine (`SpineLift`; with radius at
//!   least m-1 the spine vertex dominates every other tooth and still
//!   finishes its own),
//! - walks the big fires left to right, packing their finished-teeth blocks
//!   against the left boundary (`Boundary` for fire 1, `Spread` for the
//!   rest). Each move re-places the small fires by replaying the greedy
//!   forest phase on the uncovered tooth tips; if that alone cannot absorb
//!   the move (the remaining big fires sit in the wrong order), the move
//!   drags them to canonical position in the same snapshot,
//! - re-places the small fires once more if they still differ from the
//!   forest replay (`Reassign`).
//!
//! Every snapshot is checked to be a covering sequence; at an optimal horizon
//! this always holds, which is exactly why the greedy sequence is optimal
//! there. The fixed points of the procedure are the greedy outputs
//! themselves. `Shift` is part of the step vocabulary for callers that want
//! to name a lateral slide, but this pipeline's fused walk performs slides
//! inside `Spread`/`Reassign` and never emits it.

use crate::burn::{verify_cover, BurnError, BurningSequence};
use crate::comb::{comb, CombGraph, CombVertex};
use crate::greedy::{forest_phase, greedy_comb, t_greedy_spine_closed, SegState};
use crate::oracle::{burning_number_exact_witness, OracleConfig};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalizeStep {
    Reduce,
    SpineLift,
    Boundary,
    Spread,
    Reassign,
    Shift,
}

impl std::fmt::Display for NormalizeStep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            NormalizeStep::Reduce => "reduce",
            NormalizeStep::SpineLift => "spine_lift",
            NormalizeStep::Boundary => "boundary",
            NormalizeStep::Spread => "spread",
            NormalizeStep::Reassign => "reassign",
            NormalizeStep::Shift => "shift",
        })
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NormalizeError {
    #[error("comb sides must be positive, got n={n}, m={m}")]
    ZeroSide { n: u64, m: u64 },
    #[error("normalization needs a wide comb (n >= m), got n={n}, m={m}")]
    NotSpine { n: u64, m: u64 },
    #[error(transparent)]
    InvalidSequence(#[from] BurnError),
    #[error("sequence does not cover the comb; {} vertices stay unburned", uncovered.len())]
    NotCovering { uncovered: Vec<CombVertex> },
    #[error("rewrite step {step} broke coverage; input is outside the procedure's guarantee")]
    CoverageBroken { step: usize },
}

/// The initial sequence plus every intermediate snapshot with the rewrite
/// that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizationTrace {
    pub initial: BurningSequence,
    pub steps: Vec<(NormalizeStep, BurningSequence)>,
}

impl NormalizationTrace {
    pub fn final_sequence(&self) -> &BurningSequence {
        self.steps.last().map(|(_, s)| s).unwrap_or(&self.initial)
    }
}

fn to_sequence(g: &CombGraph, t: u64, fires: &[CombVertex]) -> BurningSequence {
    let centers = fires.iter().map(|&v| g.vertex_id(v)).collect();
    BurningSequence::new(t, centers).expect("normalization never exceeds t fires")
}

fn covers(g: &CombGraph, t: u64, fires: &[CombVertex]) -> bool {
    verify_cover(g, &to_sequence(g, t, fires))
        .expect("rewrites keep centers inside the comb")
        .covered
}

/// Index of the first fire whose ball lies inside the union of the earlier
/// fires' balls. Fire 1 is never redundant (its ball contains its center).
fn first_redundant(g: &CombGraph, t: u64, fires: &[CombVertex]) -> Option<usize> {
    for (i, &f) in fires.iter().enumerate() {
        let r = t - (i as u64 + 1);
        let ball = g.ball(f, r).expect("fire inside the comb");
        let redundant = ball.iter().all(|&v| {
            fires[..i].iter().enumerate().any(|(j, &e)| {
                g.distance(e, v).expect("vertices inside the comb") <= t - (j as u64 + 1)
            })
        });
        if redundant {
            return Some(i);
        }
    }
    None
}

/// Recompute every fire past position q by replaying the greedy forest phase
/// on the tooth tips the first q fires leave unburned. The first q fires must
/// sit on the spine.
fn replay_tail(t: u64, n: u64, m: u64, fires: &mut Vec<CombVertex>, q: usize) {
    let mut prefix = vec![0u64; n as usize];
    for (idx, f) in fires[..q].iter().enumerate() {
        debug_assert_eq!(f.height, 1, "big fires are lifted before replay");
        let rho = t - (idx as u64 + 1);
        let lo = f.tooth.saturating_sub(rho).max(1);
        let hi = (f.tooth + rho).min(n);
        for j in lo..=hi {
            let covered = (rho - f.tooth.abs_diff(j) + 1).min(m);
            let slot = &mut prefix[j as usize - 1];
            *slot = (*slot).max(covered);
        }
    }
    let mut segs: Vec<SegState> = (1..=n)
        .filter(|&j| prefix[j as usize - 1] < m)
        .map(|j| SegState {
            key: j,
            top: prefix[j as usize - 1] + 1,
            len: m - prefix[j as usize - 1],
        })
        .collect();
    fires.truncate(q);
    forest_phase(t, q as u64 + 1, &mut segs, |tooth, height, _| {
        fires.push(CombVertex { tooth, height });
    });
}

/// Canonical tooth for the big fire at 0-based index i, given the end of the
/// previous block: the block [c - slack, c + slack] of teeth it finishes
/// starts right after the previous block, clamped at the right end.
fn canonical_tooth(t: u64, n: u64, m: u64, i: usize, prev_end: u64) -> (u64, u64) {
    let rho = t - (i as u64 + 1);
    let slack = rho - (m - 1);
    let c = (prev_end + 1 + slack).min(n);
    (c, (c + slack).min(n))
}

/// Rewrite a covering sequence into canonical (greedy) form, recording one
/// snapshot per rewrite. Fails honestly if the input does not cover, or if a
/// rewrite would break coverage (possible only at horizons past the
/// guarantee).
pub fn normalize(
    g: &CombGraph,
    seq: &BurningSequence,
) -> Result<NormalizationTrace, NormalizeError> {
    let (n, m) = (g.n(), g.m());
    if n < m {
        return Err(NormalizeError::NotSpine { n, m });
    }
    let t = seq.k;
    let report = verify_cover(g, seq)?;
    if !report.covered {
        let uncovered = report
            .uncovered
            .iter()
            .map(|&id| g.vertex_from_id(id))
            .collect();
        return Err(NormalizeError::NotCovering { uncovered });
    }

    let mut fires: Vec<CombVertex> = seq.centers.iter().map(|&id| g.vertex_from_id(id)).collect();
    let mut steps: Vec<(NormalizeStep, BurningSequence)> = Vec::new();
    let push = |steps: &mut Vec<(NormalizeStep, BurningSequence)>,
                label: NormalizeStep,
                fires: &[CombVertex]|
     -> Result<(), NormalizeError> {
        if !covers(g, t, fires) {
            return Err(NormalizeError::CoverageBroken { step: steps.len() });
        }
        steps.push((label, to_sequence(g, t, fires)));
        Ok(())
    };

    // Positions 1..=t-m+1 carry radius >= m-1. Covering inputs on wide combs
    // always have t >= m, but saturate anyway.
    let q_max = (t + 1).saturating_sub(m) as usize;
    let mut rounds = 0u64;
    loop {
        rounds += 1;
        assert!(
            rounds <= 2 * t + 4,
            "normalization failed to stabilize on comb({n},{m})"
        );
        let mut changed = false;

        while let Some(i) = first_redundant(g, t, &fires) {
            fires.remove(i);
            push(&mut steps, NormalizeStep::Reduce, &fires)?;
            changed = true;
        }

        for i in 0..fires.len().min(q_max) {
            if fires[i].height > 1 {
                fires[i] = CombVertex {
                    tooth: fires[i].tooth,
                    height: 1,
                };
                push(&mut steps, NormalizeStep::SpineLift, &fires)?;
                changed = true;
            }
        }

        let q = fires.len().min(q_max);
        let mut prev_end = 0u64;
        for i in 0..q {
            let (c, end) = canonical_tooth(t, n, m, i, prev_end);
            if fires[i].tooth != c {
                let mut attempt = fires.clone();
                attempt[i] = CombVertex {
                    tooth: c,
                    height: 1,
                };
                replay_tail(t, n, m, &mut attempt, q);
                if !covers(g, t, &attempt) {
                    // Re-placing the small fires alone cannot absorb the
                    // move; the remaining big fires are out of order, so drag
                    // them to canonical position in the same snapshot.
                    let mut pe = end;
                    for (j, slot) in attempt.iter_mut().enumerate().take(q).skip(i + 1) {
                        let (cj, ej) = canonical_tooth(t, n, m, j, pe);
                        *slot = CombVertex {
                            tooth: cj,
                            height: 1,
                        };
                        pe = ej;
                    }
                    replay_tail(t, n, m, &mut attempt, q);
                }
                fires = attempt;
                let label = if i == 0 {
                    NormalizeStep::Boundary
                } else {
                    NormalizeStep::Spread
                };
                push(&mut steps, label, &fires)?;
                changed = true;
            }
            prev_end = end;
        }

        let mut candidate = fires.clone();
        replay_tail(t, n, m, &mut candidate, q);
        if candidate != fires {
            fires = candidate;
            push(&mut steps, NormalizeStep::Reassign, &fires)?;
            changed = true;
        }

        if !changed {
            break;
        }
    }

    Ok(NormalizationTrace {
        initial: seq.clone(),
        steps,
    })
}

/// The burning number of a wide comb, demonstrated optimal by normalization:
/// on small instances this takes an exact optimal sequence from the search
/// oracle and rewrites it into the greedy one, verifying that the greedy
/// horizon cannot be beaten.
pub fn optimality_via_normalization(n: u64, m: u64) -> Result<u64, NormalizeError> {
    if n == 0 || m == 0 {
        return Err(NormalizeError::ZeroSide { n, m });
    }
    if n < m {
        return Err(NormalizeError::NotSpine { n, m });
    }
    let t = t_greedy_spine_closed(n, m).expect("sides validated");
    if n * m <= 36 {
        let general = comb(n, m).expect("sides validated").to_general();
        let (k, witness) = burning_number_exact_witness(&general, &OracleConfig::default())
            .expect("instance small enough for the oracle");
        assert_eq!(
            k, t,
            "closed form must agree with exact search on comb({n},{m})"
        );
        let g = comb(n, m).expect("sides validated");
        let trace = normalize(&g, &witness)?;
        let greedy = greedy_comb(t, n, m, 1).expect("sides validated");
        assert!(greedy.success, "greedy must succeed at its own horizon");
        assert_eq!(
            trace.final_sequence(),
            &greedy.sequence,
            "optimal sequence must normalize to the greedy one on comb({n},{m})"
        );
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(g: &CombGraph, t: u64, fires: &[(u64, u64)]) -> BurningSequence {
        let centers = fires
            .iter()
            .map(|&(tooth, height)| g.vertex_id(CombVertex { tooth, height }));
        BurningSequence::new(t, centers.collect()).unwrap()
    }

    fn labels(trace: &NormalizationTrace) -> Vec<NormalizeStep> {
        trace.steps.iter().map(|&(l, _)| l).collect()
    }

    #[test]
    fn boundary_and_spread_walk() {
        let g = comb(9, 3).unwrap();
        let input = seq(&g, 5, &[(2, 1), (6, 1), (9, 1), (8, 3)]);
        let trace = normalize(&g, &input).unwrap();
        assert_eq!(
            labels(&trace),
            vec![NormalizeStep::Boundary, NormalizeStep::Spread]
        );
        // First move packs fire 1 against the left boundary; the small fire
        // is still needed at that point.
        assert_eq!(
            trace.steps[0].1,
            seq(&g, 5, &[(3, 1), (6, 1), (9, 1), (8, 3)])
        );
        // Packing fire 2 covers tooth 8 entirely, so the replay drops the
        // small fire in the same snapshot.
        assert_eq!(trace.steps[1].1, seq(&g, 5, &[(3, 1), (7, 1), (9, 1)]));
        let greedy = greedy_comb(5, 9, 3, 1).unwrap();
        assert_eq!(trace.final_sequence(), &greedy.sequence);
    }

    #[test]
    fn out_of_order_big_fires_are_dragged_together() {
        let g = comb(7, 4).unwrap();
        // Valid optimal cover whose big fires sit right-to-left: moving fire
        // 1 to the boundary only works if fire 2 moves in the same snapshot.
        let input = seq(&g, 5, &[(5, 1), (2, 1), (1, 2), (3, 3), (7, 4)]);
        let trace = normalize(&g, &input).unwrap();
        assert_eq!(labels(&trace), vec![NormalizeStep::Boundary]);
        assert_eq!(
            trace.final_sequence(),
            &greedy_comb(5, 7, 4, 1).unwrap().sequence
        );
    }

    #[test]
    fn greedy_outputs_are_fixed_points() {
        for (n, m, t) in [
            (7, 4, 5),
            (9, 3, 5),
            (18, 4, 7),
            (18, 4, 8),
            (20, 5, 8),
            (16, 1, 4),
            (3, 3, 3),
            (6, 6, 6),
        ] {
            let out = greedy_comb(t, n, m, 1).unwrap();
            assert!(out.success, "greedy must cover comb({n},{m}) at t={t}");
            let g = comb(n, m).unwrap();
            let trace = normalize(&g, &out.sequence).unwrap();
            assert!(
                trace.steps.is_empty(),
                "greedy output must be a fixed point on comb({n},{m}) at t={t}, got {:?}",
                labels(&trace)
            );
        }
    }

    #[test]
    fn normalization_is_idempotent() {
        let g = comb(7, 4).unwrap();
        let input = seq(&g, 5, &[(2, 1), (4, 1), (7, 4), (6, 3), (5, 4)]);
        let trace = normalize(&g, &input).unwrap();
        let again = normalize(&g, trace.final_sequence()).unwrap();
        assert!(again.steps.is_empty());
    }

    #[test]
    fn reassign_restores_forest_placement() {
        let g = comb(7, 4).unwrap();
        // Greedy with fire 4 nudged from (6,4) to (6,3); still covering.
        let input = seq(&g, 5, &[(2, 1), (4, 1), (7, 4), (6, 3), (5, 4)]);
        let trace = normalize(&g, &input).unwrap();
        assert_eq!(labels(&trace), vec![NormalizeStep::Reassign]);
        assert_eq!(
            trace.final_sequence(),
            &greedy_comb(5, 7, 4, 1).unwrap().sequence
        );
    }

    #[test]
    fn reduce_lift_and_spread_compose() {
        let g = comb(6, 3).unwrap();
        // Fire 3 is inside fire 1's coverage (Reduce), fire 1 sits off the
        // spine (SpineLift), and fire 2 then packs to the right (Spread)
        // where the next Reduce erases it.
        let input = seq(&g, 6, &[(4, 2), (1, 1), (6, 1)]);
        let trace = normalize(&g, &input).unwrap();
        assert_eq!(
            labels(&trace),
            vec![
                NormalizeStep::Reduce,
                NormalizeStep::SpineLift,
                NormalizeStep::Spread,
                NormalizeStep::Reduce,
            ]
        );
        let greedy = greedy_comb(6, 6, 3, 1).unwrap();
        assert_eq!(greedy.sequence, seq(&g, 6, &[(4, 1)]));
        assert_eq!(trace.final_sequence(), &greedy.sequence);
    }

    #[test]
    fn non_covering_input_is_rejected_with_the_gap() {
        let g = comb(7, 4).unwrap();
        let input = seq(&g, 5, &[(2, 1), (4, 1), (5, 4), (6, 4), (7, 4)]);
        match normalize(&g, &input) {
            Err(NormalizeError::NotCovering { uncovered }) => {
                assert!(uncovered.contains(&CombVertex {
                    tooth: 7,
                    height: 2
                }));
            }
            other => panic!("expected NotCovering, got {other:?}"),
        }
        let single = seq(&g, 5, &[(1, 1)]);
        assert!(matches!(
            normalize(&g, &single),
            Err(NormalizeError::NotCovering { .. })
        ));
    }

    #[test]
    fn tall_combs_are_rejected() {
        let g = comb(3, 5).unwrap();
        let input = seq(&g, 4, &[(1, 1)]);
        assert_eq!(
            normalize(&g, &input).unwrap_err(),
            NormalizeError::NotSpine { n: 3, m: 5 }
        );
    }

    #[test]
    fn trace_length_stays_small() {
        let g = comb(9, 3).unwrap();
        let input = seq(&g, 5, &[(2, 1), (6, 1), (9, 1), (8, 3)]);
        let trace = normalize(&g, &input).unwrap();
        assert!(trace.steps.len() as u64 <= 5 + (3 - 1) * 9);
    }

    #[test]
    fn every_snapshot_covers() {
        for (nm, t, input) in [
            ((6, 3), 6, vec![(4, 2), (1, 1), (6, 1)]),
            ((7, 4), 5, vec![(5, 1), (2, 1), (1, 2), (3, 3), (7, 4)]),
            ((9, 3), 5, vec![(2, 1), (6, 1), (9, 1), (8, 3)]),
        ] {
            let g = comb(nm.0, nm.1).unwrap();
            let trace = normalize(&g, &seq(&g, t, &input)).unwrap();
            for (label, snap) in &trace.steps {
                let report = verify_cover(&g, snap).unwrap();
                assert!(report.covered, "snapshot after {label} must cover");
            }
        }
    }

    #[test]
    fn optimality_examples() {
        assert_eq!(optimality_via_normalization(7, 4).unwrap(), 5);
        assert_eq!(optimality_via_normalization(9, 3).unwrap(), 5);
        assert_eq!(optimality_via_normalization(20, 5).unwrap(), 8);
        assert_eq!(optimality_via_normalization(16, 1).unwrap(), 4);
        assert_eq!(optimality_via_normalization(6, 6).unwrap(), 6);
        for n in 1..=9 {
            assert_eq!(
                optimality_via_normalization(n, 1).unwrap(),
                crate::arith::ceil_sqrt(n)
            );
        }
        assert_eq!(
            optimality_via_normalization(4, 7).unwrap_err(),
            NormalizeError::NotSpine { n: 4, m: 7 }
        );
    }
}
