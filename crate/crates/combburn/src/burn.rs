//! Burning sequences and their two validity notions.
//!
//! A sequence of centers `c_1..c_j` at horizon `k` covers the graph when the
//! balls `B(c_i, k-i)` exhaust the vertex set; this is the relaxed form the
//! rest of the crate optimizes. The strict process form additionally demands
//! each center be unburned when it ignites. The two forms reach the same
//! minimum horizon, which the test suite checks by brute force on small
//! graphs.

use crate::comb::{CombGraph, CombVertex};
use crate::graph::GeneralGraph;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BurnError {
    #[error("center #{index} (id {id}) out of range for graph with {count} vertices")]
    InvalidCenter { index: usize, id: u64, count: u64 },
    #[error("sequence has {len} centers but horizon k={k}")]
    TooManyCenters { len: usize, k: u64 },
    #[error("horizon k must be positive")]
    ZeroHorizon,
    #[error("malformed sequence JSON: {0}")]
    Json(String),
}

/// Centers in ignition order at a fixed horizon. Fire `i` (1-based) has
/// radius `k - i` at the end of the process; fewer than `k` centers is fine.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BurningSequence {
    pub k: u64,
    pub centers: Vec<u64>,
}

impl BurningSequence {
    pub fn new(k: u64, centers: Vec<u64>) -> Result<Self, BurnError> {
        if k == 0 {
            return Err(BurnError::ZeroHorizon);
        }
        if centers.len() as u64 > k {
            return Err(BurnError::TooManyCenters {
                len: centers.len(),
                k,
            });
        }
        Ok(BurningSequence { k, centers })
    }
}

/// Per-vertex outcome of a burning run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurnReport {
    pub covered: bool,
    /// Round each vertex first burned, `None` if it survives the horizon.
    pub burn_time: Vec<Option<u64>>,
    /// Ids of surviving vertices, ascending.
    pub uncovered: Vec<u64>,
    /// For strict simulation: whether each center was unburned at ignition.
    pub strict: Option<Vec<bool>>,
}

impl BurnReport {
    pub fn is_strict_valid(&self) -> Option<bool> {
        self.strict.as_ref().map(|v| v.iter().all(|&b| b))
    }
}

/// Graphs a burning process can run on. Combs answer closed-form; general
/// graphs fall back to BFS.
pub trait BurnGraph {
    fn vertex_count(&self) -> u64;
    fn distances_from(&self, v: u64) -> Vec<u64>;
    fn neighbor_ids(&self, v: u64) -> Vec<u64>;
}

impl BurnGraph for GeneralGraph {
    fn vertex_count(&self) -> u64 {
        self.vertex_count() as u64
    }

    fn distances_from(&self, v: u64) -> Vec<u64> {
        self.bfs_distances(v as usize)
    }

    fn neighbor_ids(&self, v: u64) -> Vec<u64> {
        self.neighbors(v as usize)
            .iter()
            .map(|&u| u as u64)
            .collect()
    }
}

impl BurnGraph for CombGraph {
    fn vertex_count(&self) -> u64 {
        self.vertex_count()
    }

    fn distances_from(&self, v: u64) -> Vec<u64> {
        let src = self.vertex_from_id(v);
        let mut out = Vec::with_capacity(self.vertex_count() as usize);
        for t in 1..=self.n() {
            let base = (src.height - 1) + src.tooth.abs_diff(t);
            for h in 1..=self.m() {
                out.push(if t == src.tooth {
                    src.height.abs_diff(h)
                } else {
                    base + (h - 1)
                });
            }
        }
        out
    }

    fn neighbor_ids(&self, v: u64) -> Vec<u64> {
        let CombVertex { tooth, height } = self.vertex_from_id(v);
        let mut out = Vec::with_capacity(4);
        if height > 1 {
            out.push(self.vertex_id(CombVertex {
                tooth,
                height: height - 1,
            }));
        }
        if height < self.m() {
            out.push(self.vertex_id(CombVertex {
                tooth,
                height: height + 1,
            }));
        }
        if height == 1 {
            if tooth > 1 {
                out.push(self.vertex_id(CombVertex {
                    tooth: tooth - 1,
                    height: 1,
                }));
            }
            if tooth < self.n() {
                out.push(self.vertex_id(CombVertex {
                    tooth: tooth + 1,
                    height: 1,
                }));
            }
        }
        out.sort_unstable();
        out
    }
}

fn check_centers(g: &impl BurnGraph, seq: &BurningSequence) -> Result<(), BurnError> {
    if seq.k == 0 {
        return Err(BurnError::ZeroHorizon);
    }
    if seq.centers.len() as u64 > seq.k {
        return Err(BurnError::TooManyCenters {
            len: seq.centers.len(),
            k: seq.k,
        });
    }
    let count = g.vertex_count();
    for (i, &c) in seq.centers.iter().enumerate() {
        if c >= count {
            return Err(BurnError::InvalidCenter {
                index: i,
                id: c,
                count,
            });
        }
    }
    Ok(())
}

/// Ball-cover check: vertex `v` burns at `min_i (i + d(v, c_i))`, and the
/// sequence covers the graph when no vertex outlives round `k`.
pub fn verify_cover(g: &impl BurnGraph, seq: &BurningSequence) -> Result<BurnReport, BurnError> {
    check_centers(g, seq)?;
    let count = g.vertex_count() as usize;
    let mut best = vec![u64::MAX; count];
    for (idx, &c) in seq.centers.iter().enumerate() {
        let ignite = idx as u64 + 1;
        for (v, d) in g.distances_from(c).into_iter().enumerate() {
            // `d` is u64::MAX for unreachable vertices; saturate instead of overflowing.
            best[v] = best[v].min(ignite.saturating_add(d));
        }
    }
    let burn_time: Vec<Option<u64>> = best.iter().map(|&t| (t <= seq.k).then_some(t)).collect();
    let uncovered: Vec<u64> = burn_time
        .iter()
        .enumerate()
        .filter(|(_, t)| t.is_none())
        .map(|(v, _)| v as u64)
        .collect();
    Ok(BurnReport {
        covered: uncovered.is_empty(),
        burn_time,
        uncovered,
        strict: None,
    })
}

/// Round-by-round process: in round `i` every burning vertex spreads to its
/// neighbors, then center `i` ignites. Reports whether each center was still
/// unburned at its ignition (strict validity) alongside the cover verdict.
pub fn simulate_strict(g: &impl BurnGraph, seq: &BurningSequence) -> Result<BurnReport, BurnError> {
    check_centers(g, seq)?;
    let count = g.vertex_count() as usize;
    let mut time = vec![None::<u64>; count];
    let mut frontier: Vec<u64> = Vec::new();
    let mut strict = Vec::with_capacity(seq.centers.len());
    for round in 1..=seq.k {
        // A center is validly chosen when it is unburned at the end of the
        // previous round; this round's spread has not reached it yet.
        let fresh = seq
            .centers
            .get(round as usize - 1)
            .map(|&c| time[c as usize].is_none());
        let mut next = Vec::new();
        for &v in &frontier {
            for u in g.neighbor_ids(v) {
                if time[u as usize].is_none() {
                    time[u as usize] = Some(round);
                    next.push(u);
                }
            }
        }
        if let Some(&c) = seq.centers.get(round as usize - 1) {
            strict.push(fresh.unwrap());
            if time[c as usize].is_none() {
                time[c as usize] = Some(round);
                next.push(c);
            }
        }
        frontier.extend(next);
        // Frontier only needs vertices burned this round.
        frontier.retain(|&v| time[v as usize] == Some(round));
    }
    let uncovered: Vec<u64> = time
        .iter()
        .enumerate()
        .filter(|(_, t)| t.is_none())
        .map(|(v, _)| v as u64)
        .collect();
    Ok(BurnReport {
        covered: uncovered.is_empty(),
        burn_time: time,
        uncovered,
        strict: Some(strict),
    })
}

#[derive(Serialize, Deserialize)]
struct CombSeqJson {
    k: u64,
    centers: Vec<CombVertex>,
}

/// Renders a sequence over a comb as `{"k": .., "centers": [[tooth, height], ..]}`.
pub fn sequence_to_comb_json(g: &CombGraph, seq: &BurningSequence) -> String {
    let centers: Vec<CombVertex> = seq.centers.iter().map(|&id| g.vertex_from_id(id)).collect();
    serde_json::to_string(&CombSeqJson { k: seq.k, centers }).expect("serializable")
}

/// Parses the comb JSON form, validating every coordinate pair.
pub fn sequence_from_comb_json(g: &CombGraph, text: &str) -> Result<BurningSequence, BurnError> {
    let parsed: CombSeqJson =
        serde_json::from_str(text).map_err(|e| BurnError::Json(e.to_string()))?;
    let mut centers = Vec::with_capacity(parsed.centers.len());
    for v in parsed.centers {
        g.check_vertex(v)
            .map_err(|e| BurnError::Json(e.to_string()))?;
        centers.push(g.vertex_id(v));
    }
    BurningSequence::new(parsed.k, centers)
}
