//! The comb graph `C_{n,m}` in coordinate form.
//!
//! Tooth `t` runs from its spine vertex `(t, 1)` up to its leaf `(t, m)`;
//! spine vertices of consecutive teeth are adjacent. Distances and balls are
//! closed-form, so combs with billions of vertices cost nothing to query;
//! adjacency is only materialized by [`CombGraph::to_general`].

use crate::graph::GeneralGraph;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CombError {
    #[error("comb sides must be positive, got n={n}, m={m}")]
    ZeroSide { n: u64, m: u64 },
    #[error("vertex (tooth {tooth}, height {height}) outside comb with n={n}, m={m}")]
    VertexOutsideComb {
        tooth: u64,
        height: u64,
        n: u64,
        m: u64,
    },
}

/// 1-based comb coordinates. Height 1 is the spine, height `m` the leaf.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(u64, u64)", into = "(u64, u64)")]
pub struct CombVertex {
    pub tooth: u64,
    pub height: u64,
}

impl From<(u64, u64)> for CombVertex {
    fn from((tooth, height): (u64, u64)) -> Self {
        CombVertex { tooth, height }
    }
}

impl From<CombVertex> for (u64, u64) {
    fn from(v: CombVertex) -> Self {
        (v.tooth, v.height)
    }
}

impl std::fmt::Display for CombVertex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.tooth, self.height)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CombGraph {
    n: u64,
    m: u64,
}

/// Builds `C_{n,m}`: spine `P_n`, one `P_m` tooth per spine vertex.
pub fn comb(n: u64, m: u64) -> Result<CombGraph, CombError> {
    if n == 0 || m == 0 {
        return Err(CombError::ZeroSide { n, m });
    }
    Ok(CombGraph { n, m })
}

impl CombGraph {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn vertex_count(&self) -> u64 {
        self.n * self.m
    }

    pub fn contains(&self, v: CombVertex) -> bool {
        (1..=self.n).contains(&v.tooth) && (1..=self.m).contains(&v.height)
    }

    pub fn check_vertex(&self, v: CombVertex) -> Result<(), CombError> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(CombError::VertexOutsideComb {
                tooth: v.tooth,
                height: v.height,
                n: self.n,
                m: self.m,
            })
        }
    }

    /// Tooth-major flat id: `(tooth-1)*m + (height-1)`.
    pub fn vertex_id(&self, v: CombVertex) -> u64 {
        (v.tooth - 1) * self.m + (v.height - 1)
    }

    pub fn vertex_from_id(&self, id: u64) -> CombVertex {
        CombVertex {
            tooth: id / self.m + 1,
            height: id % self.m + 1,
        }
    }

    /// Graph distance: within a tooth it is the height difference; across
    /// teeth the path descends to the spine, walks it, and climbs back up.
    pub fn distance(&self, u: CombVertex, v: CombVertex) -> Result<u64, CombError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(if u.tooth == v.tooth {
            u.height.abs_diff(v.height)
        } else {
            (u.height - 1) + (v.height - 1) + u.tooth.abs_diff(v.tooth)
        })
    }

    /// Vertices within distance `r` of `v`, ascending by (tooth, height).
    pub fn ball(&self, v: CombVertex, r: u64) -> Result<Vec<CombVertex>, CombError> {
        self.check_vertex(v)?;
        let mut out = Vec::new();
        let lo = v.tooth.saturating_sub(r).max(1);
        let hi = (v.tooth + r).min(self.n);
        for t in lo..=hi {
            if t == v.tooth {
                let h_lo = v.height.saturating_sub(r).max(1);
                let h_hi = (v.height + r).min(self.m);
                out.extend((h_lo..=h_hi).map(|h| CombVertex {
                    tooth: t,
                    height: h,
                }));
            } else {
                // Budget left after descending to the spine and walking over.
                let spent = (v.height - 1) + v.tooth.abs_diff(t);
                if spent <= r {
                    let h_hi = (r - spent + 1).min(self.m);
                    out.extend((1..=h_hi).map(|h| CombVertex {
                        tooth: t,
                        height: h,
                    }));
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Materializes adjacency. Meant for oracle-scale instances; the closed
    /// forms never need it.
    pub fn to_general(&self) -> GeneralGraph {
        let total = usize::try_from(self.vertex_count()).expect("comb too large to materialize");
        let mut g = GeneralGraph::new(total).unwrap();
        for t in 1..=self.n {
            for h in 1..self.m {
                let a = self.vertex_id(CombVertex {
                    tooth: t,
                    height: h,
                });
                g.add_edge(a as usize, (a + 1) as usize).unwrap();
            }
            if t < self.n {
                let a = self.vertex_id(CombVertex {
                    tooth: t,
                    height: 1,
                });
                let b = self.vertex_id(CombVertex {
                    tooth: t + 1,
                    height: 1,
                });
                g.add_edge(a as usize, b as usize).unwrap();
            }
        }
        g
    }
}
