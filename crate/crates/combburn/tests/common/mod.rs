//! Brute-force references shared by the integration suites.
//!
//! Everything here is deliberately naive: plain bitset search with no
//! symmetry pruning, no closed forms and no greedy ordering, so a bug in the
//! library's algorithms cannot hide in its own reference.

#![allow(dead_code)]

use combburn::GeneralGraph;

/// Adjacency masks for graphs with at most 128 vertices.
pub fn adjacency_masks(g: &GeneralGraph) -> Vec<u128> {
    let n = g.vertex_count();
    assert!(n <= 128, "bitset references cap at 128 vertices");
    (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u128, |acc, &w| acc | (1 << w)))
        .collect()
}

/// ball_masks[v][r] for r = 0..=max_r, grown by repeated neighbor expansion.
pub fn ball_masks(g: &GeneralGraph, max_r: u64) -> Vec<Vec<u128>> {
    let adj = adjacency_masks(g);
    let n = g.vertex_count();
    (0..n)
        .map(|v| {
            let mut rows = Vec::with_capacity(max_r as usize + 1);
            let mut cur = 1u128 << v;
            rows.push(cur);
            for _ in 0..max_r {
                let mut next = cur;
                let mut rest = cur;
                while rest != 0 {
                    let w = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    next |= adj[w];
                }
                cur = next;
                rows.push(cur);
            }
            rows
        })
        .collect()
}

fn full_mask(n: usize) -> u128 {
    if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

/// Does any ordered choice of centers x_1..x_j (j <= k) cover the graph with
/// balls B(x_i, k-i)? Plain depth-first search over all center tuples.
/// Skipping redundant placements is safe: any uncovered vertex always offers
/// a non-redundant one that dominates it.
pub fn covering_feasible(g: &GeneralGraph, k: u64) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    let balls = ball_masks(g, k - 1);
    let full = full_mask(n);

    fn rec(balls: &[Vec<u128>], full: u128, covered: u128, radius: u64) -> bool {
        for rows in balls {
            let b = rows[radius as usize];
            if b | covered == covered {
                continue;
            }
            if b | covered == full {
                return true;
            }
            if radius > 0 && rec(balls, full, covered | b, radius - 1) {
                return true;
            }
        }
        false
    }

    rec(&balls, full, 0, k - 1)
}

/// Minimum k whose covering form is feasible. Caps at the vertex count,
/// which always suffices on any graph.
pub fn brute_burning_number(g: &GeneralGraph) -> u64 {
    (1..=g.vertex_count() as u64)
        .find(|&k| covering_feasible(g, k))
        .expect("igniting every vertex covers")
}

/// Round-by-round strict burning: each round the fire spreads to neighbors,
/// then one unburned vertex ignites. Success means everything is burned at
/// the end of round k.
pub fn strict_feasible(g: &GeneralGraph, k: u64) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    let adj = adjacency_masks(g);
    let full = full_mask(n);

    fn spread(adj: &[u128], burned: u128) -> u128 {
        let mut next = burned;
        let mut rest = burned;
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            next |= adj[w];
        }
        next
    }

    fn rec(adj: &[u128], full: u128, burned: u128, rounds_left: u64) -> bool {
        if burned == full {
            return true;
        }
        if rounds_left == 0 {
            return false;
        }
        // Spread happens at the start of every round after the first; the
        // caller passes the pre-spread state, so spread here, then ignite.
        let after = spread(adj, burned);
        if after == full {
            return true;
        }
        let mut fresh = full & !after;
        while fresh != 0 {
            let v = fresh.trailing_zeros();
            fresh &= fresh - 1;
            if rec(adj, full, after | (1 << v), rounds_left - 1) {
                return true;
            }
        }
        false
    }

    // Round 1 has no spread: ignite anywhere.
    (0..n).any(|v| rec(&adj, full, 1u128 << v, k - 1))
}

pub fn brute_burning_number_strict(g: &GeneralGraph) -> u64 {
    (1..=g.vertex_count() as u64)
        .find(|&k| strict_feasible(g, k))
        .expect("one ignition per vertex burns everything")
}

/// Exact minimum number of radius-r balls covering the graph: branch on the
/// first uncovered vertex, try every ball containing it.
pub fn exact_cover_count(g: &GeneralGraph, r: u64) -> u64 {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    let balls: Vec<u128> = ball_masks(g, r)
        .iter()
        .map(|rows| rows[r as usize])
        .collect();
    let full = full_mask(n);

    fn rec(balls: &[u128], full: u128, covered: u128, used: u64, best: &mut u64) {
        if used >= *best {
            return;
        }
        if covered == full {
            *best = used;
            return;
        }
        let v = (full & !covered).trailing_zeros();
        for &b in balls.iter().filter(|&&b| b & (1 << v) != 0) {
            rec(balls, full, covered | b, used + 1, best);
        }
    }

    let mut best = n as u64;
    rec(&balls, full, 0, 0, &mut best);
    best
}

/// Comb built straight from its definition: a spine chain plus one tooth
/// chain hanging off each spine vertex. Vertex ids are tooth-major,
/// height-minor, matching the library's layout.
pub fn comb_from_edges(n: u64, m: u64) -> GeneralGraph {
    let id = |tooth: u64, height: u64| ((tooth - 1) * m + (height - 1)) as usize;
    let mut g = GeneralGraph::new((n * m) as usize).unwrap();
    for t in 1..=n {
        for h in 1..m {
            g.add_edge(id(t, h), id(t, h + 1)).unwrap();
        }
        if t < n {
            g.add_edge(id(t, 1), id(t + 1, 1)).unwrap();
        }
    }
    g
}

pub fn cycle(n: usize) -> GeneralGraph {
    let mut g = GeneralGraph::new(n).unwrap();
    for v in 0..n {
        g.add_edge(v, (v + 1) % n).unwrap();
    }
    g
}

pub fn complete(n: usize) -> GeneralGraph {
    let mut g = GeneralGraph::new(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Star of paths: one hub with a path of each given length attached.
pub fn spider(legs: &[usize]) -> GeneralGraph {
    let total = 1 + legs.iter().sum::<usize>();
    let mut g = GeneralGraph::new(total).unwrap();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            g.add_edge(prev, next).unwrap();
            prev = next;
            next += 1;
        }
    }
    g
}

/// Path with one pendant leaf on every interior spine vertex.
pub fn caterpillar(spine: usize) -> GeneralGraph {
    assert!(spine >= 3);
    let legs = spine - 2;
    let mut g = GeneralGraph::new(spine + legs).unwrap();
    for v in 0..spine - 1 {
        g.add_edge(v, v + 1).unwrap();
    }
    for (i, v) in (1..spine - 1).enumerate() {
        g.add_edge(v, spine + i).unwrap();
    }
    g
}

/// Complete binary tree with the given number of vertices.
pub fn binary_tree(n: usize) -> GeneralGraph {
    let mut g = GeneralGraph::new(n).unwrap();
    for v in 1..n {
        g.add_edge((v - 1) / 2, v).unwrap();
    }
    g
}
