//! Seeded random graph generation for the randomized sweeps.
//!
//! Every generator takes an explicit RNG so sweeps stay reproducible and
//! independent of thread scheduling: trial `i` of a campaign seeds its
//! own `ChaCha8Rng` from `(campaign seed, i)`.

use std::ops::RangeInclusive;

use rand::Rng;

use crate::graph::Graph;

/// Connected graph: a uniform random spanning tree plus extra edges.
pub fn random_connected<R: Rng>(order: RangeInclusive<usize>, rng: &mut R) -> Graph {
    let n = rng.gen_range(order);
    let mut edges = Vec::new();
    // Random attachment tree keeps connectivity unconditional.
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    if n >= 2 {
        let extra_budget = n * (n - 1) / 2 - (n - 1);
        let extras = rng.gen_range(0..=extra_budget.min(2 * n));
        let mut g = Graph::build(n, &edges).expect("tree edges are valid");
        for _ in 0..extras {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v && !g.has_edge(u, v) {
                g = g.add_edges(&[(u, v)]).expect("checked absent");
            }
        }
        return g;
    }
    Graph::build(n, &edges).expect("valid")
}

/// Connected nonbipartite graph of order at least 3.
pub fn random_connected_nonbipartite<R: Rng>(
    order: RangeInclusive<usize>,
    rng: &mut R,
) -> Graph {
    let lo = (*order.start()).max(3);
    let hi = (*order.end()).max(lo);
    let mut g = random_connected(lo..=hi, rng);
    if g.is_bipartite() {
        // Close an odd cycle: any two vertices at even distance >= 2 work,
        // and a connected graph on >= 3 vertices always has such a pair.
        let n = g.order();
        'outer: for u in 0..n {
            let dist = g.distances_from(u);
            for (v, d) in dist.iter().enumerate() {
                if u != v && !g.has_edge(u, v) && d.is_some_and(|d| d % 2 == 0) {
                    g = g.add_edges(&[(u, v)]).expect("checked absent");
                    break 'outer;
                }
            }
        }
    }
    debug_assert!(!g.is_bipartite());
    g
}

/// Connected nonbipartite unicyclic graph with at least one pendant:
/// an odd cycle with a random attachment forest grown on it.
pub fn random_unicyclic_nonbipartite<R: Rng>(
    order: RangeInclusive<usize>,
    rng: &mut R,
) -> Graph {
    let lo = (*order.start()).max(4);
    let hi = (*order.end()).max(lo);
    let n = rng.gen_range(lo..=hi);
    let max_cycle = n - 1; // leave room for one tree vertex
    let s_choices: Vec<usize> = (3..=max_cycle).step_by(2).collect();
    let s = s_choices[rng.gen_range(0..s_choices.len())];
    let mut edges: Vec<(usize, usize)> = (1..s).map(|i| (i - 1, i)).collect();
    edges.push((s - 1, 0));
    for v in s..n {
        edges.push((rng.gen_range(0..v), v));
    }
    let g = Graph::build(n, &edges).expect("cycle plus tree edges are valid");
    debug_assert_eq!(g.size(), g.order());
    debug_assert!(!g.is_bipartite());
    g
}
