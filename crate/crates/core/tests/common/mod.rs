//! Shared helpers for the integration suites: seeded random graphs and the
//! brute-force signed walk counter used as an independent oracle.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sgraph::SignedGraph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random signed graph on exactly `n` vertices: each pair is a positive
/// edge, a negative edge, or absent, with probability 1/3 each.
pub fn random_signed_graph(rng: &mut ChaCha8Rng, n: usize) -> SignedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            match rng.gen_range(0..3) {
                0 => edges.push((u, v, 1)),
                1 => edges.push((u, v, -1)),
                _ => {}
            }
        }
    }
    SignedGraph::build(n, &edges).unwrap()
}

/// Difference between the numbers of positive and negative closed walks of
/// length `k`, counted by explicit enumeration. Independent of the matrix
/// powering the library uses.
pub fn signed_closed_walks_brute(g: &SignedGraph, k: usize) -> i64 {
    fn rec(
        adj: &[Vec<(usize, sgraph::Sign)>],
        start: usize,
        v: usize,
        left: usize,
        sign: i64,
    ) -> i64 {
        if left == 0 {
            return if v == start { sign } else { 0 };
        }
        adj[v]
            .iter()
            .map(|&(w, s)| rec(adj, start, w, left - 1, sign * s.value()))
            .sum()
    }
    let adj = g.adjacency_lists();
    (0..g.n()).map(|v| rec(&adj, v, v, k, 1)).sum()
}
