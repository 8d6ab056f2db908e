//! Combinatorial polynomial identities: basic-figure (Sachs) coefficients,
//! deletion expansions with cycle corrections, matching polynomials, and the
//! signing-average identity that ties them together.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::graph::{DeleteTarget, Sign, SignedGraph, VertexSet};
use crate::poly::Poly;
use crate::search::SignatureSpace;
use crate::{constructions, eigen, matrix, spectral};
use crate::{Error, Result};

/// Basic-figure enumeration is exponential; past this order it stops being
/// pleasant on a laptop.
pub const SACHS_MAX_VERTICES: usize = 12;
pub const SCHWENK_MAX_VERTICES: usize = 12;
pub const MATCHING_MAX_VERTICES: usize = 14;
pub const AVERAGE_MAX_XI: usize = 16;

/// Simple cycles grouped by vertex-support mask; the value is the sum of the
/// cycle signs over all cycles with that support.
fn cycles_by_support(g: &SignedGraph) -> Vec<(u64, i64)> {
    let adj = g.adjacency_lists();
    let n = g.n();
    let mut acc: std::collections::HashMap<u64, i64> = std::collections::HashMap::new();
    let mut path: Vec<usize> = Vec::new();
    // paths start at the cycle's minimum vertex
    for root in 0..n {
        path.clear();
        path.push(root);
        dfs_cycles(g, &adj, root, 1u64 << root, Sign::Plus, &mut path, &mut acc);
    }
    let mut out: Vec<(u64, i64)> = acc.into_iter().collect();
    out.sort_unstable();
    out
}

fn dfs_cycles(
    g: &SignedGraph,
    adj: &[Vec<(usize, Sign)>],
    root: usize,
    mask: u64,
    sign: Sign,
    path: &mut Vec<usize>,
    acc: &mut std::collections::HashMap<u64, i64>,
) {
    let v = *path.last().unwrap();
    for &(w, s) in &adj[v] {
        if w <= root || (mask >> w) & 1 == 1 {
            continue;
        }
        let next_sign = sign * s;
        if path.len() >= 2 && path[1] < w {
            if let Some(closing) = g.sign(w, root) {
                let cycle_sign = next_sign * closing;
                *acc.entry(mask | (1 << w)).or_insert(0) += cycle_sign.value();
            }
        }
        path.push(w);
        dfs_cycles(g, adj, root, mask | (1 << w), next_sign, path, acc);
        path.pop();
    }
}

/// Simple cycles through a fixed vertex, grouped by support mask with summed
/// signs.
fn cycles_through_vertex(g: &SignedGraph, v: usize) -> Vec<(u64, i64)> {
    cycles_by_support(g)
        .into_iter()
        .filter(|&(mask, _)| (mask >> v) & 1 == 1)
        .collect()
}

/// Simple cycles through a fixed edge: paths `u -> v` avoiding the edge
/// itself, closed by it.
fn cycles_through_edge(g: &SignedGraph, edge_id: usize) -> Vec<(u64, i64)> {
    fn walk(
        adj: &[Vec<(usize, Sign)>],
        e: crate::graph::Edge,
        v: usize,
        mask: u64,
        sign: Sign,
        acc: &mut std::collections::HashMap<u64, i64>,
    ) {
        for &(w, s) in &adj[v] {
            if (mask >> w) & 1 == 1 {
                continue;
            }
            if w == e.v {
                if mask.count_ones() >= 2 {
                    let cycle_sign = sign * s * e.sign;
                    *acc.entry(mask | (1 << w)).or_insert(0) += cycle_sign.value();
                }
                continue;
            }
            walk(adj, e, w, mask | (1 << w), sign * s, acc);
        }
    }
    let e = g.edges()[edge_id];
    let adj = g.adjacency_lists();
    let mut acc: std::collections::HashMap<u64, i64> = std::collections::HashMap::new();
    walk(&adj, e, e.u, 1u64 << e.u, Sign::Plus, &mut acc);
    let mut out: Vec<(u64, i64)> = acc.into_iter().collect();
    out.sort_unstable();
    out
}

/// Characteristic polynomial assembled from basic figures: each coefficient
/// `a_i` sums `(-1)^p 2^c sigma` over the disjoint unions of edges and cycles
/// covering `i` vertices. Computed by dynamic programming over vertex masks,
/// independently of any matrix algebra.
pub fn sachs_char_poly(g: &SignedGraph) -> Result<Poly<BigInt>> {
    let n = g.n();
    if n > SACHS_MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "basic-figure order",
            value: n,
            bound: SACHS_MAX_VERTICES,
        });
    }
    let adj = g.adjacency_lists();
    let cycles = cycles_by_support(g);
    // bucket cycle supports by their minimum vertex
    let mut by_low: Vec<Vec<(u64, i64)>> = vec![Vec::new(); n.max(1)];
    for &(mask, s) in &cycles {
        by_low[mask.trailing_zeros() as usize].push((mask, s));
    }
    let size = 1usize << n;
    let mut fig = vec![BigInt::zero(); size];
    fig[0] = BigInt::one();
    for mask in 1..size {
        let m = mask as u64;
        let v = m.trailing_zeros() as usize;
        let mut acc = BigInt::zero();
        for &(u, _) in &adj[v] {
            if (m >> u) & 1 == 1 {
                let rest = m & !(1 << v) & !(1 << u);
                acc -= &fig[rest as usize];
            }
        }
        for &(cmask, sig) in &by_low[v] {
            if cmask & !m == 0 {
                let rest = m & !cmask;
                acc -= BigInt::from(2 * sig) * &fig[rest as usize];
            }
        }
        fig[mask] = acc;
    }
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (mask, value) in fig.iter().enumerate() {
        let i = (mask as u64).count_ones() as usize;
        coeffs[n - i] += value;
    }
    Ok(Poly::from_coeffs(coeffs))
}

/// Pivot for the deletion expansion.
#[derive(Clone, Copy, Debug)]
pub enum Pivot {
    Vertex(usize),
    /// Index into the normalized edge list.
    Edge(usize),
}

/// Left-hand side minus right-hand side of the deletion expansion of the
/// characteristic polynomial at the pivot. The identity says this is the zero
/// polynomial:
///
/// vertex `v`:  `phi = x phi(G-v) - sum_{u~v} phi(G-u-v) - 2 sum_{C through v} sigma(C) phi(G-C)`
/// edge `uv`:   `phi = phi(G-e) - phi(G-u-v) - 2 sum_{C through e} sigma(C) phi(G-C)`
pub fn schwenk_residual(g: &SignedGraph, pivot: Pivot) -> Result<Poly<BigInt>> {
    let n = g.n();
    if n > SCHWENK_MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "deletion-expansion order",
            value: n,
            bound: SCHWENK_MAX_VERTICES,
        });
    }
    let phi = spectral::char_poly(g);
    let x = Poly::monomial(BigInt::one(), 1);
    let two = BigInt::from(2);
    let rhs = match pivot {
        Pivot::Vertex(v) => {
            if v >= n {
                return Err(Error::NotFound(format!("vertex {v}")));
            }
            let minus_v = g.delete(DeleteTarget::Vertex(v))?;
            let mut rhs = x.mul(&spectral::char_poly(&minus_v));
            for e in g.edges() {
                let u = if e.u == v {
                    e.v
                } else if e.v == v {
                    e.u
                } else {
                    continue;
                };
                let both = VertexSet::from_indices(n, &[u, v]).unwrap();
                let sub = g.delete(DeleteTarget::Vertices(both))?;
                rhs = rhs.sub(&spectral::char_poly(&sub));
            }
            for (mask, sig) in cycles_through_vertex(g, v) {
                let sub = g.delete(DeleteTarget::Vertices(VertexSet::from_mask(n, mask)))?;
                let term = spectral::char_poly(&sub).scale(&(&two * BigInt::from(sig)));
                rhs = rhs.sub(&term);
            }
            rhs
        }
        Pivot::Edge(id) => {
            if id >= g.m() {
                return Err(Error::NotFound(format!("edge #{id}")));
            }
            let e = g.edges()[id];
            let minus_e = g.delete(DeleteTarget::Edge(id))?;
            let both = VertexSet::from_indices(n, &[e.u, e.v]).unwrap();
            let minus_uv = g.delete(DeleteTarget::Vertices(both))?;
            let mut rhs = spectral::char_poly(&minus_e).sub(&spectral::char_poly(&minus_uv));
            for (mask, sig) in cycles_through_edge(g, id) {
                let sub = g.delete(DeleteTarget::Vertices(VertexSet::from_mask(n, mask)))?;
                let term = spectral::char_poly(&sub).scale(&(&two * BigInt::from(sig)));
                rhs = rhs.sub(&term);
            }
            rhs
        }
    };
    Ok(phi.sub(&rhs))
}

/// Matching counts `m_k` of the underlying graph (signs ignored): `m_0 = 1`
/// and `m_k` is the number of k-edge matchings. Dynamic programming over
/// induced vertex masks.
pub fn matching_counts(g: &SignedGraph) -> Result<Vec<BigInt>> {
    let n = g.n();
    if n > MATCHING_MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "matching-count order",
            value: n,
            bound: MATCHING_MAX_VERTICES,
        });
    }
    let adj = g.adjacency_lists();
    let size = 1usize << n;
    let mut table: Vec<Vec<BigInt>> = Vec::with_capacity(size);
    table.push(vec![BigInt::one()]);
    for mask in 1..size {
        let m = mask as u64;
        let v = m.trailing_zeros() as usize;
        let without_v = (m & !(1 << v)) as usize;
        let mut counts = table[without_v].clone();
        for &(u, _) in &adj[v] {
            if (m >> u) & 1 == 1 {
                let rest = (m & !(1 << v) & !(1 << u)) as usize;
                let sub = &table[rest];
                if counts.len() < sub.len() + 1 {
                    counts.resize(sub.len() + 1, BigInt::zero());
                }
                for (k, c) in sub.iter().enumerate() {
                    counts[k + 1] += c;
                }
            }
        }
        table.push(counts);
    }
    Ok(table.pop().unwrap())
}

/// Matching polynomial `sum_k (-1)^k m_k x^(n-2k)` of the underlying graph.
pub fn matching_polynomial(g: &SignedGraph) -> Result<Poly<BigInt>> {
    let n = g.n();
    let counts = matching_counts(g)?;
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (k, c) in counts.iter().enumerate() {
        let signed = if k % 2 == 0 { c.clone() } else { -c.clone() };
        coeffs[n - 2 * k] = signed;
    }
    Ok(Poly::from_coeffs(coeffs))
}

/// Average of the adjacency characteristic polynomials over one
/// representative per switching class. Classes have equal size, so this
/// equals the average over all `2^m` signings, which is the matching
/// polynomial of the underlying graph.
pub fn godsil_gutman_average(g: &SignedGraph) -> Result<Poly<BigRational>> {
    let space = SignatureSpace::new(g)?;
    if space.xi() > AVERAGE_MAX_XI {
        return Err(Error::TooLarge {
            what: "cyclomatic number",
            value: space.xi(),
            bound: AVERAGE_MAX_XI,
        });
    }
    let mut sum: Poly<BigInt> = Poly::zero();
    for signed in space.iter() {
        sum = sum.add(&spectral::char_poly(&signed));
    }
    let count = BigInt::one() << space.xi();
    Ok(sum.map(|c| BigRational::new(c.clone(), count.clone())))
}

/// Disjoint union of `2k` odd cycles of equal length, half positive and half
/// negative, against the bound `2 sqrt(4k - 1)` on its spectral radius.
#[derive(Clone, Debug)]
pub struct BouquetCheck {
    pub rho: f64,
    pub bound: f64,
    pub holds: bool,
}

pub fn odd_cycle_bouquet_check(k: usize, ell: usize, tol: f64) -> Result<BouquetCheck> {
    let g = constructions::bouquet(k, ell, constructions::CycleArrangement::Disjoint)?;
    let rho = eigen::eigenvalues(&matrix::adjacency::<f64>(&g), tol)?.rho();
    let bound = 2.0 * ((4 * k) as f64 - 1.0).sqrt();
    Ok(BouquetCheck {
        rho,
        bound,
        holds: rho < bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(n: usize, edges: &[(usize, usize, i64)]) -> SignedGraph {
        SignedGraph::build(n, edges).unwrap()
    }

    fn ipoly(cs: &[i64]) -> Poly<BigInt> {
        Poly::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn sachs_triangles() {
        let k3p = build(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)]);
        assert_eq!(sachs_char_poly(&k3p).unwrap(), ipoly(&[-2, -3, 0, 1]));
        let k3m = build(3, &[(0, 1, -1), (1, 2, 1), (0, 2, 1)]);
        assert_eq!(sachs_char_poly(&k3m).unwrap(), ipoly(&[2, -3, 0, 1]));
    }

    #[test]
    fn sachs_forest_is_matchings_only() {
        let star = build(4, &[(0, 1, 1), (0, 2, -1), (0, 3, 1)]);
        assert_eq!(sachs_char_poly(&star).unwrap(), ipoly(&[0, 0, -3, 0, 1]));
        assert_eq!(
            sachs_char_poly(&star).unwrap(),
            matching_polynomial(&star).unwrap()
        );
    }

    #[test]
    fn sachs_agrees_with_char_poly() {
        let g = build(
            5,
            &[(0, 1, -1), (1, 2, 1), (2, 3, -1), (3, 4, 1), (0, 4, 1), (1, 3, 1), (0, 2, -1)],
        );
        assert_eq!(sachs_char_poly(&g).unwrap(), spectral::char_poly(&g));
    }

    #[test]
    fn schwenk_residual_is_zero() {
        let tree = build(5, &[(0, 1, 1), (1, 2, -1), (1, 3, 1), (3, 4, -1)]);
        assert!(schwenk_residual(&tree, Pivot::Vertex(1)).unwrap().is_zero());
        let k3m = build(3, &[(0, 1, -1), (1, 2, 1), (0, 2, 1)]);
        for v in 0..3 {
            assert!(schwenk_residual(&k3m, Pivot::Vertex(v)).unwrap().is_zero());
        }
        let c4m = build(4, &[(0, 1, -1), (1, 2, 1), (2, 3, 1), (0, 3, 1)]);
        for e in 0..4 {
            assert!(schwenk_residual(&c4m, Pivot::Edge(e)).unwrap().is_zero());
        }
    }

    #[test]
    fn matching_polynomial_examples() {
        let p3 = build(3, &[(0, 1, 1), (1, 2, 1)]);
        assert_eq!(matching_polynomial(&p3).unwrap(), ipoly(&[0, -2, 0, 1]));
        let k2 = build(2, &[(0, 1, 1)]);
        assert_eq!(matching_polynomial(&k2).unwrap(), ipoly(&[-1, 0, 1]));
        let c4 = build(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)]);
        assert_eq!(matching_polynomial(&c4).unwrap(), ipoly(&[2, 0, -4, 0, 1]));
    }

    #[test]
    fn average_equals_matching_polynomial() {
        for g in [
            build(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)]),
            build(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)]),
            build(4, &[(0, 1, 1), (1, 2, 1), (1, 3, 1)]),
        ] {
            let avg = godsil_gutman_average(&g).unwrap();
            let mu = matching_polynomial(&g).unwrap().to_rational();
            assert_eq!(avg, mu);
        }
    }

    #[test]
    fn bouquet_bound_holds() {
        for (k, ell) in [(1, 3), (1, 5), (2, 3)] {
            let r = odd_cycle_bouquet_check(k, ell, 1e-10).unwrap();
            assert!(r.holds, "k={k} ell={ell}: rho={} bound={}", r.rho, r.bound);
            assert!((r.rho - 2.0).abs() < 1e-8);
        }
    }
}
