//! Spectral quantities of signed graphs: exact walk/moment counts, signed
//! diameter, balance via the Laplacian determinant, and the average-degree
//! floor on the spectral radius.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::eigen::{self, SpectrumReal};
use crate::graph::SignedGraph;
use crate::matrix::{self, SymMatrix};
use crate::poly::Poly;
use crate::{Error, Result};

/// Cap on the moment order in [`spectral_summary`].
pub const MAX_MOMENT: usize = 16;

/// Exact characteristic polynomial of the adjacency matrix.
pub fn char_poly(g: &SignedGraph) -> Poly<BigInt> {
    matrix::char_poly(&matrix::adjacency::<BigInt>(g)).expect("graph order is within matrix cap")
}

/// Exact characteristic polynomial of the Laplacian.
pub fn laplacian_char_poly(g: &SignedGraph) -> Poly<BigInt> {
    matrix::char_poly(&matrix::laplacian::<BigInt>(g)).expect("graph order is within matrix cap")
}

/// Adjacency eigenvalues at the given tolerance.
pub fn spectrum(g: &SignedGraph, tol: f64) -> Result<SpectrumReal<f64>> {
    eigen::eigenvalues(&matrix::adjacency::<f64>(g), tol)
}

/// Laplacian eigenvalues at the given tolerance.
pub fn laplacian_spectrum(g: &SignedGraph, tol: f64) -> Result<SpectrumReal<f64>> {
    eigen::eigenvalues(&matrix::laplacian::<f64>(g), tol)
}

/// Numeric eigenvalue summary plus exact spectral moments `trace(A^k)`.
///
/// The k-th moment equals the difference between the numbers of positive and
/// negative closed k-walks.
#[derive(Clone, Debug)]
pub struct SpectralSummary {
    pub lambda1: f64,
    pub lambda_n: f64,
    pub rho: f64,
    pub moments: Vec<BigInt>,
    pub tol: f64,
}

pub fn spectral_summary(g: &SignedGraph, k_max: usize, tol: f64) -> Result<SpectralSummary> {
    if k_max > MAX_MOMENT {
        return Err(Error::TooLarge {
            what: "moment order",
            value: k_max,
            bound: MAX_MOMENT,
        });
    }
    let spec = spectrum(g, tol)?;
    let a = matrix::adjacency::<BigInt>(g);
    let mut moments = Vec::with_capacity(k_max + 1);
    let mut power = SymMatrix::<BigInt>::identity(g.n());
    moments.push(power.trace());
    for _ in 1..=k_max {
        power = power.mul(&a);
        moments.push(power.trace());
    }
    Ok(SpectralSummary {
        lambda1: spec.lambda1(),
        lambda_n: spec.lambda_min(),
        rho: spec.rho(),
        moments,
        tol: spec.tol(),
    })
}

/// `(A^k)_{uv}`: the difference between the numbers of positive and negative
/// walks of length `k` from `u` to `v`, exactly.
pub fn walk_difference(g: &SignedGraph, u: usize, v: usize, k: usize) -> Result<BigInt> {
    let n = g.n();
    for x in [u, v] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    let a = matrix::adjacency::<BigInt>(g);
    Ok(a.pow(k).get(u, v).clone())
}

/// All-pairs distances of the underlying graph by BFS. `usize::MAX` marks
/// unreachable pairs.
fn distances(g: &SignedGraph) -> Vec<Vec<usize>> {
    let adj = g.adjacency_masks();
    let n = g.n();
    let mut dist = vec![vec![usize::MAX; n]; n];
    for s in 0..n {
        let d = &mut dist[s];
        d[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let mut nbrs = adj[v];
            while nbrs != 0 {
                let w = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                if d[w] == usize::MAX {
                    d[w] = d[v] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    dist
}

/// Signed diameter: the largest distance `k` over vertex pairs for which the
/// positive/negative k-walk counts differ. Pairs whose walk counts cancel at
/// their distance contribute 0.
pub fn signed_diameter(g: &SignedGraph) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let dist = distances(g);
    let diam = (0..n)
        .flat_map(|u| dist[u].iter().copied())
        .max()
        .unwrap_or(0);
    if diam == 0 {
        return Ok(0);
    }
    let a = matrix::adjacency::<BigInt>(g);
    let mut powers = Vec::with_capacity(diam + 1);
    powers.push(SymMatrix::<BigInt>::identity(n));
    for k in 1..=diam {
        let prev = &powers[k - 1];
        powers.push(prev.mul(&a));
    }
    let mut best = 0usize;
    for u in 0..n {
        for v in u + 1..n {
            let k = dist[u][v];
            if k > best && !powers[k].get(u, v).is_zero() {
                best = k;
            }
        }
    }
    Ok(best)
}

/// Zaslavsky's balance criterion for connected graphs: `det(L) = 0` exactly
/// iff the signature is switching equivalent to the all-positive one.
pub fn laplacian_balance_check(g: &SignedGraph) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(matrix::laplacian::<BigInt>(g).det().is_zero())
}

/// Average-degree floor on the spectral radius.
#[derive(Clone, Debug)]
pub struct GregoryCheck {
    /// `sqrt(2m / n)`, the square root of the average degree.
    pub bound: f64,
    pub rho: f64,
    /// True iff `A^2 = k I` exactly, i.e. the adjacency matrix is a symmetric
    /// weighing matrix of weight `k` (forcing a k-regular underlying graph).
    pub equality: bool,
    /// The weight `k` when `equality` holds.
    pub weight: Option<u64>,
}

pub fn gregory_check(g: &SignedGraph, tol: f64) -> Result<GregoryCheck> {
    let n = g.n();
    let bound = if n == 0 {
        0.0
    } else {
        (2.0 * g.m() as f64 / n as f64).sqrt()
    };
    let rho = spectrum(g, tol)?.rho();
    let a = matrix::adjacency::<i64>(g);
    let weight = a.pow(2).scalar_of_identity().map(|k| k as u64);
    Ok(GregoryCheck {
        bound,
        rho,
        equality: weight.is_some() && n > 0,
        weight,
    })
}

/// All adjacency eigenvalues in `[-2, 2]`, decided exactly.
pub fn is_cyclotomic(g: &SignedGraph) -> bool {
    use num_rational::BigRational;
    let p = char_poly(g);
    let two = BigRational::from(BigInt::from(2));
    p.count_roots_outside(&(-two.clone()), &two) == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    fn build(n: usize, edges: &[(usize, usize, i64)]) -> SignedGraph {
        SignedGraph::build(n, edges).unwrap()
    }

    fn k3(signs: [i64; 3]) -> SignedGraph {
        build(3, &[(0, 1, signs[0]), (1, 2, signs[1]), (0, 2, signs[2])])
    }

    #[test]
    fn moments_match_edges_and_triangles() {
        let g = k3([1, 1, 1]);
        let s = spectral_summary(&g, 3, 1e-10).unwrap();
        assert_eq!(s.moments[2], BigInt::from(6)); // 2m
        assert_eq!(s.moments[3], BigInt::from(6)); // 6 (t+ - t-)
        let s = spectral_summary(&k3([-1, -1, -1]), 3, 1e-10).unwrap();
        assert_eq!(s.moments[3], BigInt::from(-6));
    }

    #[test]
    fn walk_difference_examples() {
        let p3 = build(3, &[(0, 1, 1), (1, 2, 1)]);
        assert_eq!(walk_difference(&p3, 0, 0, 0).unwrap(), BigInt::from(1));
        assert_eq!(walk_difference(&p3, 0, 1, 1).unwrap(), BigInt::from(1));
        assert_eq!(walk_difference(&p3, 0, 2, 2).unwrap(), BigInt::from(1));
        assert!(walk_difference(&p3, 0, 5, 1).is_err());
    }

    #[test]
    fn signed_diameter_examples() {
        assert_eq!(signed_diameter(&build(2, &[(0, 1, 1)])).unwrap(), 1);
        assert_eq!(signed_diameter(&build(3, &[(0, 1, 1), (1, 2, 1)])).unwrap(), 2);
        let disconnected = build(3, &[(0, 1, 1)]);
        assert_eq!(signed_diameter(&disconnected), Err(Error::Disconnected));
    }

    #[test]
    fn diameter_bounded_by_distinct_eigenvalues() {
        let g = k3([1, 1, -1]);
        let p = char_poly(&g);
        assert!(signed_diameter(&g).unwrap() <= p.distinct_root_count() - 1);
    }

    #[test]
    fn balance_checks_agree() {
        assert!(laplacian_balance_check(&k3([1, 1, 1])).unwrap());
        assert!(!laplacian_balance_check(&k3([1, 1, -1])).unwrap());
        let tree = build(4, &[(0, 1, -1), (1, 2, 1), (1, 3, -1)]);
        assert!(laplacian_balance_check(&tree).unwrap());
        for g in [k3([1, 1, 1]), k3([1, 1, -1]), k3([-1, -1, -1])] {
            assert_eq!(laplacian_balance_check(&g).unwrap(), g.is_balanced());
        }
    }

    #[test]
    fn gregory_examples() {
        let c4m = build(4, &[(0, 1, -1), (1, 2, 1), (2, 3, 1), (0, 3, 1)]);
        let r = gregory_check(&c4m, 1e-10).unwrap();
        assert!(r.equality);
        assert_eq!(r.weight, Some(2));
        assert!((r.bound - 2f64.sqrt()).abs() < 1e-12);
        assert!((r.rho - 2f64.sqrt()).abs() < 1e-9);
        let p3 = build(3, &[(0, 1, 1), (1, 2, 1)]);
        let r = gregory_check(&p3, 1e-10).unwrap();
        assert!(!r.equality);
        assert!((r.bound - (4.0f64 / 3.0).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn char_poly_switching_invariance() {
        let g = build(5, &[(0, 1, -1), (1, 2, 1), (2, 3, -1), (3, 4, 1), (0, 4, 1), (1, 3, -1)]);
        let p = char_poly(&g);
        for mask in 0u64..32 {
            let s = g.switch(&VertexSet::from_mask(5, mask));
            assert_eq!(char_poly(&s), p);
        }
    }

    #[test]
    fn cyclotomic_examples() {
        let c4m = build(4, &[(0, 1, -1), (1, 2, 1), (2, 3, 1), (0, 3, 1)]);
        assert!(is_cyclotomic(&c4m));
        assert!(is_cyclotomic(&k3([-1, -1, -1])));
        let k4 = build(
            4,
            &[(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)],
        );
        assert!(!is_cyclotomic(&k4));
    }
}
