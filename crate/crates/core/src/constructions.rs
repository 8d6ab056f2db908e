//! Named signed-graph families, the recursive hypercube signing and its
//! doubling step, Seidel graphs, and the bundled catalog of reference graphs
//! with declared characteristic polynomials.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::graph::{Sign, SignedGraph, MAX_VERTICES};
use crate::matrix::{self, SymMatrix};
use crate::poly::Poly;
use crate::spectral;
use crate::{Error, Result};

pub fn complete(n: usize, sign: Sign) -> Result<SignedGraph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v, sign.value()));
        }
    }
    SignedGraph::build(n, &edges)
}

/// Cycle on `n >= 3` vertices; a negative cycle sign puts exactly one
/// negative edge (the closing edge).
pub fn cycle(n: usize, cycle_sign: Sign) -> Result<SignedGraph> {
    if n < 3 {
        return Err(Error::BadParams(format!("cycle needs n >= 3, got {n}")));
    }
    let mut edges: Vec<(usize, usize, i64)> =
        (0..n - 1).map(|i| (i, i + 1, 1)).collect();
    edges.push((0, n - 1, cycle_sign.value()));
    SignedGraph::build(n, &edges)
}

pub fn path(n: usize) -> Result<SignedGraph> {
    let edges: Vec<(usize, usize, i64)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1, 1)).collect();
    SignedGraph::build(n, &edges)
}

/// Star `K_{1, n-1}` with center 0.
pub fn star(n: usize) -> Result<SignedGraph> {
    if n == 0 {
        return Err(Error::BadParams("star needs n >= 1".into()));
    }
    let edges: Vec<(usize, usize, i64)> = (1..n).map(|v| (0, v, 1)).collect();
    SignedGraph::build(n, &edges)
}

/// All-positive d-dimensional hypercube.
pub fn hypercube(d: usize) -> Result<SignedGraph> {
    if d > 6 {
        return Err(Error::TooLarge {
            what: "hypercube dimension",
            value: d,
            bound: 6,
        });
    }
    let n = 1usize << d;
    let mut edges = Vec::new();
    for v in 0..n {
        for b in 0..d {
            let w = v ^ (1 << b);
            if v < w {
                edges.push((v, w, 1));
            }
        }
    }
    SignedGraph::build(n, &edges)
}

pub fn unbalanced_c4() -> SignedGraph {
    SignedGraph::build(4, &[(0, 1, -1), (1, 2, 1), (2, 3, 1), (0, 3, 1)]).unwrap()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycleArrangement {
    /// Cycles pairwise vertex-disjoint.
    Disjoint,
    /// All cycles share one hub vertex.
    Shared,
}

/// `2 * pairs` odd cycles of length `ell`, half positive and half negative.
pub fn bouquet(pairs: usize, ell: usize, arrangement: CycleArrangement) -> Result<SignedGraph> {
    if pairs == 0 {
        return Err(Error::BadParams("bouquet needs at least one pair".into()));
    }
    if ell < 3 || ell % 2 == 0 {
        return Err(Error::BadParams(format!(
            "bouquet cycles must have odd length >= 3, got {ell}"
        )));
    }
    let cycles = 2 * pairs;
    let n = match arrangement {
        CycleArrangement::Disjoint => cycles * ell,
        CycleArrangement::Shared => cycles * (ell - 1) + 1,
    };
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "bouquet order",
            value: n,
            bound: MAX_VERTICES,
        });
    }
    let mut edges: Vec<(usize, usize, i64)> = Vec::new();
    for c in 0..cycles {
        let negative = c >= pairs;
        let ring: Vec<usize> = match arrangement {
            CycleArrangement::Disjoint => (0..ell).map(|i| c * ell + i).collect(),
            CycleArrangement::Shared => std::iter::once(0)
                .chain((0..ell - 1).map(|i| 1 + c * (ell - 1) + i))
                .collect(),
        };
        for i in 0..ell {
            let (u, v) = (ring[i], ring[(i + 1) % ell]);
            let s = if negative && i == 0 { -1 } else { 1 };
            edges.push((u, v, s));
        }
    }
    SignedGraph::build(n, &edges)
}

/// String dispatcher for the named families, e.g. `complete(4,-)`,
/// `cycle(5,+)`, `path(4)`, `star(5)`, `hypercube(3)`, `unbalanced_c4`,
/// `bouquet(2,3,disjoint)` (first argument = total number of cycles).
pub fn named(expr: &str) -> Result<SignedGraph> {
    let expr = expr.trim();
    let (name, args): (&str, Vec<&str>) = match expr.find('(') {
        None => (expr, Vec::new()),
        Some(open) => {
            let close = expr
                .rfind(')')
                .ok_or_else(|| Error::BadParams(format!("unbalanced parentheses in '{expr}'")))?;
            let inner = &expr[open + 1..close];
            let args = if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner.split(',').map(str::trim).collect()
            };
            (&expr[..open], args)
        }
    };
    let want = |k: usize| -> Result<()> {
        if args.len() != k {
            Err(Error::BadParams(format!(
                "{name} expects {k} argument(s), got {}",
                args.len()
            )))
        } else {
            Ok(())
        }
    };
    let int = |s: &str| -> Result<usize> {
        s.parse()
            .map_err(|_| Error::BadParams(format!("expected an integer, got '{s}'")))
    };
    let sign = |s: &str| -> Result<Sign> {
        match s {
            "+" | "+1" => Ok(Sign::Plus),
            "-" | "-1" => Ok(Sign::Minus),
            other => Err(Error::BadParams(format!("expected + or -, got '{other}'"))),
        }
    };
    match name {
        "complete" => {
            want(2)?;
            complete(int(args[0])?, sign(args[1])?)
        }
        "cycle" => {
            want(2)?;
            cycle(int(args[0])?, sign(args[1])?)
        }
        "path" => {
            want(1)?;
            path(int(args[0])?)
        }
        "star" => {
            want(1)?;
            star(int(args[0])?)
        }
        "hypercube" => {
            want(1)?;
            hypercube(int(args[0])?)
        }
        "unbalanced_c4" => {
            want(0)?;
            Ok(unbalanced_c4())
        }
        "bouquet" => {
            want(3)?;
            let total = int(args[0])?;
            if total == 0 || total % 2 != 0 {
                return Err(Error::BadParams(format!(
                    "bouquet cycle count must be even and positive, got {total}"
                )));
            }
            let arrangement = match args[2] {
                "disjoint" => CycleArrangement::Disjoint,
                "shared" => CycleArrangement::Shared,
                other => {
                    return Err(Error::BadParams(format!(
                        "expected disjoint or shared, got '{other}'"
                    )))
                }
            };
            bouquet(total / 2, int(args[1])?, arrangement)
        }
        other => Err(Error::UnknownName(other.to_string())),
    }
}

/// The recursive hypercube signing `A_1 = [[0,1],[1,0]]`,
/// `A_{d+1} = [[A_d, I], [I, -A_d]]`, which satisfies `A_d^2 = d I` exactly.
pub fn huang_signing(d: usize) -> Result<SignedGraph> {
    if d == 0 {
        return Err(Error::BadParams("dimension must be >= 1".into()));
    }
    if d > 6 {
        return Err(Error::TooLarge {
            what: "hypercube dimension",
            value: d,
            bound: 6,
        });
    }
    let mut edges: Vec<(usize, usize, i64)> = vec![(0, 1, 1)];
    for k in 1..d {
        let half = 1usize << k;
        let mut next: Vec<(usize, usize, i64)> = Vec::with_capacity(edges.len() * 2 + half);
        next.extend(edges.iter().copied());
        next.extend(edges.iter().map(|&(u, v, s)| (u + half, v + half, -s)));
        next.extend((0..half).map(|i| (i, i + half, 1)));
        edges = next;
    }
    SignedGraph::build(1 << d, &edges)
}

/// Doubles a weighing-signing: from `A^2 = k I` on `n` vertices builds
/// `B = [[A, I], [I, -A]]` on `2n` vertices with `B^2 = (k+1) I`. The input
/// is rejected unless `A^2` is exactly a multiple of the identity.
pub fn double_signing(g: &SignedGraph) -> Result<SignedGraph> {
    let a = matrix::adjacency::<i64>(g);
    if a.pow(2).scalar_of_identity().is_none() {
        return Err(Error::PreconditionFailed(
            "adjacency matrix does not square to a multiple of the identity".into(),
        ));
    }
    let n = g.n();
    if 2 * n > MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "doubled order",
            value: 2 * n,
            bound: MAX_VERTICES,
        });
    }
    let mut edges: Vec<(usize, usize, i64)> = Vec::with_capacity(g.m() * 2 + n);
    for e in g.edges() {
        edges.push((e.u, e.v, e.sign.value()));
        edges.push((e.u + n, e.v + n, -e.sign.value()));
    }
    edges.extend((0..n).map(|i| (i, i + n, 1)));
    SignedGraph::build(2 * n, &edges)
}

/// Signed complete graph whose adjacency matrix is `J - I - 2A(g)`: edges of
/// the underlying graph of `g` become negative, non-edges positive.
pub fn seidel(g: &SignedGraph) -> Result<SignedGraph> {
    let n = g.n();
    if n < 2 {
        return Err(Error::BadParams(format!(
            "Seidel graph needs n >= 2, got {n}"
        )));
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v, if g.has_edge(u, v) { -1 } else { 1 }));
        }
    }
    SignedGraph::build(n, &edges)
}

/// One validated entry of a graph catalog.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub graph: SignedGraph,
    pub expected_char_poly: Option<Poly<BigInt>>,
    pub provenance: String,
}

/// Parses the catalog text format: per block a `name` line, the order `n`
/// (optionally `n m`), `m` lines `u v s` with `s` in `{+, -}`, and an
/// optional `charpoly c0 c1 ... cn` line (ascending coefficients). Blocks
/// are separated by blank lines; `#` comments attach to the next entry as
/// provenance. Entries carrying a `charpoly` line are recomputed and
/// rejected on mismatch.
pub fn catalog_parse(text: &str) -> Result<Vec<CatalogEntry>> {
    let mut entries = Vec::new();
    let mut comments: Vec<String> = Vec::new();
    let mut lines = text.lines().enumerate().peekable();
    while let Some(&(idx, line)) = lines.peek() {
        let trimmed = line.trim();
        if trimmed.is_empty() {
            lines.next();
            continue;
        }
        if let Some(c) = trimmed.strip_prefix('#') {
            comments.push(c.trim().to_string());
            lines.next();
            continue;
        }
        // name line
        let name = trimmed.to_string();
        lines.next();
        let (n_idx, n_line) = lines
            .next()
            .ok_or(Error::Parse {
                line: idx + 1,
                message: format!("entry '{name}' missing order line"),
            })?;
        let mut header = n_line.split_whitespace();
        let n: usize = header
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(Error::Parse {
                line: n_idx + 1,
                message: format!("entry '{name}': bad order line '{n_line}'"),
            })?;
        let declared_m: Option<usize> = header.next().and_then(|t| t.parse().ok());
        let mut edges: Vec<(usize, usize, i64)> = Vec::new();
        let mut charpoly: Option<Poly<BigInt>> = None;
        while let Some(&(e_idx, e_line)) = lines.peek() {
            let t = e_line.trim();
            if t.is_empty() {
                break;
            }
            lines.next();
            if t.starts_with('#') {
                continue;
            }
            if let Some(rest) = t.strip_prefix("charpoly") {
                let coeffs: Result<Vec<BigInt>> = rest
                    .split_whitespace()
                    .map(|tok| {
                        tok.parse::<BigInt>().map_err(|_| Error::Parse {
                            line: e_idx + 1,
                            message: format!("bad coefficient '{tok}'"),
                        })
                    })
                    .collect();
                charpoly = Some(Poly::from_coeffs(coeffs?));
                continue;
            }
            let toks: Vec<&str> = t.split_whitespace().collect();
            if toks.len() != 3 {
                return Err(Error::Parse {
                    line: e_idx + 1,
                    message: format!("expected 'u v s', got '{t}'"),
                });
            }
            let parse_v = |tok: &str| -> Result<usize> {
                tok.parse().map_err(|_| Error::Parse {
                    line: e_idx + 1,
                    message: format!("bad vertex id '{tok}'"),
                })
            };
            let s = match toks[2] {
                "+" | "+1" | "1" => 1,
                "-" | "-1" => -1,
                other => {
                    return Err(Error::Parse {
                        line: e_idx + 1,
                        message: format!("bad sign '{other}'"),
                    })
                }
            };
            edges.push((parse_v(toks[0])?, parse_v(toks[1])?, s));
        }
        if let Some(m) = declared_m {
            if m != edges.len() {
                return Err(Error::ValidationFailed {
                    name: name.clone(),
                    message: format!("declared {m} edges, found {}", edges.len()),
                });
            }
        }
        let graph = SignedGraph::build(n, &edges)?;
        if let Some(expected) = &charpoly {
            let got = spectral::char_poly(&graph);
            if got != *expected {
                return Err(Error::ValidationFailed {
                    name: name.clone(),
                    message: format!("characteristic polynomial is {got}, declared {expected}"),
                });
            }
        }
        entries.push(CatalogEntry {
            name,
            graph,
            expected_char_poly: charpoly,
            provenance: comments.join(" "),
        });
        comments.clear();
    }
    Ok(entries)
}

pub fn catalog_load(path: &std::path::Path) -> Result<Vec<CatalogEntry>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    catalog_parse(&text)
}

/// The catalog bundled with the crate, validated on every load.
pub fn builtin_catalog() -> Result<Vec<CatalogEntry>> {
    catalog_parse(crate::data::CATALOG)
}

/// Exact `A^2 = w I` weight of a signed graph, if any.
pub fn weighing_weight(g: &SignedGraph) -> Option<i64> {
    let a: SymMatrix<i64> = matrix::adjacency(g);
    a.pow(2).scalar_of_identity().filter(|_| g.n() > 0)
}

/// `(x - 2)^k (x + 2)^k`, the two-eigenvalue polynomial of the weight-4
/// family.
pub fn two_eigenvalue_poly(k: usize) -> Poly<BigInt> {
    Poly::from_coeffs(vec![BigInt::from(-4), BigInt::zero(), BigInt::from(1)]).pow(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cert;

    #[test]
    fn named_builders() {
        let k4m = named("complete(4,-)").unwrap();
        assert_eq!(k4m.m(), 6);
        assert!(k4m.edges().iter().all(|e| e.sign == Sign::Minus));
        let c4m = named("cycle(4,-)").unwrap();
        assert!(cert::are_switching_isomorphic(&c4m, &unbalanced_c4()).unwrap());
        let q3 = named("hypercube(3)").unwrap();
        assert_eq!((q3.n(), q3.m()), (8, 12));
        assert!(matches!(named("zorp(3)"), Err(Error::UnknownName(_))));
        assert!(matches!(named("path(x)"), Err(Error::BadParams(_))));
    }

    #[test]
    fn huang_squares_to_dimension() {
        for d in 1..=4 {
            let g = huang_signing(d).unwrap();
            assert_eq!(g.n(), 1 << d);
            assert_eq!(weighing_weight(&g), Some(d as i64));
        }
        // d = 2 is the unbalanced four-cycle up to switching
        assert!(cert::are_switching_isomorphic(&huang_signing(2).unwrap(), &unbalanced_c4()).unwrap());
    }

    #[test]
    fn doubling_chains() {
        let b = double_signing(&unbalanced_c4()).unwrap();
        assert_eq!(b.n(), 8);
        assert_eq!(weighing_weight(&b), Some(3));
        assert_eq!(b.degree_sequence(), vec![3; 8]);
        let b2 = double_signing(&b).unwrap();
        assert_eq!(weighing_weight(&b2), Some(4));
        // doubling the 2-dimensional signing gives the 3-dimensional one
        let via_double = double_signing(&huang_signing(2).unwrap()).unwrap();
        assert!(cert::are_switching_isomorphic(&via_double, &huang_signing(3).unwrap()).unwrap());
        let p3 = path(3).unwrap();
        assert!(matches!(
            double_signing(&p3),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn seidel_graphs() {
        let empty5 = SignedGraph::build(5, &[]).unwrap();
        let s = seidel(&empty5).unwrap();
        assert!(s.edges().iter().all(|e| e.sign == Sign::Plus));
        assert_eq!(s.m(), 10);
        let k5 = complete(5, Sign::Plus).unwrap();
        let s = seidel(&k5).unwrap();
        assert!(s.edges().iter().all(|e| e.sign == Sign::Minus));
        // all-negative K5 spectrum {1,1,1,1,-4}: char poly (x-1)^4 (x+4)
        let want = Poly::from_coeffs(vec![BigInt::from(-1), BigInt::from(1)])
            .pow(4)
            .mul(&Poly::from_coeffs(vec![BigInt::from(4), BigInt::from(1)]));
        assert_eq!(spectral::char_poly(&s), want);
    }

    #[test]
    fn catalog_rejects_bad_charpoly() {
        let text = "K3_plus\n3\n0 1 +\n1 2 +\n0 2 +\ncharpoly 5 0 0 1\n";
        assert!(matches!(
            catalog_parse(text),
            Err(Error::ValidationFailed { .. })
        ));
        let ok = "K3_plus\n3\n0 1 +\n1 2 +\n0 2 +\ncharpoly -2 -3 0 1\n";
        let entries = catalog_parse(ok).unwrap();
        assert_eq!(entries.len(), 1);
        assert_eq!(entries[0].graph.m(), 3);
    }

    #[test]
    fn bouquet_shapes() {
        let d = bouquet(1, 3, CycleArrangement::Disjoint).unwrap();
        assert_eq!((d.n(), d.m()), (6, 6));
        assert_eq!(d.components().len(), 2);
        let s = bouquet(1, 3, CycleArrangement::Shared).unwrap();
        assert_eq!((s.n(), s.m()), (5, 6));
        assert_eq!(s.components().len(), 1);
        assert!(bouquet(1, 4, CycleArrangement::Disjoint).is_err());
    }
}
