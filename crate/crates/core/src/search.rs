//! Exhaustive signature-space search: one representative per switching class
//! (spanning forest positive, cotree signs free), plus the minimization,
//! census, cospectral-grouping and Seidel scans built on top of it.
//!
//! Workers share nothing and results are merged in cotree-word order, so
//! reports are identical for any thread count.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::cert::{self, CanonicalCert, CERT_MAX_VERTICES};
use crate::graph::{CycleBasis, SignedGraph};
use crate::matrix::{self, SymMatrix};
use crate::poly::Poly;
use crate::{eigen, spectral};
use crate::{Error, Result};

/// Cap on the cyclomatic number for exhaustive scans (2^24 classes).
pub const MAX_XI: usize = 24;

/// Tie window for grouping floating objective values at the optimum.
const TIE_EPS: f64 = 1e-9;

/// Enumerates exactly one signed graph per switching class of an underlying
/// graph: forest edges are positive and the cotree edge signs run through all
/// `2^xi` patterns in binary counting order (bit j of the word is the sign of
/// cotree edge j, set = negative).
#[derive(Clone, Debug)]
pub struct SignatureSpace {
    base: SignedGraph,
    basis: CycleBasis,
}

impl SignatureSpace {
    /// Builds the space over the underlying graph of `g` (signs ignored).
    pub fn new(g: &SignedGraph) -> Result<SignatureSpace> {
        let base = g.underlying();
        let basis = base.cycle_basis();
        if basis.xi > MAX_XI {
            return Err(Error::TooLarge {
                what: "cyclomatic number",
                value: basis.xi,
                bound: MAX_XI,
            });
        }
        Ok(SignatureSpace { base, basis })
    }

    pub fn xi(&self) -> usize {
        self.basis.xi
    }

    pub fn len(&self) -> u64 {
        1u64 << self.basis.xi
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn basis(&self) -> &CycleBasis {
        &self.basis
    }

    pub fn underlying(&self) -> &SignedGraph {
        &self.base
    }

    /// The class representative for a cotree sign word.
    pub fn graph_for_word(&self, word: u64) -> SignedGraph {
        let mut signs: Vec<i64> = vec![1; self.base.m()];
        for (j, &edge_id) in self.basis.cotree_edges.iter().enumerate() {
            if (word >> j) & 1 == 1 {
                signs[edge_id] = -1;
            }
        }
        let edges: Vec<(usize, usize, i64)> = self
            .base
            .edges()
            .iter()
            .zip(&signs)
            .map(|(e, &s)| (e.u, e.v, s))
            .collect();
        SignedGraph::build(self.base.n(), &edges).expect("representative of a valid base")
    }

    pub fn iter(&self) -> impl Iterator<Item = SignedGraph> + '_ {
        (0..self.len()).map(move |w| self.graph_for_word(w))
    }
}

/// Objective for signature minimization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Objective {
    /// Spectral radius `max(|lambda_1|, |lambda_n|)`.
    Rho,
    /// Largest eigenvalue.
    Lambda1,
}

impl Objective {
    pub fn name(self) -> &'static str {
        match self {
            Objective::Rho => "rho",
            Objective::Lambda1 => "lambda1",
        }
    }

    fn eval(self, spec: &eigen::SpectrumReal<f64>) -> f64 {
        match self {
            Objective::Rho => spec.rho(),
            Objective::Lambda1 => spec.lambda1(),
        }
    }
}

/// One scanned signature.
#[derive(Clone, Debug, PartialEq)]
pub struct CandidateRecord {
    pub word: u64,
    pub value: f64,
}

/// Result of an exhaustive minimization over the switching classes.
#[derive(Clone, Debug)]
pub struct MinimizeReport {
    pub objective: &'static str,
    pub n: usize,
    pub m: usize,
    pub xi: usize,
    pub exhaustive: bool,
    pub records: Vec<CandidateRecord>,
    pub optimum: f64,
    pub maximum: f64,
    pub argmin_words: Vec<u64>,
    /// Certificates of the argmin classes, deduplicated, when the order
    /// admits them.
    pub argmin_certs: Vec<CanonicalCert>,
    pub timing_ms: f64,
}

/// Scans every switching class of the underlying graph of `g` and reports the
/// minimizing signatures together with the maximum for cross-checking.
pub fn minimize(g: &SignedGraph, objective: Objective, tol: f64) -> Result<MinimizeReport> {
    let start = std::time::Instant::now();
    let space = SignatureSpace::new(g)?;
    let records: Vec<CandidateRecord> = (0..space.len())
        .into_par_iter()
        .map(|word| {
            let sg = space.graph_for_word(word);
            let spec = spectral::spectrum(&sg, tol).expect("jacobi converges at the sweep cap");
            CandidateRecord {
                word,
                value: objective.eval(&spec),
            }
        })
        .collect();
    let optimum = records.iter().map(|r| r.value).fold(f64::INFINITY, f64::min);
    let maximum = records.iter().map(|r| r.value).fold(f64::NEG_INFINITY, f64::max);
    let argmin_words: Vec<u64> = records
        .iter()
        .filter(|r| r.value <= optimum + TIE_EPS)
        .map(|r| r.word)
        .collect();
    let mut argmin_certs = Vec::new();
    if space.underlying().n() <= CERT_MAX_VERTICES {
        let mut set = std::collections::BTreeSet::new();
        for &w in &argmin_words {
            set.insert(cert::canonical_cert(&space.graph_for_word(w))?);
        }
        argmin_certs = set.into_iter().collect();
    }
    Ok(MinimizeReport {
        objective: objective.name(),
        n: space.underlying().n(),
        m: space.underlying().m(),
        xi: space.xi(),
        exhaustive: true,
        records,
        optimum,
        maximum,
        argmin_words,
        argmin_certs,
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// The signature-existence statements that can be decided exhaustively.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConjectureKind {
    /// Some signature has spectral radius at most `2 sqrt(d-1)` (d-regular).
    BiluLinial,
    /// Some signature has largest eigenvalue at most `2 sqrt(d-1)` (d-regular).
    MssLambda1,
    /// Some signature has spectral radius strictly below `2 sqrt(Delta-1)`.
    GregoryDelta,
    /// Some signature has spectral radius strictly below `2 sqrt(rho(G)-1)`.
    GregoryRho,
}

impl ConjectureKind {
    pub fn name(self) -> &'static str {
        match self {
            ConjectureKind::BiluLinial => "bilu_linial",
            ConjectureKind::MssLambda1 => "mss_lambda1",
            ConjectureKind::GregoryDelta => "gregory_delta",
            ConjectureKind::GregoryRho => "gregory_rho",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ConjectureReport {
    pub kind: &'static str,
    pub bound: f64,
    pub strict: bool,
    pub holds: bool,
    pub witness_word: Option<u64>,
    pub witness_value: f64,
    pub best_value: f64,
    pub classes: u64,
}

/// Decides, by exhaustive scan, whether some signature of the underlying
/// graph meets the requested bound. Float comparisons carry a `1e-9` guard
/// on the non-strict predicates.
pub fn conjecture_check(g: &SignedGraph, kind: ConjectureKind, tol: f64) -> Result<ConjectureReport> {
    let degree = match kind {
        ConjectureKind::BiluLinial | ConjectureKind::MssLambda1 => {
            Some(g.regularity().ok_or(Error::NotRegular)?)
        }
        _ => None,
    };
    let (objective, bound, strict) = match kind {
        ConjectureKind::BiluLinial => {
            let d = degree.unwrap();
            (Objective::Rho, 2.0 * ((d as f64) - 1.0).max(0.0).sqrt(), false)
        }
        ConjectureKind::MssLambda1 => {
            let d = degree.unwrap();
            (Objective::Lambda1, 2.0 * ((d as f64) - 1.0).max(0.0).sqrt(), false)
        }
        ConjectureKind::GregoryDelta => {
            let delta = g.degree_sequence().into_iter().max().unwrap_or(0);
            (Objective::Rho, 2.0 * ((delta as f64) - 1.0).max(0.0).sqrt(), true)
        }
        ConjectureKind::GregoryRho => {
            let rho_g = spectral::spectrum(&g.underlying(), tol)?.rho();
            (Objective::Rho, 2.0 * (rho_g - 1.0).max(0.0).sqrt(), true)
        }
    };
    let report = minimize(g, objective, tol)?;
    let best = report.optimum;
    let holds = if strict {
        best < bound
    } else {
        best <= bound + TIE_EPS
    };
    let witness = report
        .records
        .iter()
        .find(|r| if strict { r.value < bound } else { r.value <= bound + TIE_EPS });
    Ok(ConjectureReport {
        kind: kind.name(),
        bound,
        strict,
        holds,
        witness_word: witness.map(|r| r.word),
        witness_value: witness.map_or(f64::NAN, |r| r.value),
        best_value: best,
        classes: report.records.len() as u64,
    })
}

/// Census predicates over switching classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CensusPredicate {
    /// All adjacency eigenvalues in [-2, 2], decided exactly.
    Cyclotomic,
    /// Spectral radius at most sqrt(2 + sqrt 5), decided by an exact rational
    /// sandwich with a 1e-9 guard band; sandwich-straddling hits are flagged.
    Hoffman,
    /// Symmetric spectrum (odd coefficients zero) but not sign-symmetric;
    /// only connected, non-complete underlying graphs are scanned.
    SymNotSignSymmetric,
    /// Adjacency matrix is a symmetric weighing matrix: A^2 = k I.
    Weighing,
}

impl CensusPredicate {
    pub fn name(self) -> &'static str {
        match self {
            CensusPredicate::Cyclotomic => "cyclotomic",
            CensusPredicate::Hoffman => "hoffman",
            CensusPredicate::SymNotSignSymmetric => "sym_not_signsym",
            CensusPredicate::Weighing => "weighing",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CensusHit {
    pub word: u64,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct CensusReport {
    pub graph_index: usize,
    pub n: usize,
    pub m: usize,
    pub xi: usize,
    pub hits: Vec<CensusHit>,
    /// Borderline candidates needing exact re-examination (Hoffman sandwich).
    pub flagged: Vec<CensusHit>,
    /// Present when the graph was skipped instead of scanned.
    pub skipped: Option<String>,
}

fn hoffman_sandwich() -> (BigRational, BigRational) {
    // sqrt(2 + sqrt 5) = 2.0581710272714924..; the inner bound sits just
    // below it, the outer bound one guard band above.
    let billion = BigInt::from(1_000_000_000u64);
    let inner = BigRational::new(BigInt::from(2_058_171_027u64), billion.clone());
    let outer = BigRational::new(BigInt::from(2_058_171_028u64), billion);
    (inner, outer)
}

fn symmetric_spectrum(p: &Poly<BigInt>) -> bool {
    p.coeffs()
        .iter()
        .enumerate()
        .all(|(i, c)| i % 2 == p.degree().unwrap_or(0) % 2 || c.is_zero())
}

/// Scans every switching class of every input graph, keeping the classes that
/// satisfy the predicate. Per-graph bound violations are recorded and the
/// stream continues.
pub fn census(graphs: &[SignedGraph], predicate: CensusPredicate) -> Vec<CensusReport> {
    graphs
        .par_iter()
        .enumerate()
        .map(|(graph_index, g)| census_one(graph_index, g, predicate))
        .collect()
}

fn census_one(graph_index: usize, g: &SignedGraph, predicate: CensusPredicate) -> CensusReport {
    let mut report = CensusReport {
        graph_index,
        n: g.n(),
        m: g.m(),
        xi: 0,
        hits: Vec::new(),
        flagged: Vec::new(),
        skipped: None,
    };
    let space = match SignatureSpace::new(g) {
        Ok(s) => s,
        Err(e) => {
            report.skipped = Some(e.to_string());
            return report;
        }
    };
    report.xi = space.xi();
    if predicate == CensusPredicate::SymNotSignSymmetric {
        if g.n() > CERT_MAX_VERTICES {
            report.skipped = Some(
                Error::TooLarge {
                    what: "certificate order",
                    value: g.n(),
                    bound: CERT_MAX_VERTICES,
                }
                .to_string(),
            );
            return report;
        }
        let complete = g.m() == g.n() * (g.n().saturating_sub(1)) / 2;
        if !g.is_connected() || complete {
            return report; // out of the predicate's scope: zero hits
        }
    }
    for (word, sg) in space.iter().enumerate() {
        let word = word as u64;
        match predicate {
            CensusPredicate::Cyclotomic => {
                if spectral::is_cyclotomic(&sg) {
                    report.hits.push(CensusHit {
                        word,
                        detail: spectral::char_poly(&sg).to_string(),
                    });
                }
            }
            CensusPredicate::Hoffman => {
                let p = spectral::char_poly(&sg);
                let (inner, outer) = hoffman_sandwich();
                let out_inner = p.count_roots_outside(&-inner.clone(), &inner);
                if out_inner == 0 {
                    report.hits.push(CensusHit {
                        word,
                        detail: p.to_string(),
                    });
                } else if p.count_roots_outside(&-outer.clone(), &outer) == 0 {
                    report.flagged.push(CensusHit {
                        word,
                        detail: format!("root inside the guard band: {p}"),
                    });
                }
            }
            CensusPredicate::SymNotSignSymmetric => {
                let p = spectral::char_poly(&sg);
                if symmetric_spectrum(&p)
                    && !cert::is_sign_symmetric(&sg).expect("order checked above")
                {
                    report.hits.push(CensusHit {
                        word,
                        detail: p.to_string(),
                    });
                }
            }
            CensusPredicate::Weighing => {
                if let Some(k) = crate::constructions::weighing_weight(&sg) {
                    report.hits.push(CensusHit {
                        word,
                        detail: format!("weight {k}"),
                    });
                }
            }
        }
    }
    report
}

/// A set of mutually cospectral switching-isomorphism classes.
#[derive(Clone, Debug)]
pub struct CospectralGroup {
    pub char_poly: Poly<BigInt>,
    /// Certificate of each class together with the input indices in it.
    pub classes: Vec<(CanonicalCert, Vec<usize>)>,
}

/// Groups the inputs by exact characteristic polynomial and splits each group
/// by switching-isomorphism class; groups with at least two classes are the
/// cospectral non-isomorphic mates.
pub fn cospectral_mates(graphs: &[SignedGraph]) -> Result<Vec<CospectralGroup>> {
    let mut by_poly: BTreeMap<Vec<BigInt>, BTreeMap<CanonicalCert, Vec<usize>>> = BTreeMap::new();
    for (i, g) in graphs.iter().enumerate() {
        let p = spectral::char_poly(g);
        let c = cert::canonical_cert(g)?;
        by_poly
            .entry(p.coeffs_vec())
            .or_default()
            .entry(c)
            .or_default()
            .push(i);
    }
    Ok(by_poly
        .into_iter()
        .filter(|(_, classes)| classes.len() >= 2)
        .map(|(coeffs, classes)| CospectralGroup {
            char_poly: Poly::from_coeffs(coeffs),
            classes: classes.into_iter().collect(),
        })
        .collect())
}

#[derive(Clone, Debug)]
pub struct SeidelScanReport {
    pub n: usize,
    pub count: usize,
    pub min_energy: f64,
    pub max_energy: f64,
    /// Input indices attaining the minimum (within the tie window).
    pub argmin_indices: Vec<usize>,
    /// Deduplicated certificates of the minimizing Seidel graphs.
    pub argmin_certs: Vec<CanonicalCert>,
    /// `(index, energy, which bound)` for any bound violations.
    pub violations: Vec<(usize, f64, String)>,
    pub lower_bound: f64,
    pub upper_bound: f64,
}

/// Seidel energies of a stream of same-order graphs: checks
/// `2(n-1) <= S <= n sqrt(n-1)` for every input and reports the minimizers.
pub fn seidel_scan(graphs: &[SignedGraph], tol: f64) -> Result<SeidelScanReport> {
    let Some(first) = graphs.first() else {
        return Err(Error::BadParams("empty graph stream".into()));
    };
    let n = first.n();
    if graphs.iter().any(|g| g.n() != n) {
        return Err(Error::BadParams("graphs must share one order".into()));
    }
    if n > CERT_MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "certificate order",
            value: n,
            bound: CERT_MAX_VERTICES,
        });
    }
    let energies: Vec<f64> = graphs
        .par_iter()
        .map(|g| {
            let s = matrix::seidel_matrix::<f64>(g);
            let spec = eigen::eigenvalues(&s, tol).expect("jacobi converges at the sweep cap");
            spec.values().iter().map(|v| v.abs()).sum()
        })
        .collect();
    let lower = 2.0 * (n as f64 - 1.0);
    let upper = n as f64 * (n as f64 - 1.0).sqrt();
    let mut violations = Vec::new();
    for (i, &e) in energies.iter().enumerate() {
        if e < lower - 1e-8 {
            violations.push((i, e, format!("below 2(n-1) = {lower}")));
        }
        if e > upper + 1e-8 {
            violations.push((i, e, format!("above n sqrt(n-1) = {upper}")));
        }
    }
    let min_energy = energies.iter().copied().fold(f64::INFINITY, f64::min);
    let max_energy = energies.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let argmin_indices: Vec<usize> = energies
        .iter()
        .enumerate()
        .filter(|(_, &e)| e <= min_energy + TIE_EPS)
        .map(|(i, _)| i)
        .collect();
    let mut set = std::collections::BTreeSet::new();
    for &i in &argmin_indices {
        set.insert(cert::canonical_cert(&crate::constructions::seidel(&graphs[i])?)?);
    }
    Ok(SeidelScanReport {
        n,
        count: graphs.len(),
        min_energy,
        max_energy,
        argmin_indices,
        argmin_certs: set.into_iter().collect(),
        violations,
        lower_bound: lower,
        upper_bound: upper,
    })
}

#[derive(Clone, Debug)]
pub struct SeidelKernelReport {
    pub n: usize,
    pub rank: usize,
    /// `Some(true)` iff the rank is `n - 1` and the kernel vector scales to
    /// all +-1 entries; `None` when the rank is full.
    pub pm1_kernel: Option<bool>,
    /// Exact kernel vector when the rank is `n - 1`.
    pub kernel: Option<Vec<BigRational>>,
}

/// Exact rational rank of the Seidel matrix of an odd-order graph; when the
/// rank is `n - 1`, reports whether the kernel vector scales to +-1 entries.
pub fn seidel_kernel_check(g: &SignedGraph) -> Result<SeidelKernelReport> {
    let n = g.n();
    if n % 2 == 0 {
        return Err(Error::BadParams(format!("order must be odd, got {n}")));
    }
    if n > 13 {
        return Err(Error::TooLarge {
            what: "kernel-check order",
            value: n,
            bound: 13,
        });
    }
    let s: SymMatrix<BigRational> = matrix::seidel_matrix(g);
    let (rank, kernel) = s.rank_and_kernel();
    if rank + 1 == n {
        let vec = kernel.into_iter().next().expect("kernel dimension is 1");
        let nonzero = vec.iter().all(|x| !x.is_zero());
        let pm1 = nonzero && {
            let scale = vec.iter().find(|x| !x.is_zero()).unwrap().abs();
            vec.iter().all(|x| x.abs() == scale)
        };
        Ok(SeidelKernelReport {
            n,
            rank,
            pm1_kernel: Some(pm1),
            kernel: Some(vec),
        })
    } else {
        Ok(SeidelKernelReport {
            n,
            rank,
            pm1_kernel: None,
            kernel: None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;
    use crate::graph::{Sign, VertexSet};

    #[test]
    fn class_counts() {
        let tree = constructions::path(4).unwrap();
        assert_eq!(SignatureSpace::new(&tree).unwrap().len(), 1);
        let c5 = constructions::cycle(5, Sign::Plus).unwrap();
        let space = SignatureSpace::new(&c5).unwrap();
        assert_eq!(space.len(), 2);
        let reps: Vec<SignedGraph> = space.iter().collect();
        assert!(reps[0].is_balanced());
        assert!(!reps[1].is_balanced());
    }

    #[test]
    fn enumeration_hits_every_class_exhaustively() {
        // brute force over all 2^m signings, normalized to forest-positive form
        let k4 = constructions::complete(4, Sign::Plus).unwrap();
        let space = SignatureSpace::new(&k4).unwrap();
        let reps: std::collections::HashSet<SignedGraph> = space.iter().collect();
        assert_eq!(reps.len(), space.len() as usize);
        let m = k4.m();
        let mut seen = std::collections::HashSet::new();
        for signing in 0u64..(1 << m) {
            let edges: Vec<(usize, usize, i64)> = k4
                .edges()
                .iter()
                .enumerate()
                .map(|(i, e)| (e.u, e.v, if (signing >> i) & 1 == 1 { -1 } else { 1 }))
                .collect();
            let g = SignedGraph::build(4, &edges).unwrap();
            seen.insert(cert::forest_normal_form(&g));
        }
        assert_eq!(seen, reps);
    }

    #[test]
    fn minimize_c4() {
        let c4 = constructions::cycle(4, Sign::Plus).unwrap();
        let report = minimize(&c4, Objective::Rho, 1e-10).unwrap();
        assert_eq!(report.records.len(), 2);
        assert!((report.optimum - 2f64.sqrt()).abs() < 1e-8);
        assert!((report.maximum - 2.0).abs() < 1e-8);
        assert_eq!(report.argmin_words, vec![1]);
        assert_eq!(report.argmin_certs.len(), 1);
    }

    #[test]
    fn minimize_on_a_tree_is_degenerate() {
        let tree = constructions::star(5).unwrap();
        let report = minimize(&tree, Objective::Rho, 1e-10).unwrap();
        assert_eq!(report.records.len(), 1);
        assert!((report.optimum - report.maximum).abs() < 1e-12);
        assert!((report.optimum - 2.0).abs() < 1e-8); // rho(K_{1,4}) = 2
    }

    #[test]
    fn conjectures_on_small_regular_graphs() {
        let k4 = constructions::complete(4, Sign::Plus).unwrap();
        let r = conjecture_check(&k4, ConjectureKind::MssLambda1, 1e-10).unwrap();
        assert!(r.holds);
        let c6 = constructions::cycle(6, Sign::Plus).unwrap();
        let r = conjecture_check(&c6, ConjectureKind::BiluLinial, 1e-10).unwrap();
        assert!(r.holds);
        let p3 = constructions::path(3).unwrap();
        assert!(matches!(
            conjecture_check(&p3, ConjectureKind::BiluLinial, 1e-10),
            Err(Error::NotRegular)
        ));
    }

    #[test]
    fn census_cycles_are_cyclotomic() {
        let graphs: Vec<SignedGraph> = (3..=6)
            .map(|n| constructions::cycle(n, Sign::Plus).unwrap())
            .collect();
        let reports = census(&graphs, CensusPredicate::Cyclotomic);
        for r in &reports {
            assert_eq!(r.hits.len(), 2, "both classes of a cycle are cyclotomic");
            assert!(r.skipped.is_none());
        }
    }

    #[test]
    fn census_weighing_finds_c4_minus() {
        let c4 = constructions::cycle(4, Sign::Plus).unwrap();
        let reports = census(&[c4], CensusPredicate::Weighing);
        assert_eq!(reports[0].hits.len(), 1);
        assert_eq!(reports[0].hits[0].word, 1);
    }

    #[test]
    fn cospectral_grouping() {
        let k3p = constructions::complete(3, Sign::Plus).unwrap();
        let k3m = constructions::complete(3, Sign::Minus).unwrap();
        assert!(cospectral_mates(&[k3p, k3m]).unwrap().is_empty());
        // same class twice is cospectral but not a mate
        let c5m = constructions::cycle(5, Sign::Minus).unwrap();
        let switched = c5m.switch(&VertexSet::from_indices(5, &[0, 2]).unwrap());
        assert!(cospectral_mates(&[c5m, switched]).unwrap().is_empty());
    }

    #[test]
    fn seidel_scan_k5() {
        let k5 = constructions::complete(5, Sign::Plus).unwrap();
        let e5 = SignedGraph::build(5, &[]).unwrap();
        let r = seidel_scan(&[k5, e5], 1e-10).unwrap();
        assert!((r.min_energy - 8.0).abs() < 1e-8);
        assert!(r.violations.is_empty());
        // the empty graph's Seidel matrix is J - I, also of energy 2(n-1),
        // but its switching class differs from the complete graph's
        assert_eq!(r.argmin_indices, vec![0, 1]);
        assert_eq!(r.argmin_certs.len(), 2);
    }

    #[test]
    fn seidel_kernel_examples() {
        let c5 = constructions::cycle(5, Sign::Plus).unwrap();
        let r = seidel_kernel_check(&c5).unwrap();
        assert_eq!(r.rank, 4);
        // the computed kernel vector of the pentagon is all ones
        assert_eq!(r.pm1_kernel, Some(true));
        let k3 = constructions::complete(3, Sign::Plus).unwrap();
        let r = seidel_kernel_check(&k3).unwrap();
        assert_eq!(r.rank, 3);
        assert_eq!(r.pm1_kernel, None);
        let single = SignedGraph::build(1, &[]).unwrap();
        let r = seidel_kernel_check(&single).unwrap();
        assert_eq!(r.rank, 0);
        assert_eq!(r.pm1_kernel, Some(true));
    }
}
