//! Named verification suites. Each binds a library guarantee to concrete
//! inputs (bundled catalogs plus seeded random graphs) and reports one line
//! per check; the process exit code says whether everything held.

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sgraph::cert;
use sgraph::constructions;
use sgraph::graph::DeleteTarget;
use sgraph::polyalg;
use sgraph::search::{self, SignatureSpace};
use sgraph::spectral;
use sgraph::{Sign, SignedGraph};

pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

pub struct SuiteRun {
    pub suite: &'static str,
    pub checks: Vec<Check>,
}

impl SuiteRun {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

pub struct Options {
    pub max_n: usize,
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_signed_graph(rng: &mut ChaCha8Rng, n: usize) -> SignedGraph {
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

fn bundled_up_to(n_max: usize) -> Vec<SignedGraph> {
    (1..=n_max.min(7))
        .flat_map(|n| sgraph::data::decoded_graphs_of_order(n).unwrap())
        .collect()
}

fn check(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        pass,
        detail: detail.into(),
    }
}

pub fn run(suite: &str, opt: &Options) -> Option<SuiteRun> {
    match suite {
        "coefficient" => Some(coefficient(opt)),
        "moments" => Some(moments(opt)),
        "interlacing" => Some(interlacing(opt)),
        "schwenk" => Some(schwenk(opt)),
        "spread" => Some(spread(opt)),
        "godsil-gutman" => Some(godsil_gutman(opt)),
        "gregory" => Some(gregory(opt)),
        "huang" => Some(huang(opt)),
        "double-cover" => Some(double_cover(opt)),
        "seidel-bounds" => Some(seidel_bounds(opt)),
        _ => None,
    }
}

pub const SUITES: &[&str] = &[
    "coefficient",
    "moments",
    "interlacing",
    "schwenk",
    "spread",
    "godsil-gutman",
    "gregory",
    "huang",
    "double-cover",
    "seidel-bounds",
];

fn coefficient(opt: &Options) -> SuiteRun {
    let mut checks = Vec::new();
    let mut count = 0u64;
    let mut ok = true;
    for base in bundled_up_to(opt.max_n.min(6)) {
        for g in SignatureSpace::new(&base).unwrap().iter() {
            ok &= polyalg::sachs_char_poly(&g).unwrap() == spectral::char_poly(&g);
            count += 1;
        }
    }
    checks.push(check(
        "basic figures = matrix char poly (exhaustive)",
        ok,
        format!("{count} signed graphs up to order {}", opt.max_n.min(6)),
    ));
    let mut r = rng(opt.seed);
    let mut ok = true;
    for i in 0..opt.samples {
        let n = 7 + (i % 2);
        let g = random_signed_graph(&mut r, n);
        ok &= polyalg::sachs_char_poly(&g).unwrap() == spectral::char_poly(&g);
    }
    checks.push(check(
        "basic figures = matrix char poly (random)",
        ok,
        format!("{} samples at order 7..8", opt.samples),
    ));
    SuiteRun {
        suite: "coefficient",
        checks,
    }
}

fn moments(opt: &Options) -> SuiteRun {
    fn brute(g: &SignedGraph, k: usize) -> i64 {
        fn rec(adj: &[Vec<(usize, Sign)>], start: usize, v: usize, left: usize, sign: i64) -> i64 {
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
    let mut ok = true;
    let mut count = 0u64;
    for base in bundled_up_to(opt.max_n.min(5)) {
        for g in SignatureSpace::new(&base).unwrap().iter() {
            let summary = spectral::spectral_summary(&g, 6, opt.tol).unwrap();
            for k in 0..=6 {
                ok &= summary.moments[k] == BigInt::from(brute(&g, k));
            }
            count += 1;
        }
    }
    SuiteRun {
        suite: "moments",
        checks: vec![check(
            "trace(A^k) = signed closed-walk difference",
            ok,
            format!("{count} signed graphs, k <= 6"),
        )],
    }
}

fn interlacing(opt: &Options) -> SuiteRun {
    let mut r = rng(opt.seed);
    let mut ok = true;
    for i in 0..opt.samples {
        let n = 2 + (i % opt.max_n.clamp(2, 10).saturating_sub(1));
        let g = random_signed_graph(&mut r, n);
        let v = i % g.n();
        let sub = g.delete(DeleteTarget::Vertex(v)).unwrap();
        let lam = spectral::spectrum(&g, opt.tol).unwrap();
        let mu = spectral::spectrum(&sub, opt.tol).unwrap();
        for j in 0..sub.n() {
            ok &= lam.values()[j] + 1e-8 >= mu.values()[j];
            ok &= mu.values()[j] >= lam.values()[j + 1] - 1e-8;
        }
    }
    SuiteRun {
        suite: "interlacing",
        checks: vec![check(
            "vertex-deletion interlacing",
            ok,
            format!("{} random triples", opt.samples),
        )],
    }
}

fn schwenk(opt: &Options) -> SuiteRun {
    let mut r = rng(opt.seed);
    let mut ok = true;
    let mut pivots = 0u64;
    let graphs = opt.samples.clamp(10, 100);
    for i in 0..graphs {
        let n = 4 + (i % opt.max_n.clamp(4, 8).saturating_sub(3));
        let g = random_signed_graph(&mut r, n);
        for v in 0..g.n() {
            ok &= polyalg::schwenk_residual(&g, polyalg::Pivot::Vertex(v))
                .unwrap()
                .is_zero();
            pivots += 1;
        }
        for e in 0..g.m() {
            ok &= polyalg::schwenk_residual(&g, polyalg::Pivot::Edge(e))
                .unwrap()
                .is_zero();
            pivots += 1;
        }
    }
    SuiteRun {
        suite: "schwenk",
        checks: vec![check(
            "deletion expansion residual is zero",
            ok,
            format!("{graphs} graphs, {pivots} pivots"),
        )],
    }
}

fn spread(opt: &Options) -> SuiteRun {
    let mut checks = Vec::new();
    let mut ok = true;
    let mut count = 0u64;
    for base in bundled_up_to(opt.max_n.min(6)) {
        let rho_plain = spectral::spectrum(&base, opt.tol).unwrap().rho();
        for g in SignatureSpace::new(&base).unwrap().iter() {
            ok &= spectral::spectrum(&g, opt.tol).unwrap().rho() <= rho_plain + 1e-8;
            count += 1;
        }
    }
    checks.push(check(
        "rho(signature) <= rho(all-positive) over all classes",
        ok,
        format!("{count} signed graphs"),
    ));
    let mut r = rng(opt.seed);
    let mut ok = true;
    for i in 0..opt.samples {
        let n = 2 + (i % opt.max_n.clamp(2, 10).saturating_sub(1));
        let g = random_signed_graph(&mut r, n);
        let rho_signed = spectral::spectrum(&g, opt.tol).unwrap().rho();
        let rho_plain = spectral::spectrum(&g.underlying(), opt.tol).unwrap().rho();
        ok &= rho_signed <= rho_plain + 1e-8;
    }
    checks.push(check(
        "rho(signature) <= rho(underlying) on random graphs",
        ok,
        format!("{} samples", opt.samples),
    ));
    SuiteRun {
        suite: "spread",
        checks,
    }
}

fn godsil_gutman(opt: &Options) -> SuiteRun {
    let mut ok = true;
    let mut count = 0u64;
    for base in bundled_up_to(opt.max_n.min(6)) {
        if !base.is_connected() {
            continue;
        }
        let avg = polyalg::godsil_gutman_average(&base).unwrap();
        ok &= avg == polyalg::matching_polynomial(&base).unwrap().to_rational();
        count += 1;
    }
    SuiteRun {
        suite: "godsil-gutman",
        checks: vec![check(
            "class average of char polys = matching polynomial",
            ok,
            format!("{count} connected graphs up to order {}", opt.max_n.min(6)),
        )],
    }
}

fn gregory(opt: &Options) -> SuiteRun {
    let mut checks = Vec::new();
    let mut r = rng(opt.seed);
    let mut ok = true;
    for i in 0..opt.samples {
        let n = 1 + (i % opt.max_n.clamp(1, 10));
        let g = random_signed_graph(&mut r, n);
        let c = spectral::gregory_check(&g, opt.tol).unwrap();
        ok &= c.rho >= c.bound - 1e-8;
    }
    checks.push(check(
        "rho >= sqrt(average degree)",
        ok,
        format!("{} samples", opt.samples),
    ));
    let c4 = spectral::gregory_check(&constructions::unbalanced_c4(), opt.tol).unwrap();
    checks.push(check(
        "equality detected on the unbalanced 4-cycle",
        c4.equality && c4.weight == Some(2),
        format!("weight {:?}", c4.weight),
    ));
    let q3 = spectral::gregory_check(&constructions::huang_signing(3).unwrap(), opt.tol).unwrap();
    checks.push(check(
        "equality detected on the signed 3-cube",
        q3.equality && q3.weight == Some(3),
        format!("weight {:?}", q3.weight),
    ));
    SuiteRun {
        suite: "gregory",
        checks,
    }
}

fn huang(opt: &Options) -> SuiteRun {
    let mut checks = Vec::new();
    for d in 1..=6usize {
        let g = constructions::huang_signing(d).unwrap();
        checks.push(check(
            format!("A_{d}^2 = {d} I"),
            constructions::weighing_weight(&g) == Some(d as i64),
            format!("order {}", g.n()),
        ));
    }
    let q4 = constructions::huang_signing(4).unwrap();
    let spec = spectral::spectrum(&q4, opt.tol).unwrap();
    let symmetric = spec
        .values()
        .iter()
        .enumerate()
        .all(|(i, v)| (v - if i < 8 { 2.0 } else { -2.0 }).abs() < 1e-8);
    checks.push(check(
        "dimension-4 spectrum is {+2 x8, -2 x8}",
        symmetric,
        "within 1e-8",
    ));
    SuiteRun {
        suite: "huang",
        checks,
    }
}

fn double_cover(opt: &Options) -> SuiteRun {
    let mut r = rng(opt.seed);
    let mut deg_ok = true;
    let mut spec_ok = true;
    let samples = opt.samples.min(300);
    for i in 0..samples {
        let n = 2 + (i % opt.max_n.clamp(2, 8).saturating_sub(1));
        let g = random_signed_graph(&mut r, n);
        let cover = g.double_cover().unwrap();
        let mut expect = g.degree_sequence();
        expect.extend(g.degree_sequence());
        expect.sort_unstable();
        let mut got = cover.degree_sequence();
        got.sort_unstable();
        deg_ok &= expect == got;
        let mut union: Vec<f64> = spectral::spectrum(&g.underlying(), opt.tol)
            .unwrap()
            .values()
            .to_vec();
        union.extend(spectral::spectrum(&g, opt.tol).unwrap().values());
        union.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let cover_spec = spectral::spectrum(&cover, opt.tol).unwrap();
        spec_ok &= cover_spec
            .values()
            .iter()
            .zip(&union)
            .all(|(a, b)| (a - b).abs() < 1e-8);
    }
    SuiteRun {
        suite: "double-cover",
        checks: vec![
            check("degree sequence doubles", deg_ok, format!("{samples} samples")),
            check(
                "cover spectrum = underlying spectrum + signed spectrum",
                spec_ok,
                format!("{samples} samples, tol 1e-8"),
            ),
        ],
    }
}

fn seidel_bounds(opt: &Options) -> SuiteRun {
    let mut checks = Vec::new();
    for n in 4..=opt.max_n.min(7) {
        let graphs = sgraph::data::decoded_graphs_of_order(n).unwrap();
        let scan = search::seidel_scan(&graphs, opt.tol).unwrap();
        let lower_hit = (scan.min_energy - 2.0 * (n as f64 - 1.0)).abs() < 1e-8;
        let kn = constructions::complete(n, Sign::Plus).unwrap();
        let kn_cert = cert::canonical_cert(&constructions::seidel(&kn).unwrap()).unwrap();
        checks.push(check(
            format!("order {n}: energies within [2(n-1), n sqrt(n-1)]"),
            scan.violations.is_empty(),
            format!("{} graphs", scan.count),
        ));
        checks.push(check(
            format!("order {n}: minimum attained by the complete-graph class"),
            lower_hit && scan.argmin_certs.contains(&kn_cert),
            format!("min = {:.9}", scan.min_energy),
        ));
    }
    SuiteRun {
        suite: "seidel-bounds",
        checks,
    }
}
