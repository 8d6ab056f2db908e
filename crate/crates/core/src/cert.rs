//! Canonical certificates for switching-isomorphism classes.
//!
//! The certificate minimizes, over all vertex relabelings, the pair
//! (underlying adjacency bits, cotree sign bits of the forest-positive
//! normal form). Equal certificates therefore mean exactly: same underlying
//! graph up to isomorphism and same switching class of the signature.
//! The search over relabelings is exhaustive with lexicographic pruning,
//! which keeps it exact; orders above [`CERT_MAX_VERTICES`] are rejected.

use crate::graph::{Sign, SignedGraph};
use crate::{Error, Result};

/// Exhaustive relabeling is factorial; 10 is where it stops being cheap.
pub const CERT_MAX_VERTICES: usize = 10;

/// Opaque switching-isomorphism certificate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalCert(Vec<u8>);

impl CanonicalCert {
    pub fn bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Union-find that tracks a +-1 parity from each element to its root.
struct SignedDsu {
    parent: Vec<usize>,
    /// Sign relating the element's potential to its parent's.
    parity: Vec<Sign>,
}

impl SignedDsu {
    fn new(n: usize) -> SignedDsu {
        SignedDsu {
            parent: (0..n).collect(),
            parity: vec![Sign::Plus; n],
        }
    }

    /// Returns `(root, sign of the path to the root)`.
    fn find(&mut self, x: usize) -> (usize, Sign) {
        if self.parent[x] == x {
            return (x, Sign::Plus);
        }
        let (root, up) = self.find(self.parent[x]);
        self.parent[x] = root;
        self.parity[x] = self.parity[x] * up;
        (root, self.parity[x])
    }

    /// Merges so that the edge `(u, v)` with sign `s` becomes positive under
    /// the implied potentials. Returns false if `u` and `v` were already
    /// connected (cotree edge).
    fn union_forest_edge(&mut self, u: usize, v: usize, s: Sign) -> bool {
        let (ru, pu) = self.find(u);
        let (rv, pv) = self.find(v);
        if ru == rv {
            return false;
        }
        // want theta(u) * theta(v) * s = + with theta(x) = parity to root
        self.parent[ru] = rv;
        self.parity[ru] = pu * pv * s;
        true
    }

    /// Sign of the edge `(u, v, s)` after the forest-positive switch.
    fn normalized_sign(&mut self, u: usize, v: usize, s: Sign) -> Sign {
        let (_, pu) = self.find(u);
        let (_, pv) = self.find(v);
        pu * pv * s
    }
}

/// Switches `g` so that a deterministic spanning forest (edges scanned in
/// normalized order) becomes all-positive. Graphs are switching equivalent
/// iff their normal forms are equal.
pub fn forest_normal_form(g: &SignedGraph) -> SignedGraph {
    let mut dsu = SignedDsu::new(g.n());
    let mut signs = Vec::with_capacity(g.m());
    for e in g.edges() {
        if dsu.union_forest_edge(e.u, e.v, e.sign) {
            signs.push(Sign::Plus);
        } else {
            signs.push(dsu.normalized_sign(e.u, e.v, e.sign));
        }
    }
    let edges: Vec<(usize, usize, i64)> = g
        .edges()
        .iter()
        .zip(signs)
        .map(|(e, s)| (e.u, e.v, s.value()))
        .collect();
    SignedGraph::build(g.n(), &edges).expect("normal form of a valid graph is valid")
}

/// Pair `(i, j)`, `i < j`, listed column by column: (0,1), (0,2), (1,2), ...
/// Placing vertex `k` appends the `k` bits for pairs `(0..k, k)`.
fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

struct CertSearch<'a> {
    g: &'a SignedGraph,
    n: usize,
    rows: Vec<u64>,
    perm: Vec<usize>,
    used: u64,
    /// Adjacency bits of the partial relabeling, high-aligned in a u64 so
    /// numeric comparison matches lexicographic comparison.
    best: Option<(u64, Vec<u8>)>,
}

impl<'a> CertSearch<'a> {
    fn leaf_sign_bits(&self) -> Vec<u8> {
        // relabeled edges in pair order, forest-positive normalization
        let mut dsu = SignedDsu::new(self.n);
        let mut bits = Vec::new();
        for j in 1..self.n {
            for i in 0..j {
                let (ou, ov) = (self.perm[i], self.perm[j]);
                let Some(s) = self.g.sign(ou, ov) else { continue };
                if !dsu.union_forest_edge(i, j, s) {
                    bits.push(dsu.normalized_sign(i, j, s).is_negative());
                }
            }
        }
        pack_bits(&bits)
    }

    fn dfs(&mut self, depth: usize, bits: u64, len: usize) {
        if depth == self.n {
            let signs = self.leaf_sign_bits();
            match &self.best {
                Some((badj, bsigns)) if *badj == bits && *bsigns <= signs => {}
                Some((badj, _)) if *badj < bits => {}
                _ => self.best = Some((bits, signs)),
            }
            return;
        }
        for o in 0..self.n {
            if (self.used >> o) & 1 == 1 {
                continue;
            }
            let mut new_bits = bits;
            let mut new_len = len;
            for i in 0..depth {
                let bit = (self.rows[o] >> self.perm[i]) & 1;
                new_bits |= bit << (63 - new_len);
                new_len += 1;
            }
            if let Some((badj, _)) = &self.best {
                let mask = prefix_mask(new_len);
                if new_bits & mask > *badj & mask {
                    continue;
                }
            }
            self.perm.push(o);
            self.used |= 1 << o;
            self.dfs(depth + 1, new_bits, new_len);
            self.used &= !(1 << o);
            self.perm.pop();
        }
    }
}

fn prefix_mask(len: usize) -> u64 {
    if len == 0 {
        0
    } else {
        !0u64 << (64 - len)
    }
}

fn pack_bits(bits: &[bool]) -> Vec<u8> {
    let mut out = vec![0u8; bits.len().div_ceil(8)];
    for (i, &b) in bits.iter().enumerate() {
        if b {
            out[i / 8] |= 0x80 >> (i % 8);
        }
    }
    out
}

/// Canonical certificate of the switching-isomorphism class of `g`.
pub fn canonical_cert(g: &SignedGraph) -> Result<CanonicalCert> {
    let n = g.n();
    if n > CERT_MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "certificate order",
            value: n,
            bound: CERT_MAX_VERTICES,
        });
    }
    let mut search = CertSearch {
        g,
        n,
        rows: g.adjacency_masks(),
        perm: Vec::with_capacity(n),
        used: 0,
        best: None,
    };
    search.dfs(0, 0, 0);
    let (adj, signs) = search.best.unwrap_or((0, Vec::new()));
    let mut bytes = vec![n as u8];
    let adj_bytes = pair_count(n).div_ceil(8);
    for b in 0..adj_bytes {
        bytes.push((adj >> (56 - 8 * b)) as u8);
    }
    bytes.extend_from_slice(&signs);
    Ok(CanonicalCert(bytes))
}

/// Same switching-isomorphism class, decided by certificate equality.
pub fn are_switching_isomorphic(a: &SignedGraph, b: &SignedGraph) -> Result<bool> {
    Ok(canonical_cert(a)? == canonical_cert(b)?)
}

/// Switching isomorphism decided by backtracking over underlying-graph
/// isomorphisms instead of canonical certificates. Exact at any order, but
/// only practical when the underlying graphs are rigid enough to prune well
/// (regular structured graphs up to a few dozen vertices).
pub fn switching_isomorphic_backtracking(a: &SignedGraph, b: &SignedGraph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let mut da = a.degree_sequence();
    let mut db = b.degree_sequence();
    let deg_a = da.clone();
    let deg_b = db.clone();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let n = a.n();
    let rows_a = a.adjacency_masks();
    let rows_b = b.adjacency_masks();
    let norm_b = forest_normal_form(b);
    // map a's vertices in decreasing-degree order for early pruning
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(deg_a[v]));
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        depth: usize,
        order: &[usize],
        deg_a: &[usize],
        deg_b: &[usize],
        rows_a: &[u64],
        rows_b: &[u64],
        image: &mut [usize],
        used: &mut [bool],
        a: &SignedGraph,
        norm_b: &SignedGraph,
    ) -> bool {
        if depth == order.len() {
            // relabel a's signature through the image and compare normal forms
            let edges: Vec<(usize, usize, i64)> = a
                .edges()
                .iter()
                .map(|e| (image[e.u], image[e.v], e.sign.value()))
                .collect();
            let relabeled = SignedGraph::build(a.n(), &edges).expect("image is a bijection");
            return forest_normal_form(&relabeled) == *norm_b;
        }
        let v = order[depth];
        for w in 0..norm_b.n() {
            if used[w] || deg_a[v] != deg_b[w] {
                continue;
            }
            // adjacency with the already-placed vertices must match
            let consistent = order[..depth].iter().all(|&p| {
                ((rows_a[v] >> p) & 1) == ((rows_b[w] >> image[p]) & 1)
            });
            if !consistent {
                continue;
            }
            image[v] = w;
            used[w] = true;
            if extend(depth + 1, order, deg_a, deg_b, rows_a, rows_b, image, used, a, norm_b) {
                return true;
            }
            used[w] = false;
            image[v] = usize::MAX;
        }
        false
    }
    extend(
        0, &order, &deg_a, &deg_b, &rows_a, &rows_b, &mut image, &mut used, a, &norm_b,
    )
}

/// Whether `g` is switching isomorphic to its own negation.
pub fn is_sign_symmetric(g: &SignedGraph) -> Result<bool> {
    are_switching_isomorphic(g, &g.negate())
}
