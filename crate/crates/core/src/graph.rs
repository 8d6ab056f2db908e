//! Signed-graph data model: signed edges, switching, balance, cycle space.
//!
//! A [`SignedGraph`] is a simple undirected graph on vertices `0..n` whose
//! edges carry a sign in `{+1, -1}`. Values are immutable after construction;
//! every operation returns a fresh graph.

use std::fmt;
use std::ops::Mul;

use crate::{Error, Result};

/// Hard cap on vertex count. Vertex subsets are 64-bit masks and all matrix
/// code is dense, so nothing above this is supported.
pub const MAX_VERTICES: usize = 64;

/// Edge sign.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Minus
    }

    pub fn from_value(s: i64) -> Result<Sign> {
        match s {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(Error::BadSign(other)),
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// A signed edge with endpoints normalized to `u < v`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

/// Subset of the vertices `0..n`, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct VertexSet {
    n: usize,
    mask: u64,
}

impl VertexSet {
    pub fn empty(n: usize) -> VertexSet {
        VertexSet { n, mask: 0 }
    }

    pub fn full(n: usize) -> VertexSet {
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        VertexSet { n, mask }
    }

    pub fn from_indices(n: usize, indices: &[usize]) -> Result<VertexSet> {
        let mut mask = 0u64;
        for &i in indices {
            if i >= n {
                return Err(Error::VertexOutOfRange { vertex: i, n });
            }
            mask |= 1u64 << i;
        }
        Ok(VertexSet { n, mask })
    }

    pub fn from_mask(n: usize, mask: u64) -> VertexSet {
        let full = VertexSet::full(n).mask;
        VertexSet { n, mask: mask & full }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && (self.mask >> v) & 1 == 1
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet {
            n: self.n,
            mask: !self.mask & VertexSet::full(self.n).mask,
        }
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.contains(v))
    }
}

/// What to remove from a graph in [`SignedGraph::delete`].
#[derive(Clone, Debug)]
pub enum DeleteTarget {
    Vertex(usize),
    /// Index into the normalized edge list.
    Edge(usize),
    /// A set of vertices (typically the support of a cycle).
    Vertices(VertexSet),
}

/// Spanning-forest decomposition of the edge set.
///
/// `xi` is the cyclomatic number `m - n + c`; the cotree edges index the
/// independent cycles, so there are at most `2^xi` switching classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleBasis {
    pub forest_edges: Vec<usize>,
    pub cotree_edges: Vec<usize>,
    pub xi: usize,
}

/// A simple graph with `{+1, -1}` edge signs.
///
/// Two graphs compare equal iff they have the same order and the same signed
/// edge set; the edge list is kept sorted by endpoints.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
}

impl fmt::Debug for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedGraph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}{}{}", e.u, e.sign, e.v)?;
        }
        write!(f, "])")
    }
}

impl SignedGraph {
    /// Validating constructor. Edges are normalized to `u < v` and sorted.
    pub fn build(n: usize, edges: &[(usize, usize, i64)]) -> Result<SignedGraph> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "vertex count",
                value: n,
                bound: MAX_VERTICES,
            });
        }
        let mut list = Vec::with_capacity(edges.len());
        for &(u, v, s) in edges {
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            let sign = Sign::from_value(s)?;
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            list.push(Edge { u: a, v: b, sign });
        }
        list.sort();
        for w in list.windows(2) {
            if w[0].u == w[1].u && w[0].v == w[1].v {
                return Err(Error::DuplicateEdge(w[0].u, w[0].v));
            }
        }
        Ok(SignedGraph { n, edges: list })
    }

    /// Constructor for edges already known to be valid and normalized.
    pub(crate) fn from_parts(n: usize, mut edges: Vec<Edge>) -> SignedGraph {
        edges.sort();
        SignedGraph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Index of edge `{u, v}` in the normalized list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search_by(|e| (e.u, e.v).cmp(&(a, b))).ok()
    }

    pub fn sign(&self, u: usize, v: usize) -> Option<Sign> {
        self.edge_index(u, v).map(|i| self.edges[i].sign)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Neighbor lists with signs, sorted by neighbor id.
    pub fn adjacency_lists(&self) -> Vec<Vec<(usize, Sign)>> {
        let mut adj = vec![Vec::new(); self.n];
        for e in &self.edges {
            adj[e.u].push((e.v, e.sign));
            adj[e.v].push((e.u, e.sign));
        }
        for row in &mut adj {
            row.sort();
        }
        adj
    }

    /// Row bitmasks of the underlying adjacency relation.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        let mut rows = vec![0u64; self.n];
        for e in &self.edges {
            rows[e.u] |= 1u64 << e.v;
            rows[e.v] |= 1u64 << e.u;
        }
        rows
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.u == v || e.v == v).count()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for e in &self.edges {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        deg
    }

    /// Common degree if the underlying graph is regular.
    pub fn regularity(&self) -> Option<usize> {
        let deg = self.degree_sequence();
        match deg.first() {
            None => Some(0),
            Some(&d) => deg.iter().all(|&x| x == d).then_some(d),
        }
    }

    /// The underlying graph as an all-positive signed graph.
    pub fn underlying(&self) -> SignedGraph {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                u: e.u,
                v: e.v,
                sign: Sign::Plus,
            })
            .collect();
        SignedGraph { n: self.n, edges }
    }

    /// Negates the sign of every edge.
    pub fn negate(&self) -> SignedGraph {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                u: e.u,
                v: e.v,
                sign: e.sign.flip(),
            })
            .collect();
        SignedGraph { n: self.n, edges }
    }

    /// Switches at the cut `[U, V \ U]`: every edge with exactly one endpoint
    /// in `u_set` has its sign negated, all other edges are untouched.
    pub fn switch(&self, u_set: &VertexSet) -> SignedGraph {
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let crossing = u_set.contains(e.u) != u_set.contains(e.v);
                Edge {
                    u: e.u,
                    v: e.v,
                    sign: if crossing { e.sign.flip() } else { e.sign },
                }
            })
            .collect();
        SignedGraph { n: self.n, edges }
    }

    /// Connected components of the underlying graph, each a sorted vertex list.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency_masks();
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                let mut nbrs = adj[v];
                while nbrs != 0 {
                    let w = nbrs.trailing_zeros() as usize;
                    nbrs &= nbrs - 1;
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// True iff some vertex potential `theta: V -> {+1,-1}` satisfies
    /// `sign(uv) = theta(u) * theta(v)` on every edge; equivalently, every
    /// cycle has positive sign product.
    pub fn is_balanced(&self) -> bool {
        let adj = self.adjacency_lists();
        let mut theta: Vec<Option<Sign>> = vec![None; self.n];
        for start in 0..self.n {
            if theta[start].is_some() {
                continue;
            }
            theta[start] = Some(Sign::Plus);
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let tv = theta[v].unwrap();
                for &(w, s) in &adj[v] {
                    let expected = tv * s;
                    match theta[w] {
                        None => {
                            theta[w] = Some(expected);
                            queue.push_back(w);
                        }
                        Some(tw) if tw != expected => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Spanning forest by scanning edges in normalized order; the leftover
    /// cotree edges index the independent cycles.
    pub fn cycle_basis(&self) -> CycleBasis {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut forest = Vec::new();
        let mut cotree = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            let (ru, rv) = (find(&mut parent, e.u), find(&mut parent, e.v));
            if ru == rv {
                cotree.push(i);
            } else {
                parent[ru] = rv;
                forest.push(i);
            }
        }
        let xi = cotree.len();
        debug_assert_eq!(xi, self.m() + self.components().len() - self.n);
        CycleBasis {
            forest_edges: forest,
            cotree_edges: cotree,
            xi,
        }
    }

    /// Counts positive and negative triangles by direct enumeration.
    pub fn triangle_sign_census(&self) -> (u64, u64) {
        let rows = self.adjacency_masks();
        let (mut plus, mut minus) = (0u64, 0u64);
        for e in &self.edges {
            let (u, v) = (e.u, e.v);
            // common neighbors above v keep each triangle counted once
            let mut common = rows[u] & rows[v] & !((1u64 << (v + 1)) - 1);
            while common != 0 {
                let w = common.trailing_zeros() as usize;
                common &= common - 1;
                let s = e.sign * self.sign(u, w).unwrap() * self.sign(v, w).unwrap();
                if s == Sign::Plus {
                    plus += 1;
                } else {
                    minus += 1;
                }
            }
        }
        (plus, minus)
    }

    /// The 2-lift: an all-positive graph on `2n` vertices where `(x, s)` is
    /// adjacent to `(y, s * sign(xy))`. Vertex `(x, +)` is `x` and `(x, -)`
    /// is `x + n`.
    pub fn double_cover(&self) -> Result<SignedGraph> {
        let n2 = self.n * 2;
        if n2 > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "double cover order",
                value: n2,
                bound: MAX_VERTICES,
            });
        }
        let mut edges = Vec::with_capacity(self.m() * 2);
        for e in &self.edges {
            let (u, v) = (e.u, e.v);
            match e.sign {
                Sign::Plus => {
                    edges.push((u, v));
                    edges.push((u + self.n, v + self.n));
                }
                Sign::Minus => {
                    edges.push((u, v + self.n));
                    edges.push((v, u + self.n));
                }
            }
        }
        let list = edges
            .into_iter()
            .map(|(u, v)| {
                let (a, b) = if u < v { (u, v) } else { (v, u) };
                Edge {
                    u: a,
                    v: b,
                    sign: Sign::Plus,
                }
            })
            .collect();
        Ok(SignedGraph::from_parts(n2, list))
    }

    /// Removes a vertex, an edge, or a vertex set; remaining vertex ids are
    /// compacted preserving their order.
    pub fn delete(&self, target: DeleteTarget) -> Result<SignedGraph> {
        match target {
            DeleteTarget::Vertex(v) => {
                if v >= self.n {
                    return Err(Error::NotFound(format!("vertex {v}")));
                }
                self.delete_vertex_mask(1u64 << v)
            }
            DeleteTarget::Edge(i) => {
                if i >= self.edges.len() {
                    return Err(Error::NotFound(format!("edge #{i}")));
                }
                let mut edges = self.edges.clone();
                edges.remove(i);
                Ok(SignedGraph { n: self.n, edges })
            }
            DeleteTarget::Vertices(set) => {
                if set.n() != self.n {
                    return Err(Error::BadParams(format!(
                        "vertex set is over order {}, graph has order {}",
                        set.n(),
                        self.n
                    )));
                }
                self.delete_vertex_mask(set.mask())
            }
        }
    }

    fn delete_vertex_mask(&self, mask: u64) -> Result<SignedGraph> {
        let mut new_id = vec![usize::MAX; self.n];
        let mut next = 0usize;
        for v in 0..self.n {
            if (mask >> v) & 1 == 0 {
                new_id[v] = next;
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| (mask >> e.u) & 1 == 0 && (mask >> e.v) & 1 == 0)
            .map(|e| Edge {
                u: new_id[e.u],
                v: new_id[e.v],
                sign: e.sign,
            })
            .collect();
        Ok(SignedGraph { n: next, edges })
    }

    /// Disjoint union, with `other`'s vertices shifted past `self`'s.
    pub fn disjoint_union(&self, other: &SignedGraph) -> Result<SignedGraph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "union order",
                value: n,
                bound: MAX_VERTICES,
            });
        }
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| Edge {
            u: e.u + self.n,
            v: e.v + self.n,
            sign: e.sign,
        }));
        Ok(SignedGraph::from_parts(n, edges))
    }

    /// Sign product along the unique forest-closing cycle is not tracked here;
    /// this is the sign product over an explicit edge sequence.
    pub fn signs_product(&self, edge_ids: &[usize]) -> Sign {
        edge_ids
            .iter()
            .fold(Sign::Plus, |acc, &i| acc * self.edges[i].sign)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4_minus() -> SignedGraph {
        SignedGraph::build(4, &[(0, 1, -1), (1, 2, 1), (2, 3, 1), (0, 3, 1)]).unwrap()
    }

    #[test]
    fn build_triangle() {
        let g = SignedGraph::build(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
        assert!(g.is_balanced());
    }

    #[test]
    fn build_rejects_loop() {
        assert_eq!(
            SignedGraph::build(2, &[(0, 0, 1)]),
            Err(Error::LoopEdge(0))
        );
    }

    #[test]
    fn build_rejects_duplicate_and_range_and_sign() {
        assert_eq!(
            SignedGraph::build(3, &[(0, 1, 1), (1, 0, -1)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            SignedGraph::build(2, &[(0, 5, 1)]),
            Err(Error::VertexOutOfRange { vertex: 5, n: 2 })
        );
        assert_eq!(SignedGraph::build(2, &[(0, 1, 2)]), Err(Error::BadSign(2)));
    }

    #[test]
    fn edge_order_does_not_matter() {
        let a = SignedGraph::build(3, &[(0, 1, 1), (1, 2, -1)]).unwrap();
        let b = SignedGraph::build(3, &[(2, 1, -1), (1, 0, 1)]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn switch_flips_exactly_the_cut() {
        let g = c4_minus();
        let u = VertexSet::from_indices(4, &[0]).unwrap();
        let s = g.switch(&u);
        assert_eq!(s.sign(0, 1), Some(Sign::Plus));
        assert_eq!(s.sign(0, 3), Some(Sign::Minus));
        assert_eq!(s.sign(1, 2), Some(Sign::Plus));
        assert_eq!(s.sign(2, 3), Some(Sign::Plus));
        // cycle sign is preserved
        let prod = |g: &SignedGraph| {
            g.edges()
                .iter()
                .fold(Sign::Plus, |acc, e| acc * e.sign)
        };
        assert_eq!(prod(&g), prod(&s));
    }

    #[test]
    fn switch_empty_and_full_are_identity() {
        let g = c4_minus();
        assert_eq!(g.switch(&VertexSet::empty(4)), g);
        assert_eq!(g.switch(&VertexSet::full(4)), g);
        assert_eq!(g.switch(&VertexSet::from_indices(4, &[1, 2]).unwrap())
            .switch(&VertexSet::from_indices(4, &[1, 2]).unwrap()), g);
    }

    #[test]
    fn negate_is_involutive() {
        let g = c4_minus();
        assert_eq!(g.negate().negate(), g);
    }

    #[test]
    fn balance_detects_cycle_sign() {
        assert!(!c4_minus().is_balanced());
        let c4_plus = c4_minus().negate().negate().switch(&VertexSet::empty(4));
        assert!(!c4_plus.is_balanced()); // still one negative edge
        let tree = SignedGraph::build(4, &[(0, 1, -1), (1, 2, -1), (1, 3, 1)]).unwrap();
        assert!(tree.is_balanced());
    }

    #[test]
    fn cycle_basis_counts() {
        let p4 = SignedGraph::build(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1)]).unwrap();
        assert_eq!(p4.cycle_basis().xi, 0);
        let k4 = SignedGraph::build(
            4,
            &[(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)],
        )
        .unwrap();
        assert_eq!(k4.cycle_basis().xi, 3);
    }

    #[test]
    fn triangle_census() {
        let k3 = SignedGraph::build(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap();
        assert_eq!(k3.triangle_sign_census(), (1, 0));
        let k4_neg = SignedGraph::build(
            4,
            &[(0, 1, -1), (0, 2, -1), (0, 3, -1), (1, 2, -1), (1, 3, -1), (2, 3, -1)],
        )
        .unwrap();
        assert_eq!(k4_neg.triangle_sign_census(), (0, 4));
        assert_eq!(c4_minus().triangle_sign_census(), (0, 0));
    }

    #[test]
    fn double_cover_of_k2() {
        let k2 = SignedGraph::build(2, &[(0, 1, 1)]).unwrap();
        let d = k2.double_cover().unwrap();
        assert_eq!(d.n(), 4);
        assert_eq!(d.m(), 2);
        assert!(d.has_edge(0, 1) && d.has_edge(2, 3));
        let c8 = c4_minus().double_cover().unwrap();
        assert_eq!(c8.n(), 8);
        assert_eq!(c8.degree_sequence(), vec![2; 8]);
        assert!(c8.is_connected());
    }

    #[test]
    fn delete_compacts_ids() {
        let p3 = SignedGraph::build(3, &[(0, 1, 1), (1, 2, 1)]).unwrap();
        let g = p3.delete(DeleteTarget::Vertex(1)).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.m(), 0);
        let k3 = SignedGraph::build(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap();
        let g = k3.delete(DeleteTarget::Edge(0)).unwrap();
        assert_eq!(g.m(), 2);
        let k4 = SignedGraph::build(
            4,
            &[(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)],
        )
        .unwrap();
        let rest = k4
            .delete(DeleteTarget::Vertices(
                VertexSet::from_indices(4, &[0, 1, 2]).unwrap(),
            ))
            .unwrap();
        assert_eq!(rest.n(), 1);
        assert_eq!(rest.m(), 0);
    }
}
