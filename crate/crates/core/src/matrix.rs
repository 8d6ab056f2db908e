//! Dense symmetric matrices, generic over the scalar type.
//!
//! The same storage backs three instantiations: exact integer matrices
//! (`num_bigint::BigInt`) for characteristic polynomials, determinants and
//! walk counts, exact rational matrices for rank/kernel questions, and
//! floating matrices for the Jacobi eigensolver.

use num_traits::{FromPrimitive, One, Zero};

use crate::graph::{Sign, SignedGraph};
use crate::poly::Poly;
use crate::{Error, Result};

/// Order cap for dense matrix work.
pub const MAX_ORDER: usize = 64;

/// Dense square matrix stored row-major. Constructors that build graph
/// matrices guarantee symmetry; `pow` of a symmetric matrix stays symmetric.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymMatrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Clone + Zero> SymMatrix<T> {
    pub fn zeros(n: usize) -> SymMatrix<T> {
        SymMatrix {
            n,
            data: vec![T::zero(); n * n],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> SymMatrix<T> {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        SymMatrix { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.n + j] = v;
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set_sym(&mut self, i: usize, j: usize, v: T) {
        self.data[j * self.n + i] = v.clone();
        self.data[i * self.n + j] = v;
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> SymMatrix<U> {
        SymMatrix {
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool
    where
        T: PartialEq,
    {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

impl<T> SymMatrix<T>
where
    T: Clone + Zero + One + PartialEq,
{
    pub fn identity(n: usize) -> SymMatrix<T> {
        let mut m = SymMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn trace(&self) -> T {
        let mut t = T::zero();
        for i in 0..self.n {
            t = t + self.get(i, i).clone();
        }
        t
    }

    pub(crate) fn mul(&self, rhs: &SymMatrix<T>) -> SymMatrix<T> {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out: SymMatrix<T> = SymMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).clone();
                    out.set(i, j, cur + a.clone() * b.clone());
                }
            }
        }
        out
    }

    /// `self^k` by repeated multiplication; `k = 0` gives the identity.
    pub fn pow(&self, k: usize) -> SymMatrix<T> {
        let mut acc = SymMatrix::identity(self.n);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// If the matrix equals `c * I`, returns `c`.
    pub fn scalar_of_identity(&self) -> Option<T> {
        if self.n == 0 {
            return Some(T::zero());
        }
        let c = self.get(0, 0).clone();
        for i in 0..self.n {
            for j in 0..self.n {
                let want = if i == j { c.clone() } else { T::zero() };
                if *self.get(i, j) != want {
                    return None;
                }
            }
        }
        Some(c)
    }
}

impl<T> SymMatrix<T>
where
    T: Clone
        + Zero
        + One
        + PartialEq
        + std::ops::Sub<Output = T>
        + std::ops::Div<Output = T>
        + std::ops::Neg<Output = T>,
{
    /// Exact determinant by Bareiss fraction-free elimination. All interior
    /// divisions are exact in an integral domain.
    pub fn det(&self) -> T {
        let n = self.n;
        if n == 0 {
            return T::one();
        }
        let mut a = self.data.clone();
        let at = |a: &Vec<T>, i: usize, j: usize| a[i * n + j].clone();
        let mut sign_flip = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if at(&a, k, k).is_zero() {
                // pivot search below row k
                let swap = (k + 1..n).find(|&r| !at(&a, r, k).is_zero());
                match swap {
                    None => return T::zero(),
                    Some(r) => {
                        for c in 0..n {
                            a.swap(k * n + c, r * n + c);
                        }
                        sign_flip = !sign_flip;
                    }
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = at(&a, i, j) * at(&a, k, k) - at(&a, i, k) * at(&a, k, j);
                    a[i * n + j] = num / prev.clone();
                }
            }
            prev = at(&a, k, k);
        }
        let d = at(&a, n - 1, n - 1);
        if sign_flip {
            -d
        } else {
            d
        }
    }

    /// Rank and a kernel basis over a field, by Gauss-Jordan elimination.
    pub fn rank_and_kernel(&self) -> (usize, Vec<Vec<T>>) {
        let n = self.n;
        let mut a = self.data.clone();
        let mut pivot_col_of_row = Vec::new();
        let mut row = 0usize;
        for col in 0..n {
            let pivot = (row..n).find(|&r| !a[r * n + col].is_zero());
            let Some(p) = pivot else { continue };
            for c in 0..n {
                a.swap(row * n + c, p * n + c);
            }
            let inv = a[row * n + col].clone();
            for c in 0..n {
                a[row * n + c] = a[row * n + c].clone() / inv.clone();
            }
            for r in 0..n {
                if r != row && !a[r * n + col].is_zero() {
                    let f = a[r * n + col].clone();
                    for c in 0..n {
                        let sub = f.clone() * a[row * n + c].clone();
                        a[r * n + c] = a[r * n + c].clone() - sub;
                    }
                }
            }
            pivot_col_of_row.push(col);
            row += 1;
            if row == n {
                break;
            }
        }
        let rank = row;
        let pivot_cols: std::collections::HashSet<usize> =
            pivot_col_of_row.iter().copied().collect();
        let mut kernel = Vec::new();
        for free in 0..n {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut vec = vec![T::zero(); n];
            vec[free] = T::one();
            for (r, &pc) in pivot_col_of_row.iter().enumerate() {
                vec[pc] = -a[r * n + free].clone();
            }
            kernel.push(vec);
        }
        (rank, kernel)
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        return Err(Error::TooLarge {
            what: "matrix order",
            value: n,
            bound: MAX_ORDER,
        });
    }
    Ok(())
}

/// Adjacency matrix of a signed graph: `a_ij = sign(ij)` on edges, else 0.
pub fn adjacency<T>(g: &SignedGraph) -> SymMatrix<T>
where
    T: Clone + Zero + One + std::ops::Neg<Output = T>,
{
    let mut m = SymMatrix::zeros(g.n());
    for e in g.edges() {
        let v = match e.sign {
            Sign::Plus => T::one(),
            Sign::Minus => -T::one(),
        };
        m.set_sym(e.u, e.v, v);
    }
    m
}

/// Laplacian `L = D - A`, with `D` the degree matrix of the underlying graph.
pub fn laplacian<T>(g: &SignedGraph) -> SymMatrix<T>
where
    T: Clone + Zero + One + std::ops::Neg<Output = T> + FromPrimitive,
{
    let mut m: SymMatrix<T> = adjacency::<T>(g).map(|x| -x.clone());
    for (v, d) in g.degree_sequence().into_iter().enumerate() {
        m.set(v, v, T::from_usize(d).expect("degree fits scalar"));
    }
    m
}

/// Seidel matrix `J - I - 2A` of the underlying graph of `g` (signs of `g`
/// are ignored): adjacent pairs get -1, non-adjacent pairs +1.
pub fn seidel_matrix<T>(g: &SignedGraph) -> SymMatrix<T>
where
    T: Clone + Zero + One + std::ops::Neg<Output = T>,
{
    SymMatrix::from_fn(g.n(), |i, j| {
        if i == j {
            T::zero()
        } else if g.has_edge(i, j) {
            -T::one()
        } else {
            T::one()
        }
    })
}

/// Exact characteristic polynomial `det(xI - M)` by the Faddeev-LeVerrier
/// recurrence; every interior division is exact. Coefficients ascend, the
/// leading coefficient is 1.
pub fn char_poly<T>(m: &SymMatrix<T>) -> Result<Poly<T>>
where
    T: Clone
        + Zero
        + One
        + PartialEq
        + FromPrimitive
        + std::ops::Sub<Output = T>
        + std::ops::Div<Output = T>
        + std::ops::Neg<Output = T>,
{
    check_order(m.n())?;
    let n = m.n();
    let mut coeffs = vec![T::zero(); n + 1];
    coeffs[n] = T::one();
    if n == 0 {
        return Ok(Poly::from_coeffs(coeffs));
    }
    let mut work = m.clone(); // M_1 = A
    for k in 1..=n {
        if k > 1 {
            // M_k = A * (M_{k-1} + c_{n-k+1} * I)
            let mut shifted = work.clone();
            for i in 0..n {
                let d = shifted.get(i, i).clone() + coeffs[n - k + 1].clone();
                shifted.set(i, i, d);
            }
            work = m.mul(&shifted);
        }
        let divisor = T::from_usize(k).expect("step index fits scalar");
        coeffs[n - k] = -(work.trace() / divisor);
    }
    Ok(Poly::from_coeffs(coeffs))
}
