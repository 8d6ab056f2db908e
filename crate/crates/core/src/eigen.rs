//! Cyclic Jacobi eigensolver for dense symmetric matrices, generic over the
//! floating scalar.
//!
//! The sweep order is fixed, so results are bit-reproducible for a given
//! input and tolerance.

use num_traits::Float;

use crate::matrix::SymMatrix;
use crate::{Error, Result};

/// Maximum number of full sweeps before giving up.
pub const SWEEP_CAP: usize = 100;

/// Default convergence tolerance.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Eigenvalues of a symmetric matrix, sorted descending.
///
/// `tol` is the off-diagonal Frobenius norm left at termination; by the
/// Wielandt-Hoffman bound each reported value is within that distance of a
/// true eigenvalue.
#[derive(Clone, Debug)]
pub struct SpectrumReal<T> {
    values: Vec<T>,
    tol: T,
}

impl<T: Float> SpectrumReal<T> {
    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn tol(&self) -> T {
        self.tol
    }

    pub fn lambda1(&self) -> T {
        self.values.first().copied().unwrap_or_else(T::zero)
    }

    pub fn lambda_min(&self) -> T {
        self.values.last().copied().unwrap_or_else(T::zero)
    }

    /// Spectral radius `max(|lambda_1|, |lambda_n|)`.
    pub fn rho(&self) -> T {
        self.lambda1().abs().max(self.lambda_min().abs())
    }
}

fn off_diagonal_norm<T: Float>(a: &SymMatrix<T>) -> T {
    let n = a.n();
    let mut s = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let v = *a.get(i, j);
                s = s + v * v;
            }
        }
    }
    s.sqrt()
}

/// Eigenvalues by cyclic Jacobi rotations. Terminates when the off-diagonal
/// Frobenius norm drops below `tol * n`.
pub fn eigenvalues<T: Float>(m: &SymMatrix<T>, tol: T) -> Result<SpectrumReal<T>> {
    if tol <= T::zero() || tol.is_nan() {
        return Err(Error::BadParams("tolerance must be positive".into()));
    }
    let n = m.n();
    if n == 0 {
        return Ok(SpectrumReal {
            values: Vec::new(),
            tol: T::zero(),
        });
    }
    let threshold = tol * T::from(n).unwrap();
    let mut a = m.clone();
    let mut off = off_diagonal_norm(&a);
    let mut sweeps = 0usize;
    while off >= threshold {
        if sweeps >= SWEEP_CAP {
            return Err(Error::NoConvergence(SWEEP_CAP));
        }
        for p in 0..n.saturating_sub(1) {
            for q in p + 1..n {
                let apq = *a.get(p, q);
                if apq == T::zero() {
                    continue;
                }
                let app = *a.get(p, p);
                let aqq = *a.get(q, q);
                let theta = (aqq - app) / (T::from(2).unwrap() * apq);
                let t = {
                    let s = if theta < T::zero() {
                        -T::one()
                    } else {
                        T::one()
                    };
                    s / (theta.abs() + (T::one() + theta * theta).sqrt())
                };
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = t * c;
                // rotate rows/columns p and q
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = *a.get(k, p);
                    let akq = *a.get(k, q);
                    let new_kp = c * akp - s * akq;
                    let new_kq = s * akp + c * akq;
                    a.set_sym(k, p, new_kp);
                    a.set_sym(k, q, new_kq);
                }
                let t_apq = t * apq;
                a.set(p, p, app - t_apq);
                a.set(q, q, aqq + t_apq);
                a.set_sym(p, q, T::zero());
            }
        }
        sweeps += 1;
        off = off_diagonal_norm(&a);
    }
    let mut values: Vec<T> = (0..n).map(|i| *a.get(i, i)).collect();
    values.sort_by(|x, y| y.partial_cmp(x).expect("eigenvalues are finite"));
    Ok(SpectrumReal { values, tol: off })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SignedGraph;
    use crate::matrix::adjacency;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-9
    }

    #[test]
    fn all_negative_triangle() {
        let k3m =
            SignedGraph::build(3, &[(0, 1, -1), (1, 2, -1), (0, 2, -1)]).unwrap();
        let a: SymMatrix<f64> = adjacency(&k3m);
        let s = eigenvalues(&a, DEFAULT_TOL).unwrap();
        assert!(close(s.values()[0], 1.0));
        assert!(close(s.values()[1], 1.0));
        assert!(close(s.values()[2], -2.0));
        assert!(close(s.rho(), 2.0));
        assert!(close(s.lambda1(), 1.0));
    }

    #[test]
    fn zero_matrix() {
        let z: SymMatrix<f64> = SymMatrix::zeros(4);
        let s = eigenvalues(&z, DEFAULT_TOL).unwrap();
        assert!(s.values().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn unbalanced_four_cycle() {
        let c4m =
            SignedGraph::build(4, &[(0, 1, -1), (1, 2, 1), (2, 3, 1), (0, 3, 1)]).unwrap();
        let a: SymMatrix<f64> = adjacency(&c4m);
        let s = eigenvalues(&a, DEFAULT_TOL).unwrap();
        let r2 = 2f64.sqrt();
        for (got, want) in s.values().iter().zip([r2, r2, -r2, -r2]) {
            assert!(close(*got, want));
        }
    }

    #[test]
    fn trace_is_preserved() {
        let g = SignedGraph::build(
            5,
            &[(0, 1, 1), (1, 2, -1), (2, 3, 1), (3, 4, -1), (0, 4, 1), (0, 2, -1)],
        )
        .unwrap();
        let a: SymMatrix<f64> = adjacency(&g);
        let s = eigenvalues(&a, DEFAULT_TOL).unwrap();
        let sum: f64 = s.values().iter().sum();
        assert!(sum.abs() < 5.0 * DEFAULT_TOL);
    }
}
