//! Univariate polynomials, generic over the coefficient type, plus exact
//! real-root counting via Sturm chains at rational endpoints.
//!
//! Coefficients are stored in ascending degree order with no trailing zeros;
//! the zero polynomial has an empty coefficient vector.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: fmt::Debug> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

impl<T: Clone + Zero> Poly<T> {
    pub fn zero() -> Poly<T> {
        Poly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<T>) -> Poly<T> {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: T) -> Poly<T> {
        Poly::from_coeffs(vec![c])
    }

    pub fn monomial(c: T, k: usize) -> Poly<T> {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Ascending coefficient vector padded with the leading term included,
    /// exactly as stored.
    pub fn coeffs_vec(&self) -> Vec<T> {
        self.coeffs.clone()
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn map<U: Clone + Zero>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl<T> Poly<T>
where
    T: Clone + Zero,
{
    pub fn add(&self, rhs: &Poly<T>) -> Poly<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|i| self.coeff(i) + rhs.coeff(i))
            .collect();
        Poly::from_coeffs(coeffs)
    }
}

impl<T> Poly<T>
where
    T: Clone + Zero + std::ops::Neg<Output = T>,
{
    pub fn neg(&self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.iter().cloned().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, rhs: &Poly<T>) -> Poly<T> {
        self.add(&rhs.neg())
    }
}

impl<T> Poly<T>
where
    T: Clone + Zero + One,
{
    pub fn one() -> Poly<T> {
        Poly::constant(T::one())
    }

    pub fn mul(&self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &T) -> Poly<T> {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, k: usize) -> Poly<T> {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }
}

impl<T> Poly<T>
where
    T: Clone + Zero + One + num_traits::FromPrimitive,
{
    pub fn derivative(&self) -> Poly<T> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.clone() * T::from_usize(i).expect("degree fits scalar"))
            .collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Poly<BigInt> {
    pub fn to_rational(&self) -> Poly<BigRational> {
        self.map(|c| BigRational::from(c.clone()))
    }

    /// Divides every coefficient by their (positive) gcd, preserving signs.
    fn divide_by_content(&self) -> Poly<BigInt> {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        Poly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Divides every coefficient by the gcd of all of them and normalizes the
    /// leading coefficient to be positive. Zero maps to zero.
    fn primitive_part(&self) -> Poly<BigInt> {
        if self.is_zero() {
            return Poly::zero();
        }
        let p = self.divide_by_content();
        if p.leading().unwrap().is_negative() {
            p.neg()
        } else {
            p
        }
    }

    /// Pseudo-remainder scaled to preserve the sign of the true remainder:
    /// returns `r` with `r ~ (lead(g)^k * f) mod g` and the scale positive.
    fn signed_pseudo_rem(&self, g: &Poly<BigInt>) -> Poly<BigInt> {
        let dg = g.degree().expect("divisor must be nonzero");
        let lg = g.leading().unwrap().clone();
        let mut r = self.clone();
        let mut scale_neg = false;
        while let Some(dr) = r.degree() {
            if dr < dg {
                break;
            }
            // r := lg * r - lead(r) * x^(dr-dg) * g
            let lr = r.leading().unwrap().clone();
            let shifted = Poly::monomial(lr, dr - dg).mul(g);
            r = r.scale(&lg).sub(&shifted);
            if lg.is_negative() {
                scale_neg = !scale_neg;
            }
        }
        if scale_neg {
            r.neg()
        } else {
            r
        }
    }

    /// Integer polynomial gcd via a primitive remainder sequence; the result
    /// is primitive with positive leading coefficient.
    pub fn gcd(&self, other: &Poly<BigInt>) -> Poly<BigInt> {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.signed_pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// Square-free part `p / gcd(p, p')`, primitive and positive-leading.
    pub fn square_free_part(&self) -> Poly<BigInt> {
        if self.is_zero() {
            return Poly::zero();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.primitive_part();
        }
        // exact division p / g over the rationals, then clear denominators
        let q = self.to_rational().div_rem(&g.to_rational()).0;
        rational_to_primitive_int(&q)
    }

    /// Number of distinct complex roots, `deg p - deg gcd(p, p')` exactly.
    /// For the characteristic polynomial of a symmetric matrix this is the
    /// number of distinct eigenvalues.
    pub fn distinct_root_count(&self) -> usize {
        match self.degree() {
            None | Some(0) => 0,
            Some(d) => d - self.gcd(&self.derivative()).degree().unwrap_or(0),
        }
    }

    /// Number of distinct real roots, by the sign variations of a Sturm
    /// chain at the two infinities. Equals [`Self::distinct_root_count`]
    /// exactly when every root is real.
    pub fn distinct_real_root_count(&self) -> usize {
        if self.degree().is_none_or(|d| d == 0) {
            return 0;
        }
        let chain = sturm_chain(&self.square_free_part());
        variations_at_neg_inf(&chain) - variations_at_pos_inf(&chain)
    }

    /// Exact number of distinct real roots lying outside the closed interval
    /// `[a, b]`, by Sturm chains evaluated at the rational endpoints.
    ///
    /// Rational roots sitting exactly on an endpoint are divided out first,
    /// so the chain is never evaluated at a root of its own head.
    pub fn count_roots_outside(&self, a: &BigRational, b: &BigRational) -> usize {
        assert!(a < b, "interval endpoints must satisfy a < b");
        if self.degree().is_none_or(|d| d == 0) {
            return 0;
        }
        let mut sqf = self.square_free_part();
        for endpoint in [a, b] {
            if sqf.to_rational().eval(endpoint).is_zero() {
                // divide by (x - endpoint); the root is inside [a, b]
                let divisor = Poly::from_coeffs(vec![-endpoint.clone(), BigRational::one()]);
                let (q, r) = sqf.to_rational().div_rem(&divisor);
                debug_assert!(r.is_zero());
                sqf = rational_to_primitive_int(&q);
            }
        }
        if sqf.degree().is_none_or(|d| d == 0) {
            return 0;
        }
        let chain = sturm_chain(&sqf);
        let total = variations_at_neg_inf(&chain) - variations_at_pos_inf(&chain);
        let inside = variations_at(&chain, a) - variations_at(&chain, b);
        total - inside
    }
}

fn rational_to_primitive_int(p: &Poly<BigRational>) -> Poly<BigInt> {
    if p.is_zero() {
        return Poly::zero();
    }
    let mut denom_lcm = BigInt::one();
    for c in p.coeffs() {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&denom_lcm / c.denom()))
        .collect();
    Poly::from_coeffs(ints).primitive_part()
}

impl Poly<BigRational> {
    /// Euclidean division: returns `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &Poly<BigRational>) -> (Poly<BigRational>, Poly<BigRational>) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let ld = divisor.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let factor = rem.leading().unwrap() / &ld;
            let term = Poly::monomial(factor, dr - dd);
            quot = quot.add(&term);
            rem = rem.sub(&term.mul(divisor));
        }
        (quot, rem)
    }
}

/// Sturm chain of a square-free integer polynomial. Elements are only scaled
/// by positive constants (their content), which preserves the sign variation
/// counts the chain is read for.
fn sturm_chain(p: &Poly<BigInt>) -> Vec<Poly<BigInt>> {
    let mut chain = vec![p.clone(), p.derivative().divide_by_content()];
    loop {
        let k = chain.len();
        if chain[k - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[k - 2]
            .signed_pseudo_rem(&chain[k - 1])
            .divide_by_content()
            .neg();
        if r.is_zero() {
            break;
        }
        chain.push(r);
    }
    chain
}

fn sign_of(v: &BigRational) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

fn count_variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs {
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

fn variations_at(chain: &[Poly<BigInt>], x: &BigRational) -> usize {
    count_variations(chain.iter().map(|p| sign_of(&p.to_rational().eval(x))))
}

fn variations_at_pos_inf(chain: &[Poly<BigInt>]) -> usize {
    count_variations(chain.iter().map(|p| match p.leading() {
        None => 0,
        Some(l) => {
            if l.is_positive() {
                1
            } else {
                -1
            }
        }
    }))
}

fn variations_at_neg_inf(chain: &[Poly<BigInt>]) -> usize {
    count_variations(chain.iter().map(|p| match p.degree() {
        None => 0,
        Some(d) => {
            let l = p.leading().unwrap();
            let s: i8 = if l.is_positive() { 1 } else { -1 };
            if d % 2 == 0 {
                s
            } else {
                -s
            }
        }
    }))
}

/// Pretty-printer in descending powers, e.g. `x^3 - 3x - 2`.
impl fmt::Display for Poly<BigInt> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
                first = false;
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if i == 0 || !mag.is_one() {
                write!(f, "{}", mag)?;
            }
            if i > 0 {
                f.write_str("x")?;
                if i > 1 {
                    write!(f, "^{}", i)?;
                }
            }
        }
        Ok(())
    }
}


#[cfg(test)]
mod tests {
    use super::*;

    fn ipoly(cs: &[i64]) -> Poly<BigInt> {
        Poly::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn arithmetic_basics() {
        let p = ipoly(&[-2, -3, 0, 1]); // x^3 - 3x - 2
        assert_eq!(p.degree(), Some(3));
        assert_eq!(p.eval(&BigInt::from(2)), BigInt::from(0));
        assert_eq!(p.eval(&BigInt::from(-1)), BigInt::from(0));
        let q = ipoly(&[1, 1]); // x + 1
        assert_eq!(p.mul(&q), ipoly(&[-2, -5, -3, 1, 1]));
        assert_eq!(p.sub(&p), Poly::zero());
        assert_eq!(format!("{}", p), "x^3 - 3x - 2");
    }

    #[test]
    fn gcd_and_square_free() {
        // (x-1)^2 (x+2) = x^3 - 3x + 2
        let p = ipoly(&[2, -3, 0, 1]);
        let g = p.gcd(&p.derivative());
        assert_eq!(g, ipoly(&[-1, 1])); // x - 1
        assert_eq!(p.square_free_part(), ipoly(&[-2, 1, 1])); // (x-1)(x+2)
        assert_eq!(p.distinct_root_count(), 2);
    }

    #[test]
    fn distinct_roots_of_powers() {
        // (x-2)^3 (x+2)^3 = (x^2-4)^3
        let p = ipoly(&[-4, 0, 1]).pow(3);
        assert_eq!(p.distinct_root_count(), 2);
        let xn = ipoly(&[0, 0, 0, 0, 1]); // x^4
        assert_eq!(xn.distinct_root_count(), 1);
    }

    #[test]
    fn sturm_examples() {
        // roots {1, 1, -2} inside [-2, 2]
        let p = ipoly(&[2, -3, 0, 1]);
        assert_eq!(p.count_roots_outside(&rat(-2, 1), &rat(2, 1)), 0);
        // K4 spectrum {3, -1, -1, -1}: one root outside
        let k4 = ipoly(&[-3, -8, -6, 0, 1]); // (x-3)(x+1)^3
        assert_eq!(k4.count_roots_outside(&rat(-2, 1), &rat(2, 1)), 1);
        // C4 minus: x^4 - 4x^2 + 4, roots +-sqrt(2)
        let c4m = ipoly(&[4, 0, -4, 0, 1]);
        assert_eq!(c4m.count_roots_outside(&rat(-2, 1), &rat(2, 1)), 0);
        assert_eq!(c4m.count_roots_outside(&rat(-1, 1), &rat(1, 1)), 2);
        // endpoint roots are inside the closed interval
        let q = ipoly(&[-4, 0, 1]); // (x-2)(x+2)
        assert_eq!(q.count_roots_outside(&rat(-2, 1), &rat(2, 1)), 0);
        assert_eq!(q.count_roots_outside(&rat(-2, 1), &rat(0, 1)), 1);
    }

    #[test]
    fn div_rem_rational() {
        let p = ipoly(&[-4, 0, 9, 0, -6, 0, 1]).to_rational(); // C6 char poly
        let d = ipoly(&[-1, 0, 1]).to_rational(); // x^2 - 1
        let (q, r) = p.div_rem(&d);
        assert!(r.is_zero());
        assert_eq!(q, ipoly(&[4, 0, -5, 0, 1]).to_rational());
    }
}
