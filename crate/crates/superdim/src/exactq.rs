//! Exact univariate polynomials and rational series with all poles at q = 1.
//!
//! Every generating function in this crate has the shape P(q)/(1-q)^m, so a
//! general rational-function type is not needed: the pair (numerator, pole
//! order) is a normal form once the numerator has been reduced against
//! (1-q), and equality of series is plain structural equality.
//!
//! Coefficient arithmetic is generic over [`Scalar`] (anything satisfying
//! `num_traits::Num`), instantiated in practice at the crate root as
//! [`crate::Q`] = `BigRational`. Expansion is done by exact long division,
//! never by partial fractions.

use std::fmt;
use std::ops::Neg;

use num_traits::Num;

/// Coefficient scalar: an exact (or at least ring-like) number type.
pub trait Scalar: Num + Clone + Neg<Output = Self> + PartialEq + fmt::Debug + fmt::Display {}

impl<T> Scalar for T where T: Num + Clone + Neg<Output = T> + PartialEq + fmt::Debug + fmt::Display {}

/// Dense univariate polynomial; `coeffs[i]` is the degree-i coefficient.
///
/// Invariant: the last coefficient is nonzero unless the polynomial is zero
/// (empty coefficient vector).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<T: Scalar> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// Build from ascending coefficients, stripping trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// The monomial c·q^k.
    pub fn monomial(c: T, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// 1 - q.
    pub fn one_minus_q() -> Self {
        Poly::from_coeffs(vec![T::one(), -T::one()])
    }

    /// (1 - q)^m by repeated multiplication.
    pub fn one_minus_q_pow(m: usize) -> Self {
        let mut p = Poly::one();
        for _ in 0..m {
            p = p.mul(&Poly::one_minus_q());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with deg 0 for constants and the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Degree-k coefficient (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Poly::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().cloned().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(self.coeffs.iter().cloned().map(|a| a * c.clone()).collect())
    }

    /// Multiply by q^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            let mut k = T::zero();
            for _ in 0..i {
                k = k + T::one();
            }
            out.push(c.clone() * k);
        }
        Poly::from_coeffs(out)
    }

    /// Exact quotient by (1 - q), if divisible. The prefix sums of the
    /// coefficients are the quotient; divisibility means they telescope to
    /// zero, i.e. p(1) = 0.
    pub fn div_one_minus_q(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        let mut acc = T::zero();
        for c in &self.coeffs {
            acc = acc + c.clone();
            out.push(acc.clone());
        }
        // Last prefix sum is the remainder p(1).
        match out.pop() {
            Some(r) if r.is_zero() => Some(Poly::from_coeffs(out)),
            _ => None,
        }
    }
}

impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})q")?,
                _ => write!(f, "({c})q^{i}")?,
            }
        }
        Ok(())
    }
}

/// A series P(q)/(1-q)^m in normal form: P(1) ≠ 0 unless P = 0, in which
/// case the pole order is 0 as well.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries<T: Scalar> {
    numerator: Poly<T>,
    pole_order: usize,
}

impl<T: Scalar> RationalSeries<T> {
    /// Normalize numer/(1-q)^pole_order: cancel (1-q) factors against the
    /// pole while both remain; a numerator more divisible than the pole
    /// order simply ends up as a polynomial (pole order 0) with its leftover
    /// (1-q) factors expanded.
    pub fn new(numer: Poly<T>, pole_order: usize) -> Self {
        let mut numerator = numer;
        let mut pole = pole_order;
        if numerator.is_zero() {
            return RationalSeries {
                numerator,
                pole_order: 0,
            };
        }
        while pole > 0 {
            match numerator.div_one_minus_q() {
                Some(qt) => {
                    numerator = qt;
                    pole -= 1;
                }
                None => break,
            }
        }
        RationalSeries {
            numerator,
            pole_order: pole,
        }
    }

    pub fn zero() -> Self {
        RationalSeries {
            numerator: Poly::zero(),
            pole_order: 0,
        }
    }

    pub fn from_poly(p: Poly<T>) -> Self {
        RationalSeries::new(p, 0)
    }

    /// The geometric series 1/(1-q).
    pub fn geometric() -> Self {
        RationalSeries::new(Poly::one(), 1)
    }

    pub fn numerator(&self) -> &Poly<T> {
        &self.numerator
    }

    pub fn pole_order(&self) -> usize {
        self.pole_order
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn scale(&self, c: &T) -> Self {
        RationalSeries::new(self.numerator.scale(c), self.pole_order)
    }

    /// Exact sum over the common denominator (1-q)^max(m, n).
    pub fn add(&self, other: &Self) -> Self {
        let pole = self.pole_order.max(other.pole_order);
        let a = self
            .numerator
            .mul(&Poly::one_minus_q_pow(pole - self.pole_order));
        let b = other
            .numerator
            .mul(&Poly::one_minus_q_pow(pole - other.pole_order));
        RationalSeries::new(a.add(&b), pole)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&(-T::one())))
    }

    pub fn mul(&self, other: &Self) -> Self {
        RationalSeries::new(
            self.numerator.mul(&other.numerator),
            self.pole_order + other.pole_order,
        )
    }

    /// Apply the operator q·d/dq. On series coefficients this multiplies the
    /// k-th coefficient by k:
    ///
    /// q·d/dq [P/(1-q)^m] = q·(P'(1-q) + mP) / (1-q)^{m+1}.
    pub fn apply_q_ddq(&self) -> Self {
        if self.is_zero() {
            return RationalSeries::zero();
        }
        let p = &self.numerator;
        let mut m = T::zero();
        for _ in 0..self.pole_order {
            m = m + T::one();
        }
        let inner = p.derivative().mul(&Poly::one_minus_q()).add(&p.scale(&m));
        RationalSeries::new(inner.shift_up(1), self.pole_order + 1)
    }

    /// First `n_terms` Taylor coefficients at q = 0, by long division of the
    /// numerator by (1-q)^m.
    pub fn expand(&self, n_terms: usize) -> Vec<T> {
        assert!(n_terms >= 1, "expand requires at least one term");
        let den = Poly::<T>::one_minus_q_pow(self.pole_order);
        let mut out: Vec<T> = Vec::with_capacity(n_terms);
        for k in 0..n_terms {
            let mut acc = self.numerator.coeff(k);
            for i in 1..=k.min(self.pole_order) {
                acc = acc - den.coeff(i) * out[k - i].clone();
            }
            // den.coeff(0) = 1, so no final division is needed.
            out.push(acc);
        }
        out
    }
}

impl<T: Scalar> fmt::Display for RationalSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pole_order == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({})/(1-q)^{}", self.numerator, self.pole_order)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, qi, QPoly, QSeries, Q};
    use proptest::prelude::*;

    fn poly(cs: &[i64]) -> QPoly {
        Poly::from_coeffs(cs.iter().map(|&c| qi(c)).collect())
    }

    #[test]
    fn ring_identities() {
        let p = poly(&[1, 1]);
        assert_eq!(p.mul(&p), poly(&[1, 2, 1]));
        assert_eq!(poly(&[1, -1, 2]).eval(&qi(3)), qi(16));
        // Row n = 3 of Euler's triangle sums to 3!.
        assert_eq!(poly(&[1, 4, 1]).eval(&qi(1)), qi(6));
    }

    #[test]
    fn trailing_zeros_stripped() {
        assert_eq!(poly(&[1, 2, 0, 0]), poly(&[1, 2]));
        assert!(poly(&[0, 0]).is_zero());
        assert_eq!(poly(&[]).degree(), 0);
    }

    #[test]
    fn derivative_and_shift() {
        assert_eq!(poly(&[5, 1, 3]).derivative(), poly(&[1, 6]));
        assert_eq!(poly(&[1, 2]).shift_up(2), poly(&[0, 0, 1, 2]));
    }

    #[test]
    fn q_ddq_on_geometric() {
        let g = QSeries::geometric();
        let g1 = g.apply_q_ddq();
        assert_eq!(g1, QSeries::new(poly(&[0, 1]), 2));
        let g2 = g1.apply_q_ddq();
        // q(1+q)/(1-q)^3
        assert_eq!(g2, QSeries::new(poly(&[0, 1, 1]), 3));
        // Constants are killed.
        let c = QSeries::from_poly(poly(&[5]));
        assert!(c.apply_q_ddq().is_zero());
    }

    #[test]
    fn expansion_examples() {
        let s = QSeries::new(poly(&[4]), 2);
        assert_eq!(s.expand(5), vec![qi(4), qi(8), qi(12), qi(16), qi(20)]);
        let s = QSeries::new(poly(&[64, 128]), 4);
        assert_eq!(s.expand(4), vec![qi(64), qi(384), qi(1152), qi(2560)]);
        let s = QSeries::from_poly(poly(&[1, 1]));
        assert_eq!(s.expand(3), vec![qi(1), qi(1), qi(0)]);
    }

    #[test]
    fn normalization_examples() {
        // (4-4q)/(1-q)^2 = 4/(1-q)
        let s = QSeries::new(poly(&[4, -4]), 2);
        assert_eq!(s, QSeries::new(poly(&[4]), 1));
        // (1-q)^3/(1-q) is the polynomial (1-q)^2
        let s = QSeries::new(QPoly::one_minus_q_pow(3), 1);
        assert_eq!(s.pole_order(), 0);
        assert_eq!(s.numerator(), &poly(&[1, -2, 1]));
        // (1+q)/(1-q)^5 is already reduced
        let s = QSeries::new(poly(&[1, 1]), 5);
        assert_eq!(s.pole_order(), 5);
        assert_eq!(s.numerator(), &poly(&[1, 1]));
        // Zero numerator collapses entirely.
        assert_eq!(QSeries::new(QPoly::zero(), 3), QSeries::zero());
    }

    #[test]
    fn series_sum_matches_coefficients() {
        let a = QSeries::new(poly(&[1, 2]), 3);
        let b = QSeries::new(poly(&[5]), 1);
        let sum = a.add(&b);
        let (ea, eb, es) = (a.expand(8), b.expand(8), sum.expand(8));
        for k in 0..8 {
            assert_eq!(es[k], ea[k].clone() + eb[k].clone());
        }
    }

    fn arb_q() -> impl Strategy<Value = Q> {
        (-20i64..=20, 1i64..=6).prop_map(|(n, d)| q(n, d))
    }

    fn arb_poly() -> impl Strategy<Value = QPoly> {
        prop::collection::vec(arb_q(), 0..6).prop_map(Poly::from_coeffs)
    }

    proptest! {
        /// Extra (1-q) factors in numerator and pole cancel exactly.
        #[test]
        fn normalize_cancels_common_factors(p in arb_poly(), m in 0usize..4, j in 0usize..4) {
            let lhs = QSeries::new(p.mul(&QPoly::one_minus_q_pow(j)), m + j);
            let rhs = QSeries::new(p.clone(), m);
            prop_assert_eq!(lhs, rhs);
        }

        /// q d/dq multiplies the k-th series coefficient by k.
        #[test]
        fn q_ddq_scales_coefficients(p in arb_poly(), m in 0usize..4) {
            let s = QSeries::new(p, m);
            let d = s.apply_q_ddq();
            let (es, ed) = (s.expand(10), d.expand(10));
            for k in 0..10 {
                prop_assert_eq!(ed[k].clone(), es[k].clone() * qi(k as i64));
            }
        }

        /// normalize preserves the underlying fraction: cross-multiplied
        /// numerators agree at random rational sample points.
        #[test]
        fn normalize_preserves_fraction(p in arb_poly(), m in 0usize..4, pts in prop::collection::vec(arb_q(), 10)) {
            let s = QSeries::new(p.clone(), m);
            // p/(1-q)^m = num/(1-q)^pole with pole <= m, i.e.
            // p = num * (1-q)^{m - pole} as polynomials.
            let rhs = s.numerator().mul(&QPoly::one_minus_q_pow(m - s.pole_order()));
            for x in pts {
                prop_assert_eq!(p.eval(&x), rhs.eval(&x));
            }
        }
    }
}
