//! Eulerian numbers and polynomials, elementary symmetric polynomials,
//! Bernoulli numbers, and the C-coefficients of the singly-atypical
//! dimension formula.
//!
//! Eulerian rows are produced by the recurrence
//! A(n,k) = (k+1)A(n-1,k) + (n-k)A(n-1,k-1); the classical alternating
//! binomial sum is implemented separately in [`eulerian_number`] so the two
//! routes can check each other. Everything is exact.

use num_traits::{One, Signed, Zero};

use crate::exactq::{Poly, Scalar};
use crate::{qi, Int, QPoly, Q};

/// n! as a big integer.
pub fn factorial(n: usize) -> Int {
    let mut acc = Int::one();
    for i in 2..=n {
        acc *= Int::from(i);
    }
    acc
}

/// Binomial coefficient C(n, k), zero outside 0 <= k <= n.
pub fn binomial(n: usize, k: usize) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

/// Euler's triangle: `rows()[n]` holds A(n,0) .. A(n,n-1); row 0 is `[1]`,
/// matching the convention A_0(t) = 1.
#[derive(Clone, Debug)]
pub struct EulerianTriangle {
    rows: Vec<Vec<Int>>,
}

impl EulerianTriangle {
    /// Build rows 0..=n_max by the descent recurrence.
    pub fn new(n_max: usize) -> Self {
        let mut rows: Vec<Vec<Int>> = vec![vec![Int::one()]];
        for n in 1..=n_max {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n);
            for k in 0..n {
                let mut v = Int::zero();
                if k < prev.len() {
                    v += Int::from(k + 1) * &prev[k];
                }
                if k >= 1 && k - 1 < prev.len() {
                    v += Int::from(n - k) * &prev[k - 1];
                }
                row.push(v);
            }
            rows.push(row);
        }
        EulerianTriangle { rows }
    }

    pub fn rows(&self) -> &[Vec<Int>] {
        &self.rows
    }

    pub fn number(&self, n: usize, k: usize) -> &Int {
        &self.rows[n][k]
    }

    /// A_j(t) read off row j; avoids rebuilding the triangle when many
    /// polynomials are needed at once.
    pub fn polynomial(&self, j: usize) -> QPoly {
        Poly::from_coeffs(
            self.rows[j]
                .iter()
                .map(|a| Q::from_integer(a.clone()))
                .collect(),
        )
    }
}

/// Eulerian number A(n,k) by the explicit alternating sum
/// Σ_{r=0}^{k} (-1)^r C(n+1, r) (k+1-r)^n.
///
/// Usage contract: n >= 1 and 0 <= k <= n-1; anything else panics.
pub fn eulerian_number(n: usize, k: usize) -> Int {
    assert!(n >= 1 && k < n, "eulerian_number out of range: ({n}, {k})");
    let mut acc = Int::zero();
    for r in 0..=k {
        let term = binomial(n + 1, r) * Int::from(k + 1 - r).pow(n as u32);
        if r % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// The j-th Eulerian polynomial A_j(t) = Σ_k A(j,k) t^k, with A_0(t) = 1.
pub fn eulerian_polynomial(j: usize) -> QPoly {
    EulerianTriangle::new(j).polynomial(j)
}

/// All elementary symmetric values [e_0, ..., e_d] of the given values,
/// via the product recurrence Π(1 + x_i t) = Σ e_j t^j.
pub fn elementary_symmetric_all<T: Scalar>(values: &[T]) -> Vec<T> {
    let mut e = vec![T::one()];
    for x in values {
        e.push(T::zero());
        for j in (1..e.len()).rev() {
            e[j] = e[j].clone() + x.clone() * e[j - 1].clone();
        }
    }
    e
}

/// Bernoulli numbers B_0..B_n in the B_1 = +1/2 convention.
///
/// The classical recurrence Σ_{j=0}^{i} C(i+1,j) B_j = 0 (i >= 1) produces
/// B_1 = -1/2; only the sign of B_1 distinguishes the two conventions, and
/// the C-coefficient relation below requires the positive one.
pub fn bernoulli_numbers(n: usize) -> Vec<Q> {
    let mut b: Vec<Q> = Vec::with_capacity(n + 1);
    b.push(Q::one());
    for i in 1..=n {
        let mut acc = Q::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += Q::from_integer(binomial(i + 1, j)) * bj;
        }
        b.push(-acc / Q::from_integer(Int::from(i + 1)));
    }
    if n >= 1 {
        b[1] = crate::q(1, 2);
    }
    b
}

/// Bernoulli number B_i (B_1 = +1/2 convention).
pub fn bernoulli(i: usize) -> Q {
    bernoulli_numbers(i).pop().unwrap()
}

/// Coefficients C_0..C_n with 2e^t/(1+e^t) = Σ C_i t^i / i!, computed by
/// exact long division of the underlying power series.
///
/// These are exponential-generating-function coefficients: the ordinary
/// t^i-coefficient of 2e^t/(1+e^t) is C_i / i!. This is the normalization
/// under which C_i = 2(2^{i+1}-1) B_{i+1} / (i+1) holds (see
/// [`c_from_bernoulli`]) and the one the singly-atypical dimension formula
/// consumes.
pub fn c_coefficients(n: usize) -> Vec<Q> {
    // Ordinary coefficients of 2e^t and 1 + e^t.
    let inv_fact: Vec<Q> = (0..=n).map(|i| Q::new(Int::one(), factorial(i))).collect();
    let numer: Vec<Q> = inv_fact.iter().map(|c| c * qi(2)).collect();
    let denom: Vec<Q> = inv_fact
        .iter()
        .enumerate()
        .map(|(i, c)| if i == 0 { c + Q::one() } else { c.clone() })
        .collect();
    // Long division: ordinary[k] = (numer[k] - Σ denom[i]·ordinary[k-i]) / denom[0].
    let mut ordinary: Vec<Q> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc = numer[k].clone();
        for i in 1..=k {
            acc -= &denom[i] * &ordinary[k - i];
        }
        ordinary.push(acc / &denom[0]);
    }
    ordinary
        .into_iter()
        .enumerate()
        .map(|(i, c)| c * Q::from_integer(factorial(i)))
        .collect()
}

/// C_i from the Bernoulli closed form 2(2^{i+1}-1) B_{i+1} / (i+1); an
/// independent route used to cross-check [`c_coefficients`].
pub fn c_from_bernoulli(i: usize) -> Q {
    let two_pow = Int::one() << (i + 1);
    let factor = Q::new(Int::from(2) * (two_pow - Int::one()), Int::from(i + 1));
    factor * bernoulli(i + 1)
}

/// True when the rational is an integer.
pub fn is_integer(x: &Q) -> bool {
    x.denom().is_one()
}

/// True when the rational is an integer >= 1.
pub fn is_positive_integer(x: &Q) -> bool {
    is_integer(x) && x.numer().is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::RationalSeries;
    use crate::{q, QSeries};

    #[test]
    fn triangle_matches_printed_rows() {
        let t = EulerianTriangle::new(5);
        let expect: Vec<Vec<i64>> = vec![
            vec![1],
            vec![1],
            vec![1, 1],
            vec![1, 4, 1],
            vec![1, 11, 11, 1],
            vec![1, 26, 66, 26, 1],
        ];
        for (n, row) in expect.iter().enumerate() {
            let got: Vec<Int> = t.rows()[n].to_vec();
            let want: Vec<Int> = row.iter().map(|&v| Int::from(v)).collect();
            assert_eq!(got, want, "row {n}");
        }
    }

    #[test]
    fn explicit_formula_values() {
        assert_eq!(eulerian_number(4, 1), Int::from(11));
        assert_eq!(eulerian_number(5, 2), Int::from(66));
        for n in 1..=8 {
            assert_eq!(eulerian_number(n, 0), Int::one());
        }
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn eulerian_number_rejects_bad_range() {
        eulerian_number(3, 3);
    }

    #[test]
    fn recurrence_palindromy_row_sums() {
        let t = EulerianTriangle::new(12);
        for n in 1..=12 {
            let row = &t.rows()[n];
            // Row sum is n!.
            let sum: Int = row.iter().sum();
            assert_eq!(sum, factorial(n), "row sum n={n}");
            for (k, value) in row.iter().enumerate() {
                // Palindromic, and both computation routes agree.
                assert_eq!(value, &row[n - 1 - k], "palindromy n={n} k={k}");
                assert_eq!(value, &eulerian_number(n, k), "routes n={n} k={k}");
            }
        }
    }

    #[test]
    fn eulerian_polynomials() {
        assert_eq!(eulerian_polynomial(0), QPoly::one());
        assert_eq!(
            eulerian_polynomial(3),
            Poly::from_coeffs(vec![qi(1), qi(4), qi(1)])
        );
        assert_eq!(eulerian_polynomial(2).eval(&qi(1)), qi(2));
    }

    /// (q d/dq)^j 1/(1-q) = A_j(q)·q/(1-q)^{j+1} for j >= 1.
    #[test]
    fn q_ddq_iterates_to_eulerian_polynomials() {
        let mut s = QSeries::geometric();
        for j in 1..=10 {
            s = s.apply_q_ddq();
            let expect = RationalSeries::new(eulerian_polynomial(j).shift_up(1), j + 1);
            assert_eq!(s, expect, "j = {j}");
        }
    }

    #[test]
    fn elementary_symmetric_examples() {
        assert_eq!(elementary_symmetric_all::<Q>(&[]), vec![Q::one()]);
        assert_eq!(elementary_symmetric_all(&[qi(7)]), vec![qi(1), qi(7)]);
        assert_eq!(
            elementary_symmetric_all(&[qi(1), qi(2), qi(3)]),
            vec![qi(1), qi(6), qi(11), qi(6)]
        );
    }

    /// Σ e_j t^j agrees with Π(1 + x_i t) at t = 1, 2.
    #[test]
    fn elementary_symmetric_generating_check() {
        let xs = [q(1, 2), qi(-3), qi(2), q(5, 3), qi(0)];
        let es = elementary_symmetric_all(&xs);
        for t in [qi(1), qi(2)] {
            let lhs: Q = xs.iter().map(|x| Q::one() + x * &t).product();
            let rhs = Poly::from_coeffs(es.clone()).eval(&t);
            assert_eq!(lhs, rhs);
        }
    }

    /// Independent oracle: the defining recurrence with the B_1 sign flip.
    #[test]
    fn bernoulli_values() {
        let b = bernoulli_numbers(12);
        assert_eq!(b[0], Q::one());
        assert_eq!(b[1], q(1, 2));
        assert_eq!(b[2], q(1, 6));
        assert_eq!(b[3], Q::zero());
        assert_eq!(b[4], q(-1, 30));
        assert_eq!(b[6], q(1, 42));
        assert_eq!(b[8], q(-1, 30));
        assert_eq!(b[10], q(5, 66));
        assert_eq!(b[12], q(-691, 2730));
        for i in (3..=11).step_by(2) {
            assert_eq!(b[i], Q::zero(), "odd B_{i}");
        }
    }

    #[test]
    fn c_coefficient_values() {
        let c = c_coefficients(5);
        assert_eq!(c[0], Q::one());
        assert_eq!(c[1], q(1, 2));
        assert_eq!(c[2], Q::zero());
        assert_eq!(c[3], q(-1, 4));
        assert_eq!(c[4], Q::zero());
        assert_eq!(c[5], q(1, 2));
    }

    /// The two C_i routes (series division vs Bernoulli closed form) agree.
    #[test]
    fn c_coefficients_match_bernoulli_form() {
        let c = c_coefficients(10);
        for (i, ci) in c.iter().enumerate() {
            assert_eq!(ci, &c_from_bernoulli(i), "C_{i}");
        }
    }
}
