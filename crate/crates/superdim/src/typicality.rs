//! Typicality and ℕ-typicality decisions.
//!
//! A weight Λ is typical when (Λ+ρ, α) ≠ 0 for every α ∈ Δ̄₁⁺, and
//! ℕ-typical when every positive multiple kΛ is typical. Bilinearity makes
//! the quantifier over k eliminable: (kΛ+ρ, α) = k(Λ,α) + (ρ,α) vanishes
//! for some integer k ≥ 1 iff either both pairings vanish, or
//! -(ρ,α)/(Λ,α) is an integer ≥ 1. No search over k ever happens.
//!
//! [`family_criteria_n_typical`] implements the per-family mark criteria
//! independently of the root data; the two decision procedures are checked
//! against each other across all families, which simultaneously validates
//! the root tables, the bilinear forms, the marks normalization, and the
//! criteria transcription.

use num_traits::{One, Zero};

use crate::rootdata::{AlgebraSpec, Root, RootDatum};
use crate::weights::{Marks, Weight};
use crate::{Error, Int, Result, Q};

/// Outcome of the ℕ-typicality decision, with the offending roots.
#[derive(Clone, Debug)]
pub struct TypicalityReport {
    pub typical: bool,
    pub n_typical: bool,
    /// Roots α ∈ Δ̄₁⁺ with (kΛ+ρ, α) = 0 for some k ≥ 1, together with the
    /// smallest such k. An entry with k = 1 is an ordinary atypicality.
    pub atypical_roots: Vec<(Root, Int)>,
}

/// Smallest k ≥ 1 with k·a + r = 0, if any.
fn smallest_failing_k(a: &Q, r: &Q) -> Option<Int> {
    if a.is_zero() {
        return r.is_zero().then(Int::one);
    }
    let k = -(r / a);
    (k.denom().is_one() && k.numer() >= &Int::one()).then(|| k.numer().clone())
}

/// Typicality of Λ itself: (Λ+ρ, α) ≠ 0 on all of Δ̄₁⁺.
pub fn is_typical(datum: &RootDatum, w: &Weight) -> bool {
    let shifted: Vec<Q> = w
        .coords
        .iter()
        .zip(&datum.rho)
        .map(|(a, b)| a + b)
        .collect();
    datum
        .delta1_bar_plus
        .iter()
        .all(|alpha| !datum.pair(&shifted, &alpha.coords).is_zero())
}

/// Decide ℕ-typicality in closed form, reporting every failing root with
/// its smallest failing multiple.
pub fn is_n_typical(datum: &RootDatum, w: &Weight) -> TypicalityReport {
    let mut atypical_roots = Vec::new();
    for alpha in &datum.delta1_bar_plus {
        let a = datum.pair(&w.coords, &alpha.coords);
        let r = datum.pair(&datum.rho, &alpha.coords);
        if let Some(k) = smallest_failing_k(&a, &r) {
            atypical_roots.push((alpha.clone(), k));
        }
    }
    TypicalityReport {
        typical: atypical_roots.iter().all(|(_, k)| !k.is_one()),
        n_typical: atypical_roots.is_empty(),
        atypical_roots,
    }
}

/// One quantified condition "L ≠ R + c/k for all k ∈ ℕ", stored as the
/// difference L - R and the constant c.
struct Condition {
    diff: Q,
    c: Q,
}

impl Condition {
    /// Violated for some k ≥ 1 iff diff = c/k has an integer solution.
    fn fails(&self) -> bool {
        if self.diff.is_zero() {
            return self.c.is_zero();
        }
        let k = &self.c / &self.diff;
        k.denom().is_one() && k.numer() >= &Int::one()
    }
}

/// Sum a_from + ... + a_to over 1-based inclusive indices, empty when
/// to < from.
fn msum(a: &[Q], from: i64, to: i64) -> Q {
    let mut acc = Q::zero();
    let mut t = from.max(1);
    while t <= to {
        acc += &a[(t - 1) as usize];
        t += 1;
    }
    acc
}

/// The per-family ℕ-typicality mark criteria, with the quantifier over k
/// eliminated the same way as in [`is_n_typical`].
pub fn family_criteria_n_typical(spec: &AlgebraSpec, marks: &Marks) -> Result<bool> {
    spec.validate()?;
    let r = spec.rank();
    if marks.values.len() != r {
        return Err(Error::MarksLength {
            expected: r,
            got: marks.values.len(),
        });
    }
    let a = &marks.values;
    let ai = |t: i64| a[(t - 1) as usize].clone();
    let qz = |v: i64| crate::qi(v);
    let mut conds: Vec<Condition> = Vec::new();

    match spec {
        AlgebraSpec::A { m, n } => {
            let (m, n) = (*m as i64, *n as i64);
            for i in 1..=(m + 1) {
                for j in (m + 1)..=(m + n + 1) {
                    let rhs = msum(a, m + 2, j) - msum(a, i, m);
                    conds.push(Condition {
                        diff: ai(m + 1) - rhs,
                        c: qz(i + j - 2 * m - 2),
                    });
                }
            }
        }
        AlgebraSpec::B { m: 0, .. } => {
            // Every weight of B(0,n) is ℕ-typical.
        }
        AlgebraSpec::B { m, n } => {
            let (m, n) = (*m as i64, *n as i64);
            for i in 1..=n {
                for j in n..=(m + n - 1) {
                    let e1 = msum(a, i, n) - msum(a, n + 1, j);
                    conds.push(Condition {
                        diff: e1.clone(),
                        c: qz(i + j - 2 * n),
                    });
                    let e2 = e1 - qz(2) * msum(a, j + 1, m + n - 1) - ai(m + n);
                    conds.push(Condition {
                        diff: e2,
                        c: qz(i - j + 2 * m - 1),
                    });
                }
            }
        }
        AlgebraSpec::C { n } => {
            let n = *n as i64;
            for i in 1..=(n - 1) {
                conds.push(Condition {
                    diff: ai(1) - msum(a, 2, i),
                    c: qz(i - 1),
                });
                conds.push(Condition {
                    diff: ai(1) - msum(a, 2, i) - qz(2) * msum(a, i + 1, n),
                    c: qz(2 * n - i - 1),
                });
            }
        }
        AlgebraSpec::D { m, n } => {
            let (m, n) = (*m as i64, *n as i64);
            for i in 1..=n {
                for j in n..=(m + n - 1) {
                    conds.push(Condition {
                        diff: msum(a, i, n) - msum(a, n + 1, j),
                        c: qz(i + j - 2 * n),
                    });
                }
                conds.push(Condition {
                    diff: msum(a, i, n) - msum(a, n + 1, m + n - 2) - ai(m + n),
                    c: qz(m + i - n - 1),
                });
                for j in n..=(m + n - 2) {
                    let e = msum(a, i, n)
                        - msum(a, n + 1, j)
                        - qz(2) * msum(a, j + 1, m + n - 2)
                        - ai(m + n - 1)
                        - ai(m + n);
                    // The constant is i - j + 2m - 2; the remaining two
                    // (1-q)-free mark criteria fix it against the
                    // definitional decision (cross-checked at osp(4|2) =
                    // D(2,1;1)).
                    conds.push(Condition {
                        diff: e,
                        c: qz(i - j + 2 * m - 2),
                    });
                }
            }
        }
        AlgebraSpec::D21 { alpha } => {
            conds.push(Condition {
                diff: ai(1),
                c: Q::zero(),
            });
            conds.push(Condition {
                diff: ai(1) - ai(2),
                c: Q::one(),
            });
            conds.push(Condition {
                diff: ai(1) - alpha * ai(3),
                c: alpha.clone(),
            });
            conds.push(Condition {
                diff: ai(1) - ai(2) - alpha * ai(3),
                c: Q::one() + alpha,
            });
        }
        AlgebraSpec::G3 => {
            for (c2, c3, c) in [
                (0, 0, 0),
                (1, 0, 1),
                (1, 3, 4),
                (3, 3, 6),
                (3, 6, 9),
                (4, 6, 10),
            ] {
                conds.push(Condition {
                    diff: ai(1) - qz(c2) * ai(2) - qz(c3) * ai(3),
                    c: qz(c),
                });
            }
        }
        AlgebraSpec::F4 => {
            for (c2, c3, c4, c) in [
                (0, 0, 0, 0),
                (1, 0, 0, 1),
                (1, 2, 0, 3),
                (2, 2, 0, 4),
                (1, 2, 2, 5),
                (2, 2, 2, 6),
                (2, 4, 2, 8),
                (3, 4, 2, 9),
            ] {
                conds.push(Condition {
                    diff: ai(1) - qz(c2) * ai(2) - qz(c3) * ai(3) - qz(c4) * ai(4),
                    c: qz(c),
                });
            }
        }
    }

    Ok(conds.iter().all(|cond| !cond.fails()))
}
