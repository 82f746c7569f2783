//! The typical dimension formula and two independent closed forms of the
//! Hilbert series H_Λ(q) = Σ_k dim V(kΛ) q^k.
//!
//! For typical finite-dimensional V(kΛ),
//!
//! dim V(kΛ) = 2^{d₁} Π_{α ∈ Δ₀⁺} (kΛ+ρ, α)/(ρ₀, α)
//!           = 2^{d₁} Π_{α ∈ Δ₀⁺} (1 - c₁(α) + k·c_Λ(α)),
//!
//! with c₁(α) = (ρ₁,α)/(ρ₀,α) and c_Λ(α) = (Λ,α)/(ρ₀,α), so the dimension
//! is a polynomial h_Λ(k) that factors into affine-linear forms. Summing
//! against q^k gives H_Λ(q) = h_Λ(q·d/dq) 1/(1-q) — the operator form — and
//! expanding Π(1 + k·c_Λ/(1-c₁)) through elementary symmetric polynomials
//! gives the Eulerian-polynomial form. Both are computed exactly and must
//! agree as normalized series; the n = 0 coefficient is the formula value
//! h_Λ(0) = 2^{d₁}Π(1-c₁), not the dimension of the trivial module.
//!
//! The Eulerian form divides by 1 - c₁(α) = (ρ,α)/(ρ₀,α); a few algebras
//! (e.g. osp(3|4)) have an even root with (ρ,α) = 0, in which case that
//! form is reported as degenerate and the operator form is authoritative.
//!
//! The j = 0 summand of the Eulerian form is 1/(1-q): the summation
//! Σ_{k≥0} k⁰ q^k includes the k = 0 term, so the bare geometric series is
//! the correct zeroth operator image, and it is what makes the constant
//! terms of the reference tables come out right.

use num_traits::{One, Signed, Zero};

use crate::combinatorics::{elementary_symmetric_all, EulerianTriangle};
use crate::exactq::Poly;
use crate::rootdata::RootDatum;
use crate::typicality::is_n_typical;
use crate::weights::{is_dominant_integral_partial, marks_of, Dominance, Weight};
use crate::{Error, QPoly, QSeries, Result, Q};

/// The dimension polynomial h_Λ in factored and expanded form.
#[derive(Clone, Debug)]
pub struct HilbertPolynomial {
    /// 2^{d₁}.
    pub prefactor: Q,
    /// Affine factors (1 - c₁(β), c_Λ(β)) over β ∈ Δ₀⁺, with identity
    /// factors (1, 0) omitted.
    pub factors: Vec<(Q, Q)>,
    /// prefactor · Π (constant + slope·t), as a polynomial in t.
    pub expanded: QPoly,
}

impl HilbertPolynomial {
    pub fn degree(&self) -> usize {
        self.factors.iter().filter(|(_, s)| !s.is_zero()).count()
    }

    pub fn eval(&self, k: &Q) -> Q {
        self.expanded.eval(k)
    }
}

/// (1 - c₁(β), c_Λ(β)) for every β ∈ Δ₀⁺. The construction guarantees
/// (ρ₀, β) ≠ 0 (ρ₀ is regular for the even subsystem).
fn affine_data(datum: &RootDatum, w: &Weight) -> Vec<(Q, Q)> {
    datum
        .delta0_plus
        .iter()
        .map(|beta| {
            let r0 = datum.pair(&datum.rho0, &beta.coords);
            assert!(!r0.is_zero(), "(rho0, beta) vanished on an even root");
            let constant = datum.pair(&datum.rho, &beta.coords) / &r0;
            let slope = datum.pair(&w.coords, &beta.coords) / &r0;
            (constant, slope)
        })
        .collect()
}

/// 2^{d₁} as a rational.
fn prefactor(datum: &RootDatum) -> Q {
    Q::from_integer(crate::Int::one() << datum.d1())
}

/// dim V(kΛ) by Kac's product formula, evaluated directly through the
/// bilinear form (an independent route from the polynomial evaluation).
pub fn dim_typical(datum: &RootDatum, w: &Weight, k: u64) -> Q {
    let kq = Q::from_integer(crate::Int::from(k));
    let shifted: Vec<Q> = w
        .coords
        .iter()
        .zip(&datum.rho)
        .map(|(a, b)| a * &kq + b)
        .collect();
    let mut acc = prefactor(datum);
    for beta in &datum.delta0_plus {
        let num = datum.pair(&shifted, &beta.coords);
        let den = datum.pair(&datum.rho0, &beta.coords);
        acc = acc * num / den;
    }
    acc
}

/// Factored and expanded dimension polynomial h_Λ(t).
pub fn hilbert_polynomial(datum: &RootDatum, w: &Weight) -> HilbertPolynomial {
    let pre = prefactor(datum);
    let mut factors = Vec::new();
    let mut expanded = Poly::constant(pre.clone());
    for (constant, slope) in affine_data(datum, w) {
        if constant.is_one() && slope.is_zero() {
            continue;
        }
        expanded = expanded.mul(&Poly::from_coeffs(vec![constant.clone(), slope.clone()]));
        factors.push((constant, slope));
    }
    HilbertPolynomial {
        prefactor: pre,
        factors,
        expanded,
    }
}

/// H_Λ(q) = h_Λ(q·d/dq) 1/(1-q): substitute the operator into the expanded
/// polynomial and apply it to the geometric series.
pub fn series_via_operator(datum: &RootDatum, w: &Weight) -> QSeries {
    let h = hilbert_polynomial(datum, w).expanded;
    let mut acc = QSeries::zero();
    let mut image = QSeries::geometric(); // (q d/dq)^j applied iteratively
    for j in 0..=h.degree() {
        let c = h.coeff(j);
        if !c.is_zero() {
            acc = acc.add(&image.scale(&c));
        }
        if j < h.degree() {
            image = image.apply_q_ddq();
        }
    }
    acc
}

/// H_Λ(q) through elementary symmetric polynomials of c_Λ(β)/(1-c₁(β)) and
/// Eulerian polynomials:
///
/// H = 2^{d₁} Π(1-c₁(βᵢ)) [ e₀/(1-q) + Σ_{j≥1} e_j A_j(q) q/(1-q)^{j+1} ].
///
/// Errors with [`Error::DegenerateEulerianForm`] if some 1 - c₁(β) = 0.
pub fn series_via_eulerian(datum: &RootDatum, w: &Weight) -> Result<QSeries> {
    let data = affine_data(datum, w);
    let mut scale = prefactor(datum);
    let mut ratios = Vec::with_capacity(data.len());
    for (beta, (constant, slope)) in datum.delta0_plus.iter().zip(&data) {
        if constant.is_zero() {
            return Err(Error::DegenerateEulerianForm {
                root: datum.format_vector(&beta.coords),
            });
        }
        scale *= constant;
        ratios.push(slope / constant);
    }
    let e = elementary_symmetric_all(&ratios);
    let d0 = ratios.len();
    let mut pows: Vec<QPoly> = Vec::with_capacity(d0 + 1);
    pows.push(Poly::one());
    for i in 1..=d0 {
        pows.push(pows[i - 1].mul(&Poly::one_minus_q()));
    }
    let triangle = EulerianTriangle::new(d0);
    // Assemble the numerator over the common denominator (1-q)^{d0+1}:
    // e₀(1-q)^{d0} + Σ_{j≥1} e_j A_j(q) q (1-q)^{d0-j}.
    let mut numer = pows[d0].scale(&e[0]);
    for (j, ej) in e.iter().enumerate().skip(1) {
        if ej.is_zero() {
            continue;
        }
        let term = triangle
            .polynomial(j)
            .shift_up(1)
            .mul(&pows[d0 - j])
            .scale(ej);
        numer = numer.add(&term);
    }
    Ok(QSeries::new(numer.scale(&scale), d0 + 1))
}

/// The q¹ coefficient, i.e. the derivative at 0; equals dim V(Λ) whenever
/// the series actually is the Hilbert series of Λ.
pub fn dim_from_series(s: &QSeries) -> Q {
    s.expand(2).pop().unwrap()
}

/// Result of cross-checking all computation routes on one weight.
#[derive(Clone, Debug)]
pub struct ConsistencyReport {
    pub series: QSeries,
    pub expansion: Vec<Q>,
    /// True when the Eulerian form was degenerate for this algebra and only
    /// the operator form was computed.
    pub eulerian_degenerate: bool,
    /// True when ℕ-typicality plus the (partial) dominance certificate
    /// allowed asserting positive-integer coefficients.
    pub integrality_checked: bool,
}

/// Cross-check the two closed forms against each other and against the
/// dimension formula, coefficient by coefficient. Any mismatch is an
/// internal failure, not a recoverable condition.
pub fn verify_consistency(
    datum: &RootDatum,
    w: &Weight,
    n_terms: usize,
) -> Result<ConsistencyReport> {
    assert!(n_terms >= 3, "verify_consistency needs at least 3 terms");
    let series = series_via_operator(datum, w);
    let eulerian_degenerate = match series_via_eulerian(datum, w) {
        Ok(s) => {
            if s != series {
                return Err(Error::Internal(format!(
                    "closed forms disagree: operator {series}, eulerian {s}"
                )));
            }
            false
        }
        Err(Error::DegenerateEulerianForm { .. }) => true,
        Err(e) => return Err(e),
    };

    let expansion = series.expand(n_terms);
    for (k, coeff) in expansion.iter().enumerate() {
        let direct = dim_typical(datum, w, k as u64);
        if *coeff != direct {
            return Err(Error::Internal(format!(
                "series coefficient {k} is {coeff}, dimension formula gives {direct}"
            )));
        }
    }

    let n_typical = is_n_typical(datum, w).n_typical;
    let dominant = is_dominant_integral_partial(datum, w) == Dominance::Pass;
    let integrality_checked = n_typical && dominant;
    if integrality_checked {
        for (k, coeff) in expansion.iter().enumerate().skip(1) {
            if !coeff.denom().is_one() || !coeff.numer().is_positive() {
                return Err(Error::Internal(format!(
                    "coefficient {k} = {coeff} of an N-typical dominant weight (marks {:?}) is not a positive integer",
                    marks_of(datum, w).values
                )));
            }
        }
    }

    Ok(ConsistencyReport {
        series,
        expansion,
        eulerian_degenerate,
        integrality_checked,
    })
}
