//! Singly-atypical weights of sl(m|n) and their exact dimensions.
//!
//! A dominant integral weight Λ = Σλᵢeᵢ + Σμⱼdⱼ is singly atypical when
//! exactly one root β_{kℓ} = e_k - d_ℓ of Δ̄₁⁺ pairs to zero with Λ+ρ. Its
//! dimension is given by a Weyl-type product over the even roots avoiding
//! row k and column ℓ, corrected by a sum Σ_r C_{m+n-2-r} e_r(x, y) whose
//! C-coefficients come from the generating function 2eᵗ/(1+eᵗ) (see
//! [`crate::combinatorics::c_coefficients`]; the formula consumes the
//! factorial-normalized coefficients, the normalization under which the
//! Bernoulli closed form holds verbatim).

use num_traits::{One, Signed, Zero};

use crate::combinatorics::{c_coefficients, elementary_symmetric_all, factorial};
use crate::rootdata::{AlgebraSpec, Root, RootDatum};
use crate::weights::Weight;
use crate::{Error, Int, Result, Q};

/// The unique atypical root of a singly-atypical weight, as 1-based
/// positions into the e- and d-coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct AtypicalitySite {
    pub e_index: usize,
    pub d_index: usize,
    pub root: Root,
}

#[derive(Clone, Debug)]
pub enum Atypicality {
    Typical,
    SinglyAtypical(AtypicalitySite),
    MultiplyAtypical(usize),
}

/// The shifted variables entering the correction sum: x_i = λ_k - λ_i + i - k
/// (i ≠ k) and y_j = μ_j - μ_ℓ + ℓ - j (j ≠ ℓ).
#[derive(Clone, Debug)]
pub struct AuxVariables {
    pub xs: Vec<Q>,
    pub ys: Vec<Q>,
}

fn a_family_sizes(datum: &RootDatum) -> Result<(usize, usize)> {
    match datum.spec {
        AlgebraSpec::A { m, n } => Ok((m + 1, n + 1)),
        _ => Err(Error::NotAFamily(datum.spec.to_string())),
    }
}

/// Count the roots of Δ̄₁⁺ annihilating Λ+ρ; A-family only.
pub fn classify_atypicality(datum: &RootDatum, w: &Weight) -> Result<Atypicality> {
    let (m, _) = a_family_sizes(datum)?;
    let shifted: Vec<Q> = w
        .coords
        .iter()
        .zip(&datum.rho)
        .map(|(a, b)| a + b)
        .collect();
    let mut sites = Vec::new();
    for root in &datum.delta1_bar_plus {
        if datum.pair(&shifted, &root.coords).is_zero() {
            let e_index = root.coords[..m]
                .iter()
                .position(|c| c.is_one())
                .expect("odd root of sl(m|n) has a +e coordinate")
                + 1;
            let d_index = root.coords[m..]
                .iter()
                .position(|c| *c == -Q::one())
                .expect("odd root of sl(m|n) has a -d coordinate")
                + 1;
            sites.push(AtypicalitySite {
                e_index,
                d_index,
                root: root.clone(),
            });
        }
    }
    Ok(match sites.len() {
        0 => Atypicality::Typical,
        1 => Atypicality::SinglyAtypical(sites.pop().unwrap()),
        n => Atypicality::MultiplyAtypical(n),
    })
}

/// The x/y variables for a given atypicality site.
pub fn aux_variables(
    datum: &RootDatum,
    w: &Weight,
    site: &AtypicalitySite,
) -> Result<AuxVariables> {
    let (m, n) = a_family_sizes(datum)?;
    let lambda = &w.coords[..m];
    let mu = &w.coords[m..];
    let (k, l) = (site.e_index, site.d_index);
    let xs = (1..=m)
        .filter(|&i| i != k)
        .map(|i| &lambda[k - 1] - &lambda[i - 1] + crate::qi(i as i64 - k as i64))
        .collect();
    let ys = (1..=n)
        .filter(|&j| j != l)
        .map(|j| &mu[j - 1] - &mu[l - 1] + crate::qi(l as i64 - j as i64))
        .collect();
    Ok(AuxVariables { xs, ys })
}

/// Weyl-type product Π_{i<j, i,j≠skip} (v_i - v_j + j - i)/(j - i).
fn avoided_weyl_product(values: &[Q], skip: usize) -> Q {
    let n = values.len();
    let mut acc = Q::one();
    for i in 1..=n {
        if i == skip {
            continue;
        }
        for j in (i + 1)..=n {
            if j == skip {
                continue;
            }
            let shift = crate::qi(j as i64 - i as i64);
            acc *= (&values[i - 1] - &values[j - 1] + &shift) / shift;
        }
    }
    acc
}

fn dim_singly_atypical_with(datum: &RootDatum, w: &Weight, cs: &[Q]) -> Result<Int> {
    let (m, n) = a_family_sizes(datum)?;
    let site = match classify_atypicality(datum, w)? {
        Atypicality::SinglyAtypical(site) => site,
        Atypicality::Typical => {
            return Err(Error::NotSinglyAtypical("weight is typical".to_string()))
        }
        Atypicality::MultiplyAtypical(count) => {
            return Err(Error::NotSinglyAtypical(format!(
                "weight is {count}-fold atypical"
            )))
        }
    };
    let (k, l) = (site.e_index, site.d_index);
    let lambda_product = avoided_weyl_product(&w.coords[..m], k);
    let mu_product = avoided_weyl_product(&w.coords[m..], l);

    let sign = if (n + k + l + 1) % 2 == 0 {
        Q::one()
    } else {
        -Q::one()
    };
    let fact = factorial(m - k) * factorial(k - 1) * factorial(n - l) * factorial(l - 1);
    let sign_factor = sign / Q::from_integer(fact);

    let aux = aux_variables(datum, w, &site)?;
    let mut vars = aux.xs;
    vars.extend(aux.ys);
    let e = elementary_symmetric_all(&vars);
    let top = m + n - 2;
    let mut correction = Q::zero();
    for (r, er) in e.iter().enumerate() {
        correction += &cs[top - r] * er;
    }

    let two_pow = Q::from_integer(Int::one() << (m * n - 1));
    let dim = two_pow * lambda_product * mu_product * sign_factor * correction;
    if !dim.denom().is_one() || !dim.numer().is_positive() {
        return Err(Error::Internal(format!(
            "singly-atypical dimension formula returned {dim}, not a positive integer"
        )));
    }
    Ok(dim.numer().clone())
}

/// Exact dimension of a singly-atypical irreducible sl(m|n)-module.
pub fn dim_singly_atypical(datum: &RootDatum, w: &Weight) -> Result<Int> {
    let (m, n) = a_family_sizes(datum)?;
    let cs = c_coefficients(m + n - 2);
    dim_singly_atypical_with(datum, w, &cs)
}

/// [1, dim V(Λ), dim V(2Λ), ...] for `n_terms` terms. Every positive
/// multiple must itself be singly atypical; the first failing multiple
/// aborts with its index in the error.
pub fn atypical_dim_sequence(datum: &RootDatum, w: &Weight, n_terms: usize) -> Result<Vec<Int>> {
    let mut out = vec![Int::one()];
    for k in 1..n_terms {
        let multiple = w.scaled(&crate::qi(k as i64));
        let dim = dim_singly_atypical(datum, &multiple).map_err(|e| match e {
            Error::NotSinglyAtypical(msg) => {
                Error::NotSinglyAtypical(format!("multiple k = {k}: {msg}"))
            }
            other => other,
        })?;
        out.push(dim);
    }
    Ok(out)
}
