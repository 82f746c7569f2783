//! Weights, numerical marks, and conversions between the two.
//!
//! A weight is a coordinate vector in the algebra's functional basis. Its
//! numerical marks are a_i = 2(Λ,α_i)/(α_i,α_i) on non-isotropic simple
//! roots and a_i = s·(Λ,α_i) on isotropic odd ones, where the sign s is the
//! root datum's `odd_mark_sign` (see [`crate::rootdata`]).
//!
//! The inverse direction solves the mark equations exactly. For A(m,n) the
//! mark functionals annihilate the supertrace direction Σe_i - Σd_j, so the
//! system is underdetermined by one dimension; the gauge μ₁ = 0 picks the
//! representative, matching how weights are displayed throughout.

use num_traits::{One, Signed, Zero};

use crate::rootdata::{AlgebraSpec, Parity, RootDatum};
use crate::{Error, Result, Q};

#[derive(Clone, Debug, PartialEq)]
pub struct Weight {
    pub coords: Vec<Q>,
}

impl Weight {
    pub fn new(coords: Vec<Q>) -> Self {
        Weight { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Weight {
            coords: vec![Q::zero(); dim],
        }
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// The multiple cΛ.
    pub fn scaled(&self, c: &Q) -> Weight {
        Weight {
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Marks {
    pub values: Vec<Q>,
}

impl Marks {
    pub fn new(values: Vec<Q>) -> Self {
        Marks { values }
    }

    pub fn of_ints(values: &[i64]) -> Self {
        Marks {
            values: values.iter().map(|&v| crate::qi(v)).collect(),
        }
    }
}

/// Numerical marks of a weight.
pub fn marks_of(datum: &RootDatum, w: &Weight) -> Marks {
    let values = datum
        .simple_roots
        .iter()
        .map(|alpha| {
            let pairing = datum.pair(&w.coords, &alpha.coords);
            let norm = datum.norm(alpha);
            if norm.is_zero() {
                pairing * &datum.odd_mark_sign
            } else {
                crate::qi(2) * pairing / norm
            }
        })
        .collect();
    Marks { values }
}

/// Row vector of the linear functional w ↦ a_i(w) for simple root `alpha`.
fn mark_row(datum: &RootDatum, alpha: &crate::rootdata::Root) -> Vec<Q> {
    // (Λ, α) = Λᵀ G α, so the functional is the vector G·α, possibly scaled.
    let norm = datum.norm(alpha);
    (0..datum.dim)
        .map(|i| {
            let mut acc = Q::zero();
            for (j, aj) in alpha.coords.iter().enumerate() {
                if !aj.is_zero() {
                    acc += &datum.form[i][j] * aj;
                }
            }
            if norm.is_zero() {
                acc * &datum.odd_mark_sign
            } else {
                crate::qi(2) * acc / &norm
            }
        })
        .collect()
}

/// Solve for the weight with the given marks. Unique for every family except
/// A(m,n), where the supertrace kernel is fixed by the gauge μ₁ = 0.
pub fn weight_from_marks(datum: &RootDatum, marks: &Marks) -> Result<Weight> {
    let r = datum.rank();
    if marks.values.len() != r {
        return Err(Error::MarksLength {
            expected: r,
            got: marks.values.len(),
        });
    }
    let mut rows: Vec<Vec<Q>> = datum
        .simple_roots
        .iter()
        .map(|a| mark_row(datum, a))
        .collect();
    let mut rhs: Vec<Q> = marks.values.clone();
    if let AlgebraSpec::A { m, .. } = datum.spec {
        // Gauge row: the d₁ coordinate vanishes.
        let mut gauge = vec![Q::zero(); datum.dim];
        gauge[m + 1] = Q::one();
        rows.push(gauge);
        rhs.push(Q::zero());
    }
    solve_square(rows, rhs).map(Weight::new)
}

/// Exact Gaussian elimination with partial (first-nonzero) pivoting.
fn solve_square(mut m: Vec<Vec<Q>>, mut b: Vec<Q>) -> Result<Vec<Q>> {
    let n = b.len();
    if m.len() != n || m.iter().any(|row| row.len() != n) {
        return Err(Error::SingularSystem(format!(
            "mark system is not square ({} equations, {} unknowns)",
            m.len(),
            m.first().map_or(0, |r| r.len())
        )));
    }
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or_else(|| Error::SingularSystem(format!("no pivot in column {col}")))?;
        m.swap(col, pivot);
        b.swap(col, pivot);
        let inv = Q::one() / m[col][col].clone();
        for entry in m[col][col..].iter_mut() {
            *entry = &*entry * &inv;
        }
        b[col] = &b[col] * &inv;
        for row in 0..n {
            if row != col && !m[row][col].is_zero() {
                let f = m[row][col].clone();
                let pivot_row = m[col][col..].to_vec();
                for (entry, p) in m[row][col..].iter_mut().zip(&pivot_row) {
                    *entry = &*entry - &f * p;
                }
                b[row] = &b[row] - &f * &b[col];
            }
        }
    }
    Ok(b)
}

/// Outcome of the partial finite-dimensionality check.
#[derive(Clone, Debug, PartialEq)]
pub enum Dominance {
    /// Certified: for A(m,n) the even-mark condition is the complete
    /// finite-dimensionality criterion.
    Pass,
    Fail(String),
    /// Even marks are fine, but this family has further conditions that are
    /// not implemented, so nothing is certified.
    Unknown,
}

/// Necessary finite-dimensionality check: every even simple mark must be a
/// nonnegative integer. Only the A family gets a definitive `Pass`; for the
/// other families the full criteria involve extra constraints on the odd
/// mark that are deliberately out of scope, so a clean check reports
/// `Unknown`.
pub fn is_dominant_integral_partial(datum: &RootDatum, w: &Weight) -> Dominance {
    let marks = marks_of(datum, w);
    for (i, (alpha, a)) in datum.simple_roots.iter().zip(&marks.values).enumerate() {
        if alpha.parity == Parity::Even && (!a.denom().is_one() || a.numer().is_negative()) {
            return Dominance::Fail(format!(
                "even mark a{} = {} is not a nonnegative integer",
                i + 1,
                a
            ));
        }
    }
    match datum.spec {
        AlgebraSpec::A { .. } => Dominance::Pass,
        _ => Dominance::Unknown,
    }
}

/// Parse a weight given either as marks ("marks=0,1,1,1" or "0,1,1,1") or as
/// a coordinate expression ("coords=2e1+2e2+e3-1d2").
pub fn parse_weight(datum: &RootDatum, input: &str) -> Result<Weight> {
    let s = input.trim();
    if let Some(rest) = s.strip_prefix("marks=") {
        return parse_marks_list(datum, rest).and_then(|m| weight_from_marks(datum, &m));
    }
    if let Some(rest) = s.strip_prefix("coords=") {
        return parse_coords_expr(datum, rest);
    }
    // Bare fallback: a comma-separated list is marks, otherwise coordinates.
    if s.contains(',') || !s.bytes().any(|b| b.is_ascii_alphabetic()) {
        parse_marks_list(datum, s).and_then(|m| weight_from_marks(datum, &m))
    } else {
        parse_coords_expr(datum, s)
    }
}

/// Parse "a1,a2,...,ar" into marks for the given algebra.
pub fn parse_marks_list(datum: &RootDatum, s: &str) -> Result<Marks> {
    let values = s
        .split(',')
        .map(|piece| crate::rootdata::parse_rational(piece.trim()))
        .collect::<Result<Vec<Q>>>()?;
    if values.len() != datum.rank() {
        return Err(Error::MarksLength {
            expected: datum.rank(),
            got: values.len(),
        });
    }
    Ok(Marks { values })
}

/// Parse a signed sum of rational multiples of basis functionals, e.g.
/// "2e1+2e2+e3-1d2" or "1/2eps1-eps2".
pub fn parse_coords_expr(datum: &RootDatum, s: &str) -> Result<Weight> {
    let bytes = s.as_bytes();
    let mut coords = vec![Q::zero(); datum.dim];
    let mut pos = 0usize;
    let err = |pos: usize, msg: String| Error::Parse {
        position: pos,
        message: msg,
    };
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    skip_ws(&mut pos);
    if pos == bytes.len() {
        return Err(err(pos, "empty weight expression".into()));
    }
    let mut first = true;
    while pos < bytes.len() {
        skip_ws(&mut pos);
        // Sign.
        let mut sign = Q::one();
        if pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
            if bytes[pos] == b'-' {
                sign = -Q::one();
            }
            pos += 1;
            skip_ws(&mut pos);
        } else if !first {
            return Err(err(pos, "expected '+' or '-' between terms".into()));
        }
        first = false;
        // Optional rational coefficient.
        let num_start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let mut coeff = if pos > num_start {
            crate::rootdata::parse_rational(&s[num_start..pos])?
        } else {
            Q::one()
        };
        if pos < bytes.len() && bytes[pos] == b'/' {
            let den_start = pos + 1;
            pos += 1;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if pos == den_start {
                return Err(err(pos, "expected digits after '/'".into()));
            }
            let den = crate::rootdata::parse_rational(&s[den_start..pos])?;
            if den.is_zero() {
                return Err(err(den_start, "zero denominator".into()));
            }
            coeff /= den;
        }
        skip_ws(&mut pos);
        // Basis label: longest match wins (e.g. "eps1" over a bare "e").
        let mut matched: Option<(usize, usize)> = None; // (basis index, length)
        for (i, label) in datum.basis_labels.iter().enumerate() {
            if s[pos..].starts_with(label.as_str())
                && matched.is_none_or(|(_, len)| label.len() > len)
            {
                matched = Some((i, label.len()));
            }
        }
        let Some((idx, len)) = matched else {
            return Err(err(
                pos,
                format!(
                    "expected one of the basis functionals {:?}",
                    datum.basis_labels
                ),
            ));
        };
        pos += len;
        coords[idx] += sign * coeff;
        skip_ws(&mut pos);
    }
    Ok(Weight::new(coords))
}
