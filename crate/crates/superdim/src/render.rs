//! Deterministic text and LaTeX formatting for rationals, coordinate
//! vectors, polynomials, and normalized series.

use num_traits::{One, Signed, Zero};

use crate::{Int, QPoly, Q};

/// "p/q", or just "p" for integers.
pub fn format_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Signed sum over basis labels, e.g. "2e1+2e2+e3-d2"; "0" when zero.
pub fn format_vector(coords: &[Q], labels: &[String]) -> String {
    let mut out = String::new();
    for (c, label) in coords.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if c.is_positive() && !out.is_empty() {
            out.push('+');
        } else if c.is_negative() {
            out.push('-');
        }
        if !mag.is_one() {
            out.push_str(&format_q(&mag));
        }
        out.push_str(label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn coeff_string(c: &Q) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("({}/{})", c.numer(), c.denom())
    }
}

/// Descending-power polynomial, e.g. "2q^3 - 9q^2 + 14q + 1".
pub fn format_poly(p: &QPoly, var: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for k in (0..=p.degree()).rev() {
        let c = p.coeff(k);
        if c.is_zero() {
            continue;
        }
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mag = c.abs();
        if !mag.is_one() || k == 0 {
            out.push_str(&coeff_string(&mag));
        }
        match k {
            0 => {}
            1 => out.push_str(var),
            _ => out.push_str(&format!("{var}^{k}")),
        }
    }
    out
}

/// LaTeX form of [`format_poly`].
pub fn format_poly_latex(p: &QPoly, var: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let tex_coeff = |c: &Q| {
        if c.denom().is_one() {
            c.numer().to_string()
        } else {
            format!("\\tfrac{{{}}}{{{}}}", c.numer(), c.denom())
        }
    };
    let mut out = String::new();
    for k in (0..=p.degree()).rev() {
        let c = p.coeff(k);
        if c.is_zero() {
            continue;
        }
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mag = c.abs();
        if !mag.is_one() || k == 0 {
            out.push_str(&tex_coeff(&mag));
            if k > 0 {
                out.push_str(" \\, ");
            }
        }
        match k {
            0 => {}
            1 => out.push_str(var),
            _ => out.push_str(&format!("{var}^{{{k}}}")),
        }
    }
    out
}

/// Split a polynomial into content × primitive part: the primitive part has
/// coprime integer coefficients and a positive lowest-degree coefficient.
/// Returns (0, zero poly) for the zero polynomial.
pub fn content_and_primitive(p: &QPoly) -> (Q, QPoly) {
    if p.is_zero() {
        return (Q::zero(), QPoly::zero());
    }
    let mut gcd_num = Int::zero();
    let mut lcm_den = Int::one();
    for c in p.coeffs() {
        if c.is_zero() {
            continue;
        }
        gcd_num = num_integer::Integer::gcd(&gcd_num, c.numer());
        lcm_den = num_integer::Integer::lcm(&lcm_den, c.denom());
    }
    let mut content = Q::new(gcd_num, lcm_den);
    let lowest = p
        .coeffs()
        .iter()
        .find(|c| !c.is_zero())
        .expect("nonzero polynomial");
    if lowest.is_negative() {
        content = -content;
    }
    let primitive = p.scale(&(Q::one() / &content));
    (content, primitive)
}

/// "64(2q + 1)/(1 - q)^4"-style rendering of content·primitive/(1-q)^pole.
pub fn format_series(content: &Q, primitive: &QPoly, pole: usize) -> String {
    if primitive.is_zero() {
        return "0".to_string();
    }
    let body = format_poly(primitive, "q");
    let numer = if content.is_one() {
        body
    } else if primitive == &QPoly::one() {
        format_q(content)
    } else {
        format!("{}({})", format_q(content), body)
    };
    match pole {
        0 => numer,
        1 => format!("{numer}/(1 - q)"),
        _ => format!("{numer}/(1 - q)^{pole}"),
    }
}

/// LaTeX form of [`format_series`].
pub fn format_series_latex(content: &Q, primitive: &QPoly, pole: usize) -> String {
    if primitive.is_zero() {
        return "0".to_string();
    }
    let body = format_poly_latex(primitive, "q");
    let numer = if content.is_one() {
        body
    } else if primitive == &QPoly::one() {
        format_q(content)
    } else {
        format!("{} \\left({}\\right)", format_q(content), body)
    };
    match pole {
        0 => numer,
        _ => format!("\\frac{{{numer}}}{{(1 - q)^{{{pole}}}}}"),
    }
}

/// Affine-linear factor "(c + s t)" with coefficient-1 suppression.
fn format_affine(constant: &Q, slope: &Q, var: &str) -> String {
    let mut out = String::from("(");
    out.push_str(&format_q(constant));
    if !slope.is_zero() {
        if slope.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mag = slope.abs();
        if !mag.is_one() {
            out.push_str(&coeff_string(&mag));
        }
        out.push_str(var);
    }
    out.push(')');
    out
}

/// Product form "16(1 + t)(1 + (1/2)t)^2(1 + (1/3)t)" with repeated factors
/// grouped into powers.
pub fn format_factored(prefactor: &Q, factors: &[(Q, Q)], var: &str) -> String {
    let mut out = format_q(prefactor);
    let mut i = 0;
    while i < factors.len() {
        let mut j = i;
        while j < factors.len() && factors[j] == factors[i] {
            j += 1;
        }
        out.push_str(&format_affine(&factors[i].0, &factors[i].1, var));
        if j - i > 1 {
            out.push_str(&format!("^{}", j - i));
        }
        i = j;
    }
    out
}
