//! Root systems of the basic classical Lie superalgebras, in exact rational
//! coordinates, for the distinguished Borel subalgebra.
//!
//! Families A(m,n) through D(m,n) live in the e/d coordinate functional
//! basis with (e_i, e_j) = δ_ij, (d_i, d_j) = -δ_ij, (e_i, d_k) = 0. The
//! exceptional families carry their own ε-bases and Gram matrices:
//!
//! * D(2,1;α): basis ε₁, ε₂, ε₃, Gram diag((1+α)/2, -1/2, -α/2);
//! * G(3): basis ε₂, ε₃, δ (with ε₁ = -ε₂-ε₃ eliminated), Gram
//!   [[-2, 1, 0], [1, -2, 0], [0, 0, 2]];
//! * F(4): basis ε₁, ε₂, ε₃, δ, Gram diag(-2, -2, -2, 6).
//!
//! These tables are keyed in, not derived; their scales are pinned so that
//! the numerical marks computed from the bilinear form reproduce the
//! per-family ℕ-typicality mark criteria (see the equivalence tests in
//! [`crate::typicality`]). The same pinning fixes the sign of the odd mark
//! for B and D, where the distinguished odd simple root is d_n - e_1.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::{qi, Error, Result, Q};

/// Which basic classical family, with parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum AlgebraSpec {
    /// A(m,n) = sl(m+1 | n+1), m ≠ n.
    A {
        m: usize,
        n: usize,
    },
    /// B(m,n) = osp(2m+1 | 2n), n ≥ 1 (m = 0 allowed).
    B {
        m: usize,
        n: usize,
    },
    /// C(n) = osp(2 | 2n-2), n ≥ 2.
    C {
        n: usize,
    },
    /// D(m,n) = osp(2m | 2n), m ≥ 2, n ≥ 1.
    D {
        m: usize,
        n: usize,
    },
    /// D(2,1;α), rational α ∉ {0, -1}.
    D21 {
        alpha: Q,
    },
    F4,
    G3,
}

impl AlgebraSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            AlgebraSpec::A { m, n } => {
                if m == n {
                    return Err(Error::InvalidAlgebra(format!(
                        "A(m,n) requires m != n, got A({m},{n}) (gl, not basic classical simple)"
                    )));
                }
            }
            AlgebraSpec::B { n, .. } => {
                if *n == 0 {
                    return Err(Error::InvalidAlgebra("B(m,n) requires n >= 1".to_string()));
                }
            }
            AlgebraSpec::C { n } => {
                if *n < 2 {
                    return Err(Error::InvalidAlgebra("C(n) requires n >= 2".to_string()));
                }
            }
            AlgebraSpec::D { m, n } => {
                if *m < 2 || *n == 0 {
                    return Err(Error::InvalidAlgebra(
                        "D(m,n) requires m >= 2 and n >= 1".to_string(),
                    ));
                }
            }
            AlgebraSpec::D21 { alpha } => {
                if alpha.is_zero() || *alpha == -Q::one() {
                    return Err(Error::InvalidAlgebra(
                        "D(2,1;a) requires a not in {0, -1}".to_string(),
                    ));
                }
            }
            AlgebraSpec::F4 | AlgebraSpec::G3 => {}
        }
        Ok(())
    }

    /// Number of simple roots.
    pub fn rank(&self) -> usize {
        match self {
            AlgebraSpec::A { m, n } => m + n + 1,
            AlgebraSpec::B { m, n } => m + n,
            AlgebraSpec::C { n } => *n,
            AlgebraSpec::D { m, n } => m + n,
            AlgebraSpec::D21 { .. } | AlgebraSpec::G3 => 3,
            AlgebraSpec::F4 => 4,
        }
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraSpec::A { m, n } => write!(f, "sl({}|{})", m + 1, n + 1),
            AlgebraSpec::B { m, n } => write!(f, "osp({}|{})", 2 * m + 1, 2 * n),
            AlgebraSpec::C { n } => write!(f, "osp(2|{})", 2 * n - 2),
            AlgebraSpec::D { m, n } => write!(f, "osp({}|{})", 2 * m, 2 * n),
            AlgebraSpec::D21 { alpha } => write!(f, "D(2,1;{alpha})"),
            AlgebraSpec::F4 => write!(f, "F(4)"),
            AlgebraSpec::G3 => write!(f, "G(3)"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// A root as a coordinate vector over the algebra's basis functionals.
#[derive(Clone, Debug, PartialEq)]
pub struct Root {
    pub coords: Vec<Q>,
    pub parity: Parity,
}

/// Complete distinguished root datum: positive roots, bilinear form, ρ's.
#[derive(Clone, Debug)]
pub struct RootDatum {
    pub spec: AlgebraSpec,
    /// Coordinate space dimension.
    pub dim: usize,
    /// Basis functional names, e.g. ["e1", "e2", "d1"] or ["eps1", ...].
    pub basis_labels: Vec<String>,
    /// Symmetric Gram matrix of the invariant bilinear form.
    pub form: Vec<Vec<Q>>,
    pub delta0_plus: Vec<Root>,
    pub delta1_plus: Vec<Root>,
    /// Δ̄₁⁺ = odd positive roots α with 2α not an even root.
    pub delta1_bar_plus: Vec<Root>,
    pub simple_roots: Vec<Root>,
    pub rho0: Vec<Q>,
    pub rho1: Vec<Q>,
    pub rho: Vec<Q>,
    /// Sign applied when reading the mark of an isotropic odd simple root
    /// off the bilinear form: a_s = odd_mark_sign · (Λ, α_s).
    pub odd_mark_sign: Q,
}

impl RootDatum {
    /// Exact bilinear form value; errors on dimension mismatch.
    pub fn pairing(&self, x: &[Q], y: &[Q]) -> Result<Q> {
        if x.len() != self.dim {
            return Err(Error::Dimension {
                expected: self.dim,
                got: x.len(),
            });
        }
        if y.len() != self.dim {
            return Err(Error::Dimension {
                expected: self.dim,
                got: y.len(),
            });
        }
        Ok(self.pair(x, y))
    }

    /// Unchecked bilinear form value for internal use.
    pub(crate) fn pair(&self, x: &[Q], y: &[Q]) -> Q {
        debug_assert_eq!(x.len(), self.dim);
        debug_assert_eq!(y.len(), self.dim);
        let mut acc = Q::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || self.form[i][j].is_zero() {
                    continue;
                }
                acc += xi * yj * &self.form[i][j];
            }
        }
        acc
    }

    pub fn norm(&self, root: &Root) -> Q {
        self.pair(&root.coords, &root.coords)
    }

    pub fn is_isotropic(&self, root: &Root) -> bool {
        self.norm(root).is_zero()
    }

    /// |Δ₀⁺|.
    pub fn d0(&self) -> usize {
        self.delta0_plus.len()
    }

    /// |Δ₁⁺|.
    pub fn d1(&self) -> usize {
        self.delta1_plus.len()
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn format_vector(&self, coords: &[Q]) -> String {
        crate::render::format_vector(coords, &self.basis_labels)
    }
}

fn half_sum(roots: &[Root], dim: usize) -> Vec<Q> {
    let mut acc = vec![Q::zero(); dim];
    for r in roots {
        for (a, c) in acc.iter_mut().zip(&r.coords) {
            *a += c;
        }
    }
    let half = crate::q(1, 2);
    acc.into_iter().map(|a| a * &half).collect()
}

type BasisSetup = (usize, Vec<String>, Option<Vec<Q>>, Option<Vec<Vec<Q>>>);

/// Build the complete root datum for a valid algebra spec.
pub fn build_root_datum(spec: &AlgebraSpec) -> Result<RootDatum> {
    spec.validate()?;

    let (dim, basis_labels, form_diag, gram): BasisSetup = match spec {
        AlgebraSpec::A { m, n } => {
            let (p, q) = (m + 1, n + 1);
            let labels = (1..=p)
                .map(|i| format!("e{i}"))
                .chain((1..=q).map(|j| format!("d{j}")))
                .collect();
            let diag = std::iter::repeat_n(Q::one(), p)
                .chain(std::iter::repeat_n(-Q::one(), q))
                .collect();
            (p + q, labels, Some(diag), None)
        }
        AlgebraSpec::B { m, n } => {
            let labels = (1..=*m)
                .map(|i| format!("e{i}"))
                .chain((1..=*n).map(|j| format!("d{j}")))
                .collect();
            let diag = std::iter::repeat_n(Q::one(), *m)
                .chain(std::iter::repeat_n(-Q::one(), *n))
                .collect();
            (m + n, labels, Some(diag), None)
        }
        AlgebraSpec::C { n } => {
            let nd = n - 1;
            let labels = std::iter::once("e1".to_string())
                .chain((1..=nd).map(|j| format!("d{j}")))
                .collect();
            let diag = std::iter::once(Q::one())
                .chain(std::iter::repeat_n(-Q::one(), nd))
                .collect();
            (1 + nd, labels, Some(diag), None)
        }
        AlgebraSpec::D { m, n } => {
            let labels = (1..=*m)
                .map(|i| format!("e{i}"))
                .chain((1..=*n).map(|j| format!("d{j}")))
                .collect();
            let diag = std::iter::repeat_n(Q::one(), *m)
                .chain(std::iter::repeat_n(-Q::one(), *n))
                .collect();
            (m + n, labels, Some(diag), None)
        }
        AlgebraSpec::D21 { alpha } => {
            let labels = (1..=3).map(|i| format!("eps{i}")).collect();
            let half = crate::q(1, 2);
            let diag = vec![(Q::one() + alpha) * &half, -half.clone(), -alpha * &half];
            (3, labels, Some(diag), None)
        }
        AlgebraSpec::G3 => {
            let labels = vec!["eps2".into(), "eps3".into(), "delta".into()];
            let g = vec![
                vec![qi(-2), qi(1), qi(0)],
                vec![qi(1), qi(-2), qi(0)],
                vec![qi(0), qi(0), qi(2)],
            ];
            (3, labels, None, Some(g))
        }
        AlgebraSpec::F4 => {
            let labels = vec!["eps1".into(), "eps2".into(), "eps3".into(), "delta".into()];
            (4, labels, Some(vec![qi(-2), qi(-2), qi(-2), qi(6)]), None)
        }
    };

    let form: Vec<Vec<Q>> = match (form_diag, gram) {
        (Some(diag), None) => (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| if i == j { diag[i].clone() } else { Q::zero() })
                    .collect()
            })
            .collect(),
        (None, Some(g)) => g,
        _ => unreachable!(),
    };

    // Coordinate vector helpers. `unit(i)` is the i-th basis functional
    // (0-based); `vec_of` sums signed units.
    let unit = |i: usize| -> Vec<Q> {
        let mut v = vec![Q::zero(); dim];
        v[i] = Q::one();
        v
    };
    let vec_of = |terms: &[(i64, usize)]| -> Vec<Q> {
        let mut v = vec![Q::zero(); dim];
        for &(c, i) in terms {
            v[i] += qi(c);
        }
        v
    };
    let even = |coords: Vec<Q>| Root {
        coords,
        parity: Parity::Even,
    };
    let odd = |coords: Vec<Q>| Root {
        coords,
        parity: Parity::Odd,
    };

    let mut delta0_plus: Vec<Root> = Vec::new();
    let mut delta1_plus: Vec<Root> = Vec::new();
    let mut simple_roots: Vec<Root> = Vec::new();
    let mut odd_mark_sign = Q::one();

    match spec {
        AlgebraSpec::A { m, n } => {
            let (p, q) = (m + 1, n + 1);
            let e = |i: usize| i - 1; // e_i index (1-based input)
            let d = |j: usize| p + j - 1;
            for i in 1..=p {
                for j in (i + 1)..=p {
                    delta0_plus.push(even(vec_of(&[(1, e(i)), (-1, e(j))])));
                }
            }
            for i in 1..=q {
                for j in (i + 1)..=q {
                    delta0_plus.push(even(vec_of(&[(1, d(i)), (-1, d(j))])));
                }
            }
            for i in 1..=p {
                for j in 1..=q {
                    delta1_plus.push(odd(vec_of(&[(1, e(i)), (-1, d(j))])));
                }
            }
            for i in 1..p {
                simple_roots.push(even(vec_of(&[(1, e(i)), (-1, e(i + 1))])));
            }
            simple_roots.push(odd(vec_of(&[(1, e(p)), (-1, d(1))])));
            for j in 1..q {
                simple_roots.push(even(vec_of(&[(1, d(j)), (-1, d(j + 1))])));
            }
        }
        AlgebraSpec::B { m, n } => {
            let e = |i: usize| i - 1;
            let d = |j: usize| m + j - 1;
            for i in 1..=*m {
                for j in (i + 1)..=*m {
                    delta0_plus.push(even(vec_of(&[(1, e(i)), (-1, e(j))])));
                    delta0_plus.push(even(vec_of(&[(1, e(i)), (1, e(j))])));
                }
            }
            for i in 1..=*m {
                delta0_plus.push(even(vec_of(&[(1, e(i))])));
            }
            for i in 1..=*n {
                for j in (i + 1)..=*n {
                    delta0_plus.push(even(vec_of(&[(1, d(i)), (-1, d(j))])));
                    delta0_plus.push(even(vec_of(&[(1, d(i)), (1, d(j))])));
                }
            }
            for i in 1..=*n {
                delta0_plus.push(even(vec_of(&[(2, d(i))])));
            }
            for i in 1..=*n {
                for j in 1..=*m {
                    delta1_plus.push(odd(vec_of(&[(1, d(i)), (-1, e(j))])));
                    delta1_plus.push(odd(vec_of(&[(1, d(i)), (1, e(j))])));
                }
            }
            for i in 1..=*n {
                delta1_plus.push(odd(vec_of(&[(1, d(i))])));
            }
            for i in 1..*n {
                simple_roots.push(even(vec_of(&[(1, d(i)), (-1, d(i + 1))])));
            }
            if *m >= 1 {
                simple_roots.push(odd(vec_of(&[(1, d(*n)), (-1, e(1))])));
                for j in 1..*m {
                    simple_roots.push(even(vec_of(&[(1, e(j)), (-1, e(j + 1))])));
                }
                simple_roots.push(even(vec_of(&[(1, e(*m))])));
                odd_mark_sign = -Q::one();
            } else {
                simple_roots.push(odd(vec_of(&[(1, d(*n))])));
            }
        }
        AlgebraSpec::C { n } => {
            let nd = n - 1;
            let d = |j: usize| j; // e is index 0
            for i in 1..=nd {
                for j in (i + 1)..=nd {
                    delta0_plus.push(even(vec_of(&[(1, d(i)), (-1, d(j))])));
                    delta0_plus.push(even(vec_of(&[(1, d(i)), (1, d(j))])));
                }
            }
            for i in 1..=nd {
                delta0_plus.push(even(vec_of(&[(2, d(i))])));
            }
            for i in 1..=nd {
                delta1_plus.push(odd(vec_of(&[(1, 0), (-1, d(i))])));
            }
            for i in 1..=nd {
                delta1_plus.push(odd(vec_of(&[(1, 0), (1, d(i))])));
            }
            simple_roots.push(odd(vec_of(&[(1, 0), (-1, d(1))])));
            for i in 1..nd {
                simple_roots.push(even(vec_of(&[(1, d(i)), (-1, d(i + 1))])));
            }
            simple_roots.push(even(vec_of(&[(2, d(nd))])));
        }
        AlgebraSpec::D { m, n } => {
            let e = |i: usize| i - 1;
            let d = |j: usize| m + j - 1;
            for i in 1..=*m {
                for j in (i + 1)..=*m {
                    delta0_plus.push(even(vec_of(&[(1, e(i)), (-1, e(j))])));
                    delta0_plus.push(even(vec_of(&[(1, e(i)), (1, e(j))])));
                }
            }
            for i in 1..=*n {
                for j in (i + 1)..=*n {
                    delta0_plus.push(even(vec_of(&[(1, d(i)), (-1, d(j))])));
                    delta0_plus.push(even(vec_of(&[(1, d(i)), (1, d(j))])));
                }
            }
            for i in 1..=*n {
                delta0_plus.push(even(vec_of(&[(2, d(i))])));
            }
            for i in 1..=*n {
                for j in 1..=*m {
                    delta1_plus.push(odd(vec_of(&[(1, d(i)), (-1, e(j))])));
                    delta1_plus.push(odd(vec_of(&[(1, d(i)), (1, e(j))])));
                }
            }
            for i in 1..*n {
                simple_roots.push(even(vec_of(&[(1, d(i)), (-1, d(i + 1))])));
            }
            simple_roots.push(odd(vec_of(&[(1, d(*n)), (-1, e(1))])));
            for j in 1..*m {
                simple_roots.push(even(vec_of(&[(1, e(j)), (-1, e(j + 1))])));
            }
            simple_roots.push(even(vec_of(&[(1, e(m - 1)), (1, e(*m))])));
            odd_mark_sign = -Q::one();
        }
        AlgebraSpec::D21 { .. } => {
            for i in 0..3 {
                delta0_plus.push(even(vec_of(&[(2, i)])));
            }
            for (s2, s3) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                delta1_plus.push(odd(vec_of(&[(1, 0), (s2, 1), (s3, 2)])));
            }
            simple_roots.push(odd(vec_of(&[(1, 0), (-1, 1), (-1, 2)])));
            simple_roots.push(even(vec_of(&[(2, 1)])));
            simple_roots.push(even(vec_of(&[(2, 2)])));
        }
        AlgebraSpec::G3 => {
            // Coordinates (ε₂, ε₃, δ); ε₁ = -ε₂ - ε₃.
            let g2_positive = [
                (1, 0),  // ε₂
                (0, 1),  // ε₃
                (-1, 1), // ε₃ - ε₂
                (1, 1),  // ε₂ + ε₃ = -ε₁
                (2, 1),  // 2ε₂ + ε₃ = ε₂ - ε₁
                (1, 2),  // ε₂ + 2ε₃ = ε₃ - ε₁
            ];
            for (x, y) in g2_positive {
                delta0_plus.push(even(vec_of(&[(x, 0), (y, 1)])));
            }
            delta0_plus.push(even(vec_of(&[(2, 2)]))); // 2δ
                                                       // Odd: δ and δ ± ε_i.
            delta1_plus.push(odd(vec_of(&[(-1, 0), (-1, 1), (1, 2)]))); // δ + ε₁
            delta1_plus.push(odd(vec_of(&[(1, 0), (1, 1), (1, 2)]))); // δ - ε₁
            delta1_plus.push(odd(vec_of(&[(1, 0), (1, 2)]))); // δ + ε₂
            delta1_plus.push(odd(vec_of(&[(-1, 0), (1, 2)]))); // δ - ε₂
            delta1_plus.push(odd(vec_of(&[(1, 1), (1, 2)]))); // δ + ε₃
            delta1_plus.push(odd(vec_of(&[(-1, 1), (1, 2)]))); // δ - ε₃
            delta1_plus.push(odd(vec_of(&[(1, 2)]))); // δ
            simple_roots.push(odd(vec_of(&[(-1, 0), (-1, 1), (1, 2)]))); // δ + ε₁
            simple_roots.push(even(vec_of(&[(1, 0)]))); // ε₂
            simple_roots.push(even(vec_of(&[(-1, 0), (1, 1)]))); // ε₃ - ε₂
        }
        AlgebraSpec::F4 => {
            delta0_plus.push(even(unit(3))); // δ
            for i in 0..3 {
                delta0_plus.push(even(unit(i)));
            }
            for i in 0..3 {
                for j in (i + 1)..3 {
                    delta0_plus.push(even(vec_of(&[(1, i), (-1, j)])));
                    delta0_plus.push(even(vec_of(&[(1, i), (1, j)])));
                }
            }
            let half = crate::q(1, 2);
            for s1 in [1i64, -1] {
                for s2 in [1i64, -1] {
                    for s3 in [1i64, -1] {
                        let coords =
                            vec![qi(s1) * &half, qi(s2) * &half, qi(s3) * &half, half.clone()];
                        delta1_plus.push(odd(coords));
                    }
                }
            }
            let a1 = vec![-half.clone(), -half.clone(), -half.clone(), half.clone()];
            simple_roots.push(odd(a1));
            simple_roots.push(even(unit(2))); // ε₃
            simple_roots.push(even(vec_of(&[(1, 1), (-1, 2)]))); // ε₂ - ε₃
            simple_roots.push(even(vec_of(&[(1, 0), (-1, 1)]))); // ε₁ - ε₂
        }
    }

    let rho0 = half_sum(&delta0_plus, dim);
    let rho1 = half_sum(&delta1_plus, dim);
    let rho: Vec<Q> = rho0.iter().zip(&rho1).map(|(a, b)| a - b).collect();

    let mut datum = RootDatum {
        spec: spec.clone(),
        dim,
        basis_labels,
        form,
        delta0_plus,
        delta1_plus,
        delta1_bar_plus: Vec::new(),
        simple_roots,
        rho0,
        rho1,
        rho,
        odd_mark_sign,
    };

    // Δ̄₁⁺: odd positives whose double is not an even root.
    let bar: Vec<Root> = datum
        .delta1_plus
        .iter()
        .filter(|r| {
            let doubled: Vec<Q> = r.coords.iter().map(|c| c * qi(2)).collect();
            !datum.delta0_plus.iter().any(|e| e.coords == doubled)
        })
        .cloned()
        .collect();
    datum.delta1_bar_plus = bar;

    Ok(datum)
}

/// Parse an algebra name: `sl(p|q)`, `osp(p|q)` (`,` also accepted as the
/// separator), `A(m,n)`, `B(m,n)`, `C(n)`, `D(m,n)`, `D(2,1;a)`, `F(4)`,
/// `G(3)`.
pub fn parse_algebra(input: &str) -> Result<AlgebraSpec> {
    let s = input.trim();
    let err = |pos: usize, msg: &str| Error::Parse {
        position: pos,
        message: format!("{msg} in algebra name {input:?}"),
    };

    let open = s.find('(').ok_or_else(|| err(s.len(), "expected '('"))?;
    if !s.ends_with(')') {
        return Err(err(s.len(), "expected closing ')'"));
    }
    let head = &s[..open];
    let args = &s[open + 1..s.len() - 1];

    let parse_usize = |piece: &str, offset: usize| -> Result<usize> {
        piece
            .trim()
            .parse::<usize>()
            .map_err(|_| err(offset, "expected a nonnegative integer"))
    };
    let split2 = |args: &str| -> Result<(usize, usize)> {
        let sep = args
            .find(['|', ','])
            .ok_or_else(|| err(open + 1, "expected two parameters separated by '|' or ','"))?;
        let a = parse_usize(&args[..sep], open + 1)?;
        let b = parse_usize(&args[sep + 1..], open + sep + 2)?;
        Ok((a, b))
    };

    let spec = match head {
        "sl" => {
            let (p, q) = split2(args)?;
            if p == 0 || q == 0 {
                return Err(err(open + 1, "sl(p|q) requires p, q >= 1"));
            }
            AlgebraSpec::A { m: p - 1, n: q - 1 }
        }
        "osp" => {
            let (p, q) = split2(args)?;
            if q % 2 != 0 || q == 0 {
                return Err(err(open + 1, "osp(p|q) requires even q >= 2"));
            }
            let n = q / 2;
            if p % 2 == 1 {
                AlgebraSpec::B { m: (p - 1) / 2, n }
            } else if p == 2 {
                AlgebraSpec::C { n: n + 1 }
            } else if p >= 4 {
                AlgebraSpec::D { m: p / 2, n }
            } else {
                return Err(err(
                    open + 1,
                    "osp(0|q) is not a basic classical superalgebra",
                ));
            }
        }
        "A" => {
            let (m, n) = split2(args)?;
            AlgebraSpec::A { m, n }
        }
        "B" => {
            let (m, n) = split2(args)?;
            AlgebraSpec::B { m, n }
        }
        "C" => AlgebraSpec::C {
            n: parse_usize(args, open + 1)?,
        },
        "D" => {
            // D(m,n) or D(2,1;alpha)
            if let Some(semi) = args.find(';') {
                let (m, n) = split2(&args[..semi])?;
                if m != 2 || n != 1 {
                    return Err(err(open + 1, "the one-parameter family is D(2,1;a)"));
                }
                let alpha = parse_rational(args[semi + 1..].trim())
                    .map_err(|_| err(open + semi + 2, "expected rational parameter p or p/q"))?;
                AlgebraSpec::D21 { alpha }
            } else {
                let (m, n) = split2(args)?;
                AlgebraSpec::D { m, n }
            }
        }
        "F" => {
            parse_usize(args, open + 1)
                .ok()
                .filter(|&v| v == 4)
                .ok_or_else(|| err(open + 1, "the exceptional family is F(4)"))?;
            AlgebraSpec::F4
        }
        "G" => {
            parse_usize(args, open + 1)
                .ok()
                .filter(|&v| v == 3)
                .ok_or_else(|| err(open + 1, "the exceptional family is G(3)"))?;
            AlgebraSpec::G3
        }
        other => {
            return Err(err(
                0,
                &format!("unknown family {other:?} (expected sl, osp, A, B, C, D, F, G)"),
            ))
        }
    };
    spec.validate()?;
    Ok(spec)
}

/// Parse "p" or "p/q" (optionally signed) into a rational.
pub fn parse_rational(s: &str) -> Result<Q> {
    let bad = || Error::Parse {
        position: 0,
        message: format!("invalid rational {s:?}"),
    };
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s.trim(), "1"),
    };
    let n: crate::Int = num.parse().map_err(|_| bad())?;
    let d: crate::Int = den.parse().map_err(|_| bad())?;
    if d.is_zero() || d.is_negative() {
        return Err(bad());
    }
    Ok(Q::new(n, d))
}
