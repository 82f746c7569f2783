//! Acceptance suite: every criterion below is exact (zero tolerance) and
//! prints one PASS line; any mismatch panics with the offending case.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use superdim::atypical::{atypical_dim_sequence, classify_atypicality, Atypicality};
use superdim::combinatorics::{
    c_coefficients, c_from_bernoulli, eulerian_number, factorial, EulerianTriangle,
};
use superdim::exactq::Poly;
use superdim::hilbert::{
    dim_typical, hilbert_polynomial, series_via_eulerian, series_via_operator,
};
use superdim::query::{scan_query, MarkRange};
use superdim::rootdata::{build_root_datum, parse_algebra, AlgebraSpec, RootDatum};
use superdim::typicality::{family_criteria_n_typical, is_n_typical};
use superdim::weights::{parse_coords_expr, weight_from_marks, Marks, Weight};
use superdim::{q, qi, Error, Int, QSeries, Q};

fn datum(name: &str) -> RootDatum {
    build_root_datum(&parse_algebra(name).unwrap()).unwrap()
}

fn from_marks(rd: &RootDatum, marks: &[i64]) -> Weight {
    weight_from_marks(rd, &Marks::of_ints(marks)).unwrap()
}

fn series(coeffs: &[i64], pole: usize) -> QSeries {
    QSeries::new(
        Poly::from_coeffs(coeffs.iter().map(|&c| qi(c)).collect()),
        pole,
    )
}

fn ints(vals: &[i64]) -> Vec<Q> {
    vals.iter().map(|&v| qi(v)).collect()
}

/// Criterion 1: the sl(2|1) golden table, marks (a₁, 1) for a₁ = 0..5.
#[test]
fn criterion_1_sl21_golden_table() {
    let rd = datum("sl(2|1)");
    let expected: [(&[i64], usize, [i64; 5]); 6] = [
        (&[4], 1, [4, 4, 4, 4, 4]),
        (&[4], 2, [4, 8, 12, 16, 20]),
        (&[4, 4], 2, [4, 12, 20, 28, 36]),
        (&[4, 8], 2, [4, 16, 28, 40, 52]),
        (&[4, 12], 2, [4, 20, 36, 52, 68]),
        (&[4, 16], 2, [4, 24, 44, 64, 84]),
    ];
    for (a1, (numer, pole, expansion)) in expected.iter().enumerate() {
        let w = from_marks(&rd, &[a1 as i64, 1]);
        let want = series(numer, *pole);
        let via_op = series_via_operator(&rd, &w);
        let via_thm = series_via_eulerian(&rd, &w).unwrap();
        assert_eq!(via_op, want, "operator form, a1 = {a1}");
        assert_eq!(via_thm, want, "eulerian form, a1 = {a1}");
        assert_eq!(via_op.expand(5), ints(expansion), "expansion, a1 = {a1}");
    }
    println!("ACCEPTANCE 1 sl(2|1) golden table: PASS");
}

/// Criterion 2: the sl(3|2) scan grid a_i ∈ {0,1,2}, a₃ = 1 reproduces the
/// full reference table of 11 ℕ-typical weights exactly.
#[test]
fn criterion_2_sl32_scan_table() {
    let rd = datum("sl(3|2)");
    let assignments = vec![
        MarkRange::Range(0, 2),
        MarkRange::Range(0, 2),
        MarkRange::Fixed(qi(1)),
        MarkRange::Range(0, 2),
    ];
    let rows = scan_query(&rd, &assignments, 4).unwrap();

    struct Row {
        marks: [i64; 4],
        weight: &'static str,
        numerator: &'static [i64],
        pole: usize,
        expansion: [i64; 4],
    }
    let table = [
        Row {
            marks: [0, 1, 1, 1],
            weight: "2e1+2e2+e3-d2",
            numerator: &[1, 2],
            pole: 4,
            expansion: [64, 384, 1152, 2560],
        },
        Row {
            marks: [0, 2, 1, 1],
            weight: "3e1+3e2+e3-d2",
            numerator: &[1, 8, 3],
            pole: 4,
            expansion: [64, 768, 2880, 7168],
        },
        Row {
            marks: [0, 2, 1, 2],
            weight: "3e1+3e2+e3-2d2",
            numerator: &[1, 14, 9],
            pole: 4,
            expansion: [64, 1152, 4800, 12544],
        },
        Row {
            marks: [1, 0, 1, 2],
            weight: "2e1+e2+e3-2d2",
            numerator: &[1, 5],
            pole: 4,
            expansion: [64, 576, 1920, 4480],
        },
        Row {
            marks: [1, 1, 1, 1],
            weight: "3e1+2e2+e3-d2",
            numerator: &[1, 11, 11, 1],
            pole: 5,
            expansion: [64, 1024, 5184, 16384],
        },
        Row {
            marks: [1, 2, 1, 1],
            weight: "4e1+3e2+e3-d2",
            numerator: &[1, 25, 40, 6],
            pole: 5,
            expansion: [64, 1920, 11520, 39424],
        },
        Row {
            marks: [1, 2, 1, 2],
            weight: "4e1+3e2+e3-2d2",
            numerator: &[1, 40, 85, 18],
            pole: 5,
            expansion: [64, 2880, 19200, 68992],
        },
        Row {
            marks: [2, 0, 1, 2],
            weight: "3e1+e2+e3-2d2",
            numerator: &[1, 14, 9],
            pole: 4,
            expansion: [64, 1152, 4800, 12544],
        },
        Row {
            marks: [2, 1, 1, 1],
            weight: "4e1+2e2+e3-d2",
            numerator: &[1, 25, 40, 6],
            pole: 5,
            expansion: [64, 1920, 11520, 39424],
        },
        Row {
            marks: [2, 2, 1, 1],
            weight: "5e1+3e2+e3-d2",
            numerator: &[1, 49, 115, 27],
            pole: 5,
            expansion: [64, 3456, 24000, 87808],
        },
        Row {
            marks: [2, 2, 1, 2],
            weight: "5e1+3e2+e3-2d2",
            numerator: &[1, 76, 230, 76, 1],
            pole: 5,
            expansion: [64, 5184, 40000, 153664],
        },
    ];

    assert_eq!(rows.len(), table.len(), "exactly 11 N-typical weights");
    for (row, want) in rows.iter().zip(&table) {
        assert_eq!(row.marks, Marks::of_ints(&want.marks), "marks order");
        assert_eq!(row.weight_display, want.weight, "gauge-fixed weight");
        assert_eq!(row.common_factor, qi(64), "content 64 on {:?}", want.marks);
        let numer: Vec<Int> = want.numerator.iter().map(|&c| Int::from(c)).collect();
        assert_eq!(row.numerator, numer, "numerator on {:?}", want.marks);
        assert_eq!(row.pole_order, want.pole, "pole order on {:?}", want.marks);
        assert_eq!(
            row.expansion,
            ints(&want.expansion),
            "expansion on {:?}",
            want.marks
        );
    }
    println!("ACCEPTANCE 2 sl(3|2) scan table: PASS");
}

/// Criterion 3: sl(4|1), Λ = e₁+e₂+d₁: factor multiset, prefactor, series.
#[test]
fn criterion_3_sl41_operator_factorization() {
    let rd = datum("sl(4|1)");
    let w = parse_coords_expr(&rd, "e1+e2+d1").unwrap();
    let h = hilbert_polynomial(&rd, &w);
    assert_eq!(h.prefactor, qi(16));
    let mut factors = h.factors.clone();
    factors.sort_by(|a, b| a.1.cmp(&b.1));
    assert_eq!(
        factors,
        vec![
            (qi(1), q(1, 3)),
            (qi(1), q(1, 2)),
            (qi(1), q(1, 2)),
            (qi(1), qi(1)),
        ],
        "factor multiset"
    );
    let want = series(&[16, 16], 5);
    assert_eq!(series_via_operator(&rd, &w), want);
    assert_eq!(series_via_eulerian(&rd, &w).unwrap(), want);
    println!("ACCEPTANCE 3 sl(4|1) operator factorization: PASS");
}

/// Criterion 4: the singly-atypical dimension sequence of sl(4|1),
/// Λ = e₁+e₂, against the typical-formula upper bounds.
#[test]
fn criterion_4_singly_atypical_dims() {
    let rd = datum("sl(4|1)");
    let w = parse_coords_expr(&rd, "e1+e2").unwrap();
    match classify_atypicality(&rd, &w).unwrap() {
        Atypicality::SinglyAtypical(site) => {
            assert_eq!(rd.format_vector(&site.root.coords), "e4-d1");
        }
        other => panic!("expected singly atypical, got {other:?}"),
    }
    let dims = atypical_dim_sequence(&rd, &w, 6).unwrap();
    let want: Vec<Int> = [1, 11, 46, 130, 295, 581]
        .iter()
        .map(|&v| Int::from(v))
        .collect();
    assert_eq!(dims, want);

    let bounds = series_via_operator(&rd, &w).expand(6);
    assert_eq!(bounds, ints(&[16, 96, 320, 800, 1680, 3136]));
    for k in 1..6 {
        assert!(
            bounds[k] > Q::from_integer(dims[k].clone()),
            "typical formula dominates at k = {k}"
        );
    }
    println!("ACCEPTANCE 4 sl(4|1) singly-atypical dims: PASS");
}

/// Criterion 5: the two sl(2|1) reference weights.
#[test]
fn criterion_5_n_typicality_reference_weights() {
    let rd = datum("sl(2|1)");
    let w = weight_from_marks(&rd, &Marks::new(vec![qi(1), qi(-1)])).unwrap();
    let rep = is_n_typical(&rd, &w);
    assert!(rep.typical && rep.n_typical);

    let w = weight_from_marks(&rd, &Marks::new(vec![qi(0), q(-1, 2)])).unwrap();
    let rep = is_n_typical(&rd, &w);
    assert!(rep.typical, "typical at k = 1");
    assert!(!rep.n_typical, "fails at some higher multiple");
    let smallest: Vec<&Int> = rep.atypical_roots.iter().map(|(_, k)| k).collect();
    assert_eq!(
        smallest,
        vec![&Int::from(2)],
        "smallest failing multiple is 2"
    );
    println!("ACCEPTANCE 5 reference N-typicality decisions: PASS");
}

fn equivalence_specs() -> Vec<AlgebraSpec> {
    let mut specs = Vec::new();
    for m in 0..=3usize {
        for n in 0..=3usize {
            if m != n {
                specs.push(AlgebraSpec::A { m, n });
            }
            if n >= 1 {
                specs.push(AlgebraSpec::B { m, n });
            }
            if m >= 2 && n >= 1 {
                specs.push(AlgebraSpec::D { m, n });
            }
        }
    }
    specs.push(AlgebraSpec::C { n: 2 });
    specs.push(AlgebraSpec::C { n: 3 });
    for alpha in [q(1, 2), qi(1), qi(2)] {
        specs.push(AlgebraSpec::D21 { alpha });
    }
    specs.push(AlgebraSpec::F4);
    specs.push(AlgebraSpec::G3);
    specs
}

/// Deterministic mark vectors per family: a spread of the {-2..3} grid,
/// then random integer vectors, then random small rationals.
fn mark_vectors(rank: usize, rng: &mut ChaCha8Rng, count: usize) -> Vec<Vec<Q>> {
    let grid_vals: Vec<i64> = (-2..=3).collect();
    let total = grid_vals.len().pow(rank as u32);
    let grid_take = (count / 2).clamp(1, total.min(250));
    let stride = (total / grid_take).max(1);
    let mut out = Vec::with_capacity(count);
    for g in 0..grid_take {
        let mut idx = g * stride;
        let mut vals = Vec::with_capacity(rank);
        for _ in 0..rank {
            vals.push(qi(grid_vals[idx % grid_vals.len()]));
            idx /= grid_vals.len();
        }
        out.push(vals);
    }
    while out.len() < count * 4 / 5 {
        out.push((0..rank).map(|_| qi(rng.gen_range(-2..=3))).collect());
    }
    while out.len() < count {
        out.push(
            (0..rank)
                .map(|_| q(rng.gen_range(-6..=6), rng.gen_range(1..=4)))
                .collect(),
        );
    }
    out
}

/// Criterion 6: the printed per-family mark criteria agree with the
/// definitional closed-form ℕ-typicality decision on every sampled vector.
#[test]
fn criterion_6_master_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5d1a);
    let mut checked = 0usize;
    for spec in equivalence_specs() {
        let rd = build_root_datum(&spec).unwrap();
        for vals in mark_vectors(rd.rank(), &mut rng, 500) {
            let marks = Marks::new(vals);
            let w = weight_from_marks(&rd, &marks).unwrap();
            let criteria = family_criteria_n_typical(&spec, &marks).unwrap();
            let definitional = is_n_typical(&rd, &w).n_typical;
            assert_eq!(
                criteria, definitional,
                "{spec}: criteria vs definition on marks {:?}",
                marks.values
            );
            checked += 1;
        }
    }
    println!("ACCEPTANCE 6 master equivalence ({checked} weights, 100% agreement): PASS");
}

/// True when the Eulerian closed form is structurally degenerate for the
/// algebra: (ρ, β) = 0 for some even positive root β.
fn eulerian_form_degenerate(rd: &RootDatum) -> bool {
    rd.delta0_plus
        .iter()
        .any(|beta| rd.pairing(&rd.rho, &beta.coords).unwrap().is_zero())
}

/// Criterion 7: both closed forms agree exactly and match the dimension
/// formula on the first 8 coefficients, for 200+ random weights.
#[test]
fn criterion_7_closed_form_cross_validation() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0de);
    let mut checked = 0usize;
    let mut degenerate_algebras = Vec::new();
    for spec in equivalence_specs() {
        let rd = build_root_datum(&spec).unwrap();
        if eulerian_form_degenerate(&rd) {
            degenerate_algebras.push(spec.to_string());
            // The Eulerian form must report its own degeneracy and the
            // operator form must still match the dimension formula.
            for vals in mark_vectors(rd.rank(), &mut rng, 10) {
                let w = weight_from_marks(&rd, &Marks::new(vals)).unwrap();
                assert!(matches!(
                    series_via_eulerian(&rd, &w),
                    Err(Error::DegenerateEulerianForm { .. })
                ));
                let s = series_via_operator(&rd, &w);
                for (k, coeff) in s.expand(8).iter().enumerate() {
                    assert_eq!(coeff, &dim_typical(&rd, &w, k as u64));
                }
            }
            continue;
        }
        for vals in mark_vectors(rd.rank(), &mut rng, 8) {
            let w = weight_from_marks(&rd, &Marks::new(vals)).unwrap();
            let via_op = series_via_operator(&rd, &w);
            let via_thm = series_via_eulerian(&rd, &w).unwrap();
            assert_eq!(via_op, via_thm, "{spec}: closed forms differ");
            for (k, coeff) in via_op.expand(8).iter().enumerate() {
                assert_eq!(
                    coeff,
                    &dim_typical(&rd, &w, k as u64),
                    "{spec}: coefficient {k}"
                );
            }
            checked += 1;
        }
    }
    assert!(checked >= 200, "sampled {checked} weights");
    // The degenerate set is a structural fact about ρ, not about weights.
    assert_eq!(
        degenerate_algebras,
        vec!["osp(3|4)", "osp(3|6)", "osp(4|4)", "osp(5|6)", "osp(4|6)", "osp(6|6)"],
        "algebras with (rho, beta) = 0"
    );
    println!(
        "ACCEPTANCE 7 closed-form cross-validation ({checked} weights, {} degenerate algebras deferred to operator form): PASS",
        degenerate_algebras.len()
    );
}

/// Criterion 8: Eulerian triangle oracles and the two C-coefficient routes.
#[test]
fn criterion_8_combinatorics_oracles() {
    let t = EulerianTriangle::new(12);
    for n in 1..=12 {
        let row = &t.rows()[n];
        let sum: Int = row.iter().sum();
        assert_eq!(sum, factorial(n), "row sum {n}");
        for k in 0..n {
            assert_eq!(row[k], row[n - 1 - k], "palindromy ({n},{k})");
            assert_eq!(row[k], eulerian_number(n, k), "explicit formula ({n},{k})");
            if n >= 2 {
                // A(n,k) = (k+1)A(n-1,k) + (n-k)A(n-1,k-1)
                let prev = &t.rows()[n - 1];
                let a = if k < prev.len() {
                    prev[k].clone()
                } else {
                    Int::from(0)
                };
                let b = if k >= 1 && k - 1 < prev.len() {
                    prev[k - 1].clone()
                } else {
                    Int::from(0)
                };
                assert_eq!(row[k], Int::from(k + 1) * a + Int::from(n - k) * b);
            }
        }
    }
    let cs = c_coefficients(10);
    for (i, c) in cs.iter().enumerate() {
        assert_eq!(c, &c_from_bernoulli(i), "C_{i} routes");
    }
    println!("ACCEPTANCE 8 combinatorics oracles: PASS");
}

/// Criterion 9: every sampled weight of B(0,2) is ℕ-typical.
#[test]
fn criterion_9_b02_always_n_typical() {
    let rd = datum("osp(1|4)");
    let mut rng = ChaCha8Rng::seed_from_u64(0xb02);
    let mut checked = 0usize;
    for vals in mark_vectors(rd.rank(), &mut rng, 200) {
        let marks = Marks::new(vals);
        let w = weight_from_marks(&rd, &marks).unwrap();
        let rep = is_n_typical(&rd, &w);
        assert!(rep.typical && rep.n_typical);
        assert!(family_criteria_n_typical(&rd.spec, &marks).unwrap());
        checked += 1;
    }
    assert!(checked >= 200);
    println!("ACCEPTANCE 9 B(0,2) always N-typical ({checked} weights): PASS");
}
