//! End-to-end tests of the `superdim` binary: output determinism, exit
//! codes, and the documented command surface.

use std::process::{Command, Output};

fn superdim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superdim"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn info_lists_root_datum() {
    let out = superdim(&["info", "sl(4|1)"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("rho0 = 3/2e1+1/2e2-1/2e3-3/2e4"), "{text}");
    assert!(text.contains("d0 = |Delta0+| = 6"));
    assert!(text.contains("alpha4 = e4-d1 (odd)"));

    let out = superdim(&["info", "sl(2|1)"]);
    let text = stdout(&out);
    assert!(text.contains("d0 = |Delta0+| = 1, d1 = |Delta1+| = 2"));
}

#[test]
fn info_rejects_gl() {
    let out = superdim(&["info", "sl(2|2)"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("m != n"), "{err}");
}

#[test]
fn series_text_matches_reference_row() {
    let out = superdim(&["series", "sl(2|1)", "--marks", "3,1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("H(q) = 4(2q + 1)/(1 - q)^2"), "{text}");
    assert!(text.contains("expansion: 4, 16, 28, 40, 52"), "{text}");
    assert!(!text.contains("warning"), "{text}");
}

#[test]
fn series_warns_on_atypical_weight() {
    let out = superdim(&["series", "sl(4|1)", "--coords", "e1+e2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("warning: weight is not N-typical"), "{text}");
    assert!(text.contains("e4-d1"), "{text}");
    assert!(text.contains("upper bounds"), "{text}");
    // The formal series is still printed.
    assert!(text.contains("H(q) = 16(q + 1)/(1 - q)^5"), "{text}");
}

#[test]
fn series_output_is_deterministic() {
    let args = [
        "series", "sl(3|2)", "--marks", "1,2,1,2", "--format", "json", "--terms", "6",
    ];
    let a = superdim(&args);
    let b = superdim(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "byte-identical output");
}

#[test]
fn series_json_fields() {
    let out = superdim(&[
        "series", "sl(3|2)", "--marks", "0,1,1,1", "--format", "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["algebra"], "sl(3|2)");
    assert_eq!(v["weight"], "2e1+2e2+e3-d2");
    assert_eq!(v["hilbert"]["pole_order"], 4);
    assert_eq!(v["hilbert"]["common_factor"], "64");
    assert_eq!(v["typicality"]["n_typical"], true);
    assert_eq!(v["expansion"][1].to_string(), "384");
}

#[test]
fn series_latex_row() {
    let out = superdim(&["series", "sl(2|1)", "--marks", "2,1", "--format", "latex"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(
        text.contains("\\frac{4 \\left(q + 1\\right)}{(1 - q)^{2}}"),
        "{text}"
    );
    assert!(text.contains("e_{1}"), "{text}");
}

#[test]
fn scan_reproduces_table_rows() {
    let out = superdim(&[
        "scan", "sl(3|2)", "--range", "a1=0..2", "--range", "a2=0..2", "--fix", "a3=1", "--range",
        "a4=0..2",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 11, "{text}");
    assert!(
        text.starts_with("marks (0,1,1,1)  weight 2e1+2e2+e3-d2"),
        "{text}"
    );
    assert!(
        text.contains("marks (2,2,1,2)  weight 5e1+3e2+e3-2d2"),
        "{text}"
    );
}

#[test]
fn scan_empty_range_succeeds_with_empty_table() {
    let out = superdim(&["scan", "sl(2|1)", "--range", "a1=2..1", "--fix", "a2=1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty());
}

#[test]
fn scan_requires_full_coverage() {
    let out = superdim(&["scan", "sl(2|1)", "--range", "a1=0..2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn atypical_grassmannian_sequence() {
    let out = superdim(&["atypical", "sl(4|1)", "--coords", "e1+e2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("singly atypical at root e4-d1"), "{text}");
    assert!(
        text.contains("dims:         1, 11, 46, 130, 295, 581"),
        "{text}"
    );
    assert!(
        text.contains("upper bounds: 16, 96, 320, 800, 1680, 3136"),
        "{text}"
    );
}

#[test]
fn atypical_json_and_negative_marks() {
    let out = superdim(&[
        "atypical", "sl(4|1)", "--coords", "e1+e2", "--format", "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["atypical_root"], "e4-d1");
    assert_eq!(v["dims"][5].to_string(), "581");

    // Weight arguments may start with a hyphen.
    let out = superdim(&["series", "sl(2|1)", "--marks", "1,-1"]);
    assert!(out.status.success());
    let out = superdim(&["series", "sl(3|2)", "--coords", "-d2+2e1+2e2+e3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("marks: (0, 1, 1, 1)"));
}

#[test]
fn atypical_rejects_typical_and_multiply_atypical() {
    let out = superdim(&["atypical", "sl(4|1)", "--marks", "1,1,1,1"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("use the `series` command"), "{err}");

    // The zero weight of sl(3|2) is doubly atypical.
    let out = superdim(&["atypical", "sl(3|2)", "--marks", "0,0,0,0"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("2-fold atypical"), "{err}");
}

#[test]
fn atypical_rejects_non_a_family() {
    let out = superdim(&["atypical", "osp(3|2)", "--marks", "1,0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn batch_file_runs() {
    let dir = std::env::temp_dir().join("superdim-batch-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("queries.toml");
    std::fs::write(
        &path,
        "[[query]]\nalgebra = \"sl(2|1)\"\nmarks = \"5,1\"\nterms = 5\n",
    )
    .unwrap();
    let out = superdim(&["batch", path.to_str().unwrap()]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v[0]["expansion"][1].to_string(), "24");
    std::fs::remove_file(&path).ok();
}

#[test]
fn exceptional_families_work_end_to_end() {
    let out = superdim(&[
        "series",
        "D(2,1;1/2)",
        "--marks",
        "3,1,1",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["algebra"], "D(2,1;1/2)");

    let out = superdim(&["series", "G(3)", "--marks", "1/3,2,1"]);
    assert!(out.status.success());

    let out = superdim(&["info", "F(4)", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["d0"], 10);
    assert_eq!(v["d1"], 8);
}

#[test]
fn help_exits_zero() {
    let out = superdim(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let out = superdim(&["series", "--help"]);
    assert_eq!(out.status.code(), Some(0));
}
