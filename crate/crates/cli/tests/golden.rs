use std::path::Path;

use zetareg::bernoulli::BernoulliTable;
use zetareg::parse_rational;
use zetareg_cli::commands::{EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE};
use zetareg_cli::{run, run_with};

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn zetareg(args: &[&str]) -> zetareg_cli::commands::Outcome {
    run(std::iter::once("zetareg").chain(args.iter().copied()))
}

#[test]
fn outputs_match_golden_files() {
    let cases: &[(&str, &[&str])] = &[
        ("zeta_1.txt", &["zeta", "1"]),
        ("zeta_0.json", &["zeta", "0", "--format", "json"]),
        ("eta_2.txt", &["eta", "2"]),
        ("eta_3.json", &["eta", "3", "--format", "json"]),
        (
            "sum_forward.txt",
            &["sum", "--f", "u", "--from", "1", "--to", "4"],
        ),
        (
            "sum_reversed.txt",
            &["sum", "--f", "u", "--from", "4", "--to", "1"],
        ),
        (
            "sum_full_circle.txt",
            &["sum", "--f", "u^2", "--from", "0", "--to", "-1"],
        ),
        (
            "sum_with_antidifference.txt",
            &[
                "sum",
                "--f",
                "1/(4*u^2-1)",
                "--F",
                "-1/(2*(2*n-1))",
                "--from",
                "1",
                "--to",
                "10",
            ],
        ),
        ("regsum_odd.txt", &["regsum", "--f", "2*u-1"]),
        (
            "regsum_odd_alt.json",
            &["regsum", "--alt", "--f", "2*u-1", "--format", "json"],
        ),
        ("regsum_squares.txt", &["regsum", "--f", "u^2"]),
        ("bernoulli_1.txt", &["bernoulli", "1"]),
        ("bernoulli_4_poly.txt", &["bernoulli", "4", "--poly"]),
        ("verify_special_values.txt", &["verify", "paper"]),
    ];
    for (file, args) in cases {
        let out = zetareg(args);
        assert_eq!(out.code, EXIT_OK, "{args:?}: {}", out.stderr);
        assert_eq!(out.stdout, golden(file), "{args:?}");
        assert!(out.stderr.is_empty(), "{args:?}: {}", out.stderr);
    }
}

fn value_line(stdout: &str) -> &str {
    stdout
        .lines()
        .find_map(|l| l.strip_prefix("value: "))
        .expect("value line")
}

#[test]
fn documented_values() {
    let cases: &[(&[&str], &str)] = &[
        (&["zeta", "1"], "-1/12"),
        (&["eta", "2"], "0"),
        (&["zeta", "0"], "-1/2"),
        (&["sum", "--f", "u", "--from", "1", "--to", "4"], "10"),
        (&["sum", "--f", "u", "--from", "4", "--to", "1"], "-5"),
        (&["sum", "--f", "u^2", "--from", "0", "--to", "-1"], "0"),
        (&["regsum", "--f", "2*u-1"], "1/3"),
        (&["regsum", "--alt", "--f", "2*u-1"], "0"),
        (&["regsum", "--f", "u^2"], "0"),
        (&["bernoulli", "1"], "1/2"),
        (&["bernoulli", "3"], "0"),
        (&["bernoulli", "2"], "1/6"),
    ];
    for (args, expected) in cases {
        let out = zetareg(args);
        assert_eq!(out.code, EXIT_OK, "{args:?}");
        let value = value_line(&out.stdout);
        assert_eq!(value, *expected, "{args:?}");
        // The printed text is the canonical form of the value it encodes.
        let parsed = parse_rational(value).unwrap();
        assert_eq!(zetareg::format_rational(&parsed), value);
    }
}

#[test]
fn json_values_are_decimal_strings() {
    let out = zetareg(&["zeta", "19", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    // -B_20/20 with B_20 = -174611/330
    assert_eq!(doc["value"]["num"], "174611");
    assert_eq!(doc["value"]["den"], "6600");
    assert_eq!(doc["query"], "zeta(-19)");
    assert_eq!(doc["mode"], "regularized");
    assert!(doc["decimal"].is_string());
}

#[test]
fn usage_errors_exit_one() {
    let cases: &[&[&str]] = &[
        &["zeta", "-1"],
        &["eta", "-3"],
        &["bernoulli", "-2"],
        &["zeta"],
        &["frobnicate"],
        &["sum", "--f", "cos(u)", "--from", "1", "--to", "3"],
        &["sum", "--f", "u+", "--from", "1", "--to", "3"],
        &["sum", "--f", "u", "--from", "1", "--to", "3", "--F", "n)"],
        &["regsum", "--f", "sin(u)"],
        &["regsum", "--f", "1/u"],
    ];
    for args in cases {
        let out = zetareg(args);
        assert_eq!(out.code, EXIT_USAGE, "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    let out = zetareg(&["regsum", "--f", "sin(u)"]);
    assert!(out.stderr.contains("sum") && out.stderr.contains("verify"));
}

#[test]
fn help_exits_zero() {
    let out = zetareg(&["--help"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("verify"));
    let out = zetareg(&["sum", "--help"]);
    assert!(out.stdout.contains("right-associative"));
}

#[test]
fn bad_antidifference_warns() {
    let out = zetareg(&[
        "sum", "--f", "sin(u)", "--F", "cos(n)", "--from", "1", "--to", "10",
    ]);
    assert_eq!(out.code, EXIT_CHECK_FAILED);
    assert!(out.stderr.starts_with("warning:"));
    let out = zetareg(&["sum", "--f", "u", "--F", "n^2", "--from", "1", "--to", "4"]);
    assert_eq!(out.code, EXIT_CHECK_FAILED);
}

#[test]
fn numeric_sum_with_good_antidifference() {
    let out = zetareg(&[
        "sum",
        "--f",
        "((u^2+1/4)*tan(1/2)*cos(u)-u*sin(u))/(4*u^2-1)^2",
        "--F",
        "sin(n-1/2)/(8*(2*n-1)^2*cos(1/2))",
        "--from",
        "1",
        "--to",
        "1000",
    ]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert!(!out.stdout.contains("value:"));
    let decimal: f64 = out
        .stdout
        .lines()
        .find_map(|l| l.strip_prefix("decimal: "))
        .unwrap()
        .parse()
        .unwrap();
    assert!((decimal + 0.5f64.tan() / 8.0).abs() < 1e-6);
}

#[test]
fn mis_signed_b1_is_caught() {
    let classical = BernoulliTable::classical();
    let out = run_with(&classical, ["zetareg", "zeta", "0"]);
    assert_eq!(out.code, EXIT_CHECK_FAILED);
    assert!(
        out.stdout.is_empty(),
        "no value is printed after a failed cross-check"
    );
    assert!(out.stderr.contains("routes disagree"));

    let out = run_with(&classical, ["zetareg", "verify", "all"]);
    assert_eq!(out.code, EXIT_CHECK_FAILED);
    assert!(out.stdout.contains("FAIL values/zeta(0)"));
    assert!(out.stdout.contains("FAIL bernoulli/difference"));
}
