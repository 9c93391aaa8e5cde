//! End-to-end tests of the `stringy` binary: goldens, exit codes, output
//! formats, determinism, `--output`, and JSON round-tripping back through
//! the parser.

use std::collections::BTreeMap;
use std::process::{Command, Output};

use stringy_motives::parse::parse_poly;
use stringy_motives::stringy::{stringy_series, VarietyInput};
use stringy_motives::Realization;

fn stringy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stringy"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn series_text_golden() {
    let out = stringy(&[
        "series",
        "--poly",
        "v^4+22*v^2+1",
        "--realization",
        "poincare",
        "--dim",
        "2",
        "--order",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
    assert_eq!(
        stdout_of(&out),
        "1+(v^4+22*v^2+1)*t+(v^8+23*v^6+276*v^4+23*v^2+1)*t^2\n"
    );
}

#[test]
fn euler_product_text_golden() {
    let out = stringy(&["euler-product", "--e", "24", "--order", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "1+24*t+324*t^2\n");
}

#[test]
fn stringy_n_of_zero_class_is_zero() {
    let out = stringy(&["stringy-n", "--poly", "0", "--dim", "2", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out).lines().next(), Some("0"));
}

#[test]
fn stringy_n_audit_table() {
    let out = stringy(&[
        "stringy-n",
        "--poly",
        "v^4+22*v^2+1",
        "--dim",
        "2",
        "--n",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = stdout_of(&out);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(
        lines,
        vec![
            "v^8+23*v^6+276*v^4+23*v^2+1",
            "(2): length=1 weight=1 term=v^6+22*v^4+v^2",
            "(1,1): length=2 weight=0 term=v^8+22*v^6+254*v^4+22*v^2+1",
        ]
    );
}

#[test]
fn hilbert_matches_series_for_surfaces() {
    let series = stringy(&[
        "series", "--poly", "v^4+22*v^2+1", "--dim", "2", "--order", "4",
    ]);
    let hilbert = stringy(&[
        "hilbert", "--poly", "v^4+22*v^2+1", "--dim", "2", "--order", "4",
    ]);
    assert_eq!(series.status.code(), Some(0));
    assert_eq!(hilbert.status.code(), Some(0));
    assert_eq!(stdout_of(&series), stdout_of(&hilbert));
}

#[test]
fn symprod_accepts_dimension_one() {
    // The projective line: class v^2+1, plain third symmetric product.
    let out = stringy(&["symprod", "--poly", "v^2+1", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
    assert_eq!(stdout_of(&out), "v^6+v^4+v^2+1\n");
}

#[test]
fn exp_and_log_calculator() {
    let exp = stringy(&["exp", "--coeffs", "0,24", "--order", "2"]);
    assert_eq!(exp.status.code(), Some(0), "{}", stderr_of(&exp));
    assert_eq!(stdout_of(&exp), "1+24*t+300*t^2\n");

    let log = stringy(&["log", "--coeffs", "1,24,300", "--order", "2"]);
    assert_eq!(log.status.code(), Some(0), "{}", stderr_of(&log));
    assert_eq!(stdout_of(&log), "24*t\n");
}

#[test]
fn check_defaults_pass_with_exit_zero() {
    let out = stringy(&["check"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
    let stdout = stdout_of(&out);
    assert!(stdout.contains("seed=42 dims=2,3 count=50 max_n=6"), "{stdout}");
    assert!(stdout.contains("PASS"), "{stdout}");
    assert!(stdout.contains("mismatches=0"), "{stdout}");
}

#[test]
fn check_is_deterministic_for_a_fixed_seed() {
    let args = [
        "check", "--dims", "2", "--count", "3", "--max-n", "4", "--seed", "7",
    ];
    let first = stringy(&args);
    let second = stringy(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn series_output_is_deterministic() {
    let args = [
        "series", "--poly", "u^2*v^2+u^2+20*u*v+v^2+1", "--realization", "hodge",
        "--dim", "3", "--order", "5", "--format", "json",
    ];
    let first = stringy(&args);
    let second = stringy(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn validation_errors_exit_one_with_message() {
    let low_dim = stringy(&["series", "--poly", "v", "--dim", "1"]);
    assert_eq!(low_dim.status.code(), Some(1));
    assert!(stderr_of(&low_dim).starts_with("error:"), "{}", stderr_of(&low_dim));

    let not_surface = stringy(&["hilbert", "--poly", "v", "--dim", "3"]);
    assert_eq!(not_surface.status.code(), Some(1));
    assert!(stderr_of(&not_surface).contains("surface"));

    let bad_dims = stringy(&["check", "--dims", "1"]);
    assert_eq!(bad_dims.status.code(), Some(1));
    assert!(stderr_of(&bad_dims).contains(">= 2"));
}

#[test]
fn parse_errors_exit_one_with_offset() {
    let out = stringy(&["series", "--poly", "2v", "--dim", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = stderr_of(&out);
    assert!(stderr.contains("offset 1"), "{stderr}");
    assert!(stderr.contains("insert '*'"), "{stderr}");

    let wrong_var = stringy(&["series", "--poly", "u", "--dim", "2"]);
    assert_eq!(wrong_var.status.code(), Some(1));
    assert!(stderr_of(&wrong_var).contains("allowed"));
}

#[test]
fn flag_errors_exit_one_and_help_exits_zero() {
    let bad_flag = stringy(&["series", "--bogus"]);
    assert_eq!(bad_flag.status.code(), Some(1));
    assert!(!stderr_of(&bad_flag).is_empty());

    let bad_format = stringy(&["euler-product", "--e", "1", "--format", "yaml"]);
    assert_eq!(bad_format.status.code(), Some(1));

    let missing = stringy(&["series"]);
    assert_eq!(missing.status.code(), Some(1));

    let help = stringy(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
    assert!(stdout_of(&help).contains("stringy"));

    let version = stringy(&["--version"]);
    assert_eq!(version.status.code(), Some(0));
}

#[test]
fn output_flag_writes_the_same_bytes_to_a_file() {
    let direct = stringy(&["euler-product", "--e", "24", "--order", "5"]);
    assert_eq!(direct.status.code(), Some(0));

    let path = std::env::temp_dir().join(format!(
        "stringy-cli-test-{}.txt",
        std::process::id()
    ));
    let path_str = path.to_str().expect("temp path is utf-8");
    let redirected = stringy(&[
        "euler-product", "--e", "24", "--order", "5", "--output", path_str,
    ]);
    assert_eq!(redirected.status.code(), Some(0));
    assert!(stdout_of(&redirected).is_empty());
    let contents = std::fs::read_to_string(&path).expect("output file written");
    assert_eq!(contents, stdout_of(&direct));
    let _ = std::fs::remove_file(&path);
}

#[test]
fn json_series_parses_back_to_the_computed_coefficients() {
    let out = stringy(&[
        "series", "--poly", "u^2*v^2+u^2+20*u*v+v^2+1", "--realization", "hodge",
        "--dim", "2", "--order", "3", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid JSON");
    assert_eq!(json["schema"], "1");
    assert_eq!(json["command"], "series");
    assert_eq!(json["realization"], "hodge");
    assert_eq!(json["dim"], 2);

    let cls = parse_poly(
        "u^2*v^2+u^2+20*u*v+v^2+1",
        Realization::Hodge.variables(),
    )
    .unwrap();
    let x = VarietyInput::new(Realization::Hodge, cls, 2).unwrap();
    let expected = stringy_series(&x, 3).unwrap();

    let coeffs = json["series"].as_array().expect("series array");
    assert_eq!(coeffs.len(), 4);
    for (n, entry) in coeffs.iter().enumerate() {
        assert_eq!(entry["t_degree"], n as u64);
        let poly_src = entry["poly"].as_str().expect("poly string");
        let parsed = parse_poly(poly_src, Realization::Hodge.variables()).unwrap();
        assert_eq!(&parsed, expected.coeff(n), "coefficient {n}");
    }
}

#[test]
fn json_check_reports_pass() {
    let out = stringy(&[
        "check", "--dims", "2", "--count", "2", "--max-n", "3", "--seed", "5",
        "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid JSON");
    assert_eq!(json["schema"], "1");
    assert_eq!(json["command"], "check");
    assert_eq!(json["pass"], true);
    assert_eq!(json["mismatches"], 0);
}

#[test]
fn json_poly_exponent_map_matches_text() {
    let out = stringy(&[
        "symprod", "--poly", "v^2+1", "--n", "2", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid JSON");
    assert_eq!(json["poly"], "v^4+v^2+1");
    let terms = json["terms"].as_array().expect("terms array");
    let mut exponents: Vec<BTreeMap<String, String>> = Vec::new();
    for term in terms {
        assert_eq!(term["coeff"], "1");
        exponents.push(
            term["exponents"]
                .as_object()
                .expect("exponent map")
                .iter()
                .map(|(k, v)| (k.clone(), v.as_str().unwrap().to_owned()))
                .collect(),
        );
    }
    // Terms appear in the same (descending) order as the text rendering.
    let expected: Vec<BTreeMap<String, String>> = vec![
        BTreeMap::from([("v".to_owned(), "4".to_owned())]),
        BTreeMap::from([("v".to_owned(), "2".to_owned())]),
        BTreeMap::new(),
    ];
    assert_eq!(exponents, expected);
}

#[test]
fn latex_format_renders_series() {
    let out = stringy(&[
        "series", "--poly", "v^4+22*v^2+1", "--dim", "2", "--order", "2",
        "--format", "latex",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = stdout_of(&out);
    assert!(stdout.contains("\\left("), "{stdout}");
    assert!(stdout.contains("t^{2}"), "{stdout}");
}

#[test]
fn latex_handles_rational_exponents() {
    let out = stringy(&[
        "series", "--poly", "u*v+1", "--realization", "hodge", "--dim", "3",
        "--order", "2", "--format", "latex",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("\\frac"), "{}", stdout_of(&out));
}

#[test]
fn empty_coeff_list_is_rejected() {
    // `--coeffs` with an empty string parses to one empty coefficient,
    // which is not a valid polynomial.
    let out = stringy(&["exp", "--coeffs", "", "--order", "2"]);
    assert_eq!(out.status.code(), Some(1));

    let too_many = stringy(&["exp", "--coeffs", "0,1,2,3", "--order", "2"]);
    assert_eq!(too_many.status.code(), Some(1));
    assert!(stderr_of(&too_many).contains("room"), "{}", stderr_of(&too_many));
}
