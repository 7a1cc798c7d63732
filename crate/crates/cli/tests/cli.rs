use chaincode_cli::{run, Cli, Outcome, EXIT_BUDGET, EXIT_MISMATCH, EXIT_OK, EXIT_VALIDATION};
use clap::Parser;

fn cli(args: &[&str]) -> Outcome {
    let mut argv = vec!["chaincode"];
    argv.extend_from_slice(args);
    run(&Cli::try_parse_from(argv).unwrap())
}

#[test]
fn factor_text_and_json() {
    let out = cli(&["factor", "--n", "10", "--field", "GF(5)"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout, "(x+1)^5\n(x+4)^5\n");
    let out = cli(&["factor", "--n", "7", "--field", "GF(2)", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["factors"].as_array().unwrap().len(), 3);
}

#[test]
fn enumerate_length_one() {
    let out = cli(&["enumerate", "--n", "1", "--field", "GF(2)", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["count"], 3);
    assert_eq!(v["codes"][0]["cardinality"], 4);
}

#[test]
fn classify_lists_repetition_code() {
    let out = cli(&["classify", "--n", "7", "--field", "GF(2)", "--oracle"]);
    assert_eq!(out.code, EXIT_OK);
    let line = out
        .stdout
        .lines()
        .find(|l| l.starts_with("x^6+x^5+x^4+x^3+x^2+x+1 "))
        .unwrap();
    let cols: Vec<&str> = line.split_whitespace().collect();
    assert_eq!(&cols[1..4], &["1", "7", "*"]);
    assert!(out.stdout.contains("oracle disagreements: 0"));
}

#[test]
fn classify_csv_header() {
    let out = cli(&["classify", "--n", "3", "--field", "GF(2)", "--csv"]);
    assert!(out.stdout.starts_with("generators,k,d,MDS,reversible,"));
}

#[test]
fn reversible_only_filter() {
    let out = cli(&["classify", "--n", "6", "--field", "GF(3)", "--reversible-only", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len() as u64, v["reversible"].as_u64().unwrap());
    assert!(rows.iter().all(|r| r["reversible"] == true));
}

#[test]
fn dual_of_small_code() {
    let out = cli(&[
        "dual", "--n", "4", "--field", "GF(2)", "--code", "x^2+1+u, u(x+1)", "--oracle",
    ]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert!(out.stdout.contains("orthogonality: pass"));
    assert!(out.stdout.contains("oracle: pass"));
}

#[test]
fn distance_json_and_zero_code() {
    let out = cli(&["distance", "--n", "4", "--field", "GF(3)", "--code", "(x+1)(x^2+1)", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!((v["d"].as_u64(), v["mds"].as_bool()), (Some(4), Some(true)));
    let out = cli(&["distance", "--n", "3", "--field", "GF(2)", "--code", "0", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert!(v["d"].is_null());
}

#[test]
fn table_strict_exit_codes() {
    for id in ["6.1", "6.2", "6.3", "6.4", "6.5", "6.6", "6.7"] {
        let out = cli(&["table", "--example", id, "--strict"]);
        assert_eq!(out.code, EXIT_OK, "{id}: {}", out.stdout);
    }
    let out = cli(&["table", "--example", "6.2"]);
    assert!(out.stdout.contains("flagged=2"));
}

#[test]
fn error_exit_codes() {
    let out = cli(&["factor", "--n", "4", "--field", "GF(6)"]);
    assert_eq!(out.code, EXIT_VALIDATION);
    let out = cli(&["table", "--example", "9.9"]);
    assert_eq!(out.code, EXIT_VALIDATION);
    let out = cli(&["--budget", "99999999", "factor", "--n", "4", "--field", "GF(2)"]);
    assert_eq!(out.code, EXIT_VALIDATION);
    let out = cli(&[
        "--budget", "16", "distance", "--n", "12", "--field", "GF(2)", "--code", "x+1", "--oracle",
    ]);
    assert_eq!(out.code, EXIT_BUDGET, "{}", out.stderr);
}

#[test]
fn verify_reports_pass() {
    let out = cli(&["verify", "--n", "4", "--field", "GF(2)"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.trim_end().ends_with("RESULT: PASS"));
    assert_ne!(EXIT_MISMATCH, EXIT_OK);
}

#[test]
fn json_and_csv_conflict() {
    assert!(Cli::try_parse_from(["chaincode", "--json", "--csv", "factor", "--n", "2", "--field", "GF(2)"]).is_err());
}
