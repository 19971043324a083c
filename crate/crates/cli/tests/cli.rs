//! Command behaviour through the library entry point and the built binary.

use std::process::Command;

use pcheb_cli::{
    run, verify, write_verify, OutputFormat, EXIT_DISCONNECTED, EXIT_FAILED, EXIT_OK, EXIT_USAGE,
};
use pcheb_core::chebyshev::{Families, FamilyTag};
use pcheb_core::Poly;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["pcheb"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn poly_outputs() {
    assert_eq!(
        call(&["poly", "phi", "0", "--format", "json"]).1,
        "{\"family\":\"phi\",\"n\":0,\"coeffs\":[1,-2,1]}\n"
    );
    assert_eq!(call(&["poly", "ue", "2"]).1, "[1, 2]\n");
    assert_eq!(call(&["poly", "u", "-1"]).1, "[]\n");
    assert_eq!(call(&["poly", "U", "-2"]).1, "[-1]\n");
    let (code, out, _) = call(&["poly", "s", "3", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "power,coeff\n0,-6\n1,-14\n2,4\n3,16\n");
}

#[test]
fn poly_big_coefficients_are_exact_in_json() {
    let (_, out, _) = call(&["poly", "u", "100", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let last = v["coeffs"].as_array().unwrap().last().unwrap().to_string();
    assert_eq!(last, (num_bigint::BigInt::from(1) << 100usize).to_string());
}

#[test]
fn poly_rejects_bad_arguments() {
    for args in [
        &["poly", "zz", "1"][..],
        &["poly", "ue", "-1"],
        &["poly", "phi"],
        &["poly", "u", "x"],
    ] {
        let (code, out, err) = call(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(out.is_empty());
        assert!(!err.is_empty());
    }
}

#[test]
fn verify_small_and_trivial() {
    let (code, out, _) = call(&["verify", "--max-n", "0", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "{\"max_n\":0,\"failures\":[]}\n");
    assert_eq!(call(&["verify", "--max-n", "50"]).0, EXIT_OK);
}

#[test]
fn verify_reports_a_corrupted_family() {
    let mut fam = Families::build(6);
    fam.replace(FamilyTag::Ue, 4, Poly::from_i64s(&[1, 2, 5]))
        .unwrap();
    let report = verify(&fam);
    assert!(!report.passed());
    let mut out = Vec::new();
    assert_eq!(
        write_verify(&report, OutputFormat::Json, &mut out).unwrap(),
        EXIT_FAILED
    );
    let v: serde_json::Value = serde_json::from_slice(&out).unwrap();
    let names: Vec<&str> = v["failures"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["identity"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"U=Ue*Uo"), "{names:?}");
    let mut plain = Vec::new();
    write_verify(&report, OutputFormat::Plain, &mut plain).unwrap();
    assert!(String::from_utf8(plain)
        .unwrap()
        .contains("FAIL U=Ue*Uo n=4"));
}

#[test]
fn qec_targets() {
    let (code, out, _) = call(&["qec", "fan", "3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().next(), Some("-0.5"));
    let (_, out, _) = call(&["qec", "fan", "4", "--method", "numeric", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!((v["value"].as_f64().unwrap() + 0.381_966_011_3).abs() < 1e-9);
    assert_eq!(v["method"], "numeric-oracle");
    assert_eq!(
        call(&["qec", "fan", "5", "--method", "closed"]).0,
        EXIT_USAGE
    );
    assert_eq!(call(&["qec", "fan", "0"]).0, EXIT_USAGE);
    assert_eq!(call(&["qec", "fan", "3", "--tol", "0"]).0, EXIT_USAGE);
}

#[test]
fn qec_graph_files() {
    let dir = tempfile::tempdir().unwrap();
    let path5 = dir.path().join("path5.edges");
    std::fs::write(&path5, "# P_5\n0 1\n1 2\n2 3\n3 4\n").unwrap();
    let (code, out, _) = call(&["qec", "graph", path5.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let value: f64 = out.lines().next().unwrap().parse().unwrap();
    let direct =
        pcheb_core::qec::qec_numeric(&pcheb_core::graphs::path(5).unwrap(), 1e-12).unwrap();
    assert_eq!(value, direct.value);

    let split = dir.path().join("split.edges");
    std::fs::write(&split, "0 1\n2 3\n").unwrap();
    assert_eq!(
        call(&["qec", "graph", split.to_str().unwrap()]).0,
        EXIT_DISCONNECTED
    );
    let junk = dir.path().join("junk.edges");
    std::fs::write(&junk, "0 x\n").unwrap();
    assert_eq!(
        call(&["qec", "graph", junk.to_str().unwrap()]).0,
        EXIT_USAGE
    );
    assert_eq!(call(&["qec", "graph", "/nonexistent/file"]).0, EXIT_USAGE);
    assert_eq!(
        call(&["dist", "graph", split.to_str().unwrap()]).0,
        EXIT_DISCONNECTED
    );
}

#[test]
fn table_rows_round_trip() {
    let (code, out, _) = call(&["table", "fan", "1", "9", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    let mut rdr = csv::Reader::from_reader(out.as_bytes());
    assert_eq!(
        rdr.headers().unwrap(),
        vec!["n", "qec", "method", "lower", "upper"]
    );
    let rows = pcheb_cli::fan_table(1, 9, None, 1e-12).unwrap();
    let records: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(records.len(), 9);
    for (rec, row) in records.iter().zip(&rows) {
        assert_eq!(rec[0].parse::<usize>().unwrap(), row.n);
        assert_eq!(rec[1].parse::<f64>().unwrap().to_bits(), row.qec.to_bits());
        assert_eq!(&rec[2], row.method.name());
        match row.bounds {
            Some((lo, hi)) => {
                assert_eq!(rec[3].parse::<f64>().unwrap().to_bits(), lo.to_bits());
                assert_eq!(rec[4].parse::<f64>().unwrap().to_bits(), hi.to_bits());
            }
            None => assert!(rec[3].is_empty() && rec[4].is_empty()),
        }
    }
    assert_eq!(records[2][1].parse::<f64>().unwrap(), -0.5);

    let (_, out, _) = call(&["table", "fan", "1", "9", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    for (j, row) in v["rows"].as_array().unwrap().iter().zip(&rows) {
        assert_eq!(j["qec"].as_f64().unwrap().to_bits(), row.qec.to_bits());
    }
}

#[test]
fn table_edge_cases() {
    let (code, out, _) = call(&["table", "fan", "2", "2", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    let row = out.lines().nth(1).unwrap();
    let v: f64 = row.split(',').nth(1).unwrap().parse().unwrap();
    assert!((v - pcheb_core::qec::even_closed_form(2)).abs() < 1e-15);
    assert_eq!(out.lines().count(), 2);
    assert_eq!(call(&["table", "fan", "5", "4"]).0, EXIT_USAGE);
    assert_eq!(call(&["table", "fan", "0", "4"]).0, EXIT_USAGE);
}

#[test]
fn dist_formats() {
    let (_, out, _) = call(&["dist", "fan", "2", "--format", "json"]);
    assert_eq!(out, "{\"n\":3,\"rows\":[[0,1,1],[1,0,1],[1,1,0]]}\n");
    let (_, out, _) = call(&["dist", "fan", "3"]);
    assert_eq!(out.lines().nth(1), Some("1 0 1 2"));
}

#[test]
fn binary_separates_data_and_diagnostics() {
    let bin = env!("CARGO_BIN_EXE_pcheb");
    let ok = Command::new(bin)
        .args(["poly", "ue", "2"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "[1, 2]\n");
    assert!(ok.stderr.is_empty());
    let bad = Command::new(bin)
        .args(["table", "fan", "5", "4"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(bad.stdout.is_empty());
    assert!(!bad.stderr.is_empty());
    let help = Command::new(bin).arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(0));
}
