use std::process::{Command, Output};

use serde_json::Value;

fn dualskew(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dualskew")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = dualskew(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn poly_formats() {
    assert_eq!(stdout(&["poly", "A:1"]), "1 - t\n");
    assert_eq!(
        stdout(&["poly", "E7", "--format", "text"]),
        "1 - 63 t + 777 t^2 - 3927 t^3 + 9933 t^4 - 13299 t^5 + 9009 t^6 - 2431 t^7\n"
    );
    let v: Value = serde_json::from_str(&stdout(&["poly", "D:4", "--format", "json"])).unwrap();
    assert_eq!(v["type"], "D4");
    assert_eq!(v["rank"], 4);
    assert_eq!(v["coeffs"], serde_json::json!(["1", "-12", "39", "-48", "20"]));
    let csv = stdout(&["poly", "i2:7", "--format", "csv"]);
    assert_eq!(csv, "degree,coeff\n0,1\n1,-7\n2,6\n");
}

#[test]
fn json_round_trips_large_coefficients() {
    let v: Value = serde_json::from_str(&stdout(&["poly", "B:60", "--format", "json"])).unwrap();
    let coeffs: Vec<num_bigint::BigInt> =
        v["coeffs"].as_array().unwrap().iter().map(|c| c.as_str().unwrap().parse().unwrap()).collect();
    let text = stdout(&["poly", "B:60"]);
    assert_eq!(coeffs.len(), 61);
    assert!(coeffs.iter().any(|c| c.bits() > 64));
    assert!(text.contains(&coeffs[30].magnitude().to_string()));
}

#[test]
fn roots_examples() {
    assert_eq!(stdout(&["roots", "G2"]), "  1  1\n  2  1/5\n");
    assert_eq!(stdout(&["roots", "B:2"]), "  1  1\n  2  1/3\n");
    assert_eq!(stdout(&["roots", "A:1"]), "  1  1\n");
    let v: Value = serde_json::from_str(&stdout(&["roots", "E8", "--format", "json", "--eps", "1/1000000"])).unwrap();
    let roots = v["roots"].as_array().unwrap();
    assert_eq!(roots.len(), 8);
    assert_eq!(roots[0]["exact"], "1");
}

#[test]
fn sequence_examples() {
    let a = stdout(&["sequence", "A", "--to", "3"]);
    let lines: Vec<&str> = a.lines().collect();
    assert!(lines[0].ends_with(" 1") && lines[1].ends_with("1/2"));
    assert!(lines[2].contains("2.7639320"));
    let b = stdout(&["sequence", "B", "--to", "2"]);
    assert_eq!(b.lines().next().unwrap().trim(), "2  1/3");
    let d = stdout(&["sequence", "D", "--to", "10", "--sandwich", "--format", "csv"]);
    assert!(d.starts_with("l,low,high,approx,sandwich\n"));
    assert_eq!(d.lines().skip(1).filter(|l| l.ends_with(",true")).count(), 7);
}

#[test]
fn table_examples() {
    let b = stdout(&["table", "B"]);
    assert_eq!(b.lines().count(), 8);
    assert_eq!(b.lines().last().unwrap(), "I2(p): 1 - p t + (p-1) t^2");
    let a = stdout(&["table", "A", "--family", "B", "--to", "4"]);
    assert_eq!(a, "B2: 1 - 4 t + 3 t^2\nB3: 1 - 9 t + 18 t^2 - 10 t^3\nB4: 1 - 16 t + 60 t^2 - 80 t^3 + 35 t^4\n");
    assert_eq!(stdout(&["table", "A", "--family", "A", "--to", "1"]), "A1: 1 - t\n");
}

#[test]
fn verify_reports_and_exit_codes() {
    let out = dualskew(&["verify", "conj1", "E8", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v[0]["check"], "conj1");
    assert_eq!(v[0]["status"], "pass");

    let out = dualskew(&["verify", "conj2", "--family", "A", "--to", "30", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.contains(",pass,")).count(), 30);

    // a single prime dividing the discriminant cannot certify anything
    let out = dualskew(&["verify", "conj1", "E8", "--primes", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v[0]["status"], "undecided");
    assert_eq!(v[0]["details"]["result"]["status"], "inconclusive");
}

#[test]
fn usage_errors_exit_64() {
    for args in [&["poly", "X9"][..], &["frobnicate"], &["roots", "A:3", "--eps", "-1"], &["table", "C"]] {
        assert_eq!(dualskew(args).status.code(), Some(64), "{args:?}");
    }
    assert_eq!(dualskew(&["--help"]).status.code(), Some(0));
}

#[test]
fn lattice_cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b3.json");
    let p = path.to_str().unwrap();
    let first = stdout(&["lattice", "B3", "--cache", p]);
    assert!(path.exists());
    let second = stdout(&["lattice", "B3", "--cache", p]);
    assert_eq!(first, second);
    // a cache for another type is ignored and rewritten
    let third = stdout(&["lattice", "A3", "--cache", p]);
    assert!(third.contains("A3"));
    assert!(std::fs::read_to_string(&path).unwrap().contains("\"A3\""));
}

#[test]
fn plot_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("e8.svg");
    stdout(&["plot", "E8", "--out", path.to_str().unwrap()]);
    let a = std::fs::read(&path).unwrap();
    stdout(&["plot", "E8", "--out", path.to_str().unwrap()]);
    assert_eq!(a, std::fs::read(&path).unwrap());
    let svg = String::from_utf8(a).unwrap();
    assert!(svg.contains(r#"version="1.1""#));
    assert_eq!(svg.matches(r#"<g class="root""#).count(), 8);
    let out = dualskew(&["plot", "A:3", "--out", "/nonexistent-dir/x.svg"]);
    assert_eq!(out.status.code(), Some(1));
}
