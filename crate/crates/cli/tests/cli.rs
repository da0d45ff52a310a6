use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use trinorm::report::{read_csv, rows, write_csv, ReportRow, RingName, Status};

fn trinorm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trinorm")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn represent_exit_codes() {
    let o = trinorm(&["represent", "3", "--ring", "eisenstein"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "3 = N(1 + 2ω) = 1² − 1·2 + 2²");

    let o = trinorm(&["represent", "5", "--ring", "eisenstein"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o).trim(), "no representation (5 ≡ 2 mod 3)");

    let o = trinorm(&["represent", "7", "--ring", "gaussian"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o).trim(), "no representation (7 ≡ 3 mod 4)");

    let o = trinorm(&["represent", "2", "--ring", "gaussian"]);
    assert_eq!(o.status.code(), Some(0));

    for bad in [
        &["represent", "9", "--ring", "gaussian"][..],
        &["represent", "0", "--ring", "gaussian"],
        &["represent", "7"],
        &["frobnicate"],
    ] {
        let o = trinorm(bad);
        assert_eq!(o.status.code(), Some(1), "{bad:?}");
    }
    let o = trinorm(&["represent", "91", "--ring", "eisenstein"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("91 is not"));
}

#[test]
fn represent_json() {
    let o = trinorm(&["represent", "13", "--ring", "gaussian", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["p"], 13);
    assert_eq!(v["ring"], "gaussian");
    assert_eq!(v["norm_check"], true);
    let (c, d) = (v["witness"][0].as_i64().unwrap(), v["witness"][1].as_i64().unwrap());
    assert_eq!(c * c + d * d, 13);
    assert_eq!(v["certificate"]["k"], 5);
    assert_eq!(v["certificate"]["stabilizer"].as_array().unwrap().len(), 4);
    assert_eq!(v["certificate"]["conjugator"][2], c);
    assert_eq!(v["certificate"]["conjugator"][3], d);

    let o = trinorm(&["represent", "11", "--ring", "eisenstein", "--json"]);
    assert_eq!(o.status.code(), Some(2));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["witness"].is_null() && v["certificate"].is_null());

    let o = trinorm(&["represent", "3", "--ring", "eisenstein", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["certificate"]["conjugator"], serde_json::json!([1, 0, 2, 1]));
    assert_eq!(v["witness"], serde_json::json!([1, 2]));
}

#[test]
fn big_primes_print_exact_integers() {
    let o = trinorm(&["represent", "1000000000000000009", "--ring", "gaussian", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains(r#""p":1000000000000000009"#), "{text}");
}

#[test]
fn triangle_listings() {
    let o = trinorm(&["triangles", "3", "--orbits"]);
    let text = stdout(&o);
    assert_eq!(text.matches("FIXED").count(), 2);
    assert!(text.contains("(3 + i√3)/6"));

    let o = trinorm(&["triangles", "5", "--orbits"]);
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("k = ")).count(), 6);
    assert_eq!(text.matches("FIXED").count(), 0);
    assert!(text.contains("0 fixed, 2 three-cycles"));

    let o = trinorm(&["triangles", "7"]);
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("k = ")).count(), 10);

    let o = trinorm(&["triangles", "7", "--orbits", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v["triangles"].as_array().unwrap();
    assert_eq!(rows.len(), 10);
    assert_eq!(rows.iter().filter(|r| r["fixed"] == true).count(), 4);

    assert_eq!(trinorm(&["triangles", "2"]).status.code(), Some(1));
    assert_eq!(trinorm(&["triangles", "15"]).status.code(), Some(1));
}

#[test]
fn verify_small() {
    let dir = tempfile::tempdir().unwrap();
    let o = trinorm(&["verify", "--max", "100", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let rows = read_csv(&dir.path().join("report.csv")).unwrap();
    assert_eq!(rows.len(), 50);
    assert!(rows.iter().all(|r| r.checks_passed));
    let summary: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("summary.json")).unwrap()).unwrap();
    assert_eq!(summary["primes"], 25);
    assert_eq!(summary["passed"], true);
    assert_eq!(summary["eisenstein"]["represented"], 12);
    assert_eq!(summary["gaussian"]["represented"], 12);

    let o = trinorm(&["verify", "--max", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 5, "{text}");
    assert!(text.contains("3,EISENSTEIN,REPRESENTED,1,2,2,2,4,true"));

    assert_eq!(trinorm(&["verify", "--max", "2"]).status.code(), Some(1));
}

#[test]
fn unwritable_output_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    std::fs::write(&blocker, "").unwrap();
    let o = trinorm(&["verify", "--max", "5", "--out", blocker.join("sub").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("sub"));
}

#[test]
fn csv_round_trip() {
    let report = trinorm::sweep(60);
    let original = rows(&report);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.csv");
    write_csv(&path, &original).unwrap();
    assert_eq!(read_csv(&path).unwrap(), original);

    let two = &original[..2];
    assert_eq!(
        two[0],
        ReportRow {
            p: 2,
            ring: RingName::Eisenstein,
            status: Status::NoRepresentation,
            a: None,
            b: None,
            fixed_count: 0,
            triangle_count: 0,
            arc_count: 2,
            checks_passed: true,
        }
    );
    for row in &original {
        assert_eq!(row.status == Status::Represented, row.a.is_some());
        assert_eq!(row.arc_count, 2 * (row.p - 1));
        if row.p > 2 {
            assert_eq!(row.triangle_count, 2 * (row.p - 2));
        }
    }
}

#[test]
fn json_round_trip() {
    let report = trinorm::sweep(60);
    let summary = trinorm::json::summary(&report);
    let text = serde_json::to_string(&summary).unwrap();
    let back: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(back, summary);
    for p in ["3", "7", "13", "61"] {
        let o = trinorm(&["represent", p, "--ring", "eisenstein", "--json"]);
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(serde_json::to_string(&v).unwrap(), stdout(&o).trim());
    }
}

fn svg(p: &str, extra: &[&str], dir: &Path) -> String {
    let path = dir.join(format!("p{p}.svg"));
    let mut args = vec!["render", p, "--out", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    let o = trinorm(&args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn svg_is_valid_and_self_contained() {
    let dir = tempfile::tempdir().unwrap();
    for (p, fixed, total) in [("3", 2, 2), ("5", 0, 6), ("7", 4, 10)] {
        let text = svg(p, &[], dir.path());
        let doc = roxmltree::Document::parse(&text).unwrap();
        let root = doc.root_element();
        assert_eq!(root.tag_name().name(), "svg");
        assert_eq!(root.attribute("width"), Some("1024"));
        let paths: Vec<_> = doc.descendants().filter(|n| n.has_tag_name("path")).collect();
        assert_eq!(paths.len(), total);
        let highlighted = paths.iter().filter(|n| n.attribute("class") == Some("triangle fixed")).count();
        assert_eq!(highlighted, fixed);
        let marks = doc.descendants().filter(|n| n.attribute("class") == Some("barycenter")).count();
        assert_eq!(marks, fixed);
        assert!(!text.contains("href") && !text.contains("url("));
    }
}

#[test]
fn svg_options() {
    let dir = tempfile::tempdir().unwrap();
    let small = svg("5", &["--den-limit", "3"], dir.path());
    let doc = roxmltree::Document::parse(&small).unwrap();
    let ford = doc.descendants().find(|n| n.attribute("class") == Some("ford")).unwrap();
    // 0/1 1/1 2/1, 1/2 3/2, 1/3 2/3 4/3 5/3
    assert_eq!(ford.children().filter(|n| n.is_element()).count(), 9);

    let windowed = svg("5", &["--window", "-1/2", "1/3"], dir.path());
    let doc = roxmltree::Document::parse(&windowed).unwrap();
    assert_eq!(doc.descendants().filter(|n| n.has_tag_name("path")).count(), 3);
    assert_eq!(doc.root_element().attribute("width"), Some("426.666666667"));

    let out = dir.path().join("bad.svg");
    for window in [["1", "1"], ["2", "1/2"]] {
        let o = trinorm(&["render", "5", "--out", out.to_str().unwrap(), "--window", window[0], window[1]]);
        assert_eq!(o.status.code(), Some(1));
    }
    let o = trinorm(&["render", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn render_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let first = svg("7", &[], dir.path());
    let second = svg("7", &[], dir.path());
    assert_eq!(first, second);
}
