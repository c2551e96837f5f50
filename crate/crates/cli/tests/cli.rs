use std::io::Write;
use std::process::{Command, Output};

use jn_core::rational::parse;
use serde_json::Value;

fn jn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jn")).args(args).output().expect("binary runs")
}

fn ok(args: &[&str]) -> String {
    let out = jn(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    jn(args).status.code().expect("exited normally")
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&ok(args)).expect("valid JSON")
}

fn first_column(text: &str) -> Vec<String> {
    text.lines().map(|l| l.split_whitespace().next().unwrap().to_string()).collect()
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines().find_map(|l| l.strip_prefix(key)).map(str::trim).unwrap_or_else(|| panic!("no {key} in\n{text}"))
}

const WORKED: &str = "6,3,3,3,1,1,1,1";

#[test]
fn jumps_examples() {
    let out = ok(&["jumps", "--point-basis", "2,1,1", "--up-to", "3/2"]);
    assert_eq!(first_column(&out), ["5/6", "7/6", "4/3", "3/2"]);
    assert_eq!(first_column(&ok(&["jumps", "--point-basis", "1", "--up-to", "3"])), ["2", "3"]);
    assert_eq!(first_column(&ok(&["jumps", "--char-pairs", "3:2", "--up-to", "1"])), ["5/6"]);
    // Default bound is 2.
    assert_eq!(first_column(&ok(&["jumps", "--point-basis", "1"])), ["2"]);
}

#[test]
fn jumps_json_round_trips() {
    let v = json(&["jumps", "--point-basis", WORKED, "--format", "json"]);
    assert_eq!(v["generators"], serde_json::json!([[6, 9], [3, 22], [1, 67]]));
    assert_eq!(v["caps"], serde_json::json!([3, 1]));
    let jumps = v["jumps"].as_array().unwrap();
    let values: Vec<&str> = jumps.iter().map(|j| j["value"].as_str().unwrap()).collect();
    assert_eq!(&values[..3], ["5/18", "25/66", "14/33"]);
    for s in &values {
        assert_eq!(&parse(s).unwrap().to_string(), s);
    }
    let parsed: Vec<_> = values.iter().map(|s| parse(s).unwrap()).collect();
    assert!(parsed.windows(2).all(|w| w[0] < w[1]));
    for j in jumps {
        let ds = j["decompositions"].as_array().unwrap();
        assert!(!ds.is_empty());
        for d in ds {
            let block = d["block"].as_u64().unwrap();
            assert_eq!(d["m"].is_null(), block == 2, "{d}");
        }
    }
    // The text table lists the same values.
    assert_eq!(first_column(&ok(&["jumps", "--point-basis", WORKED])), values);
}

#[test]
fn input_encodings_agree() {
    let reference = ok(&["info", "--point-basis", WORKED, "--format", "json"]);
    let pick = |s: &str| {
        let mut v: Value = serde_json::from_str(s).unwrap();
        v.as_object_mut().unwrap().remove("input");
        v
    };
    let reference = pick(&reference);
    for args in [
        &["--proximity", "3>1,6>4,7>4", "--points", "8"][..],
        &["--puiseux", "3/2,7/3,2"],
        &["--multiplicity-seq", "6,3,3,3,1,1,1", "--t", "1"],
        &["--char-pairs", "3:2;13:3", "--t", "1"],
    ] {
        let mut full = vec!["info"];
        full.extend_from_slice(args);
        full.extend_from_slice(&["--format", "json"]);
        assert_eq!(pick(&ok(&full)), reference, "{args:?}");
    }
}

#[test]
fn dual_graph_examples() {
    let v = json(&["dual-graph", "--point-basis", WORKED, "--format", "json"]);
    assert_eq!(v["stars"], serde_json::json!([3, 7]));
    assert_eq!(v["ends"], serde_json::json!([1, 2, 5, 8]));
    assert_eq!(v["weights"], serde_json::json!([3, 2, 2, 4, 2, 2, 2, 1]));
    let v = json(&["dual-graph", "--point-basis", "2,1,1", "--format", "json"]);
    assert_eq!(v["weights"], serde_json::json!([3, 2, 1]));
    assert_eq!(v["edges"], serde_json::json!([[1, 3], [2, 3]]));
    let v = json(&["dual-graph", "--point-basis", "1", "--format", "json"]);
    assert_eq!(v["n"], 1);
    assert_eq!(v["edges"], serde_json::json!([]));
    let ascii = ok(&["dual-graph", "--point-basis", "2,1,1", "--format", "ascii"]);
    assert_eq!(ascii, "e1 (w=3, a=2): e3\ne2 (w=2, a=1): e3\ne3 (w=1, a=1): e1 e2\n");
}

#[test]
fn dot_matches_golden_and_is_stable() {
    let golden = include_str!("../../core/tests/golden/worked_example.dot");
    let first = ok(&["dual-graph", "--point-basis", WORKED]);
    assert_eq!(first, golden);
    assert_eq!(ok(&["dual-graph", "--point-basis", WORKED, "--format", "dot"]), first);
}

#[test]
fn info_examples() {
    let out = ok(&["info", "--point-basis", WORKED]);
    assert_eq!(field(&out, "Puiseux β′"), "3/2, 7/3, 2");
    assert_eq!(field(&out, "Γ "), "3, 7");
    assert_eq!(field(&out, "generators"), "(6,9), (3,22), (1,67)");
    let out = ok(&["info", "--point-basis", "1"]);
    assert_eq!((field(&out, "lct"), field(&out, "e ")), ("2", "1"));
    let out = ok(&["info", "--point-basis", "2,1,1"]);
    assert_eq!((field(&out, "lct"), field(&out, "e "), field(&out, "ord")), ("5/6", "6", "2"));
}

#[test]
fn invert_examples() {
    let mut file = tempfile();
    writeln!(file.1, "# jumps of the cusp ideal\n5/6\n7/6\n4/3\n\n3/2   # middle\n5/3\n11/6\n2").unwrap();
    let out = ok(&["invert", "--file", &file.0]);
    assert_eq!((field(&out, "point basis"), field(&out, "ord"), field(&out, "e ")), ("2, 1, 1", "2", "6"));
    assert_eq!(field(&ok(&["invert", "--jumps", "2"]), "point basis"), "1");
    let out = ok(&["invert", "--mode", "curve", "--jumps", "5/6"]);
    assert_eq!(field(&out, "sequence"), "2, 1, 1");
    // Jumps from the jumps command invert back to the input.
    let v = json(&["jumps", "--point-basis", WORKED, "--format", "json"]);
    let list: Vec<&str> = v["jumps"].as_array().unwrap().iter().map(|j| j["value"].as_str().unwrap()).collect();
    let back = json(&["invert", "--jumps", &list.join(","), "--format", "json"]);
    assert_eq!(back["result"]["point_basis"], serde_json::json!([6, 3, 3, 3, 1, 1, 1, 1]));
    let back = json(&["invert", "--mode", "curve", "--jumps", &list.join(","), "--format", "json"]);
    assert_eq!(back["multiplicity_sequence"], serde_json::json!([6, 3, 3, 3, 1, 1, 1]));
    assert_eq!(back["characteristic_pairs"], serde_json::json!([[3, 2], [13, 3]]));
    std::fs::remove_file(&file.0).unwrap();
}

#[test]
fn verify_examples() {
    let out = ok(&["verify", "--point-basis", WORKED, "--up-to", "2"]);
    assert!(out.starts_with("PASS 6,3,3,3,1,1,1,1"), "{out}");
    assert!(out.ends_with("1 passed, 0 failed\n"));
    assert!(ok(&["verify", "--point-basis", "1", "--up-to", "5"]).starts_with("PASS 1:"));
    let v = json(&["verify", "--random", "8", "30", "200", "42", "--format", "json"]);
    assert_eq!((v["passed"].as_u64(), v["failed"].as_u64()), (Some(200), Some(0)));
    let inputs: Vec<&str> = v["instances"].as_array().unwrap().iter().map(|i| i["input"].as_str().unwrap()).collect();
    // Same seed, same corpus, same order.
    let again = ok(&["verify", "--random", "8", "30", "10", "42"]);
    let labels: Vec<&str> = again.lines().take(10).map(|l| l[5..].split(':').next().unwrap()).collect();
    assert_eq!(labels, &inputs[..10]);
}

#[test]
fn exit_codes() {
    // Parse errors.
    assert_eq!(code(&["jumps", "--point-basis", "2,x"]), 2);
    assert_eq!(code(&["jumps", "--point-basis", "2,1,1", "--up-to", "0.5"]), 2);
    assert_eq!(code(&["jumps"]), 2);
    assert_eq!(code(&["jumps", "--point-basis", "1", "--puiseux", "2"]), 2);
    assert_eq!(code(&["jumps", "--char-pairs", "3-2"]), 2);
    assert_eq!(code(&["invert", "--jumps", "1/0"]), 2);
    assert_eq!(code(&["nonsense"]), 2);
    // Validation errors.
    assert_eq!(code(&["jumps", "--point-basis", "2,1"]), 3);
    assert_eq!(code(&["jumps", "--point-basis", "0"]), 3);
    assert_eq!(code(&["jumps", "--point-basis", "2,1,1", "--up-to", "0"]), 3);
    assert_eq!(code(&["info", "--proximity", "4>1,4>2"]), 3);
    assert_eq!(code(&["info", "--char-pairs", "4:2"]), 3);
    assert_eq!(code(&["info", "--multiplicity-seq", "2,1"]), 3);
    // Malformed jump sets.
    assert_eq!(code(&["invert", "--jumps", "5/6,2"]), 4);
    assert_eq!(code(&["invert", "--jumps", "1/2,2"]), 4);
    assert_eq!(code(&["invert", "--mode", "curve", "--jumps", "1/3"]), 4);
    let out = jn(&["invert", "--jumps", "5/6,2"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("malformed jump set"));
}

fn tempfile() -> (String, std::fs::File) {
    let path = std::env::temp_dir().join(format!("jn-cli-test-{}.txt", std::process::id()));
    let file = std::fs::File::create(&path).unwrap();
    (path.to_string_lossy().into_owned(), file)
}
