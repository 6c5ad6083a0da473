use fixture_support::*;
use kasteleyn::{weight_cocycle, WeightClass, WeightsSpec};
use serde_json::Value;
use spectral_forward::{forward, SpectralJson};
use std::path::PathBuf;
use std::process::{Command, Output};
use torus_graph::GraphSpec;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dimer-spectral"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch(file: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(file)
}

fn g(name: &str) -> String {
    fixture_path(&format!("{name}.graph.json"))
}

fn w(name: &str) -> String {
    fixture_path(&format!("{name}.weights.json"))
}

fn complex(v: &Value) -> (f64, f64) {
    (v["re"].as_f64().unwrap(), v["im"].as_f64().unwrap())
}

#[test]
fn forward_square_divisor_and_casimirs() {
    let out = run(&["forward", "--graph", &g("square"), "--weights", &w("square")]);
    assert!(out.status.success());
    let doc = json(&out);
    assert_eq!(doc["schema"], "dimer-spectral/1");
    let pt = &doc["divisor"][0];
    let (p, pi) = complex(&pt["p"]);
    let (q, qi) = complex(&pt["q"]);
    assert!((p - 1.0 / 42.0).abs() <= 1e-10 * p && (q - 1.0 / 11.0).abs() <= 1e-10 * q && pi == 0.0 && qi == 0.0);
    for (label, value) in [("alpha", "-11/14"), ("beta", "-1/231"), ("gamma", "-210/11"), ("delta", "-77/5")] {
        assert_eq!(doc["infinity"][label]["casimir"]["value"], value, "{label}");
    }
}

#[test]
fn roundtrip_square_report() {
    let path = scratch("square.report.json");
    let out =
        run(&["roundtrip", "--graph", &g("square"), "--weights", &w("square"), "--report", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(doc["max_rel_error"].as_f64().unwrap() <= 1e-9);
    let names: Vec<&str> = doc["quantities"].as_array().unwrap().iter().map(|q| q["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["f1", "f2", "f3", "f4", "A", "B"]);
}

#[test]
fn roundtrip_in_numeric_mode() {
    for name in NAMES {
        let out = run(&["roundtrip", "--graph", &g(name), "--weights", &w(name), "--mode", "numeric", "--jobs", "3"]);
        assert!(out.status.success(), "{name}");
        assert!(json(&out)["max_rel_error"].as_f64().unwrap() <= 1e-6, "{name}");
    }
}

#[test]
fn newton_hexagon_has_genus_two() {
    let doc = json(&run(&["newton", "--graph", &g("hexagon")]));
    assert_eq!(doc["genus"], 2);
    assert_eq!(doc["interior_points"].as_array().unwrap().len(), 2);
    let pts: Vec<Value> = doc["lattice_points"].as_array().unwrap().clone();
    let mut sorted = pts.clone();
    sorted.sort_by_key(|p| (p[0].as_i64(), p[1].as_i64()));
    assert_eq!(pts, sorted);
}

#[test]
fn zigzag_and_kasteleyn_documents() {
    let doc = json(&run(&["zigzag", "--graph", &g("square_octagon")]));
    assert_eq!(doc["zigzags"].as_array().unwrap().len(), 8);
    assert_eq!(doc["minimal"], true);

    let doc = json(&run(&["kasteleyn", "--graph", &g("square"), "--weights", &w("square")]));
    assert_eq!(doc["mode"], "exact");
    assert_eq!(doc["casimirs"]["alpha"]["value"], "-11/14");
    assert_eq!(doc["polynomial"]["terms"].as_array().unwrap().len(), 5);
    assert_eq!(doc["matrix"].as_array().unwrap().len(), 4);
}

#[test]
fn inverse_of_forward_output() {
    let spectral = scratch("hexagon.spectral.json");
    let out = run(&["forward", "--graph", &g("hexagon"), "--weights", &w("hexagon"), "-o", spectral.to_str().unwrap()]);
    assert!(out.status.success());
    let one = run(&["inverse", "--graph", &g("hexagon"), "--spectral", spectral.to_str().unwrap()]);
    let four = run(&["inverse", "--graph", &g("hexagon"), "--spectral", spectral.to_str().unwrap(), "--jobs", "4"]);
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);

    let graph = graph("hexagon");
    let spec: WeightsSpec = serde_json::from_slice(&one.stdout).unwrap();
    let got = WeightClass::<laurent_algebra::Complex64>::from_spec(&graph, &spec).unwrap();
    assert!(got.max_relative_error(&fixture_class(&graph, "hexagon").to_complex()) <= 1e-6);
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["forward", "--graph", &g("square_octagon"), "--weights", &w("square_octagon"), "--mode", "numeric"],
        vec!["roundtrip", "--graph", &g("square_octagon"), "--weights", &w("square_octagon"), "--jobs", "4"],
        vec!["kasteleyn", "--graph", &g("hexagon"), "--weights", &w("hexagon")],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn domain_errors_exit_one_with_an_error_object() {
    let bad = scratch("bad.weights.json");
    std::fs::write(&bad, r#"{"faces": {"f1": "2"}, "A": "1", "B": "1"}"#).unwrap();
    let out = run(&["forward", "--graph", &g("square"), "--weights", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"]["kind"], "MissingWeight");

    let out = run(&["newton", "--graph", "/nonexistent/graph.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"]["kind"], "Io");

    std::fs::write(&bad, r#"{"schema": "dimer-spectral/9", "faces": {}}"#).unwrap();
    let out = run(&["forward", "--graph", &g("square"), "--weights", bad.to_str().unwrap()]);
    assert_eq!(json(&out)["error"]["kind"], "Schema");

    // Forward output has a numeric divisor, which exact mode rejects.
    let spectral = scratch("square.spectral.json");
    run(&["forward", "--graph", &g("square"), "--weights", &w("square"), "-o", spectral.to_str().unwrap()]);
    let out = run(&["inverse", "--graph", &g("square"), "--spectral", spectral.to_str().unwrap(), "--mode", "exact"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"]["kind"], "NotExact");

    let out = run(&["inverse", "--graph", &g("hexagon"), "--spectral", spectral.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let kind = json(&out)["error"]["kind"].as_str().unwrap().to_string();
    assert!(["UnknownZigZag", "DivisorCount", "PolygonMismatch"].contains(&kind.as_str()), "{kind}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["forward", "--graph", &g("square")]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["inverse", "--graph", "x", "--spectral", "y", "--mode", "fuzzy"]).status.code(), Some(2));
}

#[test]
fn exact_inverse_from_a_rational_divisor() {
    let spectral = scratch("square.exact.json");
    let out = run(&["forward", "--graph", &g("square"), "--weights", &w("square")]);
    let mut doc = json(&out);
    doc["divisor"][0]["p"] = serde_json::json!({ "value": "1/42" });
    doc["divisor"][0]["q"] = serde_json::json!({ "value": "1/11" });
    std::fs::write(&spectral, doc.to_string()).unwrap();
    let out = run(&["inverse", "--graph", &g("square"), "--spectral", spectral.to_str().unwrap(), "--mode", "exact"]);
    assert!(out.status.success());
    let back = json(&out);
    assert_eq!(back["faces"]["f1"], "2");
    assert_eq!(back["faces"]["f3"], "5");
    assert_eq!(back["A"], "7");
    assert_eq!(back["B"], "11");
}

#[test]
fn schema_round_trips() {
    for name in NAMES {
        let spec: GraphSpec = serde_json::from_str(&read_fixture(&format!("{name}.graph.json"))).unwrap();
        let again: GraphSpec = serde_json::from_str(&serde_json::to_string(&spec).unwrap()).unwrap();
        assert_eq!(again, spec);

        let wspec = weights_spec(name);
        let again: WeightsSpec = serde_json::from_str(&serde_json::to_string(&wspec).unwrap()).unwrap();
        assert_eq!(again, wspec);

        let gr = graph(name);
        let s = forward(&gr, &weight_cocycle(&gr, &fixture_class(&gr, name)).unwrap(), 1e-9).unwrap();
        let sj = s.to_json(&gr);
        let again: SpectralJson = serde_json::from_str(&serde_json::to_string(&sj).unwrap()).unwrap();
        assert_eq!(again, sj);
    }
}
