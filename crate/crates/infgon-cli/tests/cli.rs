use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn infgon(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_infgon"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json_out(o: &Output) -> Value {
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn hd() -> Value {
    json!({ "kind": "hd", "m": 1, "k": 2, "blocks": [["1'", 1]], "decor": { "1": { "seg": 1, "pos": 0 } } })
}

#[test]
fn complement_of_half_decorated_partition() {
    let out = json_out(&infgon(&["complement", "--kind", "hd"], &hd().to_string()));
    assert_eq!(out["blocks"], json!([["1'"], [1]]));
    assert_eq!(out["decor"]["1"], json!({ "seg": 1, "pos": -1 }));
}

#[test]
fn classify_round_trips_through_the_aisle() {
    let aisle = json_out(&infgon(&["aisle"], &hd().to_string()));
    let back = json_out(&infgon(&["classify"], &aisle.to_string()));
    assert_eq!(back["t_aisle_of"], hd());
    assert_eq!(back["cot_aisle_of"], Value::Null);
    assert_eq!(back["torsion_class"], true);
}

#[test]
fn heart_and_lattice() {
    let heart = json_out(&infgon(&["heart"], &hd().to_string()));
    assert_eq!(heart, json!([[{ "seg": 1, "pos": -2 }, { "seg": 1, "pos": 0 }]]));

    let bottom = json!({ "kind": "hd", "m": 1, "k": 2, "blocks": [["1'"], [1]], "decor": { "1": { "marker": 1 } } });
    let meet = json_out(&infgon(&["lattice", "--op", "meet"], &json!([hd(), bottom]).to_string()));
    assert_eq!(meet["datum"], bottom);
    let join = json_out(&infgon(&["lattice", "--op", "join"], &json!([hd(), bottom]).to_string()));
    assert_eq!(join["datum"], hd());
}

#[test]
fn check_reports_conditions() {
    let aisle = json_out(&infgon(&["aisle"], &hd().to_string()));
    let out = json_out(&infgon(&["check"], &aisle.to_string()));
    assert_eq!(out["PC"], json!([]));
    assert_eq!(out["PT"], true);
    assert_eq!(out["t_aisle"], true);
    assert_eq!(out["cot_aisle"], false);
}

#[test]
fn hom_query() {
    let pair = json!({
        "model": "bar", "m": 1,
        "a": [{ "blob": "1'" }, { "seg": 1, "pos": 0 }],
        "b": [{ "blob": "1'" }, { "seg": 1, "pos": 3 }],
    });
    let out = json_out(&infgon(&["hom"], &pair.to_string()));
    assert_eq!(out["hom"], 1);
    assert_eq!(out["hom_reverse"], 0);
}

#[test]
fn torsion_suite_passes() {
    let o = infgon(&["verify", "--suite", "torsion", "--m", "2", "--window", "6"], "");
    let report = json_out(&o);
    assert_eq!(report["pass"], true);
    assert!(report["instances"].as_u64().unwrap() > 500);
}

#[test]
fn other_suites_pass() {
    for args in [
        &["verify", "--suite", "hom", "--m", "1", "-W", "3"][..],
        &["verify", "--suite", "roundtrip", "--m", "1"],
        &["verify", "--suite", "lattice", "--k", "4"],
        &["verify", "--suite", "counts", "--m", "2"],
    ] {
        assert_eq!(json_out(&infgon(args, ""))["pass"], true, "{args:?}");
    }
}

#[test]
fn enumerate_counts() {
    let out = json_out(&infgon(&["enumerate", "--kind", "alt", "--m", "2", "-W", "1"], ""));
    assert_eq!(out.as_array().unwrap().len(), 2 * 5 * 5);
}

#[test]
fn render_writes_svg() {
    let dir = std::env::temp_dir().join(format!("infgon-render-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("descriptor.json");
    let desc = json_out(&infgon(&["classify"], &hd().to_string()));
    std::fs::write(&input, desc.to_string()).unwrap();
    let svg = dir.join("d.svg");
    let o = infgon(&["render", "--in", input.to_str().unwrap(), "--out", svg.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<svg") && text.contains("<line") && text.contains(r#"fill="black""#));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_with_two() {
    let o = infgon(&["aisle"], "{\"kind\": \"hd\",\n  oops}");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("<stdin>:2:"));
    assert_eq!(infgon(&["verify"], "").status.code(), Some(2));
    assert_eq!(infgon(&["enumerate", "--m", "1"], "").status.code(), Some(2));
    let bad = json!({ "kind": "hd", "m": 1, "k": 2, "blocks": [["1'"], [1]], "decor": { "1": { "accend": "1'" } } });
    assert_eq!(infgon(&["aisle"], &bad.to_string()).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["enumerate", "--kind", "hd", "--m", "2", "-W", "1"];
    assert_eq!(infgon(&args, "").stdout, infgon(&args, "").stdout);
}
