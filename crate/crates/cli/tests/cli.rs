use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::{json, Value};
use skb_core::brace::trivial_brace;
use skb_core::enumeration::{braces_of_order_with_cap, catalog_query};
use skb_core::fixtures::{irretractable_four_point_solution, s4_exact_factorization};
use skb_core::group::{cyclic, GroupTable};
use skb_core::io::{BraceFile, SolutionFile};
use skb_core::SkewBrace;
use tempfile::TempDir;

fn skb(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_skb")).args(args).output().expect("runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let v = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("not JSON ({e}): {stdout}"));
    (out.status.code().unwrap(), v)
}

fn write(dir: &TempDir, name: &str, v: &impl serde::Serialize) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, serde_json::to_vec(v).unwrap()).unwrap();
    p
}

fn brace_file(dir: &TempDir, name: &str, a: &SkewBrace) -> PathBuf {
    write(dir, name, &BraceFile::from_brace(a))
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn failed_checks(v: &Value) -> Vec<&Value> {
    v["verdicts"].as_array().unwrap().iter().filter(|c| c["passed"] == false).collect()
}

#[test]
fn validate_exit_codes() {
    let dir = TempDir::new().unwrap();
    let ok = brace_file(&dir, "c4.json", &trivial_brace(cyclic(4)));
    let (code, v) = skb(&["validate", s(&ok)]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);
    assert_eq!(v["inputs"][0]["kind"], "brace");
    assert_eq!(v["inputs"][0]["sha256"].as_str().unwrap().len(), 64);

    let table = json!({ "table": [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]});
    let loop5 = write(&dir, "loop.json", &table);
    let (code, v) = skb(&["validate", s(&loop5)]);
    assert_eq!(code, 1);
    assert_eq!(failed_checks(&v)[0]["witness"].as_array().unwrap().len(), 3);

    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, "{\"table\": [[0]").unwrap();
    let (code, v) = skb(&["validate", s(&broken)]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "input");
}

#[test]
fn validate_relabels_identity_and_checks_solutions() {
    let dir = TempDir::new().unwrap();
    // C2 with identity at label 1
    let g = write(&dir, "c2.json", &json!({ "table": [[1, 0], [0, 1]] }));
    let (code, v) = skb(&["validate", s(&g)]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["identity_relabelled_from"], 1);

    let sol = write(&dir, "four.json", &SolutionFile::from_solution(&irretractable_four_point_solution()));
    let (code, v) = skb(&["validate", s(&sol)]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["involutive"], true);

    // r(x, y) = (x + y, y) on Z/3 is bijective but not braided
    let sigma: Vec<Vec<usize>> = (0..3).map(|x| (0..3).map(|y| (x + y) % 3).collect()).collect();
    let tau: Vec<Vec<usize>> = (0..3).map(|y| vec![y; 3]).collect();
    let bad = write(&dir, "bad.json", &json!({ "sigma": sigma, "tau": tau }));
    let (code, v) = skb(&["validate", s(&bad)]);
    assert_eq!(code, 1);
    assert_eq!(failed_checks(&v)[0]["name"], "braid_relation");
}

#[test]
fn analyze_reports() {
    let dir = TempDir::new().unwrap();
    let c4 = brace_file(&dir, "c4.json", &trivial_brace(cyclic(4)));
    let (code, v) = skb(&["analyze", s(&c4)]);
    assert_eq!(code, 0);
    assert!(v["result"]["characteristic_ideals"].as_array().unwrap().contains(&json!([0, 2])));

    let zero = brace_file(&dir, "zero.json", &trivial_brace(GroupTable::trivial()));
    let (_, v) = skb(&["analyze", s(&zero)]);
    assert_eq!(v["result"]["socle"], json!([0]));
    assert_eq!(v["result"]["simple"], false);

    let s4 = brace_file(&dir, "s4.json", &s4_exact_factorization().brace);
    let (code, v) = skb(&["analyze", s(&s4)]);
    assert_eq!(code, 0);
    let square = &v["result"]["right_series"][1];
    assert!(square.as_array().unwrap().len() > 1);

    let sol = write(&dir, "four.json", &SolutionFile::from_solution(&irretractable_four_point_solution()));
    assert_eq!(skb(&["analyze", s(&sol)]).0, 2);
}

#[test]
fn factorize_examples() {
    let dir = TempDir::new().unwrap();
    let c6 = brace_file(&dir, "c6.json", &trivial_brace(cyclic(6)));
    let (code, v) = skb(&["factorize", s(&c6), "--verify-ito"]);
    assert_eq!(code, 0);
    let fs = v["result"]["factorizations"].as_array().unwrap();
    assert_eq!(fs.len(), 1);
    let sizes = [fs[0]["b"].as_array().unwrap().len(), fs[0]["c"].as_array().unwrap().len()];
    assert!(sizes == [2, 3] || sizes == [3, 2]);

    let c5 = brace_file(&dir, "c5.json", &trivial_brace(cyclic(5)));
    let (code, v) = skb(&["factorize", s(&c5)]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["count"], 0);

    let cat = braces_of_order_with_cap(8, 8).unwrap();
    let hits = catalog_query(&cat, "add=C2^3,mult=D8,right_nilpotent=true,trivial_trivial=true").unwrap();
    let f = brace_file(&dir, "b8.json", hits[0]);
    let (code, v) = skb(&["factorize", s(&f), "--trivial", "--verify-ito", "--verify-class4"]);
    assert_eq!(code, 0, "{v}");
    assert!(v["result"]["count"].as_u64().unwrap() >= 1);
}

#[test]
fn solution_examples() {
    let dir = TempDir::new().unwrap();
    let c3 = brace_file(&dir, "c3.json", &trivial_brace(cyclic(3)));
    let (code, v) = skb(&["solution", s(&c3), "--export"]);
    assert_eq!(code, 0);
    let id: Vec<Vec<usize>> = vec![vec![0, 1, 2]; 3];
    assert_eq!(v["result"]["solution"]["sigma"], json!(id));
    assert_eq!(v["result"]["solution"]["tau"], json!(id));

    let four = write(&dir, "four.json", &SolutionFile::from_solution(&irretractable_four_point_solution()));
    let (code, v) = skb(&["solution", s(&four), "--level", "--retract"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["level"], json!({ "verdict": "Stalled", "steps": 0 }));
    assert_eq!(v["result"]["retraction"]["representatives"], json!([0, 1, 2, 3]));

    let c6 = brace_file(&dir, "c6.json", &trivial_brace(cyclic(6)));
    let (code, v) = skb(&["solution", s(&c6), "--decompose", "--level"]);
    assert_eq!(code, 0);
    assert!(!v["result"]["decompositions"].as_array().unwrap().is_empty());
    assert_eq!(v["result"]["level"], json!({ "verdict": "Level", "steps": 1 }));

    // r_A of a non-abelian trivial brace is not involutive
    let s3 = brace_file(&dir, "s3.json", &trivial_brace(skb_core::group::symmetric(3)));
    let (code, v) = skb(&["solution", s(&s3), "--level"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "precondition");
}

#[test]
fn enumerate_examples() {
    let (code, v) = skb(&["enumerate", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["count"], 1);

    let dir = TempDir::new().unwrap();
    let out = dir.path().join("cat6");
    let (code, v) = skb(&["enumerate", "6", "--oracle-check", "--out", s(&out)]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["verdicts"][0]["name"], "oracle_matches_catalog");
    let manifest: Value = serde_json::from_slice(&std::fs::read(out.join("manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["count"], 6);
    assert_eq!(manifest["provenance"], "holomorph");
    assert!(out.join("brace_6_005.json").exists());

    let (code, v) = skb(&["enumerate", "100"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "order-cap-exceeded");

    let (code, v) = skb(&["enumerate", "8", "--where", "add=C2^3,mult=D8,right_nilpotent=false"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["matches"].as_array().unwrap().len(), 1);
    assert_eq!(skb(&["enumerate", "4", "--where", "colour=red"]).0, 2);
}

#[test]
fn suite_examples() {
    for (name, n) in [("lemmas", "6"), ("ito", "8"), ("charsimple", "1")] {
        let (code, v) = skb(&["suite", name, n]);
        assert_eq!(code, 0, "{name} {n}: {v}");
        assert_eq!(v["verdicts"][0]["name"], name);
    }
    let (_, v) = skb(&["suite", "charsimple", "1"]);
    assert_eq!(v["result"]["cases"], 0);
    assert_eq!(skb(&["suite", "nope", "3"]).0, 2);
}

#[test]
fn pretty_output_is_text() {
    let out = Command::new(env!("CARGO_BIN_EXE_skb")).args(["suite", "axioms", "3", "--pretty"]).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS  axioms"), "{text}");
    assert!(serde_json::from_str::<Value>(&text).is_err());
}
