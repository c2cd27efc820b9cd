mod support;

use serde_json::Value;
use support::{fixture, module_type_qq, qq, temp_file};

#[test]
fn validate_and_info() {
    let o = qq(&["validate", &fixture("worked_example.qq")]);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout, "valid: 5 vertex blocks, 2 edge blocks\n");
    let o = qq(&["info", &fixture("c2m4.qq")]);
    assert!(o.stdout.contains("x -> m: 2  offsets [0, 2]"), "{}", o.stdout);
    assert!(o.stdout.contains("complete: true"));
}

#[test]
fn parse_errors_exit_two_with_location() {
    let path = temp_file("bad.qq", "[vertices]\nv 2\n[edges]\na 3\n[source]\nv a 1\n[range]\nv a 1\n");
    let o = qq(&["validate", &path]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains(":4:1: source map is not unital: edge a: 2 \u{2260} 3"), "{}", o.stderr);
    let o = qq(&["validate", "/nonexistent/file.qq"]);
    assert_eq!(o.code, 2);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(qq(&[]).code, 2);
    assert_eq!(qq(&["frobnicate"]).code, 2);
    assert_eq!(qq(&["diagram", &fixture("worked_example.qq"), "--format", "svg"]).code, 2);
    assert_eq!(qq(&["--help"]).code, 0);
}

#[test]
fn completeness_verdicts() {
    assert_eq!(qq(&["complete", &fixture("c2c4.qq")]).stdout, "complete\n");
    assert_eq!(qq(&["complete", &fixture("c2m4.qq")]).code, 0);
    assert_eq!(qq(&["complete", &fixture("m3_a.qq")]).code, 1);
    let o = qq(&["divcheck", &fixture("cm2.qq")]);
    assert_eq!(o.code, 1);
    assert!(o.stdout.contains("block q of size 2"));
    assert_eq!(qq(&["divcheck", &fixture("worked_example.qq")]).code, 0);
    assert_eq!(qq(&["divcheck", &fixture("c2c4.qq")]).code, 0);
}

#[test]
fn weak_iso_identity_witness() {
    let a = fixture("worked_example.qq");
    let o = qq(&["weak-iso", &a, &a]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("vertex v5 -> v5"));
    assert!(o.stdout.contains("edge a6 -> a6"));
}

#[test]
fn diagrams() {
    let o = qq(&["diagram", &fixture("worked_example.qq")]);
    assert!(o.stdout.starts_with("digraph qq {\n"));
    assert_eq!(o.stdout.matches("e_a6 -> v_v2 [dir=none];").count(), 2);
    let o = qq(&["diagram", &fixture("worked_example.qq"), "--format", "tikz"]);
    assert!(o.stdout.starts_with("\\begin{tikzpicture}"));
}

#[test]
fn lpa_json_schema() {
    let o = qq(&["lpa", &fixture("worked_example.qq"), "--format", "json"]);
    assert_eq!(o.code, 0);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    let gens = v["generators"].as_array().unwrap();
    assert_eq!(gens.len(), 138);
    assert_eq!(gens[0], serde_json::json!({"kind": "rho", "block": "v1", "row": 1, "col": 1}));
    let rels = v["relations"].as_array().unwrap();
    let r2 = rels.iter().find(|r| r["tag"] == "R2").unwrap();
    assert_eq!(
        r2["terms"],
        serde_json::json!([{"coeff": 1, "word": ["rho:v1:1:1"]}, {"coeff": -1, "word": ["1"]}])
    );
    let o = qq(&["lpa", &fixture("worked_example.qq")]);
    assert!(o.stdout.starts_with("generators (138): rho^v1_{1,1}, "));
}

#[test]
fn lpa_matrix_form() {
    let o = qq(&["lpa-matrix", &fixture("worked_example.qq")]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("V_v3 + V_v4 = I_2"), "{}", o.stdout);
}

#[test]
fn lpa_compare_needs_commutative_input() {
    let g = qq(&["from-graph", &fixture("three_edges.graph")]);
    let path = temp_file("three_edges.qq", &g.stdout);
    let o = qq(&["lpa-compare", &path]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("missing: 6"));
    assert_eq!(qq(&["lpa-compare", &fixture("worked_example.qq")]).code, 2);
}

#[test]
fn monoid_json_schema() {
    let o = qq(&["monoid", &fixture("worked_example.qq"), "--json"]);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["generators"][0], "FREE");
    let last = v["relations"].as_array().unwrap().last().unwrap().clone();
    assert_eq!(last["lhs"], serde_json::json!({"P:v1": 2, "P:v2": 2}));
    assert_eq!(last["rhs"], serde_json::json!({"P:v3": 2, "P:v4": 4, "P:v5": 2}));
}

#[test]
fn monoid_eq_verdicts() {
    let worked = fixture("worked_example.qq");
    let o = qq(&["monoid-eq", &worked, "--lhs", "8I", "--rhs", "12I + 2P(v4)"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.starts_with("Equal\n  8 FREE\n"));
    let o = qq(&["monoid-eq", &worked, "--lhs", "8I", "--rhs", "9I"]);
    assert_eq!(o.code, 1);
    assert!(o.stdout.starts_with("NotEqual\n  certificate "));
    let o = qq(&["monoid-eq", &worked, "--lhs", "8I", "--rhs", "P(v9)"]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("--rhs: column 3: unknown vertex `v9`"), "{}", o.stderr);
    let path = temp_file("mt12.qq", &module_type_qq(1, 2));
    assert_eq!(qq(&["monoid-eq", &path, "--lhs", "2I", "--rhs", "4I", "--depth", "4"]).code, 0);
}

#[test]
fn witness_reports() {
    let o = qq(&["verify-thm4", &fixture("worked_example.qq")]);
    assert_eq!(o.code, 1);
    assert!(o.stdout.contains("A is 20x8, B is 8x20"));
    let o = qq(&["verify-thm4", &fixture("worked_example.qq"), "--class", "v3"]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("sink class"));
    let g = qq(&["from-graph", &fixture("two_loops.graph")]);
    let path = temp_file("two_loops.qq", &g.stdout);
    let o = qq(&["verify-thm4", &path, "--json"]);
    assert_eq!(o.code, 0);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["rules"], "classical");
    assert_eq!(v["identities"]["BA"]["inconclusive"], 0);
    let first = &v["identities"]["AB"]["entries"][0];
    assert_eq!(first["verdict"], "confirmed");
    assert_eq!(first["row"], 1);
}

#[test]
fn graph_conversions() {
    let q = qq(&["from-graph", &fixture("three_edges.graph")]);
    let path = temp_file("conv.qq", &q.stdout);
    let g = qq(&["to-graph", &path]);
    assert_eq!(g.stdout, "[vertices]\nu\nw\n[edges]\ne u u\nf u w\ng w w\n");
    assert_eq!(qq(&["to-graph", &fixture("worked_example.qq")]).code, 2);
}
