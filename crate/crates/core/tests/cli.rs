use std::process::{Command, Output};
use std::sync::OnceLock;

use gf2bup::Poly;
use serde_json::Value;

fn gf2bup(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gf2bup"))
        .args(args)
        .env("GF2BUP_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn validator() -> &'static jsonschema::Validator {
    static V: OnceLock<jsonschema::Validator> = OnceLock::new();
    V.get_or_init(|| {
        let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/docs/schema.json")).unwrap();
        let schema: Value = serde_json::from_str(&text).unwrap();
        jsonschema::draft202012::new(&schema).expect("schema compiles")
    })
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = gf2bup(&full);
    let text = stdout(&out);
    let value: Value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{args:?}: {e}\n{text}"));
    let errors: Vec<String> = validator().iter_errors(&value).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{args:?} violates the schema: {errors:?}");
    (out.status.code().unwrap(), value)
}

fn p(s: &str) -> Poly {
    s.parse().unwrap()
}

#[test]
fn factor_prints_the_product() {
    let out = gf2bup(&["factor", "1+x^5+x^10"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.trim(), "(x^2+x+1)*(x^4+x+1)*(x^4+x^3+1)");
    // same value as the product written in any other order
    assert_eq!(p(text.trim()), p("(x^4+x+1)*(x^2+x+1)*(x^4+x^3+1)"));
}

#[test]
fn sigma_bistar_of_x_squared() {
    let out = gf2bup(&["sigma", "--kind", "bistar", "x^2"]);
    assert_eq!(stdout(&out), "(x+1)^2\n");
    let out = gf2bup(&["--style", "hex", "sigma", "--kind", "sigma", "x^2"]);
    assert_eq!(stdout(&out), "0x7\n");
}

#[test]
fn check_resolves_catalog_names() {
    assert_eq!(stdout(&gf2bup(&["check", "--bup", "@C1"])), "true\n");
    assert_eq!(stdout(&gf2bup(&["check", "--bup", "@d2"])), "true\n");
    assert_eq!(stdout(&gf2bup(&["check", "--bup", "x^8*(x+1)^8*@M5"])), "false\n");
    assert_eq!(stdout(&gf2bup(&["check", "--irreducible", "1+x^5+x^10+x^15+x^20"])), "true\n");
    assert_eq!(stdout(&gf2bup(&["check", "--mersenne", "@M4"])), "true\n");
    assert_eq!(stdout(&gf2bup(&["check", "--ibup", "x^3*(x+1)^3"])), "true\n");
    assert_eq!(stdout(&gf2bup(&["check", "--odd", "x^2+x"])), "false\n");
    assert_eq!(gf2bup(&["check", "--bup", "x"]).status.code(), Some(0));
}

#[test]
fn blind_search_includes_c1() {
    let out = gf2bup(&["search", "--blind", "--max-degree", "12", "--max-omega", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().any(|l| l.trim_start().starts_with("C1 ") && l.contains("deg  9")));
    let (code, v) = json(&["search", "--case", "blind", "--max-degree", "12", "--max-omega", "3"]);
    assert_eq!(code, 0);
    let c1 = v["hits"].as_array().unwrap().iter().find(|h| h["label"] == "C1").unwrap();
    assert_eq!(c1["degree"], 9);
    assert_eq!(p(c1["poly_hex"].as_str().unwrap()), p("x^3*(x+1)^4*(x^2+x+1)"));
}

#[test]
fn verify_all_passes() {
    let (code, v) = json(&["verify", "--all"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "pass");
    let cases: Vec<&str> =
        v["reports"].as_array().unwrap().iter().map(|r| r["case_id"].as_str().unwrap()).collect();
    assert_eq!(cases, vec!["omega3", "omega4_mersenne", "omega4_nonmersenne", "blind"]);
    let text = stdout(&gf2bup(&["verify"]));
    assert!(text.ends_with(")\n") && text.contains("verdict: pass"), "{text}");
}

#[test]
fn every_verb_emits_schema_valid_json() {
    let cases: &[&[&str]] = &[
        &["factor", "1+x^5+x^10"],
        &["factor", "1"],
        &["sigma", "--kind", "star", "@M1"],
        &["sigma", "--kind", "sigma", "x^4"],
        &["check", "--perfect", "x*(x+1)"],
        &["check", "--unitary-perfect", "x*(x+1)"],
        &["mersenne", "--max-degree", "8"],
        &["catalog"],
        &["catalog", "D2"],
        &["search", "--case", "omega3"],
        &["search", "--case", "omega4-mersenne"],
        &["search", "--case", "omega4-nonmersenne", "--divisor-cap", "64"],
        &["verify"],
    ];
    for args in cases {
        let (code, v) = json(args);
        assert_eq!(code, 0, "{args:?}");
        assert_eq!(v["verb"], args[0]);
    }
}

#[test]
fn json_polynomials_round_trip() {
    let (_, v) = json(&["catalog"]);
    for e in v["entries"].as_array().unwrap() {
        assert_eq!(p(e["poly_hex"].as_str().unwrap()), p(e["poly"].as_str().unwrap()));
        assert_eq!(p(e["factored"].as_str().unwrap()), p(e["poly"].as_str().unwrap()));
    }
    let (_, v) = json(&["search", "--case", "omega4-mersenne"]);
    for h in v["hits"].as_array().unwrap() {
        assert_eq!(p(h["poly_hex"].as_str().unwrap()), p(h["factored"].as_str().unwrap()));
    }
}

#[test]
fn text_output_round_trips_in_every_style() {
    for style in ["sum", "hex", "factored"] {
        let out = stdout(&gf2bup(&["--style", style, "factor", "x^7*(x+1)^8*@M5"]));
        assert_eq!(p(out.trim()), p("x^7*(x+1)^8*(1+x^3+x^4)"), "{style}");
        let out = stdout(&gf2bup(&["--style", style, "sigma", "@C6"]));
        assert_eq!(p(out.trim()), p("x^7*(x+1)^8*(1+x^3+x^4)"), "{style}");
    }
}

#[test]
fn usage_errors_exit_2_with_a_diagnostic() {
    for args in [
        &["frobnicate"][..],
        &["factor"],
        &["factor", "x", "--bogus"],
        &["check", "x"],
        &["check", "--bup", "--odd", "x"],
        &["search"],
        &["search", "--case", "omega5"],
        &["search", "--case", "omega3", "--max-omega", "3"],
        &["search", "--blind", "--max-degree", "40"],
        &["search", "--blind", "--max-omega", "5"],
        &["--format", "yaml", "catalog"],
    ] {
        let out = gf2bup(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(stdout(&out).is_empty(), "{args:?}");
        assert!(!stderr(&out).is_empty(), "{args:?}");
    }
}

#[test]
fn input_errors_report_a_position() {
    let out = gf2bup(&["factor", "x^2+y"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("parse error at byte 4"), "{}", stderr(&out));
    let out = gf2bup(&["sigma", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = gf2bup(&["catalog", "C14"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("C14"));
    let out = gf2bup(&["factor", "x^99999999999"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("overflow"));
}

#[test]
fn help_and_version_exit_0() {
    assert_eq!(gf2bup(&["--help"]).status.code(), Some(0));
    assert_eq!(gf2bup(&["--version"]).status.code(), Some(0));
    assert!(stdout(&gf2bup(&["search", "--help"])).contains("omega4-nonmersenne"));
}
