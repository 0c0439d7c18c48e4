//! End-to-end tests for the command-line driver: fixture smoke tests,
//! the parser round-trip property, the exit-code property, and JSON
//! schema validation.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::Arc;

use comalg::poly::Coeff;
use comalg::{Ideal, Monomial, PolyRing, Polynomial};
use comalg_cli::parser::{parse_source, SourceDocument};
use comalg_cli::report::{emit_json, exit_code};
use comalg_cli::run_command;
use num_bigint::BigInt;
use proptest::prelude::*;
use serde_json::Value;

fn repo_path(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..").join(rel)
}

fn run(args: &[&str]) -> (i32, String) {
    let argv: Vec<String> = std::iter::once("comalg".to_string())
        .chain(args.iter().map(|s| s.to_string()))
        .collect();
    let mut buf = Vec::new();
    let code = run_command(&argv, &mut buf);
    (code, String::from_utf8(buf).unwrap())
}

#[test]
fn groebner_of_shipped_fixture() {
    let file = repo_path("fixtures/ring_a.ca");
    let (code, text) = run(&["gb", file.to_str().unwrap(), "--order", "grevlex"]);
    assert_eq!(code, 0, "{text}");
    assert!(text.contains("reduced Groebner basis"), "{text}");
}

#[test]
fn props_of_shipped_fixture_is_gorenstein() {
    let file = repo_path("fixtures/ring_a.ca");
    let (code, text) = run(&["props", file.to_str().unwrap(), "--json"]);
    assert_eq!(code, 0, "{text}");
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["gorenstein"], Value::Bool(true));
    assert_eq!(v["dim"], Value::from(3));
    assert_eq!(v["betti_totals"], serde_json::json!([1, 5, 5, 1]));
}

#[test]
fn hilbert_of_artinian_fixture() {
    let file = repo_path("fixtures/noncurvilinear_center_n3.ca");
    let (code, text) = run(&["hilbert", file.to_str().unwrap(), "--json"]);
    assert_eq!(code, 0, "{text}");
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["colength"], Value::from("3"));
}

#[test]
fn saturation_of_fiber_equations() {
    let file = repo_path("fixtures/fiber_equations_n3.ca");
    let (code, text) = run(&[
        "saturate",
        file.to_str().unwrap(),
        "--ideal",
        "F",
        "--by",
        "M",
        "--json",
    ]);
    assert_eq!(code, 0, "{text}");
    let v: Value = serde_json::from_str(&text).unwrap();
    let basis: Vec<String> = v["basis"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_str().unwrap().to_string())
        .collect();
    // the blow-up component satisfies the quadric relation
    assert!(
        basis.iter().any(|g| g.contains("u1^2") && g.contains("u0*u2")),
        "{basis:?}"
    );
}

#[test]
fn chart_of_noncurvilinear_center() {
    let file = repo_path("fixtures/noncurvilinear_center_n3.ca");
    let (code, text) = run(&["chart", file.to_str().unwrap(), "--index", "0", "--json"]);
    assert_eq!(code, 0, "{text}");
    let v: Value = serde_json::from_str(&text).unwrap();
    assert!(v["simplified"].as_array().is_some());
}

#[test]
fn paper_scenario_examples() {
    let (code, text) = run(&["paper", "--scenario", "s2", "--n", "3"]);
    assert_eq!(code, 0, "{text}");
    assert!(text.contains("Gorenstein"), "{text}");
    assert!(text.contains("result: PASS"), "{text}");

    let (code, text) = run(&["paper", "--scenario", "s5", "--n", "3", "--ell-max", "2"]);
    assert_eq!(code, 0, "{text}");
    assert!(text.contains("13"), "{text}");
}

#[test]
fn parse_error_exits_two() {
    let dir = std::env::temp_dir().join("comalg-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("bad.ca");
    std::fs::write(&file, "ideal I(S) = x;").unwrap();
    let (code, _) = run(&["gb", file.to_str().unwrap()]);
    assert_eq!(code, 2);
}

#[test]
fn all_shipped_fixtures_round_trip() {
    let dir = repo_path("fixtures");
    let mut seen = 0;
    for entry in std::fs::read_dir(&dir).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) != Some("ca") {
            continue;
        }
        seen += 1;
        let text = std::fs::read_to_string(&path).unwrap();
        let doc = parse_source(&text)
            .unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        let doc2 = parse_source(&doc.print()).unwrap();
        assert_eq!(doc, doc2, "{}", path.display());
    }
    assert!(seen >= 5, "expected shipped fixtures, found {seen}");
}

// ---------------------------------------------------------------
// JSON schema validation (a small draft-07 subset interpreter that
// covers everything the shipped schema uses)

fn validate(schema: &Value, value: &Value, path: &str) -> Result<(), String> {
    if let Some(types) = schema.get("type") {
        let allowed: Vec<&str> = match types {
            Value::String(s) => vec![s.as_str()],
            Value::Array(a) => a.iter().map(|t| t.as_str().unwrap()).collect(),
            _ => return Err(format!("{path}: bad schema type")),
        };
        let actual = match value {
            Value::Null => "null",
            Value::Bool(_) => "boolean",
            Value::Number(_) => "number",
            Value::String(_) => "string",
            Value::Array(_) => "array",
            Value::Object(_) => "object",
        };
        if !allowed.contains(&actual) {
            return Err(format!("{path}: expected {allowed:?}, got {actual}"));
        }
    }
    if let Some(req) = schema.get("required") {
        let obj = value.as_object().ok_or(format!("{path}: not an object"))?;
        for key in req.as_array().unwrap() {
            let key = key.as_str().unwrap();
            if !obj.contains_key(key) {
                return Err(format!("{path}: missing required key {key}"));
            }
        }
    }
    if let Some(props) = schema.get("properties") {
        if let Some(obj) = value.as_object() {
            for (key, sub) in props.as_object().unwrap() {
                if let Some(v) = obj.get(key) {
                    validate(sub, v, &format!("{path}.{key}"))?;
                }
            }
            let extra = schema.get("additionalProperties");
            for (key, v) in obj {
                if props.as_object().unwrap().contains_key(key) {
                    continue;
                }
                match extra {
                    Some(Value::Bool(false)) => {
                        return Err(format!("{path}: unexpected key {key}"))
                    }
                    Some(sub) if sub.is_object() => {
                        validate(sub, v, &format!("{path}.{key}"))?
                    }
                    _ => {}
                }
            }
        }
    } else if let (Some(Value::Object(sub)), Some(obj)) =
        (schema.get("additionalProperties"), value.as_object())
    {
        for (key, v) in obj {
            validate(&Value::Object(sub.clone()), v, &format!("{path}.{key}"))?;
        }
    }
    if let (Some(items), Some(arr)) = (schema.get("items"), value.as_array()) {
        for (i, v) in arr.iter().enumerate() {
            validate(items, v, &format!("{path}[{i}]"))?;
        }
    }
    Ok(())
}

#[test]
fn scenario_json_validates_against_shipped_schema() {
    let schema: Value =
        serde_json::from_str(&std::fs::read_to_string(repo_path("schema/report.schema.json")).unwrap())
            .unwrap();
    for args in [
        vec!["paper", "--scenario", "s5", "--ell-max", "3", "--json"],
        vec!["paper", "--scenario", "s1", "--n", "2", "--json"],
    ] {
        let (code, text) = run(&args);
        assert_eq!(code, 0, "{text}");
        let report: Value = serde_json::from_str(&text).unwrap();
        validate(&schema, &report, "$").unwrap();
    }
}

// ---------------------------------------------------------------
// Property tests

fn arb_ring() -> impl Strategy<Value = Arc<PolyRing>> {
    (1usize..=4, proptest::collection::vec(1u32..=3, 4)).prop_map(|(n, ws)| {
        let names = ["x", "y", "z", "w"][..n].to_vec();
        PolyRing::new(names, ws[..n].to_vec()).unwrap()
    })
}

fn arb_poly(ring: Arc<PolyRing>) -> impl Strategy<Value = Polynomial> {
    let n = ring.num_vars();
    let term = (
        -9i64..=9,
        1i64..=5,
        proptest::collection::vec(0u32..=3, n),
    );
    proptest::collection::vec(term, 1..=4).prop_map(move |terms| {
        Polynomial::from_terms(
            &ring,
            terms.into_iter().map(|(num, den, exps)| {
                (
                    Monomial(exps),
                    Coeff::new(BigInt::from(num), BigInt::from(den)),
                )
            }),
        )
    })
}

fn arb_document() -> impl Strategy<Value = SourceDocument> {
    arb_ring().prop_flat_map(|ring| {
        proptest::collection::vec(arb_poly(ring.clone()), 1..=3).prop_map(move |gens| {
            SourceDocument {
                rings: vec![("R".to_string(), ring.clone())],
                ideals: vec![("I".to_string(), "R".to_string(), Ideal::new(&ring, gens))],
            }
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// parse(print(document)) is the identity on documents.
    #[test]
    fn print_parse_round_trip(doc in arb_document()) {
        let text = doc.print();
        let parsed = parse_source(&text).unwrap();
        prop_assert_eq!(&doc, &parsed);
    }

    /// Flipping any single check to a failure moves the exit code from
    /// 0 to 1, never to 2.
    #[test]
    fn injected_failure_flips_exit_code(names in proptest::collection::vec("[a-z]{1,8}", 1..6),
                                        victim in 0usize..6) {
        use comalg::scenarios::{Check, ScenarioReport};
        let checks: Vec<Check> = names.iter().map(|n| Check {
            name: n.clone(),
            anchor: "derived-oracle".into(),
            expected: "1".into(),
            actual: "1".into(),
            pass: true,
        }).collect();
        let mut report = ScenarioReport {
            scenario: "prop".into(),
            params: BTreeMap::new(),
            checks,
            assumptions: vec![],
            timing_s: None,
            pass: true,
        };
        prop_assert_eq!(exit_code(&report), 0);
        let k = victim % report.checks.len();
        report.checks[k].pass = false;
        report.checks[k].actual = "2".into();
        report.pass = report.checks.iter().all(|c| c.pass);
        prop_assert_eq!(exit_code(&report), 1);
        // the JSON emitter renders the failure faithfully
        let j = emit_json(&report);
        prop_assert!(j.contains("\"pass\": false"));
    }
}
