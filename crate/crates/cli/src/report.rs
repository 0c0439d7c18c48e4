//! Text and JSON emitters for scenario reports.

use comalg::scenarios::ScenarioReport;

/// Render a report as an aligned human-readable table.
pub fn emit_text(r: &ScenarioReport) -> String {
    let mut out = String::new();
    let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    out.push_str(&format!("scenario {}  ({})\n", r.scenario, params.join(", ")));
    let name_w = r
        .checks
        .iter()
        .map(|c| c.name.len())
        .chain(["check".len()])
        .max()
        .unwrap_or(5);
    let exp_w = r
        .checks
        .iter()
        .map(|c| c.expected.len().min(28))
        .chain(["expected".len()])
        .max()
        .unwrap_or(8);
    let act_w = r
        .checks
        .iter()
        .map(|c| c.actual.len().min(28))
        .chain(["actual".len()])
        .max()
        .unwrap_or(6);
    out.push_str(&format!(
        "  {:<name_w$}  {:<exp_w$}  {:<act_w$}  result\n",
        "check", "expected", "actual"
    ));
    for c in &r.checks {
        out.push_str(&format!(
            "  {:<name_w$}  {:<exp_w$}  {:<act_w$}  {}\n",
            c.name,
            clip(&c.expected, 28),
            clip(&c.actual, 28),
            if c.pass { "PASS" } else { "FAIL" }
        ));
    }
    for c in &r.checks {
        out.push_str(&format!("  anchor[{}]: {}\n", c.name, c.anchor));
    }
    for a in &r.assumptions {
        out.push_str(&format!("  assumption: {a}\n"));
    }
    match r.timing_s {
        Some(t) => out.push_str(&format!(
            "result: {} ({t:.2} s)\n",
            if r.pass { "PASS" } else { "FAIL" }
        )),
        None => out.push_str(&format!("result: {}\n", if r.pass { "PASS" } else { "FAIL" })),
    }
    out
}

fn clip(s: &str, w: usize) -> String {
    if s.len() <= w {
        s.to_string()
    } else {
        format!("{}...", &s[..w - 3])
    }
}

/// Render a report as JSON with a fixed key order. `timing_s` is kept
/// null so repeated runs are byte-identical.
pub fn emit_json(r: &ScenarioReport) -> String {
    let mut stripped = r.clone();
    stripped.timing_s = None;
    serde_json::to_string_pretty(&stripped).expect("report serialization")
}

/// Process exit code for a finished report: 0 when every check passed,
/// 1 otherwise. Usage and parse errors exit 2 before a report exists.
pub fn exit_code(r: &ScenarioReport) -> i32 {
    if r.pass {
        0
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use comalg::scenarios::{Check, ScenarioReport};
    use std::collections::BTreeMap;

    fn sample(pass: bool) -> ScenarioReport {
        ScenarioReport {
            scenario: "demo".into(),
            params: BTreeMap::from([("n".to_string(), "3".to_string())]),
            checks: vec![Check {
                name: "thing".into(),
                anchor: "derived-oracle".into(),
                expected: "1".into(),
                actual: if pass { "1" } else { "2" }.into(),
                pass,
            }],
            assumptions: vec![],
            timing_s: None,
            pass,
        }
    }

    #[test]
    fn text_has_pass_line() {
        let t = emit_text(&sample(true));
        assert!(t.contains("PASS"));
        assert!(t.ends_with("result: PASS\n"));
    }

    #[test]
    fn json_is_null_timed() {
        let j = emit_json(&sample(true));
        assert!(j.contains("\"timing_s\": null"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&sample(true)), 0);
        assert_eq!(exit_code(&sample(false)), 1);
    }
}
