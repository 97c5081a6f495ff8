use std::collections::BTreeMap;
use std::sync::OnceLock;

use proptest::prelude::*;
use qsp_core::algebra::{CalculusType, Element, Letter};
use qsp_core::calculus::{verify_identity, Calculus};
use qsp_core::exprio::{emit_report, parse_expr, ParseError, Report, ReportFormat};
use qsp_core::Rf;

fn calc() -> &'static Calculus {
    static C: OnceLock<Calculus> = OnceLock::new();
    C.get_or_init(|| Calculus::new(CalculusType::type_ii()).unwrap())
}

#[test]
fn canonical_printing() {
    let c = calc();
    assert_eq!(c.text(&c.parse("px*x").unwrap()), "1 + r*x*px + (r-1)*th*pth");
    assert_eq!(c.text(&c.parse("x - x").unwrap()), "0");
    assert_eq!(c.text(&c.parse("x^-3*th").unwrap()), "x^-3*th");
    assert_eq!(c.text(&c.parse("xi*x").unwrap()), "1");
    assert_eq!(c.text(&c.parse("dx^2").unwrap()), "0");
}

#[test]
fn malformed_input_is_rejected() {
    assert!(matches!(parse_expr("x^q"), Err(ParseError::SyntaxError { .. })));
    assert!(parse_expr("x th").is_err());
    assert!(parse_expr("ix*dx + (q^-1)*(r-1)*dth*ith").is_ok());
    assert!(calc().parse("zz").is_err());
}

#[test]
fn report_schema() {
    let empty = emit_report("II", &BTreeMap::new(), &[], ReportFormat::Json);
    assert_eq!(empty, r#"{"type":"II","paramAssignment":null,"results":[]}"#);
    let c = calc();
    let pass = verify_identity("eq28-x-omegax", c, 3).unwrap();
    let fail = verify_identity("eq51-first-as-printed", c, 3).unwrap();
    let json = emit_report("II", &BTreeMap::new(), &[pass, fail], ReportFormat::Json);
    let report: Report = serde_json::from_str(&json).unwrap();
    assert_eq!(report.results[0].residual, "0");
    assert_eq!(report.results[0].status, "PASS");
    assert_eq!(report.results[1].status, "FAIL");
    assert_eq!(report.results[1].residual, "r-1");
    assert!(report.results[1].known_discrepancy);
    assert!(!report.has_unexpected_failure());
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    for key in ["id", "paperAnchor", "status", "residual", "elapsedMillis"] {
        assert!(value["results"][0].get(key).is_some(), "missing {key}");
    }
    let text = report.to_text();
    assert!(text.lines().any(|l| l.starts_with("eq51-first-as-printed") && l.contains("FAIL*")));
}

fn element() -> impl Strategy<Value = Element> {
    let letters = Letter::all();
    let term = (
        prop::collection::vec(0..letters.len(), 0..=4),
        -3i64..=3,
        0usize..3,
        -2i64..=2,
    );
    prop::collection::vec(term, 0..=3).prop_map(move |terms| {
        let c = calc();
        let n = c.nvars();
        let mut acc = Element::zero(n);
        for (idx, k, var, e) in terms {
            let w: Vec<Letter> = idx.into_iter().map(|i| letters[i]).collect();
            let base = if var == 2 { Rf::int(n, 1) } else { Rf::var(n, var).pow(e).unwrap() };
            let coeff = &base * &Rf::int(n, k);
            acc = acc.add(&c.table().normalize_word(&w).unwrap().scale(&coeff));
        }
        acc
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn print_then_parse_is_identity(e in element()) {
        let c = calc();
        let text = c.text(&e);
        prop_assert_eq!(c.parse(&text).unwrap(), e, "text {}", text);
    }
}
