use ga_core::Multivector;
use serde_json::{json, Map, Value};

use crate::eval::{AssertOutcome, Outcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

/// `{"signature": [p, q], "terms": {"1": 5.0, "e12": -5.0}}` with blades in
/// canonical order.
pub fn to_json(mv: &Multivector) -> Value {
    let terms: Map<String, Value> = mv.terms().map(|(b, c)| (b.to_string(), json!(c))).collect();
    json!({
        "signature": [mv.sig().p(), mv.sig().q()],
        "terms": terms,
    })
}

pub fn render_outcome(outcome: &Outcome, format: OutputFormat) -> String {
    match (format, outcome) {
        (OutputFormat::Text, Outcome::Value(v)) => v.to_string(),
        (OutputFormat::Text, Outcome::Bound { name, value }) => format!("{name} = {value}"),
        (OutputFormat::Text, Outcome::Assert(a)) => render_assert(a),
        (OutputFormat::Json, Outcome::Value(v)) => to_json(v).to_string(),
        (OutputFormat::Json, Outcome::Bound { name, value }) => {
            let mut obj = to_json(value);
            obj["name"] = json!(name);
            obj.to_string()
        }
        (OutputFormat::Json, Outcome::Assert(a)) => json!({
            "passed": a.passed,
            "residual": a.residual,
            "tol": a.tol,
        })
        .to_string(),
    }
}

pub fn render_assert(a: &AssertOutcome) -> String {
    if a.passed {
        "ok".to_string()
    } else {
        format!(
            "assertion failed: residual {:e} exceeds tolerance {:e}",
            a.residual, a.tol
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ga_core::Signature;

    #[test]
    fn json_shape() {
        let g3 = Signature::G3;
        let a = Multivector::vector(g3, &[1.0, 2.0]).unwrap();
        let b = Multivector::vector(g3, &[3.0, 1.0]).unwrap();
        assert_eq!(
            to_json(&(&a * &b)).to_string(),
            r#"{"signature":[3,0],"terms":{"1":5.0,"e12":-5.0}}"#
        );
        assert_eq!(
            to_json(&Multivector::zero(g3)).to_string(),
            r#"{"signature":[3,0],"terms":{}}"#
        );
    }

    #[test]
    fn text_outcomes() {
        let v = Multivector::scalar(Signature::G3, 5.0);
        assert_eq!(render_outcome(&Outcome::Value(v.clone()), OutputFormat::Text), "5");
        let bound = Outcome::Bound {
            name: "a".into(),
            value: v,
        };
        assert_eq!(render_outcome(&bound, OutputFormat::Text), "a = 5");
        assert_eq!(
            render_outcome(&bound, OutputFormat::Json),
            r#"{"signature":[3,0],"terms":{"1":5.0},"name":"a"}"#
        );
    }
}
