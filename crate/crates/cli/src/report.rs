//! JSON rendering of mean results.

use bdtw_core::{MeanResult, Weight};
use serde_json::{json, Map, Value};

/// Integral values print as JSON integers, others as floats.
fn number(v: Weight) -> Value {
    if v.is_integer() {
        json!(v.to_integer())
    } else {
        json!(*v.numer() as f64 / *v.denom() as f64)
    }
}

/// `{"optima": [...], "objective": v, "landscape": [...]}`; a non-integral
/// objective also carries its exact value as `"objective_exact": "p/q"`.
pub fn mean_json(result: &MeanResult<Weight>) -> Value {
    let mut out = Map::new();
    out.insert(
        "optima".into(),
        result
            .optimal_candidates
            .iter()
            .map(|z| json!(z.to_string()))
            .collect(),
    );
    out.insert("objective".into(), number(result.objective_value));
    if !result.objective_value.is_integer() {
        out.insert(
            "objective_exact".into(),
            json!(result.objective_value.to_string()),
        );
    }
    out.insert(
        "landscape".into(),
        result
            .landscape
            .iter()
            .map(|e| json!({"length": e.length, "first": e.first, "value": number(e.value)}))
            .collect(),
    );
    Value::Object(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use bdtw_core::{mean_fast, weighted_mean, BinaryString};
    use num_rational::Ratio;

    fn strings(list: &[&str]) -> Vec<BinaryString> {
        list.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn integral_objective() {
        let r = mean_fast(&strings(&["000", "111"]))
            .unwrap()
            .map_values(Ratio::from_integer);
        let v = mean_json(&r);
        assert_eq!(v["optima"], json!(["01", "10"]));
        assert_eq!(v["objective"], json!(2));
        assert!(v.get("objective_exact").is_none());
        assert_eq!(v["landscape"].as_array().unwrap().len(), 4);
    }

    #[test]
    fn fractional_objective() {
        let w = [Ratio::new(1, 2), Ratio::new(1, 3)];
        let r = weighted_mean(&strings(&["000", "111"]), &w).unwrap();
        let v = mean_json(&r);
        assert!(v["objective"].is_f64());
        assert_eq!(v["objective_exact"], json!(r.objective_value.to_string()));
    }
}
