//! Number formatting shared by every output format: 15 significant digits,
//! printed in shortest round-trip form.

use serde_json::Value;

/// Rounds to 15 significant digits. Non-finite values pass through.
pub fn round15(v: f64) -> f64 {
    if !v.is_finite() || v == 0.0 {
        return v;
    }
    format!("{v:.14e}").parse().unwrap_or(v)
}

/// Text form of [`round15`]: `NaN`, `inf` and `-inf` for non-finite values.
pub fn num(v: f64) -> String {
    if v.is_nan() {
        return "NaN".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    format!("{:?}", round15(v))
}

/// Applies [`round15`] to every float in a JSON tree. serde_json already
/// maps non-finite floats to `null`.
pub fn round_json(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            if let Some(r) = n.as_f64().and_then(|f| serde_json::Number::from_f64(round15(f))) {
                *n = r;
            }
        }
        Value::Array(a) => a.iter_mut().for_each(round_json),
        Value::Object(o) => o.values_mut().for_each(round_json),
        _ => {}
    }
}
