//! Rendering of flat records as aligned tables or JSON.

use serde::Serialize;
use serde_json::Value;

/// Renders `record`, which must serialize to a flat object, either as one
/// JSON line or as `key  value` lines.
pub fn render<T: Serialize>(record: &T, json: bool) -> String {
    let value = serde_json::to_value(record).expect("records serialize to JSON");
    if json {
        return format!("{value}\n");
    }
    let Value::Object(map) = value else {
        panic!("records must be objects");
    };
    let width = map.keys().map(String::len).max().unwrap_or(0);
    let mut out = String::new();
    for (key, value) in &map {
        let text = match value {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        out.push_str(&format!("{key:<width$}  {text}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize)]
    struct Row {
        kappa_exact: f64,
        region: &'static str,
    }

    #[test]
    fn table_and_json() {
        let row = Row {
            kappa_exact: 0.5,
            region: "gap",
        };
        assert_eq!(render(&row, false), "kappa_exact  0.5\nregion       gap\n");
        assert_eq!(render(&row, true), "{\"kappa_exact\":0.5,\"region\":\"gap\"}\n");
    }
}
