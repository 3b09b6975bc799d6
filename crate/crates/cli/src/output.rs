//! Rendering helpers shared by the subcommands.

use num_bigint::BigInt;
use regionum::LaurentPoly;
use serde_json::{json, Value};

pub fn ints(word: &[i32]) -> String {
    word.iter().map(i32::to_string).collect::<Vec<_>>().join(" ")
}

pub fn ids(regions: &[usize]) -> String {
    regions.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn exact_number(c: &BigInt) -> Value {
    match i64::try_from(c) {
        Ok(v) => json!(v),
        Err(_) => json!(c.to_string()),
    }
}

/// `[[k, c], ...]` for `Σ c·t^{k/2}`; coefficients beyond i64 are strings.
pub fn poly_json(poly: &LaurentPoly) -> Value {
    match poly.t_half_terms() {
        Some(terms) => Value::Array(terms.iter().map(|(k, c)| json!([k, exact_number(c)])).collect()),
        None => Value::Null,
    }
}

/// `t^3 + t - t^4`-style text with half-integer exponents written as `t^(k/2)`.
pub fn poly_text(poly: &LaurentPoly) -> String {
    let Some(terms) = poly.t_half_terms() else {
        return format!("{poly} (in A)");
    };
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (k, c)) in terms.iter().enumerate() {
        let negative = c.sign() == num_bigint::Sign::Minus;
        let mag = c.magnitude().to_string();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let power = match (k % 2 == 0, k / 2) {
            (true, 0) => String::new(),
            (true, 1) => "t".to_string(),
            (true, e) => format!("t^{e}"),
            (false, _) => format!("t^({k}/2)"),
        };
        match (mag.as_str(), power.is_empty()) {
            (m, true) => out.push_str(m),
            ("1", false) => out.push_str(&power),
            (m, false) => out.push_str(&format!("{m}{power}")),
        }
    }
    out
}

/// Minimal CSV quoting.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn csv_row<I: IntoIterator<Item = String>>(fields: I) -> String {
    fields.into_iter().map(|f| csv_field(&f)).collect::<Vec<_>>().join(",")
}
