//! Number formatting shared by the output formats.

use pcheb_core::Poly;
use serde_json::{Number, Value};

/// Coefficients as a JSON array of (arbitrarily large) integers.
pub fn coeffs_json(p: &Poly) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| Value::Number(c.to_string().parse::<Number>().expect("integer literal")))
            .collect(),
    )
}

/// Shortest representation that parses back to the same `f64`.
pub fn float_cell(x: f64) -> String {
    format!("{x:?}")
}

pub fn opt_float_cell(x: Option<f64>) -> String {
    x.map(float_cell).unwrap_or_default()
}
