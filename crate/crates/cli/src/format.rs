//! Number rendering, JSON rounding and aligned text tables.

use serde_json::{Map, Number, Value};
use spectra_core::rational::{rationalize, MAX_DENOMINATOR};

/// Rounds to 15 significant decimal digits.
pub fn sig15(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.14e}").parse().unwrap_or(x)
}

/// Shortest text that reads back as `sig15(x)`.
pub fn num(x: f64) -> String {
    let r = sig15(x);
    if r == 0.0 || !r.is_finite() || (1e-5..1e15).contains(&r.abs()) {
        format!("{r}")
    } else {
        format!("{r:e}")
    }
}

/// `num(x)`, followed by the nearest small-denominator fraction when asked.
pub fn num_with(x: f64, rational: bool) -> String {
    match (rational, rationalize(x, MAX_DENOMINATOR)) {
        (true, Some(f)) => format!("{} ({f})", num(x)),
        _ => num(x),
    }
}

/// Rounds every floating-point number in the tree to 15 significant digits.
pub fn round_floats(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().unwrap_or(f64::NAN);
            Number::from_f64(sig15(x)).map_or(Value::Null, Value::Number)
        }
        Value::Array(a) => Value::Array(a.into_iter().map(round_floats).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, round_floats(v))).collect()),
        other => other,
    }
}

/// The same tree with floats replaced by fraction strings; integers,
/// booleans and strings are dropped.
fn rationalized(v: &Value) -> Option<Value> {
    match v {
        Value::Number(n) if n.is_f64() => Some(
            n.as_f64()
                .and_then(|x| rationalize(x, MAX_DENOMINATOR))
                .map_or(Value::Null, |f| Value::String(f.to_string())),
        ),
        Value::Array(a) => {
            let items: Vec<Value> = a.iter().map(|x| rationalized(x).unwrap_or(Value::Null)).collect();
            items.iter().any(|x| !x.is_null()).then_some(Value::Array(items))
        }
        Value::Object(o) => {
            let map: Map<String, Value> = o
                .iter()
                .filter_map(|(k, v)| rationalized(v).map(|r| (k.clone(), r)))
                .collect();
            (!map.is_empty()).then_some(Value::Object(map))
        }
        _ => None,
    }
}

/// Adds a `"rationalized"` member mirroring the floats of an object.
pub fn with_rationalized(v: Value) -> Value {
    match v {
        Value::Object(mut o) => {
            if let Some(r) = rationalized(&Value::Object(o.clone())) {
                o.insert("rationalized".into(), r);
            }
            Value::Object(o)
        }
        other => other,
    }
}

/// Columns padded to a common width. The first column is left-aligned; the
/// rest are right-aligned for numbers and left-aligned for prose.
pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
    numeric: bool,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
            numeric: true,
        }
    }

    pub fn prose(header: &[&str]) -> Self {
        Table {
            numeric: false,
            ..Table::new(header)
        }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }

    pub fn render(&self) -> String {
        let cols = self.header.len();
        let mut width = vec![0; cols];
        for r in std::iter::once(&self.header).chain(&self.rows) {
            for (w, c) in width.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |r: &[String]| {
            let cells: Vec<String> = r
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    if i == 0 || !self.numeric {
                        format!("{c:<w$}", w = width[i])
                    } else {
                        format!("{c:>w$}", w = width[i])
                    }
                })
                .collect();
            cells.join("  ").trim_end().to_string()
        };
        let mut out = line(&self.header);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&line(r));
            out.push('\n');
        }
        out
    }
}
