//! Output records and their JSON, CSV and text renderings.

use std::fmt::Write as _;
use std::str::FromStr;

use num_complex::Complex;
use serde_json::{Map, Number, Value};

pub const SCHEMA: &str = "capmap/1";

#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Real(f64),
    Complex(Complex<f64>),
    Int(usize),
    Text(String),
    Reals(Vec<f64>),
    Points(Vec<Complex<f64>>),
}

/// An ordered set of named values, possibly grouped into blocks.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    pub command: String,
    pub blocks: Vec<(String, Vec<(String, Field)>)>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report { command: command.into(), blocks: Vec::new() }
    }

    pub fn block(&mut self, name: &str) -> &mut Vec<(String, Field)> {
        self.blocks.push((name.into(), Vec::new()));
        &mut self.blocks.last_mut().expect("just pushed").1
    }
}

/// A float with 17 significant digits, as a JSON number.
pub fn json_real(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    Number::from_str(&format!("{x:.16e}")).map(Value::Number).unwrap_or(Value::Null)
}

pub fn json_complex(z: Complex<f64>) -> Value {
    let mut m = Map::new();
    m.insert("re".into(), json_real(z.re));
    m.insert("im".into(), json_real(z.im));
    Value::Object(m)
}

fn json_field(f: &Field) -> Value {
    match f {
        Field::Real(x) => json_real(*x),
        Field::Complex(z) => json_complex(*z),
        Field::Int(n) => Value::from(*n),
        Field::Text(s) => Value::from(s.as_str()),
        Field::Reals(v) => Value::Array(v.iter().map(|&x| json_real(x)).collect()),
        Field::Points(v) => Value::Array(v.iter().map(|&z| json_complex(z)).collect()),
    }
}

fn fields_object(fields: &[(String, Field)]) -> Map<String, Value> {
    fields.iter().map(|(k, f)| (k.clone(), json_field(f))).collect()
}

pub fn document(command: &str) -> Map<String, Value> {
    let mut doc = Map::new();
    doc.insert("schema".into(), Value::from(SCHEMA));
    doc.insert("command".into(), Value::from(command));
    doc
}

pub fn to_json(r: &Report) -> String {
    let mut doc = document(&r.command);
    for (name, fields) in &r.blocks {
        doc.insert(name.clone(), Value::Object(fields_object(fields)));
    }
    let mut s = serde_json::to_string_pretty(&Value::Object(doc)).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn text_real(x: f64) -> String {
    format!("{x:.16}")
}

fn text_complex(z: Complex<f64>) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{:.16} {sign} {:.16}i", z.re, z.im.abs())
}

fn text_field(f: &Field) -> String {
    match f {
        Field::Real(x) => text_real(*x),
        Field::Complex(z) => text_complex(*z),
        Field::Int(n) => n.to_string(),
        Field::Text(s) => s.clone(),
        Field::Reals(v) => v.iter().map(|&x| text_real(x)).collect::<Vec<_>>().join(", "),
        Field::Points(v) => v.iter().map(|&z| text_complex(z)).collect::<Vec<_>>().join(", "),
    }
}

pub fn to_text(r: &Report) -> String {
    let mut out = String::new();
    for (name, fields) in &r.blocks {
        let _ = writeln!(out, "[{name}]");
        let width = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, f) in fields {
            let _ = writeln!(out, "  {k:<width$}  {}", text_field(f));
        }
    }
    out
}

/// block,key,value rows; complex values as `re+imi` with full digits.
pub fn to_csv(r: &Report) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["block", "key", "value"])?;
    for (name, fields) in &r.blocks {
        for (k, f) in fields {
            let v = match f {
                Field::Real(x) => format!("{x:.16e}"),
                Field::Complex(z) => format!("{:.16e}{:+.16e}i", z.re, z.im),
                other => text_field(other),
            };
            w.write_record([name.as_str(), k.as_str(), v.as_str()])?;
        }
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("CSV built from UTF-8 strings"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reals_keep_seventeen_digits() {
        let v = json_real(0.5);
        assert_eq!(v.to_string(), "5.0000000000000000e-1");
        let back: f64 = v.to_string().parse().unwrap();
        assert_eq!(back, 0.5);
        assert_eq!(json_real(f64::NAN), Value::Null);
    }

    #[test]
    fn renderings() {
        let mut r = Report::new("demo");
        let b = r.block("result");
        b.push(("kappa".into(), Field::Real(0.25)));
        b.push(("center".into(), Field::Complex(Complex::new(1.0, -2.0))));
        let j: Value = serde_json::from_str(&to_json(&r)).unwrap();
        assert_eq!(j["schema"], "capmap/1");
        assert!(to_text(&r).contains("1.0000000000000000 - 2.0000000000000000i"));
        assert!(to_csv(&r).unwrap().starts_with("block,key,value\n"));
    }
}
