//! Structured reports and their text rendering.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use toric_core::exactlin::{IntMatrix, Lattice};
use toric_core::polyring::{BivariatePolyZ, UniPolyZ};

use crate::input::MatrixInput;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: &'static str,
    pub inputs: Vec<Value>,
    pub results: Value,
    pub text: Vec<String>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report { command, inputs: Vec::new(), results: json!({}), text: Vec::new() }
    }

    pub fn with_input(mut self, input: &MatrixInput) -> Self {
        self.inputs.push(json!({
            "source": input.source,
            "digest": input.digest(),
            "rows": matrix_value(&input.matrix),
        }));
        self
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let doc = json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": self.command,
                    "inputs": self.inputs,
                    "results": self.results,
                });
                let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut s = String::new();
                for input in &self.inputs {
                    s.push_str(&format!("input {} sha256:{}\n", input["source"].as_str().unwrap_or(""), input["digest"].as_str().unwrap_or("")));
                }
                for l in &self.text {
                    s.push_str(l);
                    s.push('\n');
                }
                s
            }
        }
    }
}

/// Integers as JSON numbers when they fit, decimal strings otherwise.
pub fn int_value(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

pub fn ints_value(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(int_value).collect())
}

pub fn matrix_value(m: &IntMatrix) -> Value {
    Value::Array(m.row_vectors().iter().map(|r| ints_value(r)).collect())
}

pub fn lattice_value(l: &Lattice) -> Value {
    Value::Array(l.basis_vectors().iter().map(|r| ints_value(r)).collect())
}

/// Terms of `Σ c x^i y^j` as `{"x": i, "y": j, "coeff": c}`, in increasing `(i, j)`.
pub fn bivariate_value(p: &BivariatePolyZ) -> Value {
    Value::Array(p.terms().iter().map(|(&(i, j), c)| json!({"x": i, "y": j, "coeff": int_value(c)})).collect())
}

/// Coefficients by increasing power.
pub fn univariate_value(p: &UniPolyZ) -> Value {
    ints_value(p.coeffs())
}

/// 1-based labels of the members of a subset, as `{1,3}`.
pub fn subset_label(s: u64, ground: usize) -> String {
    let members: Vec<String> = (0..ground).filter(|i| s >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", members.join(","))
}

pub fn subset_members(s: u64, ground: usize) -> Vec<usize> {
    (0..ground).filter(|i| s >> i & 1 == 1).map(|i| i + 1).collect()
}

pub fn join_ints(xs: &[BigInt]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

pub fn lattice_text(l: &Lattice) -> String {
    let vs: Vec<String> = l.basis_vectors().iter().map(|v| format!("({})", join_ints(v))).collect();
    format!("<{}>", vs.join(", "))
}
