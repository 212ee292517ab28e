use std::collections::BTreeMap;

use maxcomm::classical::NonnegMatrix;
use maxcomm::{Scalar, TropMatrix};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::matfile::MatrixFile;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Serialize)]
pub struct Input {
    pub path: String,
    pub tag: String,
    pub rows: usize,
    pub cols: usize,
}

impl From<&MatrixFile> for Input {
    fn from(f: &MatrixFile) -> Self {
        Input {
            path: f.path.display().to_string(),
            tag: f.tag.to_string(),
            rows: f.rows,
            cols: f.cols,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Mode {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
}

/// Everything a command prints. Node and class numbers are 1-based.
#[derive(Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub inputs: Vec<Input>,
    pub mode: Mode,
    pub results: Map<String, Value>,
    pub verdicts: BTreeMap<String, bool>,
}

impl Report {
    pub fn new(command: &str, inputs: &[MatrixFile], mode: Mode) -> Self {
        Report {
            schema: SCHEMA,
            command: command.to_string(),
            inputs: inputs.iter().map(Input::from).collect(),
            mode,
            results: Map::new(),
            verdicts: BTreeMap::new(),
        }
    }

    pub fn result(&mut self, key: &str, value: Value) -> &mut Self {
        self.results.insert(key.to_string(), value);
        self
    }

    pub fn verdict(&mut self, key: &str, holds: bool) -> &mut Self {
        self.verdicts.insert(key.to_string(), holds);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        match self.mode.epsilon {
            Some(eps) => out.push_str(&format!("mode: {} (eps {eps})\n", self.mode.kind)),
            None => out.push_str(&format!("mode: {}\n", self.mode.kind)),
        }
        for input in &self.inputs {
            out.push_str(&format!(
                "input: {} ({} {}x{})\n",
                input.path, input.tag, input.rows, input.cols
            ));
        }
        for (key, value) in &self.results {
            out.push_str(&format!("{key}: {}\n", render(value)));
        }
        for (key, holds) in &self.verdicts {
            out.push_str(&format!("verdict {key}: {}\n", if *holds { "PASS" } else { "FAIL" }));
        }
        out
    }
}

fn render(value: &Value) -> String {
    match value {
        Value::Null => "none".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(render).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Object(fields) => {
            let parts: Vec<String> = fields
                .iter()
                .map(|(k, v)| format!("{k}: {}", render(v)))
                .collect();
            format!("{{{}}}", parts.join(", "))
        }
        other => other.to_string(),
    }
}

pub fn scalar<S: Scalar>(x: &S) -> Value {
    Value::String(x.to_string())
}

pub fn vector<S: Scalar>(v: &[S]) -> Value {
    Value::Array(v.iter().map(scalar).collect())
}

pub fn matrix<S: Scalar>(m: &TropMatrix<S>) -> Value {
    Value::Array((0..m.rows()).map(|i| vector(m.row(i))).collect())
}

pub fn reals(v: &[f64]) -> Value {
    json!(v)
}

pub fn classical_matrix(m: &NonnegMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| json!((0..m.cols()).map(|j| m.get(i, j)).collect::<Vec<_>>()))
            .collect(),
    )
}

/// 0-based indices shown 1-based.
pub fn numbers(indices: &[usize]) -> Value {
    json!(indices.iter().map(|i| i + 1).collect::<Vec<_>>())
}

pub fn groups(sets: &[Vec<usize>]) -> Value {
    Value::Array(sets.iter().map(|s| numbers(s)).collect())
}

pub fn pairs(edges: &[(usize, usize)]) -> Value {
    json!(edges.iter().map(|&(i, j)| [i + 1, j + 1]).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_rendering() {
        let a: TropMatrix = "0 1/2; -inf 0".parse().unwrap();
        assert_eq!(render(&matrix(&a)), "[[0, 1/2], [-inf, 0]]");
        assert_eq!(render(&numbers(&[0, 2])), "[1, 3]");
        assert_eq!(render(&json!({"a": true, "b": null})), "{a: true, b: none}");
    }

    #[test]
    fn json_layout() {
        let mut r = Report::new("spectrum", &[], Mode { kind: "exact", epsilon: None });
        r.result("perron_root", json!("0")).verdict("ok", true);
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["mode"], json!({"kind": "exact"}));
        assert_eq!(v["results"]["perron_root"], "0");
        assert_eq!(v["verdicts"]["ok"], true);
    }
}
