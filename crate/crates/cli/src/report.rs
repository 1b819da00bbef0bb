use std::fmt::Write as _;

use serde_json::{json, Value};
use skewpart_core::{SkewPartition, VertexSet};

/// One command's outcome, rendered either as JSON or as plain text.
pub struct Report {
    pub command: &'static str,
    pub n: usize,
    pub m: usize,
    pub result: Value,
    pub certificates: Value,
    pub candidates_examined: usize,
    pub elapsed_ms: Option<f64>,
    /// Plain-text body, one entry per line.
    pub human: Vec<String>,
}

impl Report {
    pub fn json(&self) -> String {
        let elapsed = self.elapsed_ms.map(|t| (t * 1000.0).round() / 1000.0);
        let doc = json!({
            "command": self.command,
            "n": self.n,
            "m": self.m,
            "result": self.result,
            "certificates": self.certificates,
            "stats": { "elapsed_ms": elapsed, "candidates_examined": self.candidates_examined },
        });
        serde_json::to_string_pretty(&doc).expect("plain JSON values") + "\n"
    }

    pub fn text(&self) -> String {
        let mut s = format!("{}: n={} m={}\n", self.command, self.n, self.m);
        for line in &self.human {
            let _ = writeln!(s, "{line}");
        }
        let _ = writeln!(s, "candidates examined: {}", self.candidates_examined);
        if let Some(t) = self.elapsed_ms {
            let _ = writeln!(s, "elapsed: {t:.3} ms");
        }
        s
    }
}

/// 1-based sorted vertex list.
pub fn wire(s: VertexSet) -> Vec<usize> {
    s.iter().map(|v| v + 1).collect()
}

pub fn wire_vec(vs: &[usize]) -> Vec<usize> {
    vs.iter().map(|v| v + 1).collect()
}

pub fn partition_json(p: &SkewPartition) -> Value {
    json!({ "A": wire(p.a), "B": wire(p.b) })
}

pub fn show_set(s: VertexSet) -> String {
    let items: Vec<String> = s.iter().map(|v| (v + 1).to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

pub fn partition_text(p: &SkewPartition) -> String {
    format!("A = {}  B = {}", show_set(p.a), show_set(p.b))
}
