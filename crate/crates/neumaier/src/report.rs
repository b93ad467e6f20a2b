//! Versioned, byte-stable command reports.

use neumaier_core::graph::Graph;
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::format::to_graph6;
use crate::input::ResolvedGraph;

pub const SCHEMA: &str = "neumaier-report/1";

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct InputDigest {
    pub source: String,
    pub graph6: String,
    /// SHA-256 of the graph6 string.
    pub sha256: String,
    pub n: usize,
    pub edges: usize,
}

impl InputDigest {
    pub fn of(source: String, g: &Graph) -> Self {
        let graph6 = to_graph6(g);
        let sha256 = hex::encode(Sha256::digest(graph6.as_bytes()));
        InputDigest { source, graph6, sha256, n: g.n(), edges: g.edge_count() }
    }

    pub fn of_resolved(r: &ResolvedGraph) -> Self {
        Self::of(r.source.describe(), &r.graph)
    }
}

/// A named pass/fail assertion.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Assertion {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub version: &'static str,
    pub command: Vec<String>,
    pub inputs: Vec<InputDigest>,
    pub assertions: Vec<Assertion>,
    pub passed: bool,
    pub result: Value,
    /// Human-readable body; not part of the JSON form.
    #[serde(skip)]
    pub text: Vec<String>,
    /// Text output is the body alone, with no assertion lines or verdict.
    #[serde(skip)]
    pub bare: bool,
}

impl Report {
    pub fn new(command: Vec<String>) -> Self {
        Report {
            schema: SCHEMA,
            version: env!("CARGO_PKG_VERSION"),
            command,
            inputs: Vec::new(),
            assertions: Vec::new(),
            passed: true,
            result: Value::Null,
            text: Vec::new(),
            bare: false,
        }
    }

    pub fn assert(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.passed &= pass;
        self.assertions.push(Assertion { name: name.into(), pass, detail: detail.into() });
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for l in &self.text {
            out.push_str(l);
            out.push('\n');
        }
        if self.bare {
            return out;
        }
        for a in &self.assertions {
            let mark = if a.pass { "ok  " } else { "FAIL" };
            if a.detail.is_empty() {
                out.push_str(&format!("[{mark}] {}\n", a.name));
            } else {
                out.push_str(&format!("[{mark}] {}: {}\n", a.name, a.detail));
            }
        }
        out.push_str(if self.passed { "PASS\n" } else { "FAIL\n" });
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_is_stable() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let d = InputDigest::of("graph6:Cl".into(), &c4);
        assert_eq!(d.graph6, "Cl");
        assert_eq!(d.sha256, "68bd1bd95ba465c01242172601c742e27c193936ade6718ca7f8c8b4764c40d4");
        assert_eq!((d.n, d.edges), (4, 4));
    }

    #[test]
    fn failing_assertion_fails_report() {
        let mut r = Report::new(vec!["x".into()]);
        r.assert("a", true, "");
        assert!(r.passed);
        r.assert("b", false, "1 != 2");
        assert!(!r.passed);
        assert!(r.to_text().ends_with("FAIL\n"));
        assert!(r.to_json().contains("\"schema\": \"neumaier-report/1\""));
    }
}
