use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;
use skb_core::report::{Check, Report};

/// One check in a run, optionally tagged with the configuration it was made on.
#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    #[serde(flatten)]
    pub check: Check,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub context: Option<String>,
}

impl Verdict {
    pub fn new(check: Check) -> Verdict {
        Verdict { check, context: None }
    }

    pub fn in_context(check: Check, context: impl Into<String>) -> Verdict {
        Verdict { check, context: Some(context.into()) }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub kind: &'static str,
    pub sha256: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorInfo {
    pub kind: &'static str,
    pub message: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub inputs: Vec<InputDigest>,
    pub verdicts: Vec<Verdict>,
    pub passed: bool,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
    /// Wall-clock time; the only field that varies between identical runs.
    pub timing_ms: u64,
    pub tool_version: &'static str,
}

/// What a command produces before timing and the command echo are attached.
#[derive(Debug, Default)]
pub struct Body {
    pub inputs: Vec<InputDigest>,
    pub verdicts: Vec<Verdict>,
    pub result: Value,
}

impl Body {
    pub fn push(&mut self, check: Check) {
        self.verdicts.push(Verdict::new(check));
    }

    pub fn push_report(&mut self, r: Report, context: Option<&str>) {
        for c in r.checks {
            self.verdicts.push(Verdict { check: c, context: context.map(str::to_string) });
        }
    }
}

pub fn render_pretty(r: &RunReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", r.command.join(" "));
    for i in &r.inputs {
        let _ = writeln!(out, "input  {} ({}, sha256 {})", i.path, i.kind, i.sha256);
    }
    if let Some(e) = &r.error {
        let _ = writeln!(out, "ERROR  {}: {}", e.kind, e.message);
    }
    for v in &r.verdicts {
        let c = &v.check;
        let _ = write!(out, "{}  {}", if c.passed { "PASS" } else { "FAIL" }, c.name);
        if let Some(ctx) = &v.context {
            let _ = write!(out, " [{ctx}]");
        }
        if let Some(w) = &c.witness {
            let _ = write!(out, "  witness {w:?}");
        }
        if let Some(d) = &c.detail {
            let _ = write!(out, "  {d}");
        }
        out.push('\n');
    }
    if !r.result.is_null() {
        let body = serde_json::to_string_pretty(&r.result).unwrap_or_default();
        let _ = writeln!(out, "result:\n{body}");
    }
    let status = match (&r.error, r.passed) {
        (Some(_), _) => "error",
        (None, true) => "passed",
        (None, false) => "failed",
    };
    let _ = writeln!(out, "{status} in {} ms (skb {})", r.timing_ms, r.tool_version);
    out
}
