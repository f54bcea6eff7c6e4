use serde_json::{json, Map, Value};
use std::fmt;

/// Why a job produced no verdict. Each kind has its own exit code.
#[derive(Debug)]
pub enum Failure {
    /// Bad flags, unreadable or malformed input, or a graph outside the
    /// requested method's class.
    Usage(String),
    /// A search ran out of its state budget.
    Budget(String),
    /// A result failed re-validation.
    Internal(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) | Failure::Internal(_) => 1,
            Failure::Budget(_) => 2,
        }
    }

    fn verdict(&self) -> &'static str {
        match self {
            Failure::Usage(_) => "ERROR",
            Failure::Budget(_) => "BUDGET",
            Failure::Internal(_) => "INTERNAL",
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Budget(m) | Failure::Internal(m) => m,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "error: {m}"),
            Failure::Budget(m) => write!(f, "budget exceeded: {m}"),
            Failure::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

pub fn usage(m: impl fmt::Display) -> Failure {
    Failure::Usage(m.to_string())
}

/// A finished job: a one-word verdict, a machine-readable witness and the
/// human-readable lines printed after the verdict.
#[derive(Debug)]
pub struct Report {
    pub verdict: String,
    pub witness: Value,
    pub lines: Vec<String>,
    /// Text mode prints only `lines`, so the output can be piped as a file.
    pub bare: bool,
}

impl Report {
    pub fn new(verdict: impl Into<String>, witness: Value) -> Self {
        Report {
            verdict: verdict.into(),
            witness,
            lines: Vec::new(),
            bare: false,
        }
    }

    pub fn bare(mut self) -> Self {
        self.bare = true;
        self
    }

    pub fn line(mut self, l: impl Into<String>) -> Self {
        self.lines.push(l.into());
        self
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Style {
    pub json: bool,
    pub timings: bool,
    pub seed: Option<u64>,
}

/// Renders one job. `file` is set in corpus mode.
pub fn render(style: Style, file: Option<&str>, result: &Result<Report, Failure>, elapsed_ms: f64) -> String {
    if style.json {
        let mut obj = Map::new();
        if let Some(f) = file {
            obj.insert("file".into(), json!(f));
        }
        match result {
            Ok(r) => {
                obj.insert("verdict".into(), json!(r.verdict));
                obj.insert("witness".into(), r.witness.clone());
            }
            Err(e) => {
                obj.insert("verdict".into(), json!(e.verdict()));
                obj.insert("witness".into(), json!({ "message": e.message() }));
            }
        }
        if style.timings {
            obj.insert("timings".into(), json!({ "total_ms": elapsed_ms }));
        }
        obj.insert("seed".into(), json!(style.seed));
        let mut s = serde_json::to_string(&Value::Object(obj)).expect("json values serialize");
        s.push('\n');
        return s;
    }
    let mut s = String::new();
    if let Some(f) = file {
        s.push_str(&format!("== {f}\n"));
    }
    match result {
        Ok(r) => {
            if !r.bare {
                s.push_str(&r.verdict);
                s.push('\n');
            }
            for l in &r.lines {
                s.push_str(l);
                if !l.ends_with('\n') {
                    s.push('\n');
                }
            }
        }
        Err(e) => s.push_str(&format!("{e}\n")),
    }
    if style.timings {
        s.push_str(&format!("time: {elapsed_ms:.3} ms\n"));
    }
    s
}
