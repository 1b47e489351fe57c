use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MethodCount {
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub visited: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<f64>,
}

/// What a command printed, in order.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub comment: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub counts: Vec<MethodCount>,
    /// `(label, value)` lines: polynomials, holonomy data, summaries.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub entries: Vec<(String, String)>,
    /// Whether everything that was cross-checked agreed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<bool>,
}

impl RunReport {
    pub fn new(command: &str, comment: Option<String>) -> RunReport {
        RunReport {
            command: command.to_string(),
            comment,
            ..RunReport::default()
        }
    }

    pub fn entry(&mut self, label: impl Into<String>, value: impl ToString) {
        self.entries.push((label.into(), value.to_string()));
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = &self.comment {
            writeln!(f, "# {c}")?;
        }
        for c in &self.counts {
            write!(f, "{:<9}", format!("{}:", c.method))?;
            match (&c.value, &c.error) {
                (Some(v), _) => write!(f, " {v}")?,
                (None, Some(e)) => write!(f, " error: {e}")?,
                (None, None) => {}
            }
            if let Some(ms) = c.millis {
                write!(f, "  ({ms:.3} ms)")?;
            }
            writeln!(f)?;
        }
        for (label, value) in &self.entries {
            writeln!(f, "{label}: {value}")?;
        }
        if let Some(v) = self.verdict {
            writeln!(f, "verdict: {}", if v { "agree" } else { "DIVERGE" })?;
        }
        Ok(())
    }
}
