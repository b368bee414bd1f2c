use std::fmt;
use std::sync::OnceLock;

use regex::Regex;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SzsStatus {
    Theorem,
    CounterSatisfiable,
    Timeout,
    GaveUp,
    Unknown,
}

impl SzsStatus {
    /// Unrecognized words map to `Unknown`.
    pub fn from_word(w: &str) -> Self {
        match w {
            "Theorem" => SzsStatus::Theorem,
            "CounterSatisfiable" => SzsStatus::CounterSatisfiable,
            "Timeout" => SzsStatus::Timeout,
            "GaveUp" => SzsStatus::GaveUp,
            _ => SzsStatus::Unknown,
        }
    }
}

impl fmt::Display for SzsStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SzsResult {
    pub tag: String,
    pub prover: Option<String>,
    pub status: SzsStatus,
    pub cpu: Option<f64>,
    pub wc: Option<f64>,
}

fn result_line() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| {
        Regex::new(
            r"^\s*%?\s*RESULT:\s*(\S+)\s+-\s+(.+?)\s+says\s+(\w+)(?:\s*-\s*CPU\s*=\s*([0-9.]+))?(?:\s*WC\s*=\s*([0-9.]+))?",
        )
        .unwrap()
    })
}

fn status_line() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"^\s*%?\s*SZS status\s+(\w+)\s+for\s+(\S+)").unwrap())
}

/// Extracts results from `RESULT:` summary lines and `SZS status` lines.
/// Other lines, including `SZS output` markers, are ignored.
pub fn parse_szs(text: &str) -> Vec<SzsResult> {
    let mut out = Vec::new();
    for line in text.lines() {
        if let Some(c) = result_line().captures(line) {
            out.push(SzsResult {
                tag: c[1].to_string(),
                prover: Some(c[2].to_string()),
                status: SzsStatus::from_word(&c[3]),
                cpu: c.get(4).and_then(|m| m.as_str().parse().ok()),
                wc: c.get(5).and_then(|m| m.as_str().parse().ok()),
            });
        } else if let Some(c) = status_line().captures(line) {
            let path = c[2].trim_end_matches(':');
            let tag = path.rsplit('/').next().unwrap_or(path).to_string();
            out.push(SzsResult { tag, prover: None, status: SzsStatus::from_word(&c[1]), cpu: None, wc: None });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn result_line_fields() {
        let r = parse_szs("% RESULT: SOT_19PD5B - LEO-II---1.6.2 says Theorem - CPU = 0.01 WC = 0.04");
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].tag, "SOT_19PD5B");
        assert_eq!(r[0].prover.as_deref(), Some("LEO-II---1.6.2"));
        assert_eq!(r[0].status, SzsStatus::Theorem);
        assert_eq!(r[0].cpu, Some(0.01));
        assert_eq!(r[0].wc, Some(0.04));
    }

    #[test]
    fn status_line_uses_basename() {
        let r = parse_szs("% SZS status Theorem for /tmp/SystemOnTPTP1234/SOT_ZN9MIY :\n% SZS output start CNFRefutation");
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].tag, "SOT_ZN9MIY");
        assert_eq!(r[0].prover, None);
    }

    #[test]
    fn other_statuses() {
        let text = "RESULT: p1 - E---2.0 says CounterSatisfiable - CPU = 1.5 WC = 1.6\n\
                    RESULT: p2 - Vampire---4.2 says Timeout - CPU = 60.00 WC = 60.01\n\
                    RESULT: p3 - X says Strange - CPU = 0 WC = 0\n\
                    OUTPUT: p1 - E---2.0 says CNFRefutation";
        let r = parse_szs(text);
        let st: Vec<SzsStatus> = r.iter().map(|x| x.status).collect();
        assert_eq!(st, [SzsStatus::CounterSatisfiable, SzsStatus::Timeout, SzsStatus::Unknown]);
    }
}
