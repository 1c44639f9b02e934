use std::fmt::Write;

use fixedpoint_core::FixedPointProfile;
use serde_json::{json, Value};

#[derive(Debug, Clone)]
pub struct Section {
    pub name: String,
    /// `false` when the section found a violation.
    pub pass: bool,
    pub lines: Vec<String>,
    pub data: Value,
}

impl Section {
    pub fn new(name: impl Into<String>, pass: bool, lines: Vec<String>, data: Value) -> Self {
        Section {
            name: name.into(),
            pass,
            lines,
            data,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Consistent,
    Inconsistent(Vec<String>),
}

#[derive(Debug, Clone)]
pub struct Report {
    pub structure: String,
    pub half_dimension: usize,
    pub points: usize,
    pub sections: Vec<Section>,
}

impl Report {
    pub fn new(profile: &FixedPointProfile) -> Self {
        Report {
            structure: profile.structure.to_string(),
            half_dimension: profile.half_dimension,
            points: profile.point_count(),
            sections: Vec::new(),
        }
    }

    pub fn push(&mut self, section: Section) {
        self.sections.push(section);
    }

    pub fn verdict(&self) -> Verdict {
        let failed: Vec<String> = self
            .sections
            .iter()
            .filter(|s| !s.pass)
            .map(|s| s.name.clone())
            .collect();
        if failed.is_empty() {
            Verdict::Consistent
        } else {
            Verdict::Inconsistent(failed)
        }
    }

    pub fn to_json(&self) -> Value {
        let verdict = match self.verdict() {
            Verdict::Consistent => json!({ "consistent": true, "violations": [] }),
            Verdict::Inconsistent(v) => json!({ "consistent": false, "violations": v }),
        };
        json!({
            "profile": {
                "structure": self.structure,
                "half_dimension": self.half_dimension,
                "fixed_points": self.points,
            },
            "sections": self.sections.iter().map(|s| json!({
                "name": s.name,
                "pass": s.pass,
                "data": s.data,
            })).collect::<Vec<_>>(),
            "verdict": verdict,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "profile: {}, n = {}, r = {}",
            self.structure, self.half_dimension, self.points
        );
        for s in &self.sections {
            let _ = writeln!(out, "[{}] {}", if s.pass { "ok" } else { "FAIL" }, s.name);
            for l in &s.lines {
                let _ = writeln!(out, "  {l}");
            }
        }
        match self.verdict() {
            Verdict::Consistent => out.push_str("verdict: consistent\n"),
            Verdict::Inconsistent(v) => {
                let _ = writeln!(
                    out,
                    "verdict: inconsistent ({}); no action realizes this data",
                    v.join(", ")
                );
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use fixedpoint_core::Structure;

    fn report(passes: &[(&str, bool)]) -> Report {
        let mut r = Report::new(&FixedPointProfile::empty(Structure::Smooth, 4));
        for &(name, pass) in passes {
            r.push(Section::new(name, pass, vec![format!("{name} line")], json!(null)));
        }
        r
    }

    #[test]
    fn verdict_collects_failed_sections() {
        assert_eq!(report(&[]).verdict(), Verdict::Consistent);
        assert_eq!(
            report(&[("a", true), ("b", false), ("c", false)]).verdict(),
            Verdict::Inconsistent(vec!["b".into(), "c".into()])
        );
    }

    #[test]
    fn text_layout() {
        let text = report(&[("a", true), ("b", false)]).to_text();
        assert_eq!(
            text,
            "profile: smooth, n = 4, r = 0\n[ok] a\n  a line\n[FAIL] b\n  b line\n\
             verdict: inconsistent (b); no action realizes this data\n"
        );
    }

    #[test]
    fn json_layout() {
        let v = report(&[("a", true)]).to_json();
        assert_eq!(
            v.to_string(),
            r#"{"profile":{"structure":"smooth","half_dimension":4,"fixed_points":0},"sections":[{"name":"a","pass":true,"data":null}],"verdict":{"consistent":true,"violations":[]}}"#
        );
    }
}
