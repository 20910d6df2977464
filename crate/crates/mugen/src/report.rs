//! Machine and human renderings of suite and search results.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use mugen_core::{Exponent, Monomial, MonomialIdeal};
use serde::Serialize;
use serde_json::Value;

/// Exponent rows in canonical order. Exponents that fit in `u64` are JSON
/// numbers, larger ones are decimal strings.
pub fn ideal_rows(i: &MonomialIdeal) -> Vec<Vec<Value>> {
    i.generators()
        .iter()
        .map(monomial_row)
        .collect()
}

pub fn monomial_row(m: &Monomial) -> Vec<Value> {
    m.exponents().iter().map(exponent_value).collect()
}

pub fn exponent_value(e: &Exponent) -> Value {
    match e.to_u64() {
        Some(v) => Value::from(v),
        None => Value::from(e.to_string()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub check: String,
    pub source: String,
    pub index: u64,
    /// Present for randomly drawn instances.
    pub seed: Option<u64>,
    pub ideals: Vec<Vec<Vec<Value>>>,
    pub text: Vec<String>,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub check: String,
    pub pass: u64,
    pub fail: u64,
    pub not_applicable: u64,
    pub resource: u64,
    /// Why instances were skipped, with multiplicities.
    pub not_applicable_reasons: BTreeMap<String, u64>,
    pub witnesses: Vec<Witness>,
}

impl Verdict {
    pub fn status(&self) -> &'static str {
        if self.fail > 0 {
            "FAIL"
        } else if self.resource > 0 {
            "PARTIAL"
        } else if self.pass == 0 {
            "VACUOUS"
        } else {
            "PASS"
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub instances: u64,
    pub pass: u64,
    pub fail: u64,
    pub not_applicable: u64,
    pub resource: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SourceSummary {
    pub label: String,
    pub kind: &'static str,
    pub instances: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub config: Value,
    pub sources: Vec<SourceSummary>,
    pub verdicts: Vec<Verdict>,
    pub counts: Counts,
    /// Set when some instance hit a resource ceiling.
    pub partial: bool,
    pub duration_ms: u64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.counts.fail == 0
    }

    pub fn exit_code(&self) -> i32 {
        if self.counts.fail > 0 {
            crate::EXIT_FAIL
        } else if self.partial {
            crate::EXIT_RESOURCE
        } else {
            crate::EXIT_OK
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The JSON form with `duration_ms` zeroed, for byte comparisons.
    pub fn to_json_without_duration(&self) -> String {
        let mut r = self.clone();
        r.duration_ms = 0;
        r.to_json()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("suite,check,status,pass,fail,not_applicable,resource\n");
        for v in &self.verdicts {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{}",
                self.suite,
                v.check,
                v.status(),
                v.pass,
                v.fail,
                v.not_applicable,
                v.resource
            );
        }
        out
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite {}", self.suite);
        for s in &self.sources {
            let _ = writeln!(out, "  source {:<28} {:>10} {}", s.label, s.instances, s.kind);
        }
        let width = self.verdicts.iter().map(|v| v.check.len()).max().unwrap_or(5).max(5);
        let _ = writeln!(
            out,
            "  {:<width$}  {:<7} {:>10} {:>6} {:>10} {:>8}",
            "check", "status", "pass", "fail", "n/a", "resource"
        );
        for v in &self.verdicts {
            let _ = writeln!(
                out,
                "  {:<width$}  {:<7} {:>10} {:>6} {:>10} {:>8}",
                v.check,
                v.status(),
                v.pass,
                v.fail,
                v.not_applicable,
                v.resource
            );
            for (reason, n) in &v.not_applicable_reasons {
                let _ = writeln!(out, "  {:<width$}    skipped {n}: {reason}", "");
            }
            for w in &v.witnesses {
                let seed = w.seed.map_or(String::new(), |s| format!(" seed {s}"));
                let _ = writeln!(out, "    witness {}#{}{}: {}", w.source, w.index, seed, w.detail);
                for t in &w.text {
                    let _ = writeln!(out, "      ({t})");
                }
            }
        }
        let c = &self.counts;
        let _ = writeln!(
            out,
            "  total: {} instances, {} pass, {} fail, {} n/a, {} resource{}",
            c.instances,
            c.pass,
            c.fail,
            c.not_applicable,
            c.resource,
            if self.partial { " (partial)" } else { "" }
        );
        let _ = writeln!(out, "  {} ms", self.duration_ms);
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_exponents_become_strings() {
        let i = crate::parse::parse_ideal("x^3*y, x^100000000000000000000000").unwrap();
        let rows = serde_json::to_string(&ideal_rows(&i)).unwrap();
        assert_eq!(rows, r#"[[3,1],["100000000000000000000000",0]]"#);
    }

    #[test]
    fn status_words() {
        let mut v = Verdict { check: "c".into(), ..Verdict::default() };
        assert_eq!(v.status(), "VACUOUS");
        v.pass = 1;
        assert_eq!(v.status(), "PASS");
        v.resource = 1;
        assert_eq!(v.status(), "PARTIAL");
        v.fail = 1;
        assert_eq!(v.status(), "FAIL");
    }
}
