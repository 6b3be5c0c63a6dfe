//! The output record every subcommand emits, and its two renderings.
//!
//! JSON keys appear in this order: `command`, `parameters` (sorted by key),
//! `results`, `depth`, `status`. Each result carries a `kind` tag.
//! Coefficients and counts are decimal strings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use qpart_core::{Candidate, CongruenceClaim, OracleCount, Subject, VerifyReport};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub results: Vec<ResultItem>,
    pub depth: i64,
    pub status: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ResultItem {
    Coefficient { n: i64, value: String },
    Report(ReportRecord),
    Oracle(OracleRecord),
    Candidate(CandidateRecord),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub r: i64,
    #[serde(rename = "A")]
    pub step: u64,
    #[serde(rename = "B")]
    pub offset: u64,
    #[serde(rename = "M")]
    pub modulus: u64,
}

impl From<&CongruenceClaim> for ClaimRecord {
    fn from(c: &CongruenceClaim) -> Self {
        ClaimRecord {
            r: c.r(),
            step: c.step(),
            offset: c.offset(),
            modulus: c.modulus(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub n: i64,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub subject: String,
    pub claim: Option<ClaimRecord>,
    pub depth: i64,
    pub status: String,
    pub witness: Option<WitnessRecord>,
    pub observed: Option<String>,
}

impl From<&VerifyReport> for ReportRecord {
    fn from(r: &VerifyReport) -> Self {
        let claim = match &r.subject {
            Subject::Claim(c) => Some(c.into()),
            Subject::Identity(_) => None,
        };
        ReportRecord {
            subject: r.subject.to_string(),
            claim,
            depth: r.depth,
            status: r.status.as_str().to_string(),
            witness: r.witness.as_ref().map(|w| WitnessRecord {
                n: w.n,
                value: w.value.to_string(),
            }),
            observed: r.observed.as_ref().map(ToString::to_string),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleRecord {
    pub n: u64,
    pub r: i64,
    pub value: String,
    pub even: Option<String>,
    pub odd: Option<String>,
}

impl From<&OracleCount> for OracleRecord {
    fn from(c: &OracleCount) -> Self {
        OracleRecord {
            n: c.n as u64,
            r: c.r,
            value: c.value.to_string(),
            even: c.even_count.map(|v| v.to_string()),
            odd: c.odd_count.map(|v| v.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateRecord {
    #[serde(flatten)]
    pub claim: ClaimRecord,
    pub depth: u64,
    pub label: String,
}

impl From<&Candidate> for CandidateRecord {
    fn from(c: &Candidate) -> Self {
        CandidateRecord {
            claim: (&c.claim).into(),
            depth: c.depth,
            label: c.label(),
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn opt(v: Option<&str>) -> &str {
    v.unwrap_or("")
}

impl OutputRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("output record serializes")
    }

    /// Plain-text table. Coefficient and oracle results use `n,value`;
    /// reports use `field,value` rows, one block per report; scan
    /// candidates use one row per claim.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let header = match self.results.first() {
            Some(ResultItem::Report(_)) => "field,value",
            Some(ResultItem::Candidate(_)) => "r,A,B,M,depth,label",
            _ => "n,value",
        };
        out.push_str(header);
        out.push('\n');
        for item in &self.results {
            match item {
                ResultItem::Coefficient { n, value } => {
                    let _ = writeln!(out, "{n},{value}");
                }
                ResultItem::Oracle(o) => {
                    let _ = writeln!(out, "{},{}", o.n, o.value);
                }
                ResultItem::Candidate(c) => {
                    let cl = c.claim;
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{},{}",
                        cl.r,
                        cl.step,
                        cl.offset,
                        cl.modulus,
                        c.depth,
                        csv_field(&c.label)
                    );
                }
                ResultItem::Report(r) => {
                    let witness_n = r.witness.as_ref().map(|w| w.n.to_string());
                    let rows = [
                        ("subject", r.subject.as_str()),
                        ("depth", &r.depth.to_string()),
                        ("status", r.status.as_str()),
                        ("witness_n", opt(witness_n.as_deref())),
                        (
                            "witness_value",
                            opt(r.witness.as_ref().map(|w| w.value.as_str())),
                        ),
                        ("observed", opt(r.observed.as_deref())),
                    ];
                    for (field, value) in rows {
                        let _ = writeln!(out, "{field},{}", csv_field(value));
                    }
                }
            }
        }
        out
    }
}
