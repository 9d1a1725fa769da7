//! JSON form of verification reports. Rationals are `"p/q"` strings and
//! every map is ordered, so equal inputs serialize to equal bytes.

use std::collections::BTreeMap;

use serde::Serialize;
use spinor_lfunc_core::identity::{CandidateStatus, Verdict, VerificationReport};
use spinor_lfunc_core::lfactors::IdentityCase;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct CaseJson {
    pub kind: String,
    pub n: usize,
    pub m: usize,
    pub shift_u: String,
    pub shift_ell: i64,
    pub second_rep: String,
}

impl From<&IdentityCase> for CaseJson {
    fn from(case: &IdentityCase) -> Self {
        CaseJson {
            kind: case.kind().label().to_string(),
            n: case.n(),
            m: case.m(),
            shift_u: case.shift_u().to_string(),
            shift_ell: case.shift_ell(),
            second_rep: case.second_rep().label().to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ComparisonJson {
    pub index: usize,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CandidateJson {
    pub exponent: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FindingJson {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct StratumJson {
    pub delta: Vec<u32>,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct MismatchJson {
    pub coefficient: usize,
    pub residual: String,
    pub strata: Vec<StratumJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportJson {
    pub subject: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<CaseJson>,
    pub parameters: BTreeMap<String, String>,
    pub conventions: BTreeMap<String, String>,
    pub order: usize,
    pub normalization: String,
    pub comparisons: Vec<ComparisonJson>,
    pub candidates: Vec<CandidateJson>,
    pub findings: Vec<FindingJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<MismatchJson>,
    pub verdict: String,
}

impl From<&VerificationReport> for ReportJson {
    fn from(r: &VerificationReport) -> Self {
        ReportJson {
            subject: r.subject.label().to_string(),
            case: r.case.as_ref().map(CaseJson::from),
            parameters: r.parameters.iter().cloned().collect(),
            conventions: r.conventions.iter().cloned().collect(),
            order: r.order,
            normalization: r.normalization.label().to_string(),
            comparisons: r
                .comparisons
                .iter()
                .map(|c| ComparisonJson { index: c.index, lhs: c.lhs.to_string(), rhs: c.rhs.to_string(), equal: c.equal })
                .collect(),
            candidates: r
                .candidates
                .iter()
                .map(|c| {
                    let (status, first_mismatch, error) = match &c.status {
                        CandidateStatus::Validates => ("validates", None, None),
                        CandidateStatus::Fails(i) => ("fails", Some(*i), None),
                        CandidateStatus::Unevaluable(e) => ("unevaluable", None, Some(e.to_string())),
                    };
                    CandidateJson { exponent: c.exponent.label().to_string(), status: status.to_string(), first_mismatch, error }
                })
                .collect(),
            findings: r
                .findings
                .iter()
                .map(|f| FindingJson { name: f.name.clone(), holds: f.holds, detail: f.detail.clone() })
                .collect(),
            mismatch: r.mismatch.as_ref().map(|m| MismatchJson {
                coefficient: m.coefficient,
                residual: m.residual.to_string(),
                strata: m
                    .strata
                    .iter()
                    .map(|(d, v)| StratumJson { delta: d.parts().to_vec(), value: v.to_string() })
                    .collect(),
            }),
            verdict: r.verdict.label().to_string(),
        }
    }
}

/// Outcome of one instance inside a run.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Report(Box<ReportJson>),
    Error(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceJson {
    pub key: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub verdict: String,
    pub outcome: Outcome,
}

impl InstanceJson {
    pub fn new(key: String, seed: Option<u64>, result: Result<VerificationReport, String>) -> Self {
        match result {
            Ok(r) => InstanceJson {
                key,
                seed,
                verdict: r.verdict.label().to_string(),
                outcome: Outcome::Report(Box::new(ReportJson::from(&r))),
            },
            Err(e) => InstanceJson { key, seed, verdict: "error".to_string(), outcome: Outcome::Error(e) },
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub mismatched: usize,
    pub errors: usize,
}

impl Summary {
    pub fn of(instances: &[InstanceJson]) -> Self {
        let count = |label: &str| instances.iter().filter(|i| i.verdict == label).count();
        Summary {
            total: instances.len(),
            passed: count(Verdict::Pass.label()),
            mismatched: count(Verdict::Mismatch.label()),
            errors: count("error"),
        }
    }

    /// 0 all pass, 1 any mismatch, 2 any error and no mismatch.
    pub fn exit_code(&self) -> i32 {
        if self.mismatched > 0 {
            1
        } else if self.errors > 0 {
            2
        } else {
            0
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NormalizationJson {
    pub exponent: String,
    pub source: String,
}

/// Top-level document written by `verify`, `sweep` and `symalg`.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub command: String,
    pub config: serde_json::Value,
    pub normalization: NormalizationJson,
    pub instances: Vec<InstanceJson>,
    pub summary: Summary,
}

impl RunReport {
    pub fn new(command: &str, config: serde_json::Value, normalization: NormalizationJson, instances: Vec<InstanceJson>) -> Self {
        let summary = Summary::of(&instances);
        RunReport { schema: SCHEMA_VERSION, command: command.to_string(), config, normalization, instances, summary }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }

    /// One line per instance plus a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for i in &self.instances {
            let detail = match &i.outcome {
                Outcome::Report(r) => match &r.mismatch {
                    Some(m) => format!(" first mismatch at T^{} (rhs - lhs = {})", m.coefficient, m.residual),
                    None => String::new(),
                },
                Outcome::Error(e) => format!(" {e}"),
            };
            out.push_str(&format!("{:<8} {}{}\n", i.verdict, i.key, detail));
        }
        out.push_str(&format!(
            "normalization {} ({}); {} total, {} pass, {} mismatch, {} error\n",
            self.normalization.exponent,
            self.normalization.source,
            self.summary.total,
            self.summary.passed,
            self.summary.mismatched,
            self.summary.errors
        ));
        out
    }
}
