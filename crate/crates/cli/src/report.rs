use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::config::SuiteConfig;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Case {
    pub id: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub branch: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
}

impl Case {
    pub fn check(id: impl Into<String>, ok: bool) -> Case {
        Case {
            id: id.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            branch: None,
            detail: None,
        }
    }

    pub fn skip(id: impl Into<String>, why: impl Into<String>) -> Case {
        Case {
            id: id.into(),
            status: Status::Skip,
            branch: None,
            detail: Some(Value::String(why.into())),
        }
    }

    pub fn branch(mut self, b: Option<String>) -> Case {
        self.branch = b;
        self
    }

    pub fn detail(mut self, d: impl Serialize) -> Case {
        self.detail = Some(serde_json::to_value(d).expect("detail serializes"));
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub config: SuiteConfig,
    pub cases: Vec<Case>,
    pub summary: Summary,
}

impl Report {
    pub fn new(suite: &str, config: &SuiteConfig, cases: Vec<Case>) -> Report {
        let mut s = Summary {
            total: cases.len(),
            ..Summary::default()
        };
        for c in &cases {
            match c.status {
                Status::Pass => s.passed += 1,
                Status::Fail => s.failed += 1,
                Status::Skip => s.skipped += 1,
            }
        }
        Report {
            suite: suite.to_string(),
            config: config.clone(),
            cases,
            summary: s,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn case(&self, id: &str) -> Option<&Case> {
        self.cases.iter().find(|c| c.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per failing case, then the totals.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in self.failures() {
            out.push_str(&format!("FAIL {}", c.id));
            if let Some(d) = &c.detail {
                out.push_str(&format!("  {d}"));
            }
            out.push('\n');
        }
        let s = &self.summary;
        out.push_str(&format!(
            "{} {} over {}: {} cases, {} passed, {} failed, {} skipped\n",
            self.suite,
            self.config.twisted_type,
            self.config.ring.short_name(),
            s.total,
            s.passed,
            s.failed,
            s.skipped
        ));
        out
    }
}
