use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        }
    }
}

/// One verified statement. `criterion` groups checks for the acceptance
/// summary; `id` is unique and zero-padded so that sorting is stable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub criterion: u8,
    pub description: String,
    pub status: Status,
    pub details: String,
}

impl Check {
    pub fn new(id: String, criterion: u8, description: impl Into<String>, ok: bool, details: String) -> Self {
        Check {
            id,
            criterion,
            description: description.into(),
            status: Status::from_bool(ok),
            details,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub max_dim: usize,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, seed: u64, max_dim: usize, mut checks: Vec<Check>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let passed = checks.iter().filter(|c| c.passed()).count();
        SuiteReport {
            suite: suite.into(),
            seed,
            max_dim,
            summary: Summary {
                total: checks.len(),
                passed,
                failed: checks.len() - passed,
            },
            checks,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn criterion(&self, c: u8) -> impl Iterator<Item = &Check> + '_ {
        self.checks.iter().filter(move |k| k.criterion == c)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("suite {} (seed {}, max-dim {})\n", self.suite, self.seed, self.max_dim);
        for c in &self.checks {
            let _ = write!(out, "{} {}  {}", c.status.label(), c.id, c.description);
            if !c.details.is_empty() {
                let _ = write!(out, "  [{}]", c.details);
            }
            out.push('\n');
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "summary: {} checks, {} passed, {} failed",
            s.total, s.passed, s.failed
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checks_are_sorted_and_counted() {
        let checks = vec![
            Check::new("b".into(), 1, "second", false, "why".into()),
            Check::new("a".into(), 1, "first", true, String::new()),
        ];
        let r = SuiteReport::new("x", 0, 7, checks);
        assert_eq!(r.checks[0].id, "a");
        assert_eq!(
            r.summary,
            Summary {
                total: 2,
                passed: 1,
                failed: 1
            }
        );
        assert!(!r.all_passed());
        assert!(r.to_text().contains("FAIL b  second  [why]"));
        assert!(r.to_json().contains("\"status\": \"fail\""));
    }
}
