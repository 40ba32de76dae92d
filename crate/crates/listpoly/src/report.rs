//! Report types shared by the law suites and the adjunction verifier.

use crate::setmodel::Budget;

/// Outcome of one named law.
#[derive(Clone, Debug)]
pub struct LawResult {
    pub id: String,
    pub pass: bool,
    pub counterexample: Option<String>,
}

/// A batch of law results, tagged with the budget that produced them.
#[derive(Clone, Debug)]
pub struct LawReport {
    pub budget: Budget,
    pub laws: Vec<LawResult>,
}

impl LawReport {
    pub fn new(budget: Budget) -> LawReport {
        LawReport { budget, laws: Vec::new() }
    }

    pub fn push(&mut self, id: &str, counterexample: Option<String>) {
        self.laws.push(LawResult {
            id: id.to_string(),
            pass: counterexample.is_none(),
            counterexample,
        });
    }

    pub fn all_pass(&self) -> bool {
        self.laws.iter().all(|l| l.pass)
    }

    pub fn find(&self, id: &str) -> Option<&LawResult> {
        self.laws.iter().find(|l| l.id == id)
    }

    /// One line per law: `<law-id> PASS` or `<law-id> FAIL <counterexample>`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for law in &self.laws {
            if law.pass {
                out.push_str(&format!("{} PASS\n", law.id));
            } else {
                out.push_str(&format!(
                    "{} FAIL {}\n",
                    law.id,
                    law.counterexample.as_deref().unwrap_or("")
                ));
            }
        }
        out
    }
}

/// One stage of a verification (existence / uniqueness / naturality).
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub counterexample: Option<String>,
}

/// A verification problem outcome; overall PASS iff all checks pass.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
    pub budget: Budget,
}

impl VerifyReport {
    pub fn new(budget: Budget) -> VerifyReport {
        VerifyReport { checks: Vec::new(), budget }
    }

    pub fn push(&mut self, name: &str, counterexample: Option<String>) {
        self.checks.push(CheckResult {
            name: name.to_string(),
            pass: counterexample.is_none(),
            counterexample,
        });
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}
