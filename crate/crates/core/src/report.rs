//! Outcome records for identity and parity sweeps.

use std::fmt;

/// First index at which a sweep failed, with a human-readable account of
/// what was observed versus expected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub index: i64,
    pub detail: String,
}

/// Result of one verification sweep. `pass` is true iff no counterexample
/// was found over the stated range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub check: String,
    pub range: String,
    pub pass: bool,
    pub counterexample: Option<Counterexample>,
}

impl VerificationReport {
    pub fn pass(check: impl Into<String>, range: impl Into<String>) -> Self {
        VerificationReport {
            check: check.into(),
            range: range.into(),
            pass: true,
            counterexample: None,
        }
    }

    pub fn fail(
        check: impl Into<String>,
        range: impl Into<String>,
        index: i64,
        detail: impl Into<String>,
    ) -> Self {
        VerificationReport {
            check: check.into(),
            range: range.into(),
            pass: false,
            counterexample: Some(Counterexample {
                index,
                detail: detail.into(),
            }),
        }
    }

    /// Build a report from the earliest failure in a sweep, if any.
    /// `failures` need not be sorted; the smallest index wins, so parallel
    /// sweeps merge deterministically.
    pub fn from_failures(
        check: impl Into<String>,
        range: impl Into<String>,
        failures: Vec<Counterexample>,
    ) -> Self {
        match failures.into_iter().min_by_key(|c| c.index) {
            None => VerificationReport::pass(check, range),
            Some(c) => VerificationReport {
                check: check.into(),
                range: range.into(),
                pass: false,
                counterexample: Some(c),
            },
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pass {
            write!(f, "{} [{}]: pass", self.check, self.range)
        } else {
            let c = self.counterexample.as_ref().expect("failed report has counterexample");
            write!(
                f,
                "{} [{}]: FAIL at index {} ({})",
                self.check, self.range, c.index, c.detail
            )
        }
    }
}
