use serde::Serialize;

/// Result of checking one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// The instance does not satisfy the checked statement's hypotheses.
    NotApplicable(String),
    Fail(String),
}

impl Outcome {
    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail(_))
    }

    /// `Fail(msg)` unless `cond` holds.
    pub fn require(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
        if cond {
            Outcome::Pass
        } else {
            Outcome::Fail(msg())
        }
    }
}

/// A failing instance, with enough text to replay it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub trial: usize,
    /// Named inputs in canonical text form, including any supplied evidence.
    pub inputs: Vec<(String, String)>,
    pub detail: String,
}

impl Witness {
    pub fn input(&self, key: &str) -> Option<&str> {
        self.inputs
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub trials: usize,
    pub passes: usize,
    pub not_applicable: usize,
    pub failures: Vec<Witness>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            trials: 0,
            passes: 0,
            not_applicable: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records one instance. `inputs` is only evaluated on failure.
    pub fn record(&mut self, trial: usize, outcome: Outcome, inputs: impl FnOnce() -> Vec<(String, String)>) {
        self.trials += 1;
        match outcome {
            Outcome::Pass => self.passes += 1,
            Outcome::NotApplicable(_) => self.not_applicable += 1,
            Outcome::Fail(detail) => self.failures.push(Witness {
                trial,
                inputs: inputs(),
                detail,
            }),
        }
    }

    /// Appends `other`, keeping witnesses in trial order.
    pub fn merge(&mut self, other: CheckReport) {
        self.trials += other.trials;
        self.passes += other.passes;
        self.not_applicable += other.not_applicable;
        self.failures.extend(other.failures);
        self.failures.sort_by_key(|w| w.trial);
    }

    /// One-line summary.
    pub fn summary(&self) -> String {
        format!(
            "{}: {} ({} instances, {} passed, {} not applicable, {} failed)",
            self.name,
            if self.passed() { "pass" } else { "FAIL" },
            self.trials,
            self.passes,
            self.not_applicable,
            self.failures.len()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_witnesses() {
        let mut r = CheckReport::new("demo");
        r.record(0, Outcome::Pass, Vec::new);
        r.record(1, Outcome::NotApplicable("no".into()), Vec::new);
        r.record(2, Outcome::Fail("bad".into()), || vec![("u".into(), "x1".into())]);
        assert_eq!((r.trials, r.passes, r.not_applicable), (3, 1, 1));
        assert!(!r.passed());
        assert_eq!(r.failures[0].input("u"), Some("x1"));
        assert_eq!(r.failures[0].input("v"), None);
        let mut s = CheckReport::new("demo");
        s.record(5, Outcome::Pass, Vec::new);
        s.merge(r);
        assert_eq!(s.trials, 4);
        assert!(s.summary().starts_with("demo: FAIL (4 instances"));
    }
}
