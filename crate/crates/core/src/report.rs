use serde::Serialize;

/// Outcome of a verification routine: how many individual assertions were
/// made and a description of every one that failed.
#[derive(Clone, Debug, Default, Serialize)]
pub struct CheckReport {
    pub name: String,
    /// Plain description of the mathematical claim being checked.
    pub anchor: String,
    pub checks: u64,
    pub failures: Vec<String>,
    pub passed: bool,
}

/// Failure lists are truncated at this length; the count stays exact.
const MAX_FAILURES: usize = 50;

impl CheckReport {
    pub fn new(name: impl Into<String>, anchor: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            anchor: anchor.into(),
            checks: 0,
            failures: Vec::new(),
            passed: true,
        }
    }

    pub fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) -> bool {
        self.checks += 1;
        if !ok {
            self.passed = false;
            if self.failures.len() < MAX_FAILURES {
                self.failures.push(describe());
            }
        }
        ok
    }

    pub fn fail(&mut self, message: impl Into<String>) {
        self.check(false, || message.into());
    }

    pub fn absorb(&mut self, other: CheckReport) {
        self.checks += other.checks;
        if !other.passed {
            self.passed = false;
        }
        for f in other.failures {
            if self.failures.len() < MAX_FAILURES {
                self.failures.push(format!("{}: {f}", other.name));
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.passed
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_are_recorded_and_capped() {
        let mut r = CheckReport::new("demo", "nothing");
        for k in 0..100 {
            r.check(k % 2 == 0, || format!("odd {k}"));
        }
        assert!(!r.passed());
        assert_eq!(r.checks, 100);
        assert_eq!(r.failures.len(), MAX_FAILURES);
        let mut outer = CheckReport::new("outer", "");
        outer.absorb(CheckReport::new("inner", ""));
        assert!(outer.passed());
        outer.absorb(r);
        assert!(!outer.passed());
    }
}
