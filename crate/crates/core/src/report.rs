use std::fmt;
use std::time::Duration;

/// Outcome of one named check: how many items were examined and which failed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
    /// Set when the check could not run; a skipped check does not pass.
    pub skipped: Option<String>,
}

/// Failures listed per check are capped at this many witnesses.
pub const MAX_WITNESSES: usize = 20;

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn skipped(name: impl Into<String>, why: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            skipped: Some(why.into()),
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.skipped.is_none() && self.failures.is_empty()
    }

    pub fn tick(&mut self) {
        self.checked += 1;
    }

    pub fn fail(&mut self, witness: impl Into<String>) {
        self.failures.push(witness.into());
    }

    /// Records one item, failing with `witness` unless `ok`.
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(witness());
        }
    }

    pub fn absorb(&mut self, other: CheckReport) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
        if self.skipped.is_none() {
            self.skipped = other.skipped;
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(why) = &self.skipped {
            return write!(f, "SKIP {} ({why})", self.name);
        }
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} checked", self.name, self.checked)?;
        if !self.failures.is_empty() {
            write!(f, ", {} failed", self.failures.len())?;
        }
        f.write_str(")")?;
        for w in self.failures.iter().take(MAX_WITNESSES) {
            write!(f, "\n    {w}")?;
        }
        if self.failures.len() > MAX_WITNESSES {
            write!(f, "\n    ... {} more", self.failures.len() - MAX_WITNESSES)?;
        }
        Ok(())
    }
}

/// A sequence of checks with their running times.
#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub entries: Vec<(CheckReport, Duration)>,
}

impl VerifyReport {
    pub fn push(&mut self, report: CheckReport, elapsed: Duration) {
        self.entries.push((report, elapsed));
    }

    /// No check reported a failure. Skipped checks do not fail the run.
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|(r, _)| r.failures.is_empty())
    }

    pub fn get(&self, name: &str) -> Option<&CheckReport> {
        self.entries.iter().map(|(r, _)| r).find(|r| r.name == name)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, t) in &self.entries {
            writeln!(f, "{r} [{:.3}s]", t.as_secs_f64())?;
        }
        Ok(())
    }
}
