use std::fmt::Write as _;

use crate::fmt::real;
use crate::tolerance::Tolerances;

/// One named check: the largest error seen over its cases against the bound
/// it must not exceed.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub cases: usize,
    pub max_error: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    /// `pass` is `max_error <= tolerance`; a NaN error fails.
    pub fn new(name: &'static str, cases: usize, max_error: f64, tolerance: f64) -> Self {
        Self {
            name,
            cases,
            max_error,
            tolerance,
            pass: max_error <= tolerance,
        }
    }
}

/// Running maximum of per-case errors. Failed evaluations count as infinite
/// error.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Acc {
    cases: usize,
    max: f64,
}

impl Acc {
    pub fn push(&mut self, err: f64) {
        self.cases += 1;
        let err = if err.is_nan() { f64::INFINITY } else { err };
        self.max = self.max.max(err);
    }

    pub fn push_result<E>(&mut self, err: Result<f64, E>) {
        self.push(err.unwrap_or(f64::INFINITY));
    }

    /// Records a case that is wrong (`1`) or right (`0`).
    pub fn push_bad(&mut self, bad: bool) {
        self.cases += 1;
        if bad {
            self.max += 1.0;
        }
    }

    pub fn finish(self, name: &'static str, tolerance: f64) -> Check {
        Check::new(name, self.cases, self.max, tolerance)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub tolerances: Tolerances,
}

impl VerifyReport {
    pub fn new(suite: impl Into<String>, tolerances: Tolerances) -> Self {
        Self {
            suite: suite.into(),
            checks: Vec::new(),
            tolerances,
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// Line-oriented text: a tolerance header, one line per check, and a
    /// verdict.
    pub fn to_text(&self) -> String {
        let t = &self.tolerances;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "suite {}  tol-eq={} tol-rt={} tol-res={} tol-member={}",
            self.suite,
            real(t.eq),
            real(t.rt),
            real(t.res),
            real(t.member)
        );
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let _ = writeln!(
                out,
                "  {} {:width$}  cases={} max_error={} tolerance={}",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.cases,
                real(c.max_error),
                real(c.tolerance),
            );
        }
        let _ = writeln!(
            out,
            "{} {}: {}/{} checks passed",
            if self.passed() { "PASS" } else { "FAIL" },
            self.suite,
            self.checks.iter().filter(|c| c.pass).count(),
            self.checks.len()
        );
        out
    }

    /// CSV with header `suite,check,cases,max_error,tolerance,pass`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("suite,check,cases,max_error,tolerance,pass\n");
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                self.suite,
                c.name,
                c.cases,
                real(c.max_error),
                real(c.tolerance),
                c.pass
            );
        }
        out
    }
}
