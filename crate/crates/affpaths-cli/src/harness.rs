//! Check records, reports and the suite runner.

use std::fmt::Display;
use std::time::{Duration, Instant};

use anyhow::{bail, Result};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::suites;

pub const SUITES: [&str; 6] = [
    "paper-examples",
    "kostka-identities",
    "fermionic-identities",
    "energy-properties",
    "conjectures",
    "limits",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        }
    }
}

/// How a failing check affects the exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Weight {
    /// A proven identity or a worked example; failure is an error.
    Theorem,
    /// A conjectured identity; reported only.
    Conjecture,
    /// An observation without a claimed outcome; reported only.
    Report,
}

impl Weight {
    pub fn name(self) -> &'static str {
        match self {
            Weight::Theorem => "theorem",
            Weight::Conjecture => "conjecture",
            Weight::Report => "report",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub params: String,
    pub status: Status,
    pub weight: Weight,
    pub lhs: String,
    pub rhs: String,
    pub note: String,
}

impl CheckResult {
    pub fn new(name: &str, params: impl Into<String>) -> Self {
        Self {
            name: name.to_string(),
            params: params.into(),
            status: Status::Skip,
            weight: Weight::Theorem,
            lhs: String::new(),
            rhs: String::new(),
            note: String::new(),
        }
    }

    pub fn weight(mut self, w: Weight) -> Self {
        self.weight = w;
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    /// Passes when every route yields the same value; the first route is the
    /// left-hand side.
    pub fn routes<T: PartialEq + Display, E: Display>(
        mut self,
        routes: Vec<(&str, std::result::Result<T, E>)>,
    ) -> Self {
        let mut vals = Vec::new();
        let mut text = Vec::new();
        let mut errors = Vec::new();
        for (label, r) in routes {
            match r {
                Ok(v) => {
                    text.push(format!("{label}: {v}"));
                    vals.push(v);
                }
                Err(e) => errors.push(format!("{label}: {e}")),
            }
        }
        if !errors.is_empty() {
            self.status = Status::Fail;
            self.note = errors.join("; ");
        } else {
            self.status = if vals.windows(2).all(|w| w[0] == w[1]) {
                Status::Pass
            } else {
                Status::Fail
            };
        }
        if let Some((first, rest)) = text.split_first() {
            self.lhs = first.clone();
            self.rhs = rest.join("; ");
        }
        self
    }

    /// Passes when `got` equals the expected value.
    pub fn expect<T: PartialEq + Display, E: Display>(
        self,
        got: std::result::Result<T, E>,
        want: T,
    ) -> Self {
        self.routes(vec![("computed", got), ("expected", Ok::<T, E>(want))])
    }

    /// Passes when `cond` holds; `lhs`/`rhs` describe the compared data.
    pub fn holds(mut self, cond: bool, lhs: impl Display, rhs: impl Display) -> Self {
        self.status = if cond { Status::Pass } else { Status::Fail };
        self.lhs = lhs.to_string();
        self.rhs = rhs.to_string();
        self
    }

    /// Records a failure from an error raised while preparing the check.
    pub fn error(mut self, e: impl Display) -> Self {
        self.status = Status::Fail;
        self.note = e.to_string();
        self
    }

    pub fn skip(mut self, why: impl Into<String>) -> Self {
        self.status = Status::Skip;
        self.note = why.into();
        self
    }

    pub fn is_fatal(&self) -> bool {
        self.status == Status::Fail && self.weight == Weight::Theorem
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "params": self.params,
            "status": self.status.name(),
            "weight": self.weight.name(),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "note": self.note,
        })
    }

    /// One line: status, name, parameters and, on failure, both sides.
    pub fn line(&self) -> String {
        let mut s = format!("{:4} {} [{}]", self.status.name(), self.name, self.params);
        if self.weight != Weight::Theorem {
            s.push_str(&format!(" ({})", self.weight.name()));
        }
        if self.status == Status::Fail || self.weight == Weight::Report {
            s.push_str(&format!("\n     lhs {}\n     rhs {}", self.lhs, self.rhs));
        }
        if !self.note.is_empty() {
            s.push_str(&format!("\n     note {}", self.note));
        }
        s
    }
}

/// Size limits of a suite run. Each suite has its own defaults.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_n: usize,
    /// Largest `|mu|` (or `|eta|`) in sweeps.
    pub max_mu: usize,
    pub max_level: usize,
    /// Largest crystal degree and number of tensor factors in exhaustive
    /// energy checks.
    pub max_degree: usize,
    pub max_factors: usize,
    /// Truncation order of series checks.
    pub order: i64,
    pub ladder_steps: usize,
    /// Size of sampled grids and of the random energy sample.
    pub samples: usize,
    pub seed: u64,
}

pub const DEFAULT_SEED: u64 = 20_240_601;

impl Bounds {
    pub fn for_suite(name: &str) -> Result<Self> {
        let base = Self {
            max_n: 3,
            max_mu: 7,
            max_level: 3,
            max_degree: 3,
            max_factors: 4,
            order: 6,
            ladder_steps: 10,
            samples: 20,
            seed: DEFAULT_SEED,
        };
        Ok(match name {
            "paper-examples" | "kostka-identities" | "limits" => base,
            "fermionic-identities" => Self { max_mu: 6, ..base },
            "energy-properties" => Self { samples: 300, ..base },
            "conjectures" => Self { max_mu: 6, order: 5, ..base },
            _ => bail!("unknown suite {name:?}; expected one of {}", SUITES.join(", ")),
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "max_n": self.max_n,
            "max_mu": self.max_mu,
            "max_level": self.max_level,
            "max_degree": self.max_degree,
            "max_factors": self.max_factors,
            "order": self.order,
            "ladder_steps": self.ladder_steps,
            "samples": self.samples,
            "seed": self.seed,
        })
    }
}

/// A unit of work: computes one or more checks.
pub type Job = Box<dyn Fn() -> Vec<CheckResult> + Send + Sync>;

pub fn job(f: impl Fn() -> Vec<CheckResult> + Send + Sync + 'static) -> Job {
    Box::new(f)
}

pub fn job1(f: impl Fn() -> CheckResult + Send + Sync + 'static) -> Job {
    Box::new(move || vec![f()])
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub suite: String,
    pub bounds: Bounds,
    pub checks: Vec<CheckResult>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    /// Failed checks that make the run fail (conjectures and reports never do).
    pub fn fatal_failures(&self) -> usize {
        self.checks.iter().filter(|c| c.is_fatal()).count()
    }

    pub fn nonfatal_failures(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Fail && c.weight != Weight::Theorem)
            .count()
    }

    pub fn passed(&self) -> bool {
        self.fatal_failures() == 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "bounds": self.bounds.to_json(),
            "elapsed_seconds": self.elapsed.as_secs_f64(),
            "summary": {
                "checks": self.checks.len(),
                "pass": self.count(Status::Pass),
                "fail": self.count(Status::Fail),
                "skip": self.count(Status::Skip),
                "fatal_failures": self.fatal_failures(),
            },
            "checks": self.checks.iter().map(CheckResult::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn summary(&self) -> String {
        format!(
            "suite {}: {} checks, {} pass, {} fail ({} fatal), {} skip, {:.2}s",
            self.suite,
            self.checks.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.fatal_failures(),
            self.count(Status::Skip),
            self.elapsed.as_secs_f64()
        )
    }
}

/// Runs every check of the suite on the current rayon pool. Results keep
/// the order in which the suite lists its jobs.
pub fn run_suite(name: &str, bounds: &Bounds) -> Result<VerificationReport> {
    let jobs = suites::jobs(name, bounds)?;
    let start = Instant::now();
    let checks: Vec<CheckResult> = jobs.par_iter().flat_map_iter(|j| j()).collect();
    Ok(VerificationReport {
        suite: name.to_string(),
        bounds: *bounds,
        checks,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn routes_compare_all_values() {
        let c = CheckResult::new("x", "").routes(vec![("a", Ok::<i32, String>(1)), ("b", Ok(1)), ("c", Ok(1))]);
        assert_eq!(c.status, Status::Pass);
        assert_eq!(c.rhs, "b: 1; c: 1");
        let c = CheckResult::new("x", "").routes(vec![("a", Ok::<i32, String>(1)), ("b", Ok(2))]);
        assert_eq!(c.status, Status::Fail);
        let c = CheckResult::new("x", "").routes(vec![("a", Ok::<i32, String>(1)), ("b", Err("bad".to_string()))]);
        assert_eq!(c.status, Status::Fail);
        assert_eq!(c.note, "b: bad");
    }

    #[test]
    fn conjecture_failures_are_not_fatal() {
        let fail = CheckResult::new("x", "").holds(false, 1, 2);
        let report = VerificationReport {
            suite: "t".into(),
            bounds: Bounds::for_suite("limits").unwrap(),
            checks: vec![fail.clone().weight(Weight::Conjecture), fail.clone().weight(Weight::Report)],
            elapsed: Duration::ZERO,
        };
        assert!(report.passed());
        assert_eq!(report.nonfatal_failures(), 2);
        let report = VerificationReport { checks: vec![fail], ..report };
        assert!(!report.passed());
    }

    #[test]
    fn unknown_suite() {
        assert!(Bounds::for_suite("nope").is_err());
        assert!(run_suite("nope", &Bounds::for_suite("limits").unwrap()).is_err());
    }
}
