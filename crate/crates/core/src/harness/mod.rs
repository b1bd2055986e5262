//! Named verification checks with seeded sampling and JSON reporting.
//!
//! Each registered check encodes one published statement about double-move
//! token graphs — a structure theorem, an exact invariant value, a bound,
//! or an automorphism count — as an executable predicate over concrete
//! instances. Checks draw random instances from a private PRNG stream
//! seeded by `suite seed XOR fnv1a64(check name)`, so adding, removing, or
//! reordering checks never perturbs another check's samples and a report
//! is reproducible from `(suite, seed, caps)` alone.
//!
//! Four statuses classify an outcome:
//!
//! - `pass` — the statement held on every instance tried;
//! - `fail` — a genuine violation was found; the witness explains it;
//! - `discrepancy-expected` — the computation disagrees with the source
//!   statement in a documented way (a formula that misses a factor, a
//!   constant that is off for boundary parameters); the witness carries
//!   the counterexample so it can be re-checked standalone;
//! - `budget-exceeded` — an exact solver hit the configured resource cap
//!   before finishing.
//!
//! `budget-exceeded` counts toward `summary.fail`: an unverified claim is
//! not a verified one. The overall exit code distinguishes the two cases
//! (see [`Report::exit_code`]).

mod checks;
pub mod sampler;

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::budget::{Budget, ResourceError};

/// Raised when a suite selection names a check that is not registered.
#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown check `{name}`; registered checks: {known}")]
    UnknownCheck { name: String, known: String },
}

/// Final classification of one check run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CheckStatus {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "discrepancy-expected")]
    DiscrepancyExpected,
    #[serde(rename = "budget-exceeded")]
    BudgetExceeded,
}

impl CheckStatus {
    /// The kebab-case name used in report JSON.
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::DiscrepancyExpected => "discrepancy-expected",
            CheckStatus::BudgetExceeded => "budget-exceeded",
        }
    }
}

/// What a check runner hands back: a status plus the evidence for it.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub status: CheckStatus,
    pub expected: Value,
    pub actual: Value,
    pub witness: Option<Value>,
}

impl CheckOutcome {
    pub fn pass(expected: Value, actual: Value) -> Self {
        CheckOutcome {
            status: CheckStatus::Pass,
            expected,
            actual,
            witness: None,
        }
    }

    pub fn fail(expected: Value, actual: Value, witness: Value) -> Self {
        CheckOutcome {
            status: CheckStatus::Fail,
            expected,
            actual,
            witness: Some(witness),
        }
    }

    pub fn discrepancy(expected: Value, actual: Value, witness: Value) -> Self {
        CheckOutcome {
            status: CheckStatus::DiscrepancyExpected,
            expected,
            actual,
            witness: Some(witness),
        }
    }
}

/// Per-check execution context: a private random stream, a resource
/// budget, and the caller's size caps.
pub struct CheckCtx {
    pub rng: ChaCha8Rng,
    pub budget: Budget,
    pub include_slow: bool,
    max_n: Option<usize>,
}

impl CheckCtx {
    /// Clamp a check's default size parameter to the configured cap.
    pub fn cap(&self, n: usize) -> usize {
        match self.max_n {
            Some(cap) => n.min(cap),
            None => n,
        }
    }
}

type CheckFn = fn(&mut CheckCtx) -> Result<CheckOutcome, ResourceError>;

/// A registered check: unique name, a human-readable parameter summary,
/// and the runner. `slow` marks checks skipped unless slow work is
/// requested; checks with only a slow *portion* gate it internally on
/// [`CheckCtx::include_slow`] instead.
pub struct CheckSpec {
    pub name: &'static str,
    pub slow: bool,
    pub params: &'static str,
    run: CheckFn,
}

/// The full check registry, in report order.
pub fn registry() -> &'static [CheckSpec] {
    checks::REGISTRY
}

/// Suite-level knobs. `max_n` caps sampler sizes and family parameters;
/// `node_limit`/`timeout_secs` bound each individual check's exact-solver
/// work (not the whole suite).
#[derive(Debug, Clone)]
pub struct RunOptions {
    pub seed: u64,
    pub include_slow: bool,
    pub max_n: Option<usize>,
    pub timeout_secs: Option<u64>,
    pub node_limit: Option<u64>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            seed: 0,
            include_slow: false,
            max_n: None,
            timeout_secs: None,
            node_limit: None,
        }
    }
}

/// The caps echoed into the report so a reader can reproduce the run.
#[derive(Debug, Clone, Serialize)]
pub struct Caps {
    pub max_n: Option<usize>,
    pub timeout_secs: Option<u64>,
    pub node_limit: Option<u64>,
    pub include_slow: bool,
}

/// One executed check, as serialized into the report.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub params: String,
    pub status: CheckStatus,
    pub expected: Value,
    pub actual: Value,
    pub witness: Value,
    pub runtime_ms: u64,
}

#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub discrepancy: usize,
    pub skipped: usize,
}

/// A full suite run. Deterministic given `(suite, seed, caps)` except for
/// the per-check `runtime_ms` fields.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub version: String,
    pub caps: Caps,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    /// Process exit code for this report: 1 if any check failed outright,
    /// 3 if none failed but a resource budget was exhausted, 0 otherwise
    /// (passes and documented discrepancies both count as success).
    pub fn exit_code(&self) -> i32 {
        if self.checks.iter().any(|c| c.status == CheckStatus::Fail) {
            1
        } else if self
            .checks
            .iter()
            .any(|c| c.status == CheckStatus::BudgetExceeded)
        {
            3
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// FNV-1a, used to derive a per-check seed offset from the check name.
fn fnv1a64(s: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in s.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

fn resolve<'r>(selection: &str) -> Result<Vec<(&'r CheckSpec, bool)>, HarnessError> {
    let specs = registry();
    match selection {
        // "all" runs slow checks only when slow work is requested (the
        // second tuple field marks specs subject to that gate); "fast"
        // excludes them outright.
        "all" => Ok(specs.iter().map(|s| (s, s.slow)).collect()),
        "fast" => Ok(specs.iter().filter(|s| !s.slow).map(|s| (s, false)).collect()),
        names => names
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|name| {
                specs
                    .iter()
                    .find(|s| s.name == name)
                    // Naming a check explicitly always runs it, slow or not.
                    .map(|s| (s, false))
                    .ok_or_else(|| HarnessError::UnknownCheck {
                        name: name.to_string(),
                        known: specs.iter().map(|s| s.name).collect::<Vec<_>>().join(", "),
                    })
            })
            .collect(),
    }
}

/// Run the named checks (or `"all"` / `"fast"`) and assemble the report.
/// A single failing check never aborts the suite.
pub fn run_suite(selection: &str, opts: &RunOptions) -> Result<Report, HarnessError> {
    let chosen = resolve(selection)?;
    let mut results = Vec::new();
    let mut summary = Summary::default();

    for (spec, gated) in chosen {
        if gated && !opts.include_slow {
            summary.skipped += 1;
            continue;
        }
        let mut ctx = CheckCtx {
            rng: ChaCha8Rng::seed_from_u64(opts.seed ^ fnv1a64(spec.name)),
            budget: match (opts.node_limit, opts.timeout_secs) {
                (None, None) => Budget::unlimited(),
                (nodes, secs) => Budget::new(nodes.unwrap_or(u64::MAX), secs),
            },
            include_slow: opts.include_slow,
            max_n: opts.max_n,
        };
        let started = Instant::now();
        let outcome = (spec.run)(&mut ctx).unwrap_or_else(|err| CheckOutcome {
            status: CheckStatus::BudgetExceeded,
            expected: Value::String("completion within the resource budget".into()),
            actual: Value::String(err.to_string()),
            witness: None,
        });
        match outcome.status {
            CheckStatus::Pass => summary.pass += 1,
            CheckStatus::Fail | CheckStatus::BudgetExceeded => summary.fail += 1,
            CheckStatus::DiscrepancyExpected => summary.discrepancy += 1,
        }
        results.push(CheckResult {
            name: spec.name.to_string(),
            params: spec.params.to_string(),
            status: outcome.status,
            expected: outcome.expected,
            actual: outcome.actual,
            witness: outcome.witness.unwrap_or(Value::Null),
            runtime_ms: started.elapsed().as_millis() as u64,
        });
    }

    Ok(Report {
        suite: selection.to_string(),
        seed: opts.seed,
        version: env!("CARGO_PKG_VERSION").to_string(),
        caps: Caps {
            max_n: opts.max_n,
            timeout_secs: opts.timeout_secs,
            node_limit: opts.node_limit,
            include_slow: opts.include_slow,
        },
        checks: results,
        summary,
    })
}
