//! Identity suites. Each suite builds a [`Plan`] of independent cases, runs
//! them in parallel and assembles a [`Report`] in plan order.
//!
//! A case is either a gate, which decides whether the suite passes, or a
//! finding, which is recorded but never fails the suite. Every case that
//! does not hold carries a witness with the command line that re-runs it.

mod arith;
mod basis;
mod hopf;
mod lattice;
mod scan;
mod stembridge;

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::symfunc::{SymFunc, TruncationProfile};

pub use arith::{brute_force_product, plan_arithmetic, verify_arithmetic, DEFAULT_SEED};
pub use basis::{plan_basis_identities, verify_basis_identities};
pub use hopf::{plan_hopf, verify_hopf, HopfBounds};
pub use lattice::{
    plan_alpha_recurrence, plan_lattice_rules, verify_alpha_recurrence, verify_lattice_rules,
};
pub use scan::{converse_scan, passes_converse, plan_converse_scan};
pub use stembridge::{
    plan_stembridge_big_g, plan_stembridge_g, verify_stembridge_big_g, verify_stembridge_g,
};

/// Binary name used in re-run commands.
pub const BINARY: &str = "staircase-groth";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Gate,
    Finding,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub detail: String,
    pub rerun: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case {
    pub inputs: String,
    pub relation: String,
    pub role: Role,
    pub holds: bool,
    pub modulus: Option<TruncationProfile>,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub command: String,
    /// Shared by every case, when they agree.
    pub modulus: Option<TruncationProfile>,
    pub passed: bool,
    pub cases: Vec<Case>,
}

impl Report {
    pub fn gates(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| c.role == Role::Gate)
    }

    pub fn findings(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| c.role == Role::Finding)
    }

    pub fn case(&self, inputs: &str) -> Option<&Case> {
        self.cases.iter().find(|c| c.inputs == inputs)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("# suite={} command=\"{}\"", self.suite, self.command);
        if let Some(m) = self.modulus {
            out += &format!(" modulus=\"{m}\"");
        }
        out.push('\n');
        for c in &self.cases {
            let verdict = match (c.role, c.holds) {
                (_, true) => "ok",
                (Role::Gate, false) => "FAIL",
                (Role::Finding, false) => "differs",
            };
            let role = match c.role {
                Role::Gate => "gate",
                Role::Finding => "finding",
            };
            out += &format!("{verdict:<7} {role:<7} {}  {}", c.inputs, c.relation);
            if self.modulus.is_none() {
                if let Some(m) = c.modulus {
                    out += &format!("  [{m}]");
                }
            }
            out.push('\n');
            if let Some(w) = &c.witness {
                out += &format!(
                    "        witness: {}\n        rerun: {}\n",
                    w.detail, w.rerun
                );
            }
        }
        let gates = self.gates().count();
        let failed = self.gates().filter(|c| !c.holds).count();
        let findings = self.findings().count();
        let differing = self.findings().filter(|c| !c.holds).count();
        out += &format!(
            "# {} cases: {gates} gates ({failed} failed), {findings} findings ({differing} differ): {}\n",
            self.cases.len(),
            if self.passed { "PASS" } else { "FAIL" }
        );
        out
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Outcome of one check: `Err` carries the counterexample description.
pub type Outcome = Result<(), String>;

type Check = Box<dyn Fn() -> Outcome + Send + Sync>;

struct Job {
    inputs: String,
    relation: String,
    role: Role,
    modulus: Option<TruncationProfile>,
    check: Check,
}

/// The cases of a suite, not yet run.
pub struct Plan {
    suite: String,
    command: String,
    jobs: Vec<Job>,
}

impl Plan {
    /// An empty plan whose reruns read `staircase-groth verify --suite <suite> <args>`.
    pub fn new(suite: &str, args: &str) -> Self {
        Plan {
            suite: suite.to_string(),
            command: format!("{BINARY} verify --suite {suite} {args}")
                .trim_end()
                .to_string(),
            jobs: Vec::new(),
        }
    }

    /// Adds a case; `check` returns the witness detail when the relation fails.
    pub fn push(
        &mut self,
        role: Role,
        inputs: String,
        relation: &str,
        modulus: Option<TruncationProfile>,
        check: impl Fn() -> Outcome + Send + Sync + 'static,
    ) {
        self.jobs.push(Job {
            inputs,
            relation: relation.to_string(),
            role,
            modulus,
            check: Box::new(check),
        });
    }

    pub fn len(&self) -> usize {
        self.jobs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.jobs.is_empty()
    }

    pub fn inputs(&self) -> Vec<&str> {
        self.jobs.iter().map(|j| j.inputs.as_str()).collect()
    }

    /// Keeps only the case with the given inputs.
    pub fn only(mut self, inputs: &str) -> Plan {
        self.jobs.retain(|j| j.inputs == inputs);
        self
    }

    pub fn run(&self) -> Report {
        let cases: Vec<Case> = self
            .jobs
            .par_iter()
            .map(|job| {
                let outcome = (job.check)();
                Case {
                    inputs: job.inputs.clone(),
                    relation: job.relation.clone(),
                    role: job.role,
                    holds: outcome.is_ok(),
                    modulus: job.modulus,
                    witness: outcome.err().map(|detail| Witness {
                        detail,
                        rerun: format!("{} --case '{}'", self.command, job.inputs),
                    }),
                }
            })
            .collect();
        let first = cases.first().and_then(|c| c.modulus);
        let modulus = if cases.iter().all(|c| c.modulus == first) {
            first
        } else {
            None
        };
        Report {
            suite: self.suite.clone(),
            command: self.command.clone(),
            modulus,
            passed: cases.iter().all(|c| c.role == Role::Finding || c.holds),
            cases,
        }
    }
}

/// Exact comparison; on mismatch names the first differing coefficient.
pub(crate) fn same(lhs: &SymFunc, rhs: &SymFunc) -> Outcome {
    if lhs == rhs {
        return Ok(());
    }
    let keys = lhs.coeffs().keys().chain(rhs.coeffs().keys());
    let key = keys
        .filter(|k| lhs.coeff(k) != rhs.coeff(k))
        .min()
        .expect("unequal functions differ somewhere");
    Err(format!(
        "coefficient of m[{key}]: left {} vs right {}",
        lhs.coeff(key),
        rhs.coeff(key)
    ))
}

pub(crate) fn equal<T: PartialEq + fmt::Debug>(what: &str, lhs: T, rhs: T) -> Outcome {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{what}: left {lhs:?} vs right {rhs:?}"))
    }
}

/// Turns a library error into a failed outcome.
pub(crate) fn lift<T>(r: crate::error::Result<T>) -> Result<T, String> {
    r.map_err(|e| format!("error: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reports_keep_plan_order_and_gate_on_gates_only() {
        let mut plan = Plan::new("demo", "--n 1");
        for i in 0..50 {
            plan.push(Role::Gate, format!("i={i}"), "trivial", None, || Ok(()));
        }
        plan.push(Role::Finding, "odd".into(), "never", None, || {
            Err("no".into())
        });
        let r = plan.run();
        assert!(r.passed);
        let order: Vec<_> = r.cases.iter().map(|c| c.inputs.clone()).collect();
        let mut expect: Vec<_> = (0..50).map(|i| format!("i={i}")).collect();
        expect.push("odd".into());
        assert_eq!(order, expect);
        let odd = r.case("odd").unwrap();
        assert_eq!(
            odd.witness.as_ref().unwrap().rerun,
            "staircase-groth verify --suite demo --n 1 --case 'odd'"
        );
        assert!(r.cases.iter().all(|c| c.holds == c.witness.is_none()));
    }

    #[test]
    fn failing_gate_fails_the_report() {
        let mut plan = Plan::new("demo", "");
        plan.push(Role::Gate, "a".into(), "x", None, || Ok(()));
        plan.push(Role::Gate, "b".into(), "x", None, || Err("bad".into()));
        let r = plan.run();
        assert!(!r.passed);
        assert!(r.to_text().contains("FAIL"));
        let only = Plan::new("demo", "");
        assert!(only.only("zzz").is_empty());
    }

    #[test]
    fn report_json_round_trips() {
        let mut plan = Plan::new("demo", "");
        let t = TruncationProfile::degree(3);
        plan.push(Role::Gate, "a".into(), "x", Some(t), || Ok(()));
        plan.push(Role::Finding, "b".into(), "y", Some(t), || Err("w".into()));
        let r = plan.run();
        assert_eq!(r.modulus, Some(t));
        let s = serde_json::to_string(&r).unwrap();
        let back: Report = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }
}
