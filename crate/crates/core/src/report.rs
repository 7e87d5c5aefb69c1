//! Law reports with replayable counterexamples.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::Result;

/// Sampling parameters shared by every checker.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LawConfig {
    pub seed: u64,
    pub cases: usize,
    /// Largest arity drawn for multiary laws.
    pub max_arity: usize,
}

impl LawConfig {
    pub fn new(seed: u64, cases: usize) -> Self {
        LawConfig {
            seed,
            cases,
            max_arity: 6,
        }
    }

    pub fn with_max_arity(mut self, max_arity: usize) -> Self {
        self.max_arity = max_arity;
        self
    }
}

impl Default for LawConfig {
    fn default() -> Self {
        LawConfig::new(42, 500)
    }
}

/// The first failing case of a law, with every input rendered as text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub case: usize,
    pub inputs: Vec<(String, String)>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawOutcome {
    pub law: String,
    pub cases: usize,
    pub passed: usize,
    /// Cases that exercised the law's degenerate branch (empty partition
    /// blocks, all-X / all-Y splits, zero scalings, ...).
    pub degenerate: usize,
    pub counterexample: Option<Counterexample>,
}

impl LawOutcome {
    pub fn new(law: &str) -> Self {
        LawOutcome {
            law: law.to_string(),
            cases: 0,
            passed: 0,
            degenerate: 0,
            counterexample: None,
        }
    }

    pub fn holds(&self) -> bool {
        self.cases == self.passed
    }

    /// Records one case. Equality holds only when both sides evaluate without
    /// error and are equal.
    pub fn check<P, F>(&mut self, case: usize, lhs: Result<P>, rhs: Result<P>, inputs: F)
    where
        P: PartialEq + fmt::Display,
        F: FnOnce() -> Vec<(String, String)>,
    {
        let ok = matches!((&lhs, &rhs), (Ok(a), Ok(b)) if a == b);
        self.record(case, ok, inputs, || (render(&lhs), render(&rhs)));
    }

    /// Records one case whose verdict was computed by the caller.
    pub fn record<F, G>(&mut self, case: usize, ok: bool, inputs: F, sides: G)
    where
        F: FnOnce() -> Vec<(String, String)>,
        G: FnOnce() -> (String, String),
    {
        self.cases += 1;
        if ok {
            self.passed += 1;
        } else if self.counterexample.is_none() {
            let (lhs, rhs) = sides();
            self.counterexample = Some(Counterexample {
                case,
                inputs: inputs(),
                lhs,
                rhs,
            });
        }
    }
}

fn render<P: fmt::Display>(r: &Result<P>) -> String {
    match r {
        Ok(p) => p.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

/// Builds the `(name, value)` list of a counterexample.
#[macro_export]
macro_rules! inputs {
    ($($name:literal => $value:expr),* $(,)?) => {
        || $crate::__private::vec![$(($name.into(), $crate::__private::ToString::to_string(&$value))),*]
    };
}

/// A collection of law outcomes, in the order they were run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LawReport {
    pub outcomes: Vec<LawOutcome>,
}

impl LawReport {
    pub fn new() -> Self {
        LawReport::default()
    }

    pub fn push(&mut self, outcome: LawOutcome) {
        self.outcomes.push(outcome);
    }

    pub fn extend(&mut self, other: LawReport) {
        self.outcomes.extend(other.outcomes);
    }

    pub fn all_hold(&self) -> bool {
        self.outcomes.iter().all(LawOutcome::holds)
    }

    pub fn get(&self, law: &str) -> Option<&LawOutcome> {
        self.outcomes.iter().find(|o| o.law == law)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawOutcome> {
        self.outcomes.iter().filter(|o| !o.holds())
    }
}

impl From<LawOutcome> for LawReport {
    fn from(o: LawOutcome) -> Self {
        LawReport {
            outcomes: alloc::vec![o],
        }
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            let verdict = if o.holds() { "PASS" } else { "FAIL" };
            write!(f, "{verdict} {:<28} {}/{}", o.law, o.passed, o.cases)?;
            if o.degenerate > 0 {
                write!(f, " (degenerate: {})", o.degenerate)?;
            }
            writeln!(f)?;
            if let Some(c) = &o.counterexample {
                write!(f, "  case {}:", c.case)?;
                for (name, value) in &c.inputs {
                    write!(f, " {name}={value}")?;
                }
                writeln!(f)?;
                writeln!(f, "  lhs = {}", c.lhs)?;
                writeln!(f, "  rhs = {}", c.rhs)?;
            }
        }
        Ok(())
    }
}
