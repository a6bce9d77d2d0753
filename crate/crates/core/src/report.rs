//! Check results: a report is a list of violations, each pinned to the basis
//! tuple where an identity failed, with both sides of the identity evaluated.
//!
//! Multilinearity is what makes basis tuples sufficient: every identity this
//! crate checks is linear in each argument separately, so vanishing on all
//! basis tuples is equivalent to vanishing on all vectors.

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use serde::{Deserialize, Serialize};

use crate::scalar::{format_vector, Scalar};

/// Process-wide cap on stored violations per report. Checks still count every
/// violation (so `passed` is exact); only the stored witnesses are truncated.
static MAX_VIOLATIONS: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_VIOLATIONS);

pub const DEFAULT_MAX_VIOLATIONS: usize = 32;

pub fn max_violations() -> usize {
    MAX_VIOLATIONS.load(Ordering::Relaxed)
}

/// Sets the stored-violation cap (minimum 1). The CLI wires this to
/// `LYT_MAX_VIOLATIONS`; library users normally leave the default.
pub fn set_max_violations(cap: usize) {
    MAX_VIOLATIONS.store(cap.max(1), Ordering::Relaxed);
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// Which identity failed, e.g. "LY3", "mrb-binary", "R6'".
    pub axiom: String,
    /// Basis indices at which the two sides differ.
    pub indices: Vec<usize>,
    /// Left-hand side evaluated at those indices.
    #[serde(with = "crate::scalar::serde_scalars")]
    pub left: Vec<Scalar>,
    /// Right-hand side evaluated at those indices.
    #[serde(with = "crate::scalar::serde_scalars")]
    pub right: Vec<Scalar>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at {:?}: lhs {} != rhs {}",
            self.axiom,
            self.indices,
            format_vector(&self.left),
            format_vector(&self.right)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub passed: bool,
    /// Stored witnesses, at most the configured cap.
    pub violations: Vec<Violation>,
    /// Total number of violations found, including ones beyond the cap.
    pub total_violations: usize,
    pub truncated: bool,
}

impl AxiomReport {
    pub fn pass() -> Self {
        AxiomReport {
            passed: true,
            violations: Vec::new(),
            total_violations: 0,
            truncated: false,
        }
    }

    /// Merges several reports (e.g. per-axiom sub-reports) into one.
    pub fn merge(reports: impl IntoIterator<Item = AxiomReport>) -> Self {
        let cap = max_violations();
        let mut out = AxiomReport::pass();
        for r in reports {
            out.total_violations += r.total_violations;
            for v in r.violations {
                if out.violations.len() < cap {
                    out.violations.push(v);
                }
            }
        }
        out.passed = out.total_violations == 0;
        out.truncated = out.violations.len() < out.total_violations;
        out
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            return write!(f, "pass");
        }
        writeln!(f, "{} violation(s):", self.total_violations)?;
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        if self.truncated {
            writeln!(f, "  ... ({} shown)", self.violations.len())?;
        }
        Ok(())
    }
}

/// Accumulates violations during a check, honoring the storage cap.
pub struct ReportBuilder {
    cap: usize,
    violations: Vec<Violation>,
    total: usize,
}

impl ReportBuilder {
    pub fn new() -> Self {
        Self::with_cap(max_violations())
    }

    pub fn with_cap(cap: usize) -> Self {
        ReportBuilder {
            cap: cap.max(1),
            violations: Vec::new(),
            total: 0,
        }
    }

    pub fn record(&mut self, axiom: &str, indices: &[usize], left: Vec<Scalar>, right: Vec<Scalar>) {
        self.total += 1;
        if self.violations.len() < self.cap {
            self.violations.push(Violation {
                axiom: axiom.to_owned(),
                indices: indices.to_vec(),
                left,
                right,
            });
        }
    }

    /// Compares the two sides of an identity and records a violation if they differ.
    pub fn check(&mut self, axiom: &str, indices: &[usize], left: &[Scalar], right: &[Scalar]) {
        if left != right {
            self.record(axiom, indices, left.to_vec(), right.to_vec());
        }
    }

    pub fn finish(self) -> AxiomReport {
        AxiomReport {
            passed: self.total == 0,
            truncated: self.violations.len() < self.total,
            violations: self.violations,
            total_violations: self.total,
        }
    }
}

impl Default for ReportBuilder {
    fn default() -> Self {
        Self::new()
    }
}
