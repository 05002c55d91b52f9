//! Validation reports listing every violated axiom instance.

use crate::scalar::Scalar;
use std::fmt;

/// One failed axiom instance at a specific basis tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomFailure {
    pub axiom: &'static str,
    pub indices: Vec<usize>,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

/// Outcome of checking an axiom list over all basis tuples. Failures are
/// reported in deterministic (axiom, lexicographic tuple) order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub failures: Vec<AxiomFailure>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }

    /// Record a failure when `lhs != rhs`.
    pub fn check(&mut self, axiom: &'static str, indices: &[usize], lhs: Vec<Scalar>, rhs: Vec<Scalar>) {
        if lhs != rhs {
            self.failures.push(AxiomFailure {
                axiom,
                indices: indices.to_vec(),
                lhs,
                rhs,
            });
        }
    }

    /// Record a failure for a condition with no meaningful lhs/rhs values
    /// (rank conditions, exactness).
    pub fn require(&mut self, axiom: &'static str, ok: bool) {
        if !ok {
            self.failures.push(AxiomFailure {
                axiom,
                indices: Vec::new(),
                lhs: Vec::new(),
                rhs: Vec::new(),
            });
        }
    }

    pub fn merge(&mut self, other: ValidationReport) {
        self.failures.extend(other.failures);
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return writeln!(f, "valid");
        }
        writeln!(f, "invalid: {} axiom instance(s) fail", self.failures.len())?;
        for fail in &self.failures {
            write!(f, "  {}", fail.axiom)?;
            if !fail.indices.is_empty() {
                write!(f, " at {:?}", fail.indices)?;
            }
            if !fail.lhs.is_empty() || !fail.rhs.is_empty() {
                let fmt_vec = |v: &[Scalar]| {
                    v.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",")
                };
                write!(f, ": lhs=({}) rhs=({})", fmt_vec(&fail.lhs), fmt_vec(&fail.rhs))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
