//! Machine-readable outcome of a single numerical check.

use alloc::collections::BTreeMap;
use alloc::string::String;

/// Result of one check: `passed ⇔ |measured − target| ≤ tolerance`.
///
/// Band-style checks (`lo ≤ measured ≤ hi`) are encoded with
/// `target = (lo+hi)/2` and `tolerance = (hi−lo)/2`, which satisfies the
/// same invariant. Metadata keys are sorted, so serialization is
/// deterministic.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub check_name: String,
    pub measured: f64,
    pub target: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub metadata: BTreeMap<String, String>,
}

impl CheckReport {
    pub fn against(name: impl Into<String>, measured: f64, target: f64, tolerance: f64) -> Self {
        Self {
            check_name: name.into(),
            measured,
            target,
            tolerance,
            passed: (measured - target).abs() <= tolerance,
            metadata: BTreeMap::new(),
        }
    }

    /// Passes iff `measured ∈ [lo, hi]`.
    pub fn within_band(name: impl Into<String>, measured: f64, lo: f64, hi: f64) -> Self {
        Self::against(name, measured, 0.5 * (lo + hi), 0.5 * (hi - lo))
    }

    /// Attaches a metadata entry.
    pub fn with_meta(mut self, key: impl Into<String>, value: impl Into<String>) -> Self {
        self.metadata.insert(key.into(), value.into());
        self
    }
}
