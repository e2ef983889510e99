//! Report types and the harness error taxonomy. Exit codes: 0 all pass,
//! 1 theorem or property failure (with witnesses), 2 usage error, 3 internal
//! inconsistency (two routes to the same value disagreed).

use serde::Serialize;
use thiserror::Error;

use vnl_core::RingError;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("usage error: {0}")]
    Usage(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl From<RingError> for HarnessError {
    fn from(e: RingError) -> Self {
        match e {
            RingError::Inconsistency(msg) => HarnessError::Inconsistency(msg),
            other => HarnessError::Usage(other.to_string()),
        }
    }
}

impl HarnessError {
    pub fn exit_code(&self) -> u8 {
        match self {
            HarnessError::Usage(_) => 2,
            HarnessError::Inconsistency(_) => 3,
        }
    }
}

/// One failing instance of a theorem check, with enough data to re-run it:
/// the ring expression, the witness indices, and the violated condition.
#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub ring: String,
    pub witness: String,
    pub condition: String,
}

/// Result of running one named check over a corpus.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub theorem_id: String,
    pub corpus_description: String,
    pub instances_checked: usize,
    pub failures: Vec<Failure>,
    pub wall_time_ms: u64,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Top-level JSON report for a suite run.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub tool_version: String,
    pub profile: String,
    pub seed: u64,
    pub reports: Vec<TheoremReport>,
}
