//! Verification harness.
//!
//! Exhaustive enumeration of small connected graphs, the theorem sweep over
//! them, and the randomized and exhaustive lemma suites. Randomized parts
//! use ChaCha8 seeded through `SeedableRng::seed_from_u64`, so a seed fully
//! determines every generated corpus.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::extremal::ExtremalError;
use crate::graph::GraphError;

mod canon;
mod count;
mod enumerate;
pub mod generate;
mod lemmas;
mod sweep;

pub use canon::{canonical_form, Canonizer};
pub use count::{recount_connected, unlabeled_graph_count};
pub use enumerate::{edge_slots, enumerate_connected, graph_from_mask, MAX_LABELED_N, MAX_UNLABELED_N};
pub use lemmas::{
    decorated_chi_check, lemma_big_check, lemma_big_sweep, pendant_closure_check, pendant_closure_suite,
    DecoratedBounds,
};
pub use sweep::{
    check_theorem, check_theorem_sampled, check_theorem_with_jobs, render_table, theorem_holds_for,
    EnumerationSummary,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("n = {n} is out of range for {mode} enumeration (1..={max})")]
    OutOfRange { n: usize, mode: Mode, max: usize },
    #[error("input is not extremal (gap = {gap})")]
    NotExtremal { gap: i64 },
    #[error("input is neither type A nor type B")]
    NotExtremalShape,
    #[error("input needs at least 2 vertices")]
    TooSmall,
    #[error("{mode} count for n = {n}: enumerated {enumerated}, recount gives {recount}")]
    RecountMismatch { n: usize, mode: Mode, enumerated: u64, recount: u64 },
    #[error("invalid bounds: {0}")]
    InvalidBounds(String),
    #[error("thread pool: {0}")]
    ThreadPool(String),
    #[error(transparent)]
    Extremal(#[from] ExtremalError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Labeled graphs are distinct edge sets on `0..n`; unlabeled graphs are
/// isomorphism classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Labeled,
    Unlabeled,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Labeled => "labeled",
            Mode::Unlabeled => "unlabeled",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "labeled" => Ok(Mode::Labeled),
            "unlabeled" => Ok(Mode::Unlabeled),
            other => Err(format!("unknown mode `{other}` (expected labeled or unlabeled)")),
        }
    }
}

/// Outcome of one randomized or exhaustive property suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checked: usize,
    /// graph6 strings of failing graphs, in generation order.
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\tchecked={}\tfailures={}", self.name, self.checked, self.failures.len())
    }
}
