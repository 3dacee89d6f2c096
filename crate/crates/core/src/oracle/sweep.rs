use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::count::recount_connected;
use super::enumerate::{check_range, edge_slots, graph_from_mask, MaskFilter};
use super::{Mode, OracleError};
use crate::extremal::{classify, gap};
use crate::graph::Graph;
use crate::io::to_graph6;

/// Masks per work unit. Fixed so that chunk boundaries, and therefore the
/// merged output, do not depend on the number of workers.
const CHUNK: u64 = 1 << 12;

/// Theorem sweep result for one vertex count.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EnumerationSummary {
    pub n: usize,
    pub mode: Mode,
    pub connected_count: u64,
    pub extremal_count: u64,
    /// graph6 strings of graphs where the bound fails or where
    /// `gap == 0` and the structural classification disagree.
    pub counterexamples: Vec<String>,
}

impl EnumerationSummary {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn row(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}",
            self.n,
            self.mode,
            self.connected_count,
            self.extremal_count,
            self.counterexamples.len()
        )
    }
}

/// Tab-separated table with a header line, one row per summary.
pub fn render_table(summaries: &[EnumerationSummary]) -> String {
    let mut out = String::from("n\tmode\tconnected\textremal\tcounterexamples\n");
    for s in summaries {
        out.push_str(&s.row());
        out.push('\n');
    }
    out
}

/// Returns `(extremal, holds)`: whether `gap == 0`, and whether the graph is
/// consistent with the bound and the characterization.
fn judge(g: &Graph) -> Result<(bool, bool), OracleError> {
    let report = gap(g)?;
    let shaped = classify(g)?.is_extremal_shape();
    let extremal = report.gap == 0;
    Ok((extremal, report.gap >= 0 && extremal == shaped))
}

/// Checks one connected graph: the gap is nonnegative and it is zero
/// exactly when the graph is type A or B.
pub fn theorem_holds_for(g: &Graph) -> Result<bool, OracleError> {
    judge(g).map(|(_, holds)| holds)
}

#[derive(Default)]
struct Partial {
    connected: u64,
    extremal: u64,
    counterexamples: Vec<String>,
}

impl Partial {
    fn record(&mut self, g: &Graph) {
        // inputs here are connected by construction
        let (extremal, holds) = judge(g).expect("enumerated graphs are connected");
        self.connected += 1;
        self.extremal += extremal as u64;
        if !holds {
            self.counterexamples.push(to_graph6(g));
        }
    }

    fn merge(mut self, other: Partial) -> Partial {
        self.connected += other.connected;
        self.extremal += other.extremal;
        self.counterexamples.extend(other.counterexamples);
        self
    }
}

/// Theorem sweep over all connected graphs with `1..=n_max` vertices using
/// the default number of worker threads.
pub fn check_theorem(n_max: usize, mode: Mode) -> Result<Vec<EnumerationSummary>, OracleError> {
    check_theorem_with_jobs(n_max, mode, 0)
}

/// As [`check_theorem`] with `jobs` workers (0 picks the available
/// parallelism). The result does not depend on `jobs`. Enumerated counts
/// are checked against a closed-form recount.
pub fn check_theorem_with_jobs(n_max: usize, mode: Mode, jobs: usize) -> Result<Vec<EnumerationSummary>, OracleError> {
    check_range(n_max, mode)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| OracleError::ThreadPool(e.to_string()))?;
    let mut summaries = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let filter = MaskFilter::new(n, mode)?;
        let total = filter.mask_count();
        let chunks = total.div_ceil(CHUNK);
        let partials: Vec<Partial> = pool.install(|| {
            (0..chunks)
                .into_par_iter()
                .map(|c| {
                    let mut part = Partial::default();
                    for mask in c * CHUNK..((c + 1) * CHUNK).min(total) {
                        if let Some(g) = filter.accept(mask) {
                            part.record(&g);
                        }
                    }
                    part
                })
                .collect()
        });
        let merged = partials.into_iter().fold(Partial::default(), Partial::merge);
        let recount = recount_connected(n, mode)?;
        if merged.connected != recount {
            return Err(OracleError::RecountMismatch { n, mode, enumerated: merged.connected, recount });
        }
        summaries.push(EnumerationSummary {
            n,
            mode,
            connected_count: merged.connected,
            extremal_count: merged.extremal,
            counterexamples: merged.counterexamples,
        });
    }
    Ok(summaries)
}

/// Largest `n` for sampled sweeps (the edge mask must fit in 64 bits).
pub const MAX_SAMPLED_N: usize = 11;

/// Theorem check on `samples` connected labeled graphs drawn uniformly by
/// rejection from all edge subsets of `K_n`. Counts in the summary refer to
/// the sample.
pub fn check_theorem_sampled(n: usize, samples: u64, seed: u64) -> Result<EnumerationSummary, OracleError> {
    if n == 0 || n > MAX_SAMPLED_N {
        return Err(OracleError::OutOfRange { n, mode: Mode::Labeled, max: MAX_SAMPLED_N });
    }
    let slots = edge_slots(n);
    let full = if slots.is_empty() { 0 } else { u64::MAX >> (64 - slots.len()) };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut part = Partial::default();
    while part.connected < samples {
        let g = graph_from_mask(n, &slots, rng.gen::<u64>() & full);
        if g.is_connected() {
            part.record(&g);
        }
    }
    Ok(EnumerationSummary {
        n,
        mode: Mode::Labeled,
        connected_count: part.connected,
        extremal_count: part.extremal,
        counterexamples: part.counterexamples,
    })
}
