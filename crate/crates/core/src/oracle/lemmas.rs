//! Property checks mirroring the steps of the characterization proof.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::enumerate::enumerate_connected;
use super::generate::random_decorated;
use super::{Mode, OracleError, SuiteReport};
use crate::coloring::chromatic_number;
use crate::extremal::{classify, gap, CoreKind, Kind};
use crate::graph::Graph;
use crate::io::to_graph6;

/// Vertex-removal check on an extremal graph `g` with at least two
/// vertices. For every `v` with `g - v` connected, one of
///
/// * `deg(v) == 1` and `g` is type A or B, or
/// * `deg(v) == chi(g - v)` and `g - v` is type A or B
///
/// must hold, and `deg(v) == chi(g - v) <= 2` forces `g` to be type A or B.
/// Non-extremal input is an error.
pub fn lemma_big_check(g: &Graph) -> Result<bool, OracleError> {
    if g.vertex_count() < 2 {
        return Err(OracleError::TooSmall);
    }
    let report = gap(g)?;
    if report.gap != 0 {
        return Err(OracleError::NotExtremal { gap: report.gap });
    }
    let shaped = classify(g)?.is_extremal_shape();
    for v in 0..g.vertex_count() {
        let rest = g.remove_vertex(v)?;
        if !rest.is_connected() {
            continue;
        }
        let degree = g.deg(v);
        let (chi_rest, _) = chromatic_number(&rest);
        let pendant = degree == 1 && shaped;
        let saturated = degree == chi_rest && classify(&rest)?.is_extremal_shape();
        if !(pendant || saturated) {
            return Ok(false);
        }
        if degree == chi_rest && chi_rest <= 2 && !shaped {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Runs [`lemma_big_check`] on every labeled extremal graph with
/// `2..=n_max` vertices.
pub fn lemma_big_sweep(n_max: usize) -> Result<SuiteReport, OracleError> {
    let mut report = SuiteReport { name: "lemma-big", checked: 0, failures: Vec::new() };
    for n in 2..=n_max {
        for g in enumerate_connected(n, Mode::Labeled)? {
            if gap(&g)?.gap != 0 {
                continue;
            }
            report.checked += 1;
            if !lemma_big_check(&g)? {
                report.failures.push(to_graph6(&g));
            }
        }
    }
    Ok(report)
}

/// Adds a pendant vertex at `trials` random anchors of a type A or B graph
/// and checks each result keeps the same kind and core order.
pub fn pendant_closure_check(g: &Graph, trials: usize, seed: u64) -> Result<bool, OracleError> {
    let kind = classify(g)?.kind;
    if kind == Kind::Neither {
        return Err(OracleError::NotExtremalShape);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let anchor = rng.gen_range(0..g.vertex_count());
        if classify(&g.add_pendant(anchor)?)?.kind != kind {
            return Ok(false);
        }
    }
    Ok(true)
}

const PENDANT_TRIALS_PER_GRAPH: usize = 10;

/// [`pendant_closure_check`] over a seeded corpus of decorated complete and
/// odd-cycle graphs, `attachments` pendant additions in total.
pub fn pendant_closure_suite(attachments: usize, seed: u64) -> Result<SuiteReport, OracleError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport { name: "pendant-closure", checked: 0, failures: Vec::new() };
    while report.checked < attachments {
        let core = if rng.gen_bool(0.5) {
            CoreKind::Complete(rng.gen_range(1..=6))
        } else {
            CoreKind::Cycle(2 * rng.gen_range(1..=5) + 1)
        };
        let g = random_decorated(&mut rng, core, 16, 3)?;
        let trials = PENDANT_TRIALS_PER_GRAPH.min(attachments - report.checked);
        if !pendant_closure_check(&g, trials, rng.gen())? {
            report.failures.push(to_graph6(&g));
        }
        report.checked += trials;
    }
    Ok(report)
}

/// Size limits for [`decorated_chi_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecoratedBounds {
    /// Total vertices per graph, core included. Must lie in `11..=20` so
    /// the largest cores fit.
    pub max_vertices: usize,
    pub max_trees: usize,
}

impl Default for DecoratedBounds {
    fn default() -> Self {
        DecoratedBounds { max_vertices: 20, max_trees: 4 }
    }
}

/// For each trial, one decorated graph per core class: complete `K_m`
/// (`2 <= m <= 6`, expect chi = m), odd cycle (`5..=11`, expect 3) and even
/// cycle (`4..=10`, expect 2). `checked` counts graphs.
pub fn decorated_chi_check(trials: usize, seed: u64, bounds: DecoratedBounds) -> Result<SuiteReport, OracleError> {
    if !(11..=20).contains(&bounds.max_vertices) {
        return Err(OracleError::InvalidBounds(format!(
            "max_vertices must be in 11..=20, got {}",
            bounds.max_vertices
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport { name: "decorated-chi", checked: 0, failures: Vec::new() };
    for _ in 0..trials {
        let m = rng.gen_range(2..=6);
        let odd = *[5, 7, 9, 11].choose(&mut rng).unwrap();
        let even = *[4, 6, 8, 10].choose(&mut rng).unwrap();
        for (core, expected) in [(CoreKind::Complete(m), m), (CoreKind::Cycle(odd), 3), (CoreKind::Cycle(even), 2)] {
            let g = random_decorated(&mut rng, core, bounds.max_vertices, bounds.max_trees)?;
            report.checked += 1;
            if chromatic_number(&g).0 != expected {
                report.failures.push(to_graph6(&g));
            }
        }
    }
    Ok(report)
}
