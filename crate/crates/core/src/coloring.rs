//! Exact vertex coloring.
//!
//! `chromatic_number` takes the cheap exits first (edgeless, bipartite) and
//! otherwise runs a DSATUR branch-and-bound between a greedy clique lower
//! bound and a DSATUR greedy upper bound. Every answer carries a witness
//! coloring that `verify_coloring` can check independently.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("vertex {vertex} has no color assigned")]
    MissingAssignment { vertex: VertexId },
    #[error("coloring assigns a color to vertex {vertex}, which is not in the graph")]
    UnknownVertex { vertex: VertexId },
}

/// A vertex coloring with colors `0..k`, each used at least once.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Coloring {
    /// Wraps a color-per-vertex vector. Colors are relabelled by order of
    /// first appearance so that exactly `0..k` are used; adjacency relations
    /// between color classes are unchanged.
    pub fn new(colors: Vec<usize>) -> Self {
        let mut relabel = std::collections::HashMap::new();
        let colors: Vec<usize> = colors
            .into_iter()
            .map(|c| {
                let next = relabel.len();
                *relabel.entry(c).or_insert(next)
            })
            .collect();
        Coloring { k: relabel.len(), colors }
    }

    pub fn num_colors(&self) -> usize {
        self.k
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: VertexId) -> Option<usize> {
        self.colors.get(v).copied()
    }
}

/// Checks that `c` is a proper coloring of `g`. A coloring that does not
/// cover exactly the vertices of `g` is an error rather than `false`.
pub fn verify_coloring(g: &Graph, c: &Coloring) -> Result<bool, ColoringError> {
    let n = g.vertex_count();
    if c.colors.len() < n {
        return Err(ColoringError::MissingAssignment { vertex: c.colors.len() });
    }
    if c.colors.len() > n {
        return Err(ColoringError::UnknownVertex { vertex: n });
    }
    Ok(g.edges().all(|(u, v)| c.colors[u] != c.colors[v]))
}

/// Finds a proper coloring with at most `k` colors, if one exists.
pub fn is_k_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    let n = g.vertex_count();
    if n == 0 {
        return Some(Coloring::new(Vec::new()));
    }
    if k == 0 {
        return None;
    }
    if g.edge_count() == 0 {
        return Some(Coloring::new(vec![0; n]));
    }
    if k == 1 {
        return None;
    }
    if let Some(two) = two_coloring(g) {
        return Some(Coloring::new(two));
    }
    if k == 2 {
        return None;
    }
    let mut search = Search::new(g, k + 1, k);
    search.run();
    search.best_colors.map(Coloring::new)
}

/// Chromatic number of `g` with a witness coloring. The empty graph has
/// chromatic number 0.
pub fn chromatic_number(g: &Graph) -> (usize, Coloring) {
    let n = g.vertex_count();
    if n == 0 {
        return (0, Coloring::new(Vec::new()));
    }
    if g.edge_count() == 0 {
        return (1, Coloring::new(vec![0; n]));
    }
    if let Some(two) = two_coloring(g) {
        return (2, Coloring::new(two));
    }
    // an odd cycle exists, so at least three colors
    let lower = greedy_clique(g).len().max(3);
    let greedy = dsatur_greedy(g);
    let upper = greedy.iter().max().map_or(0, |&c| c + 1);
    if upper <= lower {
        return (upper, Coloring::new(greedy));
    }
    let mut search = Search::new(g, upper, lower);
    search.run();
    match search.best_colors {
        Some(colors) => (search.best, Coloring::new(colors)),
        None => (upper, Coloring::new(greedy)),
    }
}

/// BFS 2-coloring over every component; `None` if an odd cycle is found.
pub(crate) fn two_coloring(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut side = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for start in 0..n {
        if side[start] != usize::MAX {
            continue;
        }
        side[start] = 0;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if side[v] == usize::MAX {
                    side[v] = 1 - side[u];
                    queue.push_back(v);
                } else if side[v] == side[u] {
                    return None;
                }
            }
        }
    }
    Some(side)
}

/// Clique grown from the highest-degree vertex, always adding the
/// highest-degree remaining common neighbor (lowest id on ties).
pub(crate) fn greedy_clique(g: &Graph) -> Vec<VertexId> {
    let n = g.vertex_count();
    let best_of = |cands: &mut dyn Iterator<Item = VertexId>| {
        cands.fold(None, |best: Option<(usize, VertexId)>, v| {
            let d = g.deg(v);
            match best {
                Some((bd, _)) if bd >= d => best,
                _ => Some((d, v)),
            }
        })
    };
    let Some((_, first)) = best_of(&mut (0..n)) else {
        return Vec::new();
    };
    let mut clique = vec![first];
    let mut cands: Vec<u64> = g.row(first).to_vec();
    loop {
        let Some((_, v)) = best_of(&mut crate::graph::iter_bits(&cands)) else {
            break;
        };
        clique.push(v);
        for (c, r) in cands.iter_mut().zip(g.row(v)) {
            *c &= r;
        }
    }
    clique
}

/// Saturation bookkeeping shared by the greedy pass and the exact search.
struct Saturation<'g> {
    g: &'g Graph,
    n: usize,
    colors: Vec<usize>,
    /// `counts[v * n + c]`: neighbors of `v` currently holding color `c`.
    counts: Vec<u32>,
    sat: Vec<usize>,
    degree: Vec<usize>,
}

const UNCOLORED: usize = usize::MAX;

impl<'g> Saturation<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.vertex_count();
        Saturation {
            g,
            n,
            colors: vec![UNCOLORED; n],
            counts: vec![0; n * n],
            sat: vec![0; n],
            degree: (0..n).map(|v| g.deg(v)).collect(),
        }
    }

    /// Uncolored vertex with the most distinct neighbor colors; ties go to
    /// higher degree, then lower id.
    fn select(&self) -> Option<VertexId> {
        let mut best: Option<VertexId> = None;
        for v in 0..self.n {
            if self.colors[v] != UNCOLORED {
                continue;
            }
            best = match best {
                Some(b) if (self.sat[b], self.degree[b]) >= (self.sat[v], self.degree[v]) => Some(b),
                _ => Some(v),
            };
        }
        best
    }

    #[inline]
    fn available(&self, v: VertexId, c: usize) -> bool {
        self.counts[v * self.n + c] == 0
    }

    fn assign(&mut self, v: VertexId, c: usize) {
        self.colors[v] = c;
        for u in self.g.neighbors(v) {
            let slot = &mut self.counts[u * self.n + c];
            if *slot == 0 {
                self.sat[u] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: VertexId) {
        let c = self.colors[v];
        self.colors[v] = UNCOLORED;
        for u in self.g.neighbors(v) {
            let slot = &mut self.counts[u * self.n + c];
            *slot -= 1;
            if *slot == 0 {
                self.sat[u] -= 1;
            }
        }
    }
}

/// DSATUR without backtracking: each selected vertex takes its smallest
/// free color.
pub(crate) fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let mut state = Saturation::new(g);
    while let Some(v) = state.select() {
        let c = (0..).find(|&c| state.available(v, c)).unwrap();
        state.assign(v, c);
    }
    state.colors
}

/// Branch-and-bound over DSATUR orderings. A new color is only ever the
/// next unused index, which removes color-permutation symmetry.
struct Search<'g> {
    state: Saturation<'g>,
    /// Colors used by the best complete coloring so far (or the bound to beat).
    best: usize,
    best_colors: Option<Vec<usize>>,
    /// Stop as soon as a coloring with this many colors is found.
    target: usize,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, bound: usize, target: usize) -> Self {
        Search {
            state: Saturation::new(g),
            best: bound,
            best_colors: None,
            target,
        }
    }

    fn run(&mut self) {
        self.descend(0);
    }

    fn done(&self) -> bool {
        self.best <= self.target
    }

    fn descend(&mut self, used: usize) {
        if used >= self.best {
            return;
        }
        let Some(v) = self.state.select() else {
            self.best = used;
            self.best_colors = Some(self.state.colors.clone());
            return;
        };
        for c in 0..used {
            if self.state.available(v, c) {
                self.state.assign(v, c);
                self.descend(used);
                self.state.unassign(v);
                if self.done() {
                    return;
                }
            }
        }
        if used + 1 < self.best {
            self.state.assign(v, used);
            self.descend(used + 1);
            self.state.unassign(v);
        }
    }
}
