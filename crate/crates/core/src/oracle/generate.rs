//! Seeded generators for decorated graphs and random graphs.

use rand::Rng;

use crate::extremal::{build_decorated, Attachment, CoreKind, ExtremalError, RootedTree};
use crate::graph::Graph;

/// Random recursive tree: vertex 0 is the root, vertex `i` picks a parent
/// uniformly among `0..i`.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, size: usize) -> RootedTree {
    RootedTree::new((0..size).map(|i| (i > 0).then(|| rng.gen_range(0..i))).collect())
}

/// Decorated graph with one random tree of each requested `(anchor, size)`.
pub fn decorated_from_sizes<R: Rng + ?Sized>(
    rng: &mut R,
    core: CoreKind,
    trees: &[(usize, usize)],
) -> Result<Graph, ExtremalError> {
    let attachments: Vec<Attachment> = trees
        .iter()
        .map(|&(anchor, size)| Attachment { anchor, tree: random_tree(rng, size) })
        .collect();
    build_decorated(core, &attachments)
}

/// Decorated graph with random trees on random anchors, at most
/// `max_vertices` vertices in total and at most `max_trees` trees.
pub fn random_decorated<R: Rng + ?Sized>(
    rng: &mut R,
    core: CoreKind,
    max_vertices: usize,
    max_trees: usize,
) -> Result<Graph, ExtremalError> {
    let mut budget = max_vertices.saturating_sub(core.order());
    let mut trees = Vec::new();
    for _ in 0..rng.gen_range(0..=max_trees) {
        if budget == 0 {
            break;
        }
        let size = rng.gen_range(1..=budget);
        budget -= size;
        trees.push((rng.gen_range(0..core.order()), size));
    }
    decorated_from_sizes(rng, core, &trees)
}

/// Erdős–Rényi `G(n, p)` sample.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                g.insert_edge(i, j);
            }
        }
    }
    g
}

/// Parses a tree specification `anchor:size[,anchor:size...]`. An empty
/// string means no trees.
pub fn parse_tree_spec(spec: &str) -> Result<Vec<(usize, usize)>, String> {
    spec.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|item| {
            let (a, s) = item
                .split_once(':')
                .ok_or_else(|| format!("tree spec `{item}` is not `anchor:size`"))?;
            let anchor = a.trim().parse().map_err(|_| format!("invalid anchor `{a}`"))?;
            let size: usize = s.trim().parse().map_err(|_| format!("invalid tree size `{s}`"))?;
            if size == 0 {
                return Err(format!("tree size must be positive in `{item}`"));
            }
            Ok((anchor, size))
        })
        .collect()
}
