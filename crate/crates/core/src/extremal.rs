//! The edge-count lower bound in terms of the chromatic number, and the
//! structural recognizer for the graphs that attain it.
//!
//! For a connected graph, `|E| >= chi(chi - 1)/2 + |V| - chi`. The bound is
//! tight exactly for a complete graph or an odd cycle with trees hanging off
//! its vertices. [`classify`] decides that shape by stripping pendant
//! vertices and inspecting what is left; it never looks at the chromatic
//! number, so it can be checked against [`gap`] independently.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::coloring::chromatic_number;
use crate::graph::{Graph, GraphError, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtremalError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
    #[error("invalid core: {0}")]
    InvalidCore(String),
    #[error("attachment {index}: anchor {anchor} is not a core vertex (core has {core_size})")]
    InvalidAnchor { index: usize, anchor: VertexId, core_size: usize },
    #[error("attachment {index}: malformed parent array: {msg}")]
    MalformedTree { index: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn require_connected(g: &Graph) -> Result<(), ExtremalError> {
    if g.vertex_count() == 0 {
        Err(ExtremalError::Empty)
    } else if !g.is_connected() {
        Err(ExtremalError::Disconnected)
    } else {
        Ok(())
    }
}

/// Vertex count, edge count, chromatic number and the slack of the bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GapReport {
    pub n_vertices: usize,
    pub n_edges: usize,
    pub chi: usize,
    /// `n_edges - (chi(chi-1)/2 + n_vertices - chi)`; zero on extremal graphs.
    pub gap: i64,
}

impl GapReport {
    pub fn is_extremal(&self) -> bool {
        self.gap == 0
    }
}

impl fmt::Display for GapReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} m={} chi={} gap={}",
            self.n_vertices, self.n_edges, self.chi, self.gap
        )
    }
}

/// `m - (chi(chi-1)/2 + n - chi)` in exact integer arithmetic.
pub fn gap_value(n_vertices: usize, n_edges: usize, chi: usize) -> i64 {
    let (n, m, k) = (n_vertices as i64, n_edges as i64, chi as i64);
    m - (k * (k - 1) / 2 + n - k)
}

pub fn gap(g: &Graph) -> Result<GapReport, ExtremalError> {
    require_connected(g)?;
    let (chi, _) = chromatic_number(g);
    Ok(GapReport {
        n_vertices: g.vertex_count(),
        n_edges: g.edge_count(),
        chi,
        gap: gap_value(g.vertex_count(), g.edge_count(), chi),
    })
}

/// Removes degree-1 vertices one at a time, lowest id first, until none is
/// left. Returns the induced subgraph on the survivors and their original
/// ids in ascending order. A tree shrinks to a single vertex.
pub fn strip_to_core(g: &Graph) -> Result<(Graph, Vec<VertexId>), ExtremalError> {
    require_connected(g)?;
    let n = g.vertex_count();
    let mut degree: Vec<usize> = (0..n).map(|v| g.deg(v)).collect();
    let mut alive = vec![true; n];
    let mut leaves: BTreeSet<VertexId> = (0..n).filter(|&v| degree[v] == 1).collect();
    while let Some(v) = leaves.pop_first() {
        alive[v] = false;
        degree[v] = 0;
        for u in g.neighbors(v).filter(|&u| alive[u]) {
            degree[u] -= 1;
            if degree[u] == 1 {
                leaves.insert(u);
            } else if degree[u] == 0 {
                // u was the other end of the last remaining edge
                leaves.remove(&u);
            }
        }
    }
    let core: Vec<VertexId> = (0..n).filter(|&v| alive[v]).collect();
    Ok((g.induced_subgraph(&core), core))
}

/// Shape of a graph with respect to the extremal family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    /// Complete core `K_m` with trees attached (a tree has `m = 1`).
    TypeA { core_order: usize },
    /// Odd cycle core of length at least 5 with trees attached.
    TypeB { cycle_length: usize },
    Neither,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Classification {
    pub kind: Kind,
    /// Surviving vertices after leaf stripping, ascending.
    pub core_vertices: Vec<VertexId>,
}

impl Classification {
    pub fn is_extremal_shape(&self) -> bool {
        self.kind != Kind::Neither
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::TypeA { core_order } => write!(f, "TypeA m={core_order}"),
            Kind::TypeB { cycle_length } => write!(f, "TypeB len={cycle_length}"),
            Kind::Neither => f.write_str("Neither"),
        }
    }
}

/// Structural classification. A triangle core is reported as `TypeA(3)`.
pub fn classify(g: &Graph) -> Result<Classification, ExtremalError> {
    let (core, core_vertices) = strip_to_core(g)?;
    let m = core.vertex_count();
    let complete = core.edge_count() == m * (m - 1) / 2;
    // stripping keeps the core connected, so 2-regular means a single cycle
    let cycle = m >= 3 && (0..m).all(|v| core.deg(v) == 2);
    let kind = if complete && m != 2 {
        Kind::TypeA { core_order: m }
    } else if cycle && m % 2 == 1 {
        Kind::TypeB { cycle_length: m }
    } else {
        Kind::Neither
    };
    Ok(Classification { kind, core_vertices })
}

/// Core used by [`build_decorated`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoreKind {
    /// `K_m`, `m >= 1`, vertices `0..m`.
    Complete(usize),
    /// `C_len`, `len >= 3`, vertices `0..len` in cyclic order.
    Cycle(usize),
}

impl CoreKind {
    pub fn order(&self) -> usize {
        match *self {
            CoreKind::Complete(m) | CoreKind::Cycle(m) => m,
        }
    }

    fn graph(&self) -> Result<Graph, ExtremalError> {
        match *self {
            CoreKind::Complete(0) => Err(ExtremalError::InvalidCore("complete core needs m >= 1".into())),
            CoreKind::Complete(m) => Ok(Graph::complete(m)),
            CoreKind::Cycle(l) if l < 3 => Err(ExtremalError::InvalidCore(format!(
                "cycle core needs length >= 3, got {l}"
            ))),
            CoreKind::Cycle(l) => Ok(Graph::cycle(l)),
        }
    }
}

/// A rooted tree as a parent array: `parent[root] == None`, every other
/// entry points at its parent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootedTree {
    pub parent: Vec<Option<usize>>,
}

impl RootedTree {
    pub fn new(parent: Vec<Option<usize>>) -> Self {
        RootedTree { parent }
    }

    /// Single vertex.
    pub fn leaf() -> Self {
        RootedTree { parent: vec![None] }
    }

    /// Path hanging from its root.
    pub fn path(len: usize) -> Self {
        RootedTree {
            parent: (0..len).map(|i| i.checked_sub(1)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Index of the root, after checking the array describes one tree.
    fn validate(&self) -> Result<usize, String> {
        let t = self.parent.len();
        if t == 0 {
            return Err("tree has no vertices".into());
        }
        let roots: Vec<usize> = (0..t).filter(|&i| self.parent[i].is_none()).collect();
        let &[root] = roots.as_slice() else {
            return Err(format!("expected exactly one root, found {}", roots.len()));
        };
        for (i, p) in self.parent.iter().enumerate() {
            if let Some(p) = *p {
                if p >= t {
                    return Err(format!("vertex {i} has parent {p} outside 0..{t}"));
                }
            }
        }
        // 0 = unvisited, 1 = on current walk, 2 = reaches the root
        let mut state = vec![0u8; t];
        state[root] = 2;
        for start in 0..t {
            let mut walk = Vec::new();
            let mut v = start;
            while state[v] == 0 {
                state[v] = 1;
                walk.push(v);
                v = self.parent[v].expect("only the root lacks a parent");
            }
            if state[v] == 1 {
                return Err(format!("parent pointers from vertex {start} form a cycle"));
            }
            for w in walk {
                state[w] = 2;
            }
        }
        Ok(root)
    }
}

/// A tree joined by one edge from its root to core vertex `anchor`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Attachment {
    pub anchor: VertexId,
    pub tree: RootedTree,
}

/// Builds a core and hangs each tree off its anchor. Core vertices keep ids
/// `0..core.order()`; tree vertices follow in attachment order, each tree
/// in parent-array order. Several trees may share an anchor.
pub fn build_decorated(core: CoreKind, attachments: &[Attachment]) -> Result<Graph, ExtremalError> {
    let base = core.graph()?;
    let core_size = base.vertex_count();
    let mut roots = Vec::with_capacity(attachments.len());
    for (index, a) in attachments.iter().enumerate() {
        if a.anchor >= core_size {
            return Err(ExtremalError::InvalidAnchor { index, anchor: a.anchor, core_size });
        }
        let root = a
            .tree
            .validate()
            .map_err(|msg| ExtremalError::MalformedTree { index, msg })?;
        roots.push(root);
    }
    let total = core_size + attachments.iter().map(|a| a.tree.len()).sum::<usize>();
    let mut g = Graph::empty(total);
    for (u, v) in base.edges() {
        g.insert_edge(u, v);
    }
    let mut offset = core_size;
    for (a, root) in attachments.iter().zip(roots) {
        g.insert_edge(a.anchor, offset + root);
        for (i, p) in a.tree.parent.iter().enumerate() {
            if let Some(p) = *p {
                g.insert_edge(offset + i, offset + p);
            }
        }
        offset += a.tree.len();
    }
    Ok(g)
}
