//! Immutable simple undirected graphs over dense vertex ids.
//!
//! Adjacency is a row of 64-bit words per vertex, so graphs with at most 64
//! vertices use a single word per row. Every derived graph (vertex removal,
//! pendant addition, induced subgraphs) is a new value.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Index of a vertex, always in `0..n` for the graph it addresses.
pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    InvalidVertex { vertex: VertexId, n: usize },
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    EdgeOutOfRange { u: VertexId, v: VertexId, n: usize },
    #[error("self-loop ({v}, {v}) is not allowed in a simple graph")]
    SelfLoop { v: VertexId },
    #[error("cannot remove the only vertex of a single-vertex graph")]
    RemoveLastVertex,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    m: usize,
}

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

/// Iterates the set bits of a word slice in ascending order.
pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            }
        })
    })
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            adj: vec![0; n * words],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Repeated edges (in either
    /// orientation) are collapsed; self-loops and out-of-range ids are errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EdgeOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            for u in 0..v {
                g.insert_edge(u, v);
            }
        }
        g
    }

    /// Cycle `0-1-...-(n-1)-0`.
    ///
    /// # Panics
    ///
    /// Panics if `n < 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Graph::empty(n);
        for v in 0..n {
            g.insert_edge(v, (v + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.insert_edge(v - 1, v);
        }
        g
    }

    /// Star `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::empty(leaves + 1);
        for v in 1..=leaves {
            g.insert_edge(0, v);
        }
        g
    }

    /// Petersen graph: outer 5-cycle 0..5, inner pentagram 5..10, spokes `i - i+5`.
    pub fn petersen() -> Self {
        let mut g = Graph::empty(10);
        for i in 0..5 {
            g.insert_edge(i, (i + 1) % 5);
            g.insert_edge(5 + i, 5 + (i + 2) % 5);
            g.insert_edge(i, i + 5);
        }
        g
    }

    /// Inserts an edge during construction. Both ids must be valid and distinct.
    pub(crate) fn insert_edge(&mut self, u: VertexId, v: VertexId) {
        debug_assert!(u < self.n && v < self.n && u != v);
        let (wu, bu) = (v / 64, v % 64);
        let (wv, bv) = (u / 64, u % 64);
        if self.adj[u * self.words + wu] & (1 << bu) == 0 {
            self.adj[u * self.words + wu] |= 1 << bu;
            self.adj[v * self.words + wv] |= 1 << bv;
            self.m += 1;
        }
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    fn check(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::InvalidVertex { vertex: v, n: self.n })
        }
    }

    /// Adjacency row of `v` as bit words. Panics if `v` is out of range.
    #[inline]
    pub(crate) fn row(&self, v: VertexId) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    #[cfg(test)]
    fn words(&self) -> usize {
        self.words
    }

    /// Whether `u` and `v` are adjacent. Panics if either id is out of range.
    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.adj[u * self.words + v / 64] & (1 << (v % 64)) != 0
    }

    /// Neighbors of `v` in ascending order. Panics if `v` is out of range.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        assert!(v < self.n, "vertex out of range");
        iter_bits(self.row(v))
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.check(v)?;
        Ok(self.deg(v))
    }

    #[inline]
    pub(crate) fn deg(&self, v: VertexId) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Induced subgraph on `keep`, relabelled `0..keep.len()` in the order given.
    /// Panics on out-of-range ids; duplicates in `keep` are not allowed.
    pub fn induced_subgraph(&self, keep: &[VertexId]) -> Graph {
        let mut g = Graph::empty(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.insert_edge(i, j);
                }
            }
        }
        g
    }

    /// Deletes `v` and its incident edges; the remaining ids are compacted
    /// to `0..n-1` keeping their relative order.
    pub fn remove_vertex(&self, v: VertexId) -> Result<Graph, GraphError> {
        self.check(v)?;
        if self.n == 1 {
            return Err(GraphError::RemoveLastVertex);
        }
        let keep: Vec<VertexId> = (0..self.n).filter(|&u| u != v).collect();
        Ok(self.induced_subgraph(&keep))
    }

    /// Adds a new vertex `n` adjacent only to `anchor`.
    pub fn add_pendant(&self, anchor: VertexId) -> Result<Graph, GraphError> {
        self.check(anchor)?;
        let mut g = Graph::empty(self.n + 1);
        for (u, v) in self.edges() {
            g.insert_edge(u, v);
        }
        g.insert_edge(anchor, self.n);
        Ok(g)
    }

    /// True iff every vertex is reachable from vertex 0. The empty graph is
    /// not considered connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = vec![0u64; self.words];
        let mut frontier = vec![0u64; self.words];
        seen[0] = 1;
        frontier[0] = 1;
        let mut count = 1;
        loop {
            let mut next = vec![0u64; self.words];
            for u in iter_bits(&frontier) {
                for (nw, (rw, sw)) in next.iter_mut().zip(self.row(u).iter().zip(&seen)) {
                    *nw |= rw & !sw;
                }
            }
            let added: usize = next.iter().map(|w| w.count_ones() as usize).sum();
            if added == 0 {
                break;
            }
            count += added;
            for (s, nw) in seen.iter_mut().zip(&next) {
                *s |= nw;
            }
            frontier = next;
        }
        count == self.n
    }

    /// Breadth-first order from vertex 0, visiting neighbors by ascending id.
    /// Every prefix of the result induces a connected subgraph.
    pub fn connected_ordering(&self) -> Result<Vec<VertexId>, GraphError> {
        if self.n == 0 {
            return Err(GraphError::Empty);
        }
        let mut seen = vec![false; self.n];
        let mut order = Vec::with_capacity(self.n);
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        if order.len() != self.n {
            return Err(GraphError::Disconnected);
        }
        Ok(order)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
