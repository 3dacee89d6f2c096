use super::{Canonizer, Mode, OracleError};
use crate::graph::{Graph, VertexId};

/// Largest `n` for exhaustive labeled enumeration (2^21 edge subsets).
pub const MAX_LABELED_N: usize = 7;
/// Largest `n` for unlabeled enumeration.
pub const MAX_UNLABELED_N: usize = 8;

/// Vertex pairs of `K_n` in graph6 order: `(0,1), (0,2), (1,2), (0,3), ...`.
/// Bit `s` of an edge mask refers to `edge_slots(n)[s]`.
pub fn edge_slots(n: usize) -> Vec<(VertexId, VertexId)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

pub fn graph_from_mask(n: usize, slots: &[(VertexId, VertexId)], mask: u64) -> Graph {
    let mut g = Graph::empty(n);
    let mut rest = mask;
    while rest != 0 {
        let s = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let (u, v) = slots[s];
        g.insert_edge(u, v);
    }
    g
}

pub(crate) fn check_range(n: usize, mode: Mode) -> Result<(), OracleError> {
    let max = match mode {
        Mode::Labeled => MAX_LABELED_N,
        Mode::Unlabeled => MAX_UNLABELED_N,
    };
    if (1..=max).contains(&n) {
        Ok(())
    } else {
        Err(OracleError::OutOfRange { n, mode, max })
    }
}

/// Decides which edge masks of `K_n` an enumeration yields.
pub(crate) struct MaskFilter {
    pub(crate) n: usize,
    pub(crate) slots: Vec<(VertexId, VertexId)>,
    canon: Option<Canonizer>,
}

impl MaskFilter {
    pub(crate) fn new(n: usize, mode: Mode) -> Result<Self, OracleError> {
        check_range(n, mode)?;
        let canon = match mode {
            Mode::Labeled => None,
            Mode::Unlabeled => Some(Canonizer::new(n)?),
        };
        Ok(MaskFilter { n, slots: edge_slots(n), canon })
    }

    pub(crate) fn mask_count(&self) -> u64 {
        1u64 << self.slots.len()
    }

    /// The graph for `mask` if it is connected and, in unlabeled mode, the
    /// canonical representative of its class.
    pub(crate) fn accept(&self, mask: u64) -> Option<Graph> {
        // a connected graph needs at least n - 1 edges
        if (mask.count_ones() as usize) + 1 < self.n {
            return None;
        }
        if let Some(canon) = &self.canon {
            if !canon.is_canonical(mask) {
                return None;
            }
        }
        let g = graph_from_mask(self.n, &self.slots, mask);
        g.is_connected().then_some(g)
    }
}

/// All connected graphs on `n` vertices. Labeled mode walks every edge
/// subset of `K_n` in mask order; unlabeled mode keeps only the subset whose
/// adjacency bit string is lexicographically smallest in its isomorphism
/// class.
pub fn enumerate_connected(n: usize, mode: Mode) -> Result<impl Iterator<Item = Graph>, OracleError> {
    let filter = MaskFilter::new(n, mode)?;
    Ok((0..filter.mask_count()).filter_map(move |mask| filter.accept(mask)))
}
