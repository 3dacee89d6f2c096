use super::enumerate::{edge_slots, graph_from_mask};
use super::{Mode, OracleError, MAX_UNLABELED_N};
use crate::graph::Graph;

/// Canonical labelling by brute force over all `n!` vertex permutations.
///
/// The canonical form of a graph is the relabelling whose adjacency bit
/// string, read in graph6 slot order, is lexicographically smallest.
/// Internally a mask stores slot `s` in bit `s`; its "key" stores slot `s`
/// in bit `S - 1 - s`, so comparing keys as integers compares bit strings.
pub struct Canonizer {
    n: usize,
    slots: usize,
    /// For each permutation, the slot each slot is sent to.
    slot_maps: Vec<Vec<u8>>,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

impl Canonizer {
    pub fn new(n: usize) -> Result<Self, OracleError> {
        if n == 0 || n > MAX_UNLABELED_N {
            return Err(OracleError::OutOfRange { n, mode: Mode::Unlabeled, max: MAX_UNLABELED_N });
        }
        let slots = edge_slots(n);
        let mut index = vec![vec![0u8; n]; n];
        for (s, &(i, j)) in slots.iter().enumerate() {
            index[i][j] = s as u8;
            index[j][i] = s as u8;
        }
        let slot_maps = permutations(n)
            .into_iter()
            .map(|p| slots.iter().map(|&(i, j)| index[p[i]][p[j]]).collect())
            .collect();
        Ok(Canonizer { n, slots: slots.len(), slot_maps })
    }

    #[inline]
    fn key(&self, mask: u64) -> u64 {
        if self.slots == 0 {
            return 0;
        }
        mask.reverse_bits() >> (64 - self.slots)
    }

    #[inline]
    fn image_key(&self, map: &[u8], mask: u64) -> u64 {
        let top = self.slots - 1;
        let mut key = 0;
        let mut rest = mask;
        while rest != 0 {
            let s = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            key |= 1 << (top - map[s] as usize);
        }
        key
    }

    /// True iff no relabelling of `mask` has a smaller bit string.
    pub fn is_canonical(&self, mask: u64) -> bool {
        if self.slots == 0 {
            return true;
        }
        let own = self.key(mask);
        self.slot_maps.iter().all(|map| self.image_key(map, mask) >= own)
    }

    /// Mask of the canonical relabelling of `mask`.
    pub fn canonical_mask(&self, mask: u64) -> u64 {
        if self.slots == 0 {
            return 0;
        }
        let best = self
            .slot_maps
            .iter()
            .map(|map| self.image_key(map, mask))
            .min()
            .expect("at least the identity permutation");
        // the key is the mask with its slot bits reversed
        self.key(best)
    }

    pub fn mask_of(&self, g: &Graph) -> u64 {
        debug_assert_eq!(g.vertex_count(), self.n);
        edge_slots(self.n)
            .iter()
            .enumerate()
            .filter(|(_, &(i, j))| g.has_edge(i, j))
            .fold(0, |m, (s, _)| m | 1 << s)
    }
}

/// Canonical relabelling of `g`; isomorphic graphs map to equal values.
/// Limited to at most 8 vertices.
pub fn canonical_form(g: &Graph) -> Result<Graph, OracleError> {
    let n = g.vertex_count();
    let canon = Canonizer::new(n)?;
    let mask = canon.canonical_mask(canon.mask_of(g));
    Ok(graph_from_mask(n, &edge_slots(n), mask))
}
