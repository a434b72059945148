//! Chain and antichain partitions of a poset.

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::matching;
use crate::poset::Poset;

/// Disjoint chains jointly covering all elements; each chain is listed in
/// increasing order of the poset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainPartition {
    pub chains: Vec<Vec<usize>>,
}

impl ChainPartition {
    pub fn verify(&self, p: &Poset) -> bool {
        verify_blocks(p, &self.chains, |p, set| p.is_chain_set(set))
    }

    /// Block sizes in weakly decreasing order.
    pub fn sorted_sizes(&self) -> Vec<usize> {
        sorted_sizes(&self.chains)
    }
}

/// Disjoint antichains jointly covering all elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AntichainPartition {
    pub antichains: Vec<Vec<usize>>,
}

impl AntichainPartition {
    pub fn verify(&self, p: &Poset) -> bool {
        verify_blocks(p, &self.antichains, |p, set| p.is_antichain_set(set))
    }

    pub fn sorted_sizes(&self) -> Vec<usize> {
        sorted_sizes(&self.antichains)
    }
}

fn sorted_sizes(blocks: &[Vec<usize>]) -> Vec<usize> {
    let mut sizes: Vec<usize> = blocks.iter().map(|b| b.len()).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}

fn verify_blocks(p: &Poset, blocks: &[Vec<usize>], ok: impl Fn(&Poset, u64) -> bool) -> bool {
    let mut seen = 0u64;
    for block in blocks {
        let set = bits::from_iter(block.iter().copied());
        if set.count_ones() as usize != block.len() || seen & set != 0 || !ok(p, set) {
            return false;
        }
        seen |= set;
    }
    seen == p.all_elements()
}

/// Minimum chain partition (Dilworth): exactly `width(p)` chains, derived
/// from a maximum matching on the split comparability graph.
pub fn min_chain_partition(p: &Poset) -> ChainPartition {
    chain_partition_within(p, p.all_elements())
}

/// Minimum chain partition of the subposet induced by `mask`, in original
/// element indices.
pub fn chain_partition_within(p: &Poset, mask: u64) -> ChainPartition {
    let succ = matching::max_matching(p, mask);
    let mut has_pred = 0u64;
    for i in bits::iter(mask) {
        if let Some(j) = succ[i] {
            has_pred |= 1u64 << j;
        }
    }
    let mut chains = Vec::new();
    for start in bits::iter(mask & !has_pred) {
        let mut chain = vec![start];
        let mut cur = start;
        while let Some(next) = succ[cur] {
            chain.push(next);
            cur = next;
        }
        chains.push(chain);
    }
    debug_assert_eq!(chains.len(), p.width_within(mask));
    ChainPartition { chains }
}

/// Minimum antichain partition (Mirsky): level `i` holds the elements whose
/// longest chain from below has exactly `i + 1` elements.
pub fn min_antichain_partition(p: &Poset) -> AntichainPartition {
    antichain_partition_within(p, p.all_elements())
}

pub fn antichain_partition_within(p: &Poset, mask: u64) -> AntichainPartition {
    let levels = p.mirsky_levels_within(mask);
    let height = p.height_within(mask);
    let mut antichains = vec![Vec::new(); height];
    for i in bits::iter(mask) {
        antichains[levels[i] - 1].push(i);
    }
    AntichainPartition { antichains }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antichain_gives_singletons() {
        let a = Poset::antichain(4).unwrap();
        let cp = min_chain_partition(&a);
        assert_eq!(cp.chains.len(), 4);
        assert!(cp.verify(&a));
    }

    #[test]
    fn chain_gives_one_chain() {
        let c = Poset::chain(4).unwrap();
        let cp = min_chain_partition(&c);
        assert_eq!(cp.chains.len(), 1);
        assert_eq!(cp.chains[0], vec![0, 1, 2, 3]);
        assert!(cp.verify(&c));
    }

    #[test]
    fn v_poset_two_chains() {
        let v = Poset::from_covers(3, &[(0, 1), (0, 2)]).unwrap();
        let cp = min_chain_partition(&v);
        assert_eq!(cp.chains.len(), 2);
        assert!(cp.verify(&v));
    }

    #[test]
    fn mirsky_layers() {
        let c = Poset::chain(3).unwrap();
        let ap = min_antichain_partition(&c);
        assert_eq!(ap.antichains.len(), 3);
        assert!(ap.verify(&c));

        let a = Poset::antichain(3).unwrap();
        assert_eq!(min_antichain_partition(&a).antichains.len(), 1);

        let v = Poset::from_covers(3, &[(0, 1), (0, 2)]).unwrap();
        let ap = min_antichain_partition(&v);
        assert_eq!(ap.antichains, vec![vec![0], vec![1, 2]]);
    }

    #[test]
    fn dilworth_equality_small() {
        // width == number of chains in the minimum partition
        for covers in [
            vec![(0usize, 1usize), (0, 2), (3, 2)],
            vec![(0, 3), (1, 3), (2, 3)],
            vec![],
        ] {
            let p = Poset::from_covers(4, &covers).unwrap();
            assert_eq!(min_chain_partition(&p).chains.len(), p.width());
        }
    }
}
