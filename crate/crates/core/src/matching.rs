//! Hopcroft-Karp matching on the split comparability graph, used for
//! Dilworth-style minimum chain covers.

use crate::bits;
use crate::poset::Poset;

/// Maximum matching in the bipartite graph with an edge `i -> j` whenever
/// `i < j` and both lie in `mask`. Returns `succ`: for each element, the
/// matched successor, if any.
pub fn max_matching(p: &Poset, mask: u64) -> Vec<Option<usize>> {
    let n = p.len();
    let mut succ: Vec<Option<usize>> = vec![None; n];
    let mut pred: Vec<Option<usize>> = vec![None; n];

    // Hopcroft-Karp: BFS layers from free left vertices, then layered DFS.
    loop {
        let mut layer = vec![usize::MAX; n];
        let mut queue = Vec::new();
        for i in bits::iter(mask) {
            if succ[i].is_none() {
                layer[i] = 0;
                queue.push(i);
            }
        }
        let mut found_augmenting = false;
        let mut qi = 0;
        while qi < queue.len() {
            let i = queue[qi];
            qi += 1;
            for j in bits::iter(p.up_set(i) & mask) {
                match pred[j] {
                    None => found_augmenting = true,
                    Some(i2) => {
                        if layer[i2] == usize::MAX {
                            layer[i2] = layer[i] + 1;
                            queue.push(i2);
                        }
                    }
                }
            }
        }
        if !found_augmenting {
            break;
        }

        fn dfs(
            p: &Poset,
            mask: u64,
            i: usize,
            layer: &mut Vec<usize>,
            succ: &mut Vec<Option<usize>>,
            pred: &mut Vec<Option<usize>>,
        ) -> bool {
            for j in bits::iter(p.up_set(i) & mask) {
                let advance = match pred[j] {
                    None => true,
                    Some(i2) => {
                        layer[i2] == layer[i] + 1 && dfs(p, mask, i2, layer, succ, pred)
                    }
                };
                if advance {
                    succ[i] = Some(j);
                    pred[j] = Some(i);
                    return true;
                }
            }
            layer[i] = usize::MAX;
            false
        }

        for i in bits::iter(mask) {
            if succ[i].is_none() && layer[i] == 0 {
                dfs(p, mask, i, &mut layer, &mut succ, &mut pred);
            }
        }
    }
    succ
}

pub fn max_matching_size(p: &Poset, mask: u64) -> usize {
    max_matching(p, mask)
        .iter()
        .filter(|s| s.is_some())
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_matches_fully() {
        let c = Poset::chain(5).unwrap();
        assert_eq!(max_matching_size(&c, c.all_elements()), 4);
    }

    #[test]
    fn antichain_matches_nothing() {
        let a = Poset::antichain(4).unwrap();
        assert_eq!(max_matching_size(&a, a.all_elements()), 0);
    }

    #[test]
    fn mask_restricts() {
        let c = Poset::chain(4).unwrap();
        // Elements {0, 2}: still comparable, one edge.
        assert_eq!(max_matching_size(&c, 0b0101), 1);
    }
}
