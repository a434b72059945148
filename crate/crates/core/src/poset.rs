use crate::bits;
use crate::error::PosetError;

/// Maximum number of elements per poset; subsets must fit one machine word.
pub const MAX_ELEMENTS: usize = 64;

/// A finite strict partial order on elements `0..n`.
///
/// `up[i]` is the set of elements strictly above `i`, `down[i]` the set
/// strictly below; both tables are transitively closed. Values are immutable
/// after construction, so they can be shared freely across threads.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    up: Vec<u64>,
    down: Vec<u64>,
    name: Option<String>,
}

impl Poset {
    /// Build a poset from cover (or arbitrary relation) pairs `i < j`.
    ///
    /// The input is closed transitively; redundant pairs are accepted.
    /// Cyclic input is rejected.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Poset, PosetError> {
        if n > MAX_ELEMENTS {
            return Err(PosetError::TooManyElements(n));
        }
        let mut up = vec![0u64; n];
        for &(i, j) in covers {
            if i >= n {
                return Err(PosetError::IndexOutOfRange { index: i, n });
            }
            if j >= n {
                return Err(PosetError::IndexOutOfRange { index: j, n });
            }
            if i == j {
                return Err(PosetError::CycleDetected(i, j));
            }
            up[i] |= 1u64 << j;
        }
        // Warshall closure on bitset rows.
        for k in 0..n {
            for i in 0..n {
                if up[i] >> k & 1 == 1 {
                    up[i] |= up[k];
                }
            }
        }
        for i in 0..n {
            if up[i] >> i & 1 == 1 {
                // Find one offending pair for the message.
                let j = bits::iter(up[i]).next().unwrap_or(i);
                return Err(PosetError::CycleDetected(i, j));
            }
        }
        Ok(Poset::from_up_table(n, up, None))
    }

    /// Internal constructor from a closed `up` table; checks the order axioms.
    pub(crate) fn from_up_table(n: usize, up: Vec<u64>, name: Option<String>) -> Poset {
        let mut down = vec![0u64; n];
        for i in 0..n {
            for j in bits::iter(up[i]) {
                down[j] |= 1u64 << i;
            }
        }
        let p = Poset { n, up, down, name };
        p.assert_invariants();
        p
    }

    fn assert_invariants(&self) {
        for i in 0..self.n {
            assert!(self.up[i] >> i & 1 == 0, "order must be irreflexive");
            assert!(
                self.up[i] & self.down[i] == 0,
                "order must be antisymmetric"
            );
            for j in bits::iter(self.up[i]) {
                assert!(
                    self.up[j] & !self.up[i] == 0,
                    "order must be transitively closed"
                );
            }
        }
    }

    pub fn chain(n: usize) -> Result<Poset, PosetError> {
        let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        let mut p = Poset::from_covers(n, &covers)?;
        p.name = Some(format!("chain{n}"));
        Ok(p)
    }

    pub fn antichain(n: usize) -> Result<Poset, PosetError> {
        let mut p = Poset::from_covers(n, &[])?;
        p.name = Some(format!("antichain{n}"));
        Ok(p)
    }

    /// Ranking with the given level sizes, bottom level first; every element
    /// of a lower level lies below every element of any higher level.
    pub fn weak_order(level_sizes: &[usize]) -> Result<Poset, PosetError> {
        if let Some(pos) = level_sizes.iter().position(|&s| s == 0) {
            return Err(PosetError::EmptyLevel(pos));
        }
        let n: usize = level_sizes.iter().sum();
        let mut covers = Vec::new();
        let mut start = 0usize;
        let mut prev: Option<(usize, usize)> = None;
        for &size in level_sizes {
            if let Some((ps, pe)) = prev {
                for a in ps..pe {
                    for b in start..start + size {
                        covers.push((a, b));
                    }
                }
            }
            prev = Some((start, start + size));
            start += size;
        }
        let mut p = Poset::from_covers(n, &covers)?;
        let label: Vec<String> = level_sizes.iter().map(|s| s.to_string()).collect();
        p.name = Some(format!("weak[{}]", label.join(",")));
        Ok(p)
    }

    /// The Boolean lattice on `k` atoms, as a poset on `2^k` subsets.
    pub fn boolean_lattice(k: usize) -> Result<Poset, PosetError> {
        if k > 6 {
            return Err(PosetError::TooManyElements(1usize << k));
        }
        let n = 1usize << k;
        let mut covers = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && a & b == a {
                    covers.push((a, b));
                }
            }
        }
        let mut p = Poset::from_covers(n, &covers)?;
        p.name = Some(format!("boolean{k}"));
        Ok(p)
    }

    /// Series composition: everything in `self` below everything in `other`.
    pub fn series(&self, other: &Poset) -> Result<Poset, PosetError> {
        let n = self.n + other.n;
        if n > MAX_ELEMENTS {
            return Err(PosetError::TooManyElements(n));
        }
        let mut up = vec![0u64; n];
        let upper = bits::full(n) & !bits::full(self.n);
        for i in 0..self.n {
            up[i] = self.up[i] | upper;
        }
        for i in 0..other.n {
            up[self.n + i] = other.up[i] << self.n;
        }
        Ok(Poset::from_up_table(n, up, None))
    }

    /// Parallel composition: disjoint union.
    pub fn parallel(&self, other: &Poset) -> Result<Poset, PosetError> {
        let n = self.n + other.n;
        if n > MAX_ELEMENTS {
            return Err(PosetError::TooManyElements(n));
        }
        let mut up = vec![0u64; n];
        for i in 0..self.n {
            up[i] = self.up[i];
        }
        for i in 0..other.n {
            up[self.n + i] = other.up[i] << self.n;
        }
        Ok(Poset::from_up_table(n, up, None))
    }

    /// The order with all relations reversed.
    pub fn dual(&self) -> Poset {
        Poset {
            n: self.n,
            up: self.down.clone(),
            down: self.up.clone(),
            name: self.name.as_ref().map(|s| format!("{s}^d")),
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Poset {
        self.name = Some(name.into());
        self
    }

    /// Strictly less-than.
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.up[i] >> j & 1 == 1
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        (self.up[i] | self.down[i]) >> j & 1 == 1
    }

    pub fn incomparable(&self, i: usize, j: usize) -> bool {
        i != j && !self.comparable(i, j)
    }

    /// Elements strictly above `i`.
    pub fn up_set(&self, i: usize) -> u64 {
        self.up[i]
    }

    /// Elements strictly below `i`.
    pub fn down_set(&self, i: usize) -> u64 {
        self.down[i]
    }

    /// Elements incomparable to `i` (excluding `i`).
    pub fn incomparables(&self, i: usize) -> u64 {
        bits::full(self.n) & !(self.up[i] | self.down[i] | (1u64 << i))
    }

    pub fn all_elements(&self) -> u64 {
        bits::full(self.n)
    }

    /// Is `set` a chain (pairwise comparable)?
    pub fn is_chain_set(&self, set: u64) -> bool {
        for i in bits::iter(set) {
            let rest = set & !(1u64 << i);
            if rest & !(self.up[i] | self.down[i]) != 0 {
                return false;
            }
        }
        true
    }

    /// Is `set` an antichain (pairwise incomparable)?
    pub fn is_antichain_set(&self, set: u64) -> bool {
        for i in bits::iter(set) {
            if set & (self.up[i] | self.down[i]) != 0 {
                return false;
            }
        }
        true
    }

    /// Cover pairs of the transitive reduction, sorted.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut covers = Vec::new();
        for i in 0..self.n {
            for j in bits::iter(self.up[i]) {
                if self.up[i] & self.down[j] == 0 {
                    covers.push((i, j));
                }
            }
        }
        covers.sort_unstable();
        covers
    }

    /// Mirsky level of every element: length of the longest chain ending at
    /// it, counted in elements (minimal elements get 1).
    pub fn mirsky_levels(&self) -> Vec<usize> {
        self.mirsky_levels_within(self.all_elements())
    }

    /// Mirsky levels of the subposet induced by `mask`; elements outside the
    /// mask get level 0.
    pub fn mirsky_levels_within(&self, mask: u64) -> Vec<usize> {
        let mut level = vec![0usize; self.n];
        for i in self.linear_extension() {
            if mask >> i & 1 == 0 {
                continue;
            }
            let below = self.down[i] & mask;
            level[i] = 1 + bits::iter(below).map(|j| level[j]).max().unwrap_or(0);
        }
        level
    }

    /// A deterministic linear extension: by longest-chain-below, then index.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&i| (self.down[i].count_ones(), i));
        // down-counts alone are not a priori a linear extension witness, but
        // j < i implies down[j] is a proper subset of down[i], hence fewer bits.
        order
    }

    /// Longest chain size within `mask`.
    pub fn height_within(&self, mask: u64) -> usize {
        self.mirsky_levels_within(mask).iter().copied().max().unwrap_or(0)
    }

    /// Largest chain size.
    pub fn height(&self) -> usize {
        self.height_within(self.all_elements())
    }

    /// Largest antichain size within `mask`, via minimum chain cover
    /// (Dilworth) on the induced comparability DAG.
    pub fn width_within(&self, mask: u64) -> usize {
        let m = mask.count_ones() as usize;
        let matched = crate::matching::max_matching_size(self, mask);
        let w = m - matched;
        #[cfg(debug_assertions)]
        if m <= 15 {
            debug_assert_eq!(w, self.max_antichain_brute(mask).count_ones() as usize);
        }
        w
    }

    /// Largest antichain size.
    pub fn width(&self) -> usize {
        self.width_within(self.all_elements())
    }

    /// Reference oracle: maximum antichain by subset branching (small masks).
    pub fn max_antichain_brute(&self, mask: u64) -> u64 {
        fn go(p: &Poset, rest: u64, acc: u64, best: &mut u64) {
            if (acc | rest).count_ones() <= best.count_ones() {
                return;
            }
            if rest == 0 {
                if acc.count_ones() > best.count_ones() {
                    *best = acc;
                }
                return;
            }
            let i = rest.trailing_zeros() as usize;
            let rest = rest & !(1u64 << i);
            go(p, rest & p.incomparables(i), acc | (1u64 << i), best);
            go(p, rest, acc, best);
        }
        let mut best = 0u64;
        go(self, mask, 0, &mut best);
        best
    }

    /// Checks whether incomparability is an equivalence relation; if so,
    /// returns the level sizes bottom-up.
    pub fn weak_order_levels(&self) -> Option<Vec<usize>> {
        if self.n == 0 {
            return Some(Vec::new());
        }
        for i in 0..self.n {
            let class_i = self.incomparables(i) | (1u64 << i);
            for j in bits::iter(self.incomparables(i)) {
                if self.incomparables(j) | (1u64 << j) != class_i {
                    return None;
                }
            }
        }
        let levels = self.mirsky_levels();
        let height = *levels.iter().max().unwrap();
        let mut sizes = vec![0usize; height];
        for &l in &levels {
            sizes[l - 1] += 1;
        }
        Some(sizes)
    }

    pub fn is_weak_order(&self) -> bool {
        self.weak_order_levels().is_some()
    }

    /// The subposet induced by `mask`, with elements reindexed in mask order.
    pub fn restrict(&self, mask: u64) -> Poset {
        let keep = bits::to_vec(mask);
        let n = keep.len();
        let mut up = vec![0u64; n];
        for (new_i, &old_i) in keep.iter().enumerate() {
            for (new_j, &old_j) in keep.iter().enumerate() {
                if self.lt(old_i, old_j) {
                    up[new_i] |= 1u64 << new_j;
                }
            }
        }
        Poset::from_up_table(n, up, None)
    }

    /// Relabel elements: element `i` becomes `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Poset {
        assert_eq!(perm.len(), self.n);
        let mut up = vec![0u64; self.n];
        for i in 0..self.n {
            for j in bits::iter(self.up[i]) {
                up[perm[i]] |= 1u64 << perm[j];
            }
        }
        Poset::from_up_table(self.n, up, self.name.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn covers_close_transitively() {
        let p = Poset::from_covers(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.lt(0, 2));
        assert!(!p.lt(2, 0));
    }

    #[test]
    fn cycle_rejected() {
        let err = Poset::from_covers(3, &[(0, 1), (1, 2), (2, 0)]).unwrap_err();
        assert!(matches!(err, PosetError::CycleDetected(..)));
        assert!(matches!(
            Poset::from_covers(2, &[(0, 0)]),
            Err(PosetError::CycleDetected(..))
        ));
    }

    #[test]
    fn index_out_of_range() {
        let err = Poset::from_covers(2, &[(0, 2)]).unwrap_err();
        assert_eq!(err, PosetError::IndexOutOfRange { index: 2, n: 2 });
    }

    #[test]
    fn v_poset_from_covers() {
        // v1 < v2, v1 < v3
        let v = Poset::from_covers(3, &[(0, 1), (0, 2)]).unwrap();
        assert_eq!(v.height(), 2);
        assert_eq!(v.width(), 2);
        assert!(v.incomparable(1, 2));
    }

    #[test]
    fn chain_height_width() {
        let c = Poset::chain(5).unwrap();
        assert_eq!(c.height(), 5);
        assert_eq!(c.width(), 1);
        let a = Poset::antichain(4).unwrap();
        assert_eq!(a.height(), 1);
        assert_eq!(a.width(), 4);
    }

    #[test]
    fn series_of_chains_is_chain() {
        let c2 = Poset::chain(2).unwrap();
        let c3 = Poset::chain(3).unwrap();
        let s = c2.series(&c3).unwrap();
        assert_eq!(s.height(), 5);
        assert_eq!(s.width(), 1);
    }

    #[test]
    fn parallel_of_chains() {
        let c2 = Poset::chain(2).unwrap();
        let p = c2.parallel(&c2).unwrap();
        assert_eq!(p.height(), 2);
        assert_eq!(p.width(), 2);
    }

    #[test]
    fn series_of_antichains_is_complete_bipartite() {
        let a2 = Poset::antichain(2).unwrap();
        let s = a2.series(&a2).unwrap();
        assert_eq!(s.height(), 2);
        assert_eq!(s.width(), 2);
        assert!(s.lt(0, 2) && s.lt(0, 3) && s.lt(1, 2) && s.lt(1, 3));
    }

    #[test]
    fn weak_order_shapes() {
        let v = Poset::weak_order(&[1, 2]).unwrap();
        assert_eq!(v.height(), 2);
        assert_eq!(v.width(), 2);
        assert_eq!(v.weak_order_levels(), Some(vec![1, 2]));

        let a = Poset::weak_order(&[4]).unwrap();
        assert_eq!(a.weak_order_levels(), Some(vec![4]));

        let c = Poset::weak_order(&[1, 1, 1]).unwrap();
        assert_eq!(c.height(), 3);
        assert_eq!(c.width(), 1);

        assert_eq!(
            Poset::weak_order(&[1, 0, 2]).unwrap_err(),
            PosetError::EmptyLevel(1)
        );
    }

    #[test]
    fn n_poset_is_not_weak() {
        // a<c, b<c, b<d
        let n = Poset::from_covers(4, &[(0, 2), (1, 2), (1, 3)]).unwrap();
        assert!(!n.is_weak_order());
    }

    #[test]
    fn dual_is_involution() {
        let p = Poset::from_covers(4, &[(0, 2), (1, 2), (1, 3)]).unwrap();
        assert_eq!(p.dual().dual(), p);
        let v = Poset::from_covers(3, &[(0, 1), (0, 2)]).unwrap();
        let lambda = v.dual();
        assert_eq!(lambda.height(), 2);
        assert_eq!(lambda.up_set(1), 0b001);
        assert_eq!(lambda.up_set(2), 0b001);
    }

    #[test]
    fn dual_preserves_height_width() {
        let b3 = Poset::boolean_lattice(3).unwrap();
        assert_eq!(b3.dual().height(), b3.height());
        assert_eq!(b3.dual().width(), b3.width());
    }

    #[test]
    fn boolean_lattice_shape() {
        let b3 = Poset::boolean_lattice(3).unwrap();
        assert_eq!(b3.len(), 8);
        assert_eq!(b3.height(), 4);
        assert_eq!(b3.width(), 3);
    }

    #[test]
    fn cover_pairs_are_reduction() {
        let c = Poset::chain(4).unwrap();
        assert_eq!(c.cover_pairs(), vec![(0, 1), (1, 2), (2, 3)]);
        let p = Poset::from_covers(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(p.cover_pairs(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn mirsky_levels_of_v() {
        let v = Poset::from_covers(3, &[(0, 1), (0, 2)]).unwrap();
        assert_eq!(v.mirsky_levels(), vec![1, 2, 2]);
    }

    #[test]
    fn restrict_reindexes() {
        let c = Poset::chain(4).unwrap();
        let r = c.restrict(0b1010);
        assert_eq!(r.len(), 2);
        assert!(r.lt(0, 1));
    }

    #[test]
    fn size_cap_enforced() {
        assert!(matches!(
            Poset::chain(65),
            Err(PosetError::TooManyElements(65))
        ));
        let c40 = Poset::chain(40).unwrap();
        assert!(matches!(
            c40.series(&c40),
            Err(PosetError::TooManyElements(80))
        ));
    }
}
