//! Label-invariant canonical forms.
//!
//! Two posets get equal forms exactly when they are order-isomorphic. The
//! form is the lexicographically minimal relation matrix over all
//! relabelings, with the permutation search restricted by an iterated
//! invariant refinement (Mirsky level, degrees, neighbor color multisets).
//! Enumeration stops at nine elements, so the residual permutation search
//! stays small.

use crate::bits;
use crate::poset::Poset;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

const FNV_OFFSET: u64 = 0xcbf29ce484222325;
const FNV_PRIME: u64 = 0x100000001b3;

fn mix(h: u64, v: u64) -> u64 {
    let mut h = h;
    for byte in v.to_le_bytes() {
        h ^= byte as u64;
        h = h.wrapping_mul(FNV_PRIME);
    }
    h
}

/// Stable vertex colors: start from order invariants, then refine each color
/// by the sorted colors of up-, down-, and incomparability-neighborhoods
/// until the partition stops splitting.
fn refine_colors(p: &Poset) -> Vec<u64> {
    let n = p.len();
    let levels = p.mirsky_levels();
    let dual_levels = p.dual().mirsky_levels();
    let mut colors: Vec<u64> = (0..n)
        .map(|i| {
            let mut h = FNV_OFFSET;
            h = mix(h, levels[i] as u64);
            h = mix(h, dual_levels[i] as u64);
            h = mix(h, p.up_set(i).count_ones() as u64);
            h = mix(h, p.down_set(i).count_ones() as u64);
            h
        })
        .collect();
    let mut classes = distinct(&colors);
    loop {
        let next: Vec<u64> = (0..n)
            .map(|i| {
                let mut h = mix(FNV_OFFSET, colors[i]);
                for set in [p.up_set(i), p.down_set(i), p.incomparables(i)] {
                    let mut neigh: Vec<u64> = bits::iter(set).map(|j| colors[j]).collect();
                    neigh.sort_unstable();
                    h = mix(h, 0x9e37);
                    for c in neigh {
                        h = mix(h, c);
                    }
                }
                h
            })
            .collect();
        let next_classes = distinct(&next);
        if next_classes <= classes {
            return colors;
        }
        classes = next_classes;
        colors = next;
    }
}

fn distinct(colors: &[u64]) -> usize {
    let mut sorted = colors.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len()
}

struct MatrixSearch<'a> {
    p: &'a Poset,
    class_of_pos: Vec<usize>,
    members: Vec<Vec<usize>>,
    placed: Vec<usize>,
    used: u64,
    best_stream: Option<Vec<u128>>,
    best_placement: Vec<usize>,
    stream: Vec<u128>,
}

impl<'a> MatrixSearch<'a> {
    /// Bits of the comparison stream contributed by placing position `pos`:
    /// relations between the new vertex and every earlier position.
    fn chunk(&self, pos: usize, v: usize) -> u128 {
        let mut c = 0u128;
        for (q, &u) in self.placed.iter().enumerate().take(pos) {
            if self.p.lt(u, v) {
                c |= 1u128 << (2 * q);
            }
            if self.p.lt(v, u) {
                c |= 1u128 << (2 * q + 1);
            }
        }
        c
    }

    fn search(&mut self, pos: usize) {
        let n = self.p.len();
        if pos == n {
            self.best_stream = Some(self.stream.clone());
            self.best_placement = self.placed.clone();
            return;
        }
        let class = self.class_of_pos[pos];
        for mi in 0..self.members[class].len() {
            let v = self.members[class][mi];
            if self.used >> v & 1 == 1 {
                continue;
            }
            let chunk = self.chunk(pos, v);
            let mut saved_best: Option<Option<Vec<u128>>> = None;
            if let Some(best) = &self.best_stream {
                match chunk.cmp(&best[pos]) {
                    std::cmp::Ordering::Greater => continue,
                    std::cmp::Ordering::Less => {
                        // Strictly better prefix: the subtree minimum must be
                        // located from scratch.
                        saved_best = Some(self.best_stream.take());
                    }
                    std::cmp::Ordering::Equal => {}
                }
            }
            self.placed.push(v);
            self.used |= 1u64 << v;
            self.stream.push(chunk);
            self.search(pos + 1);
            self.stream.pop();
            self.used &= !(1u64 << v);
            self.placed.pop();
            if let Some(old) = saved_best {
                // The subtree always completes at least one placement.
                debug_assert!(self.best_stream.is_some());
                let _ = old;
            }
        }
    }
}

/// The canonical relabeling of `p`: the permutation realizing the minimal
/// matrix, applied.
pub fn canonical_poset(p: &Poset) -> Poset {
    let n = p.len();
    if n == 0 {
        return p.clone();
    }
    let colors = refine_colors(p);
    // Group vertices by color; order classes by color value (label-invariant).
    let mut palette: Vec<u64> = colors.to_vec();
    palette.sort_unstable();
    palette.dedup();
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); palette.len()];
    for (i, c) in colors.iter().enumerate() {
        let k = palette.binary_search(c).unwrap();
        members[k].push(i);
    }
    let mut class_of_pos = Vec::with_capacity(n);
    for (k, m) in members.iter().enumerate() {
        class_of_pos.extend(std::iter::repeat(k).take(m.len()));
    }
    let mut search = MatrixSearch {
        p,
        class_of_pos,
        members,
        placed: Vec::with_capacity(n),
        used: 0,
        best_stream: None,
        best_placement: Vec::new(),
        stream: Vec::with_capacity(n),
    };
    search.search(0);
    // placement[pos] = original vertex at canonical position pos.
    let placement = search.best_placement;
    let mut perm = vec![0usize; n];
    for (pos, &v) in placement.iter().enumerate() {
        perm[v] = pos;
    }
    p.relabel(&perm)
}

pub fn canonical_form(p: &Poset) -> CanonicalForm {
    let canon = canonical_poset(p);
    let n = canon.len();
    let mut bytes = Vec::with_capacity(1 + (n * n + 7) / 8);
    bytes.push(n as u8);
    let mut acc = 0u8;
    let mut nbits = 0;
    for i in 0..n {
        for j in 0..n {
            acc = (acc << 1) | canon.lt(i, j) as u8;
            nbits += 1;
            if nbits == 8 {
                bytes.push(acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        bytes.push(acc << (8 - nbits));
    }
    CanonicalForm(bytes)
}

/// Reference oracle: isomorphism by backtracking over degree-compatible
/// vertex maps. Exponential; intended for cross-checks on small posets.
pub fn isomorphic_brute(p: &Poset, q: &Poset) -> bool {
    if p.len() != q.len() {
        return false;
    }
    let n = p.len();
    fn compatible(p: &Poset, q: &Poset, map: &[usize], i: usize, v: usize) -> bool {
        if p.up_set(i).count_ones() != q.up_set(v).count_ones()
            || p.down_set(i).count_ones() != q.down_set(v).count_ones()
        {
            return false;
        }
        for (j, &w) in map.iter().enumerate() {
            if p.lt(i, j) != q.lt(v, w) || p.lt(j, i) != q.lt(w, v) {
                return false;
            }
        }
        true
    }
    fn go(p: &Poset, q: &Poset, map: &mut Vec<usize>, used: u64) -> bool {
        let i = map.len();
        if i == p.len() {
            return true;
        }
        for v in 0..q.len() {
            if used >> v & 1 == 0 && compatible(p, q, map, i, v) {
                map.push(v);
                if go(p, q, map, used | (1u64 << v)) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    let mut map = Vec::with_capacity(n);
    go(p, q, &mut map, 0)
}
